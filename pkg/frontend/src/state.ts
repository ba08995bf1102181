/** Client-side session store: optimistic mutations over the service API. */

import { ApiError, type DomainInfo, type SessionState } from "./api.js";

export const EOL = "$";

/** Words shown in a suggestion dropdown: drop the empty word and words
 * carrying the end-of-string letter (the plain prefix is always offered
 * too, and completion has its own control). */
export function filterSuggestions(words: string[]): string[] {
  return words.filter((word) => word !== "" && !word.includes(EOL));
}

export interface ProblemJson {
  alphabet: string[];
  eol?: boolean;
  variables: string[];
  constraints: string[];
}

export interface VariableView {
  value: string;
  completed: boolean;
  canComplete: boolean;
  domainRegex: string;
  nextLetters: string[];
  suggestions: string[];
}

export interface AppState {
  phase: "setup" | "ready";
  busy: boolean;
  error: string | null;
  stats: string;
  variables: string[];
  letters: string[];
  eolEnabled: boolean;
  views: Record<string, VariableView>;
}

export function isLetterEnabled(view: VariableView, letter: string): boolean {
  return !view.completed && view.nextLetters.includes(letter);
}

/** The slice of the Api class the store needs; tests substitute a fake. */
export interface SessionApi {
  createProblem(problem: unknown): Promise<{ problem_id: string; stats: { vars: number; atoms: number; mdfa_states: number[] } }>;
  openSession(problemId: string): Promise<{ session_id: string; state: SessionState }>;
  append(sessionId: string, variable: string, text: string): Promise<SessionState>;
  complete(sessionId: string, variable: string): Promise<SessionState>;
  undo(sessionId: string): Promise<SessionState>;
  domain(sessionId: string, variable: string, suggest?: number, maxLen?: number): Promise<DomainInfo>;
}

const SUGGEST_COUNT = 6;
const SUGGEST_MAX_LEN = 16;

export class Store {
  private state: AppState;
  private sessionId = "";
  private chain: Promise<void> = Promise.resolve();
  private pending = 0;
  private readonly listeners = new Set<(state: AppState) => void>();

  constructor(
    private readonly api: SessionApi,
    private readonly problem: ProblemJson,
  ) {
    this.state = {
      phase: "setup",
      busy: false,
      error: null,
      stats: "",
      variables: [...problem.variables],
      letters: [...problem.alphabet],
      eolEnabled: problem.eol === true,
      views: {},
    };
  }

  getState(): AppState {
    return this.state;
  }

  get session(): string {
    return this.sessionId;
  }

  subscribe(listener: (state: AppState) => void): () => void {
    this.listeners.add(listener);
    return () => this.listeners.delete(listener);
  }

  private notify(update: Partial<AppState>): void {
    this.state = { ...this.state, ...update, busy: this.pending > 0 };
    for (const listener of this.listeners) {
      listener(this.state);
    }
  }

  async start(): Promise<void> {
    const created = await this.api.createProblem(this.problem);
    const opened = await this.api.openSession(created.problem_id);
    this.sessionId = opened.session_id;
    const stats = `${created.stats.vars} variables, ${created.stats.atoms} atoms, ` +
      `automata of ${created.stats.mdfa_states.join("/")} states`;
    this.notify({ phase: "ready", stats, views: this.viewsFrom(opened.state) });
    await this.refreshDomains();
  }

  private viewsFrom(state: SessionState): Record<string, VariableView> {
    const views: Record<string, VariableView> = {};
    for (const name of this.state.variables) {
      const old = this.state.views[name];
      const incoming = state[name];
      views[name] = {
        value: incoming.value,
        completed: incoming.completed,
        canComplete: incoming.can_complete,
        domainRegex: incoming.domain_regex,
        nextLetters: old?.nextLetters ?? [],
        suggestions: old?.suggestions ?? [],
      };
    }
    return views;
  }

  private async refreshDomains(): Promise<void> {
    const views = { ...this.state.views };
    for (const name of this.state.variables) {
      const info = await this.api.domain(this.sessionId, name, SUGGEST_COUNT, SUGGEST_MAX_LEN);
      views[name] = {
        ...views[name],
        domainRegex: info.regex,
        canComplete: info.can_complete,
        nextLetters: info.next_letters,
        suggestions: filterSuggestions(info.suggestions),
      };
    }
    this.notify({ views });
  }

  /** Mutations run strictly one at a time, in call order. */
  private enqueue(task: () => Promise<void>): Promise<void> {
    this.pending += 1;
    const turn = this.chain.then(async () => {
      try {
        await task();
      } finally {
        this.pending -= 1;
        this.notify({});
      }
    });
    this.chain = turn;
    return turn;
  }

  private patchView(name: string, patch: Partial<VariableView>): void {
    this.notify({
      views: { ...this.state.views, [name]: { ...this.state.views[name], ...patch } },
    });
  }

  append(variable: string, text: string): Promise<void> {
    return this.enqueue(async () => {
      const before = this.state.views[variable].value;
      this.patchView(variable, { value: before + text });
      try {
        const state = await this.api.append(this.sessionId, variable, text);
        this.notify({ error: null, views: this.viewsFrom(state) });
        await this.refreshDomains();
      } catch (error) {
        this.patchView(variable, { value: before });
        this.fail(error);
      }
    });
  }

  typeLetter(variable: string, letter: string): Promise<void> {
    return this.append(variable, letter);
  }

  complete(variable: string): Promise<void> {
    return this.enqueue(async () => {
      try {
        const state = await this.api.complete(this.sessionId, variable);
        this.notify({ error: null, views: this.viewsFrom(state) });
        await this.refreshDomains();
      } catch (error) {
        this.fail(error);
      }
    });
  }

  undo(): Promise<void> {
    return this.enqueue(async () => {
      try {
        const state = await this.api.undo(this.sessionId);
        this.notify({ error: null, views: this.viewsFrom(state) });
        await this.refreshDomains();
      } catch (error) {
        this.fail(error);
      }
    });
  }

  private fail(error: unknown): void {
    if (error instanceof ApiError) {
      this.notify({ error: error.message });
    } else {
      this.notify({ error: String(error) });
    }
  }
}
