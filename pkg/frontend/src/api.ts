/** Typed client for the configuration service's JSON API. */

export interface VariableState {
  value: string;
  completed: boolean;
  can_complete: boolean;
  domain_regex: string;
}

export type SessionState = Record<string, VariableState>;

export interface ProblemStats {
  vars: number;
  atoms: number;
  mdfa_states: number[];
}

export interface DomainInfo {
  regex: string;
  can_complete: boolean;
  next_letters: string[];
  suggestions: string[];
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly body: unknown,
  ) {
    super(typeof body === "object" && body !== null && "error" in body
      ? String((body as { error: unknown }).error)
      : `request failed with status ${status}`);
    this.name = "ApiError";
  }
}

async function decode(response: Response): Promise<unknown> {
  const text = await response.text();
  try {
    return text ? JSON.parse(text) : null;
  } catch {
    return text;
  }
}

export class Api {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchImpl: typeof fetch = fetch,
  ) {}

  private async request(path: string, init?: RequestInit): Promise<unknown> {
    const response = await this.fetchImpl(`${this.baseUrl}${path}`, init);
    const body = await decode(response);
    if (!response.ok) {
      throw new ApiError(response.status, body);
    }
    return body;
  }

  private post(path: string, payload?: unknown): Promise<unknown> {
    return this.request(path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: payload === undefined ? "{}" : JSON.stringify(payload),
    });
  }

  async createProblem(problem: unknown): Promise<{ problem_id: string; stats: ProblemStats }> {
    return (await this.post("/v1/problems", problem)) as {
      problem_id: string;
      stats: ProblemStats;
    };
  }

  async openSession(problemId: string): Promise<{ session_id: string; state: SessionState }> {
    return (await this.post("/v1/sessions", { problem_id: problemId })) as {
      session_id: string;
      state: SessionState;
    };
  }

  async append(sessionId: string, variable: string, text: string): Promise<SessionState> {
    const body = await this.post(`/v1/sessions/${sessionId}/append`, { variable, text });
    return (body as { state: SessionState }).state;
  }

  async complete(sessionId: string, variable: string): Promise<SessionState> {
    const body = await this.post(`/v1/sessions/${sessionId}/complete`, { variable });
    return (body as { state: SessionState }).state;
  }

  async undo(sessionId: string): Promise<SessionState> {
    const body = await this.post(`/v1/sessions/${sessionId}/undo`);
    return (body as { state: SessionState }).state;
  }

  async domain(
    sessionId: string,
    variable: string,
    suggest?: number,
    maxLen?: number,
  ): Promise<DomainInfo> {
    const params = new URLSearchParams();
    if (suggest !== undefined) params.set("suggest", String(suggest));
    if (maxLen !== undefined) params.set("max_len", String(maxLen));
    const query = params.size > 0 ? `?${params}` : "";
    return (await this.request(
      `/v1/sessions/${sessionId}/domain/${encodeURIComponent(variable)}${query}`,
    )) as DomainInfo;
  }
}
