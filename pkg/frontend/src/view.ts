/** DOM-free rendering of the app state to HTML, plus a thin event layer. */

import { isLetterEnabled, type AppState, type Store, type VariableView } from "./state.js";

export function escapeHtml(text: string): string {
  return text
    .replaceAll("&", "&amp;")
    .replaceAll("<", "&lt;")
    .replaceAll(">", "&gt;")
    .replaceAll('"', "&quot;");
}

function renderLetterButtons(name: string, view: VariableView, letters: string[]): string {
  return letters
    .map((letter) => {
      const enabled = isLetterEnabled(view, letter);
      const label = letter === " " ? "␣" : escapeHtml(letter);
      return `<button class="letter${enabled ? "" : " grey"}" ` +
        `data-action="letter" data-variable="${escapeHtml(name)}" ` +
        `data-letter="${escapeHtml(letter)}"${enabled ? "" : " disabled"}>${label}</button>`;
    })
    .join("");
}

function renderSuggestions(name: string, view: VariableView): string {
  if (view.suggestions.length === 0) {
    return "";
  }
  const items = view.suggestions
    .map(
      (word) =>
        `<li><button data-action="suggest" data-variable="${escapeHtml(name)}" ` +
        `data-word="${escapeHtml(word)}">${escapeHtml(word)}</button></li>`,
    )
    .join("");
  return `<ul class="suggestions">${items}</ul>`;
}

function renderVariable(name: string, view: VariableView, state: AppState): string {
  const status = view.completed
    ? '<span class="completed">completed</span>'
    : view.canComplete
      ? `<button data-action="complete" data-variable="${escapeHtml(name)}">complete</button>`
      : "";
  return `
<section class="variable" data-variable="${escapeHtml(name)}">
  <h2>${escapeHtml(name)}</h2>
  <div class="value"><output>${escapeHtml(view.value)}</output>${status}</div>
  <div class="letters">${renderLetterButtons(name, view, state.letters)}</div>
  ${renderSuggestions(name, view)}
  <details><summary>domain</summary><code>${escapeHtml(view.domainRegex)}</code></details>
</section>`;
}

export function renderApp(state: AppState): string {
  if (state.phase === "setup") {
    return '<p class="hint">Paste a problem and press start.</p>';
  }
  const sections = state.variables
    .map((name) => renderVariable(name, state.views[name], state))
    .join("\n");
  const error = state.error ? `<p class="error">${escapeHtml(state.error)}</p>` : "";
  const busy = state.busy ? " busy" : "";
  return `
<div class="toolbar${busy}">
  <button data-action="undo">undo</button>
  <span class="stats">${escapeHtml(state.stats)}</span>
</div>
${error}
${sections}`;
}

/** Re-renders into `root` on every store change and dispatches clicks on
 * data-action buttons back into the store. */
export function mount(root: HTMLElement, store: Store): void {
  root.innerHTML = renderApp(store.getState());
  store.subscribe((state) => {
    root.innerHTML = renderApp(state);
  });
  root.addEventListener("click", (event) => {
    const target = (event.target as HTMLElement).closest("[data-action]");
    if (!(target instanceof HTMLElement)) {
      return;
    }
    const variable = target.dataset.variable ?? "";
    switch (target.dataset.action) {
      case "letter":
        void store.typeLetter(variable, target.dataset.letter ?? "");
        break;
      case "suggest":
        void store.append(variable, target.dataset.word ?? "");
        break;
      case "complete":
        void store.complete(variable);
        break;
      case "undo":
        void store.undo();
        break;
    }
  });
}
