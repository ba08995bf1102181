import { describe, expect, test } from "vitest";

import type { AppState, VariableView } from "../src/state.js";
import { escapeHtml, renderApp } from "../src/view.js";

function view(overrides: Partial<VariableView> = {}): VariableView {
  return {
    value: "",
    completed: false,
    canComplete: false,
    domainRegex: "()",
    nextLetters: [],
    suggestions: [],
    ...overrides,
  };
}

function appState(overrides: Partial<AppState> = {}): AppState {
  return {
    phase: "ready",
    busy: false,
    error: null,
    stats: "",
    variables: ["x"],
    letters: ["a", "b"],
    eolEnabled: false,
    views: { x: view() },
    ...overrides,
  };
}

describe("renderApp", () => {
  test("setup phase shows the hint only", () => {
    const html = renderApp(appState({ phase: "setup" }));
    expect(html).toContain("press start");
    expect(html).not.toContain("data-action");
  });

  test("viable letters are clickable, others greyed and disabled", () => {
    const html = renderApp(appState({ views: { x: view({ nextLetters: ["a"] }) } }));
    expect(html).toContain('data-letter="a">a</button>');
    expect(html).toMatch(/class="letter grey"[^>]*data-letter="b"[^>]*disabled/);
  });

  test("value, regex, and suggestions are rendered", () => {
    const html = renderApp(
      appState({
        views: {
          x: view({ value: "23", domainRegex: "2300(()|$)", suggestions: ["2300"] }),
        },
      }),
    );
    expect(html).toContain("<output>23</output>");
    expect(html).toContain("<code>2300(()|$)</code>");
    expect(html).toContain('data-action="suggest" data-variable="x" data-word="2300"');
  });

  test("completion states", () => {
    const completable = renderApp(appState({ views: { x: view({ canComplete: true }) } }));
    expect(completable).toContain('data-action="complete"');
    const completed = renderApp(appState({ views: { x: view({ completed: true }) } }));
    expect(completed).toContain('class="completed"');
    expect(completed).not.toContain('data-action="complete"');
  });

  test("errors are shown escaped", () => {
    const html = renderApp(appState({ error: "<oops>" }));
    expect(html).toContain('<p class="error">&lt;oops&gt;</p>');
  });

  test("escapeHtml covers the metacharacters", () => {
    expect(escapeHtml('<a href="x">&')).toBe("&lt;a href=&quot;x&quot;&gt;&amp;");
  });
});
