import { describe, expect, test } from "vitest";

import { Store, filterSuggestions, isLetterEnabled, type ProblemJson } from "../src/state.js";
import { FakeApi, flushMicrotasks } from "./fake_api.js";

const PROBLEM: ProblemJson = {
  alphabet: ["a", "b"],
  variables: ["x", "y"],
  constraints: ['match(x, "(a|b)*")'],
};

async function started(api: FakeApi): Promise<Store> {
  const store = new Store(api, PROBLEM);
  await store.start();
  return store;
}

describe("suggestion filtering", () => {
  test("drops the empty word and end-of-string words", () => {
    expect(filterSuggestions(["", "2300", "2300$", "a$b"])).toEqual(["2300"]);
    expect(filterSuggestions(["ab", "ba"])).toEqual(["ab", "ba"]);
  });
});

describe("letter greying", () => {
  test("follows next_letters and completion", () => {
    const view = {
      value: "",
      completed: false,
      canComplete: false,
      domainRegex: "",
      nextLetters: ["a"],
      suggestions: [],
    };
    expect(isLetterEnabled(view, "a")).toBe(true);
    expect(isLetterEnabled(view, "b")).toBe(false);
    expect(isLetterEnabled({ ...view, completed: true }, "a")).toBe(false);
  });
});

describe("store", () => {
  test("start loads every variable's view", async () => {
    const api = new FakeApi(PROBLEM.variables);
    api.domains.x.next_letters = ["a", "b"];
    api.domains.x.regex = "(a|b)*";
    const store = await started(api);
    const state = store.getState();
    expect(state.phase).toBe("ready");
    expect(state.variables).toEqual(["x", "y"]);
    expect(state.views.x.nextLetters).toEqual(["a", "b"]);
    expect(state.views.x.domainRegex).toBe("(a|b)*");
    expect(state.views.y.value).toBe("");
  });

  test("typed letters echo optimistically and stay on success", async () => {
    const api = new FakeApi(PROBLEM.variables);
    api.manual = true;
    const store = await started(api);

    const done = store.typeLetter("x", "a");
    await flushMicrotasks();
    expect(store.getState().views.x.value).toBe("a");
    expect(store.getState().busy).toBe(true);

    api.gates[0].run();
    await done;
    expect(store.getState().views.x.value).toBe("a");
    expect(store.getState().busy).toBe(false);
    expect(store.getState().error).toBeNull();
  });

  test("a rejected append rolls the value back and surfaces the error", async () => {
    const api = new FakeApi(PROBLEM.variables);
    api.invalidTexts.add("b");
    const store = await started(api);

    await store.typeLetter("x", "b");
    expect(store.getState().views.x.value).toBe("");
    expect(store.getState().error).toBe("invalid append");

    await store.typeLetter("x", "a");
    expect(store.getState().views.x.value).toBe("a");
    expect(store.getState().error).toBeNull();
  });

  test("mutations run one at a time in call order", async () => {
    const api = new FakeApi(PROBLEM.variables);
    api.manual = true;
    const store = await started(api);

    const first = store.typeLetter("x", "a");
    const second = store.typeLetter("x", "b");
    await flushMicrotasks();
    expect(api.calls).toEqual(["append x a"]);

    api.gates[0].run();
    await first;
    await flushMicrotasks();
    expect(api.calls).toEqual(["append x a", "append x b"]);

    api.gates[1].run();
    await second;
    expect(store.getState().views.x.value).toBe("ab");
  });

  test("suggestions arrive filtered", async () => {
    const api = new FakeApi(PROBLEM.variables);
    api.domains.y.suggestions = ["", "2300", "2300$"];
    const store = await started(api);
    await store.typeLetter("x", "a");
    expect(store.getState().views.y.suggestions).toEqual(["2300"]);
  });

  test("complete marks the variable and undo reports its conflict", async () => {
    const api = new FakeApi(PROBLEM.variables);
    const store = await started(api);
    await store.complete("x");
    expect(store.getState().views.x.completed).toBe(true);

    api.rejectUndo = true;
    await store.undo();
    expect(store.getState().error).toBe("nothing to undo");
  });
});
