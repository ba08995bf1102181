/** Page bootstrap: problem setup form, then the live configurator. */

import { Api } from "./api.js";
import { INTRO_PROBLEM } from "./intro_problem.js";
import { Store, type ProblemJson } from "./state.js";
import { mount } from "./view.js";

function element<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (node === null) {
    throw new Error(`missing #${id}`);
  }
  return node as T;
}

function init(): void {
  const setup = element<HTMLFormElement>("setup");
  const problemInput = element<HTMLTextAreaElement>("problem");
  const setupError = element<HTMLParagraphElement>("setup-error");
  const app = element<HTMLDivElement>("app");

  problemInput.value = JSON.stringify(INTRO_PROBLEM, null, 1);

  setup.addEventListener("submit", (event) => {
    event.preventDefault();
    let problem: ProblemJson;
    try {
      problem = JSON.parse(problemInput.value) as ProblemJson;
    } catch (error) {
      setupError.textContent = `not valid JSON: ${String(error)}`;
      return;
    }
    const store = new Store(new Api(""), problem);
    store
      .start()
      .then(() => {
        setup.hidden = true;
        setupError.textContent = "";
        mount(app, store);
      })
      .catch((error) => {
        setupError.textContent = String(error);
      });
  });
}

init();
