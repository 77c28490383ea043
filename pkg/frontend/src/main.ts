// DOM wiring for the annotator app. Server and annotator id come from the
// query string: index.html?server=http://127.0.0.1:8321&annotator=a1

import { ReviewApi } from "./api.js";
import { SessionController } from "./controller.js";
import { renderEvidenceList, renderHighlights } from "./highlight.js";
import { actionForKey, KEY_HELP } from "./keyboard.js";
import { renderTree } from "./tree.js";
import { LABEL_NAMES } from "./types.js";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function show(id: string, visible: boolean): void {
  el(id).classList.toggle("hidden", !visible);
}

export function start(): void {
  const params = new URLSearchParams(window.location.search);
  const server = params.get("server") ?? "http://127.0.0.1:8321";
  const annotator = params.get("annotator") ?? "";
  if (!annotator) {
    el("screen-register").classList.remove("hidden");
    el<HTMLElement>("register-message").textContent =
      "Add ?annotator=YOUR_ID to the URL to start reviewing.";
    return;
  }

  const api = new ReviewApi(server);
  const controller = new SessionController(api, annotator, render);

  function render(): void {
    const { screen, banner, validationError } = controller;
    show("screen-item", screen.kind === "item");
    show("screen-done", screen.kind === "done");
    show("screen-register", screen.kind === "register");
    show("screen-fatal", screen.kind === "fatal");
    show("banner", banner !== null);
    if (banner) el("banner-message").textContent = banner.message;

    el("validation").textContent = validationError ?? "";

    if (screen.kind === "item") {
      const { item, progress } = screen;
      el("variant").textContent = `${item.variant} of ${item.triple_id}`;
      el("proposed").textContent =
        `${item.proposed_label} (${LABEL_NAMES[item.proposed_label] ?? "?"})`;
      el("decision-count").textContent =
        `${item.decision_count}/3 decisions${item.revised ? " (revised)" : ""}`;
      el("progress").textContent =
        `${progress.finalized}/${progress.total} finalized, ` +
        `${progress.escalated} escalated`;
      renderHighlights(el("sentence"), item.text, item.evidence);
      renderEvidenceList(el<HTMLElement>("evidence"), item.evidence);
      renderTree(el("tree-panel"), item.evidence);
      el<HTMLTextAreaElement>("revise-text").value = item.text;
    }
    if (screen.kind === "done") {
      el("done-progress").textContent =
        `${screen.progress.finalized} finalized, ` +
        `${screen.progress.escalated} escalated.`;
      el<HTMLAnchorElement>("agreement-link").href = api.agreementUrl();
    }
    if (screen.kind === "register") {
      el("register-message").textContent =
        `Annotator id "${screen.annotator}" is not registered on this ` +
        "server. Ask the operator to add it (serve --annotators ...).";
    }
    if (screen.kind === "fatal") {
      el("fatal-message").textContent = screen.message;
    }
  }

  el("btn-accept").onclick = () => void controller.submit({ verdict: "accept" });
  el("btn-informal").onclick = () =>
    void controller.submit({ verdict: "relabel", to_level: 0 });
  el("btn-casual").onclick = () =>
    void controller.submit({ verdict: "relabel", to_level: 1 });
  el("btn-formal").onclick = () =>
    void controller.submit({ verdict: "relabel", to_level: 2 });
  el("btn-revise").onclick = () =>
    void controller.submit({
      verdict: "revise",
      edited_text: el<HTMLTextAreaElement>("revise-text").value,
    });
  el("btn-retry").onclick = () => void controller.loadNext();

  const help = el("key-help");
  help.textContent = KEY_HELP.map(([key, what]) => `${key} = ${what}`).join("   ");

  document.addEventListener("keydown", (event) => {
    const typing = event.target instanceof HTMLTextAreaElement
      || event.target instanceof HTMLInputElement;
    const action = actionForKey(event.key, typing);
    if (action.kind === "verdict") {
      event.preventDefault();
      void controller.submit(action.verdict);
    } else if (action.kind === "focus-revise") {
      event.preventDefault();
      el<HTMLTextAreaElement>("revise-text").focus();
    }
  });

  void controller.loadNext();
}

start();
