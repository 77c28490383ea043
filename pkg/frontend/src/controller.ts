// Session state machine, kept DOM-free so the flow is unit-testable.
//
// Screens: loading -> item -> (submit) -> item ... -> done
// Failure paths: 404 annotator -> register prompt; network failure -> retry
// banner that keeps the current state; 409 duplicate -> refresh the item;
// 422 -> inline validation message. A revise with empty text never reaches
// the wire.

import { ApiError, NetworkError, ReviewApi } from "./api.js";
import type { Progress, ReviewItemPayload, Verdict } from "./types.js";

export type Screen =
  | { kind: "loading" }
  | { kind: "item"; item: ReviewItemPayload; progress: Progress }
  | { kind: "done"; progress: Progress }
  | { kind: "register"; annotator: string }
  | { kind: "fatal"; message: string };

export interface Banner {
  message: string;
  retryable: boolean;
}

export class SessionController {
  screen: Screen = { kind: "loading" };
  banner: Banner | null = null;
  validationError: string | null = null;

  constructor(
    private readonly api: ReviewApi,
    readonly annotator: string,
    private readonly onChange: () => void = () => {},
  ) {}

  private setScreen(screen: Screen): void {
    this.screen = screen;
    this.onChange();
  }

  private setBanner(banner: Banner | null): void {
    this.banner = banner;
    this.onChange();
  }

  currentItem(): ReviewItemPayload | null {
    return this.screen.kind === "item" ? this.screen.item : null;
  }

  async loadNext(): Promise<void> {
    this.validationError = null;
    try {
      const response = await this.api.fetchNext(this.annotator);
      this.setBanner(null);
      if (response.item === null) {
        this.setScreen({ kind: "done", progress: response.progress });
      } else {
        this.setScreen({
          kind: "item",
          item: response.item,
          progress: response.progress,
        });
      }
    } catch (error) {
      this.handleError(error, "loading the next item");
    }
  }

  async submit(verdict: Verdict): Promise<void> {
    const item = this.currentItem();
    if (item === null) return;
    this.validationError = null;
    if (verdict.verdict === "revise" && verdict.edited_text.trim() === "") {
      this.validationError = "revised text must not be empty";
      this.onChange();
      return; // blocked client-side, no request sent
    }
    try {
      await this.api.submitDecision(item.id, this.annotator, verdict);
      this.setBanner(null);
      await this.loadNext(); // optimistic advance
    } catch (error) {
      if (error instanceof ApiError && error.status === 409) {
        // someone (or this tab) already decided: refresh, then move on
        await this.refreshCurrent();
        await this.loadNext();
        return;
      }
      if (error instanceof ApiError && error.status === 422) {
        this.validationError = error.detail;
        this.onChange();
        return;
      }
      this.handleError(error, "submitting the decision");
    }
  }

  async refreshCurrent(): Promise<void> {
    const item = this.currentItem();
    if (item === null || this.screen.kind !== "item") return;
    try {
      const fresh = await this.api.getItem(item.id);
      this.setScreen({ kind: "item", item: fresh, progress: this.screen.progress });
    } catch {
      // the refreshed state is advisory; the follow-up loadNext decides
    }
  }

  private handleError(error: unknown, doing: string): void {
    if (error instanceof ApiError && error.status === 404) {
      // unknown annotator: ask the operator to register this id
      this.setScreen({ kind: "register", annotator: this.annotator });
      return;
    }
    if (error instanceof NetworkError) {
      // keep whatever is on screen; just offer a retry
      this.setBanner({ message: `Network failure while ${doing}.`, retryable: true });
      return;
    }
    this.setScreen({ kind: "fatal", message: String(error) });
  }
}
