/**
 * Browser entry: wires the API client, the two panes, the toast queue,
 * and the session poller into a working review screen.
 *
 * Level behavior:
 *   1  worked example shown inline, selection disabled
 *   2  expert elements listed for categorization, reveal on mismatch
 *   3  manual labeling; Warn decisions surface as keep/relabel toasts
 *   4  every selection gets a model suggestion to confirm or correct
 *   5  level 4 plus the confidence-tinted highlight layer
 */

import { ApiClient, ApiRequestError } from './api.js';
import { isSectionLabel } from './highlight.js';
import { DEFAULT_POLL_INTERVAL_MS, startSessionPolling, type Poller } from './poll.js';
import { ToastQueue, renderToasts } from './toasts.js';
import type {
  DocumentView,
  SectionLabel,
  SessionView,
} from './types.js';
import {
  applyHighlightLayer,
  clearHighlightLayer,
  linkPanes,
  renderDocumentPane,
  renderSectionPanel,
  type DocumentPane,
  type SectionPanel,
} from './view.js';

export interface AppElements {
  documentPane: HTMLElement;
  sectionPanel: HTMLElement;
  toastArea: HTMLElement;
  errorBanner: HTMLElement;
  labelPicker: HTMLSelectElement;
}

export class ReviewApp {
  private readonly toasts = new ToastQueue();
  private pane: DocumentPane | null = null;
  private panel: SectionPanel | null = null;
  private poller: Poller | null = null;
  private view: SessionView | null = null;
  private doc: DocumentView | null = null;
  private selectedSpan: [number, number] | null = null;

  constructor(
    private readonly client: ApiClient,
    private readonly els: AppElements,
    private readonly pollIntervalMs: number = DEFAULT_POLL_INTERVAL_MS,
  ) {}

  async open(sessionId: string): Promise<void> {
    const view = await this.client.getSession(sessionId);
    this.doc = await this.client.getDocument(view.doc_id);
    this.applyView(view);
    this.poller = startSessionPolling(
      this.client,
      sessionId,
      (fresh) => this.applyView(fresh),
      (error) => this.showError(error),
      this.pollIntervalMs,
    );
    if (view.level === 1) await this.showWorkedExample(sessionId);
  }

  close(): void {
    this.poller?.stop();
    this.poller = null;
  }

  private applyView(view: SessionView): void {
    this.view = view;
    if (!this.doc) return;
    this.pane = renderDocumentPane(this.els.documentPane, this.doc);
    this.panel = renderSectionPanel(this.els.sectionPanel, view.annotations);
    linkPanes(this.pane, this.panel, view.annotations);
    if (view.level >= 3) this.enableSelection();
    if (view.level === 5) {
      void this.refreshHighlights(view.session_id);
    } else if (this.pane) {
      clearHighlightLayer(this.pane);
    }
    renderToasts(this.els.toastArea, this.toasts, (toast) => {
      // relabel: reopen the picker on the warned span
      this.selectedSpan = toast.span;
      this.els.labelPicker.focus();
    });
  }

  private enableSelection(): void {
    if (!this.pane) return;
    for (const node of this.pane.sentenceElements.values()) {
      node.addEventListener('click', () => {
        const start = Number(node.dataset.spanStart);
        const end = Number(node.dataset.spanEnd);
        this.selectedSpan = [start, end];
      });
    }
  }

  /** Submit the picked label for the current selection (levels 3-5). */
  async submitSelection(label: string): Promise<void> {
    if (!this.view || !this.selectedSpan || !isSectionLabel(label)) return;
    const session = this.view;
    try {
      if (session.level >= 4) {
        const suggested = await this.client.suggestCategory(
          session.session_id,
          this.selectedSpan,
        );
        if (suggested.predicted_label === label) {
          await this.client.resolveSuggestion(
            session.session_id,
            suggested.annotation.annotation_id,
            'confirm',
          );
        } else {
          await this.client.resolveSuggestion(
            session.session_id,
            suggested.annotation.annotation_id,
            'correct',
            label as SectionLabel,
          );
        }
      } else {
        const result = await this.client.submitAnnotation(
          session.session_id,
          this.selectedSpan,
          label as SectionLabel,
        );
        this.toasts.push(result.annotation, result.warning);
      }
      this.selectedSpan = null;
      await this.poller?.tick();
    } catch (error) {
      this.showError(error);
    }
  }

  private async refreshHighlights(sessionId: string): Promise<void> {
    if (!this.pane) return;
    try {
      const { highlights } = await this.client.getHighlights(sessionId);
      applyHighlightLayer(this.pane, highlights);
    } catch (error) {
      this.showError(error);
    }
  }

  private async showWorkedExample(sessionId: string): Promise<void> {
    if (!this.pane) return;
    try {
      const example = await this.client.getWorkedExample(sessionId);
      for (const item of example.items) {
        for (const node of this.pane.sentenceElements.values()) {
          const start = Number(node.dataset.spanStart);
          const end = Number(node.dataset.spanEnd);
          if (start >= item.span[0] && end <= item.span[1]) {
            node.dataset.expertLabel = item.label;
            node.title = `${item.label}: ${item.explanation}`;
          }
        }
      }
    } catch (error) {
      if (error instanceof ApiRequestError && error.code === 'NotFound') return;
      this.showError(error);
    }
  }

  private showError(error: unknown): void {
    const message =
      error instanceof ApiRequestError
        ? `${error.code}: ${error.message}`
        : String(error);
    this.els.errorBanner.textContent = message;
    this.els.errorBanner.dataset.visible = 'true';
  }
}

/** Hook for the plain HTML page: reads ids, builds the app. */
export function mount(baseUrl: string, sessionId: string): ReviewApp | null {
  const get = (id: string): HTMLElement | null => document.getElementById(id);
  const documentPane = get('document-pane');
  const sectionPanel = get('section-panel');
  const toastArea = get('toast-area');
  const errorBanner = get('error-banner');
  const labelPicker = get('label-picker') as HTMLSelectElement | null;
  if (!documentPane || !sectionPanel || !toastArea || !errorBanner || !labelPicker) {
    return null;
  }
  const app = new ReviewApp(new ApiClient(baseUrl), {
    documentPane,
    sectionPanel,
    toastArea,
    errorBanner,
    labelPicker,
  });
  void app.open(sessionId);
  return app;
}
