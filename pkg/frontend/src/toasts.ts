/**
 * Warning toasts: non-modal, advisory-only feedback for level 3.
 *
 * A toast appears when the service answers an annotation with a Warn
 * decision. It never blocks further work and never dismisses itself;
 * it leaves only when the user picks "keep" (label stays as submitted)
 * or "relabel" (caller re-opens the label picker for that span).
 */

import type { AnnotationView, WarningView } from './types.js';

export interface WarningToast {
  id: string;
  annotationId: string;
  span: [number, number];
  label: string;
  probability: number;
  tau: number;
}

export type RelabelHandler = (toast: WarningToast) => void;

export class ToastQueue {
  private toasts: WarningToast[] = [];
  private counter = 0;

  /** Queue a toast for a Warn decision; Abstain and null produce nothing. */
  push(annotation: AnnotationView, warning: WarningView | null): WarningToast | null {
    if (!warning || warning.decision !== 'Warn') return null;
    const toast: WarningToast = {
      id: `toast-${++this.counter}`,
      annotationId: annotation.annotation_id,
      span: annotation.span,
      label: warning.assigned_label,
      probability: warning.prob_assigned,
      tau: warning.tau,
    };
    this.toasts.push(toast);
    return toast;
  }

  active(): readonly WarningToast[] {
    return this.toasts;
  }

  /** "keep": the warning is advisory, the label stands; just dismiss. */
  keep(id: string): void {
    this.dismiss(id);
  }

  /** "relabel": dismiss and hand the span back to the caller. */
  relabel(id: string, onRelabel: RelabelHandler): void {
    const toast = this.toasts.find((t) => t.id === id);
    this.dismiss(id);
    if (toast) onRelabel(toast);
  }

  private dismiss(id: string): void {
    this.toasts = this.toasts.filter((t) => t.id !== id);
  }
}

/** Render the queue into a container; idempotent, replaces children. */
export function renderToasts(
  container: HTMLElement,
  queue: ToastQueue,
  onRelabel: RelabelHandler,
): void {
  container.replaceChildren();
  for (const toast of queue.active()) {
    const node = container.ownerDocument.createElement('div');
    node.className = 'warning-toast';
    node.dataset.toastId = toast.id;
    node.dataset.annotationId = toast.annotationId;

    const text = container.ownerDocument.createElement('span');
    text.className = 'warning-toast-text';
    text.textContent =
      `"${toast.label}" looks unlikely here ` +
      `(p = ${toast.probability.toFixed(2)}, threshold ${toast.tau})`;
    node.appendChild(text);

    const keep = container.ownerDocument.createElement('button');
    keep.className = 'warning-toast-keep';
    keep.textContent = 'keep';
    keep.addEventListener('click', () => {
      queue.keep(toast.id);
      renderToasts(container, queue, onRelabel);
    });
    node.appendChild(keep);

    const relabel = container.ownerDocument.createElement('button');
    relabel.className = 'warning-toast-relabel';
    relabel.textContent = 'relabel';
    relabel.addEventListener('click', () => {
      queue.relabel(toast.id, onRelabel);
      renderToasts(container, queue, onRelabel);
    });
    node.appendChild(relabel);

    container.appendChild(node);
  }
}
