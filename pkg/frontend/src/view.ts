/**
 * Two-pane rendering: the analyzed document on the left, the brief's
 * six sections on the right, with span-accurate cross-linking.
 *
 * Every extract keeps a handle back to its source sentences, so a click
 * on either side scrolls the other into view and flashes it. The panes
 * hold no model state of their own; they are re-rendered from wire data.
 */

import { colorFor, opacityForConfidence } from './highlight.js';
import { panelModel } from './panel.js';
import type { AnnotationView, DocumentView, HighlightView } from './types.js';

export const FLASH_CLASS = 'flash';
export const FLASH_MS = 600;

export interface DocumentPane {
  container: HTMLElement;
  sentenceElements: Map<string, HTMLElement>;
}

export interface SectionPanel {
  container: HTMLElement;
  extractElements: Map<string, HTMLElement>;
}

function scrollAndFlash(target: HTMLElement): void {
  // jsdom has no scrollIntoView; browsers do
  target.scrollIntoView?.({ behavior: 'smooth', block: 'center' });
  target.classList.add(FLASH_CLASS);
  setTimeout(() => target.classList.remove(FLASH_CLASS), FLASH_MS);
}

export function renderDocumentPane(container: HTMLElement, doc: DocumentView): DocumentPane {
  container.replaceChildren();
  const sentenceElements = new Map<string, HTMLElement>();
  for (const sentence of doc.sentences) {
    const node = container.ownerDocument.createElement('span');
    node.className = 'sentence';
    node.dataset.sentId = sentence.sent_id;
    node.dataset.spanStart = String(sentence.char_span[0]);
    node.dataset.spanEnd = String(sentence.char_span[1]);
    node.textContent = sentence.text;
    container.appendChild(node);
    container.appendChild(container.ownerDocument.createTextNode(' '));
    sentenceElements.set(sentence.sent_id, node);
  }
  return { container, sentenceElements };
}

function hexToRgba(hex: string, alpha: number): string {
  const r = parseInt(hex.slice(1, 3), 16);
  const g = parseInt(hex.slice(3, 5), 16);
  const b = parseInt(hex.slice(5, 7), 16);
  return `rgba(${r}, ${g}, ${b}, ${alpha})`;
}

/**
 * Paint the expert-level highlight layer: each sentence tinted with its
 * predicted section color at an opacity proportional to confidence.
 */
export function applyHighlightLayer(pane: DocumentPane, highlights: HighlightView[]): void {
  for (const highlight of highlights) {
    const node = pane.sentenceElements.get(highlight.sent_id);
    if (!node) continue;
    const opacity = opacityForConfidence(highlight.confidence);
    node.style.backgroundColor = hexToRgba(colorFor(highlight.predicted_label), opacity);
    node.dataset.predictedLabel = highlight.predicted_label;
    node.dataset.confidence = String(highlight.confidence);
    node.dataset.opacity = String(opacity);
  }
}

export function clearHighlightLayer(pane: DocumentPane): void {
  for (const node of pane.sentenceElements.values()) {
    node.style.backgroundColor = '';
    delete node.dataset.predictedLabel;
    delete node.dataset.confidence;
    delete node.dataset.opacity;
  }
}

export function renderSectionPanel(
  container: HTMLElement,
  annotations: readonly AnnotationView[],
): SectionPanel {
  container.replaceChildren();
  const extractElements = new Map<string, HTMLElement>();
  for (const section of panelModel(annotations)) {
    const sectionNode = container.ownerDocument.createElement('section');
    sectionNode.className = 'brief-section';
    sectionNode.dataset.label = section.label;
    if (section.extracts.length === 0) sectionNode.dataset.empty = 'true';

    const heading = container.ownerDocument.createElement('h3');
    heading.textContent = section.label;
    heading.style.color = colorFor(section.label);
    sectionNode.appendChild(heading);

    for (const extract of section.extracts) {
      const node = container.ownerDocument.createElement('blockquote');
      node.className = 'extract';
      node.dataset.annotationId = extract.annotation_id;
      node.dataset.spanStart = String(extract.span[0]);
      node.dataset.spanEnd = String(extract.span[1]);
      node.textContent = extract.text;
      node.style.borderColor = colorFor(section.label);
      sectionNode.appendChild(node);
      extractElements.set(extract.annotation_id, node);
    }
    container.appendChild(sectionNode);
  }
  return { container, extractElements };
}

/**
 * Wire click-to-scroll both ways between extracts and their source
 * sentences. Returns the number of links made (useful as a sanity
 * check that ids matched up).
 */
export function linkPanes(
  pane: DocumentPane,
  panel: SectionPanel,
  annotations: readonly AnnotationView[],
): number {
  let links = 0;
  for (const annotation of annotations) {
    const extract = panel.extractElements.get(annotation.annotation_id);
    if (!extract) continue;
    const sources = annotation.sentence_ids
      .map((id) => pane.sentenceElements.get(id))
      .filter((el): el is HTMLElement => el !== undefined);
    if (sources.length === 0) continue;

    extract.addEventListener('click', () => {
      const first = sources[0];
      if (first) scrollAndFlash(first);
    });
    for (const source of sources) {
      source.addEventListener('click', () => scrollAndFlash(extract));
    }
    links += 1;
  }
  return links;
}
