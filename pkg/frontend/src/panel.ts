/**
 * Section panel model: the right pane of the two-pane layout.
 *
 * The panel always shows all six sections in canonical order, empty ones
 * included, so the shape of a case brief is visible before any extract
 * lands in it. Suggested annotations stay out until they are confirmed
 * or corrected.
 */

import { SECTION_LABELS, type AnnotationView, type SectionLabel } from './types.js';

export interface PanelSection {
  label: SectionLabel;
  extracts: AnnotationView[];
}

export function panelModel(annotations: readonly AnnotationView[]): PanelSection[] {
  const bySection = new Map<SectionLabel, AnnotationView[]>(
    SECTION_LABELS.map((label) => [label, []]),
  );
  for (const annotation of annotations) {
    if (annotation.status === 'suggested') continue;
    bySection.get(annotation.label)?.push(annotation);
  }
  return SECTION_LABELS.map((label) => ({
    label,
    extracts: (bySection.get(label) ?? []).slice().sort((a, b) => a.span[0] - b.span[0]),
  }));
}
