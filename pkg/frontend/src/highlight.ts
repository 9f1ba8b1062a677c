/**
 * Section colors and confidence-to-opacity mapping for the highlight layer.
 *
 * Colors are the Okabe-Ito palette (colorblind-safe) and stay constant
 * between the document pane and the section panel.
 */

import { SECTION_LABELS, type SectionLabel } from './types.js';

export const SECTION_COLORS: Record<SectionLabel, string> = {
  Facts: '#0072b2',
  Issue: '#d55e00',
  Holding: '#009e73',
  'Procedural History': '#cc79a7',
  Reasoning: '#e69f00',
  Rule: '#56b4e9',
};

// A six-way softmax can never be more unsure than uniform, so chance
// probability is the natural floor of the scale.
export const CHANCE_CONFIDENCE = 1 / 6;

// Tint at chance confidence; still perceptible against white.
export const MIN_VISIBLE_OPACITY = 0.15;

/**
 * Linear map from max-probability confidence to tint opacity:
 * chance (1/6) renders at MIN_VISIBLE_OPACITY, certainty (1.0) fully
 * opaque, everything between on the straight line. Inputs outside the
 * meaningful range are clamped.
 */
export function opacityForConfidence(confidence: number): number {
  const clamped = Math.min(1, Math.max(CHANCE_CONFIDENCE, confidence));
  const span = 1 - CHANCE_CONFIDENCE;
  return MIN_VISIBLE_OPACITY + ((clamped - CHANCE_CONFIDENCE) / span) * (1 - MIN_VISIBLE_OPACITY);
}

export function colorFor(label: SectionLabel): string {
  return SECTION_COLORS[label];
}

export function isSectionLabel(value: string): value is SectionLabel {
  return (SECTION_LABELS as readonly string[]).includes(value);
}
