/**
 * Wire types mirrored from the annotation service.
 *
 * The UI never computes labels or probabilities itself; everything in
 * here arrives over HTTP, and the shapes below are the contract.
 */

export const SECTION_LABELS = [
  'Facts',
  'Issue',
  'Holding',
  'Procedural History',
  'Reasoning',
  'Rule',
] as const;

export type SectionLabel = (typeof SECTION_LABELS)[number];

export type AnnotationStatus = 'user' | 'suggested' | 'confirmed';

export interface SentenceView {
  sent_id: string;
  label: string | null;
  text: string;
  char_span: [number, number];
}

export interface SectionView {
  heading_raw: string;
  label: string | null;
  text: string;
  char_span: [number, number];
}

export interface DocumentView {
  doc_id: string;
  title: string;
  body: string;
  sections: SectionView[];
  sentences: SentenceView[];
}

export interface AnnotationView {
  annotation_id: string;
  span: [number, number];
  sentence_ids: string[];
  text: string;
  label: SectionLabel;
  status: AnnotationStatus;
}

export interface WarningView {
  decision: 'Warn' | 'Abstain';
  assigned_label: SectionLabel;
  prob_assigned: number;
  tau: number;
}

export interface FeedbackEventView {
  kind: 'ExpertReveal' | 'Warning' | 'SuggestionShown' | 'Correction';
  payload: Record<string, unknown>;
  created_at: string;
}

export interface CategorizationElement {
  element_id: number;
  span: [number, number];
  text: string;
}

export interface SessionView {
  session_id: string;
  user_id: string;
  level: number;
  doc_id: string;
  annotations: AnnotationView[];
  feedback_log: FeedbackEventView[];
  tau: number;
  available_operations: string[];
  elements: CategorizationElement[];
  brief_draft: Record<string, string[]>;
}

export interface AnnotationResult {
  annotation: AnnotationView;
  warning: WarningView | null;
}

export interface SuggestionResult {
  annotation: AnnotationView;
  predicted_label: SectionLabel;
  probs: Record<string, number>;
}

export interface HighlightView {
  sent_id: string;
  span: [number, number];
  predicted_label: SectionLabel;
  confidence: number;
}

export interface WorkedItemView {
  span: [number, number];
  label: SectionLabel;
  explanation: string;
}

export interface WorkedExampleView {
  doc_id: string;
  items: WorkedItemView[];
}

export interface BriefSectionView {
  label: SectionLabel;
  spans: AnnotationView[];
}

export interface BriefExportView {
  doc_id: string;
  title: string;
  sections: BriefSectionView[];
}
