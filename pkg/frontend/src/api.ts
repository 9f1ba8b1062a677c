/**
 * Typed fetch client for the annotation service.
 *
 * Every error response uses one envelope:
 *   {"error": {"code": ..., "message": ..., "details": ...}}
 * and every response carries the `cabinet-api-version` header; a missing
 * or unexpected version is treated as talking to the wrong service.
 */

import type {
  AnnotationResult,
  BriefExportView,
  DocumentView,
  SectionLabel,
  SessionView,
  SuggestionResult,
  HighlightView,
  WorkedExampleView,
  FeedbackEventView,
} from './types.js';

export const EXPECTED_API_VERSION = '1';

export class ApiRequestError extends Error {
  constructor(
    public readonly code: string,
    message: string,
    public readonly status: number,
    public readonly details: unknown = null,
  ) {
    super(message);
    this.name = 'ApiRequestError';
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  private readonly fetchImpl: FetchLike;

  constructor(
    public readonly baseUrl: string,
    fetchImpl?: FetchLike,
  ) {
    // bind so a bare global fetch keeps its expected receiver
    this.fetchImpl = fetchImpl ?? ((input, init) => fetch(input, init));
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const response = await this.fetchImpl(`${this.baseUrl}${path}`, {
      method,
      headers: body === undefined ? {} : { 'content-type': 'application/json' },
      body: body === undefined ? undefined : JSON.stringify(body),
    });

    const version = response.headers.get('cabinet-api-version');
    if (version !== EXPECTED_API_VERSION) {
      throw new ApiRequestError(
        'VersionMismatch',
        `expected cabinet-api-version ${EXPECTED_API_VERSION}, got ${version ?? 'none'}`,
        response.status,
      );
    }

    if (!response.ok) {
      let code = 'Unknown';
      let message = `${response.status} ${response.statusText}`;
      let details: unknown = null;
      try {
        const payload = (await response.json()) as {
          error?: { code?: string; message?: string; details?: unknown };
        };
        if (payload.error) {
          code = payload.error.code ?? code;
          message = payload.error.message ?? message;
          details = payload.error.details ?? null;
        }
      } catch {
        // non-JSON error body; keep the status text
      }
      throw new ApiRequestError(code, message, response.status, details);
    }

    return (await response.json()) as T;
  }

  createDocument(payload: { doc_id?: string; title?: string; body: string }): Promise<DocumentView> {
    return this.request('POST', '/documents', payload);
  }

  getDocument(docId: string): Promise<DocumentView> {
    return this.request('GET', `/documents/${encodeURIComponent(docId)}`);
  }

  createSession(payload: { user: string; level: number; doc_id: string }): Promise<SessionView> {
    return this.request('POST', '/sessions', payload);
  }

  getSession(sessionId: string): Promise<SessionView> {
    return this.request('GET', `/sessions/${encodeURIComponent(sessionId)}`);
  }

  submitAnnotation(
    sessionId: string,
    span: [number, number],
    label: SectionLabel,
  ): Promise<AnnotationResult> {
    return this.request('POST', `/sessions/${encodeURIComponent(sessionId)}/annotations`, {
      span,
      label,
    });
  }

  suggestCategory(sessionId: string, span: [number, number]): Promise<SuggestionResult> {
    return this.request('POST', `/sessions/${encodeURIComponent(sessionId)}/suggestions`, { span });
  }

  resolveSuggestion(
    sessionId: string,
    annotationId: string,
    action: 'confirm' | 'correct',
    label?: SectionLabel,
  ): Promise<{ annotation: SuggestionResult['annotation'] }> {
    return this.request(
      'POST',
      `/sessions/${encodeURIComponent(sessionId)}/suggestions/${encodeURIComponent(annotationId)}/resolve`,
      label === undefined ? { action } : { action, label },
    );
  }

  getHighlights(sessionId: string): Promise<{ highlights: HighlightView[] }> {
    return this.request('GET', `/sessions/${encodeURIComponent(sessionId)}/highlights`);
  }

  getWorkedExample(sessionId: string): Promise<WorkedExampleView> {
    return this.request('GET', `/sessions/${encodeURIComponent(sessionId)}/worked-example`);
  }

  submitCategorization(
    sessionId: string,
    elementId: number,
    label: SectionLabel,
  ): Promise<{ feedback: FeedbackEventView }> {
    return this.request('POST', `/sessions/${encodeURIComponent(sessionId)}/categorizations`, {
      element_id: elementId,
      label,
    });
  }

  exportBrief(sessionId: string): Promise<BriefExportView> {
    return this.request('GET', `/sessions/${encodeURIComponent(sessionId)}/brief`);
  }
}
