/**
 * Session polling. The service pushes nothing; the client refreshes the
 * session view on a fixed interval (default 2 s) and hands each view to
 * a callback. Errors go to an error callback so the UI can show a
 * banner without the loop dying.
 */

import type { ApiClient } from './api.js';
import type { SessionView } from './types.js';

export const DEFAULT_POLL_INTERVAL_MS = 2000;

export interface Poller {
  stop(): void;
  /** One refresh outside the schedule, e.g. right after a mutation. */
  tick(): Promise<void>;
}

export function startSessionPolling(
  client: ApiClient,
  sessionId: string,
  onView: (view: SessionView) => void,
  onError: (error: unknown) => void = () => {},
  intervalMs: number = DEFAULT_POLL_INTERVAL_MS,
): Poller {
  let stopped = false;

  const tick = async (): Promise<void> => {
    if (stopped) return;
    try {
      const view = await client.getSession(sessionId);
      if (!stopped) onView(view);
    } catch (error) {
      if (!stopped) onError(error);
    }
  };

  const timer = setInterval(() => {
    void tick();
  }, intervalMs);

  return {
    stop(): void {
      stopped = true;
      clearInterval(timer);
    },
    tick,
  };
}
