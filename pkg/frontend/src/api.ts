// Stateless HTTP client for the assistant service. All state lives
// server-side; the client only remembers the current session id in the
// page, never here. fetch is injectable for tests.

import type {
  ApiError,
  ChatRequest,
  ChatResponse,
  SessionDetail,
  SessionSummary,
} from "./types.js";

export type FetchLike = (
  url: string,
  init?: RequestInit,
) => Promise<Response>;

export class AssistantApiError extends Error implements ApiError {
  status: number;
  error: string;
  boxes?: number[][];

  constructor(status: number, error: string, boxes?: number[][]) {
    super(`${status}: ${error}`);
    this.status = status;
    this.error = error;
    this.boxes = boxes;
  }
}

async function parseError(resp: Response): Promise<AssistantApiError> {
  let message = resp.statusText || "request failed";
  let boxes: number[][] | undefined;
  try {
    const body = await resp.json();
    if (typeof body.error === "string") message = body.error;
    if (Array.isArray(body.boxes)) boxes = body.boxes;
  } catch {
    // non-JSON body, keep the status text
  }
  return new AssistantApiError(resp.status, message, boxes);
}

export class AssistantClient {
  private readonly base: string;
  private readonly fetchFn: FetchLike;

  constructor(baseUrl: string, fetchFn?: FetchLike) {
    this.base = baseUrl.endsWith("/") ? baseUrl.slice(0, -1) : baseUrl;
    this.fetchFn = fetchFn ?? ((url, init) => fetch(url, init));
  }

  async chat(request: ChatRequest): Promise<ChatResponse> {
    const resp = await this.fetchFn(`${this.base}/api/v1/chat`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(request),
    });
    if (!resp.ok) throw await parseError(resp);
    return (await resp.json()) as ChatResponse;
  }

  async listSessions(): Promise<SessionSummary[]> {
    const resp = await this.fetchFn(`${this.base}/api/v1/sessions`);
    if (!resp.ok) throw await parseError(resp);
    const body = await resp.json();
    return body.sessions as SessionSummary[];
  }

  async getSession(sessionId: string): Promise<SessionDetail> {
    const resp = await this.fetchFn(
      `${this.base}/api/v1/sessions/${encodeURIComponent(sessionId)}`,
    );
    if (!resp.ok) throw await parseError(resp);
    return (await resp.json()) as SessionDetail;
  }
}

// Dev-mode client for the plant gateway's fault hook.
export const FAULTS = [
  "frontend_stale_counter",
  "device_off",
  "alarm_active",
  "clear",
] as const;

export type FaultName = (typeof FAULTS)[number];

export class SimClient {
  private readonly base: string;
  private readonly fetchFn: FetchLike;

  constructor(baseUrl: string, fetchFn?: FetchLike) {
    this.base = baseUrl.endsWith("/") ? baseUrl.slice(0, -1) : baseUrl;
    this.fetchFn = fetchFn ?? ((url, init) => fetch(url, init));
  }

  async inject(alias: string, fault: FaultName): Promise<unknown> {
    const resp = await this.fetchFn(
      `${this.base}/api/v1/widget/${encodeURIComponent(alias)}/inject/${fault}`,
      { method: "POST" },
    );
    if (!resp.ok) throw await parseError(resp);
    const body = await resp.json();
    return body.result;
  }
}
