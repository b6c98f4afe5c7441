import { describe, expect, it } from "vitest";
import {
  AssistantApiError,
  AssistantClient,
  FAULTS,
  SimClient,
  type FetchLike,
} from "../src/api.js";

interface Captured {
  url: string;
  init?: RequestInit;
}

function fakeFetch(
  status: number,
  body: unknown,
  captured: Captured[] = [],
): FetchLike {
  return async (url, init) => {
    captured.push({ url, init });
    return new Response(JSON.stringify(body), {
      status,
      headers: { "Content-Type": "application/json" },
    });
  };
}

describe("AssistantClient.chat", () => {
  it("posts the request body and returns the parsed response", async () => {
    const captured: Captured[] = [];
    const reply = {
      session_id: "abc",
      answer: "done",
      trace: { agent_id: "decode", complete: true, final_answer: "done", steps: [] },
    };
    const client = new AssistantClient("http://x", fakeFetch(200, reply, captured));
    const out = await client.chat({ text: "hi", attachment_kind: "panel" });
    expect(out).toEqual(reply);
    expect(captured).toHaveLength(1);
    expect(captured[0].url).toBe("http://x/api/v1/chat");
    expect(captured[0].init?.method).toBe("POST");
    expect(JSON.parse(String(captured[0].init?.body))).toEqual({
      text: "hi",
      attachment_kind: "panel",
    });
  });

  it("strips a trailing slash from the base url", async () => {
    const captured: Captured[] = [];
    const client = new AssistantClient(
      "http://x/",
      fakeFetch(200, { session_id: "s", answer: "", trace: {} }, captured),
    );
    await client.chat({ text: "hi" });
    expect(captured[0].url).toBe("http://x/api/v1/chat");
  });

  it("raises AssistantApiError with the server's message", async () => {
    const client = new AssistantClient(
      "http://x",
      fakeFetch(400, { error: "text must be non-empty" }),
    );
    const err = await client.chat({ text: "" }).catch((e) => e);
    expect(err).toBeInstanceOf(AssistantApiError);
    expect(err.status).toBe(400);
    expect(err.error).toBe("text must be non-empty");
  });

  it("carries candidate boxes on multi-widget errors", async () => {
    const boxes = [
      [10, 10, 80, 140],
      [200, 10, 80, 140],
    ];
    const client = new AssistantClient(
      "http://x",
      fakeFetch(422, { error: "multiple widgets", boxes }),
    );
    const err = await client.chat({ text: "decode" }).catch((e) => e);
    expect(err.status).toBe(422);
    expect(err.boxes).toEqual(boxes);
  });

  it("survives a non-JSON error body", async () => {
    const broken: FetchLike = async () =>
      new Response("<html>oops</html>", { status: 502, statusText: "Bad Gateway" });
    const client = new AssistantClient("http://x", broken);
    const err = await client.chat({ text: "hi" }).catch((e) => e);
    expect(err.status).toBe(502);
    expect(err.error).toBe("Bad Gateway");
  });
});

describe("AssistantClient sessions", () => {
  it("lists sessions from the envelope", async () => {
    const sessions = [
      { session_id: "a", created: 1, updated: 2, message_count: 4 },
    ];
    const client = new AssistantClient("http://x", fakeFetch(200, { sessions }));
    expect(await client.listSessions()).toEqual(sessions);
  });

  it("fetches one session by id, url-encoding it", async () => {
    const captured: Captured[] = [];
    const detail = { session_id: "a b", created: 1, updated: 2, messages: [] };
    const client = new AssistantClient("http://x", fakeFetch(200, detail, captured));
    expect(await client.getSession("a b")).toEqual(detail);
    expect(captured[0].url).toBe("http://x/api/v1/sessions/a%20b");
  });

  it("maps 404 to an error", async () => {
    const client = new AssistantClient(
      "http://x",
      fakeFetch(404, { error: "unknown session" }),
    );
    const err = await client.getSession("nope").catch((e) => e);
    expect(err.status).toBe(404);
    expect(err.error).toBe("unknown session");
  });
});

describe("SimClient.inject", () => {
  it("posts to the inject route and unwraps result", async () => {
    const captured: Captured[] = [];
    const body = { alias: "FSVE_015", result: { frontend_status_code: 10 } };
    const client = new SimClient("http://sim", fakeFetch(200, body, captured));
    const result = await client.inject("FSVE_015", "frontend_stale_counter");
    expect(result).toEqual({ frontend_status_code: 10 });
    expect(captured[0].url).toBe(
      "http://sim/api/v1/widget/FSVE_015/inject/frontend_stale_counter",
    );
    expect(captured[0].init?.method).toBe("POST");
  });

  it("exposes the four supported faults including clear", () => {
    expect(FAULTS).toContain("frontend_stale_counter");
    expect(FAULTS).toContain("device_off");
    expect(FAULTS).toContain("alarm_active");
    expect(FAULTS).toContain("clear");
    expect(FAULTS).toHaveLength(4);
  });

  it("maps unknown alias to an error", async () => {
    const client = new SimClient(
      "http://sim",
      fakeFetch(404, { error: "unknown alias" }),
    );
    const err = await client.inject("NOPE", "clear").catch((e) => e);
    expect(err).toBeInstanceOf(AssistantApiError);
    expect(err.error).toBe("unknown alias");
  });
});
