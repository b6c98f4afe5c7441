// DOM wiring for the operator chat window. All server state is fetched
// on demand; the page only tracks the current session id and a pending
// attachment.

import { AssistantApiError, AssistantClient, FAULTS, SimClient } from "./api.js";
import { readAttachment, type PendingAttachment } from "./attachment.js";
import { assistantUrl, simUrl } from "./config.js";
import { traceSummary, traceTimeline } from "./trace.js";
import type { AgentTrace, AttachmentKind, SessionMessage } from "./types.js";

const client = new AssistantClient(assistantUrl());
const sim = simUrl() ? new SimClient(simUrl()!) : null;

let sessionId: string | null = null;
let attachment: PendingAttachment | null = null;
let busy = false;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

const messagesEl = el<HTMLDivElement>("messages");
const inputEl = el<HTMLTextAreaElement>("input");
const sendEl = el<HTMLButtonElement>("send");
const pendingEl = el<HTMLDivElement>("pending");
const statusEl = el<HTMLDivElement>("status");
const fileEl = el<HTMLInputElement>("file");
const previewEl = el<HTMLDivElement>("preview");
const kindEl = el<HTMLSelectElement>("kind");
const sessionsEl = el<HTMLSelectElement>("sessions");

function setStatus(text: string, isError = false): void {
  statusEl.textContent = text;
  statusEl.className = isError ? "status error" : "status";
}

function setBusy(value: boolean): void {
  busy = value;
  sendEl.disabled = value;
  pendingEl.hidden = !value;
}

function traceElement(trace: AgentTrace): HTMLElement {
  const details = document.createElement("details");
  details.className = "trace";
  const summary = document.createElement("summary");
  summary.textContent = traceSummary(trace);
  details.appendChild(summary);
  const list = document.createElement("ol");
  for (const entry of traceTimeline(trace)) {
    const item = document.createElement("li");
    item.className = `entry ${entry.kind}`;
    switch (entry.kind) {
      case "thought":
        item.textContent = entry.text;
        break;
      case "call": {
        const code = document.createElement("code");
        code.textContent = entry.args ? `${entry.tool}(${entry.args})` : `${entry.tool}()`;
        item.appendChild(code);
        break;
      }
      case "observation":
        item.textContent = entry.text;
        if (entry.isError) item.classList.add("error");
        break;
      case "answer":
        item.textContent = entry.text;
        break;
    }
    list.appendChild(item);
  }
  details.appendChild(list);
  return details;
}

function messageElement(message: SessionMessage): HTMLElement {
  const wrap = document.createElement("div");
  wrap.className = `message ${message.author}`;
  const body = document.createElement("div");
  body.className = "bubble";
  body.textContent = message.text;
  wrap.appendChild(body);
  if (message.attachment_png_b64) {
    const img = document.createElement("img");
    img.className = "thumb";
    img.src = `data:image/png;base64,${message.attachment_png_b64}`;
    img.alt = "attached image";
    wrap.appendChild(img);
  }
  if (message.trace) {
    wrap.appendChild(traceElement(message.trace));
  }
  return wrap;
}

function appendMessage(message: SessionMessage): void {
  messagesEl.appendChild(messageElement(message));
  messagesEl.scrollTop = messagesEl.scrollHeight;
}

async function loadSession(id: string): Promise<void> {
  const detail = await client.getSession(id);
  sessionId = detail.session_id;
  messagesEl.replaceChildren();
  for (const message of detail.messages) appendMessage(message);
  setStatus(`session ${id.slice(0, 8)} (${detail.messages.length} messages)`);
}

async function refreshSessionList(): Promise<void> {
  const sessions = await client.listSessions();
  sessionsEl.replaceChildren();
  const blank = document.createElement("option");
  blank.value = "";
  blank.textContent = "new session";
  sessionsEl.appendChild(blank);
  for (const s of sessions) {
    const opt = document.createElement("option");
    opt.value = s.session_id;
    opt.textContent = `${s.session_id.slice(0, 8)} (${s.message_count})`;
    opt.selected = s.session_id === sessionId;
    sessionsEl.appendChild(opt);
  }
}

function clearAttachment(): void {
  attachment = null;
  fileEl.value = "";
  previewEl.replaceChildren();
  previewEl.hidden = true;
}

async function send(): Promise<void> {
  const text = inputEl.value.trim();
  if (!text || busy) return;
  setBusy(true);
  setStatus("waiting for the assistant...");
  appendMessage({
    author: "operator",
    text,
    attachment_png_b64: attachment ? attachment.base64 : null,
    trace: null,
  });
  try {
    const response = await client.chat({
      text,
      session_id: sessionId ?? undefined,
      attachment: attachment ? attachment.base64 : undefined,
      attachment_kind: kindEl.value as AttachmentKind,
    });
    sessionId = response.session_id;
    appendMessage({
      author: "assistant",
      text: response.answer,
      attachment_png_b64: null,
      trace: response.trace,
    });
    inputEl.value = "";
    clearAttachment();
    setStatus(`session ${sessionId.slice(0, 8)}`);
    await refreshSessionList();
  } catch (err) {
    if (err instanceof AssistantApiError) {
      const extra = err.boxes ? ` (candidates: ${JSON.stringify(err.boxes)})` : "";
      setStatus(`${err.error}${extra}`, true);
    } else {
      setStatus(String(err), true);
    }
  } finally {
    setBusy(false);
  }
}

function wireFaultPanel(): void {
  const panel = el<HTMLDivElement>("faults");
  if (!sim) {
    panel.hidden = true;
    return;
  }
  const aliasEl = el<HTMLInputElement>("fault-alias");
  const faultEl = el<HTMLSelectElement>("fault-name");
  for (const fault of FAULTS) {
    const opt = document.createElement("option");
    opt.value = fault;
    opt.textContent = fault;
    faultEl.appendChild(opt);
  }
  el<HTMLButtonElement>("fault-apply").addEventListener("click", async () => {
    const alias = aliasEl.value.trim();
    if (!alias) return;
    try {
      const result = await sim.inject(alias, faultEl.value as never);
      setStatus(`injected ${faultEl.value} on ${alias}: ${JSON.stringify(result)}`);
    } catch (err) {
      setStatus(String(err instanceof AssistantApiError ? err.error : err), true);
    }
  });
}

function init(): void {
  sendEl.addEventListener("click", () => void send());
  inputEl.addEventListener("keydown", (event) => {
    if (event.key === "Enter" && !event.shiftKey) {
      event.preventDefault();
      void send();
    }
  });
  fileEl.addEventListener("change", async () => {
    const file = fileEl.files?.[0];
    if (!file) return;
    try {
      attachment = await readAttachment(file);
      const img = document.createElement("img");
      img.src = attachment.dataUrl;
      img.alt = attachment.name;
      const drop = document.createElement("button");
      drop.textContent = "remove";
      drop.addEventListener("click", clearAttachment);
      previewEl.replaceChildren(img, drop);
      previewEl.hidden = false;
      setStatus(`attached ${attachment.name}`);
    } catch (err) {
      clearAttachment();
      setStatus(String(err instanceof Error ? err.message : err), true);
    }
  });
  sessionsEl.addEventListener("change", () => {
    const id = sessionsEl.value;
    if (id) {
      void loadSession(id).catch((err) => setStatus(String(err), true));
    } else {
      sessionId = null;
      messagesEl.replaceChildren();
      setStatus("new session");
    }
  });
  wireFaultPanel();
  void refreshSessionList().catch(() =>
    setStatus(`assistant unreachable at ${assistantUrl()}`, true),
  );
}

init();
