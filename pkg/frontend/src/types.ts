// Wire types of the assistant service and the plant gateway.

export interface ToolAction {
  tool: string;
  arguments: Record<string, unknown>;
}

export interface TraceStep {
  thought: string;
  action: ToolAction | null;
  observation: string | null;
  final_answer: string | null;
}

export interface AgentTrace {
  agent_id: string;
  complete: boolean;
  final_answer: string;
  steps: TraceStep[];
}

export type AttachmentKind = "panel" | "widget";

export interface ChatRequest {
  text: string;
  session_id?: string;
  attachment?: string; // base64 PNG
  attachment_kind?: AttachmentKind;
}

export interface ChatResponse {
  session_id: string;
  answer: string;
  trace: AgentTrace;
}

export interface SessionMessage {
  author: "operator" | "assistant";
  text: string;
  attachment_png_b64: string | null;
  trace: AgentTrace | null;
}

export interface SessionDetail {
  session_id: string;
  created: number;
  updated: number;
  messages: SessionMessage[];
}

export interface SessionSummary {
  session_id: string;
  created: number;
  updated: number;
  message_count: number;
}

export interface ApiError {
  status: number;
  error: string;
  boxes?: number[][];
}
