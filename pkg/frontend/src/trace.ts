// Pure view-model for the trace inspector: flattens an agent trace into
// an ordered timeline of display entries, with a one-line summary for
// the collapsed state.

import type { AgentTrace, TraceStep } from "./types.js";

export type TimelineEntry =
  | { kind: "thought"; text: string }
  | { kind: "call"; tool: string; args: string }
  | { kind: "observation"; text: string; isError: boolean }
  | { kind: "answer"; text: string };

export function formatArguments(args: Record<string, unknown>): string {
  const parts = Object.keys(args)
    .sort()
    .map((k) => `${k}=${JSON.stringify(args[k])}`);
  return parts.join(", ");
}

function stepEntries(step: TraceStep): TimelineEntry[] {
  const entries: TimelineEntry[] = [];
  if (step.thought) entries.push({ kind: "thought", text: step.thought });
  if (step.action) {
    entries.push({
      kind: "call",
      tool: step.action.tool,
      args: formatArguments(step.action.arguments),
    });
  }
  if (step.observation !== null && step.observation !== undefined) {
    entries.push({
      kind: "observation",
      text: step.observation,
      isError: step.observation.startsWith("error:"),
    });
  }
  if (step.final_answer !== null && step.final_answer !== undefined) {
    entries.push({ kind: "answer", text: step.final_answer });
  }
  return entries;
}

export function traceTimeline(trace: AgentTrace): TimelineEntry[] {
  return trace.steps.flatMap(stepEntries);
}

export function traceSummary(trace: AgentTrace): string {
  const calls = trace.steps.filter((s) => s.action !== null).length;
  const agent = trace.agent_id || "agent";
  const status = trace.complete ? "" : ", incomplete";
  const noun = calls === 1 ? "tool call" : "tool calls";
  return `${agent}: ${trace.steps.length} steps, ${calls} ${noun}${status}`;
}
