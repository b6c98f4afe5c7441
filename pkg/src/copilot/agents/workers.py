"""The three worker agents: widget decoding, root-cause analysis, DPE tracing.

Each worker is run_react with its own prompt and a least-privilege tool
subset. Decode and RCA receive the widget observation rendered as text;
the trace worker additionally needs the code-search tools.
"""

from __future__ import annotations

from .react import DEFAULT_MAX_STEPS, AgentTrace, run_react
from .supervisor import load_prompt
from .tools import ToolRegistry

WIDGET_TOOLS = [
    "get_widget_master",
    "get_widget_parents",
    "get_widget_children",
    "get_widget_alarms",
    "get_widget_frontend_status",
    "get_widget_device_status",
    "get_widget_device_type",
]
CODE_TOOLS = [
    "query_codebase",
    "query_codebase_by_file",
    "query_codebase_by_method",
    "query_codebase_multi_filter",
]

TOOL_SCOPES = {
    "decode": ["query_documentation"],
    "root_cause": ["query_documentation"] + WIDGET_TOOLS,
    "dpe_trace": CODE_TOOLS + ["get_widget_device_type"],
}
PROMPT_FILES = {"decode": "decode", "root_cause": "rca", "dpe_trace": "trace"}


def build_user_message(user_text: str, observation_text: str = "", context: str = "") -> str:
    parts = []
    if observation_text:
        parts.append(f"Widget description: {observation_text}")
    if context:
        parts.append(f"Conversation context:\n{context}")
    parts.append(user_text)
    return "\n\n".join(parts)


def run_worker(
    kind: str,
    user_text: str,
    registry: ToolRegistry,
    chat_backend,
    observation_text: str = "",
    context: str = "",
    max_steps: int = DEFAULT_MAX_STEPS,
) -> AgentTrace:
    if kind not in TOOL_SCOPES:
        raise ValueError(f"unknown worker kind: {kind}")
    scoped = registry.subset(TOOL_SCOPES[kind])
    return run_react(
        system_prompt=load_prompt(PROMPT_FILES[kind]),
        user_message=build_user_message(user_text, observation_text, context),
        registry=scoped,
        chat_backend=chat_backend,
        max_steps=max_steps,
        agent_id=kind,
    )
