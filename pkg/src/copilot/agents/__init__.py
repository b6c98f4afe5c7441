from .react import (
    DEFAULT_MAX_STEPS,
    AgentStep,
    AgentTrace,
    ToolCall,
    build_system_prompt,
    parse_react_step,
    run_react,
)
from .supervisor import WORKER_KINDS, load_prompt, supervisor_route
from .tools import SimClient, ToolRegistry, ToolSpec, register_tools
from .workers import TOOL_SCOPES, build_user_message, run_worker

__all__ = [
    "DEFAULT_MAX_STEPS",
    "AgentStep",
    "AgentTrace",
    "ToolCall",
    "build_system_prompt",
    "parse_react_step",
    "run_react",
    "WORKER_KINDS",
    "load_prompt",
    "supervisor_route",
    "SimClient",
    "ToolRegistry",
    "ToolSpec",
    "register_tools",
    "TOOL_SCOPES",
    "build_user_message",
    "run_worker",
]
