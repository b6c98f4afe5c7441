"""ReAct engine: step grammar parsing and the think/act/observe loop.

Step grammar (tolerant of surrounding prose):

    Thought: <free text, may span lines>
    Action: <tool name>
    Action Input: <JSON object>

or

    Thought: <free text>
    Final Answer: <answer, spans to end of message>
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Optional

from ..errors import StepBudgetExhausted, UnparseableStep
from ..models.messages import ChatMessage, CompletionRequest
from .tools import ToolRegistry

DEFAULT_MAX_STEPS = 16

_THOUGHT = re.compile(r"Thought:\s*(.*?)(?=\n\s*(?:Action|Final Answer):|\Z)", re.DOTALL)
_ACTION = re.compile(r"Action:\s*([A-Za-z_][A-Za-z0-9_]*)")
_ACTION_INPUT = re.compile(r"Action Input:\s*(\{.*?\})\s*(?:\n|$)", re.DOTALL)
_FINAL = re.compile(r"Final Answer:\s*(.*)\Z", re.DOTALL)

REPROMPT = (
    "Your last reply did not follow the required format. Reply with "
    "'Thought:' then either 'Action:'/'Action Input:' (JSON arguments) or "
    "'Final Answer:'."
)


@dataclass(frozen=True)
class ToolCall:
    tool: str
    arguments: dict


@dataclass
class AgentStep:
    thought: str
    action: Optional[ToolCall] = None
    observation: Optional[str] = None
    final_answer: Optional[str] = None


@dataclass
class AgentTrace:
    agent_id: str
    steps: list[AgentStep] = field(default_factory=list)
    final_answer: str = ""
    complete: bool = False

    @property
    def step_count(self) -> int:
        return len(self.steps)

    def tool_calls(self) -> list[ToolCall]:
        return [s.action for s in self.steps if s.action is not None]

    def to_dict(self) -> dict:
        return {
            "agent_id": self.agent_id,
            "complete": self.complete,
            "final_answer": self.final_answer,
            "steps": [
                {
                    "thought": s.thought,
                    "action": (
                        {"tool": s.action.tool, "arguments": s.action.arguments}
                        if s.action
                        else None
                    ),
                    "observation": s.observation,
                    "final_answer": s.final_answer,
                }
                for s in self.steps
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> "AgentTrace":
        steps = [
            AgentStep(
                thought=s["thought"],
                action=ToolCall(**s["action"]) if s.get("action") else None,
                observation=s.get("observation"),
                final_answer=s.get("final_answer"),
            )
            for s in data.get("steps", [])
        ]
        return cls(
            agent_id=data["agent_id"],
            steps=steps,
            final_answer=data.get("final_answer", ""),
            complete=data.get("complete", False),
        )


def parse_react_step(text: str, registry: Optional[ToolRegistry] = None) -> AgentStep:
    thought_match = _THOUGHT.search(text)
    thought = thought_match.group(1).strip() if thought_match else ""

    final_match = _FINAL.search(text)
    if final_match:
        return AgentStep(thought=thought, final_answer=final_match.group(1).strip())

    action_match = _ACTION.search(text)
    if not action_match:
        raise UnparseableStep("neither Action nor Final Answer found")
    input_match = _ACTION_INPUT.search(text)
    if not input_match:
        raise UnparseableStep("Action without Action Input")
    try:
        arguments = json.loads(input_match.group(1))
    except json.JSONDecodeError as exc:
        raise UnparseableStep(f"Action Input is not valid JSON: {exc}") from exc
    if not isinstance(arguments, dict):
        raise UnparseableStep("Action Input must be a JSON object")

    tool = action_match.group(1)
    if registry is not None:
        spec = registry.get(tool)
        if spec is not None:
            missing = [p for p in spec.required_params() if p not in arguments]
            if missing:
                raise UnparseableStep(
                    f"arguments for {tool} missing required {missing}"
                )
            unknown = [k for k in arguments if k not in spec.parameters]
            if unknown:
                raise UnparseableStep(f"arguments for {tool} have unknown keys {unknown}")
    return AgentStep(thought=thought, action=ToolCall(tool=tool, arguments=arguments))


def build_system_prompt(prompt: str, registry: ToolRegistry) -> str:
    return (
        f"{prompt.rstrip()}\n\n"
        "You have access to the following tools:\n"
        f"{registry.describe()}\n\n"
        "Use exactly this format for every reply:\n"
        "Thought: your reasoning\n"
        "Action: tool name\n"
        "Action Input: JSON object of arguments\n\n"
        "or, once you can answer:\n"
        "Thought: your reasoning\n"
        "Final Answer: your answer\n"
    )


def run_react(
    system_prompt: str,
    user_message: str,
    registry: ToolRegistry,
    chat_backend,
    max_steps: int = DEFAULT_MAX_STEPS,
    agent_id: str = "agent",
) -> AgentTrace:
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    messages = [
        ChatMessage(role="system", text=build_system_prompt(system_prompt, registry)),
        ChatMessage(role="user", text=user_message),
    ]
    trace = AgentTrace(agent_id=agent_id)

    for _ in range(max_steps):
        reply = chat_backend.complete(CompletionRequest(messages=messages))
        try:
            step = parse_react_step(reply.text, registry)
        except UnparseableStep:
            # one corrective re-prompt, then give up on this run
            messages = messages + [
                ChatMessage(role="assistant", text=reply.text),
                ChatMessage(role="user", text=REPROMPT),
            ]
            reply = chat_backend.complete(CompletionRequest(messages=messages))
            step = parse_react_step(reply.text, registry)

        messages = messages + [ChatMessage(role="assistant", text=reply.text)]
        if step.final_answer is not None:
            trace.steps.append(step)
            trace.final_answer = step.final_answer
            trace.complete = True
            return trace

        step.observation = registry.execute(step.action.tool, step.action.arguments)
        trace.steps.append(step)
        messages = messages + [
            ChatMessage(role="tool", text=step.observation, tool_name=step.action.tool)
        ]

    raise StepBudgetExhausted(trace)
