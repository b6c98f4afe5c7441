"""Tool registry: documentation search, code search, widget data clients.

Handlers are total over schema-valid inputs: failures come back as
"error: ..." observation strings, never as raised exceptions, so one bad
tool call cannot kill an agent run.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Optional

import httpx

from ..errors import DuplicateToolName
from ..store.base import CODE, DOCS, SearchHit

DOC_SEARCH_N = 3  # top-n for documentation retrieval


@dataclass(frozen=True)
class ToolSpec:
    name: str
    description: str
    # param name -> {"type": ..., "required": bool}
    parameters: dict
    handler: Callable[..., str]

    def required_params(self) -> list[str]:
        return [k for k, v in self.parameters.items() if v.get("required", True)]


class ToolRegistry:
    def __init__(self):
        self._tools: dict[str, ToolSpec] = {}

    def register(self, spec: ToolSpec) -> None:
        if spec.name in self._tools:
            raise DuplicateToolName(spec.name)
        self._tools[spec.name] = spec

    def get(self, name: str) -> Optional[ToolSpec]:
        return self._tools.get(name)

    def names(self) -> list[str]:
        return list(self._tools)

    def __len__(self) -> int:
        return len(self._tools)

    def subset(self, names: list[str]) -> "ToolRegistry":
        sub = ToolRegistry()
        for name in names:
            spec = self._tools.get(name)
            if spec is None:
                raise KeyError(f"tool not in registry: {name}")
            sub.register(spec)
        return sub

    def execute(self, name: str, arguments: dict) -> str:
        spec = self._tools.get(name)
        if spec is None:
            return f"error: unknown tool '{name}'"
        try:
            return spec.handler(**arguments)
        except Exception as exc:  # noqa: BLE001 - observations, not crashes
            return f"error: {exc}"

    def describe(self) -> str:
        lines = []
        for spec in self._tools.values():
            params = ", ".join(
                f"{k}: {v.get('type', 'string')}" + ("" if v.get("required", True) else "?")
                for k, v in spec.parameters.items()
            )
            lines.append(f"- {spec.name}({params}): {spec.description}")
        return "\n".join(lines)


class SimClient:
    """HTTP client for the plant widget gateway."""

    def __init__(self, base_url: str, client: Optional[httpx.Client] = None):
        self.base_url = base_url.rstrip("/")
        self._client = client or httpx.Client(timeout=30.0)

    def widget_field(self, alias: str, field_name: str):
        resp = self._client.get(f"{self.base_url}/api/v1/widget/{alias}/{field_name}")
        body = resp.json()
        if resp.status_code != 200:
            raise RuntimeError(body.get("error", f"gateway returned {resp.status_code}"))
        return body["result"]


def _format_doc_hits(hits: list[SearchHit]) -> str:
    return "\n---\n".join(h.record["data"] for h in hits)


def _format_code_hits(hits: list[SearchHit]) -> str:
    if not hits:
        return "no matching methods"
    blocks = [
        f"[{h.record['file_name']} :: {h.record['method_name']}]\n{h.record['data']}"
        for h in hits
    ]
    return "\n---\n".join(blocks)


def register_tools(store, embedder, sim_client: SimClient) -> ToolRegistry:
    """The full 12-tool registry: 1 docs tool, 4 code tools, 7 widget tools."""
    registry = ToolRegistry()

    def query_documentation(query: str) -> str:
        return _format_doc_hits(
            store.semantic_search(DOCS, query, embedder, n=DOC_SEARCH_N)
        )

    registry.register(ToolSpec(
        name="query_documentation",
        description="Query the documentation using semantic search.",
        parameters={"query": {"type": "string"}},
        handler=query_documentation,
    ))

    registry.register(ToolSpec(
        name="query_codebase",
        description="Search the widget animation codebase semantically.",
        parameters={"query": {"type": "string"}},
        handler=lambda query: _format_code_hits(
            store.semantic_search(CODE, query, embedder, n=DOC_SEARCH_N)
        ),
    ))
    registry.register(ToolSpec(
        name="query_codebase_by_file",
        description="Return the code of all methods located in the given file.",
        parameters={"file_name": {"type": "string"}},
        handler=lambda file_name: _format_code_hits(
            store.file_name_search(CODE, file_name)
        ),
    ))
    registry.register(ToolSpec(
        name="query_codebase_by_method",
        description="Return the code of every method with the given name.",
        parameters={"method_name": {"type": "string"}},
        handler=lambda method_name: _format_code_hits(
            store.method_name_search(CODE, method_name)
        ),
    ))

    def query_codebase_multi_filter(file_name=None, method_name=None, query=None):
        return _format_code_hits(
            store.multi_filter_search(
                CODE,
                embedder=embedder,
                file_name=file_name,
                method_name=method_name,
                query=query,
                n=DOC_SEARCH_N,
            )
        )

    registry.register(ToolSpec(
        name="query_codebase_multi_filter",
        description="Search the codebase by any combination of file name, method name and semantic query.",
        parameters={
            "file_name": {"type": "string", "required": False},
            "method_name": {"type": "string", "required": False},
            "query": {"type": "string", "required": False},
        },
        handler=query_codebase_multi_filter,
    ))

    widget_fields = {
        "get_widget_master": ("master", "Return the alias of the widget's master."),
        "get_widget_parents": ("parents", "Return the aliases of the widget's parents."),
        "get_widget_children": ("children", "Return the aliases of the widget's children."),
        "get_widget_alarms": ("alarms", "Return the aliases of the widget's alarms."),
        "get_widget_frontend_status": (
            "frontend-status",
            "Return the frontend status code of the widget (connection status).",
        ),
        "get_widget_device_status": (
            "device-status",
            "Return the device status code of the widget (operational status bitfield).",
        ),
        "get_widget_device_type": (
            "device-type",
            "Return the device type of the associated device.",
        ),
    }
    for tool_name, (field_name, description) in widget_fields.items():
        def handler(alias: str, _field=field_name) -> str:
            return json.dumps(sim_client.widget_field(alias, _field))

        registry.register(ToolSpec(
            name=tool_name,
            description=description,
            parameters={"alias": {"type": "string"}},
            handler=handler,
        ))

    return registry
