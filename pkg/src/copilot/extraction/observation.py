"""Structured widget observation and its XML wire format.

The XML schema is fixed: a <widget> element containing one child per
field. Corner symbols are nested elements with <character> and <color>.
body_text and body_color are required; everything else is optional.
Unknown tags are ignored with a warning so slightly chatty model output
still parses.
"""

from __future__ import annotations

import logging
import re
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from typing import Optional
from xml.sax.saxutils import escape

from ..errors import MalformedXml

logger = logging.getLogger(__name__)

CORNERS = ("top_left", "top_right", "bottom_left", "bottom_right")
_KNOWN_TAGS = {"alias", "body_text", "body_color", "overlay_text"} | {
    f"{c}_symbol" for c in CORNERS
}
_WIDGET_BLOCK = re.compile(r"<widget>.*?</widget>", re.DOTALL)


@dataclass(frozen=True)
class SymbolObservation:
    character: str
    color: str


@dataclass(frozen=True)
class WidgetObservation:
    body_text: str
    body_color: str
    alias: str = ""  # defaults to body_text
    top_left_symbol: Optional[SymbolObservation] = None
    top_right_symbol: Optional[SymbolObservation] = None
    bottom_left_symbol: Optional[SymbolObservation] = None
    bottom_right_symbol: Optional[SymbolObservation] = None
    overlay_text: str = ""

    def __post_init__(self):
        if not self.alias:
            object.__setattr__(self, "alias", self.body_text)

    def symbol(self, corner: str) -> Optional[SymbolObservation]:
        return getattr(self, f"{corner}_symbol")

    def describe(self) -> str:
        """Human-readable rendering handed to the worker agents."""
        parts = [
            f"Widget alias: {self.alias}.",
            f"Body text: {self.body_text}.",
            f"Body colour: {self.body_color}.",
        ]
        for corner in CORNERS:
            sym = self.symbol(corner)
            if sym is not None:
                label = corner.replace("_", " ")
                parts.append(f"{label.capitalize()} symbol: {sym.color} '{sym.character}'.")
        if self.overlay_text:
            parts.append(f"Overlay text: {self.overlay_text}.")
        return " ".join(parts)


def serialize_observation_xml(obs: WidgetObservation) -> str:
    lines = ["<widget>"]
    lines.append(f"  <alias>{escape(obs.alias)}</alias>")
    lines.append(f"  <body_text>{escape(obs.body_text)}</body_text>")
    lines.append(f"  <body_color>{escape(obs.body_color)}</body_color>")
    for corner in CORNERS:
        sym = obs.symbol(corner)
        if sym is not None:
            lines.append(
                f"  <{corner}_symbol><character>{escape(sym.character)}</character>"
                f"<color>{escape(sym.color)}</color></{corner}_symbol>"
            )
    if obs.overlay_text:
        lines.append(f"  <overlay_text>{escape(obs.overlay_text)}</overlay_text>")
    lines.append("</widget>")
    return "\n".join(lines)


def parse_observation_xml(text: str) -> WidgetObservation:
    match = _WIDGET_BLOCK.search(text)
    if not match:
        raise MalformedXml("no <widget>...</widget> block found")
    try:
        root = ET.fromstring(match.group(0))
    except ET.ParseError as exc:
        raise MalformedXml(str(exc)) from exc

    fields: dict = {}
    for child in root:
        if child.tag not in _KNOWN_TAGS:
            logger.warning("ignoring unknown widget tag <%s>", child.tag)
            continue
        if child.tag.endswith("_symbol"):
            character = child.findtext("character")
            color = child.findtext("color")
            if character is None or color is None:
                raise MalformedXml(f"<{child.tag}> needs <character> and <color>")
            fields[child.tag] = SymbolObservation(character=character, color=color)
        else:
            fields[child.tag] = (child.text or "").strip()

    if not fields.get("body_text") or not fields.get("body_color"):
        raise MalformedXml("missing required body_text or body_color")
    return WidgetObservation(**fields)
