"""Domain model for the simulated plant: devices, widget styles, scenarios."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional

from ..errors import ValidationError

BODY_COLORS = ("green", "red", "yellow", "grey", "cyan", "white")
GLYPH_COLORS = ("green", "red", "yellow", "grey", "cyan", "white", "orange", "blue")
DEVICE_TYPES = ("ANADIG", "PCO")

GLYPH_CORNERS = ("top_left", "top_right", "bottom_left", "bottom_right")


@dataclass(frozen=True)
class Glyph:
    character: str
    color: str

    def __post_init__(self):
        if len(self.character) != 1 or not self.character.isprintable():
            raise ValidationError(f"glyph character must be a single printable char: {self.character!r}")
        if self.color not in GLYPH_COLORS:
            raise ValidationError(f"unknown glyph color: {self.color}")


@dataclass(frozen=True)
class WidgetStyle:
    body_color: str = "grey"
    body_text: str = ""
    top_left_symbol: Optional[Glyph] = None
    top_right_symbol: Optional[Glyph] = None
    bottom_left_symbol: Optional[Glyph] = None
    bottom_right_symbol: Optional[Glyph] = None

    def __post_init__(self):
        if self.body_color not in BODY_COLORS:
            raise ValidationError(f"unknown body color: {self.body_color}")
        if not self.body_text:
            raise ValidationError("body_text must be non-empty")

    def glyph(self, corner: str) -> Optional[Glyph]:
        return getattr(self, f"{corner}_symbol")


@dataclass
class Device:
    alias: str
    device_type: str = "ANADIG"
    master: Optional[str] = None
    parents: list[str] = field(default_factory=list)
    children: list[str] = field(default_factory=list)
    alarms: list[str] = field(default_factory=list)
    frontend_status_code: int = 0
    device_status_bits: int = 0
    widget_style: WidgetStyle = None
    # alias whose alarm list this device joins when an alarm fault is injected
    alarm_owner: Optional[str] = None
    # top-left corner of the widget body on the panel; None = auto layout
    position: Optional[tuple[int, int]] = None

    def __post_init__(self):
        if self.widget_style is None:
            self.widget_style = WidgetStyle(body_text=self.alias)

    def copy(self) -> "Device":
        return replace(
            self,
            parents=list(self.parents),
            children=list(self.children),
            alarms=list(self.alarms),
        )


@dataclass
class Scenario:
    name: str
    devices: list[Device]
    notes: str = ""

    def __post_init__(self):
        validate_devices(self.devices)

    def device(self, alias: str) -> Device:
        for d in self.devices:
            if d.alias == alias:
                return d
        raise KeyError(alias)


def validate_devices(devices: list[Device]) -> None:
    """Check referential integrity, symmetry and acyclicity; raise ValidationError."""
    by_alias: dict[str, Device] = {}
    for d in devices:
        if d.alias in by_alias:
            raise ValidationError(f"duplicate alias: {d.alias}", alias=d.alias)
        by_alias[d.alias] = d

    for d in devices:
        refs = ([d.master] if d.master else []) + d.parents + d.children + d.alarms
        refs += [d.alarm_owner] if d.alarm_owner else []
        for ref in refs:
            if ref not in by_alias:
                raise ValidationError(
                    f"device {d.alias} references unknown alias {ref}", alias=d.alias
                )
        if d.device_type not in DEVICE_TYPES:
            raise ValidationError(
                f"device {d.alias} has unknown type {d.device_type}", alias=d.alias
            )

    # parent/child symmetry
    for d in devices:
        for p in d.parents:
            if d.alias not in by_alias[p].children:
                raise ValidationError(
                    f"{d.alias} lists parent {p} but {p} does not list it as child",
                    alias=d.alias,
                )
        for c in d.children:
            if d.alias not in by_alias[c].parents:
                raise ValidationError(
                    f"{d.alias} lists child {c} but {c} does not list it as parent",
                    alias=d.alias,
                )

    # acyclicity over the parent relation
    state: dict[str, int] = {}  # 0 = visiting, 1 = done

    def visit(alias: str, chain: list[str]) -> None:
        if state.get(alias) == 1:
            return
        if state.get(alias) == 0:
            raise ValidationError(
                f"hierarchy cycle through {alias}: {' -> '.join(chain + [alias])}",
                alias=alias,
            )
        state[alias] = 0
        for p in by_alias[alias].parents:
            visit(p, chain + [alias])
        state[alias] = 1

    for d in devices:
        visit(d.alias, [])
