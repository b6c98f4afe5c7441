"""Scenario file parsing.

Format: UTF-8 line-oriented text. Blank lines and `#` comments are
ignored. A plant is a sequence of device blocks:

    scenario fsve-demo
    note optional free text, may repeat

    device FSVE_013
      type ANADIG
      master PCO_001
      parents PCO_001
      children FSVE_101 FSVE_102
      alarms
      alarm-owner PCO_001
      frontend-status 0
      device-status 0b0011
      body-color green
      body-text FSVE_013
      symbol top-left O cyan
      symbol bottom-right M white
      position 100 120
    end

All per-device fields are optional except the `device <alias>` header and
the closing `end`. `device-status` accepts decimal, 0x... and 0b...
literals. Link lists keep file order.
"""

from __future__ import annotations

from pathlib import Path

from ..errors import ParseError
from .model import Device, Glyph, Scenario, WidgetStyle

_CORNER_KEYS = {
    "top-left": "top_left_symbol",
    "top-right": "top_right_symbol",
    "bottom-left": "bottom_left_symbol",
    "bottom-right": "bottom_right_symbol",
}


def _int_literal(text: str, lineno: int) -> int:
    try:
        return int(text, 0)
    except ValueError:
        raise ParseError(f"line {lineno}: bad integer literal {text!r}") from None


def parse_scenario(text: str, name: str = "unnamed") -> Scenario:
    devices: list[Device] = []
    notes: list[str] = []
    current: dict | None = None
    style: dict | None = None

    def finish(lineno: int) -> None:
        nonlocal current, style
        assert current is not None
        alias = current["alias"]
        if not style.get("body_text"):
            style["body_text"] = alias
        current["widget_style"] = WidgetStyle(**style)
        devices.append(Device(**current))
        current = None
        style = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        key, args = parts[0], parts[1:]

        if current is None:
            if key == "scenario" and args:
                name = args[0]
            elif key == "note":
                notes.append(" ".join(args))
            elif key == "device":
                if len(args) != 1:
                    raise ParseError(f"line {lineno}: device takes exactly one alias")
                current = {"alias": args[0]}
                style = {}
            else:
                raise ParseError(f"line {lineno}: unexpected {key!r} outside device block")
            continue

        if key == "end":
            finish(lineno)
        elif key == "type":
            current["device_type"] = args[0]
        elif key == "master":
            current["master"] = args[0] if args else None
        elif key in ("parents", "children", "alarms"):
            current[key] = list(args)
        elif key == "alarm-owner":
            current["alarm_owner"] = args[0] if args else None
        elif key == "frontend-status":
            current["frontend_status_code"] = _int_literal(args[0], lineno)
        elif key == "device-status":
            current["device_status_bits"] = _int_literal(args[0], lineno)
        elif key == "body-color":
            style["body_color"] = args[0]
        elif key == "body-text":
            style["body_text"] = " ".join(args)
        elif key == "symbol":
            if len(args) != 3 or args[0] not in _CORNER_KEYS:
                raise ParseError(
                    f"line {lineno}: expected 'symbol <corner> <char> <color>'"
                )
            style[_CORNER_KEYS[args[0]]] = Glyph(character=args[1], color=args[2])
        elif key == "position":
            current["position"] = (_int_literal(args[0], lineno), _int_literal(args[1], lineno))
        else:
            raise ParseError(f"line {lineno}: unknown device field {key!r}")

    if current is not None:
        raise ParseError("unterminated device block (missing 'end')")
    return Scenario(name=name, devices=devices, notes="\n".join(notes))


def load_scenario(path) -> Scenario:
    """Parse and validate a scenario file; ValidationError on bad links."""
    path = Path(path)
    if not path.is_file():
        raise ParseError(f"scenario file not found: {path}")
    return parse_scenario(path.read_text(encoding="utf-8"), name=path.stem)
