from .model import Device, Glyph, Scenario, WidgetStyle, validate_devices
from .plant import FAULT_KINDS, Plant, load_status_tables
from .render import render_panel, widget_border_rect, widget_position
from .scenario_io import load_scenario, parse_scenario

__all__ = [
    "Device",
    "Glyph",
    "Scenario",
    "WidgetStyle",
    "validate_devices",
    "Plant",
    "FAULT_KINDS",
    "load_status_tables",
    "render_panel",
    "widget_border_rect",
    "widget_position",
    "load_scenario",
    "parse_scenario",
]
