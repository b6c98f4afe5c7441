"""Synthetic panel renderer.

Stands in for supervision-screen screenshots: grey background, each
widget an 80x140 body wrapped in a 1 px solid white boundary, with body
fill colour, centred body text and corner glyphs. Rendering is fully
deterministic: equal inputs give byte-identical images.
"""

from __future__ import annotations

from typing import Optional

from PIL import Image, ImageDraw, ImageFont

from ..errors import SizeTooSmall, UnknownAlias
from ..raster import RasterImage
from .model import Device, Scenario

BODY_W, BODY_H = 80, 140
BACKGROUND = (96, 96, 96)
BORDER = (255, 255, 255)

COLOR_RGB = {
    "green": (0, 190, 0),
    "red": (210, 30, 30),
    "yellow": (220, 210, 0),
    "grey": (150, 150, 150),
    "cyan": (0, 200, 200),
    "white": (240, 240, 240),
    "orange": (230, 140, 0),
    "blue": (50, 90, 220),
}

_FONT = ImageFont.load_default()


def widget_border_rect(position: tuple[int, int]) -> tuple[int, int, int, int]:
    """Outer white-boundary rectangle (x0, y0, x1, y1), inclusive, for a
    widget whose body top-left corner is at `position`."""
    x, y = position
    return (x - 1, y - 1, x + BODY_W, y + BODY_H)


def auto_position(index: int, size: tuple[int, int]) -> tuple[int, int]:
    """Deterministic grid placement for devices without a configured position."""
    margin = 24
    pitch_x, pitch_y = BODY_W + 2 * margin, BODY_H + 2 * margin
    cols = max(1, (size[0] - margin) // pitch_x)
    col, row = index % cols, index // cols
    return (margin + col * pitch_x, margin + row * pitch_y)


def _draw_widget(draw: ImageDraw.ImageDraw, dev: Device, pos: tuple[int, int]) -> None:
    x, y = pos
    style = dev.widget_style
    draw.rectangle(widget_border_rect(pos), outline=BORDER, width=1)
    draw.rectangle((x, y, x + BODY_W - 1, y + BODY_H - 1), fill=COLOR_RGB[style.body_color])

    text_color = (10, 10, 10)
    tw = draw.textlength(style.body_text, font=_FONT)
    draw.text((x + (BODY_W - tw) / 2, y + BODY_H / 2 - 5), style.body_text,
              fill=text_color, font=_FONT)

    inset = 4
    corners = {
        "top_left": (x + inset, y + inset),
        "top_right": (x + BODY_W - inset - 8, y + inset),
        "bottom_left": (x + inset, y + BODY_H - inset - 10),
        "bottom_right": (x + BODY_W - inset - 8, y + BODY_H - inset - 10),
    }
    for corner, at in corners.items():
        glyph = style.glyph(corner)
        if glyph is not None:
            draw.text(at, glyph.character, fill=COLOR_RGB[glyph.color], font=_FONT)


def render_panel(
    scenario: Scenario,
    focus: Optional[str] = None,
    size: tuple[int, int] = (800, 600),
) -> RasterImage:
    """Render the scenario's widgets; with `focus` only that widget is drawn."""
    if size[0] < 64 or size[1] < 64:
        raise SizeTooSmall(f"panel size must be at least 64x64, got {size[0]}x{size[1]}")
    if focus is not None and not any(d.alias == focus for d in scenario.devices):
        raise UnknownAlias(focus)

    img = Image.new("RGB", size, BACKGROUND)
    draw = ImageDraw.Draw(img)
    for i, dev in enumerate(scenario.devices):
        if focus is not None and dev.alias != focus:
            continue
        pos = dev.position if dev.position is not None else auto_position(i, size)
        _draw_widget(draw, dev, pos)
    return RasterImage.from_pil(img)


def widget_position(scenario: Scenario, alias: str, size: tuple[int, int] = (800, 600)):
    """Where render_panel placed the widget body; used by placement oracles."""
    for i, dev in enumerate(scenario.devices):
        if dev.alias == alias:
            return dev.position if dev.position is not None else auto_position(i, size)
    raise UnknownAlias(alias)
