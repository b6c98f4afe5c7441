"""Regenerate the shipped few-shot extraction examples (fixtures/fewshot)."""

from pathlib import Path

from copilot.extraction import (
    SymbolObservation,
    WidgetObservation,
    serialize_observation_xml,
)
from copilot.sim import Device, Glyph, Scenario, WidgetStyle, render_panel
from copilot.vision import segment_widget, upscale

EXAMPLES = [
    WidgetObservation(
        body_text="FSVE_001",
        body_color="green",
        top_left_symbol=SymbolObservation("O", "cyan"),
        bottom_right_symbol=SymbolObservation("M", "white"),
    ),
    WidgetObservation(
        body_text="FSVE_002",
        body_color="red",
        top_right_symbol=SymbolObservation("F", "red"),
    ),
    WidgetObservation(body_text="PCO_003", body_color="yellow",
                      bottom_left_symbol=SymbolObservation("W", "yellow")),
    WidgetObservation(body_text="PCO_004", body_color="grey"),
]


def style_from_observation(obs):
    def glyph(sym):
        return Glyph(sym.character, sym.color) if sym else None

    return WidgetStyle(
        body_color=obs.body_color,
        body_text=obs.body_text,
        top_left_symbol=glyph(obs.top_left_symbol),
        top_right_symbol=glyph(obs.top_right_symbol),
        bottom_left_symbol=glyph(obs.bottom_left_symbol),
        bottom_right_symbol=glyph(obs.bottom_right_symbol),
    )


def main():
    out = Path(__file__).resolve().parents[1] / "fixtures" / "fewshot"
    out.mkdir(parents=True, exist_ok=True)
    for i, obs in enumerate(EXAMPLES, start=1):
        dev = Device(alias=obs.body_text, position=(40, 40),
                     widget_style=style_from_observation(obs))
        panel = render_panel(Scenario(name="fewshot", devices=[dev]),
                             focus=dev.alias, size=(200, 260))
        widget = upscale(segment_widget(panel).image, 4)
        widget.save_png(out / f"{i:02d}.png")
        (out / f"{i:02d}.xml").write_text(
            serialize_observation_xml(obs) + "\n", encoding="utf-8"
        )
        print(f"wrote {i:02d}.png ({widget.width}x{widget.height})")


if __name__ == "__main__":
    main()
