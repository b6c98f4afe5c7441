"""Plant model, scenario files, fault injection and the panel renderer."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from copilot.errors import ParseError, SizeTooSmall, UnknownAlias, ValidationError
from copilot.sim.model import Device, Glyph, Scenario, WidgetStyle, validate_devices
from copilot.sim.plant import FAULT_KINDS, Plant
from copilot.sim.render import render_panel, widget_border_rect, widget_position
from copilot.sim.scenario_io import parse_scenario

MINIMAL = """
scenario tiny
device SOLO_001
end
"""

ASYMMETRIC = """
device A_001
  children B_001
end
device B_001
end
"""

CYCLIC = """
device A_001
  parents B_001
  children B_001
end
device B_001
  parents A_001
  children A_001
end
"""


class TestScenarioParsing:
    def test_minimal_single_device(self):
        scn = parse_scenario(MINIMAL)
        assert scn.name == "tiny"
        assert len(scn.devices) == 1
        dev = scn.devices[0]
        assert dev.alias == "SOLO_001"
        assert dev.parents == [] and dev.children == [] and dev.alarms == []

    def test_symmetry_violation_rejected(self):
        with pytest.raises(ValidationError) as err:
            parse_scenario(ASYMMETRIC)
        assert "child" in str(err.value)

    def test_cycle_rejected(self):
        with pytest.raises(ValidationError) as err:
            parse_scenario(CYCLIC)
        assert "cycle" in str(err.value)

    def test_unknown_reference_rejected(self):
        with pytest.raises(ValidationError):
            parse_scenario("device A_001\n  master GHOST\nend\n")

    def test_duplicate_alias_rejected(self):
        with pytest.raises(ValidationError):
            parse_scenario("device A_001\nend\ndevice A_001\nend\n")

    def test_unterminated_block_rejected(self):
        with pytest.raises(ParseError):
            parse_scenario("device A_001\n  type ANADIG\n")

    def test_bad_integer_rejected(self):
        with pytest.raises(ParseError):
            parse_scenario("device A_001\n  frontend-status ten\nend\n")

    def test_status_literal_bases(self):
        scn = parse_scenario(
            "device A_001\n  device-status 0b0101\nend\n"
            "device B_001\n  device-status 0x1f\nend\n"
        )
        assert scn.device("A_001").device_status_bits == 0b0101
        assert scn.device("B_001").device_status_bits == 0x1F

    def test_demo_scenario_content(self, demo_scenario):
        assert len(demo_scenario.devices) >= 3
        assert demo_scenario.device("FSVE_015").frontend_status_code == 10
        style = demo_scenario.device("FSVE_013").widget_style
        assert style.body_color == "green"
        assert style.top_left_symbol == Glyph("O", "cyan")
        assert style.bottom_right_symbol == Glyph("M", "white")


class TestModelInvariants:
    def test_body_text_required(self):
        with pytest.raises(ValidationError):
            WidgetStyle(body_color="green", body_text="")

    def test_glyph_single_char(self):
        with pytest.raises(ValidationError):
            Glyph(character="OO", color="cyan")

    def test_style_defaults_to_alias(self):
        dev = Device(alias="X_001")
        assert dev.widget_style.body_text == "X_001"


class TestPlantReads:
    def test_master_present_and_absent(self, demo_plant):
        assert demo_plant.get_master("FSVE_013") == "PCO_001"
        assert demo_plant.get_master("PCO_001") is None

    def test_link_lists_keep_file_order(self, demo_plant):
        assert demo_plant.get_parents("FSVE_014") == ["PCO_001", "PCO_002"]
        assert demo_plant.get_children("PCO_001") == [
            "FSVE_013",
            "FSVE_014",
            "FSVE_015",
        ]

    def test_parent_child_symmetry_over_all_pairs(self, demo_plant):
        aliases = demo_plant.aliases()
        for a in aliases:
            for b in demo_plant.get_children(a):
                assert a in demo_plant.get_parents(b)
            for b in demo_plant.get_parents(a):
                assert a in demo_plant.get_children(b)

    def test_status_reads(self, demo_plant):
        assert demo_plant.get_frontend_status("FSVE_015") == 10
        assert demo_plant.get_frontend_status("FSVE_013") == 0
        assert demo_plant.get_device_type("FSVE_014") == "ANADIG"
        assert demo_plant.get_device_type("PCO_001") == "PCO"
        # on + manual bits
        assert demo_plant.get_device_status("FSVE_013") == 0b0011

    def test_unknown_alias(self, demo_plant):
        with pytest.raises(UnknownAlias):
            demo_plant.get_master("NOPE")

    def test_reads_return_copies(self, demo_plant):
        demo_plant.get_children("PCO_001").append("INTRUDER")
        assert "INTRUDER" not in demo_plant.get_children("PCO_001")


class TestFaultInjection:
    def test_stale_counter_sets_code_10(self, demo_plant):
        dev = demo_plant.inject_fault("FSVE_013", "frontend_stale_counter")
        assert dev.frontend_status_code == 10
        assert demo_plant.get_frontend_status("FSVE_013") == 10

    def test_injection_idempotent(self, demo_plant):
        first = demo_plant.inject_fault("FSVE_013", "frontend_stale_counter")
        second = demo_plant.inject_fault("FSVE_013", "frontend_stale_counter")
        assert first.frontend_status_code == second.frontend_status_code

    def test_device_off_clears_on_bit(self, demo_plant):
        dev = demo_plant.inject_fault("FSVE_013", "device_off")
        assert dev.device_status_bits & 0b1 == 0

    def test_alarm_appears_in_owner_list(self, demo_plant):
        assert "FSVE_013" not in demo_plant.get_alarms("PCO_001")
        demo_plant.inject_fault("FSVE_013", "alarm_active")
        assert "FSVE_013" in demo_plant.get_alarms("PCO_001")

    def test_clear_restores_baseline(self, demo_plant):
        baseline = {
            a: (
                demo_plant.get_frontend_status(a),
                demo_plant.get_device_status(a),
                demo_plant.get_alarms(a),
            )
            for a in demo_plant.aliases()
        }
        for fault in ("frontend_stale_counter", "device_off", "alarm_active"):
            demo_plant.inject_fault("FSVE_013", fault)
        demo_plant.inject_fault("FSVE_013", "clear")
        restored = {
            a: (
                demo_plant.get_frontend_status(a),
                demo_plant.get_device_status(a),
                demo_plant.get_alarms(a),
            )
            for a in demo_plant.aliases()
        }
        assert restored == baseline

    def test_invariants_hold_after_every_fault(self, demo_plant):
        for fault in FAULT_KINDS:
            demo_plant.inject_fault("FSVE_014", fault)
            validate_devices(demo_plant.snapshot().devices)

    def test_unknown_fault_kind(self, demo_plant):
        with pytest.raises(ValueError):
            demo_plant.inject_fault("FSVE_013", "gremlins")


@st.composite
def valid_device_lists(draw):
    """Random plants that respect symmetry and acyclicity by construction:
    parents always point at earlier devices."""
    n = draw(st.integers(min_value=1, max_value=8))
    aliases = [f"DEV_{i:03d}" for i in range(n)]
    devices = [Device(alias=a) for a in aliases]
    for i in range(1, n):
        for j in draw(
            st.lists(st.integers(min_value=0, max_value=i - 1), unique=True, max_size=3)
        ):
            devices[i].parents.append(aliases[j])
            devices[j].children.append(aliases[i])
        if draw(st.booleans()) and devices[i].parents:
            devices[i].master = devices[i].parents[0]
            devices[i].alarm_owner = devices[i].parents[0]
    return devices


@settings(max_examples=50, deadline=None)
@given(devices=valid_device_lists(), data=st.data())
def test_random_plants_stay_valid_under_injection(devices, data):
    plant = Plant(Scenario(name="prop", devices=devices))
    alias = data.draw(st.sampled_from(plant.aliases()))
    fault = data.draw(st.sampled_from(FAULT_KINDS))
    plant.inject_fault(alias, fault)
    validate_devices(plant.snapshot().devices)
    plant.inject_fault(alias, "clear")
    validate_devices(plant.snapshot().devices)


class TestRenderer:
    def test_determinism(self, demo_scenario):
        a = render_panel(demo_scenario, focus="FSVE_013")
        b = render_panel(demo_scenario, focus="FSVE_013")
        assert a.pixels == b.pixels

    def test_empty_scenario_is_uniform_grey(self):
        img = render_panel(Scenario(name="empty", devices=[]), size=(64, 64))
        arr = img.to_array()
        assert (arr == arr[0, 0]).all()

    def test_focus_draws_only_that_widget(self, demo_scenario):
        focused = render_panel(demo_scenario, focus="FSVE_013")
        full = render_panel(demo_scenario)
        assert focused.pixels != full.pixels

    def test_white_border_at_known_rect(self, demo_scenario):
        img = render_panel(demo_scenario, focus="FSVE_013").to_array()
        pos = widget_position(demo_scenario, "FSVE_013")
        x0, y0, x1, y1 = widget_border_rect(pos)
        assert tuple(img[y0, x0]) == (255, 255, 255)
        assert tuple(img[y1, x1]) == (255, 255, 255)
        # just outside the border: background
        assert tuple(img[y0 - 1, x0 - 1]) == (96, 96, 96)

    def test_size_too_small(self, demo_scenario):
        with pytest.raises(SizeTooSmall):
            render_panel(demo_scenario, size=(63, 600))

    def test_unknown_focus(self, demo_scenario):
        with pytest.raises(UnknownAlias):
            render_panel(demo_scenario, focus="NOPE")
