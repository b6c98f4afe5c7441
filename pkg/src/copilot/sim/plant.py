"""Live plant state: scenario loading, reads, fault injection.

Single-writer / many-reader: loads and injections take the write path
under a lock, reads return values copied out under the same lock so a
reader never observes a half-applied injection.
"""

from __future__ import annotations

import json
import threading
from typing import Optional

from ..errors import UnknownAlias
from ..fixture_paths import fixtures_root
from .model import Device, Scenario
from .scenario_io import load_scenario

FAULT_KINDS = ("frontend_stale_counter", "device_off", "alarm_active", "clear")

# frontend status codes used by injections; semantics live in the
# fixtures/tables data and the documentation corpus
FRONTEND_OK = 0
FRONTEND_STALE_COUNTER = 10


def load_status_tables(root=None) -> dict:
    """Read the shipped status-code tables (fixtures/tables/*.json)."""
    root = root or fixtures_root()
    tables = {}
    for name in ("frontend_status", "device_status_bits"):
        with open(root / "tables" / f"{name}.json", encoding="utf-8") as fh:
            tables[name] = json.load(fh)
    return tables


class Plant:
    """In-memory device plant with snapshot reads and fault injection."""

    def __init__(self, scenario: Scenario, status_tables: Optional[dict] = None):
        self._lock = threading.RLock()
        self._tables = status_tables or load_status_tables()
        self._load(scenario)

    @classmethod
    def from_file(cls, path, status_tables: Optional[dict] = None) -> "Plant":
        return cls(load_scenario(path), status_tables=status_tables)

    def _load(self, scenario: Scenario) -> None:
        with self._lock:
            self.scenario_name = scenario.name
            self._devices = {d.alias: d.copy() for d in scenario.devices}
            self._baseline = {d.alias: d.copy() for d in scenario.devices}

    def load(self, scenario: Scenario) -> None:
        """Replace the whole plant atomically."""
        self._load(scenario)

    # --- reads ---

    def _get(self, alias: str) -> Device:
        d = self._devices.get(alias)
        if d is None:
            raise UnknownAlias(alias)
        return d

    def aliases(self) -> list[str]:
        with self._lock:
            return list(self._devices)

    def device(self, alias: str) -> Device:
        with self._lock:
            return self._get(alias).copy()

    def get_master(self, alias: str) -> Optional[str]:
        with self._lock:
            return self._get(alias).master

    def get_parents(self, alias: str) -> list[str]:
        with self._lock:
            return list(self._get(alias).parents)

    def get_children(self, alias: str) -> list[str]:
        with self._lock:
            return list(self._get(alias).children)

    def get_alarms(self, alias: str) -> list[str]:
        with self._lock:
            return list(self._get(alias).alarms)

    def get_frontend_status(self, alias: str) -> int:
        with self._lock:
            return self._get(alias).frontend_status_code

    def get_device_status(self, alias: str) -> int:
        with self._lock:
            return self._get(alias).device_status_bits

    def get_device_type(self, alias: str) -> str:
        with self._lock:
            return self._get(alias).device_type

    def snapshot(self) -> Scenario:
        """Consistent copy of the current plant as a Scenario."""
        with self._lock:
            return Scenario(
                name=self.scenario_name,
                devices=[d.copy() for d in self._devices.values()],
            )

    # --- fault injection ---

    def _bit(self, device_type: str, meaning: str) -> int:
        layout = self._tables["device_status_bits"][device_type]
        return 1 << layout[meaning]["bit"]

    def inject_fault(self, alias: str, fault: str) -> Device:
        if fault not in FAULT_KINDS:
            raise ValueError(f"unknown fault kind: {fault}")
        with self._lock:
            dev = self._get(alias)
            if fault == "frontend_stale_counter":
                dev.frontend_status_code = FRONTEND_STALE_COUNTER
            elif fault == "device_off":
                dev.device_status_bits &= ~self._bit(dev.device_type, "on")
            elif fault == "alarm_active":
                dev.device_status_bits |= self._bit(dev.device_type, "alarm")
                owner = dev.alarm_owner
                if owner and alias not in self._devices[owner].alarms:
                    self._devices[owner].alarms.append(alias)
            elif fault == "clear":
                base = self._baseline[alias]
                dev.frontend_status_code = base.frontend_status_code
                dev.device_status_bits = base.device_status_bits
                if dev.alarm_owner:
                    owner = self._devices[dev.alarm_owner]
                    owner.alarms = [
                        a
                        for a in owner.alarms
                        if a != alias or a in self._baseline[owner.alias].alarms
                    ]
            return dev.copy()
