"""Scenario runner, reports and algebra-spec files."""

from __future__ import annotations

from .report import Check, ScenarioReport
from .scenarios import SCENARIOS
from .specfile import algebra_from_dict, algebra_to_dict, load_algebra

__all__ = ["Check", "SCENARIOS", "ScenarioReport", "algebra_from_dict", "algebra_to_dict", "load_algebra"]
