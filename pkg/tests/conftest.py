"""Shared fixtures for the hopfex test suite.

The zoo is built once per session; most objects cache their coradical
analysis on first use, so sharing instances keeps the suite fast.
"""

import pathlib
import sys

import pytest

sys.path.insert(0, str(pathlib.Path(__file__).parent))

from golden_defs import golden_objects

GOLDEN_DIR = pathlib.Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def zoo():
    """Dict of the full golden corpus, keyed by stem."""
    return {stem: build() for stem, build in golden_objects()}


@pytest.fixture(scope="session")
def golden_dir():
    return GOLDEN_DIR


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    mod = sys.modules.get("test_acceptance") or sys.modules.get(
        "tests.test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for num, desc, ok in sorted(mod.RESULTS):
        word = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"ACCEPTANCE {num:2d} {word}: {desc}")
