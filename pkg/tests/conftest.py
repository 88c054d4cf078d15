import json
from pathlib import Path

import pytest
from hypothesis import settings

from jonesone.laurent import parse

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

DATA = Path(__file__).parent / "data"


def knotinfo_jones_text(s: str) -> str:
    return s.replace(" ", "").replace("t^(", "t^").replace(")", "")


@pytest.fixture(scope="session")
def knotinfo_jones():
    """Jones polynomials as published by KnotInfo, keyed by knot name."""
    raw = json.loads((DATA / "knotinfo_jones_upto10.json").read_text())
    return {k: parse(knotinfo_jones_text(v), "t") for k, v in raw.items()}


def pytest_terminal_summary(terminalreporter):
    """Repeat the acceptance lines at the end of the run."""
    import sys

    mod = next((m for name, m in sys.modules.items() if name.endswith("test_acceptance")), None)
    results = getattr(mod, "RESULTS", {})
    if results:
        terminalreporter.section("acceptance criteria")
        for k in sorted(results):
            terminalreporter.write_line(results[k][1])
