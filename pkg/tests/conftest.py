import sys
from pathlib import Path

import pytest

# test helpers (reference.py, lemmas.py) live next to the tests
sys.path.insert(0, str(Path(__file__).parent))


def pytest_configure(config):
    config._acceptance_lines = []


@pytest.fixture
def report(request):
    """Record a one-line verdict for an acceptance criterion and echo it right away."""
    config = request.config
    tr = config.pluginmanager.get_plugin("terminalreporter")

    def emit(number: int, ok: bool, detail: str) -> None:
        line = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}: {detail}"
        config._acceptance_lines.append((number, line))
        print(line)
        if tr is not None:
            tr.write_line("")
            tr.write_line(line)

    return emit


def pytest_terminal_summary(terminalreporter, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
