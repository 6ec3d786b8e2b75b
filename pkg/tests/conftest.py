import sys
from pathlib import Path

import hypothesis.strategies as st
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from rrgl.partitions import Partition  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES = []


def partitions(max_part=8, max_len=8):
    return st.lists(st.integers(1, max_part), max_size=max_len).map(Partition.from_parts)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
