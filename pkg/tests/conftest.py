import random
import re

import pytest
from hypothesis import settings

settings.register_profile("suite", deadline=None, max_examples=80)
settings.load_profile("suite")

# filled by test_acceptance, shown after the test summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    def key(line):
        m = re.search(r"criterion (\d+)", line)
        return int(m.group(1)) if m else 0
    for line in sorted(ACCEPTANCE_LINES, key=key):
        terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return random.Random(20260825)
