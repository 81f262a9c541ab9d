import os
import sys
import tempfile
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))
os.environ.setdefault("FLAGORBITS_CACHE", tempfile.mkdtemp(prefix="flagorbits-cache-"))

@pytest.fixture(scope="session")
def sp6_report():
    from flagorbits.orbitlab.counterexample import counterexample_sp6

    t0 = time.time()
    rep = counterexample_sp6()
    rep.elapsed = time.time() - t0
    return rep


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
