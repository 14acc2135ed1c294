import os
import sys

from hypothesis import settings

# test builds re-check every elementary reduction step
os.environ.setdefault("DIFFGALOIS_DEBUG", "1")
sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", deadline=None, derandomize=True)
settings.load_profile("default")


def pytest_terminal_summary(terminalreporter):
    gate = sys.modules.get("test_acceptance")
    if gate is not None and gate.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in gate.RESULTS:
            terminalreporter.write_line(line)
