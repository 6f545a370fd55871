import os
import sys
import tempfile

# keep test runs away from the user's cache directory
os.environ.setdefault("ORBITBOUND_CACHE", tempfile.mkdtemp(prefix="orbitbound-test-cache-"))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("tests.test_acceptance")
    lines = mod.summary_lines() if mod is not None else []
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
