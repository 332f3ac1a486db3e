import sys


def pytest_terminal_summary(terminalreporter):
    """Print the acceptance lines collected by test_acceptance.py, if it ran."""
    for name, module in list(sys.modules.items()):
        if name.endswith("test_acceptance") and getattr(module, "RESULTS", None):
            terminalreporter.section("acceptance criteria")
            for line in module.RESULTS:
                terminalreporter.write_line(line)
