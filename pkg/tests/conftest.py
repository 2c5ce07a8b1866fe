from qdyson.qring import QLaurentPoly


def qp(*coeffs, low=0):
    """Shorthand: qp(1, 0, 2) == 1 + 2*q^2; ``low`` sets the lowest exponent."""
    return QLaurentPoly(low, coeffs)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[num])
