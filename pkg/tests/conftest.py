import pytest

from pgmodular.ccalgebra import build_cc, structure_constants
from pgmodular.incidence import check_srd, gen_doily, gen_grid


class Instance:
    def __init__(self, name, D):
        self.name = name
        self.D = D
        self.params = check_srd(D)
        self.cc = build_cc(D, self.params)
        self.sc = structure_constants(self.cc)


_CACHE = {}


def instance(name: str) -> Instance:
    if name not in _CACHE:
        D = gen_doily() if name == "doily" else gen_grid(int(name.removeprefix("grid")))
        _CACHE[name] = Instance(name, D)
    return _CACHE[name]


@pytest.fixture(scope="session")
def doily():
    return instance("doily")


_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        name = report.nodeid.split("::")[-1]
        number = int(name.split("_")[2])
        _CRITERIA[number] = (name, "PASS" if report.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        name, verdict = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number:2d}: {verdict}  ({name})")
