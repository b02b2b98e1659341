import pytest

from qlat import checks
from qlat.lattices import bw16_lattice, f4_lattice


@pytest.fixture(scope="session")
def bw16():
    return bw16_lattice()


@pytest.fixture(scope="session")
def f4():
    return f4_lattice()


@pytest.fixture(scope="session")
def bw16_shell():
    return checks.bw16_shell()


@pytest.fixture(scope="session")
def wf4_group():
    return checks.wf4_group()


@pytest.fixture(scope="session")
def pure512():
    return checks.pure512_group()


@pytest.fixture(scope="session")
def unit_matrices():
    return checks.unit_group_matrices()


_ACCEPTANCE_KEY = pytest.StashKey[list]()


@pytest.fixture
def acceptance(request):
    """Record one PASS/FAIL line for an acceptance criterion."""
    lines = request.config.stash.setdefault(_ACCEPTANCE_KEY, [])

    def record(number, name, ok, seconds, limit=None, detail=""):
        within = limit is None or seconds < limit
        status = "PASS" if ok and within else "FAIL"
        bound = "no time limit" if limit is None else f"limit {limit:g}s"
        line = f"{status} AC{number:<2} {name:18} {seconds:7.2f}s ({bound})  {detail}"
        lines.append(line)
        print(line)
        return ok and within

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1][2:])):
            terminalreporter.write_line(line)
