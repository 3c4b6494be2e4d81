import pytest

from cliquelab import network_from_rows, paper_example

# Same network as the six-node example, with the {2,3,4} clique matrix beside it.
N_ROWS = (
    "100011",
    "011111",
    "011100",
    "011100",
    "110010",
    "110001",
)
Q_ROWS = (
    "100000",
    "011100",
    "011100",
    "011100",
    "000010",
    "000001",
)
M_FLAT = "100011011111011100011100110010110001"


@pytest.fixture
def M():
    return paper_example()


@pytest.fixture
def N():
    return network_from_rows(N_ROWS)


@pytest.fixture
def Q():
    return network_from_rows(Q_ROWS)


# -- acceptance summary --------------------------------------------------------

_acceptance: dict[int, tuple[str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        status = "PASS" if report.passed else "FAIL"
        _acceptance[number] = (status, title)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        status, title = _acceptance[number]
        terminalreporter.write_line(f"AC{number:02d} {status}  {title}")
