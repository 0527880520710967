import pytest

from exotic_mtc import fusion, moddata


@pytest.fixture(scope="session")
def e6():
    return moddata.bundled("z_e6")


@pytest.fixture(scope="session")
def haag():
    return moddata.bundled("z_haagerup")


@pytest.fixture(scope="session")
def e6_ring(e6):
    return fusion.verlinde(e6)


@pytest.fixture(scope="session")
def haag_ring(haag):
    return fusion.verlinde(haag)


@pytest.fixture(scope="session")
def center():
    from exotic_mtc.center.data import load

    return load()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
