import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--regen-golden", action="store_true", default=False,
        help="rewrite golden CLI outputs instead of comparing against them")


@pytest.fixture
def regen_golden(request):
    return request.config.getoption("--regen-golden")


@pytest.fixture(autouse=True)
def _isolated_environment(monkeypatch):
    # Keep CLI runs hermetic: a user-level config file must not leak in.
    monkeypatch.delenv("CASIMIR_KIT_CONFIG", raising=False)
