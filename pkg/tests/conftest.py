import pytest

from metriclie.examples import example_keys, get_example


@pytest.fixture(scope="session")
def bundled():
    return {key: get_example(key) for key in example_keys()}


def pytest_addoption(parser):
    parser.addoption("--quick", action="store_true",
                     help="shrink the big randomized sweeps")


@pytest.fixture(scope="session")
def quick(request):
    return request.config.getoption("--quick")
