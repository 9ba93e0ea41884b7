import pytest
from hypothesis import HealthCheck, settings

from evector import Digraph, generate

settings.register_profile(
    "default",
    max_examples=100,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

FIGURE1_ARCS = frozenset({(0, 2), (1, 2), (1, 3)})


@pytest.fixture
def figure1() -> Digraph:
    return generate('figure1')


@pytest.fixture
def path3() -> Digraph:
    return generate('path', n=3)


@pytest.fixture
def path4() -> Digraph:
    return generate('path', n=4)


@pytest.fixture
def total3() -> Digraph:
    return generate('total_order', n=3)


@pytest.fixture
def antichain3() -> Digraph:
    return generate('antichain', n=3)


@pytest.fixture
def s3() -> Digraph:
    return generate('standard_example', k=3)


@pytest.fixture
def write_instance(tmp_path):
    """Write instance text to a file and return its path as a string."""
    def _write(text: str, name: str = 'instance.txt') -> str:
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return _write
