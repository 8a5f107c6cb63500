import pytest

from adlv.weyl import EAWGroup

_GROUPS: dict[str, EAWGroup] = {}


def get_group(config: str) -> EAWGroup:
    """Session-wide group cache; groups are immutable and share kernels."""
    if config not in _GROUPS:
        _GROUPS[config] = EAWGroup.from_config(config)
    return _GROUPS[config]


@pytest.fixture(scope="session")
def a1():
    return get_group("type=A1;lattice=coroot")


@pytest.fixture(scope="session")
def a1cw():
    return get_group("type=A1;lattice=coweight")


@pytest.fixture(scope="session")
def a2():
    return get_group("type=A2;lattice=coroot")


@pytest.fixture(scope="session")
def a2cw():
    return get_group("type=A2;lattice=coweight")


@pytest.fixture(scope="session")
def c2cw():
    return get_group("type=C2;lattice=coweight")


@pytest.fixture(scope="session")
def g2():
    return get_group("type=G2;lattice=coroot")
