import pytest

from dunkl.groups import RootDatum
from dunkl.hc import HCAlgebra
from dunkl.osp import OspRealisation
from dunkl.tama import Tama


class Stack:
    """Shared lazily-built algebra stack per group configuration."""

    def __init__(self, *args, **kwargs):
        self.rd = RootDatum(*args, **kwargs)
        self._alg = None
        self._osp = None
        self._tama = None

    @property
    def alg(self):
        if self._alg is None:
            self._alg = HCAlgebra(self.rd)
        return self._alg

    @property
    def osp(self):
        if self._osp is None:
            self._osp = OspRealisation(self.alg)
        return self._osp

    @property
    def tama(self):
        if self._tama is None:
            self._tama = Tama(self.alg, self.osp)
        return self._tama


_STACKS = {}


def stack(*args, **kwargs):
    key = (args, tuple(sorted(kwargs.items())))
    if key not in _STACKS:
        _STACKS[key] = Stack(*args, **kwargs)
    return _STACKS[key]


@pytest.fixture(scope="session")
def a13():
    return stack("A1", 3, 3)


@pytest.fixture(scope="session")
def a14():
    return stack("A1", 4, 4)


@pytest.fixture(scope="session")
def s3():
    return stack("A", 2, 3)


@pytest.fixture(scope="session")
def s4():
    return stack("A", 3, 4)


@pytest.fixture(scope="session")
def b3():
    return stack("B", 3, 3)
