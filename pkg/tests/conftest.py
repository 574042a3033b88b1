import random

import pytest

from sconf.superlie import build_osp, build_psl44, build_sl_super


@pytest.fixture(scope="session")
def sl42():
    return build_sl_super(4, 2)


@pytest.fixture(scope="session")
def sl43():
    return build_sl_super(4, 3)


@pytest.fixture(scope="session")
def psl44():
    return build_psl44()


@pytest.fixture(scope="session")
def osp24():
    return build_osp(2, 4)


@pytest.fixture
def rng():
    return random.Random(20260823)
