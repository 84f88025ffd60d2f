import random

import pytest

from cliffqp.rings import GF2, GF3, GF4, GF5, QQ, ZZ

ALL_RINGS = (GF2, GF3, GF4, GF5, QQ, ZZ)
FIELDS = (GF2, GF3, GF4, GF5, QQ)
FINITE_RINGS = (GF2, GF3, GF4, GF5)
PALETTE = (GF2, GF3, GF4, QQ)  # the default verification palette


@pytest.fixture
def rng():
    return random.Random(12345)


def fresh_rng(tag: str) -> random.Random:
    return random.Random(f"test:{tag}")
