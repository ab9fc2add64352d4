from functools import lru_cache

import pytest

from og4kit.families import GammaSymbols, double_cover_pair, gamma_pair, gamma_plus_pair, lex_cycle_pair


@lru_cache(maxsize=None)
def gamma(r, s, variant="G", orientation="con1"):
    return gamma_pair(r, s, variant, orientation)


@lru_cache(maxsize=None)
def gamma_plus(r, s, variant="G", orientation="con1"):
    return gamma_plus_pair(r, s, variant, orientation)


@lru_cache(maxsize=None)
def double(r, s):
    return double_cover_pair(r, s)


@lru_cache(maxsize=None)
def lex(r):
    return lex_cycle_pair(r)


@pytest.fixture
def g33():
    return gamma(3, 3)


@pytest.fixture
def sym33():
    return GammaSymbols(3, 3)
