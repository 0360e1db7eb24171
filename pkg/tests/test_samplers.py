"""
Tests for the element pair samplers.
"""

import pytest

from catalanff.exceptions import SearchError
from catalanff.ffield import make_curve
from catalanff.gf import make_field
from catalanff.polyarith import parse_polynomial
from catalanff.samplers import AVAILABLE_SAMPLERS, ExhaustiveSampler, RandomSampler


@pytest.fixture
def rational():
    f3 = make_field(3)
    return make_curve(f3, 1, parse_polynomial(f3, "x"))


@pytest.fixture
def elliptic():
    f5 = make_field(5)
    return make_curve(f5, 2, parse_polynomial(f5, "x^3 + x + 1"))


def test_registry():
    """Test the sampler names used by the lemmas command."""
    assert set(AVAILABLE_SAMPLERS) == {"grid", "random"}
    assert AVAILABLE_SAMPLERS["grid"].name == "grid"
    assert AVAILABLE_SAMPLERS["random"].name == "random"


def test_grid_covers_every_pair(rational):
    """Test the 8 nonzero elements of degree <= 1 give 64 distinct pairs."""
    sampler = ExhaustiveSampler(rational, 1)

    pairs = list(sampler)

    assert sampler.total == 64
    assert len({(f.parts, g.parts) for f, g in pairs}) == 64
    assert sampler.is_finished()


def test_grid_respects_cap(rational):
    """Test that max_pairs truncates the grid."""
    sampler = ExhaustiveSampler(rational, 2, max_pairs=10)

    assert len(list(sampler)) == 10
    with pytest.raises(StopIteration):
        sampler.suggest()


def test_random_sampler_is_reproducible(elliptic):
    """Test that equal seeds give equal pairs within the bound."""
    first = list(RandomSampler(elliptic, 6, num_samples=20, seed=7))
    second = list(RandomSampler(elliptic, 6, num_samples=20, seed=7))

    assert first == second
    assert len(first) == 20
    for f, g in first:
        assert not f.is_zero() and not g.is_zero()
        assert f.pole_order() <= 6 and g.pole_order() <= 6


def test_negative_bound_raises(elliptic):
    """Test that both samplers reject a negative bound."""
    with pytest.raises(SearchError):
        RandomSampler(elliptic, -1)
    with pytest.raises(SearchError):
        ExhaustiveSampler(elliptic, -2)
