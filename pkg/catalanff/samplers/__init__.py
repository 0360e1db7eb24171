"""
Samplers package for element pairs of O_F.

This package contains the pair samplers driving the pole-order identity checks.
"""

from .base import ElementSampler
from .exhaustive import ExhaustiveSampler
from .random_sampler import RandomSampler

# Define available samplers
AVAILABLE_SAMPLERS = {
    "grid": ExhaustiveSampler,
    "random": RandomSampler,
}

__all__ = [
    "ElementSampler",
    "ExhaustiveSampler",
    "RandomSampler",
    "AVAILABLE_SAMPLERS",
]
