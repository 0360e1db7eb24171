"""
Random Sampler Module

This module implements seeded random sampling of element pairs.
"""

from typing import Optional, Tuple

import numpy as np

from ..ffield import CurveModel, RingElement
from .base import ElementSampler


class RandomSampler(ElementSampler):
    """
    Random pairs: a uniformly chosen pole order <= bound, then uniform digits.
    """

    name = "random"

    def __init__(self, curve: CurveModel, bound: int, num_samples: int = 1000,
                 seed: Optional[int] = None):
        """
        Args:
            curve: Curve model whose ring O_F is sampled
            bound: Largest pole order of a sampled element
            num_samples: Number of pairs to produce
            seed: Random seed for reproducibility
        """
        super().__init__(curve, bound)
        self.num_samples = num_samples
        self.seed = seed
        self.rng = np.random.RandomState(seed)

    def suggest(self) -> Tuple[RingElement, RingElement]:
        if self.is_finished():
            raise StopIteration("Random sampling complete")
        self.drawn += 1
        return (self.curve.random_element(self.bound, self.rng),
                self.curve.random_element(self.bound, self.rng))

    def is_finished(self) -> bool:
        return self.drawn >= self.num_samples
