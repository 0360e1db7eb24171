"""
Exhaustive Sampler Module

This module implements the grid sampler: every ordered pair of nonzero
elements of pole order <= bound, in enumeration order, up to a cap.
"""

import itertools
import logging
from typing import Optional, Tuple

from ..ffield import CurveModel, RingElement, count_by_pole_order, enumerate_by_pole_order
from .base import ElementSampler

logger = logging.getLogger(__name__)


class ExhaustiveSampler(ElementSampler):
    """Grid over all pairs of elements ordered by pole order."""

    name = "grid"

    def __init__(self, curve: CurveModel, bound: int, max_pairs: Optional[int] = None):
        super().__init__(curve, bound)
        size = count_by_pole_order(curve, bound)
        self.total = size * size if max_pairs is None else min(size * size, max_pairs)
        elements = list(enumerate_by_pole_order(curve, bound))
        self._pairs = itertools.product(elements, repeat=2)
        logger.debug("Grid sampler over %d elements, %d pairs", size, self.total)

    def suggest(self) -> Tuple[RingElement, RingElement]:
        if self.is_finished():
            raise StopIteration("Grid exhausted")
        self.drawn += 1
        return next(self._pairs)

    def is_finished(self) -> bool:
        return self.drawn >= self.total
