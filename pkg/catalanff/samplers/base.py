"""
Base Sampler Module

This module defines the base ElementSampler class that all samplers of
O_F element pairs must implement.
"""

from abc import ABC, abstractmethod
from typing import Iterator, Tuple

from ..exceptions import SearchError
from ..ffield import CurveModel, RingElement


class ElementSampler(ABC):
    """
    Abstract base class for producing pairs (f, g) of nonzero elements of O_F.

    Samplers are iterated with `suggest()` until `is_finished()`, or simply
    iterated over.
    """

    name = "base"

    def __init__(self, curve: CurveModel, bound: int):
        """
        Initialize the sampler.

        Args:
            curve: Curve model whose ring O_F is sampled
            bound: Largest pole order of a sampled element

        Raises:
            SearchError: If the bound is negative
        """
        if bound < 0:
            raise SearchError(f"pole-order bound must be non-negative, got {bound}")
        self.curve = curve
        self.bound = bound
        self.drawn = 0

    @abstractmethod
    def suggest(self) -> Tuple[RingElement, RingElement]:
        """
        Produce the next pair.

        Returns:
            Two nonzero elements with pole order <= bound
        """
        pass

    @abstractmethod
    def is_finished(self) -> bool:
        """True once the sampler has nothing more to offer."""
        pass

    def __iter__(self) -> Iterator[Tuple[RingElement, RingElement]]:
        while not self.is_finished():
            yield self.suggest()
