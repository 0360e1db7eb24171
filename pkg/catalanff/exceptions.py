"""
Exceptions Module for catalanff.

This module provides custom exceptions for catalanff.
"""

from typing import Optional


class CatalanError(Exception):
    """Base class for all catalanff exceptions."""
    pass

class FieldError(CatalanError):
    """Error in finite field construction or arithmetic."""
    pass

class PolynomialError(CatalanError):
    """Error in univariate polynomial arithmetic."""
    pass

class CurveModelError(CatalanError):
    """Error in a curve model or in its ring of integers."""
    pass

class ZetaError(CatalanError):
    """Error while reconstructing an L-polynomial or a class number."""
    pass

class SearchError(CatalanError):
    """Error during theorem checking, search or witness construction."""
    pass

class ConfigurationError(CatalanError):
    """Error in configuration."""
    pass


class BudgetExceededError(CatalanError):
    """An enumeration would exceed its configured budget."""

    def __init__(self, message: str, count: int, budget: int):
        super().__init__(f"{message} ({count} > budget {budget})")
        self.count = count
        self.budget = budget


class CurveSpecError(CatalanError):
    """Syntax error in a curve spec, polynomial or element string."""

    def __init__(self, message: str, text: str = "", position: Optional[int] = None):
        self.text = text
        self.position = position
        self.reason = message
        if position is not None and text:
            message = f"{message} at position {position}\n  {text}\n  {' ' * position}^"
        super().__init__(message)
