"""
Zeta Module

This module provides the L-polynomial of a function field, reconstructed
from point counts, together with class numbers of the field and of its
constant field extensions.

L(t) = 1 + a_1 t + ... + a_2g t^2g = prod (1 - alpha_i t) is stored as exact
integers. The class number is h = L(1), and the class number of the constant
extension of degree n is h_n = prod (1 - alpha_i^n) = Res(t^n - 1, L(t)).
"""

import functools
import logging
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence

import numpy as np
from sympy import Matrix
from sympy.ntheory import n_order

from .exceptions import ZetaError
from .ffield import CurveModel, count_points

# Set up logging
logger = logging.getLogger(__name__)


def _newton_coefficients(power_sums: Sequence[int], count: int) -> List[int]:
    """
    Coefficients a_0..a_count of prod (1 - alpha_i t) from S_1..S_count.

    k a_k = -sum_{i=1..k} a_{k-i} S_i, evaluated over the rationals.

    Raises:
        ZetaError: If some a_k is not an integer
    """
    coeffs: List[Fraction] = [Fraction(1)]
    for k in range(1, count + 1):
        total = sum((coeffs[k - i] * power_sums[i - 1] for i in range(1, k + 1)), Fraction(0))
        a_k = -total / k
        if a_k.denominator != 1:
            raise ZetaError(f"non-integral L-polynomial coefficient a_{k} = {a_k}")
        coeffs.append(a_k)
    return [int(c) for c in coeffs]


class LPolynomial:
    """
    Integer numerator of the zeta function of a genus-g function field over F_q.
    """

    def __init__(self, q: int, genus: int, coeffs: Sequence[int],
                 counts: Sequence[int] = ()):
        """
        Args:
            q: Size of the constant field
            genus: Genus g
            coeffs: a_0, ..., a_2g
            counts: Point counts N_1, N_2, ... the polynomial was built from

        Raises:
            ZetaError: If the coefficients violate the functional equation
        """
        coeffs = tuple(int(a) for a in coeffs)
        if len(coeffs) != 2 * genus + 1 or coeffs[0] != 1:
            raise ZetaError(f"expected 2g + 1 = {2 * genus + 1} coefficients starting with 1")
        for i in range(genus + 1):
            if coeffs[2 * genus - i] != q ** (genus - i) * coeffs[i]:
                raise ZetaError("counts violate functional equation")
        self.q = q
        self.genus = genus
        self.coeffs = coeffs
        self.counts = tuple(counts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LPolynomial):
            return NotImplemented
        return (self.q, self.genus, self.coeffs) == (other.q, other.genus, other.coeffs)

    def __hash__(self) -> int:
        return hash((self.q, self.genus, self.coeffs))

    def __repr__(self) -> str:
        return f"LPolynomial(q={self.q}, genus={self.genus}, coeffs={list(self.coeffs)})"

    def __str__(self) -> str:
        terms = []
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if not mono:
                body = str(abs(a))
            elif abs(a) == 1:
                body = mono
            else:
                body = f"{abs(a)}{mono}"
            if not terms:
                terms.append(body if a > 0 else f"-{body}")
            else:
                terms.append(f"{'+' if a > 0 else '-'} {body}")
        return " ".join(terms)

    def evaluate(self, t):
        """L(t) for an int, Fraction, float or complex argument."""
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * t + a
        return acc

    def power_sums(self, count: int) -> List[int]:
        """S_1..S_count with S_k = sum alpha_i^k."""
        a = list(self.coeffs) + [0] * max(0, count - 2 * self.genus)
        sums: List[int] = []
        for k in range(1, count + 1):
            s = -k * a[k] - sum(a[i] * sums[k - i - 1] for i in range(1, k))
            sums.append(s)
        return sums

    def predicted_count(self, k: int) -> int:
        """N_k = q^k + 1 - S_k."""
        if k < 1:
            raise ZetaError(f"extension degree must be positive, got {k}")
        return self.q ** k + 1 - self.power_sums(k)[-1]

    def weil_bound_holds(self, k: int, count: int) -> bool:
        """|N_k - q^k - 1| <= 2 g q^(k/2), checked in integers."""
        deviation = count - self.q ** k - 1
        return deviation * deviation <= 4 * self.genus * self.genus * self.q ** k

    def base_change(self, n: int) -> "LPolynomial":
        """L-polynomial of the constant extension of degree n (S_k becomes S_kn)."""
        if n < 1:
            raise ZetaError(f"extension degree must be positive, got {n}")
        g = self.genus
        sums = self.power_sums(2 * g * n)
        coeffs = _newton_coefficients([sums[k * n - 1] for k in range(1, 2 * g + 1)], 2 * g)
        return LPolynomial(self.q ** n, g, coeffs)

    def reciprocal_roots(self) -> np.ndarray:
        """Floating-point alpha_i (roots of t^2g L(1/t))."""
        if self.genus == 0:
            return np.zeros(0, dtype=complex)
        return np.roots([float(a) for a in self.coeffs])

    def satisfies_riemann_hypothesis(self, tol: float = 1e-9) -> bool:
        """All |alpha_i| equal sqrt(q) up to tol (relative to sqrt(q))."""
        root_q = np.sqrt(float(self.q))
        moduli = np.abs(self.reciprocal_roots())
        return bool(np.all(np.abs(moduli - root_q) <= tol * max(1.0, root_q)))

    def to_dict(self) -> Dict:
        return {
            "q": self.q,
            "genus": self.genus,
            "coeffs": list(self.coeffs),
            "h": class_number(self),
        }


def lpoly_from_counts(q: int, genus: int, counts: Sequence[int]) -> LPolynomial:
    """
    Reconstruct L from N_1..N_g, checking any further counts supplied.

    Args:
        q: Size of the constant field
        genus: Genus g >= 0
        counts: N_1, N_2, ... with at least g entries

    Returns:
        The LPolynomial

    Raises:
        ZetaError: "counts violate functional equation" when a supplied count
            disagrees with the prediction or breaks the Weil bound
    """
    if genus < 0:
        raise ZetaError(f"genus must be non-negative, got {genus}")
    counts = [int(n) for n in counts]
    if len(counts) < genus:
        raise ZetaError(f"need {genus} point counts, got {len(counts)}")
    if genus == 0:
        lpoly = LPolynomial(q, 0, [1], counts)
    else:
        sums = [q ** k + 1 - counts[k - 1] for k in range(1, genus + 1)]
        low = _newton_coefficients(sums, genus)
        high = [q ** (genus - i) * low[i] for i in range(genus - 1, -1, -1)]
        lpoly = LPolynomial(q, genus, low + high, counts)
    for k, n_k in enumerate(counts, start=1):
        if not lpoly.weil_bound_holds(k, n_k) or lpoly.predicted_count(k) != n_k:
            raise ZetaError("counts violate functional equation")
    if class_number(lpoly) < 1:
        raise ZetaError("counts violate functional equation")
    logger.debug("Reconstructed L(t) = %s from %d counts", lpoly, len(counts))
    return lpoly


def class_number(lpoly: LPolynomial) -> int:
    """h = L(1)."""
    return sum(lpoly.coeffs)


def cyclotomic_degree(q: int, p: int) -> int:
    """
    Degree d_p of F_q(mu_p) over F_q: the multiplicative order of q mod p.

    Raises:
        ZetaError: If gcd(q, p) != 1
    """
    if p < 2:
        raise ZetaError(f"p must be >= 2, got {p}")
    if gcd(q, p) != 1:
        raise ZetaError("p equals the characteristic")
    return int(n_order(q % p, p))


def _sylvester_matrix(a: Sequence[int], b: Sequence[int]) -> Matrix:
    """Sylvester matrix of two integer polynomials given highest coefficient first."""
    m = len(a) - 1
    n = len(b) - 1
    size = m + n
    rows = []
    for shift in range(n):
        rows.append([0] * shift + list(a) + [0] * (size - shift - m - 1))
    for shift in range(m):
        rows.append([0] * shift + list(b) + [0] * (size - shift - n - 1))
    return Matrix(rows)


def resultant(a: Sequence[int], b: Sequence[int]) -> int:
    """
    Exact resultant of integer polynomials (highest coefficient first).
    """
    if len(a) == 1 and len(b) == 1:
        return 1
    if len(a) == 1:
        return int(a[0]) ** (len(b) - 1)
    if len(b) == 1:
        return int(b[0]) ** (len(a) - 1)
    return int(_sylvester_matrix(a, b).det(method="bareiss"))


def constant_extension_class_number(lpoly: LPolynomial, n: int) -> int:
    """
    h_n = Res(t^n - 1, L(t)) for the constant extension of degree n.

    Args:
        lpoly: L-polynomial of F
        n: Degree of the constant extension

    Returns:
        Class number of F_{q^n} F
    """
    if n < 1:
        raise ZetaError(f"extension degree must be positive, got {n}")
    if lpoly.genus == 0:
        return 1
    cyclic = [1] + [0] * (n - 1) + [-1]
    h_n = resultant(cyclic, list(reversed(lpoly.coeffs)))
    logger.debug("h_%d = %d for L(t) = %s", n, h_n, lpoly)
    return h_n


def class_number_table(lpoly: LPolynomial, degrees: Iterable[int]) -> Dict[int, int]:
    """h_n for each requested degree, keyed by n in ascending order."""
    return {n: constant_extension_class_number(lpoly, n) for n in sorted(set(degrees))}


@functools.lru_cache(maxsize=64)
def curve_lpolynomial(curve: CurveModel, point_budget: Optional[int] = None,
                      threads: int = 1) -> LPolynomial:
    """
    Count points and reconstruct the L-polynomial of the curve's function field.

    N_1..N_g are always counted; N_{g+1}..N_{2g} are counted as a self-check
    while q^k stays within the budget. Genus 0 has L(t) = 1 without counting;
    N_1 is counted only when q fits the budget.

    Raises:
        BudgetExceededError: If q^g exceeds the point budget
        ZetaError: If the counts are inconsistent
    """
    g = curve.genus
    if g == 0:
        counts = []
        if point_budget is None or curve.q <= point_budget:
            counts.append(count_points(curve, 1, point_budget, threads))
        logger.info("Point counts of %s: %s", curve, counts)
        return lpoly_from_counts(curve.q, 0, counts)
    counts = [count_points(curve, k, point_budget, threads) for k in range(1, g + 1)]
    for k in range(g + 1, 2 * g + 1):
        if point_budget is not None and curve.q ** k > point_budget:
            logger.info("Self-check stops at N_%d: q^%d exceeds the point budget", k - 1, k)
            break
        counts.append(count_points(curve, k, point_budget, threads))
    logger.info("Point counts of %s: %s", curve, counts)
    return lpoly_from_counts(curve.q, g, counts)
