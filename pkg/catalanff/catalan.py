"""
Catalan Module

This module provides the high-level operations on Catalan's equation
X^m - Y^n = 1 over the ring O_F of a function field F:

- check_theorem decides whether the class-number criterion rules out
  non-constant solutions for (F, m, n);
- search looks for solutions (also of X^m = f(Y)) with bounded pole order;
- counterexample builds the non-constant solutions that exist when the
  characteristic divides an exponent;
- verify_lemma2 and check_lemma1 exercise the two auxiliary facts the
  argument rests on.
"""

import itertools
import logging
import time
from math import gcd
from typing import Dict, List, Optional, Tuple

from sympy import isprime, primefactors

from .config import CatalanConfig
from .exceptions import SearchError
from .ffield import CurveModel, RingElement
from .gf import FieldElement, PrimePowerField
from .polyarith import Polynomial
from .results import LemmaReport, SearchReport, Solution, Status, TheoremVerdict
from .samplers import ElementSampler
from .search import evaluate_rhs, run_search
from .zeta import LPolynomial, constant_extension_class_number, curve_lpolynomial, cyclotomic_degree

# Set up logging
logger = logging.getLogger(__name__)


def h_label(p: int) -> str:
    return f"h(F(mu_{p}))"


class _ClassNumbers:
    """Lazily computed h(F(mu_p)), shared across the pairs of one check."""

    def __init__(self, curve: CurveModel, point_budget: Optional[int]):
        self.curve = curve
        self.point_budget = point_budget
        self._lpoly: Optional[LPolynomial] = None
        self.values: Dict[str, int] = {}

    @property
    def lpoly(self) -> LPolynomial:
        if self._lpoly is None:
            self._lpoly = curve_lpolynomial(self.curve, self.point_budget)
        return self._lpoly

    def __call__(self, p: int) -> int:
        label = h_label(p)
        if label not in self.values:
            degree = cyclotomic_degree(self.curve.q, p)
            self.values[label] = constant_extension_class_number(self.lpoly, degree)
            logger.debug("%s = %d (constant extension of degree %d)",
                         label, self.values[label], degree)
        return self.values[label]


def check_theorem(curve: CurveModel, m: int, n: int,
                  point_budget: Optional[int] = None) -> TheoremVerdict:
    """
    Decide whether some primes p | m, q | n satisfy the class-number criterion.

    Pairs are tried in ascending (p, q) order:
    (1) p != l and q != l (sufficient on its own when p == q);
    (2) q does not divide h(F(mu_p)) or p does not divide h(F(mu_q));
    (3) if q == 2, p != 2 and 2 | h(F(mu_p)), then p does not divide h(F(mu_4)).

    Args:
        curve: Curve model of F
        m: Exponent of X, > 1
        n: Exponent of Y, > 1
        point_budget: Largest field size enumerated while counting points

    Returns:
        TheoremVerdict with every h value computed along the way
    """
    if m < 2 or n < 2:
        raise SearchError(f"exponents must be > 1, got m={m}, n={n}")
    ell = curve.base.characteristic
    h = _ClassNumbers(curve, point_budget)
    pairs: List[Dict] = []
    passed_one = False
    conditions: Dict[str, Optional[bool]] = {"1": None, "2": None, "3": None}

    for p, q in itertools.product(primefactors(m), primefactors(n)):
        conditions = {"1": p != ell and q != ell, "2": None, "3": None}
        satisfied = False
        if conditions["1"]:
            passed_one = True
            if p == q:
                satisfied = True
            else:
                h_p, h_q = h(p), h(q)
                conditions["2"] = h_p % q != 0 or h_q % p != 0
                if q == 2 and p != 2 and h_p % 2 == 0:
                    conditions["3"] = h(4) % p != 0
                satisfied = conditions["2"] and conditions["3"] is not False
        logger.info("Pair (p, q) = (%d, %d): conditions %s -> %s", p, q, conditions,
                    "satisfied" if satisfied else "not satisfied")
        pairs.append({"p": p, "q": q, "condition_1": conditions["1"],
                      "condition_2": conditions["2"], "condition_3": conditions["3"],
                      "satisfied": satisfied})
        if satisfied:
            return TheoremVerdict(curve.spec_string, m, n, Status.THEOREM_APPLIES, p, q,
                                  h.values, conditions, pairs)

    status = Status.INCONCLUSIVE if passed_one else Status.CHAR_DIVIDES_BOTH_SIDES_IMPOSSIBLE
    return TheoremVerdict(curve.spec_string, m, n, status, None, None, h.values,
                          conditions, pairs)


def default_rhs(field: PrimePowerField, n: int) -> Polynomial:
    """Y^n + 1."""
    return Polynomial.monomial(field, n) + 1


def search(curve: CurveModel, m: int, n: int, bound: int,
           rhs: Optional[Polynomial] = None,
           config: Optional[CatalanConfig] = None,
           strategy: Optional[str] = None,
           threads: Optional[int] = None,
           use_sieve: Optional[bool] = None) -> SearchReport:
    """
    Find all solutions of X^m = rhs(Y) in O_F with Y constant or d(Y) <= bound.

    Constant pairs are scanned over all of kappa^2. A non-constant Y can only
    pair with some X when deg(rhs) * d(Y) = m * d(X), so only those pole
    orders are enumerated.

    Args:
        curve: Curve model of F
        m: Exponent of X, > 1
        n: Exponent of Y, > 1 (used for the default rhs Y^n + 1)
        bound: Largest pole order of a non-constant Y
        rhs: Right-hand side polynomial over kappa (default Y^n + 1)
        config: Budgets and search settings (defaults when None)
        strategy: Overrides config: "roots" or "enumerate"
        threads: Overrides config: worker processes
        use_sieve: Overrides config: local m-th power sieve

    Returns:
        SearchReport with solutions sorted by (d(Y), Y, X)

    Raises:
        BudgetExceededError: If the candidate count exceeds the search budget
        SearchError: If a reported pair fails re-verification
    """
    if m < 2 or n < 2:
        raise SearchError(f"exponents must be > 1, got m={m}, n={n}")
    config = config or CatalanConfig()
    rhs = rhs if rhs is not None else default_rhs(curve.base, n)
    if rhs.field != curve.base:
        raise SearchError("rhs must have coefficients in the constant field")
    strategy = strategy or config.strategy
    threads = threads or config.threads
    use_sieve = config.sieve if use_sieve is None else use_sieve

    start = time.perf_counter()
    examined, sieved, pairs = run_search(curve, m, rhs, bound, strategy, use_sieve, threads,
                                         config.chunk_size, config.search_budget)
    solutions = []
    for x, y in pairs:
        if x ** m != evaluate_rhs(rhs, y):
            raise SearchError(f"pair ({x}, {y}) failed re-verification")
        solutions.append(Solution.from_pair(x, y))
    elapsed = time.perf_counter() - start if config.timing else None

    return SearchReport(curve.spec_string, m, n, bound, rhs.to_string("Y"), examined,
                        solutions, elapsed, strategy, sieved)


def counterexample(curve: CurveModel, n: int, z: RingElement) -> Tuple[RingElement, RingElement]:
    """
    The solution X = 1 + z^n, Y = z^l of X^l - Y^n = 1.

    Raises:
        SearchError: If z is constant, n <= 1, l | n or the identity fails
    """
    ell = curve.base.characteristic
    if z.parent != curve:
        raise SearchError("witness does not belong to the curve's ring")
    if z.is_constant():
        raise SearchError("witness must be non-constant")
    if n < 2 or gcd(n, ell) != 1:
        raise SearchError(f"n must be > 1 and prime to the characteristic {ell}, got {n}")
    x = z ** n + 1
    y = z ** ell
    if x ** ell - y ** n != 1:
        raise SearchError("counterexample failed verification")
    return x, y


def _lemma2_polynomial(field: PrimePowerField, p: int, c1: FieldElement,
                       c2: FieldElement) -> Polynomial:
    """(z + c1)^p - z^p - c2."""
    z = Polynomial.variable(field)
    return (z + c1) ** p - z ** p - c2


def _lemma2_arguments(field: PrimePowerField, p: int, c1, c2) -> Tuple[FieldElement, FieldElement]:
    if p < 2 or not isprime(p):
        raise SearchError(f"p must be a prime, got {p}")
    if p == field.characteristic:
        raise SearchError("p equals the characteristic")
    c1, c2 = field.element(c1), field.element(c2)
    if c1.is_zero() or c2.is_zero():
        raise SearchError("c1 and c2 must be nonzero")
    return c1, c2


def lemma2_constant_solutions(field: PrimePowerField, p: int, c1, c2) -> List[FieldElement]:
    """All z in K with (z + c1)^p - z^p = c2, ascending by code."""
    c1, c2 = _lemma2_arguments(field, p, c1, c2)
    poly = _lemma2_polynomial(field, p, c1, c2)
    return [z for z in field.elements() if poly(z).is_zero()]


def verify_lemma2(field: PrimePowerField, p: int, c1, c2, degree_bound: int,
                  spot_check_budget: Optional[int] = None) -> bool:
    """
    True iff no polynomial Y over K of degree 1..D solves (Y + c1)^p - Y^p = c2.

    The equation says P(Y) = 0 for P(z) = (z + c1)^p - z^p - c2, which has
    degree p - 1 and leading coefficient p*c1, so deg P(Y) = (p - 1) deg Y > 0
    for every non-constant Y. This is checked on P directly; in addition every
    non-constant Y of degree <= D is substituted while the number of such Y
    stays within `spot_check_budget`.

    Raises:
        SearchError: If p is not a prime other than the characteristic, or c1 or c2 is zero
    """
    c1, c2 = _lemma2_arguments(field, p, c1, c2)
    poly = _lemma2_polynomial(field, p, c1, c2)
    if poly.degree != p - 1 or poly.leading_coefficient != c1 * p:
        logger.warning("Unexpected shape of (Y + c1)^p - Y^p - c2: %s", poly)
        return False
    constants = lemma2_constant_solutions(field, p, c1, c2)
    logger.debug("Constant solutions: %s", [str(z) for z in constants])

    q = field.cardinality
    spot_degree = 0
    for d in range(1, degree_bound + 1):
        if spot_check_budget is not None and (q - 1) * q ** d > spot_check_budget:
            break
        spot_degree = d
    for d in range(1, spot_degree + 1):
        for lead in range(1, q):
            for tail in itertools.product(range(q), repeat=d):
                y = Polynomial.from_codes(field, list(reversed(tail)) + [lead])
                if poly.compose(y).is_zero():
                    logger.warning("Non-constant solution Y = %s", y)
                    return False
    return True


def check_lemma1(curve: CurveModel, sampler: ElementSampler) -> LemmaReport:
    """
    Check the pole-order identities on every pair the sampler produces.

    For nonzero f, g: d(fg) = d(f) + d(g); d(f + g) = d(g) when d(f) < d(g);
    d(f) = 0 exactly when f is constant.
    """
    failures: List[str] = []
    checked = 0
    for f, g in sampler:
        checked += 1
        df, dg = f.pole_order(), g.pole_order()
        if (f * g).pole_order() != df + dg:
            failures.append(f"d(fg) != d(f) + d(g) for f = {f}, g = {g}")
        if df != dg:
            low, high = (f, g) if df < dg else (g, f)
            if (low + high).pole_order() != max(df, dg):
                failures.append(f"d(f + g) != d(g) for f = {low}, g = {high}")
        for h, dh in ((f, df), (g, dg)):
            if (dh == 0) != h.is_constant():
                failures.append(f"d = 0 does not match constancy for {h}")
    logger.info("Checked %d pairs with the %s sampler, %d failure(s)",
                checked, sampler.name, len(failures))
    return LemmaReport(curve.spec_string, sampler.name, checked, failures)
