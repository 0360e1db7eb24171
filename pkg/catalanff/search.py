"""
Search Module

This module provides the partitioned engine behind catalan.search: the
enumeration of Y candidates shell by shell, the local m-th power sieve, the
two root-finding strategies and the optional process pool.

Work is split into units (s, prefix): all Y with pole order s whose leading
shell digits equal `prefix`. Units are numbered in (s, prefix) order and
results are merged by unit number, so the output does not depend on the
number of workers.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from math import gcd
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .exceptions import BudgetExceededError, SearchError
from .ffield import CurveModel, PoleOrderShell, RingElement, ring_mth_roots
from .gf import PrimePowerField, embedding_map, extension_field
from .polyarith import Polynomial

# Set up logging
logger = logging.getLogger(__name__)

SIEVE_POINTS = 48
SIEVE_FIELD_LIMIT = 4096

STRATEGIES = ("roots", "enumerate")

Pair = Tuple[RingElement, RingElement]


def evaluate_rhs(rhs: Polynomial, y: RingElement) -> RingElement:
    """rhs(Y) computed in O_F by Horner's rule."""
    acc = y.parent.zero()
    for c in reversed(rhs.coeffs):
        acc = acc * y + c
    return acc


class WorkUnit(NamedTuple):
    index: int
    s: int
    prefix: Tuple[int, ...]


class SieveLayer:
    """
    Affine points over one field L, with per-shell evaluation matrices.

    A candidate Y is described by the l-adic digits of its slot codes. Its
    value at every point, as a vector over F_l, is a linear function of those
    digits, so a whole block of candidates is evaluated by one matrix product.
    """

    def __init__(self, curve: CurveModel, field: PrimePowerField,
                 points: Sequence[Tuple[int, int]], rhs: Polynomial):
        self.curve = curve
        self.field = field
        self.points = list(points)
        ell = field.characteristic
        table = embedding_map(curve.base, field)
        self.basis = [table[ell ** t] for t in range(curve.base.degree)]
        self.rhs_codes = [table[c] for c in rhs.codes]
        self.weights = ell ** np.arange(field.degree, dtype=np.int64)
        self._matrices: Dict[int, np.ndarray] = {}

    def matrix(self, shell: PoleOrderShell) -> np.ndarray:
        if shell.s in self._matrices:
            return self._matrices[shell.s]
        field = self.field
        rows = []
        for i, k in shell.slots:
            monomials = [field.mul(field.pow(x0, k), field.pow(y0, i)) for x0, y0 in self.points]
            for b in self.basis:
                row: List[int] = []
                for value in monomials:
                    row.extend(field.code_to_vector(field.mul(b, value)))
                rows.append(row)
        matrix = np.array(rows, dtype=np.int64).reshape(len(rows), len(self.points) * field.degree)
        self._matrices[shell.s] = matrix
        return matrix

    def evaluate(self, shell: PoleOrderShell, expanded: np.ndarray) -> np.ndarray:
        """Codes of Y(P) for each candidate row and point."""
        ell = self.field.characteristic
        vectors = (expanded @ self.matrix(shell)) % ell
        vectors = vectors.reshape(len(expanded), len(self.points), self.field.degree)
        return vectors @ self.weights


class LocalSieve:
    """
    Rejects Y when rhs(Y)(P) is not an m-th power at some affine point P.

    Points are taken over the base field and then over its quadratic
    extension (when small enough), up to SIEVE_POINTS in all. Layers where
    every element is an m-th power are dropped. A solution X^m = rhs(Y)
    gives X(P)^m = rhs(Y)(P) at every point, so no solution is rejected.
    """

    def __init__(self, curve: CurveModel, rhs: Polynomial, m: int,
                 max_points: int = SIEVE_POINTS):
        self.curve = curve
        self.m = m
        self.layers: List[SieveLayer] = []
        base = curve.base
        remaining = max_points
        fields = [base]
        if base.cardinality ** 2 <= SIEVE_FIELD_LIMIT:
            fields.append(extension_field(base, 2))
        for field in fields:
            if gcd(m, field.cardinality - 1) == 1 or remaining <= 0:
                continue
            points = curve.affine_points(field)
            if field != base:
                image = set(embedding_map(base, field))
                points = [(x0, y0) for x0, y0 in points if not (x0 in image and y0 in image)]
            points = points[:remaining]
            if points:
                self.layers.append(SieveLayer(curve, field, points, rhs))
                remaining -= len(points)
        logger.debug("Sieve for m=%d uses %s", m,
                     [(repr(layer.field), len(layer.points)) for layer in self.layers])

    @property
    def active(self) -> bool:
        return bool(self.layers)

    def survivors(self, shell: PoleOrderShell, digits: np.ndarray) -> np.ndarray:
        """Boolean mask over the digit rows of candidates that pass every point."""
        n = len(digits)
        if not self.layers or n == 0:
            return np.ones(n, dtype=bool)
        base = self.curve.base
        ell = base.characteristic
        codes = digits.copy()
        codes[:, shell.leading_slot] += 1
        powers = ell ** np.arange(base.degree, dtype=np.int64)
        expanded = ((codes[:, :, None] // powers) % ell).reshape(n, -1)
        keep = np.arange(n)
        for layer in self.layers:
            if keep.size == 0:
                break
            values = layer.evaluate(shell, expanded[keep])
            rhs_values = layer.field.vec_horner(layer.rhs_codes, values)
            ok = layer.field.vec_is_nth_power(rhs_values, self.m).all(axis=1)
            keep = keep[ok]
        mask = np.zeros(n, dtype=bool)
        mask[keep] = True
        return mask


class SearchContext:
    """Everything a worker needs to process work units."""

    def __init__(self, curve: CurveModel, m: int, rhs: Polynomial,
                 strategy: str = "roots", use_sieve: bool = True):
        if strategy not in STRATEGIES:
            raise SearchError(f"unknown search strategy '{strategy}'")
        self.curve = curve
        self.m = m
        self.rhs = rhs
        self.strategy = strategy
        self.use_sieve = use_sieve
        self._sieve: Optional[LocalSieve] = None

    def __getstate__(self):
        return {"curve": self.curve, "m": self.m, "rhs": self.rhs,
                "strategy": self.strategy, "use_sieve": self.use_sieve}

    def __setstate__(self, state) -> None:
        self.__init__(**state)

    @property
    def key(self) -> Tuple:
        return (self.curve, self.m, self.rhs.codes, self.strategy, self.use_sieve)

    @property
    def sieve(self) -> Optional[LocalSieve]:
        if self.use_sieve and self._sieve is None:
            self._sieve = LocalSieve(self.curve, self.rhs, self.m)
        return self._sieve if self.use_sieve else None

    def target_order(self, s: int) -> int:
        return self.rhs.degree * s // self.m

    def solve(self, y: RingElement) -> Tuple[int, List[Pair]]:
        """All X with X^m = rhs(Y), and the number of X candidates examined."""
        r = evaluate_rhs(self.rhs, y)
        if self.strategy == "roots":
            return 0, [(x, y) for x in ring_mth_roots(r, self.m)]
        target = self.target_order(y.pole_order())
        shell = self.curve.shell(target)
        pairs = [(x, y) for x in shell.elements() if x ** self.m == r]
        return shell.size, pairs


class UnitResult(NamedTuple):
    index: int
    examined: int
    sieved: int
    pairs: List[Pair]


_CONTEXTS: Dict[Tuple, SearchContext] = {}


def run_unit(context: SearchContext, unit: WorkUnit) -> UnitResult:
    """Process one work unit (pure apart from the per-process sieve cache)."""
    context = _CONTEXTS.setdefault(context.key, context)
    shell = context.curve.shell(unit.s)
    digits = shell.digit_block(unit.prefix)
    sieve = context.sieve
    mask = sieve.survivors(shell, digits) if sieve is not None else np.ones(len(digits), bool)
    examined = len(digits)
    pairs: List[Pair] = []
    for row in digits[mask]:
        y = shell.element(row.tolist())
        extra, found = context.solve(y)
        examined += extra
        pairs.extend(found)
    return UnitResult(unit.index, examined, int(len(digits) - mask.sum()), pairs)


def _run_unit_star(args: Tuple[SearchContext, WorkUnit]) -> UnitResult:
    return run_unit(*args)


class SearchPlan:
    """
    The shells and work units of a search with pole-order bound B.

    Only shells s >= 1 with deg(rhs)*s = 0 mod m and deg(rhs)*s/m attained
    by some element of O_F can contain the Y of a non-constant solution.
    """

    def __init__(self, curve: CurveModel, m: int, rhs: Polynomial, bound: int,
                 strategy: str = "roots", chunk_size: int = 50_000):
        if bound < 0:
            raise SearchError(f"pole-order bound must be non-negative, got {bound}")
        self.curve = curve
        deg = rhs.degree
        self.shells = [s for s in curve.semigroup(bound)
                       if s >= 1 and (deg * s) % m == 0 and curve.in_semigroup(deg * s // m)]
        self.units: List[WorkUnit] = []
        for s in self.shells:
            for prefix in curve.shell(s).prefixes(chunk_size):
                self.units.append(WorkUnit(len(self.units), s, prefix))
        constant_pairs = curve.q * curve.q
        if strategy == "enumerate":
            self.candidate_count = constant_pairs + sum(
                curve.shell(s).size * (1 + curve.shell(deg * s // m).size) for s in self.shells)
        else:
            self.candidate_count = constant_pairs + sum(curve.shell(s).size for s in self.shells)

    def check_budget(self, budget: Optional[int]) -> None:
        if budget is not None and self.candidate_count > budget:
            raise BudgetExceededError("search candidate count", self.candidate_count, budget)


def constant_pairs(curve: CurveModel, m: int, rhs: Polynomial) -> List[Pair]:
    """Every (x, y) in kappa^2 with x^m = rhs(y), by a full double scan."""
    field = curve.base
    xs = np.arange(field.cardinality, dtype=np.int64)
    powers = field.vec_pow(xs, m)
    pairs = []
    for y in field.elements():
        r = rhs(y).code
        for x in np.flatnonzero(powers == r):
            pairs.append((curve.constant(field.from_code(int(x))), curve.constant(y)))
    return pairs


def run_search(curve: CurveModel, m: int, rhs: Polynomial, bound: int,
               strategy: str = "roots", use_sieve: bool = True, threads: int = 1,
               chunk_size: int = 50_000,
               budget: Optional[int] = None) -> Tuple[int, int, List[Pair]]:
    """
    Find every (X, Y) with X^m = rhs(Y), Y constant or d(Y) <= bound.

    Returns:
        (candidates examined, candidates rejected by the sieve, sorted pairs)

    Raises:
        BudgetExceededError: If the planned candidate count exceeds the budget
    """
    if rhs.degree < 1:
        raise SearchError("rhs must have degree >= 1")
    if threads < 1:
        raise SearchError(f"threads must be >= 1, got {threads}")
    plan = SearchPlan(curve, m, rhs, bound, strategy, chunk_size)
    plan.check_budget(budget)
    logger.info("Search plan: shells %s, %d work units, %d candidates, %d thread(s)",
                plan.shells, len(plan.units), plan.candidate_count, threads)

    pairs = constant_pairs(curve, m, rhs)
    examined = curve.q * curve.q
    sieved = 0

    context = SearchContext(curve, m, rhs, strategy, use_sieve)
    tasks = [(context, unit) for unit in plan.units]
    if threads > 1 and len(tasks) > 1:
        chunksize = max(1, len(tasks) // (4 * threads))
        with ProcessPoolExecutor(max_workers=threads) as executor:
            results = list(executor.map(_run_unit_star, tasks, chunksize=chunksize))
    else:
        results = [run_unit(context, unit) for unit in plan.units]
    _CONTEXTS.clear()

    for result in sorted(results, key=lambda r: r.index):
        examined += result.examined
        sieved += result.sieved
        pairs.extend(result.pairs)
    logger.info("Search done: %d examined, %d sieved out, %d solution(s)",
                examined, sieved, len(pairs))

    pairs.sort(key=lambda xy: (xy[1].sort_key(), xy[0].sort_key()))
    return examined, sieved, pairs
