"""
Function Field Module

This module realizes a global function field F by a superelliptic model
y^e = f(x) with gcd(e, l) = gcd(e, deg f) = 1 and f squarefree (or the
rational case e = 1). Such a model has a single place above x = infinity,
of degree 1, which plays the role of P_infinity.

The ring O_F of functions without poles outside P_infinity is
F_q[x] + F_q[x] y + ... + F_q[x] y^(e-1). Its monomials x^j y^i
(0 <= i < e) have pairwise distinct pole orders e*j + i*deg f, so every
element has a unique leading monomial and the pole-order map d is a
closed formula.

The constant field of the model is assumed to be the base field.
"""

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from math import gcd, prod
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .exceptions import BudgetExceededError, CurveModelError, CurveSpecError
from .gf import FieldElement, PrimePowerField, embedding_map, extension_field, parse_element
from .polyarith import Polynomial, is_squarefree, poly_mth_roots

# Set up logging
logger = logging.getLogger(__name__)

# Chunk of x-values evaluated at once by count_points.
POINT_CHUNK = 1 << 18


class CurveModel:
    """
    The function field F given by y^e = f(x) over the constant field `base`.
    """

    def __init__(self, base: PrimePowerField, e: int, f: Polynomial):
        """
        Initialize and validate the model.

        Args:
            base: Constant field kappa
            e: Exponent of y (e = 1 is the rational function field F_q(x))
            f: Right-hand side polynomial over base

        Raises:
            CurveModelError: If the model violates the superelliptic conditions
        """
        if not isinstance(e, int) or e < 1:
            raise CurveModelError(f"e must be a positive integer, got {e}")
        if f.field != base:
            raise CurveModelError("f must have coefficients in the base field")
        if f.is_zero():
            raise CurveModelError("f must be nonzero")
        if e >= 2:
            if gcd(e, base.characteristic) != 1:
                raise CurveModelError("wildly ramified model unsupported")
            if f.degree < 1 or gcd(e, f.degree) != 1:
                raise CurveModelError("no degree-1 infinite place guaranteed")
            if not is_squarefree(f):
                raise CurveModelError("singular model")
        self.base = base
        self.e = e
        self.f = f
        self.deg_f = f.degree
        self.genus = (e - 1) * (f.degree - 1) // 2 if e >= 2 else 0
        self._shells: Dict[int, "PoleOrderShell"] = {}
        self._monomials: Dict[int, "RingElement"] = {}

    @property
    def q(self) -> int:
        return self.base.cardinality

    @property
    def is_rational(self) -> bool:
        return self.e == 1

    @property
    def var(self) -> str:
        """Display name of the polynomial variable."""
        return "T" if self.is_rational else "x"

    @property
    def spec_string(self) -> str:
        return (f"char={self.base.characteristic};deg={self.base.degree};"
                f"e={self.e};f={self.f.to_string('x').replace(' ', '')}")

    def __repr__(self) -> str:
        return f"CurveModel({self.spec_string})"

    def __str__(self) -> str:
        if self.is_rational:
            return f"{self.base!r}(T)"
        return f"y^{self.e} = {self.f.to_string('x')} over {self.base!r}"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CurveModel):
            return NotImplemented
        return (self.base, self.e, self.f) == (other.base, other.e, other.f)

    def __hash__(self) -> int:
        return hash((self.base, self.e, self.f))

    def __getstate__(self):
        return {"base": self.base, "e": self.e, "f": self.f}

    def __setstate__(self, state) -> None:
        self.__init__(state["base"], state["e"], state["f"])

    # ------------------------------------------------------------------
    # Pole-order bookkeeping
    # ------------------------------------------------------------------

    def monomial_pole_order(self, i: int, j: int) -> int:
        """d(x^j y^i)."""
        return self.e * j + i * self.deg_f

    def decompose(self, s: int) -> Optional[Tuple[int, int]]:
        """
        The (i, j) with d(x^j y^i) = s, or None if no monomial has pole order s.
        """
        if s < 0:
            return None
        if self.e == 1:
            return (0, s)
        i = (s * pow(self.deg_f, -1, self.e)) % self.e
        rest = s - i * self.deg_f
        if rest < 0:
            return None
        return (i, rest // self.e)

    def in_semigroup(self, s: int) -> bool:
        return self.decompose(s) is not None

    def semigroup(self, bound: int) -> List[int]:
        """Pole orders 0 .. bound attained by elements of O_F."""
        return [s for s in range(bound + 1) if self.in_semigroup(s)]

    def monomial(self, s: int) -> Optional["RingElement"]:
        """The monomial x^j y^i of pole order s, or None."""
        if s in self._monomials:
            return self._monomials[s]
        ij = self.decompose(s)
        if ij is None:
            return None
        i, j = ij
        parts = [Polynomial.zero(self.base)] * self.e
        parts[i] = Polynomial.monomial(self.base, j)
        mono = RingElement(self, parts)
        self._monomials[s] = mono
        return mono

    def shell(self, s: int) -> "PoleOrderShell":
        if s not in self._shells:
            self._shells[s] = PoleOrderShell(self, s)
        return self._shells[s]

    # ------------------------------------------------------------------
    # Element constructors
    # ------------------------------------------------------------------

    def zero(self) -> "RingElement":
        return RingElement(self, [Polynomial.zero(self.base)] * self.e)

    def one(self) -> "RingElement":
        return self.constant(1)

    def constant(self, c) -> "RingElement":
        parts = [Polynomial.zero(self.base)] * self.e
        parts[0] = Polynomial.constant(self.base, c)
        return RingElement(self, parts)

    def from_polynomial(self, a: Polynomial, i: int = 0) -> "RingElement":
        """The element a(x) * y^i."""
        parts = [Polynomial.zero(self.base)] * self.e
        parts[i] = a
        return RingElement(self, parts)

    def x(self) -> "RingElement":
        return self.from_polynomial(Polynomial.variable(self.base))

    def y(self) -> "RingElement":
        if self.e == 1:
            return self.from_polynomial(self.f)
        return self.from_polynomial(Polynomial.one(self.base), 1)

    # ------------------------------------------------------------------
    # Geometry
    # ------------------------------------------------------------------

    def base_change(self, k: int) -> "CurveModel":
        """The same model over F_{q^k} (the constant field extension of degree k)."""
        target = extension_field(self.base, k)
        return CurveModel(target, self.e, self.f.change_field(target))

    def affine_points(self, field: Optional[PrimePowerField] = None) -> List[Tuple[int, int]]:
        """
        Affine points (x0, y0) as codes of `field` (default: the base field).
        """
        field = field or self.base
        f_codes = [embedding_map(self.base, field)[c] for c in self.f.codes]
        points = []
        for x0 in range(field.cardinality):
            acc = 0
            for c in reversed(f_codes):
                acc = field.add(field.mul(acc, x0), c)
            if self.e == 1:
                points.append((x0, acc))
                continue
            for y0 in field.nth_root_codes(acc, self.e):
                points.append((x0, y0))
        return points

    def random_element(self, bound: int, rng: np.random.RandomState,
                       nonzero: bool = True) -> "RingElement":
        """Random element with pole order <= bound: a random shell, then random digits."""
        orders = self.semigroup(bound)
        if not nonzero and rng.randint(0, len(orders) + 1) == 0:
            return self.zero()
        s = orders[rng.randint(0, len(orders))]
        shell = self.shell(s)
        digits = [int(rng.randint(0, r)) for r in shell.radices]
        return shell.element(digits)


def make_curve(base: PrimePowerField, e: int, f: Polynomial) -> CurveModel:
    """
    Build a validated curve model with its genus.

    Raises:
        CurveModelError: If gcd(e, deg f) != 1, f is not squarefree or l | e
    """
    curve = CurveModel(base, e, f)
    logger.debug("Curve %s has genus %d", curve, curve.genus)
    return curve


class RingElement:
    """The element a_0(x) + a_1(x) y + ... + a_{e-1}(x) y^(e-1) of O_F."""

    __slots__ = ("parent", "parts")

    def __init__(self, parent: CurveModel, parts: Sequence[Polynomial]):
        if len(parts) != parent.e:
            raise CurveModelError(f"expected {parent.e} parts, got {len(parts)}")
        self.parent = parent
        self.parts: Tuple[Polynomial, ...] = tuple(parts)

    def _check(self, other: "RingElement") -> None:
        if other.parent is not self.parent and other.parent != self.parent:
            raise CurveModelError("parent mismatch")

    def _coerce(self, other: object) -> Optional["RingElement"]:
        if isinstance(other, RingElement):
            self._check(other)
            return other
        if isinstance(other, (int, FieldElement)):
            return self.parent.constant(other)
        if isinstance(other, Polynomial):
            return self.parent.from_polynomial(other)
        return None

    def __add__(self, other: object) -> "RingElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RingElement(self.parent, [a + b for a, b in zip(self.parts, o.parts)])

    __radd__ = __add__

    def __neg__(self) -> "RingElement":
        return RingElement(self.parent, [-a for a in self.parts])

    def __sub__(self, other: object) -> "RingElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RingElement(self.parent, [a - b for a, b in zip(self.parts, o.parts)])

    def __rsub__(self, other: object) -> "RingElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> "RingElement":
        if isinstance(other, (int, FieldElement)):
            return RingElement(self.parent, [a * other for a in self.parts])
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        e = self.parent.e
        base = self.parent.base
        full = [Polynomial.zero(base)] * (2 * e - 1)
        for i, a in enumerate(self.parts):
            if a.is_zero():
                continue
            for j, b in enumerate(o.parts):
                if not b.is_zero():
                    full[i + j] = full[i + j] + a * b
        # y^e = f(x)
        for k in range(2 * e - 2, e - 1, -1):
            if not full[k].is_zero():
                full[k - e] = full[k - e] + full[k] * self.parent.f
        return RingElement(self.parent, full[:e])

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RingElement":
        if k < 0:
            raise CurveModelError("negative power in O_F")
        result = self.parent.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RingElement):
            return self.parent == other.parent and self.parts == other.parts
        if isinstance(other, (int, FieldElement)):
            return self == self.parent.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.parts)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.parts)

    def is_constant(self) -> bool:
        """True iff the element lies in kappa (zero included)."""
        return self.parts[0].degree <= 0 and all(a.is_zero() for a in self.parts[1:])

    def constant_value(self) -> FieldElement:
        if not self.is_constant():
            raise CurveModelError("element is not constant")
        return self.parts[0].coefficient(0)

    def pole_order(self) -> int:
        """
        d(g) = max over nonzero parts of e*deg a_i + i*deg f.

        Raises:
            CurveModelError: If g is zero
        """
        best = -1
        e, deg_f = self.parent.e, self.parent.deg_f
        for i, a in enumerate(self.parts):
            if a.codes:
                best = max(best, e * a.degree + i * deg_f)
        if best < 0:
            raise CurveModelError("pole order of zero undefined")
        return best

    def coefficient_at(self, s: int) -> FieldElement:
        """Coefficient of the monomial of pole order s (zero if there is none)."""
        ij = self.parent.decompose(s)
        if ij is None:
            return self.parent.base.zero
        i, j = ij
        return self.parts[i].coefficient(j)

    def leading_coefficient(self) -> FieldElement:
        return self.coefficient_at(self.pole_order())

    def evaluate(self, x0: FieldElement, y0: FieldElement) -> FieldElement:
        """Value at the affine point (x0, y0), possibly over an extension field."""
        acc = None
        power = None
        for a in self.parts:
            term = a(x0)
            if power is not None:
                term = term * power
                power = power * y0
            else:
                power = y0
            acc = term if acc is None else acc + term
        return acc

    def sort_key(self) -> Tuple:
        """Pole order, then the digits of the element in its pole-order shell."""
        if self.is_zero():
            return (-1, ())
        s = self.pole_order()
        return (s, self.parent.shell(s).digits(self))

    def __repr__(self) -> str:
        return f"RingElement({self})"

    def __str__(self) -> str:
        curve = self.parent
        if curve.is_rational:
            return self.parts[0].to_string("T")
        terms = []
        for i, a in enumerate(self.parts):
            if a.is_zero():
                continue
            body = a.to_string("x")
            if i == 0:
                terms.append(body)
                continue
            ypow = "y" if i == 1 else f"y^{i}"
            if a == 1:
                terms.append(ypow)
            elif sum(1 for c in a.codes if c) == 1:
                terms.append(f"{body}*{ypow}")
            else:
                terms.append(f"({body})*{ypow}")
        return " + ".join(terms) if terms else "0"


RING_OPS = ("add", "mul", "pow")


def ring_arith(op: str, *operands):
    """
    Dispatch add, mul or pow on elements of O_F.

    Raises:
        CurveModelError: On unknown op or parent mismatch
    """
    if op not in RING_OPS:
        raise CurveModelError(f"unknown ring operation '{op}'")
    g = operands[0]
    if not isinstance(g, RingElement):
        raise CurveModelError(f"'{op}' needs a ring element as first operand")
    if op == "add":
        return g + operands[1]
    if op == "mul":
        return g * operands[1]
    return g ** int(operands[1])


def pole_order(g: RingElement) -> int:
    """d(g) = -ord_{P_infinity}(g)."""
    return g.pole_order()


class PoleOrderShell:
    """
    The coefficient slots describing {g in O_F : d(g) = s}.

    A slot is a (part, power) pair. The dominant part i0 has exact degree j0
    and its leading coefficient is nonzero; every other part i is bounded by
    e*deg a_i + i*deg f < s. Elements are indexed by digit tuples in slot
    order (first slot most significant); the leading slot's digit d stands
    for the nonzero code d + 1.
    """

    def __init__(self, curve: CurveModel, s: int):
        ij = curve.decompose(s)
        if ij is None:
            raise CurveModelError(f"no element of O_F has pole order {s}")
        self.curve = curve
        self.s = s
        self.dominant = ij
        i0, j0 = ij
        q = curve.q
        slots: List[Tuple[int, int]] = []
        radices: List[int] = []
        for i in range(curve.e):
            if i == i0:
                top = j0
            else:
                top = (s - 1 - i * curve.deg_f) // curve.e if s - 1 - i * curve.deg_f >= 0 else -1
            for k in range(top, -1, -1):
                slots.append((i, k))
                radices.append(q - 1 if (i, k) == (i0, j0) else q)
        self.slots = slots
        self.radices = radices
        self.leading_slot = slots.index((i0, j0))
        self.size = prod(radices)

    def __len__(self) -> int:
        return self.size

    def codes_from_digits(self, digits: Sequence[int]) -> List[int]:
        codes = list(digits)
        codes[self.leading_slot] += 1
        return codes

    def element(self, digits: Sequence[int]) -> RingElement:
        curve = self.curve
        codes = self.codes_from_digits(digits)
        part_codes: List[List[int]] = [[] for _ in range(curve.e)]
        for (i, k), c in zip(self.slots, codes):
            row = part_codes[i]
            if len(row) <= k:
                row.extend([0] * (k + 1 - len(row)))
            row[k] = c
        return RingElement(curve, [Polynomial.from_codes(curve.base, row) for row in part_codes])

    def digits(self, g: RingElement) -> Tuple[int, ...]:
        digits = [g.parts[i].coefficient(k).code for (i, k) in self.slots]
        digits[self.leading_slot] -= 1
        return tuple(digits)

    def decode(self, index: int) -> RingElement:
        """The index-th element of the shell."""
        if not 0 <= index < self.size:
            raise CurveModelError(f"shell index {index} out of range")
        digits = []
        for r in reversed(self.radices):
            index, d = divmod(index, r)
            digits.append(d)
        return self.element(list(reversed(digits)))

    def elements(self, prefix: Sequence[int] = ()) -> Iterator[RingElement]:
        """Elements whose leading digits equal `prefix`, in shell order."""
        ranges = [range(r) for r in self.radices[len(prefix):]]
        for tail in itertools.product(*ranges):
            yield self.element(tuple(prefix) + tail)

    def digit_block(self, prefix: Sequence[int] = ()) -> np.ndarray:
        """All digit rows with the given prefix, as an (N, slots) int64 array."""
        tail_radices = self.radices[len(prefix):]
        n = prod(tail_radices)
        if tail_radices:
            tail = np.stack(np.unravel_index(np.arange(n, dtype=np.int64), tail_radices),
                            axis=1).astype(np.int64)
        else:
            tail = np.zeros((1, 0), dtype=np.int64)
        head = np.tile(np.asarray(prefix, dtype=np.int64), (n, 1)) if prefix else \
            np.zeros((n, 0), dtype=np.int64)
        return np.concatenate([head, tail], axis=1)

    def prefixes(self, chunk_size: int) -> List[Tuple[int, ...]]:
        """Shortest digit prefixes whose remaining blocks have at most chunk_size rows."""
        r = 0
        while r < len(self.radices) and prod(self.radices[r:]) > chunk_size:
            r += 1
        return list(itertools.product(*[range(x) for x in self.radices[:r]]))


def count_by_pole_order(curve: CurveModel, bound: int) -> int:
    """Number of nonzero g in O_F with d(g) <= bound."""
    return sum(curve.shell(s).size for s in curve.semigroup(bound))


def enumerate_by_pole_order(curve: CurveModel, bound: int) -> Iterator[RingElement]:
    """
    Every nonzero g with d(g) <= bound exactly once, by pole order then shell digits.
    """
    if bound < 0:
        return
    for s in curve.semigroup(bound):
        yield from curve.shell(s).elements()


def _count_affine_range(field: PrimePowerField, f_codes: Sequence[int], e: int,
                        start: int, stop: int) -> int:
    """Affine points with x0 in the code range [start, stop)."""
    fiber = gcd(e, field.cardinality - 1)
    xs = np.arange(start, stop, dtype=np.int64)
    values = field.vec_horner(f_codes, xs)
    zeros = int(np.count_nonzero(values == 0))
    residues = int(np.count_nonzero(field.vec_is_nth_power(values, e) & (values != 0)))
    return zeros + fiber * residues


def count_points(curve: CurveModel, k: int, budget: Optional[int] = None,
                 threads: int = 1) -> int:
    """
    N_k: affine solutions over F_{q^k} plus the single point at infinity.

    The x-range is split into chunks of POINT_CHUNK codes; with threads > 1
    the chunks are counted in worker processes and summed.

    Args:
        curve: Curve model
        k: Extension degree
        budget: Largest q^k that may be enumerated (None for no limit)
        threads: Worker processes

    Returns:
        Number of F_{q^k}-rational points of the smooth model

    Raises:
        BudgetExceededError: If q^k exceeds the budget
    """
    if k < 1:
        raise CurveModelError(f"extension degree must be positive, got {k}")
    size = curve.q ** k
    if budget is not None and size > budget:
        raise BudgetExceededError("extension too large", size, budget)
    field = extension_field(curve.base, k)
    table = embedding_map(curve.base, field)
    f_codes = [table[c] for c in curve.f.codes]
    starts = list(range(0, size, POINT_CHUNK))
    stops = [min(size, start + POINT_CHUNK) for start in starts]
    n = len(starts)
    if threads > 1 and n > 1:
        with ProcessPoolExecutor(max_workers=threads) as executor:
            partial = list(executor.map(_count_affine_range, [field] * n, [f_codes] * n,
                                        [curve.e] * n, starts, stops))
    else:
        partial = [_count_affine_range(field, f_codes, curve.e, a, b)
                   for a, b in zip(starts, stops)]
    affine = sum(partial)
    logger.debug("N_%d of %s = %d", k, curve, affine + 1)
    return affine + 1


# ----------------------------------------------------------------------
# m-th roots in O_F
# ----------------------------------------------------------------------

def _frobenius_root(w: RingElement) -> Optional[RingElement]:
    """The unique X with X^l = w, peeled from the top, or None."""
    curve = w.parent
    field = curve.base
    ell = field.characteristic
    root_exponent = ell ** (field.degree - 1)
    resid = w
    root = curve.zero()
    while not resid.is_zero():
        top = resid.pole_order()
        if top % ell:
            return None
        phi = curve.monomial(top // ell)
        if phi is None:
            return None
        phi_l = phi ** ell
        ratio = resid.coefficient_at(top) / phi_l.coefficient_at(top)
        c = ratio ** root_exponent
        root = root + phi * c
        resid = resid - phi_l * (c ** ell)
    return root


def _top_down_roots(r: RingElement, m: int) -> List[RingElement]:
    """All W with W^m = r for m prime to l (r nonzero)."""
    curve = r.parent
    top = r.pole_order()
    if top % m:
        return []
    d = top // m
    phi_d = curve.monomial(d)
    if phi_d is None:
        return []
    lam = (phi_d ** m).coefficient_at(top)
    lead_roots = (r.coefficient_at(top) / lam).nth_roots(m)
    if not lead_roots:
        return []
    c = lead_roots[0]
    partial = phi_d * c
    phi_pow = phi_d ** (m - 1)
    factor = c ** (m - 1) * m
    for s in range(d - 1, -1, -1):
        phi_s = curve.monomial(s)
        if phi_s is None:
            continue
        target = (m - 1) * d + s
        resid = r - partial ** m
        if resid.is_zero():
            break
        if resid.pole_order() > target:
            return []
        t = resid.coefficient_at(target)
        if t.is_zero():
            continue
        mu = (phi_pow * phi_s).coefficient_at(target)
        partial = partial + phi_s * (t / (factor * mu))
    if partial ** m != r:
        return []
    return [partial * omega for omega in curve.base.one.nth_roots(m)]


def ring_mth_roots(r: RingElement, m: int) -> List[RingElement]:
    """
    All X in O_F with X^m = r, sorted by sort_key.

    The rational case delegates to poly_mth_roots. Otherwise m = l^s * m'
    is handled by top-down extraction along the monomials of decreasing
    pole order for m', followed by s additive Frobenius peelings.
    """
    if m < 1:
        raise CurveModelError(f"root index must be positive, got {m}")
    curve = r.parent
    if r.is_zero():
        return [r]
    if curve.is_rational:
        return [curve.from_polynomial(h) for h in poly_mth_roots(r.parts[0], m)]
    ell = curve.base.characteristic
    m_prime, frob_steps = m, 0
    while m_prime % ell == 0:
        m_prime //= ell
        frob_steps += 1
    candidates = [r] if m_prime == 1 else _top_down_roots(r, m_prime)
    roots = []
    for w in candidates:
        x: Optional[RingElement] = w
        for _ in range(frob_steps):
            x = _frobenius_root(x)
            if x is None:
                break
        if x is not None and x ** m == r:
            roots.append(x)
    unique = {x.parts: x for x in roots}
    return sorted(unique.values(), key=RingElement.sort_key)


# ----------------------------------------------------------------------
# Textual syntax for ring elements
# ----------------------------------------------------------------------

def parse_ring_element(curve: CurveModel, text: str) -> RingElement:
    """
    Parse a sum of terms c*x^j*y^i (T is accepted for x, '*' is optional).

    Raises:
        CurveSpecError: With the position of the first offending character
    """
    field = curve.base
    n = len(text)
    pos = 0
    total = curve.zero()
    first = True

    def skip(i: int) -> int:
        while i < n and text[i].isspace():
            i += 1
        return i

    def read_int(i: int) -> Tuple[int, int]:
        end = i
        while end < n and text[end].isdigit():
            end += 1
        if end == i:
            raise CurveSpecError("expected integer", text, i)
        return int(text[i:end]), end

    pos = skip(pos)
    if pos >= n:
        raise CurveSpecError("empty element", text, pos)
    while pos < n:
        sign = 1
        if text[pos] in "+-":
            sign = -1 if text[pos] == "-" else 1
            pos = skip(pos + 1)
        elif not first:
            raise CurveSpecError("expected '+' or '-'", text, pos)
        coef = field.one
        seen = False
        if pos < n and text[pos] == "[":
            close = text.find("]", pos)
            if close < 0:
                raise CurveSpecError("unterminated element", text, pos)
            coef = parse_element(field, text[pos:close + 1])
            pos = skip(close + 1)
            seen = True
        elif pos < n and text[pos].isdigit():
            value, pos = read_int(pos)
            coef = field.element(value)
            pos = skip(pos)
            seen = True
        term = curve.constant(coef)
        while pos < n and (text[pos] == "*" or text[pos].isalpha()):
            if text[pos] == "*":
                pos = skip(pos + 1)
            if pos >= n or not text[pos].isalpha():
                raise CurveSpecError("expected variable", text, pos)
            name = text[pos]
            if name in ("x", "T"):
                factor = curve.x()
            elif name == "y":
                factor = curve.y()
            else:
                raise CurveSpecError(f"unknown variable '{name}'", text, pos)
            pos = skip(pos + 1)
            power = 1
            if pos < n and text[pos] == "^":
                power, pos = read_int(skip(pos + 1))
                pos = skip(pos)
            term = term * factor ** power
            seen = True
        if not seen:
            raise CurveSpecError("expected term", text, pos)
        total = total + term if sign > 0 else total - term
        first = False
    return total
