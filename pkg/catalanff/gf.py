"""
Finite Field Module

This module provides exact arithmetic in finite fields F_{l^a} and their
extensions, including the roots of unity needed for the constant field
extensions F(mu_p).

Elements are stored as integer codes: the coefficient vector
(c_0, ..., c_{a-1}) of an element with respect to the power basis of the
canonical modulus is encoded as c_0 + c_1 l + ... + c_{a-1} l^{a-1}.
Counting codes upward is the odometer enumeration of the field, and the
codes 0 .. l-1 are exactly the prime subfield.
"""

import functools
import itertools
import logging
import re
from math import gcd
from typing import Iterator, List, Sequence, Tuple, Union

import numpy as np
from sympy import factorint, isprime
from sympy.ntheory import nthroot_mod

from .exceptions import CurveSpecError, FieldError

# Set up logging
logger = logging.getLogger(__name__)

# Largest field for which log/exp tables are built.
MAX_TABLE_SIZE = 1 << 23

ElementLike = Union["FieldElement", int]


class PrimePowerField:
    """
    The finite field F_q with q = l^a, presented as F_l[T]/(modulus).

    Instances are obtained through make_field(), which caches them, so the
    same (l, a) always yields the identical object and modulus.

    Extension-field arithmetic runs on log/exp tables, built on first use
    and limited to MAX_TABLE_SIZE elements. Prime fields above the limit
    fall back to modular arithmetic; larger extension fields raise
    FieldError from any operation that needs the tables.
    """

    def __init__(self, characteristic: int, degree: int, modulus: Tuple[int, ...]):
        """
        Initialize the field description.

        Args:
            characteristic: Prime l
            degree: Extension degree a over F_l
            modulus: Monic degree-a modulus over Z/l, constant term first
        """
        self.characteristic = characteristic
        self.degree = degree
        self.modulus = tuple(modulus)
        self.cardinality = characteristic ** degree
        self._exp: List[int] = []
        self._log: List[int] = []
        self._zech: List[int] = []
        self._np_exp = None
        self._np_log = None
        self._np_zech = None
        self._generator_code = None

    @property
    def q(self) -> int:
        return self.cardinality

    @property
    def is_prime_field(self) -> bool:
        return self.degree == 1

    def __repr__(self) -> str:
        if self.is_prime_field:
            return f"GF({self.characteristic})"
        return f"GF({self.characteristic}^{self.degree})"

    def __reduce__(self):
        return (make_field, (self.characteristic, self.degree))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PrimePowerField):
            return NotImplemented
        return (self.characteristic, self.degree) == (other.characteristic, other.degree)

    def __hash__(self) -> int:
        return hash((self.characteristic, self.degree))

    # ------------------------------------------------------------------
    # Code <-> vector conversion and the slow vector arithmetic used to
    # bootstrap the tables
    # ------------------------------------------------------------------

    def code_to_vector(self, code: int) -> Tuple[int, ...]:
        ell = self.characteristic
        digits = []
        for _ in range(self.degree):
            code, digit = divmod(code, ell)
            digits.append(digit)
        return tuple(digits)

    def vector_to_code(self, vector: Sequence[int]) -> int:
        if len(vector) > self.degree:
            raise FieldError(f"coefficient vector longer than extension degree {self.degree}")
        ell = self.characteristic
        code = 0
        for digit in reversed(vector):
            code = code * ell + digit % ell
        return code

    def _vector_mul(self, u: Sequence[int], v: Sequence[int]) -> List[int]:
        ell, a = self.characteristic, self.degree
        prod = [0] * (2 * a - 1)
        for i, ui in enumerate(u):
            if ui:
                for j, vj in enumerate(v):
                    prod[i + j] = (prod[i + j] + ui * vj) % ell
        # reduce by the monic modulus
        for k in range(len(prod) - 1, a - 1, -1):
            c = prod[k]
            if c:
                for i in range(a):
                    prod[k - a + i] = (prod[k - a + i] - c * self.modulus[i]) % ell
                prod[k] = 0
        return prod[:a]

    def _vector_pow(self, u: Sequence[int], k: int) -> List[int]:
        result = [1] + [0] * (self.degree - 1)
        base = list(u)
        while k:
            if k & 1:
                result = self._vector_mul(result, base)
            base = self._vector_mul(base, base)
            k >>= 1
        return result

    def _multiplication_matrix(self, u: Sequence[int]) -> np.ndarray:
        """Matrix M with (row vector v) @ M = v * u."""
        rows = []
        basis = [0] * self.degree
        for i in range(self.degree):
            basis[i] = 1
            rows.append(self._vector_mul(basis, u))
            basis[i] = 0
        return np.array(rows, dtype=np.int64)

    def _find_generator_vector(self) -> List[int]:
        order = self.cardinality - 1
        prime_divisors = list(factorint(order)) if order > 1 else []
        one = [1] + [0] * (self.degree - 1)
        for code in range(1, self.cardinality):
            vec = list(self.code_to_vector(code))
            if all(self._vector_pow(vec, order // r) != one for r in prime_divisors):
                return vec
        raise FieldError(f"no primitive element found in {self!r}")  # unreachable for a field

    def _build_tables(self) -> None:
        q = self.cardinality
        if q > MAX_TABLE_SIZE:
            raise FieldError(f"field of size {q} exceeds table limit {MAX_TABLE_SIZE}")
        ell, a = self.characteristic, self.degree
        generator = self._find_generator_vector()
        logger.debug("Building log tables for %r (generator %s)", self, generator)

        # exp vectors g^0 .. g^(q-2) by doubling: block [k, 2k) = block [0, k) * g^k
        order = q - 1
        vectors = np.zeros((order, a), dtype=np.int64)
        vectors[0, 0] = 1
        filled = 1
        step = np.array(self._multiplication_matrix(generator), dtype=np.int64)
        while filled < order:
            take = min(filled, order - filled)
            vectors[filled:filled + take] = (vectors[:take] @ step) % ell
            filled += take
            step = (step @ step) % ell
        weights = ell ** np.arange(a, dtype=np.int64)
        exp = vectors @ weights
        log = np.full(q, -1, dtype=np.int64)
        log[exp] = np.arange(order, dtype=np.int64)

        # zech[k] = log(1 + g^k), -1 where 1 + g^k = 0
        shifted = vectors.copy()
        shifted[:, 0] = (shifted[:, 0] + 1) % ell
        zech = log[shifted @ weights]

        self._np_exp, self._np_log, self._np_zech = exp, log, zech
        self._exp, self._log, self._zech = exp.tolist(), log.tolist(), zech.tolist()
        self._generator_code = int(exp[1]) if order > 1 else 1

    def _tables(self) -> None:
        if not self._exp:
            self._build_tables()

    @property
    def _table_free(self) -> bool:
        """Prime field too large for tables."""
        return self.degree == 1 and self.cardinality > MAX_TABLE_SIZE

    # ------------------------------------------------------------------
    # Scalar arithmetic on codes
    # ------------------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.degree == 1:
            return (a + b) % self.characteristic
        if a == 0:
            return b
        if b == 0:
            return a
        self._tables()
        la, lb = self._log[a], self._log[b]
        z = self._zech[(lb - la) % (self.cardinality - 1)]
        if z < 0:
            return 0
        return self._exp[(la + z) % (self.cardinality - 1)]

    def neg(self, a: int) -> int:
        if self.degree == 1:
            return (-a) % self.characteristic
        if a == 0 or self.characteristic == 2:
            return a
        self._tables()
        order = self.cardinality - 1
        return self._exp[(self._log[a] + order // 2) % order]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.degree == 1:
            return a * b % self.characteristic
        if a == 0 or b == 0:
            return 0
        self._tables()
        return self._exp[(self._log[a] + self._log[b]) % (self.cardinality - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldError("division by zero")
        if self.degree == 1:
            return pow(a, self.characteristic - 2, self.characteristic)
        self._tables()
        return self._exp[(-self._log[a]) % (self.cardinality - 1)]

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise FieldError("division by zero")
            return 1 if k == 0 else 0
        if self.degree == 1:
            ell = self.characteristic
            return pow(a, k % (ell - 1), ell)
        self._tables()
        order = self.cardinality - 1
        return self._exp[(self._log[a] * k) % order]

    def log(self, a: int) -> int:
        """Discrete logarithm of a nonzero code to the field generator. Needs tables."""
        if a == 0:
            raise FieldError("logarithm of zero")
        self._tables()
        return self._log[a]

    def exp(self, k: int) -> int:
        self._tables()
        return self._exp[k % (self.cardinality - 1)]

    def scalar(self, n: int) -> int:
        """Code of the image of the integer n in the prime subfield."""
        return n % self.characteristic

    def nth_root_codes(self, a: int, n: int) -> List[int]:
        """
        All n-th roots of a in this field, ascending by code.

        Args:
            a: Code of the radicand
            n: Positive root index

        Returns:
            Sorted list of codes b with b^n = a (possibly empty)

        Raises:
            FieldError: If n < 1, or the field is an extension larger than
                MAX_TABLE_SIZE
        """
        if n < 1:
            raise FieldError(f"root index must be positive, got {n}")
        if a == 0:
            return [0]
        order = self.cardinality - 1
        if order == 0:
            return [a]
        if self._table_free:
            if n == 1:
                return [a]
            roots = nthroot_mod(a, n, self.characteristic, all_roots=True) or []
            return sorted(int(b) for b in roots)
        self._tables()
        t = self._log[a]
        g = gcd(n, order)
        if t % g:
            return []
        reduced = order // g
        s0 = (t // g) * pow(n // g, -1, reduced) % reduced if reduced > 1 else 0
        return sorted(self._exp[(s0 + j * reduced) % order] for j in range(g))

    # ------------------------------------------------------------------
    # Vectorized arithmetic on numpy arrays of codes
    # (extension fields above MAX_TABLE_SIZE raise FieldError)
    # ------------------------------------------------------------------

    def vec_add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.degree == 1:
            return (a + b) % self.characteristic
        self._tables()
        order = self.cardinality - 1
        a, b = np.broadcast_arrays(a, b)
        la = self._np_log[a]
        lb = self._np_log[b]
        z = self._np_zech[(lb - la) % order]
        summed = np.where(z < 0, 0, self._np_exp[(la + z) % order])
        return np.where(a == 0, b, np.where(b == 0, a, summed))

    def vec_mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.degree == 1:
            return (a * b) % self.characteristic
        self._tables()
        order = self.cardinality - 1
        a, b = np.broadcast_arrays(a, b)
        prod = self._np_exp[(self._np_log[a] + self._np_log[b]) % order]
        return np.where((a == 0) | (b == 0), 0, prod)

    def vec_pow(self, a: np.ndarray, k: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if k < 0:
            raise FieldError("negative exponent in vectorized power")
        if k == 0:
            return np.ones_like(a)
        if self._table_free:
            ell = self.characteristic
            powered = [pow(int(v), k, ell) for v in a.ravel()]
            return np.array(powered, dtype=np.int64).reshape(a.shape)
        self._tables()
        order = self.cardinality - 1
        powered = self._np_exp[(self._np_log[a] * (k % order)) % order] if order > 0 else a
        return np.where(a == 0, 0, powered)

    def vec_horner(self, coeff_codes: Sequence[int], points: np.ndarray) -> np.ndarray:
        """Evaluate a polynomial (constant term first) at an array of codes."""
        points = np.asarray(points, dtype=np.int64)
        acc = np.zeros_like(points)
        for c in reversed(list(coeff_codes)):
            acc = self.vec_add(self.vec_mul(acc, points), np.full_like(points, c))
        return acc

    def vec_is_nth_power(self, a: np.ndarray, n: int) -> np.ndarray:
        """Boolean mask of entries that are n-th powers (zero included)."""
        a = np.asarray(a, dtype=np.int64)
        order = self.cardinality - 1
        g = gcd(n, order)
        if g == 1:
            return np.ones(a.shape, dtype=bool)
        if self._table_free:
            ell = self.characteristic
            return np.array([v == 0 or pow(int(v), order // g, ell) == 1 for v in a.ravel()],
                            dtype=bool).reshape(a.shape)
        self._tables()
        return (a == 0) | (self._np_log[a] % g == 0)

    # ------------------------------------------------------------------
    # Element-level conveniences
    # ------------------------------------------------------------------

    def element(self, value: ElementLike) -> "FieldElement":
        """Coerce an int (prime-subfield image) or FieldElement into this field."""
        if isinstance(value, FieldElement):
            if value.parent is not self and value.parent != self:
                raise FieldError("field mismatch")
            return value
        if isinstance(value, (int, np.integer)):
            return FieldElement(self, int(value) % self.characteristic)
        raise FieldError(f"cannot coerce {type(value).__name__} into {self!r}")

    def from_code(self, code: int) -> "FieldElement":
        if not 0 <= code < self.cardinality:
            raise FieldError(f"element code {code} out of range for {self!r}")
        return FieldElement(self, code)

    def from_vector(self, vector: Sequence[int]) -> "FieldElement":
        return FieldElement(self, self.vector_to_code(vector))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def generator(self) -> "FieldElement":
        """Least primitive element in odometer order."""
        self._tables()
        return FieldElement(self, self._generator_code)

    def elements(self) -> Iterator["FieldElement"]:
        """All elements in odometer order."""
        for code in range(self.cardinality):
            yield FieldElement(self, code)

    def nonzero_elements(self) -> Iterator["FieldElement"]:
        for code in range(1, self.cardinality):
            yield FieldElement(self, code)

    def random_element(self, rng: np.random.RandomState, nonzero: bool = False) -> "FieldElement":
        low = 1 if nonzero else 0
        return FieldElement(self, int(rng.randint(low, self.cardinality)))


class FieldElement:
    """An element of a PrimePowerField, identified by its code."""

    __slots__ = ("parent", "code")

    def __init__(self, parent: PrimePowerField, code: int):
        self.parent = parent
        self.code = code

    @property
    def coeffs(self) -> Tuple[int, ...]:
        """Coefficients c_0 .. c_{a-1} of the element (exactly a entries)."""
        return self.parent.code_to_vector(self.code)

    def _other(self, other: ElementLike) -> int:
        if isinstance(other, FieldElement):
            if other.parent is not self.parent and other.parent != self.parent:
                raise FieldError("field mismatch")
            return other.code
        if isinstance(other, (int, np.integer)):
            return int(other) % self.parent.characteristic
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: ElementLike) -> "FieldElement":
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.parent, self.parent.add(self.code, b))

    __radd__ = __add__

    def __sub__(self, other: ElementLike) -> "FieldElement":
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.parent, self.parent.sub(self.code, b))

    def __rsub__(self, other: ElementLike) -> "FieldElement":
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.parent, self.parent.sub(b, self.code))

    def __mul__(self, other: ElementLike) -> "FieldElement":
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.parent, self.parent.mul(self.code, b))

    __rmul__ = __mul__

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.parent, self.parent.neg(self.code))

    def __truediv__(self, other: ElementLike) -> "FieldElement":
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.parent, self.parent.mul(self.code, self.parent.inv(b)))

    def __rtruediv__(self, other: ElementLike) -> "FieldElement":
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.parent, self.parent.mul(b, self.parent.inv(self.code)))

    def __pow__(self, k: int) -> "FieldElement":
        return FieldElement(self.parent, self.parent.pow(self.code, int(k)))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.parent, self.parent.inv(self.code))

    def __eq__(self, other: object) -> bool:
        # An int n equals the prime-subfield element with code n, for 0 <= n < l only.
        if isinstance(other, FieldElement):
            return self.parent == other.parent and self.code == other.code
        if isinstance(other, (int, np.integer)):
            return 0 <= other < self.parent.characteristic and self.code == int(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self.code < self.parent.characteristic:
            return hash(self.code)
        return hash((self.parent.characteristic, self.parent.degree, self.code))

    def __bool__(self) -> bool:
        return self.code != 0

    def __lt__(self, other: "FieldElement") -> bool:
        return self.code < other.code

    def __repr__(self) -> str:
        return f"{self.parent!r}({format_element(self)})"

    def __str__(self) -> str:
        return format_element(self)

    def is_zero(self) -> bool:
        return self.code == 0

    def multiplicative_order(self) -> int:
        return multiplicative_order(self)

    def nth_roots(self, n: int) -> List["FieldElement"]:
        """All n-th roots of this element, ascending by code."""
        return [FieldElement(self.parent, c) for c in self.parent.nth_root_codes(self.code, n)]


# ----------------------------------------------------------------------
# Field construction
# ----------------------------------------------------------------------

def _canonical_modulus(characteristic: int, degree: int) -> Tuple[int, ...]:
    """Lexicographically least monic irreducible of the given degree, constant term first."""
    if degree == 1:
        return (0, 1)
    from .polyarith import Polynomial, is_irreducible

    prime_field = make_field(characteristic, 1)
    for lower in itertools.product(range(characteristic), repeat=degree):
        if lower[0] == 0:
            continue  # divisible by T
        candidate = Polynomial(prime_field, list(lower) + [1])
        if is_irreducible(candidate):
            return tuple(lower) + (1,)
    raise FieldError(f"no irreducible polynomial of degree {degree} over GF({characteristic})")


@functools.lru_cache(maxsize=None)
def make_field(characteristic: int, degree: int = 1) -> PrimePowerField:
    """
    Build (or fetch) the field F_{l^a} with its canonical modulus.

    Args:
        characteristic: Prime l
        degree: Extension degree a >= 1

    Returns:
        The cached PrimePowerField for (l, a)

    Raises:
        FieldError: If l is not prime or a < 1
    """
    if not isinstance(characteristic, int) or not isprime(characteristic):
        raise FieldError("characteristic not prime")
    if not isinstance(degree, int) or degree < 1:
        raise FieldError(f"extension degree must be a positive integer, got {degree}")
    modulus = _canonical_modulus(characteristic, degree)
    logger.debug("Constructed GF(%d^%d) with modulus %s", characteristic, degree, modulus)
    return PrimePowerField(characteristic, degree, modulus)


def extension_field(field: PrimePowerField, k: int) -> PrimePowerField:
    """The degree-k extension F_{q^k} of the given field."""
    if k < 1:
        raise FieldError(f"extension degree must be positive, got {k}")
    return make_field(field.characteristic, field.degree * k)


# ----------------------------------------------------------------------
# Field-level operations
# ----------------------------------------------------------------------

FIELD_OPS = ("add", "mul", "inv", "neg", "pow")


def field_arith(op: str, *operands: Union[FieldElement, int]) -> FieldElement:
    """
    Dispatch one of add, mul, inv, neg, pow on field elements.

    Args:
        op: Operation name
        *operands: FieldElements (pow takes an element and an integer exponent)

    Returns:
        The resulting FieldElement

    Raises:
        FieldError: On unknown op, mixed parents or inversion of zero
    """
    if op not in FIELD_OPS:
        raise FieldError(f"unknown field operation '{op}'")
    if not operands or not isinstance(operands[0], FieldElement):
        raise FieldError(f"'{op}' needs a field element as first operand")
    x = operands[0]
    if op == "add":
        return x + operands[1]
    if op == "mul":
        return x * operands[1]
    if op == "inv":
        return x.inverse()
    if op == "neg":
        return -x
    exponent = operands[1]
    if not isinstance(exponent, (int, np.integer)):
        raise FieldError("pow needs an integer exponent")
    return x ** int(exponent)


def multiplicative_order(x: FieldElement) -> int:
    """
    Least k >= 1 with x^k = 1.

    Raises:
        FieldError: If x is zero
    """
    if x.is_zero():
        raise FieldError("multiplicative order of zero undefined")
    field = x.parent
    order = field.cardinality - 1
    if order == 1:
        return 1
    for r in factorint(order):
        while order % r == 0 and field.pow(x.code, order // r) == 1:
            order //= r
    return order


def primitive_root_of_unity(field: PrimePowerField, p: int) -> FieldElement:
    """
    The least element (odometer order) of multiplicative order exactly p.

    Args:
        field: Field K containing mu_p
        p: Order, p >= 2

    Returns:
        zeta with zeta^p = 1 and zeta^j != 1 for 0 < j < p

    Raises:
        FieldError: If p is a multiple of l, p does not divide q - 1, or K is
            an extension field larger than MAX_TABLE_SIZE
    """
    if p < 2:
        raise FieldError(f"root of unity order must be >= 2, got {p}")
    if p % field.characteristic == 0:
        raise FieldError("p equals characteristic")
    order = field.cardinality - 1
    if order % p:
        raise FieldError("mu_p not in field")
    step = order // p
    if field._table_free:
        # first base whose power has exact order p
        prime_divisors = list(factorint(p))
        for base in range(2, field.cardinality):
            zeta = field.pow(base, step)
            if all(field.pow(zeta, p // r) != 1 for r in prime_divisors):
                break
        else:
            raise FieldError("mu_p not in field")
        codes = [field.pow(zeta, j) for j in range(1, p) if gcd(j, p) == 1]
        return FieldElement(field, min(codes))
    field._tables()
    codes = [field.exp(step * j) for j in range(1, p) if gcd(j, p) == 1]
    return FieldElement(field, min(codes))


@functools.lru_cache(maxsize=None)
def _embedding_codes(small: PrimePowerField, large: PrimePowerField) -> Tuple[int, ...]:
    """Image code of every element of `small` under the canonical embedding."""
    if small.characteristic != large.characteristic or large.degree % small.degree:
        raise FieldError(f"cannot embed {small!r} into {large!r}")
    if small.degree == 1:
        return tuple(range(small.cardinality))
    modulus = small.modulus
    theta = None
    # least root of the small modulus in the large field
    for code in range(large.cardinality):
        acc = 0
        for c in reversed(modulus):
            acc = large.add(large.mul(acc, code), c)
        if acc == 0:
            theta = code
            break
    if theta is None:
        raise FieldError(f"modulus of {small!r} has no root in {large!r}")
    powers = [1]
    for _ in range(small.degree - 1):
        powers.append(large.mul(powers[-1], theta))
    images = []
    for code in range(small.cardinality):
        acc = 0
        for digit, power in zip(small.code_to_vector(code), powers):
            if digit:
                acc = large.add(acc, large.mul(digit, power))
        images.append(acc)
    logger.debug("Embedding %r -> %r via theta code %d", small, large, theta)
    return tuple(images)


def embed(x: FieldElement, large: PrimePowerField) -> FieldElement:
    """
    Image of x under the canonical embedding of its field into `large`.

    Raises:
        FieldError: If the fields have different characteristic or the degree
            of `large` is not a multiple of the degree of x's field
    """
    small = x.parent
    if small == large:
        return x
    return FieldElement(large, _embedding_codes(small, large)[x.code])


def embedding_map(small: PrimePowerField, large: PrimePowerField) -> Tuple[int, ...]:
    """Code-to-code table of the canonical embedding."""
    if small == large:
        return tuple(range(small.cardinality))
    return _embedding_codes(small, large)


# ----------------------------------------------------------------------
# Textual syntax
# ----------------------------------------------------------------------

_INT_RE = re.compile(r"\s*([+-]?\d+)\s*$")
_VECTOR_RE = re.compile(r"\s*\[([^\]]*)\]\s*$")


def parse_element(field: PrimePowerField, text: str) -> FieldElement:
    """
    Parse "7" (prime-subfield integer) or "[c0,c1,...]" (constant term first).

    Raises:
        CurveSpecError: With the offending position
    """
    match = _INT_RE.match(text)
    if match:
        return field.element(int(match.group(1)))
    match = _VECTOR_RE.match(text)
    if match:
        body = match.group(1)
        offset = match.start(1)
        parts = body.split(",") if body.strip() else []
        if len(parts) > field.degree:
            raise CurveSpecError(
                f"too many coefficients for {field!r}", text, offset)
        digits = []
        for part in parts:
            if not _INT_RE.match(part):
                raise CurveSpecError("expected integer coefficient", text, offset)
            digits.append(int(part) % field.characteristic)
            offset += len(part) + 1
        return field.from_vector(digits)
    raise CurveSpecError("expected integer or [c0,c1,...] element", text, 0)


def format_element(x: FieldElement) -> str:
    if x.parent.is_prime_field:
        return str(x.code)
    return "[" + ",".join(str(c) for c in x.coeffs) + "]"
