"""
Polynomial Arithmetic Module

This module implements univariate polynomials over a finite field: the
arithmetic of F_q[T] (the ring of integers of a rational function field)
and of the coordinate functions a_i(x) of elements of O_F.

Polynomials are dense and immutable. Coefficients are stored as field
element codes, constant term first, without trailing zeros; the zero
polynomial has an empty coefficient list and degree -1.
"""

import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from sympy import factorint

from .exceptions import CurveSpecError, PolynomialError
from .gf import (
    FieldElement,
    PrimePowerField,
    embedding_map,
    format_element,
    parse_element,
    primitive_root_of_unity,
)

# Set up logging
logger = logging.getLogger(__name__)

Scalar = Union[FieldElement, int]


def _trim(codes: List[int]) -> List[int]:
    while codes and codes[-1] == 0:
        codes.pop()
    return codes


def _add_codes(field: PrimePowerField, a: Sequence[int], b: Sequence[int]) -> List[int]:
    if len(a) < len(b):
        a, b = b, a
    if field.degree == 1:
        p = field.characteristic
        out = list(a)
        for i, bi in enumerate(b):
            out[i] = (out[i] + bi) % p
        return _trim(out)
    out = list(a)
    for i, bi in enumerate(b):
        out[i] = field.add(out[i], bi)
    return _trim(out)


def _neg_codes(field: PrimePowerField, a: Sequence[int]) -> List[int]:
    return [field.neg(c) for c in a]


def _scale_codes(field: PrimePowerField, a: Sequence[int], c: int) -> List[int]:
    if c == 0:
        return []
    if field.degree == 1:
        p = field.characteristic
        return _trim([x * c % p for x in a])
    return _trim([field.mul(x, c) for x in a])


def _mul_codes(field: PrimePowerField, a: Sequence[int], b: Sequence[int]) -> List[int]:
    if not a or not b:
        return []
    if field.degree == 1:
        p = field.characteristic
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return _trim([c % p for c in out])
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = field.add(out[i + j], field.mul(ai, bj))
    return _trim(out)


def _divmod_codes(field: PrimePowerField, a: Sequence[int],
                  b: Sequence[int]) -> Tuple[List[int], List[int]]:
    if not b:
        raise PolynomialError("division by zero polynomial")
    rem = list(a)
    db = len(b) - 1
    if len(rem) - 1 < db:
        return [], _trim(rem)
    inv_lead = field.inv(b[-1])
    quot = [0] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        t = field.mul(c, inv_lead)
        quot[k - db] = t
        for i, bi in enumerate(b):
            if bi:
                rem[k - db + i] = field.sub(rem[k - db + i], field.mul(t, bi))
    return _trim(quot), _trim(rem[:db])


class Polynomial:
    """
    A univariate polynomial over a PrimePowerField.

    Integer coefficients are read as integers (images in the prime subfield),
    FieldElement coefficients must live in `field`.
    """

    __slots__ = ("field", "codes")

    def __init__(self, field: PrimePowerField, coeffs: Iterable[Scalar] = ()):
        """
        Initialize a polynomial.

        Args:
            field: Base field
            coeffs: Coefficients, constant term first
        """
        self.field = field
        self.codes: Tuple[int, ...] = tuple(_trim([field.element(c).code for c in coeffs]))

    @classmethod
    def from_codes(cls, field: PrimePowerField, codes: Iterable[int]) -> "Polynomial":
        """Build directly from element codes (trailing zeros are trimmed)."""
        poly = cls.__new__(cls)
        poly.field = field
        poly.codes = tuple(_trim(list(codes)))
        return poly

    @classmethod
    def zero(cls, field: PrimePowerField) -> "Polynomial":
        return cls.from_codes(field, ())

    @classmethod
    def one(cls, field: PrimePowerField) -> "Polynomial":
        return cls.from_codes(field, (1,))

    @classmethod
    def constant(cls, field: PrimePowerField, c: Scalar) -> "Polynomial":
        return cls.from_codes(field, (field.element(c).code,))

    @classmethod
    def monomial(cls, field: PrimePowerField, k: int, c: Scalar = 1) -> "Polynomial":
        return cls.from_codes(field, [0] * k + [field.element(c).code])

    @classmethod
    def variable(cls, field: PrimePowerField) -> "Polynomial":
        return cls.from_codes(field, (0, 1))

    # ------------------------------------------------------------------
    # Basic queries
    # ------------------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.codes) - 1

    @property
    def coeffs(self) -> Tuple[FieldElement, ...]:
        return tuple(FieldElement(self.field, c) for c in self.codes)

    @property
    def leading_coefficient(self) -> FieldElement:
        if not self.codes:
            return self.field.zero
        return FieldElement(self.field, self.codes[-1])

    def coefficient(self, k: int) -> FieldElement:
        if 0 <= k < len(self.codes):
            return FieldElement(self.field, self.codes[k])
        return self.field.zero

    def is_zero(self) -> bool:
        return not self.codes

    def is_constant(self) -> bool:
        return len(self.codes) <= 1

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return (self.degree, tuple(reversed(self.codes)))

    def __len__(self) -> int:
        return len(self.codes)

    def __bool__(self) -> bool:
        return bool(self.codes)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.field == other.field and self.codes == other.codes
        if isinstance(other, (int, FieldElement)):
            return self.codes == Polynomial.constant(self.field, other).codes
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.codes))

    def __repr__(self) -> str:
        return f"Polynomial({self.field!r}, {self})"

    def __str__(self) -> str:
        return self.to_string("T")

    def to_string(self, var: str = "T") -> str:
        """Format as "c_k*T^k + ... + c_0"; unit coefficients are omitted."""
        if not self.codes:
            return "0"
        terms = []
        for k in range(len(self.codes) - 1, -1, -1):
            c = self.codes[k]
            if c == 0:
                continue
            coef = format_element(FieldElement(self.field, c))
            if k == 0:
                terms.append(coef)
                continue
            power = var if k == 1 else f"{var}^{k}"
            terms.append(power if c == 1 else f"{coef}*{power}")
        return " + ".join(terms)

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def _coerce(self, other: object) -> Optional["Polynomial"]:
        if isinstance(other, Polynomial):
            if other.field != self.field:
                raise PolynomialError("field mismatch")
            return other
        if isinstance(other, (int, FieldElement)):
            return Polynomial.constant(self.field, other)
        return None

    def __add__(self, other: object) -> "Polynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Polynomial.from_codes(self.field, _add_codes(self.field, self.codes, o.codes))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial.from_codes(self.field, _neg_codes(self.field, self.codes))

    def __sub__(self, other: object) -> "Polynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "Polynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> "Polynomial":
        if isinstance(other, (int, FieldElement)):
            c = self.field.element(other).code
            return Polynomial.from_codes(self.field, _scale_codes(self.field, self.codes, c))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Polynomial.from_codes(self.field, _mul_codes(self.field, self.codes, o.codes))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise PolynomialError("negative polynomial power")
        result = Polynomial.one(self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __divmod__(self, other: object) -> Tuple["Polynomial", "Polynomial"]:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        q, r = _divmod_codes(self.field, self.codes, o.codes)
        return Polynomial.from_codes(self.field, q), Polynomial.from_codes(self.field, r)

    def __floordiv__(self, other: object) -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: object) -> "Polynomial":
        return divmod(self, other)[1]

    def __call__(self, x: Scalar) -> FieldElement:
        """Evaluate at x; x may live in an extension of the base field."""
        if isinstance(x, FieldElement) and x.parent != self.field:
            target = x.parent
            table = embedding_map(self.field, target)
            acc = 0
            for c in reversed(self.codes):
                acc = target.add(target.mul(acc, x.code), table[c])
            return FieldElement(target, acc)
        point = self.field.element(x).code
        acc = 0
        for c in reversed(self.codes):
            acc = self.field.add(self.field.mul(acc, point), c)
        return FieldElement(self.field, acc)

    def derivative(self) -> "Polynomial":
        return Polynomial.from_codes(
            self.field,
            [self.field.mul(self.field.scalar(k), c) for k, c in enumerate(self.codes)][1:],
        )

    def monic(self) -> "Polynomial":
        if not self.codes:
            return self
        inv = self.field.inv(self.codes[-1])
        return Polynomial.from_codes(self.field, _scale_codes(self.field, self.codes, inv))

    def compose(self, inner: "Polynomial") -> "Polynomial":
        """self(inner(T))."""
        acc = Polynomial.zero(self.field)
        for c in reversed(self.codes):
            acc = acc * inner + FieldElement(self.field, c)
        return acc

    def powmod(self, k: int, modulus: "Polynomial") -> "Polynomial":
        result = Polynomial.one(self.field) % modulus
        base = self % modulus
        while k:
            if k & 1:
                result = (result * base) % modulus
            k >>= 1
            if k:
                base = (base * base) % modulus
        return result

    def change_field(self, target: PrimePowerField) -> "Polynomial":
        """The same polynomial with coefficients embedded into `target`."""
        table = embedding_map(self.field, target)
        return Polynomial.from_codes(target, [table[c] for c in self.codes])


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic greatest common divisor (zero when both inputs are zero)."""
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


POLY_OPS = ("add", "sub", "mul", "divrem", "gcd", "eval", "derivative")


def poly_arith(op: str, *operands):
    """
    Dispatch one of add, sub, mul, divrem, gcd, eval, derivative.

    Args:
        op: Operation name
        *operands: Polynomials (eval takes a polynomial and a point)

    Returns:
        Polynomial, (quotient, remainder) or FieldElement

    Raises:
        PolynomialError: On unknown op, mixed fields or division by zero
    """
    if op not in POLY_OPS:
        raise PolynomialError(f"unknown polynomial operation '{op}'")
    f = operands[0]
    if op == "add":
        return f + operands[1]
    if op == "sub":
        return f - operands[1]
    if op == "mul":
        return f * operands[1]
    if op == "divrem":
        return divmod(f, operands[1])
    if op == "gcd":
        other = operands[1]
        if other.field != f.field:
            raise PolynomialError("field mismatch")
        return poly_gcd(f, other)
    if op == "eval":
        return f(operands[1])
    return f.derivative()


def is_squarefree(f: Polynomial) -> bool:
    """
    True iff f has no repeated roots over the algebraic closure.

    Raises:
        PolynomialError: If f is zero
    """
    if f.is_zero():
        raise PolynomialError("squarefree test of zero polynomial")
    if f.degree == 0:
        return True
    df = f.derivative()
    if df.is_zero():
        # f is an l-th power of a polynomial of positive degree
        return False
    return poly_gcd(f, df).degree == 0


def is_irreducible(f: Polynomial) -> bool:
    """
    Rabin's irreducibility test over F_q.

    Raises:
        PolynomialError: If f is constant
    """
    if f.degree < 1:
        raise PolynomialError("irreducibility test of constant polynomial")
    f = f.monic()
    n = f.degree
    if n == 1:
        return True
    q = f.field.cardinality
    t = Polynomial.variable(f.field)
    # frobenius_powers[k] = T^(q^k) mod f
    frobenius_powers = [t % f]
    for _ in range(n):
        frobenius_powers.append(frobenius_powers[-1].powmod(q, f))
    if frobenius_powers[n] != t % f:
        return False
    for r in factorint(n):
        if poly_gcd(frobenius_powers[n // r] - t, f).degree != 0:
            return False
    return True


def inverse_frobenius(g: Polynomial) -> Optional[Polynomial]:
    """
    The unique h with h^l = g, or None when g is not an l-th power.
    """
    field = g.field
    ell = field.characteristic
    for k, c in enumerate(g.codes):
        if c and k % ell:
            return None
    # c -> c^(l^(a-1)) inverts c -> c^l on F_{l^a}
    root_exponent = ell ** (field.degree - 1)
    return Polynomial.from_codes(
        field, [field.pow(g.codes[k], root_exponent) for k in range(0, len(g.codes), ell)]
    )


def _top_down_root(h: Polynomial, m: int, lead: FieldElement) -> Optional[Polynomial]:
    field = h.field
    k = h.degree // m
    root = [0] * (k + 1)
    root[k] = lead.code
    denom = field.inv(field.mul(field.scalar(m), field.pow(lead.code, m - 1)))
    for i in range(k - 1, -1, -1):
        partial = Polynomial.from_codes(field, root)
        t = (h - partial ** m).coefficient((m - 1) * k + i).code
        root[i] = field.mul(t, denom)
    candidate = Polynomial.from_codes(field, root)
    return candidate if candidate ** m == h else None


def poly_mth_roots(g: Polynomial, m: int) -> List[Polynomial]:
    """
    All h with h^m = g, sorted; an empty list means g is not an m-th power.

    The l-part of m is peeled off by inverse Frobenius, the prime-to-l part
    m' is extracted coefficient by coefficient from the top and then
    multiplied through mu_{m'}.

    Args:
        g: Polynomial
        m: Positive exponent

    Returns:
        Sorted list of distinct roots
    """
    if m < 1:
        raise PolynomialError(f"root index must be positive, got {m}")
    field = g.field
    if g.is_zero():
        return [g]
    ell = field.characteristic
    m_prime = m
    h: Optional[Polynomial] = g
    while m_prime % ell == 0:
        m_prime //= ell
        h = inverse_frobenius(h)
        if h is None:
            return []
    if m_prime == 1:
        return [h]
    if h.degree % m_prime:
        return []
    lead_roots = h.leading_coefficient.nth_roots(m_prime)
    if not lead_roots:
        return []
    root = _top_down_root(h, m_prime, lead_roots[0])
    if root is None:
        return []
    unity = field.one.nth_roots(m_prime)
    return sorted({root * omega for omega in unity}, key=Polynomial.sort_key)


def roots_of_unity_factors(field: PrimePowerField, p: int, sign: int = 1) -> List[Polynomial]:
    """
    Linear factors T - zeta^j (sign=+1) or T + zeta^j (sign=-1), j = 0 .. p-1.

    Their product is T^p - 1, respectively T^p + 1 for odd p.
    """
    if sign not in (1, -1):
        raise PolynomialError("sign must be +1 or -1")
    zeta = primitive_root_of_unity(field, p)
    t = Polynomial.variable(field)
    factors = []
    power = field.one
    for _ in range(p):
        factors.append(t - power if sign == 1 else t + power)
        power = power * zeta
    return factors


# ----------------------------------------------------------------------
# Textual syntax
# ----------------------------------------------------------------------

DEFAULT_VARIABLES = ("x", "T")


def parse_polynomial(field: PrimePowerField, text: str,
                     variables: Sequence[str] = DEFAULT_VARIABLES) -> Polynomial:
    """
    Parse "c_k*T^k + ... + c_0" with coefficients in the element syntax.

    Coefficients may be omitted (meaning 1), the '*' is optional, terms may
    repeat and are summed, and '-' negates the following term.

    Raises:
        CurveSpecError: With the position of the first offending character
    """
    terms: Dict[int, FieldElement] = {}
    pos = 0
    n = len(text)
    first = True

    def skip(i: int) -> int:
        while i < n and text[i].isspace():
            i += 1
        return i

    pos = skip(pos)
    if pos >= n:
        raise CurveSpecError("empty polynomial", text, pos)
    while pos < n:
        sign = 1
        if text[pos] in "+-":
            sign = -1 if text[pos] == "-" else 1
            pos = skip(pos + 1)
        elif not first:
            raise CurveSpecError("expected '+' or '-'", text, pos)
        start = pos
        coef: Optional[FieldElement] = None
        if pos < n and text[pos] == "[":
            close = text.find("]", pos)
            if close < 0:
                raise CurveSpecError("unterminated element", text, pos)
            coef = parse_element(field, text[pos:close + 1])
            pos = skip(close + 1)
        elif pos < n and text[pos].isdigit():
            end = pos
            while end < n and text[end].isdigit():
                end += 1
            coef = field.element(int(text[pos:end]))
            pos = skip(end)
        exponent = 0
        has_star = False
        if pos < n and text[pos] == "*":
            has_star = True
            pos = skip(pos + 1)
        if pos < n and text[pos].isalpha():
            if text[pos] not in variables:
                raise CurveSpecError(
                    f"unknown variable '{text[pos]}' (expected one of {', '.join(variables)})",
                    text, pos)
            pos = skip(pos + 1)
            exponent = 1
            if pos < n and text[pos] == "^":
                pos = skip(pos + 1)
                end = pos
                while end < n and text[end].isdigit():
                    end += 1
                if end == pos:
                    raise CurveSpecError("expected exponent", text, pos)
                exponent = int(text[pos:end])
                pos = skip(end)
        elif has_star or coef is None:
            raise CurveSpecError("expected term", text, pos if pos > start else start)
        value = coef if coef is not None else field.one
        if sign < 0:
            value = -value
        terms[exponent] = terms.get(exponent, field.zero) + value
        first = False
    if not terms:
        raise CurveSpecError("empty polynomial", text, 0)
    top = max(terms)
    codes = [0] * (top + 1)
    for k, c in terms.items():
        codes[k] = c.code
    return Polynomial.from_codes(field, codes)
