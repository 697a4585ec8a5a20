"""Exact real scalars.

Rational numbers are plain :class:`fractions.Fraction` objects.  Irrational
coordinates are :class:`SymbolicReal` values: exact rational functions in a
finite set of declared generators (``sqrt2``, ``pi``, ...), each of which
carries a rational interval enclosure.

Zero testing is exact (the formal expression is the zero function).  Sign
testing evaluates the expression on the enclosures and must exclude zero;
otherwise :class:`~lvmb.errors.PrecisionExhausted` is raised.  A returned
sign is therefore never wrong, whatever relations the generators satisfy.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from numbers import Rational

from sympy import QQ
from sympy.polys.fields import FracField

from .errors import PrecisionExhausted

__all__ = [
    "Sign",
    "GeneratorTable",
    "SymbolicReal",
    "sign_of",
    "is_rational",
    "to_fraction",
    "as_scalar",
    "sqrt_enclosure",
    "approx",
]


class Sign(enum.IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1


def sqrt_enclosure(q, digits=40):
    """Rational interval ``[lo, hi]`` containing ``sqrt(q)`` of width ``10**-digits``."""
    q = Fraction(q)
    if q < 0:
        raise ValueError("negative radicand")
    scale = 10 ** digits
    # floor(sqrt(q) * scale) = isqrt(floor(q * scale**2))
    lo_int = math.isqrt(q.numerator * scale * scale // q.denominator)
    lo = Fraction(lo_int, scale)
    hi = lo if lo * lo == q else Fraction(lo_int + 1, scale)
    return lo, hi


class GeneratorTable:
    """Ordered generators with rational enclosures.

    Generator 0 is the constant ``"1"`` with enclosure ``[1, 1]``.  Further
    generators are declared as ``(name, (lo, hi))`` pairs; they are assumed
    to be Q-linearly independent, which only affects whether sign queries
    can be certified, never their correctness.
    """

    def __init__(self, generators=()):
        gens = [("1", (Fraction(1), Fraction(1)))]
        seen = {"1"}
        for name, (lo, hi) in generators:
            lo, hi = Fraction(lo), Fraction(hi)
            if name in seen:
                raise ValueError(f"duplicate generator name {name!r}")
            if lo > hi:
                raise ValueError(f"empty enclosure for generator {name!r}")
            seen.add(name)
            gens.append((str(name), (lo, hi)))
        self._gens = tuple(gens)
        self._field = None
        self._symbols = None

    @classmethod
    def with_sqrt(cls, *radicands, digits=40):
        """Table with one generator ``sqrtN`` per radicand ``N``."""
        return cls([(f"sqrt{q}", sqrt_enclosure(q, digits)) for q in radicands])

    @property
    def generators(self):
        return self._gens

    @property
    def names(self):
        return [name for name, _ in self._gens]

    def __len__(self):
        return len(self._gens)

    def index(self, name):
        for i, (gname, _) in enumerate(self._gens):
            if gname == name:
                return i
        raise KeyError(name)

    def enclosure(self, i):
        return self._gens[i][1]

    def __eq__(self, other):
        return isinstance(other, GeneratorTable) and self._gens == other._gens

    def __hash__(self):
        return hash(self._gens)

    def __repr__(self):
        return f"GeneratorTable({list(self._gens[1:])!r})"

    # sympy field Q(g1, ..., gk) backing the symbolic arithmetic
    def _ensure_field(self):
        if self._field is None:
            k = len(self._gens) - 1
            if k == 0:
                self._field = FracField([], QQ)
                self._symbols = ()
            else:
                self._field = FracField([f"g{i}" for i in range(1, k + 1)], QQ)
                self._symbols = tuple(self._field.gens)
        return self._field

    def gen(self, i):
        """The generator ``i`` as a :class:`SymbolicReal` (``i = 0`` is 1)."""
        field = self._ensure_field()
        if i == 0:
            return SymbolicReal(field.one, self)
        return SymbolicReal(self._symbols[i - 1], self)

    def from_coeffs(self, coeffs):
        """Build ``sum(c * g_i)`` from a ``{generator index: rational}`` map."""
        field = self._ensure_field()
        value = field.zero
        for i, c in coeffs.items():
            if not 0 <= i < len(self._gens):
                raise KeyError(f"unknown generator index {i}")
            c = Fraction(c)
            term = field(QQ(c.numerator, c.denominator))
            if i:
                term = term * self._symbols[i - 1]
            value = value + term
        return SymbolicReal(value, self)


RATIONAL_TABLE = GeneratorTable()


def _frac(c):
    return Fraction(int(c.numerator), int(c.denominator))


def _imul(a, b):
    prods = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return min(prods), max(prods)


def _ipow(iv, e):
    lo, hi = iv
    if e == 0:
        return Fraction(1), Fraction(1)
    if e % 2 == 0 and lo < 0 < hi:
        return Fraction(0), max(-lo, hi) ** e
    a, b = lo ** e, hi ** e
    return min(a, b), max(a, b)


class SymbolicReal:
    """An exact real: a rational function of the table's generators."""

    __slots__ = ("_value", "table")

    def __init__(self, value, table):
        self._value = value
        self.table = table

    # -- construction helpers -------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, SymbolicReal):
            if other.table is not self.table and other.table != self.table:
                raise ValueError("symbolic reals from different generator tables")
            return other._value
        if isinstance(other, (int, Rational)):
            other = Fraction(other)
            return self._value.field(QQ(other.numerator, other.denominator))
        return NotImplemented

    def _wrap(self, value):
        return SymbolicReal(value, self.table)

    # -- inspection -----------------------------------------------------------
    @property
    def is_zero(self):
        return not self._value.numer

    @property
    def is_rational(self):
        return self._value.numer.is_ground and self._value.denom.is_ground

    def to_fraction(self):
        if not self.is_rational:
            raise ValueError(f"{self} is not rational")
        num = self._value.numer.LC if self._value.numer else 0
        return _frac(QQ(num)) / _frac(QQ(self._value.denom.LC))

    @property
    def coeffs(self):
        """``{generator index: coefficient}`` for a Q-linear combination.

        Zero coefficients are omitted, so ``coeffs == {}`` exactly for zero.
        Raises ``ValueError`` for values outside the Q-span of the generators.
        """
        num, den = self._value.numer, self._value.denom
        if not den.is_ground:
            raise ValueError(f"{self._value} is not a linear combination of generators")
        scale = _frac(QQ(den.LC))
        out = {}
        for monom, c in num.terms():
            deg = sum(monom)
            if deg == 0:
                idx = 0
            elif deg == 1:
                idx = monom.index(1) + 1
            else:
                raise ValueError(f"{self._value} is not a linear combination of generators")
            out[idx] = _frac(c) / scale
        return out

    def interval(self):
        """Rational enclosure ``(lo, hi)``; ``None`` when the denominator's
        enclosure contains zero."""
        num = self._eval_poly(self._value.numer)
        den = self._eval_poly(self._value.denom)
        if den[0] <= 0 <= den[1]:
            return None
        inv = (1 / den[1], 1 / den[0])
        return _imul(num, inv)

    def _eval_poly(self, poly):
        lo = hi = Fraction(0)
        encl = [self.table.enclosure(i) for i in range(1, len(self.table))]
        for monom, c in poly.terms():
            term = (Fraction(1), Fraction(1))
            for iv, e in zip(encl, monom):
                if e:
                    term = _imul(term, _ipow(iv, e))
            c = _frac(c)
            a, b = c * term[0], c * term[1]
            lo += min(a, b)
            hi += max(a, b)
        return lo, hi

    def sign(self):
        if self.is_zero:
            return Sign.ZERO
        num = self._eval_poly(self._value.numer)
        den = self._eval_poly(self._value.denom)
        if num[0] <= 0 <= num[1] or den[0] <= 0 <= den[1]:
            raise PrecisionExhausted(
                f"cannot certify the sign of {self}: enclosure straddles zero"
            )
        s = 1 if num[0] > 0 else -1
        s *= 1 if den[0] > 0 else -1
        return Sign(s)

    # -- arithmetic -----------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(self._value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(self._value - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(o - self._value)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(self._value * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if not o.numer:
            raise ZeroDivisionError("symbolic division by zero")
        return self._wrap(self._value / o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.is_zero:
            raise ZeroDivisionError("symbolic division by zero")
        return self._wrap(o / self._value)

    def __neg__(self):
        return self._wrap(-self._value)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- comparison -----------------------------------------------------------
    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return not (self._value - o).numer

    def __hash__(self):
        if self.is_rational:
            return hash(self.to_fraction())
        return hash(self._value)

    def __lt__(self, other):
        return sign_of(self - other) < 0

    def __le__(self, other):
        return sign_of(self - other) <= 0

    def __gt__(self, other):
        return sign_of(self - other) > 0

    def __ge__(self, other):
        return sign_of(self - other) >= 0

    def __float__(self):
        iv = self.interval()
        if iv is None:
            raise PrecisionExhausted(f"cannot evaluate {self}")
        return float((iv[0] + iv[1]) / 2)

    def __str__(self):
        try:
            coeffs = self.coeffs
        except ValueError:
            expr = str(self._value)
            for i in range(len(self.table) - 1, 0, -1):
                expr = expr.replace(f"g{i}", self.table.names[i])
            return expr
        if not coeffs:
            return "0"
        parts = []
        for i in sorted(coeffs):
            c = coeffs[i]
            name = self.table.names[i]
            if i == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(name)
            else:
                parts.append(f"{c}*{name}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"SymbolicReal({self})"


def sign_of(x, table=None):
    """Exact sign of a rational or symbolic scalar.

    ``table`` is accepted for symmetry with the data model; a
    :class:`SymbolicReal` already carries its own table.
    """
    if isinstance(x, SymbolicReal):
        if table is not None and x.table != table:
            raise ValueError("value does not belong to the given generator table")
        return x.sign()
    if x > 0:
        return Sign.POSITIVE
    if x < 0:
        return Sign.NEGATIVE
    return Sign.ZERO


def is_rational(x):
    if isinstance(x, SymbolicReal):
        return x.is_rational
    return isinstance(x, (int, Rational))


def to_fraction(x):
    if isinstance(x, SymbolicReal):
        return x.to_fraction()
    return Fraction(x)


def as_scalar(x):
    """Demote rational symbolic values to :class:`Fraction`."""
    if isinstance(x, SymbolicReal):
        return x.to_fraction() if x.is_rational else x
    return Fraction(x)


def approx(x):
    return float(x)
