"""Pure-Python backend for exact scalars of the form (A + B*sqrt(d)) / Q.

Reference implementation; tripack._speedups provides the same class compiled
with int64 fast paths.  Keep the two in exact behavioral agreement.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, sqrt


class QuadExtError(ArithmeticError):
    pass


class DivideByZero(QuadExtError, ZeroDivisionError):
    pass


class RadicandMismatch(QuadExtError):
    pass


def _norm(A, B, Q, d):
    # canonical: Q > 0, gcd(A, B, Q) = 1, and B == 0 iff d == 1
    if Q == 0:
        raise DivideByZero("zero denominator")
    if Q < 0:
        A, B, Q = -A, -B, -Q
    g = gcd(gcd(A if A >= 0 else -A, B if B >= 0 else -B), Q)
    if g > 1:
        A //= g
        B //= g
        Q //= g
    if B == 0:
        d = 1
    return A, B, Q, d


def _coerce_frac(v):
    if isinstance(v, int):
        return v, 1
    if isinstance(v, Fraction):
        return v.numerator, v.denominator
    raise TypeError(f"expected int or Fraction, got {type(v).__name__}")


class QuadExt:
    """Exact element of Q[sqrt(d)] for d in {1, 2, 3}, stored as (A + B*sqrt(d))/Q."""

    __slots__ = ("A", "B", "Q", "d")

    def __init__(self, a=0, b=0, d=1):
        if d not in (1, 2, 3):
            raise ValueError(f"radicand must be 1, 2 or 3, got {d!r}")
        an, ad = _coerce_frac(a)
        bn, bd = _coerce_frac(b)
        if d == 1:
            # sqrt(1) = 1: fold the b component into a
            an, ad = an * bd + bn * ad, ad * bd
            bn = 0
            bd = 1
        A = an * bd
        B = bn * ad
        Q = ad * bd
        A, B, Q, d = _norm(A, B, Q, d)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "Q", Q)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("QuadExt is immutable")

    @classmethod
    def _mk(cls, A, B, Q, d):
        A, B, Q, d = _norm(A, B, Q, d)
        self = object.__new__(cls)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "Q", Q)
        object.__setattr__(self, "d", d)
        return self

    # -- accessors ---------------------------------------------------------

    @property
    def a(self):
        return Fraction(self.A, self.Q)

    @property
    def b(self):
        return Fraction(self.B, self.Q)

    def is_rational(self):
        return self.B == 0

    def as_fraction(self):
        if self.B != 0:
            raise ValueError("not a rational value")
        return Fraction(self.A, self.Q)

    def as_float(self):
        # display/rendering only, never used in decisions
        return (self.A + self.B * sqrt(self.d)) / self.Q

    __float__ = as_float

    # -- arithmetic --------------------------------------------------------

    def _other(self, other):
        if isinstance(other, QuadExt):
            return other
        if isinstance(other, int):
            return QuadExt._mk(other, 0, 1, 1)
        return None

    @staticmethod
    def _join_d(x, y):
        if x.d == y.d:
            return x.d
        if x.B == 0:
            return y.d
        if y.B == 0:
            return x.d
        raise RadicandMismatch(f"cannot mix sqrt({x.d}) with sqrt({y.d})")

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        d = self._join_d(self, o)
        return QuadExt._mk(
            self.A * o.Q + o.A * self.Q,
            self.B * o.Q + o.B * self.Q,
            self.Q * o.Q,
            d,
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        d = self._join_d(self, o)
        return QuadExt._mk(
            self.A * o.Q - o.A * self.Q,
            self.B * o.Q - o.B * self.Q,
            self.Q * o.Q,
            d,
        )

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o.__sub__(self)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        d = self._join_d(self, o)
        return QuadExt._mk(
            self.A * o.A + d * self.B * o.B,
            self.A * o.B + o.A * self.B,
            self.Q * o.Q,
            d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        d = self._join_d(self, o)
        den = o.A * o.A - d * o.B * o.B
        if den == 0:
            raise DivideByZero("division by zero")
        return QuadExt._mk(
            o.Q * (self.A * o.A - d * self.B * o.B),
            o.Q * (self.B * o.A - self.A * o.B),
            self.Q * den,
            d,
        )

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o.__truediv__(self)

    def __neg__(self):
        return QuadExt._mk(-self.A, -self.B, self.Q, self.d)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __bool__(self):
        return self.A != 0 or self.B != 0

    # -- exact sign and order ----------------------------------------------

    def sign(self):
        A, B = self.A, self.B
        if B == 0:
            return (A > 0) - (A < 0)
        if A == 0:
            return 1 if B > 0 else -1
        if A > 0 and B > 0:
            return 1
        if A < 0 and B < 0:
            return -1
        # opposite signs: compare A^2 against d*B^2, the larger side wins
        aa = A * A
        dbb = self.d * B * B
        if aa == dbb:
            return 0
        if aa > dbb:
            return 1 if A > 0 else -1
        return 1 if B > 0 else -1

    def _cmp(self, other):
        o = self._other(other)
        if o is None:
            return None
        return self.__sub__(o).sign()

    def __eq__(self, other):
        c = self._cmp(other)
        if c is None:
            return NotImplemented
        return c == 0

    def __ne__(self, other):
        c = self._cmp(other)
        if c is None:
            return NotImplemented
        return c != 0

    def __lt__(self, other):
        c = self._cmp(other)
        if c is None:
            return NotImplemented
        return c < 0

    def __le__(self, other):
        c = self._cmp(other)
        if c is None:
            return NotImplemented
        return c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        if c is None:
            return NotImplemented
        return c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        if c is None:
            return NotImplemented
        return c >= 0

    def __hash__(self):
        if self.B == 0 and self.Q == 1:
            return hash(self.A)
        if self.B == 0:
            return hash(Fraction(self.A, self.Q))
        return hash((self.A, self.B, self.Q, self.d))

    # -- misc ----------------------------------------------------------------

    def __reduce__(self):
        return (_rebuild, (self.A, self.B, self.Q, self.d))

    def __repr__(self):
        if self.B == 0:
            if self.Q == 1:
                return f"QuadExt({self.A})"
            return f"QuadExt({self.A}/{self.Q})"
        parts = []
        if self.A != 0:
            parts.append(str(self.A))
        b = f"{self.B}*sqrt({self.d})" if self.B != 1 else f"sqrt({self.d})"
        parts.append(b)
        s = "+".join(parts).replace("+-", "-")
        if self.Q == 1:
            return f"QuadExt({s})"
        return f"QuadExt(({s})/{self.Q})"


def _rebuild(A, B, Q, d):
    return QuadExt._mk(A, B, Q, d)


BACKEND = "pure"
