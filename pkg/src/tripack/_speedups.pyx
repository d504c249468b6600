# cython: language_level=3
"""Compiled backend for exact scalars (A + B*sqrt(d)) / Q.

Same semantics as tripack._scalar_pure.QuadExt.  Values whose components fit
in 64 bits run on overflow-checked C integer arithmetic; anything larger falls
back to Python big integers transparently.
"""

from fractions import Fraction
from math import gcd as _pygcd, sqrt as _fsqrt

from cpython.long cimport PyLong_AsLongLongAndOverflow
from libc.stdint cimport int64_t

cdef extern from *:
    """
    #include <stdint.h>
    static int tp_add_ovf(int64_t a, int64_t b, int64_t *r)
    { return __builtin_add_overflow(a, b, r); }
    static int tp_sub_ovf(int64_t a, int64_t b, int64_t *r)
    { return __builtin_sub_overflow(a, b, r); }
    static int tp_mul_ovf(int64_t a, int64_t b, int64_t *r)
    { return __builtin_mul_overflow(a, b, r); }
    """
    int tp_add_ovf(int64_t a, int64_t b, int64_t *r) nogil
    int tp_sub_ovf(int64_t a, int64_t b, int64_t *r) nogil
    int tp_mul_ovf(int64_t a, int64_t b, int64_t *r) nogil


class QuadExtError(ArithmeticError):
    pass


class DivideByZero(QuadExtError, ZeroDivisionError):
    pass


class RadicandMismatch(QuadExtError):
    pass


cdef inline int64_t c_gcd(int64_t a, int64_t b) nogil:
    cdef int64_t t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef QuadExt _mk_small(int64_t A, int64_t B, int64_t Q, int d):
    # canonicalize and build without __init__
    cdef int64_t g
    if Q < 0:
        A = -A
        B = -B
        Q = -Q
    g = c_gcd(c_gcd(A, B), Q)
    if g > 1:
        A //= g
        B //= g
        Q //= g
    if B == 0:
        d = 1
    cdef QuadExt self = QuadExt.__new__(QuadExt)
    self.cA = A
    self.cB = B
    self.cQ = Q
    self.d = d
    self.big = False
    self.oA = None
    self.oB = None
    self.oQ = None
    return self


cdef QuadExt _mk_obj(object A, object B, object Q, int d):
    cdef int64_t a64, b64, q64
    cdef int ovf
    if Q == 0:
        raise DivideByZero("zero denominator")
    if Q < 0:
        A = -A
        B = -B
        Q = -Q
    g = _pygcd(_pygcd(A if A >= 0 else -A, B if B >= 0 else -B), Q)
    if g > 1:
        A //= g
        B //= g
        Q //= g
    if B == 0:
        d = 1
    a64 = PyLong_AsLongLongAndOverflow(A, &ovf)
    if not ovf:
        b64 = PyLong_AsLongLongAndOverflow(B, &ovf)
        if not ovf:
            q64 = PyLong_AsLongLongAndOverflow(Q, &ovf)
            if not ovf:
                return _mk_small(a64, b64, q64, d)
    cdef QuadExt self = QuadExt.__new__(QuadExt)
    self.big = True
    self.oA = A
    self.oB = B
    self.oQ = Q
    self.d = d
    self.cA = 0
    self.cB = 0
    self.cQ = 1
    return self


cdef inline object _getA(QuadExt x):
    return x.oA if x.big else x.cA


cdef inline object _getB(QuadExt x):
    return x.oB if x.big else x.cB


cdef inline object _getQ(QuadExt x):
    return x.oQ if x.big else x.cQ


cdef int _join_d(QuadExt x, QuadExt y) except -1:
    if x.d == y.d:
        return x.d
    if (x.cB == 0 and not x.big) or (x.big and x.oB == 0):
        return y.d
    if (y.cB == 0 and not y.big) or (y.big and y.oB == 0):
        return x.d
    raise RadicandMismatch(f"cannot mix sqrt({x.d}) with sqrt({y.d})")


cdef QuadExt _coerce(object v):
    cdef int64_t v64
    cdef int ovf
    if type(v) is QuadExt:
        return <QuadExt> v
    if isinstance(v, QuadExt):
        return <QuadExt> v
    if isinstance(v, int):
        v64 = PyLong_AsLongLongAndOverflow(v, &ovf)
        if not ovf:
            return _mk_small(v64, 0, 1, 1)
        return _mk_obj(v, 0, 1, 1)
    return None


cdef class QuadExt:
    """Exact element of Q[sqrt(d)] for d in {1, 2, 3}, stored as (A + B*sqrt(d))/Q."""

    cdef int64_t cA, cB, cQ
    cdef object oA, oB, oQ
    cdef readonly int d
    cdef bint big

    def __init__(self, a=0, b=0, d=1):
        if d not in (1, 2, 3):
            raise ValueError(f"radicand must be 1, 2 or 3, got {d!r}")
        an, ad = _frac_parts(a)
        bn, bd = _frac_parts(b)
        if d == 1:
            an, ad = an * bd + bn * ad, ad * bd
            bn, bd = 0, 1
        cdef QuadExt r = _mk_obj(an * bd, bn * ad, ad * bd, d)
        self.cA = r.cA
        self.cB = r.cB
        self.cQ = r.cQ
        self.oA = r.oA
        self.oB = r.oB
        self.oQ = r.oQ
        self.d = r.d
        self.big = r.big

    @property
    def A(self):
        return self.oA if self.big else self.cA

    @property
    def B(self):
        return self.oB if self.big else self.cB

    @property
    def Q(self):
        return self.oQ if self.big else self.cQ

    @property
    def a(self):
        return Fraction(self.A, self.Q)

    @property
    def b(self):
        return Fraction(self.B, self.Q)

    def is_rational(self):
        return (self.oB == 0) if self.big else (self.cB == 0)

    def as_fraction(self):
        if not self.is_rational():
            raise ValueError("not a rational value")
        return Fraction(self.A, self.Q)

    def as_float(self):
        return (self.A + self.B * _fsqrt(self.d)) / self.Q

    def __float__(self):
        return self.as_float()

    # -- arithmetic --------------------------------------------------------

    def __add__(x, y):
        cdef QuadExt a = _coerce(x)
        cdef QuadExt b = _coerce(y)
        cdef int64_t A, B, Q, t1, t2
        if a is None or b is None:
            return NotImplemented
        cdef int d = _join_d(a, b)
        if not a.big and not b.big:
            if (not tp_mul_ovf(a.cA, b.cQ, &t1) and not tp_mul_ovf(b.cA, a.cQ, &t2)
                    and not tp_add_ovf(t1, t2, &A)):
                if (not tp_mul_ovf(a.cB, b.cQ, &t1) and not tp_mul_ovf(b.cB, a.cQ, &t2)
                        and not tp_add_ovf(t1, t2, &B)):
                    if not tp_mul_ovf(a.cQ, b.cQ, &Q):
                        return _mk_small(A, B, Q, d)
        return _mk_obj(
            _getA(a) * _getQ(b) + _getA(b) * _getQ(a),
            _getB(a) * _getQ(b) + _getB(b) * _getQ(a),
            _getQ(a) * _getQ(b),
            d,
        )

    def __sub__(x, y):
        cdef QuadExt a = _coerce(x)
        cdef QuadExt b = _coerce(y)
        cdef int64_t A, B, Q, t1, t2
        if a is None or b is None:
            return NotImplemented
        cdef int d = _join_d(a, b)
        if not a.big and not b.big:
            if (not tp_mul_ovf(a.cA, b.cQ, &t1) and not tp_mul_ovf(b.cA, a.cQ, &t2)
                    and not tp_sub_ovf(t1, t2, &A)):
                if (not tp_mul_ovf(a.cB, b.cQ, &t1) and not tp_mul_ovf(b.cB, a.cQ, &t2)
                        and not tp_sub_ovf(t1, t2, &B)):
                    if not tp_mul_ovf(a.cQ, b.cQ, &Q):
                        return _mk_small(A, B, Q, d)
        return _mk_obj(
            _getA(a) * _getQ(b) - _getA(b) * _getQ(a),
            _getB(a) * _getQ(b) - _getB(b) * _getQ(a),
            _getQ(a) * _getQ(b),
            d,
        )

    def __mul__(x, y):
        cdef QuadExt a = _coerce(x)
        cdef QuadExt b = _coerce(y)
        cdef int64_t A, B, Q, t1, t2, t3
        if a is None or b is None:
            return NotImplemented
        cdef int d = _join_d(a, b)
        if not a.big and not b.big:
            if (not tp_mul_ovf(a.cA, b.cA, &t1) and not tp_mul_ovf(a.cB, b.cB, &t2)
                    and not tp_mul_ovf(t2, d, &t3) and not tp_add_ovf(t1, t3, &A)):
                if (not tp_mul_ovf(a.cA, b.cB, &t1) and not tp_mul_ovf(b.cA, a.cB, &t2)
                        and not tp_add_ovf(t1, t2, &B)):
                    if not tp_mul_ovf(a.cQ, b.cQ, &Q):
                        return _mk_small(A, B, Q, d)
        return _mk_obj(
            _getA(a) * _getA(b) + d * _getB(a) * _getB(b),
            _getA(a) * _getB(b) + _getA(b) * _getB(a),
            _getQ(a) * _getQ(b),
            d,
        )

    def __truediv__(x, y):
        cdef QuadExt a = _coerce(x)
        cdef QuadExt b = _coerce(y)
        cdef int64_t A, B, Q, den, t1, t2, t3
        if a is None or b is None:
            return NotImplemented
        cdef int d = _join_d(a, b)
        if not a.big and not b.big:
            if (not tp_mul_ovf(b.cA, b.cA, &t1) and not tp_mul_ovf(b.cB, b.cB, &t2)
                    and not tp_mul_ovf(t2, d, &t3) and not tp_sub_ovf(t1, t3, &den)):
                if den == 0:
                    raise DivideByZero("division by zero")
                if (not tp_mul_ovf(a.cA, b.cA, &t1) and not tp_mul_ovf(a.cB, b.cB, &t2)
                        and not tp_mul_ovf(t2, d, &t3) and not tp_sub_ovf(t1, t3, &A)
                        and not tp_mul_ovf(A, b.cQ, &A)):
                    if (not tp_mul_ovf(a.cB, b.cA, &t1) and not tp_mul_ovf(a.cA, b.cB, &t2)
                            and not tp_sub_ovf(t1, t2, &B) and not tp_mul_ovf(B, b.cQ, &B)):
                        if not tp_mul_ovf(a.cQ, den, &Q):
                            return _mk_small(A, B, Q, d)
        oden = _getA(b) * _getA(b) - d * _getB(b) * _getB(b)
        if oden == 0:
            raise DivideByZero("division by zero")
        return _mk_obj(
            _getQ(b) * (_getA(a) * _getA(b) - d * _getB(a) * _getB(b)),
            _getQ(b) * (_getB(a) * _getA(b) - _getA(a) * _getB(b)),
            _getQ(a) * oden,
            d,
        )

    def __radd__(self, y):
        return self.__add__(y)

    def __rmul__(self, y):
        return self.__mul__(y)

    def __rsub__(self, y):
        cdef QuadExt b = _coerce(y)
        if b is None:
            return NotImplemented
        return b.__sub__(self)

    def __rtruediv__(self, y):
        cdef QuadExt b = _coerce(y)
        if b is None:
            return NotImplemented
        return b.__truediv__(self)

    def __neg__(self):
        if not self.big:
            if self.cA != -9223372036854775807 - 1 and self.cB != -9223372036854775807 - 1:
                return _mk_small(-self.cA, -self.cB, self.cQ, self.d)
        return _mk_obj(-_getA(self), -_getB(self), _getQ(self), self.d)

    def __pos__(self):
        return self

    def __abs__(self):
        return self.__neg__() if self.sign() < 0 else self

    def __bool__(self):
        if self.big:
            return self.oA != 0 or self.oB != 0
        return self.cA != 0 or self.cB != 0

    # -- exact sign and order ----------------------------------------------

    cdef int _csign(self):
        cdef int64_t A, B, aa, dbb, t
        if self.big:
            return _obj_sign(self.oA, self.oB, self.d)
        A = self.cA
        B = self.cB
        if B == 0:
            return (A > 0) - (A < 0)
        if A == 0:
            return 1 if B > 0 else -1
        if A > 0 and B > 0:
            return 1
        if A < 0 and B < 0:
            return -1
        if not tp_mul_ovf(A, A, &aa) and not tp_mul_ovf(B, B, &t) and not tp_mul_ovf(t, self.d, &dbb):
            if aa == dbb:
                return 0
            if aa > dbb:
                return 1 if A > 0 else -1
            return 1 if B > 0 else -1
        return _obj_sign(A, B, self.d)

    def sign(self):
        return self._csign()

    cdef int _ccmp(self, QuadExt o) except? -2:
        cdef object r = self.__sub__(o)
        return (<QuadExt> r)._csign()

    def __richcmp__(x, y, int op):
        cdef QuadExt a = _coerce(x)
        cdef QuadExt b = _coerce(y)
        if a is None or b is None:
            return NotImplemented
        cdef int c = a._ccmp(b)
        if op == 0:
            return c < 0
        if op == 1:
            return c <= 0
        if op == 2:
            return c == 0
        if op == 3:
            return c != 0
        if op == 4:
            return c > 0
        return c >= 0

    def __hash__(self):
        B = self.B
        Q = self.Q
        if B == 0 and Q == 1:
            return hash(self.A)
        if B == 0:
            return hash(Fraction(self.A, Q))
        return hash((self.A, B, Q, self.d))

    def __repr__(self):
        A, B, Q = self.A, self.B, self.Q
        if B == 0:
            if Q == 1:
                return f"QuadExt({A})"
            return f"QuadExt({A}/{Q})"
        parts = []
        if A != 0:
            parts.append(str(A))
        bs = f"{B}*sqrt({self.d})" if B != 1 else f"sqrt({self.d})"
        parts.append(bs)
        s = "+".join(parts).replace("+-", "-")
        if Q == 1:
            return f"QuadExt({s})"
        return f"QuadExt(({s})/{Q})"

    def __reduce__(self):
        return (_rebuild, (self.A, self.B, self.Q, self.d))


def _rebuild(A, B, Q, d):
    return _mk_obj(A, B, Q, d)


cdef int _obj_sign(object A, object B, int d):
    if B == 0:
        return (A > 0) - (A < 0)
    if A == 0:
        return 1 if B > 0 else -1
    if A > 0 and B > 0:
        return 1
    if A < 0 and B < 0:
        return -1
    aa = A * A
    dbb = d * B * B
    if aa == dbb:
        return 0
    if aa > dbb:
        return 1 if A > 0 else -1
    return 1 if B > 0 else -1


def _frac_parts(v):
    if isinstance(v, int):
        return v, 1
    if isinstance(v, Fraction):
        return v.numerator, v.denominator
    raise TypeError(f"expected int or Fraction, got {type(v).__name__}")


BACKEND = "compiled"
