"""Exact scalar arithmetic over Q, Q[sqrt(2)] and Q[sqrt(3)].

Every coordinate, side length and predicate in this package runs on QuadExt,
an immutable exact number (a + b*sqrt(d)) with rational a, b and d in
{1, 2, 3}.  Two interchangeable backends provide the type: a Cython extension
(tripack._speedups) with overflow-checked 64-bit fast paths, and a pure-Python
reference (tripack._scalar_pure).  The extension is preferred when importable;
set TRIPACK_PURE=1 to force the pure backend.
"""

from __future__ import annotations

import os
from fractions import Fraction

if os.environ.get("TRIPACK_PURE"):
    from ._scalar_pure import (
        BACKEND,
        DivideByZero,
        QuadExt,
        QuadExtError,
        RadicandMismatch,
    )
else:
    try:
        from ._speedups import (
            BACKEND,
            DivideByZero,
            QuadExt,
            QuadExtError,
            RadicandMismatch,
        )
    except ImportError:
        from ._scalar_pure import (
            BACKEND,
            DivideByZero,
            QuadExt,
            QuadExtError,
            RadicandMismatch,
        )

__all__ = [
    "BACKEND",
    "QuadExt",
    "QuadExtError",
    "DivideByZero",
    "RadicandMismatch",
    "QE",
    "rat",
    "ZERO",
    "ONE",
    "TWO",
    "HALF",
    "SQRT2",
    "SQRT3",
    "parse_fraction",
    "format_fraction",
    "qe_to_json",
    "qe_from_json",
    "qe_arith",
    "qe_sign",
]


def QE(a=0, b=0, d=1):
    """Build a QuadExt from ints, Fractions or 'p/q' strings."""
    if isinstance(a, QuadExt):
        if b == 0:
            return a
        raise TypeError("cannot combine a QuadExt with extra components")
    if isinstance(a, str):
        a = parse_fraction(a)
    if isinstance(b, str):
        b = parse_fraction(b)
    return QuadExt(a, b, d)


def rat(p, q=1):
    """Exact rational p/q as a QuadExt."""
    return QuadExt(Fraction(p, q))


ZERO = QuadExt(0)
ONE = QuadExt(1)
TWO = QuadExt(2)
HALF = QuadExt(Fraction(1, 2))
SQRT2 = QuadExt(0, 1, 2)
SQRT3 = QuadExt(0, 1, 3)


def parse_fraction(s):
    """Parse a canonical 'p' or 'p/q' string into a Fraction."""
    s = s.strip()
    if "/" in s:
        p, q = s.split("/", 1)
        return Fraction(int(p), int(q))
    return Fraction(int(s))


def format_fraction(f):
    """Canonical 'p/q' string, 'p' when the denominator is 1."""
    f = Fraction(f)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def qe_to_json(x):
    """JSON form: a 'p/q' string for rationals, {'a','b','d'} otherwise."""
    if x.is_rational():
        return format_fraction(x.as_fraction())
    return {"a": format_fraction(x.a), "b": format_fraction(x.b), "d": x.d}


def qe_from_json(obj):
    if isinstance(obj, str):
        return QuadExt(parse_fraction(obj))
    if isinstance(obj, int):
        return QuadExt(obj)
    if isinstance(obj, dict):
        d = obj.get("d", 1)
        if d not in (1, 2, 3):
            raise ValueError(f"bad radicand {d!r}")
        a = parse_fraction(obj.get("a", "0"))
        b = parse_fraction(obj.get("b", "0"))
        return QuadExt(a, b, d)
    raise ValueError(f"cannot parse scalar from {obj!r}")


def qe_arith(x, y, op):
    """Named-op arithmetic entry point: op in {add, sub, mul, div}."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown op {op!r}")


def qe_sign(x):
    """Exact sign of x in {-1, 0, +1}."""
    return x.sign()
