"""Seeded instance generation with exact squared-size budgets.

An instance is a list of positive sides for one triangle family.  The
generator hits the prescribed density exactly: the sides are rationals p_i/D
(diagonal family: multiples of sqrt(2)) whose squares sum to density times
the family budget, found by shaping integer squares with a deterministic PRNG
and closing the sum exactly through a two-square tail search.  The same
(family, density, n, seed, profile) always reproduces the same instance.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import isqrt

from .scalar import QuadExt

FAMILIES = ("iso_axis", "iso_diag", "equilateral")
PROFILES = ("uniform_split", "geometric", "few_big")

DEFAULT_DENOM_BOUND = 10 ** 6

_MASK = (1 << 64) - 1


class GeneratorInfeasible(ValueError):
    """No rational side multiset can meet the exact budget for this n."""


class SplitMix64:
    """Deterministic 64-bit PRNG (splitmix64)."""

    __slots__ = ("state",)

    def __init__(self, seed):
        self.state = seed & _MASK

    def next_u64(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n):
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        return self.next_u64() % n


def _strip_fours(n):
    while n % 4 == 0:
        n //= 4
    return n


def _is_square(n):
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


def _two_square_feasible(n):
    # every prime 3 mod 4 must divide to an even power
    if n <= 0:
        return False
    n = _strip_fours(n)
    d = 3
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            if d % 4 == 3 and e % 2 == 1:
                return False
        d += 2 if d > 3 else 2
    if n > 1 and n % 4 == 3:
        return False
    return True


def _check_feasible(n_terms, pq):
    # with target p/q, any integer split solves sum a_i^2 = p*q*m^2, so the
    # classical square / two-square / three-square obstructions on p*q decide
    # feasibility for n <= 3 regardless of the denominator chosen
    if n_terms == 1 and not _is_square(pq):
        raise GeneratorInfeasible(
            f"one exact side needs {pq} to be a perfect square")
    if n_terms == 2 and not _two_square_feasible(pq):
        raise GeneratorInfeasible(
            f"two exact sides need {pq} to be a sum of two squares, "
            f"which it is not")
    if n_terms == 3 and _strip_fours(pq) % 8 == 7:
        raise GeneratorInfeasible(
            f"three exact sides need {pq} to be a sum of three squares, "
            f"which it is not")


def _two_square_tail(r, hi_cap, scan_limit=200000):
    """Find a >= b >= 1 with a^2 + b^2 = r and a <= hi_cap, or None."""
    if r < 2:
        return None
    a_top = isqrt(r - 1)
    if hi_cap is not None and hi_cap < a_top:
        a_top = hi_cap
    a_bot = isqrt((r - 1) // 2)
    steps = 0
    for a in range(a_top, a_bot, -1):
        b2 = r - a * a
        b = isqrt(b2)
        if b >= 1 and b * b == b2 and b <= a:
            return a, b
        steps += 1
        if steps >= scan_limit:
            return None
    return None


def _profile_weights(profile, n):
    if profile == "uniform_split":
        return [4] * n
    if profile == "geometric":
        w = []
        num, den = 1, 1
        for _ in range(n):
            w.append(max(1, 256 * num // den))
            num, den = num * 4, den * 5
        return w
    if profile == "few_big":
        big = max(1, n // 10 + 1)
        return [64] * big + [1] * (n - big)
    raise ValueError(f"unknown profile {profile!r}")


def _try_split(total, n, weights, rng):
    """n positive integers with squares summing to total, shaped by weights."""
    if n == 1:
        r = isqrt(total)
        return [r] if r * r == total else None
    wsum = sum(weights)
    prefix = []
    remaining = total
    for i in range(n - 2):
        share = total * weights[i] // wsum
        p = isqrt(max(share, 1))
        if p > 1:
            jitter = rng.below(max(p // 3, 1) + 1)
            p = p - jitter if rng.below(2) else p + jitter
        p = max(p, 1)
        # keep enough squared budget for the remaining slots
        slots_left = n - 1 - i
        while p > 1 and remaining - p * p < 2 * slots_left:
            p -= 1
        if remaining - p * p < 2 * slots_left:
            return None
        prefix.append(p)
        remaining -= p * p
    tail = _two_square_tail(remaining, None)
    if tail is None:
        return None
    return prefix + [tail[0], tail[1]]


def generate_sides(n, target, seed, profile):
    """n positive rationals whose squares sum to `target` exactly."""
    if n < 1:
        raise ValueError("need at least one side")
    target = Fraction(target)
    if target <= 0:
        raise ValueError("squared-size budget must be positive")
    p, q = target.numerator, target.denominator
    _check_feasible(n, p * q)
    rng = SplitMix64(seed)
    weights = _profile_weights(profile, n)
    denom_bound = int(os.environ.get("TRIPACK_DENOM_BOUND", DEFAULT_DENOM_BOUND))
    m = 1
    # scale up so the integer budget comfortably exceeds the slot minimum
    while p * q * m * m < 16 * n:
        m += 1
    attempts_per_m = 64
    while True:
        denom = q * m
        total = p * q * m * m
        for _ in range(attempts_per_m):
            ps = _try_split(total, n, weights, rng)
            if ps is not None:
                sides = sorted((Fraction(v, denom) for v in ps), reverse=True)
                assert sum(s * s for s in sides) == target
                return sides
        if denom <= denom_bound:
            m += 1 + rng.below(3)
        else:
            # soft cap passed: keep widening so generation still terminates
            m = m * 2 + 1 + rng.below(5)


def gen_instance(family, density, n, seed, profile):
    """Build an instance whose squared sides sum exactly to density x budget
    (budget 1 for iso_axis/equilateral, 1/2 for iso_diag)."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if profile not in PROFILES:
        raise ValueError(f"unknown profile {profile!r}")
    density = Fraction(density)
    if not (0 < density <= 1):
        raise ValueError(f"density must be in (0, 1], got {density}")
    if family == "iso_diag":
        # sides b*sqrt(2): sum of t^2 = 2*sum b^2 = density/2
        coeffs = generate_sides(n, density / 4, seed, profile)
        sides = [QuadExt(0, b, 2) for b in coeffs]
    else:
        sides = [QuadExt(s) for s in generate_sides(n, density, seed, profile)]
    meta = {
        "seed": int(seed),
        "density": density,
        "profile": profile,
        "generator": "tripack-gen/1",
    }
    return Instance(family, sides, meta)


class Instance:
    __slots__ = ("family", "sides", "meta")

    def __init__(self, family, sides, meta=None):
        if family not in FAMILIES:
            raise ValueError(f"unknown family {family!r}")
        self.family = family
        self.sides = list(sides)
        self.meta = dict(meta or {})

    def sum_squares(self):
        s = QuadExt(0)
        for t in self.sides:
            s = s + t * t
        return s
