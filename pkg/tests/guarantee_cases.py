"""Shared builder for randomized layer-engine inputs satisfying the
per-engine guarantee hypothesis (t1 under the cap, total area within
guarantee_bound). Imported by the layer unit tests and the acceptance
suite."""

from fractions import Fraction

from tripack.geometry import iso_tri, rect, right_trap
from tripack.layers import (EQ_RECT, EQ_TRAP, ISO_RECT, ISO_TRI,
                            guarantee_bound)
from tripack.scalar import QE, SQRT3


def container_for(engine, dims):
    if engine == ISO_RECT:
        return rect(dims[0], dims[1])
    if engine == ISO_TRI:
        return iso_tri(dims[0])
    if engine == EQ_RECT:
        return rect(dims[0], dims[1])
    return right_trap(dims[0], dims[1])


def _area(engine, t):
    if engine in (ISO_RECT, ISO_TRI):
        return t * t / 2
    return SQRT3 / 4 * t * t


def random_case(rng, engine):
    """Random (dims, sizes) with t1 under the engine cap and total area
    within guarantee_bound: the no-failure hypothesis."""
    a = Fraction(rng.randint(4, 40), rng.randint(1, 4))
    b = Fraction(rng.randint(4, 40), rng.randint(1, 4))
    if engine == ISO_RECT:
        dims, cap = (QE(a), QE(b)), QE(min(a, b))
    elif engine == ISO_TRI:
        dims, cap = (QE(a),), QE(a)
    elif engine == EQ_RECT:
        dims, cap = (QE(a), QE(b)), min(QE(a), QE(b) * 2 / SQRT3)
    else:
        # trapezoid: t1 must fit the first layer and clear the height
        big_l = QE(a) + SQRT3 / 3 * QE(b)
        dims, cap = (QE(a), QE(b)), min(big_l, QE(b) * 2 / SQRT3)
    t1 = QE(Fraction(rng.randint(1, 99), 100)) * cap
    if t1.sign() == 0:
        t1 = cap / 2
    budget = guarantee_bound(engine, dims, t1)
    area1 = _area(engine, t1)
    # shrink t1 until its own area obeys the bound (the hypothesis is
    # vacuous otherwise; only the trapezoid can hit this)
    for _ in range(40):
        if area1 <= budget:
            break
        t1 = t1 / 2
        budget = guarantee_bound(engine, dims, t1)
        area1 = _area(engine, t1)
    if area1 > budget:
        return dims, []
    sizes = [t1]
    used = area1
    cur = t1
    for _ in range(rng.randint(0, 25)):
        cur = cur * QE(Fraction(rng.randint(30, 100), 100))
        if cur.sign() == 0:
            break
        nxt = _area(engine, cur)
        if used + nxt > budget:
            continue
        sizes.append(cur)
        used = used + nxt
    return dims, sizes
