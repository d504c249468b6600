"""Greedy layer packers for the four container shapes.

All four engines run the same machine: triangles arrive in descending size;
a layer's first triangle sits BASE at the layer's start cursor and fixes the
layer height; after each BASE of size u ending at x-edge e, the next triangle
first tries ROTATED nested against it (anchored at e), else a fresh BASE at
the cursor; when neither fits the layer closes and the triangle opens a new
layer directly above.  All fit tests are non-strict, so zero headroom fits.

The machine never needs to try BASE after a failed ROTATED inside one layer:
in every engine the BASE test at the same edge is at least as strict, so a
ROTATED failure already proves the layer is full.
"""

from __future__ import annotations

from .geometry import FAMILY_EQ, FAMILY_ISO, ORIENT_BASE, ORIENT_ROTATED, make_placement
from .scalar import QE, QuadExt, SQRT3, ZERO, qe_to_json

VERTICAL_OVERFLOW = "VERTICAL_OVERFLOW"
FIRST_TOO_BIG = "FIRST_TOO_BIG"

_SQRT3_HALF = SQRT3 / 2
_SQRT3_THIRD = SQRT3 / 3

ISO_RECT = "ISO_RECT"
ISO_TRI = "ISO_TRI"
EQ_RECT = "EQ_RECT"
EQ_TRAP = "EQ_TRAP"


class PackFailure:
    """The triangle at stop_index (1-based) stopped the packing."""

    __slots__ = ("stop_index", "reason", "achieved_area")

    def __init__(self, stop_index, reason, achieved_area):
        self.stop_index = stop_index
        self.reason = reason
        self.achieved_area = achieved_area

    def to_json(self):
        return {"stop_index": self.stop_index, "reason": self.reason,
                "achieved_area": qe_to_json(self.achieved_area)}

    def __repr__(self):
        return (f"PackFailure(stop_index={self.stop_index}, {self.reason}, "
                f"achieved_area={self.achieved_area!r})")


def _coerce_dim(v, name):
    v = v if isinstance(v, QuadExt) else QE(v)
    if v.sign() <= 0:
        raise ValueError(f"{name} must be positive, got {v!r}")
    return v


def _coerce_sizes(sizes):
    out = []
    prev = None
    for t in sizes:
        t = t if isinstance(t, QuadExt) else QE(t)
        if t.sign() <= 0:
            raise ValueError(f"sizes must be positive, got {t!r}")
        if prev is not None and t > prev:
            raise ValueError("sizes must be sorted in descending order")
        out.append(t)
        prev = t
    return out


def _run_layers(sizes, family, fresh_ok, start_cursor, base_ok, rot_ok,
                layer_height, rot_anchor_y):
    placements = []
    achieved = ZERO
    y0 = ZERO
    layer_h = None
    cursor = None
    expect_rotated = False
    for k, t in enumerate(sizes, start=1):
        while True:
            if layer_h is None:
                if not fresh_ok(t, y0):
                    return PackFailure(k, VERTICAL_OVERFLOW, achieved)
                x = start_cursor(y0)
                if not base_ok(x, t, y0):
                    return PackFailure(k, VERTICAL_OVERFLOW, achieved)
                pl = make_placement(family, ORIENT_BASE, t, (x, y0),
                                    index=len(placements))
                layer_h = layer_height(t)
                cursor = x + t
                expect_rotated = True
                break
            if expect_rotated and rot_ok(cursor, t, y0):
                pl = make_placement(family, ORIENT_ROTATED, t,
                                    (cursor, rot_anchor_y(t, y0)),
                                    index=len(placements))
                expect_rotated = False
                break
            if not expect_rotated and base_ok(cursor, t, y0):
                pl = make_placement(family, ORIENT_BASE, t, (cursor, y0),
                                    index=len(placements))
                cursor = cursor + t
                expect_rotated = True
                break
            y0 = y0 + layer_h
            layer_h = None
        placements.append(pl)
        achieved = achieved + pl.area()
    return placements


def pack_iso_rect(a, b, sizes):
    """Layer-pack descending isosceles right triangles into [0,a] x [0,b]."""
    a = _coerce_dim(a, "a")
    b = _coerce_dim(b, "b")
    szs = _coerce_sizes(sizes)
    if szs and szs[0] >= min(a, b):
        return PackFailure(1, FIRST_TOO_BIG, ZERO)
    return _run_layers(
        szs, FAMILY_ISO,
        fresh_ok=lambda t, y0: y0 + t <= b,
        start_cursor=lambda y0: ZERO,
        base_ok=lambda x, t, y0: x + t <= a,
        # a nested ROTATED never outgrows the pair cell of the BASE before it
        rot_ok=lambda edge, t, y0: True,
        layer_height=lambda t: t,
        rot_anchor_y=lambda t, y0: y0 + t,
    )


def pack_iso_tri(c, sizes):
    """Layer-pack into the right triangle with legs [0,c] on the axes.

    Both the BASE and nested-ROTATED fit tests reduce to the hypotenuse
    constraint corner_x + t + y0 <= c.
    """
    c = _coerce_dim(c, "c")
    szs = _coerce_sizes(sizes)
    if szs and szs[0] >= c:
        return PackFailure(1, FIRST_TOO_BIG, ZERO)
    return _run_layers(
        szs, FAMILY_ISO,
        fresh_ok=lambda t, y0: y0 + t <= c,
        start_cursor=lambda y0: ZERO,
        base_ok=lambda x, t, y0: x + t + y0 <= c,
        rot_ok=lambda edge, t, y0: edge + t + y0 <= c,
        layer_height=lambda t: t,
        rot_anchor_y=lambda t, y0: y0 + t,
    )


def pack_eq_rect(a, h, sizes):
    """Layer-pack descending equilateral triangles into [0,a] x [0,h]."""
    a = _coerce_dim(a, "a")
    h = _coerce_dim(h, "h")
    szs = _coerce_sizes(sizes)
    if szs and szs[0] >= min(a, 2 * h / SQRT3):
        return PackFailure(1, FIRST_TOO_BIG, ZERO)
    return _run_layers(
        szs, FAMILY_EQ,
        fresh_ok=lambda t, y0: y0 + _SQRT3_HALF * t <= h,
        start_cursor=lambda y0: ZERO,
        base_ok=lambda x, t, y0: x + t <= a,
        rot_ok=lambda edge, t, y0: edge + t / 2 <= a,
        layer_height=lambda t: _SQRT3_HALF * t,
        rot_anchor_y=lambda t, y0: y0,
    )


def pack_eq_trap(b, h, sizes):
    """Layer-pack equilateral triangles into the canonical 60-degree right
    trapezoid (0,0), (L,0), (L,h), (L-b,h) with L = b + sqrt(3)h/3.

    Each layer's cursor starts flush on the slant at x = y0/sqrt(3); there is
    no first-size hypothesis, so every stop is a VERTICAL_OVERFLOW.
    """
    b = _coerce_dim(b, "b")
    h = _coerce_dim(h, "h")
    L = b + _SQRT3_THIRD * h
    szs = _coerce_sizes(sizes)
    return _run_layers(
        szs, FAMILY_EQ,
        fresh_ok=lambda t, y0: y0 + _SQRT3_HALF * t <= h,
        start_cursor=lambda y0: _SQRT3_THIRD * y0,
        base_ok=lambda x, t, y0: x + t <= L,
        rot_ok=lambda edge, t, y0: edge + t / 2 <= L,
        layer_height=lambda t: _SQRT3_HALF * t,
        rot_anchor_y=lambda t, y0: y0,
    )


def guarantee_bound(engine, dims, t1):
    """Exact guaranteed-total-area threshold for a layer engine."""
    t1 = t1 if isinstance(t1, QuadExt) else QE(t1)
    if engine == ISO_RECT:
        a, b = (QE(d) for d in dims)
        return t1 * t1 / 2 + (a - t1) * (b - t1)
    if engine == ISO_TRI:
        (c,) = (QE(d) for d in dims)
        e = c - t1
        return t1 * t1 / 2 + e * e / 2
    if engine == EQ_RECT:
        a, h = (QE(d) for d in dims)
        return SQRT3 / 4 * t1 * t1 + (a - t1) * (h - _SQRT3_HALF * t1)
    if engine == EQ_TRAP:
        b, h = (QE(d) for d in dims)
        return (SQRT3 / 4 * t1 * t1
                + (b - 3 * t1 / 4 + SQRT3 / 6 * h) * (h - _SQRT3_HALF * t1))
    raise ValueError(f"unknown engine {engine!r}")


def pack(engine, dims, sizes):
    """Dispatch to a layer engine by name."""
    if engine == ISO_RECT:
        return pack_iso_rect(dims[0], dims[1], sizes)
    if engine == ISO_TRI:
        return pack_iso_tri(dims[0], sizes)
    if engine == EQ_RECT:
        return pack_eq_rect(dims[0], dims[1], sizes)
    if engine == EQ_TRAP:
        return pack_eq_trap(dims[0], dims[1], sizes)
    raise ValueError(f"unknown engine {engine!r}")
