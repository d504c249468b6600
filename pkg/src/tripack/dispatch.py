"""Unit-square packers: case dispatch, certified configuration search, bounds.

Three entry points, one per triangle family: axis-parallel isosceles right
triangles (two-case construction), diagonal-parallel ones (the same
construction run in a 45-degree frame on a side-sqrt(2)/2 square), and
equilateral triangles (a three-case machine whose non-trivial cases run an
ordered catalog of candidate configurations, each validated exactly before it
is allowed to win).

Every success returns placements plus the validator's certificate; the
guarantees are checked up front, so a packing failure past the area check is
a bug and raises InternalStop instead of failing silently.
"""

from __future__ import annotations

from .certify import Violation, validate_packing
from .geometry import (FAMILY_EQ, FAMILY_ISO, FAMILY_ISO_DIAG, ORIENT_BASE,
                       ORIENT_ROTATED, Placement, make_placement, map_placement,
                       unit_square)
from .layers import PackFailure, pack_eq_rect, pack_eq_trap, pack_iso_rect, pack_iso_tri
from .scalar import HALF, ONE, QE, QuadExt, SQRT2, SQRT3, ZERO, qe_to_json

_SQRT3_HALF = SQRT3 / 2
_SQRT3_THIRD = SQRT3 / 3
_SQRT2_HALF = SQRT2 / 2
_TWO_FIFTHS = QE("2/5")

CRITICAL_ISO_AXIS = HALF
CRITICAL_ISO_DIAG = QE("1/4")
CRITICAL_EQ = SQRT3 / 4


class DispatchError(Exception):
    pass


class AreaBoundExceeded(DispatchError):
    """Total area exceeds the family's guarantee; no packing is attempted."""

    def __init__(self, total, bound):
        self.total = total
        self.bound = bound
        super().__init__(f"total area {total!r} exceeds the guarantee {bound!r}")


class Unpackable(DispatchError):
    """A single triangle already cannot fit (side over the family's cap)."""

    def __init__(self, size, cap):
        self.size = size
        self.cap = cap
        super().__init__(f"size {size!r} exceeds the packable maximum {cap!r}")


class InternalStop(DispatchError):
    """A construction failed although the guarantee held: a reportable bug."""

    def __init__(self, message, trace=None, failure=None):
        self.trace = trace
        self.failure = failure
        super().__init__(message)


class CaseTrace:
    __slots__ = ("case_path", "candidate", "explicit", "residual", "bound_checked")

    def __init__(self, case_path, candidate, explicit, residual, bound_checked):
        self.case_path = case_path
        self.candidate = candidate
        self.explicit = explicit      # list of {"index": k, "rule": str}
        self.residual = residual      # dict or None
        self.bound_checked = bound_checked

    def to_json(self):
        out = {
            "case_path": self.case_path,
            "explicit": self.explicit,
            "bound_checked": qe_to_json(self.bound_checked),
        }
        if self.candidate is not None:
            out["candidate"] = self.candidate
        if self.residual is not None:
            out["residual"] = self.residual
        return out

    def describe(self):
        lines = [f"case_path: {self.case_path}"]
        if self.candidate:
            lines.append(f"candidate: {self.candidate}")
        for e in self.explicit:
            lines.append(f"  triangle {e['index']}: {e['rule']}")
        if self.residual:
            lines.append(f"  residual: {self.residual}")
        return "\n".join(lines)


class PackingResult:
    __slots__ = ("placements", "trace", "certificate")

    def __init__(self, placements, trace, certificate):
        self.placements = placements
        self.trace = trace
        self.certificate = certificate


def _coerce_sorted(sizes):
    out = []
    for t in sizes:
        t = t if isinstance(t, QuadExt) else QE(t)
        if t.sign() <= 0:
            raise ValueError(f"sizes must be positive, got {t!r}")
        out.append(t)
    out.sort(reverse=True)
    return out


def _padded(szs, k):
    return szs[k] if k < len(szs) else ZERO


def _sum_squares(szs):
    s = ZERO
    for t in szs:
        s = s + t * t
    return s


def _with_index(pl, k):
    return Placement(k, pl.family, pl.orientation, pl.size, pl.vertices)


def _reindex(explicit, residual_placements, residual_map):
    """Assemble the final placement list: explicit (already indexed) plus
    engine placements mapped back into square coordinates."""
    out = list(explicit)
    base = len(out)
    sx, sy, dx, dy = residual_map
    for pl in residual_placements:
        mapped = map_placement(pl, sx, sy, dx, dy)
        out.append(_with_index(mapped, base + pl.index))
    return out


# -- isosceles: the two-case construction on a square of side L -------------


def _iso_cases(L, szs):
    """Yield (case_id, explicit placements, residual engine call) in frame
    coordinates for the two-case isosceles construction on [0,L]^2."""
    t1, t2, t3, t4 = (_padded(szs, k) for k in range(4))
    if t1 + t3 < L:
        explicit = []
        rules = []
        if t1.sign() > 0:
            explicit.append(make_placement(FAMILY_ISO, ORIENT_BASE, t1, (ZERO, ZERO), 0))
            rules.append("CORNER_BASE")
        if t2.sign() > 0:
            explicit.append(make_placement(FAMILY_ISO, ORIENT_ROTATED, t2, (t2, t1), 1))
            rules.append("NEST_ON_HYP(1)")
        if t3.sign() > 0:
            explicit.append(make_placement(FAMILY_ISO, ORIENT_BASE, t3, (ZERO, t1), 2))
            rules.append("STACK_ABOVE(1)")
        if t4.sign() > 0:
            explicit.append(make_placement(FAMILY_ISO, ORIENT_ROTATED, t4, (t3, t1 + t4), 3))
            rules.append("NEST_ON_HYP(3)")
        residual = ("ISO_RECT", (L - t2, L - t1 + t2), szs[4:], (1, 1, t2, t1 - t2))
        return "1", explicit, rules, residual
    explicit = []
    rules = []
    explicit.append(make_placement(FAMILY_ISO, ORIENT_BASE, t1, (ZERO, ZERO), 0))
    rules.append("CORNER_BASE")
    if t2.sign() > 0:
        explicit.append(make_placement(FAMILY_ISO, ORIENT_ROTATED, t2, (t1, t2), 1))
        rules.append("NEST_ON_HYP(1)")
    residual = ("ISO_TRI", (2 * L - t1 - t2,), szs[2:], (-1, -1, L, L))
    return "2", explicit, rules, residual


def _run_iso_construction(L, szs, path_prefix, bound):
    case_id, explicit, rules, residual = _iso_cases(L, szs)
    engine, dims, rest, rmap = residual
    trace = _iso_trace(path_prefix, case_id, explicit, rules, engine, dims,
                       len(rest), bound)
    placements = list(explicit)
    if rest:
        if engine == "ISO_RECT":
            packed = pack_iso_rect(dims[0], dims[1], rest)
        else:
            packed = pack_iso_tri(dims[0], rest)
        if isinstance(packed, PackFailure):
            raise InternalStop(
                f"layer engine failed inside case {path_prefix}/{case_id} "
                f"although the area guarantee held: {packed!r}",
                trace=trace, failure=packed)
        placements = _reindex(explicit, packed, rmap)
    return placements, trace


def _iso_trace(prefix, case_id, explicit, rules, engine, dims, rest_count, bound):
    residual = None
    if rest_count:
        residual = {
            "engine": engine,
            "dims": [qe_to_json(QE(d)) for d in dims],
            "count": rest_count,
        }
    return CaseTrace(
        f"{prefix}/{case_id}", None,
        [{"index": pl.index, "rule": rule} for pl, rule in zip(explicit, rules)],
        residual, bound)


def pack_unit_square_iso(sizes):
    """Pack axis-parallel isosceles right triangles into the unit square.

    Guarantee: any collection with total area at most 1/2 packs.
    """
    szs = _coerce_sorted(sizes)
    total_sq = _sum_squares(szs)
    if total_sq > ONE:
        raise AreaBoundExceeded(total_sq / 2, CRITICAL_ISO_AXIS)
    placements, trace = _run_iso_construction(ONE, szs, "ISO", CRITICAL_ISO_AXIS)
    result = validate_packing(unit_square(), placements)
    if isinstance(result, Violation):
        raise InternalStop(f"invalid output: {result.describe()}", trace=trace)
    return PackingResult(placements, trace, result)


def _frame_to_square(pl, k):
    """Map a frame placement (45-degree grid) to unit-square coordinates."""
    p, q = pl.vertices[0]
    anchor = (HALF + (p - q) * _SQRT2_HALF, (p + q) * _SQRT2_HALF)
    return make_placement(FAMILY_ISO_DIAG, pl.orientation, pl.size, anchor, k)


def pack_square_iso_diag(sizes):
    """Pack diagonal-parallel isosceles right triangles into the unit square.

    Runs the two-case construction on the inscribed side-sqrt(2)/2 square in
    a rotated frame and maps back exactly; guarantee: total area at most 1/4.
    """
    szs = _coerce_sorted(sizes)
    if szs and szs[0] > _SQRT2_HALF:
        raise Unpackable(szs[0], _SQRT2_HALF)
    total_sq = _sum_squares(szs)
    if total_sq > HALF:
        raise AreaBoundExceeded(total_sq / 2, CRITICAL_ISO_DIAG)
    frame_placements, trace = _run_iso_construction(_SQRT2_HALF, szs, "DIAG",
                                                    CRITICAL_ISO_DIAG)
    placements = [_frame_to_square(pl, k) for k, pl in enumerate(frame_placements)]
    result = validate_packing(unit_square(), placements)
    if isinstance(result, Violation):
        raise InternalStop(f"invalid output: {result.describe()}", trace=trace)
    return PackingResult(placements, trace, result)


# -- equilateral: case machine with certified configuration search ----------


class _Candidate:
    """One configuration: explicit anchored placements plus a residual region."""

    __slots__ = ("name", "explicit", "rules", "residual", "mirrored")

    def __init__(self, name, explicit, rules, residual, mirrored=False):
        self.name = name
        self.explicit = explicit    # list of (orientation, size, anchor)
        self.rules = rules
        self.residual = residual    # ("EQ_TRAP", b, h, map) | ("EQ_RECT", a, h, map)
        self.mirrored = mirrored


def _cand_ground_nest_r2(szs):
    """Corner BASE, apex-down nested at its right edge on the ground, one more
    BASE continuing the ground chain; residual trapezoid hangs from the top
    right, slant collinear with the corner triangle's right edge."""
    t1, t2, t3 = (_padded(szs, k) for k in range(3))
    if t1 > ONE or t1 + t2 / 2 > ONE or t1 + t3 > ONE:
        return None
    b = ONE - t1 + t2 / 2
    h = ONE - _SQRT3_HALF * t2
    if h.sign() <= 0:
        return None
    explicit = [
        (ORIENT_BASE, t1, (ZERO, ZERO)),
        (ORIENT_ROTATED, t2, (t1, ZERO)),
        (ORIENT_BASE, t3, (t1, ZERO)),
    ]
    rules = ["CORNER_BASE", "NEST_GROUND_APEX_DOWN(1)", "GROUND_CHAIN_BASE(2)"]
    residual = ("EQ_TRAP", (b, h), (1, -1, t1 - _SQRT3_THIRD, ONE))
    return _Candidate("ground_nest_r2", explicit, rules, residual)


def _cand_topflush_attic(szs):
    """Corner BASE; apex-down slid up the corner triangle's right-edge line
    until flush with the top side; a BASE in the attic against its right edge;
    residual trapezoid fills everything right of the line below the top band."""
    t1, t2, t3 = (_padded(szs, k) for k in range(3))
    if t1 > ONE or t2 > ONE + _SQRT3_THIRD - t1:
        return None
    if t3 > ONE + _SQRT3_THIRD - t1 - t2 / 2:
        return None
    apex_x = t1 - _SQRT3_THIRD + t2 / 2
    apex_y = ONE - _SQRT3_HALF * t2
    if t2.sign() > 0 and (apex_x - t2 / 2).sign() < 0:
        return None
    b = ONE - t1
    h = apex_y
    if h.sign() <= 0:
        return None
    explicit = [
        (ORIENT_BASE, t1, (ZERO, ZERO)),
        (ORIENT_ROTATED, t2, (apex_x, apex_y)),
        (ORIENT_BASE, t3, (apex_x, apex_y)),
    ]
    rules = ["CORNER_BASE", f"SLIDE_TOP_ON_LEFT60_LINE({qe_to_json(t1)})",
             "NEST_ATTIC_BASE(1)"]
    residual = ("EQ_TRAP", (b, h), (1, -1, apex_x, apex_y))
    return _Candidate("topflush_attic", explicit, rules, residual)


def _cand_slide_min_attic(szs):
    """Like topflush_attic but with the apex-down triangle at the minimal
    slide up the line (just far enough that its top edge clears the right
    side); kept in the catalog as the other slide extreme."""
    t1, t2, t3 = (_padded(szs, k) for k in range(3))
    if t1 > ONE or t2 > ONE + _SQRT3_THIRD - t1:
        return None
    if t3 > ONE + _SQRT3_THIRD - t1 - t2 / 2:
        return None
    over = t1 + t2 / 2 - ONE
    y_a = SQRT3 * over if over.sign() > 0 else ZERO
    if (y_a + _SQRT3_HALF * t2) > ONE:
        return None
    apex_x = t1 - y_a / SQRT3
    if t2.sign() > 0 and (apex_x - t2 / 2).sign() < 0:
        return None
    top_y = ONE - _SQRT3_HALF * t2
    explicit = [
        (ORIENT_BASE, t1, (ZERO, ZERO)),
        (ORIENT_ROTATED, t2, (apex_x, y_a)),
        (ORIENT_BASE, t3, (apex_x, y_a)),
    ]
    rules = ["CORNER_BASE", f"SLIDE_MIN_ON_LEFT60_LINE({qe_to_json(t1)})",
             "NEST_ATTIC_BASE(1)"]
    residual = ("EQ_TRAP", (ONE - t1, top_y), (1, -1, t1 - _SQRT3_THIRD + t2 / 2, top_y))
    return _Candidate("slide_min_attic", explicit, rules, residual)


def _cand_ground_chain_r4(szs):
    """Three triangles chained along the bottom; residual trapezoid whose
    slant runs down-right from the square's top-left corner over them."""
    t1, t2, t3 = (_padded(szs, k) for k in range(3))
    if t1 > _SQRT3_THIRD or t1 + t2 / 2 > ONE or t1 + t3 > ONE:
        return None
    b = ONE - _SQRT3_THIRD + t2 / 2
    h = ONE - _SQRT3_HALF * t2
    if h.sign() <= 0:
        return None
    explicit = [
        (ORIENT_BASE, t1, (ZERO, ZERO)),
        (ORIENT_ROTATED, t2, (t1, ZERO)),
        (ORIENT_BASE, t3, (t1, ZERO)),
    ]
    rules = ["CORNER_BASE", "NEST_GROUND_APEX_DOWN(1)", "GROUND_CHAIN_BASE(2)"]
    residual = ("EQ_TRAP", (b, h), (1, -1, ZERO, ONE))
    return _Candidate("ground_chain_r4", explicit, rules, residual)


def _cand_stack_shelf(szs, apex_down):
    """Corner BASE with a second BASE stacked on its apex line (the shelf);
    apex-down nested on the ground; the fourth triangle either continues the
    ground chain (apex_down False) or sits apex-down on the shelf."""
    t1, t2, t3, t4 = (_padded(szs, k) for k in range(4))
    shelf = _SQRT3_HALF * t1
    if t1 + t2 / 2 > ONE or _SQRT3_HALF * (t1 + t3) > ONE:
        return None
    explicit = [
        (ORIENT_BASE, t1, (ZERO, ZERO)),
        (ORIENT_ROTATED, t2, (t1, ZERO)),
        (ORIENT_BASE, t3, (ZERO, shelf)),
    ]
    rules = ["CORNER_BASE", "NEST_GROUND_APEX_DOWN(1)", "STACK_ABOVE(1)"]
    h = ONE - shelf
    if h.sign() <= 0:
        return None
    if not apex_down:
        if t1 + t4 > ONE or (t3 + t1 / 2) < _SQRT3_THIRD:
            return None
        explicit.append((ORIENT_BASE, t4, (t1, ZERO)))
        rules.append("GROUND_CHAIN_BASE(2)")
        residual = ("EQ_TRAP", (ONE - t3, h),
                    (1, -1, t3 - _SQRT3_THIRD + t1 / 2, ONE))
        return _Candidate("stack_shelf_ground", explicit, rules, residual)
    if _SQRT3_HALF * (t1 + t4) > ONE or t3 + t4 / 2 > ONE:
        return None
    b = ONE - t3 - _SQRT3_THIRD + t1 / 2
    if t4.sign() > 0 and b.sign() < 0:
        return None
    explicit.append((ORIENT_ROTATED, t4, (t3, shelf)))
    rules.append("NEST_SHELF_APEX_DOWN(3)")
    residual = ("EQ_TRAP", (b, h), (1, 1, t3, shelf))
    return _Candidate("stack_shelf_apexdown", explicit, rules, residual)


def _cand_full_square(szs):
    return _Candidate("full_square", [], [],
                      ("EQ_RECT", (ONE, ONE), (1, 1, ZERO, ZERO)))


def _mirror_candidate(cand):
    """Reflect a candidate across x = 1/2: placements map through
    (x, y) -> (1 - x, y); the residual map picks up the flip."""
    explicit = []
    for orient, size, (ax, ay) in cand.explicit:
        if size.sign() <= 0:
            explicit.append((orient, size, (ax, ay)))
            continue
        pl = make_placement(FAMILY_EQ, orient, size, (ax, ay))
        m = map_placement(pl, -1, 1, ONE, ZERO)
        explicit.append((m.orientation, size, m.vertices[0]))
    engine, dims, (sx, sy, dx, dy) = cand.residual
    residual = (engine, dims, (-sx, sy, ONE - dx, dy))
    rules = [f"MIRROR_X({r})" for r in cand.rules]
    return _Candidate(cand.name + "_mirror", explicit, rules, residual, mirrored=True)


def _try_eq_candidate(cand, szs, container):
    explicit = []
    rules = []
    for (orient, size, anchor), rule in zip(cand.explicit, cand.rules):
        if size.sign() <= 0:
            continue
        explicit.append(make_placement(FAMILY_EQ, orient, size, anchor,
                                       index=len(explicit)))
        rules.append(rule)
    m = len(cand.explicit)
    rest = szs[m:]
    engine, dims, rmap = cand.residual
    placements = list(explicit)
    residual_note = None
    if rest:
        for d in dims:
            if QE(d).sign() <= 0:
                return None
        if engine == "EQ_TRAP":
            packed = pack_eq_trap(dims[0], dims[1], rest)
        else:
            packed = pack_eq_rect(dims[0], dims[1], rest)
        if isinstance(packed, PackFailure):
            return None
        placements = _reindex(explicit, packed, rmap)
        residual_note = {
            "engine": engine,
            "dims": [qe_to_json(QE(d)) for d in dims],
            "map": {"sx": rmap[0], "sy": rmap[1],
                    "dx": qe_to_json(QE(rmap[2])), "dy": qe_to_json(QE(rmap[3]))},
            "count": len(rest),
        }
        if engine == "EQ_TRAP":
            residual_note["note"] = "FLUSH_UNDER_SLANT"
    result = validate_packing(container, placements)
    if isinstance(result, Violation):
        return None
    trace_explicit = [{"index": pl.index, "rule": rule}
                      for pl, rule in zip(explicit, rules)]
    return placements, result, trace_explicit, residual_note


def _eq_case_path(szs):
    """Evaluate the condition tree on the zero-padded sorted sizes."""
    t1, t2, t3, t4, t5 = (_padded(szs, k) for k in range(5))
    if t1 < _TWO_FIFTHS:
        return "EQ/3"
    if t1 < _SQRT3_THIRD:
        if t1 + t3 < ONE:
            return "EQ/2.1"
        if t3 + t5 >= ONE:
            return "EQ/2.2.1"
        if t1 + t4 < ONE:
            return "EQ/2.2.2.1"
        return "EQ/2.2.2.2"
    if t1 + t2 / 2 < ONE:
        if t1 + t3 >= ONE:
            return "EQ/1.1.1"
        return "EQ/1.1.2"
    if t2 > ONE + _SQRT3_THIRD - t1:
        return "EQ/1.2.1"
    if t3 > ONE + _SQRT3_THIRD - t1 - t2 / 2:
        return "EQ/1.2.2.1"
    return "EQ/1.2.2.2"


_EQ_INFEASIBLE = ("EQ/1.2.1", "EQ/1.2.2.1", "EQ/2.2.1")

_EQ_PINNED = {
    "EQ/1.1.1": "topflush_attic",
    "EQ/1.1.2": "ground_nest_r2",
    "EQ/1.2.2.2": "topflush_attic",
    "EQ/2.1": "ground_chain_r4",
    "EQ/2.2.2.1": "stack_shelf_ground",
    "EQ/2.2.2.2": "stack_shelf_apexdown",
}


def _eq_catalog(szs, case_path):
    builders = {
        "ground_nest_r2": _cand_ground_nest_r2,
        "topflush_attic": _cand_topflush_attic,
        "ground_chain_r4": _cand_ground_chain_r4,
        "stack_shelf_ground": lambda s: _cand_stack_shelf(s, apex_down=False),
        "stack_shelf_apexdown": lambda s: _cand_stack_shelf(s, apex_down=True),
        "slide_min_attic": _cand_slide_min_attic,
    }
    order = ["ground_nest_r2", "topflush_attic", "ground_chain_r4",
             "stack_shelf_ground", "stack_shelf_apexdown", "slide_min_attic"]
    pinned = _EQ_PINNED.get(case_path)
    if pinned in order:
        order.remove(pinned)
        order.insert(0, pinned)
    cands = []
    for name in order:
        c = builders[name](szs)
        if c is not None:
            cands.append(c)
    cands.extend([_mirror_candidate(c) for c in list(cands)])
    cands.append(_cand_full_square(szs))
    return cands


def pack_unit_square_eq(sizes):
    """Pack equilateral triangles (bases parallel to a side) into the unit
    square; guarantee: total area at most sqrt(3)/4."""
    szs = _coerce_sorted(sizes)
    if szs and szs[0] > ONE:
        raise Unpackable(szs[0], ONE)
    total_sq = _sum_squares(szs)
    if total_sq > ONE:
        raise AreaBoundExceeded(CRITICAL_EQ * total_sq, CRITICAL_EQ)
    case_path = _eq_case_path(szs)
    if case_path in _EQ_INFEASIBLE:
        raise InternalStop(
            f"reached infeasibility branch {case_path} although the area "
            f"guarantee held (sum of squares {total_sq!r} <= 1)")
    container = unit_square()

    if case_path == "EQ/3":
        packed = pack_eq_rect(ONE, ONE, szs)
        trace = CaseTrace(case_path, "full_square", [],
                          {"engine": "EQ_RECT",
                           "dims": [qe_to_json(ONE), qe_to_json(ONE)],
                           "count": len(szs)},
                          CRITICAL_EQ)
        if isinstance(packed, PackFailure):
            raise InternalStop(
                f"layer engine failed in case EQ/3 although the area "
                f"guarantee held: {packed!r}", trace=trace, failure=packed)
        result = validate_packing(container, packed)
        if isinstance(result, Violation):
            raise InternalStop(f"invalid output: {result.describe()}", trace=trace)
        return PackingResult(packed, trace, result)

    for cand in _eq_catalog(szs, case_path):
        got = _try_eq_candidate(cand, szs, container)
        if got is None:
            continue
        placements, cert, trace_explicit, residual_note = got
        trace = CaseTrace(case_path, cand.name, trace_explicit, residual_note,
                          CRITICAL_EQ)
        return PackingResult(placements, trace, cert)
    raise InternalStop(
        f"certified configuration search exhausted for {case_path} with the "
        f"area guarantee satisfied (sum of squares {total_sq!r} <= 1)")


# -- case lower bounds -------------------------------------------------------


def _iso1_bound(t1, t2, t5):
    return ((t1 * t1 + t2 * t2 + 3 * t5 * t5) / 2
            + (ONE - t1 + t2 - t5) * (ONE - t2 - t5))


def _iso2_bound(t1, t2, t3):
    r = 2 - t1 - t2 - t3
    return (t1 * t1 + t2 * t2) / 2 + t3 * t3 / 2 + r * r / 2


def _eq_sum(ts):
    s = ZERO
    for t in ts:
        s = s + t * t
    return SQRT3 / 4 * s


def _eq111_bound(t1, t2, t3, t4):
    return (_eq_sum((t1, t2, t3, t4))
            + (ONE - t1 - t2 / 4 - 3 * t4 / 4 + SQRT3 / 6)
            * (ONE - _SQRT3_HALF * t2 - _SQRT3_HALF * t4))


def _eq112_bound(t1, t2, t3, t4):
    return (_eq_sum((t1, t2, t3, t4))
            + (ONE - t1 + t2 / 4 - 3 * t4 / 4 + SQRT3 / 6)
            * (ONE - _SQRT3_HALF * t2 - _SQRT3_HALF * t4))


def _eq21_bound(t1, t2, t3, t4):
    return (_eq_sum((t1, t2, t3, t4))
            + (ONE + t2 / 4 - 3 * t4 / 4 - SQRT3 / 6)
            * (ONE - _SQRT3_HALF * t2 - _SQRT3_HALF * t4))


def _eq2221_bound(t1, t2, t3, t4, t5):
    return (_eq_sum((t1, t2, t3, t4, t5))
            + (ONE - t3 - t1 / 4 - 3 * t5 / 4 + SQRT3 / 6)
            * (ONE - _SQRT3_HALF * t1 - _SQRT3_HALF * t5))


def _eq2222_bound(t1, t2, t3, t4, t5):
    return (_eq_sum((t1, t2, t3, t4, t5))
            + (ONE - t3 + t1 / 4 - 3 * t5 / 4 - SQRT3 / 6)
            * (ONE - _SQRT3_HALF * t1 - _SQRT3_HALF * t5))


def _eq3_bound(t1):
    return SQRT3 / 4 * t1 * t1 + (ONE - t1) * (ONE - _SQRT3_HALF * t1)


_CASE_BOUNDS = {
    "ISO/1": (3, _iso1_bound),
    "ISO/2": (3, _iso2_bound),
    "EQ/1.1.1": (4, _eq111_bound),
    "EQ/1.1.2": (4, _eq112_bound),
    "EQ/1.2.2.2": (4, _eq111_bound),
    "EQ/2.1": (4, _eq21_bound),
    "EQ/2.2.2.1": (5, _eq2221_bound),
    "EQ/2.2.2.2": (5, _eq2222_bound),
    "EQ/3": (1, _eq3_bound),
}


def evaluate_case_lower_bound(case_id, ts):
    """Exact value of a case's contradiction lower bound at the point ts."""
    if case_id not in _CASE_BOUNDS:
        raise ValueError(f"unknown case id {case_id!r}")
    arity, fn = _CASE_BOUNDS[case_id]
    if len(ts) != arity:
        raise ValueError(f"{case_id} takes {arity} sizes, got {len(ts)}")
    args = [t if isinstance(t, QuadExt) else QE(t) for t in ts]
    return fn(*args)


def pack_instance(family, sizes):
    """Route an instance family name to its packer."""
    if family == "iso_axis":
        return pack_unit_square_iso(sizes)
    if family == "iso_diag":
        return pack_square_iso_diag(sizes)
    if family == "equilateral":
        return pack_unit_square_eq(sizes)
    raise ValueError(f"unknown family {family!r}")
