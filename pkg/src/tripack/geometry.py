"""Triangle placements, convex containers, and exact geometric predicates.

Triangles come in two families (isosceles right with axis-parallel legs,
equilateral with horizontal base) and exactly two orientations each: BASE and
its 180-degree rotation ROTATED.  Containers are intersections of closed
half-planes.  Containment allows boundary contact; overlap means a
positive-area intersection, so flush tilings are valid.
"""

from __future__ import annotations

from .scalar import HALF, QE, QuadExt, SQRT2, SQRT3, ZERO, qe_from_json, qe_to_json

FAMILY_ISO = "iso_right"
FAMILY_ISO_DIAG = "iso_right_diag"
FAMILY_EQ = "equilateral"
ORIENT_BASE = "base"
ORIENT_ROTATED = "rotated"

_SQRT3_HALF = SQRT3 * HALF
_SQRT3_THIRD = SQRT3 / 3
_SQRT2_HALF = SQRT2 * HALF


class BadSize(ValueError):
    pass


class Placement:
    """One packed triangle: exact vertices plus its (family, orientation, size) tag."""

    __slots__ = ("index", "family", "orientation", "size", "vertices",
                 "xmin", "xmax", "ymin", "ymax")

    def __init__(self, index, family, orientation, size, vertices):
        self.index = index
        self.family = family
        self.orientation = orientation
        self.size = size
        self.vertices = tuple(vertices)
        xs = [v[0] for v in self.vertices]
        ys = [v[1] for v in self.vertices]
        self.xmin = min(xs)
        self.xmax = max(xs)
        self.ymin = min(ys)
        self.ymax = max(ys)

    def area(self):
        if self.family == FAMILY_EQ:
            return self.size * self.size * SQRT3 / 4
        return self.size * self.size / 2

    def shoelace_area(self):
        (x0, y0), (x1, y1), (x2, y2) = self.vertices
        s = x0 * (y1 - y2) + x1 * (y2 - y0) + x2 * (y0 - y1)
        return abs(s) / 2

    def orientation_sign(self):
        (x0, y0), (x1, y1), (x2, y2) = self.vertices
        s = x0 * (y1 - y2) + x1 * (y2 - y0) + x2 * (y0 - y1)
        return s.sign()

    def __repr__(self):
        return (f"Placement({self.index}, {self.family}/{self.orientation}, "
                f"size={self.size!r})")


def make_placement(family, orientation, size, anchor, index=0):
    """Construct a placement from its anchor vertex.

    Anchors: ISO BASE and ROTATED use the right-angle vertex (lower-left /
    upper-right); EQ BASE uses the base-left vertex; EQ ROTATED the apex
    (lowest point).
    """
    if not isinstance(size, QuadExt):
        size = QE(size)
    if size.sign() <= 0:
        raise BadSize(f"triangle size must be positive, got {size!r}")
    x, y = anchor
    if not isinstance(x, QuadExt):
        x = QE(x)
    if not isinstance(y, QuadExt):
        y = QE(y)
    t = size
    if family == FAMILY_ISO:
        if orientation == ORIENT_BASE:
            verts = ((x, y), (x + t, y), (x, y + t))
        elif orientation == ORIENT_ROTATED:
            verts = ((x, y), (x - t, y), (x, y - t))
        else:
            raise ValueError(f"bad orientation {orientation!r}")
    elif family == FAMILY_ISO_DIAG:
        # legs along the square's diagonals: directions (1,1)/sqrt(2), (-1,1)/sqrt(2)
        u = _SQRT2_HALF * t
        if orientation == ORIENT_BASE:
            verts = ((x, y), (x + u, y + u), (x - u, y + u))
        elif orientation == ORIENT_ROTATED:
            verts = ((x, y), (x - u, y - u), (x + u, y - u))
        else:
            raise ValueError(f"bad orientation {orientation!r}")
    elif family == FAMILY_EQ:
        h = _SQRT3_HALF * t
        half = t / 2
        if orientation == ORIENT_BASE:
            verts = ((x, y), (x + t, y), (x + half, y + h))
        elif orientation == ORIENT_ROTATED:
            verts = ((x, y), (x - half, y + h), (x + half, y + h))
        else:
            raise ValueError(f"bad orientation {orientation!r}")
    else:
        raise ValueError(f"bad family {family!r}")
    return Placement(index, family, orientation, size, verts)


def map_placement(pl, sx, sy, dx, dy):
    """Apply the exact affine map (x, y) -> (sx*x + dx, sy*y + dy), sx, sy in {1, -1}.

    Isosceles placements admit only the identity and the 180-degree rotation;
    equilateral placements admit all four sign combinations (a vertical flip
    swaps BASE and ROTATED, a horizontal mirror preserves orientation).
    """
    def tr(v):
        return (sx * v[0] + dx, sy * v[1] + dy)

    fam, orient = pl.family, pl.orientation
    if fam in (FAMILY_ISO, FAMILY_ISO_DIAG):
        if not ((sx == 1 and sy == 1) or (sx == -1 and sy == -1)):
            raise ValueError("isosceles placements allow only translation or 180-degree rotation")
        if sx == -1:
            orient = ORIENT_ROTATED if orient == ORIENT_BASE else ORIENT_BASE
        anchor = tr(pl.vertices[0])
    else:
        v0, v1, v2 = pl.vertices
        if pl.orientation == ORIENT_BASE:
            if sy == -1:
                orient = ORIENT_ROTATED
                anchor = tr(v2)  # apex becomes the lowest point
            else:
                anchor = tr(v1) if sx == -1 else tr(v0)
        else:
            if sy == -1:
                orient = ORIENT_BASE
                anchor = tr(v2) if sx == -1 else tr(v1)
            else:
                anchor = tr(v0)
    return make_placement(fam, orient, pl.size, anchor, index=pl.index)


# -- containers ------------------------------------------------------------


class Container:
    """Convex region as an intersection of closed half-planes nx*x + ny*y <= c."""

    __slots__ = ("kind", "params", "halfplanes")

    def __init__(self, kind, params, halfplanes):
        self.kind = kind
        self.params = params
        self.halfplanes = tuple(halfplanes)

    def contains_point(self, p):
        x, y = p
        for nx, ny, c in self.halfplanes:
            if (nx * x + ny * y - c).sign() > 0:
                return False
        return True

    def __repr__(self):
        return f"Container({self.kind}, {self.params})"


def rect(a, b, origin=(0, 0)):
    a, b = QE(a), QE(b)
    ox, oy = QE(origin[0]), QE(origin[1])
    one = QE(1)
    hp = [
        (-one, ZERO, -ox),
        (one, ZERO, ox + a),
        (ZERO, -one, -oy),
        (ZERO, one, oy + b),
    ]
    return Container("rect", {"a": a, "b": b, "origin": (ox, oy)}, hp)


def unit_square():
    c = rect(1, 1)
    return Container("unit_square", {}, c.halfplanes)


def square(side):
    c = rect(side, side)
    return Container("square", {"side": QE(side)}, c.halfplanes)


def iso_tri(c, orientation=ORIENT_BASE, anchor=(0, 0)):
    c = QE(c)
    ax, ay = QE(anchor[0]), QE(anchor[1])
    one = QE(1)
    if orientation == ORIENT_BASE:
        # right angle at the anchor, legs extending right and up
        hp = [
            (-one, ZERO, -ax),
            (ZERO, -one, -ay),
            (one, one, ax + ay + c),
        ]
    else:
        # 180-degree rotation: right angle at the anchor, legs left and down
        hp = [
            (one, ZERO, ax),
            (ZERO, one, ay),
            (-one, -one, c - ax - ay),
        ]
    return Container("iso_tri", {"c": c, "orientation": orientation,
                                 "anchor": (ax, ay)}, hp)


def right_trap(b, h):
    """Canonical 60-degree right trapezoid: vertices (0,0), (L,0), (L,h), (L-b,h)
    with L = b + sqrt(3)h/3; the slant rises from the origin at 60 degrees."""
    b, h = QE(b), QE(h)
    L = b + _SQRT3_THIRD * h
    one = QE(1)
    hp = [
        (ZERO, -one, ZERO),
        (ZERO, one, h),
        (one, ZERO, L),
        (-one, _SQRT3_THIRD, ZERO),  # x >= y/sqrt(3)
    ]
    return Container("right_trap", {"b": b, "h": h, "L": L}, hp)


def container_to_json(cont):
    k = cont.kind
    p = cont.params
    if k == "unit_square":
        return {"kind": k}
    if k in ("rect",):
        ox, oy = p["origin"]
        out = {"kind": k, "a": qe_to_json(p["a"]), "b": qe_to_json(p["b"])}
        if ox.sign() != 0 or oy.sign() != 0:
            out["origin"] = [qe_to_json(ox), qe_to_json(oy)]
        return out
    if k == "square":
        return {"kind": k, "side": qe_to_json(p["side"])}
    if k == "iso_tri":
        ax, ay = p["anchor"]
        return {"kind": k, "c": qe_to_json(p["c"]), "orientation": p["orientation"],
                "anchor": [qe_to_json(ax), qe_to_json(ay)]}
    if k == "right_trap":
        return {"kind": k, "b": qe_to_json(p["b"]), "h": qe_to_json(p["h"])}
    raise ValueError(f"unknown container kind {k!r}")


def container_from_json(obj):
    k = obj.get("kind")
    if k == "unit_square":
        return unit_square()
    if k == "rect":
        origin = obj.get("origin")
        if origin is None:
            o = (0, 0)
        else:
            o = (qe_from_json(origin[0]), qe_from_json(origin[1]))
        return rect(qe_from_json(obj["a"]), qe_from_json(obj["b"]), o)
    if k == "square":
        return square(qe_from_json(obj["side"]))
    if k == "iso_tri":
        anchor = obj.get("anchor", ["0", "0"])
        return iso_tri(qe_from_json(obj["c"]), obj.get("orientation", ORIENT_BASE),
                       (qe_from_json(anchor[0]), qe_from_json(anchor[1])))
    if k == "right_trap":
        return right_trap(qe_from_json(obj["b"]), qe_from_json(obj["h"]))
    raise ValueError(f"unknown container kind {k!r}")


# -- predicates --------------------------------------------------------------


def contains(container, pl):
    """True iff every vertex satisfies every closed half-plane."""
    for v in pl.vertices:
        if not container.contains_point(v):
            return False
    return True


def first_outside_vertex(container, pl):
    for v in pl.vertices:
        if not container.contains_point(v):
            return v
    return None


def _project(vertices, nx, ny):
    d0 = nx * vertices[0][0] + ny * vertices[0][1]
    d1 = nx * vertices[1][0] + ny * vertices[1][1]
    d2 = nx * vertices[2][0] + ny * vertices[2][1]
    lo, hi = d0, d0
    if d1 < lo:
        lo = d1
    elif d1 > hi:
        hi = d1
    if d2 < lo:
        lo = d2
    elif d2 > hi:
        hi = d2
    return lo, hi


def _edge_axes(pl):
    v = pl.vertices
    for i in range(3):
        x0, y0 = v[i]
        x1, y1 = v[(i + 1) % 3]
        yield (y0 - y1, x1 - x0)


def separating_axis(p1, p2):
    """First edge-normal axis that (non-strictly) separates the two triangles.

    Returns (nx, ny, c, lo) where all vertices of placement `lo` ('first' or
    'second') satisfy nx*x + ny*y <= c and the other placement satisfies >= c;
    None when the interiors properly overlap.
    """
    for which, src in (("first", p1), ("second", p2)):
        for nx, ny in _edge_axes(src):
            lo1, hi1 = _project(p1.vertices, nx, ny)
            lo2, hi2 = _project(p2.vertices, nx, ny)
            if hi1 <= lo2:
                return (nx, ny, hi1, "first")
            if hi2 <= lo1:
                return (nx, ny, hi2, "second")
    return None


def interiors_disjoint(p1, p2):
    """Exact separating-axis decision; shared boundary contact counts as disjoint."""
    if (p1.xmax <= p2.xmin or p2.xmax <= p1.xmin
            or p1.ymax <= p2.ymin or p2.ymax <= p1.ymin):
        return True
    return separating_axis(p1, p2) is not None


def _clip_halfplane(poly, ax, ay, bx, by, orient):
    # keep the side of line a->b that contains the clip triangle's interior
    ex, ey = bx - ax, by - ay
    n = len(poly)
    if n == 0:
        return []
    dists = [(ex * (py - ay) - ey * (px - ax)) * orient for px, py in poly]
    out = []
    for i in range(n):
        j = (i + 1) % n
        (sx, sy), ds = poly[i], dists[i]
        (px, py), de = poly[j], dists[j]
        s_in = ds.sign() >= 0
        if s_in:
            out.append(poly[i])
        if s_in != (de.sign() >= 0):
            t = ds / (ds - de)
            out.append((sx + t * (px - sx), sy + t * (py - sy)))
    return out


def triangle_intersection(p1, p2):
    """Exact intersection polygon (list of vertices) of the two triangles."""
    s = p2.orientation_sign()
    orient = QE(s if s != 0 else 1)
    poly = list(p1.vertices)
    v = p2.vertices
    for i in range(3):
        ax, ay = v[i]
        bx, by = v[(i + 1) % 3]
        poly = _clip_halfplane(poly, ax, ay, bx, by, orient)
        if not poly:
            return []
    return poly


def polygon_area(poly):
    n = len(poly)
    if n < 3:
        return ZERO
    s = ZERO
    for i in range(n):
        x0, y0 = poly[i]
        x1, y1 = poly[(i + 1) % n]
        s = s + (x0 * y1 - x1 * y0)
    return abs(s) / 2


def overlap_witness(p1, p2):
    """A point strictly inside both triangles, or None when interiors are disjoint."""
    poly = triangle_intersection(p1, p2)
    if polygon_area(poly).sign() <= 0:
        return None
    k = len(poly)
    sx = poly[0][0]
    sy = poly[0][1]
    for x, y in poly[1:]:
        sx = sx + x
        sy = sy + y
    return (sx / k, sy / k)


def point_strictly_inside(pl, point):
    orient = pl.orientation_sign()
    if orient == 0:
        return False
    px, py = point
    v = pl.vertices
    for i in range(3):
        x0, y0 = v[i]
        x1, y1 = v[(i + 1) % 3]
        cross = (x1 - x0) * (py - y0) - (y1 - y0) * (px - x0)
        if cross.sign() != orient:
            return False
    return True


# -- serialization -----------------------------------------------------------


def placement_to_json(pl):
    return {
        "index": pl.index,
        "family": pl.family,
        "orientation": pl.orientation,
        "size": qe_to_json(pl.size),
        "vertices": [[qe_to_json(v[0]), qe_to_json(v[1])] for v in pl.vertices],
    }


def placement_from_json(obj):
    fam = obj["family"]
    if fam not in (FAMILY_ISO, FAMILY_ISO_DIAG, FAMILY_EQ):
        raise ValueError(f"bad family {fam!r}")
    orient = obj["orientation"]
    if orient not in (ORIENT_BASE, ORIENT_ROTATED):
        raise ValueError(f"bad orientation {orient!r}")
    verts = obj["vertices"]
    if len(verts) != 3:
        raise ValueError("placements need exactly 3 vertices")
    vertices = tuple((qe_from_json(v[0]), qe_from_json(v[1])) for v in verts)
    size = qe_from_json(obj["size"])
    if size.sign() <= 0:
        raise BadSize(f"triangle size must be positive, got {size!r}")
    return Placement(int(obj["index"]), fam, orient, size, vertices)
