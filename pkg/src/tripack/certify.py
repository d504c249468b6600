"""Independent exact validator and machine-checkable packing certificates.

The validator re-derives everything from the placements' vertices: shape
consistency, containment against the container's half-planes, and pairwise
interior disjointness via exact separating axes.  Certificates record enough
witnesses (per-placement boxes plus an axis for every box-overlapping pair)
that a third party can re-verify without geometry code: any pair without a
recorded axis has disjoint coordinate intervals.
"""

from __future__ import annotations

from .geometry import (container_from_json, container_to_json,
                       first_outside_vertex, make_placement, overlap_witness,
                       placement_from_json, separating_axis)
from .scalar import ZERO, qe_from_json, qe_to_json

CERT_SCHEMA = "tripack-certificate/1"

OUT_OF_CONTAINER = "OUT_OF_CONTAINER"
OVERLAP = "OVERLAP"


class MalformedPacking(ValueError):
    """Placement data whose vertices disagree with its declared shape."""


class Violation:
    __slots__ = ("kind", "index", "vertex", "i", "j", "witness")

    def __init__(self, kind, index=None, vertex=None, i=None, j=None, witness=None):
        self.kind = kind
        self.index = index
        self.vertex = vertex
        self.i = i
        self.j = j
        self.witness = witness

    def describe(self):
        if self.kind == OUT_OF_CONTAINER:
            x, y = self.vertex
            return (f"OUT_OF_CONTAINER: placement {self.index} has vertex "
                    f"({x!r}, {y!r}) outside the container")
        x, y = self.witness
        return (f"OVERLAP: placements {self.i} and {self.j} share interior "
                f"point ({x!r}, {y!r})")

    def __repr__(self):
        return f"Violation({self.describe()})"


class Certificate:
    """Exact evidence that a packing is valid.

    ``boxes`` maps placement index -> (xmin, xmax, ymin, ymax); ``separations``
    holds one entry per pair of placements whose boxes overlap in both
    coordinates: (i, j, nx, ny, c, low) meaning every vertex of the ``low``
    placement ('first' = i) satisfies nx*x + ny*y <= c and the other placement
    satisfies >= c.  Pairs absent from ``separations`` are separated by the
    recorded coordinate intervals themselves.
    """

    __slots__ = ("container", "count", "containment", "boxes", "separations",
                 "total_area")

    def __init__(self, container, count, containment, boxes, separations,
                 total_area):
        self.container = container
        self.count = count
        self.containment = containment
        self.boxes = boxes
        self.separations = separations
        self.total_area = total_area


def _check_shape(pl):
    expect = make_placement(pl.family, pl.orientation, pl.size, pl.vertices[0],
                            index=pl.index)
    for (ax, ay), (bx, by) in zip(pl.vertices, expect.vertices):
        if ax != bx or ay != by:
            raise MalformedPacking(
                f"placement {pl.index}: vertices do not form a "
                f"{pl.family}/{pl.orientation} triangle of size {pl.size!r}")


def _boxes_overlap(p, q):
    return not (p.xmax <= q.xmin or q.xmax <= p.xmin
                or p.ymax <= q.ymin or q.ymax <= p.ymin)


def validate_packing(container, placements, mode="sweep"):
    """Exactly validate a packing; returns a Certificate or the first Violation.

    ``mode`` selects how pairs are enumerated: "sweep" prunes by y-interval
    overlap (then coordinate boxes) before the exact axis test, "all_pairs"
    runs the exact test on every pair.  Outcomes are identical; sweep is the
    near-linear default for layered packings.
    """
    if mode not in ("sweep", "all_pairs"):
        raise ValueError(f"bad mode {mode!r}")
    placements = list(placements)
    seen = set()
    for pl in placements:
        _check_shape(pl)
        if pl.index in seen:
            raise MalformedPacking(f"duplicate placement index {pl.index}")
        seen.add(pl.index)

    containment = []
    for pl in placements:
        bad = first_outside_vertex(container, pl)
        if bad is not None:
            return Violation(OUT_OF_CONTAINER, index=pl.index, vertex=bad)
        containment.append(pl.index)

    separations = []
    if mode == "all_pairs":
        for a in range(len(placements)):
            p = placements[a]
            for b in range(a + 1, len(placements)):
                q = placements[b]
                res = _pair_witness(p, q)
                if isinstance(res, Violation):
                    return res
                if res is not None:
                    separations.append(res)
    else:
        order = sorted(range(len(placements)),
                       key=lambda k: (placements[k].ymin, placements[k].index))
        active = []
        for k in order:
            p = placements[k]
            active = [m for m in active if not (placements[m].ymax <= p.ymin)]
            for m in active:
                q = placements[m]
                if p.xmax <= q.xmin or q.xmax <= p.xmin:
                    continue
                res = _pair_witness(q, p) if q.index < p.index else _pair_witness(p, q)
                if isinstance(res, Violation):
                    return res
                if res is not None:
                    separations.append(res)
            active.append(k)
        separations.sort(key=lambda e: (e[0], e[1]))

    total = ZERO
    boxes = {}
    for pl in placements:
        total = total + pl.shoelace_area()
        boxes[pl.index] = (pl.xmin, pl.xmax, pl.ymin, pl.ymax)
    return Certificate(container, len(placements), containment, boxes,
                       separations, total)


def _pair_witness(p, q):
    """None if boxes are disjoint, a separation entry if an axis splits them,
    or an OVERLAP Violation with a strictly-interior witness point."""
    if not _boxes_overlap(p, q):
        # the exact test must agree that interiors are disjoint
        if separating_axis(p, q) is None:
            w = overlap_witness(p, q)
            return Violation(OVERLAP, i=p.index, j=q.index, witness=w)
        return None
    axis = separating_axis(p, q)
    if axis is None:
        w = overlap_witness(p, q)
        return Violation(OVERLAP, i=p.index, j=q.index, witness=w)
    nx, ny, c, low = axis
    return (p.index, q.index, nx, ny, c, low)


def total_area(placements):
    s = ZERO
    for pl in placements:
        s = s + pl.area()
    return s


def certify_density(placements, critical):
    """Compare exact total area against a family's critical constant."""
    area = total_area(placements)
    ratio = area / critical
    return {"within_bound": area <= critical, "ratio": ratio}


# -- serialization -----------------------------------------------------------


def certificate_to_json(cert):
    return {
        "schema": CERT_SCHEMA,
        "container": container_to_json(cert.container),
        "count": cert.count,
        "containment": list(cert.containment),
        "boxes": {str(i): [qe_to_json(v) for v in box]
                  for i, box in sorted(cert.boxes.items())},
        "separations": [
            {"i": i, "j": j, "axis": [qe_to_json(nx), qe_to_json(ny)],
             "c": qe_to_json(c), "low": low}
            for i, j, nx, ny, c, low in cert.separations
        ],
        "total_area": qe_to_json(cert.total_area),
    }


def certificate_from_json(obj):
    if obj.get("schema") != CERT_SCHEMA:
        raise ValueError(f"unsupported certificate schema {obj.get('schema')!r}")
    container = container_from_json(obj["container"])
    boxes = {int(k): tuple(qe_from_json(v) for v in box)
             for k, box in obj["boxes"].items()}
    seps = [(e["i"], e["j"], qe_from_json(e["axis"][0]), qe_from_json(e["axis"][1]),
             qe_from_json(e["c"]), e["low"])
            for e in obj["separations"]]
    return Certificate(container, int(obj["count"]), list(obj["containment"]),
                       boxes, seps, qe_from_json(obj["total_area"]))


def check_certificate(cert, placements):
    """Re-verify a certificate against placements without new geometry: boxes
    match vertex extents, recorded axes really separate, interval-pruned pairs
    really have disjoint intervals, and the area total matches."""
    by_index = {pl.index: pl for pl in placements}
    if len(by_index) != cert.count or set(by_index) != set(cert.boxes):
        return False
    if sorted(cert.containment) != sorted(by_index):
        return False
    for i, pl in by_index.items():
        if cert.boxes[i] != (pl.xmin, pl.xmax, pl.ymin, pl.ymax):
            return False
        for nx, ny, c in cert.container.halfplanes:
            for x, y in pl.vertices:
                if (nx * x + ny * y - c).sign() > 0:
                    return False
    recorded = {}
    for i, j, nx, ny, c, low in cert.separations:
        recorded[(i, j)] = (nx, ny, c, low)
    idxs = sorted(by_index)
    for a in range(len(idxs)):
        for b in range(a + 1, len(idxs)):
            i, j = idxs[a], idxs[b]
            key = (i, j)
            if key in recorded:
                nx, ny, c, low = recorded[key]
                lo_pl = by_index[i] if low == "first" else by_index[j]
                hi_pl = by_index[j] if low == "first" else by_index[i]
                for x, y in lo_pl.vertices:
                    if (nx * x + ny * y - c).sign() > 0:
                        return False
                for x, y in hi_pl.vertices:
                    if (nx * x + ny * y - c).sign() < 0:
                        return False
            else:
                if _boxes_overlap(by_index[i], by_index[j]):
                    return False
    t = ZERO
    for pl in placements:
        t = t + pl.shoelace_area()
    return t == cert.total_area


def placements_from_json(objs):
    return [placement_from_json(o) for o in objs]
