"""Canonical JSON formats for instances, packings, and certificates.

One writer produces every file: two-space indented JSON with a trailing
newline, keys in construction order.  Exact scalars serialize as "p/q"
strings when rational and as {"a", "b", "d"} objects otherwise, so identical
data always produces identical bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .certify import (certificate_from_json, certificate_to_json,
                      check_certificate)
from .geometry import placement_from_json, placement_to_json
from .instances import FAMILIES, Instance
from .scalar import format_fraction, qe_from_json, qe_to_json

INSTANCE_SCHEMA = "tripack-instance/1"
PACKING_SCHEMA = "tripack-packing/1"


class MalformedFile(ValueError):
    """File content does not match its declared schema."""


def canonical_dumps(obj):
    return json.dumps(obj, indent=2) + "\n"


def write_canonical(path, obj):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(canonical_dumps(obj))


def read_json(path):
    with open(path, "r", encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise MalformedFile(f"{path}: not valid JSON ({exc})") from None


def instance_to_json(inst):
    meta = {}
    for key, value in inst.meta.items():
        if isinstance(value, Fraction):
            meta[key] = format_fraction(value)
        else:
            meta[key] = value
    return {
        "schema": INSTANCE_SCHEMA,
        "family": inst.family,
        "sides": [qe_to_json(t) for t in inst.sides],
        "meta": meta,
    }


def instance_from_json(data):
    if not isinstance(data, dict):
        raise MalformedFile("instance must be a JSON object")
    if data.get("schema") != INSTANCE_SCHEMA:
        raise MalformedFile(f"expected schema {INSTANCE_SCHEMA!r}, "
                            f"got {data.get('schema')!r}")
    family = data.get("family")
    if family not in FAMILIES:
        raise MalformedFile(f"unknown family {family!r}")
    raw = data.get("sides")
    if not isinstance(raw, list) or not raw:
        raise MalformedFile("sides must be a non-empty list")
    sides = []
    for item in raw:
        try:
            t = qe_from_json(item)
        except (ValueError, TypeError) as exc:
            raise MalformedFile(f"bad side {item!r}: {exc}") from None
        if t.sign() <= 0:
            raise MalformedFile(f"side {item!r} is not positive")
        sides.append(t)
    meta = data.get("meta") or {}
    if not isinstance(meta, dict):
        raise MalformedFile("meta must be an object")
    return Instance(family, sides, meta)


def write_instance(path, inst):
    write_canonical(path, instance_to_json(inst))


def read_instance(path):
    return instance_from_json(read_json(path))


def packing_to_json(inst, result):
    return {
        "schema": PACKING_SCHEMA,
        "instance": instance_to_json(inst),
        "placements": [placement_to_json(p) for p in result.placements],
        "trace": result.trace.to_json(),
        "certificate": certificate_to_json(result.certificate),
    }


def packing_from_json(data):
    if not isinstance(data, dict):
        raise MalformedFile("packing must be a JSON object")
    if data.get("schema") != PACKING_SCHEMA:
        raise MalformedFile(f"expected schema {PACKING_SCHEMA!r}, "
                            f"got {data.get('schema')!r}")
    try:
        inst = instance_from_json(data.get("instance"))
    except MalformedFile as exc:
        raise MalformedFile(f"bad embedded instance: {exc}") from None
    raw = data.get("placements")
    if not isinstance(raw, list):
        raise MalformedFile("placements must be a list")
    try:
        placements = [placement_from_json(item) for item in raw]
    except (ValueError, TypeError, KeyError) as exc:
        raise MalformedFile(f"bad placement: {exc}") from None
    trace = data.get("trace")
    cert_data = data.get("certificate")
    if cert_data is None:
        raise MalformedFile("packing file is missing its certificate")
    try:
        cert = certificate_from_json(cert_data)
    except (ValueError, TypeError, KeyError) as exc:
        raise MalformedFile(f"bad certificate: {exc}") from None
    if not check_certificate(cert, placements):
        raise MalformedFile("certificate does not validate the placements")
    return inst, placements, trace, cert


def read_packing(path):
    return packing_from_json(read_json(path))
