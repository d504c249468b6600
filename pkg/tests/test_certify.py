"""Independent validation, certificates, and the certificate checker."""

import copy
import random
from fractions import Fraction

import pytest

from tripack.certify import (Certificate, MalformedPacking, Violation,
                             certificate_from_json, certificate_to_json,
                             certify_density, check_certificate, total_area,
                             validate_packing)
from tripack.geometry import (FAMILY_EQ, FAMILY_ISO, ORIENT_BASE,
                              ORIENT_ROTATED, Placement, iso_tri,
                              make_placement, rect, unit_square)
from tripack.io import canonical_dumps
from tripack.layers import pack_eq_rect, pack_iso_rect
from tripack.scalar import QE, SQRT3

H = QE("1/2")


def mk(family, orient, size, anchor, index):
    return make_placement(family, orient, size, anchor, index=index)


class TestValidate:
    def test_tiling_certifies(self):
        pls = [
            mk(FAMILY_ISO, ORIENT_BASE, 1, (0, 0), 0),
            mk(FAMILY_ISO, ORIENT_ROTATED, 1, (1, 1), 1),
        ]
        cert = validate_packing(unit_square(), pls)
        assert isinstance(cert, Certificate)
        assert cert.count == 2
        assert cert.total_area == QE(1)
        assert sorted(cert.containment) == [0, 1]

    def test_empty_packing(self):
        cert = validate_packing(unit_square(), [])
        assert isinstance(cert, Certificate)
        assert cert.count == 0 and cert.total_area == QE(0)

    def test_out_of_container(self):
        pls = [mk(FAMILY_ISO, ORIENT_BASE, 1, (QE("1/10"), 0), 0)]
        out = validate_packing(unit_square(), pls)
        assert isinstance(out, Violation)
        assert out.kind == "OUT_OF_CONTAINER"
        assert out.index == 0

    def test_overlap_with_witness(self):
        pls = [
            mk(FAMILY_EQ, ORIENT_BASE, 1, (0, 0), 0),
            mk(FAMILY_EQ, ORIENT_BASE, 1, (QE("1/4"), 0), 1),
        ]
        out = validate_packing(rect(2, 1), pls, mode="all_pairs")
        assert isinstance(out, Violation)
        assert out.kind == "OVERLAP"
        assert {out.i, out.j} == {0, 1}
        assert out.witness is not None

    def test_boundary_contact_allowed(self):
        pls = [
            mk(FAMILY_EQ, ORIENT_BASE, H, (0, 0), 0),
            mk(FAMILY_EQ, ORIENT_ROTATED, H, (H, 0), 1),
            mk(FAMILY_EQ, ORIENT_BASE, H, (H, 0), 2),
        ]
        cert = validate_packing(unit_square(), pls)
        assert isinstance(cert, Certificate)

    def test_duplicate_indices_malformed(self):
        pls = [
            mk(FAMILY_ISO, ORIENT_BASE, H, (0, 0), 3),
            mk(FAMILY_ISO, ORIENT_BASE, H, (H, H), 3),
        ]
        with pytest.raises(MalformedPacking):
            validate_packing(unit_square(), pls)

    def test_tampered_vertices_malformed(self):
        pl = mk(FAMILY_ISO, ORIENT_BASE, H, (0, 0), 0)
        bad = Placement(pl.index, pl.family, pl.orientation, pl.size,
                        (pl.vertices[0], pl.vertices[2], pl.vertices[1]))
        with pytest.raises(MalformedPacking):
            validate_packing(unit_square(), [bad])


class TestModes:
    def _random_layered(self, seed):
        rng = random.Random(seed)
        sizes = []
        cur = Fraction(rng.randint(20, 30), 100)
        while len(sizes) < rng.randint(3, 40):
            sizes.append(QE(cur))
            if rng.random() < 0.4:
                cur = cur * Fraction(rng.randint(60, 99), 100)
            if cur < Fraction(1, 50):
                break
        out = pack_eq_rect(1, 1, sizes) if seed % 2 else pack_iso_rect(1, 1, sizes)
        return [p for p in out] if isinstance(out, list) else []

    def test_sweep_equals_all_pairs_certificates(self):
        for seed in range(30):
            pls = self._random_layered(seed)
            a = validate_packing(unit_square(), pls, mode="sweep")
            b = validate_packing(unit_square(), pls, mode="all_pairs")
            assert isinstance(a, Certificate) and isinstance(b, Certificate)
            assert canonical_dumps(certificate_to_json(a)) == \
                canonical_dumps(certificate_to_json(b))

    def test_sweep_finds_planted_overlap(self):
        pls = self._random_layered(4)
        if len(pls) < 3:
            pytest.skip("instance too small")
        clone = pls[2]
        planted = Placement(len(pls), clone.family, clone.orientation,
                            clone.size, clone.vertices)
        got_sweep = validate_packing(unit_square(), pls + [planted], mode="sweep")
        got_all = validate_packing(unit_square(), pls + [planted],
                                   mode="all_pairs")
        assert isinstance(got_sweep, Violation)
        assert isinstance(got_all, Violation)
        assert got_sweep.kind == got_all.kind == "OVERLAP"


class TestCertificateChecker:
    def _good(self):
        pls = [
            mk(FAMILY_ISO, ORIENT_BASE, H, (0, 0), 0),
            mk(FAMILY_ISO, ORIENT_ROTATED, H, (H, H), 1),
            mk(FAMILY_ISO, ORIENT_BASE, H, (H, 0), 2),
        ]
        cert = validate_packing(unit_square(), pls)
        assert isinstance(cert, Certificate)
        return pls, cert

    def test_accepts_valid(self):
        pls, cert = self._good()
        assert check_certificate(cert, pls)

    def test_roundtrip_json(self):
        pls, cert = self._good()
        back = certificate_from_json(certificate_to_json(cert))
        assert check_certificate(back, pls)

    def test_rejects_wrong_box(self):
        pls, cert = self._good()
        obj = certificate_to_json(cert)
        obj = copy.deepcopy(obj)
        obj["boxes"]["0"][1] = "2"
        assert not check_certificate(certificate_from_json(obj), pls)

    def test_rejects_wrong_axis(self):
        pls, cert = self._good()
        obj = copy.deepcopy(certificate_to_json(cert))
        if not obj["separations"]:
            pytest.skip("no separation entries")
        obj["separations"][0]["c"] = "1000"
        assert not check_certificate(certificate_from_json(obj), pls)

    def test_rejects_wrong_area(self):
        pls, cert = self._good()
        obj = copy.deepcopy(certificate_to_json(cert))
        obj["total_area"] = "1"
        assert not check_certificate(certificate_from_json(obj), pls)

    def test_rejects_smuggled_placement(self):
        pls, cert = self._good()
        extra = mk(FAMILY_ISO, ORIENT_BASE, H, (0, H), 3)
        assert not check_certificate(cert, pls + [extra])

    def test_rejects_outside_container(self):
        # certificate for a big rect cannot vouch for the unit square
        pls = [mk(FAMILY_ISO, ORIENT_BASE, 2, (0, 0), 0)]
        cert = validate_packing(rect(3, 3), pls)
        assert isinstance(cert, Certificate)
        small = certificate_to_json(cert)
        small["container"] = {"kind": "unit_square"}
        assert not check_certificate(certificate_from_json(small), pls)

    def test_separations_only_for_overlapping_boxes(self):
        pls, cert = self._good()
        boxed = {i: box for i, box in cert.boxes.items()}
        for i, j, *_ in cert.separations:
            bi, bj = boxed[i], boxed[j]
            assert not (bi[1] < bj[0] or bj[1] < bi[0])
            assert not (bi[3] < bj[2] or bj[3] < bi[2])


class TestDensity:
    def test_within(self):
        pls = [mk(FAMILY_ISO, ORIENT_BASE, 1, (0, 0), 0)]
        out = certify_density(pls, QE("1/2"))
        assert out["within_bound"] is True
        assert out["ratio"] == QE(1)  # area / critical, boundary instance

    def test_strictly_under(self):
        pls = [mk(FAMILY_ISO, ORIENT_BASE, H, (0, 0), 0)]
        out = certify_density(pls, QE("1/2"))
        assert out["within_bound"] is True
        assert out["ratio"] == QE("1/4")

    def test_exceeds(self):
        pls = [
            mk(FAMILY_EQ, ORIENT_BASE, 1, (0, 0), 0),
            mk(FAMILY_EQ, ORIENT_BASE, 1, (2, 0), 1),
        ]
        out = certify_density(pls, SQRT3 / 4)
        assert out["within_bound"] is False

    def test_total_area_sums_shoelace(self):
        pls = [
            mk(FAMILY_EQ, ORIENT_BASE, H, (0, 0), 0),
            mk(FAMILY_EQ, ORIENT_ROTATED, H, (H, 0), 1),
        ]
        assert total_area(pls) == SQRT3 / 4 * H * H * 2
