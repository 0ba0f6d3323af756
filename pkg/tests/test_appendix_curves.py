from math import gcd

import pytest

from orbicover.cyclotomic import CyclotomicScalar
from orbicover.curves import (
    build_orbit,
    divisibility_criterion,
    expected_node_orbits,
    first_generic_coeffs,
    genericity_check,
    genus_balance,
    intersection_census,
    nodal_certificate,
    off_triangle_pair_count,
    singularity_census,
)
from orbicover.exact import ProjectivePoint


def test_build_orbit():
    (line,) = build_orbit(1, 2, 5, 1)
    assert line.coeffs == (1, 2, 5)
    lines = build_orbit(1, 1, 1, 2)
    assert len(lines) == 4
    assert {tuple(int(c.coeffs[0]) for c in l.coeffs) for l in lines} == {(1, 1, 1), (1, -1, 1), (-1, 1, 1), (-1, -1, 1)}
    with pytest.raises(ValueError):
        build_orbit(0, 1, 1, 3)


@pytest.mark.parametrize("s", [2, 3, 4])
def test_orbit_invariant_under_index_shifts(s):
    lines = build_orbit(1, 2, 5, s)
    w = CyclotomicScalar.omega(s)
    keys = {ProjectivePoint(l.coeffs) for l in lines}
    for l in lines:
        a, b, c = l.coeffs
        assert ProjectivePoint(a * w, b, c) in keys
        assert ProjectivePoint(a, b * w, c) in keys


def test_census_s2():
    cen = intersection_census(build_orbit(1, 2, 5, 2))
    assert all(p.multiplicity == 2 for p in cen.off_triangle())
    assert cen.off_triangle_orbits == 0


def test_census_s3():
    cen = intersection_census(build_orbit(1, 2, 5, 3))
    off = cen.off_triangle()
    assert len(off) == off_triangle_pair_count(3) == 9
    assert all(p.multiplicity == 2 for p in off)
    assert cen.off_triangle_orbits == 1
    points = [p.point for p in cen.points]
    assert len(set(points)) == len(points)


def test_census_proportional_lines():
    lines = build_orbit(1, 2, 5, 2)
    with pytest.raises(ValueError):
        intersection_census([lines[0], lines[0]])


def test_genericity():
    assert genericity_check(build_orbit(1, 2, 5, 2))
    assert genericity_check(build_orbit(1, 2, 5, 1))
    # the symmetric triple is transversal to the triangle as well
    assert genericity_check(build_orbit(1, 1, 1, 2))
    lines = build_orbit(1, 2, 5, 2)
    assert not genericity_check(lines + [lines[0]])


def test_pairs_sharing_an_index_meet_on_the_triangle():
    cen = intersection_census(build_orbit(1, 1, 1, 2))
    on = [p for p in cen.points if p.on_triangle]
    # L00 and L01 meet on y = 0
    assert any(p.lines == frozenset({0, 1}) and p.point[1] == 0 for p in on)


@pytest.mark.parametrize("s", range(1, 8))
def test_nodal_certificate(s):
    cert = nodal_certificate(s)
    assert cert.kind == "NODAL"
    assert cert.node_orbits == expected_node_orbits(s)


def test_nodal_certificate_examples():
    assert str(nodal_certificate(2)) == "NODAL(0)"
    assert str(nodal_certificate(3)) == "NODAL(1)"
    assert str(nodal_certificate(5)) == "NODAL(6)"
    assert first_generic_coeffs(4) == (1, 2, 5)


@pytest.mark.parametrize("s", range(2, 7))
def test_divisibility_criterion(s):
    checked, vanishing, ok = divisibility_criterion(s)
    assert checked == (s - 1) ** 4
    assert vanishing > 0 and ok


def test_singularity_census():
    assert singularity_census(2, 3).as_tuple() == (6, 0, 6, 4)
    assert singularity_census(3, 2).as_tuple() == (6, 1, 9, 0)
    for b in range(1, 12, 2):
        cen = singularity_census(b, 2)
        assert (cen.genus, cen.cusps, cen.nodes) == ((b - 1) * (b - 2) // 2, 3 * b, 0)
    with pytest.raises(ValueError):
        singularity_census(2, 4)


def test_genus_balance():
    assert genus_balance(2, 3)
    for s in range(1, 11):
        assert genus_balance(1, s)
    for r in range(1, 11):
        for s in range(1, 11):
            if gcd(r, s) == 1:
                assert genus_balance(r, s)
