"""Tests for the symplectic polar geometry: the form and its pairing
convention, point/line counts against the classical isotropic-subspace
formula, incidence structure, strata, the quotient dimension and exports."""

import json

import pytest

from polarwords.errors import GuardError
from polarwords.gf2 import Gf2Subspace, Gf2Vector, rank_of_rows
from polarwords.language import g
from polarwords.polarspace import (
    build_geometry,
    export_incidence,
    quotient_basis,
    strata,
    symplectic_form,
    udim,
)
from polarwords.verify import _cremona_mismatch

S = Gf2Subspace.from_strings


def isotropic_count(n: int, k: int) -> int:
    """Totally isotropic k-subspaces of a symplectic F_2^(2n): the classical
    product  prod_i (2^(2n-i) - 2^i) / prod_i (2^k - 2^i),  i = 0..k-1."""
    num = den = 1
    for i in range(k):
        num *= (1 << (2 * n - i)) - (1 << i)
        den *= (1 << k) - (1 << i)
    return num // den


# ------------------------------------------------------------------ form


def test_form_pairs_coordinate_i_with_n_plus_i():
    e = [Gf2Vector.from_string(s) for s in ("1000", "0100", "0010", "0001")]
    pairs = {(i, j): symplectic_form(e[i], e[j], 2) for i in range(4) for j in range(4)}
    assert pairs[(0, 2)] == pairs[(2, 0)] == 1
    assert pairs[(1, 3)] == pairs[(3, 1)] == 1
    assert all(v == 0 for k, v in pairs.items() if k not in {(0, 2), (2, 0), (1, 3), (3, 1)})


def test_form_is_alternating_bilinear_nondegenerate():
    vs = [Gf2Vector(4, b) for b in range(16)]
    for u in vs:
        assert symplectic_form(u, u, 2) == 0
        for v in vs:
            assert symplectic_form(u, v, 2) == symplectic_form(v, u, 2)
            for w in vs:
                assert symplectic_form(u ^ v, w, 2) == (
                    symplectic_form(u, w, 2) ^ symplectic_form(v, w, 2)
                )
    radical = [u for u in vs if all(symplectic_form(u, v, 2) == 0 for v in vs)]
    assert radical == [Gf2Vector(4, 0)]


def test_form_dimension_check():
    with pytest.raises(ValueError):
        symplectic_form(Gf2Vector(4, 1), Gf2Vector(4, 2), 3)


def test_pairing_convention_is_forced_by_the_rank_two_points():
    # span{0001, 1010} is one of the 15 rank-2 points; the adjacent-pair
    # convention (1,2)(3,4) would make it anisotropic and shuffle the table
    u = Gf2Vector.from_string("0001")
    v = Gf2Vector.from_string("1010")
    assert symplectic_form(u, v, 2) == 0
    assert S(["0001", "1010"]) in set(build_geometry(2).points)

    def adjacent_pairs_form(a: Gf2Vector, b: Gf2Vector) -> int:
        total = 0
        for i in (1, 3):
            total ^= a.coord(i) & b.coord(i + 1)
            total ^= a.coord(i + 1) & b.coord(i)
        return total

    assert adjacent_pairs_form(u, v) == 1


# -------------------------------------------------------------- geometry


@pytest.mark.parametrize("n", (1, 2, 3))
def test_point_and_line_counts_match_the_classical_formula(n):
    geometry = build_geometry(n)
    assert len(geometry.points) == isotropic_count(n, n)
    assert len(geometry.lines) == isotropic_count(n, n - 1)


@pytest.mark.parametrize("n", (1, 2, 3))
def test_incidence_is_containment_with_three_points_per_line(n):
    geometry = build_geometry(n)
    for line, triple in zip(geometry.lines, geometry.incidence):
        assert line.dim == n - 1
        assert len(set(triple)) == 3
        inside = set(line.members())
        for i in triple:
            point = geometry.points[i]
            assert point.dim == n
            assert inside <= set(point.members())


@pytest.mark.parametrize("n", (1, 2, 3))
def test_flag_count_identity(n):
    # every point carries 2^n - 1 lines, every line 3 points
    geometry = build_geometry(n)
    assert len(geometry.points) * (2**n - 1) == 3 * len(geometry.lines)


def test_two_collinear_points_meet_exactly_in_their_line():
    geometry = build_geometry(2)
    for line, (a, b, c) in zip(geometry.lines, geometry.incidence):
        members = set(line.members())
        for i, j in ((a, b), (a, c), (b, c)):
            meet = set(geometry.points[i].members()) & set(geometry.points[j].members())
            assert meet == members


def test_rank_two_is_the_cremona_richmond_configuration():
    assert _cremona_mismatch() is None


def test_geometry_guard():
    with pytest.raises(GuardError):
        build_geometry(0)
    with pytest.raises(GuardError):
        build_geometry(5)


def test_rebuild_is_byte_identical():
    before = export_incidence(2, "json")
    build_geometry.cache_clear()
    assert export_incidence(2, "json") == before


# ---------------------------------------------------------------- quotient


@pytest.mark.parametrize("n", (1, 2, 3))
def test_udim_equals_g(n):
    assert udim(n) == g(n)


def test_quotient_basis_certificates():
    for n, size, total in ((1, 2, 3), (2, 5, 15), (3, 15, 135)):
        basis = quotient_basis(n)
        assert len(basis.indices) == size
        assert basis.certificate_rank == total
        # recompute the certificate independently: line rows plus the chosen
        # unit rows must span the whole point module
        geometry = build_geometry(n)
        rows = []
        for triple in geometry.incidence:
            b = 0
            for i in triple:
                b |= 1 << i
            rows.append(b)
        rows.extend(1 << i for i in basis.indices)
        assert rank_of_rows(rows) == len(geometry.points)
        assert len(basis.indices) == udim(n)


def test_quotient_basis_is_deterministic():
    assert quotient_basis(2).indices == (0, 1, 3, 4, 6)


# ------------------------------------------------------------------ strata


def test_strata_profile_rank_two():
    for base in range(15):
        report = strata(2, base)
        assert tuple(len(s) for s in report.strata) == (1, 6, 8)
        assert tuple(len(c) for c in report.components) == (1, 3, 1)
        assert report.strata[0] == (base,)


def test_strata_profile_rank_three():
    report = strata(3, 0)
    assert tuple(len(s) for s in report.strata) == (1, 14, 56, 64)
    assert tuple(len(c) for c in report.components) == (1, 7, 7, 1)


def test_strata_components_partition_their_stratum():
    report = strata(2, 7)
    for members, comps in zip(report.strata, report.components):
        seen = [i for comp in comps for i in comp]
        assert sorted(seen) == list(members)


def test_strata_base_index_range():
    with pytest.raises(ValueError):
        strata(2, 15)
    with pytest.raises(ValueError):
        strata(2, -1)
    with pytest.raises(GuardError):
        strata(5, 0)


# ------------------------------------------------------------------ export


def test_export_json_schema():
    doc = json.loads(export_incidence(2, "json"))
    assert doc["n"] == 2
    assert [p["id"] for p in doc["points"]] == list(range(15))
    assert [l["id"] for l in doc["lines"]] == list(range(15))
    for p in doc["points"]:
        assert all(len(row) == 4 for row in p["basis"])
    for l in doc["lines"]:
        assert len(l["points"]) == 3
        assert all(0 <= i < 15 for i in l["points"])


def test_export_csv():
    assert export_incidence(1, "csv") == "0,0,1,2\n"
    rows = export_incidence(3, "csv").splitlines()
    assert len(rows) == 315
    assert all(len(r.split(",")) == 4 for r in rows)


def test_export_dot_golden():
    assert export_incidence(1, "dot") == (
        "graph polar_rank_1 {\n"
        '  P0 [shape=ellipse label="01"];\n'
        '  P1 [shape=ellipse label="10"];\n'
        '  P2 [shape=ellipse label="11"];\n'
        '  L0 [shape=box label="L0"];\n'
        "  P0 -- L0;\n"
        "  P1 -- L0;\n"
        "  P2 -- L0;\n"
        "}\n"
    )


def test_export_rejects_unknown_format():
    with pytest.raises(ValueError):
        export_incidence(2, "yaml")
