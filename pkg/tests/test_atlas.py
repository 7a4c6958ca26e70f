import pytest

from leafatlas.atlas import (
    InputError,
    ambient_dims,
    build_atlas,
    check_middle_term,
    enumerate_hn_types,
    leaf_dimension,
    refine_to_indec,
    validate_input,
)
from leafatlas.bundles import BundleType, HNType, hn_decompose, parse_type
from leafatlas.charges import Charge
from leafatlas.polygons import Triangle, hn_polygon, polygon_leq

from conftest import coprime_pairs


def hn(*pairs):
    return HNType(tuple(Charge(*p) for p in pairs))


def test_validate_input():
    assert validate_input(2, 5) is None
    assert validate_input(1, 2) is not None
    with pytest.raises(InputError, match="no stable F"):
        validate_input(2, 4)
    for k, n in [(0, 3), (3, 3), (5, 3), (-1, 4)]:
        with pytest.raises(InputError, match="out of range"):
            validate_input(k, n)


def test_check_middle_term():
    ok = check_middle_term(parse_type("1,2;1,1"), 1, 3)
    assert ok.admissible and ok.det_satisfiable
    bad = check_middle_term(parse_type("1,3;1,0"), 1, 3)
    assert not bad.admissible
    assert bad.messages() == [
        "vertex (1,3) on triangle boundary",
        "summand degree 0 violates positivity",
    ]
    assert check_middle_term(parse_type("2,3"), 1, 3).admissible


def test_check_reports_charge_mismatch_and_outside_vertices():
    v = check_middle_term(parse_type("1,3;1,1"), 1, 3)
    assert not v.charge_ok
    assert "total charge (2, 4) differs from (2, 3)" in v.messages()
    v = check_middle_term(parse_type("1,4;1,-1"), 1, 3)
    assert v.charge_ok
    assert v.vertex_failures[0][1] == "outside triangle"


def test_enumerate_small_cases():
    assert enumerate_hn_types(1, 3) == [hn((1, 2), (1, 1)), hn((2, 3))]
    assert set(enumerate_hn_types(2, 5)) == {hn((3, 5)), hn((1, 2), (2, 3)), hn((2, 4), (1, 1))}


@pytest.mark.parametrize("n", range(3, 13))
def test_k1_interior_vertices(n):
    ys = sorted(nu.pieces[0].degree for nu in enumerate_hn_types(1, n) if len(nu) == 2)
    assert ys == [m for m in range(n) if 2 * m > n]


@pytest.mark.parametrize("k, n", coprime_pairs(12))
def test_enumeration_is_valid_and_sorted(k, n):
    types = enumerate_hn_types(k, n)
    verts = [hn_polygon(nu).vertices for nu in types]
    assert verts == sorted(set(verts))
    assert hn((k + 1, n)) in types
    for nu in types:
        for t in refine_to_indec(nu):
            assert check_middle_term(t, k, n).admissible
            assert hn_decompose(t) == nu


@pytest.mark.parametrize("k, n", [(4, 9), (3, 11), (5, 12)])
def test_parallel_enumeration_matches_serial(k, n):
    assert enumerate_hn_types(k, n, jobs=3) == enumerate_hn_types(k, n)


def test_refine_examples():
    assert refine_to_indec(hn((2, 3))) == [BundleType.of([Charge(2, 3)])]
    assert [t.id for t in refine_to_indec(hn((2, 4), (1, 1)))] == ["2,4;1,1", "1,2*2;1,1"]
    assert [t.id for t in refine_to_indec(hn((3, 6), (2, 2)))] == [
        "3,6;2,2", "3,6;1,1*2", "1,2;2,4;2,2", "1,2;2,4;1,1*2", "1,2*3;2,2", "1,2*3;1,1*2",
    ]


def test_partition_counts():
    # p(1..7) = 1, 2, 3, 5, 7, 11, 15
    counts = [len(refine_to_indec(hn((m, 2 * m)))) for m in range(1, 8)]
    assert counts == [1, 2, 3, 5, 7, 11, 15]


def test_leaf_dimension():
    assert leaf_dimension(parse_type("3,5"), 5) == 4
    assert leaf_dimension(parse_type("1,2;1,1"), 3) == 0
    assert leaf_dimension(parse_type("1,2*2;1,1"), 5) == 0
    with pytest.raises(ValueError, match="not admissible"):
        leaf_dimension(parse_type("1,2*2;1,1"), 4)


def test_ambient_dims():
    assert ambient_dims(1, 3) == (4, 2)
    assert ambient_dims(2, 5) == (6, 4)


def test_atlas_fixtures():
    a = build_atlas(1, 3, refine=True)
    assert sorted(r.leaf_dim for r in a.records) == [0, 2]
    assert a.poset_edges == [("2,3", "1,2;1,1")]
    b = build_atlas(2, 5, refine=True)
    assert [(r.id, r.end_dim, r.leaf_dim, r.moduli_dim, r.stratum_dim) for r in b.records] == [
        ("1,2;2,3", 3, 2, 1, 3),
        ("2,4;1,1", 5, 0, 1, 1),
        ("1,2*2;1,1", 5, 0, 2, 2),
        ("3,5", 1, 4, 0, 4),
    ]
    assert sorted(b.poset_edges) == [("1,2;2,3", "2,4;1,1"), ("3,5", "1,2;2,3")]


def test_unrefined_atlas_has_one_record_per_type():
    a = build_atlas(3, 7)
    assert [r.id for r in a.records] == [nu.id for nu in a.hn_types]


@pytest.mark.parametrize("k, n", coprime_pairs(12, min_n=3))
def test_atlas_invariants(k, n):
    a = build_atlas(k, n, refine=True)
    ids = [r.id for r in a.records]
    assert len(ids) == len(set(ids))
    # one vertex-free HN type; with refinement it may carry several records
    assert [nu for nu in a.hn_types if len(nu) == 1] == [HNType((Charge(k + 1, n),))]
    assert all(len(r.vertices) == 2 for r in a.records if r.is_semistable)
    assert sum(r.is_semistable for r in build_atlas(k, n).records) == 1
    for r in a.records:
        assert r.leaf_dim == n - r.end_dim
        assert r.stratum_dim == r.leaf_dim + r.moduli_dim
        assert r.leaf_dim % 2 == 0
        assert 0 <= r.leaf_dim <= n - 1 and r.stratum_dim <= n - 1
    assert any(r.stratum_dim == n - 1 for r in a.records)
    # the vertex-free type sits below everything
    polys = {nu.id: hn_polygon(nu) for nu in a.hn_types}
    bottom = polys[f"{k + 1},{n}"]
    assert all(polygon_leq(bottom, p) for p in polys.values())
    lows = {lo for lo, _ in a.poset_edges}
    highs = {hi for _, hi in a.poset_edges}
    if len(polys) > 1:
        assert f"{k + 1},{n}" in lows and f"{k + 1},{n}" not in highs


def test_poset_edges_are_covering():
    a = build_atlas(5, 12)
    polys = {nu.id: hn_polygon(nu) for nu in a.hn_types}
    for lo, hi in a.poset_edges:
        assert polygon_leq(polys[lo], polys[hi]) and lo != hi
        between = [m for m in polys if m not in (lo, hi)
                   and polygon_leq(polys[lo], polys[m]) and polygon_leq(polys[m], polys[hi])]
        assert between == []


def test_low_n_warning():
    a = build_atlas(1, 2, refine=True)
    assert a.warning is not None
    assert [r.id for r in a.records] == ["2,2", "1,1*2"]


def test_dot_and_json_shapes():
    a = build_atlas(2, 5, refine=True)
    d = a.to_dict()
    assert list(d) == ["k", "n", "ambient_dim", "warning", "records", "poset"]
    assert list(d["records"][0]) == [
        "id", "hn_type", "summands", "vertices", "end_dim", "leaf_dim", "moduli_dim",
        "stratum_dim", "is_semistable", "is_stable_type", "det_satisfiable",
    ]
    assert d["records"][2]["summands"] == [[1, 2, 2], [1, 1, 1]]
    dot = a.to_dot()
    assert '"3,5" -> "1,2;2,3";' in dot
    assert "leaf_dim=4" in dot


@pytest.mark.parametrize("n", range(3, 10))
def test_k_equal_n_minus_1_gives_point_leaves(n):
    # the triangle has no interior lattice points; only slope-1 types occur
    a = build_atlas(n - 1, n, refine=True)
    assert [nu.id for nu in a.hn_types] == [f"{n},{n}"]
    assert {r.leaf_dim for r in a.records} == {0}
