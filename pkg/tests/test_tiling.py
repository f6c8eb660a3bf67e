from collections import Counter
from fractions import Fraction
from math import gcd

import pytest

from farey_brocot.core import InvalidInputError, point_in_triangle
from farey_brocot.tiling import (
    enumerate_tiling,
    face_count,
    iter_bases_at,
    iter_triangles,
    level_q_counts,
    level_q_counts_coded_a,
    locate,
    split_q_states,
    vertices_up_to,
)


def test_enumerate_counts_and_unit_area():
    s = enumerate_tiling("a", 0)
    assert s.count == 2 and s.area_total == 1
    assert enumerate_tiling("a", 1).count == 12
    assert enumerate_tiling("b", 3).count == 16
    assert enumerate_tiling("b", 3).area_total == 1


def test_enumerate_visits_each_once():
    seen = []
    enumerate_tiling("a", 2, visitor=seen.append)
    assert len(seen) == 72
    assert len({t.vertices for t in seen}) == 72


def test_depth0_areas():
    areas = [t.area() for t in iter_triangles("a", 0)]
    assert areas == [Fraction(1, 2), Fraction(1, 2)]


@pytest.mark.parametrize("algo,n", [("a", 3), ("b", 6)])
def test_level_counts_match_geometry(algo, n):
    # multiplicity engine against the geometric stream, depth by depth
    for level in level_q_counts(algo, n):
        pass
    geometric = Counter()
    for basis in iter_bases_at(algo, n):
        qs = tuple(v[0] for v in basis)
        if algo == "a":
            qs = tuple(sorted(qs))
        geometric[qs] += 1
    assert dict(geometric) == level
    assert sum(level.values()) == face_count(algo, n)


def test_coded_counts_match_totals():
    for level in level_q_counts_coded_a(5):
        pass
    assert sum(level.values()) == face_count("a", 5)
    # code length r never exceeds the depth and code sums reach it
    assert all(0 < r <= 5 for (_, _, _, r, _) in level)


def test_split_states_are_canonical():
    states = split_q_states("a", 2)
    assert states == sorted(states)
    assert sum(c for _, c in states) == 72


def test_locate_corner_chain():
    chain = locate("a", (Fraction(0), Fraction(0)), 5)
    for step in chain.steps:
        assert sorted(step.coefficients).count(Fraction(0)) >= 2
        assert step.basis.triangle().contains((Fraction(0), Fraction(0)))
    assert [s.child_index for s in chain.steps[1:]] == [0] * 5


def test_locate_tiebreak_on_new_vertex():
    theta = (Fraction(1, 2), Fraction(1, 2))
    chain = locate("b", theta, 1)
    assert chain.steps[0].child_index == 0  # first root triangle wins the tie
    assert chain.steps[1].child_index == 0  # operation "1" child is index 0
    assert chain.vertex_depth() == 1


def test_locate_finds_target_as_vertex():
    theta = (Fraction(3, 7), Fraction(2, 7))
    chain = locate("a", theta, 7)
    d = chain.vertex_depth()
    assert d is not None and d <= 7


def test_locate_chain_is_nested():
    theta = (Fraction(2, 5), Fraction(1, 3))
    chain = locate("a", theta, 6)
    tris = chain.triangles()
    for parent, child in zip(tris, tris[1:]):
        for v in child.points():
            assert point_in_triangle(v, parent.points())


def test_locate_rejects_outside_point():
    with pytest.raises(InvalidInputError):
        locate("a", (Fraction(3, 2), Fraction(0)), 2)


def test_locate_deterministic():
    theta = (Fraction(1, 3), Fraction(1, 3))
    c1 = locate("a", theta, 6)
    c2 = locate("a", theta, 6)
    assert [s.basis for s in c1.steps] == [s.basis for s in c2.steps]


def test_vertices_up_to_small():
    got = vertices_up_to("a", 1)
    assert {tuple(v): d for v, d in got.items()} == {
        (1, 0, 0): 0,
        (1, 1, 0): 0,
        (1, 0, 1): 0,
        (1, 1, 1): 0,
    }
    got2 = vertices_up_to("a", 2)
    new = {tuple(v): d for v, d in got2.items() if v.x == 2}
    assert new == {
        (2, 1, 0): 1,
        (2, 0, 1): 1,
        (2, 1, 1): 1,
        (2, 2, 1): 1,
        (2, 1, 2): 1,
    }


def _primitive_count(qmax):
    return sum(
        1
        for q in range(1, qmax + 1)
        for a1 in range(q + 1)
        for a2 in range(q + 1)
        if gcd(gcd(q, a1), a2) == 1
    )


@pytest.mark.parametrize("algo", ["a", "b"])
def test_vertices_up_to_count_oracle(algo):
    got = vertices_up_to(algo, 10)
    assert len(got) == _primitive_count(10)
    assert all(v.x <= 10 for v in got)


def test_iter_intervals_partition():
    from farey_brocot.tiling import iter_intervals

    pieces = list(iter_intervals(6))
    assert len(pieces) == 64
    assert pieces[0][0] == 0 and pieces[-1][1] == 1
    for (_, hi), (lo, _) in zip(pieces, pieces[1:]):
        assert hi == lo
    assert sum(hi - lo for lo, hi in pieces) == 1


def test_mediant_additive_on_basis_pairs():
    # q(a (+) b) = q(a) + q(b) whenever a, b sit in a common basis
    from farey_brocot.core import mediant_vector

    for algo in ("a", "b"):
        for n in (0, 2, 4):
            for basis in iter_bases_at(algo, n):
                for i in range(3):
                    for j in range(i + 1, 3):
                        m = mediant_vector(basis[i], basis[j])
                        assert m.x == basis[i][0] + basis[j][0]


def test_located_triangle_belongs_to_tiling():
    for algo, n in (("a", 3), ("b", 5)):
        tiles = {t.vertices for t in iter_triangles(algo, n)}
        for theta in ((Fraction(1, 7), Fraction(2, 7)), (Fraction(0), Fraction(1))):
            chain = locate(algo, theta, n)
            assert chain.steps[-1].basis.vectors in tiles


from hypothesis import given, settings, strategies as st


@settings(max_examples=40, deadline=None)
@given(
    st.integers(1, 40),
    st.integers(1, 40),
    st.integers(0, 40),
    st.integers(0, 40),
    st.sampled_from(["a", "b"]),
)
def test_locate_chain_properties(q1, q2, n1, n2, algo):
    theta = (Fraction(min(n1, q1), q1), Fraction(min(n2, q2), q2))
    chain = locate(algo, theta, 5)
    assert len(chain.steps) == 6
    for step in chain.steps:
        assert min(step.coefficients) >= 0
        assert step.basis.is_unimodular()
        assert step.basis.triangle().contains(theta)
