from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dicolor.core import (
    DuplicateEdgeError,
    HalfInt,
    SelfLoopError,
    VertexRangeError,
    degree_stats,
    disjoint_union,
    from_edge_list,
    induced_subgraph,
    is_oriented,
    relabel,
    weak_components,
)
from dicolor.generators import directed_cycle, empty_digraph, random_digraph

from strategies import digraphs


class TestHalfInt:
    def test_arithmetic_is_exact(self):
        a = HalfInt.of("5/2")
        assert a.twice == 5
        assert a + HalfInt(1) == 3
        assert a - 1 == HalfInt(3)
        assert 2 * a == 5
        assert a.floor() == 2 and a.ceil() == 3
        assert str(a) == "5/2" and str(HalfInt(4)) == "2"

    def test_ordering_against_ints_and_fractions(self):
        assert HalfInt(3) < 2
        assert HalfInt(4) == 2
        assert HalfInt(5) > Fraction(9, 4)
        assert sorted([HalfInt(3), HalfInt(-1), HalfInt(0)]) == [HalfInt(-1), HalfInt(0), HalfInt(3)]

    def test_rejects_non_half_integers(self):
        with pytest.raises(ValueError):
            HalfInt.of(Fraction(1, 3))
        with pytest.raises(TypeError):
            HalfInt(1.5)

    def test_json_form(self):
        assert HalfInt.of("5/2").to_json() == {"numerator": 5, "denominator": 2}


class TestFromEdgeList:
    def test_triangle(self, c3):
        assert c3.n == 3
        assert c3.edges() == [(0, 1), (1, 2), (2, 0)]
        assert c3.in_adj == ((2,), (0,), (1,))
        c3.check_invariants()

    def test_single_vertex(self):
        D = from_edge_list(1, [])
        assert D.n == 1 and D.edges() == []

    def test_digon_is_representable(self, digon):
        digon.check_invariants()
        assert not is_oriented(digon)

    @pytest.mark.parametrize(
        "n, edges, exc",
        [
            (3, [(1, 1)], SelfLoopError),
            (3, [(0, 3)], VertexRangeError),
            (3, [(-1, 0)], VertexRangeError),
            (3, [(0, 1), (0, 1)], DuplicateEdgeError),
        ],
    )
    def test_violations_are_distinct(self, n, edges, exc):
        with pytest.raises(exc):
            from_edge_list(n, edges)

    @given(digraphs())
    def test_mirror_consistency(self, D):
        D.check_invariants()


class TestDegreeStats:
    def test_triangle(self, c3):
        st_ = degree_stats(c3)
        assert st_.max_avg == 1 and st_.max_geom_sq == 1

    def test_rotational_tournament(self, r5):
        st_ = degree_stats(r5)
        assert st_.max_avg == 2 and st_.max_geom_sq == 4

    def test_star(self, star):
        st_ = degree_stats(star)
        assert st_.per_vertex[0] == (1, 4)
        assert st_.max_avg == HalfInt(5)
        assert st_.max_geom_sq == 4

    @given(digraphs())
    def test_am_gm(self, D):
        st_ = degree_stats(D)
        assert 4 * st_.max_geom_sq <= st_.max_avg.twice ** 2


def test_is_oriented(c3, r5, digon):
    assert is_oriented(c3)
    assert is_oriented(r5)
    assert not is_oriented(digon)


class TestInducedSubgraph:
    def test_edge_of_triangle(self, c3):
        sub, verts = induced_subgraph(c3, {0, 1})
        assert sub.edges() == [(0, 1)] and verts == [0, 1]

    def test_identity(self, r5):
        sub, verts = induced_subgraph(r5, range(5))
        assert sub == r5 and verts == list(range(5))

    def test_r5_minus_zero(self, r5):
        # i -> i+1, i+2 (mod 5) restricted to {1,2,3,4}
        sub, verts = induced_subgraph(r5, {1, 2, 3, 4})
        expected = {(1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (4, 1)}
        assert {(verts[u], verts[v]) for u, v in sub.edges()} == expected

    def test_out_of_range(self, c3):
        with pytest.raises(VertexRangeError):
            induced_subgraph(c3, {0, 5})

    @given(digraphs(), st.data())
    def test_never_increases_degrees(self, D, data):
        S = data.draw(st.sets(st.integers(0, max(D.n - 1, 0))) if D.n else st.just(set()))
        sub, verts = induced_subgraph(D, S)
        sub.check_invariants()
        for new, old in enumerate(verts):
            assert sub.out_degree(new) <= D.out_degree(old)
            assert sub.in_degree(new) <= D.in_degree(old)


class TestWeakComponents:
    def test_triangle(self, c3):
        assert weak_components(c3) == [[0, 1, 2]]

    def test_two_triangles(self, c3):
        comps = weak_components(disjoint_union(c3, c3))
        assert [len(c) for c in comps] == [3, 3]

    def test_edgeless(self):
        assert weak_components(empty_digraph(4)) == [[0], [1], [2], [3]]

    @given(digraphs())
    def test_partition(self, D):
        comps = weak_components(D)
        flat = [v for c in comps for v in c]
        assert sorted(flat) == list(range(D.n))
        assert all(comps)
        assert [c[0] for c in comps] == sorted(c[0] for c in comps)
        label = {v: i for i, c in enumerate(comps) for v in c}
        assert all(label[u] == label[v] for u, v in D.edges())


def test_relabel_preserves_degrees():
    D = random_digraph(8, 0.3, seed=1)
    perm = [3, 1, 7, 0, 2, 6, 5, 4]
    E = relabel(D, perm)
    assert sorted(degree_stats(D).per_vertex) == sorted(degree_stats(E).per_vertex)
    assert directed_cycle(4) != directed_cycle(5)
