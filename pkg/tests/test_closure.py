import pytest
from hypothesis import given, settings

from conftest import nonincreasing_seqs
from kcforbits.closure import (
    build_closure_graph,
    degenerates_to,
    majorization_report,
    same_orbit,
    weakly_majorizes,
)
from kcforbits.core import INFINITY, KroneckerStructure, finite, rank_of
from kcforbits.errors import DuplicateNodeError, SizeMismatchError
from kcforbits.verify import enumerate_structures, label_matchings

e1, e2 = finite(1), finite(2)


def S(jordan=(), right=(), left=()):
    return KroneckerStructure(jordan, right, left)


ZERO_1x1 = S(right=[0], left=[0])
J1 = S(jordan=[(e1, 1)])


class TestWeaklyMajorizes:
    def test_examples(self):
        assert weakly_majorizes((2, 2), (2, 1))
        assert not weakly_majorizes((2, 2), (3,))
        assert weakly_majorizes((5, 1), ())
        assert weakly_majorizes((), ())

    def test_prefix_failure_later(self):
        # passes at j=1, fails at j=2
        assert not weakly_majorizes((2, 0), (2, 1))


@settings(max_examples=400)
@given(nonincreasing_seqs())
def test_weak_majorization_reflexive(a):
    assert weakly_majorizes(a, a)


@settings(max_examples=400)
@given(nonincreasing_seqs(), nonincreasing_seqs(), nonincreasing_seqs())
def test_weak_majorization_transitive(a, b, c):
    if weakly_majorizes(a, b) and weakly_majorizes(b, c):
        assert weakly_majorizes(a, c)


class TestDegeneratesTo:
    def test_zero_in_every_closure(self):
        assert degenerates_to(J1, ZERO_1x1)
        assert not degenerates_to(ZERO_1x1, J1)

    def test_2x4_example(self):
        L = S(right=[1, 1])
        M = S(right=[0, 2])
        assert degenerates_to(L, M)
        assert not degenerates_to(M, L)

    def test_reflexive(self):
        for K in (ZERO_1x1, J1, S(jordan=[(e1, 2), (INFINITY, 1)])):
            assert degenerates_to(K, K)

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatchError):
            degenerates_to(J1, S(right=[1]))

    def test_distinct_eigenvalues_unrelated(self):
        other = S(jordan=[(e2, 1)])
        assert not degenerates_to(J1, other)
        assert not degenerates_to(other, J1)


class TestSameOrbit:
    def test_examples(self):
        assert same_orbit(S(jordan=[(e1, 2)]), S(jordan=[(e1, 2)]))
        assert not same_orbit(S(jordan=[(e1, 2)]), S(jordan=[(e1, 1), (e1, 1)]))
        assert not same_orbit(S(jordan=[(e1, 1)]), S(jordan=[(e2, 1)]))

    def test_different_sizes(self):
        assert not same_orbit(J1, S(right=[1]))

    def test_matches_equal_majorizations(self):
        # same orbit is exactly h = 0 with equality in all majorizations
        nodes = enumerate_structures(2, 2)
        for L in nodes:
            for M in nodes:
                expected = rank_of(L) == rank_of(M) and degenerates_to(L, M) and degenerates_to(M, L)
                assert same_orbit(L, M) == expected


def _concrete_nodes(m, n):
    """All structures of size (m, n) concretely labeled from a small pool."""
    out = []
    seen = set()
    for K0 in enumerate_structures(m, n):
        for K in label_matchings(K0, [finite(i + 1) for i in range(min(m, n))]):
            if K not in seen:
                seen.add(K)
                out.append(K)
    return out


@pytest.mark.parametrize(
    "m,n",
    [(1, 1), (1, 2), (2, 1), (1, 3), (3, 1), (2, 2), (2, 3), (3, 2), (3, 3)],
)
def test_closure_order_is_a_partial_order(m, n):
    nodes = _concrete_nodes(m, n)
    rel = [[degenerates_to(a, b) for b in nodes] for a in nodes]
    for i, a in enumerate(nodes):
        assert rel[i][i]
        for j, b in enumerate(nodes):
            if i != j and rel[i][j] and rel[j][i]:
                pytest.fail(f"antisymmetry violated: {a} and {b}")
    count = len(nodes)
    for i in range(count):
        for j in range(count):
            if rel[i][j]:
                for k in range(count):
                    if rel[j][k]:
                        assert rel[i][k], (nodes[i], nodes[j], nodes[k])


@pytest.mark.parametrize("m,n", [(2, 2), (2, 3), (3, 3)])
def test_rank_monotone_along_closure(m, n):
    nodes = _concrete_nodes(m, n)
    for L in nodes:
        for M in nodes:
            if degenerates_to(L, M):
                assert rank_of(L) >= rank_of(M)


class TestMajorizationReport:
    def test_witnesses(self):
        report = majorization_report(J1, ZERO_1x1)
        assert report["h"] == 1
        assert report["in_closure"]
        names = [c["condition"] for c in report["conditions"]]
        assert names == ["right", "left", "eigenvalue e1"]
        for cond in report["conditions"]:
            assert cond["ok"]
            assert cond["partial_sums"][0] == {"j": 1, "lhs": 1, "rhs": 1, "ok": True}

    def test_negative_h(self):
        report = majorization_report(ZERO_1x1, J1)
        assert report["h"] == -1
        assert not report["in_closure"]
        assert report["conditions"] == []


class TestClosureGraph:
    def test_two_node_chain(self):
        graph = build_closure_graph([J1, ZERO_1x1])
        assert graph.codimensions == (1, 2)
        assert graph.edges == ((0, 1),)

    def test_three_node_chain(self):
        nodes = [
            S(jordan=[(e1, 3)]),
            S(jordan=[(e1, 2), (e1, 1)]),
            S(jordan=[(e1, 1), (e1, 1), (e1, 1)]),
        ]
        graph = build_closure_graph(nodes)
        assert graph.codimensions == (3, 5, 9)
        # covering edges only: the 0 -> 2 edge is implied
        assert graph.edges == ((0, 1), (1, 2))

    def test_single_node(self):
        graph = build_closure_graph([J1])
        assert graph.edges == ()

    def test_errors(self):
        with pytest.raises(SizeMismatchError):
            build_closure_graph([J1, S(right=[1])])
        with pytest.raises(DuplicateNodeError):
            build_closure_graph([J1, S(jordan=[(e1, 1)])])

    @pytest.mark.parametrize("m,n", [(2, 2), (2, 3)])
    def test_transitive_closure_reproduces_relation(self, m, n):
        nodes = enumerate_structures(m, n)
        graph = build_closure_graph(nodes)
        reach = graph.closure_relation()
        for i, a in enumerate(nodes):
            for j, b in enumerate(nodes):
                assert reach[i][j] == (degenerates_to(a, b) if i != j else True)

    def test_edges_increase_codimension(self):
        nodes = enumerate_structures(2, 2)
        graph = build_closure_graph(nodes)
        for i, j in graph.edges:
            assert graph.codimensions[i] < graph.codimensions[j]
