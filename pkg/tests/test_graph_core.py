import pytest
from hypothesis import given

from evector import (
    Digraph,
    InputError,
    PreconditionError,
    deletion_identity_check,
    e_vector,
    in_neighbors,
    induced_subgraph,
    is_acyclic,
    is_transitive,
    maximal_vertices,
    out_neighbors,
    transitive_closure,
)

from .strategies import dags, digraphs

FIGURE1_ARCS = {(0, 2), (1, 2), (1, 3)}


class TestDigraph:
    def test_self_loop_rejected(self):
        with pytest.raises(InputError):
            Digraph(2, frozenset({(1, 1)}))

    def test_out_of_range_arc_rejected(self):
        with pytest.raises(InputError):
            Digraph(2, frozenset({(0, 2)}))

    def test_duplicate_arc_rejected(self):
        with pytest.raises(InputError):
            Digraph.from_arcs(3, [(0, 1), (0, 1)])

    def test_negative_vertex_count_rejected(self):
        with pytest.raises(InputError):
            Digraph(-1)

    def test_equality_ignores_construction_order(self):
        assert Digraph.from_arcs(3, [(0, 1), (1, 2)]) == Digraph.from_arcs(3, [(1, 2), (0, 1)])
        assert hash(Digraph(3, frozenset({(0, 1)}))) == hash(Digraph(3, frozenset({(0, 1)})))

    def test_empty_digraph_is_legal(self):
        empty = Digraph(0)
        assert e_vector(empty).values == ()
        assert is_acyclic(empty)
        assert transitive_closure(empty) == empty


class TestNeighbourhoods:
    def test_in_neighbors(self, path3, figure1, antichain3):
        assert in_neighbors(path3, 1) == {0}
        assert in_neighbors(figure1, 2) == {0, 1}
        assert in_neighbors(antichain3, 0) == set()

    def test_out_neighbors(self, path3, figure1, total3):
        assert out_neighbors(path3, 1) == {2}
        assert out_neighbors(figure1, 1) == {2, 3}
        assert out_neighbors(total3, 0) == {1, 2}

    @pytest.mark.parametrize("x", [-1, 3, 10])
    def test_vertex_out_of_range(self, path3, x):
        with pytest.raises(InputError):
            in_neighbors(path3, x)
        with pytest.raises(InputError):
            out_neighbors(path3, x)


class TestEVector:
    def test_figure1(self, figure1):
        assert figure1.arcs == FIGURE1_ARCS
        e = e_vector(figure1)
        assert e.values == (-1, -2, 2, 1)
        assert e.norm_squared() == 10

    def test_path(self, path4):
        assert e_vector(path4).values == (-1, 0, 0, 1)

    def test_total_order(self, total3):
        assert e_vector(total3).values == (-2, 0, 2)

    @given(digraphs())
    def test_sum_is_zero_and_square_norm_even(self, D):
        e = e_vector(D)
        assert e.total() == 0
        assert e.norm_squared() % 2 == 0


class TestAcyclicity:
    def test_path_is_acyclic(self, path4):
        assert is_acyclic(path4)

    def test_two_cycle(self):
        assert not is_acyclic(Digraph(2, frozenset({(0, 1), (1, 0)})))

    def test_figure1_is_acyclic(self, figure1):
        assert is_acyclic(figure1)


class TestInducedSubgraph:
    def test_prefix_of_total_order(self, total3):
        sub, index_map = induced_subgraph(total3, {0, 1})
        assert sub == Digraph(2, frozenset({(0, 1)}))
        assert index_map == {0: 0, 1: 1}

    def test_figure1_restriction(self, figure1):
        sub, _ = induced_subgraph(figure1, {0, 1, 2})
        assert sub.arcs == {(0, 2), (1, 2)}

    def test_reindexing(self, figure1):
        sub, index_map = induced_subgraph(figure1, {1, 3})
        assert index_map == {1: 0, 3: 1}
        assert sub.arcs == {(0, 1)}

    def test_out_of_range_vertex(self, figure1):
        with pytest.raises(InputError):
            induced_subgraph(figure1, {0, 4})

    @given(digraphs())
    def test_all_vertices_is_identity(self, D):
        sub, index_map = induced_subgraph(D, range(D.n))
        assert sub == D
        assert all(old == new for old, new in index_map.items())


class TestTransitiveClosure:
    def test_path(self, path3):
        assert transitive_closure(path3).arcs == {(0, 1), (1, 2), (0, 2)}

    def test_figure1_is_already_closed(self, figure1):
        assert transitive_closure(figure1) == figure1

    def test_cyclic_input(self):
        with pytest.raises(PreconditionError):
            transitive_closure(Digraph(3, frozenset({(0, 1), (1, 2), (2, 0)})))

    @given(dags())
    def test_idempotent_and_transitive(self, D):
        closure = transitive_closure(D)
        assert transitive_closure(closure) == closure
        assert is_transitive(closure)
        assert D.arcs <= closure.arcs


class TestIsTransitive:
    def test_path_is_not_transitive(self, path3):
        assert not is_transitive(path3)

    def test_total_order(self, total3):
        assert is_transitive(total3)

    def test_figure1(self, figure1):
        assert is_transitive(figure1)

    def test_two_cycle_is_not_transitive(self):
        assert not is_transitive(Digraph(2, frozenset({(0, 1), (1, 0)})))


class TestDeletionIdentity:
    def test_figure1_top(self, figure1):
        assert maximal_vertices(figure1) == [2, 3]
        assert deletion_identity_check(figure1, 2)
        assert deletion_identity_check(figure1, 3)

    def test_non_maximal_vertex(self, figure1):
        with pytest.raises(PreconditionError):
            deletion_identity_check(figure1, 1)

    @given(dags(min_n=1))
    def test_every_maximal_vertex(self, D):
        for z in maximal_vertices(D):
            assert deletion_identity_check(D, z)
