import pytest
from hypothesis import given

from evector import (
    Digraph,
    InputError,
    PreconditionError,
    Ranking,
    RefusalError,
    Verdict,
    bound_report,
    brute_force_dim2_oracle,
    certify_dimension_two,
    conjugate_ordering,
    enumerate_orderings,
    equality_orderings,
    generate,
    intersection_of_orders,
    is_transitive,
    peel_equality_check,
    realizer_identity_check,
    transitive_closure,
)

from .strategies import dags

FIGURE1_F = Ranking((3, 1, 4, 2))
FIGURE1_G = Ranking((1, 2, 3, 4))


class TestConjugateOrdering:
    def test_figure1(self, figure1):
        assert conjugate_ordering(figure1, FIGURE1_G) == FIGURE1_F

    def test_total_order_is_self_conjugate(self, total3):
        assert conjugate_ordering(total3, Ranking((1, 2, 3))) == Ranking((1, 2, 3))

    def test_antichain_reverses(self, antichain3):
        assert conjugate_ordering(antichain3, Ranking((1, 2, 3))) == Ranking((3, 2, 1))

    def test_not_an_equality_ordering(self, path4):
        with pytest.raises(PreconditionError):
            conjugate_ordering(path4, Ranking((1, 2, 3, 4)))

    def test_conjugate_of_conjugate(self, figure1):
        assert conjugate_ordering(figure1, FIGURE1_F) == FIGURE1_G


class TestIntersectionOfOrders:
    def test_figure1(self, figure1):
        assert intersection_of_orders(FIGURE1_F, FIGURE1_G) == figure1

    def test_equal_orders_give_total_order(self, total3):
        assert intersection_of_orders(Ranking((1, 2, 3)), Ranking((1, 2, 3))) == total3

    def test_opposite_orders_give_antichain(self):
        assert intersection_of_orders(Ranking((1, 2)), Ranking((2, 1))) == Digraph(2)

    def test_length_mismatch(self):
        with pytest.raises(InputError):
            intersection_of_orders(Ranking((1, 2)), Ranking((1, 2, 3)))

    def test_not_a_bijection(self):
        with pytest.raises(InputError):
            intersection_of_orders(Ranking((1, 1)), Ranking((1, 2)))


class TestRealizerIdentity:
    def test_figure1(self, figure1):
        assert realizer_identity_check(figure1, FIGURE1_F, FIGURE1_G)

    def test_antichain(self, antichain3):
        assert realizer_identity_check(antichain3, Ranking((1, 2, 3)), Ranking((3, 2, 1)))

    def test_not_a_realizer(self, figure1):
        with pytest.raises(PreconditionError):
            realizer_identity_check(figure1, FIGURE1_G, FIGURE1_G)

    def test_invalid_ordering(self, path3):
        with pytest.raises(PreconditionError):
            realizer_identity_check(path3, Ranking((3, 2, 1)), Ranking((1, 2, 3)))


class TestCertifyDimensionTwo:
    def test_figure1(self, figure1):
        outcome = certify_dimension_two(figure1)
        assert outcome.verdict is Verdict.CERTIFIED_DIM2
        assert outcome.certificate.g == FIGURE1_G
        assert outcome.certificate.f == FIGURE1_F
        assert outcome.certificate.reconstructed == figure1
        assert outcome.certificate.checks.all_passed()
        assert outcome.min_eg == outcome.floor == 5

    def test_standard_example_is_not_dim2(self, s3):
        outcome = certify_dimension_two(s3)
        assert outcome.verdict is Verdict.NOT_DIM2
        assert outcome.floor == 12
        assert outcome.min_eg == 14
        assert outcome.certificate is None

    @pytest.mark.parametrize("n", range(1, 9))
    def test_total_orders(self, n):
        outcome = certify_dimension_two(generate('total_order', n=n))
        assert outcome.verdict is Verdict.CERTIFIED_DIM2
        assert outcome.certificate.f == outcome.certificate.g

    def test_path_is_closed_first(self, path3):
        outcome = certify_dimension_two(path3)
        assert outcome.verdict is Verdict.CERTIFIED_DIM2
        assert outcome.certificate.reconstructed == transitive_closure(path3)

    def test_path_as_is_is_not_a_poset(self, path3):
        outcome = certify_dimension_two(path3, as_is=True)
        assert outcome.verdict is Verdict.NOT_A_POSET
        assert outcome.min_eg == 2
        assert outcome.floor == 1

    def test_budget_gives_undecided(self, s3):
        outcome = certify_dimension_two(s3, budget=1)
        assert outcome.verdict is Verdict.UNDECIDED
        assert not outcome.search.proven_optimal
        assert outcome.min_eg > outcome.floor

    def test_cyclic_input(self):
        with pytest.raises(PreconditionError):
            certify_dimension_two(Digraph(3, frozenset({(0, 1), (1, 2), (2, 0)})))

    def test_verbose_lists_other_realizers(self, figure1):
        outcome = certify_dimension_two(figure1, verbose=True)
        assert [alt.g for alt in outcome.alternatives] == [FIGURE1_F]
        assert outcome.alternatives[0].f == FIGURE1_G

    def test_alternatives_only_when_verbose(self, antichain3):
        assert certify_dimension_two(antichain3).alternatives == ()
        assert len(certify_dimension_two(antichain3, verbose=True).alternatives) == 5

    def test_to_dict(self, figure1):
        data = certify_dimension_two(figure1).to_dict()
        assert data['verdict'] == 'certified_dim2'
        assert data['certificate']['f'] == [3, 1, 4, 2]
        assert data['certificate']['reconstructed_arcs'] == [[0, 2], [1, 2], [1, 3]]

    @given(dags(max_n=6))
    def test_agrees_with_oracle(self, D):
        poset = transitive_closure(D)
        outcome = certify_dimension_two(poset)
        assert (outcome.verdict is Verdict.CERTIFIED_DIM2) == brute_force_dim2_oracle(poset)
        if outcome.certificate is not None:
            certificate = outcome.certificate
            assert realizer_identity_check(poset, certificate.f, certificate.g)
            assert peel_equality_check(poset, certificate.g)


class TestEqualityOrderings:
    def test_figure1(self, figure1):
        assert list(equality_orderings(figure1)) == [FIGURE1_G, FIGURE1_F]

    def test_path_has_none(self, path3):
        assert list(equality_orderings(path3)) == []

    @given(dags(max_n=6))
    def test_equality_forces_transitivity(self, D):
        for g in equality_orderings(D):
            assert is_transitive(D)
            assert bound_report(D, g).is_equality


class TestOracle:
    def test_figure1(self, figure1):
        assert brute_force_dim2_oracle(figure1)

    def test_standard_example(self, s3):
        assert not brute_force_dim2_oracle(s3)

    def test_total_order(self):
        assert brute_force_dim2_oracle(generate('total_order', n=5))

    def test_antichain(self, antichain3):
        assert brute_force_dim2_oracle(antichain3)

    def test_cap(self):
        with pytest.raises(RefusalError):
            brute_force_dim2_oracle(generate('antichain', n=8))

    def test_not_transitive(self, path3):
        with pytest.raises(PreconditionError):
            brute_force_dim2_oracle(path3)


class TestPeelEqualityCheck:
    def test_figure1(self, figure1):
        assert peel_equality_check(figure1, FIGURE1_G)
        assert peel_equality_check(figure1, FIGURE1_F)

    def test_total_order(self):
        assert peel_equality_check(generate('total_order', n=5), Ranking((1, 2, 3, 4, 5)))

    def test_single_vertex(self):
        assert peel_equality_check(Digraph(1), Ranking((1,)))

    def test_rejects_non_equality(self, path4):
        with pytest.raises(PreconditionError):
            peel_equality_check(path4, Ranking((1, 2, 3, 4)))

    @given(dags(max_n=6))
    def test_every_equality_ordering_peels(self, D):
        poset = transitive_closure(D)
        for g in enumerate_orderings(poset, max_count=200):
            if bound_report(poset, g).is_equality:
                assert peel_equality_check(poset, g)
