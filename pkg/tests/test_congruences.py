import pytest
from hypothesis import given, settings, strategies as st

from sglab import (
    AmbientMismatch,
    Congruence,
    ElementSet,
    NotACongruence,
    OrderTooLarge,
    all_subsets,
    classify_quotient,
    enumerate_congruences,
    identity_congruence,
    is_congruence,
    p_congruence,
    p_congruence_pairwise,
    quotient,
    universal_congruence,
    validate,
    verify_corollary1,
    verify_theorem1_converse,
    verify_theorem1_forward,
)


def eset(ambient, *members):
    return ElementSet.of(ambient, members)


class TestCongruenceForm:
    def test_canonicalizes_class_ids(self):
        c = Congruence(3, (7, 7, 2))
        assert c.class_of == (0, 0, 1)

    def test_equality_ignores_verified_flag(self):
        assert Congruence(2, (0, 1), verified=True) == Congruence(2, (5, 9))

    def test_from_classes(self):
        c = Congruence.from_classes(3, [{2}, {0, 1}])
        assert c.class_of == (0, 0, 1)
        assert [x.indices for x in c.classes()] == [(0, 1), (2,)]

    def test_from_classes_rejects_overlap_and_gaps(self):
        with pytest.raises(ValueError):
            Congruence.from_classes(2, [{0}, {0, 1}])
        with pytest.raises(ValueError):
            Congruence.from_classes(3, [{0}, {2}])

    def test_length_must_match(self):
        with pytest.raises(ValueError):
            Congruence(3, (0, 0))

    def test_helpers(self):
        assert identity_congruence(3).class_of == (0, 1, 2)
        assert universal_congruence(3).class_of == (0, 0, 0)


class TestPCongruence:
    def test_context_separates_group_elements(self, z2):
        assert p_congruence(z2, [eset(2, 0)]).class_of == (0, 1)

    def test_left_zero_contexts_see_nothing(self, lz2):
        assert p_congruence(lz2, [eset(2, 0)]).class_of == (0, 0)

    def test_semilattice(self, min2):
        assert p_congruence(min2, [eset(2, 0)]).class_of == (0, 1)

    def test_degenerate_families_are_universal(self, chain3):
        n = chain3.order
        assert p_congruence(chain3, []).class_of == (0,) * n
        assert p_congruence(chain3, [ElementSet.empty(n)]).class_of == (0,) * n
        assert p_congruence(chain3, [ElementSet.full(n)]).class_of == (0,) * n

    def test_result_is_verified_congruence(self, catalog3):
        for S in catalog3[::11]:
            for A in all_subsets(S.order):
                got = p_congruence(S, [A])
                assert got.verified
                assert is_congruence(S, got) == (True, None)

    def test_congruence_even_for_non_medial_sets(self, lz2mon):
        # {1} is not medial here; the induced relation must still be
        # compatible on both sides.
        got = p_congruence(lz2mon, [eset(3, 1)])
        assert is_congruence(lz2mon, got) == (True, None)

    def test_ambient_mismatch(self, min2):
        with pytest.raises(AmbientMismatch):
            p_congruence(min2, [eset(3, 0)])

    def test_pairwise_route_agrees_on_samples(self, catalog3):
        for S in catalog3[::13]:
            for A in all_subsets(S.order):
                assert p_congruence(S, [A]) == p_congruence_pairwise(S, [A])


@settings(max_examples=60)
@given(data=st.data())
def test_enlarging_the_family_refines_the_partition(data):
    tables = [
        [[0, 0], [0, 1]],
        [[0, 1], [1, 0]],
        [[0, 1], [0, 1]],
        [[0, 1, 2], [1, 1, 1], [2, 2, 2]],
        [[0, 0, 0], [0, 1, 1], [0, 1, 2]],
        [[0, 0, 0], [0, 0, 0], [0, 0, 0]],
    ]
    S = validate(data.draw(st.sampled_from(tables)))
    n = S.order
    masks = st.integers(0, 2**n - 1)
    fam = [
        ElementSet.of(n, (e for e in range(n) if m >> e & 1))
        for m in data.draw(st.lists(masks, max_size=3))
    ]
    extra = [
        ElementSet.of(n, (e for e in range(n) if m >> e & 1))
        for m in data.draw(st.lists(masks, min_size=1, max_size=2))
    ]
    coarse = p_congruence(S, fam)
    fine = p_congruence(S, fam + extra)
    for a in range(n):
        for b in range(n):
            if fine.class_of[a] == fine.class_of[b]:
                assert coarse.class_of[a] == coarse.class_of[b]


class TestIsCongruence:
    def test_universal_always(self, z2):
        assert is_congruence(z2, universal_congruence(2)) == (True, None)

    def test_identity_always(self, lz2):
        assert is_congruence(lz2, identity_congruence(2)) == (True, None)

    def test_witness_triple(self, chain3):
        part = Congruence.from_classes(3, [{0, 2}, {1}])
        assert is_congruence(chain3, part) == (False, (0, 2, 1))

    def test_ambient_mismatch(self, z2):
        with pytest.raises(AmbientMismatch):
            is_congruence(z2, identity_congruence(3))


class TestQuotient:
    def test_identity_partition_gives_copy(self, z2):
        Q = quotient(z2, identity_congruence(2))
        assert Q.quotient.table == z2.table
        assert Q.projection == (0, 1)

    def test_universal_partition_gives_point(self, min2):
        Q = quotient(min2, universal_congruence(2))
        assert Q.quotient.order == 1

    def test_chain_collapse(self, chain3, min2):
        Q = quotient(chain3, Congruence.from_classes(3, [{0, 1}, {2}]))
        assert Q.quotient == min2
        assert Q.source_order == 3

    def test_rejects_incompatible_partition(self, chain3):
        with pytest.raises(NotACongruence):
            quotient(chain3, Congruence.from_classes(3, [{0, 2}, {1}]))

    def test_projection_is_homomorphism(self, catalog3):
        for S in catalog3[::7]:
            for c in enumerate_congruences(S):
                Q = quotient(S, c)
                pr = Q.projection
                for a in range(S.order):
                    for b in range(S.order):
                        assert pr[S.product(a, b)] == Q.quotient.product(pr[a], pr[b])


class TestClassifyQuotient:
    def test_group_quotient(self, z2):
        kind = classify_quotient(quotient(z2, identity_congruence(2)))
        assert kind == (True, True, 0)

    def test_left_zero_is_not_monoid(self, lz2):
        kind = classify_quotient(quotient(lz2, identity_congruence(2)))
        assert not kind.is_monoid and kind.identity_class is None

    def test_universal_quotient_is_trivial_monoid(self, lz2mon):
        kind = classify_quotient(quotient(lz2mon, universal_congruence(3)))
        assert kind.is_monoid and kind.is_commutative and kind.identity_class == 0


class TestEnumerateCongruences:
    def test_two_element_group(self, z2):
        assert [c.class_of for c in enumerate_congruences(z2)] == [(0, 0), (0, 1)]

    def test_chain_has_four_in_lex_order(self, chain3):
        got = [c.class_of for c in enumerate_congruences(chain3)]
        assert got == [(0, 0, 0), (0, 0, 1), (0, 1, 1), (0, 1, 2)]

    def test_one_element(self):
        assert len(enumerate_congruences(validate([[0]]))) == 1

    def test_order_bound(self):
        S = validate([[0] * 7 for _ in range(7)])
        with pytest.raises(OrderTooLarge):
            enumerate_congruences(S)
        assert enumerate_congruences(S, order_bound=7)

    def test_all_partitions_filtered(self, catalog3):
        # 5 partitions of a 3-set; each congruence must verify, each
        # non-listed partition must not.
        for S in catalog3[::17]:
            listed = {c.class_of for c in enumerate_congruences(S)}
            universe = {(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 1, 2)}
            for part in universe:
                ok, _ = is_congruence(S, Congruence(3, part))
                assert ok == (part in listed)


class TestTheorem1Forward:
    def test_group_singleton(self, z2):
        rep = verify_theorem1_forward(z2, [eset(2, 0)])
        assert rep.status == "pass"
        assert "identity class {0}" in rep.detail

    def test_identity_class_need_not_be_the_input(self, min2):
        rep = verify_theorem1_forward(min2, [eset(2, 0)])
        assert rep.status == "pass"
        assert "identity class {1}" in rep.detail

    def test_non_medial_is_unmet_with_witness(self, lz2mon):
        rep = verify_theorem1_forward(lz2mon, [eset(3, 1)])
        assert rep.status == "precondition-unmet"
        assert rep.witness == (("x", 0), ("a", 1), ("b", 2), ("y", 0))

    def test_empty_separator_intersection_is_unmet(self, lz2):
        rep = verify_theorem1_forward(lz2, [eset(2, 0)])
        assert rep.status == "precondition-unmet"
        assert "empty" in rep.detail

    def test_empty_family_passes_and_is_flagged(self, chain3):
        rep = verify_theorem1_forward(chain3, [])
        assert rep.status == "pass"
        assert "empty family" in rep.detail

    def test_holds_for_all_qualifying_singletons(self, catalog2, catalog3):
        for S in catalog2 + catalog3:
            for A in all_subsets(S.order):
                rep = verify_theorem1_forward(S, [A])
                assert rep.status in ("pass", "precondition-unmet"), rep


class TestTheorem1Converse:
    def test_group_identity_congruence(self, z2):
        assert verify_theorem1_converse(z2, identity_congruence(2)).status == "pass"

    def test_universal_is_trivially_fine(self, min2):
        assert verify_theorem1_converse(min2, universal_congruence(2)).status == "pass"

    def test_non_monoid_quotient_unmet(self, lz2):
        rep = verify_theorem1_converse(lz2, identity_congruence(2))
        assert rep.status == "precondition-unmet"
        assert "monoid" in rep.detail

    def test_non_congruence_unmet(self, chain3):
        rep = verify_theorem1_converse(chain3, Congruence.from_classes(3, [{0, 2}, {1}]))
        assert rep.status == "precondition-unmet"
        assert rep.witness == (("a", 0), ("b", 2), ("c", 1))

    def test_noncommutative_monoid_quotient_unmet(self, lz2mon):
        rep = verify_theorem1_converse(lz2mon, identity_congruence(3))
        assert rep.status == "precondition-unmet"
        assert "commutative" in rep.detail

    def test_holds_for_all_qualifying_congruences(self, catalog2, catalog3):
        for S in catalog2 + catalog3:
            for sigma in enumerate_congruences(S):
                rep = verify_theorem1_converse(S, sigma)
                assert rep.status in ("pass", "precondition-unmet"), rep


class TestCorollary1:
    def test_group(self, z2):
        rep = verify_corollary1(z2, eset(2, 0))
        assert rep.status == "pass" and "{0}" in rep.detail

    def test_semilattice(self, min2):
        assert verify_corollary1(min2, eset(2, 0)).status == "pass"

    def test_empty_separator_branch(self, lz2):
        rep = verify_corollary1(lz2, eset(2, 0))
        assert rep.status == "pass" and "empty" in rep.detail

    def test_non_medial_unmet(self, lz2mon):
        rep = verify_corollary1(lz2mon, eset(3, 1))
        assert rep.status == "precondition-unmet"
