import pytest
from hypothesis import given

from _strategies import halfspaces
from quord import (
    BoxDecomposition,
    GroundSet,
    HalfSpace,
    InputError,
    KernelPresentation,
    LinearOrder,
    PreconditionError,
    Quasiorder,
    Relation,
    ValidationError,
    box_decomposition,
    chain,
    chain_order,
    check_complementary_pair,
    complement_halfspace,
    diamond,
    halfspace_realizer_from_linear_realizer,
    halfspace_witness,
    induced_order,
    is_box,
    is_halfspace,
    reconstruct_from_boxes,
    standard_construction,
)
from quord.halfspaces import (
    halfspace_by_complement,
    halfspace_by_restrictions,
    halfspace_by_reverse_rule,
)
from quord.oracles import all_quasiorders


def as_halfspace(p) -> HalfSpace:
    return HalfSpace(p.ground, p.rows)


class TestPredicate:
    def test_diamond_is_halfspace(self):
        assert is_halfspace(diamond())

    def test_identity_and_full(self):
        for n in range(5):
            assert is_halfspace(Quasiorder.identity(n))
            assert is_halfspace(Quasiorder.full(n))

    def test_isolated_point_witness(self):
        q = Quasiorder.from_pairs(3, [(0, 1)], reflexive_implicit=True)
        assert halfspace_witness(q) == (0, 2, 1)

    def test_criteria_agree_small(self):
        for n in range(4):
            for q in all_quasiorders(n):
                verdicts = {
                    halfspace_by_complement(q),
                    halfspace_by_restrictions(q),
                    is_halfspace(q),
                    halfspace_by_reverse_rule(q),
                }
                assert len(verdicts) == 1

    def test_count_on_three_elements(self):
        assert sum(1 for q in all_quasiorders(3) if is_halfspace(q)) == 20


class TestComplement:
    def test_linear_complement_is_inverse(self):
        lam = chain(3)
        assert complement_halfspace(as_halfspace(lam)) == lam.inverse()

    def test_identity_complement_is_full(self):
        assert complement_halfspace(HalfSpace.identity(3)) == Relation.full(3)

    def test_diamond_complement(self):
        got = complement_halfspace(as_halfspace(diamond()))
        want = Quasiorder.from_pairs(
            4,
            [(1, 2), (2, 1), (3, 1), (3, 2), (3, 0), (1, 0), (2, 0)],
            reflexive_implicit=True,
        )
        assert got == Relation(got.ground, want.rows)

    @given(halfspaces())
    def test_complement_is_complementary(self, h):
        assert check_complementary_pair(h, complement_halfspace(h))

    @given(halfspaces())
    def test_inverse_and_restriction_stay_halfspaces(self, h):
        assert is_halfspace(h.inverse())
        assert is_halfspace(h.restrict_to(range(0, h.ground.size, 2)))

    @given(halfspaces())
    def test_quotient_stays_halfspace(self, h):
        qm = induced_order(h)
        assert is_halfspace(qm.induced)


class TestComplementaryPair:
    def test_identity_full(self):
        assert check_complementary_pair(Quasiorder.identity(2), Quasiorder.full(2))

    def test_linear_and_inverse(self):
        lam = chain(4)
        assert check_complementary_pair(lam, lam.inverse())

    def test_union_gap(self):
        q = Quasiorder.from_pairs(2, [(0, 1)], reflexive_implicit=True)
        assert not check_complementary_pair(q, q)

    def test_ground_mismatch(self):
        with pytest.raises(InputError):
            check_complementary_pair(Quasiorder.identity(2), Quasiorder.identity(3))


class TestBoxes:
    def test_chain_boxes_are_singletons(self):
        d = box_decomposition(as_halfspace(chain(3)))
        assert d.boxes == ((0,), (1,), (2,)) and d.full == (False, False, False)

    def test_full_is_one_full_box(self):
        d = box_decomposition(HalfSpace.full(3))
        assert d.boxes == ((0, 1, 2),) and d.full == (True,)

    def test_diamond_boxes(self):
        d = box_decomposition(as_halfspace(diamond()))
        assert d.boxes == ((0,), (1, 2), (3,))
        assert d.full == (False, False, False)

    def test_reconstruct_examples(self):
        ground = GroundSet(3)
        lin = reconstruct_from_boxes(
            BoxDecomposition(ground, ((0,), (1,), (2,)), (False, False, False))
        )
        assert lin == chain(3)
        full2 = reconstruct_from_boxes(BoxDecomposition(GroundSet(2), ((0, 1),), (True,)))
        assert full2 == Relation.full(2)
        dia = reconstruct_from_boxes(
            BoxDecomposition(GroundSet(4), ((0,), (1, 2), (3,)), (False, False, False))
        )
        assert dia == Relation(GroundSet(4), diamond().rows)

    def test_singleton_cannot_be_full(self):
        with pytest.raises(ValidationError) as err:
            BoxDecomposition(GroundSet(2), ((0,), (1,)), (True, False))
        assert err.value.axiom == "singleton-box-empty"

    def test_boxes_must_cover(self):
        with pytest.raises(ValidationError):
            BoxDecomposition(GroundSet(2), ((0,),), (False,))

    @given(halfspaces())
    def test_roundtrip(self, h):
        assert reconstruct_from_boxes(box_decomposition(h)) == h

    @given(halfspaces())
    def test_complement_reverses_boxes_and_flips_flags(self, h):
        d = box_decomposition(h)
        db = box_decomposition(complement_halfspace(h))
        assert db.boxes == tuple(reversed(d.boxes))
        for box, flag in zip(db.boxes, db.full):
            original = d.full[d.boxes.index(box)]
            assert flag == (len(box) > 1 and not original)


class TestIsBox:
    def test_diamond_middle(self):
        assert is_box(as_halfspace(diamond()), {1, 2})

    def test_diamond_half_of_middle_not_maximal(self):
        assert not is_box(as_halfspace(diamond()), {1})

    def test_every_decomposition_box(self):
        h = HalfSpace.full(3)
        for box in box_decomposition(h).boxes:
            assert is_box(h, box)

    def test_empty_set_rejected(self):
        with pytest.raises(InputError):
            is_box(HalfSpace.identity(2), ())


class TestStandardConstruction:
    def test_full_box_below_point(self):
        k = KernelPresentation(
            ground=GroundSet(3),
            assignment=(0, 0, 1),
            codomain_size=2,
            marked=frozenset({0}),
            order=chain_order(2),
        )
        got = standard_construction(k)
        want = Quasiorder.from_pairs(
            3, [(0, 1), (1, 0), (0, 2), (1, 2)], reflexive_implicit=True
        )
        assert got == Relation(got.ground, want.rows)

    def test_unmarked_injective_pullback_is_linear(self):
        k = KernelPresentation(
            ground=GroundSet(3),
            assignment=(2, 0, 1),
            codomain_size=3,
            marked=frozenset(),
            order=chain_order(3),
        )
        got = standard_construction(k)
        assert LinearOrder(got.ground, got.rows).sequence() == (1, 2, 0)

    def test_all_marked_constant_gives_full(self):
        k = KernelPresentation(
            ground=GroundSet(3),
            assignment=(0, 0, 0),
            codomain_size=1,
            marked=frozenset({0}),
            order=chain_order(1),
        )
        assert standard_construction(k) == Relation.full(3)

    def test_gamma_containment_enforced(self):
        k = KernelPresentation(
            ground=GroundSet(2),
            assignment=(0, 1),
            codomain_size=2,
            marked=frozenset(),
            order=chain_order(2),
        )
        gamma = Quasiorder.from_pairs(2, [(1, 0)], reflexive_implicit=True)
        with pytest.raises(PreconditionError):
            standard_construction(k, gamma)


class TestRealizerFromLinear:
    def test_linear_order_lifts_to_itself(self):
        lam = chain(3)
        parts = halfspace_realizer_from_linear_realizer(lam, [chain_order(3)])
        assert parts == (as_halfspace(lam),)

    def test_identity_from_opposite_chains(self):
        q = Quasiorder.identity(2)
        parts = halfspace_realizer_from_linear_realizer(
            q, [chain_order(2), chain_order(GroundSet(2), (1, 0))]
        )
        meet = parts[0].intersection(parts[1])
        assert meet == Relation.identity(2)

    def test_diamond_two_extensions(self):
        d = diamond()
        parts = halfspace_realizer_from_linear_realizer(
            d, [chain_order(4, ), chain_order(GroundSet(4), (0, 2, 1, 3))]
        )
        assert parts[0].intersection(parts[1]) == Relation(d.ground, d.rows)

    def test_non_extension_rejected(self):
        with pytest.raises(PreconditionError):
            halfspace_realizer_from_linear_realizer(
                chain(2), [chain_order(GroundSet(2), (1, 0))]
            )

    def test_insufficient_family_rejected(self):
        with pytest.raises(PreconditionError):
            halfspace_realizer_from_linear_realizer(diamond(), [chain_order(4)])


class TestDistributivity:
    def test_complementary_pairs_distribute_n2(self):
        from quord import quord_join

        quords = all_quasiorders(2)
        for h in (q for q in quords if is_halfspace(q)):
            beta = complement_halfspace(as_halfspace(h))
            for g in quords:
                lhs = quord_join(
                    Quasiorder(g.ground, h.intersection(g).rows),
                    Quasiorder(g.ground, beta.intersection(g).rows),
                )
                assert lhs == Relation(g.ground, g.rows)
