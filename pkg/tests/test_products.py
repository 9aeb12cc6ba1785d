import pytest

from quord import (
    GroundSet,
    InputError,
    PreconditionError,
    ProductEncoding,
    Quasiorder,
    ResourceCapError,
    chain,
    diamond,
    direct_product,
    is_halfspace,
    lemma_witnesses,
    product_halfspace_predicate,
)
from quord.halfspaces import violates_halfspace_rule
from quord.oracles import all_quasiorders


def two_chain():
    return Quasiorder(GroundSet(2), chain(2).rows)


class TestEncoding:
    def test_factor_zero_most_significant(self):
        enc = ProductEncoding((2, 3))
        assert enc.strides == (3, 1)
        assert enc.index((1, 2)) == 5
        assert enc.coords(5) == (1, 2)

    def test_bijection(self):
        enc = ProductEncoding((2, 3, 2))
        seen = {enc.index(enc.coords(t)) for t in range(enc.total)}
        assert seen == set(range(12))

    def test_out_of_range(self):
        with pytest.raises(InputError):
            ProductEncoding((2,)).coords(2)


class TestDirectProduct:
    def test_chain_times_chain_is_diamond(self):
        product, enc = direct_product([two_chain(), two_chain()])
        assert product.rows == diamond().rows
        assert enc.sizes == (2, 2)

    def test_unit_factor_is_identity_reindex(self):
        q = Quasiorder(GroundSet(3), chain(3).rows)
        product, _ = direct_product([q, Quasiorder.full(1)])
        assert product.rows == q.rows

    def test_chain_times_antichain_is_two_chains(self):
        product, _ = direct_product([two_chain(), Quasiorder.identity(2)])
        want = Quasiorder.from_pairs(4, [(0, 2), (1, 3)], reflexive_implicit=True)
        assert product.rows == want.rows

    def test_size_cap(self, monkeypatch):
        monkeypatch.setenv("QUORD_MAX_N", "8")
        with pytest.raises(ResourceCapError):
            direct_product([Quasiorder.full(3), Quasiorder.full(3)])

    def test_labels_join(self):
        a = Quasiorder(GroundSet(2, ("x", "y")), chain(2).rows)
        b = Quasiorder(GroundSet(2, ("u", "v")), chain(2).rows)
        product, _ = direct_product([a, b])
        assert product.ground.labels == ("x*u", "x*v", "y*u", "y*v")


class TestStructuralPredicate:
    def test_two_chains_true(self):
        verdict, _ = product_halfspace_predicate([two_chain(), two_chain()])
        assert verdict

    def test_chain2_chain3_false(self):
        verdict, _ = product_halfspace_predicate(
            [two_chain(), Quasiorder(GroundSet(3), chain(3).rows)]
        )
        assert not verdict

    def test_three_chains_false(self):
        verdict, _ = product_halfspace_predicate([two_chain()] * 3)
        assert not verdict

    def test_trivial_factor_needs_flag(self):
        with pytest.raises(PreconditionError):
            product_halfspace_predicate([two_chain(), Quasiorder.identity(2)])

    def test_identity_factor_disconnects(self):
        verdict, reason = product_halfspace_predicate(
            [two_chain(), Quasiorder.identity(2)], treat_trivial=True
        )
        assert not verdict and "disconnect" in reason

    def test_all_identities_is_identity(self):
        verdict, _ = product_halfspace_predicate(
            [Quasiorder.identity(2), Quasiorder.identity(3)], treat_trivial=True
        )
        assert verdict

    def test_full_inflation_of_chain_is_halfspace(self):
        verdict, _ = product_halfspace_predicate(
            [two_chain(), Quasiorder.full(3)], treat_trivial=True
        )
        assert verdict

    def test_full_inflation_of_diamond_is_not(self):
        # the correction to the discard-full-factors heuristic
        factors = [two_chain(), two_chain(), Quasiorder.full(2)]
        verdict, _ = product_halfspace_predicate(factors, treat_trivial=True)
        assert not verdict
        product, _ = direct_product(factors)
        assert not is_halfspace(product)

    def test_identity_times_full_false(self):
        factors = [Quasiorder.identity(2), Quasiorder.full(2)]
        verdict, _ = product_halfspace_predicate(factors, treat_trivial=True)
        assert not verdict
        product, _ = direct_product(factors)
        assert not is_halfspace(product)

    def test_agreement_sample(self):
        pool = [q for n in (2, 3) for q in all_quasiorders(n)]
        for a in pool[::5]:
            for b in pool[::7]:
                verdict, _ = product_halfspace_predicate([a, b], treat_trivial=True)
                product, _ = direct_product([a, b])
                assert verdict == is_halfspace(product), (a, b)


class TestLemmaWitnesses:
    def test_pattern_plus_partner_refutes(self):
        pattern_factor = Quasiorder.from_pairs(3, [(0, 1)], reflexive_implicit=True)
        diag = lemma_witnesses([pattern_factor, two_chain()])
        assert diag.refuting_indices == (0, 1)
        x, y, z = diag.refuting_triple
        product, _ = direct_product([pattern_factor, two_chain()])
        assert violates_halfspace_rule(product, x, y, z)
        assert not is_halfspace(product)

    def test_two_box_shape(self):
        lower_upper = Quasiorder.from_pairs(
            3, [(0, 1), (1, 0), (0, 2), (1, 2)], reflexive_implicit=True
        )
        diag = lemma_witnesses([lower_upper])
        shape = diag.shapes[0]
        assert shape.kind == "lower_upper"
        assert shape.lower == (0, 1) and shape.upper == (2,)

    def test_identity_classified_trivial(self):
        diag = lemma_witnesses([Quasiorder.identity(3)])
        assert diag.shapes[0].kind == "identity"
        assert diag.refuting_triple is None

    def test_pair_pattern_for_two_chains(self):
        diag = lemma_witnesses([two_chain(), two_chain()])
        assert diag.pair_pattern_triple is not None
        a, b, c = diag.pair_pattern_triple
        product, _ = direct_product([two_chain(), two_chain()])
        assert a != c and product.has(a, c) and not product.has(a, b)
