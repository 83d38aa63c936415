"""
Ordinal ve Sira Testleri
========================
Cantor normal formu, kardinal kayit defteri, sira terimleri ve kofinalite.
"""

import pytest
from hypothesis import given, settings

from src.ordinals.cardinals import CardinalRegistry, OMEGA, OMEGA_ONE
from src.ordinals.ordinal import Ordinal, ZERO, ONE, OMEGA as W, ord_add, ord_cmp, ord_succ
from src.ordinals.order import (
    FiniteOrder, Interval, Sum, RepeatOmegaOne, Reverse, order_iso, cofinality,
)
from src.types import Comparison
from src.utils.exceptions import (
    DuplicateAtom, EmptyOrder, RankConflict, UndeclaredAtom, UnsupportedFragment,
)
from tests.strategies import countable_ordinals, order_terms, ordinals


def w_times(k: int) -> Ordinal:
    return Ordinal.omega_power(1, k)


# ═══════════════════════════════════════════════════════════════════════════════
# KARDINALLER
# ═══════════════════════════════════════════════════════════════════════════════

class TestCardinalRegistry:
    """CardinalRegistry testleri."""

    def test_predeclared_atoms(self, registry):
        """w1, k1, L rank sirasinda."""
        names = [atom.name for atom in registry]
        assert names == ["w1", "k1", "L"]
        assert registry.get("k1").is_regular_uncountable

    def test_omega_is_countable(self, registry):
        """`w` sayilabilir ω."""
        assert registry.get("w") is OMEGA
        assert not OMEGA.uncountable

    def test_undeclared_atom(self, registry):
        """Tanimsiz atom reddedilir."""
        with pytest.raises(UndeclaredAtom):
            registry.get("k7")

    def test_declare_spec_with_rank(self, registry):
        """name:rank bicimi."""
        atom = registry.declare_spec("k2:5")
        assert atom.rank == 5
        assert registry.get("k2") is atom

    def test_duplicate_and_rank_conflict(self, registry):
        """Ayni isim veya ayni rank ikinci kez tanimlanamaz."""
        with pytest.raises(DuplicateAtom):
            registry.declare_spec("k1")
        with pytest.raises(RankConflict):
            registry.declare_spec("k9:2")


# ═══════════════════════════════════════════════════════════════════════════════
# CANTOR NORMAL FORMU
# ═══════════════════════════════════════════════════════════════════════════════

class TestOrdinalCompare:
    """ord_cmp testleri."""

    def test_countable_comparison(self):
        """ω·2+3 < ω·3."""
        assert ord_cmp(w_times(2) + 3, w_times(3)) is Comparison.LESS

    def test_atom_exceeds_countable(self, k1):
        """κ₁ > ω^5."""
        assert ord_cmp(Ordinal.atom(k1), Ordinal.omega_power(5)) is Comparison.GREATER

    def test_zero_equal(self):
        assert ord_cmp(ZERO, ZERO) is Comparison.EQUAL

    def test_atoms_ordered_by_rank(self, k1, lam):
        """k1 < L."""
        assert Ordinal.atom(k1) < Ordinal.atom(lam)
        assert Ordinal.atom(OMEGA_ONE) < Ordinal.atom(k1)

    def test_int_equality(self):
        """Dogal sayilarla karsilastirma."""
        assert Ordinal.nat(3) == 3
        assert ZERO == 0
        assert W != 3


class TestOrdinalArithmetic:
    """ord_add, ord_succ ve yardimci islemler."""

    def test_left_absorption(self):
        """1 + ω = ω."""
        assert ord_add(ONE, W) == W

    def test_right_successor(self):
        """ω + 1 = ω+1."""
        assert str(ord_add(W, ONE)) == "w+1"

    def test_cnf_addition(self):
        """(ω·2+3) + ω = ω·3."""
        assert ord_add(w_times(2) + 3, W) == w_times(3)

    def test_succ(self):
        assert ord_succ(ZERO) == 1
        assert str(ord_succ(W)) == "w+1"
        assert ord_succ(w_times(2) + 3) == w_times(2) + 4

    def test_pred_of_limit(self):
        """Limit ordinalin onculu yok."""
        with pytest.raises(UnsupportedFragment):
            W.pred()

    def test_minus_left(self):
        """ω + (ω·2) = ω·3 oldugundan −ω + ω·3 = ω·2."""
        assert W.minus_left(w_times(3)) == w_times(2)
        assert Ordinal.nat(3).minus_left(W) == W

    def test_divmod_atom(self, lam):
        """L·2 + ω = L·2 + ω."""
        value = Ordinal.atom(lam, 2) + W
        assert value.divmod_atom(lam) == (2, W)

    def test_times_nat(self):
        assert (W + 1).times_nat(3) == w_times(3) + 1

    def test_str_forms(self, k1):
        assert str(Ordinal.omega_power(2, 3) + w_times(2) + 4) == "w^2*3+w*2+4"
        assert str(Ordinal.atom(k1) + 1) == "k1+1"
        assert str(ZERO) == "0"

    def test_limit_and_successor(self):
        assert W.is_limit and not W.is_successor
        assert (W + 2).is_successor

    def test_negative_rejected(self):
        with pytest.raises(UnsupportedFragment):
            Ordinal.nat(-1)


class TestOrdinalLaws:
    """Cebirsel ozellikler (hypothesis)."""

    @given(countable_ordinals(), countable_ordinals(), countable_ordinals())
    def test_addition_associative(self, a, b, c):
        """(a+b)+c = a+(b+c)."""
        assert (a + b) + c == a + (b + c)

    @given(countable_ordinals(), countable_ordinals())
    def test_addition_monotone_right(self, a, b):
        """a <= a + b."""
        assert a <= a + b

    @given(countable_ordinals())
    def test_succ_pred(self, a):
        assert a.succ().pred() == a

    @given(countable_ordinals(), countable_ordinals())
    def test_minus_left_inverts_addition(self, a, b):
        """a + (−a + (a+b)) = a+b."""
        total = a + b
        assert a + a.minus_left(total) == total

    @given(countable_ordinals(), countable_ordinals())
    def test_compare_total(self, a, b):
        assert (a < b) + (a == b) + (b < a) == 1

    @given(ordinals(), ordinals())
    @settings(max_examples=1000, deadline=None)
    def test_cmp_antisymmetric(self, a, b):
        """Atom onekli ordinallerde ord_cmp tam ve ters simetrik."""
        mirror = {
            Comparison.LESS: Comparison.GREATER,
            Comparison.EQUAL: Comparison.EQUAL,
            Comparison.GREATER: Comparison.LESS,
        }
        forward = ord_cmp(a, b)
        assert ord_cmp(b, a) is mirror[forward]
        assert (forward is Comparison.EQUAL) == (a == b)


# ═══════════════════════════════════════════════════════════════════════════════
# SIRA TERIMLERI
# ═══════════════════════════════════════════════════════════════════════════════

class TestOrderIso:
    """order_iso testleri."""

    def test_omega_end_segment(self):
        """[0,ω) ≅ [5,ω)."""
        assert order_iso(Interval(W), Interval(W, Ordinal.nat(5)))

    def test_regular_end_segment(self, k1):
        """[β,κ) ≅ [0,κ)."""
        kappa = Ordinal.atom(k1)
        assert order_iso(Interval(kappa, w_times(2) + 7), Interval(kappa))

    def test_maximum_differs(self):
        """[0,ω) ≇ [0,ω+1)."""
        assert not order_iso(Interval(W), Interval(W + 1))

    def test_sum_absorbs_finite_prefix(self):
        """3 + ω ≅ ω."""
        assert order_iso(Sum(FiniteOrder(3), Interval(W)), Interval(W))

    def test_reverse_involution(self):
        assert order_iso(Reverse.of(Reverse.of(Interval(W))), Interval(W))

    def test_empty_interval_rejected(self):
        with pytest.raises(EmptyOrder):
            Interval(W, W)

    @given(order_terms, order_terms, order_terms)
    @settings(max_examples=200, deadline=None)
    def test_equivalence_relation(self, a, b, c):
        assert order_iso(a, a)
        assert order_iso(a, b) == order_iso(b, a)
        if order_iso(a, b) and order_iso(b, c):
            assert order_iso(a, c)

    @given(order_terms, order_terms)
    @settings(max_examples=200, deadline=None)
    def test_double_reverse_congruent(self, a, c):
        """O** ≅ O, toplamin iki yaninda da."""
        twice = Reverse(Reverse(a))
        padded = Sum(FiniteOrder(0), a)
        assert order_iso(twice, a) and order_iso(a, padded)
        assert order_iso(twice, padded)
        assert order_iso(Sum(twice, c), Sum(a, c))
        assert order_iso(Sum(c, twice), Sum(c, a))


class TestCofinality:
    """cofinality testleri."""

    def test_omega(self):
        assert cofinality(Interval(W)) == W

    def test_regular_atom(self, k1):
        """cof([β,κ₁)) = κ₁."""
        kappa = Ordinal.atom(k1)
        assert cofinality(Interval(kappa, Ordinal.nat(4))) == kappa

    def test_finite_order(self):
        assert cofinality(FiniteOrder(3)) == ONE

    def test_repeat_omega_one(self, lam):
        """ω₁ tekrari: kofinalite ω₁."""
        assert cofinality(RepeatOmegaOne(Interval(Ordinal.atom(lam)))) == Ordinal.atom(OMEGA_ONE)

    def test_sum_uses_right_part(self, k1):
        kappa = Ordinal.atom(k1)
        assert cofinality(Sum(Interval(kappa), FiniteOrder(2))) == ONE

    def test_empty(self):
        with pytest.raises(EmptyOrder):
            cofinality(FiniteOrder(0))


def test_unused_registry_is_isolated():
    """Her default() yeni bir kayit verir."""
    first = CardinalRegistry.default()
    first.declare_spec("k5:9")
    assert "k5" not in CardinalRegistry.default()
