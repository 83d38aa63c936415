"""
Specker Testleri
================
Desen aileleri, occurrence sayimi, kosul (*), φ matrisi ve tanik.
"""

from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, reject, settings
from hypothesis import strategies as st

from src.ordinals.cardinals import OMEGA
from src.ordinals.ordinal import Ordinal, ZERO
from src.specker.families import (
    BitPattern, Canonical, FinitePattern, build_M_g, build_M_kappa,
)
from src.specker.homomorphisms import (
    SpeckerHom, almost_disjoint, hom_matrix, matrix_columns, phi_additivity,
    phi_alpha, phi_inverse_law, specker_witness, star_check,
)
from src.specker.occurrences import class_count, occurrences, phi_eval
from src.types import Sign
from src.words.cuts import tail_at
from src.words.terms import EMPTY, GDescription, GenSeq, Inv, RepeatLiteral, concat
from src.utils.exceptions import (
    EmptyPattern, NotRegularUncountable, NotUncountable, StarConditionViolated,
    UnsupportedCancellation, UnsupportedFragment,
)
from tests.strategies import (
    K1, bit_families, kappa_words, mixed_words, ordinals, pattern_families, small_positions,
)

CANONICAL_K1 = Canonical(K1)
W = Ordinal.omega_power(1)


def bits(*positions) -> GDescription:
    return GDescription.from_map({Ordinal.coerce(p): 1 for p in positions})


# ═══════════════════════════════════════════════════════════════════════════════
# AILELER
# ═══════════════════════════════════════════════════════════════════════════════

class TestFamilies:
    """Aile kurucularinin hata durumlari."""

    def test_m_kappa_needs_uncountable(self):
        with pytest.raises(NotRegularUncountable):
            build_M_kappa(OMEGA)

    def test_m_kappa_needs_regular(self, registry):
        singular = registry.declare("mu", 7, regular=False)
        with pytest.raises(NotRegularUncountable):
            Canonical(singular)

    def test_m_g_needs_uncountable(self):
        with pytest.raises(NotUncountable):
            build_M_g(bits(), OMEGA)

    def test_empty_finite_pattern(self):
        with pytest.raises(EmptyPattern):
            FinitePattern(())

    def test_literal_variant(self, lam):
        assert isinstance(BitPattern(bits(), lam, chunked=False).word(), RepeatLiteral)

    def test_str(self, k1, lam):
        assert str(Canonical(k1)) == "Mk(k1)"
        assert str(BitPattern(bits(OMEGA), lam)) == "Mg({w:1}, L)"

    def test_bit_lookup_per_copy(self, lam):
        """Her kopya ayni bitleri tasir."""
        family = BitPattern(bits(OMEGA), lam)
        assert family.bit(W) == 1
        assert family.bit(Ordinal.atom(lam, 3) + W) == 1
        assert family.bit(Ordinal.nat(4)) == 0


# ═══════════════════════════════════════════════════════════════════════════════
# OCCURRENCE SAYIMI
# ═══════════════════════════════════════════════════════════════════════════════

class TestClassCount:
    """class_count ve phi_eval testleri."""

    def test_m_kappa(self, m_kappa):
        """φ(M_κ) = 1."""
        report = class_count(m_kappa, CANONICAL_K1)
        assert (report.plus_classes, report.minus_classes, report.phi) == (1, 0, 1)
        assert report.to_lines() == [
            "plus=1 minus=0 phi=1",
            "occurrence sign=+ start=0@0 end=0@k1 tail=0",
        ]

    def test_inverse(self, m_kappa):
        """φ(M_κ⁻¹) = -1."""
        report = class_count(Inv(m_kappa), CANONICAL_K1)
        assert (report.plus_classes, report.minus_classes) == (0, 1)
        assert report.representatives[0].sign is Sign.MINUS

    def test_empty(self):
        assert phi_eval(EMPTY, CANONICAL_K1) == 0

    def test_two_classes(self, m_kappa, g):
        """M_κ·g[0]·M_κ: g[0] harfi ikinci kopyanin basina carpilir, iki sinif kalir."""
        assert class_count(concat(m_kappa, g(0), m_kappa), CANONICAL_K1).plus_classes == 2

    def test_tail_counts_once(self, m_kappa):
        assert phi_eval(tail_at(m_kappa, Ordinal.nat(4)), CANONICAL_K1) == 1

    def test_other_cardinal(self, m_kappa, lam):
        """M_κ₁ icinde M_L kuyrugu yok."""
        assert phi_eval(m_kappa, Canonical(lam)) == 0

    def test_cancelled_word(self, m_kappa):
        assert phi_eval(m_kappa * Inv(m_kappa), CANONICAL_K1) == 0

    def test_bit_pattern(self, m_g, lam):
        family = BitPattern(bits(OMEGA), lam)
        assert phi_eval(m_g, family) == 1
        assert phi_eval(Inv(m_g), family) == -1

    def test_bit_pattern_other_description(self, m_g, lam):
        assert phi_eval(m_g, BitPattern(bits(Ordinal.nat(3)), lam)) == 0

    def test_finite_pattern(self, g):
        """g[0]·g[1]·g[2] icinde g[1]·g[2] tek sinif."""
        family = FinitePattern((g(1).letter, g(2).letter))
        found = occurrences(concat(g(0), g(1), g(2)), family)
        assert len(found) == 1
        assert found[0].matched_tail == 0

    def test_run_before_limit_joins_tail(self):
        """[0,ω) bitleri 1 ve [ω,κ) bitleri 0: M_{κ,2} olarak tek occurrence."""
        word = GenSeq.of(ZERO, W, GDescription(1)) * GenSeq.of(W, Ordinal.atom(K1))
        found = occurrences(word, CANONICAL_K1)
        assert len(found) == 1
        assert found[0].matched_tail == 2

    def test_to_dict(self, m_kappa):
        data = class_count(m_kappa, CANONICAL_K1).to_dict()
        assert data["phi"] == 1
        assert data["representatives"][0]["end"] == "0@k1"


class TestHomomorphismLaws:
    """φ bir homomorfizma (hypothesis)."""

    @given(kappa_words(), kappa_words())
    @settings(max_examples=50, deadline=None)
    def test_additivity(self, x, y):
        """φ(XY) = φ(X) + φ(Y)."""
        both, left, right = phi_additivity(x, y, CANONICAL_K1)
        assert both == left + right

    @given(kappa_words())
    @settings(max_examples=50, deadline=None)
    def test_inverse_law(self, x):
        """φ(X⁻¹) = -φ(X)."""
        inverse, value = phi_inverse_law(x, CANONICAL_K1)
        assert inverse == -value

    @given(mixed_words(), mixed_words(), pattern_families)
    @settings(max_examples=200, deadline=None)
    def test_additivity_mixed(self, x, y, family):
        """Varsayilan biti 1 olan diziler ve ters tekrarlarla φ(XY) = φ(X) + φ(Y)."""
        try:
            both, left, right = phi_additivity(x, y, family)
        except (UnsupportedCancellation, UnsupportedFragment):
            reject()
        assert both == left + right

    @given(mixed_words(), pattern_families)
    @settings(max_examples=200, deadline=None)
    def test_inverse_law_mixed(self, x, family):
        try:
            inverse, value = phi_inverse_law(x, family)
        except (UnsupportedCancellation, UnsupportedFragment):
            reject()
        assert inverse == -value

    def test_additivity_with_partial_cancellation(self, m_kappa):
        """M_{κ,2}·M_{κ,3}⁻¹ = g[2]."""
        x = tail_at(m_kappa, Ordinal.nat(2))
        y = Inv(tail_at(m_kappa, Ordinal.nat(3)))
        assert phi_additivity(x, y, CANONICAL_K1) == (0, 1, -1)


# ═══════════════════════════════════════════════════════════════════════════════
# KOSUL (*) VE MATRIS
# ═══════════════════════════════════════════════════════════════════════════════

class TestStarCondition:
    """star_check, almost_disjoint ve SpeckerHom testleri."""

    def test_same_family(self, k1):
        assert not star_check(Canonical(k1), Canonical(k1))

    def test_different_families(self, k1, lam):
        assert star_check(Canonical(k1), Canonical(lam))
        assert star_check(BitPattern(bits(), lam), BitPattern(bits(OMEGA), lam))

    def test_same_description_after_trim(self, lam):
        """λ disindaki flip'ler ailenin parcasi degil."""
        assert not star_check(BitPattern(bits(Ordinal.atom(lam)), lam), BitPattern(bits(), lam))

    def test_almost_disjoint(self):
        assert almost_disjoint({1, 2}, {2, 3})
        assert not almost_disjoint({1, 2}, {1, 2, 3})

    def test_hom_rejects_violation(self, k1):
        with pytest.raises(StarConditionViolated):
            SpeckerHom((Canonical(k1), Canonical(k1)))

    def test_phi_alpha(self, m_kappa, k1, lam):
        hom = SpeckerHom((Canonical(k1), Canonical(lam)))
        assert len(hom) == 2
        assert phi_alpha(hom, m_kappa) == 1
        assert hom(Inv(m_kappa)) == -1

    @given(bit_families, bit_families)
    @settings(max_examples=100, deadline=None)
    def test_phi_follows_star(self, a, b):
        """φ_b(M_a) = 1 <=> (*) a, b icin bozulur."""
        assert phi_eval(a.word(), b) == (0 if star_check(a, b) else 1)
        assert not star_check(a, a)


WIDE_FLIPS = ((), (0,), (1,), (2,), (OMEGA,), (0, 1), (1, OMEGA), (W.times_nat(2),))


class TestHomMatrix:
    """hom_matrix testleri."""

    def families(self, lam):
        return [BitPattern(bits(*flips), lam) for flips in ((), (0,), (1,), (OMEGA,))]

    def test_identity_eight_families(self, lam):
        families = [BitPattern(bits(*flips), lam) for flips in WIDE_FLIPS]
        homs = [SpeckerHom((family,)) for family in families]
        np.testing.assert_array_equal(hom_matrix(homs), np.eye(8, dtype=np.int64))

    def test_almost_disjoint_rows_differ(self, lam):
        """Ust uste binen uclu pencereler: 10 cift, her cift farkli satir verir."""
        families = [BitPattern(bits(*flips), lam) for flips in WIDE_FLIPS]
        windows = [tuple(families[i:i + 3]) for i in range(6)]
        pairs = list(combinations(windows, 2))[:10]
        for a, b in pairs:
            assert almost_disjoint(a, b)
            rows = hom_matrix([SpeckerHom(a), SpeckerHom(b)], columns=families)
            assert not np.array_equal(rows[0], rows[1])

    def test_singletons_give_identity(self, lam):
        homs = [SpeckerHom((family,)) for family in self.families(lam)]
        matrix = hom_matrix(homs)
        assert matrix.dtype == np.int64
        np.testing.assert_array_equal(matrix, np.eye(4, dtype=np.int64))

    def test_parallel_matches_serial(self, lam):
        homs = [SpeckerHom((family,)) for family in self.families(lam)]
        np.testing.assert_array_equal(hom_matrix(homs, workers=3), hom_matrix(homs, workers=1))

    def test_row_sums_family_columns(self, lam):
        families = self.families(lam)
        homs = [SpeckerHom(tuple(families[:2])), SpeckerHom((families[3],))]
        assert matrix_columns(homs) == [families[0], families[1], families[3]]
        np.testing.assert_array_equal(hom_matrix(homs), np.array([[1, 1, 0], [0, 0, 1]]))


# ═══════════════════════════════════════════════════════════════════════════════
# SPECKER TANIGI
# ═══════════════════════════════════════════════════════════════════════════════

class TestWitness:
    """specker_witness testleri."""

    def test_finite_coordinates(self, k1):
        report = specker_witness([0, 1, 2], k1)
        assert report.ok
        assert report.to_lines() == ["beta=3 restriction=eps phi=1"]

    def test_empty_set(self, k1):
        report = specker_witness([], k1)
        assert report.beta == ZERO
        assert report.ok

    def test_infinite_coordinate(self, k1):
        report = specker_witness([Ordinal.omega_power(1)], k1)
        assert str(report.beta) == "w+1"
        assert report.ok

    def test_coordinates_above_kappa_ignored(self, k1, lam):
        report = specker_witness([Ordinal.atom(lam), 4], k1)
        assert report.beta == 5
        assert report.to_dict()["ok"] is True

    @given(st.lists(st.one_of(small_positions, ordinals()), max_size=8))
    @settings(max_examples=50, deadline=None)
    def test_sampled_coordinates(self, F):
        assert specker_witness(F, K1).ok
