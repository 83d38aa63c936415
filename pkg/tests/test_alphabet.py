"""Grup ve harf testleri."""

import pytest
from hypothesis import given

from src.alphabet.groups import GroupSpec, free_reduce
from src.alphabet.letters import Alphabet, Letter, Region, letter_inv, letter_mul, make_letter
from src.ordinals.ordinal import Ordinal, OMEGA
from src.types import GroupKind
from src.utils.exceptions import (
    CoordinateMismatch, GroupMismatch, IdentityLetter, InvalidElement, InvalidGroupSpec,
)
from tests.strategies import cyclic_letters


# ============================================================
# Gruplar
# ============================================================

class TestGroupSpec:
    """GroupSpec testleri."""

    def test_parse_forms(self):
        """integers, cyclic:n, free:k."""
        assert GroupSpec.parse("integers").kind is GroupKind.INTEGERS
        assert GroupSpec.parse("cyclic:4") == GroupSpec.cyclic(4)
        assert str(GroupSpec.parse("free:2")) == "free:2"

    @pytest.mark.parametrize("text", ["cyclic:1", "cyclic:x", "free:0", "matrix", "integers:3"])
    def test_parse_invalid(self, text):
        with pytest.raises(InvalidGroupSpec):
            GroupSpec.parse(text)

    def test_cyclic_arithmetic(self, cyclic4):
        """3 + 2 = 1 (mod 4), -1 = 3."""
        assert cyclic4.mul(3, 2) == 1
        assert cyclic4.inv(1) == 3

    def test_free_reduce(self):
        assert free_reduce([1, 2, -2, -1, 2]) == (2,)

    def test_free_inverse(self):
        group = GroupSpec.free(2)
        element = group.parse_element("aB")
        assert element == (1, -2)
        assert group.inv(element) == (2, -1)
        assert group.mul(element, group.inv(element)) == ()
        assert group.format_element(group.inv(element)) == "bA"

    def test_element_checks(self, cyclic4):
        """Aralik disi eleman reddedilir."""
        with pytest.raises(InvalidElement):
            cyclic4.check(4)
        with pytest.raises(InvalidElement):
            GroupSpec.free(1).parse_element("b")
        with pytest.raises(InvalidElement):
            GroupSpec.integers().parse_element("x")

    def test_cyclic_literal_reduced(self, cyclic4):
        assert cyclic4.parse_element("-1") == 3


# ============================================================
# Harfler
# ============================================================

class TestLetters:
    """Letter, letter_mul ve letter_inv testleri."""

    def test_identity_letter_rejected(self, cyclic4):
        with pytest.raises(IdentityLetter):
            Letter(Ordinal.nat(0), 0, cyclic4)
        assert make_letter(Ordinal.nat(0), 0, cyclic4) is None

    def test_mul_same_coordinate(self, cyclic4):
        """elem(0,1)·elem(0,2) = elem(0,3)."""
        a = Letter(Ordinal.nat(0), 1, cyclic4)
        b = Letter(Ordinal.nat(0), 2, cyclic4)
        assert letter_mul(a, b) == Letter(Ordinal.nat(0), 3, cyclic4)

    def test_mul_to_identity(self, cyclic4):
        a = Letter(Ordinal.nat(0), 1, cyclic4)
        assert letter_mul(a, letter_inv(a)) is None

    def test_coordinate_mismatch(self, alphabet):
        with pytest.raises(CoordinateMismatch):
            letter_mul(alphabet.designated(Ordinal.nat(0)), alphabet.designated(Ordinal.nat(1)))

    def test_group_mismatch(self, cyclic4):
        a = Letter(Ordinal.nat(0), 1, cyclic4)
        b = Letter(Ordinal.nat(0), 1, GroupSpec.integers())
        with pytest.raises(GroupMismatch):
            letter_mul(a, b)

    def test_str(self, alphabet, cyclic4):
        assert str(alphabet.designated(OMEGA)) == "g[w]"
        assert str(Letter(Ordinal.nat(2), 3, cyclic4)) == "elem(2, 3)"

    @given(cyclic_letters(groups=1), cyclic_letters(groups=1), cyclic_letters(groups=1))
    def test_mul_associative(self, a, b, c):
        """Ayni koordinatta (ab)c = a(bc); birim None ile temsil edilir."""
        def mul(x, y):
            if x is None:
                return y
            if y is None:
                return x
            return letter_mul(x, y)
        assert mul(mul(a, b), c) == mul(a, mul(b, c))

    @given(cyclic_letters())
    def test_inverse_involution(self, a):
        assert letter_inv(letter_inv(a)) == a


class TestAlphabet:
    """Alphabet testleri."""

    def test_regions_override_default(self, cyclic4):
        alphabet = Alphabet(regions=(Region(Ordinal.nat(0), Ordinal.nat(3), cyclic4),))
        assert alphabet.group_at(Ordinal.nat(2)) == cyclic4
        assert alphabet.group_at(Ordinal.nat(3)).kind is GroupKind.INTEGERS

    def test_designated_letter(self, alphabet):
        letter = alphabet.designated(Ordinal.nat(5))
        assert letter.is_designated and letter.element == 1

    def test_index_bound(self):
        alphabet = Alphabet(index_bound=OMEGA)
        assert alphabet.in_range(Ordinal.nat(100))
        assert not alphabet.in_range(OMEGA)
