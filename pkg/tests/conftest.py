"""Pytest fixtures ve konfigurasyonlari."""

import pytest
import sys
from pathlib import Path

# Proje root'u path'e ekle
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.alphabet.groups import GroupSpec
from src.alphabet.letters import Alphabet
from src.config.constants import get_config, set_config
from src.ordinals.cardinals import CardinalRegistry
from src.ordinals.ordinal import Ordinal
from src.specker.families import build_M_kappa, build_M_g
from src.words.terms import GDescription, Lit


# ============================================================
# Kardinaller ve Alfabe
# ============================================================

@pytest.fixture
def registry() -> CardinalRegistry:
    """w1, k1, L onceden tanimli kayit."""
    return CardinalRegistry.default()


@pytest.fixture
def k1(registry):
    return registry.get("k1")


@pytest.fixture
def lam(registry):
    return registry.get("L")


@pytest.fixture
def alphabet() -> Alphabet:
    """Her koordinatta tamsayilar."""
    return Alphabet()


@pytest.fixture
def cyclic4() -> GroupSpec:
    return GroupSpec.cyclic(4)


# ============================================================
# Kelimeler
# ============================================================

@pytest.fixture
def g(alphabet):
    """g(c) -> g[c] harf terimi."""
    def make(coordinate) -> Lit:
        return Lit(alphabet.designated(Ordinal.coerce(coordinate)))
    return make


@pytest.fixture
def elem(alphabet):
    """elem(c, x) -> harf terimi."""
    def make(coordinate, element) -> Lit:
        return Lit(alphabet.letter(Ordinal.coerce(coordinate), element))
    return make


@pytest.fixture
def m_kappa(k1):
    """M_κ₁."""
    return build_M_kappa(k1)


@pytest.fixture
def m_g(lam):
    """Tek flip'li M_g: g(ω) = 1."""
    return build_M_g(GDescription.from_map({Ordinal.omega_power(1): 1}), lam)


# ============================================================
# Konfigurasyon
# ============================================================

@pytest.fixture
def restore_config():
    """Testin degistirdigi global config'i geri yukle."""
    saved = get_config()
    yield
    set_config(saved)
