"""Hypothesis stratejileri: ordinaller, harfler, kelimeler ve sira terimleri."""

from hypothesis import strategies as st

from src.alphabet.groups import GroupSpec
from src.alphabet.letters import Alphabet, Letter
from src.ordinals.cardinals import CardinalRegistry
from src.ordinals.ordinal import Ordinal, OMEGA
from src.ordinals.order import FiniteOrder, Interval, Reverse, Sum
from src.specker.families import BitPattern, Canonical, build_M_g, build_M_kappa
from src.words.cuts import tail_at
from src.words.terms import GDescription, GenSeq, Inv, Lit, WordTerm, concat

REGISTRY = CardinalRegistry.default()
K1 = REGISTRY.get("k1")
LAM = REGISTRY.get("L")
INTEGERS = Alphabet()


@st.composite
def countable_ordinals(draw, max_exponent: int = 3, max_coefficient: int = 3) -> Ordinal:
    """ω^e·c toplamlari, e <= max_exponent."""
    value = Ordinal()
    for exponent in range(max_exponent, -1, -1):
        coefficient = draw(st.integers(0, max_coefficient))
        if coefficient:
            value = value + Ordinal.omega_power(exponent, coefficient)
    return value


small_naturals = st.integers(0, 6).map(Ordinal.nat)


def cyclic_letters(groups: int = 3, order: int = 4):
    group = GroupSpec.cyclic(order)
    return st.builds(
        lambda c, x: Letter(Ordinal.nat(c), x, group),
        st.integers(0, groups - 1),
        st.integers(1, order - 1),
    )


def integer_letters(coordinates: int = 5):
    return st.builds(
        lambda c, x: INTEGERS.letter(Ordinal.nat(c), x),
        st.integers(0, coordinates - 1),
        st.sampled_from([1, -1, 2]),
    )


def letter_words(letters=None, max_size: int = 8):
    """Lit dizileri."""
    letters = letters if letters is not None else cyclic_letters()
    return st.lists(letters, max_size=max_size)


@st.composite
def descriptions(draw) -> GDescription:
    default = draw(st.integers(0, 1))
    flips = draw(st.lists(countable_ordinals(max_exponent=2, max_coefficient=2), max_size=3))
    return GDescription.from_map({p: 1 - default for p in flips}, default)


def _kappa_tail(beta: int, inverted: bool) -> WordTerm:
    tail = tail_at(build_M_kappa(K1), Ordinal.nat(beta))
    return Inv(tail) if inverted else tail


# M_κ kuyruklari ve kucuk koordinatli harflerden olusan parcalar
kappa_pieces = st.one_of(
    integer_letters().map(Lit),
    st.builds(_kappa_tail, st.integers(0, 4), st.booleans()),
)


@st.composite
def kappa_words(draw, max_pieces: int = 4) -> WordTerm:
    return concat(*draw(st.lists(kappa_pieces, max_size=max_pieces)))


@st.composite
def ordinals(draw) -> Ordinal:
    """Atom onekli ordinaller: λ·a + κ₁·b + sayilabilir kisim."""
    value = Ordinal()
    for atom in (LAM, K1):
        coefficient = draw(st.integers(0, 2))
        if coefficient:
            value = value + Ordinal.atom(atom, coefficient)
    return value + draw(countable_ordinals(max_exponent=2, max_coefficient=2))


# ═══════════════════════════════════════════════════════════════════════════
# KARISIK KELIMELER
# ═══════════════════════════════════════════════════════════════════════════

RUN_STOPS = [OMEGA, Ordinal.omega_power(1, 2), Ordinal.atom(K1)]

small_positions = st.one_of(
    st.integers(0, 5).map(Ordinal.nat),
    st.integers(0, 3).map(lambda n: OMEGA + n),
)


@st.composite
def runs(draw) -> WordTerm:
    """Varsayilan biti 0 veya 1 olan, istege bagli ters GenSeq."""
    stop = draw(st.sampled_from(RUN_STOPS))
    start = draw(small_positions.filter(lambda p: p < stop))
    default = draw(st.integers(0, 1))
    flips = draw(st.lists(small_positions, max_size=2))
    desc = GDescription.from_map({p: 1 - default for p in flips}, default).within(start, stop)
    run = GenSeq.of(start, stop, desc, INTEGERS)
    return Inv(run) if draw(st.booleans()) else run


MG_DESCRIPTIONS = [
    GDescription(),
    GDescription.from_map({0: 1}),
    GDescription.from_map({OMEGA: 1}),
    GDescription(1),
    GDescription.from_map({1: 0}, default=1),
]

MG_OFFSETS = [Ordinal(), Ordinal.nat(1), Ordinal.nat(2), OMEGA, Ordinal.atom(LAM)]


def _mg_tail(desc: GDescription, beta: Ordinal, inverted: bool) -> WordTerm:
    tail = tail_at(build_M_g(desc, LAM, INTEGERS), beta)
    return Inv(tail) if inverted else tail


# M_g kuyruklari; ters tekrarlar dahil
mg_pieces = st.builds(
    _mg_tail, st.sampled_from(MG_DESCRIPTIONS), st.sampled_from(MG_OFFSETS), st.booleans(),
)

mixed_pieces = st.one_of(
    integer_letters().map(Lit),
    st.builds(_kappa_tail, st.integers(0, 4), st.booleans()),
    runs(),
    mg_pieces,
)


@st.composite
def mixed_words(draw, max_pieces: int = 4) -> WordTerm:
    """Harf, M_κ kuyrugu, GenSeq ve M_g kuyrugu karisimi."""
    return concat(*draw(st.lists(mixed_pieces, max_size=max_pieces)))


# ayni genislikte M_g aileleri
bit_families = st.sampled_from(MG_DESCRIPTIONS).map(lambda desc: BitPattern(desc, LAM))

pattern_families = st.one_of(st.just(Canonical(K1)), bit_families)


# ═══════════════════════════════════════════════════════════════════════════
# SIRA TERIMLERI
# ═══════════════════════════════════════════════════════════════════════════

ORDER_BOUNDS = [OMEGA, Ordinal.omega_power(1, 2), Ordinal.omega_power(2), Ordinal.atom(K1)]

intervals = st.tuples(
    st.sampled_from(ORDER_BOUNDS), st.sampled_from([Ordinal(), Ordinal.nat(3), OMEGA]),
).filter(lambda pair: pair[1] < pair[0]).map(lambda pair: Interval(*pair))

order_terms = st.recursive(
    st.one_of(st.integers(0, 3).map(FiniteOrder), intervals),
    lambda children: st.one_of(
        st.builds(Sum, children, children),
        children.map(Reverse.of),
    ),
    max_leaves=4,
)
