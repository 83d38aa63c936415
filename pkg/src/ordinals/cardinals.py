"""
Kardinal Atomlari
=================
Sembolik, opak kardinal atomlari ve oturum bazli kayit defteri.
Kardinal aritmetigi yapilmaz; sadece rank sirasi, duzenlilik ve
sayilamazlik bilgisi tutulur.
"""

import re
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional

from ..config.constants import get_config
from ..utils.exceptions import UndeclaredAtom, DuplicateAtom, RankConflict
from ..utils.logger import get_tw_logger

logger = get_tw_logger("cardinals")

ATOM_NAME = re.compile(r"^[a-zA-Z][a-zA-Z0-9_]*$")


@dataclass(frozen=True)
class CardinalAtom:
    """Sembolik kardinal (rank ile toplam sirali)."""
    name: str
    rank: int
    regular: bool = True
    uncountable: bool = True

    def __str__(self) -> str:
        return self.name

    def __lt__(self, other: 'CardinalAtom') -> bool:
        return self.rank < other.rank

    def __le__(self, other: 'CardinalAtom') -> bool:
        return self.rank <= other.rank

    @property
    def is_regular_uncountable(self) -> bool:
        return self.regular and self.uncountable


# ω: sayilabilir, sadece Mk(w) gibi hatali kullanimlari yakalamak icin atom gibi davranir.
OMEGA = CardinalAtom("w", 0, regular=True, uncountable=False)

# ω₁: en dusuk sayilamaz rank.
OMEGA_ONE = CardinalAtom("w1", 1, regular=True, uncountable=True)


class CardinalRegistry:
    """
    Oturum icindeki kardinal tanimlari.

    Kullanim:
        registry = CardinalRegistry.default()
        registry.declare_spec("k2:5")
        kappa = registry.get("k2")
    """

    def __init__(self):
        self._atoms: Dict[str, CardinalAtom] = {}
        self._ranks: Dict[int, str] = {}

    @classmethod
    def default(cls) -> 'CardinalRegistry':
        """Config'de onceden tanimli atomlarla kayit defteri."""
        registry = cls()
        registry._add(OMEGA_ONE)
        for name, rank, regular in get_config().cardinals.PREDECLARED:
            if name == OMEGA_ONE.name:
                continue
            registry.declare(name, rank, regular=regular)
        return registry

    def _add(self, atom: CardinalAtom) -> CardinalAtom:
        self._atoms[atom.name] = atom
        self._ranks[atom.rank] = atom.name
        return atom

    def declare(
        self,
        name: str,
        rank: Optional[int] = None,
        regular: bool = True,
        uncountable: bool = True
    ) -> CardinalAtom:
        """Yeni atom tanimla. Rank verilmezse en buyuk rankin ustune eklenir."""
        if not ATOM_NAME.match(name) or name == OMEGA.name:
            raise DuplicateAtom(name)
        if name in self._atoms:
            raise DuplicateAtom(name)
        if rank is None:
            rank = max(self._ranks, default=0) + 1
        if rank < 1:
            raise RankConflict(name, rank, OMEGA.name)
        if rank in self._ranks:
            raise RankConflict(name, rank, self._ranks[rank])
        atom = self._add(CardinalAtom(name, rank, regular=regular, uncountable=uncountable))
        logger.debug("Kardinal tanimlandi", name=name, rank=rank)
        return atom

    def declare_spec(self, spec: str) -> CardinalAtom:
        """`name[:rank]` biciminde CLI tanimi."""
        name, _, rank_text = spec.partition(":")
        name = name.strip()
        if rank_text:
            try:
                rank = int(rank_text)
            except ValueError:
                raise RankConflict(name, -1) from None
            return self.declare(name, rank)
        return self.declare(name)

    def get(self, name: str) -> CardinalAtom:
        """Isimden atom; `w` sayilabilir ω'yi verir."""
        if name == OMEGA.name:
            return OMEGA
        try:
            return self._atoms[name]
        except KeyError:
            raise UndeclaredAtom(name) from None

    def __contains__(self, name: str) -> bool:
        return name == OMEGA.name or name in self._atoms

    def __iter__(self) -> Iterator[CardinalAtom]:
        return iter(sorted(self._atoms.values(), key=lambda a: a.rank))

    def atoms(self) -> List[CardinalAtom]:
        return list(self)
