"""Catalog Repository - reference maximal Sidon sets and known maxima"""

from typing import Dict, List, Tuple

from sidonlab.models.vector_model import AffineMap, LinearMap, PointSet

# exact smax(t); t = 8..10 come from published exhaustive searches and code tables
KNOWN_SMAX: Dict[int, int] = {1: 2, 2: 3, 3: 4, 4: 6, 5: 7, 6: 9, 7: 12, 8: 18, 9: 24, 10: 34}

# every maximal Sidon set in dims 7 and 8 has one of these sizes
MAXIMAL_SIZES: Dict[int, Tuple[int, ...]] = {7: (12,), 8: (15, 16, 18)}

_BASE = {t: [0] + [1 << i for i in range(t)] for t in range(1, 9)}

# name -> (dim, extra elements beyond {0, e_1, ..., e_t})
_CANONICAL: Dict[str, Tuple[int, List[int]]] = {
    "M_1": (1, []),
    "M_2": (2, []),
    "M_3": (3, []),
    "M_4": (4, [15]),
    "M_5": (5, [15]),
    "M_6a": (6, [15, 51]),
    "M_6b": (6, [63]),
}

_VARIANTS: Dict[str, Tuple[int, List[int]]] = {
    "M'_5": (5, [31]),
    "M_6a1": (6, [15, 60]),  # i1, i2 = 3, 4
    "M_6a2": (6, [31, 46]),  # j1, j2, j3 = 2, 3, 4
    "M'_6a": (6, [31, 51]),
}

_EXAMPLES: Dict[str, Tuple[int, List[int]]] = {
    "T1_7_12": (7, [15, 60, 101, 87]),
    "T1_8_15": (8, [29, 58, 116, 135, 223, 236]),
    "T1_8_16": (8, [29, 58, 116, 232, 205, 135, 222]),
    "T1_8_18": (8, [29, 58, 116, 232, 205, 135, 254, 91, 171]),
}

# (source, target): source is carried onto target by an affine map
EQUIVALENT_PAIRS: List[Tuple[str, str]] = [
    ("M'_5", "M_5"),
    ("M_6a1", "M_6a"),
    ("M_6a2", "M'_6a"),
    ("M'_6a", "M_6a"),
]


class CatalogRepository:
    """Lookup of the reference sets by name"""

    def __init__(self) -> None:
        self._sets: Dict[str, PointSet] = {
            name: PointSet.of(dim, _BASE[dim] + extra)
            for table in (_CANONICAL, _VARIANTS, _EXAMPLES)
            for name, (dim, extra) in table.items()
        }

    def get(self, name: str) -> PointSet:
        if name not in self._sets:
            raise KeyError(f"no catalog set named {name!r}")
        return self._sets[name]

    def canonical(self) -> Dict[str, PointSet]:
        """Every maximal Sidon set for t <= 6 is affinely equivalent to one of these"""
        return {name: self._sets[name] for name in _CANONICAL}

    def examples(self) -> Dict[str, PointSet]:
        """Maximal Sidon sets of every possible size in dims 7 and 8"""
        return {name: self._sets[name] for name in _EXAMPLES}

    def equivalent_pairs(self) -> List[Tuple[PointSet, PointSet]]:
        return [(self._sets[a], self._sets[b]) for a, b in EQUIVALENT_PAIRS]

    @staticmethod
    def shift_map(dim: int) -> AffineMap:
        """x -> L(x) + e_5 with e_i -> e_i + e_5 for i != 5"""

        e5 = 1 << 4
        columns = tuple(e5 if i == 4 else (1 << i) | e5 for i in range(dim))
        return AffineMap(linear=LinearMap(dim=dim, columns=columns), translation=e5)
