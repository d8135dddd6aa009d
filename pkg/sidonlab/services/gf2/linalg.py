"""Linear algebra over F_2 on bit-packed integers"""

from typing import Iterable, Optional, Tuple, Union

import numpy as np

from sidonlab.exceptions import DimMismatch, NonInvertibleMap, ValidationError
from sidonlab.models.vector_model import AffineMap, GF2Vector, LinearMap, PointSet
from sidonlab.utils.logger import setuplog

logger = setuplog(__name__)


class GF2Eliminator:
    """Incremental Gaussian elimination, pivoting on the lowest set bit.

    Every stored row remembers which inserted vectors it combines (as a bit
    mask over insertion indices), so callers can recover dependencies,
    inverses and kernel vectors from the same pass.
    """

    def __init__(self) -> None:
        self._rows: dict[int, Tuple[int, int]] = {}  # pivot bit -> (row, combination)
        self._count = 0

    @property
    def rank(self) -> int:
        return len(self._rows)

    def reduce(self, value: int) -> Tuple[int, int]:
        """Return (residual, combination) of value against the stored rows"""

        # rows have pairwise distinct lowest bits, so each step strictly raises the lowest bit
        combination = 0
        while value:
            row = self._rows.get((value & -value).bit_length() - 1)
            if row is None:
                break
            value ^= row[0]
            combination ^= row[1]
        return value, combination

    def add(self, value: int) -> Tuple[bool, int]:
        """Insert value; return (independent, dependency mask when dependent)"""

        own = 1 << self._count
        self._count += 1
        residual, combination = self.reduce(value)
        if residual == 0:
            return False, combination ^ own
        self._rows[(residual & -residual).bit_length() - 1] = (residual, combination ^ own)
        return True, 0

    def contains(self, value: int) -> bool:
        return self.reduce(value)[0] == 0


def _as_int(value: Union[GF2Vector, int]) -> int:
    return value.value if isinstance(value, GF2Vector) else int(value)


def weight(v: Union[GF2Vector, int]) -> int:
    """Hamming weight"""

    return _as_int(v).bit_count()


def rank_of(values: Iterable[int]) -> int:
    eliminator = GF2Eliminator()
    for value in values:
        eliminator.add(value)
    return eliminator.rank


def span_dim(M: PointSet) -> int:
    """dim of the linear span of M"""

    return rank_of(M.elements)


def affine_span_dim(M: PointSet) -> int:
    """dim of the affine hull of M, -1 for the empty set"""

    if M.size == 0:
        return -1
    anchor = M.elements[0]
    return rank_of(v ^ anchor for v in M.elements[1:])


def linear_rank(L: LinearMap) -> int:
    return rank_of(L.columns)


def invert_linear(L: LinearMap) -> LinearMap:
    """Inverse of an invertible linear map"""

    eliminator = GF2Eliminator()
    for column in L.columns:
        eliminator.add(column)
    if eliminator.rank < L.dim:
        raise NonInvertibleMap(f"linear map has rank {eliminator.rank} < {L.dim}")

    # e_j = sum of the columns selected by the combination mask, so L^-1(e_j) is that mask
    columns = []
    for j in range(L.dim):
        residual, combination = eliminator.reduce(1 << j)
        assert residual == 0
        columns.append(combination)
    return LinearMap(dim=L.dim, columns=tuple(columns))


def compose_linear(S: LinearMap, T: LinearMap) -> LinearMap:
    """S after T"""

    if S.dim != T.dim:
        raise DimMismatch(f"cannot compose maps of dims {S.dim} and {T.dim}")
    return LinearMap(dim=S.dim, columns=tuple(S.apply(c) for c in T.columns))


def identity_affine(dim: int) -> AffineMap:
    return AffineMap(linear=LinearMap.identity(dim), translation=0)


def invert_affine(T: AffineMap) -> AffineMap:
    inverse = invert_linear(T.linear)
    return AffineMap(linear=inverse, translation=inverse.apply(T.translation))


def compose_affine(S: AffineMap, T: AffineMap) -> AffineMap:
    """S after T"""

    linear = compose_linear(S.linear, T.linear)
    return AffineMap(linear=linear, translation=S.linear.apply(T.translation) ^ S.translation)


def apply_affine(T: AffineMap, M: PointSet) -> PointSet:
    """T(M) for an affine permutation T"""

    if T.dim != M.dim:
        raise DimMismatch(f"map has dim {T.dim}, set has dim {M.dim}")
    if linear_rank(T.linear) < T.dim:
        raise NonInvertibleMap("affine map is not a permutation")
    return PointSet(dim=M.dim, elements=tuple(sorted(T.apply(m) for m in M.elements)))


def random_affine(dim: int, seed: int, rng: Optional[np.random.Generator] = None) -> AffineMap:
    """Deterministic pseudorandom affine permutation of F_2^dim"""

    if dim < 1:
        raise ValidationError("random_affine needs dim >= 1")
    rng = rng if rng is not None else np.random.default_rng(seed)
    limit = 1 << dim
    attempts = 0
    while True:
        attempts += 1
        columns = tuple(int(c) for c in rng.integers(0, limit, size=dim))
        if rank_of(columns) == dim:
            break
    translation = int(rng.integers(0, limit))
    logger.debug("random_affine(dim=%d, seed=%d) accepted after %d draws", dim, seed, attempts)
    return AffineMap(linear=LinearMap(dim=dim, columns=columns), translation=translation)
