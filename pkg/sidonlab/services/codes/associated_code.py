"""Codes whose parity check matrices have the elements of a set as columns"""

from typing import Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from sidonlab.config import config
from sidonlab.exceptions import (
    CapExceeded,
    CollapseToZeroOrDuplicate,
    ColumnNotPresent,
    DimensionTooLarge,
    DuplicateColumns,
    MissingSmax,
    NotFullRank,
    OutOfDomain,
    RowNotSet,
    TooFewColumns,
    ValidationError,
    ZeroInSet,
)
from sidonlab.models.code_model import CodeView, DistanceClass, SubdiagonalClass, SubdiagonalDistance
from sidonlab.models.vector_model import GF2Vector, PointSet
from sidonlab.services.bounds.lambda_bound import new_bound
from sidonlab.services.gf2.linalg import GF2Eliminator, rank_of
from sidonlab.services.sums.bitmap import SumBitmap, check_bitmap_dim, vector_range
from sidonlab.services.sums.sidon import is_sidon, is_sum_free
from sidonlab.utils.logger import setuplog

logger = setuplog(__name__)


def _check_columns(dim: int, columns: Sequence[int]) -> None:
    limit = 1 << dim
    seen: set[int] = set()
    for column in columns:
        if column == 0:
            raise ZeroInSet("the zero vector cannot be a check matrix column")
        if column < 0 or column >= limit:
            raise ValidationError(f"column {column} is not a vector of F_2^{dim}")
        if column in seen:
            raise DuplicateColumns(f"column {column} appears twice")
        seen.add(column)


def five_column_zero_sum(columns: Sequence[int]) -> Optional[Tuple[int, int, int, int, int]]:
    """Five distinct columns summing to zero, found by joining pair sums against triple sums"""

    values = np.asarray(columns, dtype=np.int64)
    n = values.size
    if n < 5:
        return None

    pair_i, pair_j = np.triu_indices(n, k=1)
    pair_sums = values[pair_i] ^ values[pair_j]
    order = np.argsort(pair_sums, kind="stable")
    sorted_sums = pair_sums[order]

    for i in range(n - 2):
        later = pair_i > i
        triple_sums = values[i] ^ pair_sums[later]
        positions = np.clip(np.searchsorted(sorted_sums, triple_sums), 0, sorted_sums.size - 1)
        hits = np.flatnonzero(sorted_sums[positions] == triple_sums)
        if hits.size == 0:
            continue
        triple_j, triple_k = pair_i[later], pair_j[later]
        for h in hits.tolist():
            # equal pair sums can repeat in non-Sidon input, so scan the run of matches
            p = int(positions[h])
            while p < sorted_sums.size and sorted_sums[p] == triple_sums[h]:
                a, b = int(pair_i[order[p]]), int(pair_j[order[p]])
                triple = {i, int(triple_j[h]), int(triple_k[h])}
                if a not in triple and b not in triple:
                    return tuple(sorted((columns[a], columns[b], *(columns[x] for x in triple))))  # type: ignore[return-value]
                p += 1
    return None


def _distance_class(dim: int, columns: Sequence[int]) -> DistanceClass:
    S = PointSet.of(dim, columns)
    if not is_sum_free(S):
        return DistanceClass.D3
    if not is_sidon(S):
        return DistanceClass.D4
    if five_column_zero_sum(S.elements) is not None:
        return DistanceClass.D5
    return DistanceClass.D6_OR_MORE


def min_distance_class(M: PointSet) -> DistanceClass:
    """D3 unless sum-free, D4 unless also Sidon, then D5 or D6_OR_MORE"""

    _check_columns(M.dim, M.elements)
    return _distance_class(M.dim, M.elements)


def code_from_columns(dim: int, columns: Sequence[int], with_covering_radius: bool = False) -> CodeView:
    """Associated code of an ordered column list"""

    columns = [int(c) for c in columns]
    _check_columns(dim, columns)
    if len(columns) < dim + 1:
        raise TooFewColumns(f"need at least t+1={dim + 1} columns, got {len(columns)}")

    rank = rank_of(columns)
    radius = None
    if with_covering_radius and rank == dim:
        radius = covering_radius(PointSet.of(dim, columns))
    return CodeView(
        n=len(columns),
        t=dim,
        k=len(columns) - rank,
        columns=tuple(columns),
        d_class=_distance_class(dim, columns),
        covering_radius=radius,
    )


def associated_code(M: PointSet, with_covering_radius: bool = False) -> CodeView:
    """C_M with columns in ascending element order"""

    return code_from_columns(M.dim, M.elements, with_covering_radius)


def exact_min_distance(M: PointSet) -> Optional[int]:
    """Least weight of a nonzero codeword by enumerating the whole kernel; None when k = 0"""

    _check_columns(M.dim, M.elements)
    if M.size > config.EXACT_DISTANCE_MAX_LENGTH:
        raise DimensionTooLarge(
            f"exact minimum distance supports n <= {config.EXACT_DISTANCE_MAX_LENGTH}, got n={M.size}"
        )

    # every dependent column yields a kernel vector; together they form a kernel basis
    eliminator = GF2Eliminator()
    kernel_basis = []
    for column in M.elements:
        independent, dependency = eliminator.add(column)
        if not independent:
            kernel_basis.append(dependency)
    if not kernel_basis:
        return None

    codewords = np.zeros(1, dtype=np.int64)
    for word in kernel_basis:
        codewords = np.concatenate((codewords, codewords ^ word))
    return int(np.bitwise_count(codewords[1:]).min())


def covering_radius(M: PointSet, cap: Optional[int] = None) -> int:
    """Smallest R such that every syndrome is a sum of at most R columns"""

    cap = config.COVERING_RADIUS_CAP if cap is None else cap
    _check_columns(M.dim, M.elements)
    if rank_of(M.elements) < M.dim:
        raise NotFullRank(f"columns span less than F_2^{M.dim}, the matrix is not a check matrix")
    check_bitmap_dim(M.dim)

    index = vector_range(M.dim)
    covered = SumBitmap.from_values(M.dim, [0]).bits
    for radius in range(1, cap + 1):
        reached = covered.copy()
        for column in M.elements:
            reached |= covered[index ^ column]
        covered = reached
        if covered.all():
            return radius
    raise CapExceeded(f"covering radius exceeds the cap {cap}")


def delete_coordinate(value: int, row: int) -> int:
    """Drop 1-based coordinate row"""

    low = value & ((1 << (row - 1)) - 1)
    return low | ((value >> row) << (row - 1))


def puncture_set(M: PointSet, drop_col: Union[GF2Vector, int], drop_row: int) -> PointSet:
    """Remove one column and one row of the check matrix"""

    column = drop_col.value if isinstance(drop_col, GF2Vector) else int(drop_col)
    if M.dim < 2:
        raise OutOfDomain("puncturing needs t >= 2")
    if not 1 <= drop_row <= M.dim:
        raise OutOfDomain(f"row {drop_row} outside 1..{M.dim}")
    if column not in M:
        raise ColumnNotPresent(f"column {column} is not in the set")
    if not column >> (drop_row - 1) & 1:
        raise RowNotSet(f"column {column} has a zero in row {drop_row}")

    images = [delete_coordinate(m, drop_row) for m in M.elements if m != column]
    if 0 in images or len(set(images)) != len(images):
        raise CollapseToZeroOrDuplicate(
            f"deleting row {drop_row} maps a column to zero or two columns together"
        )
    return PointSet.of(M.dim - 1, images)


def subdiagonal_class(n: int, t: int, smax_table: Mapping[int, int]) -> SubdiagonalClass:
    """dmax(n, n - t) in terms of smax(t - 1) and smax(t)"""

    if not n > t >= 2:
        raise OutOfDomain(f"need n > t >= 2, got n={n}, t={t}")
    if n >= 1 << t:
        raise OutOfDomain(f"no [n, n-t] code with d >= 3 for n={n} >= 2^{t}")

    if n > 1 << (t - 1):
        return SubdiagonalClass(n=n, t=t, d_class=SubdiagonalDistance.D3)

    missing = [d for d in (t - 1, t) if d not in smax_table]
    if missing:
        raise MissingSmax(f"smax table lacks dimensions {missing}")
    smax_prev, smax_t = smax_table[t - 1], smax_table[t]

    if n >= smax_t:
        d_class = SubdiagonalDistance.D4
    elif n > smax_prev:
        d_class = SubdiagonalDistance.D5
    else:
        d_class = SubdiagonalDistance.GE6
    return SubdiagonalClass(n=n, t=t, d_class=d_class)


def code_nonexistent(t: int, n: int, smax_table: Optional[Mapping[int, int]] = None) -> bool:
    """Whether an [n, n - t, 5] code is ruled out.

    With smax(t) known this is exact (no such code iff smax(t) <= n); otherwise
    it falls back to n >= new_bound(t), where False only means "not ruled out".
    """

    if smax_table is not None and t in smax_table:
        return n >= smax_table[t]
    if t < 6:
        raise MissingSmax(f"smax({t}) unknown and the improved bound needs t >= 6")
    return n >= new_bound(t)
