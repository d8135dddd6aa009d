"""k-sums machinery and the Sidon / sum-free predicates"""

from math import comb
from typing import Tuple, Union

import numpy as np
from numpy.typing import NDArray

from sidonlab.exceptions import (
    BasisNotContained,
    InsufficientSpan,
    NotAMember,
    NotSidon,
    NotSumFreeSidon,
    TooSmall,
    UnsupportedK,
    WeightTooSmall,
    ZeroNotMember,
)
from sidonlab.models.sidon_model import ExtensionClass, SidonReport
from sidonlab.models.vector_model import AffineMap, GF2Vector, LinearMap, PointSet
from sidonlab.services.gf2.linalg import (
    GF2Eliminator,
    affine_span_dim,
    apply_affine,
    invert_linear,
    rank_of,
    span_dim,
    weight,
)
from sidonlab.services.sums.bitmap import SumBitmap, check_bitmap_dim, vector_range
from sidonlab.utils.logger import setuplog

logger = setuplog(__name__)

SUPPORTED_K = (2, 3, 4)


def _array(M: PointSet) -> NDArray[np.int64]:
    return np.asarray(M.elements, dtype=np.int64)


def _check_k(k: int) -> None:
    if k not in SUPPORTED_K:
        raise UnsupportedK(f"only k in {SUPPORTED_K} is supported, got k={k}")


def _pair_sums(values: NDArray[np.int64]) -> NDArray[np.int64]:
    """m_i + m_j for i < j, with multiplicity"""

    upper_i, upper_j = np.triu_indices(values.size, k=1)
    return values[upper_i] ^ values[upper_j]


def k_star_sums(M: PointSet, k: int) -> SumBitmap:
    """Sums of k pairwise distinct elements"""

    _check_k(k)
    check_bitmap_dim(M.dim)
    index = vector_range(M.dim)
    # layers[r]: r-star-sums of the elements processed so far; layers[0] is the empty sum
    layers = [np.zeros(1 << M.dim, dtype=np.bool_) for _ in range(k + 1)]
    layers[0][0] = True
    for m in M.elements:
        shifted = index ^ m
        for r in range(k, 0, -1):
            layers[r] |= layers[r - 1][shifted]
    return SumBitmap(M.dim, layers[k])


def k_sums(M: PointSet, k: int) -> SumBitmap:
    """Sums of k not necessarily distinct elements"""

    _check_k(k)
    check_bitmap_dim(M.dim)
    if M.size == 0:
        return SumBitmap(M.dim)

    values = _array(M)
    two = SumBitmap.from_values(M.dim, np.bitwise_xor.outer(values, values).ravel())
    if k == 2:
        return two

    index = vector_range(M.dim)
    addends = M.elements if k == 3 else two.members()
    bits = np.zeros(1 << M.dim, dtype=np.bool_)
    for addend in addends:
        bits |= two.bits[index ^ addend]
    return SumBitmap(M.dim, bits)


def is_sidon(M: PointSet) -> bool:
    """True iff all 2-star-sums are distinct"""

    if M.size <= 3:
        return True
    return int(np.unique(_pair_sums(_array(M))).size) == comb(M.size, 2)


def is_sum_free(M: PointSet) -> bool:
    """True iff Sigma2[M] and M are disjoint"""

    if 0 in M:
        return False
    if M.size < 2:
        return True
    values = _array(M)
    return not bool(np.isin(_pair_sums(values), values).any())


def sidon_characterizations(M: PointSet) -> Tuple[bool, bool, bool]:
    """The three equivalent statements, each computed on its own:
    no m1+m2 = m3+m4 over distinct elements, |Sigma2*| = C(|M|,2), Sigma3* and M disjoint
    """

    first_pair: dict[int, Tuple[int, int]] = {}
    by_definition = True
    elements = M.elements
    for i in range(len(elements)):
        for j in range(i + 1, len(elements)):
            s = elements[i] ^ elements[j]
            if s in first_pair:
                by_definition = False
                break
            first_pair[s] = (i, j)
        if not by_definition:
            break

    by_count = k_star_sums(M, 2).cardinality == comb(M.size, 2)
    three_star = k_star_sums(M, 3)
    by_three_star = not any(m in three_star for m in elements)
    return by_definition, by_count, by_three_star


def extension_candidates(M: PointSet) -> SumBitmap:
    """F_2^t minus Sigma3[M]: exactly the g keeping M + {g} Sidon"""

    if not is_sidon(M):
        raise NotSidon("extension candidates need a Sidon set")
    return k_sums(M, 3).complement()


def is_maximal_sidon(M: PointSet) -> bool:
    """Sidon set with Sigma3[M] = F_2^t"""

    return extension_candidates(M).is_empty()


def is_maximal_sum_free_sidon(M: PointSet) -> bool:
    """Sum-free Sidon set admitting no sum-free Sidon extension"""

    if not (is_sum_free(M) and is_sidon(M)):
        raise NotSumFreeSidon("maximality is only defined for sum-free Sidon sets")
    return (k_sums(M, 3) | k_sums(M, 2)).is_full()


def sum_free_extension_class(M: PointSet, g: Union[GF2Vector, int]) -> ExtensionClass:
    """Classify M + {g} for a sum-free Sidon set M"""

    if not (is_sum_free(M) and is_sidon(M)):
        raise NotSumFreeSidon("extension class needs a sum-free Sidon set")
    value = g.value if isinstance(g, GF2Vector) else int(g)
    if value in M:
        return ExtensionClass.ALREADY_MEMBER
    if value in k_sums(M, 3):
        return ExtensionClass.NOT_SIDON
    if value in k_sums(M, 2):
        return ExtensionClass.SIDON_NOT_SUM_FREE
    return ExtensionClass.SUM_FREE_SIDON


def strip_zero(M: PointSet) -> PointSet:
    """M minus {0}, a sum-free Sidon set"""

    if 0 not in M:
        raise ZeroNotMember("strip_zero needs 0 in M")
    if not is_sidon(M):
        raise NotSidon("strip_zero needs a Sidon set")
    return M.without(0)


def normalize(M: PointSet) -> Tuple[AffineMap, PointSet]:
    """Affine permutation T with {0, e_1, ..., e_t} inside T(M)"""

    t = M.dim
    if M.size < t + 1:
        raise TooSmall(f"normalize needs |M| >= {t + 1}, got {M.size}")
    if span_dim(M) < t:
        raise InsufficientSpan(f"span of M has dimension {span_dim(M)} < {t}")
    if affine_span_dim(M) < t:
        raise InsufficientSpan(
            f"affine hull of M has dimension {affine_span_dim(M)} < {t}; "
            "no affine image contains 0 and the standard basis"
        )

    anchor = M.elements[0]
    translated = sorted((m ^ anchor for m in M.elements if m != anchor), key=lambda v: (weight(v), v))
    eliminator = GF2Eliminator()
    chosen: list[int] = []
    for value in translated:
        independent, _ = eliminator.add(value)
        if independent:
            chosen.append(value)
            if len(chosen) == t:
                break

    # B maps e_i to the i-th chosen vector; T = B^-1 (x + anchor)
    inverse = invert_linear(LinearMap(dim=t, columns=tuple(chosen)))
    T = AffineMap(linear=inverse, translation=inverse.apply(anchor))
    image = apply_affine(T, M)
    logger.debug("normalize: anchor=%d basis=%s", anchor, chosen)
    return T, image


def normalize_weight(M: PointSet, m: Union[GF2Vector, int]) -> Tuple[AffineMap, PointSet]:
    """Coordinate permutation moving the support of m onto e_1..e_w"""

    t = M.dim
    value = m.value if isinstance(m, GF2Vector) else int(m)
    if any(b not in M for b in PointSet.standard_base(t).elements):
        raise BasisNotContained("normalize_weight needs {0, e_1, ..., e_t} in M")
    if value not in M:
        raise NotAMember(f"{value} is not an element of M")
    w = weight(value)
    if w < 2:
        raise WeightTooSmall(f"element {value} has weight {w} < 2")

    support = [i for i in range(t) if value >> i & 1]
    rest = [i for i in range(t) if not value >> i & 1]
    target = {position: slot for slot, position in enumerate(support + rest)}
    linear = LinearMap(dim=t, columns=tuple(1 << target[i] for i in range(t)))
    T = AffineMap(linear=linear, translation=0)
    return T, apply_affine(T, M)


def four_sum_coverage(M: PointSet, smax_prev: int) -> Tuple[bool, bool]:
    """(Sigma4[M] = F_2^t, span of M and of Sigma2*[M] both full)"""

    if not is_sidon(M):
        raise NotSidon("four_sum_coverage needs a Sidon set")
    covers = k_sums(M, 4).is_full()
    span_full = span_dim(M) == M.dim and rank_of(k_star_sums(M, 2).members()) == M.dim
    if M.size > smax_prev and not (covers and span_full):
        logger.warning(
            "Sidon set of size %d > smax_prev=%d without full 4-sum coverage; "
            "smax_prev is probably wrong",
            M.size,
            smax_prev,
        )
    return covers, span_full


def analyze_set(M: PointSet) -> SidonReport:
    """Full additive profile used by the check command"""

    sidon = is_sidon(M)
    three = k_sums(M, 3)
    candidates = (1 << M.dim) - three.cardinality
    return SidonReport(
        dim=M.dim,
        size=M.size,
        is_sidon=sidon,
        is_sum_free=is_sum_free(M),
        is_maximal_sidon=sidon and candidates == 0,
        two_star_count=k_star_sums(M, 2).cardinality,
        three_sum_count=three.cardinality,
        candidate_count=candidates,
    )
