"""Affine equivalence of point sets by backtracking"""

from collections import Counter
from typing import List, Optional

from sidonlab.config import config
from sidonlab.exceptions import DimMismatch, DimensionTooLarge
from sidonlab.models.vector_model import AffineMap, LinearMap, PointSet
from sidonlab.services.gf2.linalg import (
    GF2Eliminator,
    compose_linear,
    identity_affine,
    invert_linear,
    rank_of,
)
from sidonlab.services.sums.sidon import k_star_sums, k_sums
from sidonlab.utils.logger import setuplog

logger = setuplog(__name__)


def affine_invariants(M: PointSet) -> tuple:
    """Quantities preserved by every affine permutation"""

    pair_sums = Counter(a ^ b for i, a in enumerate(M.elements) for b in M.elements[i + 1 :])
    return (
        k_star_sums(M, 2).cardinality,
        rank_of(pair_sums),
        k_sums(M, 3).cardinality,
        tuple(sorted(pair_sums.values())),
    )


def _complete_basis(vectors: List[int], dim: int) -> List[int]:
    """Extend independent vectors to a basis with standard vectors"""

    eliminator = GF2Eliminator()
    for v in vectors:
        eliminator.add(v)
    completed = list(vectors)
    for j in range(dim):
        if len(completed) == dim:
            break
        if not eliminator.contains(1 << j):
            eliminator.add(1 << j)
            completed.append(1 << j)
    return completed


def _build_map(dim: int, anchor: int, differences: List[int], image_anchor: int, images: List[int]) -> AffineMap:
    source = LinearMap(dim=dim, columns=tuple(_complete_basis(differences, dim)))
    target = LinearMap(dim=dim, columns=tuple(_complete_basis(images, dim)))
    linear = compose_linear(target, invert_linear(source))
    return AffineMap(linear=linear, translation=image_anchor ^ linear.apply(anchor))


def affine_equivalent(M1: PointSet, M2: PointSet) -> Optional[AffineMap]:
    """Affine permutation T with T(M1) = M2, or None"""

    if M1.dim != M2.dim:
        raise DimMismatch(f"sets live in dims {M1.dim} and {M2.dim}")
    dim = M1.dim
    if dim > config.MAX_EQUIVALENCE_DIM:
        raise DimensionTooLarge(
            f"affine_equivalent supports t <= {config.MAX_EQUIVALENCE_DIM}, got t={dim}"
        )
    if M1.size != M2.size:
        return None
    if M1.size == 0:
        return identity_affine(dim)
    if affine_invariants(M1) != affine_invariants(M2):
        logger.debug("affine invariants differ, no search needed")
        return None

    # affine basis of M1: anchor plus elements whose differences are independent
    anchor = M1.elements[0]
    basis = GF2Eliminator()
    differences: List[int] = []
    for m in M1.elements[1:]:
        if basis.add(m ^ anchor)[0]:
            differences.append(m ^ anchor)

    coordinates = GF2Eliminator()
    for d in differences:
        coordinates.add(d)
    # level i checks the elements whose coordinates only need the first i differences
    checks: List[List[int]] = [[] for _ in range(len(differences) + 1)]
    for m in M1.elements:
        _, mask = coordinates.reduce(m ^ anchor)
        checks[mask.bit_length()].append(mask)

    targets = set(M2.elements)

    def image_of(mask: int, image_anchor: int, images: List[int]) -> int:
        value = image_anchor
        index = 0
        while mask:
            if mask & 1:
                value ^= images[index]
            mask >>= 1
            index += 1
        return value

    def consistent(level: int, image_anchor: int, images: List[int]) -> bool:
        return all(image_of(mask, image_anchor, images) in targets for mask in checks[level])

    def search(image_anchor: int, images: List[int], spanned: GF2Eliminator) -> Optional[List[int]]:
        level = len(images)
        if level == len(differences):
            return images
        for q in M2.elements:
            d = q ^ image_anchor
            if d == 0 or spanned.contains(d):
                continue
            candidate = images + [d]
            if not consistent(level + 1, image_anchor, candidate):
                continue
            extended = GF2Eliminator()
            for v in candidate:
                extended.add(v)
            found = search(image_anchor, candidate, extended)
            if found is not None:
                return found
        return None

    for image_anchor in M2.elements:
        if not consistent(0, image_anchor, []):
            continue
        images = search(image_anchor, [], GF2Eliminator())
        if images is not None:
            T = _build_map(dim, anchor, differences, image_anchor, images)
            logger.debug("affine equivalence found: %s", T)
            return T
    return None

