"""Exhaustive enumeration of maximal Sidon sets containing a normalized base"""

import time
from typing import Dict, Optional, Tuple, Union

import numpy as np

from sidonlab.config import config
from sidonlab.decorator.timer import timer
from sidonlab.exceptions import (
    DimensionTooLarge,
    LongRunRefused,
    UnknownClass,
    UnsupportedDim,
    ValidationError,
)
from sidonlab.models.enum_model import EnumResult, EnumTask, Family, WeightClass
from sidonlab.models.vector_model import GF2Vector, PointSet
from sidonlab.services.enumerator.factory import get_enumerator_instance
from sidonlab.services.enumerator.search import merge_outcomes, split_tasks
from sidonlab.services.sums.bitmap import SumBitmap, weight_table
from sidonlab.services.sums.sidon import is_maximal_sidon, is_sidon, k_sums
from sidonlab.utils.logger import setuplog

logger = setuplog(__name__)

WEIGHT_CLASS_DIM = 8
BRUTE_FORCE_MAX_DIM = 4

# class -> (weight of the anchor e_1 + ... + e_w, maximal weight of every other element)
_WEIGHT_CLASSES = {
    WeightClass.W4: (4, 4),
    WeightClass.W5: (5, 5),
    WeightClass.W6: (6, 6),
    WeightClass.W7: (7, 6),
    WeightClass.W8: (8, 5),
}


def parse_weight_class(weight_class: Union[WeightClass, str]) -> WeightClass:
    if isinstance(weight_class, WeightClass):
        return weight_class
    try:
        return WeightClass(str(weight_class).strip().upper())
    except ValueError as e:
        raise UnknownClass(
            f"unknown weight class {weight_class!r}, expected one of {[c.value for c in WeightClass]}"
        ) from e


def weight_class_constraints(dim: int, weight_class: Union[WeightClass, str]) -> Tuple[GF2Vector, int]:
    """(anchor element, maximal weight of the remaining elements) of a dimension-8 subtask"""

    if dim != WEIGHT_CLASS_DIM:
        raise UnsupportedDim(f"weight classes only exist for dim {WEIGHT_CLASS_DIM}, got {dim}")
    anchor_weight, max_other_weight = _WEIGHT_CLASSES[parse_weight_class(weight_class)]
    return GF2Vector(value=(1 << anchor_weight) - 1, dim=dim), max_other_weight


def check_enumeration_dim(
    dim: int, weight_class: Optional[WeightClass] = None, allow_long_run: bool = False
) -> None:
    if dim < 1 or dim > config.MAX_BITMAP_DIM:
        raise DimensionTooLarge(f"enumeration supports 1 <= t <= {config.MAX_BITMAP_DIM}, got t={dim}")

    limit = config.MAX_FULL_ENUM_DIM
    long_run = dim > limit or (dim == limit and weight_class in (None, WeightClass.W8))
    if long_run and not allow_long_run:
        raise LongRunRefused(
            f"enumeration for t={dim}"
            + (f" class {weight_class.value}" if weight_class else "")
            + " is a multi-day run; pass allow_long_run to start it anyway"
        )


def build_root_task(
    dim: int, family: Family = Family.SIDON, weight_class: Optional[WeightClass] = None
) -> EnumTask:
    """Root of the search: {0, e_1..e_t} (or {e_1..e_t}) plus the class anchor"""

    base = PointSet.standard_base(dim, with_zero=family is Family.SIDON)
    allowed = np.ones(1 << dim, dtype=np.bool_)
    if weight_class is not None:
        if family is not Family.SIDON:
            raise ValidationError("weight classes only apply to the Sidon family")
        anchor, max_other_weight = weight_class_constraints(dim, weight_class)
        base = base.union([anchor.value])
        allowed = weight_table(dim) <= max_other_weight

    return EnumTask(
        dim=dim,
        family=family,
        base=base,
        weight_class=weight_class,
        prefix=base.elements,
        last=-1,
        allowed=allowed,
        members=SumBitmap.from_values(dim, base.elements).bits,
        sum2=k_sums(base, 2).bits,
        sum3=k_sums(base, 3).bits,
    )


@timer
def enumerate_maximal(
    dim: int,
    weight_class: Optional[Union[WeightClass, str]] = None,
    family: Family = Family.SIDON,
    workers: Optional[int] = None,
    collect_witnesses: bool = False,
    allow_long_run: bool = False,
    progress: bool = False,
) -> EnumResult:
    """Every maximal set of the family containing the normalized base"""

    wc = parse_weight_class(weight_class) if weight_class is not None else None
    check_enumeration_dim(dim, wc, allow_long_run)
    start = time.perf_counter()

    root = build_root_task(dim, family, wc)
    shallow, tasks = split_tasks(root, config.ENUM_SPLIT_DEPTH, collect_witnesses)
    enumerator = get_enumerator_instance(workers)
    logger.info(
        "Enumerating maximal %s sets in dim %d%s: %d subtrees on %s",
        family.value,
        dim,
        f" class {wc.value}" if wc else "",
        len(tasks),
        type(enumerator).__name__,
    )
    merged = merge_outcomes([shallow, *enumerator.run(tasks, collect_witnesses, progress)])

    result = EnumResult(
        dim=dim,
        family=family,
        weight_class=wc,
        size_histogram=merged.size_histogram,
        examples_per_size=merged.examples_per_size,
        nodes_visited=merged.nodes_visited,
        tasks=len(tasks),
        wall_time=time.perf_counter() - start,
        witnesses=merged.witnesses if collect_witnesses else None,
    )
    logger.info("Histogram %s after %d nodes", result.size_histogram, result.nodes_visited)
    return result


def smax_search(dim: int, workers: Optional[int] = None) -> int:
    """Maximal size of a Sidon set in F_2^dim"""

    if dim > config.MAX_SMAX_DIM:
        raise DimensionTooLarge(f"smax_search supports t <= {config.MAX_SMAX_DIM}, got t={dim}")
    return enumerate_maximal(dim, workers=workers).max_size


def sfsmax_search(dim: int, workers: Optional[int] = None) -> int:
    """Maximal size of a sum-free Sidon set in F_2^dim"""

    if dim > config.MAX_SMAX_DIM:
        raise DimensionTooLarge(f"sfsmax_search supports t <= {config.MAX_SMAX_DIM}, got t={dim}")
    return enumerate_maximal(dim, family=Family.SUM_FREE_SIDON, workers=workers).max_size


def brute_force_histogram(dim: int) -> Dict[int, int]:
    """Size histogram over every superset of {0, e_1..e_t}, without the search"""

    if dim < 1 or dim > BRUTE_FORCE_MAX_DIM:
        raise DimensionTooLarge(f"brute force supports 1 <= t <= {BRUTE_FORCE_MAX_DIM}, got t={dim}")

    base = PointSet.standard_base(dim)
    others = [v for v in range(1 << dim) if v not in base]
    histogram: Dict[int, int] = {}
    for mask in range(1 << len(others)):
        S = base.union(v for i, v in enumerate(others) if mask >> i & 1)
        if is_sidon(S) and is_maximal_sidon(S):
            histogram[S.size] = histogram.get(S.size, 0) + 1
    return dict(sorted(histogram.items()))
