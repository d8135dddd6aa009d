"""Depth-first extension search shared by every enumerator backend"""

from functools import lru_cache
from typing import Iterable, List, Tuple

import numpy as np
from numpy.typing import NDArray

from sidonlab.config import config
from sidonlab.models.enum_model import EnumTask, Family, TaskOutcome
from sidonlab.services.sums.bitmap import vector_range


@lru_cache(maxsize=4)
def xor_table(dim: int) -> NDArray[np.int64]:
    """table[g] is the permutation x -> x + g of F_2^dim"""

    values = vector_range(dim)
    table = values[:, None] ^ values[None, :]
    table.setflags(write=False)
    return table


def shifted(dim: int, g: int) -> NDArray[np.int64]:
    if dim <= config.XOR_TABLE_MAX_DIM:
        return xor_table(dim)[g]
    return vector_range(dim) ^ g


def extend(
    dim: int,
    members: NDArray[np.bool_],
    sum2: NDArray[np.bool_],
    sum3: NDArray[np.bool_],
    g: int,
) -> Tuple[NDArray[np.bool_], NDArray[np.bool_], NDArray[np.bool_]]:
    """Bitmaps of M + {g} from those of M.

    Sigma3 gains g + Sigma2[M] and Sigma2 gains g + M and 0.
    """

    shift = shifted(dim, g)
    child_sum3 = sum3 | sum2[shift]
    child_sum2 = sum2 | members[shift]
    child_sum2[0] = True
    child_members = members.copy()
    child_members[g] = True
    return child_members, child_sum2, child_sum3


def child_task(task: EnumTask, g: int) -> EnumTask:
    members, sum2, sum3 = extend(task.dim, task.members, task.sum2, task.sum3, g)
    return task.model_copy(
        update={
            "prefix": tuple(sorted(task.prefix + (g,))),
            "last": g,
            "members": members,
            "sum2": sum2,
            "sum3": sum3,
        }
    )


def _record(outcome: TaskOutcome, prefix: Iterable[int], collect_witnesses: bool) -> None:
    witness = tuple(sorted(prefix))
    size = len(witness)
    outcome.size_histogram[size] = outcome.size_histogram.get(size, 0) + 1
    best = outcome.examples_per_size.get(size)
    if best is None or witness < best:
        outcome.examples_per_size[size] = witness
    if collect_witnesses:
        outcome.witnesses.append(witness)


def run_task(task: EnumTask, collect_witnesses: bool = False) -> TaskOutcome:
    """Exhaust the subtree rooted at task.

    Children only use elements above the last added one, so every maximal
    set containing task.prefix is reached exactly once.
    """

    outcome = TaskOutcome()
    sum_free = task.family is Family.SUM_FREE_SIDON
    allowed = task.allowed
    dim = task.dim
    nodes = 0

    stack: List[tuple] = [(task.prefix, task.last, task.members, task.sum2, task.sum3)]
    while stack:
        prefix, last, members, sum2, sum3 = stack.pop()
        nodes += 1
        blocked = sum3 | sum2 if sum_free else sum3
        if blocked.all():
            _record(outcome, prefix, collect_witnesses)
            continue

        start = last + 1
        candidates = np.flatnonzero(~blocked[start:] & allowed[start:]) + start
        # reversed push keeps the pop order ascending
        for g in candidates[::-1].tolist():
            child_members, child_sum2, child_sum3 = extend(dim, members, sum2, sum3, g)
            stack.append((prefix + (g,), g, child_members, child_sum2, child_sum3))

    outcome.nodes_visited = nodes
    return outcome


def split_tasks(
    root: EnumTask, depth: int, collect_witnesses: bool = False
) -> Tuple[TaskOutcome, List[EnumTask]]:
    """Cut the tree at the given depth; leaves above the cut are recorded directly"""

    shallow = TaskOutcome()
    tasks: List[EnumTask] = []

    def descend(task: EnumTask, level: int) -> None:
        if level == depth:
            tasks.append(task)
            return
        shallow.nodes_visited += 1
        if task.blocked.all():
            _record(shallow, task.prefix, collect_witnesses)
            return
        for g in np.flatnonzero(task.candidate_mask).tolist():
            descend(child_task(task, g), level + 1)

    descend(root, 0)
    return shallow, tasks


def merge_outcomes(outcomes: Iterable[TaskOutcome]) -> TaskOutcome:
    """Order-preserving merge: histograms add, smallest witness per size wins"""

    merged = TaskOutcome()
    for outcome in outcomes:
        merged.nodes_visited += outcome.nodes_visited
        for size, count in outcome.size_histogram.items():
            merged.size_histogram[size] = merged.size_histogram.get(size, 0) + count
        for size, witness in outcome.examples_per_size.items():
            best = merged.examples_per_size.get(size)
            if best is None or witness < best:
                merged.examples_per_size[size] = witness
        merged.witnesses.extend(outcome.witnesses)
    merged.size_histogram = dict(sorted(merged.size_histogram.items()))
    merged.examples_per_size = dict(sorted(merged.examples_per_size.items()))
    return merged
