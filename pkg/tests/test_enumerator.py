import pytest

from sidonlab.config import config
from sidonlab.exceptions import (
    ConfigurationError,
    DimensionTooLarge,
    LongRunRefused,
    UnknownClass,
    UnsupportedDim,
    ValidationError,
)
from sidonlab.models.enum_model import Family, WeightClass
from sidonlab.models.vector_model import PointSet
from sidonlab.repositories.catalog_repository import KNOWN_SMAX
from sidonlab.services.enumerator.enumeration import (
    brute_force_histogram,
    build_root_task,
    check_enumeration_dim,
    enumerate_maximal,
    sfsmax_search,
    smax_search,
    weight_class_constraints,
)
from sidonlab.services.enumerator.factory import get_enumerator_instance
from sidonlab.services.enumerator.pool_enumerator import PoolEnumerator
from sidonlab.services.enumerator.search import extend, run_task, split_tasks
from sidonlab.services.enumerator.serial_enumerator import SerialEnumerator
from sidonlab.services.sums.bitmap import SumBitmap
from sidonlab.services.sums.sidon import is_maximal_sidon, is_maximal_sum_free_sidon, k_sums


@pytest.mark.parametrize("dim", [1, 2, 3, 4])
def test_small_dims_match_brute_force(dim):
    assert enumerate_maximal(dim, workers=1).size_histogram == brute_force_histogram(dim)


def test_dim5_sizes():
    result = enumerate_maximal(5, workers=1)
    assert list(result.size_histogram) == [7]
    assert result.size_histogram[7] > 0


def test_dim6_sizes():
    assert list(enumerate_maximal(6, workers=1).size_histogram) == [8, 9]


def test_witnesses_are_maximal_and_counted():
    result = enumerate_maximal(5, workers=1, collect_witnesses=True)
    assert len(result.witnesses) == result.total
    assert len(set(result.witnesses)) == result.total
    for witness in result.witnesses:
        M = PointSet.of(5, witness)
        assert is_maximal_sidon(M)
        assert set(PointSet.standard_base(5).elements) <= set(witness)


def test_examples_are_smallest_witnesses():
    result = enumerate_maximal(6, workers=1, collect_witnesses=True)
    for size, example in result.examples_per_size.items():
        assert example == min(w for w in result.witnesses if len(w) == size)


def test_result_does_not_depend_on_split_depth(monkeypatch):
    monkeypatch.setattr(config, "ENUM_SPLIT_DEPTH", 1)
    shallow = enumerate_maximal(5, workers=1)
    monkeypatch.setattr(config, "ENUM_SPLIT_DEPTH", 2)
    deep = enumerate_maximal(5, workers=1)
    assert shallow.size_histogram == deep.size_histogram
    assert shallow.examples_per_size == deep.examples_per_size


def test_pool_matches_serial():
    root = build_root_task(5)
    shallow, tasks = split_tasks(root, 2)
    serial = SerialEnumerator().run(tasks)
    pooled = PoolEnumerator(workers=2).run(tasks)
    assert [o.size_histogram for o in serial] == [o.size_histogram for o in pooled]


def test_worker_count_does_not_change_output(monkeypatch):
    monkeypatch.setattr(config, "ENUMERATOR_TYPE", "mpire")
    serial = enumerate_maximal(6, workers=1, collect_witnesses=True)
    pooled = enumerate_maximal(6, workers=3, collect_witnesses=True)
    assert serial.size_histogram == pooled.size_histogram
    assert set(serial.size_histogram) == {8, 9}
    assert serial.examples_per_size == pooled.examples_per_size
    assert serial.witnesses == pooled.witnesses
    assert serial.tasks == pooled.tasks


def test_extend_matches_direct_sums():
    base = PointSet.standard_base(4)
    root = build_root_task(4)
    members, sum2, sum3 = extend(4, root.members, root.sum2, root.sum3, 15)
    grown = base.union([15])
    assert SumBitmap(4, sum2) == k_sums(grown, 2)
    assert SumBitmap(4, sum3) == k_sums(grown, 3)
    assert members[15]


def test_run_task_on_root_counts_every_node():
    outcome = run_task(build_root_task(4))
    assert outcome.size_histogram == brute_force_histogram(4)
    assert outcome.nodes_visited >= sum(outcome.size_histogram.values())


@pytest.mark.parametrize(
    "wc, anchor, max_weight",
    [("W4", 15, 4), ("W5", 31, 5), ("W6", 63, 6), ("W7", 127, 6), ("W8", 255, 5)],
)
def test_weight_class_constraints(wc, anchor, max_weight):
    vector, limit = weight_class_constraints(8, wc)
    assert (vector.value, limit) == (anchor, max_weight)


def test_weight_class_root_task():
    root = build_root_task(8, weight_class=WeightClass.W7)
    assert 127 in root.base
    assert not root.allowed[255] and not root.allowed[127] and root.allowed[63]


def test_weight_class_errors():
    with pytest.raises(UnsupportedDim):
        weight_class_constraints(7, "W4")
    with pytest.raises(UnknownClass):
        weight_class_constraints(8, "W9")
    with pytest.raises(ValidationError):
        build_root_task(8, family=Family.SUM_FREE_SIDON, weight_class=WeightClass.W4)


def test_long_run_guard():
    with pytest.raises(LongRunRefused):
        check_enumeration_dim(8, WeightClass.W8)
    with pytest.raises(LongRunRefused):
        check_enumeration_dim(8)
    with pytest.raises(LongRunRefused):
        check_enumeration_dim(9, allow_long_run=False)
    check_enumeration_dim(8, WeightClass.W4)
    check_enumeration_dim(8, allow_long_run=True)
    with pytest.raises(DimensionTooLarge):
        check_enumeration_dim(29, allow_long_run=True)


@pytest.mark.parametrize("dim", range(1, 7))
def test_smax_is_sfsmax_plus_one(dim):
    assert smax_search(dim, workers=1) == KNOWN_SMAX[dim]
    assert sfsmax_search(dim, workers=1) + 1 == KNOWN_SMAX[dim]


def test_sum_free_family_leaves_are_maximal():
    result = enumerate_maximal(5, family=Family.SUM_FREE_SIDON, workers=1, collect_witnesses=True)
    for witness in result.witnesses:
        assert 0 not in witness
        assert is_maximal_sum_free_sidon(PointSet.of(5, witness))


def test_smax_search_guard():
    with pytest.raises(DimensionTooLarge):
        smax_search(8)


def test_factory(monkeypatch):
    assert isinstance(get_enumerator_instance(1), SerialEnumerator)
    monkeypatch.setattr(config, "ENUMERATOR_TYPE", "mpire")
    assert isinstance(get_enumerator_instance(3), PoolEnumerator)
    monkeypatch.setattr(config, "ENUMERATOR_TYPE", "serial")
    assert isinstance(get_enumerator_instance(3), SerialEnumerator)


@pytest.mark.slow
def test_dim7_count():
    result = enumerate_maximal(7)
    assert result.size_histogram == {12: 524160}


def test_enumerator_needs_a_worker():
    with pytest.raises(ConfigurationError):
        PoolEnumerator(workers=0)
