import pytest

from sidonlab.exceptions import DimMismatch, NonInvertibleMap
from sidonlab.models.vector_model import AffineMap, GF2Vector, LinearMap, PointSet
from sidonlab.services.gf2.linalg import (
    GF2Eliminator,
    affine_span_dim,
    apply_affine,
    compose_affine,
    identity_affine,
    invert_affine,
    invert_linear,
    linear_rank,
    random_affine,
    rank_of,
    span_dim,
    weight,
)


@pytest.mark.parametrize("value, expected", [(0, 0), (15, 4), (87, 5)])
def test_weight(value, expected):
    assert weight(GF2Vector(value=value, dim=7)) == expected


def test_weight_is_subadditive(rng):
    for _ in range(200):
        v, w = (int(x) for x in rng.integers(0, 1 << 10, size=2))
        assert weight(v ^ w) <= weight(v) + weight(w)


def test_span_dim_examples(m4):
    assert span_dim(PointSet(dim=5)) == 0
    assert span_dim(PointSet.standard_base(5, with_zero=False)) == 5
    assert span_dim(m4) == 4


def test_affine_span_differs_from_linear_span():
    # three points are linearly independent but only span an affine plane
    M = PointSet.of(3, [1, 2, 4])
    assert span_dim(M) == 3
    assert affine_span_dim(M) == 2


def test_eliminator_tracks_dependencies():
    eliminator = GF2Eliminator()
    assert eliminator.add(3) == (True, 0)
    assert eliminator.add(5) == (True, 0)
    independent, mask = eliminator.add(6)
    assert not independent
    assert mask == 0b111
    assert eliminator.rank == 2
    assert eliminator.contains(6) and not eliminator.contains(8)


def test_identity_map_keeps_set(m4):
    assert apply_affine(identity_affine(4), m4) == m4


def test_shift_map_carries_m5_variant(catalog):
    assert apply_affine(catalog.shift_map(5), catalog.get("M'_5")) == catalog.get("M_5")


def test_random_affine_is_deterministic_and_invertible():
    assert random_affine(4, seed=7) == random_affine(4, seed=7)
    T = random_affine(6, seed=11)
    assert linear_rank(T.linear) == 6
    identity = compose_affine(invert_affine(T), T)
    assert all(identity.apply(v) == v for v in range(1 << 6))


def test_apply_affine_preserves_cardinality(m4):
    for seed in range(20):
        assert apply_affine(random_affine(4, seed=seed), m4).size == m4.size


def test_invert_linear_rejects_singular_map():
    with pytest.raises(NonInvertibleMap):
        invert_linear(LinearMap(dim=3, columns=(1, 2, 3)))


def test_apply_affine_rejects_other_dimension(m4):
    with pytest.raises(DimMismatch):
        apply_affine(identity_affine(5), m4)


def test_rank_of_is_invariant_under_invertible_maps(rng):
    T = random_affine(6, seed=3)
    values = [int(v) for v in rng.choice(64, size=5, replace=False)]
    assert rank_of(values) == rank_of(T.linear.apply(v) for v in values)


def test_affine_map_rejects_out_of_range_translation():
    with pytest.raises(ValueError):
        AffineMap(linear=LinearMap.identity(3), translation=8)
