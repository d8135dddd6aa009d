import pytest

from sidonlab.exceptions import (
    InsufficientSpan,
    NotSidon,
    NotSumFreeSidon,
    TooSmall,
    UnsupportedK,
    WeightTooSmall,
    ZeroNotMember,
)
from sidonlab.models.sidon_model import ExtensionClass
from sidonlab.models.vector_model import PointSet
from sidonlab.services.gf2.linalg import apply_affine, random_affine
from sidonlab.services.sums.bitmap import SumBitmap
from sidonlab.services.sums.sidon import (
    analyze_set,
    extension_candidates,
    four_sum_coverage,
    is_maximal_sidon,
    is_maximal_sum_free_sidon,
    is_sidon,
    is_sum_free,
    k_star_sums,
    k_sums,
    normalize,
    normalize_weight,
    sidon_characterizations,
    strip_zero,
    sum_free_extension_class,
)


def _set(dim, *values):
    return PointSet.of(dim, values)


def _random_set(rng, dim, size):
    return PointSet.of(dim, rng.choice(1 << dim, size=size, replace=False).tolist())


class TestSumBitmaps:
    def test_two_star_sums(self, m4):
        assert k_star_sums(_set(2, 0, 1, 2), 2).members() == [1, 2, 3]
        assert k_star_sums(m4, 2).cardinality == 15

    def test_star_sums_of_small_sets_are_empty(self):
        assert k_star_sums(_set(4, 1, 2, 4), 4).is_empty()

    def test_k_sums_examples(self):
        assert k_sums(_set(3, 5), 2).members() == [0]
        assert k_sums(_set(4, 0, 1, 2, 4), 3).members() == list(range(8))
        assert k_sums(PointSet(dim=3), 3).is_empty()

    def test_unsupported_k(self, m4):
        with pytest.raises(UnsupportedK):
            k_sums(m4, 5)

    def test_identities_on_random_sets(self, rng):
        for dim in range(1, 11):
            for _ in range(5):
                M = _random_set(rng, dim, int(rng.integers(1, min(12, 1 << dim) + 1)))
                zero = SumBitmap.from_values(dim, [0])
                members = SumBitmap.from_values(dim, M.elements)
                assert k_sums(M, 2) == k_star_sums(M, 2) | zero
                assert k_sums(M, 3) == k_star_sums(M, 3) | members
                assert k_sums(M, 4) == k_star_sums(M, 4) | k_star_sums(M, 2) | zero


class TestPredicates:
    def test_is_sidon(self, m4, example_dim7):
        assert is_sidon(m4)
        assert not is_sidon(_set(2, 0, 1, 2, 3))
        assert is_sidon(example_dim7)

    def test_is_sum_free(self):
        assert not is_sum_free(_set(3, 0, 5))
        assert is_sum_free(_set(3, 1, 2, 4))
        odd = PointSet.of(4, range(1, 16, 2))
        assert odd.size == 8 and is_sum_free(odd)

    def test_characterizations_agree(self, rng):
        for dim in range(2, 9):
            for _ in range(10):
                M = _random_set(rng, dim, int(rng.integers(1, min(10, 1 << dim) + 1)))
                assert set(sidon_characterizations(M)) == {is_sidon(M)}

    def test_affine_invariance(self, catalog):
        for M in list(catalog.canonical().values()) + list(catalog.examples().values()):
            for seed in range(5):
                image = apply_affine(random_affine(M.dim, seed=seed), M)
                assert is_sidon(image)
                assert is_maximal_sidon(image) == is_maximal_sidon(M)

    def test_translation_rule(self, rng):
        for dim in (3, 5, 8):
            M = _random_set(rng, dim, dim + 1)
            three = k_sums(M, 3)
            for a in range(1 << dim):
                translated = PointSet.of(dim, [m ^ a for m in M.elements])
                assert is_sum_free(translated) == (a not in three)


class TestExtension:
    def test_extension_candidates(self, m4):
        assert extension_candidates(_set(4, 0, 1, 2, 4)).members() == list(range(8, 16))
        assert extension_candidates(m4).is_empty()
        assert extension_candidates(PointSet(dim=3)).is_full()

    def test_candidates_are_exactly_the_sidon_extensions(self, rng):
        M = _set(6, 0, 1, 2, 4, 8, 16, 32)
        candidates = extension_candidates(M)
        for g in range(64):
            if g not in M:
                assert is_sidon(M.union([g])) == (g in candidates)

    def test_candidates_need_sidon(self):
        with pytest.raises(NotSidon):
            extension_candidates(_set(2, 0, 1, 2, 3))

    def test_maximality(self, catalog, m4):
        assert is_maximal_sidon(catalog.get("M_5"))
        assert is_maximal_sidon(catalog.get("M_6b"))
        assert not is_maximal_sidon(m4.without(15))

    @pytest.mark.parametrize(
        "values, dim, g, expected",
        [
            ((1, 2, 4), 3, 0, ExtensionClass.SIDON_NOT_SUM_FREE),
            ((1, 2, 4), 3, 7, ExtensionClass.NOT_SIDON),
            ((1, 2, 4), 4, 8, ExtensionClass.SUM_FREE_SIDON),
            ((1, 2, 4), 3, 2, ExtensionClass.ALREADY_MEMBER),
        ],
    )
    def test_sum_free_extension_class(self, values, dim, g, expected):
        assert sum_free_extension_class(PointSet.of(dim, values), g) is expected

    def test_sum_free_extension_needs_sum_free_sidon(self, m4):
        with pytest.raises(NotSumFreeSidon):
            sum_free_extension_class(m4, 3)

    def test_strip_zero(self, m4):
        stripped = strip_zero(m4)
        assert stripped.elements == (1, 2, 4, 8, 15)
        assert is_sum_free(stripped) and is_sidon(stripped)
        assert is_maximal_sum_free_sidon(stripped)
        assert strip_zero(_set(3, 0)).size == 0
        assert strip_zero(_set(2, 0, 1, 2)).elements == (1, 2)
        with pytest.raises(ZeroNotMember):
            strip_zero(_set(3, 1, 2))
        with pytest.raises(NotSidon):
            strip_zero(_set(3, 0, 1, 2, 3))

    def test_strip_zero_of_greedy_sidon_sets(self, rng):
        for dim in range(3, 8):
            M = _set(dim, 0)
            for g in rng.permutation(range(1, 1 << dim)).tolist():
                if is_sidon(M.union([g])):
                    M = M.union([g])
                    stripped = strip_zero(M)
                    assert is_sum_free(stripped) and is_sidon(stripped)


class TestNormalize:
    def test_base_already_contained(self, m4):
        _, image = normalize(m4)
        assert set(PointSet.standard_base(4).elements) <= set(image.elements)

    def test_round_trip_through_random_map(self, m4):
        for seed in range(10):
            _, image = normalize(apply_affine(random_affine(4, seed=seed), m4))
            assert set(PointSet.standard_base(4).elements) <= set(image.elements)
            assert is_maximal_sidon(image)

    def test_set_without_zero(self):
        _, image = normalize(_set(4, 1, 2, 4, 8, 15))
        assert set(PointSet.standard_base(4).elements) <= set(image.elements)

    def test_preconditions(self):
        with pytest.raises(TooSmall):
            normalize(_set(4, 0, 1, 2))
        with pytest.raises(InsufficientSpan):
            normalize(_set(4, 0, 1, 2, 3, 4))
        with pytest.raises(InsufficientSpan):
            # full linear span, but the five points lie in the affine hyperplane of odd weight
            normalize(_set(4, 1, 2, 4, 8, 7))

    def test_normalize_weight(self):
        T, image = normalize_weight(_set(5, 0, 1, 2, 4, 8, 16, 3), 3)
        assert image == _set(5, 0, 1, 2, 4, 8, 16, 3)
        _, image = normalize_weight(_set(5, 0, 1, 2, 4, 8, 16, 22), 22)
        assert 7 in image
        with pytest.raises(WeightTooSmall):
            normalize_weight(_set(5, 0, 1, 2, 4, 8, 16), 4)


class TestCoverage:
    def test_large_sets_cover(self, m4):
        assert four_sum_coverage(m4, 4) == (True, True)

    def test_standard_base_does_not_cover(self):
        covers, _ = four_sum_coverage(PointSet.standard_base(5), 4)
        assert not covers

    def test_empty_set(self):
        assert four_sum_coverage(PointSet(dim=3), 0) == (False, False)


def test_analyze_set(example_dim7):
    report = analyze_set(example_dim7)
    assert report.size == 12 and report.is_maximal_sidon
    assert report.two_star_count == 66
    assert report.candidate_count == 0


def test_bitmap_translate():
    bitmap = SumBitmap.from_values(3, [0, 1, 6])
    assert bitmap.translate(1).to_point_set() == PointSet.of(3, [0, 1, 7])
    assert bitmap.complement().cardinality == 5
