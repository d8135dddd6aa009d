"""Verify controller - reproduction checks of the known Sidon set results"""

import time
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from sidonlab.config import config
from sidonlab.dependency import get_catalog
from sidonlab.exceptions import SidonLabException
from sidonlab.models.code_model import DistanceClass
from sidonlab.models.enum_model import EnumResult, Family, WeightClass
from sidonlab.models.sidon_model import ExtensionClass
from sidonlab.models.vector_model import AffineMap, PointSet
from sidonlab.models.verify_model import VerifyLevel, VerifyOutcome, VerifyStatus
from sidonlab.repositories.catalog_repository import KNOWN_SMAX, MAXIMAL_SIZES
from sidonlab.services.bounds.lambda_bound import COR19_DIMS, cor19_table, new_bound
from sidonlab.services.bounds.proof_check import proof_case_check
from sidonlab.services.bounds.trivial import floor_equality_check, trivial_bound
from sidonlab.services.codes.associated_code import (
    code_nonexistent,
    covering_radius,
    exact_min_distance,
    min_distance_class,
)
from sidonlab.services.enumerator.enumeration import (
    brute_force_histogram,
    build_root_task,
    enumerate_maximal,
    weight_class_constraints,
)
from sidonlab.services.enumerator.equivalence import affine_equivalent
from sidonlab.services.gf2.linalg import apply_affine, random_affine, rank_of, weight
from sidonlab.services.sums.sidon import (
    extension_candidates,
    four_sum_coverage,
    is_maximal_sidon,
    is_maximal_sum_free_sidon,
    is_sidon,
    is_sum_free,
    k_star_sums,
    k_sums,
    sidon_characterizations,
    strip_zero,
    sum_free_extension_class,
)
from sidonlab.services.sums.bitmap import SumBitmap
from sidonlab.utils.logger import setuplog

logger = setuplog(__name__)

CheckResult = Tuple[str, str]

EXPECTED_TRIVIAL = {4: 6, 5: 8, 6: 11, 7: 16, 8: 23, 9: 32, 10: 45, 11: 64, 12: 91, 13: 128, 14: 181, 15: 256}
EXPECTED_NEW = {6: 10, 7: 14, 8: 21, 9: 30, 10: 43, 11: 62, 12: 90, 13: 126, 14: 180, 15: 254}

# t -> (F, a, b, lambda, n, k)
COR19_EXPECTED = {
    16: (362, 119, 1, 2, 360, 344),
    18: (724, 240, 0, 1, 723, 705),
    20: (1448, 481, 1, 2, 1446, 1426),
    22: (2896, 964, 0, 1, 2895, 2873),
    24: (5793, 1929, 2, 2, 5791, 5767),
    26: (11585, 3860, 1, 2, 11583, 11557),
}

T7_HISTOGRAM = {12: 524160}
AFFINE_MAPS_PER_DIM = 100
INVARIANT_SETS_PER_DIM = 6
EVEN_T_MAX = 64


def _violations(count: int) -> CheckResult:
    return "0 violations", f"{count} violations"


def _random_set(rng: np.random.Generator, dim: int, size: int, nonzero: bool = False) -> PointSet:
    low = 1 if nonzero else 0
    values = rng.choice(np.arange(low, 1 << dim), size=size, replace=False)
    return PointSet.of(dim, values.tolist())


def _random_sum_free_sidon_chain(rng: np.random.Generator, dim: int) -> List[PointSet]:
    """Prefixes of a random greedy chain of sum-free Sidon sets, ending maximal"""

    chain: List[PointSet] = []
    M = PointSet(dim=dim)
    for g in rng.permutation(np.arange(1, 1 << dim)).tolist():
        if sum_free_extension_class(M, g) is ExtensionClass.SUM_FREE_SIDON:
            M = M.union([g])
            chain.append(M)
    return chain


class VerifyController:
    """Runs every reproduction check and reports one outcome per check"""

    def __init__(self, workers: Optional[int] = None) -> None:
        self.workers = workers
        self.catalog = get_catalog()
        self._enumerations: Dict[int, EnumResult] = {}

    def checks(self, level: VerifyLevel) -> List[Tuple[str, Callable[[], CheckResult]]]:
        fast = [
            ("small-dim maximal sizes", self.check_small_dim_sizes),
            ("small-dim affine equivalences", self.check_small_dim_equivalences),
            ("example sets maximal", self.check_example_set_sizes),
            ("enumeration t<=4 vs brute force", self.check_small_enumeration),
            ("enumeration t=5", lambda: self.check_histogram_support(5, (7,))),
            ("enumeration t=6", lambda: self.check_histogram_support(6, (8, 9))),
            ("enumeration witnesses maximal", self.check_witness_soundness),
            ("dim-8 weight classes", self.check_weight_classes),
            ("smax t=1..6", self.check_smax),
            ("smax = sfsmax + 1", self.check_sfsmax),
            ("trivial bound rows", self.check_trivial_bound_rows),
            ("new bound rows", self.check_new_bound_rows),
            ("cor19 table", self.check_cor19),
            ("cor19 t=24 both lengths", self.check_cor19_t24),
            ("proof chain even t<=64", self.check_proof_chains),
            ("floor equality even t<=64", self.check_floor_equality),
            ("codes oracle", self.check_codes_oracle),
            ("maximal sets give R=3, d=5", self.check_maximal_codes),
            ("sum-free Sidon covering radius", self.check_sum_free_radius),
            ("k-sum identities", self.check_sum_identities),
            ("sidon characterizations", self.check_characterizations),
            ("affine invariance", self.check_affine_invariance),
            ("sum-free translation rule", self.check_translation_rule),
            ("extension soundness", self.check_extension_soundness),
            ("four-sum coverage", self.check_four_sum_coverage),
        ]
        if level is VerifyLevel.FULL:
            fast.append(("enumeration t=7", self.check_t7_enumeration))
        return fast

    def run(self, level: VerifyLevel = VerifyLevel.FAST) -> List[VerifyOutcome]:
        outcomes = []
        for name, check in self.checks(level):
            outcomes.append(self._run_check(name, check))
        failed = sum(o.status is VerifyStatus.FAIL for o in outcomes)
        logger.info("Verify %s: %d checks, %d failed", level.value, len(outcomes), failed)
        return outcomes

    def _run_check(self, name: str, check: Callable[[], CheckResult]) -> VerifyOutcome:
        start = time.perf_counter()
        try:
            expected, actual = check()
            status = VerifyStatus.PASS if expected == actual else VerifyStatus.FAIL
        except SidonLabException as e:
            logger.error("Check %r raised %s: %s", name, type(e).__name__, e)
            expected, actual, status = "no error", f"{type(e).__name__}: {e}", VerifyStatus.FAIL
        except Exception as e:
            logger.exception("Check %r crashed", name)
            expected, actual, status = "no error", f"{type(e).__name__}: {e}", VerifyStatus.FAIL
        if status is VerifyStatus.FAIL:
            logger.warning("Check %r failed: expected %s, got %s", name, expected, actual)
        return VerifyOutcome(
            check_name=name,
            status=status,
            expected=expected,
            actual=actual,
            seconds=time.perf_counter() - start,
        )

    def _enumeration(self, dim: int) -> EnumResult:
        """Witness-collecting enumeration, computed once per dimension"""

        if dim not in self._enumerations:
            workers = 1 if dim <= 6 else self.workers
            self._enumerations[dim] = enumerate_maximal(dim, workers=workers, collect_witnesses=dim <= 6)
        return self._enumerations[dim]

    # Classification and enumeration

    def check_small_dim_sizes(self) -> CheckResult:
        sizes = []
        for name, M in self.catalog.canonical().items():
            sizes.append(str(M.size) if is_maximal_sidon(M) else f"{name} not maximal")
        return "2,3,4,6,7,9,8", ",".join(sizes)

    def check_small_dim_equivalences(self) -> CheckResult:
        found = []
        for source, target in self.catalog.equivalent_pairs():
            T = affine_equivalent(source, target)
            found.append("ok" if T is not None and apply_affine(T, source) == target else "missing")
        distinct = affine_equivalent(self.catalog.get("M_6a"), self.catalog.get("M_6b"))
        found.append("distinct" if distinct is None else "merged")
        for source, target, dim in (("M'_5", "M_5", 5), ("M'_6a", "M_6a", 6)):
            image = apply_affine(self.catalog.shift_map(dim), self.catalog.get(source))
            found.append("ok" if image == self.catalog.get(target) else "shift fails")
        expected = ["ok"] * len(self.catalog.equivalent_pairs()) + ["distinct", "ok", "ok"]
        return ",".join(expected), ",".join(found)

    def check_example_set_sizes(self) -> CheckResult:
        sizes = []
        for name, M in self.catalog.examples().items():
            sizes.append(str(M.size) if is_maximal_sidon(M) else f"{name} not maximal")
        return "12,15,16,18", ",".join(sizes)

    def check_small_enumeration(self) -> CheckResult:
        expected, actual = [], []
        for dim in range(1, 5):
            expected.append(f"{dim}:{brute_force_histogram(dim)}")
            actual.append(f"{dim}:{self._enumeration(dim).size_histogram}")
        return "; ".join(expected), "; ".join(actual)

    def check_histogram_support(self, dim: int, sizes: Tuple[int, ...]) -> CheckResult:
        support = tuple(self._enumeration(dim).size_histogram)
        return str(sizes), str(support)

    def check_witness_soundness(self) -> CheckResult:
        bad = 0
        for dim in range(1, 7):
            result = self._enumeration(dim)
            witnesses = result.witnesses or []
            if len(witnesses) != result.total:
                bad += 1
            for witness in witnesses:
                if not is_maximal_sidon(PointSet.of(dim, witness)):
                    bad += 1
        return _violations(bad)

    def check_weight_classes(self) -> CheckResult:
        """Anchors, weight filters and the achieved dim-8 sizes"""

        bad = 0
        for wc in WeightClass:
            anchor, max_other = weight_class_constraints(8, wc)
            root = build_root_task(8, weight_class=wc)
            allowed = {v for v in range(1 << 8) if root.allowed[v]}
            if weight(anchor.value) != int(wc.value[1:]) or anchor.value not in root.base:
                bad += 1
            if allowed != {v for v in range(1 << 8) if weight(v) <= max_other}:
                bad += 1
            if not is_sidon(root.base):
                bad += 1
        sizes = tuple(M.size for M in self.catalog.examples().values() if M.dim == 8)
        if sizes != MAXIMAL_SIZES[8]:
            bad += 1
        return _violations(bad)

    def check_smax(self) -> CheckResult:
        expected = ",".join(str(KNOWN_SMAX[t]) for t in range(1, 7))
        actual = ",".join(str(self._enumeration(t).max_size) for t in range(1, 7))
        return expected, actual

    def check_sfsmax(self) -> CheckResult:
        expected, actual = [], []
        for t in range(1, 7):
            sfsmax = enumerate_maximal(t, family=Family.SUM_FREE_SIDON, workers=1).max_size
            expected.append(str(self._enumeration(t).max_size))
            actual.append(str(sfsmax + 1))
        return ",".join(expected), ",".join(actual)

    def check_t7_enumeration(self) -> CheckResult:
        result = self._enumeration(7)
        return f"{T7_HISTOGRAM}, smax=12", f"{result.size_histogram}, smax={result.max_size}"

    # Bounds

    def check_trivial_bound_rows(self) -> CheckResult:
        return str(EXPECTED_TRIVIAL), str({t: trivial_bound(t) for t in EXPECTED_TRIVIAL})

    def check_new_bound_rows(self) -> CheckResult:
        return str(EXPECTED_NEW), str({t: new_bound(t) for t in EXPECTED_NEW})

    def check_cor19(self) -> CheckResult:
        actual = {row.t: (row.F, row.a, row.b, row.lam, row.n, row.k) for row in cor19_table()}
        return str({t: COR19_EXPECTED[t] for t in COR19_DIMS}), str(actual)

    def check_cor19_t24(self) -> CheckResult:
        return "True,True", f"{code_nonexistent(24, 5791)},{code_nonexistent(24, 5792)}"

    def check_proof_chains(self) -> CheckResult:
        closed = [proof_case_check(t).inequality_holds for t in range(6, EVEN_T_MAX + 1, 2)]
        return _violations(closed.count(False))

    def check_floor_equality(self) -> CheckResult:
        equal = [floor_equality_check(t) for t in range(2, EVEN_T_MAX + 1, 2)]
        return _violations(equal.count(False))

    # Codes

    def check_codes_oracle(self) -> CheckResult:
        """Distance classes against brute force; half the sets are greedy sum-free Sidon"""

        rng = np.random.default_rng(config.VERIFY_SEED)
        bad = 0
        for i in range(config.VERIFY_RANDOM_SETS):
            dim = int(rng.integers(3, 9))
            if i % 2:
                chain = [M for M in _random_sum_free_sidon_chain(rng, dim) if M.size >= dim + 1]
                if not chain:
                    continue
                M = chain[int(rng.integers(len(chain)))]
            else:
                size = int(rng.integers(dim + 1, min(18, (1 << dim) - 1) + 1))
                M = _random_set(rng, dim, size, nonzero=True)
            d = exact_min_distance(M)
            d_class = min_distance_class(M)
            agrees = d is not None and (
                d_class is DistanceClass.D6_OR_MORE and d >= 6 or d_class.lower_bound == d
            )
            prop13 = (d is not None and d >= 4) == is_sum_free(M) and (d is not None and d >= 5) == (
                is_sum_free(M) and is_sidon(M)
            )
            if not (agrees and prop13):
                logger.warning("codes oracle mismatch on %s: d=%s class=%s", M.to_literal(), d, d_class.value)
                bad += 1
        return _violations(bad)

    def _maximal_sets(self) -> List[PointSet]:
        sets = [PointSet.of(dim, w) for dim in range(4, 7) for w in self._enumeration(dim).witnesses or []]
        sets.append(self.catalog.get("T1_7_12"))
        return sets

    def check_maximal_codes(self) -> CheckResult:
        bad = 0
        for M in self._maximal_sets():
            S = strip_zero(M)
            if rank_of(S.elements) != M.dim or covering_radius(S) != 3:
                bad += 1
            elif S.size >= KNOWN_SMAX[M.dim - 1] + 1 and min_distance_class(S) is not DistanceClass.D5:
                bad += 1
        return _violations(bad)

    def check_sum_free_radius(self) -> CheckResult:
        """R is 3 or 4 past smax(t-1), and 3 exactly for the maximal ones"""

        rng = np.random.default_rng(config.VERIFY_SEED + 1)
        bad = 0
        for dim in (5, 6, 7):
            for _ in range(INVARIANT_SETS_PER_DIM):
                for M in _random_sum_free_sidon_chain(rng, dim):
                    if M.size < max(dim + 1, KNOWN_SMAX[dim - 1]):
                        continue
                    R = covering_radius(M)
                    if R not in (3, 4) or (R == 3) != is_maximal_sum_free_sidon(M):
                        bad += 1
        return _violations(bad)

    # Invariants

    def check_sum_identities(self) -> CheckResult:
        rng = np.random.default_rng(config.VERIFY_SEED + 2)
        bad = 0
        for dim in range(1, 11):
            for _ in range(INVARIANT_SETS_PER_DIM):
                M = _random_set(rng, dim, int(rng.integers(1, min(12, 1 << dim) + 1)))
                zero = SumBitmap.from_values(dim, [0])
                members = SumBitmap.from_values(dim, M.elements)
                star2, star4 = k_star_sums(M, 2), k_star_sums(M, 4)
                bad += k_sums(M, 2) != star2 | zero
                bad += k_sums(M, 3) != k_star_sums(M, 3) | members
                bad += k_sums(M, 4) != star4 | star2 | zero
        return _violations(bad)

    def check_characterizations(self) -> CheckResult:
        rng = np.random.default_rng(config.VERIFY_SEED + 3)
        bad = 0
        for dim in range(2, 9):
            for _ in range(INVARIANT_SETS_PER_DIM):
                M = _random_set(rng, dim, int(rng.integers(1, min(10, 1 << dim) + 1)))
                if len(set(sidon_characterizations(M)) | {is_sidon(M)}) != 1:
                    bad += 1
        return _violations(bad)

    def _sidon_samples(self, rng: np.random.Generator, dim: int) -> List[PointSet]:
        samples = [M for M in self.catalog.canonical().values() if M.dim == dim]
        samples += [M for M in self.catalog.examples().values() if M.dim == dim]
        for _ in range(2):
            chain = _random_sum_free_sidon_chain(rng, dim)
            if chain:
                samples.append(chain[-1].union([0]))
        samples.append(_random_set(rng, dim, min(dim + 2, 1 << dim)))
        return samples

    def check_affine_invariance(self) -> CheckResult:
        rng = np.random.default_rng(config.VERIFY_SEED + 4)
        bad = 0
        for dim in range(1, 9):
            samples = self._sidon_samples(rng, dim)
            for i in range(AFFINE_MAPS_PER_DIM):
                T = random_affine(dim, seed=0, rng=rng)
                M = samples[i % len(samples)]
                image = apply_affine(T, M)
                bad += is_sidon(image) != is_sidon(M)
                if is_sidon(M):
                    bad += is_maximal_sidon(image) != is_maximal_sidon(M)
                L = AffineMap(linear=T.linear)
                bad += is_sum_free(apply_affine(L, M)) != is_sum_free(M)
        return _violations(bad)

    def check_translation_rule(self) -> CheckResult:
        rng = np.random.default_rng(config.VERIFY_SEED + 5)
        bad = 0
        for dim in range(2, 9):
            for M in self._sidon_samples(rng, dim)[:3]:
                three = k_sums(M, 3)
                members = SumBitmap.from_values(dim, M.elements)
                for a in range(1 << dim):
                    translated = members.translate(a).to_point_set()
                    bad += is_sum_free(translated) != (a not in three)
        return _violations(bad)

    def check_extension_soundness(self) -> CheckResult:
        rng = np.random.default_rng(config.VERIFY_SEED + 6)
        bad = 0
        for dim in range(2, 8):
            chain = _random_sum_free_sidon_chain(rng, dim)
            M = chain[len(chain) // 2]
            candidates = extension_candidates(M)
            for g in range(1 << dim):
                if g in M:
                    continue
                bad += is_sidon(M.union([g])) != (g in candidates)
        return _violations(bad)

    def check_four_sum_coverage(self) -> CheckResult:
        bad = 0
        for M in self._maximal_sets():
            if M.dim > 6 or M.size <= KNOWN_SMAX[M.dim - 1]:
                continue
            if four_sum_coverage(M, KNOWN_SMAX[M.dim - 1]) != (True, True):
                bad += 1
        return _violations(bad)
