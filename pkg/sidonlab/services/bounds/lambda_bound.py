"""The even-t bound F - lambda and the tables built from it"""

import csv
import io
from decimal import ROUND_DOWN, Decimal
from fractions import Fraction
from typing import Dict, List

from sidonlab.exceptions import OutOfDomain
from sidonlab.models.bound_model import BoundRow, Cor19Row, EpsilonClass, LambdaBreakdown
from sidonlab.services.bounds.surd import Surd
from sidonlab.services.bounds.trivial import bt93_bound, trivial_bound
from sidonlab.utils.logger import setuplog

logger = setuplog(__name__)

COR19_DIMS = (16, 18, 20, 22, 24, 26)
CSV_HEADER = ("t", "trivial", "new_bound", "bt93", "F", "a", "b", "lambda")
COR19_HEADER = ("t", "F", "a", "b", "eps", "lambda", "n", "k")


def _check_even(t: int) -> None:
    if t < 6 or t % 2:
        raise OutOfDomain(f"lambda breakdown needs even t >= 6, got t={t}")


def epsilon(t: int) -> Surd:
    """sqrt(2^(t+1)) + 1/2 - F, exactly"""

    F = trivial_bound(t)
    return Surd.pow2_half(t + 1) + Surd(Fraction(1, 2)) - F


def one_minus_pow2_half(e: int) -> Surd:
    """1 - 2^(-e/2)"""

    return 1 - Surd.pow2_half(-e)


def lambda_breakdown(t: int) -> LambdaBreakdown:
    """F, a, b and lambda with every epsilon comparison decided exactly"""

    _check_even(t)
    F = trivial_bound(t)
    a, b = divmod(F - 4, 3)
    eps = epsilon(t)
    comparisons: Dict[str, bool] = {}

    def at_most(label: str, threshold: Surd) -> bool:
        comparisons[label] = eps <= threshold
        return comparisons[label]

    eps_class = EpsilonClass.NOT_CONSULTED
    if a % 2 == 1:
        if b == 0:
            lam = 1
        elif b == 1:
            below = at_most("eps <= 1 - 2^(-(t-4)/2)", one_minus_pow2_half(t - 4))
            lam = 2 if below else 1
            eps_class = EpsilonClass.AT_MOST_FIRST if below else EpsilonClass.ABOVE_ALL
        else:
            lam = 2
    else:
        if b == 0:
            below = at_most("eps <= 1/2", Surd(Fraction(1, 2)))
            lam = 2 if below else 1
            eps_class = EpsilonClass.AT_MOST_FIRST if below else EpsilonClass.ABOVE_ALL
        elif b == 1:
            if at_most("eps <= 1 - 2^(-(t-5)/2)", one_minus_pow2_half(t - 5)):
                lam, eps_class = 2, EpsilonClass.AT_MOST_FIRST
            elif at_most("eps <= 1 - 2^(-(t+7)/2)", one_minus_pow2_half(t + 7)):
                lam, eps_class = 1, EpsilonClass.BETWEEN
            else:
                lam, eps_class = 0, EpsilonClass.ABOVE_ALL
        else:
            lam = 0

    return LambdaBreakdown(
        t=t, F=F, a=a, b=b, eps_class=eps_class, eps_comparisons=comparisons, lam=lam, n_t=F - lam
    )


def new_bound(t: int) -> int:
    """Improved upper bound on smax(t) for t >= 6"""

    if t < 6:
        raise OutOfDomain(f"new bound needs t >= 6, got t={t}")
    if t % 2 == 1:
        return bt93_bound(t)
    return lambda_breakdown(t).n_t


def eps_decimal(t: int, places: int = 3) -> str:
    """epsilon truncated for display only"""

    return str(epsilon(t).to_decimal().quantize(Decimal(1).scaleb(-places), rounding=ROUND_DOWN))


def bounds_table(t_min: int, t_max: int) -> List[BoundRow]:
    if t_min < 1 or t_min > t_max:
        raise OutOfDomain(f"need 1 <= t_min <= t_max, got {t_min}..{t_max}")

    rows = []
    for t in range(t_min, t_max + 1):
        fields: dict = {"t": t, "trivial": trivial_bound(t)}
        if t >= 6:
            fields["new_bound"] = new_bound(t)
        if t >= 7 and t % 2 == 1:
            fields["bt93"] = bt93_bound(t)
        if t >= 6 and t % 2 == 0:
            breakdown = lambda_breakdown(t)
            fields.update(F=breakdown.F, a=breakdown.a, b=breakdown.b, lam=breakdown.lam)
        rows.append(BoundRow(**fields))
    return rows


def bounds_csv(rows: List[BoundRow]) -> str:
    """CSV with empty fields where a column does not apply"""

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(
            "" if v is None else v
            for v in (row.t, row.trivial, row.new_bound, row.bt93, row.F, row.a, row.b, row.lam)
        )
    return buffer.getvalue()


def cor19_table() -> List[Cor19Row]:
    """Nonexistent [n_t, n_t - t, 5] codes for t = 16, 18, ..., 26"""

    rows = []
    for t in COR19_DIMS:
        breakdown = lambda_breakdown(t)
        rows.append(
            Cor19Row(
                t=t,
                F=breakdown.F,
                a=breakdown.a,
                b=breakdown.b,
                eps_decimal=eps_decimal(t),
                lam=breakdown.lam,
                n=breakdown.n_t,
                k=breakdown.n_t - t,
            )
        )
    logger.debug("cor19 rows: %s", [(r.t, r.n, r.k) for r in rows])
    return rows


def cor19_csv(rows: List[Cor19Row]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(COR19_HEADER)
    for row in rows:
        writer.writerow((row.t, row.F, row.a, row.b, row.eps_decimal, row.lam, row.n, row.k))
    return buffer.getvalue()
