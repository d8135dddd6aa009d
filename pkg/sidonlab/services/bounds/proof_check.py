"""Exact replay of the case chain behind the even-t bound"""

from fractions import Fraction
from typing import Callable, Dict

from sidonlab.exceptions import ProofChainBroken
from sidonlab.models.bound_model import ProofCase, ProofCheckReport, ProofStep
from sidonlab.services.bounds.lambda_bound import lambda_breakdown
from sidonlab.utils.logger import setuplog

logger = setuplog(__name__)

# lower bound on 2s (Johnson quantity) for a linear code of length n, minimum distance 5
TWO_S_LOWER_BOUNDS: Dict[ProofCase, Callable[[Fraction], Fraction]] = {
    ProofCase.ODD_B2: lambda n: (n + 3) ** 2 - 7,
    ProofCase.ODD_B1: lambda n: (n + Fraction(5, 2)) ** 2 - Fraction(33, 4),
    ProofCase.ODD_B0: lambda n: (n + Fraction(1, 2)) ** 2 + Fraction(7, 4),
    ProofCase.EVEN_B2: lambda n: (n + Fraction(3, 2)) ** 2 - Fraction(1, 4),
    ProofCase.EVEN_B1: lambda n: (n + Fraction(5, 2)) ** 2 - Fraction(57, 4),
    ProofCase.EVEN_B0: lambda n: (n + 2) ** 2 + 1,
}


def case_of(n: int) -> ProofCase:
    """Case of length n, from n - 2 = 3a + b"""

    a, b = divmod(n - 2, 3)
    return ProofCase.of(a, b)


def proof_step(t: int, n: int) -> ProofStep:
    case = case_of(n)
    bound = TWO_S_LOWER_BOUNDS[case](Fraction(n))
    return ProofStep(n=n, case_id=case, two_s_lower_bound=str(bound), holds=bound > 2 ** (t + 1))


def proof_case_check(t: int) -> ProofCheckReport:
    """Walk n = F-2, F-1, F up to n_t; the last step must give 2s > 2^(t+1)"""

    breakdown = lambda_breakdown(t)
    steps = [proof_step(t, n) for n in range(breakdown.F - 2, breakdown.n_t + 1)]
    final = steps[-1]
    if not final.holds:
        logger.error("Case chain for t=%d does not close at n=%d (%s)", t, final.n, final.case_id.value)
        raise ProofChainBroken(
            f"2s lower bound {final.two_s_lower_bound} does not exceed 2^{t + 1} at n={final.n}"
        )
    return ProofCheckReport(
        t=t,
        case_id=final.case_id,
        n_used=final.n,
        inequality_holds=True,
        target=str(2 ** (t + 1)),
        steps=steps,
    )
