"""Bounds controller - tables of upper bounds"""

from typing import List

from sidonlab.exceptions import OutOfDomain
from sidonlab.models.bound_model import Cor19Row, ProofCheckReport
from sidonlab.services.bounds.lambda_bound import bounds_csv, bounds_table, cor19_csv, cor19_table
from sidonlab.services.bounds.proof_check import proof_case_check
from sidonlab.utils.logger import setuplog

logger = setuplog(__name__)


class BoundsController:
    """Orchestrates bound tables and proof replays"""

    def table_csv(self, t_min: int, t_max: int) -> str:
        return bounds_csv(bounds_table(t_min, t_max))

    def proofs(self, t_min: int, t_max: int) -> List[ProofCheckReport]:
        """Replays for every even t >= 6 in the range"""

        if t_min < 1 or t_min > t_max:
            raise OutOfDomain(f"need 1 <= t_min <= t_max, got {t_min}..{t_max}")
        start = max(6, t_min + t_min % 2)
        reports = [proof_case_check(t) for t in range(start, t_max + 1, 2)]
        if not reports:
            logger.warning("No even t >= 6 in %d..%d, nothing to replay", t_min, t_max)
        return reports

    def cor19(self) -> List[Cor19Row]:
        return cor19_table()

    def cor19_csv(self) -> str:
        return cor19_csv(self.cor19())
