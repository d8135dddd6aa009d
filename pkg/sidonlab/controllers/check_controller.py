"""Check controller - analysis of given sets"""

from pathlib import Path
from typing import List, Union

from sidonlab.exceptions import CapExceeded
from sidonlab.models.sidon_model import SetCheck
from sidonlab.models.vector_model import PointSet
from sidonlab.repositories.witness_repository import WitnessRepository
from sidonlab.services.codes.associated_code import associated_code
from sidonlab.services.sums.sidon import analyze_set
from sidonlab.utils.logger import setuplog
from sidonlab.utils.utils import parse_set_literal

logger = setuplog(__name__)


class CheckController:
    """Orchestrates the additive profile and the associated code of a set"""

    def check_set(self, M: PointSet) -> SetCheck:
        report = analyze_set(M)
        code = None
        if 0 not in M and M.size >= M.dim + 1:
            try:
                code = associated_code(M, with_covering_radius=True)
            except CapExceeded as e:
                logger.warning("Covering radius not reported: %s", e)
                code = associated_code(M)
        return SetCheck(elements=M.elements, report=report, code=code)

    def check_literal(self, dim: int, literal: str) -> List[SetCheck]:
        return [self.check_set(parse_set_literal(dim, literal))]

    def check_file(self, dim: int, path: Union[str, Path]) -> List[SetCheck]:
        sets = WitnessRepository(path).load(dim)
        logger.info("Checking %d sets from %s", len(sets), path)
        return [self.check_set(M) for M in sets]
