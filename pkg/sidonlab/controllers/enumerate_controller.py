"""Enumerate controller - search runs and witness output"""

from pathlib import Path
from typing import Optional, Union

from sidonlab.models.enum_model import EnumResult, Family, WeightClass
from sidonlab.repositories.witness_repository import WitnessRepository
from sidonlab.services.enumerator.enumeration import enumerate_maximal
from sidonlab.utils.logger import setuplog

logger = setuplog(__name__)


class EnumerateController:
    """Orchestrates an enumeration and optional witness streaming"""

    def run(
        self,
        dim: int,
        weight_class: Optional[Union[WeightClass, str]] = None,
        sum_free: bool = False,
        workers: Optional[int] = None,
        witnesses: Optional[Union[str, Path]] = None,
        allow_long_run: bool = False,
        progress: bool = False,
    ) -> EnumResult:
        result = enumerate_maximal(
            dim,
            weight_class=weight_class,
            family=Family.SUM_FREE_SIDON if sum_free else Family.SIDON,
            workers=workers,
            collect_witnesses=witnesses is not None,
            allow_long_run=allow_long_run,
            progress=progress,
        )
        if witnesses is not None:
            WitnessRepository(witnesses).save(result.witnesses or [])
        return result
