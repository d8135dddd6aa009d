"""Enumerator Factory"""

from typing import Optional, Type

from sidonlab.config import config
from sidonlab.services.enumerator.base import BaseEnumerator
from sidonlab.services.enumerator.pool_enumerator import PoolEnumerator
from sidonlab.services.enumerator.serial_enumerator import SerialEnumerator
from sidonlab.utils.logger import setuplog

logger = setuplog(__name__)

ENUMERATOR_REGISTRY: dict[str, Type[BaseEnumerator]] = {
    "serial": SerialEnumerator,
    "mpire": PoolEnumerator,
}


def get_enumerator_instance(workers: Optional[int] = None) -> BaseEnumerator:
    """Get enumerator instance for the requested worker count"""

    resolved = config.resolved_workers(workers)
    if resolved == 1:
        return SerialEnumerator()

    enumerator_class = ENUMERATOR_REGISTRY.get(config.ENUMERATOR_TYPE.lower())

    if enumerator_class is None:
        logger.warning(
            "Enumerator type %s not found, falling back to serial", config.ENUMERATOR_TYPE
        )
        enumerator_class = SerialEnumerator

    return enumerator_class(workers=resolved)
