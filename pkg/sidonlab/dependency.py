"""Dependency Management"""

from sidonlab.repositories.catalog_repository import CatalogRepository
from sidonlab.utils.logger import setuplog

logger = setuplog(__name__)


_catalog_instance: CatalogRepository | None = None


def get_catalog() -> CatalogRepository:
    """Get catalog repository (singleton)"""

    global _catalog_instance
    if _catalog_instance is None:
        logger.debug("Initializing catalog repository (singleton)")
        _catalog_instance = CatalogRepository()
    return _catalog_instance
