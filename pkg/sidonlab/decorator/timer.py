"""Time Decorator"""

import time
from functools import wraps

from sidonlab.utils.logger import setuplog

logger = setuplog(__name__)


def _format_elapsed(execution_time: float) -> str:
    if execution_time < 60:
        return f"{execution_time:.2f} seconds"
    return f"{execution_time / 60:.2f} minutes"


def timer(func):
    """Log the wall time of a call, also when it raises"""

    @wraps(func)
    def wrapper(*args, **kwargs):
        start_time = time.perf_counter()
        try:
            result = func(*args, **kwargs)
        except Exception:
            logger.error(
                "%s failed after %s",
                func.__name__,
                _format_elapsed(time.perf_counter() - start_time),
            )
            raise

        logger.info(
            "%s executed in %s",
            func.__name__,
            _format_elapsed(time.perf_counter() - start_time),
        )
        return result

    return wrapper
