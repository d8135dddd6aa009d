"""Worker pool enumerator backed by mpire"""

from typing import List

from mpire import WorkerPool

from sidonlab.models.enum_model import EnumTask, TaskOutcome
from sidonlab.services.enumerator.base import BaseEnumerator
from sidonlab.services.enumerator.search import run_task
from sidonlab.utils.logger import setuplog

logger = setuplog(__name__)


class PoolEnumerator(BaseEnumerator):
    """Dispatches subtrees to a process pool; map() keeps the task order"""

    def run(
        self, tasks: List[EnumTask], collect_witnesses: bool = False, progress: bool = False
    ) -> List[TaskOutcome]:
        if not tasks:
            return []

        n_jobs = min(self.workers, len(tasks))
        logger.debug("Dispatching %d subtrees to %d workers", len(tasks), n_jobs)
        with WorkerPool(n_jobs=n_jobs) as pool:
            return pool.map(
                run_task,
                [(task, collect_witnesses) for task in tasks],
                progress_bar=progress,
                progress_bar_options={"desc": "subtrees"},
            )
