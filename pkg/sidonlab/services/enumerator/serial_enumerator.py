"""In-process enumerator"""

from typing import List

from tqdm import tqdm

from sidonlab.models.enum_model import EnumTask, TaskOutcome
from sidonlab.services.enumerator.base import BaseEnumerator
from sidonlab.services.enumerator.search import run_task


class SerialEnumerator(BaseEnumerator):
    """Runs the subtasks one after another in the calling process"""

    def __init__(self, workers: int = 1):
        super().__init__(workers=1)

    def run(
        self, tasks: List[EnumTask], collect_witnesses: bool = False, progress: bool = False
    ) -> List[TaskOutcome]:
        return [
            run_task(task, collect_witnesses)
            for task in tqdm(tasks, desc="subtrees", disable=not progress)
        ]
