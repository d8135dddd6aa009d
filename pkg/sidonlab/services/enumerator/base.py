"""Abstract Class for Enumerator"""

from abc import ABC, abstractmethod
from typing import List

from sidonlab.exceptions import ConfigurationError
from sidonlab.models.enum_model import EnumTask, TaskOutcome


class BaseEnumerator(ABC):
    """Abstract base class for enumerator backends"""

    def __init__(self, workers: int = 1):
        if workers < 1:
            raise ConfigurationError(f"an enumerator needs at least one worker, got {workers}")
        self.workers = workers

    @abstractmethod
    def run(
        self, tasks: List[EnumTask], collect_witnesses: bool = False, progress: bool = False
    ) -> List[TaskOutcome]:
        """Exhaust every task and return the outcomes in task order"""
