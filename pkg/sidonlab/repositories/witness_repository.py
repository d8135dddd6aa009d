"""Witness Repository - one set per line, comma-separated sorted decimals"""

from pathlib import Path
from typing import Iterable, List, Sequence, Union

from sidonlab.exceptions import SetLiteralError
from sidonlab.models.vector_model import PointSet
from sidonlab.utils.logger import setuplog
from sidonlab.utils.utils import parse_set_literal

logger = setuplog(__name__)


class WitnessRepository:
    """Reads and writes witness files"""

    def __init__(self, path: Union[str, Path]):
        self.path = Path(path)

    def save(self, witnesses: Iterable[Sequence[int]]) -> int:
        """Write every witness, return the number of lines"""

        self.path.parent.mkdir(parents=True, exist_ok=True)
        count = 0
        with open(self.path, "w", encoding="utf-8") as f:
            for witness in witnesses:
                f.write(",".join(str(v) for v in sorted(witness)))
                f.write("\n")
                count += 1
        logger.info("Wrote %d witnesses to %s", count, self.path)
        return count

    def load(self, dim: int) -> List[PointSet]:
        """Parse every non-empty line as a set in F_2^dim"""

        sets = []
        with open(self.path, encoding="utf-8") as f:
            for number, line in enumerate(f, start=1):
                if not line.strip():
                    continue
                try:
                    sets.append(parse_set_literal(dim, line))
                except SetLiteralError as e:
                    raise SetLiteralError(f"{self.path}:{number}: {e}") from e
        logger.debug("Loaded %d sets from %s", len(sets), self.path)
        return sets
