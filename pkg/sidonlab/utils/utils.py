"""Utility Functions"""

import re
from typing import Literal

from sidonlab.exceptions import SetLiteralError
from sidonlab.models.vector_model import PointSet
from sidonlab.utils.logger import setuplog

logger = setuplog(__name__)

SetFormat = Literal["decimal", "bits"]

_SEPARATORS = re.compile(r"[,\s]+")


def parse_set_literal(dim: int, text: str) -> PointSet:
    """Parse comma- or whitespace-separated decimals, optionally inside braces"""

    if dim < 1:
        raise SetLiteralError(f"dimension must be >= 1, got {dim}")

    body = text.strip()
    if body.startswith("{") and body.endswith("}"):
        body = body[1:-1]

    limit = 1 << dim
    values: list[int] = []
    seen: set[int] = set()
    for token in _SEPARATORS.split(body.strip()):
        if not token:
            continue
        if not token.isdigit():
            raise SetLiteralError(f"token {token!r} is not a non-negative decimal integer")
        value = int(token)
        if value >= limit:
            raise SetLiteralError(f"token {token!r} is not a vector of F_2^{dim} (must be < {limit})")
        if value in seen:
            raise SetLiteralError(f"token {token!r} is a duplicate element")
        seen.add(value)
        values.append(value)

    return PointSet.of(dim, values)


def format_bits(value: int, dim: int) -> str:
    """0/1 string, least significant coordinate first"""

    return "".join("1" if value >> i & 1 else "0" for i in range(dim))


def format_set(M: PointSet, fmt: SetFormat = "decimal") -> str:
    if fmt == "bits":
        return " ".join(format_bits(v, M.dim) for v in M.elements)
    return M.to_literal()
