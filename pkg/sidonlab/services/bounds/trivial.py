"""Counting bound and the BT93 bound"""

from math import isqrt
from typing import Tuple

from sidonlab.exceptions import OutOfDomain


def nearest_sqrt(N: int) -> int:
    """Nearest integer to sqrt(N); ties cannot occur since 4N is even and (2m+1)^2 odd"""

    m = isqrt(N)
    return m + 1 if 4 * N > (2 * m + 1) ** 2 else m


def trivial_bound(t: int) -> int:
    """Largest B with C(B, 2) <= 2^t - 1"""

    if t < 1:
        raise OutOfDomain(f"trivial bound needs t >= 1, got t={t}")
    if t % 2 == 1:
        return 1 << ((t + 1) // 2)
    return nearest_sqrt(1 << (t + 1))


def floor_pair(t: int) -> Tuple[int, int]:
    """(floor((1 + sqrt(2^(t+3) - 7)) / 2), floor(sqrt(2^(t+1)) + 0.5))"""

    if t < 1:
        raise OutOfDomain(f"t must be >= 1, got t={t}")
    lhs = (1 + isqrt((1 << (t + 3)) - 7)) // 2
    return lhs, trivial_bound(t)


def floor_equality_check(t: int) -> bool:
    if t < 2 or t % 2:
        raise OutOfDomain(f"floor equality is stated for even t >= 2, got t={t}")
    lhs, rhs = floor_pair(t)
    return lhs == rhs


def bt93_bound(t: int) -> int:
    """2^((t+1)/2) - 2 for odd t >= 7"""

    if t < 7 or t % 2 == 0:
        raise OutOfDomain(f"BT93 bound needs odd t >= 7, got t={t}")
    return (1 << ((t + 1) // 2)) - 2
