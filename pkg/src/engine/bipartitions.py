"""
Bipartition Enumeration
Unordered pairs {C, complement} of an n-agent electorate with both sides
nonempty, walked in Gray-code order so consecutive pairs differ by one agent.

Agent index 0 is pinned to C; the other n-1 agents are the bits of the Gray
code. The all-ones code (C = everybody) is stepped over, leaving exactly
2^(n-1) - 1 pairs.
"""
from dataclasses import dataclass
from typing import FrozenSet, Iterator, Optional, Tuple

from ..model.errors import CapacityError
from . import config


def to_gray_code(i: int) -> int:
    return (i >> 1) ^ i


def bipartition_count(n: int) -> int:
    return (1 << (n - 1)) - 1 if n >= 1 else 0


def check_capacity(n: int, cap: Optional[int] = None):
    cap = config.EXACT_CAP if cap is None else cap
    if n < 2:
        raise CapacityError(f"bipartitions need at least 2 agents, got {n}")
    if n > cap:
        raise CapacityError(
            f"exact enumeration over {n} agents exceeds the cap of {cap} "
            f"({bipartition_count(n)} bipartitions); use Monte Carlo sampling or raise the cap"
        )


def gray_walk(n: int) -> Iterator[Tuple[int, Optional[int]]]:
    """
    Yield (mask, flipped_agent) for all 2^(n-1) codes, including the full one.
    Bit j of mask is agent j+1; flipped_agent is None on the first step.
    """
    previous = 0
    yield 0, None
    for i in range(1, 1 << (n - 1)):
        code = to_gray_code(i)
        yield code, (code ^ previous).bit_length()
        previous = code


@dataclass(frozen=True)
class Bipartition:
    """One decomposition, as agent indices (positions in the profile's entries)."""
    coalition: FrozenSet[int]
    complement: FrozenSet[int]
    flipped: Optional[int]


def enumerate_bipartitions(n: int, cap: Optional[int] = None) -> Iterator[Bipartition]:
    check_capacity(n, cap)
    full = (1 << (n - 1)) - 1
    everyone = frozenset(range(n))
    for mask, flipped in gray_walk(n):
        if mask == full:
            continue
        coalition = frozenset([0] + [j + 1 for j in range(n - 1) if mask >> j & 1])
        yield Bipartition(coalition, everyone - coalition, flipped)
