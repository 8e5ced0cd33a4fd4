"""
Divisiveness Report
Per-proposal values plus the selected (most divisive) set.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, List, Optional, Sequence, Tuple, Union

from ..model.errors import ProfileInputError
from ..model.profile import ProposalSet

MAX = 'max'
MIN = 'min'

Value = Union[Fraction, float]


def extreme_set(values: Sequence[Value], direction: str = MAX) -> FrozenSet[int]:
    """Indices attaining the max (or min); ties are kept, never broken."""
    if direction not in (MAX, MIN):
        raise ProfileInputError(f"direction must be {MAX!r} or {MIN!r}, got {direction!r}")
    target = max(values) if direction == MAX else min(values)
    return frozenset(i for i, v in enumerate(values) if v == target)


@dataclass(frozen=True)
class DivisivenessReport:
    proposals: ProposalSet
    values: Tuple[Value, ...]
    selection: FrozenSet[int]
    direction: str = MAX
    method: str = ''
    sampling: str = 'exact'
    seed: Optional[int] = None
    samples: Optional[int] = None
    stderr: Optional[Tuple[float, ...]] = None

    def __post_init__(self):
        if len(self.values) != self.proposals.m:
            raise ProfileInputError(f"{len(self.values)} values for {self.proposals.m} proposals")
        if not self.selection:
            raise ProfileInputError("a divisiveness selection is never empty")

    @classmethod
    def build(cls, proposals: ProposalSet, values: Sequence[Value], direction: str = MAX, **meta) -> "DivisivenessReport":
        values = tuple(values)
        stderr = meta.pop('stderr', None)
        return cls(
            proposals=proposals,
            values=values,
            selection=extreme_set(values, direction),
            direction=direction,
            stderr=tuple(stderr) if stderr is not None else None,
            **meta,
        )

    @property
    def is_exact(self) -> bool:
        return self.sampling == 'exact'

    @property
    def selects_everything(self) -> bool:
        return len(self.selection) == self.proposals.m

    def selected_labels(self) -> List[str]:
        return self.proposals.labels(self.selection)

    def value_of(self, label: str) -> Value:
        return self.values[self.proposals.index(label)]

    def labelled_values(self) -> List[Tuple[str, Value]]:
        return list(zip(self.proposals.names, self.values))
