"""
Social Choice Functions
Set-valued voting rules F used by the SCF-based DSF. Only positional-score
rules ship; a subclass overriding `winners` plugs in any other rule that
returns a nonempty winner set for a nonempty subprofile.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Sequence

from ..model.errors import EmptyCoalitionError, ProfileInputError
from ..model.profile import SubProfile
from .scoring import (
    NORMALIZED_POSITIONAL, POSITIONAL, ScoringScheme, borda, parse_rational, plurality,
)


def top_set(values: Sequence) -> FrozenSet[int]:
    """Indices holding the maximal value; ties kept."""
    best = max(values)
    return frozenset(i for i, v in enumerate(values) if v == best)


@dataclass(frozen=True)
class Scf:
    """A positional scoring rule: winners maximise the total score."""
    scheme: ScoringScheme

    def __post_init__(self):
        if not self.scheme.is_positional:
            raise ProfileInputError(f"{self.scheme.name} does not define a positional scoring rule")

    @property
    def name(self) -> str:
        return self.scheme.name

    @property
    def is_positional(self) -> bool:
        # Subclasses with a non-positional `winners` must return False
        return type(self).winners is Scf.winners

    def winners(self, sub: SubProfile) -> FrozenSet[int]:
        if sub.is_empty:
            raise EmptyCoalitionError(f"{self.name} rule applied to an empty subprofile")
        return top_set(self.scheme.scores(sub))

    def win_share(self, sub: SubProfile, x: int) -> Fraction:
        """[x in F(sub)] / |F(sub)|, and 0 on the empty subprofile."""
        sub.proposals.check(x)
        if sub.is_empty:
            return Fraction(0)
        won = self.winners(sub)
        return Fraction(1, len(won)) if x in won else Fraction(0)

    @classmethod
    def parse(cls, text: str) -> "Scf":
        """borda | plurality | vec:w1,w2,..."""
        text = text.strip()
        if text == 'borda':
            return borda_rule()
        if text == 'plurality':
            return plurality_rule()
        prefix, sep, body = text.partition(':')
        if sep and prefix in ('vec', 'nvec'):
            weights = tuple(parse_rational(w) for w in body.split(',') if w.strip())
            kind = NORMALIZED_POSITIONAL if prefix == 'nvec' else POSITIONAL
            return cls(ScoringScheme(kind, weights))
        raise ProfileInputError(f"unknown voting rule {text!r} (expected borda, plurality, vec:...)")


def winners(rule: Scf, sub: SubProfile) -> FrozenSet[int]:
    return rule.winners(sub)


def win_share(rule: Scf, sub: SubProfile, x: int) -> Fraction:
    return rule.win_share(sub, x)


def borda_rule() -> Scf:
    return Scf(borda())


def plurality_rule() -> Scf:
    return Scf(plurality())
