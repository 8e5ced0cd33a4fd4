"""
Scoring Functions
Maps (subprofile, proposal) to an exact rational score.

Kinds: positional / normalized positional (explicit weight vectors),
Borda, normalized Borda, Plurality, normalized Plurality, and the
symmetric / asymmetric Copeland scores.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence, Tuple

from ..model.errors import EmptyCoalitionError, ProfileInputError
from ..model.profile import SubProfile, pairwise_counts

POSITIONAL = 'positional'
NORMALIZED_POSITIONAL = 'normalized_positional'
BORDA = 'borda'
NORMALIZED_BORDA = 'normalized_borda'
PLURALITY = 'plurality'
NORMALIZED_PLURALITY = 'normalized_plurality'
COPELAND_SYMMETRIC = 'copeland_symmetric'
COPELAND_ASYMMETRIC = 'copeland_asymmetric'

_VECTOR_KINDS = {POSITIONAL, NORMALIZED_POSITIONAL}
_NORMALIZED_KINDS = {NORMALIZED_POSITIONAL, NORMALIZED_BORDA, NORMALIZED_PLURALITY}
_COPELAND_KINDS = {COPELAND_SYMMETRIC, COPELAND_ASYMMETRIC}
KINDS = _VECTOR_KINDS | _NORMALIZED_KINDS | _COPELAND_KINDS | {BORDA, PLURALITY}

# CLI names for the kinds that carry no vector
_NAMED = {
    'borda': BORDA,
    'nborda': NORMALIZED_BORDA,
    'plurality': PLURALITY,
    'nplurality': NORMALIZED_PLURALITY,
    'copeland': COPELAND_SYMMETRIC,
    'copeland-asym': COPELAND_ASYMMETRIC,
}

DEFAULT_EPSILON = Fraction(1, 100)


def parse_rational(text: str) -> Fraction:
    """'3', '-2', '1/100' (or a terminating decimal) as an exact Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ProfileInputError(f"not a rational number: {text!r}") from None


@dataclass(frozen=True)
class ScoringScheme:
    """A scoring function s(R|C, x). Vector kinds carry their weights, position 1 first."""
    kind: str
    weights: Optional[Tuple[Fraction, ...]] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ProfileInputError(f"unknown scoring kind {self.kind!r}")
        if (self.kind in _VECTOR_KINDS) != (self.weights is not None):
            raise ProfileInputError(f"scoring kind {self.kind!r} and weights {self.weights!r} do not match")
        if self.weights is not None:
            if not self.weights:
                raise ProfileInputError("a scoring vector needs at least one weight")
            object.__setattr__(self, 'weights', tuple(Fraction(w) for w in self.weights))

    # ------------------------------------------------------------------
    # Declared properties
    # ------------------------------------------------------------------

    @property
    def is_positional(self) -> bool:
        return self.kind not in _COPELAND_KINDS

    @property
    def is_normalized(self) -> bool:
        return self.kind in _NORMALIZED_KINDS

    @property
    def name(self) -> str:
        for cli_name, kind in _NAMED.items():
            if kind == self.kind:
                return cli_name
        prefix = 'nvec' if self.kind == NORMALIZED_POSITIONAL else 'vec'
        return f"{prefix}:" + ','.join(str(w) for w in self.weights)

    def vector(self, m: int) -> Tuple[Fraction, ...]:
        """The positional weight vector for m proposals."""
        if self.kind in _COPELAND_KINDS:
            raise ProfileInputError(f"{self.name} is not a positional scoring function")
        if self.kind in (BORDA, NORMALIZED_BORDA):
            return tuple(Fraction(m - 1 - k) for k in range(m))
        if self.kind in (PLURALITY, NORMALIZED_PLURALITY):
            return (Fraction(1),) + (Fraction(0),) * (m - 1)
        if len(self.weights) != m:
            raise ProfileInputError(f"scoring vector {self.name} has {len(self.weights)} weights, profile has m={m}")
        return self.weights

    def integer_vector(self, m: int) -> Tuple[Tuple[int, ...], int]:
        """(weights scaled to integers, scale) with weights[k] = ints[k] / scale."""
        vector = self.vector(m)
        scale = lcm(*(w.denominator for w in vector))
        return tuple(int(w * scale) for w in vector), scale

    # ------------------------------------------------------------------
    # Scores
    # ------------------------------------------------------------------

    def score(self, sub: SubProfile, x: int) -> Fraction:
        """s(sub, x); the caller handles the empty-coalition convention."""
        sub.proposals.check(x)
        if sub.is_empty:
            raise EmptyCoalitionError(f"{self.name} score requested for an empty subprofile")
        if self.kind in _COPELAND_KINDS:
            return Fraction(copeland_scores(pairwise_counts(sub), self.kind)[x])
        vector = self.vector(sub.m)
        total = sum((vector[r.position(x) - 1] for r in sub.rankings), Fraction(0))
        if self.is_normalized:
            return total / sub.n
        return total

    def scores(self, sub: SubProfile) -> List[Fraction]:
        return [self.score(sub, x) for x in range(sub.m)]

    # ------------------------------------------------------------------
    # Grammar
    # ------------------------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> "ScoringScheme":
        """borda | nborda | plurality | nplurality | copeland | copeland-asym | vec:w1,.. | nvec:w1,.."""
        text = text.strip()
        if text in _NAMED:
            return cls(_NAMED[text])
        prefix, sep, body = text.partition(':')
        if sep and prefix in ('vec', 'nvec'):
            weights = tuple(parse_rational(w) for w in body.split(',') if w.strip())
            kind = NORMALIZED_POSITIONAL if prefix == 'nvec' else POSITIONAL
            return cls(kind, weights)
        raise ProfileInputError(
            f"unknown scoring scheme {text!r} (expected borda, nborda, plurality, nplurality, "
            "copeland, copeland-asym, vec:..., nvec:...)"
        )


def copeland_scores(pairwise: Sequence[Sequence[int]], kind: str = COPELAND_SYMMETRIC) -> List[int]:
    """
    Copeland scores from a pairwise count matrix.
    Strict majorities only; a pairwise tie counts for neither side.
    """
    m = len(pairwise)
    result = []
    for x in range(m):
        wins = losses = 0
        for y in range(m):
            if y == x:
                continue
            if pairwise[x][y] > pairwise[y][x]:
                wins += 1
            elif pairwise[x][y] < pairwise[y][x]:
                losses += 1
        result.append(wins if kind == COPELAND_ASYMMETRIC else wins - losses)
    return result


def positional(weights: Sequence) -> ScoringScheme:
    return ScoringScheme(POSITIONAL, tuple(Fraction(w) for w in weights))


def normalized_positional(weights: Sequence) -> ScoringScheme:
    return ScoringScheme(NORMALIZED_POSITIONAL, tuple(Fraction(w) for w in weights))


def borda() -> ScoringScheme:
    return ScoringScheme(BORDA)


def normalized_borda() -> ScoringScheme:
    return ScoringScheme(NORMALIZED_BORDA)


def plurality() -> ScoringScheme:
    return ScoringScheme(PLURALITY)


def normalized_plurality() -> ScoringScheme:
    return ScoringScheme(NORMALIZED_PLURALITY)


def copeland_symmetric() -> ScoringScheme:
    return ScoringScheme(COPELAND_SYMMETRIC)


def copeland_asymmetric() -> ScoringScheme:
    return ScoringScheme(COPELAND_ASYMMETRIC)


def epsilon_borda(
    m: int = 4,
    epsilon: Fraction = DEFAULT_EPSILON,
    normalized: bool = True,
    electorate_size: Optional[int] = None,
) -> ScoringScheme:
    """
    Borda with the bottom weight raised to epsilon: (m-1, ..., 1, epsilon).
    Induces the Borda rule whenever electorate_size * epsilon < 1.
    """
    epsilon = Fraction(epsilon)
    if m < 2:
        raise ProfileInputError(f"epsilon-Borda needs m >= 2, got {m}")
    if epsilon <= 0:
        raise ProfileInputError(f"epsilon must be positive, got {epsilon}")
    if electorate_size is not None and electorate_size * epsilon >= 1:
        raise ProfileInputError(
            f"epsilon {epsilon} too large for {electorate_size} agents (need n * epsilon < 1)"
        )
    weights = tuple(Fraction(m - 1 - k) for k in range(m - 1)) + (epsilon,)
    return normalized_positional(weights) if normalized else positional(weights)


SHIPPED_NORMALIZED = (normalized_borda(), normalized_plurality())
