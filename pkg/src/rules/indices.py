"""
Profile Index Functions
delta(R): a whole-profile diversity / polarisation score feeding the
profile-index-based DSF.
"""
import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from ..model.errors import ProfileInputError
from ..model.profile import AnyProfile, Ranking, pairwise_counts
from .scoring import parse_rational

AVG_KENDALL_TAU = 'avg_kendall_tau'
CONSTANT = 'constant'


def kendall_tau(r1: Ranking, r2: Ranking) -> int:
    """Number of unordered proposal pairs the two rankings order differently."""
    if r1.m != r2.m:
        raise ProfileInputError(f"rankings over {r1.m} and {r2.m} proposals cannot be compared")
    p1, p2 = r1.positions, r2.positions
    return sum(
        1 for x, y in itertools.combinations(range(r1.m), 2)
        if (p1[x] < p1[y]) != (p2[x] < p2[y])
    )


@dataclass(frozen=True)
class ProfileIndex:
    kind: str
    value: Fraction = Fraction(0)
    is_neutral: bool = True

    def __post_init__(self):
        if self.kind not in (AVG_KENDALL_TAU, CONSTANT):
            raise ProfileInputError(f"unknown profile index {self.kind!r}")
        object.__setattr__(self, 'value', Fraction(self.value))

    @classmethod
    def avg_kendall_tau(cls) -> "ProfileIndex":
        return cls(AVG_KENDALL_TAU)

    @classmethod
    def constant(cls, value=0) -> "ProfileIndex":
        return cls(CONSTANT, Fraction(value))

    @property
    def name(self) -> str:
        return 'kendall' if self.kind == AVG_KENDALL_TAU else f"const:{self.value}"

    def evaluate(self, profile: AnyProfile) -> Fraction:
        if self.kind == CONSTANT:
            return self.value
        return average_kendall_tau(profile)

    @classmethod
    def parse(cls, text: str) -> "ProfileIndex":
        """kendall | const:<rational>"""
        text = text.strip()
        if text == 'kendall':
            return cls.avg_kendall_tau()
        prefix, sep, body = text.partition(':')
        if sep and prefix == 'const':
            return cls.constant(parse_rational(body))
        raise ProfileInputError(f"unknown profile index {text!r} (expected kendall or const:<value>)")


def average_kendall_tau(profile: AnyProfile) -> Fraction:
    """
    Mean Kendall tau distance over unordered agent pairs; 0 below two agents.
    A pair {x, y} is discordant for every (x-over-y, y-over-x) agent pair.
    """
    n = profile.n
    if n < 2:
        return Fraction(0)
    counts = pairwise_counts(profile)
    discordant = sum(
        counts[x][y] * counts[y][x] for x, y in itertools.combinations(range(profile.m), 2)
    )
    return Fraction(discordant, comb(n, 2))


def evaluate(index: ProfileIndex, profile: AnyProfile) -> Fraction:
    return index.evaluate(profile)
