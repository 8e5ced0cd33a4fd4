"""
Divisiveness Selection Functions
The five constructions:

- rank variance of each proposal's positions;
- the pairwise scheme (supporters of x over y against supporters of y over x);
- score-based: expected score gap between the two sides of a bipartition;
- SCF-based: expected gap in winning share between the two sides;
- profile-index-based: the index after moving x to the top (argmin).

Score- and SCF-based values are exact over all nonempty bipartitions
(Gray-code walk, capped electorate) or estimated by Monte Carlo.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, List, Optional

from ..model.errors import CapacityError, ProfileInputError
from ..model.profile import Profile, SubProfile, move_to_top
from ..rules.indices import ProfileIndex
from ..rules.scoring import ScoringScheme, normalized_borda
from ..rules.voting import Scf, borda_rule
from . import config
from .bipartitions import bipartition_count, check_capacity, gray_walk
from .kernels import DivergenceKernel, ScoreKernel, kernel_for_scf
from .monte_carlo import estimate_monte_carlo
from .report import MAX, MIN, DivisivenessReport

logger = logging.getLogger(__name__)

EXACT = 'exact'
MONTE_CARLO = 'monte_carlo'


@dataclass(frozen=True)
class DecompositionScheme:
    """
    How pairs {C, complement} are weighted.

    exact: uniform weight on every bipartition with both sides nonempty.
    With include_trivial the pair {empty, N} (div = 0) joins the uniform
    distribution; every value shrinks by the same factor.
    monte_carlo: `samples` uniform draws from `seed`.
    """
    kind: str = EXACT
    samples: int = 0
    seed: Optional[int] = None
    include_trivial: bool = False
    cap: Optional[int] = None
    workers: int = 1

    def __post_init__(self):
        if self.kind not in (EXACT, MONTE_CARLO):
            raise ProfileInputError(f"unknown decomposition scheme {self.kind!r}")
        if self.seed is not None:
            config.check_seed(self.seed)
        if self.kind == MONTE_CARLO:
            if self.samples < 1:
                raise ProfileInputError(f"Monte Carlo needs samples >= 1, got {self.samples}")
            if self.seed is None:
                raise ProfileInputError("Monte Carlo needs a seed")
            if self.include_trivial:
                raise ProfileInputError("include_trivial applies to exact enumeration only")

    @classmethod
    def exact(cls, cap: Optional[int] = None, include_trivial: bool = False) -> "DecompositionScheme":
        return cls(EXACT, cap=cap, include_trivial=include_trivial)

    @classmethod
    def monte_carlo(cls, samples: int, seed: Optional[int] = None, workers: int = 1) -> "DecompositionScheme":
        return cls(MONTE_CARLO, samples=samples, seed=config.DEFAULT_SEED if seed is None else seed, workers=workers)

    @classmethod
    def parse(cls, text: str, seed: Optional[int] = None, cap: Optional[int] = None, workers: int = 1) -> "DecompositionScheme":
        """exact | mc | mc:<samples>"""
        text = text.strip()
        if text == 'exact':
            return cls.exact(cap=cap)
        if text == 'mc':
            return cls.monte_carlo(config.MC_SAMPLES, seed, workers)
        prefix, sep, body = text.partition(':')
        if sep and prefix == 'mc':
            try:
                samples = int(body)
            except ValueError:
                raise ProfileInputError(f"bad sample count in {text!r}") from None
            return cls.monte_carlo(samples, seed, workers)
        raise ProfileInputError(f"unknown sampling {text!r} (expected exact or mc:<samples>)")

    @property
    def label(self) -> str:
        if self.kind == EXACT:
            return 'exact+trivial' if self.include_trivial else 'exact'
        return f"mc:{self.samples}"


class Dsf:
    """A divisiveness selection function: profile -> nonempty set of proposals."""

    direction = MAX
    # all shipped parameters satisfy the anonymity/neutrality requirements
    symmetric = True

    @property
    def name(self) -> str:
        raise NotImplementedError

    def report(self, profile: Profile) -> DivisivenessReport:
        raise NotImplementedError

    def evaluate(self, profile: Profile) -> List:
        return list(self.report(profile).values)

    def select(self, profile: Profile) -> FrozenSet[int]:
        return self.report(profile).selection

    def __call__(self, profile: Profile) -> FrozenSet[int]:
        return self.select(profile)

    def __repr__(self):
        return f"{type(self).__name__}({self.name})"


# ---------------------------------------------------------------------------
# Rank variance
# ---------------------------------------------------------------------------

class RankVarianceDsf(Dsf):
    """Proposals whose positions vary the most across agents."""

    name = 'rankvar'

    def report(self, profile: Profile) -> DivisivenessReport:
        n = profile.n
        values = []
        for x in range(profile.m):
            positions = [r.position(x) for r in profile.rankings]
            total = sum(positions)
            squares = sum(p * p for p in positions)
            values.append(Fraction(n * squares - total * total, n * n))
        return DivisivenessReport.build(profile.proposals, values, MAX, method=self.name)


# ---------------------------------------------------------------------------
# Pairwise scheme
# ---------------------------------------------------------------------------

class NavarreteDsf(Dsf):
    """
    value(x) = 1/(m-1) * sum over y != x of |s(R|N[x>y], x) - s(R|N[y>x], x)|,
    with a pair contributing 0 when one of its sides is empty.
    """

    def __init__(self, scheme: Optional[ScoringScheme] = None):
        self.scheme = scheme or normalized_borda()

    @property
    def name(self) -> str:
        return f"navarrete[{self.scheme.name}]"

    def pair_divergence(self, profile: Profile, x: int, y: int) -> Fraction:
        above = tuple(e for e in profile.entries if e[1].prefers(x, y))
        below = tuple(e for e in profile.entries if e[1].prefers(y, x))
        if not above or not below:
            return Fraction(0)
        side_a = SubProfile(profile.proposals, above)
        side_b = SubProfile(profile.proposals, below)
        return abs(self.scheme.score(side_a, x) - self.scheme.score(side_b, x))

    def report(self, profile: Profile) -> DivisivenessReport:
        m = profile.m
        if m == 1:
            values = [Fraction(0)]
        else:
            values = [
                sum((self.pair_divergence(profile, x, y) for y in range(m) if y != x), Fraction(0)) / (m - 1)
                for x in range(m)
            ]
        return DivisivenessReport.build(profile.proposals, values, MAX, method=self.name)


# ---------------------------------------------------------------------------
# Bipartition-based constructions
# ---------------------------------------------------------------------------

def exact_sums(kernel: DivergenceKernel, cap: Optional[int] = None) -> List[Fraction]:
    """Sum of div over all nonempty bipartitions, walked in Gray-code order."""
    n = kernel.n
    try:
        check_capacity(n, cap)
    except CapacityError:
        logger.info("[Exact] refusing %s on %d agents (cap %s)", kernel.name, n, cap or config.EXACT_CAP)
        raise
    logger.debug("[Exact] %s: n=%d, %d bipartitions", kernel.name, n, bipartition_count(n))
    full = (1 << (n - 1)) - 1
    kernel.clear_sums()
    kernel.reset([0])
    for mask, agent in gray_walk(n):
        if agent is not None:
            if mask >> (agent - 1) & 1:
                kernel.add(agent)
            else:
                kernel.remove(agent)
        if mask != full:
            kernel.observe()
    return kernel.totals()


class BipartitionDsf(Dsf):
    """Expected per-decomposition divisiveness under a DecompositionScheme."""

    def __init__(self, decomposition: Optional[DecompositionScheme] = None):
        self.decomposition = decomposition or DecompositionScheme.exact()

    def kernel(self, profile: Profile) -> DivergenceKernel:
        raise NotImplementedError

    def report(self, profile: Profile) -> DivisivenessReport:
        scheme = self.decomposition
        kernel = self.kernel(profile)
        if scheme.kind == MONTE_CARLO:
            means, stderr = estimate_monte_carlo(kernel, scheme.samples, scheme.seed, scheme.workers)
            return DivisivenessReport.build(
                profile.proposals, means, MAX, method=self.name, sampling=scheme.label,
                seed=scheme.seed, samples=scheme.samples, stderr=stderr,
            )
        n = profile.n
        if n == 1:
            values = [Fraction(0)] * profile.m
        else:
            pairs = bipartition_count(n) + (1 if scheme.include_trivial else 0)
            values = [s / pairs for s in exact_sums(kernel, scheme.cap)]
        return DivisivenessReport.build(profile.proposals, values, MAX, method=self.name, sampling=scheme.label)


class ScoreBasedDsf(BipartitionDsf):
    """div_s(R, x, C, complement) = |s(R|C, x) - s(R|complement, x)|."""

    def __init__(self, scheme: Optional[ScoringScheme] = None, decomposition: Optional[DecompositionScheme] = None):
        super().__init__(decomposition)
        self.scheme = scheme or normalized_borda()

    @property
    def name(self) -> str:
        return f"score[{self.scheme.name}]"

    def kernel(self, profile: Profile) -> DivergenceKernel:
        return ScoreKernel(profile, self.scheme)


class ScfBasedDsf(BipartitionDsf):
    """div_F(R, x, C, complement) = |share of x in F(R|C) - share of x in F(R|complement)|."""

    def __init__(self, rule: Optional[Scf] = None, decomposition: Optional[DecompositionScheme] = None):
        super().__init__(decomposition)
        self.rule = rule or borda_rule()

    @property
    def name(self) -> str:
        return f"scf[{self.rule.name}]"

    def kernel(self, profile: Profile) -> DivergenceKernel:
        return kernel_for_scf(profile, self.rule)


# ---------------------------------------------------------------------------
# Profile index
# ---------------------------------------------------------------------------

class IndexBasedDsf(Dsf):
    """Proposals whose move to the top leaves the least diverse profile."""

    direction = MIN

    def __init__(self, index: Optional[ProfileIndex] = None):
        self.index = index or ProfileIndex.avg_kendall_tau()

    @property
    def name(self) -> str:
        return f"index[{self.index.name}]"

    @property
    def symmetric(self) -> bool:
        return self.index.is_neutral

    def report(self, profile: Profile) -> DivisivenessReport:
        values = [self.index.evaluate(move_to_top(profile, x)) for x in range(profile.m)]
        return DivisivenessReport.build(profile.proposals, values, MIN, method=self.name)


# ---------------------------------------------------------------------------
# Function forms
# ---------------------------------------------------------------------------

def rank_variance_dsf(profile: Profile) -> DivisivenessReport:
    return RankVarianceDsf().report(profile)


def navarrete_dsf(profile: Profile, scheme: Optional[ScoringScheme] = None) -> DivisivenessReport:
    return NavarreteDsf(scheme).report(profile)


def score_based_dsf(
    profile: Profile, scheme: Optional[ScoringScheme] = None, decomposition: Optional[DecompositionScheme] = None
) -> DivisivenessReport:
    return ScoreBasedDsf(scheme, decomposition).report(profile)


def scf_based_dsf(
    profile: Profile, rule: Optional[Scf] = None, decomposition: Optional[DecompositionScheme] = None
) -> DivisivenessReport:
    return ScfBasedDsf(rule, decomposition).report(profile)


def index_based_dsf(profile: Profile, index: Optional[ProfileIndex] = None) -> DivisivenessReport:
    return IndexBasedDsf(index).report(profile)
