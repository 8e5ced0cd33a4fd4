"""
Profile Generators
Exhaustive enumeration of small profiles (one representative per multiset
of rankings) and seeded random profiles, in a fixed, reproducible order.
"""
import itertools
import logging
from dataclasses import dataclass
from math import comb, factorial
from typing import Iterator, List, Optional

import numpy as np

from ..engine import config
from ..model.errors import ProfileInputError
from ..model.profile import Profile, ProposalSet, Ranking, apply_proposal_permutation, canonical_form

logger = logging.getLogger(__name__)

EXHAUSTIVE = 'exhaustive'
RANDOM = 'random'


@dataclass(frozen=True)
class GeneratorSpec:
    """
    exhaustive: every profile with min_m <= m <= max_m, min_n <= n <= max_n,
    up to agent relabeling (each multiset of rankings exactly once).
    random: `count` profiles with m proposals and n agents drawn from `seed`.

    neutral_dedup additionally keeps one profile per proposal relabeling class;
    only sound for DSFs known to be neutral.
    """
    mode: str = EXHAUSTIVE
    min_m: int = 2
    max_m: int = 3
    min_n: int = 1
    max_n: int = 3
    count: int = 0
    seed: int = 0
    m: int = 3
    n: int = 3
    neutral_dedup: bool = False
    dedup: bool = True

    def __post_init__(self):
        config.check_seed(self.seed)
        if self.mode == EXHAUSTIVE:
            if not 1 <= self.min_m <= self.max_m or not 1 <= self.min_n <= self.max_n:
                raise ProfileInputError(
                    f"bad exhaustive bounds m in [{self.min_m}, {self.max_m}], n in [{self.min_n}, {self.max_n}]"
                )
        elif self.mode == RANDOM:
            if self.count < 1 or self.m < 1 or self.n < 1:
                raise ProfileInputError(f"random generation needs count, m, n >= 1 (got {self.count}, {self.m}, {self.n})")
        else:
            raise ProfileInputError(f"unknown generator mode {self.mode!r}")

    @classmethod
    def exhaustive(cls, max_m: int, max_n: int, min_m: int = 2, min_n: int = 1, neutral_dedup: bool = False) -> "GeneratorSpec":
        return cls(EXHAUSTIVE, min_m=min_m, max_m=max_m, min_n=min_n, max_n=max_n, neutral_dedup=neutral_dedup)

    @classmethod
    def random(cls, count: int, seed: int, m: int, n: int, dedup: bool = True) -> "GeneratorSpec":
        return cls(RANDOM, count=count, seed=seed, m=m, n=n, dedup=dedup)

    def size_hint(self) -> int:
        """Upper bound on the number of profiles generated."""
        if self.mode == RANDOM:
            return self.count
        return sum(
            comb(factorial(m) + n - 1, n)
            for m in range(self.min_m, self.max_m + 1)
            for n in range(self.min_n, self.max_n + 1)
        )


def _all_rankings(m: int) -> List[Ranking]:
    return [Ranking(order) for order in itertools.permutations(range(m))]


def _is_neutral_representative(profile: Profile) -> bool:
    key = canonical_form(profile)
    return all(
        key <= canonical_form(apply_proposal_permutation(profile, sigma))
        for sigma in itertools.permutations(range(profile.m))
    )


def _exhaustive(spec: GeneratorSpec) -> Iterator[Profile]:
    for m in range(spec.min_m, spec.max_m + 1):
        proposals = ProposalSet.default(m)
        rankings = _all_rankings(m)
        for n in range(spec.min_n, spec.max_n + 1):
            for combo in itertools.combinations_with_replacement(range(len(rankings)), n):
                profile = Profile.from_rankings(proposals, [rankings[i] for i in combo])
                if spec.neutral_dedup and not _is_neutral_representative(profile):
                    continue
                yield profile


def _random(spec: GeneratorSpec) -> Iterator[Profile]:
    rng = np.random.default_rng(spec.seed)
    proposals = ProposalSet.default(spec.m)
    seen = set()
    for _ in range(spec.count):
        orders = [tuple(int(v) for v in rng.permutation(spec.m)) for _ in range(spec.n)]
        profile = Profile.from_rankings(proposals, orders)
        if spec.dedup:
            key = canonical_form(profile)
            if key in seen:
                continue
            seen.add(key)
        yield profile


def generate(spec: GeneratorSpec) -> Iterator[Profile]:
    """Profiles in the generator's fixed scan order."""
    logger.debug("[Generate] %s, at most %d profiles", spec.mode, spec.size_hint())
    if spec.mode == EXHAUSTIVE:
        return _exhaustive(spec)
    return _random(spec)


def random_profile(m: int, n: int, seed: Optional[int] = None, proposals: Optional[ProposalSet] = None) -> Profile:
    rng = np.random.default_rng(None if seed is None else config.check_seed(seed))
    proposals = proposals or ProposalSet.default(m)
    return Profile.from_rankings(proposals, [tuple(int(v) for v in rng.permutation(m)) for _ in range(n)])


def random_profiles(count: int, m: int, n: int, seed: int) -> List[Profile]:
    """count independent profiles from one seeded stream (duplicates kept)."""
    return list(generate(GeneratorSpec.random(count, seed, m, n, dedup=False)))

