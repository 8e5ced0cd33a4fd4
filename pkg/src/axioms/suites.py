"""
Property Suites
Bounded, executable readings of the positive results:

- symmetric DSFs select everything on perfectly uniform profiles;
- score-based DSFs with normalized positional scoring keep fixed-position
  proposals out unless everything is selected;
- index-based DSFs over a neutral index select both or neither of two clones.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence

import pandas as pd

from ..engine.dsf import Dsf, IndexBasedDsf, ScoreBasedDsf
from ..model.profile import clone_pairs, perfectly_uniform
from ..rules.scoring import SHIPPED_NORMALIZED, ScoringScheme
from .checks import PASS, SKIPPED, AxiomId, CheckOptions, check_axiom, clone_pairs_split
from .generators import GeneratorSpec, generate
from .search import SearchResult, search_counterexample

logger = logging.getLogger(__name__)


@dataclass
class UniformityRow:
    method: str
    m: int
    k: int
    anonymity: str
    neutrality: str
    uniformity: str

    @property
    def consistent(self) -> bool:
        """Symmetry on the profile implies the uniformity check passes."""
        if SKIPPED in (self.anonymity, self.neutrality, self.uniformity):
            return True
        if self.anonymity == PASS and self.neutrality == PASS:
            return self.uniformity == PASS
        return True


def uniformity_meta_check(
    dsfs: Sequence[Dsf],
    ms: Sequence[int] = (2, 3, 4),
    ks: Sequence[int] = (1, 2),
    options: Optional[CheckOptions] = None,
) -> List[UniformityRow]:
    """Run the symmetry and uniformity checks on every perfectly uniform profile in range."""
    rows = []
    for dsf in dsfs:
        for m in ms:
            for k in ks:
                profile = perfectly_uniform(m, k)
                statuses = [
                    check_axiom(dsf, axiom, profile, options).status
                    for axiom in (AxiomId.ANONYMITY, AxiomId.NEUTRALITY, AxiomId.UNIFORMITY)
                ]
                rows.append(UniformityRow(dsf.name, m, k, *statuses))
                logger.debug("[Suite] uniformity %s m=%d k=%d: %s", dsf.name, m, k, statuses)
    return rows


def uniformity_frame(rows: Sequence[UniformityRow]) -> pd.DataFrame:
    return pd.DataFrame([
        {'method': r.method, 'm': r.m, 'k': r.k, 'anonymity': r.anonymity,
         'neutrality': r.neutrality, 'uniformity': r.uniformity, 'consistent': r.consistent}
        for r in rows
    ])


def weak_position_unanimity_suite(
    schemes: Sequence[ScoringScheme] = SHIPPED_NORMALIZED,
    max_m: int = 4,
    max_n: int = 4,
    random_count: int = 1000,
    random_m: int = 5,
    random_n: int = 6,
    seed: int = 7,
    workers: int = 1,
) -> List[SearchResult]:
    """One exhaustive and one random search per normalized scheme."""
    results = []
    spaces = [GeneratorSpec.exhaustive(max_m, max_n)]
    if random_count:
        spaces.append(GeneratorSpec.random(random_count, seed, random_m, random_n))
    for scheme in schemes:
        dsf = ScoreBasedDsf(scheme)
        for space in spaces:
            result = search_counterexample(dsf, AxiomId.WEAK_POSITION_UNANIMITY, space, workers=workers)
            logger.info("[Suite] %s %s: %s", dsf.name, space.mode, result.status)
            results.append(result)
    return results


@dataclass
class CloneSuiteResult:
    profiles_with_clones: int
    split_profiles: int
    violations: int
    first_split: Optional[str] = None

    @property
    def clean(self) -> bool:
        return self.split_profiles == 0 and self.violations == 0


def clone_consistency_suite(
    dsf: Optional[IndexBasedDsf] = None,
    max_m: int = 4,
    max_n: int = 4,
    options: Optional[CheckOptions] = None,
) -> CloneSuiteResult:
    """Both-or-neither on every clone pair, over the exhaustive space."""
    dsf = dsf or IndexBasedDsf()
    with_clones = split = violations = 0
    first_split = None
    for profile in generate(GeneratorSpec.exhaustive(max_m, max_n)):
        if not clone_pairs(profile):
            continue
        with_clones += 1
        report = dsf.report(profile)
        if clone_pairs_split(report, profile):
            split += 1
            if first_split is None:
                first_split = ' '.join(profile.render())
        if check_axiom(dsf, AxiomId.CLONE_CONSISTENCY, profile, options).is_violation:
            violations += 1
    logger.info("[Suite] clones: %d profiles, %d split, %d violations", with_clones, split, violations)
    return CloneSuiteResult(with_clones, split, violations, first_split)
