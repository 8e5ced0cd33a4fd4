"""
Counterexample Search
Scan a generated profile space for the first violation of an axiom.

"First" is by position in the generator's scan order, not by wall clock:
chunks run concurrently in waves and the lowest-index violation of the
earliest violating wave wins, so the answer does not depend on --threads.
"""
import itertools
import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ..model.profile import Profile
from .checks import SKIPPED, VIOLATION, AxiomId, CheckOptions, CheckOutcome, Selector, check_axiom
from .generators import GeneratorSpec, generate

logger = logging.getLogger(__name__)

EXHAUSTED = 'exhausted'
FOUND = 'violation'

CHUNK_SIZE = 64


@dataclass
class SearchResult:
    status: str
    axiom: AxiomId
    scanned: int
    outcome: Optional[CheckOutcome] = None
    index: Optional[int] = None
    # pass / inapplicable counts over the profiles scanned
    tally: Dict[str, int] = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return self.status == FOUND

    @property
    def skipped(self) -> int:
        """Profiles the DSF refused as over its exact cap."""
        return self.tally.get(SKIPPED, 0)

    def describe(self) -> str:
        counts = ', '.join(f"{k}={v}" for k, v in sorted(self.tally.items()))
        if self.found:
            return (f"{self.axiom.value}: violation at profile #{self.index} "
                    f"after {self.scanned} profiles ({counts})\n{self.outcome.witness.describe()}")
        text = f"{self.axiom.value}: exhausted {self.scanned} profiles without a violation ({counts})"
        if self.skipped:
            text += f"\nwarning: {self.skipped} profile(s) skipped over the exact cap; try --sampling mc"
        return text


def _scan(dsf: Selector, axiom: AxiomId, chunk: List[Tuple[int, Profile]], options: CheckOptions):
    """(first violating index or None, its outcome, status counts up to it)."""
    counts = Counter()
    for index, profile in chunk:
        outcome = check_axiom(dsf, axiom, profile, options)
        counts[outcome.status] += 1
        if outcome.status == VIOLATION:
            return index, outcome, counts
    return None, None, counts


def search_counterexample(
    dsf: Selector,
    axiom: AxiomId,
    spec: GeneratorSpec,
    options: Optional[CheckOptions] = None,
    workers: int = 1,
    chunk_size: int = CHUNK_SIZE,
) -> SearchResult:
    """Return the first violation in scan order, or an exhausted certificate."""
    axiom = AxiomId(axiom)
    options = options or CheckOptions()
    profiles = enumerate(generate(spec))
    total = Counter()
    scanned = 0
    logger.info("[Search] %s over %s space (<= %d profiles), %d worker(s)",
                axiom.value, spec.mode, spec.size_hint(), workers)

    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        while True:
            wave = []
            for _ in range(max(1, workers)):
                chunk = list(itertools.islice(profiles, chunk_size))
                if chunk:
                    wave.append(chunk)
            if not wave:
                break
            results = list(pool.map(lambda c: _scan(dsf, axiom, c, options), wave))
            for chunk, (index, outcome, counts) in zip(wave, results):
                total.update(counts)
                if index is not None:
                    scanned += index - chunk[0][0] + 1
                    logger.info("[Search] violation at profile #%d", index)
                    return SearchResult(FOUND, axiom, scanned, outcome, index, dict(total))
                scanned += len(chunk)

    return SearchResult(EXHAUSTED, axiom, scanned, tally=dict(total))
