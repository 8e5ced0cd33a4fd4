"""
Impossibility Certificates
Each verifier builds a witness profile, enumerates every nonempty set of
proposals as a candidate output, and records which axiom constraint rules
each candidate out. A certificate holds when every candidate is rejected
and every supporting fact about the witness checks out.
"""
import itertools
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple

import pandas as pd

from ..engine.dsf import IndexBasedDsf
from ..model.errors import ProfileInputError
from ..model.profile import (
    Profile, ProposalSet, Ranking, apply_proposal_permutation, are_clones, canonical_form,
    fixed_position_proposals, invert, is_unanimous, move_to_top, pareto_dominates,
)
from ..rules.indices import ProfileIndex
from .checks import clone_consistency_ok, pareto_ok, position_unanimity_ok, weak_position_unanimity_ok

logger = logging.getLogger(__name__)

Constraint = Callable[[FrozenSet[int]], bool]


@dataclass(frozen=True)
class CandidateRecord:
    selection: FrozenSet[int]
    failures: Tuple[str, ...]

    @property
    def rejected(self) -> bool:
        return bool(self.failures)


@dataclass(frozen=True)
class Fact:
    statement: str
    holds: bool


@dataclass
class Certificate:
    name: str
    claim: str
    profile: Profile
    candidates: List[CandidateRecord] = field(default_factory=list)
    facts: List[Fact] = field(default_factory=list)
    values: Dict[str, object] = field(default_factory=dict)

    @property
    def rejected(self) -> int:
        return sum(1 for c in self.candidates if c.rejected)

    @property
    def holds(self) -> bool:
        return all(c.rejected for c in self.candidates) and all(f.holds for f in self.facts)

    def table(self) -> pd.DataFrame:
        names = self.profile.proposals
        return pd.DataFrame([
            {
                'candidate': '{' + ','.join(names.labels(c.selection)) + '}',
                'rejected by': ', '.join(c.failures) if c.failures else '-',
            }
            for c in self.candidates
        ])

    def render(self) -> str:
        lines = [
            f"{self.name}: {self.claim}",
            "witness: " + ' '.join(self.profile.render()),
        ]
        for fact in self.facts:
            lines.append(f"  [{'ok' if fact.holds else 'FAILED'}] {fact.statement}")
        for key, value in self.values.items():
            lines.append(f"  {key} = {value}")
        if self.candidates:
            lines.append(self.table().to_string(index=False))
        lines.append(f"{self.rejected}/{len(self.candidates)} candidate sets rejected: "
                     f"{'HOLDS' if self.holds else 'DOES NOT HOLD'}")
        return '\n'.join(lines)


def nonempty_subsets(m: int) -> List[FrozenSet[int]]:
    """All 2^m - 1 nonempty subsets, by size then lexicographically."""
    return [frozenset(c) for k in range(1, m + 1) for c in itertools.combinations(range(m), k)]


def _enumerate(profile: Profile, constraints: Sequence[Tuple[str, Constraint]]) -> List[CandidateRecord]:
    records = []
    for selection in nonempty_subsets(profile.m):
        failures = tuple(name for name, ok in constraints if not ok(selection))
        records.append(CandidateRecord(selection, failures))
    return records


def _swap_symmetric(a: int, c: int) -> Constraint:
    return lambda s: (a in s) == (c in s)


# ---------------------------------------------------------------------------
# Pareto Efficiency vs Weak Position Unanimity
# ---------------------------------------------------------------------------

def theorem_1_profile(m: int = 3) -> Profile:
    """a > b1 > ... > b(m-1) and a > b(m-1) > ... > b1."""
    if m < 3:
        raise ProfileInputError(f"the witness needs m >= 3, got {m}")
    proposals = ProposalSet(('a',) + tuple(f"b{i}" for i in range(1, m)))
    tail = tuple(range(1, m))
    return Profile.from_rankings(proposals, [Ranking((0,) + tail), Ranking((0,) + tail[::-1])])


def verify_theorem_1(m: int = 3) -> Certificate:
    profile = theorem_1_profile(m)
    facts = [
        Fact("a is in position 1 throughout", 0 in fixed_position_proposals(profile)),
        Fact("a Pareto-dominates every b", all(pareto_dominates(profile, 0, b) for b in range(1, m))),
    ]
    constraints = [
        ("pareto efficiency", lambda s: pareto_ok(s, profile)),
        ("weak position unanimity", lambda s: weak_position_unanimity_ok(s, profile)),
    ]
    cert = Certificate(
        "thm1",
        "no DSF satisfies Pareto Efficiency and Weak Position Unanimity",
        profile, _enumerate(profile, constraints), facts,
    )
    logger.debug("[Certificate] thm1 m=%d: %d/%d rejected", m, cert.rejected, len(cert.candidates))
    return cert


# ---------------------------------------------------------------------------
# Neutral profile index vs Position Unanimity
# ---------------------------------------------------------------------------

def theorem_2_profile(m: int = 3, copies: int = 1) -> Profile:
    """`copies` agents ranking a1 > ... > am and as many ranking the reverse."""
    if m < 3 or m % 2 == 0:
        raise ProfileInputError(f"the witness needs an odd m >= 3, got {m}")
    if copies < 1:
        raise ProfileInputError(f"copies must be >= 1, got {copies}")
    proposals = ProposalSet(tuple(f"a{i}" for i in range(1, m + 1)))
    forward = Ranking(tuple(range(m)))
    return Profile.from_rankings(proposals, [forward] * copies + [forward.reversed()] * copies)


def _relabels_to(source: Profile, target: Profile) -> bool:
    """Some proposal permutation turns source into an agent relabeling of target."""
    key = canonical_form(target)
    return any(
        canonical_form(apply_proposal_permutation(source, sigma)) == key
        for sigma in itertools.permutations(range(source.m))
    )


def verify_theorem_2(m: int = 3, copies: int = 1) -> Certificate:
    profile = theorem_2_profile(m, copies)
    middle = (m - 1) // 2
    lifted = [move_to_top(profile, x) for x in range(m)]
    index = ProfileIndex.avg_kendall_tau()
    values = [index.evaluate(p) for p in lifted]
    names = profile.proposals

    facts = [
        Fact(f"{names.label(middle)} is the only fixed-position proposal",
             fixed_position_proposals(profile) == frozenset([middle])),
        Fact("the profile is not unanimous", not is_unanimous(profile)),
        Fact("every lifted profile is a proposal relabeling of the first",
             all(_relabels_to(lifted[0], other) for other in lifted[1:])),
        Fact("average Kendall tau agrees on every lifted profile", len(set(values)) == 1),
    ]
    selection = IndexBasedDsf(index).select(profile)
    facts.append(Fact("the Kendall-tau index DSF selects every proposal", len(selection) == m))

    # equal index values leave argmin = X for every neutral index
    constraints = [
        ("neutral index ties", lambda s: len(s) == m),
        ("position unanimity", lambda s: position_unanimity_ok(s, profile)),
    ]
    cert = Certificate(
        "thm2",
        "no index-based DSF with a neutral index satisfies Position Unanimity",
        profile, _enumerate(profile, constraints), facts,
        {f"kendall({names.label(x)} on top)": str(v) for x, v in enumerate(values)},
    )
    logger.debug("[Certificate] thm2 m=%d copies=%d: holds=%s", m, copies, cert.holds)
    return cert


# ---------------------------------------------------------------------------
# Anonymity + Neutrality + Clone Consistency vs Position Unanimity
# ---------------------------------------------------------------------------

def theorem_3_profile() -> Profile:
    return Profile.from_rankings('abc', ['abc', 'cba'])


def verify_theorem_3() -> Certificate:
    profile = theorem_3_profile()
    a, b, c = 0, 1, 2
    swapped = apply_proposal_permutation(profile, (c, b, a))
    facts = [
        Fact("swapping a and c yields an agent relabeling of the profile",
             canonical_form(swapped) == canonical_form(profile)),
        Fact("b is in position 2 throughout", b in fixed_position_proposals(profile)),
        Fact("a and b are clones", are_clones(profile, a, b)),
        Fact("b and c are clones", are_clones(profile, b, c)),
        Fact("a and c are not clones", not are_clones(profile, a, c)),
    ]
    constraints = [
        ("anonymity+neutrality (a<->c)", _swap_symmetric(a, c)),
        ("position unanimity", lambda s: position_unanimity_ok(s, profile)),
        ("clone consistency", lambda s: clone_consistency_ok(s, profile)),
    ]
    return Certificate(
        "thm3",
        "no DSF satisfies Anonymity, Neutrality, Clone Consistency and Position Unanimity",
        profile, _enumerate(profile, constraints), facts,
    )


# ---------------------------------------------------------------------------
# Inversion Invariance vs Pareto Efficiency
# ---------------------------------------------------------------------------

def verify_inversion_pareto_exclusion() -> Certificate:
    profile = Profile.from_rankings('ab', ['ab'])
    facts = [
        Fact("swapping a and b yields the inverted profile",
             apply_proposal_permutation(profile, (1, 0)) == invert(profile)),
        Fact("a Pareto-dominates b", pareto_dominates(profile, 0, 1)),
    ]
    constraints = [
        ("inversion invariance (a<->b)", _swap_symmetric(0, 1)),
        ("pareto efficiency", lambda s: pareto_ok(s, profile)),
    ]
    return Certificate(
        "exclusion",
        "no DSF satisfies both Inversion Invariance and Pareto Efficiency",
        profile, _enumerate(profile, constraints), facts,
    )


CERTIFICATES = {
    'thm1': verify_theorem_1,
    'thm2': verify_theorem_2,
    'thm3': verify_theorem_3,
    'exclusion': verify_inversion_pareto_exclusion,
}


def verify(name: str, m: Optional[int] = None, copies: int = 1) -> Certificate:
    if name not in CERTIFICATES:
        raise ProfileInputError(f"unknown certificate {name!r} (expected one of: {', '.join(CERTIFICATES)})")
    if name == 'thm1':
        return verify_theorem_1(m or 3)
    if name == 'thm2':
        return verify_theorem_2(m or 3, copies)
    return CERTIFICATES[name]()
