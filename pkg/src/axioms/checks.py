"""
Axiom Checks
Instance-level checks of the ten divisiveness axioms on one profile.

Each axiom is a universal statement over profiles; a check evaluates its
condition on the profile given (plus the perturbations the axiom quantifies
over: agent relabelings, proposal permutations, added uniform profiles,
the inversion). A violation carries a witness that replays.

The `*_ok` predicates judge a candidate selection set directly; the
certificate verifiers reuse them to rule out every possible output.
"""
import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, FrozenSet, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..engine import config
from ..engine.report import DivisivenessReport
from ..model.errors import CapacityError, ProfileInputError
from ..model.profile import (
    Profile, apply_agent_bijection, apply_proposal_permutation, are_clones, clone_pairs,
    dominated_proposals, fixed_position_proposals, fresh_agent_id, invert, is_perfectly_uniform,
    is_unanimous, perfectly_uniform, union,
)

logger = logging.getLogger(__name__)

PASS = 'pass'
VIOLATION = 'violation'
INAPPLICABLE = 'inapplicable'
# the DSF refused the profile (or a perturbation of it) for exceeding the exact cap
SKIPPED = 'skipped'

Selector = Callable[[Profile], FrozenSet[int]]


class AxiomId(str, Enum):
    ANONYMITY = 'anonymity'
    NEUTRALITY = 'neutrality'
    UNIFORMITY = 'uniformity'
    PROFILE_UNANIMITY = 'profile_unanimity'
    POSITION_UNANIMITY = 'position_unanimity'
    WEAK_POSITION_UNANIMITY = 'weak_position_unanimity'
    UNIFORM_REINFORCEMENT = 'uniform_reinforcement'
    CLONE_CONSISTENCY = 'clone_consistency'
    INVERSION_INVARIANCE = 'inversion_invariance'
    PARETO_EFFICIENCY = 'pareto_efficiency'

    @classmethod
    def parse(cls, text: str) -> "AxiomId":
        key = text.strip().lower().replace('-', '_')
        try:
            return cls(key)
        except ValueError:
            names = ', '.join(a.value for a in cls)
            raise ProfileInputError(f"unknown axiom {text!r} (expected one of: {names})") from None

    @property
    def cli_name(self) -> str:
        return self.value.replace('_', '-')


@dataclass(frozen=True)
class CheckOptions:
    """Quantifier budget for the checks."""
    anonymity_sweep_max_n: int = field(default_factory=lambda: config.ANONYMITY_SWEEP_MAX_N)
    neutrality_sweep_max_m: int = field(default_factory=lambda: config.NEUTRALITY_SWEEP_MAX_M)
    permutation_samples: int = field(default_factory=lambda: config.PERMUTATION_SAMPLES)
    uniform_copies: int = field(default_factory=lambda: config.UNIFORM_COPIES)
    seed: int = field(default_factory=lambda: config.DEFAULT_SEED)

    def __post_init__(self):
        config.check_seed(self.seed)


@dataclass(frozen=True)
class Witness:
    """The profile a violation shows up on, plus the perturbed profile it was compared with."""
    profile: Profile
    selection: FrozenSet[int]
    related: Optional[Profile] = None
    related_selection: Optional[FrozenSet[int]] = None
    details: str = ''

    def describe(self) -> str:
        names = self.profile.proposals
        lines = [
            "profile: " + ' '.join(self.profile.render()),
            "selection: {" + ','.join(names.labels(self.selection)) + "}",
        ]
        if self.related is not None:
            lines.append("compared with: " + ' '.join(self.related.render()))
            lines.append("its selection: {" + ','.join(names.labels(self.related_selection)) + "}")
        if self.details:
            lines.append(self.details)
        return '\n'.join(lines)


@dataclass(frozen=True)
class CheckOutcome:
    axiom: AxiomId
    status: str
    witness: Optional[Witness] = None
    # False when only a sample of the quantified perturbations was tried
    exhaustive: bool = True
    details: str = ''

    def __post_init__(self):
        if self.status == VIOLATION and self.witness is None:
            raise ProfileInputError("a violation needs a witness")

    @property
    def is_violation(self) -> bool:
        return self.status == VIOLATION

    def describe(self) -> str:
        head = f"{self.axiom.value}: {self.status}"
        if self.status == PASS and not self.exhaustive:
            head += " (within budget)"
        if self.details:
            head += f" - {self.details}"
        if self.witness is not None:
            head += '\n' + self.witness.describe()
        return head


# ---------------------------------------------------------------------------
# Constraints on a candidate selection
# ---------------------------------------------------------------------------

def _everything(profile: Profile) -> FrozenSet[int]:
    return frozenset(range(profile.m))


def profile_unanimity_ok(selection: FrozenSet[int], profile: Profile) -> bool:
    return not is_unanimous(profile) or selection == _everything(profile)


def uniformity_ok(selection: FrozenSet[int], profile: Profile) -> bool:
    return not is_perfectly_uniform(profile) or selection == _everything(profile)


def position_unanimity_ok(selection: FrozenSet[int], profile: Profile) -> bool:
    if is_unanimous(profile):
        return True
    return not (selection & fixed_position_proposals(profile))


def weak_position_unanimity_ok(selection: FrozenSet[int], profile: Profile) -> bool:
    if selection == _everything(profile):
        return True
    return not (selection & fixed_position_proposals(profile))


def pareto_ok(selection: FrozenSet[int], profile: Profile) -> bool:
    return not (selection & dominated_proposals(profile))


def clone_triples(profile: Profile) -> List[Tuple[int, int, int]]:
    """(x, x', y) with x, x' clones and x, y not clones."""
    triples = []
    for x, x2 in itertools.permutations(range(profile.m), 2):
        if not are_clones(profile, x, x2):
            continue
        for y in range(profile.m):
            if y != x and y != x2 and not are_clones(profile, x, y):
                triples.append((x, x2, y))
    return triples


def clone_consistency_breaks(selection: FrozenSet[int], profile: Profile) -> List[Tuple[int, int, int]]:
    """Triples where {x, y} is selected but the clone x' is not."""
    return [
        (x, x2, y) for x, x2, y in clone_triples(profile)
        if x in selection and y in selection and x2 not in selection
    ]


def clone_consistency_ok(selection: FrozenSet[int], profile: Profile) -> bool:
    return not clone_consistency_breaks(selection, profile)


def clone_pairs_split(report: DivisivenessReport, profile: Profile) -> List[Tuple[int, int]]:
    """Clone pairs with exactly one member selected."""
    return [(x, y) for x, y in clone_pairs(profile) if (x in report.selection) != (y in report.selection)]


# ---------------------------------------------------------------------------
# Quantifier sweeps
# ---------------------------------------------------------------------------

def _agent_relabelings(profile: Profile, options: CheckOptions) -> Tuple[Iterator[dict], bool]:
    """sigma: new id -> old id, every permutation when small, else a seeded sample."""
    agents = list(profile.agents)
    n = len(agents)
    shifted = {a + fresh_agent_id(profile): a for a in agents}
    if n <= options.anonymity_sweep_max_n:
        perms = (dict(zip(agents, p)) for p in itertools.permutations(agents))
        return itertools.chain(perms, [shifted]), True
    rng = np.random.default_rng(options.seed)
    sampled = [dict(zip(agents, (agents[i] for i in rng.permutation(n)))) for _ in range(options.permutation_samples)]
    return iter(sampled + [shifted]), False


def _proposal_permutations(m: int, options: CheckOptions) -> Tuple[Iterator[Tuple[int, ...]], bool]:
    if m <= options.neutrality_sweep_max_m:
        return itertools.permutations(range(m)), True
    rng = np.random.default_rng(options.seed)
    return iter([tuple(int(v) for v in rng.permutation(m)) for _ in range(options.permutation_samples)]), False


def _violation(axiom: AxiomId, profile: Profile, selection, related=None, related_selection=None,
               details: str = '', exhaustive: bool = True) -> CheckOutcome:
    witness = Witness(profile, selection, related, related_selection, details)
    return CheckOutcome(axiom, VIOLATION, witness, exhaustive, details)


# ---------------------------------------------------------------------------
# check_axiom
# ---------------------------------------------------------------------------

def check_axiom(dsf: Selector, axiom: AxiomId, profile: Profile, options: Optional[CheckOptions] = None) -> CheckOutcome:
    """
    Evaluate one axiom's condition for the DSF on this profile.

    Args:
        dsf: anything mapping a Profile to its selected proposal indices
             (a Dsf instance or a plain function).
        axiom: which axiom.
        profile: the profile to check on.
        options: quantifier budget (defaults from config).

    An exact DSF that refuses the profile, or a perturbation of it (e.g. the
    enlarged uniform-reinforcement profile), over its electorate cap gives a
    SKIPPED outcome instead of an error.
    """
    options = options or CheckOptions()
    axiom = AxiomId(axiom)
    try:
        return _check(dsf, axiom, profile, options)
    except CapacityError as e:
        logger.debug("[Axioms] %s skipped on %d agents: %s", axiom.value, profile.n, e)
        return CheckOutcome(axiom, SKIPPED, exhaustive=False, details=f"over the exact cap: {e}")


def _check(dsf: Selector, axiom: AxiomId, profile: Profile, options: CheckOptions) -> CheckOutcome:
    selection = frozenset(dsf(profile))
    everything = _everything(profile)
    names = profile.proposals

    if axiom == AxiomId.ANONYMITY:
        relabelings, exhaustive = _agent_relabelings(profile, options)
        for sigma in relabelings:
            moved = apply_agent_bijection(profile, sigma)
            other = frozenset(dsf(moved))
            if other != selection:
                return _violation(axiom, profile, selection, moved, other,
                                  f"agent relabeling {sorted(sigma.items())}", exhaustive)
        return CheckOutcome(axiom, PASS, exhaustive=exhaustive)

    if axiom == AxiomId.NEUTRALITY:
        perms, exhaustive = _proposal_permutations(profile.m, options)
        for sigma in perms:
            moved = apply_proposal_permutation(profile, sigma)
            other = frozenset(dsf(moved))
            expected = frozenset(sigma[x] for x in selection)
            if other != expected:
                return _violation(axiom, profile, selection, moved, other,
                                  f"proposal permutation {list(sigma)}", exhaustive)
        return CheckOutcome(axiom, PASS, exhaustive=exhaustive)

    if axiom == AxiomId.UNIFORMITY:
        if not is_perfectly_uniform(profile):
            return CheckOutcome(axiom, INAPPLICABLE, details="profile is not perfectly uniform")
        if selection != everything:
            return _violation(axiom, profile, selection, details="perfectly uniform profile without full selection")
        return CheckOutcome(axiom, PASS)

    if axiom == AxiomId.PROFILE_UNANIMITY:
        if not is_unanimous(profile):
            return CheckOutcome(axiom, INAPPLICABLE, details="profile is not unanimous")
        if selection != everything:
            return _violation(axiom, profile, selection, details="unanimous profile without full selection")
        return CheckOutcome(axiom, PASS)

    if axiom in (AxiomId.POSITION_UNANIMITY, AxiomId.WEAK_POSITION_UNANIMITY):
        fixed = fixed_position_proposals(profile)
        if not fixed:
            return CheckOutcome(axiom, INAPPLICABLE, details="no proposal holds a fixed position")
        if axiom == AxiomId.POSITION_UNANIMITY:
            if is_unanimous(profile):
                return CheckOutcome(axiom, INAPPLICABLE, details="unanimous profile is exempt")
            ok = position_unanimity_ok(selection, profile)
        else:
            ok = weak_position_unanimity_ok(selection, profile)
        if not ok:
            caught = names.labels(selection & fixed)
            return _violation(axiom, profile, selection, details=f"fixed-position proposals selected: {caught}")
        return CheckOutcome(axiom, PASS)

    if axiom == AxiomId.UNIFORM_REINFORCEMENT:
        uniform = perfectly_uniform(profile.m, options.uniform_copies, fresh_agent_id(profile), names)
        combined = union(profile, uniform)
        other = frozenset(dsf(combined))
        if other != selection:
            return _violation(axiom, profile, selection, combined, other,
                              f"added {options.uniform_copies} cop{'y' if options.uniform_copies == 1 else 'ies'} "
                              f"of every ranking")
        return CheckOutcome(axiom, PASS)

    if axiom == AxiomId.CLONE_CONSISTENCY:
        if not clone_triples(profile):
            return CheckOutcome(axiom, INAPPLICABLE, details="no clone pair with a non-clone third proposal")
        breaks = clone_consistency_breaks(selection, profile)
        if breaks:
            x, x2, y = breaks[0]
            return _violation(axiom, profile, selection,
                              details=f"{names.label(x)} and {names.label(y)} selected, clone {names.label(x2)} is not")
        return CheckOutcome(axiom, PASS)

    if axiom == AxiomId.INVERSION_INVARIANCE:
        inverted = invert(profile)
        other = frozenset(dsf(inverted))
        if other != selection:
            return _violation(axiom, profile, selection, inverted, other, "inverted profile")
        return CheckOutcome(axiom, PASS)

    if axiom == AxiomId.PARETO_EFFICIENCY:
        dominated = dominated_proposals(profile)
        if not dominated:
            return CheckOutcome(axiom, INAPPLICABLE, details="no Pareto-dominated proposal")
        if selection & dominated:
            return _violation(axiom, profile, selection,
                              details=f"dominated proposals selected: {names.labels(selection & dominated)}")
        return CheckOutcome(axiom, PASS)

    raise ProfileInputError(f"unknown axiom {axiom!r}")


def check_all(dsf: Selector, profile: Profile, options: Optional[CheckOptions] = None,
              axioms: Optional[Sequence[AxiomId]] = None) -> List[CheckOutcome]:
    outcomes = []
    for axiom in axioms or list(AxiomId):
        outcome = check_axiom(dsf, axiom, profile, options)
        logger.debug("[Axioms] %s on %d agents: %s", axiom.value, profile.n, outcome.status)
        outcomes.append(outcome)
    return outcomes
