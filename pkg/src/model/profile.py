"""
Preference Profile Model
Proposals, strict rankings, profiles over agent ids, and the profile algebra
(positions, coalitions, restriction, union, inversion, move-to-top, clones,
Pareto dominance, perfectly uniform profiles, symmetry actions).

All values are immutable; every operation returns a new object.
Internal math uses proposal indices; labels are only for display and I/O.
"""
import itertools
import math
import string
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import DisjointnessError, ProfileInputError


@dataclass(frozen=True)
class ProposalSet:
    """Ordered, duplicate-free proposal labels."""
    names: Tuple[str, ...]

    def __post_init__(self):
        if not self.names:
            raise ProfileInputError("a proposal set needs at least one proposal")
        if len(set(self.names)) != len(self.names):
            raise ProfileInputError(f"duplicate proposal labels in {list(self.names)}")

    @classmethod
    def of(cls, names: Iterable[str]) -> "ProposalSet":
        return cls(tuple(str(n) for n in names))

    @classmethod
    def default(cls, m: int) -> "ProposalSet":
        """Letters a, b, c, ... for m <= 26, otherwise p1..pm."""
        if m < 1:
            raise ProfileInputError(f"m must be >= 1, got {m}")
        if m <= 26:
            return cls(tuple(string.ascii_lowercase[:m]))
        return cls(tuple(f"p{i + 1}" for i in range(m)))

    @property
    def m(self) -> int:
        return len(self.names)

    @cached_property
    def _lookup(self) -> Dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    def index(self, label: str) -> int:
        try:
            return self._lookup[label]
        except KeyError:
            raise ProfileInputError(f"unknown proposal {label!r}") from None

    def label(self, x: int) -> str:
        self.check(x)
        return self.names[x]

    def check(self, x: int) -> int:
        if not isinstance(x, int) or not 0 <= x < self.m:
            raise ProfileInputError(f"unknown proposal index {x!r} (m={self.m})")
        return x

    def labels(self, xs: Iterable[int]) -> List[str]:
        """Labels of a set of proposals, in proposal order."""
        return [self.names[x] for x in sorted(xs)]

    @property
    def compact(self) -> bool:
        """True when every label is a single character (rankings print as 'abc')."""
        return all(len(n) == 1 for n in self.names)


@dataclass(frozen=True)
class Ranking:
    """A strict linear order, best first, as a permutation of proposal indices."""
    order: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.order) != list(range(len(self.order))):
            raise ProfileInputError(f"ranking {list(self.order)} is not a permutation of 0..{len(self.order) - 1}")

    @classmethod
    def parse(cls, text: str, proposals: ProposalSet) -> "Ranking":
        """Parse 'a>b>c' (any labels) or 'abc' (single-character labels)."""
        text = text.strip()
        tokens = [t.strip() for t in text.split('>')] if '>' in text else list(text)
        if len(tokens) != proposals.m:
            raise ProfileInputError(f"ranking {text!r} lists {len(tokens)} proposals, expected {proposals.m}")
        return cls(tuple(proposals.index(t) for t in tokens))

    @property
    def m(self) -> int:
        return len(self.order)

    @cached_property
    def positions(self) -> Tuple[int, ...]:
        """positions[x] = 1-based rank of proposal x."""
        inverse = [0] * len(self.order)
        for k, x in enumerate(self.order):
            inverse[x] = k + 1
        return tuple(inverse)

    def position(self, x: int) -> int:
        return self.positions[x]

    def prefers(self, x: int, y: int) -> bool:
        return self.positions[x] < self.positions[y]

    def reversed(self) -> "Ranking":
        return Ranking(tuple(reversed(self.order)))

    def moved_to_top(self, x: int) -> "Ranking":
        return Ranking((x,) + tuple(y for y in self.order if y != x))

    def relabeled(self, sigma: Sequence[int]) -> "Ranking":
        return Ranking(tuple(sigma[x] for x in self.order))

    def render(self, proposals: ProposalSet) -> str:
        labels = [proposals.names[x] for x in self.order]
        return ''.join(labels) if proposals.compact else '>'.join(labels)


Entry = Tuple[int, Ranking]


@dataclass(frozen=True)
class SubProfile:
    """Agent-indexed rankings over a shared proposal set; may be empty."""
    proposals: ProposalSet
    entries: Tuple[Entry, ...]

    def __post_init__(self):
        ids = [agent for agent, _ in self.entries]
        if any((not isinstance(a, int)) or a < 0 for a in ids):
            raise ProfileInputError(f"agent ids must be non-negative integers, got {ids}")
        if len(set(ids)) != len(ids):
            raise ProfileInputError(f"duplicate agent ids in {ids}")
        for agent, ranking in self.entries:
            if ranking.m != self.proposals.m:
                raise ProfileInputError(f"agent {agent} ranks {ranking.m} proposals, expected {self.proposals.m}")

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def m(self) -> int:
        return self.proposals.m

    @property
    def is_empty(self) -> bool:
        return not self.entries

    @property
    def agents(self) -> Tuple[int, ...]:
        return tuple(agent for agent, _ in self.entries)

    @property
    def rankings(self) -> Tuple[Ranking, ...]:
        return tuple(ranking for _, ranking in self.entries)

    @cached_property
    def _by_agent(self) -> Dict[int, Ranking]:
        return dict(self.entries)

    def ranking_of(self, agent: int) -> Ranking:
        try:
            return self._by_agent[agent]
        except KeyError:
            raise ProfileInputError(f"unknown agent {agent!r}") from None

    def as_mapping(self) -> Dict[int, Ranking]:
        """The profile as the function N -> X! (entry order forgotten)."""
        return dict(self._by_agent)

    def render(self) -> List[str]:
        return [r.render(self.proposals) for r in self.rankings]


@dataclass(frozen=True)
class Profile(SubProfile):
    """A SubProfile whose electorate is nonempty."""

    def __post_init__(self):
        super().__post_init__()
        if not self.entries:
            raise ProfileInputError("a profile needs at least one agent")

    @classmethod
    def from_rankings(
        cls,
        proposals: Union[ProposalSet, Sequence[str], str],
        rankings: Sequence[Union[str, Sequence[int], Ranking]],
        agent_ids: Optional[Sequence[int]] = None,
        first_agent_id: int = 0,
    ) -> "Profile":
        """
        Build a profile from textual or index rankings.

        Args:
            proposals: ProposalSet, a sequence of labels, or a string of single-letter labels.
            rankings: 'a>b>c' / 'abc' strings, index sequences, or Ranking objects.
            agent_ids: explicit ids; defaults to first_agent_id, first_agent_id + 1, ...
        """
        if not isinstance(proposals, ProposalSet):
            proposals = ProposalSet.of(proposals)
        parsed = []
        for r in rankings:
            if isinstance(r, Ranking):
                parsed.append(r)
            elif isinstance(r, str):
                parsed.append(Ranking.parse(r, proposals))
            else:
                parsed.append(Ranking(tuple(r)))
        if agent_ids is None:
            agent_ids = range(first_agent_id, first_agent_id + len(parsed))
        agent_ids = list(agent_ids)
        if len(agent_ids) != len(parsed):
            raise ProfileInputError(f"{len(agent_ids)} agent ids for {len(parsed)} rankings")
        return cls(proposals, tuple(zip(agent_ids, parsed)))


AnyProfile = Union[Profile, SubProfile]


def _rebuild(template: AnyProfile, entries: Sequence[Entry]) -> AnyProfile:
    cls = Profile if entries else SubProfile
    return cls(template.proposals, tuple(entries))


def _check_distinct(profile: AnyProfile, x: int, y: int):
    profile.proposals.check(x)
    profile.proposals.check(y)
    if x == y:
        raise ProfileInputError(f"expected two distinct proposals, got {x} twice")


# ---------------------------------------------------------------------------
# Positions and coalitions
# ---------------------------------------------------------------------------

def position(profile: AnyProfile, agent: int, x: int) -> int:
    """1 + number of proposals the agent ranks above x."""
    profile.proposals.check(x)
    return profile.ranking_of(agent).position(x)


def supporters(profile: AnyProfile, x: int, y: int) -> FrozenSet[int]:
    """Agents ranking x above y."""
    _check_distinct(profile, x, y)
    return frozenset(a for a, r in profile.entries if r.prefers(x, y))


def restrict(profile: AnyProfile, coalition: Iterable[int]) -> SubProfile:
    """Entries of the coalition's agents, original order preserved; a Profile unless empty."""
    coalition = set(coalition)
    unknown = coalition - set(profile.agents)
    if unknown:
        raise ProfileInputError(f"coalition contains unknown agents {sorted(unknown)}")
    return _rebuild(profile, [e for e in profile.entries if e[0] in coalition])


def union(left: Profile, right: Profile) -> Profile:
    """The profile behaving like left on its electorate and like right on its own."""
    if left.proposals != right.proposals:
        raise ProfileInputError("cannot unite profiles over different proposal sets")
    overlap = set(left.agents) & set(right.agents)
    if overlap:
        raise DisjointnessError(f"electorates overlap on agents {sorted(overlap)}")
    return Profile(left.proposals, left.entries + right.entries)


# ---------------------------------------------------------------------------
# Profile transformations
# ---------------------------------------------------------------------------

def invert(profile: AnyProfile) -> AnyProfile:
    return _rebuild(profile, [(a, r.reversed()) for a, r in profile.entries])


def move_to_top(profile: AnyProfile, x: int) -> AnyProfile:
    profile.proposals.check(x)
    return _rebuild(profile, [(a, r.moved_to_top(x)) for a, r in profile.entries])


def perfectly_uniform(
    m: int, k: int = 1, first_agent_id: int = 0, proposals: Optional[ProposalSet] = None
) -> Profile:
    """k copies of each of the m! rankings, ids first_agent_id .. first_agent_id + k*m! - 1."""
    if m < 1 or k < 1:
        raise ProfileInputError(f"perfectly uniform profile needs m >= 1 and k >= 1, got m={m}, k={k}")
    proposals = proposals or ProposalSet.default(m)
    if proposals.m != m:
        raise ProfileInputError(f"proposal set has {proposals.m} proposals, expected {m}")
    orders = list(itertools.permutations(range(m)))
    rankings = [Ranking(order) for _ in range(k) for order in orders]
    return Profile.from_rankings(proposals, rankings, first_agent_id=first_agent_id)


def apply_agent_bijection(profile: AnyProfile, sigma: Mapping[int, int]) -> AnyProfile:
    """
    The composition R o sigma: agent j holds R(sigma(j)).

    sigma maps new agent ids to old ones; restricted to the agents it sends
    into the electorate it must be injective and hit every agent exactly once.
    Entries of the result are ordered by new agent id.
    """
    agents = set(profile.agents)
    preimage: Dict[int, int] = {}
    for new_id, old_id in sigma.items():
        if old_id not in agents:
            continue
        if old_id in preimage:
            raise ProfileInputError(f"sigma is not injective: agents {preimage[old_id]} and {new_id} both map to {old_id}")
        preimage[old_id] = new_id
    missing = agents - set(preimage)
    if missing:
        raise ProfileInputError(f"sigma does not reach agents {sorted(missing)}")
    entries = sorted(((preimage[a], r) for a, r in profile.entries), key=lambda e: e[0])
    return _rebuild(profile, entries)


def _as_permutation(sigma: Union[Sequence[int], Mapping[int, int]], m: int) -> Tuple[int, ...]:
    if isinstance(sigma, Mapping):
        try:
            perm = tuple(sigma[x] for x in range(m))
        except KeyError as e:
            raise ProfileInputError(f"proposal permutation undefined on {e.args[0]}") from None
    else:
        perm = tuple(sigma)
    if sorted(perm) != list(range(m)):
        raise ProfileInputError(f"{list(perm)} is not a permutation of 0..{m - 1}")
    return perm


def apply_proposal_permutation(profile: AnyProfile, sigma: Union[Sequence[int], Mapping[int, int]]) -> AnyProfile:
    """Relabel every ranking pointwise: proposal x becomes sigma(x)."""
    perm = _as_permutation(sigma, profile.m)
    return _rebuild(profile, [(a, r.relabeled(perm)) for a, r in profile.entries])


# ---------------------------------------------------------------------------
# Predicates
# ---------------------------------------------------------------------------

def are_clones(profile: AnyProfile, x: int, y: int) -> bool:
    """x and y adjacent in every ranking."""
    _check_distinct(profile, x, y)
    return all(abs(r.position(x) - r.position(y)) == 1 for r in profile.rankings)


def pareto_dominates(profile: AnyProfile, x: int, y: int) -> bool:
    """Every agent ranks x above y."""
    _check_distinct(profile, x, y)
    return all(r.prefers(x, y) for r in profile.rankings)


def canonical_form(profile: AnyProfile) -> Tuple[Tuple[int, ...], ...]:
    """Sorted multiset of rankings; equal iff the profiles differ by an agent bijection."""
    return tuple(sorted(r.order for r in profile.rankings))


def is_unanimous(profile: AnyProfile) -> bool:
    return len({r.order for r in profile.rankings}) <= 1


def fixed_position_proposals(profile: AnyProfile) -> FrozenSet[int]:
    """Proposals occupying the same position in every ranking."""
    if profile.is_empty:
        return frozenset()
    first = profile.rankings[0]
    return frozenset(
        x for x in range(profile.m)
        if all(r.position(x) == first.position(x) for r in profile.rankings)
    )


def is_perfectly_uniform(profile: AnyProfile) -> bool:
    counts: Dict[Tuple[int, ...], int] = {}
    for r in profile.rankings:
        counts[r.order] = counts.get(r.order, 0) + 1
    return len(counts) == math.factorial(profile.m) and len(set(counts.values())) == 1


def clone_pairs(profile: AnyProfile) -> List[Tuple[int, int]]:
    """All unordered clone pairs (x < y)."""
    return [(x, y) for x, y in itertools.combinations(range(profile.m), 2) if are_clones(profile, x, y)]


def dominated_proposals(profile: AnyProfile) -> FrozenSet[int]:
    """Proposals Pareto-dominated by some other proposal."""
    return frozenset(
        y for y in range(profile.m)
        if any(pareto_dominates(profile, x, y) for x in range(profile.m) if x != y)
    )


def pairwise_counts(profile: AnyProfile) -> List[List[int]]:
    """counts[x][y] = number of agents ranking x above y."""
    m = profile.m
    counts = [[0] * m for _ in range(m)]
    for r in profile.rankings:
        order = r.order
        for i, x in enumerate(order):
            row = counts[x]
            for y in order[i + 1:]:
                row[y] += 1
    return counts


def fresh_agent_id(profile: AnyProfile) -> int:
    """Smallest id above every agent of the profile."""
    return max(profile.agents, default=-1) + 1
