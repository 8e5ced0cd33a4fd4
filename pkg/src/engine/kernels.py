"""
Divergence Kernels
Per-decomposition divisiveness div(R, x, C, complement) for every proposal at
once, with three ways to evaluate it:

- incrementally along a Gray-code walk (add/remove one agent, observe),
  accumulating exact sums in scaled integers;
- vectorised over a block of sampled coalition masks (numpy), for Monte Carlo;
- directly on two restricted subprofiles (reference path, any rule).
"""
from fractions import Fraction
from math import lcm
from typing import Dict, Iterable, List, Sequence

import numpy as np

from ..model.errors import ProfileInputError
from ..model.profile import Profile, SubProfile
from ..rules.scoring import COPELAND_ASYMMETRIC, ScoringScheme, copeland_scores
from ..rules.voting import Scf, top_set


class DivergenceKernel:
    """Base: coalition membership plus the generic subprofile path."""

    name = 'generic'
    # True when sample_matrix keeps no running state and may run on several threads
    vectorised = False

    def __init__(self, profile: Profile):
        self.profile = profile
        self.n = profile.n
        self.m = profile.m
        self.members = set()
        self.clear_sums()

    # -- incremental protocol -------------------------------------------

    def reset(self, members: Iterable[int]):
        """Restart the running coalition; accumulated sums are kept."""
        self.members = set()
        self._clear_tally()
        for i in members:
            self.add(i)

    def clear_sums(self):
        self._sums = [Fraction(0)] * self.m

    def _clear_tally(self):
        pass

    def add(self, i: int):
        self.members.add(i)

    def remove(self, i: int):
        self.members.discard(i)

    def observe(self):
        current = self.current()
        self._sums = [s + d for s, d in zip(self._sums, current)]

    def totals(self) -> List[Fraction]:
        return list(self._sums)

    def current(self) -> List[Fraction]:
        entries = self.profile.entries
        sub_c = SubProfile(self.profile.proposals, tuple(entries[i] for i in sorted(self.members)))
        rest = [entries[i] for i in range(self.n) if i not in self.members]
        sub_cc = SubProfile(self.profile.proposals, tuple(rest))
        return self.on_subprofiles(sub_c, sub_cc)

    # -- paths without running state ------------------------------------

    def on_subprofiles(self, sub_c: SubProfile, sub_cc: SubProfile) -> List[Fraction]:
        raise NotImplementedError

    def sample_matrix(self, masks: np.ndarray) -> np.ndarray:
        """div for each sampled coalition (rows of a boolean S x n matrix), as floats."""
        out = np.zeros((masks.shape[0], self.m))
        for row, mask in enumerate(masks):
            self.reset(np.flatnonzero(mask).tolist())
            out[row] = [float(v) for v in self.current()]
        return out


def _agent_weights(profile: Profile, vector: Sequence[int]) -> List[List[int]]:
    """rows[i][x] = weight agent i's position of x earns."""
    return [[vector[p - 1] for p in r.positions] for r in profile.rankings]


def _agent_pairwise(profile: Profile) -> List[List[int]]:
    """rows[i][x*m + y] = 1 iff agent i ranks x above y."""
    m = profile.m
    rows = []
    for r in profile.rankings:
        pos = r.positions
        rows.append([1 if pos[x] < pos[y] else 0 for x in range(m) for y in range(m)])
    return rows


class ScoreKernel(DivergenceKernel):
    """div_s = |s(R|C, x) - s(R|complement, x)| for a scoring scheme s."""

    vectorised = True

    def __init__(self, profile: Profile, scheme: ScoringScheme):
        super().__init__(profile)
        self.scheme = scheme
        self.name = f"score[{scheme.name}]"
        self.positional = scheme.is_positional
        if self.positional:
            vector, self.scale = scheme.integer_vector(self.m)
            self.rows = _agent_weights(profile, vector)
        else:
            self.scale = 1
            self.rows = _agent_pairwise(profile)
        width = len(self.rows[0])
        self.total = [sum(row[k] for row in self.rows) for k in range(width)]
        self.normalized = scheme.is_normalized
        self._clear_tally()

    def clear_sums(self):
        self._acc = [0] * self.m
        # normalized sums are kept per coalition size, denominators applied at the end
        self._buckets: Dict[int, List[int]] = {}

    def _clear_tally(self):
        self.size = 0
        self.tally = [0] * len(self.total)

    def add(self, i: int):
        self.size += 1
        tally = self.tally
        for k, w in enumerate(self.rows[i]):
            tally[k] += w

    def remove(self, i: int):
        self.size -= 1
        tally = self.tally
        for k, w in enumerate(self.rows[i]):
            tally[k] -= w

    def _copeland_pair(self):
        m = self.m
        inside = [self.tally[x * m:(x + 1) * m] for x in range(m)]
        outside = [[t - v for t, v in zip(self.total[x * m:(x + 1) * m], inside[x])] for x in range(m)]
        return copeland_scores(inside, self.scheme.kind), copeland_scores(outside, self.scheme.kind)

    def observe(self):
        c = self.size
        nc = self.n - c
        tally, total = self.tally, self.total
        if not self.positional:
            s_in, s_out = self._copeland_pair()
            acc = self._acc
            for x in range(self.m):
                acc[x] += abs(s_in[x] - s_out[x])
        elif self.normalized:
            bucket = self._buckets.get(c)
            if bucket is None:
                bucket = self._buckets[c] = [0] * self.m
            for x in range(self.m):
                t = tally[x]
                bucket[x] += abs(t * nc - (total[x] - t) * c)
        else:
            acc = self._acc
            for x in range(self.m):
                acc[x] += abs(2 * tally[x] - total[x])

    def totals(self) -> List[Fraction]:
        if self.positional and self.normalized:
            sums = [Fraction(0)] * self.m
            for c, bucket in self._buckets.items():
                denominator = self.scale * c * (self.n - c)
                sums = [s + Fraction(b, denominator) for s, b in zip(sums, bucket)]
            return sums
        return [Fraction(a, self.scale) for a in self._acc]

    def current(self) -> List[Fraction]:
        c, nc = self.size, self.n - self.size
        if c == 0 or nc == 0:
            return [Fraction(0)] * self.m
        if not self.positional:
            s_in, s_out = self._copeland_pair()
            return [Fraction(abs(a - b)) for a, b in zip(s_in, s_out)]
        tally, total = self.tally, self.total
        if self.normalized:
            return [
                Fraction(abs(tally[x] * nc - (total[x] - tally[x]) * c), self.scale * c * nc)
                for x in range(self.m)
            ]
        return [Fraction(abs(2 * tally[x] - total[x]), self.scale) for x in range(self.m)]

    def on_subprofiles(self, sub_c: SubProfile, sub_cc: SubProfile) -> List[Fraction]:
        if sub_c.is_empty or sub_cc.is_empty:
            return [Fraction(0)] * self.m
        return [abs(self.scheme.score(sub_c, x) - self.scheme.score(sub_cc, x)) for x in range(self.m)]

    def sample_matrix(self, masks: np.ndarray) -> np.ndarray:
        members = masks.astype(np.int64)
        sizes = members.sum(axis=1)
        inside = members @ np.asarray(self.rows, dtype=np.int64)
        outside = np.asarray(self.total, dtype=np.int64)[None, :] - inside
        if not self.positional:
            m = self.m
            s_in = _copeland_rows(inside.reshape(-1, m, m), self.scheme.kind)
            s_out = _copeland_rows(outside.reshape(-1, m, m), self.scheme.kind)
            return np.abs(s_in - s_out).astype(float)
        if self.normalized:
            c = sizes[:, None]
            nc = self.n - c
            numerator = np.abs(inside * nc - outside * c)
            return numerator / (self.scale * c * nc)
        return np.abs(inside - outside) / self.scale


def _copeland_rows(pairwise: np.ndarray, kind: str) -> np.ndarray:
    """Copeland scores for a stack of S x m x m pairwise matrices."""
    transposed = np.transpose(pairwise, (0, 2, 1))
    wins = (pairwise > transposed).sum(axis=2)
    if kind == COPELAND_ASYMMETRIC:
        return wins
    losses = (pairwise < transposed).sum(axis=2)
    return wins - losses


class ScfKernel(DivergenceKernel):
    """div_F = |[x in F(C)]/|F(C)| - [x in F(complement)]/|F(complement)||."""

    vectorised = True

    def __init__(self, profile: Profile, rule: Scf):
        super().__init__(profile)
        self.rule = rule
        self.name = f"scf[{rule.name}]"
        if not rule.is_positional:
            raise ProfileInputError(f"{rule.name} has no tally form; use the generic kernel")
        # normalisation never moves the argmax, so raw scaled totals suffice
        vector, _ = rule.scheme.integer_vector(self.m)
        self.rows = _agent_weights(profile, vector)
        self.total = [sum(row[x] for row in self.rows) for x in range(self.m)]
        self.share_scale = lcm(*range(1, self.m + 1))
        self._clear_tally()

    def clear_sums(self):
        self._acc = [0] * self.m

    def _clear_tally(self):
        self.size = 0
        self.tally = [0] * self.m

    def add(self, i: int):
        self.size += 1
        self.tally = [t + w for t, w in zip(self.tally, self.rows[i])]

    def remove(self, i: int):
        self.size -= 1
        self.tally = [t - w for t, w in zip(self.tally, self.rows[i])]

    def _scaled_shares(self, scores: Sequence[int]) -> List[int]:
        won = top_set(scores)
        share = self.share_scale // len(won)
        return [share if x in won else 0 for x in range(self.m)]

    def _scaled_current(self) -> List[int]:
        inside = self._scaled_shares(self.tally)
        outside = self._scaled_shares([t - v for t, v in zip(self.total, self.tally)])
        return [abs(a - b) for a, b in zip(inside, outside)]

    def observe(self):
        self._acc = [a + d for a, d in zip(self._acc, self._scaled_current())]

    def totals(self) -> List[Fraction]:
        return [Fraction(a, self.share_scale) for a in self._acc]

    def current(self) -> List[Fraction]:
        if self.size == 0 or self.size == self.n:
            return [Fraction(0)] * self.m
        return [Fraction(d, self.share_scale) for d in self._scaled_current()]

    def on_subprofiles(self, sub_c: SubProfile, sub_cc: SubProfile) -> List[Fraction]:
        if sub_c.is_empty or sub_cc.is_empty:
            return [Fraction(0)] * self.m
        return [abs(self.rule.win_share(sub_c, x) - self.rule.win_share(sub_cc, x)) for x in range(self.m)]

    def sample_matrix(self, masks: np.ndarray) -> np.ndarray:
        inside = masks.astype(np.int64) @ np.asarray(self.rows, dtype=np.int64)
        outside = np.asarray(self.total, dtype=np.int64)[None, :] - inside
        return np.abs(_share_rows(inside) - _share_rows(outside))


def _share_rows(scores: np.ndarray) -> np.ndarray:
    won = scores == scores.max(axis=1, keepdims=True)
    return won / won.sum(axis=1, keepdims=True)


class GenericScfKernel(DivergenceKernel):
    """div_F for any rule, evaluated on restricted subprofiles."""

    def __init__(self, profile: Profile, rule: Scf):
        super().__init__(profile)
        self.rule = rule
        self.name = f"scf[{rule.name}]"

    def on_subprofiles(self, sub_c: SubProfile, sub_cc: SubProfile) -> List[Fraction]:
        if sub_c.is_empty or sub_cc.is_empty:
            return [Fraction(0)] * self.m
        return [abs(self.rule.win_share(sub_c, x) - self.rule.win_share(sub_cc, x)) for x in range(self.m)]


def kernel_for_scf(profile: Profile, rule: Scf) -> DivergenceKernel:
    if rule.is_positional:
        return ScfKernel(profile, rule)
    return GenericScfKernel(profile, rule)
