"""
Fixtures
Worked examples and proof witnesses rebuilt verbatim, run through the
designated method or verifier and compared with the known outcome.
"""
import difflib
import itertools
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, List

from ..axioms.checks import AxiomId, check_axiom
from ..axioms.theorems import verify_inversion_pareto_exclusion, verify_theorem_1, verify_theorem_2, verify_theorem_3
from ..engine import config
from ..engine.dsf import NavarreteDsf, RankVarianceDsf, ScfBasedDsf, ScoreBasedDsf
from ..model.errors import ProfileInputError
from ..model.profile import Profile, ProposalSet, fresh_agent_id, perfectly_uniform, union
from ..rules.scoring import epsilon_borda, normalized_borda, normalized_plurality
from ..rules.voting import borda_rule

logger = logging.getLogger(__name__)


@dataclass
class FixtureResult:
    name: str
    expected: List[str]
    actual: List[str]
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def diff(self) -> str:
        return '\n'.join(difflib.unified_diff(
            self.expected, self.actual, fromfile=f"{self.name} (expected)", tofile=f"{self.name} (actual)", lineterm='',
        ))

    def render(self) -> str:
        head = f"[{'PASS' if self.passed else 'FAIL'}] {self.name}"
        body = self.actual if self.passed else [self.diff()]
        return '\n'.join([head] + [f"  {line}" for line in body + self.notes])


def _braces(profile: Profile, selection: FrozenSet[int]) -> str:
    return '{' + ','.join(profile.proposals.labels(selection)) + '}'


# ---------------------------------------------------------------------------
# Profiles
# ---------------------------------------------------------------------------

def example_1_profile() -> Profile:
    return Profile.from_rankings('abcd', ['abcd', 'bacd', 'abdc', 'badc'])


def example_2_profile(copies: int = 1) -> Profile:
    return Profile.from_rankings('abc', ['abc'] * copies + ['acb'] * copies)


def example_3_profile() -> Profile:
    return Profile.from_rankings(
        ProposalSet(('a', 'b', 'c', 'x', 'y')),
        ['a>x>y>b>c', 'b>x>y>c>a', 'c>x>y>a>b'],
        agent_ids=[1, 2, 3],
    )


def rank_variance_profile() -> Profile:
    return Profile.from_rankings('abcde', ['abcde', 'badce'])


def reinforcement_profiles():
    """Six agents with a on top over every order of b, c, d; six more with a at the bottom."""
    tails = [''.join(p) for p in itertools.permutations('bcd')]
    top = Profile.from_rankings('abcd', ['a' + t for t in tails])
    bottom = Profile.from_rankings('abcd', [t + 'a' for t in tails], first_agent_id=fresh_agent_id(top))
    return top, bottom


# ---------------------------------------------------------------------------
# Fixtures
# ---------------------------------------------------------------------------

def fixture_ex1() -> FixtureResult:
    profile = example_1_profile()
    small = epsilon_borda(4, config.EPSILON, normalized=True, electorate_size=profile.n)
    actual = []
    for scheme in (normalized_borda(), small):
        report = NavarreteDsf(scheme).report(profile)
        actual.append(f"{scheme.name}: {_braces(profile, report.selection)}")
    expected = ["nborda: {a,b,c,d}", f"{small.name}: {{a,b}}"]
    return FixtureResult('ex1', expected, actual)


def fixture_ex2() -> FixtureResult:
    expected, actual = [], []
    for copies in (1, 2):
        profile = example_2_profile(copies)
        report = ScfBasedDsf(borda_rule()).report(profile)
        expected.append(f"n={2 * copies}: {{a,b,c}}")
        actual.append(f"n={profile.n}: {_braces(profile, report.selection)}")
    return FixtureResult('ex2', expected, actual)


def fixture_ex3() -> FixtureResult:
    profile = example_3_profile()
    report = ScfBasedDsf(borda_rule()).report(profile)
    actual = [f"selection: {_braces(profile, report.selection)}", f"x = {report.value_of('x')}"]
    return FixtureResult('ex3', ["selection: {x}", "x = 1"], actual)


def fixture_prop3() -> FixtureResult:
    profile = rank_variance_profile()
    dsf = RankVarianceDsf()
    small = dsf.report(profile)
    uniform = perfectly_uniform(5, 1, fresh_agent_id(profile), profile.proposals)
    combined = union(profile, uniform)
    large = dsf.report(combined)
    actual = [
        f"n={profile.n}: {_braces(profile, small.selection)}",
        f"e = {small.value_of('e')}",
        f"n={combined.n}: {_braces(combined, large.selection)}",
    ]
    expected = ["n=2: {a,b,c,d}", "e = 0", "n=122: {e}"]
    notes = [f"{name} = {value}" for name, value in large.labelled_values()]
    return FixtureResult('prop3', expected, actual, notes)


def fixture_plurality_pu() -> FixtureResult:
    profile = example_2_profile(1)
    dsf = ScoreBasedDsf(normalized_plurality())
    report = dsf.report(profile)
    outcome = check_axiom(dsf, AxiomId.POSITION_UNANIMITY, profile)
    actual = [f"selection: {_braces(profile, report.selection)}", f"position_unanimity: {outcome.status}"]
    return FixtureResult('plurality-pu', ["selection: {a,b,c}", "position_unanimity: violation"], actual)


def _certificate_lines(cert) -> List[str]:
    return [f"{cert.name}: {cert.rejected}/{len(cert.candidates)} rejected, holds={cert.holds}"]


def fixture_thm1() -> FixtureResult:
    cert = verify_theorem_1(3)
    return FixtureResult('thm1', ["thm1: 7/7 rejected, holds=True"], _certificate_lines(cert))


def fixture_thm2() -> FixtureResult:
    expected, actual = [], []
    for m in (3, 5):
        cert = verify_theorem_2(m)
        expected.append(f"m={m}: {2 ** m - 1}/{2 ** m - 1} rejected, holds=True")
        actual.append(f"m={m}: {cert.rejected}/{len(cert.candidates)} rejected, holds={cert.holds}")
    return FixtureResult('thm2', expected, actual)


def fixture_thm3() -> FixtureResult:
    cert = verify_theorem_3()
    return FixtureResult('thm3', ["thm3: 7/7 rejected, holds=True"], _certificate_lines(cert))


def fixture_exclusion() -> FixtureResult:
    cert = verify_inversion_pareto_exclusion()
    return FixtureResult('exclusion', ["exclusion: 3/3 rejected, holds=True"], _certificate_lines(cert))


def fixture_reinforcement() -> FixtureResult:
    top, bottom = reinforcement_profiles()
    dsf = NavarreteDsf(normalized_borda())
    combined = union(top, bottom)
    actual = [
        f"R: {_braces(top, dsf.select(top))}",
        f"R': {_braces(bottom, dsf.select(bottom))}",
        f"R+R': {_braces(combined, dsf.select(combined))}",
    ]
    return FixtureResult('reinforcement', ["R: {b,c,d}", "R': {b,c,d}", "R+R': {a}"], actual)


FIXTURES: Dict[str, Callable[[], FixtureResult]] = {
    'ex1': fixture_ex1,
    'ex2': fixture_ex2,
    'ex3': fixture_ex3,
    'prop3': fixture_prop3,
    'plurality-pu': fixture_plurality_pu,
    'thm1': fixture_thm1,
    'thm2': fixture_thm2,
    'thm3': fixture_thm3,
    'reinforcement': fixture_reinforcement,
    'exclusion': fixture_exclusion,
}


def run_fixture(name: str) -> List[FixtureResult]:
    """Run one fixture, or every fixture for 'all'."""
    if name == 'all':
        names = list(FIXTURES)
    elif name in FIXTURES:
        names = [name]
    else:
        raise ProfileInputError(f"unknown fixture {name!r} (expected all or one of: {', '.join(FIXTURES)})")
    results = []
    for fixture in names:
        result = FIXTURES[fixture]()
        logger.info("[Repro] %s: %s", fixture, 'pass' if result.passed else 'FAIL')
        results.append(result)
    return results
