"""
Tests for profile generation and the counterexample search
"""
import pytest
from src.axioms.checks import SKIPPED, AxiomId
from src.axioms.generators import GeneratorSpec, generate, random_profile, random_profiles
from src.axioms.search import EXHAUSTED, FOUND, search_counterexample
from src.engine.dsf import DecompositionScheme, RankVarianceDsf, ScoreBasedDsf
from src.model.errors import ProfileInputError
from src.model.profile import canonical_form
from src.rules.scoring import normalized_borda


def first_proposal_on_three_agents(profile):
    """Selects only the first proposal on three-agent profiles, everything elsewhere."""
    return frozenset([0]) if profile.n == 3 else frozenset(range(profile.m))


class TestGenerators:
    def test_exhaustive_counts(self):
        spec = GeneratorSpec.exhaustive(max_m=3, max_n=3)
        profiles = list(generate(spec))
        assert len(profiles) == spec.size_hint() == 9 + 6 + 21 + 56

    def test_exhaustive_order(self):
        profiles = list(generate(GeneratorSpec.exhaustive(max_m=2, max_n=2)))
        assert [p.render() for p in profiles] == [
            ['ab'], ['ba'], ['ab', 'ab'], ['ab', 'ba'], ['ba', 'ba'],
        ]

    def test_exhaustive_one_profile_per_multiset(self):
        profiles = list(generate(GeneratorSpec.exhaustive(max_m=3, max_n=3, min_m=3, min_n=3)))
        keys = [canonical_form(p) for p in profiles]
        assert len(keys) == len(set(keys)) == 56

    def test_neutral_dedup(self):
        profiles = list(generate(GeneratorSpec.exhaustive(max_m=2, max_n=2, neutral_dedup=True)))
        assert [p.render() for p in profiles] == [['ab'], ['ab', 'ab'], ['ab', 'ba']]

    def test_random_is_seeded(self):
        first = [p.render() for p in generate(GeneratorSpec.random(10, seed=3, m=4, n=5))]
        second = [p.render() for p in generate(GeneratorSpec.random(10, seed=3, m=4, n=5))]
        assert first == second
        assert all(len(r) == 5 and len(r[0]) == 4 for r in first)

    def test_random_dedup(self):
        profiles = list(generate(GeneratorSpec.random(200, seed=1, m=2, n=1)))
        assert len(profiles) == 2
        assert len(random_profiles(200, 2, 1, seed=1)) == 200

    def test_random_profile(self):
        profile = random_profile(5, 7, seed=12)
        assert (profile.m, profile.n) == (5, 7)
        assert profile == random_profile(5, 7, seed=12)

    @pytest.mark.parametrize("kwargs", [
        dict(mode='exhaustive', min_m=3, max_m=2),
        dict(mode='exhaustive', min_n=0),
        dict(mode='random', count=0),
        dict(mode='grid'),
    ])
    def test_bad_specs(self, kwargs):
        with pytest.raises(ProfileInputError):
            GeneratorSpec(**kwargs)


class TestSearch:
    def setup_method(self):
        self.dsf = RankVarianceDsf()

    def test_rank_variance_breaks_uniform_reinforcement_at_once(self):
        spec = GeneratorSpec.exhaustive(max_m=3, max_n=3, min_m=3)
        result = search_counterexample(self.dsf, AxiomId.UNIFORM_REINFORCEMENT, spec)
        assert result.status == FOUND
        assert result.index == 0
        assert result.scanned == 1
        assert result.outcome.witness.profile.render() == ['abc']
        assert 'violation at profile #0' in result.describe()

    def test_rank_variance_survives_on_two_proposals(self):
        spec = GeneratorSpec.exhaustive(max_m=2, max_n=3)
        result = search_counterexample(self.dsf, AxiomId.UNIFORM_REINFORCEMENT, spec)
        assert result.status == EXHAUSTED
        assert not result.found
        assert result.scanned == 9
        assert 'exhausted 9 profiles' in result.describe()

    @pytest.mark.parametrize("workers", [1, 2, 3])
    def test_first_violation_does_not_depend_on_threads(self, workers):
        spec = GeneratorSpec.exhaustive(max_m=3, max_n=3)
        result = search_counterexample(first_proposal_on_three_agents, AxiomId.PROFILE_UNANIMITY, spec,
                                       workers=workers, chunk_size=2)
        assert result.index == 5
        assert result.scanned == 6
        assert result.tally == {'pass': 4, 'inapplicable': 1, 'violation': 1}

    def test_capped_profiles_do_not_abort_the_scan(self):
        dsf = ScoreBasedDsf(normalized_borda())
        spec = GeneratorSpec.exhaustive(max_m=4, max_n=2, min_m=4)
        result = search_counterexample(dsf, AxiomId.UNIFORM_REINFORCEMENT, spec)
        # every enlarged profile has 24 + n agents, past the cap of 20
        assert result.status == EXHAUSTED
        assert result.scanned == spec.size_hint() == 24 + 300
        assert result.tally == {SKIPPED: 324}
        assert result.skipped == 324
        assert 'skipped over the exact cap' in result.describe()

    def test_monte_carlo_scan_at_four_proposals(self):
        dsf = ScoreBasedDsf(normalized_borda(), DecompositionScheme.monte_carlo(500, seed=2))
        spec = GeneratorSpec.exhaustive(max_m=4, max_n=1, min_m=4)
        result = search_counterexample(dsf, AxiomId.UNIFORM_REINFORCEMENT, spec)
        assert result.skipped == 0
        assert 'skipped' not in result.describe()

    @pytest.mark.parametrize("seed", [-1, 2 ** 64])
    def test_random_space_rejects_bad_seed(self, seed):
        with pytest.raises(ProfileInputError):
            GeneratorSpec.random(5, seed=seed, m=3, n=3)
        with pytest.raises(ProfileInputError):
            random_profile(3, 3, seed=seed)

    def test_random_space(self):
        spec = GeneratorSpec.random(30, seed=5, m=3, n=3)
        result = search_counterexample(self.dsf, AxiomId.ANONYMITY, spec)
        assert result.status == EXHAUSTED
        assert result.scanned == len(list(generate(spec)))


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
