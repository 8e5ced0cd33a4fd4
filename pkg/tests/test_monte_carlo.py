"""
Tests for Monte Carlo estimation of the bipartition-based DSFs
"""
import numpy as np
import pytest
from src.axioms.generators import random_profile, random_profiles
from src.engine.dsf import DecompositionScheme, ScfBasedDsf, ScoreBasedDsf
from src.engine.kernels import GenericScfKernel, ScfKernel, ScoreKernel
from src.engine.monte_carlo import CHUNK_SIZE, draw_coalitions, estimate_monte_carlo
from src.model.errors import ProfileInputError
from src.model.profile import Profile, ProposalSet
from src.rules.scoring import normalized_borda
from src.rules.voting import borda_rule


@pytest.fixture
def example_3():
    return Profile.from_rankings(
        ProposalSet(('a', 'b', 'c', 'x', 'y')),
        ['a>x>y>b>c', 'b>x>y>c>a', 'c>x>y>a>b'],
        agent_ids=[1, 2, 3],
    )


class TestDrawCoalitions:
    def test_shape_and_pinning(self):
        masks = draw_coalitions(5, 1000, seed=1)
        assert masks.shape == (1000, 5)
        assert masks[:, 0].all()
        assert not masks.all(axis=1).any()

    def test_seeded(self):
        assert np.array_equal(draw_coalitions(6, 300, seed=4), draw_coalitions(6, 300, seed=4))
        assert not np.array_equal(draw_coalitions(6, 300, seed=4), draw_coalitions(6, 300, seed=5))

    def test_two_agents_have_one_bipartition(self):
        masks = draw_coalitions(2, 50, seed=0)
        assert (masks == [True, False]).all()

    def test_roughly_uniform(self):
        masks = draw_coalitions(3, 30000, seed=2)
        codes = masks[:, 1] * 1 + masks[:, 2] * 2
        counts = np.bincount(codes, minlength=4)
        assert counts[3] == 0
        assert list(counts[:3] / 30000) == pytest.approx([1 / 3] * 3, abs=0.02)

    def test_rejects_bad_arguments(self):
        with pytest.raises(ProfileInputError):
            draw_coalitions(4, 0, seed=1)
        with pytest.raises(ProfileInputError):
            draw_coalitions(1, 10, seed=1)


class TestEstimates:
    def test_close_to_exact_on_example_3(self, example_3):
        exact = ScfBasedDsf(borda_rule()).report(example_3)
        sampled = ScfBasedDsf(borda_rule(), DecompositionScheme.monte_carlo(20000, seed=7)).report(example_3)
        for e, s in zip(exact.values, sampled.values):
            assert abs(float(e) - s) < 0.05
        assert sampled.selection == exact.selection
        assert sampled.sampling == 'mc:20000'
        assert sampled.seed == 7
        assert not sampled.is_exact

    def test_score_based_close_to_exact(self):
        profile = random_profile(4, 8, seed=11)
        exact = ScoreBasedDsf(normalized_borda()).evaluate(profile)
        sampled = ScoreBasedDsf(normalized_borda(), DecompositionScheme.monte_carlo(20000, seed=3)).evaluate(profile)
        for e, s in zip(exact, sampled):
            assert abs(float(e) - s) < 0.05

    @pytest.mark.slow
    @pytest.mark.parametrize("make", [
        lambda d: ScoreBasedDsf(normalized_borda(), d),
        lambda d: ScfBasedDsf(borda_rule(), d),
    ], ids=['score-nborda', 'scf-borda'])
    def test_twenty_profile_oracle(self, make):
        worst, matches = 0.0, 0
        for i, profile in enumerate(random_profiles(20, 4, 8, seed=7)):
            exact = make(DecompositionScheme.exact()).report(profile)
            sampled = make(DecompositionScheme.monte_carlo(20000, seed=7 + i)).report(profile)
            worst = max(worst, max(abs(float(e) - s) for e, s in zip(exact.values, sampled.values)))
            matches += exact.selection == sampled.selection
        assert worst < 0.05
        assert matches >= 18

    def test_zero_divergence_has_zero_error(self):
        profile = Profile.from_rankings('abc', ['abc', 'acb', 'abc', 'acb'])
        report = ScfBasedDsf(borda_rule(), DecompositionScheme.monte_carlo(500, seed=1)).report(profile)
        assert report.values == (0.0, 0.0, 0.0)
        assert report.stderr == (0.0, 0.0, 0.0)

    def test_single_sample_has_zero_error(self, example_3):
        _, stderr = estimate_monte_carlo(ScoreKernel(example_3, normalized_borda()), 1, seed=5)
        assert stderr == [0.0] * 5

    def test_single_agent(self):
        kernel = ScoreKernel(Profile.from_rankings('abc', ['abc']), normalized_borda())
        assert estimate_monte_carlo(kernel, 100, seed=1) == ([0.0] * 3, [0.0] * 3)

    def test_thread_count_does_not_change_estimates(self):
        profile = random_profile(5, 9, seed=2)
        samples = 2 * CHUNK_SIZE + 17
        single = estimate_monte_carlo(ScoreKernel(profile, normalized_borda()), samples, seed=8, workers=1)
        pooled = estimate_monte_carlo(ScoreKernel(profile, normalized_borda()), samples, seed=8, workers=4)
        assert single == pooled

    def test_generic_kernel_matches_vectorised(self, example_3):
        generic = estimate_monte_carlo(GenericScfKernel(example_3, borda_rule()), 400, seed=9)
        fast = estimate_monte_carlo(ScfKernel(example_3, borda_rule()), 400, seed=9)
        assert generic[0] == pytest.approx(fast[0])
        assert generic[1] == pytest.approx(fast[1])


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
