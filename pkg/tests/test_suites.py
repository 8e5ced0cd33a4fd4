"""
Tests for the property suites
"""
import pytest
from src.axioms.checks import CheckOptions
from src.axioms.search import EXHAUSTED
from src.axioms.suites import (
    SKIPPED, CloneSuiteResult, UniformityRow, clone_consistency_suite, uniformity_frame,
    uniformity_meta_check, weak_position_unanimity_suite,
)
from src.engine.dsf import IndexBasedDsf, NavarreteDsf, RankVarianceDsf, ScfBasedDsf, ScoreBasedDsf
from src.rules.scoring import normalized_borda, normalized_plurality


@pytest.fixture
def options():
    return CheckOptions(anonymity_sweep_max_n=6, neutrality_sweep_max_m=4, permutation_samples=10, seed=3)


class TestUniformityMetaCheck:
    def test_symmetric_dsfs_select_everything(self, options):
        dsfs = [RankVarianceDsf(), NavarreteDsf(), IndexBasedDsf()]
        rows = uniformity_meta_check(dsfs, ms=(2, 3), ks=(1, 2), options=options)
        assert len(rows) == 12
        assert all(r.consistent for r in rows)
        assert all(r.uniformity == 'pass' for r in rows)

    def test_capped_rows_are_skipped(self, options):
        rows = uniformity_meta_check([ScoreBasedDsf()], ms=(4,), ks=(1,), options=options)
        assert rows[0].uniformity == SKIPPED
        assert rows[0].consistent

    def test_inconsistent_row(self):
        row = UniformityRow('x', 3, 1, 'pass', 'pass', 'violation')
        assert not row.consistent
        assert UniformityRow('x', 3, 1, 'violation', 'pass', 'violation').consistent

    def test_frame(self, options):
        rows = uniformity_meta_check([RankVarianceDsf()], ms=(2,), ks=(1,), options=options)
        frame = uniformity_frame(rows)
        assert list(frame.columns) == ['method', 'm', 'k', 'anonymity', 'neutrality', 'uniformity', 'consistent']
        assert frame.iloc[0]['method'] == 'rankvar'

    @pytest.mark.slow
    def test_bipartition_dsfs_on_three_proposals(self, options):
        dsfs = [ScoreBasedDsf(normalized_borda()), ScfBasedDsf()]
        rows = uniformity_meta_check(dsfs, ms=(2, 3), ks=(1,), options=options)
        assert all(r.uniformity == 'pass' for r in rows)


class TestWeakPositionUnanimitySuite:
    def test_small_spaces(self):
        results = weak_position_unanimity_suite(
            (normalized_borda(), normalized_plurality()), max_m=3, max_n=3,
            random_count=20, random_m=4, random_n=4, seed=2,
        )
        assert len(results) == 4
        assert all(r.status == EXHAUSTED for r in results)

    @pytest.mark.slow
    def test_full_default_spaces(self):
        results = weak_position_unanimity_suite(random_count=200, workers=2)
        assert not any(r.found for r in results)


class TestCloneSuite:
    def test_kendall_index_keeps_clones_together(self):
        result = clone_consistency_suite(max_m=3, max_n=3)
        assert isinstance(result, CloneSuiteResult)
        assert result.profiles_with_clones > 0
        assert result.clean
        assert result.first_split is None

    def test_two_agent_space(self):
        result = clone_consistency_suite(IndexBasedDsf(), max_m=3, max_n=2)
        assert result.split_profiles == 0

    @pytest.mark.slow
    def test_four_by_four(self):
        assert clone_consistency_suite(max_m=4, max_n=4).clean


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
