"""
Tests for the impossibility certificates
"""
import pytest
from src.axioms.theorems import (
    CERTIFICATES, nonempty_subsets, theorem_1_profile, theorem_2_profile, verify, verify_inversion_pareto_exclusion,
    verify_theorem_1, verify_theorem_2, verify_theorem_3,
)
from src.model.errors import ProfileInputError


class TestSubsets:
    def test_nonempty_subsets(self):
        subsets = nonempty_subsets(3)
        assert len(subsets) == 7
        assert subsets[0] == {0}
        assert subsets[-1] == {0, 1, 2}


class TestCertificates:
    @pytest.mark.parametrize("m", [3, 4, 5])
    def test_pareto_vs_weak_position_unanimity(self, m):
        cert = verify_theorem_1(m)
        assert cert.holds
        assert cert.rejected == len(cert.candidates) == 2 ** m - 1

    def test_theorem_1_witness(self):
        assert theorem_1_profile(3).render() == ['a>b1>b2', 'a>b2>b1']
        with pytest.raises(ProfileInputError):
            theorem_1_profile(2)

    def test_every_candidate_has_a_reason(self):
        cert = verify_theorem_1(3)
        by_selection = {c.selection: c.failures for c in cert.candidates}
        assert by_selection[frozenset({0})] == ('weak position unanimity',)
        assert by_selection[frozenset({1, 2})] == ('pareto efficiency',)
        assert 'pareto efficiency' in by_selection[frozenset({0, 1, 2})]

    @pytest.mark.parametrize("m,copies,kendall", [(3, 1, '1'), (5, 1, '6'), (5, 2, '4')])
    def test_neutral_index_vs_position_unanimity(self, m, copies, kendall):
        cert = verify_theorem_2(m, copies)
        assert cert.holds
        assert cert.rejected == 2 ** m - 1
        assert set(cert.values.values()) == {kendall}
        assert 'kendall(a1 on top)' in cert.values

    def test_theorem_2_needs_odd_m(self):
        with pytest.raises(ProfileInputError):
            theorem_2_profile(4)
        with pytest.raises(ProfileInputError):
            theorem_2_profile(3, copies=0)

    def test_symmetry_clones_vs_position_unanimity(self):
        cert = verify_theorem_3()
        assert cert.holds
        assert cert.rejected == 7
        assert all(f.holds for f in cert.facts)

    def test_inversion_vs_pareto(self):
        cert = verify_inversion_pareto_exclusion()
        assert cert.holds
        assert cert.rejected == 3

    def test_render(self):
        text = verify_theorem_3().render()
        assert 'witness: abc cba' in text
        assert '7/7 candidate sets rejected: HOLDS' in text
        assert 'clone consistency' in text

    def test_verify_by_name(self):
        assert set(CERTIFICATES) == {'thm1', 'thm2', 'thm3', 'exclusion'}
        assert verify('thm1', m=4).rejected == 15
        assert verify('thm2', m=5, copies=2).holds
        assert verify('exclusion').holds
        with pytest.raises(ProfileInputError):
            verify('thm4')


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
