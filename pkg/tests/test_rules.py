"""
Tests for scoring functions, voting rules and profile indices
"""
from fractions import Fraction

import pytest
from src.model.errors import EmptyCoalitionError, ProfileInputError
from src.model.profile import Profile, Ranking, SubProfile
from src.rules.indices import ProfileIndex, average_kendall_tau, kendall_tau
from src.rules.scoring import (
    ScoringScheme, borda, copeland_asymmetric, copeland_symmetric, epsilon_borda, normalized_borda,
    normalized_plurality, plurality,
)
from src.rules.voting import Scf, borda_rule, plurality_rule, top_set


def _empty(proposals='abc'):
    return SubProfile(Profile.from_rankings(proposals, [proposals]).proposals, ())


class TestScoringSchemes:
    def test_borda_single_ranking(self):
        profile = Profile.from_rankings('abc', ['abc'])
        assert borda().scores(profile) == [2, 1, 0]

    def test_normalized_borda_polarised(self):
        profile = Profile.from_rankings('abc', ['abc', 'cba'])
        assert normalized_borda().scores(profile) == [1, 1, 1]
        assert borda().scores(profile) == [2, 2, 2]

    def test_plurality(self):
        profile = Profile.from_rankings('abc', ['abc', 'acb'])
        assert plurality().scores(profile) == [2, 0, 0]
        assert normalized_plurality().scores(profile) == [1, 0, 0]

    def test_copeland(self):
        profile = Profile.from_rankings('abc', ['abc', 'abc', 'cba'])
        assert copeland_symmetric().scores(profile) == [2, 0, -2]
        assert copeland_asymmetric().scores(profile) == [2, 1, 0]

    def test_copeland_ties_count_for_nobody(self):
        profile = Profile.from_rankings('abc', ['abc', 'cba'])
        assert copeland_symmetric().scores(profile) == [0, 0, 0]
        assert copeland_asymmetric().scores(profile) == [0, 0, 0]

    def test_copeland_is_not_positional(self):
        assert not copeland_symmetric().is_positional
        with pytest.raises(ProfileInputError):
            copeland_symmetric().vector(3)

    def test_empty_subprofile(self):
        with pytest.raises(EmptyCoalitionError):
            borda().score(_empty(), 0)

    def test_vector_length_must_match(self):
        scheme = ScoringScheme.parse('vec:3,2,1')
        with pytest.raises(ProfileInputError):
            scheme.score(Profile.from_rankings('abcd', ['abcd']), 0)

    def test_scores_are_exact(self):
        profile = Profile.from_rankings('abc', ['abc', 'bac', 'cab'])
        values = normalized_borda().scores(profile)
        assert values == [Fraction(4, 3), Fraction(1), Fraction(2, 3)]
        assert all(isinstance(v, Fraction) for v in values)


class TestSchemeGrammar:
    @pytest.mark.parametrize("text", ['borda', 'nborda', 'plurality', 'nplurality', 'copeland', 'copeland-asym'])
    def test_named_round_trip(self, text):
        assert ScoringScheme.parse(text).name == text

    def test_vectors(self):
        scheme = ScoringScheme.parse('nvec:3,2,1,1/100')
        assert scheme.is_normalized
        assert scheme.name == 'nvec:3,2,1,1/100'
        assert scheme.vector(4)[-1] == Fraction(1, 100)
        assert scheme.integer_vector(4) == ((300, 200, 100, 1), 100)

    @pytest.mark.parametrize("text", ['', 'bordah', 'vec:', 'vec:1,x', 'nvec:1/0'])
    def test_rejects_garbage(self, text):
        with pytest.raises(ProfileInputError):
            ScoringScheme.parse(text)

    def test_epsilon_borda(self):
        scheme = epsilon_borda(4, Fraction(1, 100), normalized=True, electorate_size=4)
        assert scheme.name == 'nvec:3,2,1,1/100'
        assert not epsilon_borda(3, Fraction(1, 10), normalized=False).is_normalized

    def test_epsilon_borda_too_large(self):
        with pytest.raises(ProfileInputError):
            epsilon_borda(4, Fraction(1, 100), electorate_size=100)
        with pytest.raises(ProfileInputError):
            epsilon_borda(4, Fraction(0))


class TestVotingRules:
    def test_borda_winner(self):
        profile = Profile.from_rankings('abc', ['abc', 'acb'])
        assert borda_rule().winners(profile) == {0}
        assert borda_rule().win_share(profile, 0) == 1
        assert borda_rule().win_share(profile, 1) == 0

    def test_ties_share_the_win(self):
        profile = Profile.from_rankings('abc', ['abc', 'cba'])
        assert borda_rule().winners(profile) == {0, 1, 2}
        assert borda_rule().win_share(profile, 2) == Fraction(1, 3)

    def test_plurality_rule(self):
        profile = Profile.from_rankings('abc', ['abc', 'bca', 'bac'])
        assert plurality_rule().winners(profile) == {1}

    def test_empty_subprofile(self):
        assert borda_rule().win_share(_empty(), 0) == 0
        with pytest.raises(EmptyCoalitionError):
            borda_rule().winners(_empty())

    def test_rule_needs_positional_scheme(self):
        with pytest.raises(ProfileInputError):
            Scf(copeland_symmetric())

    def test_parse(self):
        assert Scf.parse('borda') == borda_rule()
        assert Scf.parse('plurality').name == 'plurality'
        assert Scf.parse('vec:2,1,0').name == 'vec:2,1,0'
        assert Scf.parse('borda').is_positional
        with pytest.raises(ProfileInputError):
            Scf.parse('copeland')

    def test_top_set(self):
        assert top_set([1, 3, 3, 0]) == {1, 2}


class TestProfileIndices:
    def test_kendall_tau(self):
        names = Profile.from_rankings('abc', ['abc']).proposals
        abc, cba = Ranking.parse('abc', names), Ranking.parse('cba', names)
        assert kendall_tau(abc, abc) == 0
        assert kendall_tau(abc, cba) == 3
        assert kendall_tau(abc, Ranking.parse('bac', names)) == 1

    def test_average_kendall_tau(self):
        assert average_kendall_tau(Profile.from_rankings('abc', ['abc', 'cba'])) == 3
        assert average_kendall_tau(Profile.from_rankings('abc', ['abc', 'abc', 'cba', 'cba'])) == 2
        assert average_kendall_tau(Profile.from_rankings('abc', ['abc'])) == 0

    def test_average_matches_pairwise_definition(self):
        profile = Profile.from_rankings('abcd', ['abcd', 'badc', 'dcba', 'acbd'])
        rankings = profile.rankings
        pairs = [(i, j) for i in range(4) for j in range(i + 1, 4)]
        expected = Fraction(sum(kendall_tau(rankings[i], rankings[j]) for i, j in pairs), len(pairs))
        assert average_kendall_tau(profile) == expected

    def test_index_grammar(self):
        assert ProfileIndex.parse('kendall').name == 'kendall'
        constant = ProfileIndex.parse('const:5')
        assert constant.evaluate(Profile.from_rankings('ab', ['ab', 'ba'])) == 5
        with pytest.raises(ProfileInputError):
            ProfileIndex.parse('spearman')


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
