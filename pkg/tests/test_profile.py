
import itertools
from collections import Counter

import pytest
from src.model.errors import DisjointnessError, ProfileInputError
from src.model.profile import (
    Profile, ProposalSet, Ranking, apply_agent_bijection, apply_proposal_permutation, are_clones,
    canonical_form, clone_pairs, dominated_proposals, fixed_position_proposals, fresh_agent_id, invert,
    is_perfectly_uniform, is_unanimous, move_to_top, pareto_dominates, perfectly_uniform, position,
    restrict, supporters, union,
)


@pytest.fixture
def example_3():
    return Profile.from_rankings(
        ProposalSet(('a', 'b', 'c', 'x', 'y')),
        ['a>x>y>b>c', 'b>x>y>c>a', 'c>x>y>a>b'],
        agent_ids=[1, 2, 3],
    )


@pytest.fixture
def polarised():
    return Profile.from_rankings('abc', ['abc', 'cba'])


class TestConstruction:
    def test_ranking_parse_both_styles(self):
        names = ProposalSet.of('abc')
        assert Ranking.parse('a>b>c', names) == Ranking.parse('abc', names) == Ranking((0, 1, 2))

    def test_ranking_must_be_permutation(self):
        with pytest.raises(ProfileInputError):
            Ranking((0, 0, 1))

    def test_duplicate_labels_rejected(self):
        with pytest.raises(ProfileInputError):
            ProposalSet(('a', 'a'))

    def test_duplicate_agent_ids_rejected(self):
        with pytest.raises(ProfileInputError):
            Profile.from_rankings('ab', ['ab', 'ba'], agent_ids=[3, 3])

    def test_profile_nonempty(self):
        with pytest.raises(ProfileInputError):
            Profile.from_rankings('ab', [])

    def test_default_labels(self):
        assert ProposalSet.default(3).names == ('a', 'b', 'c')
        assert ProposalSet.default(30).names[0] == 'p1'


class TestPositions:
    def test_top_and_bottom(self):
        profile = Profile.from_rankings('abc', ['abc'])
        assert position(profile, 0, 0) == 1
        assert position(profile, 0, 2) == 3

    def test_example_3_agent_2(self, example_3):
        x = example_3.proposals.index('x')
        assert position(example_3, 2, x) == 2

    def test_unknown_agent_or_proposal(self, example_3):
        with pytest.raises(ProfileInputError):
            position(example_3, 9, 0)
        with pytest.raises(ProfileInputError):
            position(example_3, 1, 7)

    def test_positions_form_a_permutation(self, example_3):
        for ranking in example_3.rankings:
            assert sorted(ranking.positions) == [1, 2, 3, 4, 5]


class TestCoalitions:
    def test_supporters_unanimous(self):
        profile = Profile.from_rankings('ab', ['ab'] * 3)
        assert supporters(profile, 0, 1) == {0, 1, 2}

    def test_supporters_partition(self, polarised):
        assert supporters(polarised, 0, 1) == {0}
        assert supporters(polarised, 0, 2) | supporters(polarised, 2, 0) == set(polarised.agents)
        assert supporters(polarised, 1, 2) == set(polarised.agents) - supporters(polarised, 2, 1)

    def test_supporters_needs_distinct(self, polarised):
        with pytest.raises(ProfileInputError):
            supporters(polarised, 1, 1)

    def test_restrict(self, example_3):
        assert restrict(example_3, example_3.agents) == example_3
        assert isinstance(restrict(example_3, {2}), Profile)
        empty = restrict(example_3, [])
        assert empty.is_empty
        assert not isinstance(empty, Profile)
        sub = restrict(example_3, {2, 3})
        assert sub.agents == (2, 3)
        assert sub.render() == ['b>x>y>c>a', 'c>x>y>a>b']

    def test_restrict_unknown_agent(self, example_3):
        with pytest.raises(ProfileInputError):
            restrict(example_3, {1, 42})

    def test_restrict_partition(self, example_3):
        left = restrict(example_3, {1})
        right = restrict(example_3, {2, 3})
        assert sorted(left.entries + right.entries) == sorted(example_3.entries)

    def test_union(self):
        left = Profile.from_rankings('abc', ['abc'])
        right = Profile.from_rankings('abc', ['cba'], first_agent_id=1)
        assert union(left, right) == Profile.from_rankings('abc', ['abc', 'cba'])

    def test_union_overlap(self):
        left = Profile.from_rankings('abc', ['abc'])
        with pytest.raises(DisjointnessError):
            union(left, Profile.from_rankings('abc', ['cba']))

    def test_union_mismatched_proposals(self):
        left = Profile.from_rankings('abc', ['abc'])
        with pytest.raises(ProfileInputError):
            union(left, Profile.from_rankings('xyz', ['xyz'], first_agent_id=5))

    def test_union_with_uniform_has_122_agents(self):
        profile = Profile.from_rankings('abcde', ['abcde', 'badce'])
        uniform = perfectly_uniform(5, 1, fresh_agent_id(profile), profile.proposals)
        assert union(profile, uniform).n == 122


class TestTransformations:
    def test_invert(self):
        profile = Profile.from_rankings('abc', ['abc'])
        assert invert(profile).render() == ['cba']
        assert invert(invert(profile)) == profile
        assert invert(Profile.from_rankings('ab', ['ab'])).render() == ['ba']

    def test_move_to_top(self):
        profile = Profile.from_rankings('abc', ['bac'])
        assert move_to_top(profile, 0).render() == ['abc']
        topped = move_to_top(profile, 1)
        assert topped == profile
        assert move_to_top(move_to_top(profile, 2), 2) == move_to_top(profile, 2)

    def test_move_to_top_unknown(self):
        with pytest.raises(ProfileInputError):
            move_to_top(Profile.from_rankings('ab', ['ab']), 5)

    def test_move_middle_of_polarised_profile(self):
        profile = Profile.from_rankings('abcde', ['abcde', 'edcba'])
        topped = move_to_top(profile, 2)
        assert topped.render() == ['cabde', 'cedba']

    @pytest.mark.parametrize("m,k", [(2, 1), (3, 2), (4, 1)])
    def test_perfectly_uniform(self, m, k):
        profile = perfectly_uniform(m, k, first_agent_id=10)
        assert profile.n == k * len(list(itertools.permutations(range(m))))
        assert profile.agents[0] == 10
        assert set(Counter(r.order for r in profile.rankings).values()) == {k}
        assert is_perfectly_uniform(profile)
        for x in range(m):
            per_position = Counter(r.position(x) for r in profile.rankings)
            assert len(set(per_position.values())) == 1

    def test_perfectly_uniform_five(self):
        assert perfectly_uniform(5).n == 120

    def test_agent_bijection_identity_and_swap(self, polarised):
        assert apply_agent_bijection(polarised, {0: 0, 1: 1}) == polarised
        swapped = apply_agent_bijection(polarised, {0: 1, 1: 0})
        assert swapped.as_mapping() == {0: polarised.ranking_of(1), 1: polarised.ranking_of(0)}
        assert canonical_form(swapped) == canonical_form(polarised)

    def test_agent_bijection_to_outside_ids(self, polarised):
        moved = apply_agent_bijection(polarised, {7: 0, 9: 1})
        assert moved.agents == (7, 9)

    def test_agent_bijection_not_injective(self, polarised):
        with pytest.raises(ProfileInputError):
            apply_agent_bijection(polarised, {0: 0, 1: 0})

    def test_proposal_permutation(self, polarised):
        assert apply_proposal_permutation(polarised, (0, 1, 2)) == polarised
        swapped = apply_proposal_permutation(polarised, {0: 2, 1: 1, 2: 0})
        assert swapped.render() == ['cba', 'abc']

    def test_proposal_permutation_invalid(self, polarised):
        with pytest.raises(ProfileInputError):
            apply_proposal_permutation(polarised, (0, 0, 1))


class TestPredicates:
    def test_clones(self, polarised):
        assert are_clones(polarised, 0, 1)
        assert are_clones(polarised, 1, 2)
        assert not are_clones(polarised, 0, 2)
        assert not are_clones(Profile.from_rankings('abc', ['abc']), 0, 2)
        assert clone_pairs(polarised) == [(0, 1), (1, 2)]

    def test_clones_need_distinct(self, polarised):
        with pytest.raises(ProfileInputError):
            are_clones(polarised, 2, 2)

    def test_pareto(self, polarised):
        assert not any(
            pareto_dominates(polarised, x, y) for x in range(3) for y in range(3) if x != y
        )
        unanimous = Profile.from_rankings('abc', ['abc', 'abc'])
        assert pareto_dominates(unanimous, 0, 1) and pareto_dominates(unanimous, 0, 2)
        assert dominated_proposals(unanimous) == {1, 2}

    def test_pareto_theorem_witness(self):
        profile = Profile.from_rankings('abc', ['abc', 'acb'])
        assert pareto_dominates(profile, 0, 1) and pareto_dominates(profile, 0, 2)

    def test_canonical_form(self, polarised):
        assert canonical_form(polarised) == canonical_form(Profile.from_rankings('abc', ['cba', 'abc']))
        assert canonical_form(polarised) != canonical_form(Profile.from_rankings('abc', ['abc', 'abc']))

    def test_unanimous_and_fixed(self, polarised):
        assert not is_unanimous(polarised)
        assert fixed_position_proposals(polarised) == {1}
        assert is_unanimous(Profile.from_rankings('abc', ['abc']))


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
