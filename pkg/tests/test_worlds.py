"""World spaces, events, and subalgebra machinery."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jurybayes.errors import CapExceeded, ForeignTestimony
from jurybayes.worlds import (
    BooleanSubalgebra,
    Guilt,
    TestimonyCatalog,
    Transcript,
    World,
    atoms_of_generated_algebra,
    event_of_transcript,
    full_world_space,
    guilt_event,
    heard_event,
    is_expressible,
    is_logically_independent,
    powerset_algebra,
)

from conftest import all_partitions, literal_logical_independence


def catalog(n: int) -> TestimonyCatalog:
    return TestimonyCatalog(tuple(f"t{i}" for i in range(n)))


class TestWorldSpace:
    def test_empty_catalog_has_two_worlds(self):
        worlds = full_world_space(catalog(0))
        assert worlds == (
            World(Transcript(), Guilt.GUILTY),
            World(Transcript(), Guilt.INNOCENT),
        )

    def test_one_testimony_gives_four_worlds(self):
        assert len(full_world_space(catalog(1))) == 4

    def test_three_testimonies_counted_by_enumeration(self):
        # oracle: enumerate transcript bit-vectors and guilt values directly
        expected = len(list(itertools.product((0, 1), repeat=3))) * 2
        assert expected == 16
        assert len(full_world_space(catalog(3))) == expected

    def test_canonical_order_counts_in_binary_with_guilty_first(self):
        worlds = full_world_space(catalog(2))
        masks = [w.transcript.mask for w in worlds]
        assert masks == [0, 0, 1, 1, 2, 2, 3, 3]
        assert [w.guilt for w in worlds[:2]] == [Guilt.GUILTY, Guilt.INNOCENT]

    def test_cap_enforced_and_overridable(self):
        labels = tuple(f"t{i}" for i in range(13))
        with pytest.raises(CapExceeded):
            TestimonyCatalog(labels)
        assert len(TestimonyCatalog(labels, world_cap=13)) == 13

    def test_labels_must_be_distinct(self):
        with pytest.raises(ValueError):
            TestimonyCatalog(("a", "a"))


class TestEvents:
    def test_event_of_empty_transcript(self):
        cat = catalog(1)
        assert event_of_transcript(cat, Transcript()) == frozenset(
            {World(Transcript(), Guilt.GUILTY), World(Transcript(), Guilt.INNOCENT)}
        )

    def test_event_pairs_transcript_with_both_guilt_values(self):
        cat = catalog(2)
        t = cat.transcript(["t1"])
        event = event_of_transcript(cat, t)
        assert {w.transcript for w in event} == {t}
        assert {w.guilt for w in event} == {Guilt.GUILTY, Guilt.INNOCENT}

    def test_every_transcript_event_has_two_worlds_and_they_partition(self):
        cat = catalog(3)
        events = [event_of_transcript(cat, t) for t in cat.all_transcripts()]
        assert all(len(e) == 2 for e in events)
        union = frozenset().union(*events)
        assert union == frozenset(full_world_space(cat))
        assert sum(len(e) for e in events) == len(union)

    def test_foreign_transcript_rejected(self):
        cat = catalog(1)
        with pytest.raises(ForeignTestimony):
            event_of_transcript(cat, Transcript({5}))
        with pytest.raises(ForeignTestimony):
            cat.transcript(["nope"])

    def test_guilt_event_small(self):
        cat = catalog(1)
        assert guilt_event(cat) == frozenset(
            {
                World(Transcript(), Guilt.GUILTY),
                World(Transcript({0}), Guilt.GUILTY),
            }
        )
        assert guilt_event(catalog(0)) == frozenset(
            {World(Transcript(), Guilt.GUILTY)}
        )

    def test_guilt_event_size_by_enumeration(self):
        cat = catalog(4)
        oracle = sum(
            1
            for bits in itertools.product((0, 1), repeat=4)
            for g in ("G", "I")
            if g == "G"
        )
        assert len(guilt_event(cat)) == oracle == 16

    def test_guilt_event_and_complement_split_the_space_evenly(self):
        cat = catalog(3)
        space = frozenset(full_world_space(cat))
        guilty = guilt_event(cat)
        assert guilty | (space - guilty) == space
        assert len(guilty) == len(space - guilty)

    def test_heard_event_is_upward_closure(self):
        cat = catalog(2)
        heard = heard_event(cat, cat.transcript(["t0"]))
        assert {w.transcript.members for w in heard} == {
            frozenset({0}),
            frozenset({0, 1}),
        }


class TestGeneratedAlgebra:
    def test_no_generators_single_atom(self):
        ground = (1, 2, 3, 4)
        algebra = atoms_of_generated_algebra(ground, [])
        assert algebra.atoms == (frozenset({1, 2, 3, 4}),)

    def test_one_generator_two_atoms(self):
        algebra = atoms_of_generated_algebra((1, 2, 3, 4), [{1, 2}])
        assert set(algebra.atoms) == {frozenset({1, 2}), frozenset({3, 4})}

    def test_two_overlapping_generators_atomize_fully(self):
        # oracle: distinct membership sign-patterns, computed by hand:
        # 1->(in,out) 2->(in,in) 3->(out,in) 4->(out,out)
        algebra = atoms_of_generated_algebra((1, 2, 3, 4), [{1, 2}, {2, 3}])
        assert set(algebra.atoms) == {
            frozenset({1}),
            frozenset({2}),
            frozenset({3}),
            frozenset({4}),
        }

    def test_generator_outside_ground_rejected(self):
        with pytest.raises(ValueError):
            atoms_of_generated_algebra((1, 2), [{3}])

    @pytest.mark.parametrize("size", range(1, 7))
    def test_membership_closed_under_complement_and_union(self, size, rng):
        ground = tuple(range(size))
        for _ in range(5):
            k = rng.randrange(0, 3)
            generators = [
                frozenset(x for x in ground if rng.random() < 0.5) for _ in range(k)
            ]
            algebra = atoms_of_generated_algebra(ground, generators)
            members = set(algebra.members())
            assert frozenset() in members and frozenset(ground) in members
            for m in members:
                assert frozenset(ground) - m in members
            for a, b in itertools.product(members, repeat=2):
                assert a | b in members

    def test_partition_validation(self):
        with pytest.raises(ValueError):
            BooleanSubalgebra((1, 2, 3), (frozenset({1}), frozenset({1, 2, 3})))
        with pytest.raises(ValueError):
            BooleanSubalgebra((1, 2, 3), (frozenset({1}),))
        with pytest.raises(ValueError):
            BooleanSubalgebra((1, 2), (frozenset({1}), frozenset()))


class TestExpressibility:
    def test_single_atom_is_expressible(self):
        algebra = atoms_of_generated_algebra((1, 2, 3, 4), [{1, 2}])
        assert is_expressible({1, 2}, algebra)
        assert is_expressible({1, 2, 3, 4}, algebra)
        assert is_expressible(set(), algebra)

    def test_half_an_atom_is_not(self):
        algebra = atoms_of_generated_algebra((1, 2, 3, 4), [{1, 2}])
        assert not is_expressible({1}, algebra)
        assert not is_expressible({1, 2, 3}, algebra)

    def test_foreign_elements_are_not_expressible(self):
        algebra = atoms_of_generated_algebra((1, 2), [])
        assert not is_expressible({9}, algebra)


class TestLogicalIndependence:
    def test_crossing_set_is_independent(self):
        algebra = atoms_of_generated_algebra((1, 2, 3, 4), [{1, 2}])
        assert is_logically_independent({1, 3}, algebra)
        assert literal_logical_independence(frozenset({1, 3}), algebra)

    def test_empty_set_fails_once_algebra_is_nontrivial(self):
        algebra = atoms_of_generated_algebra((1, 2, 3, 4), [{1, 2}])
        assert not is_logically_independent(set(), algebra)

    def test_ground_is_independent_by_the_literal_definition(self):
        algebra = atoms_of_generated_algebra((1, 2, 3, 4), [{1, 2}])
        assert literal_logical_independence(frozenset({1, 2, 3, 4}), algebra)
        assert is_logically_independent({1, 2, 3, 4}, algebra)

    def test_trivial_algebra_makes_everything_vacuously_independent(self):
        algebra = atoms_of_generated_algebra((1, 2), [])
        assert is_logically_independent(set(), algebra)
        assert literal_logical_independence(frozenset(), algebra)

    @pytest.mark.parametrize("size", range(1, 5))
    def test_atom_test_matches_literal_definition_exhaustively(self, size):
        ground = tuple(range(size))
        for atoms in all_partitions(ground):
            algebra = BooleanSubalgebra(ground, tuple(atoms))
            for bits in itertools.product((0, 1), repeat=size):
                event = frozenset(x for x, b in zip(ground, bits) if b)
                assert is_logically_independent(event, algebra) == (
                    literal_logical_independence(event, algebra)
                )

    @settings(max_examples=60, deadline=None)
    @given(data=st.data())
    def test_atom_test_matches_literal_definition_sampled_size5(self, data):
        ground = tuple(range(5))
        blocks: list[set] = []
        for x in ground:
            idx = data.draw(st.integers(0, len(blocks)))
            if idx == len(blocks):
                blocks.append({x})
            else:
                blocks[idx].add(x)
        algebra = BooleanSubalgebra(ground, tuple(frozenset(b) for b in blocks))
        event = frozenset(data.draw(st.sets(st.sampled_from(ground))))
        assert is_logically_independent(event, algebra) == (
            literal_logical_independence(event, algebra)
        )


class TestAdjoin:
    def test_adjoin_refines_partition(self):
        algebra = atoms_of_generated_algebra((1, 2, 3, 4), [{1, 2}])
        refined = algebra.adjoin({2, 3})
        assert set(refined.atoms) == {
            frozenset({1}),
            frozenset({2}),
            frozenset({3}),
            frozenset({4}),
        }

    def test_adjoin_expressible_set_changes_nothing(self):
        algebra = atoms_of_generated_algebra((1, 2, 3, 4), [{1, 2}])
        assert algebra.adjoin({3, 4}).atoms == algebra.atoms

    def test_powerset_algebra_atomizes_by_points(self):
        algebra = powerset_algebra((1, 2, 3))
        assert algebra.is_atomized_by_points
        assert not atoms_of_generated_algebra((1, 2), []).is_atomized_by_points
