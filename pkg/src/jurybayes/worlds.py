"""Finite trial world spaces and Boolean subalgebra machinery.

A catalog fixes the ordered set of possible testimonies.  A transcript is
the subset of testimonies a juror perceives; a world pairs a transcript
with a material-guilt value.  Every transcript is paired with *both*
guilt values, so hearing testimony never deductively settles guilt.

All values here are immutable and hashable; operations are pure.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import AbstractSet, Hashable, Iterable, Iterator, Sequence

from .errors import CapExceeded, ForeignTestimony

#: Default ceiling on catalog size.  The world space has 2^(n+1) elements
#: and every construction in this package is exponential in n.
DEFAULT_WORLD_CAP = 12


class Guilt(enum.Enum):
    """Material guilt value of the defendant."""

    GUILTY = "G"
    INNOCENT = "I"

    def __repr__(self) -> str:  # pragma: no cover - debug aid
        return f"Guilt.{self.name}"


@dataclass(frozen=True)
class Transcript:
    """A set of perceived testimonies, stored as catalog indices."""

    members: frozenset[int]

    def __init__(self, members: Iterable[int] = ()) -> None:
        object.__setattr__(self, "members", frozenset(members))

    @property
    def mask(self) -> int:
        """Bitmask encoding; the canonical sort key for transcripts."""
        return sum(1 << i for i in self.members)

    def __contains__(self, index: int) -> bool:
        return index in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __repr__(self) -> str:
        inner = ",".join(str(i) for i in sorted(self.members))
        return f"Transcript({{{inner}}})"


EMPTY_TRANSCRIPT = Transcript()


@dataclass(frozen=True)
class World:
    """A pair of a transcript and a guilt value."""

    transcript: Transcript
    guilt: Guilt

    def __repr__(self) -> str:
        return f"World({self.transcript!r}, {self.guilt.value})"


def world_sort_key(world: World) -> tuple[int, int]:
    """Canonical world order: transcript mask, guilty before innocent.

    Reports and serialized charges rely on this order being byte-stable.
    """
    return (world.transcript.mask, 0 if world.guilt is Guilt.GUILTY else 1)


@dataclass(frozen=True)
class TestimonyCatalog:
    """The finite ordered collection of possible testimonies.

    Labels are opaque identifiers; everything downstream indexes against
    their position.  Construction enforces distinctness and the world-cap
    (default 12, i.e. at most 8192 worlds); pass ``world_cap`` to relax
    or tighten it.
    """

    labels: tuple[str, ...]
    world_cap: int = field(default=DEFAULT_WORLD_CAP, compare=False, repr=False)

    def __init__(self, labels: Iterable[str], world_cap: int | None = None) -> None:
        object.__setattr__(self, "labels", tuple(labels))
        cap = DEFAULT_WORLD_CAP if world_cap is None else int(world_cap)
        object.__setattr__(self, "world_cap", cap)
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"catalog labels must be distinct: {self.labels!r}")
        if len(self.labels) > cap:
            raise CapExceeded(
                f"catalog of {len(self.labels)} testimonies exceeds the world cap "
                f"of {cap} (2^{len(self.labels) + 1} worlds); raise world_cap to override"
            )

    def __len__(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ForeignTestimony(f"label {label!r} is not in the catalog") from None

    def transcript(self, labels: Iterable[str]) -> Transcript:
        return Transcript(self.index(lbl) for lbl in labels)

    def transcript_labels(self, transcript: Transcript) -> tuple[str, ...]:
        self._check_transcript(transcript)
        return tuple(self.labels[i] for i in sorted(transcript.members))

    def _check_transcript(self, transcript: Transcript) -> None:
        bad = [i for i in transcript.members if not 0 <= i < len(self.labels)]
        if bad:
            raise ForeignTestimony(
                f"transcript indices {sorted(bad)} are outside the catalog of size {len(self)}"
            )

    def all_transcripts(self) -> Iterator[Transcript]:
        """All 2^n transcripts in canonical binary-counting order."""
        n = len(self.labels)
        for mask in range(1 << n):
            yield Transcript(i for i in range(n) if mask >> i & 1)


def full_world_space(catalog: TestimonyCatalog) -> tuple[World, ...]:
    """All 2^(n+1) worlds of the catalog in canonical order."""
    return _world_space(catalog.labels)


@lru_cache(maxsize=64)
def _world_space(labels: tuple[str, ...]) -> tuple[World, ...]:
    n = len(labels)
    worlds = []
    for mask in range(1 << n):
        transcript = Transcript(i for i in range(n) if mask >> i & 1)
        worlds.append(World(transcript, Guilt.GUILTY))
        worlds.append(World(transcript, Guilt.INNOCENT))
    return tuple(worlds)


def event_of_transcript(
    catalog: TestimonyCatalog, transcript: Transcript
) -> frozenset[World]:
    """The two-world event of perceiving exactly this transcript."""
    catalog._check_transcript(transcript)
    return frozenset(
        {World(transcript, Guilt.GUILTY), World(transcript, Guilt.INNOCENT)}
    )


def guilt_event(catalog: TestimonyCatalog) -> frozenset[World]:
    """All worlds in which the defendant is materially guilty."""
    return frozenset(w for w in full_world_space(catalog) if w.guilt is Guilt.GUILTY)


def heard_event(catalog: TestimonyCatalog, transcript: Transcript) -> frozenset[World]:
    """All worlds whose transcript contains the given testimonies.

    This is the cumulative "these testimonies were heard" event; the
    exact-transcript event is ``event_of_transcript``.
    """
    catalog._check_transcript(transcript)
    need = transcript.members
    return frozenset(
        w for w in full_world_space(catalog) if need <= w.transcript.members
    )


# ---------------------------------------------------------------------------
# Boolean subalgebras, represented by their atom partitions.


@dataclass(frozen=True)
class BooleanSubalgebra:
    """A Boolean algebra of subsets of a finite ground set.

    Represented by its atoms: a partition of the ground set into nonempty
    blocks.  The algebra's members are exactly the unions of blocks, so a
    partition with k blocks encodes 2^k members without listing them.

    ``ground`` is an ordered tuple; the order is the canonical element
    order used for deterministic atom ordering and serialization.
    """

    ground: tuple[Hashable, ...]
    atoms: tuple[frozenset, ...]

    def __post_init__(self) -> None:
        ground_set = frozenset(self.ground)
        if len(ground_set) != len(self.ground):
            raise ValueError("ground elements must be distinct")
        covered = 0
        for atom in self.atoms:
            if not atom:
                raise ValueError("atoms must be nonempty")
            if not atom <= ground_set:
                raise ValueError("atom contains elements outside the ground set")
            covered += len(atom)
        union = frozenset().union(*self.atoms) if self.atoms else frozenset()
        # equal sizes rule out overlaps, equal union rules out gaps
        if covered != len(ground_set) or union != ground_set:
            raise ValueError("atoms must partition the ground set")
        object.__setattr__(self, "_position", {e: i for i, e in enumerate(self.ground)})

    @property
    def ground_set(self) -> frozenset:
        return frozenset(self.ground)

    @property
    def is_atomized_by_points(self) -> bool:
        """True when every atom is a singleton (full powerset algebra)."""
        return all(len(a) == 1 for a in self.atoms)

    def atom_sort_key(self, atom: frozenset) -> int:
        pos: dict = self._position  # type: ignore[attr-defined]
        return min(pos[e] for e in atom)

    def members(self) -> Iterator[frozenset]:
        """All 2^k members.  Exponential; intended for small algebras."""
        for r in range(len(self.atoms) + 1):
            for combo in itertools.combinations(self.atoms, r):
                yield frozenset().union(*combo) if combo else frozenset()

    def adjoin(self, new_event: AbstractSet) -> "BooleanSubalgebra":
        """The algebra generated by this one plus one more set."""
        new_atoms: list[frozenset] = []
        for atom in self.atoms:
            inside = atom & new_event
            outside = atom - new_event
            if inside:
                new_atoms.append(frozenset(inside))
            if outside:
                new_atoms.append(frozenset(outside))
        new_atoms.sort(key=self.atom_sort_key)
        return BooleanSubalgebra(self.ground, tuple(new_atoms))


def powerset_algebra(ground: Sequence[Hashable]) -> BooleanSubalgebra:
    """The full powerset algebra: one singleton atom per element."""
    ground = tuple(ground)
    return BooleanSubalgebra(ground, tuple(frozenset({e}) for e in ground))


def atoms_of_generated_algebra(
    ground: Sequence[Hashable], generators: Iterable[AbstractSet]
) -> BooleanSubalgebra:
    """The subalgebra generated by the given sets.

    Atoms are the nonempty cells of the sign-pattern partition: two
    elements share an atom iff every generator contains both or neither.
    """
    ground = tuple(ground)
    generators = [frozenset(g) for g in generators]
    ground_set = frozenset(ground)
    for g in generators:
        if not g <= ground_set:
            raise ValueError("generator contains elements outside the ground set")
    cells: dict[tuple[bool, ...], set] = {}
    for element in ground:
        signature = tuple(element in g for g in generators)
        cells.setdefault(signature, set()).add(element)
    position = {e: i for i, e in enumerate(ground)}
    atoms = sorted(
        (frozenset(cell) for cell in cells.values()),
        key=lambda a: min(position[e] for e in a),
    )
    return BooleanSubalgebra(ground, tuple(atoms))


def is_expressible(event: AbstractSet, algebra: BooleanSubalgebra) -> bool:
    """True iff the event is a union of the algebra's atoms."""
    event = frozenset(event)
    if not event <= algebra.ground_set:
        return False
    return all(atom <= event or atom.isdisjoint(event) for atom in algebra.atoms)


def is_logically_independent(event: AbstractSet, algebra: BooleanSubalgebra) -> bool:
    """Literal logical independence of a set from the algebra.

    Definition: every member A of the algebra other than the ground set
    and the empty set satisfies A ∩ B ≠ ∅ and A^c ∩ B ≠ ∅.  Equivalent
    atom-level test: vacuously true on the trivial one-atom algebra;
    otherwise true iff B meets every atom (each atom is itself a
    nontrivial member, and any nontrivial member and its complement are
    nonempty unions of atoms).  Note the literal definition makes
    B = ground independent, and B = ∅ independent only on the trivial
    algebra.
    """
    event = frozenset(event)
    if len(algebra.atoms) <= 1:
        return True
    return all(not atom.isdisjoint(event) for atom in algebra.atoms)
