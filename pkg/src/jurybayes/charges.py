"""Finitely additive probability charges with exact rational values.

A charge lives on a Boolean subalgebra (see worlds.BooleanSubalgebra) and
is stored as one nonnegative Fraction per atom, summing to one.  The
value of a member is the sum of its atoms' masses.  Conditioning,
mixing, and the two extension constructions (prescribing the value of a
new event, and prescribing a conditional value) are all exact: every
stated equality holds as rational equality, never within a tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import AbstractSet, Mapping

from .errors import (
    AlgebraMismatch,
    DegeneratePrior,
    NotExpressible,
    NotIndependent,
    OutOfRange,
    ZeroConditioningEvent,
)
from .rationals import RationalLike, as_rational, format_rational
from .worlds import BooleanSubalgebra

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class ConditionalResult:
    """A conditional probability together with the conditioning mass."""

    value: Fraction
    conditioning_mass: Fraction

    def __post_init__(self) -> None:
        if self.conditioning_mass <= 0:
            raise ZeroConditioningEvent(
                "conditional probability undefined: conditioning event has mass "
                f"{self.conditioning_mass}"
            )


@dataclass(frozen=True)
class Charge:
    """An exact finitely additive probability charge on a subalgebra.

    ``masses`` is aligned with ``algebra.atoms``.  Atom masses may be
    zero; they must be nonnegative and sum to exactly one.
    """

    algebra: BooleanSubalgebra
    masses: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.masses) != len(self.algebra.atoms):
            raise ValueError(
                f"{len(self.masses)} masses for {len(self.algebra.atoms)} atoms"
            )
        total = ZERO
        for m in self.masses:
            if not isinstance(m, Fraction):
                raise TypeError(f"atom mass must be Fraction, got {type(m).__name__}")
            if m < 0:
                raise ValueError(f"atom mass must be nonnegative, got {m}")
            total += m
        if total != 1:
            raise ValueError(f"atom masses must sum to 1, got {format_rational(total)}")
        # point-atomized algebras get an O(|event|) measure fast path
        point_mass = None
        if self.algebra.is_atomized_by_points:
            point_mass = {
                next(iter(atom)): m for atom, m in zip(self.algebra.atoms, self.masses)
            }
        object.__setattr__(self, "_point_mass", point_mass)

    # -- constructors -------------------------------------------------

    @classmethod
    def from_atom_masses(
        cls,
        algebra: BooleanSubalgebra,
        masses: Mapping[frozenset, RationalLike],
    ) -> "Charge":
        """Build from a mapping atom -> mass; omitted atoms get mass 0."""
        known = {atom: as_rational(m, name="atom mass") for atom, m in masses.items()}
        unknown = set(known) - set(algebra.atoms)
        if unknown:
            raise ValueError(f"{len(unknown)} mass keys are not atoms of the algebra")
        return cls(algebra, tuple(known.get(a, ZERO) for a in algebra.atoms))

    @classmethod
    def uniform_on_atoms(cls, algebra: BooleanSubalgebra) -> "Charge":
        """Equal mass on every atom."""
        k = len(algebra.atoms)
        return cls(algebra, tuple(Fraction(1, k) for _ in range(k)))

    @classmethod
    def uniform_on_points(cls, algebra: BooleanSubalgebra) -> "Charge":
        """Atom mass proportional to atom size (uniform over the ground set)."""
        n = len(algebra.ground)
        return cls(algebra, tuple(Fraction(len(a), n) for a in algebra.atoms))

    # -- measurement ---------------------------------------------------

    def mass_of_atom(self, atom: frozenset) -> Fraction:
        try:
            return self.masses[self.algebra.atoms.index(atom)]
        except ValueError:
            raise NotExpressible(f"{atom!r} is not an atom of this algebra") from None

    def measure(self, event: AbstractSet) -> Fraction:
        """Probability of an event expressible in the algebra."""
        event = frozenset(event)
        if not event <= self.algebra.ground_set:
            raise NotExpressible("event contains elements outside the ground set")
        point_mass = self._point_mass  # type: ignore[attr-defined]
        if point_mass is not None:
            return sum((point_mass[e] for e in event), start=ZERO)
        total = ZERO
        for atom, m in zip(self.algebra.atoms, self.masses):
            if atom <= event:
                total += m
            elif not atom.isdisjoint(event):
                raise NotExpressible(
                    "event is not a union of atoms (it cuts through an atom)"
                )
        return total

    def conditional(self, target: AbstractSet, given: AbstractSet) -> ConditionalResult:
        """P(target | given) with the conditioning mass attached."""
        given = frozenset(given)
        denom = self.measure(given)
        if denom == 0:
            raise ZeroConditioningEvent("conditioning event has measure zero")
        num = self.measure(frozenset(target) & given)
        return ConditionalResult(num / denom, denom)

    def condition(self, event: AbstractSet) -> "Charge":
        """The posterior charge given an event of positive measure."""
        event = frozenset(event)
        denom = self.measure(event)
        if denom == 0:
            raise ZeroConditioningEvent("conditioning event has measure zero")
        new = tuple(
            m / denom if atom <= event else ZERO
            for atom, m in zip(self.algebra.atoms, self.masses)
        )
        return Charge(self.algebra, new)

    # -- extension -----------------------------------------------------

    def inner_outer(self, subset: AbstractSet) -> tuple[Fraction, Fraction]:
        """Inner and outer measure of an arbitrary subset of the ground set.

        The inner measure is the mass of atoms fully inside the subset;
        the outer measure is the mass of atoms meeting it.  A prescribed
        value for the subset extends the charge iff it lies in
        [inner, outer].
        """
        subset = frozenset(subset)
        if not subset <= self.algebra.ground_set:
            raise ValueError("subset contains elements outside the ground set")
        inner = ZERO
        outer = ZERO
        for atom, m in zip(self.algebra.atoms, self.masses):
            if atom <= subset:
                inner += m
                outer += m
            elif not atom.isdisjoint(subset):
                outer += m
        return inner, outer

    def extend(self, subset: AbstractSet, value: RationalLike) -> "Charge":
        """Extend to the algebra adjoining ``subset`` with the given value.

        The restriction to the original algebra is preserved exactly.
        Mass is split greedily in canonical atom order: each atom's
        inside-part is filled to its ceiling until the target is met.
        """
        subset = frozenset(subset)
        value = as_rational(value, name="target value")
        inner, outer = self.inner_outer(subset)
        if not inner <= value <= outer:
            raise OutOfRange(
                f"target {format_rational(value)} outside the admissible interval "
                f"[{format_rational(inner)}, {format_rational(outer)}]"
            )
        residual = value - inner
        part_mass: dict[frozenset, Fraction] = {}
        for atom, m in zip(self.algebra.atoms, self.masses):
            inside = atom & subset
            outside = atom - subset
            if not inside:
                part_mass[atom] = m
            elif not outside:
                part_mass[atom] = m
            else:
                take = min(residual, m)
                residual -= take
                part_mass[frozenset(inside)] = take
                part_mass[frozenset(outside)] = m - take
        assert residual == 0, "greedy split failed to reach the target value"
        new_algebra = self.algebra.adjoin(subset)
        return Charge(new_algebra, tuple(part_mass[a] for a in new_algebra.atoms))

    def extend_conditional(
        self,
        event: AbstractSet,
        given: AbstractSet,
        theta: RationalLike,
        *,
        strict: bool = True,
    ) -> "Charge":
        """Extend by adjoining ``given`` so that P(event | given) = theta.

        ``event`` must already be expressible.  In strict mode (the
        default), ``given`` must split every positive-mass atom and the
        prior value of ``event`` must avoid {0, 1}; every theta in
        [0, 1] is then attainable.  With strict=False the construction
        also accepts refinements of the algebra (e.g. nested conditioning
        chains) and raises OutOfRange when theta falls outside the
        exactly-computed feasible interval.

        The extension preserves the original charge on every old member
        and achieves the conditional value exactly.
        """
        event = frozenset(event)
        given = frozenset(given)
        theta = as_rational(theta, name="theta")
        if not 0 <= theta <= 1:
            raise OutOfRange(f"conditional target {format_rational(theta)} not in [0, 1]")
        if not given <= self.algebra.ground_set:
            raise ValueError("adjoined event contains elements outside the ground set")
        p_event = self.measure(event)  # raises NotExpressible if event is foreign

        if strict:
            if p_event in (ZERO, ONE):
                raise DegeneratePrior(
                    f"prior value of the event is {format_rational(p_event)}; "
                    "a conditional target needs it strictly between 0 and 1"
                )
            self._check_strictly_independent(given)

        # Feasible allocations: the mass the adjoined event can absorb on
        # each side of the target event.
        in_e = out_e = in_c = out_c = ZERO
        for atom, m in zip(self.algebra.atoms, self.masses):
            on_event_side = atom <= event
            if atom <= given:
                if on_event_side:
                    in_e += m
                else:
                    in_c += m
            if not atom.isdisjoint(given):
                if on_event_side:
                    out_e += m
                else:
                    out_c += m

        scale = self._conditional_scale(theta, in_e, out_e, in_c, out_c)
        rho_event = theta * scale
        rho_complement = (1 - theta) * scale

        part_mass: dict[frozenset, Fraction] = {}
        self._allocate_side(given, rho_event, part_mass, event_side=True, event=event)
        self._allocate_side(given, rho_complement, part_mass, event_side=False, event=event)
        new_algebra = self.algebra.adjoin(given)
        return Charge(new_algebra, tuple(part_mass[a] for a in new_algebra.atoms))

    def _check_strictly_independent(self, given: frozenset) -> None:
        for atom, m in zip(self.algebra.atoms, self.masses):
            if m == 0:
                continue
            if atom.isdisjoint(given) or atom <= given:
                detail = ""
                if not given:
                    detail = " (the adjoined event is empty)"
                elif given == self.algebra.ground_set:
                    detail = " (the adjoined event is the whole ground set)"
                raise NotIndependent(
                    "adjoined event must split every positive-mass atom"
                    f"{detail}; use strict=False for refinement-only extensions"
                )

    @staticmethod
    def _conditional_scale(
        theta: Fraction,
        in_e: Fraction,
        out_e: Fraction,
        in_c: Fraction,
        out_c: Fraction,
    ) -> Fraction:
        """The mass the adjoined event receives, chosen mid-interval.

        The event side must absorb theta*s within [in_e, out_e] and the
        complement side (1-theta)*s within [in_c, out_c]; s is picked as
        the midpoint of the feasible interval, which in the strict case
        reduces to min(P(A)/theta, (1-P(A))/(1-theta)) / 2.
        """
        lo = ZERO
        hi: Fraction | None = None
        if theta == 0:
            if in_e > 0:
                raise OutOfRange(
                    "conditional target 0 unattainable: the adjoined event "
                    "already carries forced mass inside the target event"
                )
            lo, hi = in_c, out_c
        elif theta == 1:
            if in_c > 0:
                raise OutOfRange(
                    "conditional target 1 unattainable: the adjoined event "
                    "already carries forced mass outside the target event"
                )
            lo, hi = in_e, out_e
        else:
            lo = max(in_e / theta, in_c / (1 - theta))
            hi = min(out_e / theta, out_c / (1 - theta))
        if hi is None or lo > hi:
            lo_bound = in_e / (in_e + out_c) if in_e + out_c > 0 else ONE
            hi_bound = out_e / (out_e + in_c) if out_e + in_c > 0 else ZERO
            raise OutOfRange(
                f"conditional target {format_rational(theta)} outside the feasible "
                f"interval [{format_rational(lo_bound)}, {format_rational(hi_bound)}]"
            )
        scale = (lo + hi) / 2
        if scale == 0:
            raise OutOfRange(
                "the adjoined event cannot receive positive mass, so no "
                "conditional value is defined on it"
            )
        return scale

    def _allocate_side(
        self,
        given: frozenset,
        budget: Fraction,
        part_mass: dict[frozenset, Fraction],
        *,
        event_side: bool,
        event: frozenset,
    ) -> None:
        """Greedy fill of atom-inside-given parts on one side of the event."""
        forced = ZERO
        for atom, m in zip(self.algebra.atoms, self.masses):
            if (atom <= event) == event_side and atom <= given:
                forced += m
        residual = budget - forced
        for atom, m in zip(self.algebra.atoms, self.masses):
            if (atom <= event) != event_side:
                continue
            inside = atom & given
            outside = atom - given
            if not inside:
                part_mass[atom] = m
            elif not outside:
                part_mass[atom] = m
            else:
                take = min(residual, m)
                residual -= take
                part_mass[frozenset(inside)] = take
                part_mass[frozenset(outside)] = m - take
        assert residual == 0, "allocation failed to exhaust the side budget"


def mix(alpha: RationalLike, first: Charge, second: Charge) -> Charge:
    """The convex combination alpha*first + (1-alpha)*second."""
    alpha = as_rational(alpha, name="alpha")
    if not 0 <= alpha <= 1:
        raise OutOfRange(f"mixture weight {format_rational(alpha)} not in [0, 1]")
    if first.algebra != second.algebra:
        raise AlgebraMismatch("mixture requires both charges on the same algebra")
    masses = tuple(
        alpha * a + (1 - alpha) * b for a, b in zip(first.masses, second.masses)
    )
    return Charge(first.algebra, masses)
