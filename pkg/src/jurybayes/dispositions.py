"""Juror verdict dispositions and threshold rationalization.

A disposition maps every transcript to a verdict.  The central
construction builds, for any disposition that acquits on no testimony
but convicts on something, an even-odds prior whose threshold behaviour
reproduces the disposition exactly: posterior guilt is theta on every
convicting transcript and 1-theta on every acquitting one.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .charges import Charge, mix
from .errors import (
    AxiomViolation,
    CatalogMismatch,
    ThetaOutOfRange,
    ZeroTranscriptMass,
)
from .rationals import RationalLike, as_rational, format_rational
from .worlds import (
    EMPTY_TRANSCRIPT,
    Guilt,
    TestimonyCatalog,
    Transcript,
    World,
    event_of_transcript,
    full_world_space,
    guilt_event,
    powerset_algebra,
)

HALF = Fraction(1, 2)


class Verdict(enum.Enum):
    CONVICT = "convict"
    ACQUIT = "acquit"


@dataclass(frozen=True)
class Disposition:
    """A total map from transcripts to verdicts, stored sparsely.

    Only the convicting transcripts are listed; everything else acquits.
    """

    catalog: TestimonyCatalog
    convicting: frozenset[Transcript]

    def __init__(
        self, catalog: TestimonyCatalog, convicting: Iterable[Transcript]
    ) -> None:
        object.__setattr__(self, "catalog", catalog)
        object.__setattr__(self, "convicting", frozenset(convicting))
        for transcript in self.convicting:
            catalog._check_transcript(transcript)

    @classmethod
    def from_label_sets(
        cls, catalog: TestimonyCatalog, label_sets: Iterable[Iterable[str]]
    ) -> "Disposition":
        return cls(catalog, (catalog.transcript(labels) for labels in label_sets))

    def verdict(self, transcript: Transcript) -> Verdict:
        self.catalog._check_transcript(transcript)
        return Verdict.CONVICT if transcript in self.convicting else Verdict.ACQUIT

    def transcripts(self) -> Iterator[Transcript]:
        return self.catalog.all_transcripts()


def check_poi(disposition: Disposition) -> bool:
    """Presumption of innocence: no conviction on the empty transcript."""
    return EMPTY_TRANSCRIPT not in disposition.convicting


def check_wtc(disposition: Disposition) -> bool:
    """Willingness to convict: some transcript convicts."""
    return bool(disposition.convicting)


def always_convict_nonempty(catalog: TestimonyCatalog) -> Disposition:
    """Convict as soon as any testimony at all is heard."""
    return Disposition(
        catalog, (t for t in catalog.all_transcripts() if len(t) > 0)
    )


@dataclass(frozen=True)
class RationalizationCertificate:
    """A prior certified to reproduce a disposition at threshold theta.

    ``posteriors`` holds the construction's exact per-transcript guilt
    posteriors: theta on convicting transcripts, 1-theta on acquitting
    ones.  ``verify_rationalization`` recomputes them independently.
    """

    disposition: Disposition
    theta: Fraction
    prior: Charge
    guilt_prior: Fraction
    posteriors: dict[Transcript, Fraction]


@dataclass(frozen=True)
class VerificationResult:
    """Outcome of an independent threshold-behaviour check."""

    ok: bool
    witness: Transcript | None
    posteriors: dict[Transcript, Fraction]

    def __bool__(self) -> bool:
        return self.ok


def rationalize(
    disposition: Disposition, theta: RationalLike
) -> RationalizationCertificate:
    """Construct an even-odds prior that theta-rationalizes the disposition.

    Requires 1/2 < theta < 1 and both axioms.  The prior is the equal
    mixture of a convicting-side measure (mass theta/n_C on (T, guilty)
    and (1-theta)/n_C on (T, innocent) for convicting T) and the mirror
    acquitting-side measure; the mixture weight 1/2 is forced by
    requiring prior guilt exactly 1/2.
    """
    theta = as_rational(theta, name="theta")
    if not HALF < theta < 1:
        raise ThetaOutOfRange(
            f"rationalization threshold must satisfy 1/2 < theta < 1, "
            f"got {format_rational(theta)}"
        )
    if not check_poi(disposition):
        raise AxiomViolation(
            "presumption of innocence fails: the empty transcript convicts"
        )
    if not check_wtc(disposition):
        raise AxiomViolation("willingness to convict fails: no transcript convicts")

    catalog = disposition.catalog
    worlds = full_world_space(catalog)
    algebra = powerset_algebra(worlds)
    n_convict = len(disposition.convicting)
    n_acquit = (1 << len(catalog)) - n_convict

    convict_masses: dict[frozenset, Fraction] = {}
    acquit_masses: dict[frozenset, Fraction] = {}
    for world in worlds:
        atom = frozenset({world})
        if world.transcript in disposition.convicting:
            guilty_share = theta if world.guilt is Guilt.GUILTY else 1 - theta
            convict_masses[atom] = guilty_share / n_convict
        else:
            guilty_share = 1 - theta if world.guilt is Guilt.GUILTY else theta
            acquit_masses[atom] = guilty_share / n_acquit
    convict_side = Charge.from_atom_masses(algebra, convict_masses)
    acquit_side = Charge.from_atom_masses(algebra, acquit_masses)
    prior = mix(HALF, convict_side, acquit_side)

    posteriors = {
        t: (theta if t in disposition.convicting else 1 - theta)
        for t in catalog.all_transcripts()
    }
    return RationalizationCertificate(
        disposition=disposition,
        theta=theta,
        prior=prior,
        guilt_prior=HALF,
        posteriors=posteriors,
    )


def verify_rationalization(
    disposition: Disposition, theta: RationalLike, prior: Charge
) -> VerificationResult:
    """Check f(T) = convict iff P(guilt | transcript T) >= theta.

    Recomputes every conditional from the prior's atom masses; it never
    trusts a certificate's posterior table.  Returns the first failing
    transcript (canonical order) as witness.
    """
    theta = as_rational(theta, name="theta")
    catalog = disposition.catalog
    _require_world_ground(prior, catalog)
    posteriors: dict[Transcript, Fraction] = {}
    witness: Transcript | None = None
    for transcript in catalog.all_transcripts():
        transcript_event = event_of_transcript(catalog, transcript)
        transcript_mass = prior.measure(transcript_event)
        if transcript_mass == 0:
            raise ZeroTranscriptMass(
                f"P(E_T) = 0 for transcript "
                f"{{{','.join(catalog.transcript_labels(transcript))}}}; "
                "the threshold biconditional is undefined there"
            )
        guilty_world = World(transcript, Guilt.GUILTY)
        posterior = prior.measure(frozenset({guilty_world})) / transcript_mass
        posteriors[transcript] = posterior
        convicts = posterior >= theta
        if witness is None and convicts != (transcript in disposition.convicting):
            witness = transcript
    return VerificationResult(witness is None, witness, posteriors)


def is_open_door(prior: Charge) -> bool:
    """True iff no positive-mass transcript pins guilt to 0 or 1."""
    transcripts: dict[Transcript, list[World]] = {}
    for world in prior.algebra.ground:
        if not isinstance(world, World):
            raise TypeError("open-door check needs a charge over trial worlds")
        transcripts.setdefault(world.transcript, []).append(world)
    for transcript, members in transcripts.items():
        transcript_mass = prior.measure(frozenset(members))
        if transcript_mass == 0:
            continue
        guilty = frozenset(w for w in members if w.guilt is Guilt.GUILTY)
        posterior = prior.measure(guilty) / transcript_mass
        if posterior == 0 or posterior == 1:
            return False
    return True


def posner_even_odds_prior(catalog: TestimonyCatalog, theta: RationalLike) -> Charge:
    """An even-odds prior that convicts on every nonempty transcript.

    Prior guilt is exactly 1/2 yet the guilt posterior meets theta as
    soon as any testimony is heard.  For theta <= 1/2 the construction
    runs at the interior threshold 2/3, whose posteriors still dominate
    theta.
    """
    theta = as_rational(theta, name="theta")
    if not 0 < theta < 1:
        raise ThetaOutOfRange(
            f"even-odds prior needs 0 < theta < 1, got {format_rational(theta)}"
        )
    effective = theta if theta > HALF else Fraction(2, 3)
    certificate = rationalize(always_convict_nonempty(catalog), effective)
    return certificate.prior


def _require_world_ground(prior: Charge, catalog: TestimonyCatalog) -> None:
    expected = frozenset(full_world_space(catalog))
    if prior.algebra.ground_set != expected:
        raise CatalogMismatch(
            "the charge is not defined on the world space of this catalog"
        )


def guilt_prior(prior: Charge, catalog: TestimonyCatalog) -> Fraction:
    """P(guilt) under a charge on the catalog's world space."""
    _require_world_ground(prior, catalog)
    return prior.measure(guilt_event(catalog))
