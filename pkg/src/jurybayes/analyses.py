"""Constraint analyses: uniform suspect pools, the blood-type sample
space, odds-form updating and relevance, and ratio-bounded convergence
to conviction.

Each analysis is an executable construction with exact rational output;
nothing here estimates real-world likelihoods.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import AbstractSet

from .charges import Charge
from .errors import (
    CapExceeded,
    CatalogTooSmall,
    DegeneratePrior,
    EmptyMatchWithMatchingDefendant,
    NonpositiveRatio,
    UndefinedRatio,
)
from .rationals import RationalLike, as_rational, exact_decimal, format_rational
from .worlds import (
    BooleanSubalgebra,
    TestimonyCatalog,
    Transcript,
    atoms_of_generated_algebra,
    full_world_space,
    guilt_event,
    heard_event,
)

HALF = Fraction(1, 2)


# ---------------------------------------------------------------------------
# Odds-form updating.


@dataclass(frozen=True)
class Odds:
    """Odds "a to b" with strictly positive exact components."""

    in_favor: Fraction
    against: Fraction

    def __init__(self, in_favor: RationalLike, against: RationalLike) -> None:
        object.__setattr__(self, "in_favor", as_rational(in_favor, name="in_favor"))
        object.__setattr__(self, "against", as_rational(against, name="against"))
        if self.in_favor <= 0 or self.against <= 0:
            raise ValueError("odds components must be strictly positive")

    @classmethod
    def parse(cls, text: str) -> "Odds":
        left, sep, right = text.partition(":")
        if not sep:
            raise ValueError(f"odds literal must look like 'a:b', got {text!r}")
        return cls(as_rational(left, name="odds"), as_rational(right, name="odds"))

    @property
    def probability(self) -> Fraction:
        return self.in_favor / (self.in_favor + self.against)

    def canonical(self) -> "Odds":
        """Scale so the smaller component is exactly 1."""
        smallest = min(self.in_favor, self.against)
        return Odds(self.in_favor / smallest, self.against / smallest)

    def display(self) -> str:
        return f"{_odds_component(self.in_favor)}:{_odds_component(self.against)}"


def _odds_component(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    decimal = exact_decimal(value)
    return decimal if decimal is not None else format_rational(value)


def posterior_odds(prior: Odds, likelihood_ratio: RationalLike) -> Odds:
    """Bayes in odds form: multiply the favoring component by the ratio."""
    ratio = as_rational(likelihood_ratio, name="likelihood ratio")
    if ratio <= 0:
        raise NonpositiveRatio(
            f"likelihood ratio must be positive, got {format_rational(ratio)}"
        )
    return Odds(prior.in_favor * ratio, prior.against).canonical()


# ---------------------------------------------------------------------------
# Uniform suspect-pool priors.


@dataclass(frozen=True)
class SuspectPool:
    """A uniform prior of guilt over a pool, with a matching subgroup.

    ``matching_count`` is the number of pool members fitting the
    witnessed description; ``defendant_matches`` says whether the
    defendant is among them.
    """

    size: int
    matching_count: int
    defendant_matches: bool

    def __post_init__(self) -> None:
        if self.size < 1:
            raise ValueError("pool must have at least one member")
        if not 0 <= self.matching_count <= self.size:
            raise ValueError("matching count must lie between 0 and the pool size")


def uniform_guilt_prior(pool: SuspectPool) -> Fraction:
    """1/|pool|: exactly one member is guilty, all equally likely."""
    return Fraction(1, pool.size)


def certain_witness_posterior(pool: SuspectPool) -> Fraction:
    """Posterior guilt after an infallible description of the culprit.

    Zero when the defendant does not match; otherwise uniform over the
    matching subgroup.
    """
    if not pool.defendant_matches:
        return Fraction(0)
    if pool.matching_count == 0:
        raise EmptyMatchWithMatchingDefendant(
            "defendant matches a description that nobody in the pool matches"
        )
    return Fraction(1, pool.matching_count)


@dataclass(frozen=True)
class FallibleWitnessReport:
    """A fallible description rules nobody out: the update is vacuous."""

    prior: Fraction
    posterior: Fraction
    event_size: int
    degenerate_update: bool


def fallible_witness_event(pool: SuspectPool) -> FallibleWitnessReport:
    """Once the witness may err, the testimonial event is the whole pool."""
    prior = uniform_guilt_prior(pool)
    return FallibleWitnessReport(
        prior=prior, posterior=prior, event_size=pool.size, degenerate_update=True
    )


# ---------------------------------------------------------------------------
# The blood-type paternity sample space.

#: The eight blood phenotypes, in fixed report order.
BLOOD_TYPES = ("A+", "A-", "AB+", "AB-", "B+", "B-", "O+", "O-")


@dataclass(frozen=True)
class SpannSpace:
    """The 128-point (blood type, blood type, paternity) sample space.

    ``algebra`` is the coarse two-atom algebra generated by the paternity
    event, on which the advertised fifty-fifty prior lives.  The sample
    alibi event is a strict subset of the paternity cell, standing in for
    case facts the space cannot express.
    """

    ground: tuple[tuple[str, str, bool], ...]
    algebra: BooleanSubalgebra
    charge: Charge
    paternity: frozenset
    alibi_example: frozenset


def build_spann_space() -> SpannSpace:
    ground = tuple(
        (father, child, paternity)
        for father in BLOOD_TYPES
        for child in BLOOD_TYPES
        for paternity in (True, False)
    )
    paternity = frozenset(point for point in ground if point[2])
    algebra = atoms_of_generated_algebra(ground, [paternity])
    charge = Charge.uniform_on_points(algebra)
    # any strict nonempty subset of the paternity cell works; fix one
    alibi = frozenset(p for p in paternity if BLOOD_TYPES.index(p[0]) < 4)
    return SpannSpace(
        ground=ground,
        algebra=algebra,
        charge=charge,
        paternity=paternity,
        alibi_example=alibi,
    )


# ---------------------------------------------------------------------------
# Likelihood ratios and relevance.


@dataclass(frozen=True)
class LikelihoodRatios:
    """Both likelihood-ratio readings of a piece of evidence.

    ``standard`` is P(E|H)/P(E|not H); evidence is relevant iff it
    differs from one.  ``impact`` is P(E|H)/P(E), which never exceeds
    ``impact_ceiling`` = 1/P(H); no such prior-only ceiling holds for
    the standard ratio.
    """

    standard: Fraction
    impact: Fraction
    relevant: bool
    impact_ceiling: Fraction


def likelihood_ratio(
    charge: Charge, evidence: AbstractSet, hypothesis: AbstractSet
) -> LikelihoodRatios:
    """Likelihood ratios of expressible evidence against a hypothesis."""
    evidence = frozenset(evidence)
    hypothesis = frozenset(hypothesis)
    p_hyp = charge.measure(hypothesis)
    if p_hyp == 0 or p_hyp == 1:
        raise DegeneratePrior(
            f"hypothesis has prior {format_rational(p_hyp)}; "
            "likelihood ratios need it strictly between 0 and 1"
        )
    complement = charge.algebra.ground_set - hypothesis
    given_hyp = charge.measure(evidence & hypothesis) / p_hyp
    given_not = charge.measure(evidence & complement) / (1 - p_hyp)
    if given_not == 0:
        raise UndefinedRatio(
            "P(E | not H) = 0: the standard likelihood ratio is undefined"
        )
    p_evidence = charge.measure(evidence)
    return LikelihoodRatios(
        standard=given_hyp / given_not,
        impact=given_hyp / p_evidence,
        relevant=given_hyp != given_not,
        impact_ceiling=1 / p_hyp,
    )


# ---------------------------------------------------------------------------
# Ratio-bounded convergence to conviction.


@dataclass(frozen=True)
class RateBoundConfig:
    """A per-testimony posterior-ratio bound 1+gamma and a verdict threshold."""

    gamma: Fraction
    theta: Fraction

    def __init__(self, gamma: RationalLike, theta: RationalLike) -> None:
        object.__setattr__(self, "gamma", as_rational(gamma, name="gamma"))
        object.__setattr__(self, "theta", as_rational(theta, name="theta"))
        if self.gamma <= 0:
            raise ValueError("gamma must be strictly positive")
        if not 0 < self.theta < 1:
            raise ValueError("theta must lie strictly between 0 and 1")

    @property
    def prior_guilt(self) -> Fraction:
        return HALF


@dataclass(frozen=True)
class TestimonyCountBound:
    """How many ratio-bounded testimonies reach the threshold.

    ``steps`` is the exact-powering count: the least m with
    (1/2)(1+gamma)^m >= theta, ties convicting.  ``log_bound`` is the
    strict-inequality logarithmic form, reported for comparison only
    (float, display precision).  ``poi_violated`` flags theta <= 1/2,
    where the prior alone already meets the threshold.
    """

    steps: int
    log_bound: float
    poi_violated: bool


#: Exact powering grows denominators linearly with the step count; a
#: near-zero gamma would demand astronomically long rationals, so counts
#: beyond this ceiling are refused rather than computed.
RATE_STEP_CAP = 4096


def min_convicting_testimony_count(config: RateBoundConfig) -> TestimonyCountBound:
    """Least m such that (1/2)(1+gamma)^m reaches theta, by exact powering."""
    level = HALF
    growth = 1 + config.gamma
    steps = 0
    while level < config.theta:
        if steps >= RATE_STEP_CAP:
            raise CapExceeded(
                f"more than {RATE_STEP_CAP} ratio-bounded steps needed to reach "
                f"{format_rational(config.theta)} at gamma = "
                f"{format_rational(config.gamma)}"
            )
        level *= growth
        steps += 1
    log_bound = math.log(2 * float(config.theta)) / math.log(float(growth))
    return TestimonyCountBound(
        steps=steps,
        log_bound=log_bound,
        poi_violated=config.theta <= HALF,
    )


@dataclass(frozen=True)
class RatioBoundedPrior:
    """A convicting prior whose posterior chain respects the ratio bound.

    ``posteriors[k]`` is the guilt posterior after the first k
    testimonies, measured from ``charge`` (index 0 is the prior);
    ``chain[k-1]`` is the k-th cumulative heard-event.
    """

    catalog: TestimonyCatalog
    config: RateBoundConfig
    charge: Charge
    chain: tuple[frozenset, ...]
    posteriors: tuple[Fraction, ...]

    @property
    def ratios(self) -> tuple[Fraction, ...]:
        return tuple(
            after / before
            for before, after in zip(self.posteriors, self.posteriors[1:])
        )

    def within_bound(self) -> bool:
        """Every successive posterior ratio within [1/(1+gamma), 1+gamma]."""
        growth = 1 + self.config.gamma
        return all(1 / growth <= r <= growth for r in self.ratios)

    def convicts(self) -> bool:
        return self.posteriors[-1] >= self.config.theta


def build_ratio_bounded_convicting_prior(
    catalog: TestimonyCatalog, config: RateBoundConfig
) -> RatioBoundedPrior:
    """Drive the guilt posterior from 1/2 to theta under the ratio bound.

    Starting from the two-atom guilt algebra with even odds, adjoin the
    nested heard-events one testimony at a time, each time prescribing
    the guilt posterior at the largest bound-respecting value.  Every
    prescription and every preserved earlier value is exact.
    """
    count = min_convicting_testimony_count(config)
    if len(catalog) < count.steps:
        raise CatalogTooSmall(
            f"need at least {count.steps} testimonies to reach "
            f"{format_rational(config.theta)} under the ratio bound; "
            f"catalog has {len(catalog)}"
        )
    worlds = full_world_space(catalog)
    guilt = guilt_event(catalog)
    algebra = atoms_of_generated_algebra(worlds, [guilt])
    charge = Charge.from_atom_masses(
        algebra, {atom: HALF for atom in algebra.atoms}
    )

    growth = 1 + config.gamma
    chain: list[frozenset] = []
    target = HALF
    for step in range(1, count.steps + 1):
        target = min(target * growth, config.theta)
        heard = heard_event(catalog, Transcript(range(step)))
        chain.append(heard)
        charge = charge.extend_conditional(guilt, heard, target, strict=False)

    posteriors = [charge.measure(guilt)]
    for heard in chain:
        posteriors.append(charge.conditional(guilt, heard).value)
    return RatioBoundedPrior(
        catalog=catalog,
        config=config,
        charge=charge,
        chain=tuple(chain),
        posteriors=tuple(posteriors),
    )
