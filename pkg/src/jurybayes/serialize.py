"""JSON formats for catalogs, dispositions, charges, and certificates.

All rational values travel as exact strings ("3/4"); world and atom keys
are canonical and byte-stable, so identical inputs serialize to
identical bytes.  Decimal renderings appear only in human-readable
tables and are marked approximate there.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any, Mapping

from .charges import Charge
from .dispositions import Disposition, RationalizationCertificate
from .errors import CapExceeded, CatalogMismatch, ParseError
from .rationals import as_rational, format_rational
from .worlds import (
    BooleanSubalgebra,
    Guilt,
    TestimonyCatalog,
    Transcript,
    World,
    event_of_transcript,
    full_world_space,
    guilt_event,
    heard_event,
    powerset_algebra,
    world_sort_key,
)

#: Labels must stay clear of the characters world keys and event specs use.
_LABEL_RE = re.compile(r"^[A-Za-z0-9_.-]+$")


def world_key(catalog: TestimonyCatalog, world: World) -> str:
    labels = catalog.transcript_labels(world.transcript)
    return "{" + ",".join(labels) + "}|" + world.guilt.value


def parse_world_key(catalog: TestimonyCatalog, key: str) -> World:
    match = re.fullmatch(r"\{([^{}|]*)\}\|([GI])", key)
    if not match:
        raise ParseError(f"bad world key {key!r}; expected e.g. '{{t1,t2}}|G'")
    inner, guilt_letter = match.groups()
    labels = [part for part in inner.split(",") if part] if inner else []
    try:
        transcript = catalog.transcript(labels)
    except Exception as exc:
        raise ParseError(f"world key {key!r}: {exc}") from exc
    return World(transcript, Guilt(guilt_letter))


def atom_key(catalog: TestimonyCatalog, atom: frozenset) -> str:
    worlds = sorted(atom, key=world_sort_key)
    return ";".join(world_key(catalog, w) for w in worlds)


def transcript_labels_list(catalog: TestimonyCatalog, transcript: Transcript) -> list[str]:
    return list(catalog.transcript_labels(transcript))


# ---------------------------------------------------------------------------
# Catalogs.


def catalog_from_jsonable(labels: Any, *, world_cap: int | None = None) -> TestimonyCatalog:
    if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
        raise ParseError('"catalog" must be a list of strings')
    for label in labels:
        if not _LABEL_RE.match(label):
            raise ParseError(
                f"label {label!r} is not serializable; use letters, digits, '_', '.', '-'"
            )
    try:
        return TestimonyCatalog(labels, world_cap=world_cap)
    except CapExceeded:
        raise  # configuration limit, not a malformed file; keeps its own exit code
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def _require_keys(obj: Mapping[str, Any], required: set[str], optional: set[str], what: str) -> None:
    if not isinstance(obj, Mapping):
        raise ParseError(f"{what} must be a JSON object")
    keys = set(obj)
    missing = required - keys
    if missing:
        raise ParseError(f"{what} is missing key(s): {sorted(missing)}")
    unknown = keys - required - optional
    if unknown:
        raise ParseError(f"{what} has unknown key(s): {sorted(unknown)}")


# ---------------------------------------------------------------------------
# Dispositions.


def disposition_to_jsonable(disposition: Disposition) -> dict[str, Any]:
    catalog = disposition.catalog
    convicting = sorted(disposition.convicting, key=lambda t: t.mask)
    return {
        "catalog": list(catalog.labels),
        "convicting": [transcript_labels_list(catalog, t) for t in convicting],
        "default": "acquit",
    }


def disposition_from_jsonable(
    obj: Any, *, world_cap: int | None = None
) -> Disposition:
    _require_keys(obj, {"catalog", "convicting"}, {"default"}, "disposition")
    if obj.get("default", "acquit") != "acquit":
        raise ParseError('only "acquit" is supported as the disposition default')
    catalog = catalog_from_jsonable(obj["catalog"], world_cap=world_cap)
    raw = obj["convicting"]
    if not isinstance(raw, list) or not all(isinstance(entry, list) for entry in raw):
        raise ParseError('"convicting" must be a list of label lists')
    try:
        return Disposition.from_label_sets(catalog, raw)
    except Exception as exc:
        raise ParseError(f"bad convicting transcript: {exc}") from exc


# ---------------------------------------------------------------------------
# Charges over world spaces.


def charge_to_jsonable(catalog: TestimonyCatalog, charge: Charge) -> dict[str, Any]:
    doc: dict[str, Any] = {"catalog": list(catalog.labels)}
    if not charge.algebra.is_atomized_by_points:
        doc["atoms"] = [
            [world_key(catalog, w) for w in sorted(atom, key=world_sort_key)]
            for atom in charge.algebra.atoms
        ]
    doc["masses"] = {
        atom_key(catalog, atom): format_rational(mass)
        for atom, mass in zip(charge.algebra.atoms, charge.masses)
    }
    return doc


def charge_from_jsonable(
    obj: Any, *, world_cap: int | None = None
) -> tuple[TestimonyCatalog, Charge]:
    _require_keys(obj, {"catalog", "masses"}, {"atoms"}, "charge")
    catalog = catalog_from_jsonable(obj["catalog"], world_cap=world_cap)
    worlds = full_world_space(catalog)

    if "atoms" in obj:
        raw_atoms = obj["atoms"]
        if not isinstance(raw_atoms, list) or not all(
            isinstance(a, list) for a in raw_atoms
        ):
            raise ParseError('"atoms" must be a list of world-key lists')
        atoms = []
        for raw in raw_atoms:
            atoms.append(frozenset(parse_world_key(catalog, key) for key in raw))
        try:
            algebra = BooleanSubalgebra(
                worlds, tuple(sorted(atoms, key=lambda a: min(world_sort_key(w) for w in a)))
            )
        except ValueError as exc:
            raise ParseError(f"bad atom partition: {exc}") from exc
    else:
        algebra = powerset_algebra(worlds)

    raw_masses = obj["masses"]
    if not isinstance(raw_masses, Mapping):
        raise ParseError('"masses" must be an object mapping atom keys to rationals')
    key_to_atom = {atom_key(catalog, atom): atom for atom in algebra.atoms}
    masses: dict[frozenset, Fraction] = {}
    for key, raw_value in raw_masses.items():
        if key not in key_to_atom:
            raise ParseError(f"mass key {key!r} is not an atom of the charge's algebra")
        if not isinstance(raw_value, str):
            raise ParseError(
                f"mass for {key!r} must be an exact rational string, got {raw_value!r}"
            )
        try:
            value = as_rational(raw_value, name=f"mass[{key}]")
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
        masses[key_to_atom[key]] = value
    try:
        charge = Charge.from_atom_masses(algebra, masses)
    except ValueError as exc:
        raise ParseError(f"invalid charge: {exc}") from exc
    return catalog, charge


def charge_document_from_jsonable(
    obj: Any, *, world_cap: int | None = None
) -> tuple[TestimonyCatalog, Charge]:
    """Accept either a bare charge document or a certificate (its prior)."""
    if isinstance(obj, Mapping) and "prior" in obj:
        return charge_from_jsonable(obj["prior"], world_cap=world_cap)
    return charge_from_jsonable(obj, world_cap=world_cap)


# ---------------------------------------------------------------------------
# Certificates.


def certificate_to_jsonable(certificate: RationalizationCertificate) -> dict[str, Any]:
    catalog = certificate.disposition.catalog
    rows = []
    for transcript in catalog.all_transcripts():
        rows.append(
            {
                "transcript": transcript_labels_list(catalog, transcript),
                "verdict": certificate.disposition.verdict(transcript).value,
                "posterior": format_rational(certificate.posteriors[transcript]),
            }
        )
    return {
        "catalog": list(catalog.labels),
        "theta": format_rational(certificate.theta),
        "guilt_prior": format_rational(certificate.guilt_prior),
        "posteriors": rows,
        "prior": charge_to_jsonable(catalog, certificate.prior),
    }


# ---------------------------------------------------------------------------
# Event literals for the command line.


def event_from_spec(catalog: TestimonyCatalog, spec: str) -> frozenset:
    """Parse an event literal.

    Forms: "guilt"; "transcript:a+b" (exact-transcript event, empty after
    the colon for the no-testimony transcript); "heard:a+b" (all worlds
    whose transcript includes the listed testimonies); or a JSON array of
    world keys.
    """
    spec = spec.strip()
    if spec == "guilt":
        return guilt_event(catalog)
    if spec.startswith("transcript:") or spec.startswith("heard:"):
        kind, _, rest = spec.partition(":")
        labels = [part for part in rest.split("+") if part]
        try:
            transcript = catalog.transcript(labels)
        except Exception as exc:
            raise ParseError(f"event spec {spec!r}: {exc}") from exc
        if kind == "transcript":
            return event_of_transcript(catalog, transcript)
        return heard_event(catalog, transcript)
    if spec.startswith("["):
        try:
            keys = json.loads(spec)
        except json.JSONDecodeError as exc:
            raise ParseError(f"event spec is not valid JSON: {exc}") from exc
        if not isinstance(keys, list) or not all(isinstance(k, str) for k in keys):
            raise ParseError("a JSON event spec must be an array of world keys")
        return frozenset(parse_world_key(catalog, key) for key in keys)
    raise ParseError(
        f"unrecognized event spec {spec!r}; use 'guilt', 'transcript:...', "
        "'heard:...', or a JSON array of world keys"
    )


def require_same_catalog(first: TestimonyCatalog, second: TestimonyCatalog) -> None:
    if first.labels != second.labels:
        raise CatalogMismatch(
            f"catalogs differ: {list(first.labels)} vs {list(second.labels)}"
        )
