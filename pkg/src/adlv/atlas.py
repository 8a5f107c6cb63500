"""Versioned JSON persistence for atlases of straight classes.

A document records the Cartan configuration, the automorphism, the
enumeration bound and one record per straight class (Kottwitz members,
exact Newton point coordinates as "p/q" strings, minimal length, canonical
representative word).  Loading revalidates every record against a fresh
group: inconsistent documents are refused.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import classes as _classes
from .cartan import CoweightVec, rational_str
from .classes import ClassInvariant, KottwitzClass, NewtonPoint, StraightClass
from .errors import VerificationError
from .weyl import EAWGroup, GroupAuto

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class Atlas:
    group: EAWGroup
    sigma: GroupAuto
    max_length: int
    classes: tuple[StraightClass, ...]


def compute_atlas(sigma: GroupAuto, max_length: int) -> Atlas:
    classes = tuple(_classes.straight_classes_upto(max_length, sigma))
    return Atlas(sigma.group, sigma, max_length, classes)


def save_atlas(path, atlas: Atlas) -> None:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "cartan": atlas.group.datum.config_string(),
        "sigma": atlas.sigma.describe(),
        "max_length": atlas.max_length,
        "classes": [
            {
                "kappa": sorted(c.invariant.kappa.members),
                "nu": [rational_str(x) for x in c.invariant.nu.nu.coords],
                "min_length": c.min_length,
                "representative": atlas.group.canonical_str(c.representative),
            }
            for c in atlas.classes
        ],
    }
    Path(path).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")


def load_atlas(path, *, backend: str = "auto") -> Atlas:
    """Load and revalidate an atlas document.

    Every record is checked for internal consistency: the representative
    word must evaluate to a straight element whose length and invariant
    reproduce the stored min_length (= <nu, 2 rho>), Kottwitz members and
    Newton point.
    """
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise VerificationError(f"atlas {path} is not valid JSON: {exc}") from exc
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise VerificationError(
            f"atlas {path} has schema_version {doc.get('schema_version')!r}, expected {SCHEMA_VERSION}"
        )
    group = EAWGroup.from_config(doc["cartan"], backend=backend)
    sigma = group.parse_sigma(doc["sigma"])
    out = []
    for num, rec in enumerate(doc["classes"]):
        where = f"atlas {path} record {num}"
        rep = group.parse(rec["representative"])
        nu = NewtonPoint(CoweightVec(tuple(Fraction(s) for s in rec["nu"])))
        inv = ClassInvariant(KottwitzClass(frozenset(rec["kappa"])), nu)
        stored_len = rec["min_length"]
        expected_len = _classes.min_length_of(inv, group.datum, group.rootsystem)
        if stored_len != expected_len:
            raise VerificationError(
                f"{where}: min_length {stored_len} != <nu, 2 rho> = {expected_len}"
            )
        if rep.length() != stored_len:
            raise VerificationError(
                f"{where}: representative {rec['representative']!r} has length {rep.length()}, stored {stored_len}"
            )
        if not _classes.is_straight(rep, sigma):
            raise VerificationError(f"{where}: representative is not straight")
        if _classes.class_invariant(rep, sigma) != inv:
            raise VerificationError(f"{where}: representative invariant does not match stored invariant")
        out.append(StraightClass(inv, stored_len, rep))
    return Atlas(group, sigma, int(doc["max_length"]), tuple(out))


def verify_atlas(path, *, backend: str = "auto") -> tuple[bool, str]:
    """Replay a cached atlas against a fresh enumeration.

    Returns (ok, message); ok is False when the stored class list differs
    from a recomputation at the stored bound.
    """
    atlas = load_atlas(path, backend=backend)
    fresh = compute_atlas(atlas.sigma, atlas.max_length)
    stored = {(c.invariant, c.min_length) for c in atlas.classes}
    recomputed = {(c.invariant, c.min_length) for c in fresh.classes}
    if stored == recomputed:
        return True, f"atlas {path} verified: {len(stored)} classes at max_length {atlas.max_length}"
    missing = recomputed - stored
    extra = stored - recomputed
    return False, (
        f"atlas {path} disagrees with fresh computation: "
        f"{len(missing)} classes missing, {len(extra)} unexpected"
    )
