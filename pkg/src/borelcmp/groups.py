"""Symbolic group expressions: finite products of R, T, and solenoids.

An expression is a flat, ordered list of atoms.  Each atom is connected,
abelian, and one-dimensional, so the factor count is the covering dimension
and compactness is just the absence of R factors.  Raw parse trees (with
nested products, powers, and integer-sequence solenoids) normalize into this
form; the trivial group is the empty product and is admitted so that every
command-line operation is total.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Union

from .errors import DomainError
from .supernatural import (
    OMEGA,
    IntSeqSpec,
    SupernaturalProfile,
    factor_sequence,
    profile_from_sequence,
)

__all__ = [
    "AtomKind",
    "Atom",
    "REAL",
    "TORUS",
    "GroupExpr",
    "TRIVIAL_GROUP",
    "group",
    "solenoid",
    "RawAtom",
    "RawTrivial",
    "RawSolenoidSeq",
    "RawPower",
    "RawProduct",
    "normalize_group",
    "dimension",
    "is_compact",
]


class AtomKind(Enum):
    REAL = "R"
    TORUS = "T"
    SOLENOID = "SOL"


@dataclass(frozen=True)
class Atom:
    """One factor: the real line, the circle group, or a solenoid whose
    isomorphism type is carried by a prime-multiplicity profile."""

    kind: AtomKind
    profile: SupernaturalProfile | None = None

    def __post_init__(self):
        if self.kind is AtomKind.SOLENOID:
            if not isinstance(self.profile, SupernaturalProfile):
                raise DomainError("solenoid atom requires a profile")
            if not self.profile.has_infinite_total:
                raise DomainError(
                    f"profile {self.profile} has finite total multiplicity; a solenoid "
                    "needs an infinite prime sequence behind it"
                )
        elif self.profile is not None:
            raise DomainError(f"{self.kind.value} atom carries no profile")

    def __str__(self):
        if self.kind is AtomKind.SOLENOID:
            return f"Sol{self.profile}"
        return self.kind.value


REAL = Atom(AtomKind.REAL)
TORUS = Atom(AtomKind.TORUS)


def solenoid(profile: Union[SupernaturalProfile, Mapping], default=0) -> Atom:
    """Solenoid atom from a profile, or from an exceptions mapping plus default.

    >>> str(solenoid({2: 6, 3: OMEGA}))
    'Sol{2:6, 3:w}'
    """
    if not isinstance(profile, SupernaturalProfile):
        profile = SupernaturalProfile(profile, default)
    return Atom(AtomKind.SOLENOID, profile)


@dataclass(frozen=True)
class GroupExpr:
    """Normalized product: a finite ordered tuple of atoms (empty = trivial)."""

    factors: tuple = ()

    def __post_init__(self):
        factors = tuple(self.factors)
        for atom in factors:
            if not isinstance(atom, Atom):
                raise DomainError(f"group factor must be an Atom, got {atom!r}")
        object.__setattr__(self, "factors", factors)

    @property
    def is_trivial(self) -> bool:
        return not self.factors

    def __mul__(self, other: "GroupExpr") -> "GroupExpr":
        return GroupExpr(self.factors + other.factors)

    def __str__(self):
        from .literals import render_group

        return render_group(self)


TRIVIAL_GROUP = GroupExpr(())


def group(*atoms: Atom) -> GroupExpr:
    return GroupExpr(tuple(atoms))


# Raw parse trees, as produced by the literal parser.

@dataclass(frozen=True)
class RawAtom:
    atom: Atom


@dataclass(frozen=True)
class RawTrivial:
    pass


@dataclass(frozen=True)
class RawSolenoidSeq:
    seq: IntSeqSpec


@dataclass(frozen=True)
class RawPower:
    base: "RawNode"
    exponent: int


@dataclass(frozen=True)
class RawProduct:
    parts: tuple


RawNode = Union[RawAtom, RawTrivial, RawSolenoidSeq, RawPower, RawProduct, GroupExpr]


def normalize_group(node: RawNode) -> GroupExpr:
    """Flatten a raw tree to a factor list: powers expand, nested products
    splice, integer-sequence solenoids factor into prime solenoids, and the
    trivial atom contributes nothing.  Idempotent on normalized expressions.
    """
    if isinstance(node, GroupExpr):
        return node
    if isinstance(node, RawAtom):
        return GroupExpr((node.atom,))
    if isinstance(node, RawTrivial):
        return TRIVIAL_GROUP
    if isinstance(node, RawSolenoidSeq):
        profile = profile_from_sequence(factor_sequence(node.seq))
        return GroupExpr((Atom(AtomKind.SOLENOID, profile),))
    if isinstance(node, RawPower):
        if node.exponent < 0:
            raise DomainError(f"group exponent must be nonnegative, got {node.exponent}")
        base = normalize_group(node.base)
        return GroupExpr(base.factors * node.exponent)
    if isinstance(node, RawProduct):
        factors: tuple = ()
        for part in node.parts:
            factors += normalize_group(part).factors
        return GroupExpr(factors)
    raise DomainError(f"not a group expression node: {node!r}")


def dimension(g: GroupExpr) -> int:
    """Covering dimension: every atom is one-dimensional, so count factors."""
    return len(g.factors)


def is_compact(g: GroupExpr) -> bool:
    """True iff no R factor (torus and solenoid factors are compact)."""
    return all(atom.kind is not AtomKind.REAL for atom in g.factors)
