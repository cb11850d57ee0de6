"""Dual groups of expressions and the dual route to reducibility.

Componentwise duals: the real line is self-dual, the circle dualizes to the
integers, and a solenoid dualizes to the rank-1 subgroup of the rationals
whose denominators are bounded by its profile.  A rank-1 type is therefore
either the integers (ALL_ZERO) or a profile.

Between rank-1 groups every homomorphism is multiplication by a rational
u/v, and a nonzero one from type ``a`` into type ``b`` exists exactly when a
fixed numerator u can absorb all of ``a``'s surplus denominators: per prime,
the image's denominator multiplicity is a's minus the multiplicity of u, so
a single u suffices iff the surplus of ``a`` over ``b`` is finite in total.
That makes the existence test the same deficit computation as the primal
profile order, which is the point of the cross-check: for compact
expressions, matching dual components (targets drawn from the source
expression's dual) must reproduce the primal verdict.  Any nonzero hom
between rank-1 groups has rank-0, hence torsion, cokernel, so a matching
covering every component of the target's dual realizes a homomorphism whose
full cokernel is torsion, which is the acceptance condition on the dual
side.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import DomainError
from .groups import TORUS, AtomKind, GroupExpr, group, is_compact
from .matching import saturating_matching_or_violator
from .supernatural import OMEGA, SupernaturalProfile, deficit

__all__ = [
    "RationalType",
    "INTEGERS",
    "DualComponentKind",
    "DualComponent",
    "DualExpr",
    "dual",
    "rank",
    "hom_nonzero_exists",
    "dual_reduces",
]

_ZERO_PROFILE = SupernaturalProfile((), 0)


@dataclass(frozen=True)
class RationalType:
    """Isomorphism type of a rank-1 group: a subgroup of the rationals whose
    denominators' prime factorizations are bounded by ``profile``.  The
    ``profile=None`` value is the distinguished all-zero type, the integers.
    """

    profile: SupernaturalProfile | None = None

    def __post_init__(self):
        if self.profile is not None and not isinstance(self.profile, SupernaturalProfile):
            raise DomainError(f"rational type wants a profile or None, got {self.profile!r}")

    @property
    def is_integers(self) -> bool:
        return self.profile is None

    @property
    def effective_profile(self) -> SupernaturalProfile:
        return _ZERO_PROFILE if self.profile is None else self.profile

    def __str__(self):
        return "Z" if self.profile is None else f"Q{self.profile}"


INTEGERS = RationalType(None)


class DualComponentKind(Enum):
    REAL_LINE = "REAL_LINE"
    RANK1 = "RANK1"


@dataclass(frozen=True)
class DualComponent:
    kind: DualComponentKind
    rational_type: RationalType | None = None

    def __post_init__(self):
        if self.kind is DualComponentKind.RANK1:
            if not isinstance(self.rational_type, RationalType):
                raise DomainError("RANK1 dual component requires a rational type")
        elif self.rational_type is not None:
            raise DomainError("REAL_LINE dual component carries no rational type")

    def __str__(self):
        return "R" if self.kind is DualComponentKind.REAL_LINE else str(self.rational_type)


_REAL_LINE = DualComponent(DualComponentKind.REAL_LINE)


@dataclass(frozen=True)
class DualExpr:
    """Dual of a group expression, componentwise (one entry per factor)."""

    components: tuple = ()


def dual(g: GroupExpr) -> DualExpr:
    """Componentwise dual: R stays R, T becomes the integers, a solenoid
    becomes the rational type of its profile.

    >>> str(dual(group(TORUS)).components[0])
    'Z'
    """
    components = []
    for atom in g.factors:
        if atom.kind is AtomKind.REAL:
            components.append(_REAL_LINE)
        elif atom.kind is AtomKind.TORUS:
            components.append(DualComponent(DualComponentKind.RANK1, INTEGERS))
        else:
            components.append(
                DualComponent(DualComponentKind.RANK1, RationalType(atom.profile))
            )
    return DualExpr(tuple(components))


def rank(d: DualExpr) -> int:
    """Torsion-free rank of the dual of a compact expression: each rank-1
    component contributes one.  The rank/dimension identity is stated for
    compact groups, so a real-line component is out of domain here."""
    if any(c.kind is DualComponentKind.REAL_LINE for c in d.components):
        raise DomainError("rank is defined here only for duals of compact expressions")
    return len(d.components)


def hom_nonzero_exists(a: RationalType, b: RationalType) -> bool:
    """Is there a nonzero homomorphism from the group of type ``a`` into the
    group of type ``b``?  Holds iff the surplus of ``a``'s denominator
    profile over ``b``'s is finite (a single numerator absorbs it).

    >>> hom_nonzero_exists(INTEGERS, RationalType(SupernaturalProfile({2: OMEGA})))
    True
    >>> hom_nonzero_exists(RationalType(SupernaturalProfile({2: OMEGA})), INTEGERS)
    False
    """
    return deficit(a.effective_profile, b.effective_profile) is not OMEGA


def dual_reduces(g: GroupExpr, h: GroupExpr) -> bool:
    """Decide reducibility of ``g`` into ``h`` through the duals.

    Both sides must be compact (no real factor).  Builds the bipartite graph
    whose left vertices are ``dual(g)``'s components and whose edges join a
    component of ``dual(h)`` to a component of ``dual(g)`` when a nonzero
    homomorphism exists between them; reducibility holds iff a matching
    saturates ``dual(g)``'s side.  Must agree with the primal engine.
    """
    if not is_compact(g):
        raise DomainError("dual route requires a compact source (no R factor)")
    if not is_compact(h):
        raise DomainError("dual route is restricted to compact targets (no R factor)")
    targets = dual(g).components
    sources = dual(h).components
    adjacency = [
        [
            j
            for j in range(len(sources))
            if hom_nonzero_exists(sources[j].rational_type, targets[i].rational_type)
        ]
        for i in range(len(targets))
    ]
    matching, _ = saturating_matching_or_violator(len(targets), len(sources), adjacency)
    return matching is not None
