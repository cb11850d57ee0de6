"""Decide reducibility between group expressions, with certificates.

The atom-level rule table:

    source \\ target |  R  |  T  | Sol_Q
    ----------------+-----+-----+---------------------------
    R               | yes | yes | yes
    T               | no  | yes | no
    Sol_P           | no  | yes | iff profile(Q) preceq profile(P)

Note the direction reversal in the solenoid/solenoid cell: the *target's*
profile must embed into the *source's*.  A product reduces to a product
exactly when an injective assignment of source factors to target factors
exists with every assigned pair in the table; this is decided by bipartite
matching, and the outcome ships either the assignment (with a per-edge
reason and, for solenoid pairs, the recomputable surplus table) or a Hall
violator refuting every assignment.

The trivial group (empty product) reduces to everything, and nothing
nontrivial reduces to it.  All factor indices in certificates are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import DomainError
from .groups import REAL, TORUS, Atom, AtomKind, GroupExpr, solenoid
from .matching import saturating_matching_or_violator
from .supernatural import OMEGA, finite_surplus_table, preceq

__all__ = [
    "EdgeReason",
    "EdgeWitness",
    "HallViolator",
    "Verdict",
    "ComparisonOutcome",
    "atom_reduces",
    "edge_reason",
    "reduces",
    "rt_closed_form",
    "compare",
    "verify_certificate",
]


class EdgeReason(Enum):
    RULE_R_ANY = "RULE_R_ANY"      # real line reduces into any atom
    RULE_T_T = "RULE_T_T"          # circle into circle
    RULE_SOL_T = "RULE_SOL_T"      # solenoid into circle
    RULE_SOL_SOL = "RULE_SOL_SOL"  # solenoid into solenoid, via profile embedding


@dataclass(frozen=True)
class EdgeWitness:
    """One certificate edge: source factor ``left_index`` maps to target
    factor ``right_index`` (both 1-based) for the stated reason.  For
    solenoid/solenoid edges, ``deficit`` is the per-prime surplus of the
    target profile over the source profile; its total is finite by validity.
    """

    left_index: int
    right_index: int
    reason: EdgeReason
    deficit: tuple = ()

    @property
    def total_deficit(self) -> int:
        return sum(d for _, d in self.deficit)


@dataclass(frozen=True)
class HallViolator:
    """Refutation: left factor set K (1-based indices) whose full
    neighborhood N(K) under the rule table is strictly smaller."""

    K: tuple
    NK: tuple


@dataclass(frozen=True)
class Verdict:
    reducible: bool
    certificate: tuple | None = None
    violator: HallViolator | None = None


class ComparisonOutcome(Enum):
    EQUIVALENT = "EQUIVALENT"
    LEFT_STRICT = "LEFT_STRICT"
    RIGHT_STRICT = "RIGHT_STRICT"
    INCOMPARABLE = "INCOMPARABLE"


def atom_reduces(a: Atom, b: Atom) -> bool:
    """Rule table entry: does the relation induced by ``a`` reduce to the
    one induced by ``b``?

    >>> atom_reduces(REAL, solenoid({2: OMEGA}))
    True
    >>> atom_reduces(TORUS, solenoid({2: OMEGA}))
    False
    """
    if a.kind is AtomKind.REAL:
        return True
    if a.kind is AtomKind.TORUS:
        return b.kind is AtomKind.TORUS
    # a solenoid
    if b.kind is AtomKind.TORUS:
        return True
    if b.kind is AtomKind.REAL:
        return False
    return preceq(b.profile, a.profile)


def edge_reason(a: Atom, b: Atom) -> EdgeReason:
    if a.kind is AtomKind.REAL:
        return EdgeReason.RULE_R_ANY
    if a.kind is AtomKind.TORUS:
        return EdgeReason.RULE_T_T
    if b.kind is AtomKind.TORUS:
        return EdgeReason.RULE_SOL_T
    return EdgeReason.RULE_SOL_SOL


def _witness(i: int, j: int, a: Atom, b: Atom) -> EdgeWitness:
    reason = edge_reason(a, b)
    table = ()
    if reason is EdgeReason.RULE_SOL_SOL:
        table = finite_surplus_table(b.profile, a.profile)
    return EdgeWitness(i + 1, j + 1, reason, table)


def reduces(g: GroupExpr, h: GroupExpr) -> Verdict:
    """Decide reducibility of the product ``g`` into the product ``h``.

    Builds the bipartite graph with an edge (i, j) whenever factor i of
    ``g`` reduces to factor j of ``h`` and looks for a matching saturating
    ``g``'s side.  Success returns the injective assignment with per-edge
    witnesses; failure returns a Hall violator.
    """
    m, n = len(g.factors), len(h.factors)
    if m == 0:
        return Verdict(True, certificate=())
    if n == 0:
        return Verdict(False, violator=HallViolator(K=tuple(range(1, m + 1)), NK=()))
    adjacency = [
        [j for j in range(n) if atom_reduces(g.factors[i], h.factors[j])]
        for i in range(m)
    ]
    matching, violator = saturating_matching_or_violator(m, n, adjacency)
    if matching is not None:
        witnesses = tuple(
            _witness(i, j, g.factors[i], h.factors[j]) for i, j in enumerate(matching)
        )
        return Verdict(True, certificate=witnesses)
    lefts, rights = violator
    return Verdict(
        False,
        violator=HallViolator(
            K=tuple(i + 1 for i in lefts),
            NK=tuple(j + 1 for j in rights),
        ),
    )


def rt_closed_form(c0: int, e0: int, c1: int, e1: int) -> bool:
    """Closed form for products of reals and circles: R^c0 x T^e0 reduces to
    R^c1 x T^e1 iff e0 <= e1 and c0 + e0 <= c1 + e1.

    >>> rt_closed_form(2, 1, 0, 3)
    True
    >>> rt_closed_form(1, 1, 2, 0)
    False
    """
    for value in (c0, e0, c1, e1):
        if value < 0:
            raise DomainError(f"factor counts must be natural numbers, got {value}")
    return e0 <= e1 and c0 + e0 <= c1 + e1


def compare(g: GroupExpr, h: GroupExpr) -> ComparisonOutcome:
    """Both directions at once; LEFT_STRICT means ``g`` sits strictly below."""
    forward = reduces(g, h).reducible
    backward = reduces(h, g).reducible
    if forward and backward:
        return ComparisonOutcome.EQUIVALENT
    if forward:
        return ComparisonOutcome.LEFT_STRICT
    if backward:
        return ComparisonOutcome.RIGHT_STRICT
    return ComparisonOutcome.INCOMPARABLE


def verify_certificate(g: GroupExpr, h: GroupExpr, v: Verdict) -> bool:
    """Independent check of a claimed verdict for ``reduces(g, h)``.

    Positive: the edge list must cover every source factor exactly once, hit
    distinct in-range target factors, and every edge must revalidate against
    the rule table with its reason and recomputed surplus table.  Negative:
    N(K) must be exactly the rule-table neighborhood of K, with |N(K)| < |K|.
    Malformed indices make the certificate invalid rather than raising.
    """
    m, n = len(g.factors), len(h.factors)
    if v.reducible:
        if v.certificate is None or v.violator is not None:
            return False
        covered = sorted(w.left_index for w in v.certificate)
        if covered != list(range(1, m + 1)):
            return False
        rights = [w.right_index for w in v.certificate]
        if len(set(rights)) != len(rights):
            return False
        for w in v.certificate:
            if not 1 <= w.right_index <= n:
                return False
            a = g.factors[w.left_index - 1]
            b = h.factors[w.right_index - 1]
            if not atom_reduces(a, b):
                return False
            if w.reason is not edge_reason(a, b):
                return False
            if w.reason is EdgeReason.RULE_SOL_SOL:
                if w.deficit != finite_surplus_table(b.profile, a.profile):
                    return False
            elif w.deficit:
                return False
        return True
    if v.violator is None or v.certificate is not None:
        return False
    K = v.violator.K
    if not K or len(set(K)) != len(K):
        return False
    if any(not 1 <= i <= m for i in K):
        return False
    neighborhood = set()
    for i in K:
        for j in range(1, n + 1):
            if atom_reduces(g.factors[i - 1], h.factors[j - 1]):
                neighborhood.add(j)
    if tuple(sorted(neighborhood)) != tuple(sorted(v.violator.NK)):
        return False
    return len(v.violator.NK) < len(K)
