"""Almost-inclusion on ultimately periodic sets, realized inside the
reducibility order.

A family is a pair of profiles (P, Q) with Q's relation below P's and with
infinitely many primes strictly more frequent in Q than in P (here: P has
default 0, Q default OMEGA).  Enumerating those primes as d_0 < d_1 < ...,
each subset A of the naturals gets a concrete prime sequence

    P_A = P_A' interleave (P_0' interleave base(P))

where P_0' picks every third d-prime (d_0, d_3, d_6, ...), P_A' picks
d_{1+3c} for c running over the complement of A ascending, and base(P) is
the canonical representative of P.  (When the complement of A is finite the
P_A' layer is dropped.)  The sequences of two members then differ, up to
finitely many terms, exactly in the primes d_{1+3c} for c in A minus B, so

    A almost-included in B  <=>  member A reduces to member B,

with the d-primes chosen on residue 0 and 1 mod 3 so distinct layers never
collide.  Members are kept symbolic (family + set + power): the profile of
P_A has infinitely many multiplicity-1 primes and is deliberately outside
the representable profile class.  Concrete sequences exist only as finite
prefixes for oracle cross-checks.

The n-dimensional member group is the n-th power of the member solenoid;
the power law for products makes the order on members insensitive to a
common power, so verdicts only compare members of equal power.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from math import lcm

from sympy import nextprime

from .errors import DomainError
from .supernatural import (
    OMEGA,
    SupernaturalProfile,
    canonical_terms,
    multiplicity,
    oracle_injection,
    preceq,
)

__all__ = [
    "UPSet",
    "Family",
    "MemberRef",
    "subset_star",
    "member_sequence",
    "member_reduces",
    "member_crosscheck",
    "CrosscheckReport",
    "chain_demo",
    "ChainDemo",
]


@dataclass(frozen=True)
class UPSet:
    """Ultimately periodic subset of the naturals.

    Membership of n is ``exceptional[n]`` for n below ``threshold`` and
    ``word[n % period]`` from the threshold on.  Canonical form: the word is
    reduced to its minimal period and the threshold is minimal, so two
    UPSets are structurally equal iff they are the same set.

    >>> evens = UPSet.multiples_of(2)
    >>> 4 in evens, 7 in evens
    (True, False)
    >>> UPSet.from_finite([0, 2]) == UPSet((True, False, True), 2, (True, False), threshold=3)
    False
    >>> UPSet.multiples_of(2) == UPSet((True, False, True), 2, (True, False), threshold=3)
    True
    """

    exceptional: tuple = ()
    period: int = 1
    word: tuple = (False,)
    threshold: int = 0

    def __post_init__(self):
        exceptional = tuple(bool(b) for b in self.exceptional)
        word = tuple(bool(b) for b in self.word)
        period = self.period
        threshold = self.threshold
        if not isinstance(period, int) or period < 1:
            raise DomainError(f"period must be a positive integer, got {period!r}")
        if len(word) != period:
            raise DomainError(f"word length {len(word)} does not match period {period}")
        if len(exceptional) != threshold:
            raise DomainError(
                f"exceptional bits cover {len(exceptional)} naturals but threshold is {threshold}"
            )
        for d in range(1, period + 1):
            if period % d == 0 and word == word[:d] * (period // d):
                word = word[:d]
                period = d
                break
        while threshold > 0 and exceptional[threshold - 1] == word[(threshold - 1) % period]:
            threshold -= 1
            exceptional = exceptional[:threshold]
        object.__setattr__(self, "exceptional", exceptional)
        object.__setattr__(self, "word", word)
        object.__setattr__(self, "period", period)
        object.__setattr__(self, "threshold", threshold)

    @classmethod
    def from_membership(cls, bits, period: int, word) -> "UPSet":
        bits = tuple(bits)
        return cls(bits, period, tuple(word), threshold=len(bits))

    @classmethod
    def from_finite(cls, members) -> "UPSet":
        members = set(members)
        for n in members:
            if not isinstance(n, int) or n < 0:
                raise DomainError(f"set members must be naturals, got {n!r}")
        bound = max(members) + 1 if members else 0
        return cls.from_membership((n in members for n in range(bound)), 1, (False,))

    @classmethod
    def from_cofinite(cls, excluded) -> "UPSet":
        excluded = set(excluded)
        for n in excluded:
            if not isinstance(n, int) or n < 0:
                raise DomainError(f"excluded elements must be naturals, got {n!r}")
        bound = max(excluded) + 1 if excluded else 0
        return cls.from_membership((n not in excluded for n in range(bound)), 1, (True,))

    @classmethod
    def multiples_of(cls, k: int) -> "UPSet":
        if k < 1:
            raise DomainError(f"multiples_of wants a positive modulus, got {k}")
        return cls((), k, tuple(i == 0 for i in range(k)), threshold=0)

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        if n < self.threshold:
            return self.exceptional[n]
        return self.word[n % self.period]

    @property
    def is_finite(self) -> bool:
        return not any(self.word)

    @property
    def is_cofinite(self) -> bool:
        return all(self.word)

    def members_below(self, bound: int) -> tuple:
        return tuple(n for n in range(bound) if n in self)

    def complement_members(self, count: int) -> tuple:
        """First ``count`` elements of the complement, ascending."""
        if self.is_cofinite:
            raise DomainError("complement is finite; cannot enumerate that many elements")
        out = []
        n = 0
        while len(out) < count:
            if n not in self:
                out.append(n)
            n += 1
        return tuple(out)

    def __str__(self):
        from .literals import render_upset

        return render_upset(self)


def subset_star(a: UPSet, b: UPSet) -> bool:
    """Almost inclusion: the difference a minus b is finite.

    Beyond both thresholds membership is periodic, so the difference is
    finite iff no residue class (mod the common period) lies in ``a``'s
    word but outside ``b``'s.

    >>> subset_star(UPSet.multiples_of(4), UPSet.multiples_of(2))
    True
    >>> subset_star(UPSet.multiples_of(2), UPSet.multiples_of(4))
    False
    """
    common = lcm(a.period, b.period)
    return all(
        b.word[r % b.period]
        for r in range(common)
        if a.word[r % a.period]
    )


def set_difference(a: UPSet, b: UPSet):
    """(finite?, elements): all of a minus b when finite, else the first few.

    A finite difference lives entirely below the larger threshold: from
    there on, one element in the difference would drag its whole residue
    class along.
    """
    if subset_star(a, b):
        bound = max(a.threshold, b.threshold)
        return True, tuple(n for n in range(bound) if n in a and n not in b)
    sample = []
    n = 0
    while len(sample) < 8:
        if n in a and n not in b:
            sample.append(n)
        n += 1
    return False, tuple(sample)


class Family:
    """The (P, Q) pair generating one embedded copy of the poset, together
    with the ascending enumeration of the primes strictly more frequent in
    Q than in P.

    Invariants: Q's relation reduces to P's (P preceq Q) and the d-set is
    infinite, which in this representation pins default(P) = 0 and
    default(Q) = OMEGA.  The d-enumeration is sieved on demand into an
    append-only cache guarded by a lock.
    """

    def __init__(self, p: SupernaturalProfile, q: SupernaturalProfile):
        if not isinstance(p, SupernaturalProfile) or not isinstance(q, SupernaturalProfile):
            raise DomainError("family wants two supernatural profiles")
        if p.default is OMEGA or q.default is not OMEGA:
            raise DomainError(
                "family needs infinitely many primes more frequent in q than in p: "
                "default(p) must be 0 and default(q) OMEGA"
            )
        if not preceq(p, q):
            raise DomainError("family requires p preceq q (q's relation reduces to p's)")
        self.p = p
        self.q = q
        self._d_cache: list = []
        self._d_frontier = 1  # last integer sieved
        self._lock = threading.Lock()

    def __eq__(self, other):
        return isinstance(other, Family) and self.p == other.p and self.q == other.q

    def __hash__(self):
        return hash((self.p, self.q))

    def __repr__(self):
        return f"Family(p={self.p}, q={self.q})"

    @classmethod
    def default(cls) -> "Family":
        return cls(SupernaturalProfile({2: OMEGA}), SupernaturalProfile.all_omega())

    def _ensure_d_terms(self, k: int):
        # the cache is append-only: reads below len() never see it change
        if len(self._d_cache) >= k:
            return
        with self._lock:
            while len(self._d_cache) < k:
                gamma = int(nextprime(self._d_frontier))
                self._d_frontier = gamma
                if multiplicity(self.p, gamma) < multiplicity(self.q, gamma):
                    self._d_cache.append(gamma)

    def d_terms(self, k: int) -> tuple:
        """First ``k`` primes gamma with multiplicity(p, gamma) < (q, gamma)."""
        if k < 0:
            raise DomainError(f"count must be nonnegative, got {k}")
        self._ensure_d_terms(k)
        return tuple(self._d_cache[:k])

    def d_term(self, i: int) -> int:
        self._ensure_d_terms(i + 1)
        return self._d_cache[i]


@dataclass(frozen=True)
class MemberRef:
    """One member of the embedding: a set A, handled symbolically, and the
    power giving the dimension of the member group."""

    family: Family
    a: UPSet
    power: int = 1

    def __post_init__(self):
        if not isinstance(self.power, int) or self.power < 1:
            raise DomainError(f"member power must be >= 1, got {self.power!r}")


def _inner_term(family: Family, k: int, base_terms) -> int:
    # (P_0' interleave base)(k)
    i, r = divmod(k, 2)
    if r == 0:
        return family.d_term(3 * i)
    return base_terms[i]


def member_sequence(m: MemberRef, n: int) -> tuple:
    """First ``n`` terms of the member's concrete prime sequence.

    >>> fam = Family.default()
    >>> member_sequence(MemberRef(fam, UPSet.multiples_of(2)), 4)
    (13, 3, 37, 2)
    """
    if n < 0:
        raise DomainError(f"term count must be nonnegative, got {n}")
    if n == 0:
        return ()
    base_len = (n + 3) // 2  # enough base terms for either layering
    base = []
    for term in canonical_terms(m.family.p):
        base.append(term)
        if len(base) == base_len:
            break
    if m.a.is_cofinite:
        return tuple(_inner_term(m.family, k, base) for k in range(n))
    complement = m.a.complement_members((n + 1) // 2)
    out = []
    for k in range(n):
        i, r = divmod(k, 2)
        if r == 0:
            out.append(m.family.d_term(1 + 3 * complement[i]))
        else:
            out.append(_inner_term(m.family, i, base))
    return tuple(out)


def _check_same_family(m_a: MemberRef, m_b: MemberRef):
    if m_a.family != m_b.family:
        raise DomainError("members belong to different families; verdicts compare within one embedding")
    if m_a.power != m_b.power:
        raise DomainError("members have different powers; verdicts compare equal dimensions")


def member_reduces(m_a: MemberRef, m_b: MemberRef) -> bool:
    """Does member A's relation reduce to member B's?  Exactly almost
    inclusion of A in B."""
    _check_same_family(m_a, m_b)
    return subset_star(m_a.a, m_b.a)


@dataclass(frozen=True)
class CrosscheckReport:
    """Finite-scale validation of a symbolic member verdict.

    ``surplus_primes`` are the primes d_{1+3c}, c in A minus B: the target
    member's sequence carries each of them once more than the source's, so
    the reduction exists iff that set is finite.  The oracle half replays
    the definition: windows of the target's sequence must eventually embed
    into prefixes of the source's sequence once a finite drop is allowed.
    """

    verdict: bool
    surplus_finite: bool
    surplus_primes: tuple
    drops_tested: tuple
    successful_drop: int | None
    window: int
    consistent: bool
    notes: tuple


def member_crosscheck(m_a: MemberRef, m_b: MemberRef, window: int = 100) -> CrosscheckReport:
    """Cross-check ``member_reduces(m_a, m_b)`` two independent ways.

    Symbolic: enumerate A minus B and map it through the d-enumeration.
    Oracle: for sampled drop points, test multiset embedding of the target
    sequence's window into a bounded prefix of the source sequence.
    Inconsistencies are recorded in the report, never raised.
    """
    _check_same_family(m_a, m_b)
    if window < 1:
        raise DomainError(f"window must be positive, got {window}")
    verdict = member_reduces(m_a, m_b)
    finite, elements = set_difference(m_a.a, m_b.a)
    surplus = tuple(m_a.family.d_term(1 + 3 * c) for c in elements)

    drops = [0]
    d = 1
    while d <= window:
        drops.append(d)
        d *= 2
    successful = None
    for drop in drops:
        target_window = member_sequence(m_b, drop + window)[drop:]
        prefix = member_sequence(m_a, 4 * (drop + window) + 64)
        if oracle_injection(target_window, prefix):
            successful = drop
            break

    notes = []
    if finite != verdict:
        notes.append("symbolic surplus finiteness disagrees with the verdict")
    if (successful is not None) != verdict:
        notes.append(
            "oracle embedding "
            + ("succeeded despite a negative verdict" if successful is not None else "failed at every tested drop despite a positive verdict")
        )
    consistent = not notes
    return CrosscheckReport(
        verdict=verdict,
        surplus_finite=finite,
        surplus_primes=surplus,
        drops_tested=tuple(drops),
        successful_drop=successful,
        window=window,
        consistent=consistent,
        notes=tuple(notes),
    )


@dataclass(frozen=True)
class ChainDemo:
    """Pairwise verdict matrix over the powers-of-two chain plus the
    evens/odds antichain."""

    labels: tuple
    members: tuple
    matrix: tuple  # matrix[i][j] = member_reduces(members[i], members[j])


def chain_demo(f: Family, depth: int = 3, power: int = 1) -> ChainDemo:
    """Members A_i = multiples of 2^i for i < depth, then evens and odds.

    The chain is strictly decreasing in the order and the final pair is
    incomparable, which is the desk-scale shape of the embedded poset.
    """
    if depth < 2:
        raise DomainError(f"chain depth must be >= 2, got {depth}")
    sets = [UPSet.multiples_of(2 ** i) for i in range(depth)]
    labels = [f"mult({2 ** i})" for i in range(depth)]
    sets.append(UPSet.multiples_of(2))
    labels.append("evens")
    sets.append(UPSet((), 2, (False, True), threshold=0))
    labels.append("odds")
    members = tuple(MemberRef(f, s, power) for s in sets)
    matrix = tuple(
        tuple(member_reduces(mi, mj) for mj in members) for mi in members
    )
    return ChainDemo(tuple(labels), members, matrix)
