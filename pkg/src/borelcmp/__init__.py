"""Symbolic decision engine for the Borel-reducibility order on finite
products of the real line, the circle group, and solenoids.

Groups are handled as expressions, never as sets of points: reducibility
between the induced sequence-equivalences is decided by exact rules on the
atoms (solenoids compare through their prime-multiplicity profiles) glued
together with a bipartite-matching argument, and every verdict carries a
machine-checkable certificate.  A Pontryagin-dual route re-derives compact
verdicts independently, and a poset laboratory realizes the almost-inclusion
order on ultimately periodic sets inside the reducibility order.
"""

from .errors import BorelcmpError, DomainError, ParseError
from .supernatural import (
    OMEGA,
    IntSeqSpec,
    SeqSpec,
    SupernaturalProfile,
    canonical_sequence,
    deficit,
    factor_sequence,
    interleave,
    multiplicity,
    oracle_injection,
    preceq,
    profile_add,
    profile_from_sequence,
    profiles_bireducible,
)
from .groups import (
    REAL,
    TORUS,
    TRIVIAL_GROUP,
    Atom,
    AtomKind,
    GroupExpr,
    dimension,
    group,
    is_compact,
    normalize_group,
    solenoid,
)
from .reducibility import (
    ComparisonOutcome,
    EdgeReason,
    EdgeWitness,
    HallViolator,
    Verdict,
    atom_reduces,
    compare,
    reduces,
    rt_closed_form,
    verify_certificate,
)
from .duality import (
    INTEGERS,
    DualComponent,
    DualExpr,
    RationalType,
    dual,
    dual_reduces,
    hom_nonzero_exists,
    rank,
)
from .posetlab import (
    Family,
    MemberRef,
    UPSet,
    chain_demo,
    member_crosscheck,
    member_reduces,
    member_sequence,
    subset_star,
)
from .literals import (
    parse_group,
    parse_profile,
    parse_sequence,
    parse_upset,
    render_dual,
    render_group,
    render_profile,
    render_upset,
)

__version__ = "0.1.0"
