"""Group grammar: normalization, dimension, compactness."""

from __future__ import annotations

import pytest

from borelcmp.errors import DomainError
from borelcmp.groups import (
    REAL,
    TORUS,
    TRIVIAL_GROUP,
    Atom,
    AtomKind,
    GroupExpr,
    RawAtom,
    RawPower,
    RawProduct,
    RawSolenoidSeq,
    RawTrivial,
    dimension,
    group,
    is_compact,
    normalize_group,
    solenoid,
)
from borelcmp.literals import parse_group
from borelcmp.supernatural import OMEGA, IntSeqSpec, SupernaturalProfile

from conftest import make_expr


def test_atom_invariants():
    with pytest.raises(DomainError):
        Atom(AtomKind.SOLENOID)  # missing profile
    with pytest.raises(DomainError):
        Atom(AtomKind.REAL, SupernaturalProfile({2: OMEGA}))
    with pytest.raises(DomainError):
        solenoid({2: 3})  # finite total cannot back a solenoid


def test_normalize_examples():
    assert parse_group("R^2 x T") == group(REAL, REAL, TORUS)
    assert parse_group("S[4,6,8|9]") == group(solenoid({2: 6, 3: OMEGA}))
    assert parse_group("(R x T)^2 x Sol{2:w}") == group(
        REAL, TORUS, REAL, TORUS, solenoid({2: OMEGA})
    )


def test_normalize_power_and_trivial():
    assert parse_group("R^0") == TRIVIAL_GROUP
    assert parse_group("1") == TRIVIAL_GROUP
    assert parse_group("1^5 x T") == group(TORUS)
    assert parse_group("(T^2)^3") == group(*[TORUS] * 6)


def test_normalize_rejects_negative_exponent():
    with pytest.raises(DomainError):
        normalize_group(RawPower(RawAtom(TORUS), -1))


def test_normalize_rejects_bad_sequence_entries():
    with pytest.raises(DomainError):
        normalize_group(RawSolenoidSeq(IntSeqSpec((1,), (2,))))


def test_normalize_idempotent(rng):
    for _ in range(50):
        g = make_expr(rng)
        assert normalize_group(g) == g
    raw = RawProduct((RawPower(RawProduct((RawAtom(REAL), RawTrivial())), 3), RawAtom(TORUS)))
    once = normalize_group(raw)
    assert normalize_group(once) == once == group(REAL, REAL, REAL, TORUS)


def test_dimension_examples():
    assert dimension(TRIVIAL_GROUP) == 0
    assert dimension(group(solenoid({2: OMEGA}))) == 1
    assert dimension(parse_group("R^2 x T x Sol{2:w}")) == 4


def test_dimension_additive(rng):
    for _ in range(30):
        g, h = make_expr(rng), make_expr(rng)
        assert dimension(g * h) == dimension(g) + dimension(h)


def test_is_compact_examples():
    assert is_compact(parse_group("T x Sol{2:w}"))
    assert not is_compact(parse_group("R"))
    assert is_compact(TRIVIAL_GROUP)
