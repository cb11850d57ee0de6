"""Text forms: parsing and rendering of group, profile, sequence, and
ultimately-periodic-set literals.

Grammar (whitespace insignificant, case sensitive):

    group    := term (('x' | '*') term)*
    term     := atom ('^' nat)?
    atom     := 'R' | 'T' | '1' | 'Sol' profile | 'S' seq | '(' group ')'
    profile  := '{' entries? (';' 'default' '=' mult)? '}'
              | '{' 'default' '=' mult '}'
    entries  := nat ':' mult (',' nat ':' mult)*
    mult     := nat | 'w'
    seq      := '[' (nat (',' nat)*)? '|' nat (',' nat)* ']'
    upset    := 'fin' '{' nats? '}'
              | 'cofin' '{' nats? '}'
              | 'ups' '{' ('except' '=' nats? ';')? 'from' '=' nat ';'
                          'period' '=' nat ';' 'word' '=' bits '}'

In ``ups{...}`` the ``except`` list enumerates the members below ``from``;
``word`` gives one membership bit per residue class mod ``period``, applied
from ``from`` on.  ``fin{...}`` lists the members of a finite set and
``cofin{...}`` the non-members of a cofinite one.

Profile literals must describe an infinite prime multiset (a multiplicity
``w`` somewhere or default ``w``); sequence literals may contain composite
entries, which are factored during group normalization.
"""

from __future__ import annotations

from dataclasses import dataclass

from sympy import isprime

from .errors import DomainError, ParseError
from .groups import (
    REAL,
    TORUS,
    Atom,
    AtomKind,
    GroupExpr,
    RawAtom,
    RawNode,
    RawPower,
    RawProduct,
    RawSolenoidSeq,
    RawTrivial,
    normalize_group,
)
from .posetlab import UPSet
from .supernatural import OMEGA, IntSeqSpec, Mult, SupernaturalProfile
from .duality import DualComponentKind, DualExpr

__all__ = [
    "parse_group",
    "parse_group_raw",
    "parse_profile",
    "parse_sequence",
    "parse_upset",
    "render_mult",
    "render_profile",
    "render_group",
    "render_dual",
    "render_upset",
]

_KEYWORDS = (
    "default",
    "except",
    "period",
    "cofin",
    "word",
    "from",
    "Sol",
    "ups",
    "fin",
    "R",
    "T",
    "S",
    "w",
    "x",
)

_PUNCT = set("{}[]():,;=|^*")


@dataclass(frozen=True)
class _Token:
    kind: str  # 'num', 'kw', 'punct', 'end'
    text: str
    pos: int


def _tokenize(text: str) -> list:
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("num", text[i:j], i))
            i = j
            continue
        if ch in _PUNCT:
            tokens.append(_Token("punct", ch, i))
            i += 1
            continue
        for kw in _KEYWORDS:
            if text.startswith(kw, i):
                tokens.append(_Token("kw", kw, i))
                i += len(kw)
                break
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        token = self.tokens[self.index]
        if token.kind != "end":
            self.index += 1
        return token

    def at(self, text: str) -> bool:
        return self.peek().text == text and self.peek().kind != "num"

    def take(self, text: str) -> bool:
        if self.at(text):
            self.advance()
            return True
        return False

    def expect(self, text: str) -> _Token:
        token = self.peek()
        if token.text != text or token.kind == "num":
            raise ParseError(f"expected {text!r} but found {self._describe(token)}", token.pos)
        return self.advance()

    def expect_nat(self) -> int:
        token = self.peek()
        if token.kind != "num":
            raise ParseError(f"expected a number but found {self._describe(token)}", token.pos)
        self.advance()
        return int(token.text)

    def expect_end(self):
        token = self.peek()
        if token.kind != "end":
            raise ParseError(f"unexpected trailing {self._describe(token)}", token.pos)

    @staticmethod
    def _describe(token: _Token) -> str:
        return "end of input" if token.kind == "end" else repr(token.text)


# -- multiplicities and profiles ---------------------------------------------

def _parse_mult(p: _Parser) -> Mult:
    if p.take("w"):
        return OMEGA
    return p.expect_nat()


def _parse_profile(p: _Parser) -> SupernaturalProfile:
    open_token = p.expect("{")
    entries = {}
    default: Mult = 0
    saw_default = False
    if p.take("default"):
        p.expect("=")
        default = _parse_mult(p)
        saw_default = True
    elif not p.at("}"):
        while True:
            token = p.peek()
            gamma = p.expect_nat()
            if not isprime(gamma):
                raise ParseError(f"profile key {gamma} is not prime", token.pos)
            if gamma in entries:
                raise ParseError(f"duplicate profile key {gamma}", token.pos)
            p.expect(":")
            entries[gamma] = _parse_mult(p)
            if not p.take(","):
                break
        if p.take(";"):
            p.expect("default")
            p.expect("=")
            default = _parse_mult(p)
            saw_default = True
    if saw_default and default is not OMEGA and default != 0:
        raise ParseError("profile default must be 0 or w", open_token.pos)
    profile = SupernaturalProfile(entries, default)
    if not profile.has_infinite_total:
        raise ParseError(
            f"profile {profile} has finite total multiplicity; no infinite prime "
            "sequence realizes it (some multiplicity must be w, or the default)",
            open_token.pos,
        )
    p.expect("}")
    return profile


def parse_profile(text: str) -> SupernaturalProfile:
    """Parse ``{2:6, 3:w}`` / ``{2:6, 3:w; default=0}`` / ``{default=w}``."""
    p = _Parser(text)
    profile = _parse_profile(p)
    p.expect_end()
    return profile


# -- integer sequences --------------------------------------------------------

def _parse_sequence(p: _Parser) -> IntSeqSpec:
    open_token = p.expect("[")
    prefix = []
    tail = []
    if not p.at("|"):
        while True:
            prefix.append(p.expect_nat())
            if not p.take(","):
                break
    p.expect("|")
    while True:
        tail.append(p.expect_nat())
        if not p.take(","):
            break
    p.expect("]")
    try:
        return IntSeqSpec(tuple(prefix), tuple(tail))
    except DomainError as exc:
        raise ParseError(str(exc), open_token.pos) from exc


def parse_sequence(text: str) -> IntSeqSpec:
    """Parse ``[4,6,8 | 9]``: prefix before the bar, periodic tail after."""
    p = _Parser(text)
    seq = _parse_sequence(p)
    p.expect_end()
    return seq


# -- groups -------------------------------------------------------------------

def _parse_atom(p: _Parser) -> RawNode:
    token = p.peek()
    if p.take("R"):
        return RawAtom(REAL)
    if p.take("T"):
        return RawAtom(TORUS)
    if p.take("Sol"):
        profile = _parse_profile(p)
        return RawAtom(Atom(AtomKind.SOLENOID, profile))
    if p.take("S"):
        return RawSolenoidSeq(_parse_sequence(p))
    if p.take("("):
        inner = _parse_group(p)
        p.expect(")")
        return inner
    if token.kind == "num" and token.text == "1":
        p.advance()
        return RawTrivial()
    raise ParseError(f"expected a group atom but found {p._describe(token)}", token.pos)


def _parse_term(p: _Parser) -> RawNode:
    atom = _parse_atom(p)
    if p.take("^"):
        return RawPower(atom, p.expect_nat())
    return atom


def _parse_group(p: _Parser) -> RawNode:
    parts = [_parse_term(p)]
    while p.take("x") or p.take("*"):
        parts.append(_parse_term(p))
    return RawProduct(tuple(parts)) if len(parts) > 1 else parts[0]


def parse_group_raw(text: str) -> RawNode:
    p = _Parser(text)
    node = _parse_group(p)
    p.expect_end()
    return node


def parse_group(text: str) -> GroupExpr:
    """Parse and normalize a group expression.

    >>> str(parse_group("R^2 x T"))
    'R^2 x T'
    >>> str(parse_group("S[4,6,8|9]"))
    'Sol{2:6, 3:w}'
    """
    return normalize_group(parse_group_raw(text))


# -- ultimately periodic sets -------------------------------------------------

def _parse_nat_list(p: _Parser, closers: tuple) -> list:
    values = []
    if p.peek().kind == "num":
        while True:
            values.append(p.expect_nat())
            if not p.take(","):
                break
    token = p.peek()
    if token.text not in closers:
        raise ParseError(f"expected a number but found {p._describe(token)}", token.pos)
    return values


def parse_upset(text: str) -> UPSet:
    """Parse ``fin{1,3}``, ``cofin{0,2}``, or the general
    ``ups{except=0,3; from=8; period=4; word=0110}`` form."""
    p = _Parser(text)
    if p.take("fin"):
        p.expect("{")
        members = _parse_nat_list(p, ("}",))
        p.expect("}")
        p.expect_end()
        return UPSet.from_finite(members)
    if p.take("cofin"):
        p.expect("{")
        excluded = _parse_nat_list(p, ("}",))
        p.expect("}")
        p.expect_end()
        return UPSet.from_cofinite(excluded)
    p.expect("ups")
    p.expect("{")
    members = []
    if p.take("except"):
        p.expect("=")
        members = _parse_nat_list(p, (";",))
        p.expect(";")
    p.expect("from")
    p.expect("=")
    threshold = p.expect_nat()
    p.expect(";")
    p.expect("period")
    p.expect("=")
    period = p.expect_nat()
    p.expect(";")
    p.expect("word")
    p.expect("=")
    bits_token = p.peek()
    bits_text = bits_token.text
    if bits_token.kind != "num" or set(bits_text) - {"0", "1"}:
        raise ParseError(f"word must be a string of 0/1 bits, found {p._describe(bits_token)}", bits_token.pos)
    p.advance()
    p.expect("}")
    p.expect_end()
    for member in members:
        if member >= threshold:
            raise ParseError(f"except entry {member} is not below from={threshold}")
    member_set = set(members)
    try:
        return UPSet(
            tuple(n in member_set for n in range(threshold)),
            period,
            tuple(bit == "1" for bit in bits_text),
            threshold=threshold,
        )
    except DomainError as exc:
        raise ParseError(str(exc), bits_token.pos) from exc


# -- renderers ----------------------------------------------------------------

def render_mult(m: Mult) -> str:
    return "w" if m is OMEGA else str(m)


def render_profile(p: SupernaturalProfile) -> str:
    return str(p)


def render_group(g: GroupExpr) -> str:
    """Canonical text: adjacent equal atoms grouped with powers; reparses to
    the identical expression."""
    if not g.factors:
        return "1"
    parts = []
    run_atom = None
    run_length = 0
    for atom in g.factors + (None,):
        if atom == run_atom:
            run_length += 1
            continue
        if run_atom is not None:
            parts.append(str(run_atom) + (f"^{run_length}" if run_length > 1 else ""))
        run_atom = atom
        run_length = 1
    return " x ".join(parts)


def render_dual(d: DualExpr) -> str:
    if not d.components:
        return "1"
    parts = []
    run = None
    count = 0
    for component in d.components + (None,):
        if component == run:
            count += 1
            continue
        if run is not None:
            parts.append(str(run) + (f"^{count}" if count > 1 else ""))
        run = component
        count = 1
    return " x ".join(parts)


def render_upset(s: UPSet) -> str:
    if s.is_finite:
        return "fin{" + ",".join(str(n) for n in s.members_below(s.threshold)) + "}"
    if s.is_cofinite:
        missing = [str(n) for n in range(s.threshold) if n not in s]
        return "cofin{" + ",".join(missing) + "}"
    members = s.members_below(s.threshold)
    bits = "".join("1" if b else "0" for b in s.word)
    inner = f"from={s.threshold}; period={s.period}; word={bits}"
    if members:
        inner = "except=" + ",".join(str(n) for n in members) + "; " + inner
    return "ups{" + inner + "}"
