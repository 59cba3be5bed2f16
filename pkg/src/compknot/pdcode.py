"""Signed PD-codes for single-component knot diagrams.

A code is a list of quadruples ``[a, b, c, d]``, one per crossing, read
counterclockwise from the incoming under-edge.  Incoming edges carry a
positive sign and outgoing edges a negative one, and labels run
consecutively ``1 .. 2n`` along the orientation.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from typing import Optional, Sequence

from .gamma import GammaElement


class PDParseError(ValueError):
    """Malformed PD-code text."""

    def __init__(self, message, position):
        super().__init__(f'{message} at position {position}')
        self.position = position


class PDValidationError(ValueError):
    """A structurally invalid PD-code."""

    def __init__(self, violation):
        super().__init__(str(violation))
        self.violation = violation


@dataclass(frozen=True)
class Violation:
    invariant: str
    message: str
    quad_index: Optional[int] = None

    def __str__(self):
        where = '' if self.quad_index is None else f' (quadruple {self.quad_index})'
        return f'{self.invariant}: {self.message}{where}'


@dataclass(frozen=True)
class PDCode:
    crossings: tuple

    def __post_init__(self):
        object.__setattr__(self, 'crossings', tuple(tuple(q) for q in self.crossings))

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def n_edges(self) -> int:
        return 2 * len(self.crossings)

    def __len__(self):
        return len(self.crossings)

    def __iter__(self):
        return iter(self.crossings)

    def __str__(self):
        return serialize(self)


_TOKEN = re.compile(r'-?[1-9][0-9]*|[\[\],]')
_SPACE = re.compile(r'\s*')


def _tokens(text):
    pos = _SPACE.match(text).end()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise PDParseError(f'unexpected character {text[pos]!r}', pos)
        tok = m.group()
        yield (tok if tok in '[],' else int(tok)), pos
        pos = _SPACE.match(text, m.end()).end()
    yield None, len(text)


def parse(text: str, check: bool = True) -> PDCode:
    """Parse ``[[a,b,c,d],...]`` (or ``[]``) into a PDCode.

    Raises PDParseError on bad syntax and, when ``check`` is true,
    PDValidationError when the code breaks a structural invariant.
    """
    tokens = _tokens(text)
    tok, pos = next(tokens)

    def expect(what):
        nonlocal tok, pos
        if tok != what:
            got = 'end of input' if tok is None else repr(tok)
            raise PDParseError(f'expected {what!r}, got {got}', pos)
        tok, pos = next(tokens)

    expect('[')
    quads = []
    if tok == ']':
        expect(']')
    else:
        while True:
            quad_start = pos
            expect('[')
            quad = []
            while True:
                if not isinstance(tok, int):
                    got = 'end of input' if tok is None else repr(tok)
                    raise PDParseError(f'expected integer, got {got}', pos)
                quad.append(tok)
                tok, pos = next(tokens)
                if tok == ']':
                    break
                expect(',')
            if len(quad) != 4:
                raise PDParseError(f'quadruple has {len(quad)} entries, expected 4', quad_start)
            expect(']')
            quads.append(tuple(quad))
            if tok == ']':
                expect(']')
                break
            expect(',')
    if tok is not None:
        raise PDParseError(f'trailing input {tok!r}', pos)
    code = PDCode(tuple(quads))
    if check:
        violation = validate(code)
        if violation is not None:
            raise PDValidationError(violation)
    return code


def serialize(d: PDCode) -> str:
    return '[' + ','.join('[' + ','.join(map(str, q)) + ']' for q in d.crossings) + ']'


def _successor(k, n_edges):
    return k % n_edges + 1


def validate(d: PDCode) -> Optional[Violation]:
    """Return None if ``d`` is a valid code, else the first violated invariant."""
    n_edges = d.n_edges
    for i, q in enumerate(d.crossings):
        if len(q) != 4:
            return Violation('arity', f'{len(q)} entries, expected 4', i)
        for x in q:
            if not isinstance(x, int) or isinstance(x, bool) or x == 0:
                return Violation('label', f'{x!r} is not a nonzero integer', i)
            if abs(x) > n_edges:
                return Violation('label-range', f'label {abs(x)} outside 1..{n_edges}', i)

    seen = {}
    for i, q in enumerate(d.crossings):
        for x in q:
            if x in seen:
                kind = 'positive' if x > 0 else 'negative'
                return Violation('label-pairing', f'label {abs(x)} appears twice as {kind}', i)
            seen[x] = i
    for k in range(1, n_edges + 1):
        for x in (k, -k):
            if x not in seen:
                kind = 'positive' if x > 0 else 'negative'
                return Violation('label-pairing', f'label {k} missing as {kind}')

    for i, (a, b, c, d_) in enumerate(d.crossings):
        if a < 0:
            return Violation('under-incoming', f'first entry {a} is not an incoming edge', i)
        if c != -_successor(a, n_edges):
            return Violation('under-strand', f'under-strand {a} -> {c} is not consecutive', i)
        if (b > 0) == (d_ > 0):
            return Violation('over-strand', 'over-strand needs exactly one incoming edge', i)
        m, out = (b, d_) if b > 0 else (d_, b)
        if out != -_successor(m, n_edges):
            return Violation('over-strand', f'over-strand {m} -> {out} is not consecutive', i)
    return None


def is_valid(d: PDCode) -> bool:
    return validate(d) is None


def _check(d):
    violation = validate(d)
    if violation is not None:
        raise PDValidationError(violation)


def mirror(d: PDCode) -> PDCode:
    """Switch every crossing; each quadruple restarts at the old incoming over-edge."""
    _check(d)
    return PDCode(tuple((b, c, d_, a) if b > 0 else (d_, a, b, c)
                        for a, b, c, d_ in d.crossings))


def reverse(d: PDCode) -> PDCode:
    """Reverse the orientation, relabelling ``k -> 2n + 1 - k`` and flipping signs."""
    _check(d)
    top = d.n_edges + 1

    def rho(x):
        return -x // abs(x) * (top - abs(x))

    return PDCode(tuple((rho(c), rho(d_), rho(a), rho(b)) for a, b, c, d_ in d.crossings))


def apply_gamma(g: GammaElement, d: PDCode) -> PDCode:
    _check(d)
    if g.mirrors:
        d = mirror(d)
    if g.reverses:
        d = reverse(d)
    return d


def connected_sum(d1: PDCode, d2: PDCode) -> PDCode:
    """Sum two diagrams along their edges labelled 1.

    ``d2`` keeps its labels; ``d1`` is shifted past them, except that its
    outgoing ``-1`` now runs into ``d2``.  The strand of ``d2`` ending at
    ``-1`` is redirected into the shifted first edge of ``d1``.
    """
    for d in (d1, d2):
        _check(d)
        if not d.crossings:
            raise ValueError('connected sum needs nonempty diagrams')
    shift = d2.n_edges

    def bump(x):
        if x == -1:
            return -1
        return x + shift if x > 0 else x - shift

    first = tuple(tuple(bump(x) for x in q) for q in d1.crossings)
    second = tuple(tuple(-(shift + 1) if x == -1 else x for x in q) if shift in q else q
                   for q in d2.crossings)
    return PDCode(first + second)


def connected_sum_list(ds: Sequence[PDCode]) -> PDCode:
    if not ds:
        raise ValueError('need at least one diagram')
    return reduce(connected_sum, ds)


def _relabel(d, s):
    n_edges = d.n_edges

    def shift(x):
        k = (abs(x) - 1 + s) % n_edges + 1
        return k if x > 0 else -k

    return tuple(sorted(tuple(shift(x) for x in q) for q in d.crossings))


def canonical_form(d: PDCode) -> PDCode:
    """Lexicographically least code over all cyclic shifts of the edge labels."""
    _check(d)
    if not d.crossings:
        return d
    return PDCode(min(_relabel(d, s) for s in range(d.n_edges)))


def diagram_equal(d1: PDCode, d2: PDCode) -> bool:
    if d1.n_crossings != d2.n_crossings:
        return False
    return canonical_form(d1) == canonical_form(d2)
