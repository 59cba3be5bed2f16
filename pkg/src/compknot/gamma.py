"""The intrinsic symmetry group of a knot, Z2 x Z2, and its five subgroups.

An element is a pair of signs ``(eps0, eps1)``: ``eps0 == -1`` mirrors the
knot, ``eps1 == -1`` reverses its orientation.  Composition is the
componentwise product, so every element is its own inverse.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable


@functools.total_ordering
@dataclass(frozen=True)
class GammaElement:
    eps0: int
    eps1: int

    def __post_init__(self):
        if self.eps0 not in (1, -1) or self.eps1 not in (1, -1):
            raise ValueError(f'signs must be +1 or -1, got ({self.eps0},{self.eps1})')

    def __mul__(self, other: GammaElement) -> GammaElement:
        return GammaElement(self.eps0 * other.eps0, self.eps1 * other.eps1)

    def _key(self):
        # (1,1) < (1,-1) < (-1,1) < (-1,-1)
        return (-self.eps0, -self.eps1)

    def __lt__(self, other):
        if not isinstance(other, GammaElement):
            return NotImplemented
        return self._key() < other._key()

    @property
    def mirrors(self) -> bool:
        return self.eps0 == -1

    @property
    def reverses(self) -> bool:
        return self.eps1 == -1

    def __repr__(self):
        return f'({self.eps0},{self.eps1})'


IDENTITY = GammaElement(1, 1)
REVERSE = GammaElement(1, -1)
MIRROR = GammaElement(-1, 1)
MIRROR_REVERSE = GammaElement(-1, -1)

#: All of Gamma in the fixed total order.
GAMMA = (IDENTITY, REVERSE, MIRROR, MIRROR_REVERSE)


def compose(a: GammaElement, b: GammaElement) -> GammaElement:
    return a * b


@dataclass(frozen=True)
class SymmetrySubgroup:
    """A subgroup of Gamma, stored as its member set."""

    members: frozenset

    def __post_init__(self):
        members = frozenset(self.members)
        object.__setattr__(self, 'members', members)
        if IDENTITY not in members:
            raise ValueError('subgroup must contain the identity')
        for a in members:
            for b in members:
                if a * b not in members:
                    raise ValueError(f'{sorted(members)} is not closed under composition')

    def __contains__(self, g):
        return g in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self):
        return len(self.members)

    @property
    def index(self) -> int:
        return len(GAMMA) // len(self.members)

    @property
    def name(self) -> str:
        return name_of(self)

    def __repr__(self):
        return f'SymmetrySubgroup({self.name})'


def _sub(*elements):
    return SymmetrySubgroup(frozenset((IDENTITY,) + elements))


NONE = _sub()
POS_AMPHICHIRAL = _sub(MIRROR)
INVERTIBLE = _sub(REVERSE)
NEG_AMPHICHIRAL = _sub(MIRROR_REVERSE)
FULL = _sub(REVERSE, MIRROR, MIRROR_REVERSE)

#: Symmetry-type tokens used in data files and command output, in table order.
SYMMETRY_NAMES = ('none', 'pos_amphichiral', 'invertible', 'neg_amphichiral', 'full')

_BY_NAME = dict(zip(SYMMETRY_NAMES, (NONE, POS_AMPHICHIRAL, INVERTIBLE, NEG_AMPHICHIRAL, FULL)))
_BY_MEMBERS = {sub.members: name for name, sub in _BY_NAME.items()}

ALL_SUBGROUPS = tuple(_BY_NAME.values())


def subgroup_from_name(name: str) -> SymmetrySubgroup:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise ValueError(f'unknown symmetry token {name!r}; expected one of {", ".join(SYMMETRY_NAMES)}') from None


def name_of(sub: SymmetrySubgroup) -> str:
    return _BY_MEMBERS[sub.members]


def subgroup_generated_by(elements: Iterable[GammaElement]) -> SymmetrySubgroup:
    members = {IDENTITY}
    frontier = set(elements)
    while frontier:
        members |= frontier
        frontier = {a * b for a in members for b in members} - members
    return SymmetrySubgroup(frozenset(members))


def coset_rep(sub: SymmetrySubgroup, g: GammaElement) -> GammaElement:
    """Least element of the coset ``g * sub``."""
    return min(g * h for h in sub.members)


def cosets(sub: SymmetrySubgroup) -> list:
    """One representative per coset of ``sub``, in the fixed element order."""
    return sorted({coset_rep(sub, g) for g in GAMMA})


def intersect(a: SymmetrySubgroup, b: SymmetrySubgroup) -> SymmetrySubgroup:
    return SymmetrySubgroup(a.members & b.members)
