"""Composite knots as orbits of a wreath-product action.

For a factor list P with blocks of sizes n_1 .. n_l, a flavor vector assigns a
Gamma element to every factor slot.  The group Gamma(P) acts block by block:
slot j of block i becomes ``gammas[i][j] * x[i][perm[i](j)]``.  Restricting the
gammas of block i to the symmetry group of its prime gives Sigma(P); its
orbits are exactly the distinct composite knots built from P.

Flavor vectors are tuples of tuples of GammaElement.  Permutations are
0-based tuples, ``perm[j]`` being the image of slot ``j``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations_with_replacement, permutations, product
from math import comb, factorial, prod
from typing import Optional

from .gamma import GAMMA, IDENTITY, SymmetrySubgroup, coset_rep, cosets
from .primes import FactorList

BRUTEFORCE_MAX_FACTORS = 8


def _check_shape(P: FactorList, blocks):
    sizes = tuple(len(b) for b in blocks)
    if sizes != P.multiplicities:
        raise ValueError(f'block sizes {sizes} do not match factor list {P.multiplicities}')


@dataclass(frozen=True)
class WreathElement:
    """An element of Gamma(P): per block, a tuple of gammas and a permutation."""

    blocks: tuple

    def __post_init__(self):
        blocks = tuple((tuple(g), tuple(p)) for g, p in self.blocks)
        object.__setattr__(self, 'blocks', blocks)
        for gammas, perm in blocks:
            if len(gammas) != len(perm) or sorted(perm) != list(range(len(perm))):
                raise ValueError(f'{perm} is not a permutation of {len(gammas)} slots')

    @classmethod
    def identity(cls, P: FactorList) -> WreathElement:
        return cls(tuple(((IDENTITY,) * n, tuple(range(n))) for n in P.multiplicities))

    @classmethod
    def diagonal(cls, P: FactorList, g, perms=None) -> WreathElement:
        """The same gamma in every slot, with the given (default identity) permutations."""
        if perms is None:
            perms = [tuple(range(n)) for n in P.multiplicities]
        return cls(tuple(((g,) * n, p) for n, p in zip(P.multiplicities, perms)))

    def __mul__(self, other: WreathElement) -> WreathElement:
        """Product with ``act(a * b, x) == act(a, act(b, x))``."""
        if len(self.blocks) != len(other.blocks):
            raise ValueError('block structure mismatch')
        out = []
        for (g1, p1), (g2, p2) in zip(self.blocks, other.blocks):
            if len(g1) != len(g2):
                raise ValueError('block structure mismatch')
            out.append((tuple(g1[j] * g2[p1[j]] for j in range(len(g1))),
                        tuple(p2[p1[j]] for j in range(len(g1)))))
        return WreathElement(tuple(out))

    def in_sigma(self, P: FactorList) -> bool:
        return all(g in r.symmetry for (r, _), (gammas, _) in zip(P.entries, self.blocks) for g in gammas)


def act(w: WreathElement, x):
    if len(w.blocks) != len(x):
        raise ValueError('block structure mismatch')
    out = []
    for (gammas, perm), block in zip(w.blocks, x):
        if len(gammas) != len(block):
            raise ValueError('block structure mismatch')
        out.append(tuple(g * block[p] for g, p in zip(gammas, perm)))
    return tuple(out)


def all_flavor_vectors(P: FactorList):
    """Every element of X(P), in product order."""
    for flat in product(GAMMA, repeat=P.n_factors):
        yield _unflatten(P, flat)


def _unflatten(P, flat):
    out, i = [], 0
    for n in P.multiplicities:
        out.append(tuple(flat[i:i + n]))
        i += n
    return tuple(out)


def sigma_generators(P: FactorList):
    """A generating set of Sigma(P): one slot flavor change per symmetry, plus adjacent swaps."""
    ident = WreathElement.identity(P)
    gens = []
    for i, (record, n) in enumerate(P.entries):
        for g in record.symmetry:
            if g == IDENTITY:
                continue
            for j in range(n):
                blocks = list(ident.blocks)
                gammas = list(blocks[i][0])
                gammas[j] = g
                blocks[i] = (tuple(gammas), blocks[i][1])
                gens.append(WreathElement(tuple(blocks)))
        for j in range(n - 1):
            blocks = list(ident.blocks)
            perm = list(range(n))
            perm[j], perm[j + 1] = perm[j + 1], perm[j]
            blocks[i] = (blocks[i][0], tuple(perm))
            gens.append(WreathElement(tuple(blocks)))
    return gens


def orbit_bruteforce(P: FactorList, x) -> frozenset:
    """Closure of ``{x}`` under Sigma(P) by breadth-first search."""
    if P.n_factors > BRUTEFORCE_MAX_FACTORS:
        raise ValueError(f'brute force limited to {BRUTEFORCE_MAX_FACTORS} factors, got {P.n_factors}')
    _check_shape(P, x)
    gens = sigma_generators(P)
    seen = {x}
    queue = deque([x])
    while queue:
        y = queue.popleft()
        for w in gens:
            z = act(w, y)
            if z not in seen:
                seen.add(z)
                queue.append(z)
    return frozenset(seen)


def normal_form(P: FactorList, x):
    """Canonical orbit representative: coset representatives, sorted within each block."""
    _check_shape(P, x)
    return tuple(tuple(sorted(coset_rep(r.symmetry, g) for g in block))
                 for (r, _), block in zip(P.entries, x))


def orbit_size(P: FactorList, x) -> int:
    """Number of flavor vectors in the Sigma(P)-orbit of ``x``.

    Slots move independently within their cosets, and a block can be
    rearranged in multinomially many ways.
    """
    size = 1
    for (r, n), block in zip(P.entries, normal_form(P, x)):
        arrangements = factorial(n)
        for c in set(block):
            arrangements //= factorial(block.count(c))
        size *= len(r.symmetry) ** n * arrangements
    return size


def orbit_count(P: FactorList) -> int:
    return prod(comb(r.symmetry.index + n - 1, n) for r, n in P.entries)


@dataclass(frozen=True)
class CompositeClass:
    factors: FactorList
    representative: tuple
    orbit_size: int
    symmetry: Optional[SymmetrySubgroup] = None


def orbits_all(P: FactorList, with_symmetry: bool = False) -> list:
    """One class per Sigma(P)-orbit, ordered by representative."""
    per_block = [list(combinations_with_replacement(cosets(r.symmetry), n)) for r, n in P.entries]
    classes = []
    for rep in product(*per_block):
        sym = symmetry_group(P, rep) if with_symmetry else None
        classes.append(CompositeClass(P, rep, orbit_size(P, rep), sym))
    classes.sort(key=lambda c: c.representative)
    return classes


def symmetry_group(P: FactorList, x) -> SymmetrySubgroup:
    """Symmetry group of the composite knot with flavor vector ``x``.

    A Gamma element is a symmetry exactly when applying it to every factor
    keeps the vector in its orbit.
    """
    nf = normal_form(P, x)
    members = frozenset(g for g in GAMMA
                        if normal_form(P, tuple(tuple(g * y for y in b) for b in x)) == nf)
    return SymmetrySubgroup(members)


def symmetry_group_bruteforce(P: FactorList, x) -> SymmetrySubgroup:
    """Projection of the diagonal elements that stabilize the brute-force orbit of ``x``.

    Exhausts the diagonal subgroup (one gamma, any block permutations) and
    tests each element against the orbit set directly.  Test oracle only.
    """
    orbit = orbit_bruteforce(P, x)
    perm_choices = [list(permutations(range(n))) for n in P.multiplicities]
    found = set()
    for g in GAMMA:
        for perms in product(*perm_choices):
            w = WreathElement.diagonal(P, g, perms)
            if all(act(w, y) in orbit for y in orbit):
                found.add(g)
                break
    return SymmetrySubgroup(frozenset(found))


def partition_bruteforce(P: FactorList) -> list:
    """Partition X(P) into Sigma(P)-orbits by exhaustion."""
    remaining = set(all_flavor_vectors(P))
    parts = []
    while remaining:
        orbit = orbit_bruteforce(P, min(remaining))
        parts.append(orbit)
        remaining -= orbit
    return parts
