"""Brute-force ground truth on small finite groups.

The theorems this package makes executable concern infinite groups; this
module pins the definitional code paths (word evaluation, basic-set
families, topology closure) against exhaustive enumeration on groups small
enough to enumerate completely.

Families of basic sets are computed as sets of bitmasks over the carrier
{0, ..., order-1}.  The semigroup family enumerates pairs of words; since
left-multiplying both words of a pair by the same element does not change
the set where they differ, the left word's leading coefficient is fixed to
the identity (validated against the fully naive enumeration in the tests).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from zariski.errors import CarrierMismatch, TooLarge, UnknownGroup
from zariski.groups import Group

ENUMERATION_GUARD = 10 ** 6
PAIR_GUARD = 5 * 10 ** 7
CLOSURE_GUARD = 2 ** 20


class FiniteGroupTable:
    """A group given by its Cayley table; the axioms are checked eagerly."""

    def __init__(self, mul, names=None):
        self.mul = tuple(tuple(row) for row in mul)
        self.order = len(self.mul)
        if any(len(row) != self.order for row in self.mul):
            raise ValueError("multiplication table must be square")
        if any(not 0 <= v < self.order for row in self.mul for v in row):
            raise ValueError("table entries out of range")
        self.id = self._find_identity()
        self.inv = self._find_inverses()
        self._check_associative()
        self.names = tuple(names) if names is not None else None

    def _find_identity(self) -> int:
        for e in range(self.order):
            if all(self.mul[e][a] == a and self.mul[a][e] == a
                   for a in range(self.order)):
                return e
        raise ValueError("no identity element")

    def _find_inverses(self) -> tuple:
        inv = []
        for a in range(self.order):
            partners = [b for b in range(self.order)
                        if self.mul[a][b] == self.id and self.mul[b][a] == self.id]
            if len(partners) != 1:
                raise ValueError(f"element {a} has no unique inverse")
            inv.append(partners[0])
        return tuple(inv)

    def _check_associative(self):
        m = self.mul
        n = self.order
        for a in range(n):
            for b in range(n):
                ab = m[a][b]
                for c in range(n):
                    if m[ab][c] != m[a][m[b][c]]:
                        raise ValueError("multiplication is not associative")

    def is_abelian(self) -> bool:
        return all(self.mul[a][b] == self.mul[b][a]
                   for a in range(self.order) for b in range(self.order))

    def name_of(self, a: int) -> str:
        return self.names[a] if self.names else str(a)


class TableGroup(Group):
    """Group interface over table indices, for the generic word evaluators."""

    def __init__(self, table: FiniteGroupTable):
        self.table = table

    def one(self) -> int:
        return self.table.id

    def mul(self, a: int, b: int) -> int:
        return self.table.mul[a][b]

    def inv(self, a: int) -> int:
        return self.table.inv[a]


def _cyclic(n: int) -> FiniteGroupTable:
    mul = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroupTable(mul, names=[str(i) for i in range(n)])


def _symmetric(k: int) -> FiniteGroupTable:
    perms = list(itertools.permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    # left-to-right composition, consistent with the rest of the package
    mul = [[index[tuple(b[a[x]] for x in range(k))] for b in perms]
           for a in perms]
    names = ["".join(map(str, p)) for p in perms]
    return FiniteGroupTable(mul, names=names)


_BUILTINS = {
    "Z2": lambda: _cyclic(2),
    "Z3": lambda: _cyclic(3),
    "Z4": lambda: _cyclic(4),
    "Z5": lambda: _cyclic(5),
    "Z6": lambda: _cyclic(6),
    "S3": lambda: _symmetric(3),
    "S4": lambda: _symmetric(4),
}


def builtin(name: str) -> FiniteGroupTable:
    key = name.upper()
    if key not in _BUILTINS:
        raise UnknownGroup(f"{name!r}; available: {sorted(_BUILTINS)}")
    return _BUILTINS[key]()


@dataclass(frozen=True)
class SetFamily:
    """A deduplicated family of subsets of {0, ..., order-1}, each stored
    as a bitmask."""

    order: int
    masks: frozenset

    def sets(self) -> tuple:
        out = []
        for mask in sorted(self.masks):
            out.append(tuple(i for i in range(self.order) if mask >> i & 1))
        return tuple(out)

    def __len__(self) -> int:
        return len(self.masks)

    def __contains__(self, mask: int) -> bool:
        return mask in self.masks


def _np_table(table: FiniteGroupTable) -> np.ndarray:
    return np.array(table.mul, dtype=np.int64)


def _semigroup_vectors(M: np.ndarray, d: int, identity: int,
                       fix_first: bool) -> np.ndarray:
    """Value vectors of all semigroup words of degree <= d; one row per
    word.  With fix_first, the leading coefficient is the identity."""
    n = M.shape[0]
    xs = np.arange(n)
    if fix_first:
        level = np.full((1, n), identity, dtype=np.int64)
    else:
        level = np.broadcast_to(np.arange(n)[:, None], (n, n)).copy()
    out = [level]
    for _ in range(d):
        vx = M[level, xs[None, :]]
        level = np.concatenate([M[vx, a] for a in range(n)], axis=0)
        out.append(level)
    return np.concatenate(out, axis=0)


def _masks_of(neq: np.ndarray) -> np.ndarray:
    pow2 = (1 << np.arange(neq.shape[-1], dtype=np.int64))
    return (neq * pow2).sum(axis=-1)


def semigroup_family(table: FiniteGroupTable, d: int) -> SetFamily:
    """All sets {x : f(x) != g(x)} over pairs of semigroup words of degree
    at most d."""
    if table.order ** (d + 1) > ENUMERATION_GUARD:
        raise TooLarge(f"order {table.order} at degree {d}")
    M = _np_table(table)
    F = _semigroup_vectors(M, d, table.id, fix_first=True)
    G = _semigroup_vectors(M, d, table.id, fix_first=False)
    if F.shape[0] * G.shape[0] > PAIR_GUARD:
        raise TooLarge(f"{F.shape[0]} x {G.shape[0]} word pairs")
    parts = []
    for i in range(F.shape[0]):
        parts.append(_masks_of(F[i][None, :] != G))
    masks = np.unique(np.concatenate(parts))
    return SetFamily(table.order, frozenset(int(v) for v in masks))


def group_family(table: FiniteGroupTable, d: int) -> SetFamily:
    """All sets {x : w(x) != 1} over group words of degree at most d."""
    if table.order ** (d + 1) * 2 ** d > ENUMERATION_GUARD:
        raise TooLarge(f"order {table.order} at degree {d} with signs")
    M = _np_table(table)
    n = table.order
    xs = np.arange(n)
    xs_inv = np.array(table.inv, dtype=np.int64)
    level = np.broadcast_to(np.arange(n)[:, None], (n, n)).copy()
    levels = [level]
    for _ in range(d):
        nxt = []
        for occ in (xs, xs_inv):
            vx = M[level, occ[None, :]]
            nxt.extend(M[vx, a] for a in range(n))
        level = np.concatenate(nxt, axis=0)
        levels.append(level)
    values = np.concatenate(levels, axis=0)
    masks = np.unique(_masks_of(values != table.id))
    return SetFamily(table.order, frozenset(int(v) for v in masks))


def topology_close(fam: SetFamily) -> SetFamily:
    """The topology generated by the family, as an explicit set family:
    close under finite intersections, then under arbitrary unions."""
    if fam.order > 24:
        raise TooLarge(f"carrier of size {fam.order}")
    full = (1 << fam.order) - 1
    basis = set(fam.masks)
    basis.add(full)
    basis = _close_binary(basis, lambda a, b: a & b)
    basis.add(0)
    opens = _close_binary(basis, lambda a, b: a | b)
    return SetFamily(fam.order, frozenset(opens))


def _close_binary(sets: set, op) -> set:
    closed = set(sets)
    frontier = set(sets)
    while frontier:
        new = set()
        for a in frontier:
            for b in closed:
                c = op(a, b)
                if c not in closed and c not in new:
                    new.add(c)
        closed |= new
        if len(closed) > CLOSURE_GUARD:
            raise TooLarge("closure exceeds the size guard")
        frontier = new
    return closed


def family_subset(F1: SetFamily, F2: SetFamily) -> bool:
    if F1.order != F2.order:
        raise CarrierMismatch(f"{F1.order} vs {F2.order}")
    return F1.masks <= F2.masks
