"""Exhaustive finite-group oracles: tables, families, closures."""

import itertools

import pytest

from zariski.errors import CarrierMismatch, TooLarge, UnknownGroup
from zariski.finite import (FiniteGroupTable, SetFamily, TableGroup, builtin,
                            family_subset, group_family, semigroup_family,
                            topology_close)


def test_builtin_examples():
    z2 = builtin("Z2")
    assert z2.order == 2 and z2.mul[1][1] == 0
    s3 = builtin("S3")
    assert s3.order == 6 and not s3.is_abelian()
    assert builtin("S4").order == 24
    assert builtin("z6").is_abelian()
    with pytest.raises(UnknownGroup):
        builtin("Q8")


def test_table_validation():
    with pytest.raises(ValueError):
        FiniteGroupTable([[0, 1], [1, 1]])  # 1 has no inverse
    with pytest.raises(ValueError):
        FiniteGroupTable([[1, 0], [1, 0]])  # no identity
    with pytest.raises(ValueError):
        FiniteGroupTable([[0, 1], [1, 2]])  # out of range


def test_table_group_interface():
    s3 = builtin("S3")
    G = TableGroup(s3)
    for a in range(s3.order):
        assert G.mul(a, G.inv(a)) == G.one()


def masks_by_size(fam):
    return sorted(bin(m).count("1") for m in fam.masks)


def test_semigroup_family_degree_zero():
    for name in ("Z2", "S3"):
        table = builtin(name)
        fam = semigroup_family(table, 0)
        full = (1 << table.order) - 1
        assert fam.masks == {0, full}


def test_semigroup_family_degree_one_z2():
    fam = semigroup_family(builtin("Z2"), 1)
    # {x : a + x != b} is the complement of one point
    assert any(bin(m).count("1") == 1 for m in fam.masks)


def test_group_family_degree_examples():
    table = builtin("Z3")
    assert group_family(table, 0).masks == {0, (1 << 3) - 1}
    fam = group_family(table, 1)
    # complements of singletons appear: {x : a * x != 1}
    assert sorted(bin(m).count("1") for m in fam.masks) == [0, 2, 2, 2, 3]


def naive_semigroup_family(table, d):
    """Fully naive double enumeration over all word pairs (oracle for the
    translation-reduced enumeration used by the module)."""
    n = table.order
    words = []
    for degree in range(d + 1):
        words.extend(itertools.product(range(n), repeat=degree + 1))
    def value(word, x):
        acc = word[0]
        for c in word[1:]:
            acc = table.mul[table.mul[acc][x]][c]
        return acc
    masks = set()
    for f in words:
        for g in words:
            mask = 0
            for x in range(n):
                if value(f, x) != value(g, x):
                    mask |= 1 << x
            masks.add(mask)
    return SetFamily(n, frozenset(masks))


@pytest.mark.parametrize("name,d", [("Z2", 1), ("Z3", 1), ("S3", 1), ("Z4", 1)])
def test_semigroup_family_matches_naive_enumeration(name, d):
    table = builtin(name)
    assert semigroup_family(table, d).masks == \
        naive_semigroup_family(table, d).masks


def naive_group_family(table, d):
    n = table.order
    masks = set()
    for degree in range(d + 1):
        for coeffs in itertools.product(range(n), repeat=degree + 1):
            for signs in itertools.product((1, -1), repeat=degree):
                mask = 0
                for x in range(n):
                    acc = coeffs[0]
                    for s, c in zip(signs, coeffs[1:]):
                        occ = x if s > 0 else table.inv[x]
                        acc = table.mul[table.mul[acc][occ]][c]
                    if acc != table.id:
                        mask |= 1 << x
                masks.add(mask)
    return SetFamily(n, frozenset(masks))


@pytest.mark.parametrize("name,d", [("Z3", 1), ("S3", 1), ("Z4", 2)])
def test_group_family_matches_naive_enumeration(name, d):
    table = builtin(name)
    assert group_family(table, d).masks == naive_group_family(table, d).masks


def test_family_monotone_in_degree():
    for name in ("Z2", "Z5", "S3"):
        table = builtin(name)
        for d in (0, 1):
            assert family_subset(semigroup_family(table, d),
                                 semigroup_family(table, d + 1))
            assert family_subset(group_family(table, d),
                                 group_family(table, d + 1))


def test_enumeration_guards():
    s4 = builtin("S4")
    with pytest.raises(TooLarge):
        semigroup_family(s4, 3)
    with pytest.raises(TooLarge):
        group_family(s4, 3)


def test_topology_close():
    trivial = SetFamily(4, frozenset({0, 0b1111}))
    assert topology_close(trivial).masks == {0, 0b1111}
    # complements of singletons on 6 points generate the discrete topology
    n = 6
    co_singletons = frozenset(((1 << n) - 1) ^ (1 << i) for i in range(n))
    closed = topology_close(SetFamily(n, co_singletons))
    assert len(closed) == 2 ** n
    again = topology_close(closed)
    assert again.masks == closed.masks  # idempotent


def test_family_subset():
    s3 = builtin("S3")
    sem = topology_close(semigroup_family(s3, 2))
    grp = topology_close(group_family(s3, 2))
    assert family_subset(sem, sem)
    assert family_subset(sem, grp)
    z6 = builtin("Z6")
    d1 = topology_close(group_family(z6, 1))
    d2 = topology_close(group_family(z6, 2))
    assert family_subset(d1, d2)
    z4 = topology_close(group_family(builtin("Z4"), 1))
    with pytest.raises(CarrierMismatch):
        family_subset(sem, z4)


def test_commutative_identity_small():
    for name in ("Z2", "Z3", "Z4"):
        table = builtin(name)
        for d in (0, 1, 2):
            sem = topology_close(semigroup_family(table, d))
            grp = topology_close(group_family(table, d))
            assert sem.masks == grp.masks


def test_set_family_sets_view():
    fam = SetFamily(3, frozenset({0b101, 0}))
    assert fam.sets() == ((), (0, 2))
    assert 0b101 in fam and 0b010 not in fam
