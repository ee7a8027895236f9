"""Exact arithmetic in the countable abelian group that separates all
bounded Zariski topologies, and the solvers behind the separation
experiment.

The group is a direct sum over k of quotients of the free abelian group on
generators x0, x1, ...: in the k-th component every even-indexed generator
is killed to order k (no relation for k = 0), odd-indexed generators stay
free.  Normal form stores, per component, a finitely supported exponent
vector with even-index exponents reduced into [0, k).

The test sets T_m consist of the elements supported on component m alone
and equal there to a single generator coset.  On T_m, an inequation
a*x^p != 1 with p < m misses only finitely many points, while x^m = 1
carves out exactly the even-indexed generators -- an infinite, co-infinite
set.  That dichotomy is what ``solve_on_Tm`` and ``finiteness_bound``
make checkable.
"""

from __future__ import annotations

from dataclasses import dataclass


def _reduce(k: int, n: int, e: int) -> int:
    # even-index exponents live in Z_k for k >= 1; everything else in Z
    if k >= 1 and n % 2 == 0:
        return e % k
    return e


class FreeAbelianWord:
    """Finitely supported exponent vector over the free generators."""

    __slots__ = ("_exp",)

    def __init__(self, exponents=()):
        exp = dict(exponents)
        if any(n < 0 for n in exp):
            raise ValueError("generator indices must be non-negative")
        self._exp = {n: e for n, e in exp.items() if e != 0}

    def exponents(self) -> dict:
        return dict(self._exp)

    def __eq__(self, other) -> bool:
        return isinstance(other, FreeAbelianWord) and self._exp == other._exp

    def __hash__(self) -> int:
        return hash(frozenset(self._exp.items()))

    def __repr__(self) -> str:
        return f"FreeAbelianWord({self._exp!r})"


class GkElement:
    """Normal form in the k-th quotient component."""

    __slots__ = ("k", "_exp")

    def __init__(self, k: int, exponents=()):
        if k < 0:
            raise ValueError("component index must be non-negative")
        self.k = k
        exp = {}
        for n, e in dict(exponents).items():
            if n < 0:
                raise ValueError("generator indices must be non-negative")
            e = _reduce(k, n, e)
            if e != 0:
                exp[n] = e
        self._exp = exp

    @classmethod
    def _trusted(cls, k: int, exp: dict) -> "GkElement":
        g = object.__new__(cls)
        g.k = k
        g._exp = exp
        return g

    def exponents(self) -> dict:
        return dict(self._exp)

    def is_identity(self) -> bool:
        return not self._exp

    def __eq__(self, other) -> bool:
        return (isinstance(other, GkElement) and self.k == other.k
                and self._exp == other._exp)

    def __hash__(self) -> int:
        return hash((self.k, frozenset(self._exp.items())))

    def __repr__(self) -> str:
        return f"GkElement(k={self.k}, {self._exp!r})"


def gk_normalize(k: int, w: FreeAbelianWord) -> GkElement:
    """Project a free word into the k-th component's normal form."""
    return GkElement(k, w.exponents())


class GElement:
    """Element of the direct sum: finitely many non-identity components."""

    __slots__ = ("_comps",)

    def __init__(self, components=()):
        comps = {}
        for k, g in dict(components).items():
            if not isinstance(g, GkElement):
                raise TypeError("components must be GkElement values")
            if g.k != k:
                raise ValueError(f"component {k} holds a GkElement for {g.k}")
            if not g.is_identity():
                comps[k] = g
        self._comps = comps

    @classmethod
    def _trusted(cls, comps: dict) -> "GElement":
        u = object.__new__(cls)
        u._comps = comps
        return u

    def components(self) -> dict:
        return dict(self._comps)

    def component(self, k: int) -> GkElement:
        return self._comps.get(k, GkElement(k))

    def is_identity(self) -> bool:
        return not self._comps

    def __eq__(self, other) -> bool:
        return isinstance(other, GElement) and self._comps == other._comps

    def __hash__(self) -> int:
        return hash(frozenset((k, g) for k, g in self._comps.items()))

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {g._exp!r}" for k, g in sorted(self._comps.items()))
        return f"GElement({{{body}}})"


def g_identity() -> GElement:
    return GElement()


def g_element(spec) -> GElement:
    """Build from {k: {n: e}} plain dicts, normalizing everything."""
    return GElement({k: GkElement(k, exp) for k, exp in dict(spec).items()})


def g_mul(u: GElement, v: GElement) -> GElement:
    comps = dict(u._comps)
    for k, gv in v._comps.items():
        gu = comps.get(k)
        if gu is None:
            comps[k] = gv
            continue
        exp = dict(gu._exp)
        for n, e in gv._exp.items():
            s = _reduce(k, n, exp.get(n, 0) + e)
            if s == 0:
                exp.pop(n, None)
            else:
                exp[n] = s
        if exp:
            comps[k] = GkElement._trusted(k, exp)
        else:
            del comps[k]
    return GElement._trusted(comps)


def g_inv(u: GElement) -> GElement:
    comps = {}
    for k, g in u._comps.items():
        exp = {}
        for n, e in g._exp.items():
            e = _reduce(k, n, -e)
            if e != 0:
                exp[n] = e
        if exp:
            comps[k] = GkElement._trusted(k, exp)
    return GElement._trusted(comps)


def g_eq(u: GElement, v: GElement) -> bool:
    return u == v


def eval_ax_p(a: GElement, p: int, x: GElement) -> GElement:
    """The value a * x^p in normal form (p >= 0)."""
    if p < 0:
        raise ValueError("exponent must be non-negative")
    if p == 0:
        return a
    comps = dict(a._comps)
    for k, gx in x._comps.items():
        ga = comps.get(k)
        exp = dict(ga._exp) if ga is not None else {}
        for n, e in gx._exp.items():
            s = _reduce(k, n, exp.get(n, 0) + p * e)
            if s == 0:
                exp.pop(n, None)
            else:
                exp[n] = s
        if exp:
            comps[k] = GkElement._trusted(k, exp)
        else:
            comps.pop(k, None)
    return GElement._trusted(comps)


@dataclass(frozen=True)
class TmPoint:
    """The element of T_m equal to the n-th generator coset at component m
    and trivial elsewhere."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("T_m is defined for m >= 1")
        if self.n < 0:
            raise ValueError("generator index must be non-negative")

    def element(self) -> GElement:
        return GElement({self.m: GkElement(self.m, {self.n: 1})})


@dataclass(frozen=True)
class AllEven:
    """Tag: the solution set is exactly the even generator indices
    (the torsion case p = 0 mod m with trivial coefficient)."""


@dataclass(frozen=True)
class FiniteCandidates:
    """Finite superset of the solution indices: the support of the
    coefficient's component-m exponent vector."""

    indices: frozenset


def finiteness_bound(a: GElement, p: int, m: int):
    """Either AllEven, or the finite candidate set of generator indices
    that can possibly solve a * x^p = 1 on T_m."""
    if m < 1 or p < 1:
        raise ValueError("need m >= 1 and p >= 1")
    h = a.component(m)
    if p % m == 0 and h.is_identity():
        return AllEven()
    return FiniteCandidates(frozenset(h.exponents()))


def solve_on_Tm(a: GElement, p: int, m: int, bound: int) -> frozenset:
    """All generator indices n <= bound with a * x^p = 1 at x = T_m point n.

    Closed form: a must vanish off component m; writing h for its
    component-m exponent vector, n solves iff h is supported inside {n}
    and h(n) + p is zero (odd n: in Z; even n: mod m).
    """
    if m < 1 or p < 1:
        raise ValueError("need m >= 1 and p >= 1")
    if any(k != m for k in a._comps):
        return frozenset()
    h = a.component(m).exponents()
    if len(h) > 1:
        return frozenset()
    if not h:
        if p % m == 0:
            return frozenset(range(0, bound + 1, 2))
        return frozenset()
    (j, e), = h.items()
    if j > bound:
        return frozenset()
    if j % 2 == 1:
        return frozenset({j}) if e + p == 0 else frozenset()
    return frozenset({j}) if (e + p) % m == 0 else frozenset()


def brute_solve_on_Tm(a: GElement, p: int, m: int, bound: int) -> frozenset:
    """Independent enumeration oracle: evaluate a * x^p at every T_m point
    with index up to the bound and test for the identity."""
    if m < 1 or p < 1:
        raise ValueError("need m >= 1 and p >= 1")
    out = set()
    for n in range(bound + 1):
        if eval_ax_p(a, p, TmPoint(m, n).element()).is_identity():
            out.add(n)
    return frozenset(out)


def commutative_reduce(a: GElement, n: int) -> tuple:
    """Rewrite the inequation a * x^n != 1 with a non-negative exponent:
    for n < 0 the solution set equals that of a^{-1} * x^{|n|} != 1."""
    if n >= 0:
        return a, n
    return g_inv(a), -n


def g_to_json(u: GElement) -> dict:
    return {"components": [[k, sorted([n, e] for n, e in g._exp.items())]
                           for k, g in sorted(u._comps.items())]}


def g_from_json(data) -> GElement:
    return g_element({int(k): {int(n): int(e) for n, e in pairs}
                      for k, pairs in data["components"]})
