"""Witness construction certifying hyperconnectedness of the semigroup
Zariski topology on permutation groups with no algebraicity.

Given a normalized matrix pair (A, B) over such a group, the construction
extends a finite partial bijection step by step until every row evaluation
at its separator point is fully defined, then completes it to a group
element.  The completed element lies in N_{A,B}; stacking two pairs first
therefore produces a point in the intersection of two arbitrary nonempty
basic open sets.

The group enters only through a small oracle interface (extendability of
finite partial bijections and choice of fresh image points), so the loop
itself is group-agnostic; the shipped oracle models the finitary symmetric
group on N.
"""

from __future__ import annotations

from dataclasses import dataclass

from zariski._backend import kernels
from zariski.errors import NotNormalized, OracleExhausted
from zariski.perm import FinPermutation, PartialBijection, extend
from zariski.ragged import MatrixPair, stack


def pick_separators(P: MatrixPair) -> tuple:
    """For each row, the smallest point where the leading coefficients of
    the A and B sides disagree."""
    seps = []
    for i, (arow, brow) in enumerate(zip(P.A.rows, P.B.rows)):
        a0, b0 = arow[0], brow[0]
        if a0 == b0:
            raise NotNormalized(f"row {i} has equal leading entries")
        diff = [x for x in a0.support() | b0.support()
                if a0.apply(x) != b0.apply(x)]
        seps.append(min(diff))
    return tuple(seps)


def _entry_maps(P: MatrixPair) -> list:
    entries = {c for row in P.A.rows + P.B.rows for c in row}
    return [p._map for p in entries]


def forbidden_set(P: MatrixPair) -> frozenset:
    """{1} u C u C^-1 u CC u CC^-1 u C^-1C u C^-1C^-1, where C is the set
    of entries of A and B.  Image points are kept away from the translates
    of this set so that no partial row evaluation can collide."""
    return frozenset(FinPermutation._trusted(m)
                     for m in kernels.seven_parts(_entry_maps(P)))


@dataclass(frozen=True)
class WitnessStep:
    case: str  # "alpha" | "beta"
    row: int
    point: int  # q: where the stuck row evaluation stopped
    image: int  # q': the freshly chosen image
    counters_a: tuple  # per-row longest defined prefix, after the step
    counters_b: tuple


@dataclass(frozen=True)
class WitnessTrace:
    separators: tuple
    forbidden: tuple  # sorted FinPermutations
    steps: tuple
    final: FinPermutation

    def to_json(self) -> dict:
        return {
            "separators": list(self.separators),
            "forbidden_size": len(self.forbidden),
            "steps": [{"case": s.case, "row": s.row,
                       "point": s.point, "image": s.image,
                       "counters_a": list(s.counters_a),
                       "counters_b": list(s.counters_b)}
                      for s in self.steps],
            "witness": self.final.to_json(),
        }


class SymOmegaOracle:
    """No-algebraicity oracle for the finitary symmetric group on N.

    Every finite injective partial map extends, and a fresh image for q is
    simply the smallest natural avoiding the forbidden set and the image of
    the map built so far.
    """

    def extendable(self, b: PartialBijection) -> bool:
        return True

    def choose_image(self, b: PartialBijection, q: int, forbidden) -> int:
        banned = set(forbidden)
        banned.update(b.image())
        a = 0
        while a in banned:
            a += 1
        return a

    def complete(self, b: PartialBijection) -> FinPermutation:
        return extend(b)


def symw_oracle() -> SymOmegaOracle:
    return SymOmegaOracle()


def _partial_eval(row_maps, m, xmap):
    """Longest defined prefix of c0 x c1 ... x cp at the point m.

    Returns (p, value): p is the largest coefficient index reached, value
    the point after applying c_p.  The prefix extends past c_p only when
    the current value lies in the domain of the partial map x.
    """
    v = row_maps[0].get(m, m)
    p = 0
    for c in row_maps[1:]:
        if v not in xmap:
            break
        v = xmap[v]
        v = c.get(v, v)
        p += 1
    return p, v


def _check_proper(P: MatrixPair):
    for i, (arow, brow) in enumerate(zip(P.A.rows, P.B.rows)):
        if len(arow) == 1 and len(brow) == 1:
            raise NotNormalized(f"row {i} has degree 0 on both sides")
        if arow[0] == brow[0]:
            raise NotNormalized(f"row {i} has equal leading entries")


def construct_witness(P: MatrixPair, oracle) -> tuple:
    """Build an element of N_{A,B} together with its construction trace.

    ``P`` must be a proper normal form.  Loop: take the smallest row whose
    A-side evaluation at its separator is not yet defined (case alpha),
    else the smallest with the B side undefined (case beta); the stuck
    point q receives a fresh image q' outside every forbidden translate of
    the working set.  Each step pushes one row's defined prefix strictly
    forward, so the loop ends after at most sum(d_A + d_B) steps.
    """
    _check_proper(P)
    seps = pick_separators(P)
    cmaps = _entry_maps(P)
    cinv = [kernels.invert_map(m) for m in cmaps]

    def forbidden_translates(points: set) -> set:
        # (T)P computed pointwise: (t)(fg) = ((t)f)g, so translating T
        # through the seven product parts is six successive translations
        t1 = kernels.translate_points(points, cmaps)
        t2 = kernels.translate_points(points, cinv)
        return (points | t1 | t2
                | kernels.translate_points(t1, cmaps)
                | kernels.translate_points(t1, cinv)
                | kernels.translate_points(t2, cmaps)
                | kernels.translate_points(t2, cinv))

    arows = [[c._map for c in row] for row in P.A.rows]
    brows = [[c._map for c in row] for row in P.B.rows]
    da = [len(r) - 1 for r in arows]
    db = [len(r) - 1 for r in brows]
    k = len(arows)

    xmap: dict = {}
    steps = []
    budget = sum(da) + sum(db)

    while True:
        selected = None
        for j in range(k):
            p, v = _partial_eval(arows[j], seps[j], xmap)
            if p < da[j]:
                selected = ("alpha", j, v)
                break
        if selected is None:
            for j in range(k):
                p, v = _partial_eval(brows[j], seps[j], xmap)
                if p < db[j]:
                    selected = ("beta", j, v)
                    break
        if selected is None:
            break
        case, j, q = selected
        working = set(xmap)
        working.update(xmap.values())
        working.add(q)
        working.update(seps)
        tp = forbidden_translates(working)
        q_img = oracle.choose_image(PartialBijection._from_dict(xmap), q, tp)
        if q_img is None or q_img in tp:
            raise OracleExhausted("oracle returned no admissible image")
        xmap[q] = q_img
        steps.append(WitnessStep(
            case, j, q, q_img,
            tuple(_partial_eval(arows[i], seps[i], xmap)[0] for i in range(k)),
            tuple(_partial_eval(brows[i], seps[i], xmap)[0] for i in range(k)),
        ))
        if len(steps) > budget:
            raise AssertionError("step budget exceeded; oracle misbehaving")

    g = oracle.complete(PartialBijection._from_dict(dict(xmap)))
    trace = WitnessTrace(
        separators=seps,
        forbidden=tuple(FinPermutation._trusted(m)
                        for m in kernels.seven_parts(cmaps)),
        steps=tuple(steps),
        final=g,
    )
    return g, trace


def intersect_witness(P1: MatrixPair, P2: MatrixPair, oracle) -> tuple:
    """A common point of N_{A1,B1} and N_{A2,B2}: stack the rows and run
    the witness construction on the combined pair."""
    return construct_witness(stack(P1, P2), oracle)
