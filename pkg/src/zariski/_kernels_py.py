"""Pure-Python twin of the compiled kernels.

A finitely supported permutation is represented throughout as a plain dict
mapping each moved point to its image (fixed points are never stored).
``zariski._backend`` selects this module whenever the compiled extension
``zariski._kernels`` is unavailable, so both implementations must agree
function by function; ``tests/test_backends.py`` enforces that.

Composition is left to right: ``compose_maps(p, q)`` is the permutation
x -> q(p(x)).
"""


def compose_maps(p, q):
    """Compose two moved-point dicts left to right, pruning fixed points."""
    r = {}
    for x, y in p.items():
        z = q.get(y, y)
        if z != x:
            r[x] = z
    for x, y in q.items():
        if x not in p:
            r[x] = y
    return r


def invert_map(p):
    return {y: x for x, y in p.items()}


def apply_map(p, x):
    return p.get(x, x)


def eval_word_maps(coeffs, x):
    """Value of the word c0 * x * c1 * ... * x * cn as a moved-point dict."""
    acc = coeffs[0]
    for c in coeffs[1:]:
        acc = compose_maps(acc, x)
        acc = compose_maps(acc, c)
    return acc


def rows_all_differ(rows_a, rows_b, x):
    """True iff the evaluations of paired rows differ in every coordinate."""
    for ra, rb in zip(rows_a, rows_b):
        if eval_word_maps(ra, x) == eval_word_maps(rb, x):
            return False
    return True


def translate_points(points, perms):
    """The point set {(t)f : t in points, f in perms}."""
    out = set()
    for m in perms:
        for t in points:
            out.add(m.get(t, t))
    return out


def pair_products(left, right):
    """All products l * r for l in left, r in right, deduplicated."""
    seen = {}
    for p in left:
        for q in right:
            r = compose_maps(p, q)
            key = tuple(sorted(r.items()))
            if key not in seen:
                seen[key] = r
    return list(seen.values())


def seven_parts(c):
    """{1} u C u C^-1 u CC u CC^-1 u C^-1C u C^-1C^-1, deduplicated and
    sorted by canonical pair encoding."""
    cinv = [invert_map(m) for m in c]
    seen = {(): {}}
    for m in c + cinv:
        seen[tuple(sorted(m.items()))] = m
    for left in (c, cinv):
        for right in (c, cinv):
            for p in left:
                for q in right:
                    r = compose_maps(p, q)
                    key = tuple(sorted(r.items()))
                    if key not in seen:
                        seen[key] = r
    return [seen[k] for k in sorted(seen)]
