# cython: language_level=3
"""Compiled kernels for the hot permutation loops.

Same contract as zariski._kernels_py (the pure-Python twin): permutations
are dicts of moved points only, composition is left to right.
"""


def compose_maps(dict p, dict q):
    """Compose two moved-point dicts left to right, pruning fixed points."""
    cdef dict r = {}
    for x, y in p.items():
        z = q.get(y, y)
        if z != x:
            r[x] = z
    for x, y in q.items():
        if x not in p:
            r[x] = y
    return r


def invert_map(dict p):
    cdef dict r = {}
    for x, y in p.items():
        r[y] = x
    return r


def apply_map(dict p, x):
    return p.get(x, x)


def eval_word_maps(list coeffs, dict x):
    """Value of the word c0 * x * c1 * ... * x * cn as a moved-point dict."""
    cdef dict acc = <dict>coeffs[0]
    cdef Py_ssize_t i
    for i in range(1, len(coeffs)):
        acc = compose_maps(acc, x)
        acc = compose_maps(acc, <dict>coeffs[i])
    return acc


def rows_all_differ(list rows_a, list rows_b, dict x):
    """True iff the evaluations of paired rows differ in every coordinate."""
    cdef Py_ssize_t i
    for i in range(len(rows_a)):
        if eval_word_maps(<list>rows_a[i], x) == eval_word_maps(<list>rows_b[i], x):
            return False
    return True


def translate_points(points, list perms):
    """The point set {(t)f : t in points, f in perms}."""
    cdef set out = set()
    cdef dict m
    for m in perms:
        for t in points:
            out.add(m.get(t, t))
    return out


def pair_products(list left, list right):
    """All products l * r for l in left, r in right, deduplicated."""
    cdef dict seen = {}
    cdef dict p, q, r
    for p in left:
        for q in right:
            r = compose_maps(p, q)
            key = tuple(sorted(r.items()))
            if key not in seen:
                seen[key] = r
    return list(seen.values())


def seven_parts(list c):
    """{1} u C u C^-1 u CC u CC^-1 u C^-1C u C^-1C^-1, deduplicated and
    sorted by canonical pair encoding."""
    cdef list cinv = [invert_map(m) for m in c]
    cdef dict seen = {(): {}}
    cdef dict p, q, r, m
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
