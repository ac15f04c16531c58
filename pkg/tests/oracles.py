"""Reference computations that share no code with the package.

Polynomials are plain {exponent: coefficient} dicts; determinants are the
Leibniz sum over permutations.
"""

from itertools import permutations


def padd(a, b):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v}


def pmul(a, b):
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return {k: v for k, v in out.items() if v}


def perm_sign(p):
    sign, seen = 1, set()
    for i in range(len(p)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def leibniz_det(rows):
    """rows: list of lists of dict polynomials."""
    n = len(rows)
    total = {}
    for p in permutations(range(n)):
        term = {0: perm_sign(p)}
        for i in range(n):
            term = pmul(term, rows[i][p[i]])
            if not term:
                break
        total = padd(total, term)
    return total


def leibniz_det_int(rows):
    return leibniz_det([[{0: x} if x else {} for x in row] for row in rows]).get(0, 0)


def unit_normal(d):
    """Shift to lowest exponent 0 and make the top coefficient positive, by enumeration over ±t^k."""
    if not d:
        return ()
    lo, hi = min(d), max(d)
    candidates = []
    for k in range(-hi - 2, -lo + 3):
        for s in (1, -1):
            shifted = {e + k: s * c for e, c in d.items()}
            if min(shifted) == 0 and shifted[max(shifted)] > 0:
                candidates.append(tuple(shifted.get(e, 0) for e in range(max(shifted) + 1)))
    assert len(candidates) == 1, candidates
    return candidates[0]


def seifert_presentation(A, q):
    s = -1 if q % 2 else 1
    n = len(A)
    return [[padd({1: A[i][j]} if A[i][j] else {}, {0: s * A[j][i]} if A[j][i] else {}) for j in range(n)] for i in range(n)]


def seifert_class(A, q):
    return unit_normal(leibniz_det(seifert_presentation(A, q)))
