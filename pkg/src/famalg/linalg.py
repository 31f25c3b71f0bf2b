"""Exact dense linear algebra over a :class:`~famalg.field.Field`.

Matrices are lists of row lists.  Only what the constructions need: row
reduction, solving, rank, inversion, and span membership.
"""


def rref(rows, F):
    """Return (reduced rows, pivot columns).  Input is not modified."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = F.inv(m[r][col])
        m[r] = [F.mul(x, inv) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows, F):
    return len(rref(rows, F)[1])


def solve(a, b, F):
    """Solve ``a x = b``.  Returns (particular solution, nullity) or (None, 0)."""
    if not a:
        return [], 0
    ncols = len(a[0])
    aug = [list(r) + [v] for r, v in zip(a, b)]
    red, pivots = rref(aug, F)
    if ncols in pivots:
        return None, 0
    x = [F.zero] * ncols
    for row, col in zip(red, pivots):
        x[col] = row[ncols]
    return x, ncols - len(pivots)


def inverse(a, F):
    n = len(a)
    aug = [list(r) + [F.one if i == j else F.zero for j in range(n)] for i, r in enumerate(a)]
    red, pivots = rref(aug, F)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        return None
    return [row[n:] for row in red[:n]]


def in_span(vectors, v, F):
    if not vectors:
        return all(x == 0 for x in v)
    return rank(list(vectors) + [v], F) == rank(vectors, F)


def matmul(a, b, F):
    return [
        [_dot(row, [b[k][j] for k in range(len(b))], F) for j in range(len(b[0]))]
        for row in a
    ]


def _dot(u, v, F):
    s = F.zero
    for x, y in zip(u, v):
        if x and y:
            s = F.add(s, F.mul(x, y))
    return s
