"""Pure-Python depth-first search for GF(p) points of a polynomial system.

The system is passed in flattened form (see ``charsearch.compile_system``):
relations are grouped by the largest variable they mention, and a relation is
checked as soon as that variable has been assigned.
"""


def _powmod(b, e, p):
    r = 1
    while e:
        if e & 1:
            r = r * b % p
        b = b * b % p
        e >>= 1
    return r


def search(ngens, p, level_start, rel_start, term_coef, term_start, fac_var, fac_exp, budget):
    """Return (solutions, nodes); nodes is -1 when the budget ran out."""
    vals = [0] * ngens
    out = []
    nodes = 0

    def level_ok(d):
        for r in range(level_start[d], level_start[d + 1]):
            s = 0
            for t in range(rel_start[r], rel_start[r + 1]):
                v = term_coef[t]
                for f in range(term_start[t], term_start[t + 1]):
                    v = v * _powmod(vals[fac_var[f]], fac_exp[f], p) % p
                    if v == 0:
                        break
                s += v
            if s % p:
                return False
        return True

    if ngens == 0:
        return [()], 0
    # iterative DFS; vals[d] runs over 0..p-1 at depth d
    d = 0
    vals[0] = -1
    while d >= 0:
        vals[d] += 1
        if vals[d] == p:
            d -= 1
            continue
        nodes += 1
        if nodes > budget:
            return out, -1
        if not level_ok(d):
            continue
        if d == ngens - 1:
            out.append(tuple(vals))
        else:
            d += 1
            vals[d] = -1
    return out, nodes
