# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled depth-first search for GF(p) points of a polynomial system.

Same contract as ``_pykernel.search``.
"""

from array import array


cdef inline long long _powmod(long long b, long long e, long long p) nogil:
    cdef long long r = 1
    while e:
        if e & 1:
            r = r * b % p
        b = b * b % p
        e >>= 1
    return r


cdef bint _level_ok(int d, long long p, long long[:] vals, long long[:] level_start,
                    long long[:] rel_start, long long[:] term_coef, long long[:] term_start,
                    long long[:] fac_var, long long[:] fac_exp) nogil:
    cdef long long r, t, f, s, v
    for r in range(level_start[d], level_start[d + 1]):
        s = 0
        for t in range(rel_start[r], rel_start[r + 1]):
            v = term_coef[t]
            for f in range(term_start[t], term_start[t + 1]):
                v = v * _powmod(vals[fac_var[f]], fac_exp[f], p) % p
                if v == 0:
                    break
            s = (s + v) % p
        if s != 0:
            return False
    return True


def _q(x):
    return array("q", x if len(x) else [0])


def search(int ngens, long long p, level_start, rel_start, term_coef, term_start,
           fac_var, fac_exp, long long budget):
    if ngens == 0:
        return [()], 0
    cdef long long[:] ls = _q(level_start)
    cdef long long[:] rs = _q(rel_start)
    cdef long long[:] tc = _q(term_coef)
    cdef long long[:] ts = _q(term_start)
    cdef long long[:] fv = _q(fac_var)
    cdef long long[:] fe = _q(fac_exp)
    cdef long long[:] vals = array("q", [0] * ngens)
    cdef long long nodes = 0
    cdef int d = 0
    out = []
    vals[0] = -1
    while d >= 0:
        vals[d] += 1
        if vals[d] == p:
            d -= 1
            continue
        nodes += 1
        if nodes > budget:
            return out, -1
        if not _level_ok(d, p, vals, ls, rs, tc, ts, fv, fe):
            continue
        if d == ngens - 1:
            out.append(tuple([vals[i] for i in range(ngens)]))
        else:
            d += 1
            vals[d] = -1
    return out, nodes
