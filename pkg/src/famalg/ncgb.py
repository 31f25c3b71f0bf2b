"""Degree-truncated noncommutative Groebner bases in the free algebra.

``complete`` runs Buchberger's procedure on overlap ambiguities with the
normal selection strategy, dropping S-polynomials above the truncation
degree.  The resulting :class:`GroebnerData` records whether the closure
actually finished; every zero test returns a :class:`Verdict` carrying that
soundness information.
"""

from dataclasses import dataclass
import heapq

from .errors import DegreeOutOfRange, IncompatibleContext
from .ncpoly import NcPoly, deglex_key

DEFAULT_DEGREE = 8


@dataclass(frozen=True)
class Verdict:
    zero: bool
    exact: bool
    degree: int = DEFAULT_DEGREE
    note: str = ""

    @property
    def soundness(self):
        return "exact" if self.exact else f"bounded({self.degree})"

    def to_json(self):
        d = {"value": "zero" if self.zero else "nonzero", "soundness": self.soundness}
        if self.note:
            d["note"] = self.note
        return d

    @staticmethod
    def combine(verdicts, degree=DEFAULT_DEGREE):
        verdicts = list(verdicts)
        if not verdicts:
            return Verdict(True, True, degree)
        zero = all(v.zero for v in verdicts)
        exact = all(v.exact for v in verdicts)
        bad = next((v.note for v in verdicts if not v.zero and v.note), "")
        return Verdict(zero, exact, min(v.degree for v in verdicts), bad)


class _Rules:
    """Lead-word lookup table: lead word -> negated monic tail."""

    __slots__ = ("table", "lengths")

    def __init__(self, polys):
        self.table = {}
        for g in polys:
            self.add(g)

    def add(self, g):
        lw = g.lead_word()
        F = g.field
        tail = [(w, F.neg(c)) for w, c in g.terms.items() if w != lw]
        self.table[lw] = tail
        self.lengths = sorted({len(w) for w in self.table})

    def remove(self, lw):
        del self.table[lw]
        self.lengths = sorted({len(w) for w in self.table})

    def find(self, word):
        """First (position, lead) such that lead occurs in word at position."""
        table = self.table
        if () in table:
            return 0, ()
        n = len(word)
        for start in range(n):
            for ln in self.lengths:
                if start + ln > n:
                    break
                sub = word[start:start + ln]
                if sub in table:
                    return start, sub
        return None


def _heap_key(w):
    return (-len(w), tuple(-g for g in w))


def _normal_form(f, rules):
    if not rules.table or f.is_zero():
        return f
    F = f.field
    add, mul = F.add, F.mul
    work = dict(f.terms)
    heap = [_heap_key(w) for w in work]
    heapq.heapify(heap)
    queued = set(work)
    result = {}
    table = rules.table
    while heap:
        key = heapq.heappop(heap)
        w = tuple(-g for g in key[1])
        queued.discard(w)
        c = work.pop(w, None)
        if c is None:
            continue
        hit = rules.find(w)
        if hit is None:
            result[w] = c
            continue
        start, lead = hit
        pre, post = w[:start], w[start + len(lead):]
        for tw, tc in table[lead]:
            nw = pre + tw + post
            s = add(work.get(nw, F.zero), mul(c, tc))
            if s == 0:
                work.pop(nw, None)
            else:
                work[nw] = s
                if nw not in queued:
                    queued.add(nw)
                    heapq.heappush(heap, _heap_key(nw))
    return NcPoly(f.ring, result)


class GroebnerData:
    """An interreduced, monic, possibly truncated Groebner basis."""

    def __init__(self, ring, basis, degree, complete):
        self.ring = ring
        self.basis = tuple(sorted(basis, key=lambda g: deglex_key(g.lead_word())))
        self.degree = degree
        self.complete = complete
        self._rules = _Rules(self.basis)

    @property
    def lead_words(self):
        return [g.lead_word() for g in self.basis]

    def reduce(self, f):
        if f.ring != self.ring:
            raise IncompatibleContext(f"{f.ring} vs {self.ring}")
        return _normal_form(f, self._rules)

    def is_reducible(self, word):
        return self._rules.find(word) is not None

    def verdict(self, f):
        """Zero test for ``f``; see :func:`is_zero_modulo`."""
        if not self.complete and f.degree() > self.degree:
            raise DegreeOutOfRange(
                f"degree {f.degree()} exceeds truncation degree {self.degree}; rebuild with larger D"
            )
        r = self.reduce(f)
        return Verdict(r.is_zero(), self.complete, self.degree, "" if r.is_zero() else str(r))

    def normal_words(self, max_degree):
        """All words of length <= max_degree containing no lead word."""
        out = [()]
        frontier = [()]
        for _ in range(max_degree):
            nxt = []
            for w in frontier:
                for g in range(self.ring.ngens):
                    v = w + (g,)
                    if not self._suffix_reducible(v):
                        nxt.append(v)
            out.extend(nxt)
            frontier = nxt
            if not frontier:
                break
        return out

    def _suffix_reducible(self, v):
        # prefixes of v are already normal, so only suffixes can match
        table = self._rules.table
        n = len(v)
        for ln in self._rules.lengths:
            if ln > n:
                break
            if v[n - ln:] in table:
                return True
        return False

    def overlaps(self, max_degree=None):
        """All overlap ambiguities (i, j, k, word) among basis leads."""
        leads = self.lead_words
        out = []
        for i, a in enumerate(leads):
            for j, b in enumerate(leads):
                for k in range(1, min(len(a), len(b))):
                    if a[len(a) - k:] == b[:k]:
                        w = a + b[k:]
                        if max_degree is None or len(w) <= max_degree:
                            out.append((i, j, k, w))
        return out

    def s_polynomial(self, i, j, k):
        g, h = self.basis[i], self.basis[j]
        a, b = g.lead_word(), h.lead_word()
        return _spoly(g, a, h, b, k)

    def __repr__(self):
        state = "complete" if self.complete else f"truncated at {self.degree}"
        return f"GroebnerData({len(self.basis)} elements, {state})"


def _spoly(g, a, h, b, k):
    ring = g.ring
    right = ring.monomial(b[k:])
    left = ring.monomial(a[: len(a) - k])
    return g * right - left * h


def reduce(f, G):
    return G.reduce(f)


def is_zero_modulo(f, G):
    return G.verdict(f)


def _overlap_pairs(ida, a, idb, b):
    """Overlaps with suffix of a == prefix of b; yields (degree, k)."""
    for k in range(1, min(len(a), len(b))):
        if a[len(a) - k:] == b[:k]:
            yield len(a) + len(b) - k, k


def complete(relations, degree=DEFAULT_DEGREE, ring=None):
    """Buchberger closure of ``relations`` truncated at ``degree``."""
    relations = [r for r in relations if not r.is_zero()]
    if ring is None:
        if not relations:
            raise ValueError("ring required for an empty relation list")
        ring = relations[0].ring
    for r in relations:
        if r.ring != ring:
            raise IncompatibleContext("relations over different rings")

    polys = {}  # id -> monic poly (alive elements)
    rules = _Rules([])
    pairs = []
    counter = [0]

    def insert(h):
        pending = [h]
        while pending:
            h = _normal_form(pending.pop(0), rules)
            if h.is_zero():
                continue
            h = h.monic()
            lw = h.lead_word()
            # elements whose lead contains lw become reducible: re-queue them
            for gid in sorted(polys):
                g = polys[gid]
                gw = g.lead_word()
                if _contains(gw, lw):
                    del polys[gid]
                    rules.remove(gw)
                    pending.append(g)
            hid = counter[0]
            counter[0] += 1
            polys[hid] = h
            rules.add(h)
            for gid in sorted(polys):
                gw = polys[gid].lead_word()
                for d, k in _overlap_pairs(hid, lw, gid, gw):
                    heapq.heappush(pairs, (d, hid, gid, k))
                if gid != hid:
                    for d, k in _overlap_pairs(gid, gw, hid, lw):
                        heapq.heappush(pairs, (d, gid, hid, k))

    for r in sorted(relations, key=lambda f: deglex_key(f.lead_word())):
        insert(r)

    while pairs and pairs[0][0] <= degree:
        d, i, j, k = heapq.heappop(pairs)
        if i not in polys or j not in polys:
            continue
        g, h = polys[i], polys[j]
        s = _spoly(g, g.lead_word(), h, h.lead_word(), k)
        insert(s)

    done = not any(i in polys and j in polys for _, i, j, _k in pairs)

    # final tail reduction
    ids = sorted(polys)
    basis = []
    for gid in ids:
        g = polys[gid]
        others = _Rules([polys[o] for o in ids if o != gid])
        lw = g.lead_word()
        tail = NcPoly(ring, {w: c for w, c in g.terms.items() if w != lw})
        basis.append(ring.monomial(lw) + _normal_form(tail, others))
    return GroebnerData(ring, basis, degree, done)


def _contains(word, sub):
    n, m = len(word), len(sub)
    for s in range(n - m + 1):
        if word[s:s + m] == sub:
            return True
    return False


def interreduce(polys):
    """Monic, mutually reduced, deglex-sorted copy of ``polys`` (no completion)."""
    cur = [p.monic() for p in polys if not p.is_zero()]
    changed = True
    while changed:
        changed = False
        cur = sorted(set(cur), key=lambda f: (deglex_key(f.lead_word()), f.to_string()))
        for i, f in enumerate(cur):
            others = _Rules([g for j, g in enumerate(cur) if j != i and g.lead_word() != f.lead_word()])
            # equal leads: keep the first, reduce later ones against it
            dup = [g for j, g in enumerate(cur) if j < i and g.lead_word() == f.lead_word()]
            for g in dup:
                others.add(g)
            r = _normal_form(f, others)
            if r != f:
                cur[i] = r.monic() if not r.is_zero() else r
                cur = [g for g in cur if not g.is_zero()]
                changed = True
                break
    return sorted(cur, key=lambda f: (deglex_key(f.lead_word()), f.to_string()))
