"""Brute-force oracles over GF(p): characters of presented algebras, morphisms
between algebras, and correspondence reports pairing the two."""

from dataclasses import dataclass, field as dc_field
from itertools import product

from . import kernel
from .errors import BudgetExceeded, ConstructionError, ValidationError
from .fralg import FrAlgebra, FrHopf, fr_to_presentation
from .linalg import rank

DEFAULT_BUDGET = 10 ** 7


# -- characters ---------------------------------------------------------------------

def _commutative_terms(f, p):
    """Collapse a noncommutative polynomial to {exponent tuple: coeff mod p}."""
    out = {}
    for w, c in f.terms.items():
        exps = {}
        for g in w:
            exps[g] = exps.get(g, 0) + 1
        key = tuple(sorted(exps.items()))
        out[key] = (out.get(key, 0) + int(c)) % p
    return {k: v for k, v in out.items() if v}


def compile_system(polys, ngens, p, prune=True):
    """Flatten relations for the search kernel.

    Returns None when some relation is a nonzero constant (no solutions),
    else the tuple of flat arrays expected by ``kernel.search``.
    """
    by_level = [[] for _ in range(ngens)]
    for f in polys:
        terms = _commutative_terms(f, p)
        if not terms:
            continue
        top = max((g for k in terms for g, _ in k), default=-1)
        if top < 0:
            return None
        by_level[top if prune else ngens - 1].append(terms)
    level_start, rel_start, term_coef, term_start, fac_var, fac_exp = [0], [0], [], [0], [], []
    for rels in by_level:
        for terms in rels:
            for key, c in sorted(terms.items()):
                term_coef.append(c)
                for g, e in key:
                    fac_var.append(g)
                    fac_exp.append(e)
                term_start.append(len(fac_var))
            rel_start.append(len(term_coef))
        level_start.append(len(rel_start) - 1)
    return level_start, rel_start, term_coef, term_start, fac_var, fac_exp


def _require_prime(field):
    if not field.is_prime_field:
        raise ValidationError("character search needs a prime field GF(p)")
    return field.p


def solve_system(polys, ngens, p, budget=DEFAULT_BUDGET, prune=True, search=None):
    """All points of GF(p)^ngens where every polynomial vanishes (commutatively)."""
    flat = compile_system(polys, ngens, p, prune)
    if flat is None:
        return []
    search = search or kernel.search
    sols, nodes = search(ngens, p, *flat, budget)
    if nodes < 0:
        raise BudgetExceeded(p ** ngens, budget)
    return sols


def enumerate_characters(C, budget=DEFAULT_BUDGET, prune=True, search=None):
    """Characters of ``C`` as dicts generator -> residue, in lexicographic order.

    Characters factor through the abelianization, so relations are evaluated
    commutatively.
    """
    p = _require_prime(C.field)
    sols = solve_system(C.presentation.relations, len(C.names), p, budget, prune, search)
    return [dict(zip(C.names, s)) for s in sols]


# -- morphisms ---------------------------------------------------------------------------

def _eval_in_fr(f, vals, A, cache):
    """f at generator images ``vals`` (coordinate vectors) inside A."""
    F = A.field
    acc = list(A.zero())
    for w, c in f.terms.items():
        if w not in cache:
            v = A.one()
            for g in w:
                v = A.mul(v, vals[g])
            cache[w] = v
        v = cache[w]
        for k in range(A.n):
            if v[k] != 0:
                acc[k] = F.add(acc[k], F.mul(c, v[k]))
    return acc


def enumerate_morphisms(B, A, budget=DEFAULT_BUDGET):
    """All morphisms B -> A over GF(p), as lists of generator-image vectors.

    Depth-first over the generators; each relation is evaluated with A's
    structure constants once its last generator has an image.
    """
    if isinstance(B, FrAlgebra):
        B = fr_to_presentation(B)
    F = A.field
    B.field.check_same(F)
    p = _require_prime(F)
    g = len(B.names)
    rels = B.presentation.effective_relations()
    levels = [[] for _ in range(g)]
    for r in rels:
        top = max((x for w in r.terms for x in w), default=-1)
        if top < 0:
            if not r.is_zero():
                return []
            continue
        levels[top].append(r)
    vectors = list(product(range(p), repeat=A.n))
    out = []
    nodes = 0
    required = p ** (A.n * g)
    vals = []

    def rec(d):
        nonlocal nodes
        if d == g:
            out.append([tuple(v) for v in vals])
            return
        for v in vectors:
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(required, budget)
            vals.append(tuple(F(x) for x in v))
            cache = {}
            if all(all(x == 0 for x in _eval_in_fr(r, vals, A, cache)) for r in levels[d]):
                rec(d + 1)
            vals.pop()

    if g == 0:
        return [[]]
    rec(0)
    return out


def is_isomorphism(images, B, A):
    """A morphism between finite-rank algebras, given on B's basis, is invertible."""
    if B.n != A.n:
        return False
    return rank([list(v) for v in images], A.field) == A.n


def enumerate_isomorphisms(B, A, budget=DEFAULT_BUDGET):
    return [m for m in enumerate_morphisms(B, A, budget) if is_isomorphism(m, B, A)]


# -- correspondence reports ----------------------------------------------------------------

@dataclass
class CorrespondenceReport:
    kind: str
    left_count: int
    right_count: int
    left_items: list
    right_items: list
    matched: bool
    pairing: list
    extra: dict = dc_field(default_factory=dict)

    def to_json(self):
        d = {
            "kind": self.kind,
            "characters": self.left_count,
            "morphisms": self.right_count,
            "character_items": self.left_items,
            "morphism_items": self.right_items,
            "matched": self.matched,
            "pairing": self.pairing,
        }
        d.update(self.extra)
        return d


def _ints(v):
    return [int(x) for x in v]


def _pair(U, chars, morphs, kind, extra=None):
    """Pair each character with the morphism it induces through U's index table."""
    key = {tuple(tuple(v) for v in m): j for j, m in enumerate(morphs)}
    pairing = []
    hit = set()
    ok = True
    for i, chi in enumerate(chars):
        f = U.morphism_from_character(chi)
        j = key.get(tuple(f[s] for s in U.B.names))
        if j is None or j in hit:
            ok = False
        else:
            hit.add(j)
            pairing.append([i, j])
    matched = ok and len(hit) == len(morphs)
    left = [{n: int(c) for n, c in chi.items()} for chi in chars]
    right = [[_ints(v) for v in m] for m in morphs]
    return CorrespondenceReport(kind, len(chars), len(morphs), left, right, matched, pairing, extra or {})


def correspondence_report(kind, *args, budget=DEFAULT_BUDGET, **kwargs):
    """Run a construction, enumerate both sides, and match via the canonical map.

    kinds and arguments:
      map (B, A); iso (B, A) with B, A finite-rank; galois (A, sub_vectors);
      pontryagin (H, table=None) with H a finite-rank Hopf algebra.
    """
    from . import mapuniv

    if kind == "map":
        B, A = args
        U = mapuniv.construct_map_algebra(B, A, True)
        chars = enumerate_characters(U.Z, budget)
        morphs = enumerate_morphisms(U.B, A, budget)
        return _pair(U, chars, morphs, kind)
    if kind == "iso":
        B, A = args
        U = mapuniv.construct_iso_algebra(B, A, True)
        chars = enumerate_characters(U.Z, budget)
        morphs = enumerate_isomorphisms(B, A, budget)
        return _pair(U, chars, morphs, kind)
    if kind == "galois":
        A, sub = args
        U = mapuniv.galois_algebra(A, sub)
        chars = enumerate_characters(U.Z, budget)
        vecs = U.extra["sub"]
        endos = []
        for m in enumerate_morphisms(U.B, A, budget):
            if all(_apply(m, v, A) == tuple(v) for v in vecs):
                endos.append(m)
        autos = [m for m in endos if is_isomorphism(m, A, A)]
        rep = _pair(U, chars, endos, kind)
        rep.extra = {"automorphisms": [[_ints(v) for v in m] for m in autos],
                     "automorphism_count": len(autos)}
        return rep
    if kind == "pontryagin":
        (H,) = args
        table = kwargs.get("table")
        if not isinstance(H, FrHopf):
            raise ConstructionError("pontryagin report needs a finite-rank Hopf algebra")
        U = mapuniv.pontryagin_dual(H, True)
        chars = enumerate_characters(U.Z, budget)
        grouplike = []
        for m in enumerate_morphisms(U.B, H.base, budget):
            if all(_is_grouplike(H, v) for v in m):
                grouplike.append(m)
        rep = _pair(U, chars, grouplike, kind)
        if table is not None:
            from .fralg import dual_group
            rep.extra = {"dual_group_order": len(dual_group(table, H.field))}
        return rep
    raise ValidationError(f"unknown correspondence kind {kind!r}")


def _apply(images, v, A):
    """Linear extension of basis images to a coordinate vector."""
    F = A.field
    out = [F.zero] * A.n
    for c, img in zip(v, images):
        if c != 0:
            for k in range(A.n):
                out[k] = F.add(out[k], F.mul(c, img[k]))
    return tuple(out)


def _is_grouplike(H, v):
    F = H.field
    d = H.delta_vec(v)
    return all(d[j][k] == F.mul(v[j], v[k]) for j in range(H.n) for k in range(H.n))
