"""Universal families: M(B,A), I(B,A), constrained classes, Pontryagin and
Galois algebras, mediating morphisms, and the explicit isomorphisms between
iterated constructions.

Generator naming is fixed: ``z.<s>.<i>`` for the coefficient of the i-th
basis element of A (1-based) in the image of the B-generator ``s``, and
``zp.<a>.<j>`` for the coefficient of the j-th basis element of B in the
image of A's basis element ``a`` under the inverse family.
"""

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .errors import ConstructionError, IncompatibleContext, ValidationError
from .fpalg import (
    AlgMorphism,
    Family,
    FpAlgebra,
    Presentation,
    base_algebra,
    compose_and_multiply,
    make_algebra,
    opposite,
    tensor_algebra,
)
from .fralg import FrAlgebra, FrHopf, ModuleMap, fr_to_presentation, k_power, tensor_fr, vector_to_poly
from .linalg import in_span, solve
from .ncgb import DEFAULT_DEGREE, Verdict
from .ncpoly import FreeAlgebra, NcPoly, TensorElement, deglex_key, eval_in_tensor

DEFAULT_SPANNING_BOUND = 4


def zname(s, i):
    return f"z.{s}.{i + 1}"


def zpname(a, j):
    return f"zp.{a}.{j + 1}"


# -- constraint specifications ------------------------------------------------------

@dataclass(frozen=True)
class FixedPoints:
    """psi(beta(m)) = alpha(m) (x) 1 for every basis element m of M.

    ``beta`` lists, per basis element of M, an element of B: a polynomial (or
    string) in B's generators, or a coordinate vector when B is finite-rank.
    """

    beta: tuple
    alpha: ModuleMap


@dataclass(frozen=True)
class Cofixed:
    """(alpha' (x) i) psi(b) = beta'(b) (x) 1; B must be finite-rank."""

    beta: ModuleMap
    alpha: ModuleMap


@dataclass(frozen=True)
class Multiplicative:
    """(Gamma (x) i) psi = (i (x) mu)(i (x) flip (x) i)(psi (x) psi) Delta.

    ``delta`` gives Delta on B's generators as polynomials (or strings) over
    ``tensor_algebra(B, B)``; ``gamma[i][j][k]`` is the coefficient of
    a_j (x) a_k in Gamma(a_i).
    """

    delta: tuple
    gamma: tuple


@dataclass(frozen=True)
class Equivariant:
    """(i (x) flip)(Theta (x) i) psi = (psi (x) i) Lambda; B finite-rank.

    ``lam[j][j2][t]`` is the coefficient of b_j2 (x) n_t in Lambda(b_j);
    ``theta[i][k][t]`` the coefficient of a_k (x) n_t in Theta(a_i).
    """

    rank: int
    lam: tuple
    theta: tuple


# -- universal families ----------------------------------------------------------------

@dataclass
class UniversalFamily:
    family: Family
    kind: str
    index: dict  # (B-generator name, A-index) -> Z-generator name
    index_prime: dict = dc_field(default_factory=dict)  # (A-label, B-index) -> Z-generator name
    truncated: bool = False
    inverse: Optional[Family] = None
    extra: dict = dc_field(default_factory=dict)

    @property
    def Z(self):
        return self.family.param

    @property
    def B(self):
        return self.family.source

    @property
    def A(self):
        return self.family.target

    def check(self):
        """Well-definedness of the family (and of the inverse, for iso kind)."""
        vs = [self.family.check()]
        if self.inverse is not None:
            vs.append(self.inverse.check())
            vs.append(verify_inverse(self.family, self.inverse))
        return Verdict.combine(vs, self.Z.degree)

    def morphism_from_character(self, chi):
        """Coordinate vectors f(s) of the classical morphism attached to ``chi``.

        ``chi`` maps Z-generator names to scalars.
        """
        F = self.Z.field
        out = {}
        for s in self.B.names:
            out[s] = tuple(F(chi[self.index[(s, i)]]) for i in range(self.A.n))
        return out

    def to_json(self):
        d = {
            "kind": self.kind,
            "presentation": self.Z.presentation.to_json(),
            "index": {f"{s}:{i + 1}": n for (s, i), n in sorted(self.index.items())},
            "truncated": self.truncated,
        }
        if self.index_prime:
            d["index_prime"] = {f"{a}:{j + 1}": n for (a, j), n in sorted(self.index_prime.items())}
        return d


def _clean_relations(rels):
    """Drop zeros, make monic, deduplicate, sort deglex; same ideal."""
    seen = {}
    for r in rels:
        if r.is_zero():
            continue
        m = r.monic()
        seen[m.to_string()] = m
    return sorted(seen.values(), key=lambda f: (deglex_key(f.lead_word()), f.to_string()))


def _generator_images(A, ring, names_by_index):
    gens = ring.gens()
    return [TensorElement(A, [gens[ring.index[n]] for n in row]) for row in names_by_index]


def _as_presented(B, degree):
    if isinstance(B, FrAlgebra):
        return fr_to_presentation(B, degree)
    return B


def _map_data(B, A, degree):
    names = []
    index = {}
    rows = []
    for s in B.names:
        row = []
        for i in range(A.n):
            n = zname(s, i)
            names.append(n)
            index[(s, i)] = n
            row.append(n)
        rows.append(row)
    ring = FreeAlgebra(names, A.field)
    images = _generator_images(A, ring, rows)
    rels = []
    for p in B.presentation.effective_relations():
        rels.extend(eval_in_tensor(p, images, A, ring).comps)
    return names, index, ring, images, rels


def construct_map_algebra(B, A, commutative=False, degree=DEFAULT_DEGREE):
    """The universal family B -> A (x) M(B,A) (or M^c when ``commutative``)."""
    B = _as_presented(B, degree)
    B.field.check_same(A.field)
    names, index, ring, images, rels = _map_data(B, A, degree)
    Z = FpAlgebra(Presentation(names, _clean_relations(rels), commutative, A.field), degree)
    fam = Family(B, A, Z, images)
    return UniversalFamily(fam, "map", index)


def _retarget(images, A, Z):
    """Re-home tensor images built over Z's free algebra onto Z itself."""
    return [TensorElement(A, list(t.comps)) for t in images]


def mediate(U, psi):
    """The unique morphism Z -> C with (i_A (x) m) phi = psi."""
    if tuple(psi.source.names) != tuple(U.B.names):
        raise IncompatibleContext("family must be defined on the generators of B")
    if psi.target.n != U.A.n:
        raise IncompatibleContext("family must take values in A")
    U.Z.field.check_same(psi.param.field)
    v = psi.check()
    if not v.zero:
        raise ConstructionError(f"family is not well defined: {v.note}")
    images = {}
    for (s, i), n in U.index.items():
        images[n] = psi.image(s).comps[i]
    if U.index_prime:
        inv = psi.inverse
        if inv is None:
            inv = invert_family(psi)
        for (a, j), n in U.index_prime.items():
            images[n] = inv.image(a).comps[j]
    m = AlgMorphism(U.Z, psi.param, [images[n] for n in U.Z.names])
    return m


def mediation_identity(U, psi, m):
    """Verdict for (i_A (x) m) phi == psi on the generators of B."""
    vs = []
    for s in U.B.names:
        lhs = U.family.image(s)
        rhs = psi.image(s)
        for k in range(U.A.n):
            vs.append(psi.param.verdict(m(lhs.comps[k]) - rhs.comps[k]))
    return Verdict.combine(vs, psi.param.degree)


def map_functor(f, A, U_source=None, U_target=None, commutative=False):
    """M(f): M(B,A) -> M(B',A) for a morphism f: B -> B'."""
    if U_source is None:
        U_source = construct_map_algebra(f.source, A, commutative)
    if U_target is None:
        U_target = construct_map_algebra(f.target, A, commutative)
    fam = U_target.family
    images = [fam.evaluate(f(U_source.B.ring.gen(s))) for s in U_source.B.names]
    psi = Family(U_source.B, A, U_target.Z, images)
    return mediate(U_source, psi)


def trivial_family(B, A, morphisms, degree=DEFAULT_DEGREE):
    """The family b -> sum_j f_j(b) (x) e_j of finitely many morphisms.

    Each morphism is a mapping (or sequence) from B's generators to
    A-coordinate vectors.  One morphism gives parameter algebra K; m > 1
    gives K^m presented on its idempotents.
    """
    B = _as_presented(B, degree)
    F = A.field
    m = len(morphisms)
    if m == 0:
        raise ConstructionError("at least one morphism is required")
    tables = []
    for f in morphisms:
        if isinstance(f, dict):
            f = [f[s] for s in B.names]
        tables.append([tuple(F(c) for c in v) for v in f])
    if m == 1:
        C = base_algebra(F, degree)
        coeffs = [C.ring.one()]
    else:
        C = fr_to_presentation(k_power(m, F), degree)
        coeffs = C.ring.gens()
    images = []
    for si in range(len(B.names)):
        comps = []
        for i in range(A.n):
            c = C.ring.zero()
            for j in range(m):
                x = tables[j][si][i]
                if x != 0:
                    c = c + coeffs[j].scale(x)
            comps.append(c)
        images.append(TensorElement(A, comps))
    return Family(B, A, C, images)


# -- invertible families -------------------------------------------------------------------------

def verify_inverse(psi, phi):
    """Both composition identities of an inverse pair, reduced in the parameter."""
    C = psi.param
    vs = []
    for left, right in ((psi, phi), (phi, psi)):
        # (i (x) mu)(right o left) must be the identity family (x) 1
        prods = compose_and_multiply(left, right)
        for j, t in enumerate(prods):
            for k, c in enumerate(t.comps):
                want = C.ring.one() if j == k else C.ring.zero()
                vs.append(C.verdict(c - want))
    return Verdict.combine(vs, C.degree)


def invert_family(psi, degree=None):
    """Inverse of a family between finite-rank algebras with finite-dimensional parameter.

    The inverse coefficients are unknowns in C; the two composition
    identities are linear in them and solved exactly.
    """
    Bfr = getattr(psi.source, "fr", None)
    if Bfr is None:
        raise ConstructionError("inversion needs a finite-rank source presented on its basis")
    A = psi.target
    C = psi.param
    F = C.field
    words = C.basis_words()
    if words is None:
        raise ConstructionError("inversion needs a finite-dimensional parameter algebra")
    pos = {w: t for t, w in enumerate(words)}
    d = len(words)
    nA, nB = A.n, Bfr.n
    cbasis = [C.ring.monomial(w) for w in words]

    def coord(f):
        r = C.normal_form(f)
        v = [F.zero] * d
        for w, c in r.terms.items():
            if w not in pos:
                raise ConstructionError("parameter algebra basis is incomplete")
            v[pos[w]] = c
        return v

    def col(i, k, b):
        return (i * nB + k) * d + b

    ncols = nA * nB * d
    rows, rhs = [], []
    one = coord(C.ring.one())
    z = [[psi.images[j].comps[i] for i in range(nA)] for j in range(nB)]
    for j in range(nB):
        for k in range(nB):
            block = [[F.zero] * ncols for _ in range(d)]
            for i in range(nA):
                for b in range(d):
                    v = coord(cbasis[b] * z[j][i])
                    for r in range(d):
                        block[r][col(i, k, b)] = v[r]
            rows.extend(block)
            rhs.extend(one if j == k else [F.zero] * d)
    for i in range(nA):
        for l in range(nA):
            block = [[F.zero] * ncols for _ in range(d)]
            for j in range(nB):
                for b in range(d):
                    v = coord(z[j][l] * cbasis[b])
                    for r in range(d):
                        block[r][col(i, j, b)] = v[r]
            rows.extend(block)
            rhs.extend(one if i == l else [F.zero] * d)
    x, _ = solve(rows, rhs, F)
    if x is None:
        raise ConstructionError("family is not invertible")
    Ap = fr_to_presentation(A, degree or C.degree)
    images = []
    for i in range(nA):
        comps = []
        for k in range(nB):
            c = C.ring.zero()
            for b in range(d):
                if x[col(i, k, b)] != 0:
                    c = c + cbasis[b].scale(x[col(i, k, b)])
            comps.append(c)
        images.append(TensorElement(Bfr, comps))
    inv = Family(Ap, Bfr, C, images)
    v = inv.check()
    if not v.zero:
        raise ConstructionError(f"linear inverse is not a family: {v.note}")
    return inv


def construct_iso_algebra(B, A, commutative=False, degree=DEFAULT_DEGREE):
    """The universal invertible family B -> A (x) I(B,A), with its inverse."""
    if not isinstance(B, FrAlgebra) or not isinstance(A, FrAlgebra):
        raise ConstructionError("both algebras must be finite-rank")
    B.field.check_same(A.field)
    F = A.field
    Bp = fr_to_presentation(B, degree)
    Ap = fr_to_presentation(A, degree)
    names, index, index_prime = [], {}, {}
    zrows, zprows = [], []
    for j, b in enumerate(B.labels):
        row = []
        for i in range(A.n):
            n = zname(b, i)
            names.append(n)
            index[(b, i)] = n
            row.append(n)
        zrows.append(row)
    for i, a in enumerate(A.labels):
        row = []
        for j in range(B.n):
            n = zpname(a, j)
            names.append(n)
            index_prime[(a, j)] = n
            row.append(n)
        zprows.append(row)
    ring = FreeAlgebra(names, F)
    gens = {n: ring.gen(n) for n in names}
    images = _generator_images(A, ring, zrows)
    inv_images = _generator_images(B, ring, zprows)
    rels = []
    for p in Bp.presentation.effective_relations():
        rels.extend(eval_in_tensor(p, images, A, ring).comps)
    for p in Ap.presentation.effective_relations():
        rels.extend(eval_in_tensor(p, inv_images, B, ring).comps)
    one = ring.one()
    for j in range(B.n):
        for k in range(B.n):
            r = ring.zero()
            for i in range(A.n):
                r = r + gens[zprows[i][k]] * gens[zrows[j][i]]
            rels.append(r - one if j == k else r)
    for i in range(A.n):
        for l in range(A.n):
            r = ring.zero()
            for j in range(B.n):
                r = r + gens[zrows[j][l]] * gens[zprows[i][j]]
            rels.append(r - one if i == l else r)
    Z = FpAlgebra(Presentation(names, _clean_relations(rels), commutative, F), degree)
    fam = Family(Bp, A, Z, images)
    inv = Family(Ap, B, Z, inv_images)
    fam.inverse = inv
    return UniversalFamily(fam, "iso", index, index_prime, False, inv)


# -- constrained classes ------------------------------------------------------------------------------

def _spanning_words(B, bound):
    """Normal words of B up to ``bound`` and whether they span B."""
    words = B.normal_words(bound)
    basis = B.basis_words()
    exact = basis is not None and all(len(w) <= bound for w in basis)
    return words, exact


def _tensor_split(BB, nB, word):
    left = tuple(g for g in word if g < nB)
    right = tuple(g - nB for g in word if g >= nB)
    return left, right


def _word_value(fam, word, cache):
    if word not in cache:
        cache[word] = fam.evaluate(fam.source.ring.monomial(word))
    return cache[word]


def _multiplicative_relations(B, A, spec, fam, ring, words):
    F = A.field
    n = A.n
    BB = tensor_algebra(B, B)
    delta = [BB.parse(d) if isinstance(d, str) else d for d in spec.delta]
    if len(delta) != len(B.names):
        raise ValidationError("Delta needs one image per generator of B")
    dmor = AlgMorphism(B, BB, delta)
    v = dmor.check()
    if not v.zero:
        raise ValidationError(f"Delta is not a morphism: {v.note}")
    gamma = [[[F(c) for c in row] for row in mat] for mat in spec.gamma]
    if len(gamma) != n:
        raise ValidationError("Gamma tensor has wrong size")
    nB = len(B.names)
    cache = {}
    rels = []
    for w in words:
        psi_w = _word_value(fam, w, cache)
        dw = BB.normal_form(dmor(B.ring.monomial(w)))
        rhs = [[ring.zero() for _ in range(n)] for _ in range(n)]
        for word, c in dw.terms.items():
            u, v = _tensor_split(BB, nB, word)
            pu = _word_value(fam, u, cache)
            pv = _word_value(fam, v, cache)
            for j in range(n):
                if pu.comps[j].is_zero():
                    continue
                for k in range(n):
                    if not pv.comps[k].is_zero():
                        rhs[j][k] = rhs[j][k] + (pu.comps[j] * pv.comps[k]).scale(c)
        for j in range(n):
            for k in range(n):
                lhs = ring.zero()
                for i in range(n):
                    if gamma[i][j][k] != 0:
                        lhs = lhs + psi_w.comps[i].scale(gamma[i][j][k])
                rels.append(lhs - rhs[j][k])
    return rels


def construct_constrained(B, A, spec, commutative=False, spanning_bound=DEFAULT_SPANNING_BOUND,
                          degree=DEFAULT_DEGREE):
    """Universal family of the constrained class described by ``spec``."""
    Bfr = B if isinstance(B, FrAlgebra) else getattr(B, "fr", None)
    B = _as_presented(B, degree)
    B.field.check_same(A.field)
    F = A.field
    names, index, ring, images, rels = _map_data(B, A, degree)
    fam = Family(B, A, FpAlgebra(Presentation(names, (), False, F), degree), images)
    truncated = False
    n = A.n
    if isinstance(spec, FixedPoints):
        if spec.alpha.target_rank != n or spec.alpha.source_rank != len(spec.beta):
            raise ValidationError("alpha must map M into A")
        for m, b in enumerate(spec.beta):
            if isinstance(b, str):
                b = B.parse(b)
            elif not isinstance(b, NcPoly):
                if Bfr is None:
                    raise ValidationError("coordinate vectors need a finite-rank B")
                b = vector_to_poly(Bfr, B.ring, [F(c) for c in b])
            t = fam.evaluate(b)
            am = spec.alpha.images[m]
            for k in range(n):
                rels.append(t.comps[k] - ring.const(am[k]))
    elif isinstance(spec, Cofixed):
        if Bfr is None:
            raise ValidationError("the cofixed class needs a finite-rank B")
        if spec.alpha.source_rank != n or spec.beta.source_rank != Bfr.n:
            raise ValidationError("alpha' must be defined on A and beta' on B")
        if spec.alpha.target_rank != spec.beta.target_rank:
            raise ValidationError("alpha' and beta' must share the target module")
        for j in range(Bfr.n):
            t = images[j]
            for mm in range(spec.alpha.target_rank):
                r = ring.const(F.neg(F(spec.beta.images[j][mm])))
                for i in range(n):
                    c = F(spec.alpha.images[i][mm])
                    if c != 0:
                        r = r + t.comps[i].scale(c)
                rels.append(r)
    elif isinstance(spec, Multiplicative):
        if commutative and A.is_commutative():
            words = [(g,) for g in range(len(B.names))]
        else:
            words, exact = _spanning_words(B, spanning_bound)
            truncated = not exact
        rels.extend(_multiplicative_relations(B, A, spec, fam, ring, words))
    elif isinstance(spec, Equivariant):
        if Bfr is None:
            raise ValidationError("the equivariant class needs a finite-rank B")
        N = spec.rank
        lam = [[[F(c) for c in r] for r in m] for m in spec.lam]
        theta = [[[F(c) for c in r] for r in m] for m in spec.theta]
        if len(lam) != Bfr.n or len(theta) != n:
            raise ValidationError("Lambda must be given on B and Theta on A")
        for j in range(Bfr.n):
            for k in range(n):
                for t in range(N):
                    r = ring.zero()
                    for i in range(n):
                        if theta[i][k][t] != 0:
                            r = r + images[j].comps[i].scale(theta[i][k][t])
                    for j2 in range(Bfr.n):
                        if lam[j][j2][t] != 0:
                            r = r - images[j2].comps[k].scale(lam[j][j2][t])
                    rels.append(r)
    else:
        raise ValidationError(f"unknown constraint {spec!r}")
    Z = FpAlgebra(Presentation(names, _clean_relations(rels), commutative, F), degree)
    fam = Family(B, A, Z, _retarget(images, A, Z))
    return UniversalFamily(fam, "constrained", index, truncated=truncated, extra={"spec": spec})


# -- Pontryagin dual ---------------------------------------------------------------------------------

def k_dagger(field, degree=DEFAULT_DEGREE):
    """K^c[x,y]/(xy - 1) with its Hopf data (generator images)."""
    K = make_algebra(["x", "y"], ["x*y - 1"], True, field, degree)
    hopf = {
        "delta": ("L.x*R.x", "L.y*R.y"),
        "counit": (1, 1),
        "antipode": ("y", "x"),
    }
    return K, hopf


def pontryagin_dual(H, commutative=True, spanning_bound=DEFAULT_SPANNING_BOUND, degree=DEFAULT_DEGREE):
    """Universal family of group-like families K-dagger -> A (x) P."""
    if not isinstance(H, FrHopf):
        raise ConstructionError("a finite-rank Hopf algebra is required")
    if not H.base.is_commutative():
        raise ConstructionError("the Pontryagin dual needs a commutative base algebra")
    K, hopf = k_dagger(H.field, degree)
    spec = Multiplicative(hopf["delta"], H.comult)
    U = construct_constrained(K, H.base, spec, commutative, spanning_bound, degree)
    U.kind = "pontryagin"
    U.extra.update({"hopf": H, "source_hopf": hopf})
    return U


# -- Galois algebra ------------------------------------------------------------------------------------

def check_subalgebra(A, vectors):
    F = A.field
    vecs = [tuple(F(c) for c in v) for v in vectors]
    if any(len(v) != A.n for v in vecs):
        raise ValidationError("subalgebra vectors have the wrong length")
    if not in_span(vecs, A.unit, F):
        raise ValidationError("subalgebra does not contain the unit")
    for u in vecs:
        for v in vecs:
            if not in_span(vecs, A.mul(u, v), F):
                raise ValidationError("span is not closed under multiplication")
    return vecs


def galois_algebra(A, sub_vectors, degree=DEFAULT_DEGREE):
    """Commutative universal family of endomorphisms of A fixing the subalgebra."""
    vecs = check_subalgebra(A, sub_vectors)
    spec = FixedPoints(tuple(vecs), ModuleMap.from_rows(vecs, A.n))
    U = construct_constrained(A, A, spec, True, degree=degree)
    U.kind = "galois"
    U.extra["sub"] = vecs
    return U


# -- isomorphisms between iterated constructions ----------------------------------------------------

def _identity_verdict(m):
    return m.is_identity()


def exp_law_iso(B, A1, A2, degree=DEFAULT_DEGREE):
    """psi: M(B, A1 (x) A2) -> M(M(B,A1), A2) and its inverse psi'.

    Returns (psi, psi', verdict) where the verdict covers both
    well-definedness checks and both composites being identities.
    """
    B = _as_presented(B, degree)
    A12 = tensor_fr(A1, A2)
    U12 = construct_map_algebra(B, A12, degree=degree)
    U1 = construct_map_algebra(B, A1, degree=degree)
    U2 = construct_map_algebra(U1.Z, A2, degree=degree)
    n2 = A2.n
    # (i_{A1} (x) phi2) phi1 read as a family into A12 (x) Z2
    chi_images = []
    for s in B.names:
        comps = []
        for i1 in range(A1.n):
            t = U2.family.image(U1.index[(s, i1)])
            comps.extend(t.comps)
        chi_images.append(TensorElement(A12, comps))
    psi = mediate(U12, Family(B, A12, U2.Z, chi_images))
    # Z1 -> A2 (x) Z12: z.s.i1 -> sum_i2 a_i2 (x) z.s.(i1, i2)
    g12 = U12.Z.ring
    rho_images = []
    for name in U1.Z.names:
        s, i1 = next(k for k, v in U1.index.items() if v == name)
        rho_images.append(TensorElement(A2, [
            g12.gen(U12.index[(s, i1 * n2 + i2)]) for i2 in range(n2)
        ]))
    psi_p = mediate(U2, Family(U1.Z, A2, U12.Z, rho_images))
    v = Verdict.combine([
        psi.check(), psi_p.check(),
        _identity_verdict(psi_p.compose(psi)), _identity_verdict(psi.compose(psi_p)),
    ], degree)
    return psi, psi_p, v


def tensor_preserve_iso(B1, B2, A, degree=DEFAULT_DEGREE):
    """f: M^c(B1,A) (x) M^c(B2,A) -> M^c(B1 (x) B2, A) and its inverse g."""
    if not A.is_commutative():
        raise ConstructionError("tensor preservation needs a commutative A")
    B1 = _as_presented(B1, degree)
    B2 = _as_presented(B2, degree)
    U1 = construct_map_algebra(B1, A, True, degree)
    U2 = construct_map_algebra(B2, A, True, degree)
    BB = tensor_algebra(B1, B2)
    UD = construct_map_algebra(BB, A, True, degree)
    CC = tensor_algebra(U1.Z, U2.Z)
    D = UD.Z
    # f from the coproduct property: C_k -> D mediating B_k -> B1 (x) B2 -> A (x) D
    fimg = []
    for prefix, U in (("L.", U1), ("R.", U2)):
        fam = Family(U.B, A, D, [UD.family.image(prefix + s) for s in U.B.names])
        m = mediate(U, fam)
        fimg.extend(m.images)
    f = AlgMorphism(CC, D, fimg)
    # g mediating B1 (x) B2 -> A (x) (C1 (x) C2)
    cring = CC.ring
    gimages = []
    for name in BB.names:
        prefix, s = name[:2], name[2:]
        U = U1 if prefix == "L." else U2
        gimages.append(TensorElement(A, [cring.gen(prefix + U.index[(s, i)]) for i in range(A.n)]))
    g = mediate(UD, Family(BB, A, CC, gimages))
    v = Verdict.combine([
        f.check(), g.check(), _identity_verdict(g.compose(f)), _identity_verdict(f.compose(g)),
    ], degree)
    return f, g, v


def opposite_iso(B, A, degree=DEFAULT_DEGREE):
    """Generator-identity maps between M(B^op, A) and M(B, A)^op."""
    if not A.is_commutative():
        raise ConstructionError("the opposite isomorphism needs a commutative A")
    B = _as_presented(B, degree)
    left = construct_map_algebra(opposite(B), A, degree=degree).Z
    right = opposite(construct_map_algebra(B, A, degree=degree).Z)
    f = AlgMorphism(left, right, right.ring.gens())
    g = AlgMorphism(right, left, left.ring.gens())
    return f, g, Verdict.combine([f.check(), g.check()], degree)
