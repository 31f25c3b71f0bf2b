"""Induced comultiplications, counits, antipodes and coactions on universal
algebras, and a generator-level axiom verifier.

Conventions: a comultiplication on C is an :class:`AlgMorphism` into
``tensor_algebra(C, C)`` (legs ``L.``/``R.``); the counit is a scalar per
generator; the antipode is an anti-morphism C -> C.  Coactions are left
coactions H -> C (x) H with the Hopf leg on the left.
"""

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .errors import ConstructionError, IncompatibleContext, ValidationError
from .fpalg import AlgMorphism, FpAlgebra, base_algebra, compose_families, tensor_algebra
from .fralg import FrHopf, fr_to_presentation
from .mapuniv import construct_map_algebra
from .ncgb import Verdict
from .ncpoly import FreeAlgebra, TensorElement, eval_in_tensor

AXIOMS = ("coassociativity", "counit_left", "counit_right", "antipode_left", "antipode_right")


def _relabel(f, target, rename):
    """Move ``f`` into ``target`` renaming each generator name through ``rename``."""
    names = f.ring.names
    return f.rename(target.ring, [target.ring.index[rename(n)] for n in names])


def _substitute(f, target, images):
    """Morphic substitution of generator names -> polynomials over ``target``."""
    return f.subs([images[n] for n in f.ring.names], target.ring)


def _swap(name):
    if name.startswith("L."):
        return "R." + name[2:]
    return "L." + name[2:]


@dataclass
class BialgebraData:
    carrier: FpAlgebra
    comult: AlgMorphism
    counit: tuple
    antipode: Optional[AlgMorphism] = None
    tensor: Optional[FpAlgebra] = None
    verdicts: dict = dc_field(default_factory=dict)

    def counit_of(self, f):
        """The counit applied to a polynomial over the carrier."""
        F = self.carrier.field
        base = FreeAlgebra((), F)
        v = f.subs([base.const(c) for c in self.counit], base)
        return v.constant()

    def comult_of(self, name):
        return self.comult.image_of(name)

    def to_json(self):
        d = {
            "generators": list(self.carrier.names),
            "comult": {n: str(self.tensor.normal_form(im)) for n, im in zip(self.carrier.names, self.comult.images)},
            "counit": {n: str(self.carrier.field.signed(c)) for n, c in zip(self.carrier.names, self.counit)},
        }
        if self.antipode is not None:
            d["antipode"] = {n: str(self.carrier.normal_form(im))
                             for n, im in zip(self.carrier.names, self.antipode.images)}
        if self.verdicts:
            d["verdicts"] = verdicts_to_json(self.verdicts)
        return d


@dataclass
class CoactionData:
    comodule: FpAlgebra
    hopf: BialgebraData
    coaction: AlgMorphism
    side: str = "left"
    verdicts: dict = dc_field(default_factory=dict)


def make_bialgebra(C, delta, counit, antipode=None):
    """BialgebraData from generator images.

    ``delta`` polynomials (or strings) over ``tensor_algebra(C, C)``;
    ``counit`` scalars; ``antipode`` polynomials over C.
    """
    CC = tensor_algebra(C, C)
    F = C.field
    comult = AlgMorphism(C, CC, list(delta))
    S = AlgMorphism(C, C, list(antipode), anti=True) if antipode is not None else None
    return BialgebraData(C, comult, tuple(F(c) for c in counit), S, CC)


def hopf_data_from_fr(H, degree=None):
    """The Hopf structure of a finite-rank Hopf algebra on its basis presentation."""
    C = fr_to_presentation(H.base) if degree is None else fr_to_presentation(H.base, degree)
    CC = tensor_algebra(C, C)
    labels = H.base.labels
    delta = []
    for i in range(H.n):
        f = CC.ring.zero()
        for j in range(H.n):
            for k in range(H.n):
                c = H.comult[i][j][k]
                if c != 0:
                    f = f + (CC.gen("L." + labels[j]) * CC.gen("R." + labels[k])).scale(c)
        delta.append(f)
    anti = None
    if H.antipode is not None:
        anti = []
        for i in range(H.n):
            f = C.ring.zero()
            for j, c in enumerate(H.antipode[i]):
                if c != 0:
                    f = f + C.gen(labels[j]).scale(c)
            anti.append(f)
    return make_bialgebra(C, delta, H.counit, anti)


# -- verification -------------------------------------------------------------------------

def _triple(C):
    return tensor_algebra(tensor_algebra(C, C), C)


def _coassoc(data, CCC):
    C = data.carrier
    left_img, right_img = {}, {}
    for n in C.names:
        d = data.comult.image_of(n)
        left_img["L." + n] = _relabel(d, CCC, lambda m: "L." + m)
        left_img["R." + n] = CCC.gen("R." + n)
        right_img["L." + n] = CCC.gen("L.L." + n)
        right_img["R." + n] = _relabel(d, CCC, lambda m: "L.R." + m[2:] if m.startswith("L.") else m)
    out = {}
    for n in C.names:
        d = data.comult.image_of(n)
        out[n] = CCC.verdict(_substitute(d, CCC, left_img) - _substitute(d, CCC, right_img))
    return out


def _counit_side(data, side):
    C = data.carrier
    out = {}
    for n in C.names:
        d = data.comult.image_of(n)
        imgs = {}
        for m in C.names:
            scal = C.ring.const(data.counit[C.ring.index[m]])
            g = C.gen(m)
            if side == "left":
                imgs["L." + m], imgs["R." + m] = scal, g
            else:
                imgs["L." + m], imgs["R." + m] = g, scal
        out[n] = C.verdict(_substitute(d, C, imgs) - C.gen(n))
    return out


def _split_apply(data, f, side):
    """mu (S (x) i) or mu (i (x) S) applied to f over C (x) C, term by term."""
    C = data.carrier
    CC = data.tensor
    nf = CC.normal_form(f)
    n = len(C.names)
    S = data.antipode
    acc = C.ring.zero()
    for w, c in nf.terms.items():
        u = C.ring.monomial(tuple(g for g in w if g < n))
        v = C.ring.monomial(tuple(g - n for g in w if g >= n))
        if side == "left":
            acc = acc + (S(u) * v).scale(c)
        else:
            acc = acc + (u * S(v)).scale(c)
    return acc


def _antipode_side(data, side):
    C = data.carrier
    out = {}
    for n in C.names:
        lhs = _split_apply(data, data.comult.image_of(n), side)
        out[n] = C.verdict(lhs - C.ring.const(data.counit[C.ring.index[n]]))
    return out


def _counit_morphism(data):
    C = data.carrier
    vs = []
    for r in C.presentation.effective_relations():
        c = data.counit_of(r)
        vs.append(Verdict(c == 0, True, C.degree, "" if c == 0 else f"counit does not kill {r}"))
    return Verdict.combine(vs, C.degree)


def verify_bialgebra(data):
    """Per-axiom, per-generator verdicts; also records morphism checks."""
    C = data.carrier
    v = {
        "comult_morphism": data.comult.check(),
        "counit_morphism": _counit_morphism(data),
        "coassociativity": _coassoc(data, _triple(C)),
        "counit_left": _counit_side(data, "left"),
        "counit_right": _counit_side(data, "right"),
    }
    if data.antipode is not None:
        v["antipode_morphism"] = data.antipode.check()
        v["antipode_left"] = _antipode_side(data, "left")
        v["antipode_right"] = _antipode_side(data, "right")
    data.verdicts = v
    return v


def verify_coaction(data):
    """Left-coaction axioms (Delta (x) i) rho = (i (x) rho) rho and (eps (x) i) rho = i."""
    hopf = data.hopf
    C, H = hopf.carrier, data.comodule
    rho = data.coaction
    CCH = tensor_algebra(tensor_algebra(C, C), H)
    lhs_img, rhs_img = {}, {}
    for n in C.names:
        lhs_img["L." + n] = _relabel(hopf.comult.image_of(n), CCH, lambda m: "L." + m)
        rhs_img["L." + n] = CCH.gen("L.L." + n)
    for n in H.names:
        lhs_img["R." + n] = CCH.gen("R." + n)
        rhs_img["R." + n] = _relabel(rho.image_of(n), CCH,
                                     lambda m: "L.R." + m[2:] if m.startswith("L.") else m)
    coassoc, counit = {}, {}
    for n in H.names:
        r = rho.image_of(n)
        coassoc[n] = CCH.verdict(_substitute(r, CCH, lhs_img) - _substitute(r, CCH, rhs_img))
        imgs = {"L." + m: H.ring.const(hopf.counit[C.ring.index[m]]) for m in C.names}
        imgs.update({"R." + m: H.gen(m) for m in H.names})
        counit[n] = H.verdict(_substitute(r, H, imgs) - H.gen(n))
    v = {"coaction_morphism": rho.check(), "coassociativity": coassoc, "counit": counit}
    data.verdicts = v
    return v


def verify_axioms(data):
    if isinstance(data, CoactionData):
        return verify_coaction(data)
    return verify_bialgebra(data)


def summarize(verdicts):
    """One Verdict for the whole record, and the first failing (axiom, generator)."""
    flat = []
    failing = None
    for ax, v in verdicts.items():
        items = v.items() if isinstance(v, dict) else [(None, v)]
        for g, vv in items:
            flat.append(vv)
            if not vv.zero and failing is None:
                failing = (ax, g, vv.note)
    return Verdict.combine(flat), failing


def verdicts_to_json(verdicts):
    out = {}
    for ax, v in verdicts.items():
        if isinstance(v, dict):
            out[ax] = {g: vv.to_json() for g, vv in v.items()}
        else:
            out[ax] = v.to_json()
    return out


# -- induced structures -------------------------------------------------------------------

def _parse_images(alg, images):
    return [alg.parse(x) if isinstance(x, str) else x for x in images]


def induce_bialgebra(U, delta, counit, antipode=None):
    """Structure induced on Z = M(B,A) by bialgebra data on B, A commutative.

    ``delta`` gives Delta on B's generators over ``tensor_algebra(B, B)``,
    ``counit`` scalars, ``antipode`` polynomials over B (optional).
    """
    A = U.A
    if not A.is_commutative():
        raise ConstructionError("induced comultiplication needs a commutative A")
    B, Z = U.B, U.Z
    BB = tensor_algebra(B, B)
    delta = _parse_images(BB, delta)
    dB = AlgMorphism(B, BB, delta)
    v = dB.check()
    if not v.zero:
        raise ValidationError(f"Delta is not a morphism on B: {v.note}")
    ZZ = tensor_algebra(Z, Z)
    imgs = []
    for prefix in ("L.", "R."):
        for s in B.names:
            imgs.append(TensorElement(A, [ZZ.gen(prefix + U.index[(s, i)]) for i in range(A.n)]))
    comult = {}
    for s, d in zip(B.names, delta):
        t = eval_in_tensor(d, imgs, A, ZZ.ring)
        for k in range(A.n):
            comult[U.index[(s, k)]] = ZZ.normal_form(t.comps[k])
    F = Z.field
    eps = {}
    for s, e in zip(B.names, counit):
        for k in range(A.n):
            eps[U.index[(s, k)]] = F.mul(F(e), A.unit[k])
    anti = None
    if antipode is not None:
        antipode = _parse_images(B, antipode)
        anti = {}
        for s, a in zip(B.names, antipode):
            t = U.family.evaluate(a)
            for k in range(A.n):
                anti[U.index[(s, k)]] = Z.normal_form(t.comps[k])
    names = Z.names
    data = BialgebraData(
        Z,
        AlgMorphism(Z, ZZ, [comult[n] for n in names]),
        tuple(eps[n] for n in names),
        AlgMorphism(Z, Z, [anti[n] for n in names], anti=True) if anti is not None else None,
        ZZ,
    )
    data.source = {"delta": delta, "counit": tuple(counit), "antipode": antipode}
    return data


def composition_bialgebra(U):
    """Gamma, epsilon on M(A,A) (or a quotient built on A's basis presentation)."""
    A = U.A
    if tuple(U.B.names) != tuple(A.labels):
        raise ConstructionError("composition needs the family of A into itself on A's basis")
    Z = U.Z
    comp = compose_families(U.family, U.family)
    ZZ = comp.param
    F = Z.field
    gamma, eps = {}, {}
    for j, b in enumerate(A.labels):
        for k in range(A.n):
            n = U.index[(b, k)]
            gamma[n] = ZZ.normal_form(comp.images[j].comps[k])
            eps[n] = F.one if j == k else F.zero
    names = Z.names
    # compose_families' parameter has the same generator names as tensor_algebra(Z, Z)
    ZZ = tensor_algebra(Z, Z)
    comult = AlgMorphism(Z, ZZ, [gamma[n].rename(ZZ.ring, list(range(ZZ.ring.ngens))) for n in names])
    return BialgebraData(Z, comult, tuple(eps[n] for n in names), None, ZZ)


def iso_hopf(U):
    """Hopf structure on I^c(A,A): matrix comultiplication on z and z'."""
    if U.kind != "iso" or U.inverse is None:
        raise ConstructionError("an iso-kind universal family is required")
    A = U.A
    if tuple(U.B.names) != tuple(A.labels) or U.inverse.target.n != A.n:
        raise ConstructionError("isoHopf needs B = A")
    Z = U.Z
    ZZ = tensor_algebra(Z, Z)
    F = Z.field
    L = lambda n: ZZ.gen("L." + n)
    R = lambda n: ZZ.gen("R." + n)
    labels = A.labels
    z = lambda j, i: U.index[(labels[j], i)]
    zp = lambda i, j: U.index_prime[(labels[i], j)]
    n = A.n
    lam, eps, S = {}, {}, {}
    for j in range(n):
        for k in range(n):
            lam[z(j, k)] = sum((L(z(i, k)) * R(z(j, i)) for i in range(n)), ZZ.ring.zero())
            lam[zp(j, k)] = sum((L(zp(j, i)) * R(zp(i, k)) for i in range(n)), ZZ.ring.zero())
            eps[z(j, k)] = eps[zp(j, k)] = F.one if j == k else F.zero
            S[z(j, k)] = Z.gen(zp(j, k))
            S[zp(j, k)] = Z.gen(z(j, k))
    names = Z.names
    return BialgebraData(
        Z,
        AlgMorphism(Z, ZZ, [lam[m] for m in names]),
        tuple(eps[m] for m in names),
        AlgMorphism(Z, Z, [S[m] for m in names], anti=True),
        ZZ,
    )


def gauge_coaction(U_C, hopf_B, V, rho, A=None, U_H=None):
    """rho-bar: H = M(V,A) -> C (x) H induced by a left coaction rho: V -> B (x) V.

    ``U_C`` is the universal family of B; ``hopf_B`` a dict with keys delta,
    counit, antipode (images on B); ``rho`` images over ``tensor_algebra(B, V)``.
    """
    A = A or U_C.A
    if not A.is_commutative():
        raise ConstructionError("gauge coaction needs a commutative A")
    B = U_C.B
    BV = tensor_algebra(B, V)
    rho = _parse_images(BV, rho)
    rmor = AlgMorphism(V, BV, rho)
    if not rmor.check().zero:
        raise ValidationError("rho is not a morphism")
    _check_input_coaction(B, V, hopf_B, rmor)
    data = induce_bialgebra(U_C, hopf_B["delta"], hopf_B["counit"], hopf_B.get("antipode"))
    if U_H is None:
        U_H = construct_map_algebra(V, A, U_C.Z.commutative, U_C.Z.degree)
    C, H = U_C.Z, U_H.Z
    CH = tensor_algebra(C, H)
    imgs = [TensorElement(A, [CH.gen("L." + U_C.index[(s, i)]) for i in range(A.n)]) for s in B.names]
    imgs += [TensorElement(A, [CH.gen("R." + U_H.index[(v, i)]) for i in range(A.n)]) for v in V.names]
    out = {}
    for v, r in zip(V.names, rho):
        t = eval_in_tensor(r, imgs, A, CH.ring)
        for k in range(A.n):
            out[U_H.index[(v, k)]] = CH.normal_form(t.comps[k])
    coaction = AlgMorphism(H, CH, [out[n] for n in H.names])
    return CoactionData(H, data, coaction)


def _check_input_coaction(B, V, hopf_B, rmor):
    """(i_B (x) rho) rho = (Delta (x) i_V) rho on V's generators."""
    BBV = tensor_algebra(tensor_algebra(B, B), V)
    BB = tensor_algebra(B, B)
    delta = _parse_images(BB, hopf_B["delta"])
    lhs_img, rhs_img = {}, {}
    for s, d in zip(B.names, delta):
        lhs_img["L." + s] = BBV.gen("L.L." + s)
        rhs_img["L." + s] = _relabel(d, BBV, lambda m: "L." + m)
    for v in V.names:
        lhs_img["R." + v] = _relabel(rmor.image_of(v), BBV,
                                     lambda m: "L.R." + m[2:] if m.startswith("L.") else m)
        rhs_img["R." + v] = BBV.gen("R." + v)
    for v in V.names:
        r = rmor.image_of(v)
        ver = BBV.verdict(_substitute(r, BBV, lhs_img) - _substitute(r, BBV, rhs_img))
        if not ver.zero:
            raise ValidationError(f"rho is not a coaction on {v}: {ver.note}")


# -- characters and morphisms of bialgebras ----------------------------------------------

def convolve(data, chi1, chi2):
    """(chi1 * chi2)(g) = (chi1 (x) chi2) Delta(g), characters as name -> scalar dicts."""
    C = data.carrier
    F = C.field
    base = FreeAlgebra((), F)
    imgs = [base.const(chi1[n]) for n in C.names] + [base.const(chi2[n]) for n in C.names]
    return {n: F(data.comult.image_of(n).subs(imgs, base).constant()) for n in C.names}


def counit_character(data):
    return dict(zip(data.carrier.names, data.counit))


def character_table(data, chars):
    """Cayley table of the convolution product on ``chars`` (None if not closed)."""
    F = data.carrier.field
    keys = [tuple(F(c[n]) for n in data.carrier.names) for c in chars]
    pos = {k: i for i, k in enumerate(keys)}
    table = []
    for a in chars:
        row = []
        for b in chars:
            c = convolve(data, a, b)
            k = tuple(c[n] for n in data.carrier.names)
            if k not in pos:
                return None
            row.append(pos[k])
        table.append(row)
    return table


def cocommutativity(data):
    """Per-generator verdicts for flip o Delta == Delta."""
    CC = data.tensor
    out = {}
    for n in data.carrier.names:
        d = data.comult.image_of(n)
        out[n] = CC.verdict(_relabel(d, CC, _swap) - d)
    return out


def check_bialgebra_morphism(psi, source, target):
    """Theta psi = (psi (x) psi) Gamma and eps_D psi = eps on generators."""
    if psi.source is not source.carrier or psi.target is not target.carrier:
        if psi.source.ring != source.carrier.ring or psi.target.ring != target.carrier.ring:
            raise IncompatibleContext("morphism does not connect the two bialgebras")
    DD = target.tensor
    imgs = {}
    for n, im in zip(psi.source.names, psi.images):
        imgs["L." + n] = _relabel(im, DD, lambda m: "L." + m)
        imgs["R." + n] = _relabel(im, DD, lambda m: "R." + m)
    comult, counit = {}, {}
    F = source.carrier.field
    for n, im in zip(psi.source.names, psi.images):
        lhs = target.comult(im)
        rhs = _substitute(source.comult.image_of(n), DD, imgs)
        comult[n] = DD.verdict(lhs - rhs)
        e = F.sub(target.counit_of(im), source.counit[source.carrier.ring.index[n]])
        counit[n] = Verdict(e == 0, True, target.carrier.degree)
    return {"comultiplicative": comult, "counital": counit}


def induced_abelianized(data):
    """The same generator images read in the abelianized carrier."""
    from .fpalg import abelianized

    C = abelianized(data.carrier)
    CC = tensor_algebra(C, C)
    comult = AlgMorphism(C, CC, [im.rename(CC.ring, list(range(CC.ring.ngens))) for im in data.comult.images])
    anti = None
    if data.antipode is not None:
        anti = AlgMorphism(C, C, list(data.antipode.images), anti=True)
    return BialgebraData(C, comult, data.counit, anti, CC)
