"""Finitely presented algebras, their morphisms, and families of morphisms."""

import threading

from .errors import IncompatibleContext, PresentationError
from .ncgb import DEFAULT_DEGREE, GroebnerData, Verdict, complete, interreduce
from .ncpoly import FreeAlgebra, NcPoly, TensorElement, commutator, eval_in_tensor, NAME_RE

RESERVED_PREFIXES = ("L.", "R.", "op.")


class Presentation:
    """Generators, relations, and a commutativity flag over one field."""

    def __init__(self, names, relations=(), commutative=False, field=None):
        names = tuple(names)
        seen = set()
        for n in names:
            if n in seen:
                raise PresentationError(f"duplicate generator name {n!r}")
            if not NAME_RE.fullmatch(n):
                raise PresentationError(f"invalid generator name {n!r}")
            seen.add(n)
        if field is None:
            raise PresentationError("a field is required")
        self.ring = FreeAlgebra(names, field)
        rels = []
        for r in relations:
            if isinstance(r, str):
                try:
                    r = self.ring.parse(r)
                except Exception as exc:
                    raise PresentationError(f"relation {r!r}: {exc}") from exc
            elif r.ring != self.ring:
                if r.ring.field != field or not set(r.ring.names) <= set(names):
                    raise PresentationError(f"relation {r} uses undeclared generators")
                r = r.rename(self.ring, [self.ring.index[n] for n in r.ring.names])
            if not r.is_zero():
                rels.append(r)
        self.relations = tuple(rels)
        self.commutative = bool(commutative)

    @property
    def names(self):
        return self.ring.names

    @property
    def field(self):
        return self.ring.field

    def commutators(self):
        g = self.ring.gens()
        return [commutator(g[j], g[i]) for i in range(len(g)) for j in range(i + 1, len(g))]

    def effective_relations(self):
        rels = list(self.relations)
        if self.commutative:
            rels.extend(self.commutators())
        return rels

    def canonical(self):
        """Monic, interreduced, deglex-sorted relations; same ideal."""
        return Presentation(self.names, interreduce(self.relations), self.commutative, self.field)

    def rename(self, names):
        ring = FreeAlgebra(names, self.field)
        idx = list(range(len(names)))
        return Presentation(names, [r.rename(ring, idx) for r in self.relations], self.commutative, self.field)

    def key(self):
        c = self.canonical()
        return (c.names, tuple(r.to_string() for r in c.relations), c.commutative, self.field)

    def same_as(self, other):
        return self.key() == other.key()

    def to_json(self):
        c = self.canonical()
        return {
            "generators": list(c.names),
            "relations": [r.to_string() for r in c.relations],
            "commutative": c.commutative,
            "field": self.field.descriptor(),
        }

    def __repr__(self):
        rels = ", ".join(str(r) for r in self.relations)
        flag = ", commutative" if self.commutative else ""
        return f"<{', '.join(self.names)} | {rels}{flag}>"


class FpAlgebra:
    """A presented algebra with a lazily built, memoized Groebner basis."""

    def __init__(self, presentation, degree=DEFAULT_DEGREE, gb=None):
        self.presentation = presentation
        self.degree = degree
        self._gb = gb
        self._lock = threading.Lock()

    @property
    def ring(self):
        return self.presentation.ring

    @property
    def field(self):
        return self.presentation.field

    @property
    def names(self):
        return self.presentation.names

    @property
    def commutative(self):
        return self.presentation.commutative

    @property
    def gb(self):
        if self._gb is None:
            with self._lock:
                if self._gb is None:
                    self._gb = complete(self.presentation.effective_relations(), self.degree, self.ring)
        return self._gb

    def gen(self, name):
        return self.ring.gen(name)

    def parse(self, text):
        return self.ring.parse(text)

    def normal_form(self, f):
        return self.gb.reduce(f)

    def verdict(self, f):
        return self.gb.verdict(f)

    def equal(self, f, g):
        return self.gb.verdict(f - g)

    def normal_words(self, max_degree):
        return self.gb.normal_words(max_degree)

    def basis_words(self, limit=64):
        """Finite normal-word basis, or None if the algebra looks infinite."""
        if not self.gb.complete:
            return None
        longest = max((len(w) for w in self.gb.lead_words), default=0)
        words = self.normal_words(max(longest, 1) + 1)
        top = max(len(w) for w in words)
        if top > longest or len(words) > limit:
            return None
        return words

    def with_degree(self, degree):
        return FpAlgebra(self.presentation, degree)

    def __repr__(self):
        return f"FpAlgebra{self.presentation!r}"


def make_algebra(names, relations=(), commutative=False, field=None, degree=DEFAULT_DEGREE):
    return FpAlgebra(Presentation(names, relations, commutative, field), degree)


def base_algebra(field, degree=DEFAULT_DEGREE):
    """The ground field as the algebra with no generators."""
    return make_algebra((), (), False, field, degree)


def normal_form_in_algebra(C, f):
    return C.normal_form(f)


# -- derived algebras ------------------------------------------------------------

def _prefixed(prefix, names):
    return [prefix + n for n in names]


def tensor_algebra(C1, C2, degree=None):
    """C1 (x) C2 with generators ``L.*`` and ``R.*`` and cross commutators.

    The union of the factors' Groebner bases with the cross commutators is
    again a Groebner basis (every R-letter sorts after every L-letter), so the
    basis is assembled instead of recomputed.
    """
    C1.field.check_same(C2.field)
    F = C1.field
    names = _prefixed("L.", C1.names) + _prefixed("R.", C2.names)
    ring = FreeAlgebra(names, F)
    n1 = len(C1.names)
    lmap = list(range(n1))
    rmap = list(range(n1, len(names)))
    rels = [r.rename(ring, lmap) for r in C1.presentation.effective_relations()]
    rels += [r.rename(ring, rmap) for r in C2.presentation.effective_relations()]
    g = ring.gens()
    cross = [commutator(g[j], g[i]) for i in lmap for j in rmap]
    pres = Presentation(names, rels + cross, C1.commutative and C2.commutative, F)
    deg = degree if degree is not None else max(C1.degree, C2.degree)
    g1, g2 = C1.gb, C2.gb
    basis = [b.rename(ring, lmap) for b in g1.basis] + [b.rename(ring, rmap) for b in g2.basis]
    basis += [c.monic() for c in cross]
    gb = GroebnerData(ring, basis, min(g1.degree, g2.degree), g1.complete and g2.complete)
    out = FpAlgebra(pres, deg, gb)
    out.factors = (C1, C2)
    return out


def free_product(C1, C2, degree=None):
    """Coproduct: disjoint generators and relations, no cross relations."""
    C1.field.check_same(C2.field)
    F = C1.field
    names = _prefixed("L.", C1.names) + _prefixed("R.", C2.names)
    ring = FreeAlgebra(names, F)
    n1 = len(C1.names)
    lmap = list(range(n1))
    rmap = list(range(n1, len(names)))
    rels = [r.rename(ring, lmap) for r in C1.presentation.effective_relations()]
    rels += [r.rename(ring, rmap) for r in C2.presentation.effective_relations()]
    deg = degree if degree is not None else max(C1.degree, C2.degree)
    g1, g2 = C1.gb, C2.gb
    basis = [b.rename(ring, lmap) for b in g1.basis] + [b.rename(ring, rmap) for b in g2.basis]
    gb = GroebnerData(ring, basis, min(g1.degree, g2.degree), g1.complete and g2.complete)
    return FpAlgebra(Presentation(names, rels, False, F), deg, gb)


def opposite(C):
    p = C.presentation
    return FpAlgebra(Presentation(p.names, [r.reversed() for r in p.relations], p.commutative, p.field), C.degree)


def abelianized(C):
    p = C.presentation
    return FpAlgebra(Presentation(p.names, p.relations, True, p.field), C.degree)


def derive_algebra(C, kind, other=None):
    if kind == "opposite":
        return opposite(C)
    if kind == "abelianized":
        return abelianized(C)
    if kind == "free_product":
        if other is None:
            raise ValueError("free product needs a second algebra")
        return free_product(C, other)
    raise ValueError(f"unknown derivation {kind!r}")


# -- morphisms ---------------------------------------------------------------------

class AlgMorphism:
    """Algebra morphism given by images of the source generators."""

    def __init__(self, source, target, images, anti=False):
        if len(images) != len(source.names):
            raise IncompatibleContext("one image per source generator required")
        imgs = []
        for im in images:
            if isinstance(im, str):
                im = target.parse(im)
            elif not isinstance(im, NcPoly):
                im = target.ring.const(im)
            if im.ring != target.ring:
                raise IncompatibleContext("image not in the target's free algebra")
            imgs.append(im)
        self.source = source
        self.target = target
        self.images = tuple(imgs)
        self.anti = anti
        self._checked = None

    @classmethod
    def identity(cls, C):
        return cls(C, C, C.ring.gens())

    def __call__(self, f):
        """Image of a source polynomial (not reduced)."""
        return f.subs(self.images, self.target.ring, reverse=self.anti)

    def image_of(self, name):
        return self.images[self.source.ring.index[name]]

    def check(self):
        """Zero verdict iff every source relation maps into the target ideal."""
        if self._checked is None:
            vs = []
            for r in self.source.presentation.effective_relations():
                v = self.target.verdict(self(r))
                if not v.zero:
                    v = Verdict(False, v.exact, v.degree, f"relation {r} maps to {v.note}")
                vs.append(v)
            self._checked = Verdict.combine(vs, self.target.degree)
        return self._checked

    def compose(self, other):
        """self o other."""
        return AlgMorphism(other.source, self.target, [self(im) for im in other.images],
                           anti=self.anti != other.anti)

    def is_identity(self):
        """Verdict that self sends every generator to itself (source == target)."""
        vs = [self.target.verdict(im - g) for im, g in zip(self.images, self.target.ring.gens())]
        return Verdict.combine(vs, self.target.degree)

    def to_json(self):
        return {
            "source": list(self.source.names),
            "target": list(self.target.names),
            "images": {n: str(self.target.normal_form(im)) for n, im in zip(self.source.names, self.images)},
            "checked": self.check().to_json(),
        }

    def __repr__(self):
        body = ", ".join(f"{n} -> {im}" for n, im in zip(self.source.names, self.images))
        return f"AlgMorphism({body})"


def check_morphism(f):
    return f.check()


# -- families ---------------------------------------------------------------------------

class Family:
    """A morphism B -> A (x) C given by A-coordinate vectors of C-elements."""

    def __init__(self, source, target, param, images, inverse=None):
        if len(images) != len(source.names):
            raise IncompatibleContext("one image per generator of B required")
        imgs = []
        for im in images:
            if not isinstance(im, TensorElement):
                im = TensorElement(target, [param.parse(c) if isinstance(c, str) else c for c in im])
            if im.algebra is not target and im.algebra.n != target.n:
                raise IncompatibleContext("image rank differs from rank of A")
            if im.ring != param.ring:
                raise IncompatibleContext("image components not in the parameter algebra")
            imgs.append(im)
        self.source = source
        self.target = target
        self.param = param
        self.images = tuple(imgs)
        self.inverse = inverse
        self._checked = None

    def evaluate(self, f):
        """psi(f) for a polynomial f over B's generators, as a TensorElement."""
        return eval_in_tensor(f, self.images, self.target, self.param.ring)

    def reduce(self, t):
        return t.map(self.param.normal_form)

    def check(self):
        if self._checked is None:
            vs = []
            for r in self.source.presentation.effective_relations():
                t = self.evaluate(r)
                for k, c in enumerate(t.comps):
                    v = self.param.verdict(c)
                    if not v.zero:
                        v = Verdict(False, v.exact, v.degree,
                                    f"relation {r}, component {self.target.labels[k]}: {v.note}")
                    vs.append(v)
            self._checked = Verdict.combine(vs, self.param.degree)
        return self._checked

    def image(self, name):
        return self.images[self.source.ring.index[name]]

    def __repr__(self):
        return f"Family({self.source.names} -> {self.target.labels} (x) {self.param.names})"


def compose_families(psi, phi):
    """phi o psi = (phi (x) i_{C'}) psi, with parameter algebra C (x) C'.

    ``psi`` maps B' into B (x) C' where B is finite-rank; ``phi`` is a family
    out of B presented on B's basis labels.
    """
    B = psi.target
    if tuple(phi.source.names) != tuple(B.labels):
        raise IncompatibleContext("phi must be defined on the basis of psi's target")
    psi.param.field.check_same(phi.param.field)
    CC = tensor_algebra(phi.param, psi.param)
    ring = CC.ring
    n1 = len(phi.param.names)
    lmap = list(range(n1))
    rmap = list(range(n1, n1 + len(psi.param.names)))
    A = phi.target
    phi_L = [[c.rename(ring, lmap) for c in im.comps] for im in phi.images]
    out = []
    for im in psi.images:
        acc = [ring.zero() for _ in range(A.n)]
        for j, cprime in enumerate(im.comps):
            if cprime.is_zero():
                continue
            r = cprime.rename(ring, rmap)
            for i in range(A.n):
                if not phi_L[j][i].is_zero():
                    acc[i] = acc[i] + phi_L[j][i] * r
        out.append(TensorElement(A, acc))
    return Family(psi.source, A, CC, out)


def compose_and_multiply(psi, phi):
    """(i_A (x) mu_C)(phi o psi) when psi and phi share the parameter algebra C.

    The phi-leg coefficient is multiplied on the left, matching mu_C applied
    to C (x) C in that order.
    """
    B = psi.target
    if tuple(phi.source.names) != tuple(B.labels):
        raise IncompatibleContext("phi must be defined on the basis of psi's target")
    if phi.param.ring != psi.param.ring:
        raise IncompatibleContext("families must share the parameter algebra")
    A = phi.target
    ring = psi.param.ring
    out = []
    for im in psi.images:
        acc = [ring.zero() for _ in range(A.n)]
        for j, cprime in enumerate(im.comps):
            if cprime.is_zero():
                continue
            for i in range(A.n):
                c = phi.images[j].comps[i]
                if not c.is_zero():
                    acc[i] = acc[i] + c * cprime
        out.append(TensorElement(A, [psi.param.normal_form(a) for a in acc]))
    return out
