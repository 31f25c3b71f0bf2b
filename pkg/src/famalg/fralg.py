"""Finite-rank algebras and Hopf algebras given by structure constants."""

from dataclasses import dataclass
from itertools import product

from .errors import AssociativityViolation, UnitViolation, ValidationError
from .fpalg import FpAlgebra, Presentation
from .ncgb import DEFAULT_DEGREE
from .ncpoly import NAME_RE

MAX_RANK = 64


class FrAlgebra:
    """Algebra with basis ``labels`` and a_i a_j = sum_k mult[i][j][k] a_k."""

    def __init__(self, labels, mult, unit, field, validate=True):
        labels = tuple(labels)
        n = len(labels)
        if n < 1 or n > MAX_RANK:
            raise ValidationError(f"rank must be in [1, {MAX_RANK}], got {n}")
        if len(set(labels)) != n:
            raise ValidationError("duplicate basis labels")
        for l in labels:
            if not NAME_RE.fullmatch(l):
                raise ValidationError(f"basis label {l!r} is not an identifier")
        if len(mult) != n or any(len(row) != n for row in mult):
            raise ValidationError("multiplication table must be n x n x n")
        self.labels = labels
        self.field = field
        self.mult = tuple(tuple(tuple(field(c) for c in cell) for cell in row) for row in mult)
        if any(len(cell) != n for row in self.mult for cell in row):
            raise ValidationError("multiplication table must be n x n x n")
        if len(unit) != n:
            raise ValidationError("unit vector has wrong length")
        self.unit = tuple(field(u) for u in unit)
        self.nonzero = [
            [[(k, c) for k, c in enumerate(self.mult[i][j]) if c != 0] for j in range(n)]
            for i in range(n)
        ]
        if validate:
            self.validate()

    @property
    def n(self):
        return len(self.labels)

    def basis_vector(self, i):
        F = self.field
        return tuple(F.one if k == i else F.zero for k in range(self.n))

    def one(self):
        return self.unit

    def zero(self):
        return tuple(self.field.zero for _ in range(self.n))

    def mul(self, u, v):
        F = self.field
        out = [F.zero] * self.n
        for i, a in enumerate(u):
            if a == 0:
                continue
            for j, b in enumerate(v):
                if b == 0:
                    continue
                ab = F.mul(a, b)
                for k, m in self.nonzero[i][j]:
                    out[k] = F.add(out[k], F.mul(ab, m))
        return tuple(out)

    def add(self, u, v):
        F = self.field
        return tuple(F.add(a, b) for a, b in zip(u, v))

    def scale(self, c, u):
        F = self.field
        return tuple(F.mul(c, a) for a in u)

    def validate(self):
        n = self.n
        e = [self.basis_vector(i) for i in range(n)]
        for i in range(n):
            if self.mul(self.unit, e[i]) != e[i] or self.mul(e[i], self.unit) != e[i]:
                raise UnitViolation(i)
        for i, j, l in product(range(n), repeat=3):
            if self.mul(self.mul(e[i], e[j]), e[l]) != self.mul(e[i], self.mul(e[j], e[l])):
                raise AssociativityViolation((i, j, l))

    def is_commutative(self):
        return all(self.mult[i][j] == self.mult[j][i] for i in range(self.n) for j in range(self.n))

    def __eq__(self, other):
        return (
            isinstance(other, FrAlgebra)
            and self.labels == other.labels
            and self.field == other.field
            and self.mult == other.mult
            and self.unit == other.unit
        )

    def __hash__(self):
        return hash((self.labels, self.mult, self.unit))

    def same_tables(self, other):
        return self.mult == other.mult and self.unit == other.unit

    def to_json(self):
        return {
            "type": "structure",
            "basis": list(self.labels),
            "table": [[[_num(c) for c in cell] for cell in row] for row in self.mult],
            "unit": [_num(u) for u in self.unit],
        }

    def __repr__(self):
        return f"FrAlgebra({', '.join(self.labels)}; {self.field})"


def _num(c):
    if hasattr(c, "denominator") and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return int(c)


def make_fr(labels, table, unit, field):
    return FrAlgebra(labels, table, unit, field)


@dataclass(frozen=True)
class ModuleMap:
    """Linear map between free modules; ``images[m]`` is the image of basis m."""

    source_rank: int
    target_rank: int
    images: tuple

    def __post_init__(self):
        if len(self.images) != self.source_rank:
            raise ValidationError("module map needs one image per source basis element")
        if any(len(v) != self.target_rank for v in self.images):
            raise ValidationError("module map image has the wrong length")

    @classmethod
    def from_rows(cls, rows, target_rank=None):
        rows = tuple(tuple(r) for r in rows)
        t = target_rank if target_rank is not None else (len(rows[0]) if rows else 0)
        return cls(len(rows), t, rows)

    def __call__(self, v, F):
        out = [F.zero] * self.target_rank
        for c, img in zip(v, self.images):
            if c != 0:
                for k, x in enumerate(img):
                    out[k] = F.add(out[k], F.mul(c, F(x)))
        return tuple(out)


class FrHopf:
    """Finite-rank bialgebra / Hopf algebra at structure-constant level.

    ``comult[i][j][k]`` is the coefficient of a_j (x) a_k in Gamma(a_i);
    ``antipode[i][j]`` the coefficient of a_j in S(a_i).
    """

    def __init__(self, base, comult, counit, antipode=None, validate=True):
        F = base.field
        n = base.n
        self.base = base
        self.comult = tuple(tuple(tuple(F(c) for c in row) for row in mat) for mat in comult)
        if len(self.comult) != n or any(len(m) != n or any(len(r) != n for r in m) for m in self.comult):
            raise ValidationError("comultiplication tensor must be n x n x n")
        self.counit = tuple(F(c) for c in counit)
        if len(self.counit) != n:
            raise ValidationError("counit has wrong length")
        self.antipode = None
        if antipode is not None:
            self.antipode = tuple(tuple(F(c) for c in row) for row in antipode)
            if len(self.antipode) != n or any(len(r) != n for r in self.antipode):
                raise ValidationError("antipode must be n x n")
        if validate:
            self.validate()

    @property
    def field(self):
        return self.base.field

    @property
    def n(self):
        return self.base.n

    def delta_vec(self, u):
        """Gamma applied to a coordinate vector: an n x n coefficient matrix."""
        F = self.field
        n = self.n
        out = [[F.zero] * n for _ in range(n)]
        for i, c in enumerate(u):
            if c == 0:
                continue
            for j in range(n):
                for k in range(n):
                    m = self.comult[i][j][k]
                    if m != 0:
                        out[j][k] = F.add(out[j][k], F.mul(c, m))
        return out

    def counit_vec(self, u):
        F = self.field
        s = F.zero
        for c, e in zip(u, self.counit):
            s = F.add(s, F.mul(c, e))
        return s

    def antipode_vec(self, u):
        F = self.field
        out = [F.zero] * self.n
        for i, c in enumerate(u):
            if c != 0:
                for j, s in enumerate(self.antipode[i]):
                    out[j] = F.add(out[j], F.mul(c, s))
        return tuple(out)

    def _tensor_mul(self, x, y):
        A = self.base
        F = self.field
        n = self.n
        out = [[F.zero] * n for _ in range(n)]
        for i1, i2 in product(range(n), repeat=2):
            a = x[i1][i2]
            if a == 0:
                continue
            for j1, j2 in product(range(n), repeat=2):
                b = y[j1][j2]
                if b == 0:
                    continue
                ab = F.mul(a, b)
                for k1, m1 in A.nonzero[i1][j1]:
                    for k2, m2 in A.nonzero[i2][j2]:
                        out[k1][k2] = F.add(out[k1][k2], F.mul(ab, F.mul(m1, m2)))
        return out

    def validate(self):
        A = self.base
        F = self.field
        n = self.n
        e = [A.basis_vector(i) for i in range(n)]
        unit_tensor = [[F.mul(A.unit[j], A.unit[k]) for k in range(n)] for j in range(n)]
        if self.delta_vec(A.unit) != unit_tensor:
            raise ValidationError("comultiplication does not preserve the unit")
        if self.counit_vec(A.unit) != F.one:
            raise ValidationError("counit does not preserve the unit")
        for i, j in product(range(n), repeat=2):
            prod_ij = A.mul(e[i], e[j])
            if self.delta_vec(prod_ij) != self._tensor_mul(self.delta_vec(e[i]), self.delta_vec(e[j])):
                raise ValidationError(f"comultiplication is not multiplicative on ({i}, {j})")
            if self.counit_vec(prod_ij) != F.mul(self.counit[i], self.counit[j]):
                raise ValidationError(f"counit is not multiplicative on ({i}, {j})")
        for i in range(n):
            d = self.delta_vec(e[i])
            # coassociativity: sum_jk d_jk Gamma(a_j) (x) a_k == sum_jk d_jk a_j (x) Gamma(a_k)
            left = {}
            right = {}
            for j, k in product(range(n), repeat=2):
                c = d[j][k]
                if c == 0:
                    continue
                dj = self.delta_vec(e[j])
                dk = self.delta_vec(e[k])
                for a, b in product(range(n), repeat=2):
                    if dj[a][b] != 0:
                        key = (a, b, k)
                        left[key] = F.add(left.get(key, F.zero), F.mul(c, dj[a][b]))
                    if dk[a][b] != 0:
                        key = (j, a, b)
                        right[key] = F.add(right.get(key, F.zero), F.mul(c, dk[a][b]))
            left = {k: v for k, v in left.items() if v != 0}
            right = {k: v for k, v in right.items() if v != 0}
            if left != right:
                raise ValidationError(f"coassociativity fails on basis element {i}")
            lc = [F.zero] * n
            rc = [F.zero] * n
            for j, k in product(range(n), repeat=2):
                if d[j][k] != 0:
                    lc[k] = F.add(lc[k], F.mul(d[j][k], self.counit[j]))
                    rc[j] = F.add(rc[j], F.mul(d[j][k], self.counit[k]))
            if tuple(lc) != e[i] or tuple(rc) != e[i]:
                raise ValidationError(f"counit law fails on basis element {i}")
            if self.antipode is not None:
                want = A.scale(self.counit[i], A.unit)
                s1 = A.zero()
                s2 = A.zero()
                for j, k in product(range(n), repeat=2):
                    if d[j][k] != 0:
                        s1 = A.add(s1, A.scale(d[j][k], A.mul(self.antipode_vec(e[j]), e[k])))
                        s2 = A.add(s2, A.scale(d[j][k], A.mul(e[j], self.antipode_vec(e[k]))))
                if s1 != want or s2 != want:
                    raise ValidationError(f"antipode law fails on basis element {i}")

    def same_tensors(self, other):
        return (
            self.base.same_tables(other.base)
            and self.comult == other.comult
            and self.counit == other.counit
            and self.antipode == other.antipode
        )

    def to_json(self):
        d = {
            "type": "hopf",
            "base": self.base.to_json(),
            "comult": [[[_num(c) for c in row] for row in m] for m in self.comult],
            "counit": [_num(c) for c in self.counit],
        }
        if self.antipode is not None:
            d["antipode"] = [[_num(c) for c in row] for row in self.antipode]
        return d


# -- builders -----------------------------------------------------------------------------

def validate_cayley(table):
    n = len(table)
    if n == 0 or any(len(r) != n for r in table):
        raise ValidationError("Cayley table must be a nonempty square matrix")
    for r in table:
        for x in r:
            if not (0 <= x < n):
                raise ValidationError("Cayley table entry out of range")
    for a, b, c in product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise ValidationError(f"Cayley table not associative at {(a, b, c)}")
    ids = [e for e in range(n) if all(table[e][x] == x and table[x][e] == x for x in range(n))]
    if not ids:
        raise ValidationError("Cayley table has no identity")
    e = ids[0]
    inv = []
    for a in range(n):
        b = next((b for b in range(n) if table[a][b] == e and table[b][a] == e), None)
        if b is None:
            raise ValidationError(f"element {a} has no inverse")
        inv.append(b)
    return e, inv


def cyclic_group(n):
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def k_power(n, field):
    """K^n with orthogonal idempotents e1..en."""
    F = field
    mult = [[[F.one if (i == j == k) else F.zero for k in range(n)] for j in range(n)] for i in range(n)]
    return FrAlgebra([f"e{i + 1}" for i in range(n)], mult, [F.one] * n, F)


def group_algebra(table, field):
    """KG with group-like basis g0..g{n-1} (indices of the Cayley table)."""
    e, inv = validate_cayley(table)
    n = len(table)
    F = field
    mult = [[[F.one if table[i][j] == k else F.zero for k in range(n)] for j in range(n)] for i in range(n)]
    unit = [F.one if k == e else F.zero for k in range(n)]
    base = FrAlgebra([f"g{i}" for i in range(n)], mult, unit, F)
    comult = [[[F.one if (j == i and k == i) else F.zero for k in range(n)] for j in range(n)] for i in range(n)]
    counit = [F.one] * n
    antipode = [[F.one if j == inv[i] else F.zero for j in range(n)] for i in range(n)]
    return FrHopf(base, comult, counit, antipode)


def function_algebra(table, field):
    """K(G) with point-indicator basis d0..d{n-1}; Delta(d_g) = sum_h d_h (x) d_{h^-1 g}."""
    e, inv = validate_cayley(table)
    n = len(table)
    F = field
    mult = [[[F.one if (i == j == k) else F.zero for k in range(n)] for j in range(n)] for i in range(n)]
    base = FrAlgebra([f"d{i}" for i in range(n)], mult, [F.one] * n, F)
    comult = [[[F.zero] * n for _ in range(n)] for _ in range(n)]
    for g in range(n):
        for h in range(n):
            comult[g][h][table[inv[h]][g]] = F.one
    counit = [F.one if g == e else F.zero for g in range(n)]
    antipode = [[F.one if j == inv[i] else F.zero for j in range(n)] for i in range(n)]
    return FrHopf(base, comult, counit, antipode)


def monogenic(coeffs, field, var="t"):
    """K[t]/(f) for monic f = t^d + c_{d-1} t^{d-1} + ... + c_0, basis t0..t{d-1}.

    ``coeffs`` lists c_0..c_{d-1}.
    """
    F = field
    d = len(coeffs)
    c = [F(x) for x in coeffs]
    # reduce t^m for m < 2d - 1 to the basis
    powers = []
    for m in range(2 * d - 1):
        if m < d:
            powers.append(tuple(F.one if k == m else F.zero for k in range(d)))
        else:
            prev = powers[m - 1]
            shifted = [F.zero] + list(prev[:-1])
            top = prev[-1]
            vec = [F.sub(shifted[k], F.mul(top, c[k])) for k in range(d)]
            powers.append(tuple(vec))
    mult = [[list(powers[i + j]) for j in range(d)] for i in range(d)]
    unit = [F.one if k == 0 else F.zero for k in range(d)]
    return FrAlgebra([f"{var}{i}" for i in range(d)], mult, unit, F)


def tensor_fr(A1, A2):
    """A1 (x) A2 with basis labels ``<l1>__<l2>`` in row-major order."""
    A1.field.check_same(A2.field)
    F = A1.field
    n1, n2 = A1.n, A2.n
    n = n1 * n2
    labels = [f"{a}__{b}" for a in A1.labels for b in A2.labels]
    mult = [[[F.zero] * n for _ in range(n)] for _ in range(n)]
    for i1, i2, j1, j2 in product(range(n1), range(n2), range(n1), range(n2)):
        for k1, m1 in A1.nonzero[i1][j1]:
            for k2, m2 in A2.nonzero[i2][j2]:
                mult[i1 * n2 + i2][j1 * n2 + j2][k1 * n2 + k2] = F.mul(m1, m2)
    unit = [F.mul(A1.unit[a], A2.unit[b]) for a in range(n1) for b in range(n2)]
    return FrAlgebra(labels, mult, unit, F)


def algebraic_dual(H, labels=None):
    """A*: multiplication from Gamma, comultiplication from mu, unit epsilon."""
    if H.antipode is None:
        raise ValidationError("algebraic dual requires an antipode")
    n = H.n
    A = H.base
    F = H.field
    if labels is None:
        labels = [f"{l}_dual" for l in A.labels]
        if all(l.endswith("_dual") for l in A.labels):
            labels = [l[: -len("_dual")] for l in A.labels]
    mult = [[[H.comult[k][i][j] for k in range(n)] for j in range(n)] for i in range(n)]
    base = FrAlgebra(labels, mult, H.counit, F)
    comult = [[[A.mult[i][j][k] for j in range(n)] for i in range(n)] for k in range(n)]
    counit = A.unit
    antipode = [[H.antipode[j][i] for j in range(n)] for i in range(n)]
    return FrHopf(base, comult, counit, antipode)


def fr_to_presentation(A, degree=DEFAULT_DEGREE):
    """Presentation on the basis labels with table relations and the unit relation."""
    F = A.field
    pres = Presentation(A.labels, (), False, F)
    ring = pres.ring
    g = ring.gens()
    rels = []
    for i in range(A.n):
        for j in range(A.n):
            r = g[i] * g[j]
            for k, m in A.nonzero[i][j]:
                r = r - g[k].scale(m)
            rels.append(r)
    u = ring.one()
    for k, c in enumerate(A.unit):
        if c != 0:
            u = u - g[k].scale(c)
    rels.append(u)
    out = FpAlgebra(Presentation(A.labels, rels, False, F), degree)
    out.fr = A
    return out


def vector_to_poly(A, ring, v):
    """Element sum_k v_k a_k of A as a polynomial in A's basis generators."""
    out = ring.zero()
    for k, c in enumerate(v):
        if c != 0:
            out = out + ring.gen(A.labels[k]).scale(c)
    return out


def dual_group(table, field):
    """Hom(G, K^x) for a finite group given by its Cayley table, over GF(p)."""
    if not field.is_prime_field:
        raise ValidationError("dual group enumeration needs a prime field")
    validate_cayley(table)
    n = len(table)
    units = range(1, field.p)
    out = []
    for vals in product(units, repeat=n):
        if all(vals[table[a][b]] == vals[a] * vals[b] % field.p for a in range(n) for b in range(n)):
            out.append(vals)
    return out
