"""Noncommutative polynomials over an exact field.

A polynomial is a map from words (tuples of generator indices) to nonzero
scalars.  Words are ordered degree-lexicographically with generators ordered
by declaration, which is the monomial order used everywhere in the package.
"""

import re

from .errors import IncompatibleContext, ParseError
from .field import Field

NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*(?:\.[A-Za-z0-9_]+)*")


def deglex_key(word):
    return (len(word), word)


class FreeAlgebra:
    """The free associative algebra on named generators over ``field``."""

    __slots__ = ("names", "field", "index", "_hash")

    def __init__(self, names, field):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        for n in names:
            if not NAME_RE.fullmatch(n):
                raise ValueError(f"invalid generator name {n!r}")
        if not isinstance(field, Field):
            raise TypeError("field must be a Field")
        self.names = names
        self.field = field
        self.index = {n: i for i, n in enumerate(names)}
        self._hash = hash((names, field))

    @property
    def ngens(self):
        return len(self.names)

    def __eq__(self, other):
        return (
            isinstance(other, FreeAlgebra)
            and self.names == other.names
            and self.field == other.field
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FreeAlgebra({', '.join(self.names)}; {self.field})"

    def zero(self):
        return NcPoly(self, {})

    def one(self):
        return NcPoly(self, {(): self.field.one})

    def const(self, c):
        c = self.field(c)
        return NcPoly(self, {(): c} if c != 0 else {})

    def gen(self, g):
        i = self.index[g] if isinstance(g, str) else g
        return NcPoly(self, {(i,): self.field.one})

    def gens(self):
        return [self.gen(i) for i in range(self.ngens)]

    def monomial(self, word, c=1):
        c = self.field(c)
        return NcPoly(self, {tuple(word): c} if c != 0 else {})

    def from_terms(self, terms):
        """Build from an iterable of (word, coefficient), merging repeats."""
        F = self.field
        out = {}
        for w, c in terms:
            w = tuple(w)
            s = F.add(out.get(w, F.zero), F(c))
            if s == 0:
                out.pop(w, None)
            else:
                out[w] = s
        return NcPoly(self, out)

    def parse(self, text):
        return parse_poly(text, self)


class NcPoly:
    """Immutable element of a :class:`FreeAlgebra`."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms):
        # terms must already be normalized: no zero coefficients
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- structure --------------------------------------------------------
    @property
    def field(self):
        return self.ring.field

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((len(w) for w in self.terms), default=-1)

    def sorted_terms(self):
        """Terms in descending deglex order."""
        return sorted(self.terms.items(), key=lambda t: deglex_key(t[0]), reverse=True)

    def lead_word(self):
        return max(self.terms, key=deglex_key)

    def lead_coeff(self):
        return self.terms[self.lead_word()]

    def constant(self):
        return self.terms.get((), self.ring.field.zero)

    def monic(self):
        if not self.terms:
            return self
        F = self.field
        inv = F.inv(self.lead_coeff())
        if inv == F.one:
            return self
        return NcPoly(self.ring, {w: F.mul(c, inv) for w, c in self.terms.items()})

    def variables(self):
        return sorted({g for w in self.terms for g in w})

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, NcPoly):
            if other.ring != self.ring:
                raise IncompatibleContext(f"{self.ring} vs {other.ring}")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        add = self.field.add
        out = dict(self.terms)
        for w, c in other.terms.items():
            if w in out:
                s = add(out[w], c)
                if s == 0:
                    del out[w]
                else:
                    out[w] = s
            else:
                out[w] = c
        return NcPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        neg = self.field.neg
        return NcPoly(self.ring, {w: neg(c) for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c):
        F = self.field
        c = F(c)
        if c == 0:
            return self.ring.zero()
        return NcPoly(self.ring, {w: F.mul(a, c) for w, a in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, NcPoly):
            return self.scale(other)
        other = self._coerce(other)
        F = self.field
        add, mul = F.add, F.mul
        out = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = u + v
                s = add(out.get(w, F.zero), mul(a, b))
                if s == 0:
                    out.pop(w, None)
                else:
                    out[w] = s
        return NcPoly(self.ring, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers")
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, NcPoly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int,)) or hasattr(other, "numerator"):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # -- maps ---------------------------------------------------------------
    def reversed(self):
        """Word reversal: the same element read in the opposite algebra."""
        return NcPoly(self.ring, {w[::-1]: c for w, c in self.terms.items()})

    def rename(self, target, mapping):
        """Relabel letters through ``mapping`` (source index -> target index)."""
        if target.field != self.field:
            raise IncompatibleContext("field mismatch in rename")
        return NcPoly(target, {tuple(mapping[g] for g in w): c for w, c in self.terms.items()})

    def subs(self, images, target, reverse=False):
        """Substitute generator ``i`` by ``images[i]`` (polynomials over ``target``).

        With ``reverse=True`` each word is multiplied right-to-left, which is
        how an anti-homomorphism acts.
        """
        if len(images) != self.ring.ngens:
            raise IncompatibleContext("image count does not match generator count")
        F = target.field
        cache = {(): target.one()}
        total = {}
        add, mul = F.add, F.mul
        for w, c in self.terms.items():
            v = _word_image(w[::-1] if reverse else w, images, cache)
            for u, b in v.terms.items():
                s = add(total.get(u, F.zero), mul(c, b))
                if s == 0:
                    total.pop(u, None)
                else:
                    total[u] = s
        return NcPoly(target, total)

    # -- printing -----------------------------------------------------------
    def to_string(self):
        return format_poly(self)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"NcPoly({format_poly(self)!r})"


def _word_image(word, images, cache):
    if word in cache:
        return cache[word]
    v = _word_image(word[:-1], images, cache) * images[word[-1]]
    cache[word] = v
    return v


def commutator(f, g):
    return f * g - g * f


# -- printing ----------------------------------------------------------------

def format_word(word, names):
    if not word:
        return "1"
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        run = j - i
        parts.append(names[word[i]] + (f"^{run}" if run > 1 else ""))
        i = j
    return "*".join(parts)


def _format_scalar(c):
    return str(c)


def format_poly(f):
    if not f.terms:
        return "0"
    F = f.field
    names = f.ring.names
    out = []
    for k, (w, c) in enumerate(f.sorted_terms()):
        c = F.signed(c)
        neg = c < 0
        a = -c if neg else c
        if w:
            body = format_word(w, names)
            if a != 1:
                body = f"{_format_scalar(a)}*{body}"
        else:
            body = _format_scalar(a)
        if k == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


# -- parsing -----------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*(?:\.[A-Za-z0-9_]+)*)|(?P<op>[-+*^/()]))"
)


def _tokenize(text):
    pos = 0
    toks = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError("unexpected character", text, pos)
        kind = m.lastgroup
        toks.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    toks.append(("end", None, len(text)))
    return toks


class _Parser:
    def __init__(self, text, ring):
        self.text = text
        self.ring = ring
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, op):
        t = self.take()
        if t[0] != "op" or t[1] != op:
            raise ParseError(f"expected {op!r}", self.text, t[2])

    def expr(self):
        f = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            g = self.term()
            f = f + g if op == "+" else f - g
        return f

    def term(self):
        f = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            f = f * self.factor()
        return f

    def factor(self):
        t = self.peek()
        if t[0] == "op" and t[1] in "+-":
            self.take()
            f = self.factor()
            return -f if t[1] == "-" else f
        return self.power()

    def power(self):
        f = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            t = self.take()
            if t[0] != "num":
                raise ParseError("exponent must be a nonnegative integer", self.text, t[2])
            f = f ** int(t[1])
        return f

    def atom(self):
        t = self.take()
        kind, val, pos = t
        if kind == "num":
            num = int(val)
            if self.peek()[0] == "op" and self.peek()[1] == "/":
                self.take()
                d = self.take()
                if d[0] != "num":
                    raise ParseError("rational literal needs an integer denominator", self.text, d[2])
                if int(d[1]) == 0:
                    raise ParseError("zero denominator", self.text, d[2])
                from fractions import Fraction

                return self.ring.const(Fraction(num, int(d[1])))
            return self.ring.const(num)
        if kind == "name":
            if val not in self.ring.index:
                raise ParseError(f"unknown generator {val!r}", self.text, pos)
            return self.ring.gen(val)
        if kind == "op" and val == "(":
            f = self.expr()
            self.expect(")")
            return f
        raise ParseError("unexpected token", self.text, pos)


def parse_poly(text, ring):
    """Parse a polynomial expression over ``ring``.

    >>> from famalg.field import QQ
    >>> R = FreeAlgebra(["x", "y"], QQ)
    >>> str(parse_poly("(x+y)^2", R))
    'y^2 + y*x + x*y + x^2'
    """
    p = _Parser(text, ring)
    f = p.expr()
    t = p.peek()
    if t[0] != "end":
        raise ParseError("trailing input", text, t[2])
    return f


# -- tensor elements -----------------------------------------------------------

class TensorElement:
    """An element sum_i a_i (x) c_i of A (x) C, stored as the vector (c_i)."""

    __slots__ = ("algebra", "comps")

    def __init__(self, algebra, comps):
        comps = tuple(comps)
        if len(comps) != algebra.n:
            raise IncompatibleContext(
                f"tensor element has {len(comps)} components, algebra rank is {algebra.n}"
            )
        ring = comps[0].ring
        for c in comps:
            if c.ring != ring:
                raise IncompatibleContext("components over different rings")
        self.algebra = algebra
        self.comps = comps

    @property
    def ring(self):
        return self.comps[0].ring

    @classmethod
    def scalar(cls, algebra, ring, c=1):
        """c * 1_A (x) 1."""
        one = ring.one()
        return cls(algebra, [one.scale(c) * u if u else ring.zero() for u in algebra.unit])

    def __mul__(self, other):
        A = self.algebra
        ring = self.ring
        out = [ring.zero() for _ in range(A.n)]
        for i, x in enumerate(self.comps):
            if x.is_zero():
                continue
            for j, y in enumerate(other.comps):
                if y.is_zero():
                    continue
                xy = None
                for k, m in A.nonzero[i][j]:
                    if xy is None:
                        xy = x * y
                    out[k] = out[k] + xy.scale(m)
        return TensorElement(A, out)

    def __add__(self, other):
        return TensorElement(self.algebra, [a + b for a, b in zip(self.comps, other.comps)])

    def __sub__(self, other):
        return TensorElement(self.algebra, [a - b for a, b in zip(self.comps, other.comps)])

    def scale(self, c):
        return TensorElement(self.algebra, [a.scale(c) for a in self.comps])

    def map(self, fn):
        return TensorElement(self.algebra, [fn(a) for a in self.comps])

    def is_zero(self):
        return all(c.is_zero() for c in self.comps)

    def __eq__(self, other):
        return isinstance(other, TensorElement) and self.comps == other.comps

    def __hash__(self):
        return hash(self.comps)

    def __repr__(self):
        labels = self.algebra.labels
        return "TensorElement(" + ", ".join(f"{l}: {c}" for l, c in zip(labels, self.comps)) + ")"


def eval_in_tensor(p, images, A, ring=None):
    """Evaluate ``p`` at ``x_s -> images[s]`` inside A (x) (free algebra).

    Words are multiplied with A's structure constants on the left leg and
    concatenation on the right leg; the constant term contributes c * 1_A.
    """
    if len(images) != p.ring.ngens:
        raise IncompatibleContext(
            f"{len(images)} images for {p.ring.ngens} generators"
        )
    for im in images:
        if im.algebra.n != A.n:
            raise IncompatibleContext("image rank does not match the rank of A")
    if ring is None:
        if not images:
            raise IncompatibleContext("target ring needed when there are no generators")
        ring = images[0].ring
    unit = TensorElement.scalar(A, ring)
    cache = {(): unit}

    def word_value(w):
        if w in cache:
            return cache[w]
        v = word_value(w[:-1]) * images[w[-1]]
        cache[w] = v
        return v

    acc = [ring.zero() for _ in range(A.n)]
    for w, c in p.terms.items():
        v = word_value(w)
        for k in range(A.n):
            if not v.comps[k].is_zero():
                acc[k] = acc[k] + v.comps[k].scale(c)
    return TensorElement(A, acc)
