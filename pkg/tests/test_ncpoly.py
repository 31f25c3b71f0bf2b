from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from famalg.errors import IncompatibleContext, ParseError
from famalg.field import GF, QQ
from famalg.fralg import k_power
from famalg.ncpoly import FreeAlgebra, TensorElement, eval_in_tensor

R = FreeAlgebra(["x", "y"], QQ)
R3 = FreeAlgebra(["x", "y"], GF(3))
R5 = FreeAlgebra(["x", "y"], GF(5))


def P(text, ring=R):
    return ring.parse(text)


class TestArithmetic:
    def test_add_cancels(self):
        assert P("x + y") + P("x - y") == P("2*x")

    def test_add_zero(self):
        f = P("x*y - 3")
        assert f + R.zero() == f

    def test_characteristic(self):
        assert (P("2*x", R3) + P("x", R3)).is_zero()

    def test_noncommutative_product(self):
        x, y = R.gens()
        assert x * y == P("x*y")
        assert y * x == P("y*x")
        assert x * y != y * x

    def test_difference_of_squares(self):
        assert P("(x+1)*(x-1)") == P("x^2 - 1")

    def test_noncommutative_binomial(self):
        assert P("(x+y)^2") == P("x^2 + x*y + y*x + y^2")

    def test_mismatched_rings(self):
        with pytest.raises(IncompatibleContext):
            P("x") + P("x", R5)

    def test_rational_literal(self):
        f = P("1/2*x + 3/4")
        assert f.constant() == Fraction(3, 4)

    def test_parse_error(self):
        with pytest.raises(ParseError):
            P("x + * y")

    def test_unknown_identifier(self):
        with pytest.raises(ParseError):
            P("x + w")


class TestEvalInTensor:
    A = k_power(2, QQ)
    Z = FreeAlgebra(["z1", "z2", "w1", "w2"], QQ)

    def images(self):
        z1, z2, w1, w2 = self.Z.gens()
        return [TensorElement(self.A, [z1, z2]), TensorElement(self.A, [w1, w2])]

    def test_square(self):
        ring = FreeAlgebra(["x"], QQ)
        z1, z2 = self.Z.gen(0), self.Z.gen(1)
        out = eval_in_tensor(ring.parse("x^2"), [TensorElement(self.A, [z1, z2])], self.A, self.Z)
        assert out.comps == (z1 * z1, z2 * z2)

    def test_constant(self):
        out = eval_in_tensor(R.one(), self.images(), self.A, self.Z)
        assert out.comps == (self.Z.one(), self.Z.one())

    def test_commutator(self):
        z1, z2, w1, w2 = self.Z.gens()
        out = eval_in_tensor(P("x*y - y*x"), self.images(), self.A, self.Z)
        assert out.comps == (z1 * w1 - w1 * z1, z2 * w2 - w2 * z2)

    def test_image_count_mismatch(self):
        with pytest.raises(IncompatibleContext):
            eval_in_tensor(P("x"), self.images()[:1], self.A, self.Z)


# -- properties ----------------------------------------------------------------

coeff = st.integers(-3, 3)
word = st.lists(st.integers(0, 1), max_size=3).map(tuple)
poly_terms = st.lists(st.tuples(word, coeff), max_size=4)


def poly(ring):
    return poly_terms.map(ring.from_terms)


@given(poly(R), poly(R), poly(R))
def test_ring_axioms(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (f + g) * h == f * h + g * h
    assert (f + g) + h == f + (g + h)
    assert f + g == g + f


Z5 = FreeAlgebra(["a", "b", "c", "d"], GF(5))


@given(poly(R5), poly(R5), st.lists(st.lists(poly_terms.map(Z5.from_terms), min_size=2, max_size=2),
                                    min_size=2, max_size=2))
def test_eval_multiplicative(f, g, comps):
    A = k_power(2, GF(5))
    images = [TensorElement(A, c) for c in comps]
    lhs = eval_in_tensor(f * g, images, A, Z5)
    rhs = eval_in_tensor(f, images, A, Z5) * eval_in_tensor(g, images, A, Z5)
    assert lhs == rhs


@given(st.integers(1, 10 ** 6).flatmap(lambda a: st.tuples(st.just(a), st.integers(1, 10 ** 6))),
       st.booleans())
def test_rational_exactness(ab, neg):
    a, b = ab
    q = QQ(Fraction(-a if neg else a, b))
    assert QQ.mul(q, QQ.div(QQ.one, q)) == 1


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_fermat(p):
    F = GF(p)
    for x in F.elements():
        acc = F.one
        for _ in range(p):
            acc = F.mul(acc, x)
        assert acc == x


def test_field_rejects_composite():
    with pytest.raises(Exception):
        GF(9)
