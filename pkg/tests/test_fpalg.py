import random

import pytest

from famalg.errors import IncompatibleContext, PresentationError
from famalg.field import GF, QQ
from famalg.fpalg import (
    AlgMorphism,
    abelianized,
    base_algebra,
    compose_families,
    derive_algebra,
    free_product,
    make_algebra,
    opposite,
    tensor_algebra,
)
from famalg.fralg import fr_to_presentation, k_power
from famalg.mapuniv import construct_map_algebra, trivial_family


def Z2(F=QQ, name="x"):
    return make_algebra([name], [f"{name}^2 - 1"], False, F)


class TestMakeAlgebra:
    def test_free(self):
        C = make_algebra(["x"], [], False, QQ)
        assert C.gb.complete and C.gb.basis == ()

    def test_group_algebra(self):
        C = Z2()
        assert C.basis_words() == [(), (0,)]

    def test_k_dagger(self):
        C = make_algebra(["x", "y"], ["x*y - 1", "y*x - 1"], True, QQ)
        assert C.gb.complete
        assert C.normal_form(C.parse("x^2*y^2")) == C.ring.one()

    def test_duplicate_names(self):
        with pytest.raises(PresentationError):
            make_algebra(["x", "x"], [], False, QQ)

    def test_unknown_generator(self):
        with pytest.raises(PresentationError):
            make_algebra(["x"], ["x*y"], False, QQ)


class TestNormalForm:
    def test_group_algebra(self):
        C = Z2()
        assert C.normal_form(C.parse("x^3")) == C.parse("x")

    def test_k_dagger(self):
        C = make_algebra(["x", "y"], ["x*y - 1", "y*x - 1"], False, QQ)
        assert C.normal_form(C.parse("x*y*x")) == C.parse("x")

    def test_free(self):
        C = make_algebra(["x", "y"], [], False, QQ)
        assert C.normal_form(C.parse("x*y")) == C.parse("x*y")


class TestTensorAlgebra:
    def test_generators_and_commutator(self):
        T = tensor_algebra(make_algebra(["x"], [], False, QQ), make_algebra(["y"], [], False, QQ))
        assert T.names == ("L.x", "R.y")
        assert len(T.presentation.relations) == 1
        assert T.verdict(T.parse("L.x*R.y - R.y*L.x")).zero

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_group_algebra_square(self, p):
        T = tensor_algebra(Z2(GF(p)), Z2(GF(p)))
        words = T.basis_words()
        assert len(words) == 4
        assert sorted(words) == sorted([(), (0,), (1,), (0, 1)])

    def test_k2_square(self):
        K2 = fr_to_presentation(k_power(2, GF(3)))
        assert len(tensor_algebra(K2, K2).basis_words()) == 4

    def test_unit(self):
        C = Z2()
        T = tensor_algebra(C, base_algebra(QQ))
        assert T.presentation.rename(C.names).same_as(C.presentation)

    def test_field_mismatch(self):
        with pytest.raises(IncompatibleContext):
            tensor_algebra(Z2(QQ), Z2(GF(3)))


class TestDerived:
    def test_opposite(self):
        C = make_algebra(["x", "y"], ["x*y - 1"], False, QQ)
        O = derive_algebra(C, "opposite")
        assert O.presentation.same_as(make_algebra(["x", "y"], ["y*x - 1"], False, QQ).presentation)

    def test_opposite_involutive(self):
        C = make_algebra(["x", "y"], ["x*y*y - y*x + 2", "x^3"], False, QQ)
        assert opposite(opposite(C)).presentation.key() == C.presentation.key()

    def test_abelianized(self):
        C = abelianized(make_algebra(["x", "y"], [], False, QQ))
        assert C.commutative
        assert C.verdict(C.parse("x*y - y*x")).zero

    def test_abelianization_idempotent(self):
        C = make_algebra(["x", "y"], ["x*y - 2*y*x"], False, QQ)
        assert abelianized(abelianized(C)).presentation.key() == abelianized(C).presentation.key()

    def test_free_product_infinite(self):
        P = free_product(Z2(), Z2())
        assert P.presentation.rename(["z1", "z2"]).same_as(
            make_algebra(["z1", "z2"], ["z1^2 - 1", "z2^2 - 1"], False, QQ).presentation)
        assert P.basis_words() is None
        counts = [len(P.normal_words(d)) for d in range(1, 6)]
        assert counts == sorted(counts) and len(set(counts)) == len(counts)

    def test_free_product_via_derive(self):
        assert derive_algebra(Z2(), "free_product", Z2()).names == ("L.x", "R.x")


class TestCheckMorphism:
    def test_sign_character(self):
        K2 = fr_to_presentation(k_power(2, QQ))
        f = AlgMorphism(Z2(), K2, ["e1 - e2"])
        v = f.check()
        assert v.zero and v.exact

    def test_nilpotent_to_one(self):
        B = make_algebra(["x"], ["x^2"], False, QQ)
        f = AlgMorphism(B, base_algebra(QQ), [1])
        assert not f.check().zero

    def test_identity(self):
        C = make_algebra(["x", "y"], ["x*y - 1"], False, QQ)
        assert AlgMorphism.identity(C).check().zero

    def test_composition_well_defined(self):
        rng = random.Random(7)
        F = GF(5)
        C = make_algebra(["x"], ["x^3 - 1"], True, F)
        for _ in range(20):
            a = rng.choice([1, 2, 4])
            b = rng.choice([1, 2, 4])
            # x -> x^a and x -> x^b are automorphisms of K[Z/3] for a, b prime to 3
            a, b = (a % 3 or 1), (b % 3 or 1)
            f = AlgMorphism(C, C, [f"x^{a}"])
            g = AlgMorphism(C, C, [f"x^{b}"])
            assert f.check().zero and g.check().zero
            assert f.compose(g).check().zero


class TestComposeFamilies:
    def test_with_one_point(self):
        F = QQ
        A = k_power(2, F)
        U = construct_map_algebra(A, A)
        point = trivial_family(A, A, [[(1, 0), (0, 1)]])
        out = compose_families(point, U.family)
        assert tuple(n[2:] for n in out.param.names) == U.Z.names
        for s in U.B.names:
            got = out.image(s).comps
            want = U.family.image(s).comps
            for g, w in zip(got, want):
                assert g.to_string().replace("L.", "") == w.to_string()

    def test_matrix_shape(self):
        A = k_power(2, QQ)
        U = construct_map_algebra(A, A)
        out = compose_families(U.family, U.family)
        T = out.param
        for j in range(2):
            for k in range(2):
                want = sum((T.parse(f"L.z.e{i + 1}.{k + 1}*R.z.e{j + 1}.{i + 1}") for i in range(2)),
                           T.ring.zero())
                assert T.verdict(out.image(f"e{j + 1}").comps[k] - want).zero

    def test_trivial_composition(self):
        F = GF(5)
        A = k_power(2, F)
        swap = [(0, 1), (1, 0)]
        proj = [(1, 0), (1, 0)]
        out = compose_families(trivial_family(A, A, [swap]), trivial_family(A, A, [proj]))
        want = trivial_family(A, A, [[(1, 0), (1, 0)]])
        for g, w in zip(out.images, want.images):
            assert [c.constant() for c in g.comps] == [c.constant() for c in w.comps]
