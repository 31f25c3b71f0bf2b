import itertools

import pytest

from famalg.errors import AssociativityViolation, UnitViolation, ValidationError
from famalg.field import GF, QQ
from famalg.fralg import (
    FrAlgebra,
    algebraic_dual,
    cyclic_group,
    fr_to_presentation,
    function_algebra,
    group_algebra,
    k_power,
    make_fr,
    tensor_fr,
    validate_cayley,
)

F = QQ


def s3_table():
    perms = list(itertools.permutations(range(3)))
    idx = {p: i for i, p in enumerate(perms)}
    return [[idx[tuple(a[b[k]] for k in range(3))] for b in perms] for a in perms]


def klein_table():
    els = [(a, b) for a in range(2) for b in range(2)]
    return [[els.index(((x[0] + y[0]) % 2, (x[1] + y[1]) % 2)) for y in els] for x in els]


class TestMakeFr:
    def test_ground_field(self):
        A = make_fr(["a"], [[[1]]], [1], F)
        assert A.n == 1

    def test_k2(self):
        A = k_power(2, F)
        assert A.mul((1, 0), (0, 1)) == (0, 0)

    def test_unit_violation(self):
        with pytest.raises(UnitViolation):
            make_fr(["e1", "e2"], [[[1, 0], [1, 0]], [[0, 1], [0, 1]]], [1, 0], F)

    def test_associativity_violation(self):
        # a*a = b, everything else zero except b*a = a: (aa)a = ba = a, a(aa) = ab = 0
        table = [[[0, 0, 1], [0, 0, 0], [1, 0, 0]],
                 [[0, 0, 0], [0, 0, 0], [0, 1, 0]],
                 [[1, 0, 0], [0, 1, 0], [0, 0, 1]]]
        table[0][0] = [0, 1, 0]
        table[1][0] = [1, 0, 0]
        with pytest.raises(AssociativityViolation) as err:
            make_fr(["a", "b", "u"], table, [0, 0, 1], F)
        assert len(err.value.triple) == 3

    def test_bad_cayley(self):
        with pytest.raises(ValidationError):
            validate_cayley([[0, 1], [0, 1]])


class TestBuilders:
    def test_group_algebra(self):
        H = group_algebra(cyclic_group(2), F)
        assert H.n == 2
        assert H.delta_vec((0, 1)) == [[0, 0], [0, 1]]

    def test_function_algebra(self):
        H = function_algebra(cyclic_group(2), F)
        assert H.base.mul((0, 1), (0, 1)) == (0, 1)
        assert H.delta_vec((1, 0)) == [[1, 0], [0, 1]]

    def test_k3(self):
        A = k_power(3, F)
        for i in range(3):
            e = tuple(1 if k == i else 0 for k in range(3))
            assert A.mul(e, e) == e


class TestTensorFr:
    def test_k2_k2(self):
        assert tensor_fr(k_power(2, F), k_power(2, F)).same_tables(k_power(4, F))

    def test_unit(self):
        A = group_algebra(cyclic_group(3), F).base
        T = tensor_fr(A, k_power(1, F))
        assert T.same_tables(A)

    def test_klein(self):
        G = group_algebra(cyclic_group(2), F).base
        assert tensor_fr(G, G).same_tables(group_algebra(klein_table(), F).base)


class TestDual:
    def test_group_to_functions(self):
        assert algebraic_dual(group_algebra(cyclic_group(2), F)).base.same_tables(
            function_algebra(cyclic_group(2), F).base)

    def test_functions_to_group(self):
        assert algebraic_dual(function_algebra(cyclic_group(2), F)).base.same_tables(
            group_algebra(cyclic_group(2), F).base)

    @pytest.mark.parametrize("table", [cyclic_group(2), cyclic_group(3), klein_table(), s3_table()])
    def test_involution(self, table):
        for H in (group_algebra(table, F), function_algebra(table, F)):
            assert algebraic_dual(algebraic_dual(H)).same_tensors(H)


class TestFrToPresentation:
    def test_k2(self):
        C = fr_to_presentation(k_power(2, F))
        want = ["e1^2 - e1", "e2^2 - e2", "e1*e2", "e2*e1", "1 - e1 - e2"]
        assert {r.to_string() for r in C.presentation.relations} == {
            C.parse(w).to_string() for w in want}

    def test_rank_one(self):
        C = fr_to_presentation(k_power(1, F))
        assert C.verdict(C.parse("e1 - 1")).zero

    def test_group_unit(self):
        C = fr_to_presentation(group_algebra(cyclic_group(2), F).base)
        assert C.verdict(C.parse("1 - g0")).zero

    @pytest.mark.parametrize("A", [
        k_power(1, GF(3)), k_power(3, GF(3)), group_algebra(cyclic_group(3), GF(5)).base,
        function_algebra(cyclic_group(2), QQ).base, group_algebra(s3_table(), QQ).base,
    ], ids=["K", "K3", "KZ3", "K(Z2)", "KS3"])
    def test_dimension(self, A):
        C = fr_to_presentation(A)
        assert len(C.normal_words(A.n + 1)) == A.n


@pytest.mark.parametrize("table", [cyclic_group(n) for n in range(1, 7)] + [klein_table(), s3_table()])
@pytest.mark.parametrize("field", [QQ, GF(7)])
def test_hopf_validation(table, field):
    # construction validates coassociativity, counit and antipode identities
    group_algebra(table, field).validate()
    function_algebra(table, field).validate()


def test_rank_limit():
    with pytest.raises(ValidationError):
        FrAlgebra([], [], [], F)
