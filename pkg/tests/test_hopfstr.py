import pytest

from famalg.charsearch import enumerate_characters
from famalg.errors import ConstructionError, ValidationError
from famalg.field import GF, QQ
from famalg.fpalg import AlgMorphism, Family, base_algebra, make_algebra
from famalg.fralg import cyclic_group, function_algebra, group_algebra, k_power
from famalg.hopfstr import (
    AXIOMS,
    BialgebraData,
    character_table,
    check_bialgebra_morphism,
    cocommutativity,
    composition_bialgebra,
    counit_character,
    gauge_coaction,
    hopf_data_from_fr,
    induce_bialgebra,
    induced_abelianized,
    iso_hopf,
    make_bialgebra,
    summarize,
    verdicts_to_json,
    verify_axioms,
)
from famalg.mapuniv import construct_iso_algebra, construct_map_algebra, mediate, trivial_family
from famalg.ncpoly import TensorElement

GROUP = (["L.g*R.g"], [1], ["g"])
PRIMITIVE = (["L.x + R.x"], [0], ["-x"])


def exact_zero(v):
    return v.zero and v.exact


def all_exact(verdicts):
    total, failing = summarize(verdicts)
    return total.zero and total.exact


def Z2(F=QQ):
    return make_algebra(["g"], ["g^2 - 1"], False, F)


class TestInduce:
    def test_group_like(self):
        U = construct_map_algebra(Z2(), k_power(2, QQ))
        d = induce_bialgebra(U, *GROUP)
        ZZ = d.tensor
        for i in (1, 2):
            n = f"z.g.{i}"
            assert ZZ.verdict(d.comult_of(n) - ZZ.parse(f"L.{n}*R.{n}")).zero
            assert d.antipode.image_of(n) == d.carrier.gen(n)
        assert d.counit == (1, 1)
        assert all_exact(verify_axioms(d))

    def test_primitive(self):
        B = make_algebra(["x"], [], False, QQ)
        U = construct_map_algebra(B, k_power(2, QQ))
        d = induce_bialgebra(U, *PRIMITIVE)
        ZZ = d.tensor
        for i in (1, 2):
            n = f"z.x.{i}"
            assert ZZ.verdict(d.comult_of(n) - ZZ.parse(f"L.{n} + R.{n}")).zero
        assert d.counit == (0, 0)
        assert all_exact(verify_axioms(d))

    def test_ground_field_target(self):
        U = construct_map_algebra(Z2(), k_power(1, QQ))
        d = induce_bialgebra(U, *GROUP)
        assert d.comult_of("z.g.1").to_string() == "L.z.g.1*R.z.g.1"
        assert d.counit == (1,)

    def test_noncommutative_target_rejected(self):
        import itertools
        perms = list(itertools.permutations(range(3)))
        idx = {p: i for i, p in enumerate(perms)}
        table = [[idx[tuple(a[b[k]] for k in range(3))] for b in perms] for a in perms]
        U = construct_map_algebra(Z2(), group_algebra(table, QQ).base)
        with pytest.raises(ConstructionError):
            induce_bialgebra(U, *GROUP)

    def test_bad_delta_rejected(self):
        U = construct_map_algebra(Z2(), k_power(2, QQ))
        with pytest.raises(ValidationError):
            induce_bialgebra(U, ["L.g + R.g"], [1], ["g"])


class TestComposition:
    def test_ground_field(self):
        A = k_power(1, QQ)
        d = composition_bialgebra(construct_map_algebra(A, A))
        assert d.counit == (1,)
        # the unit relation forces z.e1.1 = 1, so Gamma is trivial
        assert d.carrier.verdict(d.carrier.parse("z.e1.1 - 1")).zero
        assert d.tensor.verdict(d.comult_of("z.e1.1") - d.tensor.ring.one()).zero

    def test_k2_matrix_shape(self):
        A = k_power(2, QQ)
        d = composition_bialgebra(construct_map_algebra(A, A))
        ZZ = d.tensor
        for j in (1, 2):
            for k in (1, 2):
                want = ZZ.parse(" + ".join(f"L.z.e{i}.{k}*R.z.e{j}.{i}" for i in (1, 2)))
                assert ZZ.verdict(d.comult_of(f"z.e{j}.{k}") - want).zero
        v = verify_axioms(d)
        for ax in ("coassociativity", "counit_left", "counit_right"):
            assert all(exact_zero(x) for x in v[ax].values())

    def test_trivial_coaction_mediation(self):
        F = QQ
        A = k_power(2, F)
        U = construct_map_algebra(A, A)
        K = base_algebra(F)
        D = make_bialgebra(K, [], [], [])
        psi = trivial_family(A, A, [[(1, 0), (0, 1)]])
        m = mediate(U, psi)
        res = check_bialgebra_morphism(m, composition_bialgebra(U), D)
        assert all(exact_zero(v) for part in res.values() for v in part.values())

    def test_wrong_kind(self):
        U = construct_map_algebra(Z2(), k_power(2, QQ))
        with pytest.raises(ConstructionError):
            composition_bialgebra(U)


class TestIsoHopf:
    def test_ground_field(self):
        A = k_power(1, QQ)
        h = iso_hopf(construct_iso_algebra(A, A, True))
        assert all_exact(verify_axioms(h))

    @pytest.mark.parametrize("p", [3, 5])
    def test_k2_group(self, p):
        F = GF(p)
        U = construct_iso_algebra(k_power(2, F), k_power(2, F), True)
        h = iso_hopf(U)
        assert all_exact(verify_axioms(h))
        chars = enumerate_characters(U.Z)
        assert len(chars) == 2
        table = character_table(h, chars)
        assert table is not None

    def test_k3_symmetric_group(self):
        F = GF(7)
        U = construct_iso_algebra(k_power(3, F), k_power(3, F), True)
        h = iso_hopf(U)
        chars = enumerate_characters(U.Z)
        assert len(chars) == 6
        table = character_table(h, chars)
        assert table is not None
        e = counit_character(h)
        ident = next(i for i, c in enumerate(chars) if all(F(c[n]) == e[n] for n in c))
        assert all(table[ident][i] == i == table[i][ident] for i in range(6))
        # nonabelian of order 6
        assert any(table[a][b] != table[b][a] for a in range(6) for b in range(6))

    def test_wrong_kind(self):
        A = k_power(2, QQ)
        with pytest.raises(ConstructionError):
            iso_hopf(construct_map_algebra(A, A))


class TestGauge:
    HOPF = {"delta": GROUP[0], "counit": GROUP[1], "antipode": GROUP[2]}

    def axioms_exact(self, cd):
        return all_exact(verify_axioms(cd))

    def test_trivial_comodule(self):
        U = construct_map_algebra(Z2(), k_power(2, QQ))
        cd = gauge_coaction(U, self.HOPF, base_algebra(QQ), [])
        assert cd.coaction.images == ()
        assert self.axioms_exact(cd)

    def test_regular(self):
        U = construct_map_algebra(Z2(), k_power(2, QQ))
        cd = gauge_coaction(U, self.HOPF, Z2(), ["L.g*R.g"])
        T = cd.coaction.target
        for i in (1, 2):
            want = T.parse(f"L.z.g.{i}*R.z.g.{i}")
            assert T.verdict(cd.coaction.image_of(f"z.g.{i}") - want).zero
        assert self.axioms_exact(cd)

    def test_free_comodule(self):
        U = construct_map_algebra(Z2(), k_power(2, QQ))
        V = make_algebra(["t"], [], False, QQ)
        cd = gauge_coaction(U, self.HOPF, V, ["L.g*R.t"])
        T = cd.coaction.target
        for i in (1, 2):
            assert T.verdict(cd.coaction.image_of(f"z.t.{i}") - T.parse(f"L.z.g.{i}*R.z.t.{i}")).zero
        assert self.axioms_exact(cd)

    def test_ill_defined_coaction(self):
        U = construct_map_algebra(Z2(), k_power(2, QQ))
        V = make_algebra(["t"], [], False, QQ)
        with pytest.raises(ValidationError):
            gauge_coaction(U, self.HOPF, V, ["L.g*R.t + R.t"])


class TestVerify:
    def test_group_like_coassociative(self):
        d = make_bialgebra(Z2(), *GROUP)
        v = verify_axioms(d)
        assert exact_zero(v["coassociativity"]["g"])

    def test_corrupted(self):
        U = construct_map_algebra(Z2(), k_power(2, QQ))
        d = induce_bialgebra(U, *GROUP)
        images = list(d.comult.images)
        images[1] = d.tensor.parse("L.z.g.2")
        bad = BialgebraData(d.carrier, AlgMorphism(d.carrier, d.tensor, images), d.counit, d.antipode, d.tensor)
        total, failing = summarize(verify_axioms(bad))
        assert not total.zero
        assert failing[1] == "z.g.2" or failing[0] == "comult_morphism"

    def test_induced_all_five(self):
        d = induce_bialgebra(construct_map_algebra(Z2(), k_power(2, QQ)), *GROUP)
        v = verify_axioms(d)
        assert set(AXIOMS) <= set(v)
        assert all(exact_zero(x) for ax in AXIOMS for x in v[ax].values())

    def test_json_shape(self):
        d = make_bialgebra(Z2(), *GROUP)
        out = verdicts_to_json(verify_axioms(d))
        assert out["coassociativity"]["g"] == {"value": "zero", "soundness": "exact"}

    @pytest.mark.parametrize("builder", [group_algebra, function_algebra])
    def test_fr_hopf_data(self, builder):
        assert all_exact(verify_axioms(hopf_data_from_fr(builder(cyclic_group(3), QQ))))


# -- invariants ----------------------------------------------------------------------

CASES = [
    (lambda F: Z2(F), GROUP),
    (lambda F: make_algebra(["g"], ["g^3 - 1"], False, F), (["L.g*R.g"], [1], ["g^2"])),
    (lambda F: make_algebra(["x"], [], False, F), PRIMITIVE),
]
TARGETS = [lambda F: k_power(2, F), lambda F: group_algebra(cyclic_group(2), F).base]


@pytest.mark.parametrize("case", range(len(CASES)))
@pytest.mark.parametrize("target", range(len(TARGETS)))
def test_cocommutativity_transport(case, target):
    B, data = CASES[case]
    U = construct_map_algebra(B(QQ), TARGETS[target](QQ))
    d = induce_bialgebra(U, *data)
    assert all(v.zero for v in cocommutativity(d).values())


@pytest.mark.parametrize("case", range(len(CASES)))
@pytest.mark.parametrize("target", range(len(TARGETS)))
def test_counit_rederived(case, target):
    B, data = CASES[case]
    U = construct_map_algebra(B(QQ), TARGETS[target](QQ))
    d = induce_bialgebra(U, *data)
    A = U.A
    for s, eps_s in zip(U.B.names, data[1]):
        got = [d.counit_of(c) for c in U.family.image(s).comps]
        assert got == [eps_s * u for u in A.unit]


@pytest.mark.parametrize("case", range(len(CASES)))
def test_abelianized_consistency(case):
    B, data = CASES[case]
    A = k_power(2, QQ)
    dn = induce_bialgebra(construct_map_algebra(B(QQ), A, False), *data)
    dc = induce_bialgebra(construct_map_algebra(B(QQ), A, True), *data)
    ab = induced_abelianized(dn)
    assert ab.carrier.presentation.key() == dc.carrier.presentation.key()
    for x, y in zip(ab.comult.images, dc.comult.images):
        assert dc.tensor.verdict(x - y).zero
    assert ab.counit == dc.counit
    assert all(dc.carrier.verdict(x - y).zero for x, y in zip(ab.antipode.images, dc.antipode.images))


def test_iso_mediation_comultiplicative():
    # trivial family of {id, swap} with parameter the function algebra of Z/2
    F = QQ
    A = k_power(2, F)
    U = construct_iso_algebra(A, A, True)
    D = hopf_data_from_fr(function_algebra(cyclic_group(2), F))
    d0, d1 = D.carrier.gen("d0"), D.carrier.gen("d1")
    psi = Family(U.B, A, D.carrier, [TensorElement(A, [d0, d1]), TensorElement(A, [d1, d0])])
    m = mediate(U, psi)
    assert exact_zero(m.check())
    res = check_bialgebra_morphism(m, iso_hopf(U), D)
    assert all(exact_zero(v) for part in res.values() for v in part.values())


def test_map_mediation_comultiplicative():
    F = QQ
    A = k_power(2, F)
    U = construct_map_algebra(A, A)
    D = hopf_data_from_fr(function_algebra(cyclic_group(2), F))
    d0, d1 = D.carrier.gen("d0"), D.carrier.gen("d1")
    psi = Family(U.B, A, D.carrier, [TensorElement(A, [d0, d1]), TensorElement(A, [d1, d0])])
    res = check_bialgebra_morphism(mediate(U, psi), composition_bialgebra(U), D)
    assert all(exact_zero(v) for part in res.values() for v in part.values())
