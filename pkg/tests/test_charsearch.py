import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from famalg import kernel
from famalg.charsearch import (
    compile_system,
    correspondence_report,
    enumerate_characters,
    enumerate_isomorphisms,
    enumerate_morphisms,
    solve_system,
)
from famalg.errors import BudgetExceeded, ValidationError
from famalg.field import GF, QQ
from famalg.fpalg import make_algebra
from famalg.fralg import cyclic_group, group_algebra, k_power
from famalg.mapuniv import construct_iso_algebra, construct_map_algebra
from famalg.ncpoly import FreeAlgebra


class TestCharacters:
    def test_square_roots_of_one(self):
        C = make_algebra(["x"], ["x^2 - 1"], False, GF(5))
        assert enumerate_characters(C) == [{"x": 1}, {"x": 4}]

    def test_no_square_root_of_minus_one(self):
        C = make_algebra(["x"], ["x^2 + 1"], False, GF(3))
        assert enumerate_characters(C) == []

    def test_iso_algebra(self):
        U = construct_iso_algebra(k_power(2, GF(3)), k_power(2, GF(3)), True)
        assert len(enumerate_characters(U.Z)) == 2

    def test_lexicographic(self):
        C = make_algebra(["x", "y"], ["x*y - 1"], True, GF(7))
        chars = enumerate_characters(C)
        keys = [(c["x"], c["y"]) for c in chars]
        assert keys == sorted(keys) and len(keys) == 6

    def test_unit_ideal(self):
        C = make_algebra(["x"], ["x - x + 1"], False, GF(5))
        assert enumerate_characters(C) == []

    def test_needs_prime_field(self):
        with pytest.raises(ValidationError):
            enumerate_characters(make_algebra(["x"], [], False, QQ))

    def test_budget(self):
        C = make_algebra(["a", "b", "c", "d", "e", "f", "g", "h", "i"], [], False, GF(7))
        with pytest.raises(BudgetExceeded) as err:
            enumerate_characters(C, budget=1000)
        assert err.value.required == 7 ** 9


class TestMorphisms:
    def test_idempotents_of_k2(self):
        B = make_algebra(["x"], ["x^2 - x"], False, GF(3))
        morphs = enumerate_morphisms(B, k_power(2, GF(3)))
        assert sorted(m[0] for m in morphs) == [(0, 0), (0, 1), (1, 0), (1, 1)]

    def test_cube_roots(self):
        B = make_algebra(["x"], ["x^3 - 1"], False, GF(7))
        assert sorted(m[0] for m in enumerate_morphisms(B, k_power(1, GF(7)))) == [(1,), (2,), (4,)]

    @pytest.mark.parametrize("p", [2, 3, 5, 7])
    def test_nilpotent_to_field(self, p):
        B = make_algebra(["x"], ["x^2"], False, GF(p))
        assert enumerate_morphisms(B, k_power(1, GF(p))) == [[(0,)]]

    def test_isomorphisms_k3(self):
        assert len(enumerate_isomorphisms(k_power(3, GF(3)), k_power(3, GF(3)))) == 6

    def test_budget(self):
        B = make_algebra(["x", "y", "z"], [], False, GF(5))
        with pytest.raises(BudgetExceeded):
            enumerate_morphisms(B, k_power(3, GF(5)), budget=100)


class TestReports:
    def test_map(self):
        F = GF(5)
        B = make_algebra(["g"], ["g^2 - 1"], False, F)
        rep = correspondence_report("map", B, k_power(2, F))
        assert rep.matched and rep.left_count == rep.right_count == 4
        assert sorted(rep.right_items) == [[[1, 1]], [[1, 4]], [[4, 1]], [[4, 4]]]

    def test_iso(self):
        rep = correspondence_report("iso", k_power(2, GF(3)), k_power(2, GF(3)))
        assert rep.matched and rep.left_count == rep.right_count == 2

    def test_galois(self):
        F = GF(5)
        from famalg.fralg import monogenic
        rep = correspondence_report("galois", monogenic([-2, 0], F), [(1, 0)])
        assert rep.matched and rep.left_count == rep.right_count == 2

    def test_pontryagin_with_table(self):
        from famalg.fralg import function_algebra
        rep = correspondence_report("pontryagin", function_algebra(cyclic_group(3), GF(7)),
                                    table=cyclic_group(3))
        assert rep.matched and rep.left_count == 3 and rep.extra["dual_group_order"] == 3

    def test_unknown_kind(self):
        with pytest.raises(ValidationError):
            correspondence_report("nonsense", None)

    def test_json(self):
        F = GF(3)
        rep = correspondence_report("map", make_algebra(["x"], ["x^2"], False, F), k_power(2, F))
        d = rep.to_json()
        assert d["characters"] == d["morphisms"] == 1 and d["matched"]


MATRIX_B = [
    lambda F: make_algebra(["x"], ["x^2 - 1"], False, F),
    lambda F: make_algebra(["x"], ["x^3 - 1"], False, F),
    lambda F: make_algebra(["x"], ["x^2"], False, F),
    lambda F: make_algebra(["x", "y"], ["x*y - y*x", "x^2 - y"], False, F),
]
MATRIX_A = [lambda F: k_power(2, F), lambda F: k_power(3, F),
            lambda F: group_algebra(cyclic_group(2), F).base]


@pytest.mark.parametrize("p", [3, 5])
@pytest.mark.parametrize("b", range(len(MATRIX_B)))
@pytest.mark.parametrize("a", range(len(MATRIX_A)))
def test_canonical_map(p, b, a):
    F = GF(p)
    B, A = MATRIX_B[b](F), MATRIX_A[a](F)
    rep = correspondence_report("map", B, A)
    assert rep.matched and rep.left_count == rep.right_count
    U = construct_map_algebra(B, A, True)
    chars = enumerate_characters(U.Z)
    for i, j in rep.pairing:
        f = U.morphism_from_character(chars[i])
        assert [[int(c) for c in f[s]] for s in B.names] == rep.right_items[j]


# -- kernels ------------------------------------------------------------------------

PRIMES = [2, 3, 5, 7]


@st.composite
def systems(draw):
    p = draw(st.sampled_from(PRIMES))
    g = draw(st.integers(1, 4))
    while p ** g > 10 ** 4:
        g -= 1
    ring = FreeAlgebra([f"v{i}" for i in range(g)], GF(p))
    word = st.lists(st.integers(0, g - 1), max_size=3).map(tuple)
    poly = st.lists(st.tuples(word, st.integers(0, p - 1)), min_size=1, max_size=3).map(ring.from_terms)
    polys = draw(st.lists(poly, max_size=3))
    return [f for f in polys if not f.is_zero()], g, p


@given(systems())
def test_pruning_sound(sys_):
    polys, g, p = sys_
    assert solve_system(polys, g, p, prune=True) == solve_system(polys, g, p, prune=False)


def brute(polys, g, p):
    from itertools import product
    flat = compile_system(polys, g, p, prune=False)
    if flat is None:
        return []
    out = []
    for pt in product(range(p), repeat=g):
        ok = True
        for f in polys:
            acc = 0
            for w, c in f.terms.items():
                t = int(c)
                for x in w:
                    t = t * pt[x] % p
                acc = (acc + t) % p
            if acc:
                ok = False
                break
        if ok:
            out.append(list(pt))
    return out


@given(systems())
def test_search_matches_brute_force(sys_):
    polys, g, p = sys_
    assert [list(s) for s in solve_system(polys, g, p)] == brute(polys, g, p)


@pytest.mark.skipif("cython" not in kernel.available(), reason="compiled kernel not built")
@given(systems(), st.booleans())
def test_kernels_agree(sys_, prune):
    polys, g, p = sys_
    ks = kernel.available()
    flat = compile_system(polys, g, p, prune)
    if flat is None:
        return
    py = ks["python"](g, p, *flat, 10 ** 6)
    cy = ks["cython"](g, p, *flat, 10 ** 6)
    assert [list(s) for s in py[0]] == [list(s) for s in cy[0]]
    assert py[1] == cy[1]


@pytest.mark.skipif("cython" not in kernel.available(), reason="compiled kernel not built")
def test_kernels_agree_on_iso_algebra():
    F = GF(5)
    U = construct_iso_algebra(k_power(3, F), k_power(3, F), True)
    ks = kernel.available()
    a = enumerate_characters(U.Z, search=ks["python"])
    b = enumerate_characters(U.Z, search=ks["cython"])
    assert a == b and len(a) == 6


@pytest.mark.parametrize("name", sorted(kernel.available()))
def test_kernel_budget_signal(name):
    search = kernel.available()[name]
    ring = FreeAlgebra(["a", "b", "c"], GF(7))
    flat = compile_system([], 3, 7)
    sols, nodes = search(3, 7, *flat, 50)
    assert nodes == -1


def test_random_characters_satisfy_relations():
    rng = random.Random(3)
    F = GF(5)
    for _ in range(10):
        B = MATRIX_B[rng.randrange(len(MATRIX_B))](F)
        A = MATRIX_A[rng.randrange(len(MATRIX_A))](F)
        U = construct_map_algebra(B, A, True)
        for chi in enumerate_characters(U.Z):
            for r in U.Z.presentation.effective_relations():
                vals = [F(chi[n]) for n in U.Z.names]
                acc = 0
                for w, c in r.terms.items():
                    t = c
                    for x in w:
                        t = F.mul(t, vals[x])
                    acc = F.add(acc, t)
                assert acc == 0


def test_fallback_selected_by_environment():
    import os
    import subprocess
    import sys
    env = dict(os.environ, FAMALG_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "from famalg import kernel; print(kernel.KERNEL_NAME)"],
                         capture_output=True, text=True, env=env, check=True).stdout.strip()
    assert out == "python"
