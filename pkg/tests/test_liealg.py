from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from resenv import fixtures
from resenv.errors import ClosureError, StructureError, UnsupportedClass
from resenv.liealg import (
    RestrictedLieAlgebra,
    change_basis,
    classify,
    delta,
    derived_subspace,
    is_p_nilpotent,
    is_torus,
    o_p,
    quotient,
    restricted_closure,
    restricted_ideal_closure,
    semilinear_kernel,
    subalgebra,
    validate,
)
from resenv.scalars import Field

NONABELIAN = [fixtures.heisenberg(), fixtures.heisenberg_derivation(), fixtures.nonabelian2()]
ALL_FIXTURES = NONABELIAN + [
    fixtures.strongly_abelian(3),
    fixtures.torus(2),
    fixtures.torus(2, 3),
    fixtures.mixed_abelian(),
    fixtures.nil_chain_abelian(),
    fixtures.nonabelian2(3),
    fixtures.sl2(3),
    fixtures.perfect_field_algebra(1),
    fixtures.perfect_field_algebra(2),
]


def random_element(L, rng):
    F = L.field
    if F.nvars:
        return L.element([F.random(rng, degree=1) if rng.random() < 0.7 else F.zero for _ in range(L.n)])
    return L.element([F(rng.randrange(L.p)) for _ in range(L.n)])


# -- validation ---------------------------------------------------------------

@pytest.mark.parametrize("L", ALL_FIXTURES, ids=lambda L: f"{L.name}-p{L.p}")
def test_fixtures_are_valid(L):
    rep = validate(L)
    assert rep.ok, rep.failures


def test_ad_compatibility_failure_is_reported():
    # (ad y)^2 = 0 on Heisenberg, while y^[2] = x would need (ad y)^2 = ad x != 0
    L = RestrictedLieAlgebra(Field(2), ["x", "y", "z"], {("x", "y"): {"z": 1}}, {"y": {"x": 1}})
    rep = validate(L)
    assert not rep.checks["p_map_ad_compatibility"]
    assert any("y" in f for f in rep.failures)


def test_jacobi_failure_is_reported():
    brackets = {("a", "b"): {"c": 1}, ("b", "c"): {"a": 1}, ("c", "a"): {"c": 1}}
    L = RestrictedLieAlgebra(Field(3), ["a", "b", "c"], brackets, {})
    rep = validate(L)
    assert not rep.checks["jacobi"] and not rep.ok


@pytest.mark.parametrize(
    "labels,brackets,pmap",
    [
        (["x", "x"], {}, {}),
        (["x", "1y"], {}, {}),
        (["x", "y"], {("x", "q"): {"y": 1}}, {}),
        (["x", "y"], {("x", "y"): [1]}, {}),
        (["x", "y"], {}, [[0, 0]]),
        (["x", "y"], [("x", "y", {"x": 1}), ("x", "y", {"y": 1})], {}),
    ],
)
def test_malformed_tables_raise_structure_error(labels, brackets, pmap):
    with pytest.raises(StructureError):
        RestrictedLieAlgebra(Field(2), labels, brackets, pmap)


def test_label_clash_with_indeterminate():
    with pytest.raises(StructureError):
        RestrictedLieAlgebra(Field(2, ["t"]), ["t"], {}, {})


# -- bracket and p-map ----------------------------------------------------------

def test_bracket_examples(heis):
    x, y, z = heis.basis()
    assert heis.bracket(x, y) == z
    assert heis.bracket(x + y, x) == z
    assert not heis.bracket(x + y, x + y)


def test_p_power_perfect_field_formula(pf2):
    F = pf2.field
    rng = random.Random(1)
    t1, t2 = F.gens()
    for _ in range(20):
        a, b1, b2 = (F.random(rng, degree=1) for _ in range(3))
        u = pf2.element([a, b1, b2])
        assert pf2.p_power(u) == pf2.element([a * a + b1 * b1 * t1 + b2 * b2 * t2, F.zero, F.zero])


def test_p_power_examples(heis):
    x, y, z = heis.basis()
    assert heis.p_power(x + y) == z
    S = fixtures.strongly_abelian(3)
    assert not S.p_power(S.gen(0) + S.gen(2))
    assert heis.p_power(x + y, 2) == heis.zero()


@pytest.mark.parametrize("L", NONABELIAN, ids=lambda L: L.name)
@settings(max_examples=50, deadline=None)
@given(seed=st.integers(0, 10 ** 6))
def test_jacobson_formula_p2(L, seed):
    rng = random.Random(seed)
    x, y = random_element(L, rng), random_element(L, rng)
    assert L.p_power(x + y) == L.p_power(x) + L.p_power(y) + L.bracket(x, y)


@pytest.mark.parametrize("L", ALL_FIXTURES, ids=lambda L: f"{L.name}-p{L.p}")
@settings(max_examples=20, deadline=None)
@given(seed=st.integers(0, 10 ** 6))
def test_p_map_semilinear_on_scalars(L, seed):
    rng = random.Random(seed)
    u = random_element(L, rng)
    c = L.field.random(rng, degree=1) if L.field.nvars else L.field(rng.randrange(L.p))
    assert L.p_power(u * c) == L.p_power(u) * (c ** L.p)


@pytest.mark.parametrize("L", ALL_FIXTURES, ids=lambda L: f"{L.name}-p{L.p}")
@settings(max_examples=20, deadline=None)
@given(seed=st.integers(0, 10 ** 6))
def test_bracket_is_alternating_and_jacobi(L, seed):
    rng = random.Random(seed)
    a, b, c = (random_element(L, rng) for _ in range(3))
    assert not L.bracket(a, a)
    assert L.bracket(a, b) == -L.bracket(b, a)
    jac = L.bracket(a, L.bracket(b, c)) + L.bracket(b, L.bracket(c, a)) + L.bracket(c, L.bracket(a, b))
    assert not jac


# -- closures and classification ---------------------------------------------------

def test_restricted_closure_examples(heis, pf2):
    T = fixtures.torus(1)
    assert restricted_closure(T, [T.gen(0)]).dim == 1
    assert restricted_closure(heis, [heis.gen("x"), heis.gen("y")]).dim == 3
    C = restricted_closure(pf2, [pf2.gen("y1")])
    assert C.dim == 2 and pf2.gen("x") in C and pf2.gen("y2") not in C


@pytest.mark.parametrize("L", ALL_FIXTURES, ids=lambda L: f"{L.name}-p{L.p}")
def test_closures_are_closed_and_idempotent(L):
    rng = random.Random(4)
    S = [random_element(L, rng) for _ in range(2)]
    C = restricted_closure(L, S)
    assert C.is_subalgebra and C.is_restricted
    assert restricted_closure(L, C.elements(L)).space == C.space
    I = restricted_ideal_closure(L, S)
    assert I.is_restricted_ideal and C.space.issubset(I.space)
    assert restricted_ideal_closure(L, I.elements(L)).space == I.space


def test_classify_flags(pf1):
    info = classify(pf1, [pf1.gen("y1")])
    assert info.is_subalgebra and not info.is_restricted and info.is_ideal
    H = fixtures.heisenberg()
    info = classify(H, [H.gen("x")])
    assert info.is_restricted and not info.is_ideal
    assert derived_subspace(H).dim == 1


def test_is_p_nilpotent_examples(heis):
    assert is_p_nilpotent(heis, heis.zero()).index == 0
    T = fixtures.torus(1)
    res = is_p_nilpotent(T, T.gen(0))
    assert not res and "repeats" in res.certificate
    res = is_p_nilpotent(heis, heis.gen("x") + heis.gen("y"))
    assert res and res.index == 2


def test_is_torus_examples(pf1):
    assert is_torus(fixtures.torus(1), [fixtures.torus(1).gen(0)])
    N = fixtures.nil_line()
    assert not is_torus(N, [N.gen(0)])
    assert not is_torus(pf1, [pf1.gen("x"), pf1.gen("y1")])
    assert is_torus(pf1, [pf1.gen("x")])


# -- O_p and semilinear kernels -------------------------------------------------------

@pytest.mark.parametrize("m", [1, 2, 3])
def test_o_p_vanishes_on_perfect_field_truncation(m):
    L = fixtures.perfect_field_algebra(m)
    assert o_p(L).dim == 0
    assert semilinear_kernel(L, 1).dim == 0


def test_o_p_examples(heis):
    assert o_p(fixtures.strongly_abelian(3)).dim == 3
    assert o_p(heis).dim == 3
    assert o_p(fixtures.torus(2)).dim == 0
    O = o_p(fixtures.heisenberg_derivation())
    assert O.dim == 3 and fixtures.heisenberg_derivation().gen("t") not in O
    assert o_p(fixtures.perfect_field_algebra(1, sabotage=True)).dim == 1
    with pytest.raises(UnsupportedClass):
        o_p(fixtures.sl2(3))


@pytest.mark.parametrize("L", [f for f in ALL_FIXTURES if f.is_abelian], ids=lambda L: f"{L.name}-p{L.p}")
def test_o_p_is_exactly_the_p_nilpotent_vectors(L):
    O = o_p(L)
    assert O.is_restricted_ideal
    if L.field.is_prime_field and L.p ** L.n <= 64:
        from itertools import product

        for coords in product(range(L.p), repeat=L.n):
            u = L.element([L.field(c) for c in coords])
            assert bool(is_p_nilpotent(L, u)) == (u in O)


def test_semilinear_kernel_examples():
    D = RestrictedLieAlgebra(Field(2), ["x1", "x2"], {}, {"x1": {"x1": 1}})
    K = semilinear_kernel(D, 1)
    assert K.dim == 1 and D.gen("x2").coords in K
    assert semilinear_kernel(fixtures.strongly_abelian(2), 2).dim == 2
    with pytest.raises(UnsupportedClass):
        semilinear_kernel(fixtures.heisenberg(), 1)


def test_delta_is_everything(heis):
    assert delta(heis).dim == 3
    Z = RestrictedLieAlgebra(Field(2), [], {}, {})
    assert delta(Z).dim == 0


# -- quotients, subalgebras, change of basis -----------------------------------------------

def test_quotient_examples(heis, pf1):
    assert quotient(heis, heis.basis()).algebra.n == 0
    Q = quotient(heis, [heis.gen("z")])
    assert Q.algebra.n == 2 and Q.algebra.is_abelian
    assert all(not Q.algebra.p_power(g) for g in Q.algebra.basis())
    with pytest.raises(ClosureError) as exc:
        quotient(pf1, [pf1.gen("y1")])
    assert exc.value.violated == "p-map"
    with pytest.raises(ClosureError) as exc:
        quotient(heis, [heis.gen("x")])
    assert exc.value.violated == "bracket"


def test_quotient_project_lift_round_trip():
    L = fixtures.heisenberg_derivation()
    Q = quotient(L, [L.gen("z")])
    rng = random.Random(5)
    for _ in range(10):
        u = random_element(L, rng)
        assert Q.project(Q.lift(Q.project(u))) == Q.project(u)
        v = random_element(L, rng)
        assert Q.project(L.bracket(u, v)) == Q.algebra.bracket(Q.project(u), Q.project(v))


def test_subalgebra_and_errors(heis):
    S = subalgebra(heis, [heis.gen("x"), heis.gen("z")])
    assert S.algebra.n == 2 and S.algebra.is_abelian
    with pytest.raises(ClosureError):
        subalgebra(heis, [heis.gen("x"), heis.gen("y")])


def test_change_basis_preserves_structure(heis):
    F = heis.field
    vecs = [(F.one, F.one, F.zero), (F.zero, F.one, F.zero), (F.zero, F.one, F.one)]
    L2, coords = change_basis(heis, vecs, ["a", "b", "c"])
    assert validate(L2).ok
    a, b = L2.gen("a"), L2.gen("b")
    img = heis.bracket(heis.element(vecs[0]), heis.element(vecs[1]))
    assert L2.bracket(a, b).coords == coords(img.coords)
    with pytest.raises(ValueError):
        change_basis(heis, [vecs[0], vecs[0], vecs[1]], ["a", "b", "c"])


def test_parse_element(pf1):
    u = pf1.parse_element("t1*x + y1")
    assert u.coords == (pf1.field.gen("t1"), pf1.field.one)
    assert pf1.parse_element(str(u)) == u
    v = pf1.parse_element("(t1 + 1)/t1*y1")
    assert v.coords[1] * pf1.field.gen("t1") == pf1.field("t1 + 1")
