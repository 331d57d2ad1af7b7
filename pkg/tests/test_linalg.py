from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from resenv.linalg import Subspace, frobenius_kernel, nullspace, rank, rref, solve
from resenv.scalars import Field, frobenius

F5 = Field(5)
K1 = Field(2, ["t"])
K2 = Field(3, ["s", "t"])


def random_matrix(field, rng, rows, cols, density=0.6):
    def entry():
        if rng.random() > density:
            return field.zero
        return field.random(rng, degree=1) if field.nvars else field(rng.randrange(field.p))

    return [[entry() for _ in range(cols)] for _ in range(rows)]


@pytest.mark.parametrize("field", [F5, K1, K2], ids=repr)
@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 10 ** 6), rows=st.integers(0, 5), cols=st.integers(1, 5))
def test_bareiss_rank_matches_echelon_rank(field, seed, rows, cols):
    M = random_matrix(field, random.Random(seed), rows, cols)
    _, pivots = rref(field, M, cols)
    assert rank(field, M, cols) == len(pivots)


@pytest.mark.parametrize("field", [F5, K1], ids=repr)
@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 10 ** 6), rows=st.integers(1, 5), cols=st.integers(1, 5))
def test_nullspace_and_solve(field, seed, rows, cols):
    rng = random.Random(seed)
    M = random_matrix(field, rng, rows, cols)
    N = nullspace(field, M, cols)
    assert N.dim == cols - rank(field, M, cols)
    for v in N.basis():
        assert all(sum((a * b for a, b in zip(row, v)), field.zero) == field.zero for row in M)
    x = [field(rng.randrange(field.p)) for _ in range(cols)]
    b = [sum((a * c for a, c in zip(row, x)), field.zero) for row in M]
    y = solve(field, M, b, cols)
    assert y is not None
    assert [sum((a * c for a, c in zip(row, y)), field.zero) for row in M] == b


def test_solve_inconsistent():
    M = [[F5(1), F5(1)], [F5(2), F5(2)]]
    assert solve(F5, M, [F5(1), F5(3)], 2) is None


def test_subspace_algebra():
    e = [[F5(1), F5(0), F5(0)], [F5(0), F5(1), F5(0)]]
    V = Subspace.span(F5, 3, e)
    W = Subspace.span(F5, 3, [[F5(1), F5(1), F5(0)]])
    assert W.issubset(V) and not V.issubset(W)
    assert V + W == V
    assert [F5(3), F5(4), F5(0)] in V
    assert [F5(0), F5(0), F5(1)] not in V
    assert V.coordinates([F5(2), F5(3), F5(0)]) == [F5(2), F5(3)]
    assert V.complement_indices() == [2]
    assert Subspace.zero(F5, 3).dim == 0 and Subspace.full(F5, 3).dim == 3


def _semilinear_image(field, images, lam, r):
    out = [field.zero] * len(images[0])
    for c, img in zip(lam, images):
        fc = frobenius(c, r)
        out = [o + fc * v for o, v in zip(out, img)]
    return out


def test_frobenius_kernel_example():
    # lambda -> lambda_1^2 t + lambda_2^2 on F_2(t)^2: t is not a square, so the kernel is 0
    t = K1.gen("t")
    K = frobenius_kernel(K1, [(t,), (K1.one,)], 1)
    assert K.dim == 0
    # lambda -> lambda_1^2 t^2 + lambda_2^2: kernel spanned by (1, t)
    K = frobenius_kernel(K1, [(t * t,), (K1.one,)], 1)
    assert K.dim == 1 and [K1.one, t] in K


@pytest.mark.parametrize("field,r", [(K1, 1), (K1, 2), (K2, 1)], ids=repr)
@settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 10 ** 6), n=st.integers(1, 4), dim=st.integers(1, 3))
def test_frobenius_kernel_is_kernel(field, r, seed, n, dim):
    rng = random.Random(seed)
    images = random_matrix(field, rng, n, dim)
    K = frobenius_kernel(field, images, r)
    for v in K.basis():
        assert not any(_semilinear_image(field, images, v, r))
    # a kernel vector built from squares of constants must be found
    if n >= 2:
        images[1] = [-c for c in images[0]]
        K = frobenius_kernel(field, images, r)
        assert [field.one, field.one] + [field.zero] * (n - 2) in K
