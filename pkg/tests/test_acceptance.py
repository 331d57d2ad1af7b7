"""Acceptance gate: criteria 1-9, one PASS/FAIL line each.

Run under pytest (lines appear in the terminal summary) or directly with
``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import json
import os
import random
import subprocess
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import as_int_vector, nilpotent_vectors_f2, span_f2  # noqa: E402

from resenv import fixtures  # noqa: E402
from resenv.errors import NotLiftableError  # noqa: E402
from resenv.liealg import o_p, quotient  # noqa: E402
from resenv.radical import (  # noqa: E402
    ideal_closure,
    jacobson_radical,
    lift_idempotent,
    primitive_idempotents,
    quotient_is_reduced,
    section_from_quotient,
)
from resenv.verify.scenarios import (  # noqa: E402
    check_chain,
    greedy_chain,
    scenario_free_module,
    scenario_locally_finite,
    scenario_perfect_field,
    scenario_torus_chain,
)


def _random_lie(L, rng):
    return L.element([L.field(rng.randrange(L.p)) for _ in range(L.n)])


def criterion_1():
    notes, ok = [], True
    for m in (1, 2):
        for r in (1, 2):
            start = time.perf_counter()
            rep = scenario_perfect_field(m=m, r=r, trials=10, seed=7)
            elapsed = time.perf_counter() - start
            ids = [c.claim for c in rep.checks]
            good = rep.passed and ids == [f"C{i}" for i in range(7)] and elapsed < 10
            ok &= good
            notes.append(f"m={m} r={r} {elapsed:.2f}s{'' if good else ' failed: ' + ','.join(rep.failed())}")
    return ok, "; ".join(notes)


PBW_FIXTURES = [
    fixtures.heisenberg(2),
    fixtures.heisenberg_derivation(2),
    fixtures.mixed_abelian(2),
    fixtures.nonabelian2(3),
    fixtures.sl2(3),
    fixtures.torus(2, 3),
]


def criterion_2():
    start = time.perf_counter()
    rng = random.Random(2)
    failures = []
    for L in PBW_FIXTURES:
        A = L.env
        if A.dim != L.p ** L.n or len(set(A.basis)) != A.dim:
            failures.append(f"{L.name}: dim {A.dim}")
        for _ in range(200):
            a, b, c = (A.random_element(rng) for _ in range(3))
            if (a * b) * c != a * (b * c):
                failures.append(f"{L.name}: associativity")
                break
        samples = A.gens() + [A.random_element(rng) for _ in range(25)]
        for u in samples:
            bad = [k for k, v in A.hopf_axioms(u).items() if not v]
            if bad:
                failures.append(f"{L.name}: {','.join(bad)} at {u}")
                break
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 30
    return ok, f"{len(PBW_FIXTURES)} algebras, {elapsed:.1f}s" + (f"; {failures[:3]}" if failures else "")


def criterion_3():
    rng = random.Random(3)
    bad = []
    algebras = [fixtures.heisenberg(2), fixtures.heisenberg_derivation(2), fixtures.nonabelian2(2)]
    for L in algebras:
        assert not L.is_abelian
        A = L.env
        for _ in range(100):
            x, y = _random_lie(L, rng), _random_lie(L, rng)
            expected = L.p_power(x) + L.p_power(y) + L.bracket(x, y)
            via_env = A.power(A.from_lie(x + y), 2)
            if not via_env.is_lie() or via_env.to_lie() != expected or L.p_power(x + y) != expected:
                bad.append(f"{L.name}: x={x} y={y}")
    return not bad, f"300 pairs in {len(algebras)} algebras" + (f"; {bad[:3]}" if bad else "")


RADICAL_FIXTURES = [
    fixtures.strongly_abelian(3),
    fixtures.torus(2),
    fixtures.torus_plus_nil(),
    fixtures.mixed_abelian(),
    fixtures.nil_chain_abelian(),
]


def criterion_4():
    notes, ok = [], True
    for L in RADICAL_FIXTURES:
        A = L.env
        assert A.dim <= 16
        J = jacobson_radical(L)
        oracle = nilpotent_vectors_f2(A)
        ours = span_f2(as_int_vector(r) for r in J.space.rows) or {tuple([0] * A.dim)}
        good = ours == oracle and J.nil and quotient_is_reduced(A, J.space)
        ok &= good
        notes.append(f"{L.name} dim J={J.dim}{'' if good else ' MISMATCH'}")
    H = fixtures.heisenberg()
    A = H.env
    J = jacobson_radical(H, H.basis())
    omega = A.augmentation_ideal()
    # u(L)/J is one-dimensional, i.e. the field F_2 itself, hence reduced
    good = J.space == omega and J.nilpotency_index is not None and A.dim - J.dim == 1
    # certified index: J^(k-1) != 0 = J^k, checked by brute force over F_2
    k = J.nilpotency_index
    members = [A.from_vector(r) for r in J.space.rows]
    prods = [A.one()]
    for _ in range(k - 1):
        prods = [a * b for a in prods for b in members]
    good &= any(prods) and not any(a * b for a in prods for b in members)
    ok &= good
    notes.append(f"heisenberg J=omega index {k}{'' if good else ' FAILED'}")
    return ok, "; ".join(notes)


LF_CASES = [
    ("heisenberg", None),
    ("torus-plus-nil", ["w"]),
    ("heisenberg-derivation", ["x", "y", "z"]),
    ("nonabelian-2", ["y"]),
]


def criterion_5():
    notes, ok = [], True
    for name, P in LF_CASES:
        L = fixtures.builtin(name)
        rep = scenario_locally_finite(L, None if P is None else [L.gen(k) for k in P])
        ok &= rep.passed
        notes.append(f"{name}: {'ok' if rep.passed else ','.join(rep.failed())}")
    return ok, "; ".join(notes)


def criterion_6():
    start = time.perf_counter()
    rep = scenario_torus_chain(k=3, p=2)
    elapsed = time.perf_counter() - start
    ok = rep.passed and [c.claim for c in rep.checks] == ["TC1", "TC2", "TC3", "TC4", "TC5"] and elapsed < 1
    return ok, f"{elapsed:.3f}s" + ("" if rep.passed else f" failed: {rep.failed()}")


FM_CASES = [
    ("heisenberg", ["x"], [["y", "x"]]),
    ("heisenberg-derivation", ["t"], [["x", "y", "t"], ["t", "x", "y"]]),
    ("mixed-abelian", ["x1", "v"], [["v", "x1", "x2"]]),
]


def _oracle_notin(A, prefix, longer) -> bool:
    """prefix is not in longer*u(L): enumerate the whole span over F_2."""
    gens = [as_int_vector((longer * A.monomial(m)).to_vector()) for m in A.basis]
    return as_int_vector(prefix.to_vector()) not in span_f2(gens)


def criterion_7():
    notes, ok = [], True
    for name, H, chains in FM_CASES:
        L = fixtures.builtin(name)
        A = L.env
        Hl = [L.gen(k) for k in H]
        rep = scenario_free_module(L, Hl, None, trials=100, seed=7)
        good = rep.passed
        for chain in [greedy_chain(L)] + [[L.gen(k) for k in c] for c in chains]:
            check_chain(L, chain)
            rep_c = scenario_free_module(L, Hl, chain, trials=1, seed=7)
            good &= rep_c.passed
            prefix = A.one()
            for i in range(len(chain) - 1):
                prefix = prefix * A.from_lie(chain[i])
                longer = prefix * A.from_lie(chain[i + 1])
                good &= _oracle_notin(A, prefix, longer)
        ok &= good
        notes.append(f"{name}: {'ok' if good else 'FAILED'}")
    return ok, "; ".join(notes)


def _lifting_cases():
    """(algebra, nil ideal N, idempotent representatives modulo N)."""
    cases = []
    for L, P in (
        (fixtures.heisenberg_derivation(), ["x", "y", "z"]),
        (fixtures.mixed_abelian(), None),
        (fixtures.torus_plus_nil(), None),
    ):
        A = L.env
        O = o_p(L) if P is None else P
        N = jacobson_radical(L, O if P is None else [L.gen(k) for k in P])
        info = O if P is None else [L.gen(k) for k in P]
        Q = quotient(L, info)
        reps = [section_from_quotient(A, Q, e) for e in primitive_idempotents(Q.algebra.env)]
        cases.append((A, N, reps))
    return cases


def criterion_8():
    rng = random.Random(8)
    cases = _lifting_cases()
    bad, total = [], 0
    while total < 50:
        A, N, reps = cases[total % len(cases)]
        subset = [e for e in reps if rng.random() < 0.5] or reps[:1]
        e0 = sum(subset, A.zero())
        n = A.zero()
        for r in N.space.rows:
            if rng.random() < 0.5:
                n = n + A.from_vector(r)
        e = e0 + n
        g = lift_idempotent(e, N)
        if g * g != g or (g - e) not in N:
            bad.append(str(e))
        total += 1
    # negative controls
    rejected = 0
    T3 = fixtures.torus(1, 3)
    A3 = T3.env
    zero = ideal_closure(A3, [])
    try:
        lift_idempotent(A3.gen("x1"), zero)
    except NotLiftableError:
        rejected += 1
    T2 = fixtures.torus(1, 2)
    A2 = T2.env
    not_nil = ideal_closure(A2, [A2.gen("x1")])
    try:
        lift_idempotent(A2.gen("x1"), not_nil)
    except NotLiftableError:
        rejected += 1
    L3 = fixtures.nonabelian2(3)
    N3 = jacobson_radical(L3, [L3.gen("y")])
    try:
        lift_idempotent(L3.env.gen("x") * 2, N3)  # (2x)^2 = x^2 != 2x modulo N
    except NotLiftableError:
        rejected += 1
    ok = not bad and rejected == 3
    return ok, f"{total} lifts, {len(bad)} bad, {rejected}/3 negative controls rejected"


def _cli_json(args: list[str], hashseed: str) -> bytes:
    env = dict(os.environ, PYTHONHASHSEED=hashseed)
    proc = subprocess.run(
        [sys.executable, "-m", "resenv", *args, "--report", "json"],
        capture_output=True,
        env=env,
        check=False,
    )
    if proc.returncode != 0:
        raise AssertionError(proc.stderr.decode())
    return proc.stdout


DETERMINISM_RUNS = [
    ["verify", "perfect-field", "--m", "1", "--r", "2", "--seed", "11"],
    ["verify", "free-module", "--algebra", "builtin:heisenberg-derivation", "--subalgebra", "t", "--seed", "3"],
    ["verify", "torus-chain", "--k", "3"],
    ["verify", "locally-finite", "--algebra", "builtin:heisenberg-derivation", "--ideal", "x,y,z"],
    ["radical", "--algebra", "builtin:mixed-abelian"],
]


def criterion_9():
    bad = []
    for args in DETERMINISM_RUNS:
        outs = {_cli_json(args, seed) for seed in ("0", "1", "12345")}
        json.loads(next(iter(outs)))
        if len(outs) != 1:
            bad.append(" ".join(args[:2]))
    in_process = {scenario_perfect_field(m=2, r=1, seed=5).to_json() for _ in range(2)}
    if len(in_process) != 1:
        bad.append("in-process perfect-field")
    return not bad, f"{len(DETERMINISM_RUNS)} CLI runs x 3 hash seeds" + (f"; differ: {bad}" if bad else "")


CRITERIA = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
}


def _evaluate(number: int) -> tuple[bool, str]:
    try:
        return CRITERIA[number]()
    except Exception as exc:  # an exception is a FAIL with the reason attached
        return False, f"{type(exc).__name__}: {exc}"


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    from conftest import record_acceptance

    ok, detail = _evaluate(number)
    record_acceptance(number, ok, detail)
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, detail


if __name__ == "__main__":
    status = 0
    for number in sorted(CRITERIA):
        ok, detail = _evaluate(number)
        print(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}", flush=True)
        status |= not ok
    sys.exit(status)
