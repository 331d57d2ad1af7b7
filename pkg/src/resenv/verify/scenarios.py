"""Verification scenarios.

Each scenario builds its algebras, runs a list of named checks and returns
a :class:`~resenv.verify.report.ScenarioReport`.  All randomness flows
from one ``random.Random(seed)``, so a report is a pure function of its
parameters.
"""

from __future__ import annotations

import os
import random
from itertools import combinations
from typing import Sequence

from ..envalg import EnvAlgebra, EnvElement
from ..errors import DegreeBudgetExceeded, PreconditionError, UnsupportedClass, UsageError
from ..fixtures import perfect_field_algebra, torus
from ..liealg import (
    LieElement,
    RestrictedLieAlgebra,
    is_p_nilpotent,
    is_torus,
    o_p,
    quotient,
    restricted_closure,
    restricted_ideal_closure,
    validate,
)
from ..linalg import Subspace, nullspace, unit
from ..radical import (
    annihilator_idempotent_chain,
    certify_p_nil,
    ideal_closure,
    integral_space,
    jacobson_radical,
    lift_complete_set,
    primitive_idempotents,
    projection_hom,
    quotient_is_reduced,
    section_from_quotient,
)
from ..scalars import kp_module_coords
from .report import ScenarioReport

DEFAULT_DEGREE_BUDGET = 512
MAX_MISMATCHES = 3


def degree_budget() -> int:
    raw = os.environ.get("RESENV_DEGREE_BUDGET")
    if raw is None:
        return DEFAULT_DEGREE_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"RESENV_DEGREE_BUDGET must be an integer, got {raw!r}") from None
    if value < 1:
        raise UsageError("RESENV_DEGREE_BUDGET must be positive")
    return value


def degree_estimate(m: int, r: int) -> int:
    """Numerator degree bound for the 2^r-th powers formed by the perfect-field checks.

    Random coefficients have degree <= 2 and the denominators of the C3
    elements have degree <= 4 + m, so 2^r-th powers stay below 2^r (4 + m).
    """
    return (2 ** r) * (4 + m)


def _first(items, k=MAX_MISMATCHES):
    return items[:k]


# ---------------------------------------------------------------------------
# the perfect-field example
# ---------------------------------------------------------------------------

def _subsets(m: int) -> list[tuple[int, ...]]:
    return [c for k in range(1, m + 1) for c in combinations(range(m), k)]


def _y_word(ys: Sequence[EnvElement], I: Sequence[int], one: EnvElement) -> EnvElement:
    out = one
    for i in I:
        out = out * ys[i]
    return out


def scenario_perfect_field(m: int = 2, r: int = 2, trials: int = 10, seed: int = 7,
                           sabotage: bool = False) -> ScenarioReport:
    """Truncation span{x, y_1..y_m} over F_2(t_1..t_m) with x^[2] = x, y_i^[2] = t_i x."""
    if m < 1:
        raise UsageError("m must be >= 1")
    if not 1 <= r <= 3:
        raise UsageError("r must be in 1..3")
    if trials < 1:
        raise UsageError("trials must be >= 1")
    budget = degree_budget()
    estimate = degree_estimate(m, r)
    if estimate > budget:
        raise DegreeBudgetExceeded(estimate, budget)

    rng = random.Random(seed)
    L = perfect_field_algebra(m, sabotage=sabotage)
    F, A = L.field, L.env
    x = A.gen("x")
    ys = [A.gen(f"y{i + 1}") for i in range(m)]
    one = A.one()
    # s_i is the x-coefficient of y_i^[2] (t_i, or 0 for a sabotaged y_1)
    s = [L.pmap_vector(i + 1)[0] for i in range(m)]
    q = 2 ** r
    half = q // 2
    rep = ScenarioReport(
        "perfect-field", {"m": m, "r": r, "trials": trials, "seed": seed, "sabotage": sabotage}
    )

    def c0():
        v = validate(L)
        return v.ok, {"checks": dict(v.checks), "failures": list(v.failures)}

    rep.check("C0", "x^[2] = x, y_i^[2] = t_i x", c0)

    def c1():
        O = o_p(L)
        return O.dim == 0, {"dim": O.dim, "basis": [str(u) for u in O.elements(L)]}

    rep.check("C1", "O_p(L) = 0", c1)

    def c2():
        cases = [(F.zero, F.random(rng, nonzero=True))]
        a = F.random(rng, nonzero=True)
        cases.append((a, a))
        for _ in range(trials):
            a, b = F.random(rng), F.random(rng)
            roll = rng.random()
            if roll < 0.15:
                a = F.zero
            elif roll < 0.3:
                b = a
            cases.append((a, b))
        bad, n_inv = [], 0
        for a, b in cases:
            u = A.scalar(a) + x.scale(b)
            expect = bool(a) and a != b
            got = A.is_invertible(u)
            if expect:
                n_inv += 1
                v = A.scalar(a ** -1) + x.scale(b * (a * a + a * b) ** -1)
                ok = got and u * v == one and v * u == one and A.inverse(u) == v
            else:
                ann = x + one if not a else x
                ok = not got and not (u * ann)
            if not ok:
                bad.append(f"a={a}, b={b}")
        return not bad, {
            "cases": len(cases),
            "invertible": n_inv,
            "singular": len(cases) - n_inv,
            "mismatches": _first(bad),
        }

    rep.check("C2", "(a + bx)(a^-1 + b(a^2 + ab)^-1 x) = 1 iff a != 0, a != b; x(x+1) = 0", c2)

    def c3():
        subsets = _subsets(m)
        bad, shown = [], []
        for trial in range(trials):
            while True:
                beta = F.random(rng, nonzero=(trial == 0))
                if trial == 0:
                    chosen = [tuple(range(m))]
                else:
                    chosen = rng.sample(subsets, min(len(subsets), rng.randint(1, 2)))
                gammas = [F.random(rng, nonzero=True) for _ in chosen]
                D = beta * beta
                for g, I in zip(gammas, chosen):
                    sI = F.one
                    for i in I:
                        sI = sI * s[i]
                    D = D + g * g * sI
                if D:
                    break
            N = x.scale(beta)
            for g, I in zip(gammas, chosen):
                N = N + _y_word(ys, I, one).scale(g)
            w = N / D
            d = D ** half
            display = beta ** q
            for g, I in zip(gammas, chosen):
                sI = F.one
                for i in I:
                    sI = sI * s[i] ** half
                display = display + g ** q * sI
            shape = all(all(k in (0, half) for k in e) for e in kp_module_coords(d, r))
            ok = d == display and shape and A.power(w, q) == x.scale(d ** -1)
            if not ok:
                bad.append(f"beta={beta}, terms={len(chosen)}")
            if trial < 2:
                shown.append(str(d))
        return not bad, {"trials": trials, "examples_d": shown, "mismatches": _first(bad)}

    rep.check("C3", "w^(2^r) = d^-1 x, d = beta^(2^r) + sum gamma_I^(2^r) t_I^(2^(r-1))", c3)

    J_holder: dict = {}

    def radical():
        if "J" not in J_holder:
            J_holder["J"] = jacobson_radical(L)
        return J_holder["J"]

    def c4():
        gens = [y * (x - 1) for y in ys]
        squares = all(not (g * g) for g in gens)
        I = ideal_closure(A, gens)
        J = radical()
        inside = I.space <= J.space
        return squares and I.nil and inside, {
            "squares_zero": squares,
            "ideal_dim": I.dim,
            "nilpotency_index": I.nilpotency_index,
            "contained_in_J": inside,
            "J_dim": J.dim,
        }

    rep.check("C4", "(y_i(x-1))^2 = 0, omega(L)(x-1) in J(u(L))", c4)

    def c5():
        J = radical()
        elems = [one + ys[0] * (x - 1), ys[0] * (x - 1), x, one + x]
        for _ in range(trials):
            u = A.random_element(rng, density=0.5)
            roll = rng.random()
            if roll < 1 / 3:
                u = u * x
            elif roll < 2 / 3:
                u = u * (one + x)
            elems.append(u)
        bad, n_inv = [], 0
        for u in elems:
            a = A.is_invertible(u)
            b = A.is_invertible_modulo(u, J.space)
            n_inv += a
            if a != b:
                bad.append(str(u))
        return not bad, {"cases": len(elems), "invertible": n_inv, "J_dim": J.dim, "mismatches": _first(bad)}

    rep.check("C5", "u invertible iff u + J invertible in u(L)/J", c5)

    def c6():
        bad = []
        for _ in range(trials):
            u = A.random_element(rng, density=0.5)
            alpha = u.coefficient((0,) * (m + 1))
            beta = u.coefficient((1,) + (0,) * m)
            b = beta ** q
            for I in _subsets(m):
                ey = tuple(1 if i in I else 0 for i in range(m))
                c = u.coefficient((0,) + ey) + u.coefficient((1,) + ey)
                sI = F.one
                for i in I:
                    sI = sI * s[i] ** half
                b = b + c ** q * sI
            a = alpha ** q
            got = A.power(u, q)
            a_shape = set(kp_module_coords(a, r)) <= {(0,) * m}
            b_shape = all(all(k in (0, half) for k in e) for e in kp_module_coords(b, r))
            if not (got == A.scalar(a) + x.scale(b) and a_shape and b_shape):
                bad.append(str(u))
        return not bad, {"trials": trials, "mismatches": _first(bad)}

    rep.check("C6", "u^(2^r) = a + bx, a in K^(2^r), b in K^(2^r)(t_i^(2^(r-1)))", c6)
    return rep


# ---------------------------------------------------------------------------
# locally finite: u(L)/Pu(L) = u(L/P)
# ---------------------------------------------------------------------------

def _require_p_nil(L: RestrictedLieAlgebra, P: Sequence[LieElement]):
    for u in P:
        res = is_p_nilpotent(L, u)
        if not res:
            raise PreconditionError(f"generator {u} is not p-nilpotent: {res.certificate}")
    info = restricted_ideal_closure(L, P)
    cert = certify_p_nil(L, info)
    if not cert:
        raise PreconditionError(f"the restricted ideal generated by P is not p-nil: {cert.witness}")
    return info, cert


def scenario_locally_finite(L: RestrictedLieAlgebra, P: Sequence[LieElement] | None = None) -> ScenarioReport:
    """Pu(L) is nil and u(L)/Pu(L) matches u(L/P) for a p-nil restricted ideal P."""
    if P is None:
        P = o_p(L).elements(L)
    P = list(P)
    info, pnil = _require_p_nil(L, P)
    A = L.env
    Q = quotient(L, info)
    AQ = Q.algebra.env
    rep = ScenarioReport(
        "locally-finite",
        {"algebra": L.name or "custom", "P": [str(u) for u in P], "dim_P": info.dim},
    )
    gens = [A.from_lie(u) for u in info.elements(L)]
    I = ideal_closure(A, gens)

    def lf1():
        right = ideal_closure(A, gens, "right", certify=False)
        return I.nil and right.space == I.space, {
            **I.to_dict(),
            "p_nil_witness": pnil.witness,
            "right_ideal_equals_two_sided": right.space == I.space,
        }

    rep.check("LF1", "I = Pu(L) is nil", lf1)

    def lf2():
        quotient_dim = A.dim - I.dim
        ok = quotient_dim == A.p ** Q.algebra.n == AQ.dim
        return ok, {"dim_u(L)": A.dim, "dim_I": I.dim, "dim_u(L)/I": quotient_dim, "dim_u(L/P)": AQ.dim}

    rep.check("LF2", "dim u(L)/I = p^dim(L/P)", lf2)

    def lf3():
        pi = projection_hom(L, Q)
        kernel = nullspace(A.field, pi.matrix_rows(), A.dim)
        bad = []
        for m1 in AQ.basis:
            s1 = section_from_quotient(A, Q, AQ.monomial(m1))
            for m2 in AQ.basis:
                s2 = section_from_quotient(A, Q, AQ.monomial(m2))
                target = section_from_quotient(A, Q, AQ.monomial(m1) * AQ.monomial(m2))
                if (s1 * s2 - target) not in I:
                    bad.append(f"{AQ.monomial_str(m1)} * {AQ.monomial_str(m2)}")
        ok = kernel == I.space and not bad
        return ok, {
            "kernel_equals_I": kernel == I.space,
            "pairs_checked": AQ.dim ** 2,
            "mismatches": _first(bad),
        }

    rep.check("LF3", "u(L/P) = u(L)/I", lf3)

    toral = is_torus(Q.algebra, Subspace.full(L.field, Q.algebra.n)) and L.field.is_prime_field
    if toral:
        def lf4():
            J = jacobson_radical(L, info)
            reps = [section_from_quotient(A, Q, e) for e in primitive_idempotents(AQ)]
            lifts = lift_complete_set(reps, I)
            return J.space == I.space, {
                "J_equals_I": J.space == I.space,
                "idempotents": [str(g) for g in lifts],
            }

        rep.check("LF4", "L/P toral: J(u(L)) = I and idempotents lift", lf4)
    return rep


# ---------------------------------------------------------------------------
# torus chain
# ---------------------------------------------------------------------------

def scenario_torus_chain(k: int = 3, p: int = 2) -> ScenarioReport:
    """Split tori T_1 < ... < T_k, their integrals and the idempotents 1 + h_i."""
    if not 1 <= k <= 3:
        raise UsageError("k must be in 1..3")
    if p not in (2, 3):
        raise UsageError("p must be 2 or 3")
    L = torus(k, p)
    F = L.field
    chain = [[unit(F, k, j) for j in range(i)] for i in range(1, k + 1)]
    rep = ScenarioReport("torus-chain", {"k": k, "p": p})
    lams = []

    def tc1():
        for T in chain:
            lams.append(integral_space(L, T))
        return all(lam.space.dim == 1 for lam in lams), {
            "integrals": [str(lam.ambient) for lam in lams]
        }

    rep.check("TC1", "h Lambda = eps(h) Lambda, dim = 1", tc1)

    def tc2():
        eps = [lam.counit for lam in lams]
        return len(eps) == k and all(eps), {"counits": [str(e) for e in eps]}

    rep.check("TC2", "eps(Lambda) != 0", tc2)
    box: dict = {}

    def chain_data():
        if "c" not in box:
            box["c"] = annihilator_idempotent_chain(L, chain)
        return box["c"]

    def group(*kinds):
        def run():
            c = chain_data()
            rel = {}
            for kind in kinds:
                rel.update(getattr(c, kind))
            return bool(rel) and all(rel.values()), {"relations": rel, "h": [str(h) for h in c.hs]}
        return run

    rep.check("TC3", "(1+h_i)x = 0 = x(1+h_i), x in ker eps_i", group("idempotent", "annihilation"))
    rep.check("TC4", "(1+h_j)(1+h_i) = 1+h_j = (1+h_i)(1+h_j), i <= j", group("chain"))
    if k >= 2:
        rep.check("TC5", "(h_n - h_(n+1))^2 = h_n - h_(n+1)", group("difference"))
    return rep


# ---------------------------------------------------------------------------
# free modules and principal right ideals
# ---------------------------------------------------------------------------

def _product(A: EnvAlgebra, elems: Sequence[LieElement]) -> EnvElement:
    out = A.one()
    for u in elems:
        out = out * A.from_lie(u)
    return out


def greedy_chain(L: RestrictedLieAlgebra) -> list[LieElement]:
    """Basis vectors in order, skipping those already in <chain so far>_p."""
    chain: list[LieElement] = []
    for x in L.basis():
        if not chain or x not in restricted_closure(L, chain):
            chain.append(x)
    return chain


def check_chain(L: RestrictedLieAlgebra, chain: Sequence[LieElement]) -> None:
    for i in range(1, len(chain)):
        closure = restricted_closure(L, chain[:i])
        if chain[i] in closure:
            raise PreconditionError(
                f"chain element {chain[i]} lies in the restricted subalgebra generated by its predecessors"
            )


def scenario_free_module(L: RestrictedLieAlgebra, H: Sequence[LieElement] | None = None,
                         chain: Sequence[LieElement] | None = None, trials: int = 100,
                         seed: int = 7) -> ScenarioReport:
    """u(L) = sum_k u(H) u_k and the principal-right-ideal chain test."""
    if trials < 1:
        raise UsageError("trials must be >= 1")
    H = list(H) if H is not None else [L.gen(0)]
    chain = list(chain) if chain is not None else greedy_chain(L)
    info = restricted_closure(L, H)
    if info.dim == L.n:
        raise PreconditionError("H must generate a proper restricted subalgebra")
    check_chain(L, chain)
    rng = random.Random(seed)
    A = L.env
    rep = ScenarioReport(
        "free-module",
        {
            "algebra": L.name or "custom",
            "H": [str(u) for u in H],
            "chain": [str(u) for u in chain],
            "trials": trials,
            "seed": seed,
        },
    )

    def fm1():
        bad = []
        max_parts = 0
        for _ in range(trials):
            u = A.random_element(rng, density=0.5)
            d = A.free_module_decompose(u, info)
            max_parts = max(max_parts, len(d.parts))
            if d.recompose() != u:
                bad.append(str(u))
        bound = A.p ** (L.n - info.dim)
        return not bad and max_parts <= bound, {
            "trials": trials,
            "dim_H": info.dim,
            "max_parts": max_parts,
            "complement_monomials": bound,
            "mismatches": _first(bad),
        }

    rep.check("FM1", "u(L) = sum_k u(H) u_k", fm1)

    def fm2():
        results = {}
        for i in range(1, len(chain)):
            prefix = _product(A, chain[:i])
            longer = prefix * A.from_lie(chain[i])
            ideal = A.principal_right_ideal(longer)
            results[f"{prefix} notin ({longer})u(L)"] = prefix.to_vector() not in ideal
        return bool(results) and all(results.values()), {"memberships": results}

    rep.check("FM2", "x_1...x_i - x_1...x_i x_(i+1) v != 0", fm2)
    return rep


# ---------------------------------------------------------------------------
# commutative algebras over the prime field
# ---------------------------------------------------------------------------

def scenario_semiperfect_abelian(L: RestrictedLieAlgebra) -> ScenarioReport:
    """For abelian L over F_p: J(u(L)) = O_p(L)u(L), reduced quotient, lifted idempotents."""
    if not L.is_abelian:
        raise UnsupportedClass("semiperfect-abelian needs an abelian algebra")
    if not L.field.is_prime_field:
        raise UnsupportedClass("semiperfect-abelian needs the prime field F_p")
    A = L.env
    rep = ScenarioReport("semiperfect-abelian", {"algebra": L.name or "custom", "p": L.p, "dim": L.n})
    O = o_p(L)
    I = ideal_closure(A, [A.from_lie(u) for u in O.elements(L)])

    def sp1():
        return O.is_restricted_ideal, {"dim": O.dim, "basis": [str(u) for u in O.elements(L)]}

    rep.check("SP1", "O_p(L) = sum of p-nil restricted ideals", sp1)

    def sp2():
        J = jacobson_radical(L)
        return J.space == I.space and I.nil, {"dim_I": I.dim, "dim_J": J.dim, "nilpotency_index": I.nilpotency_index}

    rep.check("SP2", "I = O_p(L)u(L) = J(u(L))", sp2)

    def sp3():
        ok = quotient_is_reduced(A, I.space)
        return ok, {"dim_quotient": A.dim - I.dim}

    rep.check("SP3", "u(L)/I reduced", sp3)

    def sp4():
        Q = quotient(L, O)
        AQ = Q.algebra.env
        reps = [section_from_quotient(A, Q, e) for e in primitive_idempotents(AQ)]
        lifts = lift_complete_set(reps, I)
        return len(lifts) == len(reps), {"count": len(lifts), "idempotents": [str(g) for g in lifts]}

    rep.check("SP4", "idempotents lift modulo the nil ideal I", sp4)
    return rep


SCENARIOS = {
    "perfect-field": scenario_perfect_field,
    "locally-finite": scenario_locally_finite,
    "torus-chain": scenario_torus_chain,
    "free-module": scenario_free_module,
    "semiperfect-abelian": scenario_semiperfect_abelian,
}
