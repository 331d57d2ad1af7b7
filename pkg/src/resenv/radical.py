"""Ideals, nilpotency, the Jacobson radical and Hopf integrals of u(L).

Ideals are :class:`~resenv.linalg.Subspace` objects in PBW coordinates.
Because u(L) is generated as an algebra by the degree-1 basis, an ideal
generated by a set G is obtained by saturating span(G) under left and/or
right multiplication by the generators x_i alone.  The same remark drives
the integral systems: h*L = eps(h)*L for the generators h = x_a of u(T)
forces it for every h, since both sides are multiplicative in h.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from .envalg import EnvAlgebra, EnvElement, EnvHom
from .errors import (
    ClosureError,
    IntegrityError,
    NotLiftableError,
    StructureError,
    UnsupportedClass,
)
from .linalg import Subspace, frobenius_kernel, nullspace
from .liealg import (
    RestrictedLieAlgebra,
    RestrictedSubspace,
    classify,
    is_p_nilpotent,
    o_p,
    quotient,
    subalgebra,
)

SIDES = ("two-sided", "left", "right")


@dataclass
class IdealCertificate:
    """An ideal of u(L) with the evidence gathered while building it."""

    algebra: EnvAlgebra
    space: Subspace
    sides: str
    generators: list[str]
    nilpotency_index: int | None = None
    trail: list[str] = dc_field(default_factory=list)

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def nil(self) -> bool:
        return self.nilpotency_index is not None

    def __contains__(self, u: EnvElement) -> bool:
        return u.to_vector() in self.space

    def elements(self) -> list[EnvElement]:
        return [self.algebra.from_vector(r) for r in self.space.rows]

    def to_dict(self) -> dict:
        return {
            "generators": list(self.generators),
            "sides": self.sides,
            "dimension": self.dim,
            "nilpotency_index": self.nilpotency_index if self.nil else "not nilpotent",
            "trail": list(self.trail),
        }


def _saturate(A: EnvAlgebra, V: Subspace, left: bool, right: bool) -> Subspace:
    gens = A.gens()
    queue = [A.from_vector(r) for r in V.rows]
    while queue:
        v = queue.pop()
        new = []
        for g in gens:
            if right:
                new.append(A.multiply(v, g))
            if left:
                new.append(A.multiply(g, v))
        for w in new:
            vec = w.to_vector()
            if any(vec) and vec not in V:
                V = V.extend([vec])
                queue.append(w)
    return V


def _side_flags(sides: str) -> tuple[bool, bool]:
    if sides not in SIDES:
        raise ValueError(f"sides must be one of {SIDES}, got {sides!r}")
    return sides in ("two-sided", "left"), sides in ("two-sided", "right")


def ideal_closure(A: EnvAlgebra, generators: Iterable[EnvElement], sides: str = "two-sided",
                  certify: bool = True) -> IdealCertificate:
    """Ideal of u(L) generated by ``generators`` (``sides`` picks left/right/two-sided)."""
    left, right = _side_flags(sides)
    gens = list(generators)
    V = A.span(gens)
    V = _saturate(A, V, left, right)
    trail = [f"saturated span of {len(gens)} generator(s) to dimension {V.dim}"]
    # closure check on the final basis
    for v in (A.from_vector(r) for r in V.rows):
        for g in A.gens():
            if right and A.multiply(v, g).to_vector() not in V:
                raise IntegrityError("ideal saturation is not closed on the right")
            if left and A.multiply(g, v).to_vector() not in V:
                raise IntegrityError("ideal saturation is not closed on the left")
    trail.append("closure under multiplication by every generator verified")
    cert = IdealCertificate(A, V, sides, [str(g) for g in gens], None, trail)
    if certify:
        cert.nilpotency_index = nilpotency_index(A, V, gens if sides == "two-sided" else None)
        cert.trail.append(_index_note(cert.nilpotency_index))
    return cert


def _index_note(k: int | None) -> str:
    if k is None:
        return "powers stabilize at a nonzero ideal: not nilpotent"
    return f"S^{k} = 0 and S^{k - 1} != 0" if k > 1 else "S = 0"


def subspace_product(A: EnvAlgebra, S: Subspace, T: Subspace) -> Subspace:
    left = [A.from_vector(r) for r in S.rows]
    right = [A.from_vector(r) for r in T.rows]
    return A.span(A.multiply(a, b) for a in left for b in right)


def nilpotency_index(A: EnvAlgebra, S, generators: Sequence[EnvElement] | None = None) -> int | None:
    """Least k with S^k = 0, or None when S is not nilpotent.

    For an ideal the powers S, S^2, ... form a descending chain of
    subspaces; once two consecutive ones have equal dimension they are
    equal and the chain is stuck, so at most dim A + 1 steps are needed.
    When S is the two-sided ideal generated by ``generators`` (a set G),
    S^(k+1) = (S^k G) u(L), which replaces a full subspace product by a
    right saturation.
    """
    if isinstance(S, IdealCertificate):
        S = S.space
    if S.dim == 0:
        return 1
    P = S
    for k in range(2, A.dim + 2):
        if generators is None:
            nxt = subspace_product(A, P, S)
        else:
            seeds = [A.multiply(A.from_vector(r), g) for r in P.rows for g in generators]
            nxt = _saturate(A, A.span(seeds), left=False, right=True)
        if nxt.dim == 0:
            return k
        if nxt.dim == P.dim:
            return None
        P = nxt
    return None  # pragma: no cover - the dimension bound makes this unreachable


# ---------------------------------------------------------------------------
# p-nil certificates for restricted subalgebras
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PNilCertificate:
    """p-nil test of a restricted subalgebra S via the augmentation ideal of u(S)."""

    nilpotent: bool
    index: int | None
    witness: str

    def __bool__(self) -> bool:
        return self.nilpotent


def certify_p_nil(L: RestrictedLieAlgebra, V) -> PNilCertificate:
    """Decide whether the restricted subalgebra V of L is p-nil.

    S is p-nil iff omega(u(S)) is nilpotent: if omega^k = 0 then every
    x in S has x^(p^r) = x^([p]^r) = 0 once p^r >= k; conversely a p-nil
    S is nilpotent with a unipotent adjoint action and u(S) is local.
    When the test fails, a basis element that is not p-nilpotent is named
    if one exists.
    """
    info = V if isinstance(V, RestrictedSubspace) else classify(L, V)
    if not info.is_restricted:
        raise ClosureError("p-nil certification needs a restricted subalgebra", violated="p-map")
    if info.dim == 0:
        return PNilCertificate(True, 1, "zero subalgebra")
    sub = subalgebra(L, info)
    AS = sub.algebra.env
    k = nilpotency_index(AS, AS.augmentation_ideal(), AS.gens())
    if k is not None:
        return PNilCertificate(True, k, f"omega(u(S))^{k} = 0 with dim S = {info.dim}")
    for u in info.elements(L):
        res = is_p_nilpotent(L, u)
        if not res:
            return PNilCertificate(False, None, f"{u} is not p-nilpotent: {res.certificate}")
    return PNilCertificate(False, None, "omega(u(S)) is not nilpotent")


# ---------------------------------------------------------------------------
# Jacobson radical
# ---------------------------------------------------------------------------

def _log_ceiling(p: int, n: int) -> int:
    r = 1
    while p ** r < n:
        r += 1
    return r


def _frobenius_images(A: EnvAlgebra, r: int, modulo: Subspace | None = None) -> list[tuple]:
    q = A.p ** r
    images = []
    for m in A.basis:
        v = A.power(A.monomial(m), q).to_vector()
        images.append(tuple(modulo.reduce(v)) if modulo is not None else v)
    return images


def commutative_nilradical(A: EnvAlgebra) -> tuple[Subspace, list[str]]:
    """Nilradical of a commutative u(L): the union of ker(u -> u^(p^r)).

    On a commutative algebra of characteristic p the map u -> u^(p^r) is
    additive and p^r-semilinear, so each kernel is a semilinear kernel in
    PBW coordinates.  The kernels ascend and the union is reached once
    p^r >= dim u(L), the worst possible nilpotency index.
    """
    if not A.lie.is_abelian:
        raise UnsupportedClass("the commutative radical path needs an abelian L")
    trail = []
    rmax = _log_ceiling(A.p, A.dim)
    K = Subspace.zero(A.field, A.dim)
    for r in range(1, rmax + 1):
        K = frobenius_kernel(A.field, _frobenius_images(A, r), r)
        trail.append(f"dim ker(u -> u^({A.p}^{r})) = {K.dim}")
    return K, trail


def quotient_is_reduced(A: EnvAlgebra, J: Subspace) -> bool:
    """For commutative A and an ideal J: u^p in J implies u in J."""
    if not A.lie.is_abelian:
        raise UnsupportedClass("reducedness test needs a commutative algebra")
    K = frobenius_kernel(A.field, _frobenius_images(A, 1, modulo=J), 1)
    return K == J


def jacobson_radical(L: RestrictedLieAlgebra, P=None) -> IdealCertificate:
    """J(u(L)) for abelian L, or from a p-nil restricted ideal P with L/P abelian.

    Without P a nonabelian L falls back to P = O_p(L) when that is
    computable; anything else is refused with :class:`UnsupportedClass`.
    """
    A = L.env
    if P is None and L.is_abelian:
        return _commutative_radical(A)
    if P is None:
        try:
            P = o_p(L)
        except UnsupportedClass as exc:
            raise UnsupportedClass(f"Jacobson radical unsupported for this algebra: {exc}") from None
    return _structural_radical(L, P)


def _commutative_radical(A: EnvAlgebra) -> IdealCertificate:
    N, trail = commutative_nilradical(A)
    cert = IdealCertificate(A, N, "two-sided", ["nilradical"], None, ["commutative path"] + trail)
    cert.nilpotency_index = nilpotency_index(A, N)
    cert.trail.append(_index_note(cert.nilpotency_index))
    if not cert.nil:  # pragma: no cover - a nil ideal of a finite-dimensional algebra is nilpotent
        raise IntegrityError("nilradical is not nilpotent")
    if not quotient_is_reduced(A, N):
        raise IntegrityError("u(L)/N is not reduced")
    cert.trail.append("u(L)/J reduced: u^p in J implies u in J")
    return cert


def _structural_radical(L: RestrictedLieAlgebra, P) -> IdealCertificate:
    A = L.env
    info = P if isinstance(P, RestrictedSubspace) else classify(L, P)
    if not info.is_restricted_ideal:
        violated = "bracket" if not info.is_ideal else "p-map"
        raise ClosureError("P must be a restricted ideal", violated=violated)
    pnil = certify_p_nil(L, info)
    if not pnil:
        raise UnsupportedClass(f"P is not p-nil: {pnil.witness}")
    Q = quotient(L, info)
    if not Q.algebra.is_abelian:
        raise UnsupportedClass("structural radical needs L/P abelian")
    gens = [A.from_lie(u) for u in info.elements(L)]
    I = ideal_closure(A, gens, "two-sided")
    trail = ["structural path", f"P p-nil: {pnil.witness}", f"dim Pu(L) = {I.dim}"]
    if A.dim - I.dim != A.p ** Q.algebra.n:
        raise IntegrityError(
            f"dim u(L)/Pu(L) = {A.dim - I.dim}, expected p^dim(L/P) = {A.p ** Q.algebra.n}"
        )
    trail.append(f"dim u(L)/Pu(L) = p^{Q.algebra.n}")
    AQ = Q.algebra.env
    NQ, qtrail = commutative_nilradical(AQ)
    trail += [f"u(L/P): {t}" for t in qtrail]
    J = I.space
    if NQ.dim:
        lifts = [section_from_quotient(A, Q, AQ.from_vector(r)).to_vector() for r in NQ.rows]
        J = J.extend(lifts)
        trail.append(f"added {NQ.dim} lift(s) of the radical of u(L/P)")
    if not quotient_is_reduced(AQ, NQ):
        raise IntegrityError("u(L/P)/J(u(L/P)) is not reduced")
    trail.append("u(L)/J reduced: u(L/P) modulo its nilradical is reduced")
    cert = IdealCertificate(A, J, "two-sided", [str(g) for g in gens], None, trail)
    cert.nilpotency_index = nilpotency_index(A, J)
    cert.trail.append(_index_note(cert.nilpotency_index))
    if not cert.nil:
        raise IntegrityError("structural radical is not nilpotent")
    return cert


def section_from_quotient(A: EnvAlgebra, Q, v: EnvElement) -> EnvElement:
    """Section u(L/P) -> u(L) sending a PBW monomial to the same monomial on the complement."""
    terms = {}
    for m, c in v.terms.items():
        full = [0] * A.n
        for j, e in zip(Q.complement, m):
            full[j] = e
        terms[tuple(full)] = c
    return A.element(terms)


def projection_hom(L: RestrictedLieAlgebra, Q) -> EnvHom:
    """The algebra map u(L) -> u(L/P) induced by the projection."""
    AQ = Q.algebra.env
    return EnvHom(L.env, AQ, [AQ.from_lie(Q.project(x)) for x in L.basis()])


# ---------------------------------------------------------------------------
# idempotents
# ---------------------------------------------------------------------------

def lift_idempotent(e: EnvElement, N: IdealCertificate) -> EnvElement:
    """Lift e (idempotent modulo the nil ideal N) to g = e^(p^r) with g^2 = g.

    e^2 - e commutes with e, so g^2 - g = (e^2 - e)^(p^r), which is 0 as
    soon as p^r reaches the nilpotency index of N; and e^p - e is a
    multiple of e^2 - e, so g - e lies in N.
    """
    A = e.algebra
    if N.algebra is not A:
        raise StructureError("idempotent and ideal live in different algebras")
    if not N.nil:
        raise NotLiftableError("N is not certified nil")
    if (e * e - e) not in N:
        raise NotLiftableError(f"{e} is not idempotent modulo N")
    r = _log_ceiling(A.p, max(N.nilpotency_index, 1))
    g = A.power(e, A.p ** r)
    if g * g != g or (g - e) not in N:
        raise IntegrityError("lifted element failed g^2 = g or g - e in N")
    return g


def primitive_idempotents(A: EnvAlgebra) -> list[EnvElement]:
    """Complete set of primitive orthogonal idempotents of a reduced commutative u(L) over F_p.

    The Frobenius-fixed part B = {b : b^p = b} is F_p^s, one copy per
    simple factor; e*(1 - (b - c)^(p-1)) cuts e down to the factors where
    b takes the value c, so splitting 1 along a basis of B yields the
    primitive idempotents.
    """
    if not A.field.is_prime_field:
        raise UnsupportedClass("primitive idempotents are only computed over a prime field")
    if not A.lie.is_abelian:
        raise UnsupportedClass("primitive idempotents need a commutative algebra")
    cols = [A.power(A.monomial(m), A.p).to_vector() for m in A.basis]
    F = A.field
    rows = [[cols[c][r] - (F.one if r == c else F.zero) for c in range(A.dim)] for r in range(A.dim)]
    B = nullspace(F, rows, A.dim)
    idems = [A.one()]
    for row in B.rows:
        b = A.from_vector(row)
        split = []
        for e in idems:
            for c in range(A.p):
                f = e * (A.one() - A.power(b - c, A.p - 1))
                if f:
                    split.append(f)
        idems = split
    _check_complete(A, idems)
    return idems


def _check_complete(A: EnvAlgebra, idems: Sequence[EnvElement]) -> None:
    total = A.zero()
    for i, e in enumerate(idems):
        if e * e != e:
            raise IntegrityError(f"{e} is not idempotent")
        for f in idems[i + 1:]:
            if e * f or f * e:
                raise IntegrityError("idempotents are not orthogonal")
        total = total + e
    if total != A.one():
        raise IntegrityError("idempotents do not sum to 1")


def lift_complete_set(representatives: Sequence[EnvElement], N: IdealCertificate) -> list[EnvElement]:
    """Lift a complete orthogonal set of idempotents modulo N to one in u(L).

    Each new lift is taken inside the corner (1 - s) u(L) (1 - s) left by
    the previous ones (s = their sum), which keeps the lifts orthogonal;
    the last one is 1 - s.
    """
    if not representatives:
        return []
    A = representatives[0].algebra
    lifted: list[EnvElement] = []
    s = A.zero()
    for k, e in enumerate(representatives):
        if k == len(representatives) - 1:
            g = A.one() - s
            if (g - e) not in N or g * g != g:
                raise IntegrityError("idempotents do not sum to 1 modulo N")
        else:
            c = A.one() - s
            g = lift_idempotent(c * e * c, N)
        lifted.append(g)
        s = s + g
    _check_complete(A, lifted)
    for g, e in zip(lifted, representatives):
        if (g - e) not in N:
            raise IntegrityError("lift is not congruent to its representative")
    return lifted


# ---------------------------------------------------------------------------
# integrals
# ---------------------------------------------------------------------------

@dataclass
class Integral:
    """A left or right integral of u(T) for a restricted subalgebra T of L."""

    element: EnvElement
    side: str
    ambient: EnvElement
    space: Subspace

    @property
    def counit(self):
        return self.element.counit()


def _subalgebra_info(L: RestrictedLieAlgebra, T) -> RestrictedSubspace:
    if T is None:
        return classify(L, Subspace.full(L.field, L.n))
    return T if isinstance(T, RestrictedSubspace) else classify(L, T)


def _integral_solution(AT: EnvAlgebra, side: str) -> Subspace:
    rows = []
    for g in AT.gens():
        mat = AT.left_matrix(g) if side == "left" else AT.right_matrix(g)
        rows.extend(mat)
    return nullspace(AT.field, rows, AT.dim)


def integral_space(L: RestrictedLieAlgebra, T=None, side: str = "left") -> Integral:
    """The one-dimensional space of integrals of u(T), T a restricted subalgebra (default L).

    Generators x_a of T have eps(x_a) = 0, so the conditions read x_a * Lambda = 0
    (left) or Lambda * x_a = 0 (right).  For abelian T the left and right
    spaces are compared and must agree.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    info = _subalgebra_info(L, T)
    sub = subalgebra(L, info)
    AT = sub.algebra.env
    V = _integral_solution(AT, side)
    if V.dim != 1:
        raise IntegrityError(f"integral space of u(T) has dimension {V.dim}, expected 1")
    if sub.algebra.is_abelian:
        other = _integral_solution(AT, "right" if side == "left" else "left")
        if other != V:
            raise IntegrityError("left and right integrals differ for an abelian T")
    lam = AT.from_vector(V.rows[0])
    embed = EnvHom(AT, L.env, [L.env.from_lie(img) for img in sub.images()])
    return Integral(lam, side, embed(lam), V)


@dataclass
class Semisimplicity:
    semisimple: bool
    integral: Integral
    idempotent: EnvElement | None

    def __bool__(self) -> bool:
        return self.semisimple


def is_semisimple_hopf(L: RestrictedLieAlgebra, T=None) -> Semisimplicity:
    """Maschke criterion: u(T) is semisimple iff eps(Lambda) != 0."""
    lam = integral_space(L, T)
    eps = lam.counit
    if not eps:
        return Semisimplicity(False, lam, None)
    return Semisimplicity(True, lam, lam.ambient / eps)


@dataclass
class IdempotentChain:
    """The h_i of a torus chain and the relations checked on them, grouped by kind."""

    hs: list[EnvElement]
    idempotents: list[EnvElement]
    idempotent: dict[str, bool]
    annihilation: dict[str, bool]
    chain: dict[str, bool]
    difference: dict[str, bool]

    @property
    def relations(self) -> dict[str, bool]:
        return {**self.idempotent, **self.annihilation, **self.chain, **self.difference}

    @property
    def ok(self) -> bool:
        return all(self.relations.values())


def annihilator_idempotent_chain(L: RestrictedLieAlgebra, tori: Sequence) -> IdempotentChain:
    """h_i with 1 + h_i the normalized integral of u(T_i), plus their relations."""
    A = L.env
    infos = [_subalgebra_info(L, T) for T in tori]
    for i in range(1, len(infos)):
        if not infos[i - 1].space <= infos[i].space:
            raise StructureError(f"T_{i} is not contained in T_{i + 1}")
    idems, hs = [], []
    idem_rel, ann_rel, chain_rel, diff_rel = {}, {}, {}, {}
    for i, info in enumerate(infos, 1):
        ss = is_semisimple_hopf(L, info)
        if not ss:
            raise StructureError(f"u(T_{i}) is not semisimple: eps(Lambda) = 0")
        e = ss.idempotent
        idems.append(e)
        hs.append(e - 1)
        idem_rel[f"(1+h_{i})^2 = 1+h_{i}"] = e * e == e
        sub = subalgebra(L, info)
        AT = sub.algebra.env
        embed = EnvHom(AT, A, [A.from_lie(img) for img in sub.images()])
        kernel = [embed(AT.from_vector(r)) for r in AT.augmentation_ideal().rows]
        ann_rel[f"(1+h_{i})x = 0 = x(1+h_{i}) on ker eps_{i}"] = all(
            not (e * x) and not (x * e) for x in kernel
        )
    for j in range(len(idems)):
        for i in range(j + 1):
            ej, ei = idems[j], idems[i]
            key = f"(1+h_{j + 1})(1+h_{i + 1}) = 1+h_{j + 1} = (1+h_{i + 1})(1+h_{j + 1})"
            chain_rel[key] = ej * ei == ej and ei * ej == ej
    for n in range(len(hs) - 1):
        d = hs[n] - hs[n + 1]
        diff_rel[f"(h_{n + 1} - h_{n + 2})^2 = h_{n + 1} - h_{n + 2}"] = d * d == d
    return IdempotentChain(hs, idems, idem_rel, ann_rel, chain_rel, diff_rel)


def is_invertible_modulo(u: EnvElement, J) -> bool:
    if isinstance(J, IdealCertificate):
        J = J.space
    return u.algebra.is_invertible_modulo(u, J)


def in_ideal(u: EnvElement, J) -> bool:
    if isinstance(J, IdealCertificate):
        J = J.space
    return u.to_vector() in J


__all__ = [
    "IdealCertificate",
    "Integral",
    "IdempotentChain",
    "PNilCertificate",
    "Semisimplicity",
    "annihilator_idempotent_chain",
    "certify_p_nil",
    "commutative_nilradical",
    "ideal_closure",
    "in_ideal",
    "integral_space",
    "is_invertible_modulo",
    "is_semisimple_hopf",
    "jacobson_radical",
    "lift_complete_set",
    "lift_idempotent",
    "nilpotency_index",
    "primitive_idempotents",
    "projection_hom",
    "section_from_quotient",
    "quotient_is_reduced",
    "subspace_product",
]
