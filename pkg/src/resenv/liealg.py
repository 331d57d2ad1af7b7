"""Finite-dimensional restricted Lie algebras given by structure constants.

A :class:`RestrictedLieAlgebra` stores the bracket table on a basis and
the images ``x_i^[p]`` of the basis vectors.  By Jacobson's theorem these
images determine the p-map as soon as ``ad(x_i^[p]) = (ad x_i)^p`` holds
for every basis vector; :func:`validate` checks exactly that, together
with antisymmetry and the Jacobi identity.

p-th powers of arbitrary elements are computed in the restricted
enveloping algebra, where the associative p-th power of a Lie element is
its restricted p-th power.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from itertools import combinations
from typing import Callable, Mapping, Sequence

from .errors import (
    ClosureError,
    FieldMismatchError,
    IntegrityError,
    InvalidRestrictedStructure,
    StructureError,
    UnsupportedClass,
)
from .linalg import Subspace, frobenius_kernel, identity_rows, rref, unit
from .parsing import NAME_RE
from .scalars import Field, Scalar


def coef_prefix(c: Scalar) -> str:
    """Render a coefficient in front of a basis word ('' for 1)."""
    if c == 1:
        return ""
    s = str(c)
    if " + " in s:
        s = f"({s})"
    return s + "*"


class LieElement:
    """Element of a restricted Lie algebra, as a coordinate tuple."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: "RestrictedLieAlgebra", coords: Sequence[Scalar]):
        self.algebra = algebra
        self.coords = tuple(coords)

    def _same(self, other: "LieElement") -> None:
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise FieldMismatchError("elements of different Lie algebras")

    def __add__(self, other):
        if not isinstance(other, LieElement):
            return NotImplemented
        self._same(other)
        return LieElement(self.algebra, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        if not isinstance(other, LieElement):
            return NotImplemented
        self._same(other)
        return LieElement(self.algebra, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return LieElement(self.algebra, [-a for a in self.coords])

    def __mul__(self, c):
        if isinstance(c, (Scalar, int)) and not isinstance(c, bool):
            c = self.algebra.field(c)
            return LieElement(self.algebra, [c * a for a in self.coords])
        return NotImplemented

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return any(self.coords)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieElement):
            return NotImplemented
        return self.coords == other.coords and self.algebra.labels == other.algebra.labels

    def __hash__(self) -> int:
        return hash(self.coords)

    def bracket(self, other: "LieElement") -> "LieElement":
        return self.algebra.bracket(self, other)

    def p_power(self, r: int = 1) -> "LieElement":
        return self.algebra.p_power(self, r)

    def __str__(self) -> str:
        parts = [coef_prefix(c) + lab for c, lab in zip(self.coords, self.algebra.labels) if c]
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"LieElement({str(self)!r})"


class RestrictedLieAlgebra:
    """Restricted Lie algebra on an ordered basis.

    ``brackets`` maps pairs ``(i, j)`` (indices or labels) to the
    coefficient vector of ``[x_i, x_j]``; pairs not listed are zero and
    ``[x_j, x_i]`` defaults to ``-[x_i, x_j]``.  ``pmap`` gives
    ``x_i^[p]`` for each basis vector (missing entries are zero).  Vectors
    are sequences of length n or mappings from labels to scalars.
    """

    def __init__(
        self,
        field: Field,
        labels: Sequence[str],
        brackets=(),
        pmap=None,
        name: str = "",
        description: str = "",
    ):
        self.field = field
        self.p = field.p
        self.labels = tuple(labels)
        self.n = len(self.labels)
        self.name = name
        self.description = description
        if len(set(self.labels)) != self.n:
            raise StructureError(f"basis labels must be distinct: {self.labels}")
        for lab in self.labels:
            if not isinstance(lab, str) or not NAME_RE.match(lab):
                raise StructureError(f"bad basis label {lab!r}")
            if lab in field.vars:
                raise StructureError(f"basis label {lab!r} clashes with an indeterminate")
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        n = self.n
        zero = tuple([field.zero] * n)
        table = [[None] * n for _ in range(n)]
        items = brackets.items() if isinstance(brackets, Mapping) else brackets
        for entry in items:
            if isinstance(entry, tuple) and len(entry) == 2 and isinstance(entry[0], tuple):
                (i, j), vec = entry
            else:
                try:
                    i, j, vec = entry
                except (TypeError, ValueError):
                    raise StructureError(f"malformed bracket entry {entry!r}") from None
            i, j = self.index(i), self.index(j)
            if table[i][j] is not None:
                raise StructureError(f"bracket ({self.labels[i]}, {self.labels[j]}) given twice")
            table[i][j] = self._vector(vec)
        for i in range(n):
            for j in range(n):
                if table[i][j] is None:
                    if table[j][i] is not None and i != j:
                        table[i][j] = tuple(-c for c in table[j][i])
                    else:
                        table[i][j] = zero
        self._table = table
        if pmap is None:
            pmap = {}
        if isinstance(pmap, Mapping):
            rows = [zero] * n
            for key, vec in pmap.items():
                rows[self.index(key)] = self._vector(vec)
        else:
            pmap = list(pmap)
            if len(pmap) != n:
                raise StructureError(f"p-map has {len(pmap)} entries for dimension {n}")
            rows = [self._vector(v) for v in pmap]
        self._pmap = rows

    # -- construction helpers -------------------------------------------------

    def index(self, key) -> int:
        if isinstance(key, bool):
            raise StructureError(f"bad basis index {key!r}")
        if isinstance(key, int):
            if not 0 <= key < self.n:
                raise StructureError(f"basis index {key} out of range for dimension {self.n}")
            return key
        try:
            return self._index[key]
        except KeyError:
            raise StructureError(f"unknown basis label {key!r}") from None

    def _vector(self, vec) -> tuple:
        if isinstance(vec, LieElement):
            return vec.coords
        if isinstance(vec, Mapping):
            out = [self.field.zero] * self.n
            for key, c in vec.items():
                out[self.index(key)] = self.field(c)
            return tuple(out)
        vec = list(vec)
        if len(vec) != self.n:
            raise StructureError(f"coefficient vector of length {len(vec)} for dimension {self.n}")
        return tuple(self.field(c) for c in vec)

    def element(self, vec) -> LieElement:
        return LieElement(self, self._vector(vec))

    def zero(self) -> LieElement:
        return LieElement(self, [self.field.zero] * self.n)

    def gen(self, key) -> LieElement:
        return LieElement(self, unit(self.field, self.n, self.index(key)))

    def basis(self) -> list[LieElement]:
        return [self.gen(i) for i in range(self.n)]

    def __getitem__(self, key) -> LieElement:
        return self.gen(key)

    def structure_constants(self, i, j) -> tuple:
        return self._table[self.index(i)][self.index(j)]

    def pmap_vector(self, i) -> tuple:
        return self._pmap[self.index(i)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RestrictedLieAlgebra):
            return NotImplemented
        return (
            self.field == other.field
            and self.labels == other.labels
            and self._table == other._table
            and self._pmap == other._pmap
        )

    def __hash__(self) -> int:
        return hash((self.field, self.labels))

    def __repr__(self) -> str:
        name = f" {self.name!r}" if self.name else ""
        return f"<RestrictedLieAlgebra{name} dim={self.n} over {self.field!r}>"

    @cached_property
    def env(self):
        """The restricted enveloping algebra u(L)."""
        from .envalg import EnvAlgebra

        return EnvAlgebra(self)

    def parse_element(self, text: str) -> LieElement:
        u = self.env.parse(text)
        if u and not u.is_lie():
            raise StructureError(f"{text!r} is not a Lie element")
        return u.to_lie()

    # -- operations ------------------------------------------------------------

    def bracket(self, u: LieElement, v: LieElement) -> LieElement:
        if u.algebra is not self and u.algebra != self or v.algebra is not self and v.algebra != self:
            raise FieldMismatchError("bracket of elements from another algebra")
        n = self.n
        out = [self.field.zero] * n
        for i, a in enumerate(u.coords):
            if not a:
                continue
            row = self._table[i]
            for j, b in enumerate(v.coords):
                if not b:
                    continue
                c = a * b
                for k, s in enumerate(row[j]):
                    if s:
                        out[k] = out[k] + c * s
        return LieElement(self, out)

    def p_power(self, u: LieElement, r: int = 1) -> LieElement:
        """u^([p]^r), via associative p-th powers in u(L) read back in degree 1."""
        if r < 0:
            raise ValueError("iteration count must be >= 0")
        A = self.env
        U = A.from_lie(u)
        for _ in range(r):
            U = A.power(U, self.p)
            if not U.is_lie():
                raise InvalidRestrictedStructure(
                    f"p-th power of {u} left degree 1: {U}; run validate()"
                )
        return U.to_lie()

    def ad_matrix(self, u: LieElement) -> list[list[Scalar]]:
        """Matrix of ad u: column j holds the coordinates of [u, x_j]."""
        cols = [self.bracket(u, self.gen(j)).coords for j in range(self.n)]
        return [[cols[j][i] for j in range(self.n)] for i in range(self.n)]

    @cached_property
    def is_abelian(self) -> bool:
        return not any(any(v) for row in self._table for v in row)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

@dataclass
class ValidationReport:
    checks: dict[str, bool] = dc_field(default_factory=dict)
    failures: list[str] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {"valid": self.ok, "checks": dict(self.checks), "failures": list(self.failures)}


def _matmul(A, B, field):
    n, m, k = len(A), len(B), len(B[0]) if B else 0
    out = [[field.zero] * k for _ in range(n)]
    for i in range(n):
        for t in range(m):
            a = A[i][t]
            if a:
                row = B[t]
                out[i] = [o + a * b if b else o for o, b in zip(out[i], row)]
    return out


def validate(L: RestrictedLieAlgebra) -> ValidationReport:
    """Check the restricted Lie algebra axioms on basis data."""
    rep = ValidationReport()
    n, F = L.n, L.field
    bad = []
    for i in range(n):
        if any(L._table[i][i]):
            bad.append(f"[{L.labels[i]}, {L.labels[i]}] != 0")
        for j in range(i + 1, n):
            if any(a + b for a, b in zip(L._table[i][j], L._table[j][i])):
                bad.append(f"[{L.labels[i]}, {L.labels[j]}] != -[{L.labels[j]}, {L.labels[i]}]")
    rep.checks["antisymmetry"] = not bad
    rep.failures += bad

    bad = []
    for i, j, k in combinations(range(n), 3):
        a, b, c = L.gen(i), L.gen(j), L.gen(k)
        jac = L.bracket(a, L.bracket(b, c)) + L.bracket(b, L.bracket(c, a)) + L.bracket(c, L.bracket(a, b))
        if jac:
            bad.append(f"Jacobi fails on ({L.labels[i]}, {L.labels[j]}, {L.labels[k]}): {jac}")
    rep.checks["jacobi"] = not bad
    rep.failures += bad

    bad = []
    for i in range(n):
        ad = L.ad_matrix(L.gen(i))
        power = identity_rows(F, n)
        power = [list(r) for r in power]
        for _ in range(L.p):
            power = _matmul(ad, power, F)
        target = L.ad_matrix(LieElement(L, L._pmap[i]))
        if power != target:
            bad.append(f"(ad {L.labels[i]})^{L.p} != ad({L.labels[i]}^[p])")
    rep.checks["p_map_ad_compatibility"] = not bad
    rep.failures += bad

    bad = []
    if rep.ok:
        A = L.env
        for i in range(n):
            got = A.power(A.gen(i), L.p)
            if got != A.from_lie(LieElement(L, L._pmap[i])):
                bad.append(f"{L.labels[i]}^{L.p} in u(L) reduces to {got}, not the p-map image")
    rep.checks["enveloping_p_power"] = not bad
    rep.failures += bad
    return rep


# ---------------------------------------------------------------------------
# subspaces with closure flags
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RestrictedSubspace:
    """Subspace of L with verified closure flags."""

    space: Subspace
    is_subalgebra: bool
    is_restricted: bool
    is_ideal: bool

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def is_restricted_ideal(self) -> bool:
        return self.is_ideal and self.is_restricted

    def elements(self, L: RestrictedLieAlgebra) -> list[LieElement]:
        return [LieElement(L, row) for row in self.space.rows]

    def __contains__(self, u: LieElement) -> bool:
        return u.coords in self.space


def as_subspace(L: RestrictedLieAlgebra, S) -> Subspace:
    if isinstance(S, RestrictedSubspace):
        return S.space
    if isinstance(S, Subspace):
        if S.ambient != L.n:
            raise ValueError("subspace lives in the wrong ambient dimension")
        return S
    vecs = [L._vector(s) for s in S]
    return Subspace.span(L.field, L.n, vecs)


def classify(L: RestrictedLieAlgebra, S) -> RestrictedSubspace:
    """Compute the closure flags of a subspace."""
    V = as_subspace(L, S)
    basis = [LieElement(L, r) for r in V.rows]
    sub = all(L.bracket(a, b).coords in V for a, b in combinations(basis, 2))
    restricted = sub and all(L.p_power(a).coords in V for a in basis)
    ideal = all(L.bracket(x, a).coords in V for x in L.basis() for a in basis)
    return RestrictedSubspace(V, sub, restricted, ideal)


def _saturate(L: RestrictedLieAlgebra, V: Subspace, step: Callable[[list[LieElement]], list[LieElement]]) -> Subspace:
    while True:
        basis = [LieElement(L, r) for r in V.rows]
        W = V.extend(u.coords for u in step(basis))
        if W.dim == V.dim:
            return V
        V = W


def restricted_closure(L: RestrictedLieAlgebra, S) -> RestrictedSubspace:
    """<S>_p: the smallest restricted subalgebra containing S.

    Closure under the p-map only needs checking on a basis of a subalgebra,
    because (a+b)^[p] - a^[p] - b^[p] lies in the subalgebra generated by a, b.
    """
    V = as_subspace(L, S)

    def step(basis):
        return [L.bracket(a, b) for a, b in combinations(basis, 2)] + [L.p_power(a) for a in basis]

    return classify(L, _saturate(L, V, step))


def restricted_ideal_closure(L: RestrictedLieAlgebra, S) -> RestrictedSubspace:
    """Smallest restricted ideal of L containing S."""
    V = as_subspace(L, S)
    gens = L.basis()

    def step(basis):
        return [L.bracket(x, a) for x in gens for a in basis] + [L.p_power(a) for a in basis]

    return classify(L, _saturate(L, V, step))


def derived_subspace(L: RestrictedLieAlgebra) -> Subspace:
    return Subspace.span(
        L.field, L.n, [L.bracket(a, b).coords for a, b in combinations(L.basis(), 2)]
    )


# ---------------------------------------------------------------------------
# p-nilpotency, tori, O_p
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PNilpotency:
    """Outcome of :func:`is_p_nilpotent`.

    ``index`` is the least r with u^([p]^r) = 0.  When u is not p-nilpotent,
    ``certificate`` describes why: a repeated nonzero value, or the
    iterated power u^([p]^n) (n = dim L) being nonzero.
    """

    nilpotent: bool
    index: int | None
    certificate: str

    def __bool__(self) -> bool:
        return self.nilpotent


def is_p_nilpotent(L: RestrictedLieAlgebra, u: LieElement) -> PNilpotency:
    """Decide p-nilpotency of u.

    All iterates u_k = u^([p]^k) lie in the abelian algebra <u>_p, on which
    the p-map is additive and semilinear.  The spans V_k of {u_k, u_k+1, ...}
    satisfy V_k+1 = span(p-powers of a basis of V_k), so they strictly
    decrease until they stabilize; hence u is p-nilpotent iff u_n = 0.
    """
    seen = {}
    cur = u
    for r in range(L.n + 1):
        if not cur:
            return PNilpotency(True, r, f"u^([p]^{r}) = 0")
        if cur.coords in seen:
            return PNilpotency(
                False, None, f"u^([p]^{r}) repeats u^([p]^{seen[cur.coords]}) = {cur} != 0"
            )
        seen[cur.coords] = r
        if r < L.n:
            cur = L.p_power(cur)
    return PNilpotency(False, None, f"u^([p]^{L.n}) = {cur} != 0 with n = dim L = {L.n}")


def is_torus(L: RestrictedLieAlgebra, T) -> bool:
    """Abelian restricted subalgebra with t in <t^[p]>_p for each basis t."""
    info = T if isinstance(T, RestrictedSubspace) else classify(L, T)
    if not info.is_restricted:
        return False
    basis = info.elements(L)
    if any(L.bracket(a, b) for a, b in combinations(basis, 2)):
        return False
    for t in basis:
        closure = restricted_closure(L, [L.p_power(t)])
        if t not in closure:
            return False
    return True


def _iterated_images(L: RestrictedLieAlgebra, r: int) -> list[tuple]:
    images = []
    for x in L.basis():
        images.append(L.p_power(x, r).coords)
    return images


def semilinear_kernel(L: RestrictedLieAlgebra, r: int) -> Subspace:
    """{u : u^([p]^r) = 0} for abelian L, where u -> u^([p]^r) is p^r-semilinear."""
    if not L.is_abelian:
        raise UnsupportedClass("semilinear_kernel requires an abelian algebra")
    if r < 1:
        raise ValueError("iteration count must be >= 1")
    if L.n == 0:
        return Subspace.zero(L.field, 0)
    return frobenius_kernel(L.field, _iterated_images(L, r), r)


def o_p(L: RestrictedLieAlgebra) -> RestrictedSubspace:
    """O_p(L), the largest p-nil restricted ideal.

    Supported for abelian L (union of the semilinear kernels) and for L
    whose derived algebra has a p-nil restricted closure I; then O_p(L) is
    the preimage of O_p(L/I).  Anything else is refused.
    """
    if L.is_abelian:
        prev = Subspace.zero(L.field, L.n)
        for r in range(1, L.n + 2):
            K = semilinear_kernel(L, r)
            if K.dim == prev.dim:
                break
            prev = K
        result = classify(L, prev)
    else:
        from .radical import certify_p_nil

        I = restricted_closure(L, derived_subspace(L))
        if not I.is_ideal:  # pragma: no cover - <L'>_p is always an ideal
            raise IntegrityError("restricted closure of L' is not an ideal")
        if not certify_p_nil(L, I.space).nilpotent:
            raise UnsupportedClass("O_p is only supported when <L'>_p is p-nil (or L abelian)")
        Q = quotient(L, I)
        OQ = o_p(Q.algebra)
        lifts = [Q.lift(LieElement(Q.algebra, row)).coords for row in OQ.space.rows]
        result = classify(L, I.space.extend(lifts))
    _verify_p_nil_ideal(L, result)
    return result


def _verify_p_nil_ideal(L: RestrictedLieAlgebra, R: RestrictedSubspace) -> None:
    from .radical import certify_p_nil

    if not R.is_restricted_ideal:
        raise IntegrityError("O_p candidate is not a restricted ideal")
    if not certify_p_nil(L, R.space).nilpotent:
        raise IntegrityError("O_p candidate is not p-nil")


def delta(L: RestrictedLieAlgebra) -> RestrictedSubspace:
    """{x : dim [L, x] < infinity}, which is all of L in finite dimension."""
    return classify(L, Subspace.full(L.field, L.n))


# ---------------------------------------------------------------------------
# quotients, subalgebras, changes of basis
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Quotient:
    """L/I on the complement basis {x_j : j not a pivot column of I}."""

    algebra: RestrictedLieAlgebra
    parent: RestrictedLieAlgebra
    ideal: Subspace
    complement: tuple

    def project(self, u: LieElement) -> LieElement:
        res = self.ideal.reduce(u.coords)
        return LieElement(self.algebra, [res[j] for j in self.complement])

    def lift(self, q: LieElement) -> LieElement:
        out = [self.parent.field.zero] * self.parent.n
        for c, j in zip(q.coords, self.complement):
            out[j] = c
        return LieElement(self.parent, out)


def quotient(L: RestrictedLieAlgebra, I) -> Quotient:
    info = I if isinstance(I, RestrictedSubspace) else classify(L, I)
    V = info.space
    if not info.is_ideal:
        raise ClosureError("not an ideal: [L, I] is not contained in I", violated="bracket")
    if not info.is_restricted:
        raise ClosureError("not p-closed: some basis p-power leaves I", violated="p-map")
    comp = tuple(V.complement_indices())
    labels = [L.labels[j] for j in comp]

    def proj(vec):
        res = V.reduce(vec)
        return [res[j] for j in comp]

    brackets = {}
    for a, b in combinations(range(len(comp)), 2):
        vec = proj(L._table[comp[a]][comp[b]])
        if any(vec):
            brackets[(a, b)] = vec
    pmap = [proj(L.p_power(L.gen(j)).coords) for j in comp]
    Q = RestrictedLieAlgebra(L.field, labels, brackets, pmap, name=f"{L.name}/I" if L.name else "")
    result = Quotient(Q, L, V, comp)
    for i in range(L.n):
        xi = L.gen(i)
        if result.project(L.p_power(xi)) != Q.p_power(result.project(xi)):
            raise IntegrityError(f"projection does not respect the p-map on {L.labels[i]}")
        for j in range(i + 1, L.n):
            xj = L.gen(j)
            if result.project(L.bracket(xi, xj)) != Q.bracket(result.project(xi), result.project(xj)):
                raise IntegrityError("projection does not respect the bracket")
    return result


def _fresh_labels(L: RestrictedLieAlgebra, count: int, prefix: str = "h") -> list[str]:
    taken = set(L.labels) | set(L.field.vars)
    while any(f"{prefix}{k + 1}" in taken for k in range(count)):
        prefix += "_"
    return [f"{prefix}{k + 1}" for k in range(count)]


def _labels_for(L: RestrictedLieAlgebra, rows) -> list[str]:
    """Reuse L's label for unit-vector rows, else fresh names."""
    labels = []
    for row in rows:
        nz = [i for i, c in enumerate(row) if c]
        labels.append(L.labels[nz[0]] if len(nz) == 1 and row[nz[0]] == 1 else None)
    fresh = iter(_fresh_labels(L, len(rows)))
    return [lab if lab is not None else next(fresh) for lab in labels]


@dataclass(frozen=True)
class Subalgebra:
    """A restricted subalgebra H as an algebra in its own echelon basis."""

    algebra: RestrictedLieAlgebra
    parent: RestrictedLieAlgebra
    space: Subspace

    def embed(self, h: LieElement) -> LieElement:
        return LieElement(self.parent, self.space.combine(h.coords))

    def images(self) -> list[LieElement]:
        return [LieElement(self.parent, r) for r in self.space.rows]


def subalgebra(L: RestrictedLieAlgebra, H, labels: Sequence[str] | None = None) -> Subalgebra:
    info = H if isinstance(H, RestrictedSubspace) else classify(L, H)
    if not info.is_subalgebra:
        raise ClosureError("not closed under the bracket", violated="bracket")
    if not info.is_restricted:
        raise ClosureError("not closed under the p-map", violated="p-map")
    V = info.space
    rows = [LieElement(L, r) for r in V.rows]
    labels = list(labels) if labels is not None else _labels_for(L, V.rows)
    brackets = {}
    for a, b in combinations(range(len(rows)), 2):
        c = V.coordinates(L.bracket(rows[a], rows[b]).coords)
        if any(c):
            brackets[(a, b)] = c
    pmap = [V.coordinates(L.p_power(r).coords) for r in rows]
    S = RestrictedLieAlgebra(L.field, labels, brackets, pmap)
    return Subalgebra(S, L, V)


def change_basis(L: RestrictedLieAlgebra, vectors: Sequence[Sequence[Scalar]], labels: Sequence[str]) -> tuple[RestrictedLieAlgebra, Callable]:
    """L in a new basis; returns (algebra, coordinate map from old coordinates)."""
    n, F = L.n, L.field
    vectors = [tuple(v) for v in vectors]
    if len(vectors) != n:
        raise ValueError("a basis needs exactly dim L vectors")
    # invert the basis matrix B (columns = vectors) by row-reducing [B | I]
    aug = [[vectors[c][r] for c in range(n)] + list(unit(F, n, r)) for r in range(n)]
    rows, pivots = rref(F, aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(rows) < n:
        raise ValueError("vectors do not form a basis")
    inv = [row[n:] for row in rows]

    def coords(v):
        return tuple(sum((inv[i][k] * v[k] for k in range(n) if v[k]), F.zero) for i in range(n))

    brackets = {}
    for a, b in combinations(range(n), 2):
        c = coords(L.bracket(LieElement(L, vectors[a]), LieElement(L, vectors[b])).coords)
        if any(c):
            brackets[(a, b)] = c
    pmap = [coords(L.p_power(LieElement(L, v)).coords) for v in vectors]
    return RestrictedLieAlgebra(F, labels, brackets, pmap), coords


def p_algebraic(L: RestrictedLieAlgebra, u: LieElement) -> bool:
    """dim <u>_p < infinity; constant-true for the finite-dimensional algebras here."""
    return True
