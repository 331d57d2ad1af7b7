"""The restricted enveloping algebra u(L) with its PBW basis.

Elements are sparse maps from PBW exponent vectors (entries < p) to
scalars.  Products are put in normal form by two rewrite rules applied to
termination:

* ``x_j x_i -> x_i x_j + [x_j, x_i]`` for ``j > i``;
* ``x_i^p -> x_i^[p]``.

Every product of normal monomials reduces to repeated left pushes
``x_i * m`` of a generator onto a normal monomial; those pushes are
memoized per algebra.  Termination: each rule either lowers the total
degree (brackets, p-map) or keeps the degree and strictly lowers the
number of inversions of the generator word, so the measure
(degree, inversions) decreases lexicographically.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from itertools import product
from math import comb
from typing import Callable, Iterable, Mapping, Sequence

from .errors import FieldMismatchError, IntegrityError, NotInvertibleError, ParseError, SizeGuardError
from .linalg import Subspace, columns_to_rows, rank, solve, unit
from .liealg import LieElement, RestrictedLieAlgebra, coef_prefix, subalgebra, classify
from .parsing import parse_expression
from .scalars import Scalar

Monomial = tuple

TENSOR_DIM_LIMIT = 4096


class EnvElement:
    """Element of u(L): a dict ``{monomial: scalar}`` with no zero values."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: "EnvAlgebra", terms: Mapping[Monomial, Scalar]):
        self.algebra = algebra
        self.terms = terms

    def _other(self, other):
        if isinstance(other, EnvElement):
            if other.algebra is not self.algebra:
                raise FieldMismatchError("elements of different enveloping algebras")
            return other
        if isinstance(other, (Scalar, int)) and not isinstance(other, bool):
            return self.algebra.scalar(other)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return EnvElement(self.algebra, _add_terms(self.terms, o.terms))

    __radd__ = __add__

    def __neg__(self):
        return EnvElement(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, EnvElement):
            return self.algebra.multiply(self, other)
        if isinstance(other, (Scalar, int)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (Scalar, int)) and not isinstance(other, bool):
            return self.scale(self.algebra.field.one / self.algebra.field(other))
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.algebra.power(self.algebra.inverse(self), -k)
        return self.algebra.power(self, k)

    def scale(self, c) -> "EnvElement":
        c = self.algebra.field(c)
        if not c:
            return self.algebra.zero()
        return EnvElement(self.algebra, {m: c * v for m, v in self.terms.items()})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, EnvElement):
            return self.algebra is other.algebra and self.terms == other.terms
        if isinstance(other, (Scalar, int)) and not isinstance(other, bool):
            return self.terms == self.algebra.scalar(other).terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def coefficient(self, m: Monomial) -> Scalar:
        return self.terms.get(tuple(m), self.algebra.field.zero)

    def counit(self) -> Scalar:
        return self.coefficient(self.algebra.unit_monomial)

    def supp(self) -> set[str]:
        return self.algebra.supp(self)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_lie(self) -> bool:
        """True when every monomial is a single generator (degree-1 PBW element)."""
        return all(sum(m) == 1 for m in self.terms)

    def to_lie(self) -> LieElement:
        L = self.algebra.lie
        coords = [L.field.zero] * L.n
        for m, c in self.terms.items():
            if sum(m) != 1:
                raise ValueError(f"{self} is not a degree-1 element")
            coords[m.index(1)] = c
        return LieElement(L, coords)

    def to_vector(self) -> tuple:
        return self.algebra.to_vector(self)

    def __str__(self) -> str:
        return self.algebra.format(self)

    def __repr__(self) -> str:
        return f"EnvElement({str(self)!r})"


def _add_terms(a: Mapping, b: Mapping) -> dict:
    out = dict(a)
    for m, c in b.items():
        s = out.get(m)
        s = c if s is None else s + c
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return out


def _accumulate(acc: dict, terms: Mapping, c: Scalar) -> None:
    for m, v in terms.items():
        s = acc.get(m)
        acc[m] = c * v if s is None else s + c * v


def _clean(acc: dict) -> dict:
    return {m: c for m, c in acc.items() if c}


class TensorElement:
    """Element of u(L) (x) u(L) as ``{(m1, m2): scalar}``."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: "EnvAlgebra", terms: Mapping[tuple, Scalar]):
        self.algebra = algebra
        self.terms = terms

    def __add__(self, other: "TensorElement") -> "TensorElement":
        return TensorElement(self.algebra, _add_terms(self.terms, other.terms))

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + TensorElement(self.algebra, {k: -c for k, c in other.terms.items()})

    def __mul__(self, other: "TensorElement") -> "TensorElement":
        A = self.algebra
        acc: dict = {}
        for (a, b), c1 in self.terms.items():
            for (c, d), c2 in other.terms.items():
                left = A._mono_product(a, c)
                right = A._mono_product(b, d)
                coef = c1 * c2
                for m1, v1 in left.items():
                    cv = coef * v1
                    for m2, v2 in right.items():
                        key = (m1, m2)
                        s = acc.get(key)
                        acc[key] = cv * v2 if s is None else s + cv * v2
        return TensorElement(A, _clean(acc))

    def swap(self) -> "TensorElement":
        return TensorElement(self.algebra, {(b, a): c for (a, b), c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        A = self.algebra
        if not self.terms:
            return "0"
        parts = []
        for (a, b), c in sorted(self.terms.items()):
            parts.append(f"{coef_prefix(c)}{A.monomial_str(a)} (x) {A.monomial_str(b)}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"TensorElement({str(self)!r})"


class EnvHom:
    """Algebra homomorphism u(L) -> u(L') fixed by generator images."""

    def __init__(self, source: "EnvAlgebra", target: "EnvAlgebra", images: Sequence["EnvElement"]):
        if len(images) != source.n:
            raise ValueError("need one image per generator")
        self.source = source
        self.target = target
        self.images = list(images)
        self._cache: dict = {}

    def monomial_image(self, m: Monomial) -> EnvElement:
        img = self._cache.get(m)
        if img is None:
            img = self.target.one()
            for i, e in enumerate(m):
                if e:
                    img = img * self.target.power(self.images[i], e)
            self._cache[m] = img
        return img

    def __call__(self, u: EnvElement) -> EnvElement:
        acc: dict = {}
        for m, c in u.terms.items():
            _accumulate(acc, self.monomial_image(m).terms, c)
        return EnvElement(self.target, _clean(acc))

    def matrix_rows(self) -> list[list[Scalar]]:
        """Matrix (target dim x source dim) of the underlying linear map."""
        cols = [self.monomial_image(m).to_vector() for m in self.source.basis]
        return columns_to_rows(cols, self.target.dim)


class EnvAlgebra:
    """u(L) for a finite-dimensional restricted Lie algebra L."""

    def __init__(self, L: RestrictedLieAlgebra):
        self.lie = L
        self.field = L.field
        self.p = L.p
        self.n = L.n
        self.dim = self.p ** self.n
        self.basis: list[Monomial] = list(product(range(self.p), repeat=self.n))
        self.index = {m: k for k, m in enumerate(self.basis)}
        self.unit_monomial: Monomial = (0,) * self.n
        one = self.field.one
        self._gen_monos = [tuple(1 if j == i else 0 for j in range(self.n)) for i in range(self.n)]
        self._pmap = [
            {self._gen_monos[k]: c for k, c in enumerate(L.pmap_vector(i)) if c} for i in range(self.n)
        ]
        self._brk = [
            [{self._gen_monos[k]: c for k, c in enumerate(L.structure_constants(i, j)) if c} for j in range(self.n)]
            for i in range(self.n)
        ]
        self._one = one
        self._push_cache: dict = {}
        self._prod_cache: dict = {}
        self._delta_cache: dict = {}
        self._antipode_cache: dict = {}
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        return f"<u({self.lie.name or 'L'}) dim={self.dim}>"

    # -- construction ------------------------------------------------------------

    def element(self, terms: Mapping) -> EnvElement:
        clean = {}
        for m, c in terms.items():
            m = tuple(m)
            if m not in self.index:
                raise ValueError(f"{m} is not a PBW monomial of this algebra")
            c = self.field(c)
            if c:
                clean[m] = c
        return EnvElement(self, clean)

    def zero(self) -> EnvElement:
        return EnvElement(self, {})

    def one(self) -> EnvElement:
        return EnvElement(self, {self.unit_monomial: self._one})

    def scalar(self, c) -> EnvElement:
        c = self.field(c)
        return EnvElement(self, {self.unit_monomial: c} if c else {})

    def gen(self, key) -> EnvElement:
        i = self.lie.index(key)
        return EnvElement(self, {self._gen_monos[i]: self._one})

    def gens(self) -> list[EnvElement]:
        return [self.gen(i) for i in range(self.n)]

    def monomial(self, m: Monomial) -> EnvElement:
        m = tuple(m)
        if m not in self.index:
            raise ValueError(f"{m} is not a PBW monomial of this algebra")
        return EnvElement(self, {m: self._one})

    def from_lie(self, u: LieElement) -> EnvElement:
        if u.algebra is not self.lie and u.algebra != self.lie:
            raise FieldMismatchError("Lie element from another algebra")
        return EnvElement(self, {self._gen_monos[i]: c for i, c in enumerate(u.coords) if c})

    def to_vector(self, u: EnvElement) -> tuple:
        vec = [self.field.zero] * self.dim
        for m, c in u.terms.items():
            vec[self.index[m]] = c
        return tuple(vec)

    def from_vector(self, vec: Sequence[Scalar]) -> EnvElement:
        if len(vec) != self.dim:
            raise ValueError("vector length does not match dim u(L)")
        return EnvElement(self, {self.basis[k]: c for k, c in enumerate(vec) if c})

    def random_element(self, rng, density: float = 0.6, degree: int = 2) -> EnvElement:
        terms = {}
        for m in self.basis:
            if rng.random() < density:
                c = self.field.random(rng, degree=degree, nonzero=True)
                terms[m] = c
        return EnvElement(self, terms)

    # -- straightening -----------------------------------------------------------

    def _push(self, i: int, m: Monomial) -> dict:
        """Normal form of x_i * m for a normal monomial m."""
        key = (i, m)
        hit = self._push_cache.get(key)
        if hit is not None:
            return hit
        j = next((k for k, e in enumerate(m) if e), self.n)
        if i < j or (i == j and m[i] + 1 < self.p):
            out = {m[:i] + (m[i] + 1,) + m[i + 1:]: self._one}
        elif i == j:
            rest = m[:i] + (0,) + m[i + 1:]
            acc: dict = {}
            for g, c in self._pmap[i].items():
                _accumulate(acc, self._push(g.index(1), rest), c)
            out = _clean(acc)
        else:
            # x_i x_j rest = x_j (x_i rest) + [x_i, x_j] rest
            rest = m[:j] + (m[j] - 1,) + m[j + 1:]
            acc = {}
            for mm, c in self._push(i, rest).items():
                _accumulate(acc, self._push(j, mm), c)
            for g, c in self._brk[i][j].items():
                _accumulate(acc, self._push(g.index(1), rest), c)
            out = _clean(acc)
        with self._lock:
            self._push_cache.setdefault(key, out)
        return out

    def _mono_product(self, a: Monomial, b: Monomial) -> dict:
        key = (a, b)
        hit = self._prod_cache.get(key)
        if hit is not None:
            return hit
        cur = {b: self._one}
        for i in range(self.n - 1, -1, -1):
            for _ in range(a[i]):
                acc: dict = {}
                for m, c in cur.items():
                    _accumulate(acc, self._push(i, m), c)
                cur = _clean(acc)
        with self._lock:
            self._prod_cache.setdefault(key, cur)
        return cur

    def multiply(self, u: EnvElement, v: EnvElement) -> EnvElement:
        if u.algebra is not self or v.algebra is not self:
            raise FieldMismatchError("elements of different enveloping algebras")
        acc: dict = {}
        for a, ca in u.terms.items():
            for b, cb in v.terms.items():
                _accumulate(acc, self._mono_product(a, b), ca * cb)
        return EnvElement(self, _clean(acc))

    def power(self, u: EnvElement, k: int) -> EnvElement:
        if k < 0:
            raise ValueError("exponent must be >= 0")
        result = self.one()
        base = u
        while k:
            if k & 1:
                result = self.multiply(result, base)
            k >>= 1
            if k:
                base = self.multiply(base, base)
        return result

    def supp(self, u: EnvElement) -> set[str]:
        labels = self.lie.labels
        return {labels[i] for m in u.terms for i, e in enumerate(m) if e}

    # -- Hopf structure -------------------------------------------------------------

    def _guard_tensor(self) -> None:
        if self.dim * self.dim > TENSOR_DIM_LIMIT:
            raise SizeGuardError(
                f"u(L) (x) u(L) has dimension {self.dim ** 2} > {TENSOR_DIM_LIMIT}"
            )

    def tensor(self, u: EnvElement, v: EnvElement) -> TensorElement:
        terms = {}
        for a, c1 in u.terms.items():
            for b, c2 in v.terms.items():
                terms[(a, b)] = c1 * c2
        return TensorElement(self, terms)

    def _delta_monomial(self, m: Monomial) -> TensorElement:
        hit = self._delta_cache.get(m)
        if hit is not None:
            return hit
        one = self.unit_monomial
        out = TensorElement(self, {(one, one): self._one})
        for i, e in enumerate(m):
            g = self._gen_monos[i]
            prim = TensorElement(self, {(g, one): self._one, (one, g): self._one})
            for _ in range(e):
                out = out * prim
        with self._lock:
            self._delta_cache.setdefault(m, out)
        return out

    def comultiply(self, u: EnvElement) -> TensorElement:
        """Delta(u), the algebra map with Delta(x_i) = x_i (x) 1 + 1 (x) x_i."""
        self._guard_tensor()
        acc: dict = {}
        for m, c in u.terms.items():
            _accumulate(acc, self._delta_monomial(m).terms, c)
        return TensorElement(self, _clean(acc))

    def comultiply_binomial(self, u: EnvElement) -> TensorElement:
        """Delta via the closed form prod_i sum_k C(e_i, k) x_i^k (x) x_i^(e_i - k)."""
        acc: dict = {}
        F = self.field
        for m, c in u.terms.items():
            for split in product(*[range(e + 1) for e in m]):
                coef = F.one
                for e, k in zip(m, split):
                    coef = coef * F(comb(e, k))
                if coef:
                    right = tuple(e - k for e, k in zip(m, split))
                    key = (tuple(split), right)
                    s = acc.get(key)
                    acc[key] = c * coef if s is None else s + c * coef
        return TensorElement(self, _clean(acc))

    def counit(self, u: EnvElement) -> Scalar:
        return u.counit()

    def antipode(self, u: EnvElement) -> EnvElement:
        """S(u): the anti-automorphism with S(x_i) = -x_i."""
        acc: dict = {}
        for m, c in u.terms.items():
            img = self._antipode_cache.get(m)
            if img is None:
                img = self.one()
                for i in range(self.n - 1, -1, -1):
                    for _ in range(m[i]):
                        img = img * (-self.gen(i))
                self._antipode_cache[m] = img
            _accumulate(acc, img.terms, c)
        return EnvElement(self, _clean(acc))

    def tensor_apply(self, t: TensorElement, left: Callable, right: Callable) -> dict:
        """(left (x) right)(t) as a dict; left/right map EnvElements to dicts."""
        acc: dict = {}
        for (a, b), c in t.terms.items():
            la = left(self.monomial(a))
            rb = right(self.monomial(b))
            for ka, va in la.items():
                for kb, vb in rb.items():
                    key = ka + kb
                    s = acc.get(key)
                    acc[key] = c * va * vb if s is None else s + c * va * vb
        return _clean(acc)

    def hopf_axioms(self, u: EnvElement) -> dict[str, bool]:
        """Coassociativity, counit, antipode and cocommutativity checks on u."""
        D = self.comultiply(u)

        def delta_terms(x):
            return self.comultiply(x).terms

        def ident(x):
            return {(m,): c for m, c in x.terms.items()}

        lhs = self.tensor_apply(D, delta_terms, ident)
        rhs = self.tensor_apply(D, ident, delta_terms)
        checks = {"coassociativity": lhs == rhs}

        def eps(x):
            c = x.counit()
            return {(): c} if c else {}

        left_counit = self.tensor_apply(D, eps, ident)
        right_counit = self.tensor_apply(D, ident, eps)
        target = {(m,): c for m, c in u.terms.items()}
        checks["counit"] = left_counit == target and right_counit == target

        eu = self.scalar(u.counit())
        s_left = self.zero()
        s_right = self.zero()
        for (a, b), c in D.terms.items():
            ma, mb = self.monomial(a), self.monomial(b)
            s_left = s_left + (self.antipode(ma) * mb).scale(c)
            s_right = s_right + (ma * self.antipode(mb)).scale(c)
        checks["antipode"] = s_left == eu and s_right == eu
        checks["cocommutativity"] = D.swap() == D
        return checks

    def primitives(self) -> Subspace:
        """Solution space of Delta(u) = u (x) 1 + 1 (x) u, in PBW coordinates."""
        self._guard_tensor()
        keys: dict = {}
        cols = []
        for m in self.basis:
            e = self.monomial(m)
            t = self.comultiply(e) - self.tensor(e, self.one()) - self.tensor(self.one(), e)
            cols.append(t.terms)
            for k in t.terms:
                keys.setdefault(k, len(keys))
        rows = [[self.field.zero] * self.dim for _ in keys]
        for c, terms in enumerate(cols):
            for k, v in terms.items():
                rows[keys[k]][c] = v
        from .linalg import nullspace

        return nullspace(self.field, rows, self.dim)

    # -- linear algebra on u(L) ---------------------------------------------------------

    def left_matrix(self, u: EnvElement) -> list[list[Scalar]]:
        """Matrix of v -> u*v in PBW coordinates."""
        cols = [self.multiply(u, self.monomial(m)).to_vector() for m in self.basis]
        return columns_to_rows(cols, self.dim)

    def right_matrix(self, u: EnvElement) -> list[list[Scalar]]:
        cols = [self.multiply(self.monomial(m), u).to_vector() for m in self.basis]
        return columns_to_rows(cols, self.dim)

    def _solve_right_inverse(self, u: EnvElement):
        rhs = self.one().to_vector()
        return solve(self.field, self.left_matrix(u), rhs, self.dim)

    def is_invertible(self, u: EnvElement) -> bool:
        return rank(self.field, self.left_matrix(u), self.dim) == self.dim

    def inverse(self, u: EnvElement) -> EnvElement:
        """Two-sided inverse; one-sided inverses are two-sided in finite dimension."""
        x = self._solve_right_inverse(u)
        if x is None:
            raise NotInvertibleError(f"{u} is not invertible in u(L)")
        v = self.from_vector(x)
        if self.multiply(v, u) != self.one():
            raise IntegrityError("right inverse is not a left inverse")
        return v

    def span(self, elements: Iterable[EnvElement]) -> Subspace:
        return Subspace.span(self.field, self.dim, [e.to_vector() for e in elements])

    def principal_right_ideal(self, u: EnvElement) -> Subspace:
        return self.span(self.multiply(u, self.monomial(m)) for m in self.basis)

    def principal_left_ideal(self, u: EnvElement) -> Subspace:
        return self.span(self.multiply(self.monomial(m), u) for m in self.basis)

    def membership(self, v: EnvElement, ideal: Subspace) -> bool:
        return v.to_vector() in ideal

    def augmentation_ideal(self) -> Subspace:
        """ker(counit): spanned by the non-constant PBW monomials."""
        return self.span(self.monomial(m) for m in self.basis if m != self.unit_monomial)

    def is_invertible_modulo(self, u: EnvElement, ideal: Subspace) -> bool:
        """Whether the image of u is right invertible in u(L)/ideal (ideal two-sided).

        That is 1 in u*u(L) + ideal, tested as a rank comparison.
        """
        rows = [self.multiply(u, self.monomial(m)).to_vector() for m in self.basis]
        rows += list(ideal.rows)
        base = rank(self.field, rows, self.dim)
        return base == self.dim or rank(self.field, rows + [self.one().to_vector()], self.dim) == base

    # -- free-module decomposition ----------------------------------------------------

    def free_module_decompose(self, u: EnvElement, H) -> "FreeDecomposition":
        """Write u = sum_k h_k u_k with h_k in u(H) and u_k PBW monomials in a complement Y.

        The basis of L is reordered internally so that the echelon basis of H
        comes first, followed by the non-pivot standard basis vectors Y; the
        user-visible basis of L is untouched.
        """
        from .liealg import change_basis

        L = self.lie
        info = H if hasattr(H, "is_restricted") else classify(L, H)
        sub = subalgebra(L, info)
        V = sub.space
        comp = V.complement_indices()
        vectors = list(V.rows) + [unit(self.field, L.n, j) for j in comp]
        labels = list(sub.algebra.labels) + [L.labels[j] for j in comp]
        L2, coords = change_basis(L, vectors, labels)
        A2 = L2.env
        phi = EnvHom(self, A2, [A2.from_lie(LieElement(L2, coords(L.gen(i).coords))) for i in range(L.n)])
        u2 = phi(u)
        d = V.dim
        AH = sub.algebra.env
        parts: dict = {}
        for m, c in u2.terms.items():
            yk = m[d:]
            hk = m[:d]
            parts.setdefault(yk, {})[hk] = c
        parts = {yk: EnvElement(AH, terms) for yk, terms in sorted(parts.items())}
        return FreeDecomposition(self, sub, tuple(comp), parts)

    # -- text --------------------------------------------------------------------------

    def monomial_str(self, m: Monomial) -> str:
        factors = []
        for lab, e in zip(self.lie.labels, m):
            if e == 1:
                factors.append(lab)
            elif e:
                factors.append(f"{lab}^{e}")
        return "*".join(factors) if factors else "1"

    def format(self, u: EnvElement) -> str:
        if not u.terms:
            return "0"
        parts = []
        for m in sorted(u.terms, key=lambda m: (sum(m), [-e for e in m])):
            c = u.terms[m]
            if m == self.unit_monomial:
                s = str(c)
                parts.append(f"({s})" if " + " in s else s)
            else:
                parts.append(coef_prefix(c) + self.monomial_str(m))
        return " + ".join(parts)

    def parse(self, text: str) -> EnvElement:
        names: dict = {v: self.field.gen(v) for v in self.field.vars}
        names.update({lab: self.gen(i) for i, lab in enumerate(self.lie.labels)})
        value = parse_expression(text, names, self.field)
        if isinstance(value, Scalar):
            value = self.scalar(value)
        if not isinstance(value, EnvElement):  # pragma: no cover
            raise ParseError(f"{text!r} does not denote an element of u(L)")
        return value


@dataclass
class FreeDecomposition:
    """u = sum over Y-monomials u_k of h_k * u_k with h_k in u(H)."""

    algebra: EnvAlgebra
    sub: object
    complement: tuple
    parts: dict

    def recompose(self) -> EnvElement:
        A = self.algebra
        L = A.lie
        AH = self.sub.algebra.env
        embed = EnvHom(AH, A, [A.from_lie(img) for img in self.sub.images()])
        total = A.zero()
        for yk, h in self.parts.items():
            mono = [0] * L.n
            for j, e in zip(self.complement, yk):
                mono[j] = e
            total = total + embed(h) * A.monomial(tuple(mono))
        return total

    def describe(self) -> dict[str, str]:
        A = self.algebra
        out = {}
        for yk, h in self.parts.items():
            mono = [0] * A.n
            for j, e in zip(self.complement, yk):
                mono[j] = e
            out[A.monomial_str(tuple(mono))] = str(h)
        return out
