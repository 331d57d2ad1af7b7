"""Exact linear algebra over a :class:`~resenv.scalars.Field`.

Vectors are tuples of field elements.  A :class:`Subspace` keeps its basis
in reduced row-echelon form, so membership, coordinates and equality are
all read off the pivots.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .scalars import Field, Scalar, kp_module_coords, pdiv_exact, pmul, poly_gcd, psub

Vector = tuple


def rref(field: Field, rows: Iterable[Sequence[Scalar]], ncols: int) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row-echelon form; returns (nonzero rows, pivot columns)."""
    work = [list(r) for r in rows if any(r)]
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        if top == len(work):
            break
        piv = next((i for i in range(top, len(work)) if work[i][col]), None)
        if piv is None:
            continue
        work[top], work[piv] = work[piv], work[top]
        row = work[top]
        inv = field.one / row[col]
        if inv != field.one:
            row = [c * inv if c else c for c in row]
            work[top] = row
        for i in range(len(work)):
            if i != top:
                f = work[i][col]
                if f:
                    other = work[i]
                    work[i] = [a - f * b if b else a for a, b in zip(other, row)]
        pivots.append(col)
        top += 1
    return work[:top], pivots


class Subspace:
    """Subspace of field^ambient with an RREF basis."""

    __slots__ = ("field", "ambient", "rows", "pivots")

    def __init__(self, field: Field, ambient: int, rows, pivots):
        self.field = field
        self.ambient = ambient
        self.rows = tuple(tuple(r) for r in rows)
        self.pivots = tuple(pivots)

    @classmethod
    def span(cls, field: Field, ambient: int, vectors: Iterable[Sequence[Scalar]]) -> "Subspace":
        vectors = list(vectors)
        for v in vectors:
            if len(v) != ambient:
                raise ValueError(f"vector of length {len(v)} in ambient dimension {ambient}")
        rows, pivots = rref(field, vectors, ambient)
        return cls(field, ambient, rows, pivots)

    @classmethod
    def zero(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient, (), ())

    @classmethod
    def full(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient, identity_rows(field, ambient), range(ambient))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def basis(self) -> list[Vector]:
        return list(self.rows)

    def reduce(self, v: Sequence[Scalar]) -> list[Scalar]:
        """Residual of v after clearing every pivot column."""
        out = list(v)
        for row, col in zip(self.rows, self.pivots):
            f = out[col]
            if f:
                out = [a - f * b if b else a for a, b in zip(out, row)]
        return out

    def __contains__(self, v: Sequence[Scalar]) -> bool:
        return not any(self.reduce(v))

    def coordinates(self, v: Sequence[Scalar]) -> list[Scalar] | None:
        """Coefficients of v in the echelon basis, or None if v is outside."""
        if v not in self:
            return None
        return [v[c] for c in self.pivots]

    def combine(self, coords: Sequence[Scalar]) -> Vector:
        out = [self.field.zero] * self.ambient
        for c, row in zip(coords, self.rows):
            if c:
                out = [a + c * b if b else a for a, b in zip(out, row)]
        return tuple(out)

    def complement_indices(self) -> list[int]:
        """Non-pivot columns: the lexicographically-first complement basis."""
        piv = set(self.pivots)
        return [i for i in range(self.ambient) if i not in piv]

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.field, self.ambient, self.rows + other.rows)

    def extend(self, vectors: Iterable[Sequence[Scalar]]) -> "Subspace":
        return Subspace.span(self.field, self.ambient, list(self.rows) + list(vectors))

    def issubset(self, other: "Subspace") -> bool:
        self._check(other)
        return all(r in other for r in self.rows)

    __le__ = issubset

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.field == other.field
            and self.ambient == other.ambient
            and self.pivots == other.pivots
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.ambient, self.pivots, self.rows))

    def _check(self, other: "Subspace") -> None:
        if self.field != other.field or self.ambient != other.ambient:
            raise ValueError("subspaces live in different ambient spaces")

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient}, pivots={list(self.pivots)})"


def identity_rows(field: Field, n: int) -> list[Vector]:
    z, o = field.zero, field.one
    return [tuple(o if i == j else z for j in range(n)) for i in range(n)]


def unit(field: Field, n: int, i: int) -> Vector:
    return tuple(field.one if j == i else field.zero for j in range(n))


def nullspace(field: Field, matrix: Sequence[Sequence[Scalar]], ncols: int) -> Subspace:
    """All x with matrix @ x = 0."""
    rows, pivots = rref(field, matrix, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [field.zero] * ncols
        x[f] = field.one
        for row, pc in zip(rows, pivots):
            x[pc] = -row[f]
        basis.append(x)
    return Subspace.span(field, ncols, basis)


def solve(field: Field, matrix: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar], ncols: int) -> list[Scalar] | None:
    """One solution of matrix @ x = rhs (free variables set to 0), or None."""
    aug = [list(r) + [b] for r, b in zip(matrix, rhs)]
    rows, pivots = rref(field, aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [field.zero] * ncols
    for row, pc in zip(rows, pivots):
        x[pc] = row[ncols]
    return x


def _polynomial_row(field: Field, row: Sequence[Scalar]) -> list[dict]:
    """Scale a row of rational functions by the lcm of its denominators."""
    p, one = field.p, field.one.den
    lcm = one
    for c in row:
        if c and c.den != one:
            g = poly_gcd(lcm, c.den, p)
            lcm = pmul(lcm, pdiv_exact(c.den, g, p), p)
    return [pmul(c.num, pdiv_exact(lcm, c.den, p), p) if c else {} for c in row]


def rank(field: Field, rows: Iterable[Sequence[Scalar]], ncols: int) -> int:
    """Rank of a matrix.

    Over F_p(t_1..t_m) the rows are made polynomial and reduced by
    fraction-free (Bareiss) elimination: every entry stays a minor of the
    scaled matrix, so each division by the previous pivot is exact and no
    gcd is ever taken.
    """
    rows = [r for r in rows if any(r)]
    if field.is_prime_field:
        return len(rref(field, rows, ncols)[0])
    p, one = field.p, field.one.num
    M = [_polynomial_row(field, r) for r in rows]
    prev = one
    top = 0
    for col in range(ncols):
        if top == len(M):
            break
        piv = next((i for i in range(top, len(M)) if M[i][col]), None)
        if piv is None:
            continue
        M[top], M[piv] = M[piv], M[top]
        prow = M[top]
        a = prow[col]
        for i in range(top + 1, len(M)):
            row = M[i]
            b = row[col]
            for j in range(col + 1, ncols):
                v = psub(pmul(a, row[j], p), pmul(b, prow[j], p), p)
                if v and prev != one:
                    v = pdiv_exact(v, prev, p)
                    if v is None:  # pragma: no cover - Sylvester's identity makes this exact
                        raise ArithmeticError("inexact Bareiss division")
                row[j] = v
            row[col] = {}
        prev = a
        top += 1
    return top


def columns_to_rows(columns: Sequence[Sequence[Scalar]], nrows: int) -> list[list[Scalar]]:
    return [[col[i] for col in columns] for i in range(nrows)]


def frobenius_kernel(field: Field, images: Sequence[Sequence[Scalar]], r: int) -> Subspace:
    """Kernel of the additive p^r-semilinear map lambda -> sum_k lambda_k^(p^r) images[k].

    Each coordinate of each image is written as sum_e c_e^(p^r) t^e over the
    K^(p^r)-basis {t^e}; since (sum_k lambda_k c_{k,e})^(p^r) = sum_k
    lambda_k^(p^r) c_{k,e}^(p^r), the condition splits into the K-linear
    equations sum_k lambda_k c_{k,j,e} = 0, one per (coordinate j, e).
    """
    nk = len(images)
    if nk == 0:
        return Subspace.zero(field, 0)
    eqs: dict = {}
    for k, img in enumerate(images):
        for j, entry in enumerate(img):
            if not entry:
                continue
            for e, c in kp_module_coords(entry, r).items():
                row = eqs.get((j, e))
                if row is None:
                    row = eqs[(j, e)] = [field.zero] * nk
                row[k] = c
    return nullspace(field, [eqs[key] for key in sorted(eqs)], nk)
