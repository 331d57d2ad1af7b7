"""Exact coefficient fields: the prime field F_p and K = F_p(t_1, ..., t_m).

Polynomials over F_p are plain dicts mapping exponent tuples to nonzero
residues; every helper below treats its inputs as immutable.  Elements of
K are reduced fractions whose denominator has lexicographically-leading
coefficient 1, which makes the stored representation canonical.
"""

from __future__ import annotations

import random as _random
from collections import defaultdict
from itertools import product
from typing import Iterable

from .errors import FieldMismatchError, ParseError
from .parsing import NAME_RE, parse_expression

__all__ = [
    "Field",
    "Scalar",
    "Residue",
    "RationalFunction",
    "frobenius",
    "pth_root",
    "kp_module_coords",
    "poly_gcd",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


# ---------------------------------------------------------------------------
# sparse polynomial kernel over F_p
# ---------------------------------------------------------------------------

def _eadd(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def padd(a: dict, b: dict, p: int) -> dict:
    if len(a) < len(b):
        a, b = b, a
    out = dict(a)
    for e, c in b.items():
        s = (out.get(e, 0) + c) % p
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def pneg(a: dict, p: int) -> dict:
    return {e: (-c) % p for e, c in a.items()}


def psub(a: dict, b: dict, p: int) -> dict:
    out = dict(a)
    for e, c in b.items():
        s = (out.get(e, 0) - c) % p
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def pscale(a: dict, c: int, p: int) -> dict:
    c %= p
    if not c:
        return {}
    return {e: v * c % p for e, v in a.items()}


def pmul(a: dict, b: dict, p: int) -> dict:
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    acc: dict = defaultdict(int)
    for ea, ca in a.items():
        for eb, cb in b.items():
            acc[_eadd(ea, eb)] += ca * cb
    return {e: c % p for e, c in acc.items() if c % p}


def pmul_term(a: dict, mono: tuple, c: int, p: int) -> dict:
    return {_eadd(e, mono): v * c % p for e, v in a.items()}


def ppow(a: dict, k: int, p: int, one: dict) -> dict:
    result = one
    base = a
    while k:
        if k & 1:
            result = pmul(result, base, p)
        k >>= 1
        if k:
            base = pmul(base, base, p)
    return result


def lead(a: dict) -> tuple:
    """Lexicographically largest exponent of a nonzero polynomial."""
    return max(a)


def pmonic(a: dict, p: int) -> dict:
    if not a:
        return a
    c = a[lead(a)]
    if c == 1:
        return a
    return pscale(a, pow(c, -1, p), p)


def pdiv_exact(a: dict, b: dict, p: int) -> dict | None:
    """Quotient a / b when b divides a, else None (lex-order division)."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lb = lead(b)
    inv = pow(b[lb], -1, p)
    q: dict = {}
    r = a
    while r:
        lr = lead(r)
        diff = tuple(x - y for x, y in zip(lr, lb))
        if min(diff, default=0) < 0:
            return None
        c = r[lr] * inv % p
        q[diff] = c
        r = psub(r, pmul_term(b, diff, c, p), p)
    return q


def _involves(a: dict, k: int) -> bool:
    return any(e[k] for e in a)


def _deg(a: dict, k: int) -> int:
    return max(e[k] for e in a)


def _coeffs(a: dict, k: int) -> dict:
    out: dict = defaultdict(dict)
    for e, c in a.items():
        out[e[k]][e[:k] + (0,) + e[k + 1:]] = c
    return out


def _lc(a: dict, k: int) -> dict:
    d = _deg(a, k)
    return {e[:k] + (0,) + e[k + 1:]: c for e, c in a.items() if e[k] == d}


def _is_const(a: dict) -> bool:
    return len(a) == 1 and not any(next(iter(a)))


def _content(a: dict, k: int, p: int) -> dict:
    g: dict = {}
    for coeff in _coeffs(a, k).values():
        g = poly_gcd(g, coeff, p)
        if _is_const(g):
            break
    return g


def _prem(f: dict, g: dict, k: int, p: int) -> dict:
    dg = _deg(g, k)
    lcg = _lc(g, k)
    r = f
    nv = len(next(iter(f)))
    while r and _deg(r, k) >= dg:
        dr = _deg(r, k)
        shift = tuple(dr - dg if i == k else 0 for i in range(nv))
        lcr = _lc(r, k)
        r = psub(pmul(lcg, r, p), pmul(pmul_term(lcr, shift, 1, p), g, p), p)
    return r


def poly_gcd(a: dict, b: dict, p: int) -> dict:
    """Monic gcd in F_p[t_1..t_m] by content / primitive-PRS recursion.

    The main variable is the smallest-index indeterminate present; contents
    are taken over the remaining variables, which is where the recursion
    goes.  gcd(0, 0) is 0.
    """
    if not a:
        return pmonic(b, p)
    if not b:
        return pmonic(a, p)
    nv = len(next(iter(a)))
    k = next((i for i in range(nv) if _involves(a, i) or _involves(b, i)), None)
    if k is None:
        return {(0,) * nv: 1}
    if not _involves(a, k):
        return poly_gcd(a, _content(b, k, p), p)
    if not _involves(b, k):
        return poly_gcd(_content(a, k, p), b, p)
    ca, cb = _content(a, k, p), _content(b, k, p)
    c = poly_gcd(ca, cb, p)
    f = pdiv_exact(a, ca, p)
    g = pdiv_exact(b, cb, p)
    if _deg(f, k) < _deg(g, k):
        f, g = g, f
    while True:
        r = _prem(f, g, k, p)
        if not r:
            break
        if not _involves(r, k):
            g = {(0,) * nv: 1}
            break
        f, g = g, pdiv_exact(r, _content(r, k, p), p)
    if _involves(g, k):
        g = pdiv_exact(g, _content(g, k, p), p)
    return pmonic(pmul(c, g, p), p)


def poly_str(a: dict, names: tuple) -> str:
    if not a:
        return "0"
    parts = []
    for e in sorted(a, reverse=True):
        c = a[e]
        factors = []
        for name, k in zip(names, e):
            if k == 1:
                factors.append(name)
            elif k:
                factors.append(f"{name}^{k}")
        if not factors:
            parts.append(str(c))
        elif c == 1:
            parts.append("*".join(factors))
        else:
            parts.append(f"{c}*" + "*".join(factors))
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# fields and elements
# ---------------------------------------------------------------------------

class Field:
    """The field F_p (no indeterminates) or F_p(t_1, ..., t_m).

    Calling the field coerces ints, strings and its own elements.
    """

    def __init__(self, p: int, vars: Iterable[str] = ()):
        vars = tuple(vars)
        if not isinstance(p, int) or not is_prime(p):
            raise ValueError(f"characteristic must be a prime, got {p!r}")
        if len(set(vars)) != len(vars):
            raise ValueError(f"indeterminate names must be distinct: {vars}")
        for v in vars:
            if not NAME_RE.match(v):
                raise ValueError(f"bad indeterminate name {v!r}")
        self.p = p
        self.vars = vars
        self.nvars = len(vars)
        self._zero_exp = (0,) * self.nvars
        self.zero = self._const(0)
        self.one = self._const(1)

    @property
    def is_prime_field(self) -> bool:
        return self.nvars == 0

    def _const(self, c: int) -> "Scalar":
        c %= self.p
        if self.nvars == 0:
            return Residue(self, c)
        num = {self._zero_exp: c} if c else {}
        return RationalFunction._raw(self, num, {self._zero_exp: 1})

    def __call__(self, value) -> "Scalar":
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatchError(f"{value!r} is not an element of {self}")
            return value
        if isinstance(value, bool):
            raise TypeError("refusing to coerce bool to a field element")
        if isinstance(value, int):
            return self._const(value)
        if isinstance(value, str):
            return self.parse(value)
        raise TypeError(f"cannot coerce {type(value).__name__} into {self}")

    def gen(self, name: str | int) -> "Scalar":
        k = self.vars.index(name) if isinstance(name, str) else name
        e = tuple(1 if i == k else 0 for i in range(self.nvars))
        return RationalFunction._raw(self, {e: 1}, {self._zero_exp: 1})

    def gens(self) -> list["Scalar"]:
        return [self.gen(k) for k in range(self.nvars)]

    def from_polys(self, num: dict, den: dict | None = None) -> "Scalar":
        if self.nvars == 0:
            n = num.get((), 0)
            d = 1 if den is None else den.get((), 0)
            if not d % self.p:
                raise ZeroDivisionError("division by zero in F_p")
            return Residue(self, n * pow(d, -1, self.p))
        return RationalFunction._make(self, num, den if den is not None else {self._zero_exp: 1})

    def parse(self, text: str) -> "Scalar":
        names = {v: self.gen(v) for v in self.vars}
        value = parse_expression(text, names, self._const)
        if not isinstance(value, Scalar):  # pragma: no cover - grammar only yields scalars
            raise ParseError(f"{text!r} is not a scalar")
        return value

    def random(self, rng: _random.Random, degree: int = 2, nonzero: bool = False) -> "Scalar":
        """Random polynomial element of total degree <= ``degree``."""
        while True:
            if self.nvars == 0:
                value = self._const(rng.randrange(self.p))
            else:
                num = {}
                for e in product(range(degree + 1), repeat=self.nvars):
                    if sum(e) <= degree and rng.random() < 0.5:
                        c = rng.randrange(1, self.p)
                        num[e] = c
                value = RationalFunction._raw(self, num, {self._zero_exp: 1})
            if value or not nonzero:
                return value

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and (self.p, self.vars) == (other.p, other.vars)

    def __hash__(self) -> int:
        return hash((self.p, self.vars))

    def __repr__(self) -> str:
        if not self.vars:
            return f"GF({self.p})"
        return f"GF({self.p})({', '.join(self.vars)})"

    def to_dict(self) -> dict:
        return {"p": self.p, "vars": list(self.vars)}


class Scalar:
    """Common operator plumbing for field elements."""

    __slots__ = ()
    field: Field

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatchError(f"mixed fields {self.field} and {other.field}")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return self.field._const(other)
        return None

    def __radd__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else o + self

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else o - self

    def __rmul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else o * self

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else o / self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (self.field.one / self) ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def inverse(self) -> "Scalar":
        return self.field.one / self

    def __repr__(self) -> str:
        return f"{self.field!r}({str(self)!r})"


class Residue(Scalar):
    """Element of the prime field F_p, stored as its least residue."""

    __slots__ = ("field", "v")

    def __init__(self, field: Field, v: int):
        self.field = field
        self.v = v

    def __add__(self, other):
        if isinstance(other, Residue) and other.field is self.field:
            return Residue(self.field, (self.v + other.v) % self.field.p)
        o = self._coerce(other)
        return NotImplemented if o is None else Residue(self.field, (self.v + o.v) % self.field.p)

    def __sub__(self, other):
        if isinstance(other, Residue) and other.field is self.field:
            return Residue(self.field, (self.v - other.v) % self.field.p)
        o = self._coerce(other)
        return NotImplemented if o is None else Residue(self.field, (self.v - o.v) % self.field.p)

    def __mul__(self, other):
        if isinstance(other, Residue) and other.field is self.field:
            return Residue(self.field, self.v * other.v % self.field.p)
        o = self._coerce(other)
        return NotImplemented if o is None else Residue(self.field, self.v * o.v % self.field.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.v:
            raise ZeroDivisionError("division by zero in F_p")
        return Residue(self.field, self.v * pow(o.v, -1, self.field.p) % self.field.p)

    def __neg__(self):
        return Residue(self.field, (-self.v) % self.field.p)

    def __bool__(self) -> bool:
        return self.v != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, Residue):
            return self.v == other.v and self.field == other.field
        if isinstance(other, int) and not isinstance(other, bool):
            return self.v == other % self.field.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Fp", self.field.p, self.v))

    def __str__(self) -> str:
        return str(self.v)

    def key(self) -> tuple:
        return (self.v,)

    @property
    def num(self) -> dict:
        return {(): self.v} if self.v else {}

    @property
    def den(self) -> dict:
        return {(): 1}

    def is_polynomial(self) -> bool:
        return True


class RationalFunction(Scalar):
    """Reduced fraction num/den of polynomials over F_p."""

    __slots__ = ("field", "num", "den", "_hash")

    @classmethod
    def _raw(cls, field: Field, num: dict, den: dict) -> "RationalFunction":
        obj = object.__new__(cls)
        obj.field = field
        obj.num = num
        obj.den = den if num else {field._zero_exp: 1}
        obj._hash = None
        return obj

    @classmethod
    def _make(cls, field: Field, num: dict, den: dict) -> "RationalFunction":
        p = field.p
        if not den:
            raise ZeroDivisionError("division by zero in rational function field")
        if not num:
            return cls._raw(field, {}, {field._zero_exp: 1})
        if not _is_const(den):
            g = poly_gcd(num, den, p)
            if not _is_const(g):
                num = pdiv_exact(num, g, p)
                den = pdiv_exact(den, g, p)
        c = den[lead(den)]
        if c != 1:
            inv = pow(c, -1, p)
            num = pscale(num, inv, p)
            den = pscale(den, inv, p)
        return cls._raw(field, num, den)

    def _is_poly(self) -> bool:
        return len(self.den) == 1 and self.field._zero_exp in self.den

    def is_polynomial(self) -> bool:
        return self._is_poly()

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.field.p
        if self._is_poly() and o._is_poly():
            return RationalFunction._raw(self.field, padd(self.num, o.num, p), self.den)
        if self.den == o.den:
            return RationalFunction._make(self.field, padd(self.num, o.num, p), self.den)
        num = padd(pmul(self.num, o.den, p), pmul(o.num, self.den, p), p)
        return RationalFunction._make(self.field, num, pmul(self.den, o.den, p))

    def __neg__(self):
        return RationalFunction._raw(self.field, pneg(self.num, self.field.p), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.field.p
        if self._is_poly() and o._is_poly():
            return RationalFunction._raw(self.field, pmul(self.num, o.num, p), self.den)
        return RationalFunction._make(
            self.field, pmul(self.num, o.num, p), pmul(self.den, o.den, p)
        )

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError("division by zero in rational function field")
        p = self.field.p
        return RationalFunction._make(
            self.field, pmul(self.num, o.den, p), pmul(self.den, o.num, p)
        )

    def __bool__(self) -> bool:
        return bool(self.num)

    def key(self) -> tuple:
        """Canonical sorted representation; equal elements have equal keys."""
        return (tuple(sorted(self.num.items())), tuple(sorted(self.den.items())))

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalFunction):
            return self.field == other.field and self.num == other.num and self.den == other.den
        if isinstance(other, int) and not isinstance(other, bool):
            return self == self.field._const(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field, frozenset(self.num.items()), frozenset(self.den.items())))
        return self._hash

    def __str__(self) -> str:
        names = self.field.vars
        n = poly_str(self.num, names)
        if self._is_poly():
            return n
        if len(self.num) > 1:
            n = f"({n})"
        d = poly_str(self.den, names)
        simple = d in names or d.isdigit()
        return f"{n}/{d}" if simple else f"{n}/({d})"

    def degree(self) -> int:
        """Largest total degree among numerator and denominator terms."""
        return max(sum(e) for e in (*self.num, *self.den))


# ---------------------------------------------------------------------------
# Frobenius, p^r-th roots, K^{p^r}-module coordinates
# ---------------------------------------------------------------------------

def frobenius(a: Scalar, r: int = 1) -> Scalar:
    """a^(p^r), by scaling monomial exponents (coefficients are fixed by Fermat)."""
    if r < 0:
        raise ValueError("iteration count must be >= 0")
    field = a.field
    p = field.p
    q = p ** r
    if isinstance(a, Residue):
        return Residue(field, pow(a.v, q, p))
    num = {tuple(k * q for k in e): pow(c, q, p) for e, c in a.num.items()}
    den = {tuple(k * q for k in e): pow(c, q, p) for e, c in a.den.items()}
    return RationalFunction._raw(field, num, den)


def _residue_root(c: int, q: int, p: int) -> int:
    # x -> x^p is the identity on F_p, so the unique q-th root of c is c itself
    assert pow(c, q, p) == c % p
    return c % p


def pth_root(a: Scalar, r: int = 1) -> Scalar | None:
    """The unique b with b^(p^r) = a, or None when a is not a p^r-th power."""
    if r < 0:
        raise ValueError("iteration count must be >= 0")
    field = a.field
    p = field.p
    q = p ** r
    if isinstance(a, Residue):
        return Residue(field, _residue_root(a.v, q, p))
    out = []
    for poly in (a.num, a.den):
        rooted = {}
        for e, c in poly.items():
            if any(k % q for k in e):
                return None
            rooted[tuple(k // q for k in e)] = _residue_root(c, q, p)
        out.append(rooted)
    return RationalFunction._raw(field, out[0], out[1])


def kp_module_coords(a: Scalar, r: int = 1) -> dict[tuple, Scalar]:
    """Coordinates of a in the K^(p^r)-basis {t^e : every e_i < p^r}.

    Returns ``{e: c_e}`` with ``a = sum_e c_e^(p^r) * t^e`` and only nonzero
    ``c_e``.  For a fraction n/d the identity n/d = (n d^(q-1)) / d^q moves
    the problem onto a polynomial numerator, so every element of
    F_p(t_1..t_m) decomposes.
    """
    field = a.field
    p = field.p
    q = p ** r
    if not a:
        return {}
    if isinstance(a, Residue):
        return {(): Residue(field, _residue_root(a.v, q, p))}
    one = {field._zero_exp: 1}
    if a._is_poly():
        num = a.num
    else:
        num = pmul(a.num, ppow(a.den, q - 1, p, one), p)
    parts: dict = defaultdict(dict)
    for e, c in num.items():
        low = tuple(k % q for k in e)
        high = tuple(k // q for k in e)
        parts[low][high] = _residue_root(c, q, p)
    den = a.den
    return {e: RationalFunction._make(field, poly, den) for e, poly in sorted(parts.items())}


def monomial(field: Field, e: tuple) -> Scalar:
    """The field element t^e."""
    return RationalFunction._raw(field, {tuple(e): 1}, {field._zero_exp: 1})
