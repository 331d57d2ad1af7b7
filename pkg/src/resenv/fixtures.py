"""Built-in restricted Lie algebras used by the CLI, the scenarios and the tests."""

from __future__ import annotations

from typing import Callable

from .errors import StructureError
from .liealg import RestrictedLieAlgebra
from .scalars import Field


def strongly_abelian(n: int = 3, p: int = 2) -> RestrictedLieAlgebra:
    """Abelian, zero p-map."""
    labels = [f"x{i + 1}" for i in range(n)]
    return RestrictedLieAlgebra(Field(p), labels, {}, {}, name=f"strongly-abelian-{n}")


def torus(k: int = 1, p: int = 2) -> RestrictedLieAlgebra:
    """Split torus span{x_1..x_k} with x_i^[p] = x_i."""
    labels = [f"x{i + 1}" for i in range(k)]
    pmap = {lab: {lab: 1} for lab in labels}
    return RestrictedLieAlgebra(Field(p), labels, {}, pmap, name=f"torus-{k}")


def nil_line(p: int = 2) -> RestrictedLieAlgebra:
    """One-dimensional, x^[p] = 0: u(L) = F[x]/(x^p)."""
    return RestrictedLieAlgebra(Field(p), ["x"], {}, {}, name="nil-line")


def heisenberg(p: int = 2) -> RestrictedLieAlgebra:
    """[x, y] = z with z central and zero p-map."""
    return RestrictedLieAlgebra(Field(p), ["x", "y", "z"], {("x", "y"): {"z": 1}}, {}, name="heisenberg")


def heisenberg_derivation(p: int = 2) -> RestrictedLieAlgebra:
    """Heisenberg algebra extended by a toral t acting by [t,x]=x, [t,y]=y, [t,z]=2z."""
    F = Field(p)
    brackets = {("t", "x"): {"x": 1}, ("t", "y"): {"y": 1}, ("t", "z"): {"z": 2}, ("x", "y"): {"z": 1}}
    return RestrictedLieAlgebra(F, ["t", "x", "y", "z"], brackets, {"t": {"t": 1}}, name="heisenberg-derivation")


def nonabelian2(p: int = 2) -> RestrictedLieAlgebra:
    """[x, y] = y, x^[p] = x, y^[p] = 0."""
    return RestrictedLieAlgebra(Field(p), ["x", "y"], {("x", "y"): {"y": 1}}, {"x": {"x": 1}}, name="nonabelian-2")


def sl2(p: int = 3) -> RestrictedLieAlgebra:
    """sl_2 with [h,e]=2e, [h,f]=-2f, [e,f]=h, h^[p]=h, e^[p]=f^[p]=0."""
    brackets = {("h", "e"): {"e": 2}, ("h", "f"): {"f": -2}, ("e", "f"): {"h": 1}}
    return RestrictedLieAlgebra(Field(p), ["h", "e", "f"], brackets, {"h": {"h": 1}}, name="sl2")


def torus_plus_nil(p: int = 2) -> RestrictedLieAlgebra:
    """Abelian span{x, w} with x^[p] = x and w^[p] = 0."""
    return RestrictedLieAlgebra(Field(p), ["x", "w"], {}, {"x": {"x": 1}}, name="torus-plus-nil")


def mixed_abelian(p: int = 2) -> RestrictedLieAlgebra:
    """Abelian of dimension 4: a 2-torus, a nil chain v -> w -> 0 and nothing else."""
    pmap = {"x1": {"x1": 1}, "x2": {"x2": 1, "w": 1}, "v": {"w": 1}}
    return RestrictedLieAlgebra(Field(p), ["x1", "x2", "v", "w"], {}, pmap, name="mixed-abelian")


def nil_chain_abelian(p: int = 2) -> RestrictedLieAlgebra:
    """Abelian span{a, b, c} with a^[p] = b, b^[p] = c, c^[p] = 0."""
    return RestrictedLieAlgebra(Field(p), ["a", "b", "c"], {}, {"a": {"b": 1}, "b": {"c": 1}}, name="nil-chain")


def perfect_field_algebra(m: int = 2, sabotage: bool = False) -> RestrictedLieAlgebra:
    """span{x, y_1..y_m} over F_2(t_1..t_m): abelian, x^[2] = x, y_i^[2] = t_i x.

    With ``sabotage`` the p-map of y_1 is set to 0 instead (negative control).
    """
    if m < 1:
        raise StructureError("m must be >= 1")
    F = Field(2, [f"t{i + 1}" for i in range(m)])
    labels = ["x"] + [f"y{i + 1}" for i in range(m)]
    pmap = {"x": {"x": 1}}
    for i in range(m):
        if sabotage and i == 0:
            continue
        pmap[f"y{i + 1}"] = {"x": F.gen(i)}
    name = f"perfect-field-m{m}" + ("-sabotaged" if sabotage else "")
    return RestrictedLieAlgebra(F, labels, {}, pmap, name=name)


BUILTINS: dict[str, Callable[..., RestrictedLieAlgebra]] = {
    "strongly-abelian": strongly_abelian,
    "torus": torus,
    "nil-line": nil_line,
    "heisenberg": heisenberg,
    "heisenberg-derivation": heisenberg_derivation,
    "nonabelian-2": nonabelian2,
    "sl2": sl2,
    "torus-plus-nil": torus_plus_nil,
    "mixed-abelian": mixed_abelian,
    "nil-chain": nil_chain_abelian,
    "perfect-field": perfect_field_algebra,
}


def builtin(name: str, **kwargs) -> RestrictedLieAlgebra:
    try:
        factory = BUILTINS[name]
    except KeyError:
        known = ", ".join(sorted(BUILTINS))
        raise StructureError(f"unknown builtin algebra {name!r}; known: {known}") from None
    return factory(**kwargs)
