"""JSON algebra descriptions.

Format::

    {
      "name": "heisenberg",
      "description": "...",              (optional)
      "p": 2,
      "vars": [],
      "basis": ["x", "y", "z"],
      "brackets": [{"i": "x", "j": "y", "coeffs": {"z": "1"}}],
      "pmap": {"x": {}, "y": {}, "z": {}}
    }

``i`` and ``j`` may be basis labels or 0-based indices; coefficients are
scalar strings in the field grammar (integers, indeterminates,
``+ - * / ^`` and parentheses).  Unlisted brackets and p-map entries are 0.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Mapping
from urllib.parse import parse_qsl

from ..errors import ParseError, ResenvError, StructureError
from ..fixtures import builtin
from ..liealg import RestrictedLieAlgebra
from ..scalars import Field

BUILTIN_PREFIX = "builtin:"


def _coeff_map(field: Field, raw: Any, where: str) -> dict:
    if not isinstance(raw, Mapping):
        raise StructureError(f"{where}: expected an object of label -> scalar string")
    out = {}
    for label, text in raw.items():
        if isinstance(text, int) and not isinstance(text, bool):
            text = str(text)
        if not isinstance(text, str):
            raise StructureError(f"{where}: coefficient of {label!r} must be a string")
        out[label] = field.parse(text)
    return out


def algebra_from_dict(data: Mapping) -> RestrictedLieAlgebra:
    if not isinstance(data, Mapping):
        raise StructureError("algebra spec must be a JSON object")
    missing = [k for k in ("p", "basis") if k not in data]
    if missing:
        raise StructureError(f"algebra spec lacks {', '.join(missing)}")
    try:
        field = Field(data["p"], data.get("vars", []))
    except (TypeError, ValueError) as exc:
        raise StructureError(f"bad field: {exc}") from None
    basis = data["basis"]
    if not isinstance(basis, list):
        raise StructureError("basis must be a list of labels")
    brackets = []
    for k, entry in enumerate(data.get("brackets", [])):
        if not isinstance(entry, Mapping) or not {"i", "j"} <= set(entry):
            raise StructureError(f"brackets[{k}] needs i and j")
        coeffs = _coeff_map(field, entry.get("coeffs", {}), f"brackets[{k}]")
        brackets.append((entry["i"], entry["j"], coeffs))
    pmap_raw = data.get("pmap", {})
    if not isinstance(pmap_raw, Mapping):
        raise StructureError("pmap must map labels to coefficient objects")
    pmap = {label: _coeff_map(field, v, f"pmap[{label!r}]") for label, v in pmap_raw.items()}
    return RestrictedLieAlgebra(
        field,
        basis,
        brackets,
        pmap,
        name=str(data.get("name", "")),
        description=str(data.get("description", "")),
    )


def algebra_to_dict(L: RestrictedLieAlgebra) -> dict:
    brackets = []
    for i in range(L.n):
        for j in range(i + 1, L.n):
            vec = L.structure_constants(i, j)
            if any(vec):
                coeffs = {L.labels[k]: str(c) for k, c in enumerate(vec) if c}
                brackets.append({"i": L.labels[i], "j": L.labels[j], "coeffs": coeffs})
    pmap = {
        L.labels[i]: {L.labels[k]: str(c) for k, c in enumerate(L.pmap_vector(i)) if c}
        for i in range(L.n)
    }
    out = {
        "name": L.name,
        "p": L.p,
        "vars": list(L.field.vars),
        "basis": list(L.labels),
        "brackets": brackets,
        "pmap": pmap,
    }
    if L.description:
        out["description"] = L.description
    return out


def load_algebra(source: str | Path) -> RestrictedLieAlgebra:
    """Read an algebra from a JSON file, or ``builtin:NAME[?key=value&...]``."""
    source = str(source)
    if source.startswith(BUILTIN_PREFIX):
        name, _, query = source[len(BUILTIN_PREFIX):].partition("?")
        kwargs = {}
        for key, value in parse_qsl(query, strict_parsing=bool(query)):
            if value.lower() in ("true", "false"):
                kwargs[key] = value.lower() == "true"
            else:
                try:
                    kwargs[key] = int(value)
                except ValueError:
                    raise StructureError(f"builtin parameter {key}={value!r} is not an integer") from None
        try:
            return builtin(name, **kwargs)
        except TypeError as exc:
            raise StructureError(f"bad parameters for builtin {name!r}: {exc}") from None
        except ValueError as exc:
            if isinstance(exc, ResenvError):
                raise
            raise StructureError(str(exc)) from None
    try:
        text = Path(source).read_text()
    except OSError as exc:
        raise StructureError(f"cannot read {source}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    return algebra_from_dict(data)


def dump_algebra(L: RestrictedLieAlgebra, path: str | Path) -> None:
    Path(path).write_text(json.dumps(algebra_to_dict(L), indent=2, sort_keys=True) + "\n")
