"""JSON group files: ``{"name": ..., "degree": n, "generators": [...]}``.

A generator is either a 0-based image array or a cycle string such as
``"(0 1)(2 3)"``.  Files are always written with image arrays.
"""
from __future__ import annotations

import json
from pathlib import Path

from .group import DEFAULT_MAX_ORDER, Group, PreconditionError, closure
from .perm import Permutation


def parse_group(data: dict, max_order: int = DEFAULT_MAX_ORDER) -> Group:
    try:
        degree = int(data["degree"])
        raw = data["generators"]
    except (KeyError, TypeError, ValueError) as exc:
        raise PreconditionError(f"group file needs integer 'degree' and 'generators': {exc}") from None
    if degree < 1:
        raise PreconditionError(f"degree must be positive, got {degree}")
    gens = []
    for g in raw:
        try:
            if isinstance(g, str):
                gens.append(Permutation.parse(g, degree))
            else:
                p = Permutation(g)
                if p.degree != degree:
                    raise ValueError(f"image array {g} has length {p.degree}, expected {degree}")
                gens.append(p)
        except ValueError as exc:
            raise PreconditionError(f"bad generator {g!r}: {exc}") from None
    return closure(degree, gens, max_order=max_order, name=data.get("name"))


def load_group(path: str | Path, max_order: int = DEFAULT_MAX_ORDER) -> Group:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise PreconditionError(f"{path}: invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise PreconditionError(f"{path}: expected a JSON object")
    data.setdefault("name", Path(path).stem)
    return parse_group(data, max_order)


def dumps_group(G: Group) -> str:
    gens = ",\n".join("    " + json.dumps(list(g.images)) for g in G.generators)
    return (
        "{\n"
        f'  "name": {json.dumps(G.name)},\n'
        f'  "degree": {G.degree},\n'
        f'  "generators": [\n{gens}\n  ]\n'
        "}\n"
    )


def save_group(G: Group, path: str | Path) -> None:
    Path(path).write_text(dumps_group(G))
