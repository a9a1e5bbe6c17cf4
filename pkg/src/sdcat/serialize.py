"""JSON and DOT formats.

Category files look like::

    {"objects": 1, "morphisms": [{"id": 0, "dom": 0, "cod": 0}, ...],
     "identities": [0], "composition": [[g, f, gf], ...]}

or use builder shorthand such as ``{"builder": "dihedral", "n": 3}``.
Output is compact, key-ordered and newline-terminated, so writing the same
category twice gives identical bytes.
"""
from __future__ import annotations

import json

import numpy as np

from . import fincat
from .errors import NotAGroupoid
from .fincat import FinCategory, Functor
from .subdivision import SdCategory


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def category_to_dict(C: FinCategory, with_names: bool = True) -> dict:
    G, F = np.nonzero(C.comp >= 0)
    d = {
        "objects": C.n_objects,
        "morphisms": [{"id": f, "dom": int(C.dom[f]), "cod": int(C.cod[f])} for f in C.morphisms],
        "identities": list(C.objects),
        "composition": [[int(g), int(f), int(C.comp[g, f])] for g, f in zip(G, F)],
    }
    if with_names and C.names is not None:
        d["names"] = list(C.names)
    return d


def dumps_category(C: FinCategory, with_names: bool = True) -> str:
    return _dump(category_to_dict(C, with_names))


def _builder(d: dict) -> FinCategory:
    kind = d["builder"]
    n = d.get("n")
    simple = {
        "cyclic": lambda: fincat.cyclic_group(n),
        "dihedral": lambda: fincat.dihedral_group(n),
        "klein_four": fincat.klein_four,
        "quaternion": fincat.quaternion_group,
        "frobenius21": fincat.frobenius_group_21,
        "discrete": lambda: fincat.discrete(n),
        "poset_interval": lambda: fincat.poset_interval(n),
        "zigzag": lambda: fincat.zigzag(d.get("k", n), d.get("start_forward", True)),
    }
    if kind in simple:
        return simple[kind]()
    if kind == "pair_groupoid":
        vg = d.get("vertex_group")
        return fincat.pair_groupoid(n, category_from_dict(vg) if vg else None)
    if kind == "disjoint_union":
        return fincat.disjoint_union(*(category_from_dict(p) for p in d["parts"]))
    if kind == "direct_product":
        a, b = (category_from_dict(p) for p in d["parts"])
        return fincat.direct_product(a, b)
    if kind == "opposite":
        return fincat.opposite(category_from_dict(d["of"]))
    raise ValueError(f"unknown builder {kind!r}")


def category_from_dict(d: dict) -> FinCategory:
    """Load a category; groupoids come back as FinGroupoid."""
    if "builder" in d:
        C = _builder(d)
    else:
        n = int(d["objects"])
        mors = sorted(d["morphisms"], key=lambda r: r["id"])
        if [r["id"] for r in mors] != list(range(len(mors))):
            raise ValueError("morphism ids must be 0..m-1")
        table = {(g, f): h for g, f, h in d["composition"]}
        C = fincat.from_parts(n, [r["dom"] for r in mors], [r["cod"] for r in mors],
                              d["identities"], table, d.get("names"))
    try:
        return fincat.as_groupoid(C)
    except NotAGroupoid:
        return C


def loads_category(text: str) -> FinCategory:
    return category_from_dict(json.loads(text))


def functor_to_dict(F: Functor) -> dict:
    return {"objects": list(F.obj_map), "morphisms": list(F.mor_map)}


def functor_from_dict(d: dict, source: FinCategory, target: FinCategory) -> Functor:
    return Functor(source, target, tuple(d["objects"]), tuple(d["morphisms"]))


def sd_index(sd: SdCategory) -> dict:
    """Sidecar mapping object ids to chains and morphism ids to vertex subsets."""
    return {
        "truncation": sd.truncation,
        "objects": [{"id": i, "base": s.base, "chain": list(s.chain)} for i, s in enumerate(sd.simplices)],
        "morphisms": [{"id": j, "target": int(sd.mor_target[j]),
                       "subset": sd.describe_morphism(j)["subset"]} for j in sd.category.morphisms],
    }


def to_dot(C: FinCategory, object_labels=None, name: str = "C") -> str:
    """Objects as nodes, non-identity morphisms as edges."""
    labels = object_labels or [str(a) for a in C.objects]
    lines = [f"digraph {name} {{"]
    for a in C.objects:
        lines.append(f'  n{a} [label={json.dumps(labels[a])}];')
    for f in range(C.n_objects, C.n_morphisms):
        lines.append(f'  n{C.dom[f]} -> n{C.cod[f]} [label={json.dumps(C.name(f))}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def sd_to_dot(sd: SdCategory) -> str:
    return to_dot(sd.category, [s.label(sd.base) for s in sd.simplices], "Sd")
