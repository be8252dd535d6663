"""Named algebras and quivers shipped with the package."""
from __future__ import annotations

import json
import re
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .algebra import (Arrow, BoundAlgebra, Quiver, Relation, algebra_from_dict,
                      build_algebra, direct_sum, quotient_by_ideal)


class UnknownAlgebra(KeyError):
    pass


def _data(*parts) -> Path:
    return Path(str(resources.files("tautilt"))).joinpath("data", *parts)


def _file_for(name: str) -> Path:
    fname = name.replace("(", "_").replace(")", "").replace(",", "_")
    return _data("algebras", f"{fname}.json")


def a_m(m: int, p: int = 2) -> BoundAlgebra:
    """The algebra A_m on the doubled line with m vertices."""
    if m < 1:
        raise UnknownAlgebra(f"A_{m}")
    verts = tuple(str(i) for i in range(1, m + 1))
    arrows, rels = [], []
    for i in range(1, m):
        arrows += [Arrow(f"a{i}", str(i), str(i + 1)), Arrow(f"b{i}", str(i + 1), str(i))]
    if m >= 2:
        rels.append(Relation.of("a1 b1"))
    for i in range(1, m - 1):
        rels += [Relation.of(f"a{i} a{i + 1}"), Relation.of(f"b{i + 1} b{i}"),
                 Relation.of(f"b{i} a{i}", (-1, f"a{i + 1} b{i + 1}"))]
    return build_algebra(Quiver(verts, tuple(arrows)), rels, p, 3, f"A_{m}")


def brauer_line(m: int, p: int = 2) -> BoundAlgebra:
    """Brauer tree algebra of a line with m edges and no exceptional vertex."""
    if m < 1:
        raise UnknownAlgebra(f"Lambda_{m}")
    if m == 1:
        q = Quiver(("1",), (Arrow("a1", "1", "1"),))
        return build_algebra(q, [Relation.of("a1 a1")], p, 2, "Lambda_1")
    verts = tuple(str(i) for i in range(1, m + 1))
    arrows, rels = [], []
    for i in range(1, m):
        arrows += [Arrow(f"a{i}", str(i), str(i + 1)), Arrow(f"b{i}", str(i + 1), str(i))]
    for i in range(1, m - 1):
        rels += [Relation.of(f"a{i} a{i + 1}"), Relation.of(f"b{i + 1} b{i}"),
                 Relation.of(f"b{i} a{i}", (-1, f"a{i + 1} b{i + 1}"))]
    if m == 2:
        rels += [Relation.of("a1 b1 a1"), Relation.of("b1 a1 b1")]
    return build_algebra(Quiver(verts, tuple(arrows)), rels, p, 3, f"Lambda_{m}")


def names() -> list[str]:
    out = []
    for f in sorted(_data("algebras").iterdir()):
        if f.suffix == ".json":
            out.append(json.loads(f.read_text(encoding="utf-8"))["name"])
    return out


@lru_cache(maxsize=None)
def catalog(name: str, p: int | None = None) -> BoundAlgebra:
    """Algebra by catalog name; ``p`` overrides the stored characteristic."""
    m = re.fullmatch(r"A_(\d+)", name)
    if m:
        return a_m(int(m.group(1)), p or 2)
    m = re.fullmatch(r"Lambda_(\d+)", name)
    if m:
        return brauer_line(int(m.group(1)), p or 2)
    path = _file_for(name)
    if not path.exists():
        raise UnknownAlgebra(name)
    d = json.loads(path.read_text(encoding="utf-8"))
    if "quotient_of" in d:
        base = catalog(d["quotient_of"], p)
        gens = [base.element([(t["coeff"], t["path"]) for t in r]) for r in d["by"]]
        return quotient_by_ideal(base, gens, d["name"])
    if "direct_sum" in d:
        pp = p or int(d["char"])
        parts = [(catalog(nm, pp), labels) for nm, labels in d["direct_sum"]]
        return direct_sum(parts, d["name"])
    return algebra_from_dict(d, p)


def resolve(spec: str, p: int | None = None) -> BoundAlgebra:
    """Catalog name or path to an algebra JSON file."""
    if spec.endswith(".json") or Path(spec).is_file():
        d = json.loads(Path(spec).read_text(encoding="utf-8"))
        return algebra_from_dict(d, p)
    return catalog(spec, p)


def load_quiver(path) -> Quiver:
    """Quiver JSON: {"vertices": [...], "arrows": [...]} or {"vertices", "edges"} for double arrows."""
    p = Path(path)
    if not p.exists():
        alt = _data("quivers", p.name)
        if alt.exists():
            p = alt
    d = json.loads(p.read_text(encoding="utf-8"))
    verts = tuple(str(v) for v in d["vertices"])
    arrows = [Arrow(a["name"], str(a["from"]), str(a["to"])) for a in d.get("arrows", [])]
    for k, (u, v) in enumerate(d.get("edges", [])):
        arrows += [Arrow(f"x{k}", str(u), str(v)), Arrow(f"y{k}", str(v), str(u))]
    return Quiver(verts, tuple(arrows))


def quiver_names() -> list[str]:
    return sorted(f.name for f in _data("quivers").iterdir() if f.suffix == ".json")
