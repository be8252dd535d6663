"""Bound quiver algebras FQ/I over a prime field.

Paths compose left to right: in the word ``a b`` the arrow ``a`` is
traversed first.  Every algebra is stored by structure constants over a
basis of Peirce-homogeneous elements; each basis element also records a
word in the generators (arrows for quiver algebras) whose product it
equals, which is all the module code needs.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct
from typing import Iterable, Sequence

import numpy as np

from . import linalg as la


class AlgebraError(ValueError):
    """Ill-formed quiver or relations."""


class NotAdmissible(AlgebraError):
    """Some path of length cap+1 survives in the quotient."""


class ZeroQuotient(AlgebraError):
    """The ideal contains the identity."""


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...] = ()

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise AlgebraError("duplicate vertex labels")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise AlgebraError("duplicate arrow names")
        vs = set(self.vertices)
        for a in self.arrows:
            if a.source not in vs or a.target not in vs:
                raise AlgebraError(f"arrow {a.name} has an undeclared endpoint")

    @property
    def vindex(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @property
    def arrow(self) -> dict[str, Arrow]:
        return {a.name: a for a in self.arrows}

    def path_ends(self, path: Sequence[str]) -> tuple[str, str]:
        if not path:
            raise AlgebraError("empty path in a relation")
        amap = self.arrow
        for nm in path:
            if nm not in amap:
                raise AlgebraError(f"unknown arrow {nm}")
        for x, y in zip(path, path[1:]):
            if amap[x].target != amap[y].source:
                raise AlgebraError(f"arrows {x},{y} do not compose")
        return amap[path[0]].source, amap[path[-1]].target


@dataclass(frozen=True)
class Relation:
    """A linear combination of paths sharing source and target."""

    terms: tuple[tuple[int, tuple[str, ...]], ...]

    @staticmethod
    def of(*terms) -> "Relation":
        out = []
        for t in terms:
            if isinstance(t, str):
                out.append((1, tuple(t.split())))
            else:
                c, path = t
                out.append((int(c), tuple(path.split()) if isinstance(path, str) else tuple(path)))
        return Relation(tuple(out))

    def reduced(self, p: int) -> "Relation":
        acc: dict[tuple[str, ...], int] = {}
        for c, path in self.terms:
            acc[path] = (acc.get(path, 0) + c) % p
        return Relation(tuple((c, w) for w, c in acc.items() if c))

    def reversed(self) -> "Relation":
        return Relation(tuple((c, tuple(reversed(w))) for c, w in self.terms))


@dataclass
class Generator:
    name: str
    source: int
    target: int
    vec: np.ndarray


@dataclass
class BoundAlgebra:
    name: str
    p: int
    vertices: tuple[str, ...]
    labels: list[str]
    words: list[tuple[int, ...]]
    src: np.ndarray
    tgt: np.ndarray
    gens: list[Generator]
    mult: np.ndarray
    idem: list[int]
    quiver: Quiver | None = None
    relations: tuple[Relation, ...] | None = None
    cap: int | None = None
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def unit(self, b: int) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        v[b] = 1
        return v

    def one(self) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        v[self.idem] = 1
        return v

    def mul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return np.einsum("i,j,ijk->k", x, y, self.mult) % self.p

    def left_matrix(self, x: np.ndarray) -> np.ndarray:
        """Matrix L with (x*c) = row c of L, i.e. L[c] = x*c."""
        return np.einsum("i,ijk->jk", x, self.mult) % self.p

    def right_matrix(self, x: np.ndarray) -> np.ndarray:
        """Matrix R with R[b] = b*x."""
        return np.einsum("j,ijk->ik", x, self.mult) % self.p

    def gen_index(self, name: str) -> int:
        for k, g in enumerate(self.gens):
            if g.name == name:
                return k
        raise KeyError(name)

    def element(self, terms: Iterable) -> np.ndarray:
        """Element from (coeff, path) pairs; paths are generator-name words."""
        out = np.zeros(self.dim, dtype=np.int64)
        for c, path in Relation.of(*terms).terms:
            v = self.gens[self.gen_index(path[0])].vec
            for nm in path[1:]:
                v = self.mul(v, self.gens[self.gen_index(nm)].vec)
            out = (out + c * v) % self.p
        return out

    def label_of(self, vec: np.ndarray) -> str:
        parts = []
        for b in np.flatnonzero(vec % self.p):
            c = int(vec[b]) % self.p
            parts.append(self.labels[b] if c == 1 else f"{c}*{self.labels[b]}")
        return " + ".join(parts) if parts else "0"

    def check_axioms(self, sample: int = 4000, seed: int = 0) -> None:
        """Idempotent relations and associativity (exhaustive up to dim 64)."""
        p = self.p
        for i, bi in enumerate(self.idem):
            for j, bj in enumerate(self.idem):
                want = self.unit(bi) if i == j else np.zeros(self.dim, dtype=np.int64)
                if not np.array_equal(self.mul(self.unit(bi), self.unit(bj)), want):
                    raise AlgebraError("idempotents are not orthogonal")
        one = self.one()
        eye = np.eye(self.dim, dtype=np.int64)
        if not (np.array_equal(self.left_matrix(one), eye) and np.array_equal(self.right_matrix(one), eye)):
            raise AlgebraError("sum of idempotents is not the identity")
        m = self.mult
        if self.dim <= 64:
            lhs = np.einsum("ijm,mkl->ijkl", m, m) % p
            rhs = np.einsum("jkm,iml->ijkl", m, m) % p
            if not np.array_equal(lhs, rhs):
                raise AlgebraError("multiplication is not associative")
        else:
            rng = np.random.default_rng(seed)
            for _ in range(sample):
                i, j, k = rng.integers(0, self.dim, size=3)
                a = (m[i, j] @ m[:, k]) % p
                b = (m[j, k] @ m[i, :]) % p
                if not np.array_equal(a, b):
                    raise AlgebraError("multiplication is not associative")


# ---------------------------------------------------------------------------
# construction from a presentation


def _grading(quiver: Quiver, rels: Sequence[Relation]) -> list[int]:
    """Positive integer arrow weights making every relation homogeneous."""
    names = [a.name for a in quiver.arrows]
    pos = {nm: k for k, nm in enumerate(names)}
    rows = []
    for r in rels:
        base = np.zeros(len(names), dtype=np.int64)
        for nm in r.terms[0][1]:
            base[pos[nm]] += 1
        for _, w in r.terms[1:]:
            v = -base.copy()
            for nm in w:
                v[pos[nm]] += 1
            if v.any():
                rows.append(v)
    if not rows:
        return [1] * len(names)
    from scipy.optimize import linprog

    a_eq = np.array(rows, dtype=float)
    res = linprog(np.ones(len(names)), A_eq=a_eq, b_eq=np.zeros(len(rows)),
                  bounds=[(1, None)] * len(names), method="highs")
    if not res.success:
        raise AlgebraError("relations admit no positive grading by arrow weights")
    fr = [Fraction(x).limit_denominator(64) for x in res.x]
    den = 1
    for f in fr:
        den = den * f.denominator // np.gcd(den, f.denominator)
    w = [int(f * den) for f in fr]
    if np.any(np.array(rows) @ np.array(w)):
        raise AlgebraError("relations admit no positive grading by arrow weights")
    return w


def build_algebra(quiver: Quiver, relations: Sequence[Relation], p: int,
                  cap: int = 12, name: str = "") -> BoundAlgebra:
    if not la.is_prime(p):
        raise AlgebraError(f"characteristic {p} is not prime")
    rels = []
    for r in relations:
        r = r.reduced(p)
        if not r.terms:
            continue
        ends = {quiver.path_ends(w) for _, w in r.terms}
        if len(ends) != 1:
            raise AlgebraError("relation terms do not share source and target")
        rels.append(r)
    if rels and cap < max(len(w) for r in rels for _, w in r.terms):
        raise AlgebraError("cap is shorter than a relation")
    weights = _grading(quiver, rels)
    vix = quiver.vindex
    arrows = quiver.arrows
    anames = [a.name for a in arrows]

    # every path of length <= cap+1, as (source, arrow-index tuple)
    paths: list[tuple[int, tuple[int, ...]]] = [(i, ()) for i in range(len(quiver.vertices))]
    ends = [i for i in range(len(quiver.vertices))]
    frontier = list(range(len(paths)))
    for _ in range(cap + 1):
        nxt = []
        for pid in frontier:
            s, w = paths[pid]
            for k, a in enumerate(arrows):
                if vix[a.source] == ends[pid]:
                    paths.append((s, w + (k,)))
                    ends.append(vix[a.target])
                    nxt.append(len(paths) - 1)
        frontier = nxt
    pidx = {pth: k for k, pth in enumerate(paths)}
    key = [(len(w), s, tuple(anames[k] for k in w)) for s, w in paths]
    weight = [sum(weights[k] for k in w) for _, w in paths]

    comps: dict[int, list[int]] = {}
    for pid in sorted(range(len(paths)), key=lambda q: key[q], reverse=True):
        comps.setdefault(weight[pid], []).append(pid)
    cpos = {pid: j for lst in comps.values() for j, pid in enumerate(lst)}

    def ext(pid: int, k: int, left: bool) -> int:
        s, w = paths[pid]
        a = arrows[k]
        if left:
            if vix[a.target] != s:
                return -1
            return pidx.get((vix[a.source], (k,) + w), -1)
        if vix[a.source] != ends[pid]:
            return -1
        return pidx.get((s, w + (k,)), -1)

    relrows: dict[int, list[np.ndarray]] = {}
    aix = {nm: k for k, nm in enumerate(anames)}
    for r in rels:
        s0 = vix[quiver.path_ends(r.terms[0][1])[0]]
        d = sum(weights[aix[nm]] for nm in r.terms[0][1])
        v = np.zeros(len(comps[d]), dtype=np.int64)
        for c, w in r.terms:
            v[cpos[pidx[(s0, tuple(aix[nm] for nm in w))]]] = c % p
        relrows.setdefault(d, []).append(v)

    ideal: dict[int, np.ndarray] = {}
    for d in sorted(comps):
        nd = len(comps[d])
        cands = list(relrows.get(d, []))
        for k in range(len(arrows)):
            prev = ideal.get(d - weights[k])
            if prev is None or prev.shape[0] == 0:
                continue
            src_ids = comps[d - weights[k]]
            for left in (True, False):
                dst = np.array([ext(q, k, left) for q in src_ids])
                ok = dst >= 0
                if not ok.any():
                    continue
                block = np.zeros((prev.shape[0], nd), dtype=np.int64)
                block[:, [cpos[q] for q in dst[ok]]] = prev[:, ok]
                cands.append(block)
        if cands:
            stack = np.vstack([c.reshape(-1, nd) for c in cands])
            r_, _, k_ = la.rref(stack, p)
            ideal[d] = r_[:k_]
        else:
            ideal[d] = np.zeros((0, nd), dtype=np.int64)

    # normal forms as sparse dicts over path ids
    nf: dict[int, dict[int, int]] = {}
    for d, ids in comps.items():
        rows = ideal[d]
        pivrow = {}
        for i in range(rows.shape[0]):
            pivrow[int(np.flatnonzero(rows[i])[0])] = i
        for j, pid in enumerate(ids):
            if j in pivrow:
                row = rows[pivrow[j]]
                nf[pid] = {ids[c]: (-int(row[c])) % p for c in np.flatnonzero(row) if c != j}
            else:
                nf[pid] = {pid: 1}
    for pid, (s, w) in enumerate(paths):
        if len(w) == cap + 1 and nf[pid]:
            raise NotAdmissible(f"path {' '.join(anames[k] for k in w)} survives at cap {cap}")

    basis = sorted((pid for pid in range(len(paths)) if nf[pid] == {pid: 1} and len(paths[pid][1]) <= cap),
                   key=lambda q: key[q])
    bix = {pid: b for b, pid in enumerate(basis)}
    dim = len(basis)
    mult = np.zeros((dim, dim, dim), dtype=np.int64)
    for bi, u in enumerate(basis):
        su, wu = paths[u]
        for bj, v in enumerate(basis):
            sv, wv = paths[v]
            if ends[u] != sv or len(wu) + len(wv) > cap:
                continue
            if not wu:
                mult[bi, bj, bj] = 1
                continue
            if not wv:
                mult[bi, bj, bi] = 1
                continue
            for q, c in nf[pidx[(su, wu + wv)]].items():
                mult[bi, bj, bix[q]] = c
    gens = []
    for k, a in enumerate(arrows):
        pid = pidx[(vix[a.source], (k,))]
        if nf[pid] != {pid: 1}:
            raise NotAdmissible(f"arrow {a.name} is reducible; the ideal is not admissible")
        vec = np.zeros(dim, dtype=np.int64)
        vec[bix[pid]] = 1
        gens.append(Generator(a.name, vix[a.source], vix[a.target], vec))
    labels = []
    for pid in basis:
        s, w = paths[pid]
        labels.append(f"e{quiver.vertices[s]}" if not w else " ".join(anames[k] for k in w))
    return BoundAlgebra(
        name=name, p=p, vertices=quiver.vertices, labels=labels,
        words=[paths[pid][1] for pid in basis],
        src=np.array([paths[pid][0] for pid in basis], dtype=np.int64),
        tgt=np.array([ends[pid] for pid in basis], dtype=np.int64),
        gens=gens, mult=mult, idem=[bix[pidx[(i, ())]] for i in range(len(quiver.vertices))],
        quiver=quiver, relations=tuple(rels), cap=cap)


# ---------------------------------------------------------------------------
# JSON


def algebra_from_dict(d: dict, p: int | None = None) -> BoundAlgebra:
    q = Quiver(tuple(str(v) for v in d["vertices"]),
               tuple(Arrow(a["name"], str(a["from"]), str(a["to"])) for a in d.get("arrows", [])))
    rels = [Relation(tuple((int(t["coeff"]), tuple(t["path"])) for t in r)) for r in d.get("relations", [])]
    return build_algebra(q, rels, p or int(d.get("char", 2)), int(d.get("cap", 12)), d.get("name", ""))


def presentation_dict(a: BoundAlgebra) -> dict:
    if a.quiver is None:
        raise AlgebraError("algebra has no quiver presentation")
    return {
        "name": a.name, "char": a.p, "cap": a.cap,
        "vertices": list(a.quiver.vertices),
        "arrows": [{"name": x.name, "from": x.source, "to": x.target} for x in a.quiver.arrows],
        "relations": [[{"coeff": c, "path": list(w)} for c, w in r.terms] for r in a.relations],
    }


def load_algebra(path, p: int | None = None) -> BoundAlgebra:
    with open(path, encoding="utf-8") as fh:
        return algebra_from_dict(json.load(fh), p)


# ---------------------------------------------------------------------------
# invariants and operations


def cartan_matrix(a: BoundAlgebra) -> np.ndarray:
    """c[i, j] = number of basis elements in e_i A e_j."""
    c = np.zeros((a.n, a.n), dtype=np.int64)
    for s, t in zip(a.src, a.tgt):
        c[s, t] += 1
    return c


def center_basis(a: BoundAlgebra) -> tuple[np.ndarray, np.ndarray]:
    """(basis of the center, basis of the center inside the radical)."""
    p = a.p
    blocks = []
    for x in [a.unit(b) for b in a.idem] + [g.vec for g in a.gens]:
        # z*x - x*z as a linear map of z
        blocks.append((a.right_matrix(x) - a.left_matrix(x)).T % p)
    z = la.nullspace(np.vstack(blocks), p) if blocks else la.identity(a.dim)
    z = la.row_basis(z, p) if z.shape[0] else z
    radical = la.identity(a.dim)[[b for b in range(a.dim) if b not in set(a.idem)]]
    zr = la.intersect([z, radical], p) if z.shape[0] and radical.shape[0] else la.zeros(0, a.dim)
    return z, zr


def _peirce_terms(a: BoundAlgebra, vec: np.ndarray) -> list[Relation]:
    """Split an element into Peirce components written as path relations."""
    names = [g.name for g in a.gens]
    parts: dict[tuple[int, int], list] = {}
    for b in np.flatnonzero(vec % a.p):
        if not a.words[b]:
            raise AlgebraError("ideal generator has an idempotent component; use vertex_quotient")
        parts.setdefault((int(a.src[b]), int(a.tgt[b])), []).append(
            (int(vec[b]) % a.p, tuple(names[k] for k in a.words[b])))
    return [Relation(tuple(t)) for _, t in sorted(parts.items())]


def ideal_span(a: BoundAlgebra, gens: Sequence[np.ndarray]) -> np.ndarray:
    """Echelon basis of the two-sided ideal generated by ``gens``."""
    rows = []
    for g in gens:
        left = a.right_matrix(g % a.p)  # left[b] = b*g
        rows.append(np.einsum("bk,kcl->bcl", left, a.mult).reshape(-1, a.dim) % a.p)
    if not rows:
        return la.zeros(0, a.dim)
    return la.row_basis(np.vstack(rows), a.p)


def _quotient_constants(a: BoundAlgebra, gens: Sequence[np.ndarray], name: str) -> BoundAlgebra:
    p = a.p
    ideal = ideal_span(a, gens)
    order = list(range(a.dim))[::-1]  # longest basis elements become pivots
    r, piv, k = la.rref(ideal[:, order], p) if ideal.shape[0] else (ideal, [], 0)
    pivset = {order[c] for c in piv}
    keep = [b for b in range(a.dim) if b not in pivset]
    if not keep:
        raise ZeroQuotient("quotient is zero")
    proj = np.zeros((a.dim, len(keep)), dtype=np.int64)
    kpos = {b: j for j, b in enumerate(keep)}
    for b in keep:
        proj[b, kpos[b]] = 1
    for i, c in enumerate(piv):
        b = order[c]
        row = r[i]
        for cc in np.flatnonzero(row):
            if cc != c:
                proj[b, kpos[order[cc]]] = (-int(row[cc])) % p
    if any(b not in kpos for b in a.idem):
        raise ZeroQuotient("an idempotent falls into the ideal")
    sub = a.mult[np.ix_(keep, keep)]
    mult = np.einsum("ijk,kl->ijl", sub, proj) % p
    gens_new, remap = [], {}
    for gi, g in enumerate(a.gens):
        v = (g.vec @ proj) % p
        if v.any():
            remap[gi] = len(gens_new)
            gens_new.append(Generator(g.name, g.source, g.target, v))
    words = [tuple(remap[x] for x in a.words[b]) for b in keep]
    return BoundAlgebra(name=name, p=p, vertices=a.vertices, labels=[a.labels[b] for b in keep],
                        words=words, src=a.src[keep], tgt=a.tgt[keep], gens=gens_new, mult=mult,
                        idem=[kpos[b] for b in a.idem])


def quotient_by_ideal(a: BoundAlgebra, gens: Sequence[np.ndarray], name: str | None = None) -> BoundAlgebra:
    """A / <gens>.  Keeps a quiver presentation when the input has one."""
    name = a.name + "/I" if name is None else name
    gens = [np.asarray(g, dtype=np.int64) % a.p for g in gens]
    if a.quiver is not None:
        extra = [r for g in gens if g.any() for r in _peirce_terms(a, g)]
        return build_algebra(a.quiver, list(a.relations) + extra, a.p, a.cap, name)
    return _quotient_constants(a, gens, name)


def _restrict_blocks(a: BoundAlgebra, keep: Sequence[int], name: str) -> BoundAlgebra:
    """Restriction to a union of connected components."""
    ks = set(keep)
    basis = [b for b in range(a.dim) if a.src[b] in ks and a.tgt[b] in ks]
    bpos = {b: j for j, b in enumerate(basis)}
    vpos = {v: j for j, v in enumerate(sorted(ks))}
    gsel = [gi for gi, g in enumerate(a.gens) if g.source in ks]
    gpos = {gi: j for j, gi in enumerate(gsel)}
    gens = [Generator(a.gens[gi].name, vpos[a.gens[gi].source], vpos[a.gens[gi].target],
                      a.gens[gi].vec[basis]) for gi in gsel]
    quiver = rels = None
    if a.quiver is not None:
        vs = tuple(a.vertices[v] for v in sorted(ks))
        arr = tuple(x for x in a.quiver.arrows if x.source in vs)
        quiver = Quiver(vs, arr)
        names = {x.name for x in arr}
        rels = tuple(r for r in a.relations if r.terms[0][1][0] in names)
    return BoundAlgebra(name=name, p=a.p, vertices=tuple(a.vertices[v] for v in sorted(ks)),
                        labels=[a.labels[b] for b in basis],
                        words=[tuple(gpos[x] for x in a.words[b]) for b in basis],
                        src=np.array([vpos[int(a.src[b])] for b in basis], dtype=np.int64),
                        tgt=np.array([vpos[int(a.tgt[b])] for b in basis], dtype=np.int64),
                        gens=gens, mult=a.mult[np.ix_(basis, basis, basis)].copy(),
                        idem=[bpos[a.idem[v]] for v in sorted(ks)],
                        quiver=quiver, relations=rels, cap=a.cap)


def components(a: BoundAlgebra) -> list[list[int]]:
    """Vertex sets of the connected components, in vertex order."""
    parent = list(range(a.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in a.gens:
        parent[find(g.source)] = find(g.target)
    groups: dict[int, list[int]] = {}
    for v in range(a.n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def block_decompose(a: BoundAlgebra) -> list[BoundAlgebra]:
    comps = components(a)
    return [_restrict_blocks(a, c, f"{a.name}[{k}]") for k, c in enumerate(comps)]


def _vertex_set(a: BoundAlgebra, keep) -> list[int]:
    out = []
    for v in keep:
        if isinstance(v, str):
            if v not in a.vertices:
                raise AlgebraError(f"unknown vertex {v}")
            out.append(a.vertices.index(v))
        else:
            out.append(int(v))
    if not out:
        raise AlgebraError("keep must be nonempty")
    return sorted(set(out))


def idempotent_truncation(a: BoundAlgebra, keep, name: str | None = None) -> BoundAlgebra:
    """eAe for e the sum of the kept vertex idempotents."""
    ks = _vertex_set(a, keep)
    name = name or f"{a.name}|e"
    kset = set(ks)
    if all(set(c) <= kset or not (set(c) & kset) for c in components(a)):
        return _restrict_blocks(a, ks, name)
    basis = [b for b in range(a.dim) if a.src[b] in kset and a.tgt[b] in kset]
    bpos = {b: j for j, b in enumerate(basis)}
    vpos = {v: j for j, v in enumerate(ks)}
    seg_index: dict[tuple[int, ...], int] = {}
    seg_vecs: list[np.ndarray] = []
    seg_ends: list[tuple[int, int]] = []
    words = []
    for b in basis:
        w = a.words[b]
        cuts, cur = [], []
        for gi in w:
            cur.append(gi)
            if a.gens[gi].target in kset:
                cuts.append(tuple(cur))
                cur = []
        new_word = []
        for seg in cuts:
            if seg not in seg_index:
                v = a.gens[seg[0]].vec
                for gi in seg[1:]:
                    v = a.mul(v, a.gens[gi].vec)
                seg_index[seg] = len(seg_vecs)
                seg_vecs.append(v)
                seg_ends.append((a.gens[seg[0]].source, a.gens[seg[-1]].target))
            new_word.append(seg_index[seg])
        words.append(tuple(new_word))
    gens = []
    for seg, k in sorted(seg_index.items(), key=lambda t: t[1]):
        gens.append(Generator(" ".join(a.gens[gi].name for gi in seg), vpos[seg_ends[k][0]],
                              vpos[seg_ends[k][1]], seg_vecs[k][basis] % a.p))
    return BoundAlgebra(name=name, p=a.p, vertices=tuple(a.vertices[v] for v in ks),
                        labels=[a.labels[b] for b in basis], words=words,
                        src=np.array([vpos[int(a.src[b])] for b in basis], dtype=np.int64),
                        tgt=np.array([vpos[int(a.tgt[b])] for b in basis], dtype=np.int64),
                        gens=gens, mult=a.mult[np.ix_(basis, basis, basis)].copy(),
                        idem=[bpos[a.idem[v]] for v in ks])


def vertex_quotient(a: BoundAlgebra, keep, name: str | None = None) -> BoundAlgebra:
    """A / A(1-e)A with e the sum of the kept vertex idempotents."""
    ks = _vertex_set(a, keep)
    name = name or f"{a.name}/<1-e>"
    if a.quiver is not None:
        vs = tuple(a.vertices[v] for v in ks)
        arr = tuple(x for x in a.quiver.arrows if x.source in vs and x.target in vs)
        names = {x.name for x in arr}
        rels = []
        for r in a.relations:
            terms = tuple(t for t in r.terms if set(t[1]) <= names)
            if terms:
                rels.append(Relation(terms))
        return build_algebra(Quiver(vs, arr), rels, a.p, a.cap, name)
    kill = [a.unit(a.idem[v]) for v in range(a.n) if v not in set(ks)]
    ideal = ideal_span(a, kill)
    # the quotient is eAe modulo eA(1-e)Ae, the Peirce corner of the ideal
    trunc = idempotent_truncation(a, ks, name)
    img = ideal[:, [b for b in range(a.dim) if a.src[b] in set(ks) and a.tgt[b] in set(ks)]]
    gens = [row for row in la.row_basis(img, a.p)] if img.shape[0] else []
    return _quotient_constants(trunc, gens, name) if gens else trunc


def opposite(a: BoundAlgebra, name: str | None = None) -> BoundAlgebra:
    name = name or f"{a.name}^op"
    quiver = rels = None
    if a.quiver is not None:
        quiver = Quiver(a.quiver.vertices,
                        tuple(Arrow(x.name, x.target, x.source) for x in a.quiver.arrows))
        rels = tuple(r.reversed() for r in a.relations)
    gens = [Generator(g.name, g.target, g.source, g.vec.copy()) for g in a.gens]
    return BoundAlgebra(name=name, p=a.p, vertices=a.vertices, labels=list(a.labels),
                        words=[tuple(reversed(w)) for w in a.words], src=a.tgt.copy(),
                        tgt=a.src.copy(), gens=gens, mult=np.ascontiguousarray(a.mult.transpose(1, 0, 2)),
                        idem=list(a.idem), quiver=quiver, relations=rels, cap=a.cap)


def direct_sum(parts: Sequence[tuple[BoundAlgebra, Sequence[str] | None]], name: str = "") -> BoundAlgebra:
    """Direct sum of presented algebras, relabeling vertices and prefixing arrows."""
    vertices, arrows, rels = [], [], []
    p = parts[0][0].p
    cap = 0
    for k, (alg, labels) in enumerate(parts):
        if alg.quiver is None:
            raise AlgebraError("direct_sum needs presented summands")
        if alg.p != p:
            raise AlgebraError("characteristic mismatch")
        labels = list(labels) if labels else [f"{k}.{alg.name}.{v}" for v in alg.vertices]
        vmap = dict(zip(alg.vertices, labels))
        pre = f"{k}:" if len(parts) > 1 else ""
        vertices += labels
        arrows += [Arrow(pre + x.name, vmap[x.source], vmap[x.target]) for x in alg.quiver.arrows]
        rels += [Relation(tuple((c, tuple(pre + nm for nm in w)) for c, w in r.terms)) for r in alg.relations]
        cap = max(cap, alg.cap or 0)
    return build_algebra(Quiver(tuple(vertices), tuple(arrows)), rels, p, max(cap, 1), name)


def structurally_equal(a: BoundAlgebra, b: BoundAlgebra) -> bool:
    """Same structure constants after matching basis labels."""
    if a.dim != b.dim or sorted(a.labels) != sorted(b.labels):
        return False
    perm = [b.labels.index(x) for x in a.labels]
    return np.array_equal(a.mult % a.p, b.mult[np.ix_(perm, perm, perm)] % b.p)


def isomorphic_by_relabel(a: BoundAlgebra, b: BoundAlgebra) -> bool:
    """Search vertex bijections and arrow bijections preserving the relation ideal.

    Only for presented algebras with few arrows; compares the ideals through
    structure constants after transporting the presentation of ``a``.
    """
    if a.quiver is None or b.quiver is None or a.dim != b.dim or a.n != b.n:
        return False
    if sorted(cartan_matrix(a).ravel()) != sorted(cartan_matrix(b).ravel()):
        return False
    from itertools import permutations

    qa, qb = a.quiver, b.quiver
    for vperm in permutations(range(a.n)):
        vm = {qa.vertices[i]: qb.vertices[vperm[i]] for i in range(a.n)}
        cands = []
        for x in qa.arrows:
            cands.append([y.name for y in qb.arrows if y.source == vm[x.source] and y.target == vm[x.target]])
        if any(not c for c in cands):
            continue
        for choice in iproduct(*cands):
            if len(set(choice)) != len(choice) or len(choice) != len(qb.arrows):
                continue
            am = {x.name: choice[k] for k, x in enumerate(qa.arrows)}
            rels = [Relation(tuple((c, tuple(am[nm] for nm in w)) for c, w in r.terms)) for r in a.relations]
            gens = [b.element([(c, list(w)) for c, w in r.terms]) for r in rels]
            if all(not g.any() for g in gens):
                return True
    return False
