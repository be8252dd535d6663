"""Support tau-tilting pairs, left mutation and Hasse quiver enumeration."""
from __future__ import annotations

import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import linalg as la
from . import modules as md
from .algebra import BoundAlgebra, opposite, vertex_quotient
from .modules import Module

GVec = tuple[int, ...]

COMPLETE = "complete"
EXCEEDED = "budget-exceeded"


class MutationError(ValueError):
    pass


class IncompleteGraph(ValueError):
    pass


def _unit(n: int, i: int, sign: int = 1) -> GVec:
    return tuple(sign if v == i else 0 for v in range(n))


def key_string(key: Sequence[GVec]) -> str:
    return ";".join(",".join(str(x) for x in g) for g in key)


@dataclass(eq=False)
class SttPair:
    summands: tuple[Module, ...]
    gvecs: tuple[GVec, ...]
    proj: frozenset[int]

    @property
    def n(self) -> int:
        return len(self.gvecs) + len(self.proj)

    @property
    def key(self) -> tuple[GVec, ...]:
        n = len(self.gvecs) + len(self.proj)
        return tuple(sorted(self.gvecs + tuple(_unit(n, i, -1) for i in self.proj)))

    @property
    def key_str(self) -> str:
        return key_string(self.key)

    @property
    def support_rank(self) -> int:
        return len(self.summands)

    @property
    def dims(self) -> list[tuple[int, ...]]:
        return [m.dims for m in self.summands]


class Engine:
    """Caches indecomposables by g-vector and Hom spaces between them."""

    def __init__(self, a: BoundAlgebra, check: bool = False):
        self.a = a
        self.check = check
        self.reg: dict[GVec, Module] = {}
        self._homs: dict[tuple[GVec, GVec], np.ndarray] = {}

    def canon(self, m: Module) -> GVec:
        g = md.g_vector(m)
        if g not in self.reg:
            self.reg[g] = m
        return g

    def module(self, g: GVec) -> Module:
        return self.reg[g]

    def hom(self, g1: GVec, g2: GVec) -> np.ndarray:
        k = (g1, g2)
        if k not in self._homs:
            self._homs[k] = md.hom(self.reg[g1], self.reg[g2])
        return self._homs[k]

    def make_pair(self, mods: Iterable[Module]) -> SttPair:
        n = self.a.n
        gs = sorted({self.canon(m) for m in mods})
        summands = tuple(self.reg[g] for g in gs)
        support = {v for m in summands for v in range(n) if m.dims[v]}
        proj = frozenset(v for v in range(n) if v not in support)
        pair = SttPair(summands, tuple(gs), proj)
        if len(gs) + len(proj) != n:
            raise MutationError(f"|M|+|P| = {len(gs) + len(proj)} != {n}")
        if self.check:
            self.validate(pair)
        return pair

    def top(self) -> SttPair:
        return self.make_pair(md.projective(self.a, i) for i in range(self.a.n))

    def validate(self, pair: SttPair) -> None:
        for x in pair.summands:
            for y in pair.summands:
                if not md.hom_to_tau_vanishes(y, x):
                    raise MutationError("module part is not tau-rigid")
            if not md.is_tau_rigid(x, "both"):
                raise MutationError("summand is not tau-rigid")
            if any(x.dims[v] for v in pair.proj):
                raise MutationError("Hom(P, M) != 0")

    def in_fac(self, gx: GVec, gens: Sequence[GVec]) -> bool:
        x = self.reg[gx]
        for v in range(self.a.n):
            if not x.dims[v]:
                continue
            imgs = []
            for gz in gens:
                z = self.reg[gz]
                h = self.hom(gz, gx)
                if h.shape[0] and z.dims[v]:
                    imgs.append(h[:, z.block(v), x.block(v)].reshape(-1, x.dims[v]))
            if not imgs or la.rank(np.vstack(imgs), self.a.p) < x.dims[v]:
                return False
        return True

    def min_left_approx(self, gx: GVec, targets: Sequence[GVec]) -> tuple[np.ndarray, Module, Module]:
        """(f, N', coker f) for a minimal left add(targets)-approximation f: X -> N'."""
        p = self.a.p
        x = self.reg[gx]
        coords = [(gz, h) for gz in sorted(targets) for h in self.hom(gx, gz)]
        alive = [True] * len(coords)
        for c, (gz, f) in enumerate(coords):
            others = []
            for c2, (gz2, f2) in enumerate(coords):
                if c2 == c or not alive[c2]:
                    continue
                for h in self.hom(gz2, gz):
                    others.append(la.matmul(f2, h, p).reshape(-1))
            if not others:
                continue
            if la.in_span(f.reshape(-1), np.array(others), p):
                alive[c] = False
        kept = [coords[c] for c in range(len(coords)) if alive[c]]
        target, inj = md.direct_sum([self.reg[gz] for gz, _ in kept], self.a)
        f = np.zeros((x.total, target.total), dtype=np.int64)
        for (gz, h), idx in zip(kept, inj):
            f[:, idx] = h
        coker, _ = md.cokernel(f, x, target)
        return f, target, coker

    def left_mutate(self, pair: SttPair, k: int) -> SttPair:
        gx = pair.gvecs[k]
        rest = [g for j, g in enumerate(pair.gvecs) if j != k]
        if self.in_fac(gx, rest):
            raise MutationError("not a left-mutable position")
        _, _, coker = self.min_left_approx(gx, rest)
        new = []
        for y, _mult in md.decompose(coker):
            gy = self.canon(y)
            if gy not in rest and gy not in new:
                new.append(gy)
        if len(new) > 1:
            raise MutationError("left mutation produced more than one new summand")
        return self.make_pair([self.reg[g] for g in rest + new])

    def children(self, pair: SttPair) -> list[tuple[int, SttPair]]:
        out = []
        for k in range(len(pair.gvecs)):
            rest = [g for j, g in enumerate(pair.gvecs) if j != k]
            if self.in_fac(pair.gvecs[k], rest):
                continue
            out.append((k, self.left_mutate(pair, k)))
        return out

    def leq(self, t1: SttPair, t2: SttPair) -> bool:
        """t1 <= t2: Hom(M1, tau M2) = 0 and P2 inside P1."""
        if not t2.proj <= t1.proj:
            return False
        return all(md.hom_to_tau_vanishes(y, x) for y in t1.summands for x in t2.summands)


@dataclass
class HasseGraph:
    algebra: str
    p: int
    n: int
    status: str
    nodes: dict[str, SttPair]
    edges: list[tuple[str, str, int]] = field(default_factory=list)

    @property
    def complete(self) -> bool:
        return self.status == COMPLETE

    def __len__(self):
        return len(self.nodes)

    def rank_of(self, k: str) -> int:
        return self.nodes[k].support_rank

    def strata(self) -> list[int]:
        return strata_counts(self)

    def to_networkx(self):
        import networkx as nx
        g = nx.DiGraph()
        g.add_nodes_from(self.nodes)
        g.add_edges_from((u, v) for u, v, _ in self.edges)
        return g

    def degrees(self) -> dict[str, int]:
        deg = {k: 0 for k in self.nodes}
        for u, v, _ in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def sources(self) -> list[str]:
        has_in = {v for _, v, _ in self.edges}
        return [k for k in self.nodes if k not in has_in]

    def sinks(self) -> list[str]:
        has_out = {u for u, _, _ in self.edges}
        return [k for k in self.nodes if k not in has_out]

    def to_dict(self) -> dict:
        return {
            "algebra": self.algebra, "char": self.p, "status": self.status,
            "nodes": [{"key": k, "rank": t.support_rank, "dims": [list(d) for d in t.dims]}
                      for k, t in sorted(self.nodes.items())],
            "edges": [{"from": u, "to": v, "pos": pos} for u, v, pos in sorted(self.edges)],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1, sort_keys=False) + "\n"

    def to_dot(self) -> str:
        lines = [f'digraph "{self.algebra}" {{', "  rankdir=LR;"]
        ids = {k: f"n{i}" for i, k in enumerate(sorted(self.nodes))}
        for k in sorted(self.nodes):
            r = self.nodes[k].support_rank
            lines.append(f'  {ids[k]} [label="{k}\\nrank {r}", rank={r}];')
        for u, v, pos in sorted(self.edges):
            lines.append(f'  {ids[u]} -> {ids[v]} [label="{pos}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def strata_counts(g: HasseGraph) -> list[int]:
    if not g.complete:
        raise IncompleteGraph("incomplete graph")
    out = [0] * (g.n + 1)
    for t in g.nodes.values():
        out[t.support_rank] += 1
    return out


# ---- parallel expansion -----------------------------------------------------

_WORKER: Engine | None = None


def _init_worker(a: BoundAlgebra, check: bool) -> None:
    global _WORKER
    _WORKER = Engine(a, check)


def _pack(m: Module) -> tuple:
    return (m.dims, m.mats)


def _expand_packed(packed: list[tuple]) -> list[tuple[int, list[tuple]]]:
    eng = _WORKER
    pair = eng.make_pair(Module(eng.a, d, ms) for d, ms in packed)
    return [(k, [_pack(m) for m in child.summands]) for k, child in eng.children(pair)]


def enumerate_pairs(a: BoundAlgebra, budget: int = 100_000, jobs: int = 1,
                    check: bool = False) -> HasseGraph:
    """Breadth-first left mutation from (A, 0), deduplicated by g-vector keys.

    The run is complete when every discovered pair has been expanded; it stops
    with status budget-exceeded as soon as more than ``budget`` pairs would be
    needed.  Frontiers are processed in key order, so the result does not depend
    on ``jobs``.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    eng = Engine(a, check)
    top = eng.top()
    nodes: dict[str, SttPair] = {top.key_str: top}
    dimsets = {top.key_str: sorted(top.dims)}
    edges: list[tuple[str, str, int]] = []
    frontier = [top.key_str]
    status = COMPLETE
    pool = ProcessPoolExecutor(jobs, initializer=_init_worker, initargs=(a, check)) if jobs > 1 else None
    try:
        while frontier and status == COMPLETE:
            frontier.sort()
            if pool is not None and len(frontier) > 1:
                packed = [[_pack(m) for m in nodes[k].summands] for k in frontier]
                raw = list(pool.map(_expand_packed, packed, chunksize=max(1, len(frontier) // (4 * jobs))))
                results = [[(pos, eng.make_pair(Module(a, d, ms) for d, ms in mods)) for pos, mods in r]
                           for r in raw]
            else:
                results = [eng.children(nodes[k]) for k in frontier]
            nxt = []
            for parent, kids in zip(frontier, results):
                for pos, child in kids:
                    ck = child.key_str
                    if ck not in nodes:
                        if len(nodes) >= budget:
                            status = EXCEEDED
                            break
                        nodes[ck] = child
                        dimsets[ck] = sorted(child.dims)
                        nxt.append(ck)
                    elif dimsets[ck] != sorted(child.dims):
                        raise MutationError(f"equal keys with different dimension vectors at {ck}")
                    edges.append((parent, ck, pos))
                if status != COMPLETE:
                    break
            frontier = nxt
    finally:
        if pool is not None:
            pool.shutdown()
    g = HasseGraph(a.name, a.p, a.n, status, dict(sorted(nodes.items())), sorted(edges))
    g.engine = eng
    return g


def tau_tilting_count(g: HasseGraph) -> int:
    """Pairs with empty projective part."""
    return sum(1 for t in g.nodes.values() if not t.proj)


def strata_by_quotients(a: BoundAlgebra, ranks: Iterable[int] | None = None,
                        budget: int = 100_000, jobs: int = 1) -> dict[int, int]:
    """a_s(A) = sum over vertex sets E with |E| = s of #tau-tilting(A / <1 - e_E>)."""
    n = a.n
    ranks = range(n + 1) if ranks is None else ranks
    out = {}
    for s in ranks:
        if s == 0:
            out[s] = 1
            continue
        total = 0
        for keep in itertools.combinations(range(n), s):
            b = a if s == n else vertex_quotient(a, keep)
            g = enumerate_pairs(b, budget, jobs)
            if not g.complete:
                raise IncompleteGraph(f"budget exceeded on vertices {keep}")
            total += tau_tilting_count(g)
        out[s] = total
    return out


def leq(g: HasseGraph, k1: str, k2: str) -> bool:
    return g.engine.leq(g.nodes[k1], g.nodes[k2])


def hasse_isomorphic_reversed(a: BoundAlgebra, budget: int = 100_000, jobs: int = 1) -> bool:
    """Hasse(A^op) is isomorphic to the edge-reversed Hasse(A)."""
    import networkx as nx
    g1 = enumerate_pairs(a, budget, jobs)
    g2 = enumerate_pairs(opposite(a), budget, jobs)
    for g in (g1, g2):
        if not g.complete:
            raise IncompleteGraph(f"budget exceeded for {g.algebra}")
    if len(g1) != len(g2) or len(g1.edges) != len(g2.edges):
        return False
    return nx.is_isomorphic(g2.to_networkx(), g1.to_networkx().reverse(copy=True))
