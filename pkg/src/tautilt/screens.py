"""Quiver-shape tests for tau-tilting infiniteness."""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

import networkx as nx

from .algebra import Arrow, Quiver


def _double(edges: list[tuple[int, int]], n: int, name: str) -> Quiver:
    vs = tuple(str(i) for i in range(n))
    arrows = []
    for k, (u, v) in enumerate(edges):
        arrows.append(Arrow(f"a{k}", vs[u], vs[v]))
        arrows.append(Arrow(f"b{k}", vs[v], vs[u]))
    return Quiver(vs, tuple(arrows))


# double 4-cycle, double star with four leaves, two adjacent branch points
Q1 = _double([(0, 1), (1, 3), (3, 2), (2, 0)], 4, "Q1")
Q2 = _double([(0, 1), (0, 2), (0, 3), (0, 4)], 5, "Q2")
Q3 = _double([(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)], 6, "Q3")
KRONECKER = Quiver(("0", "1"), (Arrow("a", "0", "1"), Arrow("b", "0", "1")))

# searched largest first, so the reported witness is the most specific one
PATTERNS = {"Q3": Q3, "Q2": Q2, "Q1": Q1, "Kronecker": KRONECKER}


def _multigraph(q: Quiver) -> nx.DiGraph:
    g = nx.DiGraph()
    g.add_nodes_from(q.vertices)
    mult = Counter((a.source, a.target) for a in q.arrows)
    for (s, t), m in mult.items():
        g.add_edge(s, t, m=m)
    return g


@dataclass(frozen=True)
class Witness:
    pattern: str
    mapping: tuple[tuple[str, str], ...]

    @property
    def vertices(self) -> list[str]:
        return [v for _, v in self.mapping]


def find_subquiver(q: Quiver, pattern: Quiver) -> tuple[tuple[str, str], ...] | None:
    """Smallest (in vertex order) injective map sending pattern arrows to distinct arrows of q."""
    big, small = _multigraph(q), _multigraph(pattern)
    matcher = nx.algorithms.isomorphism.DiGraphMatcher(
        big, small, edge_match=lambda e_big, e_small: e_big["m"] >= e_small["m"])
    order = {v: i for i, v in enumerate(q.vertices)}
    best = None
    for m in matcher.subgraph_monomorphisms_iter():
        inv = {pv: qv for qv, pv in m.items()}
        cand = tuple((pv, inv[pv]) for pv in pattern.vertices)
        rank = tuple(order[qv] for _, qv in cand)
        if best is None or rank < best[0]:
            best = (rank, cand)
    return None if best is None else best[1]


def contains_infinite_subquiver(q: Quiver) -> Witness | None:
    """First of Q3, Q2, Q1, Kronecker found inside q, with its vertex map."""
    for w in infinite_subquivers(q):
        return w
    return None


def infinite_subquivers(q: Quiver):
    for name, pat in PATTERNS.items():
        m = find_subquiver(q, pat)
        if m is not None:
            yield Witness(name, m)


# ---- radical square zero -------------------------------------------------------

def separated_graph(q: Quiver) -> nx.MultiGraph:
    """Bipartite graph with an edge i+ -- j- for each arrow i -> j."""
    g = nx.MultiGraph()
    for v in q.vertices:
        g.add_node((v, "+"))
        g.add_node((v, "-"))
    for a in q.arrows:
        g.add_edge((a.source, "+"), (a.target, "-"))
    return g


def dynkin_type(g: nx.MultiGraph) -> str | None:
    """Simply-laced Dynkin type of a connected multigraph, or None."""
    n = g.number_of_nodes()
    if n == 0:
        return None
    simple = nx.Graph(g)
    if simple.number_of_edges() != g.number_of_edges() or nx.number_of_selfloops(g):
        return None
    if not nx.is_tree(simple):
        return None
    deg = dict(simple.degree())
    branch = [v for v, d in deg.items() if d >= 3]
    if not branch:
        return f"A{n}"
    if len(branch) > 1 or deg[branch[0]] > 3:
        return None
    c = branch[0]
    arms = []
    for nb in simple.neighbors(c):
        length, prev, cur = 1, c, nb
        while deg[cur] == 2:
            prev, cur = cur, next(x for x in simple.neighbors(cur) if x != prev)
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return f"D{n}"
    if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
        return f"E{n}"
    return None


def is_dynkin_forest(g: nx.MultiGraph) -> bool:
    return all(dynkin_type(g.subgraph(c)) is not None for c in nx.connected_components(g))


def single_subgraphs(q: Quiver):
    """Full subgraphs of the separated graph keeping one of i+, i- for each vertex i."""
    sep = separated_graph(q)
    for signs in itertools.product("+-", repeat=len(q.vertices)):
        keep = [(v, s) for v, s in zip(q.vertices, signs)]
        yield keep, sep.subgraph(keep)


def rad_square_zero_finite(q: Quiver) -> bool:
    """Whether the radical-square-zero algebra on q is tau-tilting finite."""
    return all(is_dynkin_forest(g) for _, g in single_subgraphs(q))


def screen(q: Quiver) -> tuple[str, Witness | None]:
    """("infinite", witness) from a pattern, ("infinite", None) from the
    radical-square-zero test, or ("undecided", None)."""
    w = contains_infinite_subquiver(q)
    if w is not None:
        return "infinite", w
    if not rad_square_zero_finite(q):
        return "infinite", None
    return "undecided", None
