"""Combinatorics of Schur algebras: cores, two-part Young characters,
Ext-quivers of S(2, r) and the tau-tilting classification of S(n, r)."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

import networkx as nx

from .algebra import Arrow, Quiver

Partition = tuple[int, ...]


def partition(parts) -> Partition:
    """Normalise to a weakly decreasing tuple of positive parts."""
    if isinstance(parts, str):
        parts = [int(x) for x in parts.replace(" ", "").split(",") if x]
    lam = tuple(int(x) for x in parts if int(x) > 0)
    if any(x < 0 for x in parts):
        raise ValueError("negative part")
    if list(lam) != sorted(lam, reverse=True):
        raise ValueError(f"not a partition: {parts}")
    return lam


def fmt(lam: Partition) -> str:
    return ",".join(str(x) for x in lam) if lam else "0"


def partitions(r: int, max_parts: int | None = None, max_part: int | None = None) -> list[Partition]:
    """Partitions of r, lexicographically decreasing."""
    max_part = r if max_part is None else max_part
    if r == 0:
        return [()]
    if max_parts == 0:
        return []
    out = []
    for first in range(min(r, max_part), 0, -1):
        rest = partitions(r - first, None if max_parts is None else max_parts - 1, first)
        out.extend((first,) + tail for tail in rest)
    return out


def two_part(r: int) -> list[Partition]:
    return [partition((r - k, k)) for k in range(r // 2 + 1)]


# ---- cores ------------------------------------------------------------------

def _beta(lam: Partition) -> list[int]:
    k = len(lam)
    return [lam[i] + (k - 1 - i) for i in range(k)]


def _from_beta(beads: set[int]) -> Partition:
    bs = sorted(beads, reverse=True)
    k = len(bs)
    return partition([b - (k - 1 - i) for i, b in enumerate(bs)])


def _core_by(lam: Partition, p: int, largest_first: bool) -> Partition:
    beads = set(_beta(lam))
    moved = True
    while moved:
        moved = False
        for b in sorted(beads, reverse=largest_first):
            if b - p >= 0 and b - p not in beads:
                beads.remove(b)
                beads.add(b - p)
                moved = True
                break
    return _from_beta(beads)


def p_core(lam, p: int) -> Partition:
    """Remove rim p-hooks until none are left."""
    lam = partition(lam)
    a, b = _core_by(lam, p, True), _core_by(lam, p, False)
    if a != b:
        raise AssertionError(f"core depends on removal order for {lam}")
    return a


def p_weight(lam, p: int) -> int:
    lam = partition(lam)
    return (sum(lam) - sum(p_core(lam, p))) // p


# ---- Young characters for two-part partitions ------------------------------------

def digits(s: int, p: int) -> list[int]:
    """Little-endian base-p digits."""
    out = []
    while s:
        out.append(s % p)
        s //= p
    return out or [0]


def henke_f(s: int, t: int, p: int) -> int:
    ds, dt = digits(s, p), digits(t, p)
    n = max(len(ds), len(dt))
    ds += [0] * (n - len(ds))
    dt += [0] * (n - len(dt))
    out = 1
    for a, b in zip(ds, dt):
        top, bot = p - 1 - a, p - 1 - b
        out *= comb(top, bot) if top >= bot else 0
    return out


def henke_g(s: int, t: int, p: int) -> int:
    return int(henke_f(2 * t, s + t, p) == 1)


def henke_h(s: int, t: int, p: int) -> int:
    return int(henke_f(2 * t + 1, s + t + 1, p) == 1)


def young_character(p: int, r: int, k: int) -> list[Partition]:
    """Constituents chi^(r-i, i) of ch Y^(r-k, k), each with multiplicity one."""
    if not 0 <= k <= r // 2:
        raise ValueError("need 0 <= k <= r/2")
    m = r // 2
    coef = henke_g if r % 2 == 0 else henke_h
    return [partition((r - i, i)) for i in range(m + 1) if coef(m - i, m - k, p)]


# ---- Ext-quiver of S(2, r) ----------------------------------------------------------

def eh_arrow(p: int, s: int, t: int) -> int:
    """Number of arrows between the vertices v^s and v^t of the quiver of S(2, r)."""
    if s == t:
        return 0
    if s < t:
        s, t = t, s
    s0, s1 = s % p, s // p
    t0, t1 = t % p, t // p
    if p == 2:
        if (s0 == t0 == 1) or (s0 == t0 == 0 and (s1 - t1) % 2 == 0):
            return eh_arrow(p, s1, t1)
        if s0 == t0 == 0 and t1 + 1 == s1 and s1 % 2:
            return 1
        return 0
    if s0 == t0:
        return eh_arrow(p, s1, t1)
    if s0 + t0 == p - 2 and t1 + 1 == s1 and s1 % p:
        return 1
    return 0


def s2r_quiver(p: int, r: int) -> tuple[Quiver, list[list[str]]]:
    """Quiver on two-part partitions of r, with the vertex sets of its blocks."""
    lams = two_part(r)
    names = [fmt(lam) for lam in lams]
    diff = [lam[0] - (lam[1] if len(lam) > 1 else 0) for lam in lams]
    arrows = []
    for i, j in ((i, j) for i in range(len(lams)) for j in range(len(lams)) if i != j):
        if eh_arrow(p, diff[i], diff[j]):
            arrows.append(Arrow(f"{names[i]}>{names[j]}", names[i], names[j]))
    q = Quiver(tuple(names), tuple(arrows))
    blocks: dict[Partition, list[str]] = {}
    for lam, nm in zip(lams, names):
        blocks.setdefault(p_core(lam, p), []).append(nm)
    return q, list(blocks.values())


def quiver_components(q: Quiver) -> list[list[str]]:
    g = nx.Graph()
    g.add_nodes_from(q.vertices)
    g.add_edges_from((a.source, a.target) for a in q.arrows)
    order = {v: i for i, v in enumerate(q.vertices)}
    comps = [sorted(c, key=order.get) for c in nx.connected_components(g)]
    return sorted(comps, key=lambda c: order[c[0]])


def edge_set(q: Quiver) -> set[frozenset[str]]:
    return {frozenset((a.source, a.target)) for a in q.arrows}


# ---- classification ---------------------------------------------------------------

KINDS = ("semisimple", "finite", "tame", "wild-finite", "wild-infinite", "open")
LETTERS = {"semisimple": "S", "finite": "F", "tame": "T",
           "wild-finite": "W+", "wild-infinite": "W-", "open": "W?"}


@dataclass(frozen=True)
class Verdict:
    kind: str
    rule: str

    @property
    def letter(self) -> str:
        return LETTERS[self.kind]

    @property
    def tau_tilting_finite(self) -> bool | None:
        if self.kind == "open":
            return None
        return self.kind != "wild-infinite"

    def describe(self) -> str:
        fin = {True: "tau-tilting finite", False: "tau-tilting infinite",
               None: "tau-tilting finiteness open"}[self.tau_tilting_finite]
        return f"{self.kind} -> {fin}"


def classify(p: int, n: int, r: int) -> Verdict:
    if n < 1 or r < 1:
        raise ValueError("n and r must be positive")
    if p < 0 or (p > 0 and any(p % d == 0 for d in range(2, int(p ** 0.5) + 1))) or p == 1:
        raise ValueError("p must be 0 or a prime")
    if n > r:
        v = classify(p, r, r)
        return Verdict(v.kind, f"n > r reduces to S({r},{r}); " + v.rule)
    if n == 1:
        return Verdict("semisimple", "S(1, r) is the ground field")
    if p == 0 or p > r or (p, n, r) == (2, 2, 3):
        return Verdict("semisimple", "semisimple: p = 0, p > r, or (p, n, r) = (2, 2, 3)")
    if (p == 2 and n == 2 and r in (5, 7)) or (n == 2 and r < p * p) or (n >= 3 and r < 2 * p):
        return Verdict("finite", "representation-finite")
    if (p, n) == (2, 2) and r in (4, 9, 11) or (p, n) == (3, 2) and r in (9, 10, 11) \
            or (p, n) == (3, 3) and r in (7, 8):
        return Verdict("tame", "tame, and every tame Schur algebra is tau-tilting finite")
    if p == 2 and ((n == 2 and r in (6, 13, 15)) or (n, r) in ((3, 5), (4, 5))):
        return Verdict("wild-finite", "wild with a tau-tilting finite basic algebra")
    if p == 2 and ((n == 2 and r in (8, 17, 19)) or (n, r) == (3, 4) or (n >= 5 and r == 5)) \
            or (p >= 5 and n == 2 and p * p <= r <= p * p + p - 1):
        return Verdict("open", "open case")
    return Verdict("wild-infinite", "wild with a tau-tilting infinite quiver")


def table(p: int, nmax: int, rmax: int, nmin: int = 2) -> list[list[str]]:
    return [[classify(p, n, r).letter for r in range(1, rmax + 1)] for n in range(nmin, nmax + 1)]


def table_text(p: int, nmax: int, rmax: int, nmin: int = 2) -> str:
    rows = table(p, nmax, rmax, nmin)
    head = "n\\r " + " ".join(f"{r:>3}" for r in range(1, rmax + 1))
    body = [f"{n:>3} " + " ".join(f"{x:>3}" for x in row) for n, row in zip(range(nmin, nmax + 1), rows)]
    return "\n".join([head] + body) + "\n"
