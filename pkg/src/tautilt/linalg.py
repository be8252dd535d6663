"""Exact dense linear algebra over prime fields.

Matrices are numpy int64 arrays whose entries are residues in [0, p).
Vectors are rows: a subspace is stored as the row space of a matrix.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _kernels


class InconsistentSystem(ValueError):
    """Raised by :func:`solve` when the right-hand side is not reachable."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class FieldElem:
    value: int
    p: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.p)

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.p != self.p:
                raise ValueError("characteristic mismatch")
            return other.value
        return int(other)

    def __add__(self, other):
        return FieldElem(self.value + self._coerce(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElem(self.value - self._coerce(other), self.p)

    def __rsub__(self, other):
        return FieldElem(self._coerce(other) - self.value, self.p)

    def __mul__(self, other):
        return FieldElem(self.value * self._coerce(other), self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElem(-self.value, self.p)

    def inverse(self) -> "FieldElem":
        if self.value == 0:
            raise ZeroDivisionError("zero has no inverse")
        return FieldElem(pow(self.value, self.p - 2, self.p), self.p)

    def __truediv__(self, other):
        return self * FieldElem(self._coerce(other), self.p).inverse()

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __int__(self):
        return self.value


def mat(data, p: int, cols: int | None = None) -> np.ndarray:
    """Coerce ``data`` to an int64 matrix reduced mod p."""
    a = np.array(data, dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(0, cols or 0) if a.size == 0 else a.reshape(1, -1)
    return a % p


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if a.shape[1] == 0 or a.shape[0] == 0 or b.shape[1] == 0:
        return zeros(a.shape[0], b.shape[1])
    return (a @ b) % p


def rref(m: np.ndarray, p: int) -> tuple[np.ndarray, list[int], int]:
    """Reduced row echelon form with first-nonzero pivoting."""
    work = np.array(m, dtype=np.int64) % p
    if work.size == 0:
        return work, [], 0
    r, piv = _kernels.rref_inplace(work, p)
    return work, [int(c) for c in piv], int(r)


def rank(m: np.ndarray, p: int) -> int:
    if m.size == 0:
        return 0
    return rref(m, p)[2]


def row_basis(m: np.ndarray, p: int) -> np.ndarray:
    """Canonical basis (nonzero rref rows) of the row space."""
    r, _, k = rref(m, p)
    return r[:k]


def nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Rows x spanning {x : a @ x = 0}."""
    rows, cols = a.shape
    if cols == 0:
        return zeros(0, 0)
    if rows == 0:
        return identity(cols)
    r, piv, k = rref(a, p)
    free = [c for c in range(cols) if c not in set(piv)]
    out = zeros(len(free), cols)
    for t, f in enumerate(free):
        out[t, f] = 1
        for i, c in enumerate(piv):
            out[t, c] = (-r[i, f]) % p
    return out


def left_nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Rows y spanning {y : y @ a = 0}."""
    return nullspace(np.ascontiguousarray(a.T), p)


@dataclass
class Solution:
    particular: np.ndarray
    nullspace: np.ndarray


def solve(a: np.ndarray, b: np.ndarray, p: int) -> Solution:
    """Solve a @ x = b. ``b`` may have several columns."""
    a = np.asarray(a, dtype=np.int64) % p
    b = np.asarray(b, dtype=np.int64) % p
    if b.ndim == 1:
        b = b.reshape(-1, 1)
    if a.shape[0] != b.shape[0]:
        raise ValueError("row count mismatch")
    n = a.shape[1]
    aug = np.hstack([a, b]) if a.shape[0] else zeros(0, n + b.shape[1])
    r, piv, k = rref(aug, p)
    if any(c >= n for c in piv):
        raise InconsistentSystem("right-hand side outside the column space")
    x = zeros(n, b.shape[1])
    for i, c in enumerate(piv):
        x[c] = r[i, n:]
    return Solution(x, nullspace(a, p) if a.shape[0] else identity(n))


def in_span(v: np.ndarray, basis: np.ndarray, p: int) -> bool:
    if basis.shape[0] == 0:
        return not np.any(np.asarray(v) % p)
    return rank(np.vstack([basis, v]), p) == rank(basis, p)


def intersect(spaces: Sequence[np.ndarray], p: int) -> np.ndarray:
    """Basis of the intersection of row spaces."""
    if not spaces:
        raise ValueError("need at least one space")
    cur = row_basis(spaces[0], p) if spaces[0].shape[0] else spaces[0]
    for other in spaces[1:]:
        if cur.shape[0] == 0:
            break
        if other.shape[0] == 0:
            cur = zeros(0, cur.shape[1])
            break
        stacked = np.vstack([cur, (-other) % p])
        coeffs = left_nullspace(stacked, p)[:, : cur.shape[0]]
        cur = row_basis(matmul(coeffs, cur, p), p) if coeffs.shape[0] else zeros(0, cur.shape[1])
    return cur


def complement(sub: np.ndarray, n: int, p: int) -> list[int]:
    """Standard coordinates whose unit vectors complete ``sub`` to a basis."""
    if sub.shape[0] == 0:
        return list(range(n))
    _, piv, _ = rref(sub, p)
    taken = set(piv)
    return [c for c in range(n) if c not in taken]


class Echelon:
    """Incrementally grown row space kept in reduced echelon form."""

    def __init__(self, n: int, p: int):
        self.n = n
        self.p = p
        self.rows: dict[int, np.ndarray] = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: np.ndarray) -> np.ndarray:
        v = np.array(v, dtype=np.int64) % self.p
        # rows are fully reduced, so one sweep over the pivots suffices
        for c in self.rows:
            if v[c]:
                v = (v - v[c] * self.rows[c]) % self.p
        return v

    def add(self, v: np.ndarray) -> bool:
        v = self.reduce(v)
        nz = np.flatnonzero(v)
        if nz.size == 0:
            return False
        c = int(nz[0])
        v = (v * pow(int(v[c]), self.p - 2, self.p)) % self.p
        for k, row in self.rows.items():
            if row[c]:
                self.rows[k] = (row - row[c] * v) % self.p
        self.rows[c] = v
        return True

    def matrix(self) -> np.ndarray:
        if not self.rows:
            return zeros(0, self.n)
        return np.array([self.rows[c] for c in sorted(self.rows)], dtype=np.int64)
