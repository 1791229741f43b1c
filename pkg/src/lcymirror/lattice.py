"""Exact integer linear algebra.

All matrices are numpy arrays with ``dtype=object`` holding Python ints, so
products never overflow.  The central routine is :func:`smith_normal_form`;
kernels, cokernels, integer solves and unimodular inverses are read off it.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

import numpy as np


class LatticeError(ValueError):
    """Raised on malformed input.  ``code`` is a short machine-readable tag."""

    def __init__(self, code: str, message: str = ""):
        super().__init__(f"{code}: {message}" if message else code)
        self.code = code


def intmat(rows, cols: int | None = None) -> np.ndarray:
    """Build an exact integer matrix from nested sequences.

    ``cols`` is only needed to disambiguate an empty row list.
    """
    if isinstance(rows, np.ndarray) and rows.ndim == 2:
        out = np.empty(rows.shape, dtype=object)
        for idx, v in np.ndenumerate(rows):
            out[idx] = int(v)
        return out
    rows = [list(r) for r in rows]
    if not rows:
        return np.zeros((0, cols or 0), dtype=object)
    n = len(rows[0])
    if any(len(r) != n for r in rows):
        raise LatticeError("shape", "ragged rows")
    out = np.empty((len(rows), n), dtype=object)
    for i, r in enumerate(rows):
        for j, v in enumerate(r):
            out[i, j] = int(v)
    return out


def intvec(v: Iterable[int]) -> np.ndarray:
    vals = [int(x) for x in v]
    out = np.empty(len(vals), dtype=object)
    out[:] = vals
    return out


def identity(n: int) -> np.ndarray:
    out = np.zeros((n, n), dtype=object)
    for i in range(n):
        out[i, i] = 1
    return out


def zeros(r: int, c: int) -> np.ndarray:
    out = np.empty((r, c), dtype=object)
    out[...] = 0
    return out


def as_int_list(a: np.ndarray) -> list:
    """Nested Python ints, suitable for JSON."""
    if a.ndim == 1:
        return [int(x) for x in a]
    return [[int(x) for x in row] for row in a]


def mat_equal(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and bool(np.all(a == b))


def is_identity(a: np.ndarray) -> bool:
    return a.ndim == 2 and a.shape[0] == a.shape[1] and mat_equal(a, identity(a.shape[0]))


def det(a: np.ndarray) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    n, m = a.shape
    if n != m:
        raise LatticeError("shape", "determinant of a non-square matrix")
    if n == 0:
        return 1
    M = [[int(x) for x in row] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for r in range(k + 1, n):
                if M[r][k] != 0:
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


@dataclass(frozen=True)
class QuotientShape:
    """Finitely generated abelian group Z^free_rank + sum of Z/d_i."""

    free_rank: int
    torsion: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        if self.free_rank < 0:
            raise LatticeError("shape", "negative free rank")
        for d in self.torsion:
            if d < 2:
                raise LatticeError("shape", f"torsion entry {d} < 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise LatticeError("shape", "torsion does not form a divisibility chain")

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    def __str__(self) -> str:
        parts = ["Z"] * min(self.free_rank, 1)
        if self.free_rank > 1:
            parts = [f"Z^{self.free_rank}"]
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def _swap_rows(M, i, j):
    M[[i, j]] = M[[j, i]]


def _swap_cols(M, i, j):
    M[:, [i, j]] = M[:, [j, i]]


def smith_normal_form(M: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Return ``(U, S, V)`` with ``U @ M @ V == S``.

    ``U`` and ``V`` are unimodular, ``S`` is diagonal with non-negative
    entries d1 | d2 | ...  Empty matrices are allowed.
    """
    S = intmat(M) if not (isinstance(M, np.ndarray) and M.dtype == object) else M.copy()
    if S.ndim != 2:
        raise LatticeError("shape", "expected a 2-d matrix")
    m, n = S.shape
    U = identity(m)
    V = identity(n)
    t = 0
    while t < min(m, n):
        nz = [(abs(S[i, j]), i, j) for i in range(t, m) for j in range(t, n) if S[i, j] != 0]
        if not nz:
            break
        _, pi, pj = min(nz)
        if pi != t:
            _swap_rows(S, t, pi)
            _swap_rows(U, t, pi)
        if pj != t:
            _swap_cols(S, t, pj)
            _swap_cols(V, t, pj)
        while True:
            done = True
            for i in range(t + 1, m):
                if S[i, t] != 0:
                    q = S[i, t] // S[t, t]
                    S[i, :] -= q * S[t, :]
                    U[i, :] -= q * U[t, :]
                    if S[i, t] != 0:
                        done = False
            for j in range(t + 1, n):
                if S[t, j] != 0:
                    q = S[t, j] // S[t, t]
                    S[:, j] -= q * S[:, t]
                    V[:, j] -= q * V[:, t]
                    if S[t, j] != 0:
                        done = False
            if done:
                # pivot must divide the remaining block
                bad = [(i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                       if S[i, j] % S[t, t] != 0]
                if not bad:
                    break
                i, _ = bad[0]
                S[t, :] += S[i, :]
                U[t, :] += U[i, :]
                continue
            # move the smallest nonzero entry of row/column t to the pivot
            cands = [(abs(S[i, t]), i, t) for i in range(t, m) if S[i, t] != 0]
            cands += [(abs(S[t, j]), t, j) for j in range(t, n) if S[t, j] != 0]
            _, pi, pj = min(cands)
            if pi != t:
                _swap_rows(S, t, pi)
                _swap_rows(U, t, pi)
            if pj != t:
                _swap_cols(S, t, pj)
                _swap_cols(V, t, pj)
        if S[t, t] < 0:
            S[t, :] = -S[t, :]
            U[t, :] = -U[t, :]
        t += 1
    return U, S, V


def invariant_factors(M: np.ndarray) -> list[int]:
    """Nonzero diagonal of the Smith form."""
    _, S, _ = smith_normal_form(M)
    return [int(S[i, i]) for i in range(min(S.shape)) if S[i, i] != 0]


def rank(M: np.ndarray) -> int:
    return len(invariant_factors(M))


def cokernel_shape(M: np.ndarray) -> QuotientShape:
    """Shape of Z^rows / column span of M."""
    M = intmat(M)
    d = invariant_factors(M)
    return QuotientShape(M.shape[0] - len(d), tuple(x for x in d if x > 1))


def kernel_basis(M: np.ndarray) -> list[np.ndarray]:
    """Saturated basis of the integer kernel {x : M x = 0}."""
    M = intmat(M)
    _, S, V = smith_normal_form(M)
    r = sum(1 for i in range(min(S.shape)) if S[i, i] != 0)
    return [V[:, j].copy() for j in range(r, M.shape[1])]


def stack_columns(vectors: Sequence[np.ndarray], dim: int) -> np.ndarray:
    if not vectors:
        return zeros(dim, 0)
    out = zeros(dim, len(vectors))
    for j, v in enumerate(vectors):
        if len(v) != dim:
            raise LatticeError("shape", f"vector of length {len(v)}, expected {dim}")
        out[:, j] = v
    return out


def orthogonal_complement(gram: np.ndarray, generators: Sequence[Sequence[int]]) -> list[np.ndarray]:
    """Saturated basis of {x : x . gram . g = 0 for every generator g}."""
    gram = intmat(gram)
    n = gram.shape[0]
    if gram.shape != (n, n) or not mat_equal(gram, gram.T):
        raise LatticeError("shape", "gram must be square and symmetric")
    gens = [intvec(g) for g in generators]
    for g in gens:
        if len(g) != n:
            raise LatticeError("shape", f"generator of length {len(g)}, expected {n}")
    if not gens:
        return [identity(n)[:, j].copy() for j in range(n)]
    rows = intmat([gram.dot(g) for g in gens])
    return kernel_basis(rows)


def solve_integer(A: np.ndarray, b: Sequence[int]) -> np.ndarray | None:
    """One integer solution of ``A x = b``, or None if there is none."""
    A = intmat(A)
    b = intvec(b)
    U, S, V = smith_normal_form(A)
    c = U.dot(b) if len(b) else b
    m, n = A.shape
    y = intvec([0] * n)
    for i in range(m):
        d = S[i, i] if i < n else 0
        if d == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % d:
                return None
            y[i] = c[i] // d
    x = V.dot(y) if n else y
    if not mat_equal(A.dot(x).reshape(-1, 1), b.reshape(-1, 1)):
        return None
    return x


def unimodular_inverse(A: np.ndarray) -> np.ndarray:
    """Exact inverse of a square integer matrix with determinant +-1."""
    A = intmat(A)
    n = A.shape[0]
    if A.shape != (n, n):
        raise LatticeError("shape", "inverse of a non-square matrix")
    U, S, V = smith_normal_form(A)
    for i in range(n):
        if S[i, i] != 1:
            raise LatticeError("not_unimodular", "matrix is not invertible over Z")
    inv = V.dot(U)
    assert is_identity(inv.dot(A))
    return inv


def is_saturated(vectors: Sequence[np.ndarray], dim: int) -> bool:
    """True if the vectors are independent and span a saturated sublattice."""
    if not vectors:
        return True
    d = invariant_factors(stack_columns(vectors, dim))
    return len(d) == len(vectors) and all(x == 1 for x in d)


def primitive(v: Sequence[int]) -> bool:
    g = 0
    for x in v:
        g = gcd(g, int(x))
    return g == 1


def matrix_order(A: np.ndarray, limit: int = 1000) -> int | None:
    """Smallest n >= 1 with A^n = I, or None if none up to ``limit``."""
    P = A.copy()
    for n in range(1, limit + 1):
        if is_identity(P):
            return n
        P = P.dot(A)
    return None
