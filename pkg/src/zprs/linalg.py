"""Dense linear algebra over Z_p (numpy int64 matrices).

Small sizes only (tens of columns); all routines are exact modular
Gaussian elimination.
"""

from __future__ import annotations

import numpy as np


def as_matrix(rows, ncols: int) -> np.ndarray:
    if len(rows) == 0:
        return np.zeros((0, ncols), dtype=np.int64)
    m = np.array(rows, dtype=np.int64)
    if m.ndim == 1:
        m = m.reshape(1, -1)
    if m.shape[1] != ncols:
        raise ValueError(f"expected {ncols} columns, got {m.shape[1]}")
    return m


def rref(mat: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over Z_p; returns (nonzero rows, pivot columns)."""
    m = mat.astype(np.int64) % p
    nrows, ncols = m.shape
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, nrows):
            if m[r, col]:
                piv = r
                break
        if piv is None:
            continue
        if piv != rank:
            m[[rank, piv]] = m[[piv, rank]]
        inv = pow(int(m[rank, col]), p - 2, p)
        m[rank] = m[rank] * inv % p
        nz = np.flatnonzero(m[:, col])
        for r in nz:
            if r != rank:
                m[r] = (m[r] - m[r, col] * m[rank]) % p
        pivots.append(col)
        rank += 1
        if rank == nrows:
            break
    return m[:rank], pivots


def rank(mat: np.ndarray, p: int) -> int:
    return rref(mat, p)[0].shape[0]


def reduce_against(basis: np.ndarray, pivots: list[int], vec: np.ndarray, p: int) -> np.ndarray:
    """Residue of vec after elimination against an RREF basis."""
    v = vec.astype(np.int64) % p
    for row, col in zip(basis, pivots):
        c = v[col]
        if c:
            v = (v - c * row) % p
    return v


def in_row_space(basis: np.ndarray, pivots: list[int], vec: np.ndarray, p: int) -> bool:
    return not reduce_against(basis, pivots, vec, p).any()


def kernel_basis(mat: np.ndarray, p: int) -> np.ndarray:
    """RREF basis of {v : mat @ v = 0 (mod p)}."""
    ncols = mat.shape[1]
    m, pivots = rref(mat, p)
    free = [c for c in range(ncols) if c not in pivots]
    out = np.zeros((len(free), ncols), dtype=np.int64)
    for i, fc in enumerate(free):
        out[i, fc] = 1
        for row, pc in zip(m, pivots):
            out[i, pc] = -row[fc] % p
    # free columns ascending already gives echelon shape; normalize to RREF
    return rref(out, p)[0] if len(free) else out


class RowSpace:
    """Incrementally grown row space over Z_p, kept in RREF."""

    def __init__(self, ncols: int, p: int):
        self.p = p
        self.ncols = ncols
        self.basis = np.zeros((0, ncols), dtype=np.int64)
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return self.basis.shape[0]

    def contains(self, vec: np.ndarray) -> bool:
        return in_row_space(self.basis, self.pivots, vec, self.p)

    def add(self, vec: np.ndarray) -> bool:
        """Insert vec; returns True when the rank grew."""
        res = reduce_against(self.basis, self.pivots, vec, self.p)
        nz = np.flatnonzero(res)
        if nz.size == 0:
            return False
        col = int(nz[0])
        res = res * pow(int(res[col]), self.p - 2, self.p) % self.p
        # eliminate the new pivot column from existing rows, then insert in order
        if self.rank:
            coef = self.basis[:, col].copy()
            self.basis = (self.basis - np.outer(coef, res)) % self.p
        pos = sum(1 for c in self.pivots if c < col)
        self.basis = np.insert(self.basis, pos, res, axis=0)
        self.pivots.insert(pos, col)
        return True
