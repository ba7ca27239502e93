"""Exact integer Smith normal form and cokernel decompositions.

The reduction repeatedly picks the smallest nonzero entry of the
remaining submatrix as pivot and clears its row and column with
unimodular operations, then normalizes the resulting diagonal into a
divisibility chain.  A vectorized int64 fast path handles typical
inputs; any overflow risk falls back to unbounded Python integers.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .errors import InfiniteCokernel

_INT64_LIMIT = 2**62


class _Int64Overflow(Exception):
    """Internal: the fast path cannot bound the next update."""


@dataclass(frozen=True)
class CyclicDecomposition:
    """A finite abelian group given as a sorted multiset of cyclic orders > 1."""

    divisors: tuple[int, ...] = ()

    def __post_init__(self):
        divs = tuple(sorted(int(d) for d in self.divisors))
        if divs and divs[0] <= 1:
            raise ValueError("cyclic orders must all exceed 1")
        object.__setattr__(self, "divisors", divs)

    @property
    def is_trivial(self) -> bool:
        return not self.divisors

    @property
    def order(self) -> int:
        return math.prod(self.divisors)

    def multiplicities(self) -> dict[int, int]:
        """Map cyclic order -> multiplicity, ascending key order."""
        return dict(sorted(Counter(self.divisors).items()))

    def prime_power_multiplicities(self, p: int) -> dict[int, int]:
        """Map exponent e -> multiplicity of C_{p^e}; every divisor must be
        a power of p."""
        out: Counter = Counter()
        for d in self.divisors:
            e, v = 0, d
            while v % p == 0:
                v //= p
                e += 1
            if v != 1:
                raise ValueError(f"{d} is not a power of {p}")
            out[e] += 1
        return dict(sorted(out.items()))

    def __str__(self) -> str:
        if not self.divisors:
            return "0"
        return " x ".join(f"(C{d})^{m}" for d, m in self.multiplicities().items())


def _as_int_rows(mat) -> list[list[int]]:
    rows = [[int(v) for v in r] for r in mat]
    if not rows or not rows[0]:
        raise ValueError("matrix must be non-empty")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ValueError("matrix rows must all have the same length")
    return rows


def smith_divisors(mat) -> list[int]:
    """Diagonal invariants d_1 | d_2 | ... of an integer matrix.

    The list has length min(rows, cols); zeros (rank deficiency) appear
    last.  Accepts any rectangular nest of integers or a 2-d integer
    ndarray.
    """
    rows: list[list[int]] | None = None
    arr: np.ndarray | None = None
    if isinstance(mat, np.ndarray):
        if mat.ndim != 2 or 0 in mat.shape:
            raise ValueError("matrix must be 2-d and non-empty")
        if np.issubdtype(mat.dtype, np.integer):
            arr = mat.astype(np.int64, copy=True)
        else:
            rows = _as_int_rows(mat.tolist())
        shape = mat.shape
    else:
        rows = _as_int_rows(mat)
        shape = (len(rows), len(rows[0]))
        try:
            arr = np.array(rows, dtype=np.int64)
        except OverflowError:
            arr = None
    slots = min(shape)
    if arr is not None:
        try:
            return _divisor_chain(_diagonalize_int64(arr), slots)
        except _Int64Overflow:
            if rows is None:
                rows = _as_int_rows(mat.tolist())
    return _divisor_chain(_diagonalize_exact(rows), slots)


def cokernel_decomposition(mat) -> CyclicDecomposition:
    """Z^cols modulo the row span, as a cyclic decomposition.

    Raises InfiniteCokernel unless the rows have full column rank.
    """
    n_rows = len(mat)
    n_cols = len(mat[0])
    divisors = smith_divisors(mat)
    if n_rows < n_cols or 0 in divisors:
        raise InfiniteCokernel("relation rows do not have full column rank")
    return CyclicDecomposition(tuple(d for d in divisors if d > 1))


def _divisor_chain(diagonal: list[int], slots: int) -> list[int]:
    """Rebalance a diagonal multiset into the invariant-factor chain."""
    vals = [abs(v) for v in diagonal if v]
    changed = True
    while changed:
        changed = False
        for i in range(len(vals) - 1):
            a, b = vals[i], vals[i + 1]
            if b % a:
                g = math.gcd(a, b)
                vals[i], vals[i + 1] = g, a // g * b
                changed = True
    return vals + [0] * (slots - len(vals))


def _diagonalize_int64(M: np.ndarray) -> list[int]:
    """Reduce M to diagonal form in place; return the diagonal entries.

    Raises _Int64Overflow if an update cannot be bounded inside int64.
    """
    n_rows, n_cols = M.shape
    sentinel = np.iinfo(np.int64).max
    diagonal: list[int] = []
    t = 0
    while t < n_rows and t < n_cols:
        sub = np.abs(M[t:, t:])
        if not sub.any():
            break
        masked = np.where(sub > 0, sub, sentinel)
        i, j = np.unravel_index(np.argmin(masked), masked.shape)
        pi, pj = t + int(i), t + int(j)
        if pi != t:
            M[[t, pi], :] = M[[pi, t], :]
        if pj != t:
            M[:, [t, pj]] = M[:, [pj, t]]
        if M[t, t] < 0:
            M[t, :] = -M[t, :]
        while True:
            pivot = int(M[t, t])
            col = M[t + 1 :, t]
            if col.any():
                q = col // pivot
                limit = (
                    int(np.max(np.abs(M[t + 1 :, t:])))
                    + int(np.max(np.abs(q))) * int(np.max(np.abs(M[t, t:])))
                )
                if limit >= _INT64_LIMIT:
                    raise _Int64Overflow
                M[t + 1 :, t:] -= q[:, None] * M[t, t:][None, :]
                rem = M[t + 1 :, t]
                if rem.any():
                    nz = np.nonzero(rem)[0]
                    r = int(nz[np.argmin(rem[nz])]) + t + 1
                    M[[t, r], :] = M[[r, t], :]
                    continue
            # The pivot column is clear below, so clearing the pivot row by
            # column operations only changes row t: reduce it mod the pivot.
            row = M[t, t + 1 :]
            if row.any():
                np.mod(row, pivot, out=row)
                if row.any():
                    nz = np.nonzero(row)[0]
                    c = int(nz[np.argmin(row[nz])]) + t + 1
                    M[:, [t, c]] = M[:, [c, t]]
                    continue
            break
        diagonal.append(int(M[t, t]))
        t += 1
    return diagonal


def _diagonalize_exact(rows: list[list[int]]) -> list[int]:
    """Pure-Python twin of _diagonalize_int64 on unbounded integers."""
    M = [list(r) for r in rows]
    n_rows, n_cols = len(M), len(M[0])
    diagonal: list[int] = []
    t = 0
    while t < n_rows and t < n_cols:
        best = None
        bi = bj = -1
        for i in range(t, n_rows):
            Mi = M[i]
            for j in range(t, n_cols):
                v = Mi[j]
                if v:
                    a = -v if v < 0 else v
                    if best is None or a < best:
                        best, bi, bj = a, i, j
        if best is None:
            break
        M[t], M[bi] = M[bi], M[t]
        if bj != t:
            for r in M:
                r[t], r[bj] = r[bj], r[t]
        if M[t][t] < 0:
            M[t] = [-v for v in M[t]]
        while True:
            pivot = M[t][t]
            Mt = M[t]
            dirty = -1
            for i in range(t + 1, n_rows):
                Mi = M[i]
                v = Mi[t]
                if v:
                    q = v // pivot
                    if q:
                        for j in range(t, n_cols):
                            Mi[j] -= q * Mt[j]
                    if Mi[t] and (dirty < 0 or Mi[t] < M[dirty][t]):
                        dirty = i
            if dirty >= 0:
                M[t], M[dirty] = M[dirty], M[t]
                continue
            rowdirty = -1
            for j in range(t + 1, n_cols):
                v = Mt[j]
                if v:
                    v %= pivot
                    Mt[j] = v
                    if v and (rowdirty < 0 or v < Mt[rowdirty]):
                        rowdirty = j
            if rowdirty >= 0:
                for r in M:
                    r[t], r[rowdirty] = r[rowdirty], r[t]
                continue
            break
        diagonal.append(M[t][t])
        t += 1
    return diagonal
