"""Dense linear algebra over the base field F_q.

Vectors and matrices hold canonical integer encodings of F_q scalars
(see fields.Fq). Systems at desk scale are small, so plain Gaussian
elimination is used throughout.
"""

from __future__ import annotations

from .fields import Fq


def solve_linear(fq: Fq, rows: list[list[int]], rhs: list[int]):
    """Solve A*x = b over F_q.

    Returns (particular solution, nullspace basis) with the free variables
    of the particular solution set to zero, or (None, nullspace basis) when
    the system is inconsistent.
    """
    m = len(rows)
    nc = len(rows[0]) if m else 0
    aug = [list(r) + [rhs[i]] for i, r in enumerate(rows)]
    piv_cols: list[int] = []
    rank = 0
    for col in range(nc):
        sel = None
        for i in range(rank, m):
            if aug[i][col]:
                sel = i
                break
        if sel is None:
            continue
        aug[rank], aug[sel] = aug[sel], aug[rank]
        inv = fq.inv(aug[rank][col])
        if inv != 1:
            aug[rank] = [fq.mul(inv, v) for v in aug[rank]]
        for i in range(m):
            if i != rank and aug[i][col]:
                c = aug[i][col]
                ri, rp = aug[i], aug[rank]
                for j in range(col, nc + 1):
                    if rp[j]:
                        ri[j] = fq.sub(ri[j], fq.mul(c, rp[j]))
        piv_cols.append(col)
        rank += 1
        if rank == m:
            break
    consistent = all(not aug[i][nc] for i in range(rank, m))
    free = [c for c in range(nc) if c not in piv_cols]
    null = []
    for fcol in free:
        vec = [0] * nc
        vec[fcol] = 1
        for i, pcol in enumerate(piv_cols):
            vec[pcol] = fq.neg(aug[i][fcol])
        null.append(vec)
    if not consistent:
        return None, null
    sol = [0] * nc
    for i, pcol in enumerate(piv_cols):
        sol[pcol] = aug[i][nc]
    return sol, null


def nullspace(fq: Fq, rows: list[list[int]], ncols: int) -> list[list[int]]:
    """Basis of the kernel of the matrix given by rows."""
    if not rows:
        out = []
        for i in range(ncols):
            v = [0] * ncols
            v[i] = 1
            out.append(v)
        return out
    _, null = solve_linear(fq, rows, [0] * len(rows))
    return null


class TrailingEchelon:
    """A reduced echelon F_q-subspace whose pivots sit at the *highest*
    nonzero coordinate of each vector.

    With coordinates ordered by increasing tau-degree this makes the pivot
    position of a vector reflect its degree, which is what the degree
    ledger of the endomorphism-ring extraction needs.
    """

    def __init__(self, fq: Fq, length: int):
        self.fq = fq
        self.length = length
        self.rows: dict[int, list[int]] = {}

    @staticmethod
    def _pivot(vec: list[int]) -> int:
        for i in range(len(vec) - 1, -1, -1):
            if vec[i]:
                return i
        return -1

    def reduce(self, vec) -> list[int]:
        """Residue of vec modulo the current space."""
        fq = self.fq
        out = list(vec)
        while True:
            piv = self._pivot(out)
            if piv < 0 or piv not in self.rows:
                return out
            c = out[piv]
            row = self.rows[piv]
            for i in range(piv + 1):
                if row[i]:
                    out[i] = fq.sub(out[i], fq.mul(c, row[i]))

    def insert(self, vec) -> int:
        """Adjoin vec; returns its pivot index, or -1 if already contained."""
        fq = self.fq
        res = self.reduce(vec)
        piv = self._pivot(res)
        if piv < 0:
            return -1
        inv = fq.inv(res[piv])
        if inv != 1:
            res = [fq.mul(inv, v) for v in res]
        for other in self.rows.values():
            if other[piv]:
                c = other[piv]
                for i in range(piv + 1):
                    if res[i]:
                        other[i] = fq.sub(other[i], fq.mul(c, res[i]))
        self.rows[piv] = res
        return piv

    def contains(self, vec) -> bool:
        return self._pivot(self.reduce(vec)) < 0

    @property
    def dim(self) -> int:
        return len(self.rows)
