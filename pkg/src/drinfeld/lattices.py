"""A-lattices: free F_q[T]-submodules of F^s with canonical HNF bases.

The canonical form fixed here and used for every equality test in the
library: basis vectors are the *columns* of an upper-triangular s x s
matrix, the diagonal is monic, and each entry to the right of the
diagonal is reduced modulo the diagonal entry of its row. A lattice may
carry a monic denominator; the pair (matrix, denominator) is reduced so
equal lattices compare equal componentwise.
"""

from __future__ import annotations

from .apoly import APoly, RatFunc, poly_gcd
from .errors import NotSublattice, RankError
from .fields import Fq


def _hnf_reduce(fq: Fq, dim: int, gens: list[list[APoly]]) -> list[list[APoly]]:
    """Column-style HNF of the A-span of the given vectors."""
    work = [list(g) for g in gens if any(g)]
    placed: list[list[APoly] | None] = [None] * dim
    for row in range(dim - 1, -1, -1):
        active = [c for c in work if c[row]]
        while len(active) > 1:
            active.sort(key=lambda c: c[row].degree, reverse=True)
            a, b = active[0], active[1]
            q, _ = divmod(a[row], b[row])
            for i in range(dim):
                a[i] = a[i] - q * b[i]
            if not a[row]:
                active = [c for c in active if c[row]]
        if not active:
            raise RankError(f"generators do not span rank {dim} at row {row}")
        piv = active[0]
        work = [c for c in work if c is not piv]
        inv = fq.inv(piv[row].lc())
        if inv != 1:
            piv = [c.scale(inv) for c in piv]
        placed[row] = piv
    cols = [list(placed[j]) for j in range(dim)]  # type: ignore[arg-type]
    # reduce entries right of the diagonal modulo the diagonal of their row
    for j in range(dim):
        for i in range(j - 1, -1, -1):
            q, _ = divmod(cols[j][i], cols[i][i])
            if q:
                for m in range(i + 1):
                    cols[j][m] = cols[j][m] - q * cols[i][m]
    return cols


class ALattice:
    """Full-rank lattice (1/den) * span_A(columns) in canonical form."""

    __slots__ = ("fq", "dim", "cols", "den")

    def __init__(self, fq: Fq, dim: int, cols, den: APoly):
        self.fq = fq
        self.dim = dim
        self.cols = tuple(tuple(c) for c in cols)
        self.den = den

    @staticmethod
    def from_generators(fq: Fq, dim: int, gens, den: APoly | None = None) -> ALattice:
        """Canonicalize the A-span of vectors (optionally over a common
        denominator). Raises RankError if the span has rank below dim."""
        if den is None:
            den = APoly.one(fq)
        cols = _hnf_reduce(fq, dim, [list(g) for g in gens])
        # strip common content into the denominator
        content = den
        for c in cols:
            for e in c:
                if e:
                    content = poly_gcd(content, e)
        if content.degree > 0:
            cols = [[e.exact_div(content) for e in c] for c in cols]
            den = den.exact_div(content)
        if not den.is_monic():
            u = fq.inv(den.lc())
            den = den.scale(u)
            cols = [[e.scale(u) for e in c] for c in cols]
        return ALattice(fq, dim, cols, den)

    @staticmethod
    def identity(fq: Fq, dim: int) -> ALattice:
        one = APoly.one(fq)
        zero = APoly.zero(fq)
        cols = [[one if i == j else zero for i in range(dim)] for j in range(dim)]
        return ALattice(fq, dim, cols, one)

    def det(self) -> APoly:
        d = APoly.one(self.fq)
        for j in range(self.dim):
            d = d * self.cols[j][j]
        return d

    def solve(self, vec, den: APoly | None = None) -> list[RatFunc]:
        """Coordinates of vec/den with respect to the lattice basis
        (always solvable over F since the basis is triangular)."""
        if den is None:
            den = APoly.one(self.fq)
        resid = [RatFunc(v, den) * RatFunc(self.den) for v in vec]
        coords = [RatFunc(APoly.zero(self.fq))] * self.dim
        for row in range(self.dim - 1, -1, -1):
            c = resid[row] / RatFunc(self.cols[row][row])
            coords[row] = c
            if c:
                for i in range(row + 1):
                    resid[i] = resid[i] - c * RatFunc(self.cols[row][i])
        return coords

    def contains(self, vec, den: APoly | None = None) -> bool:
        return all(c.is_integral() for c in self.solve(vec, den))

    def contains_lattice(self, other: ALattice) -> bool:
        return all(
            self.contains([e for e in col], other.den) for col in other.cols
        )

    def scale(self, r: RatFunc) -> ALattice:
        if not r:
            raise ZeroDivisionError("scaling a lattice by zero")
        gens = [[e * r.num for e in col] for col in self.cols]
        return ALattice.from_generators(self.fq, self.dim, gens, self.den * r.den)

    def transform(self, mat_rows: list[list[APoly]], den: APoly | None = None) -> ALattice:
        """Image under the linear map given by rows (must stay full rank)."""
        if den is None:
            den = APoly.one(self.fq)
        gens = []
        for col in self.cols:
            vec = []
            for i in range(self.dim):
                acc = APoly.zero(self.fq)
                for j in range(self.dim):
                    if mat_rows[i][j] and col[j]:
                        acc = acc + mat_rows[i][j] * col[j]
                vec.append(acc)
            gens.append(vec)
        return ALattice.from_generators(self.fq, self.dim, gens, self.den * den)

    def sum(self, other: ALattice) -> ALattice:
        """Lattice generated by both (common refinement of denominators)."""
        gens = [[e * other.den for e in col] for col in self.cols]
        gens += [[e * self.den for e in col] for col in other.cols]
        return ALattice.from_generators(self.fq, self.dim, gens, self.den * other.den)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ALattice)
            and self.dim == other.dim
            and self.den == other.den
            and self.cols == other.cols
        )

    def __hash__(self) -> int:
        return hash((self.den, self.cols))

    def __repr__(self) -> str:
        rows = "; ".join(
            ",".join(self.cols[j][i].text() for j in range(self.dim))
            for i in range(self.dim)
        )
        d = "" if self.den.degree == 0 else f" / ({self.den.text()})"
        return f"ALattice[{rows}]{d}"


def lattice_index(big: ALattice, small: ALattice) -> RatFunc:
    """The monic index generator chi(big/small); requires small <= big.

    Multiplicative along chains and equal to one exactly when the
    lattices coincide.
    """
    if not big.contains_lattice(small):
        raise NotSublattice("index of a non-sublattice requested")
    ratio = RatFunc(small.det() * big.den ** big.dim, big.det() * small.den ** small.dim)
    return ratio.monic_normalized()
