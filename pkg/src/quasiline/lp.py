"""Exact rational primal simplex over growing column pools.

Everything is a fractions.Fraction; there is no tolerance anywhere.
Pivoting uses Bland's rule, so the solver terminates even on degenerate
bases and behaves deterministically for identical inputs.  The solver
keeps the basis inverse and the tableau incrementally: column generation
re-solves are warm starts, not rebuilds.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import ContractViolationError, InputError

ZERO = Fraction(0)
ONE = Fraction(1)


class PoolSimplex:
    """min c.x  subject to  A x = b, x >= 0, over a growing column pool.

    The first m columns added must form an identity basis (A_B = I with
    b >= 0); the master problem of the column-generation scheme satisfies
    this with its singleton columns.
    """

    def __init__(self, b: Sequence[Fraction]):
        self.m = len(b)
        self.rhs = [Fraction(x) for x in b]
        if any(x < 0 for x in self.rhs):
            raise InputError("initial rhs must be nonnegative")
        self.cols: list[list[Fraction]] = []
        self.cost: list[Fraction] = []
        self.tab: list[list[Fraction]] = [[] for _ in range(self.m)]
        self.binv: list[list[Fraction]] = [
            [ONE if i == j else ZERO for j in range(self.m)] for i in range(self.m)]
        self.basis: list[int] = []

    def add_column(self, col: Sequence[Fraction], cost: Fraction) -> int:
        if len(col) != self.m:
            raise InputError("column length mismatch")
        a = [Fraction(x) for x in col]
        self.cols.append(a)
        self.cost.append(Fraction(cost))
        # tableau entry is Binv * a
        for i in range(self.m):
            row = self.binv[i]
            self.tab[i].append(sum(row[k] * a[k] for k in range(self.m) if a[k]))
        j = len(self.cols) - 1
        if len(self.basis) < self.m:
            if a != [ONE if i == len(self.basis) else ZERO for i in range(self.m)]:
                raise InputError("initial columns must form an identity basis")
            self.basis.append(j)
        return j

    def duals(self) -> list[Fraction]:
        return [sum(self.cost[self.basis[i]] * self.binv[i][k]
                    for i in range(self.m)) for k in range(self.m)]

    def _pivot(self, row: int, col: int):
        piv = self.tab[row][col]
        if piv == 0:
            raise ContractViolationError("pivot on zero element")
        inv = ONE / piv
        self.tab[row] = [x * inv for x in self.tab[row]]
        self.binv[row] = [x * inv for x in self.binv[row]]
        self.rhs[row] *= inv
        for i in range(self.m):
            if i == row:
                continue
            f = self.tab[i][col]
            if f == 0:
                continue
            ti, tr = self.tab[i], self.tab[row]
            self.tab[i] = [ti[k] - f * tr[k] for k in range(len(tr))]
            bi, br = self.binv[i], self.binv[row]
            self.binv[i] = [bi[k] - f * br[k] for k in range(self.m)]
            self.rhs[i] -= f * self.rhs[row]
        self.basis[row] = col

    def solve(self) -> Fraction:
        """Run primal simplex to optimality; returns the objective value."""
        if len(self.basis) != self.m:
            raise InputError("basis incomplete: add the identity columns first")
        n = len(self.cols)
        while True:
            y = self.duals()
            enter = -1
            for j in range(n):  # Bland: lowest eligible index
                if j in self._basis_set():
                    continue
                red = self.cost[j] - sum(y[k] * self.cols[j][k]
                                         for k in range(self.m) if self.cols[j][k])
                if red < 0:
                    enter = j
                    break
            if enter < 0:
                return sum(self.cost[self.basis[i]] * self.rhs[i]
                           for i in range(self.m))
            leave = -1
            best = None
            for i in range(self.m):
                d = self.tab[i][enter]
                if d > 0:
                    ratio = self.rhs[i] / d
                    if best is None or ratio < best or \
                            (ratio == best and self.basis[i] < self.basis[leave]):
                        best, leave = ratio, i
            if leave < 0:
                raise ContractViolationError("LP unbounded; master is always bounded")
            self._pivot(leave, enter)

    def _basis_set(self) -> set[int]:
        return set(self.basis)

    def solution(self) -> dict[int, Fraction]:
        """Nonzero primal values by column index (basic variables only)."""
        out = {}
        for i, j in enumerate(self.basis):
            if self.rhs[i] != 0:
                out[j] = self.rhs[i]
        return out


def gaussian_rank(rows: list[list[Fraction]]) -> int:
    """Rank over the rationals; used to check basic-solution independence."""
    mat = [list(r) for r in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(mat)) if mat[r][col] != 0), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = ONE / mat[rank][col]
        mat[rank] = [x * inv for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank
