"""The F_3 system matrix of a conductor and the resulting 3-class rank."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from itertools import combinations, permutations

from .conductors import Conductor
from .errors import InvalidInputError
from .graphs import RankDistribution, build_graph
from .kummer import solve_norm_equation, valuation_vector

__all__ = [
    "SystemMatrixF3",
    "RankReport",
    "build_matrix",
    "rank_f3",
    "rank_mod3",
    "rank_by_minors",
    "class_rank",
    "multiplet_rank_profile",
    "parse_offdiagonal",
]


@dataclass(frozen=True)
class SystemMatrixF3:
    t: int
    entries: tuple[tuple[int, ...], ...]

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


@dataclass(frozen=True)
class RankReport:
    r: int
    rho: int
    shape: tuple[int, ...] | None = None


def build_matrix(a: Sequence[Sequence[int]], v: Sequence[int], t: int) -> SystemMatrixF3:
    """Matrix with ``(i, j) -> a_ji v_i`` off the diagonal and ``-sum_k a_ik v_k`` on it.

    Entries are reduced into ``{0, 1, 2}``; the diagonal of ``a`` is ignored.
    """
    if t < 1 or len(a) != t or any(len(row) != t for row in a) or len(v) != t:
        raise InvalidInputError(f"exponents/valuations do not match t={t}")
    rows = []
    for i in range(t):
        row = []
        for j in range(t):
            if i == j:
                row.append(-sum(a[i][k] * v[k] for k in range(t) if k != i) % 3)
            else:
                row.append(a[j][i] * v[i] % 3)
        rows.append(tuple(row))
    return SystemMatrixF3(t, tuple(rows))


def rank_mod3(rows: Sequence[Sequence[int]]) -> int:
    """Rank over F_3 by Gaussian elimination with first-nonzero pivoting."""
    m = [[x % 3 for x in r] for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        # in F_3 every unit is its own inverse
        inv = m[r][col]
        m[r] = [x * inv % 3 for x in m[r]]
        for i in range(r + 1, nrows):
            f = m[i][col]
            if f:
                m[i] = [(x - f * y) % 3 for x, y in zip(m[i], m[r])]
        r += 1
        if r == nrows:
            break
    return r


def _det(rows: Sequence[Sequence[int]]) -> int:
    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(1 for i, j in combinations(range(n), 2) if perm[i] > perm[j])
        prod = 1
        for i in range(n):
            prod *= rows[i][perm[i]]
        total += -prod if inversions % 2 else prod
    return total


def rank_by_minors(rows: Sequence[Sequence[int]]) -> int:
    """Determinantal rank over F_3 (largest non-vanishing minor); for small matrices."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    for k in range(min(nrows, ncols), 0, -1):
        for ri in combinations(range(nrows), k):
            for ci in combinations(range(ncols), k):
                if _det([[rows[i][j] for j in ci] for i in ri]) % 3:
                    return k
    return 0


def class_rank(t: int, r: int) -> int:
    return 2 * (t - 1) - r


def rank_f3(m: SystemMatrixF3) -> RankReport:
    r = rank_mod3(m.entries)
    rho = class_rank(m.t, r)
    shape = None
    if (m.t, rho) == (3, 2):
        shape = (3, 3)
    elif (m.t, rho) == (4, 3):
        shape = (3, 3, 3)
    return RankReport(r, rho, shape)


def multiplet_rank_profile(c: Conductor) -> RankDistribution:
    """One 3-class rank per norm-equation solution, in solution order."""
    g = build_graph(c)
    ranks, shapes = [], []
    for s in solve_norm_equation(c):
        rep = rank_f3(build_matrix(g.exponents, valuation_vector(c, s), c.t))
        ranks.append(rep.rho)
        shapes.append(rep.shape)
    return RankDistribution(tuple(ranks), tuple(shapes), "matrix-computed")


def parse_offdiagonal(values: Sequence[int]) -> tuple[int, list[list[int]]]:
    """Rebuild a t x t exponent matrix from its row-major off-diagonal entries."""
    n = len(values)
    t = 1
    while t * (t - 1) < n:
        t += 1
    if t * (t - 1) != n:
        raise InvalidInputError(f"{n} off-diagonal entries do not fit a square matrix")
    it = iter(values)
    a = [[0 if i == j else next(it) for j in range(t)] for i in range(t)]
    return t, a
