"""Directed cubic-residue graphs of conductors and their classification.

Vertices are the conductor factors in conductor order; there is an arrow
``i -> j`` exactly when factor ``i`` is a cubic residue modulo factor ``j``.
Labels follow the quartet taxonomy (I.1 ... III.9) for three factors and
the tame-octet graphs (i) ... (vii) for four.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

from .conductors import Conductor
from .eisenstein import cubic_residue_exponent
from .errors import InvalidInputError, PreconditionError, WrongArityError

__all__ = [
    "Arrow",
    "ResidueGraph",
    "GraphInvariants",
    "GraphClass",
    "RankDistribution",
    "THEOREM_B_RANGE",
    "THEOREM_C_RANGE",
    "TAME_REPRESENTATIVES",
    "LEMMA_DISTRIBUTIONS",
    "CATEGORY_III",
    "SUBTRIPLES",
    "build_graph",
    "delta",
    "graph_invariants",
    "canonical_arrows",
    "classify",
    "classify_t3",
    "classify_t4",
    "subquartet_distribution",
    "in_range",
    "predict_rank_distribution",
    "format_signature",
    "tame_axioms_1_to_3",
]

Arrow = tuple[int, int]


@dataclass(frozen=True)
class ResidueGraph:
    t: int
    labels: tuple[int, ...]
    # exponents[i][j] = a_ij; the diagonal is stored as 0 and never read
    exponents: tuple[tuple[int, ...], ...]

    @property
    def arrows(self) -> frozenset[Arrow]:
        a = self.exponents
        return frozenset(
            (i, j) for i in range(self.t) for j in range(self.t) if i != j and a[i][j] == 0
        )

    @classmethod
    def from_exponents(
        cls, a: Sequence[Sequence[int]], labels: Sequence[int] | None = None
    ) -> ResidueGraph:
        t = len(a)
        if any(len(row) != t for row in a):
            raise InvalidInputError("exponent matrix must be square")
        rows = []
        for i, row in enumerate(a):
            out = []
            for j, e in enumerate(row):
                if i == j:
                    out.append(0)
                    continue
                e = (e + 1) % 3 - 1
                out.append(e)
            rows.append(tuple(out))
        labs = tuple(labels) if labels is not None else tuple(range(1, t + 1))
        if len(labs) != t:
            raise InvalidInputError("label count differs from matrix size")
        return cls(t, labs, tuple(rows))

    @classmethod
    def from_arrows(cls, t: int, arrows: Iterable[Arrow], fill: int = 1) -> ResidueGraph:
        """Graph with exactly ``arrows``; every other exponent is ``fill``."""
        arr = set(arrows)
        a = [[0 if (i, j) in arr else fill for j in range(t)] for i in range(t)]
        return cls.from_exponents(a)

    def induced(self, vertices: Sequence[int]) -> ResidueGraph:
        a = [[self.exponents[i][j] for j in vertices] for i in vertices]
        return ResidueGraph.from_exponents(a, [self.labels[i] for i in vertices])

    def permuted(self, sigma: Sequence[int]) -> ResidueGraph:
        """Relabel vertex ``i`` as ``sigma[i]``."""
        t = self.t
        a = [[0] * t for _ in range(t)]
        labels = [0] * t
        for i in range(t):
            labels[sigma[i]] = self.labels[i]
            for j in range(t):
                a[sigma[i]][sigma[j]] = self.exponents[i][j]
        return ResidueGraph.from_exponents(a, labels)


@dataclass(frozen=True)
class GraphInvariants:
    u: int
    b: int
    isolated: int
    indeg: tuple[int, ...]
    outdeg: tuple[int, ...]
    deltas: dict[tuple[int, int, int], int]


@dataclass(frozen=True)
class GraphClass:
    label: str
    signature: tuple
    theorem_range: str | None = None


@dataclass(frozen=True)
class RankDistribution:
    ranks: tuple[int, ...]
    shapes: tuple[tuple[int, ...] | None, ...]
    provenance: str


# Mandatory / forbidden arrows on vertices p, q, r(, s) = 0, 1, 2(, 3);
# everything else is admissible.
THEOREM_C_RANGE: tuple[frozenset[Arrow], frozenset[Arrow]] = (
    frozenset({(0, 2)}),
    frozenset({(0, 1), (1, 2)}),
)
THEOREM_B_RANGE: tuple[frozenset[Arrow], frozenset[Arrow]] = (
    frozenset({(0, 2), (0, 3), (1, 3)}),
    frozenset({(0, 1), (1, 2), (2, 3)}),
)

TAME_REPRESENTATIVES: dict[str, frozenset[Arrow]] = {
    "(i)": frozenset(),
    "(ii)": frozenset({(0, 1)}),
    "(iii)": frozenset({(0, 1), (2, 3)}),
    "(iv)": frozenset({(0, 1), (1, 2)}),
    "(v)": frozenset({(0, 1), (1, 2), (2, 0)}),
    "(vi)": frozenset({(0, 1), (1, 2), (2, 3)}),
    "(vii)": frozenset({(0, 1), (1, 2), (2, 3), (3, 0)}),
}

SUBTRIPLES: tuple[tuple[int, int, int], ...] = ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3))

# Sub-quartet graphs for pqr, pqs, prs, qrs of each tame representative above.
LEMMA_DISTRIBUTIONS: dict[str, tuple[str, str, str, str]] = {
    "(i)": ("III.1", "III.1", "III.1", "III.1"),
    "(ii)": ("III.2", "III.2", "III.1", "III.1"),
    "(iii)": ("III.2", "III.2", "III.2", "III.2"),
    "(iv)": ("III.3", "III.2", "III.1", "III.2"),
    "(v)": ("III.4", "III.2", "III.2", "III.2"),
    "(vi)": ("III.3", "III.2", "III.2", "III.3"),
    "(vii)": ("III.3", "III.3", "III.3", "III.3"),
}

_T3_REPRESENTATIVES: dict[str, frozenset[Arrow]] = {
    "III.2": frozenset({(0, 2)}),
    "III.3": frozenset({(1, 0), (0, 2)}),
    "I.2": frozenset({(0, 1), (0, 2)}),
    "II.1": frozenset({(1, 0), (2, 0)}),
    "III.4": frozenset({(0, 2), (2, 1), (1, 0)}),
    "II.2": frozenset({(0, 1), (0, 2), (1, 2)}),
    "III.8": frozenset({(2, 0), (2, 1), (0, 1), (1, 0)}),
    "III.9": frozenset({(0, 2), (2, 0), (1, 0), (2, 1)}),
}

CATEGORY_III = frozenset(
    {"III.1", "III.2", "III.3", "III.4", "III.8", "III.9", "III.unresolved"}
)


def build_graph(c: Conductor) -> ResidueGraph:
    f = c.factors
    a = [
        [0 if i == j else cubic_residue_exponent(f[i], f[j]) for j in range(c.t)]
        for i in range(c.t)
    ]
    return ResidueGraph.from_exponents(a, f)


def delta(a: Sequence[Sequence[int]], i: int, j: int, k: int) -> int:
    """``a_ij a_jk a_ki - a_ik a_kj a_ji`` reduced mod 3."""
    return (a[i][j] * a[j][k] * a[k][i] - a[i][k] * a[k][j] * a[j][i]) % 3


def graph_invariants(g: ResidueGraph) -> GraphInvariants:
    arr = g.arrows
    b = sum(1 for i, j in arr if i < j and (j, i) in arr)
    indeg = [0] * g.t
    outdeg = [0] * g.t
    for i, j in arr:
        outdeg[i] += 1
        indeg[j] += 1
    isolated = sum(1 for i in range(g.t) if indeg[i] == outdeg[i] == 0)
    deltas = {}
    for tri in combinations(range(g.t), 3):
        if not any((x, y) in arr for x in tri for y in tri if x != y):
            deltas[tri] = delta(g.exponents, *tri)
    return GraphInvariants(len(arr) - 2 * b, b, isolated, tuple(indeg), tuple(outdeg), deltas)


def _signature(inv: GraphInvariants) -> tuple:
    degs = tuple(sorted(zip(inv.indeg, inv.outdeg)))
    nonzero = tuple(sorted(int(d != 0) for d in inv.deltas.values()))
    return (inv.u, inv.b, degs, nonzero)


def format_signature(sig: tuple) -> str:
    u, b, degs, nonzero = sig
    deg = "".join(f"({i},{o})" for i, o in degs)
    dl = "".join(str(d) for d in nonzero) or "-"
    return f"u={u};b={b};deg={deg};delta_nonzero={dl}"


@lru_cache(maxsize=None)
def _canonical(t: int, arrows: frozenset[Arrow]) -> tuple[Arrow, ...]:
    best = None
    for sigma in permutations(range(t)):
        form = tuple(sorted((sigma[i], sigma[j]) for i, j in arrows))
        if best is None or form < best:
            best = form
    return best


def canonical_arrows(t: int, arrows: Iterable[Arrow]) -> tuple[Arrow, ...]:
    """Lexicographically least relabeling of an arrow set (isomorphism invariant)."""
    return _canonical(t, frozenset(arrows))


_T3_LOOKUP = {_canonical(3, arr): name for name, arr in _T3_REPRESENTATIVES.items()}
_T4_LOOKUP = {_canonical(4, arr): name for name, arr in TAME_REPRESENTATIVES.items()}


def in_range(
    g: ResidueGraph, mandatory: Iterable[Arrow], forbidden: Iterable[Arrow]
) -> bool:
    """True iff some relabeling puts every mandatory and no forbidden arrow in ``g``."""
    arr = g.arrows
    mand, forb = tuple(mandatory), tuple(forbidden)
    for sigma in permutations(range(g.t)):
        if all((sigma[i], sigma[j]) in arr for i, j in mand) and not any(
            (sigma[i], sigma[j]) in arr for i, j in forb
        ):
            return True
    return False


def classify_t3(g: ResidueGraph) -> GraphClass:
    if g.t != 3:
        raise WrongArityError(f"classify_t3 needs 3 vertices, got {g.t}")
    inv = graph_invariants(g)
    sig = _signature(inv)
    c_range = "C" if in_range(g, *THEOREM_C_RANGE) else None
    arr = g.arrows
    if not arr:
        label = "I.1" if inv.deltas[(0, 1, 2)] == 0 else "III.1"
    else:
        label = _T3_LOOKUP.get(_canonical(3, arr))
        if label is None:
            label = "III.unresolved" if c_range else "other-t3"
    return GraphClass(label, sig, c_range)


def tame_axioms_1_to_3(inv: GraphInvariants) -> bool:
    return inv.b == 0 and max(inv.indeg) <= 1 and max(inv.outdeg) <= 1


def classify_t4(g: ResidueGraph) -> GraphClass:
    if g.t != 4:
        raise WrongArityError(f"classify_t4 needs 4 vertices, got {g.t}")
    inv = graph_invariants(g)
    sig = _signature(inv)
    b_range = "B" if in_range(g, *THEOREM_B_RANGE) else None
    tame = tame_axioms_1_to_3(inv) and all(d != 0 for d in inv.deltas.values())
    label = _T4_LOOKUP[_canonical(4, g.arrows)] if tame else "not-tame"
    return GraphClass(label, sig, b_range)


def classify(g: ResidueGraph) -> GraphClass:
    """Dispatch on the vertex count; other sizes get a bare signature."""
    if g.t == 3:
        return classify_t3(g)
    if g.t == 4:
        return classify_t4(g)
    inv = graph_invariants(g)
    return GraphClass("singlet" if g.t == 1 else f"t{g.t}", _signature(inv))


def subquartet_distribution(g: ResidueGraph) -> tuple[GraphClass, ...]:
    """Classes of the induced 3-graphs on pqr, pqs, prs, qrs."""
    if g.t != 4:
        raise WrongArityError(f"subquartet_distribution needs 4 vertices, got {g.t}")
    if classify_t4(g).label == "not-tame":
        raise PreconditionError("subquartet_distribution needs a tame 4-graph")
    return tuple(classify_t3(g.induced(tri)) for tri in SUBTRIPLES)


_BI = (3, 3)
_TRI = (3, 3, 3)


def predict_rank_distribution(cls: GraphClass, t: int) -> RankDistribution:
    """Theorem-backed rank distribution of the multiplet, when one is known.

    Without a theorem covering the graph the result carries no ranks and
    provenance ``"matrix-computed"``.
    """
    if t < 1:
        raise InvalidInputError(f"t must be positive, got {t}")
    if t == 1:
        return RankDistribution((0,), (None,), "rank-bounds")
    if t == 3:
        lab = cls.label
        if lab == "I.2":
            return RankDistribution((3, 2, 2, 2), (_TRI, _BI, _BI, _BI), "theorem-D")
        if lab == "I.1":
            return RankDistribution((3, 2, 2, 2), (None, _BI, _BI, _BI), "theorem-D")
        if lab in ("II.1", "II.2"):
            return RankDistribution((3, 3, 2, 2), (None, None, _BI, _BI), "theorem-D")
        if lab == "III.1":
            return RankDistribution((2,) * 4, (_BI,) * 4, "theorem-D")
        if lab == "III.8":
            return RankDistribution((2,) * 4, (_BI,) * 4, "theorem-1")
        if cls.theorem_range == "C":
            return RankDistribution((2,) * 4, (_BI,) * 4, "theorem-C")
    elif t == 4:
        if cls.theorem_range == "B":
            return RankDistribution((3,) * 8, (_TRI,) * 8, "theorem-B")
        if cls.label in ("(v)", "(vii)"):
            return RankDistribution((3,) * 8, (_TRI,) * 8, "theorem-3")
    return RankDistribution((), (), "matrix-computed")
