from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubicfields.conductors import validate_conductor
from cubicfields.errors import InvalidInputError, PreconditionError, WrongArityError
from cubicfields.graphs import (
    CATEGORY_III,
    LEMMA_DISTRIBUTIONS,
    TAME_REPRESENTATIVES,
    THEOREM_B_RANGE,
    THEOREM_C_RANGE,
    ResidueGraph,
    build_graph,
    canonical_arrows,
    classify,
    classify_t3,
    classify_t4,
    delta,
    graph_invariants,
    in_range,
    predict_rank_distribution,
    subquartet_distribution,
)


def exponent_matrices(t):
    cell = st.sampled_from((-1, 0, 1))
    return st.lists(st.lists(cell, min_size=t, max_size=t), min_size=t, max_size=t)


def graph_of(c):
    return build_graph(validate_conductor(c))


class TestBuild:
    def test_singlet(self):
        g = graph_of(7)
        assert g.arrows == frozenset() and classify(g).label == "singlet"

    def test_doublet(self):
        assert graph_of(91).arrows == {(1, 0)}  # 13 is a cube mod 7

    def test_III8_prototype(self):
        g = graph_of(20293)
        assert g.labels == (7, 13, 223)
        assert classify_t3(g).label == "III.8"

    def test_from_exponents_normalizes(self):
        g = ResidueGraph.from_exponents([[5, 2, 0], [1, 0, 1], [0, 0, 0]])
        assert g.exponents == ((0, -1, 0), (1, 0, 1), (0, 0, 0))

    def test_from_exponents_rejects(self):
        with pytest.raises(InvalidInputError):
            ResidueGraph.from_exponents([[0, 1], [1]])
        with pytest.raises(InvalidInputError):
            ResidueGraph.from_exponents([[0, 1], [1, 0]], [7])


class TestInvariants:
    def test_edgeless(self):
        inv = graph_invariants(ResidueGraph.from_arrows(3, []))
        assert (inv.u, inv.b, inv.isolated) == (0, 0, 3)
        assert inv.deltas == {(0, 1, 2): 0}

    def test_delta_nonzero(self):
        a = [[0, -1, 1], [1, 0, 1], [1, 1, 0]]
        assert delta(a, 0, 1, 2) == 1
        assert graph_invariants(ResidueGraph.from_exponents(a)).deltas == {(0, 1, 2): 1}

    def test_bicycle_and_cycle(self):
        inv = graph_invariants(ResidueGraph.from_arrows(4, [(0, 1), (1, 0), (1, 2), (2, 3), (3, 1)]))
        assert (inv.u, inv.b, inv.isolated) == (3, 1, 0)
        assert inv.indeg == (1, 2, 1, 1) and inv.outdeg == (1, 2, 1, 1)
        assert inv.deltas == {}

    @given(exponent_matrices(3))
    def test_delta_sign_flip(self, a):
        neg = [[-x for x in row] for row in a]
        assert delta(neg, 0, 1, 2) == (-delta(a, 0, 1, 2)) % 3
        # relabeling the triple changes delta at most by sign
        for s in permutations(range(3)):
            assert delta(a, *s) in (delta(a, 0, 1, 2), (-delta(a, 0, 1, 2)) % 3)


class TestClassifyT3:
    @pytest.mark.parametrize(
        "arrows,label",
        [
            ([(0, 1)], "III.2"),
            ([(0, 1), (1, 2)], "III.3"),
            ([(0, 1), (0, 2)], "I.2"),
            ([(1, 0), (2, 0)], "II.1"),
            ([(0, 1), (1, 2), (2, 0)], "III.4"),
            ([(0, 1), (0, 2), (1, 2)], "II.2"),
            ([(2, 0), (2, 1), (0, 1), (1, 0)], "III.8"),
            ([(0, 2), (2, 0), (1, 0), (2, 1)], "III.9"),
            ([(0, 1), (1, 0)], "III.unresolved"),
            ([(0, 1), (1, 0), (2, 0)], "III.unresolved"),
            ([(0, 1), (1, 0), (0, 2)], "III.unresolved"),
            ([(0, 1), (1, 0), (0, 2), (2, 0)], "other-t3"),
        ],
    )
    def test_labels(self, arrows, label):
        assert classify_t3(ResidueGraph.from_arrows(3, arrows)).label == label

    def test_edgeless_split_by_delta(self):
        assert classify_t3(ResidueGraph.from_arrows(3, [])).label == "I.1"
        a = [[0, -1, 1], [1, 0, 1], [1, 1, 0]]
        assert classify_t3(ResidueGraph.from_exponents(a)).label == "III.1"

    def test_wrong_arity(self):
        with pytest.raises(WrongArityError):
            classify_t3(ResidueGraph.from_arrows(4, []))
        with pytest.raises(WrongArityError):
            classify_t4(ResidueGraph.from_arrows(3, []))

    def test_theorem_c_range_membership(self):
        inside = {"III.2", "III.3", "III.4", "III.9"}
        for label in inside:
            cls = classify_t3(_rep3(label))
            assert cls.theorem_range == "C", label
        for label in ("III.8", "I.2", "II.1", "II.2", "I.1"):
            assert classify_t3(_rep3(label)).theorem_range is None, label

    def test_category_iii(self):
        assert "III.8" in CATEGORY_III and "I.2" not in CATEGORY_III


def _rep3(label):
    reps = {
        "I.1": [],
        "III.2": [(0, 2)],
        "III.3": [(1, 0), (0, 2)],
        "I.2": [(0, 1), (0, 2)],
        "II.1": [(1, 0), (2, 0)],
        "III.4": [(0, 2), (2, 1), (1, 0)],
        "II.2": [(0, 1), (0, 2), (1, 2)],
        "III.8": [(2, 0), (2, 1), (0, 1), (1, 0)],
        "III.9": [(0, 2), (2, 0), (1, 0), (2, 1)],
    }
    return ResidueGraph.from_arrows(3, reps[label], fill=1)


class TestClassifyT4:
    def test_representatives(self):
        for label, arr in TAME_REPRESENTATIVES.items():
            g = ResidueGraph.from_arrows(4, arr)
            # fill=1 gives delta = 0 on edgeless triples, so use a twisted filling
            a = [list(r) for r in g.exponents]
            a = _twist(a)
            assert classify_t4(ResidueGraph.from_exponents(a)).label == label

    def test_not_tame(self):
        assert classify_t4(ResidueGraph.from_arrows(4, [(0, 1), (1, 0)])).label == "not-tame"
        assert classify_t4(ResidueGraph.from_arrows(4, [(0, 1), (0, 2)])).label == "not-tame"
        # edgeless with delta = 0
        assert classify_t4(ResidueGraph.from_arrows(4, [])).label == "not-tame"

    def test_subquartets(self):
        for label, arr in TAME_REPRESENTATIVES.items():
            g = ResidueGraph.from_exponents(_twist([list(r) for r in ResidueGraph.from_arrows(4, arr).exponents]))
            assert tuple(c.label for c in subquartet_distribution(g)) == LEMMA_DISTRIBUTIONS[label]

    def test_subquartets_needs_tame(self):
        with pytest.raises(PreconditionError):
            subquartet_distribution(ResidueGraph.from_arrows(4, [(0, 1), (1, 0)]))

    @pytest.mark.parametrize("c", [104013, 144781, 158067, 181503])
    def test_theorem_b_range(self, c):
        cls = classify(graph_of(c))
        assert cls.theorem_range == "B" and cls.label == "not-tame"

    def test_in_range_examples(self):
        gm = ResidueGraph.from_arrows(4, THEOREM_B_RANGE[0])
        assert in_range(gm, *THEOREM_B_RANGE)
        assert not in_range(ResidueGraph.from_arrows(4, []), *THEOREM_B_RANGE)
        # relabeled copy is still in range
        assert in_range(gm.permuted((3, 1, 0, 2)), *THEOREM_B_RANGE)
        gc = ResidueGraph.from_arrows(3, THEOREM_C_RANGE[0])
        assert in_range(gc, *THEOREM_C_RANGE)


def _twist(a):
    """Fill non-arrows so every edgeless triple has nonzero delta."""
    t = len(a)
    from itertools import product

    free = [(i, j) for i in range(t) for j in range(t) if i != j and a[i][j] != 0]
    for signs in product((1, -1), repeat=len(free)):
        b = [row[:] for row in a]
        for (i, j), s in zip(free, signs):
            b[i][j] = s
        inv = graph_invariants(ResidueGraph.from_exponents(b))
        if all(d != 0 for d in inv.deltas.values()):
            return b
    raise AssertionError("no twist found")


class TestInvariance:
    @settings(max_examples=200)
    @given(exponent_matrices(3), st.permutations(range(3)))
    def test_t3_label_invariant(self, a, sigma):
        g = ResidueGraph.from_exponents(a)
        h = g.permuted(sigma)
        assert classify_t3(g) == classify_t3(h)

    @settings(max_examples=100)
    @given(exponent_matrices(4), st.permutations(range(4)))
    def test_t4_label_invariant(self, a, sigma):
        g = ResidueGraph.from_exponents(a)
        assert classify_t4(g) == classify_t4(g.permuted(sigma))

    @given(exponent_matrices(4), st.permutations(range(4)))
    def test_canonical_form_invariant(self, a, sigma):
        g = ResidueGraph.from_exponents(a)
        assert canonical_arrows(4, g.arrows) == canonical_arrows(4, g.permuted(sigma).arrows)

    @given(exponent_matrices(3))
    def test_global_sign_flip(self, a):
        g = ResidueGraph.from_exponents(a)
        h = ResidueGraph.from_exponents([[-x for x in r] for r in a])
        assert classify_t3(g) == classify_t3(h)


class TestPredictions:
    def test_singlet(self):
        p = predict_rank_distribution(classify(graph_of(7)), 1)
        assert p.ranks == (0,) and p.provenance == "rank-bounds"

    def test_III8(self):
        p = predict_rank_distribution(classify(graph_of(20293)), 3)
        assert p.ranks == (2, 2, 2, 2) and p.shapes == ((3, 3),) * 4

    def test_I2(self):
        p = predict_rank_distribution(classify(graph_of(753787)), 3)
        assert sorted(p.ranks) == [2, 2, 2, 3] and p.provenance == "theorem-D"

    def test_theorem_b(self):
        p = predict_rank_distribution(classify(graph_of(104013)), 4)
        assert p.ranks == (3,) * 8 and p.shapes == ((3, 3, 3),) * 8

    def test_unknown(self):
        p = predict_rank_distribution(classify(graph_of(91)), 2)
        assert p.ranks == () and p.provenance == "matrix-computed"

    def test_bad_t(self):
        with pytest.raises(InvalidInputError):
            predict_rank_distribution(classify(graph_of(7)), 0)
