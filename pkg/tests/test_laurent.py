import pytest
from hypothesis import given, strategies as st

from khgraph.chromhom import AbstractGraph
from khgraph.corpus import HOPF_NEG, TREFOIL_LEFT, TREFOIL_RIGHT, UNKNOT, UNLINK2, cycle_graph, path_graph
from khgraph.errors import ResourceLimitError, UnsupportedInputError
from khgraph.laurent import (IntPoly, LaurentPoly, chromatic_state_sum, count_proper_colorings,
                             jones_state_sum, lp_arith, parse_laurent, render_laurent)
from khgraph.linkdiag import disjoint_union, mirror
from strategies import braid_diagrams, small_graphs

Q = LaurentPoly.q_plus_qinv()

laurents = st.dictionaries(st.integers(-6, 6), st.integers(-4, 4), max_size=5).map(LaurentPoly)


def test_binomial_square():
    assert lp_arith(Q, Q, "multiply") == LaurentPoly({2: 1, 0: 2, -2: 1})


def test_add_cancels():
    assert lp_arith(LaurentPoly({0: 1, 1: 1}), LaurentPoly({1: -1}), "add") == LaurentPoly({0: 1})


def test_negate_first():
    assert lp_arith(LaurentPoly({-4: 1}), LaurentPoly({7: 3}), "negate-first") == LaurentPoly({-4: -1})


@pytest.mark.parametrize("p, text", [
    (LaurentPoly({0: 1, -2: 1, -4: 1, -6: 1}), "1 + q^-2 + q^-4 + q^-6"),
    (LaurentPoly({1: 1, -1: 1}), "q^1 + q^-1"),
    (LaurentPoly({-1: 1, -3: 1, -5: 1, -9: -1}), "q^-1 + q^-3 + q^-5 - q^-9"),
    (LaurentPoly({9: -1, 0: 2, -2: -3}), "-q^9 + 2 - 3*q^-2"),
    (LaurentPoly(), "0"),
])
def test_render_golden(p, text):
    assert render_laurent(p) == text
    assert parse_laurent(text) == p


@given(laurents, laurents, laurents)
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + (-a) == LaurentPoly()
    assert parse_laurent(render_laurent(a)) == a


def test_jones_unknot():
    assert jones_state_sum(UNKNOT) == Q


def test_jones_negative_hopf():
    # alternating sum of the four Hopf table entries (two at i=-2, two at i=0)
    assert jones_state_sum(HOPF_NEG) == LaurentPoly({0: 1, -2: 1, -4: 1, -6: 1})


def test_jones_unlink():
    assert jones_state_sum(UNLINK2) == LaurentPoly({2: 1, 0: 2, -2: 1})


def test_jones_trefoils():
    # unreduced Jones polynomial = (q + q^-1) times the normalized one
    assert jones_state_sum(TREFOIL_RIGHT) == parse_laurent("-q^9 + q^5 + q^3 + q^1")
    assert jones_state_sum(TREFOIL_LEFT) == parse_laurent("q^-1 + q^-3 + q^-5 - q^-9")


@given(braid_diagrams(max_crossings=5), braid_diagrams(max_crossings=4))
def test_jones_multiplicative_on_disjoint_union(d1, d2):
    assert jones_state_sum(disjoint_union(d1, d2)) == jones_state_sum(d1) * jones_state_sum(d2)


@given(braid_diagrams(max_crossings=6))
def test_jones_mirror_inverts_variable(d):
    assert jones_state_sum(mirror(d)) == jones_state_sum(d).invert_variable()


def test_chromatic_edgeless():
    assert chromatic_state_sum(AbstractGraph(3, ())) == IntPoly((0, 0, 0, 1))


def test_chromatic_single_edge():
    # subsets: {} -> t^2, {e} -> -t
    assert chromatic_state_sum(path_graph(2)) == IntPoly((0, -1, 1))


def test_chromatic_triangle():
    # {}: t^3; three singletons: -3t^2; three pairs: +3t; all: -t
    assert chromatic_state_sum(cycle_graph(3)) == IntPoly((0, 2, -3, 1))


def test_chromatic_rejects_loop():
    with pytest.raises(UnsupportedInputError):
        chromatic_state_sum(AbstractGraph(2, ((1, 1),)))


def test_colorings_examples():
    assert count_proper_colorings(cycle_graph(3), 3) == 6
    assert count_proper_colorings(path_graph(2), 2) == 2
    assert count_proper_colorings(cycle_graph(4), 0) == 0


def test_coloring_guard():
    with pytest.raises(ResourceLimitError):
        count_proper_colorings(AbstractGraph(12, ()), 5)


@given(small_graphs(multi=True))
def test_state_sum_counts_colorings(g):
    p = chromatic_state_sum(g)
    for t in range(6):
        assert p(t) == count_proper_colorings(g, t)


def test_intpoly_substitute():
    p = IntPoly((0, -1, 1))  # t^2 - t at t = 1 + q gives q + q^2
    assert p.substitute(LaurentPoly({0: 1, 1: 1})) == LaurentPoly({1: 1, 2: 1})
