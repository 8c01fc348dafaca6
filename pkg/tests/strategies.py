"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from khgraph.chromhom import AbstractGraph
from khgraph.corpus import braid_closure


@st.composite
def braid_diagrams(draw, max_crossings=6, max_strands=4):
    strands = draw(st.integers(2, max_strands))
    gens = st.integers(1, strands - 1).flatmap(lambda i: st.sampled_from([i, -i]))
    word = draw(st.lists(gens, min_size=0, max_size=max_crossings))
    return braid_closure(word, strands)


@st.composite
def small_graphs(draw, max_vertices=5, max_edges=6, multi=False):
    n = draw(st.integers(1, max_vertices))
    if n == 1:
        return AbstractGraph(1, ())
    pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] != e[1])
    edges = draw(st.lists(pair, max_size=max_edges))
    if not multi:
        seen, uniq = set(), []
        for u, v in edges:
            if (min(u, v), max(u, v)) not in seen:
                seen.add((min(u, v), max(u, v)))
                uniq.append((u, v))
        edges = uniq
    return AbstractGraph(n, tuple(edges))


@st.composite
def int_matrices(draw, max_rows=8, max_cols=8, lo=-3, hi=3):
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(0, max_cols))
    return [[draw(st.integers(lo, hi)) for _ in range(c)] for _ in range(r)], c
