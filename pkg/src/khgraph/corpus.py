"""Named diagrams and random diagram generators used by tests and scripts.

Random link diagrams come from closures of random braid words. A braid word is
a sequence of nonzero integers: ``+i`` is the positive generator between
strands i and i+1 (1-based), ``-i`` its inverse.
"""

from __future__ import annotations

import random
from typing import Dict, List, Sequence

from .chromhom import AbstractGraph
from .linkdiag import LinkDiagram
from .spatialgraph import SpatialGraphDiagram


def braid_closure(word: Sequence[int], strands: int) -> LinkDiagram:
    """PD code of the closure of a braid word (strands oriented upward)."""
    if any(g == 0 or abs(g) >= strands for g in word):
        raise ValueError(f"generator out of range for {strands} strands")
    next_label = strands + 1
    bottom = list(range(1, strands + 1))
    current = list(bottom)
    succ: Dict[int, int] = {}
    crossings = []
    for g in word:
        p = abs(g) - 1
        l_in, r_in = current[p], current[p + 1]
        l_out, r_out = next_label, next_label + 1
        next_label += 2
        if g > 0:
            # over-strand SW -> NE, under enters SE
            crossings.append((r_in, r_out, l_out, l_in))
        else:
            crossings.append((l_in, r_in, r_out, l_out))
        succ[l_in] = r_out
        succ[r_in] = l_out
        current[p], current[p + 1] = l_out, r_out
    # close up: the top arc at each position is the bottom arc at that position
    ident = {top: bot for top, bot in zip(current, bottom)}

    def canon(x: int) -> int:
        while x in ident and ident[x] != x:
            x = ident[x]
        return x

    used = {canon(x) for c in crossings for x in c}
    crossings = [tuple(canon(x) for x in c) for c in crossings]
    succ = {canon(a): canon(b) for a, b in succ.items()}
    free = sum(1 for pos in range(strands) if bottom[pos] not in used)
    comps = []
    seen = set()
    for start in sorted(succ):
        if start in seen:
            continue
        cyc = []
        x = start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = succ[x]
        comps.append(tuple(cyc))
    # compact labels to 1..n
    order = {lab: k + 1 for k, lab in enumerate(sorted(seen))}
    return LinkDiagram(
        tuple(tuple(order[x] for x in c) for c in crossings),
        tuple(tuple(order[x] for x in c) for c in comps),
        free,
    )


def random_braid_word(rng: random.Random, strands: int, length: int) -> List[int]:
    return [rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length)]


def random_diagram(rng: random.Random, max_crossings: int = 8) -> LinkDiagram:
    strands = rng.randint(2, 4)
    length = rng.randint(1, max_crossings)
    return braid_closure(random_braid_word(rng, strands, length), strands)


def random_relabeling(d: LinkDiagram, rng: random.Random) -> LinkDiagram:
    """Rename arcs to random labels and shuffle crossing order."""
    arcs = d.arcs
    new = rng.sample(range(1, 10 * (len(arcs) + 1)), len(arcs))
    mapping = dict(zip(arcs, new))
    crossings = [tuple(mapping[x] for x in c) for c in d.crossings]
    rng.shuffle(crossings)
    comps = []
    for comp in d.components:
        k = rng.randrange(len(comp))
        comps.append(tuple(mapping[x] for x in comp[k:] + comp[:k]))
    rng.shuffle(comps)
    return LinkDiagram(tuple(crossings), tuple(comps), d.free_loops)


UNKNOT = LinkDiagram(free_loops=1)
UNLINK2 = LinkDiagram(free_loops=2)
EMPTY = LinkDiagram()
HOPF_NEG = LinkDiagram(((4, 1, 3, 2), (2, 3, 1, 4)), ((1, 2), (3, 4)))
TREFOIL_LEFT = LinkDiagram(((1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)), ((1, 2, 3, 4, 5, 6),))
TREFOIL_RIGHT = braid_closure([1, 1, 1], 2)
FIGURE_EIGHT = LinkDiagram(((4, 2, 5, 1), (8, 6, 1, 5), (6, 3, 7, 4), (2, 7, 3, 8)),
                           ((1, 2, 3, 4, 5, 6, 7, 8),))
KINK_NEG = LinkDiagram(((1, 2, 2, 1),), ((1, 2),))
KINK_POS = LinkDiagram(((1, 1, 2, 2),), ((1, 2),))

# Pairs of distinct diagrams of the same oriented link.
SAME_LINK_PAIRS = {
    "trefoil_markov": (braid_closure([1, 1, 1], 2), braid_closure([1, 1, 1, 2], 3)),
    "trefoil_markov_neg": (braid_closure([1, 1, 1], 2), braid_closure([1, 1, 1, -2], 3)),
    "left_trefoil_pd_vs_braid": (TREFOIL_LEFT, braid_closure([-1, -1, -1], 2)),
    "figure_eight_conjugate": (braid_closure([1, -2, 1, -2], 3), braid_closure([-2, 1, -2, 1], 3)),
    "figure_eight_pd_vs_braid": (FIGURE_EIGHT, braid_closure([1, -2, 1, -2], 3)),
    "hopf_r2": (braid_closure([1, 1], 2), braid_closure([1, -1, 1, 1], 2)),
    "r3_braid_relation": (braid_closure([1, 2, 1, 2], 3), braid_closure([2, 1, 2, 2], 3)),
    "unknot_kinks": (UNKNOT, KINK_NEG),
    "unknot_kink_pos": (UNKNOT, KINK_POS),
    "unlink_r2": (UNLINK2, braid_closure([1, -1], 2)),
    "trefoil_r2_stabilized": (braid_closure([1, 1, 1], 2), braid_closure([1, 2, -2, 1, 1, 2], 3)),
}


# -- spatial graphs ---------------------------------------------------------

THETA = SpatialGraphDiagram(vertices=((1, 2, 3), (3, 2, 1)))
HANDCUFF = SpatialGraphDiagram(vertices=((1, 1, 3), (3, 2, 2)))
# Hopf link whose arcs 1 and 3 are each cut by a vertex, joined by bridge 9.
HANDCUFF_HOPF = SpatialGraphDiagram(
    vertices=((1, 5, 9), (3, 6, 9)),
    crossings=((4, 1, 3, 2), (2, 6, 5, 4)),
)
# Left trefoil with a degree-2 vertex inserted on arc 1.
TREFOIL_LOOP = SpatialGraphDiagram(
    vertices=((1, 7),),
    crossings=((7, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)),
)


# -- abstract graphs --------------------------------------------------------

def path_graph(n: int) -> AbstractGraph:
    return AbstractGraph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> AbstractGraph:
    return AbstractGraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def star_graph(leaves: int) -> AbstractGraph:
    return AbstractGraph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def random_graph(rng: random.Random, max_edges: int = 7, max_vertices: int = 6) -> AbstractGraph:
    n = rng.randint(1, max_vertices)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    m = rng.randint(0, min(max_edges, len(pairs)))
    return AbstractGraph(n, tuple(rng.sample(pairs, m)))


def connected_graphs_up_to(max_edges: int) -> List[AbstractGraph]:
    """All connected simple graphs with 1..max_edges edges, up to isomorphism.

    Includes the one-vertex graph. Uses networkx for isomorphism filtering.
    """
    import itertools

    import networkx as nx

    found: List[nx.Graph] = [nx.empty_graph(1)]
    for m in range(1, max_edges + 1):
        for n in range(2, m + 2):
            pairs = list(itertools.combinations(range(n), 2))
            for edges in itertools.combinations(pairs, m):
                g = nx.Graph(edges)
                if g.number_of_nodes() != n or not nx.is_connected(g):
                    continue
                if any(h.number_of_edges() == m and nx.is_isomorphic(g, h) for h in found):
                    continue
                found.append(g)
    return [AbstractGraph(g.number_of_nodes(), tuple(sorted(g.edges()))) for g in found]


def random_spatial_relabeling(g: SpatialGraphDiagram, rng: random.Random) -> SpatialGraphDiagram:
    """Rename arcs, shuffle vertices and crossings, rotate each vertex's cyclic order.

    Crossings are also rotated by two slots at random (the other end of the
    under-strand), which names the same unoriented crossing.
    """
    labels = sorted({x for v in g.vertices for x in v} | {x for c in g.crossings for x in c})
    new = rng.sample(range(1, 10 * (len(labels) + 1)), len(labels))
    mapping = dict(zip(labels, new))
    vertices = []
    for v in g.vertices:
        k = rng.randrange(len(v)) if v else 0
        vertices.append(tuple(mapping[x] for x in v[k:] + v[:k]))
    rng.shuffle(vertices)
    crossings = []
    for c in g.crossings:
        c = tuple(mapping[x] for x in c)
        if rng.random() < 0.5:
            c = c[2:] + c[:2]
        crossings.append(c)
    rng.shuffle(crossings)
    return SpatialGraphDiagram(tuple(vertices), tuple(crossings), g.free_loops)


def permute_edges(g: AbstractGraph, rng: random.Random) -> AbstractGraph:
    edges = [(v, u) if rng.random() < 0.5 else (u, v) for u, v in g.edges]
    rng.shuffle(edges)
    relabel = list(range(g.vertex_count))
    rng.shuffle(relabel)
    return AbstractGraph(g.vertex_count, tuple((relabel[u], relabel[v]) for u, v in edges))


def spatial_from_link(d: LinkDiagram, rng: random.Random, p_vertex: float = 0.3,
                      p_subdivide: float = 0.2, p_cut: float = 0.05) -> SpatialGraphDiagram:
    """Planar spatial graph derived from a link diagram.

    Each crossing becomes a 4-valent vertex with probability ``p_vertex``;
    each arc is subdivided by a degree-2 vertex with probability
    ``p_subdivide`` or cut into two degree-1 ends with probability ``p_cut``.
    All of these are local moves, so the result stays realizable.
    """
    next_label = max(d.arcs, default=0) + 1
    crossings = [list(c) for c in d.crossings]
    vertices: List[tuple] = []
    for arc in d.arcs:
        r = rng.random()
        if r >= p_subdivide + p_cut:
            continue
        # rename one end of the arc
        occ = [(ci, pos) for ci, c in enumerate(crossings) for pos, x in enumerate(c) if x == arc]
        ci, pos = occ[-1]
        crossings[ci][pos] = next_label
        if r < p_subdivide:
            vertices.append((arc, next_label))
        else:
            vertices.append((arc,))
            vertices.append((next_label,))
        next_label += 1
    kept = []
    for c in crossings:
        if rng.random() < p_vertex:
            vertices.append(tuple(c))
        else:
            kept.append(tuple(c))
    return SpatialGraphDiagram(tuple(vertices), tuple(kept), d.free_loops)
