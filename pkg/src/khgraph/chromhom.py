"""Chromatic graded homology of abstract graphs.

The cube is indexed by edge subsets s. Each component of the spanning
subgraph (V, s) carries a copy of V = span{1, x} with deg 1 = 0, deg x = 1 and
x^2 = 0; homological degree is |s| and q-degree the number of x factors.
Adding an edge inside a component is the identity; adding one that joins two
components multiplies their factors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .errors import ContractError, ResourceLimitError, UnsupportedInputError, ValidationError
from .exactlin import SparseMatrix, rank_exact
from .khovanov import KhTable
from .laurent import LaurentPoly

ChromTable = KhTable

DEFAULT_MAX_EDGES = 16


@dataclass(frozen=True)
class AbstractGraph:
    vertex_count: int
    edges: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((int(u), int(v)) for u, v in self.edges))
        for u, v in self.edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ContractError(f"edge ({u}, {v}) references a vertex outside 0..{self.vertex_count - 1}")

    def has_loop(self) -> bool:
        return any(u == v for u, v in self.edges)

    def to_dict(self) -> dict:
        return {"vertex_count": self.vertex_count, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_dict(cls, data: dict) -> "AbstractGraph":
        unknown = set(data) - {"vertex_count", "edges"}
        if unknown or "vertex_count" not in data:
            raise ValidationError([f"abstract graph needs vertex_count and edges; bad fields {sorted(unknown)}"])
        n = data["vertex_count"]
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise ValidationError([f"vertex_count must be a nonnegative integer, got {n!r}"])
        edges = []
        for e in data.get("edges", []):
            if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) and not isinstance(x, bool) for x in e)):
                raise ValidationError([f"edge {e!r} is not a pair of vertex indices"])
            if not all(0 <= x < n for x in e):
                raise ValidationError([f"edge {e!r} references a vertex outside 0..{n - 1}"])
            edges.append(tuple(e))
        return cls(n, tuple(edges))


def _find(parent: List[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _component_numbers(n: int, edges: Sequence[Tuple[int, int]]) -> Tuple[List[int], int]:
    parent = list(range(n))
    for u, v in edges:
        ru, rv = _find(parent, u), _find(parent, v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    number: Dict[int, int] = {}
    comp = []
    for x in range(n):
        r = _find(parent, x)
        if r not in number:
            number[r] = len(number)
        comp.append(number[r])
    return comp, len(number)


def spanning_components(g: AbstractGraph, s: Sequence[int]) -> int:
    """Number of connected components of (V(g), s), s given as edge indices."""
    for e in s:
        if not 0 <= e < len(g.edges):
            raise ContractError(f"edge index {e} out of range")
    return _component_numbers(g.vertex_count, [g.edges[e] for e in s])[1]


@dataclass
class ChromComplex:
    """``bases[(i, j)]`` lists ``(subset_mask, label_mask)``; blocks map (i, j) -> (i+1, j)."""

    graph: AbstractGraph
    bases: Dict[Tuple[int, int], List[Tuple[int, int]]]
    blocks: Dict[Tuple[int, int], SparseMatrix]

    def dim(self, i: int, j: int) -> int:
        return len(self.bases.get((i, j), ()))

    def chain_dims(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for (i, _), b in self.bases.items():
            out[i] = out.get(i, 0) + len(b)
        return dict(sorted(out.items()))

    def total_generators(self) -> int:
        return sum(len(b) for b in self.bases.values())

    def block(self, i: int, j: int) -> SparseMatrix:
        if (i, j) in self.blocks:
            return self.blocks[(i, j)]
        return SparseMatrix.zeros(self.dim(i + 1, j), self.dim(i, j))

    def check_d_squared(self) -> None:
        from .errors import ComplexIntegrityError

        for (i, j) in self.bases:
            first, second = self.block(i, j), self.block(i + 1, j)
            if first.nnz and second.nnz and not (second @ first).is_zero():
                raise ComplexIntegrityError(f"chromatic d^2 != 0 at ({i}, {j})")

    def homology(self) -> KhTable:
        """Bigraded homology; each block's rank is computed once.

        Assumes d^2 = 0 was verified (``check_d_squared``), so the composition
        test inside ``homology_dim`` is not repeated per bidegree.
        """
        ranks = {key: rank_exact(m) for key, m in self.blocks.items()}
        dims = {}
        for (i, j), basis in self.bases.items():
            h = len(basis) - ranks.get((i, j), 0) - ranks.get((i - 1, j), 0)
            if h:
                dims[(i, j)] = h
        return KhTable(dims)


def chromatic_complex(g: AbstractGraph, max_edges: int = DEFAULT_MAX_EDGES, check: bool = True) -> ChromComplex:
    if g.has_loop():
        raise UnsupportedInputError("graph has a loop")
    m = len(g.edges)
    if m > max_edges:
        raise ResourceLimitError(f"graph has {m} edges, guard is {max_edges}")
    n = g.vertex_count
    comps = []
    for s in range(1 << m):
        comps.append(_component_numbers(n, [g.edges[e] for e in range(m) if s >> e & 1]))

    bases: Dict[Tuple[int, int], List[Tuple[int, int]]] = {}
    position: Dict[Tuple[int, int], int] = {}
    for s in range(1 << m):
        i = bin(s).count("1")
        for lab in range(1 << comps[s][1]):
            lst = bases.setdefault((i, bin(lab).count("1")), [])
            position[(s, lab)] = len(lst)
            lst.append((s, lab))

    entries: Dict[Tuple[int, int], Dict[Tuple[int, int], int]] = {}
    for s in range(1 << m):
        i = bin(s).count("1")
        comp_s, k = comps[s]
        for p in range(m):
            if s >> p & 1:
                continue
            t = s | (1 << p)
            comp_t, _ = comps[t]
            sign = -1 if bin(s & ((1 << p) - 1)).count("1") % 2 else 1
            u, v = g.edges[p]
            cu, cv = comp_s[u], comp_s[v]
            # component r of s goes to component target[r] of t
            target = [0] * k
            for x in range(n):
                target[comp_s[x]] = comp_t[x]
            for lab in range(1 << k):
                if cu != cv and (lab >> cu & 1) and (lab >> cv & 1):
                    continue  # x * x = 0
                img = 0
                for r in range(k):
                    if lab >> r & 1:
                        img |= 1 << target[r]
                key = (i, bin(lab).count("1"))
                blk = entries.setdefault(key, {})
                rc = (position[(t, img)], position[(s, lab)])
                blk[rc] = blk.get(rc, 0) + sign

    blocks = {}
    for (i, j), ent in entries.items():
        ent = {rc: v for rc, v in ent.items() if v}
        blocks[(i, j)] = SparseMatrix(len(bases.get((i + 1, j), ())), len(bases[(i, j)]), ent)
    cx = ChromComplex(g, bases, blocks)
    if check:
        cx.check_d_squared()
    return cx


def chromatic_homology(g: AbstractGraph, max_edges: int = DEFAULT_MAX_EDGES) -> KhTable:
    return chromatic_complex(g, max_edges=max_edges).homology()


def chromatic_euler(t: KhTable) -> LaurentPoly:
    from .khovanov import graded_euler

    return graded_euler(t)


def deletion_contraction(g: AbstractGraph, e: int) -> Tuple[AbstractGraph, AbstractGraph]:
    """(G - e, G / e). Parallel edges created by the contraction are merged."""
    if not 0 <= e < len(g.edges):
        raise ContractError(f"edge index {e} out of range")
    deleted = AbstractGraph(g.vertex_count, g.edges[:e] + g.edges[e + 1:])
    u, v = g.edges[e]
    keep, gone = min(u, v), max(u, v)

    def image(x: int) -> int:
        x = keep if x == gone else x
        return x - 1 if x > gone else x

    seen = set()
    edges = []
    for k, (a, b) in enumerate(g.edges):
        if k == e:
            continue
        a, b = image(a), image(b)
        key = (min(a, b), max(a, b))
        if key in seen:
            continue
        seen.add(key)
        edges.append((a, b))
    return deleted, AbstractGraph(g.vertex_count - 1, tuple(edges))


def les_bound_check(g: AbstractGraph, e: int) -> bool:
    """dim H^{i,j}(G) <= dim H^{i,j}(G-e) + dim H^{i-1,j}(G/e) at every bidegree."""
    minus, quotient = deletion_contraction(g, e)
    hg = chromatic_homology(g)
    hm = chromatic_homology(minus)
    hq = chromatic_homology(quotient)
    return all(v <= hm[(i, j)] + hq[(i - 1, j)] for (i, j), v in hg.dims.items())


def load_graph(path) -> AbstractGraph:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValidationError([f"{path}: not valid JSON ({exc})"]) from None
    if not isinstance(data, dict):
        raise ValidationError([f"{path}: expected a JSON object"])
    return AbstractGraph.from_dict(data)
