"""Khovanov chain complex of a link diagram and its bigraded homology.

Generators at a vertex alpha of the cube are labelings of the circles of the
smoothing by ``one`` (degree +1) or ``x`` (degree -1); internally a labeling is
a bitmask with bit set meaning ``x``. Gradings:

    i = |alpha| - n_-
    j = deg(v) + |alpha| + n_+ - 2 n_-

Merges apply m (x*x = 0), splits apply Delta(one) = one(x)x + x(x)one,
Delta(x) = x(x)x, and the edge changing bit p has sign (-1)^(# 1-bits before p).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import ComplexIntegrityError, ResourceLimitError
from .exactlin import SparseMatrix, rank_exact
from .laurent import LaurentPoly
from .linkdiag import LinkDiagram, crossing_signs, validate_link

Bidegree = Tuple[int, int]

DEFAULT_MAX_CROSSINGS = 16


@dataclass(frozen=True)
class KhTable:
    """Bigraded dimension table ``(i, j) -> dim``; zero entries are dropped."""

    dims: Mapping[Bidegree, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (i, j), v in dict(self.dims).items():
            if v < 0:
                raise ValueError(f"negative dimension at ({i}, {j})")
            if v:
                clean[(int(i), int(j))] = int(v)
        object.__setattr__(self, "dims", clean)

    def __hash__(self):
        return hash(frozenset(self.dims.items()))

    def __eq__(self, other):
        if not isinstance(other, KhTable):
            return NotImplemented
        return self.dims == other.dims

    def __getitem__(self, key: Bidegree) -> int:
        return self.dims.get(key, 0)

    def __add__(self, other: "KhTable") -> "KhTable":
        out = dict(self.dims)
        for k, v in other.dims.items():
            out[k] = out.get(k, 0) + v
        return KhTable(out)

    def total_rank(self) -> int:
        return sum(self.dims.values())

    def to_csv(self) -> str:
        return "".join(f"{i},{j},{v}\n" for (i, j), v in sorted(self.dims.items()))

    @classmethod
    def from_csv(cls, text: str) -> "KhTable":
        dims = {}
        for line in text.splitlines():
            if line.strip():
                i, j, v = (int(x) for x in line.split(","))
                dims[(i, j)] = v
        return cls(dims)

    def to_structured(self) -> list:
        return [{"i": i, "j": j, "dim": v} for (i, j), v in sorted(self.dims.items())]

    def to_grid(self) -> str:
        """Human-readable grid: rows are q-degrees (descending), columns homological degrees."""
        if not self.dims:
            return "(zero)\n"
        is_ = sorted({i for i, _ in self.dims})
        js = sorted({j for _, j in self.dims}, reverse=True)
        cols = list(range(is_[0], is_[-1] + 1))
        rows = list(range(js[0], js[-1] - 1, -1))
        cells = [["j\\i"] + [str(i) for i in cols]]
        for j in rows:
            cells.append([str(j)] + [str(self.dims[(i, j)]) if (i, j) in self.dims else "." for i in cols])
        width = max(len(c) for row in cells for c in row)
        return "".join(" ".join(c.rjust(width) for c in row) + "\n" for row in cells)

    def __repr__(self):
        return f"KhTable({dict(sorted(self.dims.items()))})"


UNKNOT_TABLE = KhTable({(0, 1): 1, (0, -1): 1})
EMPTY_LINK_TABLE = KhTable({(0, 0): 1})


def graded_euler(t: KhTable) -> LaurentPoly:
    out: Dict[int, int] = {}
    for (i, j), v in t.dims.items():
        out[j] = out.get(j, 0) + (-v if i % 2 else v)
    return LaurentPoly(out)


def tensor_tables(t1: KhTable, t2: KhTable) -> KhTable:
    out: Dict[Bidegree, int] = {}
    for (i1, j1), v1 in t1.dims.items():
        for (i2, j2), v2 in t2.dims.items():
            key = (i1 + i2, j1 + j2)
            out[key] = out.get(key, 0) + v1 * v2
    return KhTable(out)


def dual_table(t: KhTable) -> KhTable:
    return KhTable({(-i, -j): v for (i, j), v in t.dims.items()})


@dataclass(frozen=True)
class Generator:
    alpha: Tuple[int, ...]
    labeling: Mapping[object, str]


@dataclass
class KhComplex:
    """Bigraded cube complex.

    ``bases[(i, j)]`` lists ``(alpha, mask)`` pairs; ``alpha`` is an integer
    whose bit p is the resolution of crossing p. ``blocks[(i, j)]`` is the
    differential ``C^{i,j} -> C^{i+1,j}``. ``circles[alpha]`` lists the arc
    circles of that smoothing; free loops follow them in bit order.
    """

    n_crossings: int
    n_plus: int
    n_minus: int
    free_loops: int
    circles: List[Tuple[Tuple[int, ...], ...]]
    bases: Dict[Bidegree, List[Tuple[int, int]]]
    blocks: Dict[Bidegree, SparseMatrix]

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

    def generators(self, i: int, j: int) -> List[Generator]:
        out = []
        for alpha, mask in self.bases.get((i, j), ()):
            circ = self.circles[alpha]
            names: List[object] = list(circ) + [f"free{k}" for k in range(self.free_loops)]
            labeling = {name: ("x" if mask >> b & 1 else "one") for b, name in enumerate(names)}
            bits = tuple(alpha >> p & 1 for p in range(self.n_crossings))
            out.append(Generator(bits, labeling))
        return out

    def check_d_squared(self) -> None:
        for (i, j) in self.bases:
            first = self.block(i, j)
            second = self.block(i + 1, j)
            if first.nnz and second.nnz and not (second @ first).is_zero():
                raise ComplexIntegrityError(f"d^2 != 0 at bidegree ({i}, {j})")

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


def _circle_maps(crossings, alpha: int, index: Dict[int, int]):
    """Circle number of each arc (by arc index) for smoothing ``alpha``."""
    n_arcs = len(index)
    parent = list(range(n_arcs))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p, (a, b, c, d) in enumerate(crossings):
        if alpha >> p & 1:
            pairs = ((a, d), (b, c))
        else:
            pairs = ((a, b), (c, d))
        for u, v in pairs:
            ru, rv = find(index[u]), find(index[v])
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
    roots = [find(x) for x in range(n_arcs)]
    # Arc indices follow sorted labels, so numbering by first appearance
    # orders circles by their smallest label.
    number: Dict[int, int] = {}
    circle_of = []
    for r in roots:
        if r not in number:
            number[r] = len(number)
        circle_of.append(number[r])
    return circle_of, len(number)


def build_complex(d: LinkDiagram, max_crossings: int = DEFAULT_MAX_CROSSINGS,
                  check: bool = True) -> KhComplex:
    validate_link(d).raise_if_bad()
    n = len(d.crossings)
    if n > max_crossings:
        raise ResourceLimitError(f"diagram has {n} crossings, guard is {max_crossings}")
    signs = crossing_signs(d)
    n_plus, n_minus = signs.n_plus, signs.n_minus
    labels = d.arcs
    index = {lab: k for k, lab in enumerate(labels)}
    crossings = d.crossings
    fl = d.free_loops

    circle_of: List[List[int]] = []
    k_arc: List[int] = []
    circles: List[Tuple[Tuple[int, ...], ...]] = []
    for alpha in range(1 << n):
        co, k = _circle_maps(crossings, alpha, index)
        circle_of.append(co)
        k_arc.append(k)
        groups: List[List[int]] = [[] for _ in range(k)]
        for lab, c in zip(labels, co):
            groups[c].append(lab)
        circles.append(tuple(tuple(g) for g in groups))

    bases: Dict[Bidegree, List[Tuple[int, int]]] = {}
    position: Dict[Tuple[int, int], int] = {}
    for alpha in range(1 << n):
        h = bin(alpha).count("1")
        k = k_arc[alpha] + fl
        for mask in range(1 << k):
            j = k - 2 * bin(mask).count("1") + h + n_plus - 2 * n_minus
            key = (h - n_minus, j)
            lst = bases.setdefault(key, [])
            position[(alpha, mask)] = len(lst)
            lst.append((alpha, mask))

    entries: Dict[Bidegree, Dict[Tuple[int, int], int]] = {}
    for alpha in range(1 << n):
        h = bin(alpha).count("1")
        ka = k_arc[alpha]
        k = ka + fl
        co_a = circle_of[alpha]
        for p in range(n):
            if alpha >> p & 1:
                continue
            beta = alpha | (1 << p)
            co_b = circle_of[beta]
            kb = k_arc[beta]
            sign = -1 if bin(alpha & ((1 << p) - 1)).count("1") % 2 else 1
            a, b, c, _ = crossings[p]
            ca, cc = co_a[index[a]], co_a[index[c]]
            # Where each untouched alpha-circle goes in beta.
            target = [None] * ka
            for arc_idx, circ in enumerate(co_a):
                if target[circ] is None:
                    target[circ] = co_b[arc_idx]
            moves = [(s, target[s]) for s in range(ka) if s != ca and s != cc]
            moves += [(ka + f, kb + f) for f in range(fl)]
            merge = ca != cc
            if merge:
                m = co_b[index[a]]
            else:
                s1, s2 = co_b[index[a]], co_b[index[b]]
                if s1 == s2:
                    raise ComplexIntegrityError(f"crossing {p} neither merges nor splits at alpha={alpha}")
            for mask in range(1 << k):
                rest = 0
                for s, t in moves:
                    if mask >> s & 1:
                        rest |= 1 << t
                if merge:
                    xa, xc = mask >> ca & 1, mask >> cc & 1
                    if xa and xc:
                        continue
                    images = [rest | ((xa | xc) << m)]
                elif mask >> ca & 1:
                    images = [rest | (1 << s1) | (1 << s2)]
                else:
                    images = [rest | (1 << s1), rest | (1 << s2)]
                j = k - 2 * bin(mask).count("1") + h + n_plus - 2 * n_minus
                key = (h - n_minus, j)
                col = position[(alpha, mask)]
                blk = entries.setdefault(key, {})
                for img in images:
                    row = position[(beta, img)]
                    blk[(row, col)] = blk.get((row, col), 0) + sign

    blocks = {}
    for (i, j), ent in entries.items():
        ent = {rc: v for rc, v in ent.items() if v}
        blocks[(i, j)] = SparseMatrix(len(bases.get((i + 1, j), ())), len(bases[(i, j)]), ent)
    cx = KhComplex(n, n_plus, n_minus, fl, circles, bases, blocks)
    if check:
        cx.check_d_squared()
    return cx


def khovanov_homology(d: LinkDiagram, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> KhTable:
    return build_complex(d, max_crossings=max_crossings).homology()
