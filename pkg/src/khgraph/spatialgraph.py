"""Spatial graph diagrams, Kauffman vertex replacements and the link family T(G).

A spatial graph diagram lists each vertex as the cyclic sequence of arc labels
incident to it, plus crossings given as 4-tuples read counterclockwise from an
end of the under-strand. Spatial graphs are unoriented; extracted links are
oriented afterwards.

A replacement joins one pair of slots at every vertex of degree >= 2 and
leaves the other slots as free ends. Strands that reach a free end are
deleted together with every crossing they pass through; the surviving strand
at such a crossing is spliced straight through.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass, field
from math import comb, prod
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import ContractError, ResourceLimitError, ValidationError
from .khovanov import DEFAULT_MAX_CROSSINGS, KhTable, khovanov_homology
from .linkdiag import LinkDiagram, ValidationReport, reverse_component, validate_link

Occ = Tuple[str, int, int]  # ("c" | "v", index, slot position)
ReplacementChoice = Tuple[Optional[Tuple[int, int]], ...]

DEFAULT_MAX_REPLACEMENTS = 10 ** 4


@dataclass(frozen=True)
class SpatialGraphDiagram:
    vertices: Tuple[Tuple[int, ...], ...] = ()
    crossings: Tuple[Tuple[int, int, int, int], ...] = ()
    free_loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(tuple(int(x) for x in v) for v in self.vertices))
        object.__setattr__(self, "crossings", tuple(tuple(int(x) for x in c) for c in self.crossings))
        object.__setattr__(self, "free_loops", int(self.free_loops))

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(len(v) for v in self.vertices)

    def to_dict(self) -> dict:
        return {
            "vertices": [list(v) for v in self.vertices],
            "crossings": [list(c) for c in self.crossings],
            "free_loops": self.free_loops,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SpatialGraphDiagram":
        unknown = set(data) - {"vertices", "crossings", "free_loops"}
        if unknown:
            raise ValidationError([f"unknown field {k!r}" for k in sorted(unknown)])
        problems = []
        vertices = data.get("vertices", [])
        crossings = data.get("crossings", [])
        fl = data.get("free_loops", 0)
        if not isinstance(vertices, list) or not all(isinstance(v, list) for v in vertices):
            problems.append("vertices must be a list of lists")
        if not isinstance(crossings, list) or not all(isinstance(c, list) for c in crossings):
            problems.append("crossings must be a list of lists")
        if problems:
            raise ValidationError(problems)
        for lab in [x for v in vertices for x in v] + [x for c in crossings for x in c]:
            if isinstance(lab, bool) or not isinstance(lab, int) or lab <= 0:
                problems.append(f"arc label {lab!r} is not a positive integer")
        for i, c in enumerate(crossings):
            if len(c) != 4:
                problems.append(f"crossing {i} has {len(c)} slots, expected 4")
        if isinstance(fl, bool) or not isinstance(fl, int) or fl < 0:
            problems.append(f"free_loops must be a nonnegative integer, got {fl!r}")
        if problems:
            raise ValidationError(problems)
        return cls(tuple(tuple(v) for v in vertices), tuple(tuple(c) for c in crossings), fl)


def validate_spatial(g: SpatialGraphDiagram) -> ValidationReport:
    problems = []
    for i, v in enumerate(g.vertices):
        if not v:
            problems.append(f"vertex {i} has degree 0")
    for i, c in enumerate(g.crossings):
        if len(c) != 4:
            problems.append(f"crossing {i} has {len(c)} slots, expected 4")
    counts = Counter(x for v in g.vertices for x in v) + Counter(x for c in g.crossings for x in c)
    for lab in sorted(counts):
        if lab <= 0:
            problems.append(f"arc {lab}: labels must be positive")
        n = counts[lab]
        if n == 1:
            problems.append(f"arc {lab} is referenced only once (dangling end)")
        elif n != 2:
            problems.append(f"arc {lab} appears {n} times, expected 2")
    if g.free_loops < 0:
        problems.append("free_loops is negative")
    return ValidationReport(tuple(problems))


def enumerate_replacements(g: SpatialGraphDiagram, rigid: bool = False) -> List[ReplacementChoice]:
    """All global replacement choices, one slot pair (or ``None``) per vertex.

    ``rigid=True`` restricts to cyclically adjacent slot pairs.
    """
    per_vertex = []
    for v in g.vertices:
        deg = len(v)
        if deg < 2:
            per_vertex.append([None])
            continue
        pairs = list(itertools.combinations(range(deg), 2))
        if rigid:
            pairs = [(p, q) for p, q in pairs if q - p == 1 or (p == 0 and q == deg - 1)]
        per_vertex.append(pairs)
    return [tuple(c) for c in itertools.product(*per_vertex)]


def replacement_count(g: SpatialGraphDiagram) -> int:
    return prod(comb(d, 2) if d >= 2 else 1 for d in g.degrees)


def _check_choice(g: SpatialGraphDiagram, rho: ReplacementChoice) -> None:
    if len(rho) != len(g.vertices):
        raise ContractError(f"choice has {len(rho)} entries for {len(g.vertices)} vertices")
    for vi, (v, pick) in enumerate(zip(g.vertices, rho)):
        if pick is None:
            if len(v) >= 2:
                raise ContractError(f"vertex {vi} has degree {len(v)} and must connect a pair")
            continue
        p, q = pick
        if p == q or not (0 <= p < len(v) and 0 <= q < len(v)):
            raise ContractError(f"vertex {vi}: invalid slot pair {pick}")


def apply_replacement(g: SpatialGraphDiagram, rho: ReplacementChoice) -> LinkDiagram:
    """The link left after replacement ``rho`` and deletion of open strands.

    Components are oriented starting at their smallest arc label, heading
    towards the smaller of its two neighbours (ties: traced order). Surviving
    arcs are merged across vertices and spliced crossings; each merged arc is
    named by its smallest original label.
    """
    validate_spatial(g).raise_if_bad()
    _check_choice(g, rho)
    by_label: Dict[int, List[Occ]] = {}
    for vi, v in enumerate(g.vertices):
        for pos, lab in enumerate(v):
            by_label.setdefault(lab, []).append(("v", vi, pos))
    for ci, c in enumerate(g.crossings):
        for pos, lab in enumerate(c):
            by_label.setdefault(lab, []).append(("c", ci, pos))

    def label(o: Occ) -> int:
        kind, i, pos = o
        return (g.vertices[i] if kind == "v" else g.crossings[i])[pos]

    arc_mate: Dict[Occ, Occ] = {}
    for occs in by_label.values():
        x, y = occs
        arc_mate[x], arc_mate[y] = y, x
    through: Dict[Occ, Occ] = {}
    for ci in range(len(g.crossings)):
        for pos in range(4):
            through[("c", ci, pos)] = ("c", ci, (pos + 2) % 4)
    for vi, pick in enumerate(rho):
        if pick is not None:
            p, q = pick
            through[("v", vi, p)] = ("v", vi, q)
            through[("v", vi, q)] = ("v", vi, p)

    # Strand components: each occurrence has one arc edge and at most one through edge.
    comp_of: Dict[Occ, int] = {}
    closed: List[bool] = []
    for start in sorted(arc_mate):
        if start in comp_of:
            continue
        cid = len(closed)
        stack, ok = [start], True
        while stack:
            o = stack.pop()
            if o in comp_of:
                continue
            comp_of[o] = cid
            stack.append(arc_mate[o])
            if o in through:
                stack.append(through[o])
            else:
                ok = False
        closed.append(ok)

    kept = [ci for ci in range(len(g.crossings))
            if closed[comp_of[("c", ci, 0)]] and closed[comp_of[("c", ci, 1)]]]
    kept_set = set(kept)

    def is_kept_entry(o: Occ) -> bool:
        return o[0] == "c" and o[1] in kept_set

    new_label: Dict[Occ, int] = {}
    entry: Dict[Tuple[int, int], Occ] = {}  # (crossing, strand parity) -> arriving slot
    components: List[Tuple[int, ...]] = []
    loops = 0
    done = set()
    for start in sorted(arc_mate, key=lambda o: (label(o), o)):
        cid = comp_of[start]
        if cid in done or not closed[cid]:
            continue
        done.add(cid)
        # trace: start -arc-> o1 -through-> o2 -arc-> ...
        seq = []
        o = start
        while True:
            o1 = arc_mate[o]
            seq.append((o, o1))
            o = through[o1]
            if o == start:
                break
        breaks = [k for k, (_, arrive) in enumerate(seq) if is_kept_entry(arrive)]
        if not breaks:
            loops += 1
            continue
        # runs of arcs between kept crossings; rotate so a run starts the list
        r0 = (breaks[-1] + 1) % len(seq)
        seq = seq[r0:] + seq[:r0]
        runs: List[List[Tuple[Occ, Occ]]] = [[]]
        for k, step in enumerate(seq):
            runs[-1].append(step)
            if is_kept_entry(step[1]) and k != len(seq) - 1:
                runs.append([])
        names = [min(label(a) for a, _ in run) for run in runs]

        m = names.index(min(names))
        prev_name, next_name = names[m - 1], names[(m + 1) % len(names)]
        forward = not (prev_name < next_name)
        if not forward:
            runs = [[(b, a) for a, b in reversed(run)] for run in reversed(runs)]
            names = list(reversed(names))
        for run, name in zip(runs, names):
            new_label[run[0][0]] = name
            new_label[run[-1][1]] = name
            arrive = run[-1][1]
            entry[(arrive[1], arrive[2] % 2)] = arrive
        m = names.index(min(names))
        components.append(tuple(names[m:] + names[:m]))

    crossings = []
    for ci in kept:
        r = entry[(ci, 0)][2]
        slots = [new_label[("c", ci, (r + k) % 4)] for k in range(4)]
        crossings.append(tuple(slots))
    d = LinkDiagram(tuple(crossings), tuple(sorted(components)), loops + g.free_loops)
    validate_link(d).raise_if_bad()
    return d


def orient_for_invariance(d: LinkDiagram, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> Tuple[LinkDiagram, KhTable]:
    """Re-orient components so the table is the smallest over all relative orientations.

    Global reversal does not change Khovanov homology, so component 0 stays
    fixed. The result depends only on the unoriented link diagram.
    """
    best = None
    n = len(d.components)
    for flips in itertools.product((False, True), repeat=max(n - 1, 0)):
        cand = d
        for k, f in enumerate(flips, start=1):
            if f:
                cand = reverse_component(cand, k)
        table = khovanov_homology(cand, max_crossings=max_crossings)
        key = table.to_csv()
        if best is None or key < best[0]:
            best = (key, cand, table)
    return best[1], best[2]


@dataclass(frozen=True)
class FamilyMember:
    choice: ReplacementChoice
    diagram: LinkDiagram
    table: KhTable

    def to_structured(self) -> dict:
        return {
            "choice": [list(c) if c is not None else None for c in self.choice],
            "diagram": self.diagram.to_dict(),
            "table": self.table.to_structured(),
        }


@dataclass(frozen=True)
class LinkFamily:
    members: Tuple[FamilyMember, ...]
    dedup_mode: str = "set"

    def tables(self) -> List[KhTable]:
        return [m.table for m in self.members]

    def total(self) -> KhTable:
        out = KhTable()
        for m in self.members:
            out = out + m.table
        return out


def kauffman_family(g: SpatialGraphDiagram, dedup_mode: str = "set", include_empty: bool = True,
                    max_replacements: int = DEFAULT_MAX_REPLACEMENTS,
                    max_crossings: int = DEFAULT_MAX_CROSSINGS, rigid: bool = False) -> LinkFamily:
    """T(G) with each member's Khovanov table.

    ``dedup_mode="set"`` keeps one member per distinct table (distinct links
    with equal tables are conflated); ``"multiset"`` keeps every choice.
    Members are sorted by rendered table.
    """
    if dedup_mode not in ("set", "multiset"):
        raise ContractError(f"unknown dedup mode {dedup_mode!r}")
    validate_spatial(g).raise_if_bad()
    count = replacement_count(g)
    if count > max_replacements:
        raise ResourceLimitError(f"{count} replacement choices exceeds guard {max_replacements}")
    members = []
    seen = set()
    for rho in enumerate_replacements(g, rigid=rigid):
        d = apply_replacement(g, rho)
        if not include_empty and d.n_components == 0:
            continue
        d, table = orient_for_invariance(d, max_crossings=max_crossings)
        if dedup_mode == "set":
            if table in seen:
                continue
            seen.add(table)
        members.append(FamilyMember(rho, d, table))
    members.sort(key=lambda m: m.table.to_csv())
    return LinkFamily(tuple(members), dedup_mode)


def graph_khovanov(g: SpatialGraphDiagram, **kwargs) -> KhTable:
    """Direct sum of the Khovanov tables of the family members."""
    return kauffman_family(g, **kwargs).total()


def load_spatial(path) -> SpatialGraphDiagram:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValidationError([f"{path}: not valid JSON ({exc})"]) from None
    if not isinstance(data, dict):
        raise ValidationError([f"{path}: expected a JSON object"])
    return SpatialGraphDiagram.from_dict(data)
