"""Oriented link diagrams in planar-diagram (PD) form.

A crossing is a 4-tuple ``(a, b, c, d)`` of arc labels listed
counterclockwise starting at the incoming under-strand, so the under-strand
runs ``a -> c`` and the over-strand runs either ``b -> d`` or ``d -> b``.
A crossing is positive when the over-strand runs ``d -> b``.

Smoothing convention: bit 0 joins ``{a, b}`` and ``{c, d}``; bit 1 joins
``{a, d}`` and ``{b, c}``.

Crossing-free circles are not arcs; they are carried as ``free_loops``.
Operations that need to address such a circle use the pseudo-arc ``-k`` for
the k-th free loop (1-based).
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import ContractError, ValidationError

Crossing = Tuple[int, int, int, int]
Slot = Tuple[int, int]  # (crossing index, position 0..3)


@dataclass(frozen=True)
class LinkDiagram:
    crossings: Tuple[Crossing, ...] = ()
    components: Tuple[Tuple[int, ...], ...] = ()
    free_loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(tuple(int(x) for x in c) for c in self.crossings))
        object.__setattr__(self, "components", tuple(tuple(int(x) for x in c) for c in self.components))
        object.__setattr__(self, "free_loops", int(self.free_loops))

    @property
    def arcs(self) -> List[int]:
        return sorted({a for comp in self.components for a in comp})

    @property
    def n_components(self) -> int:
        return len(self.components) + self.free_loops

    def successor(self) -> Dict[int, int]:
        succ = {}
        for comp in self.components:
            for i, a in enumerate(comp):
                succ[a] = comp[(i + 1) % len(comp)]
        return succ

    def to_dict(self) -> dict:
        return {
            "crossings": [list(c) for c in self.crossings],
            "components": [list(c) for c in self.components],
            "free_loops": self.free_loops,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "LinkDiagram":
        unknown = set(data) - {"crossings", "components", "free_loops"}
        if unknown:
            raise ValidationError([f"unknown field {k!r}" for k in sorted(unknown)])
        try:
            crossings = [tuple(c) for c in data.get("crossings", [])]
            components = [tuple(c) for c in data.get("components", [])]
            free_loops = data.get("free_loops", 0)
        except TypeError as exc:
            raise ValidationError([f"malformed link diagram: {exc}"]) from None
        problems = []
        for i, c in enumerate(crossings):
            if len(c) != 4:
                problems.append(f"crossing {i} has {len(c)} slots, expected 4")
        for lab in [x for c in crossings for x in c] + [x for c in components for x in c]:
            if isinstance(lab, bool) or not isinstance(lab, int) or lab <= 0:
                problems.append(f"arc label {lab!r} is not a positive integer")
        if isinstance(free_loops, bool) or not isinstance(free_loops, int) or free_loops < 0:
            problems.append(f"free_loops must be a nonnegative integer, got {free_loops!r}")
        if problems:
            raise ValidationError(problems)
        return cls(tuple(crossings), tuple(components), free_loops)

    @classmethod
    def from_json(cls, text: str) -> "LinkDiagram":
        return cls.from_dict(json.loads(text))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


@dataclass(frozen=True)
class ValidationReport:
    violations: Tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def raise_if_bad(self) -> None:
        if self.violations:
            raise ValidationError(self.violations)


@dataclass(frozen=True)
class Smoothing:
    """A full resolution; ``circles`` are the arc classes, each as a sorted tuple."""

    alpha: Tuple[int, ...]
    circles: Tuple[Tuple[int, ...], ...]
    circle_count: int


@dataclass(frozen=True)
class SignData:
    signs: Tuple[int, ...]
    n_plus: int
    n_minus: int

    @property
    def writhe(self) -> int:
        return self.n_plus - self.n_minus


# -- orientation ------------------------------------------------------------

def _slots_by_label(crossings: Sequence[Crossing]) -> Dict[int, List[Slot]]:
    out: Dict[int, List[Slot]] = {}
    for ci, c in enumerate(crossings):
        for pos, lab in enumerate(c):
            out.setdefault(lab, []).append((ci, pos))
    return out


def _orient(d: LinkDiagram) -> Tuple[Optional[Dict[Slot, bool]], List[str]]:
    """Mark every crossing slot as incoming (True) or outgoing (False).

    Slot a is incoming and c outgoing by definition; the two ends of an arc
    have opposite roles, and so do opposite slots of a crossing. Components
    with no under-strand slot are seeded from their cycle order.
    """
    slots = _slots_by_label(d.crossings)
    succ = d.successor()
    role: Dict[Slot, bool] = {}
    problems: List[str] = []

    def label(s: Slot) -> int:
        return d.crossings[s[0]][s[1]]

    def propagate(seed: Slot, incoming: bool) -> None:
        stack = [(seed, incoming)]
        while stack:
            s, inc = stack.pop()
            if s in role:
                if role[s] != inc:
                    problems.append(f"inconsistent orientation at crossing {s[0]} (arc {label(s)})")
                continue
            role[s] = inc
            lab = label(s)
            other = [t for t in slots[lab] if t != s]
            for t in other:
                stack.append((t, not inc))
            stack.append(((s[0], (s[1] + 2) % 4), not inc))

    for ci in range(len(d.crossings)):
        propagate((ci, 0), True)
        if problems:
            return None, problems
    for comp in d.components:
        unresolved = [a for a in comp if any(s not in role for s in slots.get(a, []))]
        if not unresolved:
            continue
        k = min(unresolved)
        cands = [s for s in sorted(slots[k]) if label((s[0], (s[1] + 2) % 4)) == succ[k]]
        if not cands:
            return None, [f"arc {k}: no crossing continues it to its successor {succ[k]}"]
        propagate(cands[0], True)
        if problems:
            return None, problems
    # Traversal must agree with the component cycles.
    for s, inc in role.items():
        if inc:
            nxt = label((s[0], (s[1] + 2) % 4))
            if succ.get(label(s)) != nxt:
                return None, [f"arc {label(s)} enters crossing {s[0]} but is not followed by {nxt}"]
    return role, []


def validate_link(d: LinkDiagram) -> ValidationReport:
    problems: List[str] = []
    slot_count = Counter(x for c in d.crossings for x in c)
    comp_count = Counter(x for c in d.components for x in c)
    for i, c in enumerate(d.crossings):
        if len(c) != 4:
            problems.append(f"crossing {i} has {len(c)} slots, expected 4")
    for lab in sorted(set(slot_count) | set(comp_count)):
        if lab <= 0:
            problems.append(f"arc {lab}: labels must be positive")
        if slot_count[lab] != 2:
            problems.append(f"arc {lab} appears {slot_count[lab]} times in crossing slots, expected 2")
        if comp_count[lab] != 1:
            problems.append(f"arc {lab} appears {comp_count[lab]} times in components, expected 1")
    for i, comp in enumerate(d.components):
        if not comp:
            problems.append(f"component {i} is empty; use free_loops for crossing-free circles")
    if d.free_loops < 0:
        problems.append("free_loops is negative")
    if problems:
        return ValidationReport(tuple(problems))
    succ = d.successor()
    for i, (a, b, c, dd) in enumerate(d.crossings):
        if succ[a] != c:
            problems.append(f"crossing {i}: under-strand arc {c} is not the successor of arc {a}")
        if succ[b] != dd and succ[dd] != b:
            problems.append(f"crossing {i}: over-strand arcs {b}, {dd} are not consecutive")
    if problems:
        return ValidationReport(tuple(problems))
    _, problems = _orient(d)
    return ValidationReport(tuple(problems))


def crossing_signs(d: LinkDiagram) -> SignData:
    """Sign +1 iff the over-strand enters at slot d and leaves at slot b."""
    role, problems = _orient(d)
    if role is None:
        raise ValidationError(problems)
    signs = tuple(1 if role[(ci, 3)] else -1 for ci in range(len(d.crossings)))
    n_plus = sum(1 for s in signs if s > 0)
    return SignData(signs, n_plus, len(signs) - n_plus)


def incoming_slots(d: LinkDiagram) -> Dict[int, Slot]:
    """For each arc, the crossing slot where the arc ends (enters a crossing)."""
    role, problems = _orient(d)
    if role is None:
        raise ValidationError(problems)
    return {d.crossings[s[0]][s[1]]: s for s, inc in role.items() if inc}


# -- smoothings -------------------------------------------------------------

def smoothing_classes(crossings: Sequence[Crossing], alpha: Sequence[int]) -> Dict[int, int]:
    """Union-find root for each arc label under smoothing ``alpha``."""
    parent: Dict[int, int] = {}

    def find(x: int) -> int:
        parent.setdefault(x, x)
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            if ry < rx:
                rx, ry = ry, rx
            parent[ry] = rx

    for (a, b, c, dd), bit in zip(crossings, alpha):
        if bit:
            union(a, dd)
            union(b, c)
        else:
            union(a, b)
            union(c, dd)
    return {x: find(x) for x in parent}


def resolve(d: LinkDiagram, alpha: Sequence[int]) -> Smoothing:
    alpha = tuple(int(b) for b in alpha)
    if len(alpha) != len(d.crossings):
        raise ContractError(f"alpha has length {len(alpha)}, diagram has {len(d.crossings)} crossings")
    if any(b not in (0, 1) for b in alpha):
        raise ContractError("alpha must be a bit sequence")
    roots = smoothing_classes(d.crossings, alpha)
    groups: Dict[int, List[int]] = {}
    for lab, r in roots.items():
        groups.setdefault(r, []).append(lab)
    circles = tuple(sorted(tuple(sorted(g)) for g in groups.values()))
    return Smoothing(alpha, circles, len(circles) + d.free_loops)


# -- diagram operations -----------------------------------------------------

def _cycles_from_successor(succ: Dict[int, int]) -> Tuple[Tuple[int, ...], ...]:
    seen = set()
    cycles = []
    for start in sorted(succ):
        if start in seen:
            continue
        cyc = []
        x = start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = succ[x]
        cycles.append(tuple(cyc))
    return tuple(cycles)


def relabel(d: LinkDiagram, mapping: Dict[int, int]) -> LinkDiagram:
    return LinkDiagram(
        tuple(tuple(mapping[x] for x in c) for c in d.crossings),
        tuple(tuple(mapping[x] for x in c) for c in d.components),
        d.free_loops,
    )


def disjoint_union(d1: LinkDiagram, d2: LinkDiagram) -> LinkDiagram:
    shift = max(d1.arcs, default=0)
    d2s = relabel(d2, {a: a + shift for a in d2.arcs})
    return LinkDiagram(d1.crossings + d2s.crossings, d1.components + d2s.components,
                       d1.free_loops + d2s.free_loops)


def mirror(d: LinkDiagram) -> LinkDiagram:
    """Switch every crossing, re-rooting each tuple at its new incoming under-strand."""
    signs = crossing_signs(d)
    out = []
    for (a, b, c, dd), s in zip(d.crossings, signs.signs):
        # The old over-strand becomes the under-strand; it enters at d if positive.
        out.append((dd, a, b, c) if s > 0 else (b, c, dd, a))
    return LinkDiagram(tuple(out), d.components, d.free_loops)


def _check_arc(d: LinkDiagram, a: int) -> None:
    if a < 0:
        if not 1 <= -a <= d.free_loops:
            raise ContractError(f"unknown free loop pseudo-arc {a}")
    elif a not in set(d.arcs):
        raise ContractError(f"unknown arc {a}")


def _band(d: LinkDiagram, a1: int, a2: int) -> LinkDiagram:
    """Oriented band surgery between two distinct real arcs."""
    heads = incoming_slots(d)
    y, q = heads[a1], heads[a2]
    crossings = [list(c) for c in d.crossings]
    crossings[y[0]][y[1]] = a2
    crossings[q[0]][q[1]] = a1
    succ = d.successor()
    succ[a1], succ[a2] = succ[a2], succ[a1]
    return LinkDiagram(tuple(tuple(c) for c in crossings), _cycles_from_successor(succ), d.free_loops)


def connected_sum(d1: LinkDiagram, a1: int, d2: LinkDiagram, a2: int) -> LinkDiagram:
    """Cut ``a1`` in ``d1`` and ``a2`` in ``d2`` and cross-join the four ends."""
    _check_arc(d1, a1)
    _check_arc(d2, a2)
    shift = max(d1.arcs, default=0)
    u = disjoint_union(d1, d2)
    if a1 < 0 or a2 < 0:
        # Summing with a crossing-free circle just absorbs that circle.
        return LinkDiagram(u.crossings, u.components, u.free_loops - 1)
    return _band(u, a1, a2 + shift)


def saddle(d: LinkDiagram, a1: int, a2: int) -> LinkDiagram:
    """Combinatorial band surgery joining arcs ``a1`` and ``a2``.

    Planar realizability of the band is the caller's responsibility. The
    pseudo-arc form ``saddle(d, -k, -k)`` splits free loop k in two.
    """
    _check_arc(d, a1)
    _check_arc(d, a2)
    if a1 == a2:
        if a1 < 0:
            return LinkDiagram(d.crossings, d.components, d.free_loops + 1)
        raise ContractError("saddle needs two distinct arcs")
    if a1 < 0 or a2 < 0:
        return LinkDiagram(d.crossings, d.components, d.free_loops - 1)
    return _band(d, a1, a2)


def permute_crossings(d: LinkDiagram, order: Sequence[int]) -> LinkDiagram:
    return LinkDiagram(tuple(d.crossings[i] for i in order), d.components, d.free_loops)


def load_link(path) -> LinkDiagram:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValidationError([f"{path}: not valid JSON ({exc})"]) from None
    if not isinstance(data, dict):
        raise ValidationError([f"{path}: expected a JSON object"])
    return LinkDiagram.from_dict(data)


def reverse_component(d: LinkDiagram, k: int) -> LinkDiagram:
    """Reverse the orientation of component ``k``.

    Crossings where that component is the under-strand are re-rooted at the
    new incoming slot, i.e. ``(a, b, c, d) -> (c, d, a, b)``.
    """
    comp = d.components[k]
    members = set(comp)
    crossings = tuple((c[2], c[3], c[0], c[1]) if c[0] in members else c for c in d.crossings)
    rev = (comp[0],) + tuple(reversed(comp[1:]))
    comps = d.components[:k] + (rev,) + d.components[k + 1:]
    return LinkDiagram(crossings, comps, d.free_loops)
