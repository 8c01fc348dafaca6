"""Exact one-variable polynomial arithmetic and the polynomial oracles.

``LaurentPoly`` carries Jones polynomials and graded Euler characteristics
(variable ``q``); ``IntPoly`` carries chromatic polynomials (variable ``t``).
The oracles here never build a chain complex.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Dict, Iterable, Mapping, Sequence, Tuple

from .errors import ContractError, ResourceLimitError, UnsupportedInputError

if TYPE_CHECKING:
    from .chromhom import AbstractGraph
    from .linkdiag import LinkDiagram


@dataclass(frozen=True)
class LaurentPoly:
    """Integer Laurent polynomial, stored as ``{exponent: coefficient}``."""

    coeffs: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", {int(e): int(c) for e, c in dict(self.coeffs).items() if c})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def q_plus_qinv(cls) -> "LaurentPoly":
        return cls({1: 1, -1: 1})

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self.coeffs.items()})
        out: Dict[int, int] = {}
        for (e1, c1), (e2, c2) in itertools.product(self.coeffs.items(), other.coeffs.items()):
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ContractError("negative powers of a Laurent polynomial are not supported")
        out = LaurentPoly({0: 1})
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k."""
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()})

    def invert_variable(self) -> "LaurentPoly":
        """Substitute q -> q^-1."""
        return LaurentPoly({-e: c for e, c in self.coeffs.items()})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __str__(self) -> str:
        return render_laurent(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({render_laurent(self)!r})"


def lp_arith(p: LaurentPoly, q: LaurentPoly, op: str) -> LaurentPoly:
    if op == "add":
        return p + q
    if op == "multiply":
        return p * q
    if op == "negate-first":
        return -p
    raise ContractError(f"unknown op {op!r}")


def render_laurent(p: LaurentPoly, var: str = "q") -> str:
    """Render as ``c*q^e`` terms, descending exponent, e.g. ``1 + q^-2 - 2*q^-4``."""
    if not p.coeffs:
        return "0"
    parts = []
    for e in sorted(p.coeffs, reverse=True):
        c = p.coeffs[e]
        mag = abs(c)
        if e == 0:
            body = str(mag)
        elif mag == 1:
            body = f"{var}^{e}"
        else:
            body = f"{mag}*{var}^{e}"
        parts.append((c < 0, body))
    neg, body = parts[0]
    out = ("-" if neg else "") + body
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out


def parse_laurent(text: str, var: str = "q") -> LaurentPoly:
    """Inverse of ``render_laurent``."""
    text = text.strip()
    if text == "0":
        return LaurentPoly()
    tokens = text.replace(" - ", " + -").split(" + ")
    out: Dict[int, int] = {}
    for tok in tokens:
        tok = tok.strip()
        sign = -1 if tok.startswith("-") else 1
        tok = tok.lstrip("-")
        if f"{var}^" in tok:
            head, _, exp = tok.partition(f"{var}^")
            coeff = int(head.rstrip("*")) if head else 1
            e = int(exp)
        else:
            coeff, e = int(tok), 0
        out[e] = out.get(e, 0) + sign * coeff
    return LaurentPoly(out)


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial in ``t``, coefficients lowest degree first."""

    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        cs = list(int(c) for c in self.coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __add__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPoly(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(tuple(out))

    def substitute(self, value: LaurentPoly) -> LaurentPoly:
        """Evaluate at a Laurent polynomial, e.g. t = 1 + q."""
        acc = LaurentPoly()
        for c in reversed(self.coeffs):
            acc = acc * value + LaurentPoly({0: c})
        return acc

    def __str__(self) -> str:
        return render_laurent(LaurentPoly(dict(enumerate(self.coeffs))), var="t")


def _circle_counts(d: "LinkDiagram") -> Iterable[Tuple[int, int]]:
    from .linkdiag import resolve

    n = len(d.crossings)
    for alpha in itertools.product((0, 1), repeat=n):
        yield sum(alpha), resolve(d, alpha).circle_count


def jones_state_sum(d: "LinkDiagram") -> LaurentPoly:
    """Unreduced Jones polynomial by the Kauffman state sum.

    sum over smoothings of (-1)^(|a|-n_-) q^(|a|+n_+-2n_-) (q+q^-1)^k(a).
    """
    from .linkdiag import crossing_signs, validate_link

    validate_link(d).raise_if_bad()
    signs = crossing_signs(d)
    np_, nm = signs.n_plus, signs.n_minus
    loop = LaurentPoly.q_plus_qinv()
    powers: Dict[int, LaurentPoly] = {}
    total = LaurentPoly()
    for h, k in _circle_counts(d):
        if k not in powers:
            powers[k] = loop ** k
        sign = -1 if (h - nm) % 2 else 1
        total = total + powers[k].shift(h + np_ - 2 * nm) * sign
    return total


def _components(n: int, edges: Sequence[Tuple[int, int]]) -> int:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    k = n
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            k -= 1
    return k


def chromatic_state_sum(g: "AbstractGraph") -> IntPoly:
    """P_G(t) = sum over edge subsets s of (-1)^|s| t^k(s)."""
    if any(u == v for u, v in g.edges):
        raise UnsupportedInputError("graph has a loop; chromatic polynomial is identically zero")
    coeffs = [0] * (g.vertex_count + 1)
    m = len(g.edges)
    for mask in range(1 << m):
        s = [g.edges[i] for i in range(m) if mask >> i & 1]
        k = _components(g.vertex_count, s)
        coeffs[k] += -1 if len(s) % 2 else 1
    return IntPoly(tuple(coeffs))


COLORING_GUARD = 10 ** 7


def count_proper_colorings(g: "AbstractGraph", t: int) -> int:
    """Brute-force count of proper vertex colorings with ``t`` colors."""
    if t < 0:
        raise ContractError("number of colors must be nonnegative")
    n = g.vertex_count
    if t ** n > COLORING_GUARD:
        raise ResourceLimitError(f"{t}^{n} colorings exceeds guard {COLORING_GUARD}")
    return sum(
        1
        for col in itertools.product(range(t), repeat=n)
        if all(col[u] != col[v] for u, v in g.edges)
    )
