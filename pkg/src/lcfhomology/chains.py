"""Explicit chains in the order complex and the basis cycles they realise.

A chain of degree ``k`` is an integer combination of strictly increasing
``(k+1)``-tuples of poset elements.  Degree -1 chains are multiples of the
empty tuple; the boundary of a vertex is the empty tuple, so the boundary
here is always the augmented one.

Coefficients stay integral: every construction below is defined over the
integers and its image in any other coefficient ring is obtained by
reduction.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import NotACycle, SupportOutsideI, SuspensionOutOfRange
from .family import LocalCoveringFamily
from .poset import BOTTOM, GradedPoset

Simplex = tuple[int, ...]


class Chain:
    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: Mapping[Simplex, int] | None = None):
        self.degree = degree
        self.terms: dict[Simplex, int] = {}
        for s, c in (terms or {}).items():
            if len(s) != degree + 1:
                raise ValueError(f"tuple {s} does not have degree {degree}")
            if c:
                self.terms[tuple(s)] = self.terms.get(tuple(s), 0) + c
        self.terms = {s: c for s, c in self.terms.items() if c}

    @classmethod
    def unit(cls, *simplex: int) -> "Chain":
        return cls(len(simplex) - 1, {tuple(simplex): 1})

    @classmethod
    def empty(cls, coef: int = 1) -> "Chain":
        """``coef`` times the empty tuple, the generator in degree -1."""
        return cls(-1, {(): coef})

    def __repr__(self) -> str:
        if not self.terms:
            return f"Chain({self.degree}, 0)"
        parts = [f"{c:+d}*{'<'.join(map(str, s)) or '()'}" for s, c in sorted(self.terms.items())]
        return f"Chain({self.degree}, {' '.join(parts)})"

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Chain):
            return NotImplemented
        if not self.terms and not other.terms:
            return True
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def _combine(self, other: "Chain", sign: int) -> "Chain":
        if not other.terms:
            return self
        if not self.terms:
            return other if sign == 1 else -other
        if self.degree != other.degree:
            raise ValueError("cannot add chains of different degree")
        out = dict(self.terms)
        for s, c in other.terms.items():
            out[s] = out.get(s, 0) + sign * c
        return Chain(self.degree, out)

    def __add__(self, other: "Chain") -> "Chain":
        return self._combine(other, 1)

    def __sub__(self, other: "Chain") -> "Chain":
        return self._combine(other, -1)

    def __neg__(self) -> "Chain":
        return Chain(self.degree, {s: -c for s, c in self.terms.items()})

    def __rmul__(self, k: int) -> "Chain":
        return Chain(self.degree, {s: k * c for s, c in self.terms.items()})

    def support(self) -> set[int]:
        return {x for s in self.terms for x in s}

    def coefficient(self, *simplex: int) -> int:
        return self.terms.get(tuple(simplex), 0)


def face(z: Chain, i: int) -> Chain:
    """The face map deleting position ``i`` from every tuple."""
    out: dict[Simplex, int] = {}
    for s, c in z.terms.items():
        t = s[:i] + s[i + 1:]
        out[t] = out.get(t, 0) + c
    return Chain(z.degree - 1, out)


def boundary(z: Chain) -> Chain:
    """Alternating sum of faces, augmented in degree 0; zero in degree -1."""
    if z.degree < 0:
        return Chain(z.degree - 1)
    out: dict[Simplex, int] = {}
    for s, c in z.terms.items():
        for i in range(len(s)):
            t = s[:i] + s[i + 1:]
            out[t] = out.get(t, 0) + (c if i % 2 == 0 else -c)
    return Chain(z.degree - 1, out)


def is_cycle(z: Chain) -> bool:
    return not boundary(z)


def suspension(P: GradedPoset, z: Chain, p: int) -> Chain:
    """Append ``p`` to every tuple; all entries must lie strictly below ``p``."""
    for s in z.terms:
        for x in s:
            if not P.lt(x, p):
                raise SuspensionOutOfRange(f"{s} is not a chain strictly below {p}")
    return Chain(z.degree + 1, {s + (p,): c for s, c in z.terms.items()})


def truncation(z: Chain, p: int) -> Chain:
    """Keep the tuples ending at ``p`` with ``p`` stripped; kill the rest."""
    return Chain(z.degree - 1, {s[:-1]: c for s, c in z.terms.items() if s and s[-1] == p})


# --- cone fill -------------------------------------------------------------------


def _prism(z: Chain, g, h) -> Chain:
    """Prism operator for poset maps ``g <= h``; degenerate tuples dropped."""
    out: dict[Simplex, int] = {}
    for s, c in z.terms.items():
        gs = [g(x) for x in s]
        hs = [h(x) for x in s]
        for i in range(len(s)):
            t = tuple(gs[: i + 1]) + tuple(hs[i:])
            if any(t[j] == t[j + 1] for j in range(len(t) - 1)):
                continue
            out[t] = out.get(t, 0) + (c if i % 2 == 0 else -c)
    return Chain(z.degree + 1, out)


def contractible_part(P: GradedPoset, K: LocalCoveringFamily, q: int) -> set[int]:
    """``P_{<q}`` minus the members of ``K_q`` of dimension ``dim q - 1``."""
    n = P.dims[q]
    return {x for x in P.below(q, strict=True) if not (x in K.K[q] and P.dims[x] == n - 1)}


def cone_fill(P: GradedPoset, K: LocalCoveringFamily, q: int, z: Chain) -> Chain:
    """A chain ``Z2`` on the contractible part of ``P_{<q}`` with ``boundary(Z2) == z``.

    Uses the conical contraction ``x <= f(x) >= c`` where ``f`` is ``eta_q`` on
    ``K_q`` and the identity elsewhere, and ``c = eta_q(bottom)``.
    """
    if not is_cycle(z):
        raise NotACycle("cone_fill needs a cycle")
    region = contractible_part(P, K, q)
    outside = z.support() - region
    if outside:
        raise SupportOutsideI(f"elements {sorted(outside)} are outside the contractible part")
    eta = K.eta[q]
    c = eta[BOTTOM]
    if not z:
        return Chain(z.degree + 1)
    if z.degree == -1:
        return z.terms[()] * Chain.unit(c)

    def f(x):
        return eta.get(x, x) if x in K.K[q] else x

    D = _prism(z, lambda x: x, f) - _prism(z, lambda x: c, f)
    return -D


# --- basis cycles ------------------------------------------------------------------


@dataclass(frozen=True)
class BasisCycle:
    provenance: tuple[int, int] | None  # (r, index in r's basis); None in dimension 0
    chain: Chain


@dataclass(frozen=True)
class BasisCycleRegistry:
    cycles: tuple[tuple[BasisCycle, ...], ...]

    def __getitem__(self, q: int) -> tuple[BasisCycle, ...]:
        return self.cycles[q]

    def count(self, q: int) -> int:
        return len(self.cycles[q])


def basis_cycles(P: GradedPoset, K: LocalCoveringFamily) -> BasisCycleRegistry:
    """Integral cycles whose classes form a basis of each local homology group.

    Built bottom-up: in dimension 0 the generator of the degree -1 group of
    the empty set; in dimension ``n`` one cycle
    ``(-1)^n s_r(z) + cone_fill(q, z)`` per member ``r`` of ``K_q`` of
    dimension ``n-1`` (ascending id) and per registered cycle ``z`` at ``r``.
    """
    cycles: list[tuple[BasisCycle, ...] | None] = [None] * len(P)
    for q in sorted(range(len(P)), key=lambda x: (P.dims[x], x)):
        n = P.dims[q]
        if n == 0:
            cycles[q] = (BasisCycle(None, Chain.empty()),)
            continue
        found = []
        for r in K.members(q, n - 1, P):
            for j, b in enumerate(cycles[r]):
                z = b.chain
                Z = (-1) ** n * suspension(P, z, r) + cone_fill(P, K, q, z)
                found.append(BasisCycle((r, j), Z))
        cycles[q] = tuple(found)
    return BasisCycleRegistry(tuple(cycles))


def coords(P: GradedPoset, K: LocalCoveringFamily, registry: BasisCycleRegistry,
           w: Chain, p: int, check: bool = True) -> list[int]:
    """Coordinates of the class of the cycle ``w`` in the registered basis at ``p``.

    ``w`` is a top-degree cycle of the order complex of ``P_{<p}``, so its class
    is the chain itself; coordinates come from recursive truncation.
    """
    if check and not is_cycle(w):
        raise NotACycle("coords needs a cycle")
    n = P.dims[p]
    if n == 0:
        return [w.terms.get((), 0)]
    sign = -1 if n % 2 else 1
    out: list[int] = []
    for r in K.members(p, n - 1, P):
        out.extend(coords(P, K, registry, sign * truncation(w, r), r, check=False))
    return out
