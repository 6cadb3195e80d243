"""Front-ends that turn simplicial complexes and permutation groups into
graded posets with their canonical covering families, plus the order complex
used by the oracle."""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import GroupTooLarge, InputError, NotAPermutation, NotDownClosed, NotPrime
from .family import LocalCoveringFamily, _check_order
from .poset import BOTTOM, GradedPoset, _bits, _is_prime, build_poset

DEFAULT_ELEMENT_CAP = 10000


# --- simplicial complexes -----------------------------------------------------


@dataclass(frozen=True)
class SimplicialComplex:
    """Finite abstract simplicial complex.

    Simplices are stored as sorted tuples of vertex *indices* (positions in
    ``vertices``); the vertex order is the input order.
    """

    vertices: tuple[str, ...]
    simplices: frozenset[tuple[int, ...]]

    def __post_init__(self):
        for s in self.simplices:
            if not s:
                raise NotDownClosed("the empty set is not a simplex")
            if list(s) != sorted(set(s)):
                raise InputError(f"simplex {s} is not a sorted tuple of distinct indices")
            if s[-1] >= len(self.vertices) or s[0] < 0:
                raise InputError(f"simplex {s} uses an unknown vertex")
            for k in range(1, len(s)):
                for face in itertools.combinations(s, k):
                    if face not in self.simplices:
                        raise NotDownClosed(f"face {face} of {s} is missing")
        for v in range(len(self.vertices)):
            if (v,) not in self.simplices:
                raise NotDownClosed(f"vertex {self.vertices[v]!r} is not a 0-simplex")

    @classmethod
    def from_facets(cls, vertices: Sequence, facets: Iterable[Sequence]) -> "SimplicialComplex":
        """Closure of the given facets; facets name vertices by label."""
        vertices = tuple(str(v) for v in vertices)
        if len(set(vertices)) != len(vertices):
            raise InputError("vertex labels must be distinct")
        index = {v: i for i, v in enumerate(vertices)}
        simplices = {(i,) for i in range(len(vertices))}
        for f in facets:
            try:
                idx = sorted({index[str(v)] for v in f})
            except KeyError as exc:
                raise InputError(f"facet {f!r} uses unknown vertex {exc.args[0]!r}") from None
            for k in range(1, len(idx) + 1):
                simplices.update(itertools.combinations(idx, k))
        return cls(vertices, frozenset(simplices))

    @property
    def dimension(self) -> int:
        return max((len(s) - 1 for s in self.simplices), default=-1)

    def sorted_simplices(self, d: int) -> list[tuple[int, ...]]:
        return sorted(s for s in self.simplices if len(s) == d + 1)

    def f_vector(self) -> list[int]:
        return [len(self.sorted_simplices(d)) for d in range(self.dimension + 1)]

    def label(self, s: tuple[int, ...]) -> str:
        return "".join(self.vertices[i] for i in s) if all(
            len(v) == 1 for v in self.vertices) else "{" + ",".join(self.vertices[i] for i in s) + "}"

    def to_json(self) -> dict:
        facets = [s for s in self.simplices
                  if not any(len(t) == len(s) + 1 and set(s) < set(t) for t in self.simplices)]
        return {"kind": "complex", "vertices": list(self.vertices),
                "facets": [[self.vertices[i] for i in s] for s in sorted(facets)]}


def face_poset(D: SimplicialComplex) -> tuple[GradedPoset, LocalCoveringFamily]:
    """Face poset graded by ``|s| - 1`` with the vertex-order covering family.

    Element ids follow ``(dimension, vertex tuple)`` order.
    """
    faces = sorted(D.simplices, key=lambda s: (len(s), s))
    index = {s: i for i, s in enumerate(faces)}
    covers = []
    for s in faces:
        if len(s) > 1:
            for i in range(len(s)):
                covers.append((index[s[:i] + s[i + 1:]], index[s]))
    P = build_poset([len(s) - 1 for s in faces], covers, [D.label(s) for s in faces])

    def elem(t):
        return BOTTOM if not t else index[t]

    K, eta = [], []
    for s in faces:
        star = s[0]
        rest = s[1:]
        members = {}
        for k in range(len(rest) + 1):  # subsets of s avoiding its first vertex
            for t in itertools.combinations(rest, k):
                members[elem(t)] = index[tuple(sorted((star,) + t))]
        K.append(frozenset(members))
        eta.append(members)
    return P, LocalCoveringFamily(tuple(K), tuple(eta))


def chains(P: GradedPoset) -> list[tuple[int, ...]]:
    """All non-empty chains of ``P`` as tuples increasing in the order."""
    out = []
    stack = [(p,) for p in range(len(P))]
    while stack:
        c = stack.pop()
        out.append(c)
        for q in _bits(P.up_mask(c[-1], strict=True)):
            stack.append(c + (q,))
    out.sort(key=lambda c: (len(c), c))
    return out


def linear_extension(P: GradedPoset) -> list[int]:
    return sorted(range(len(P)), key=lambda p: (P.dims[p], p))


def order_complex(P: GradedPoset) -> SimplicialComplex:
    """Simplicial complex of chains of ``P``.

    Vertices are listed along a linear extension, so each simplex's sorted
    index tuple is its chain read bottom to top.
    """
    ext = linear_extension(P)
    pos = {p: i for i, p in enumerate(ext)}
    simplices = frozenset(tuple(pos[p] for p in c) for c in chains(P))
    return SimplicialComplex(tuple(P.labels[p] for p in ext), simplices)


# --- permutation groups -------------------------------------------------------


Perm = tuple[int, ...]


def compose(a: Perm, b: Perm) -> Perm:
    """``a o b``: apply ``b`` first."""
    return tuple(a[i] for i in b)


def perm_from_cycles(degree: int, cycles: Iterable[Sequence[int]]) -> list[int]:
    img = list(range(degree))
    for cyc in cycles:
        for i, x in enumerate(cyc):
            img[x] = cyc[(i + 1) % len(cyc)]
    return img


@dataclass(frozen=True)
class PermutationGroup:
    degree: int
    generators: tuple[Perm, ...]
    elements: tuple[Perm, ...]

    def __post_init__(self):
        object.__setattr__(self, "_index", {g: i for i, g in enumerate(self.elements)})

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> int:
        return self._index[tuple(range(self.degree))]

    def index(self, g: Perm) -> int:
        return self._index[g]

    def mul(self, i: int, j: int) -> int:
        return self._index[compose(self.elements[i], self.elements[j])]

    def power_order(self, i: int) -> int:
        e, x, k = self.identity, i, 1
        while x != e:
            x = self.mul(x, i)
            k += 1
        return k


def group_from_generators(degree: int, generators: Iterable[Sequence[int]],
                          element_cap: int = DEFAULT_ELEMENT_CAP) -> PermutationGroup:
    """Enumerate the group generated by permutations given as image lists.

    Elements are listed in breadth-first discovery order starting from the
    identity, right-multiplying by generators in input order.
    """
    gens = []
    for g in generators:
        g = tuple(int(x) for x in g)
        if len(g) != degree or sorted(g) != list(range(degree)):
            raise NotAPermutation(f"{list(g)} is not a permutation of 0..{degree - 1}")
        gens.append(g)
    ident = tuple(range(degree))
    seen = {ident: 0}
    elements = [ident]
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = compose(x, g)
            if y not in seen:
                if len(elements) >= element_cap:
                    raise GroupTooLarge(f"group has more than {element_cap} elements")
                seen[y] = len(elements)
                elements.append(y)
                queue.append(y)
    return PermutationGroup(degree, tuple(gens), tuple(elements))


Subgroup = frozenset  # of element indices


def _generated(G: PermutationGroup, base: Subgroup, x: int) -> Subgroup:
    # x commutes with base and has prime order, so <base, x> = base * <x>
    members = set(base)
    power = x
    while power not in base:
        members.update(G.mul(b, power) for b in base)
        power = G.mul(power, x)
    return frozenset(members)


def _sort_key(H: Subgroup):
    return (len(H), sorted(H))


def elementary_abelian_subgroups(G: PermutationGroup, p: int) -> list[list[Subgroup]]:
    """Non-trivial elementary abelian p-subgroups, grouped by rank.

    Entry ``k`` holds the subgroups of rank ``k + 1``, each a frozenset of
    element indices, sorted by their member lists.
    """
    if not _is_prime(p):
        raise NotPrime(f"{p} is not prime")
    e = G.identity
    order_p = [i for i in range(G.order) if i != e and G.power_order(i) == p]
    level = sorted({_generated(G, frozenset([e]), x) for x in order_p}, key=_sort_key)
    ranks = []
    while level:
        ranks.append(level)
        nxt = set()
        for V in level:
            for x in order_p:
                if x in V:
                    continue
                if all(G.mul(x, v) == G.mul(v, x) for v in V):
                    nxt.add(_generated(G, V, x))
        level = sorted(nxt, key=_sort_key)
    return ranks


def quillen_poset(G: PermutationGroup, p: int, order: Sequence[int] | None = None,
                  ) -> tuple[GradedPoset, LocalCoveringFamily]:
    """``A_p(G)`` graded by ``rank - 1`` with its covering family.

    ``order`` ranks the rank-1 subgroups (element ids of dimension 0); the
    default is ascending id.  The family is built from subgroup generation
    rather than generic joins.
    """
    ranks = elementary_abelian_subgroups(G, p)
    subgroups = [H for level in ranks for H in level]
    dims = [k for k, level in enumerate(ranks) for _ in level]
    index = {H: i for i, H in enumerate(subgroups)}
    covers = [(index[I], index[H])
              for I in subgroups for H in subgroups
              if len(H) == p * len(I) and I < H]
    labels = [f"E{dims[i] + 1}_{i}" for i in range(len(subgroups))]
    P = build_poset(dims, covers, labels)
    rank = _check_order(P, list(P.atoms) if order is None else order)

    trivial = frozenset([G.identity])
    K, eta = [], []
    for h, H in enumerate(subgroups):
        star = min((a for a in P.atoms if subgroups[a] <= H), key=rank.__getitem__)
        H_star = subgroups[star]
        gen = next(iter(H_star - trivial))
        members = {}
        for I in [trivial] + [subgroups[i] for i in P.below(h)]:
            if H_star <= I:
                continue
            members[BOTTOM if I == trivial else index[I]] = index[_generated(G, I, gen)]
        K.append(frozenset(members))
        eta.append(members)
    return P, LocalCoveringFamily(tuple(K), tuple(eta))
