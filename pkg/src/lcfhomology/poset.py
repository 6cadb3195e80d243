"""Finite graded posets.

Elements are dense integer ids ``0..n-1``.  The augmented bottom element
(dimension -1) is never stored; it is represented by the sentinel
:data:`BOTTOM` wherever an operation needs the augmented poset.

Order relations are kept as Python-int bitsets, one per element, so that
``leq`` is a shift and a mask.
"""
from __future__ import annotations

import enum
import functools
import graphlib
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import CycleDetected, GradingViolation, HasMinimum, InputError

BOTTOM = -1
BOTTOM_LABEL = "0hat"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class GradedPoset:
    """Immutable finite graded poset.

    Build instances with :func:`build_poset`; the constructor assumes its
    arguments are already validated.
    """

    __slots__ = ("dims", "covers", "labels", "_down", "_up", "_lower", "_upper", "_by_dim")

    def __init__(self, dims, covers, labels, down, up):
        self.dims: tuple[int, ...] = tuple(dims)
        self.covers: frozenset[tuple[int, int]] = frozenset(covers)
        self.labels: tuple[str, ...] = tuple(labels)
        self._down: tuple[int, ...] = tuple(down)
        self._up: tuple[int, ...] = tuple(up)
        lower = [[] for _ in self.dims]
        upper = [[] for _ in self.dims]
        for q, p in sorted(self.covers):
            lower[p].append(q)
            upper[q].append(p)
        self._lower = tuple(tuple(x) for x in lower)
        self._upper = tuple(tuple(x) for x in upper)
        by_dim: dict[int, list[int]] = {}
        for i, d in enumerate(self.dims):
            by_dim.setdefault(d, []).append(i)
        self._by_dim = {d: tuple(v) for d, v in by_dim.items()}

    def __len__(self) -> int:
        return len(self.dims)

    def __repr__(self) -> str:
        return f"GradedPoset(n={len(self)}, dim={self.dimension})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedPoset):
            return NotImplemented
        return self.dims == other.dims and self.covers == other.covers

    def __hash__(self) -> int:
        return hash((self.dims, self.covers))

    @property
    def n_elements(self) -> int:
        return len(self.dims)

    @property
    def dimension(self) -> int:
        """Largest element dimension; -1 for the empty poset."""
        return max(self.dims, default=-1)

    def dim(self, x: int) -> int:
        return -1 if x == BOTTOM else self.dims[x]

    def leq(self, a: int, b: int) -> bool:
        if a == BOTTOM:
            return True
        if b == BOTTOM:
            return False
        return bool((self._down[b] >> a) & 1)

    def lt(self, a: int, b: int) -> bool:
        return a != b and self.leq(a, b)

    def down_mask(self, p: int, strict: bool = False) -> int:
        m = self._down[p]
        return m & ~(1 << p) if strict else m

    def up_mask(self, p: int, strict: bool = False) -> int:
        m = self._up[p]
        return m & ~(1 << p) if strict else m

    def below(self, p: int, strict: bool = False) -> list[int]:
        return list(_bits(self.down_mask(p, strict)))

    def above(self, p: int, strict: bool = False) -> list[int]:
        return list(_bits(self.up_mask(p, strict)))

    def lower_covers(self, p: int) -> tuple[int, ...]:
        return self._lower[p]

    def upper_covers(self, p: int) -> tuple[int, ...]:
        return self._upper[p]

    def of_dim(self, d: int) -> tuple[int, ...]:
        return self._by_dim.get(d, ())

    @property
    def atoms(self) -> tuple[int, ...]:
        return self.of_dim(0)

    def maximal(self) -> list[int]:
        return [p for p in range(len(self)) if not self._upper[p]]

    def to_json(self) -> dict:
        return {
            "kind": "poset",
            "dims": list(self.dims),
            "covers": [list(c) for c in sorted(self.covers)],
            "labels": list(self.labels),
        }


def build_poset(dims: Sequence[int], covers: Iterable[Sequence[int]],
                labels: Sequence[str] | None = None) -> GradedPoset:
    """Validate and build a graded poset from dimensions and cover pairs.

    ``covers`` holds ``(child, parent)`` pairs: the parent covers the child.
    Raises CycleDetected, GradingViolation or HasMinimum on bad input.
    """
    dims = [int(d) for d in dims]
    n = len(dims)
    pairs = set()
    for c in covers:
        if len(c) != 2:
            raise InputError(f"cover must be a pair, got {c!r}")
        q, p = int(c[0]), int(c[1])
        if not (0 <= q < n and 0 <= p < n):
            raise InputError(f"cover ({q}, {p}) out of range for {n} elements")
        pairs.add((q, p))
    if labels is None:
        labels = [str(i) for i in range(n)]
    elif len(labels) != n:
        raise InputError("labels must have one entry per element")
    if len(set(labels)) != len(labels):
        raise InputError("labels must be distinct")

    graph: dict[int, set[int]] = {i: set() for i in range(n)}
    for q, p in pairs:
        graph[p].add(q)
    try:
        order = list(graphlib.TopologicalSorter(graph).static_order())
    except graphlib.CycleError as exc:
        raise CycleDetected(f"cover relation has a cycle: {exc.args[1]}") from None

    for q, p in pairs:
        if dims[p] != dims[q] + 1:
            raise GradingViolation(
                f"element {p} covers {q} but dims are {dims[p]} and {dims[q]}")
    for i, d in enumerate(dims):
        if d < 0:
            raise GradingViolation(f"element {i} has negative dimension {d}")
        if not graph[i] and d != 0:
            raise GradingViolation(f"minimal element {i} has dimension {d}, expected 0")

    down = [0] * n
    for p in order:
        m = 1 << p
        for q in graph[p]:
            m |= down[q]
        down[p] = m
    up = [0] * n
    for p in range(n):
        for q in _bits(down[p]):
            up[q] |= 1 << p

    full = (1 << n) - 1
    if n >= 2 and any(up[i] == full for i in range(n)):
        raise HasMinimum("poset has a minimum element")
    return GradedPoset(dims, pairs, labels, down, up)


@dataclass(frozen=True)
class PosetView:
    """An induced subposet together with the original ids of its elements."""

    poset: GradedPoset
    ids: tuple[int, ...]

    def local(self, original: int) -> int:
        return self.ids.index(original)


def induced_subposet(P: GradedPoset, elements: Iterable[int]) -> PosetView:
    ids = tuple(sorted(set(elements)))
    index = {e: i for i, e in enumerate(ids)}
    covers = [(index[q], index[p]) for q, p in P.covers if q in index and p in index]
    dims = [P.dims[e] for e in ids]
    labels = [P.labels[e] for e in ids]
    down = []
    for e in ids:
        m = 0
        for x in _bits(P.down_mask(e)):
            if x in index:
                m |= 1 << index[x]
        down.append(m)
    up = [0] * len(ids)
    for i, m in enumerate(down):
        for j in _bits(m):
            up[j] |= 1 << i
    return PosetView(GradedPoset(dims, covers, labels, down, up), ids)


def down_set(P: GradedPoset, p: int, strict: bool = False) -> PosetView:
    """The subposet ``{r | r <= p}`` (``r < p`` when strict)."""
    return induced_subposet(P, P.below(p, strict))


def join(P: GradedPoset, a: int, b: int, within: int | None = None) -> int | None:
    """Least upper bound of ``a`` and ``b``, or None if there is none.

    With ``within`` set, the join is taken inside the down-set of that
    element.
    """
    if a == BOTTOM:
        return b
    if b == BOTTOM:
        return a
    common = P.up_mask(a) & P.up_mask(b)
    if within is not None:
        common &= P.down_mask(within)
    for m in _bits(common):
        if common & ~P.up_mask(m) == 0:
            return m
    return None


@dataclass
class AtomModularityReport:
    violations: list[tuple[int, int, int, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def is_atom_modular(P: GradedPoset) -> AtomModularityReport:
    """Check local atom-modularity on every down-set ``P_{<=p}``.

    Violations are ``(p, atom, q, reason)`` tuples.
    """
    report = AtomModularityReport()
    for p in range(len(P)):
        below = P.below(p)
        for a in below:
            if P.dims[a] != 0:
                continue
            for q in below:
                if P.leq(a, q):
                    continue
                j = join(P, a, q, within=p)
                if j is None:
                    report.violations.append((p, a, q, "no join"))
                elif P.dims[j] != P.dims[q] + 1:
                    report.violations.append((p, a, q, f"join {j} has wrong dimension"))
    return report


# --- local type classification -------------------------------------------------


class LocalKind(enum.Enum):
    SIMPLICIAL = "LocallySimplicial"
    P_QUILLEN = "LocallyPQuillen"
    ATOM_MODULAR_ONLY = "LocallyAtomModularOnly"
    OTHER = "Other"


@dataclass(frozen=True)
class LocalType:
    kind: LocalKind
    prime: int | None = None

    def __str__(self) -> str:
        if self.kind is LocalKind.P_QUILLEN:
            return f"{self.kind.value}({self.prime})"
        return self.kind.value


def _poset_from_sets(sets: list[frozenset]) -> GradedPoset:
    """Inclusion poset on the given sets; graded by position in a chain."""
    sets = sorted(sets, key=lambda s: (len(s), sorted(s)))
    n = len(sets)
    down = [0] * n
    for i, s in enumerate(sets):
        for j, t in enumerate(sets):
            if t <= s:
                down[i] |= 1 << j
    dims = [0] * n
    for i in range(n):
        dims[i] = max((dims[j] + 1 for j in _bits(down[i] & ~(1 << i))), default=0)
    covers = []
    for i in range(n):
        for j in _bits(down[i] & ~(1 << i)):
            if dims[j] == dims[i] - 1:
                covers.append((j, i))
    up = [0] * n
    for i in range(n):
        for j in _bits(down[i]):
            up[j] |= 1 << i
    labels = ["{" + ",".join(map(str, sorted(s))) + "}" for s in sets]
    return GradedPoset(dims, covers, labels, down, up)


@functools.lru_cache(maxsize=None)
def boolean_model(d: int) -> GradedPoset:
    """Face poset of the d-simplex (Boolean lattice B_{d+1} minus bottom)."""
    verts = range(d + 1)
    sets = [frozenset(c) for k in range(1, d + 2) for c in itertools.combinations(verts, k)]
    return _poset_from_sets(sets)


def _span(vectors: Iterable[tuple[int, ...]], q: int, k: int) -> frozenset:
    span = {(0,) * k}
    for v in vectors:
        span = {tuple((s[i] + c * v[i]) % q for i in range(k)) for s in span for c in range(q)}
    return frozenset(span)


@functools.lru_cache(maxsize=None)
def subspace_model(q: int, k: int) -> GradedPoset:
    """Non-zero subspaces of F_q^k, i.e. A_q(C_q^k)."""
    vectors = [v for v in itertools.product(range(q), repeat=k) if any(v)]
    level = {_span([v], q, k) for v in vectors}
    found = set(level)
    while level:
        nxt = set()
        for S in level:
            for v in vectors:
                if v not in S:
                    nxt.add(_span(list(S) + [v], q, k))
        nxt -= found
        found |= nxt
        level = nxt
    return _poset_from_sets([S - {(0,) * k} for S in found])


def _signature(P: GradedPoset, x: int) -> tuple[int, int, int]:
    return (P.dims[x], len(P.lower_covers(x)), len(P.upper_covers(x)))


def is_isomorphic(P: GradedPoset, Q: GradedPoset) -> bool:
    """Graded poset isomorphism by invariant screening and backtracking."""
    if len(P) != len(Q) or len(P.covers) != len(Q.covers):
        return False
    sig_p = sorted(_signature(P, x) for x in range(len(P)))
    sig_q = sorted(_signature(Q, y) for y in range(len(Q)))
    if sig_p != sig_q:
        return False
    order = sorted(range(len(P)), key=lambda x: (P.dims[x], x))
    cands = {x: [y for y in range(len(Q)) if _signature(Q, y) == _signature(P, x)] for x in order}
    image: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        x = order[i]
        for y in cands[x]:
            if y in used:
                continue
            lower_q = set(Q.lower_covers(y))
            if all(image[c] in lower_q for c in P.lower_covers(x)):
                image[x] = y
                used.add(y)
                if extend(i + 1):
                    return True
                del image[x]
                used.discard(y)
        return False

    # Lower covers map injectively into lower covers of equal count, and the
    # total cover counts agree, so a complete assignment is an isomorphism.
    return extend(0)


def _atom_count(P: GradedPoset, p: int) -> int:
    return sum(1 for a in P.below(p) if P.dims[a] == 0)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % f for f in range(2, int(n ** 0.5) + 1))


def classify_local_type(P: GradedPoset, p_hint: int | None = None) -> LocalType:
    """Strongest local type shared by every down-set of ``P``.

    Zero-dimensional down-sets are both simplicial and p-Quillen, so a poset
    of dimension 0 classifies as simplicial unless ``p_hint`` is given.
    """
    views = [down_set(P, p).poset for p in range(len(P))]

    def all_quillen(q: int) -> bool:
        return all(is_isomorphic(v, subspace_model(q, P.dims[p] + 1)) for p, v in enumerate(views))

    if p_hint is not None and _is_prime(p_hint) and all_quillen(p_hint):
        return LocalType(LocalKind.P_QUILLEN, p_hint)
    if all(is_isomorphic(v, boolean_model(P.dims[p])) for p, v in enumerate(views)):
        return LocalType(LocalKind.SIMPLICIAL)
    primes = {_atom_count(P, p) - 1 for p in P.of_dim(1)}
    if len(primes) == 1:
        q = primes.pop()
        if _is_prime(q) and all_quillen(q):
            return LocalType(LocalKind.P_QUILLEN, q)
    if is_atom_modular(P).ok:
        return LocalType(LocalKind.ATOM_MODULAR_ONLY)
    return LocalType(LocalKind.OTHER)
