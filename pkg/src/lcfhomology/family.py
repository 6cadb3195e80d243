"""Local covering families: construction, axiom checks and rank counts."""
from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import InputError, InvalidFamily, NotAtomModular
from .poset import BOTTOM, BOTTOM_LABEL, GradedPoset, join


@dataclass(frozen=True)
class LocalCoveringFamily:
    """Per-element subsets ``K[p]`` of the augmented down-set and maps ``eta[p]``.

    ``K[p]`` is a frozenset of element ids, with :data:`BOTTOM` standing for
    the augmented bottom element.  ``eta[p]`` maps every member of ``K[p]`` to
    an element of the down-set of ``p``.
    """

    K: tuple[frozenset[int], ...]
    eta: tuple[Mapping[int, int], ...]

    def members(self, p: int, d: int, P: GradedPoset) -> list[int]:
        """Members of ``K[p]`` of dimension ``d``, ascending id."""
        return sorted(x for x in self.K[p] if P.dim(x) == d)

    def apex(self, p: int) -> int:
        return self.eta[p][BOTTOM]

    def to_json(self, P: GradedPoset) -> dict:
        def lab(x):
            return BOTTOM_LABEL if x == BOTTOM else P.labels[x]
        out = {}
        for p in range(len(P)):
            out[P.labels[p]] = {
                "K": [lab(x) for x in sorted(self.K[p])],
                "eta": {lab(x): lab(y) for x, y in sorted(self.eta[p].items())},
            }
        return out

    @classmethod
    def from_json(cls, P: GradedPoset, data: Mapping) -> "LocalCoveringFamily":
        index = {lab: i for i, lab in enumerate(P.labels)}
        index[BOTTOM_LABEL] = BOTTOM

        def look(lab):
            try:
                return index[str(lab)]
            except KeyError:
                raise InputError(f"unknown element label {lab!r} in family") from None

        K, eta = [], []
        for p in range(len(P)):
            entry = data.get(P.labels[p])
            if entry is None:
                raise InputError(f"family has no entry for element {P.labels[p]!r}")
            K.append(frozenset(look(x) for x in entry.get("K", [])))
            eta.append({look(x): look(y) for x, y in entry.get("eta", {}).items()})
        return cls(tuple(K), tuple(eta))


def default_atom_order(P: GradedPoset) -> list[int]:
    return list(P.atoms)


def _check_order(P: GradedPoset, order: Sequence[int]) -> dict[int, int]:
    if sorted(order) != sorted(P.atoms):
        raise InputError("atom order must be a permutation of the dimension-0 elements")
    return {a: i for i, a in enumerate(order)}


def min_atom(P: GradedPoset, p: int, rank: Mapping[int, int]) -> int:
    return min((a for a in P.below(p) if P.dims[a] == 0), key=rank.__getitem__)


def build_atom_modular_lcf(P: GradedPoset, order: Sequence[int] | None = None) -> LocalCoveringFamily:
    """The covering family ``K_p = {r <= p : p* not<= r}``, ``eta_p(r) = p* v r``.

    ``p*`` is the first atom below ``p`` in ``order`` (ascending id by default).
    Joins are taken inside the down-set of ``p``.
    """
    rank = _check_order(P, default_atom_order(P) if order is None else order)
    K, eta = [], []
    for p in range(len(P)):
        star = min_atom(P, p, rank)
        members = [BOTTOM] + [r for r in P.below(p) if not P.leq(star, r)]
        e = {}
        for r in members:
            j = join(P, star, r, within=p)
            if j is None or P.dims[j] != P.dim(r) + 1:
                raise NotAtomModular(
                    f"join of atom {P.labels[star]} and {P.labels[r]} below {P.labels[p]} "
                    "is missing or has the wrong dimension")
            e[r] = j
        K.append(frozenset(members))
        eta.append(e)
    return LocalCoveringFamily(tuple(K), tuple(eta))


@dataclass
class FamilyReport:
    """Violations as ``(condition, witnesses)``; condition 0 is domain/range."""

    violations: list[tuple[int, tuple]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def conditions(self) -> set[int]:
        return {c for c, _ in self.violations}


def validate_lcf(P: GradedPoset, K: LocalCoveringFamily) -> FamilyReport:
    """Exhaustively check the five covering-family axioms for every element."""
    rep = FamilyReport()
    bad = rep.violations
    if len(K.K) != len(P) or len(K.eta) != len(P):
        bad.append((0, ("family size does not match poset",)))
        return rep
    for p in range(len(P)):
        Kp, ep = K.K[p], K.eta[p]
        hat_down = [BOTTOM] + P.below(p)
        for x in Kp:
            if not P.leq(x, p):
                bad.append((0, (p, x, "member not below p")))
            if x not in ep:
                bad.append((0, (p, x, "eta undefined")))
        for x, y in ep.items():
            if x not in Kp:
                bad.append((0, (p, x, "eta defined outside K_p")))
            elif not P.leq(y, p) or y in Kp:
                bad.append((0, (p, x, y, "eta value outside down-set minus K_p")))
        # (1)
        if BOTTOM not in Kp:
            bad.append((1, (p,)))
        # (2)
        for q in sorted(Kp):
            if q in ep:
                y = ep[q]
                if not (P.lt(q, y) and P.dim(y) == P.dim(q) + 1):
                    bad.append((2, (p, q, y)))
        # (3)
        if BOTTOM in ep:
            for q in P.below(p):
                if q in Kp:
                    continue
                if BOTTOM not in K.eta[q] or K.eta[q][BOTTOM] != ep[BOTTOM]:
                    bad.append((3, (q, p)))
        # (4)
        for q in sorted(Kp):
            for r in sorted(Kp):
                if q != r and P.leq(q, r) and q in ep and r in ep:
                    if not P.leq(ep[q], ep[r]):
                        bad.append((4, (p, q, r)))
        # (5)
        for q in sorted(Kp):
            if q not in ep:
                continue
            for r in hat_down:
                if r not in Kp and P.leq(q, r) and not P.leq(ep[q], r):
                    bad.append((5, (p, q, r)))
    return rep


def require_valid(P: GradedPoset, K: LocalCoveringFamily) -> None:
    rep = validate_lcf(P, K)
    if not rep.ok:
        cond, wit = rep.violations[0]
        raise InvalidFamily(f"covering family violates condition {cond} at {wit}")


def k_numbers(P: GradedPoset, K: LocalCoveringFamily) -> dict[tuple[int, int], int]:
    """All ``K^p_n`` for ``0 <= n <= dim p``, via the recursion on ``K_p``."""

    @functools.lru_cache(maxsize=None)
    def k(p: int, n: int) -> int:
        if n == 0:
            return 1
        if n > P.dims[p]:
            return 0
        return sum(k(q, n - 1) for q in K.K[p] if q != BOTTOM and P.dims[q] == n - 1)

    return {(p, n): k(p, n) for p in range(len(P)) for n in range(P.dims[p] + 1)}


def top_k(P: GradedPoset, K: LocalCoveringFamily) -> list[int]:
    """``K^p_{dim p}`` per element."""
    table = k_numbers(P, K)
    return [table[p, P.dims[p]] for p in range(len(P))]


def sphere_chain_count(P: GradedPoset, K: LocalCoveringFamily, p: int) -> int:
    """Count saturated chains ``p_0 < ... < p_n = p`` with ``p_i`` in ``K[p_{i+1}]``.

    Walks explicit chains down the cover graph and filters them afterwards;
    deliberately shares no code with :func:`k_numbers`.
    """
    total = 0
    stack = [(p,)]
    while stack:
        chain = stack.pop()
        top = chain[0]
        if P.dims[top] == 0:
            if all(chain[i] in K.K[chain[i + 1]] for i in range(len(chain) - 1)):
                total += 1
            continue
        stack.extend((q,) + chain for q in P.lower_covers(top))
    return total
