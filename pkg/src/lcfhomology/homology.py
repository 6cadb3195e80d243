"""Homology of integer chain complexes over the supported coefficient rings."""
from __future__ import annotations

import math
from dataclasses import dataclass

from . import kernels
from ._pykernels import _divisibility_chain
from .builders import PermutationGroup, chains, quillen_poset
from .complexes import FreeChainComplex
from .errors import InputError, NotAComplex
from .poset import _is_prime


@dataclass(frozen=True)
class CoefficientRing:
    """``kind`` is one of ``"Z"``, ``"Q"``, ``"Fp"``, ``"Zmod"``."""

    kind: str
    modulus: int = 0

    def __post_init__(self):
        if self.kind == "Fp" and not _is_prime(self.modulus):
            raise InputError(f"F_p needs a prime, got {self.modulus}")
        if self.kind == "Zmod" and self.modulus < 2:
            raise InputError(f"Z/m needs m >= 2, got {self.modulus}")
        if self.kind not in ("Z", "Q", "Fp", "Zmod"):
            raise InputError(f"unknown ring kind {self.kind!r}")

    @classmethod
    def parse(cls, text: str) -> "CoefficientRing":
        """Parse ``z``, ``q``, ``fp:<p>`` or ``zmod:<m>``."""
        t = text.strip().lower()
        if t == "z":
            return cls("Z")
        if t == "q":
            return cls("Q")
        head, _, arg = t.partition(":")
        try:
            value = int(arg)
        except ValueError:
            raise InputError(f"bad ring selector {text!r}") from None
        if head == "fp":
            return cls("Fp", value)
        if head == "zmod":
            return cls("Zmod", value)
        raise InputError(f"bad ring selector {text!r}")

    def __str__(self) -> str:
        return {"Z": "z", "Q": "q"}.get(self.kind) or f"{self.kind.lower()}:{self.modulus}"


ZZ = CoefficientRing("Z")
QQ = CoefficientRing("Q")


def smith_normal_form(M) -> tuple[list[int], int]:
    """Non-zero invariant factors ``d_1 | d_2 | ...`` and the rank."""
    rows = [list(map(int, r)) for r in M]
    if not rows or not rows[0]:
        return [], 0
    factors = kernels.smith_diagonal(rows)
    return factors, len(factors)


@dataclass(frozen=True)
class DegreeGroup:
    rank: int
    torsion: tuple[int, ...] = ()

    def is_zero(self) -> bool:
        return self.rank == 0 and not self.torsion

    def to_json(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion)}


class Homology:
    """Per-degree homology; degrees with zero homology compare equal to absent ones."""

    def __init__(self, groups: dict[int, DegreeGroup], ring: CoefficientRing):
        self.groups = dict(sorted(groups.items()))
        self.ring = ring

    def __getitem__(self, n: int) -> DegreeGroup:
        return self.groups.get(n, DegreeGroup(0))

    def nonzero(self) -> dict[int, DegreeGroup]:
        return {n: g for n, g in self.groups.items() if not g.is_zero()}

    def __eq__(self, other) -> bool:
        if not isinstance(other, Homology):
            return NotImplemented
        return self.ring == other.ring and self.nonzero() == other.nonzero()

    def __repr__(self) -> str:
        parts = [f"H{n}: rank {g.rank} torsion {list(g.torsion)}" for n, g in self.nonzero().items()]
        return f"Homology[{self.ring}]({'; '.join(parts) or 'zero'})"

    def is_zero(self) -> bool:
        return not self.nonzero()

    def to_json(self) -> dict:
        return {str(n): g.to_json() for n, g in self.groups.items()}


def _field_rank(M, ring: CoefficientRing) -> int:
    if M.size == 0:
        return 0
    if ring.kind == "Fp":
        return kernels.rank_mod_p(M, ring.modulus)
    return kernels.rank_rational(M.tolist())


def _cyclic_to_invariant(orders: list[int]) -> list[int]:
    return _divisibility_chain([g for g in orders if g != 1])


def homology(C: FreeChainComplex, ring: CoefficientRing = ZZ) -> Homology:
    """Homology of ``C`` tensored with ``ring``.

    Fields use exact elimination.  Over the integers the Smith form gives ranks
    and torsion; over ``Z/m`` the integer Smith forms are reduced through the
    universal coefficient theorem and each degree is reported as the number
    of ``Z/m`` summands plus the proper invariant factors.
    """
    if not C.square_zero():
        raise NotAComplex("d o d != 0")
    degrees = C.degrees
    if not degrees:
        return Homology({}, ring)
    if ring.kind in ("Fp", "Q"):
        rk = {n: _field_rank(C.matrix(n), ring) for n in range(degrees[0], degrees[-1] + 2)}
        groups = {n: DegreeGroup(C.rank(n) - rk[n] - rk[n + 1]) for n in degrees}
        return Homology(groups, ring)

    snf = {n: smith_normal_form(C.matrix(n).tolist())[0] for n in range(degrees[0], degrees[-1] + 2)}
    betti = {n: C.rank(n) - len(snf[n]) - len(snf[n + 1]) for n in degrees}
    tors = {n: [d for d in snf[n + 1] if d > 1] for n in degrees}
    if ring.kind == "Z":
        return Homology({n: DegreeGroup(betti[n], tuple(tors[n])) for n in degrees}, ring)

    m = ring.modulus
    groups = {}
    for n in degrees:
        cyclic = [m] * betti[n]
        cyclic += [math.gcd(d, m) for d in tors[n]]
        cyclic += [math.gcd(d, m) for d in tors.get(n - 1, [])]
        inv = _cyclic_to_invariant(cyclic)
        groups[n] = DegreeGroup(sum(1 for g in inv if g == m), tuple(g for g in inv if g != m))
    return Homology(groups, ring)


def euler_characteristic(C: FreeChainComplex) -> int:
    return sum((-1) ** n * r for n, r in C.ranks.items())


def quillen_euler(G: PermutationGroup, p: int) -> tuple[int, int]:
    """Closed-form Euler characteristic of ``A_p(G)`` and the chain-count value.

    The first number sums ``(-1)^n p^{n(n+1)/2}`` times the number of rank
    ``n+1`` subgroups; the second is the alternating count of chains in the
    poset.  They agree.
    """
    P, _ = quillen_poset(G, p)
    formula = sum((-1) ** n * p ** (n * (n + 1) // 2) * len(P.of_dim(n))
                  for n in range(P.dimension + 1))
    oracle = sum((-1) ** (len(c) - 1) for c in chains(P))
    return formula, oracle
