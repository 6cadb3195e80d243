"""Free chain complexes: the simplicial/order-complex oracle and the reduced
complex built from a covering family."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .builders import SimplicialComplex, order_complex
from .chains import BasisCycleRegistry, basis_cycles, coords, truncation
from .family import LocalCoveringFamily
from .poset import GradedPoset


@dataclass
class FreeChainComplex:
    """Integer chain complex on free modules.

    ``differentials[n]`` is the matrix of ``C_n -> C_{n-1}`` with shape
    ``(ranks[n-1], ranks[n])``.  Degrees without an entry are zero.
    """

    ranks: dict[int, int]
    differentials: dict[int, np.ndarray]
    basis_labels: dict[int, list] = field(default_factory=dict)

    @property
    def degrees(self) -> list[int]:
        return sorted(d for d, r in self.ranks.items())

    def rank(self, n: int) -> int:
        return self.ranks.get(n, 0)

    def matrix(self, n: int) -> np.ndarray:
        """``d_n``, a zero matrix of the right shape when not stored."""
        if n in self.differentials:
            return self.differentials[n]
        return np.zeros((self.rank(n - 1), self.rank(n)), dtype=np.int64)

    def square_zero(self) -> bool:
        for n in self.differentials:
            if n - 1 in self.differentials:
                a = self.differentials[n - 1].astype(object)
                b = self.differentials[n].astype(object)
                if a.size and b.size and np.any(a.dot(b) != 0):
                    return False
        return True

    def total_rank(self) -> int:
        return sum(self.ranks.values())


def simplicial_chain_complex(D: SimplicialComplex, reduced: bool = False) -> FreeChainComplex:
    """Ordered simplicial chain complex; each degree's basis is sorted simplices."""
    ranks, diffs, labels = {}, {}, {}
    top = D.dimension
    basis = {d: D.sorted_simplices(d) for d in range(top + 1)}
    for d in range(top + 1):
        ranks[d] = len(basis[d])
        labels[d] = basis[d]
    for d in range(1, top + 1):
        row_of = {s: i for i, s in enumerate(basis[d - 1])}
        M = np.zeros((ranks[d - 1], ranks[d]), dtype=np.int64)
        for j, s in enumerate(basis[d]):
            for i in range(len(s)):
                M[row_of[s[:i] + s[i + 1:]], j] += -1 if i % 2 else 1
        diffs[d] = M
    if reduced:
        ranks[-1] = 1
        labels[-1] = [()]
        if ranks.get(0):
            diffs[0] = np.ones((1, ranks[0]), dtype=np.int64)
    return FreeChainComplex(ranks, diffs, labels)


def oracle_complex(P: GradedPoset, reduced: bool = False) -> FreeChainComplex:
    """Chain complex of the order complex of ``P``."""
    return simplicial_chain_complex(order_complex(P), reduced)


def reduced_complex(P: GradedPoset, K: LocalCoveringFamily, reduced: bool = False,
                    registry: BasisCycleRegistry | None = None) -> FreeChainComplex:
    """The small complex with one generator per registered basis cycle.

    Degree ``n`` is spanned by pairs ``(p, i)`` for ``p`` of dimension ``n``
    (ascending id) and ``i`` indexing the basis cycles at ``p``.  The column
    of ``(q, i)`` holds, in the block of each lower cover ``p`` of ``q``, the
    vector ``(-1)^n coords(t_p(Z))``.
    """
    if registry is None:
        registry = basis_cycles(P, K)
    top = P.dimension
    ranks, diffs, labels = {}, {}, {}
    offset: dict[int, int] = {}
    for n in range(top + 1):
        lab = []
        for p in P.of_dim(n):
            offset[p] = len(lab)
            lab.extend((p, i) for i in range(registry.count(p)))
        ranks[n] = len(lab)
        labels[n] = lab
    for n in range(1, top + 1):
        sign = -1 if n % 2 else 1
        M = np.zeros((ranks[n - 1], ranks[n]), dtype=np.int64)
        for col, (q, i) in enumerate(labels[n]):
            Z = registry[q][i].chain
            for p in P.lower_covers(q):
                vec = coords(P, K, registry, truncation(Z, p), p)
                for k, v in enumerate(vec):
                    if v:
                        M[offset[p] + k, col] = sign * v
        diffs[n] = M
    if reduced:
        ranks[-1] = 1
        labels[-1] = [()]
        if ranks.get(0):
            diffs[0] = np.ones((1, ranks[0]), dtype=np.int64)
    return FreeChainComplex(ranks, diffs, labels)
