"""Derived reports: free objects and the free-object bound, local sphericity,
and how much smaller the reduced complex is than the order complex."""
from __future__ import annotations

from collections import Counter
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .builders import chains
from .complexes import oracle_complex, reduced_complex
from .errors import NotLocallyPQuillen
from .family import LocalCoveringFamily, build_atom_modular_lcf, require_valid, top_k
from .homology import ZZ, CoefficientRing, Homology, homology
from .poset import GradedPoset, LocalKind, classify_local_type, down_set


def _frac(x: Fraction | None):
    return None if x is None else f"{x.numerator}/{x.denominator}"


@dataclass
class FreeObjectReport:
    N: int
    free_count: int
    p_double_prime: int
    n_counts: dict[int, int]
    edge_count: int
    definitions_agree: bool
    prime: int | None = None
    applicable: bool = True
    ratio: Fraction | None = None
    bound: Fraction | None = None
    edge_count_expected: int | None = None
    top_homology_zero: bool | None = None
    bound_holds: bool | None = None

    def to_json(self) -> dict:
        out = asdict(self)
        out["ratio"] = _frac(self.ratio)
        out["bound"] = _frac(self.bound)
        out["n_counts"] = {str(k): v for k, v in sorted(self.n_counts.items())}
        return out


def free_bound(p: int, N: int) -> Fraction:
    return Fraction(p ** (N + 1) - 2 * p ** N + 1, p ** (N + 1) - p ** N)


def free_objects(P: GradedPoset) -> tuple[set[int], FreeObjectReport]:
    """Free objects (non-maximal, below exactly one maximal element) and the
    top-dimension tally ``n_p = #{q in P_N : q > p}`` over non-maximal
    ``p`` in ``P_{N-1}``."""
    maximal = set(P.maximal())
    free = set()
    for p in range(len(P)):
        if p in maximal:
            continue
        if sum(1 for m in P.above(p, strict=True) if m in maximal) == 1:
            free.add(p)
    N = P.dimension
    top = set(P.of_dim(N))
    n_p = {}
    for p in P.of_dim(N - 1) if N >= 1 else ():
        if p not in maximal:
            n_p[p] = sum(1 for q in P.above(p, strict=True) if q in top)
    counts = Counter(n_p.values())
    agree = all((n == 1) == (p in free) for p, n in n_p.items())
    report = FreeObjectReport(
        N=N,
        free_count=len(free),
        p_double_prime=len(n_p),
        n_counts=dict(sorted(counts.items())),
        edge_count=sum(n_p.values()),
        definitions_agree=agree,
    )
    if n_p:
        report.ratio = Fraction(counts.get(1, 0), len(n_p))
    return free, report


def free_bound_check(P: GradedPoset, p: int, ring: CoefficientRing = ZZ,
                     K: LocalCoveringFamily | None = None) -> FreeObjectReport:
    """Compare the proportion of free objects in ``P_{N-1}`` with the bound
    ``(p^{N+1} - 2p^N + 1) / (p^{N+1} - p^N)`` when ``H~_N`` vanishes."""
    kind = classify_local_type(P, p_hint=p)
    if kind.kind is not LocalKind.P_QUILLEN or kind.prime != p:
        raise NotLocallyPQuillen(f"poset is {kind}, not locally {p}-Quillen")
    _, report = free_objects(P)
    report.prime = p
    N = report.N
    if N < 1:
        report.applicable = False
        return report
    if K is None:
        K = build_atom_modular_lcf(P)
    H = homology(reduced_complex(P, K, reduced=True), ring)
    report.top_homology_zero = H[N].is_zero()
    report.bound = free_bound(p, N)
    report.edge_count_expected = len(P.of_dim(N)) * (p ** (N + 1) - 1) // (p - 1)
    if report.top_homology_zero and report.ratio is not None:
        report.bound_holds = report.ratio >= report.bound
    return report


@dataclass
class SphericityReport:
    entries: list[dict] = field(default_factory=list)
    failures: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_local_sphericity(P: GradedPoset, K: LocalCoveringFamily,
                            ring: CoefficientRing = ZZ) -> SphericityReport:
    """Check every ``P_{<p}`` has free homology of rank ``K^p_{dim p}`` in
    degree ``dim p - 1`` only, using the order-complex oracle."""
    require_valid(P, K)
    expected = top_k(P, K)
    rep = SphericityReport()
    for p in range(len(P)):
        H: Homology = homology(oracle_complex(down_set(P, p, strict=True).poset, reduced=True), ring)
        d = P.dims[p] - 1
        nz = H.nonzero()
        good = (set(nz) <= {d} and not H[d].torsion and H[d].rank == expected[p])
        rep.entries.append({"element": P.labels[p], "degree": d, "expected": expected[p],
                            "rank": H[d].rank, "ok": good})
        if not good:
            rep.failures.append(p)
    return rep


@dataclass
class SizeReport:
    reduced: dict[int, int]
    oracle: dict[int, int]

    @property
    def reduced_total(self) -> int:
        return sum(self.reduced.values())

    @property
    def oracle_total(self) -> int:
        return sum(self.oracle.values())

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.reduced_total, self.oracle_total) if self.oracle_total else Fraction(0)

    def to_json(self) -> dict:
        return {"reduced": {str(k): v for k, v in self.reduced.items()},
                "oracle": {str(k): v for k, v in self.oracle.items()},
                "reduced_total": self.reduced_total, "oracle_total": self.oracle_total,
                "ratio": _frac(self.ratio)}


def size_report(P: GradedPoset, K: LocalCoveringFamily) -> SizeReport:
    """Per-degree generator counts of the reduced complex and of the order complex."""
    table = top_k(P, K)
    reduced = {n: sum(table[p] for p in P.of_dim(n)) for n in range(P.dimension + 1)}
    oracle = dict(sorted(Counter(len(c) - 1 for c in chains(P)).items()))
    return SizeReport(reduced, oracle)
