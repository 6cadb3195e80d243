import itertools
from collections import Counter

import pytest
from conftest import load

from lcfhomology.builders import (SimplicialComplex, compose, elementary_abelian_subgroups,
                                  face_poset, group_from_generators, order_complex,
                                  perm_from_cycles, quillen_poset)
from lcfhomology.errors import GroupTooLarge, NotAPermutation, NotDownClosed, NotPrime
from lcfhomology.fixtures import (cyclic, dihedral8, dunce_hat, elementary_3_2,
                                  full_triangle, hollow_triangle, rp2, symmetric3,
                                  symmetric4)
from lcfhomology.poset import build_poset


def test_face_poset_counts():
    P, _ = face_poset(full_triangle())
    assert [len(P.of_dim(d)) for d in range(3)] == [3, 3, 1]
    P, _ = face_poset(hollow_triangle())
    assert len(P) == 6 and P.dimension == 1
    P, _ = face_poset(rp2())
    assert [len(P.of_dim(d)) for d in range(3)] == [6, 15, 10]


def test_rp2_every_edge_in_two_triangles():
    D = rp2()
    tri = D.sorted_simplices(2)
    for e in D.sorted_simplices(1):
        assert sum(1 for t in tri if set(e) <= set(t)) == 2


def test_dunce_hat_shape():
    D = dunce_hat()
    assert D.f_vector() == [8, 24, 17]
    degree = Counter(e for t in D.sorted_simplices(2) for e in itertools.combinations(t, 2))
    assert min(degree.values()) >= 2
    loop = {D.label(e) for e, d in degree.items() if d == 3}
    assert loop == {"12", "13", "23"}


def test_complex_validation():
    with pytest.raises(NotDownClosed):
        SimplicialComplex(("a", "b", "c"), frozenset({(0,), (1,), (2,), (0, 1, 2)}))
    with pytest.raises(NotDownClosed):
        SimplicialComplex(("a", "b"), frozenset({(0,), (0, 1)}))


def test_order_complex_examples():
    P = build_poset([0, 0], [])
    O = order_complex(P)
    assert O.f_vector() == [2]
    O = order_complex(load("hollow_triangle")[0])
    assert O.f_vector() == [6, 6]
    O = order_complex(load("A2_D8")[0])
    assert O.f_vector() == [7, 6]


def test_order_complex_of_triangle_is_barycentric():
    O = order_complex(load("full_triangle")[0])
    # barycentric subdivision of a triangle: 7 vertices, 12 edges, 6 triangles
    assert O.f_vector() == [7, 12, 6]


def _closure_size(degree, gens):
    ident = tuple(range(degree))
    out = {ident}
    frontier = [ident]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = compose(tuple(g), x)
            if y not in out:
                out.add(y)
                frontier.append(y)
    return len(out)


def test_group_enumeration():
    assert symmetric3().order == 6
    assert dihedral8().order == 8
    assert symmetric4().order == 24
    gens = [perm_from_cycles(4, [(0, 1, 2, 3)]), perm_from_cycles(4, [(0, 2), (1, 3)]),
            perm_from_cycles(4, [(0, 1)])]
    assert group_from_generators(4, gens).order == _closure_size(4, gens) == 24


def test_group_errors():
    with pytest.raises(NotAPermutation):
        group_from_generators(3, [[0, 0, 1]])
    with pytest.raises(GroupTooLarge):
        group_from_generators(4, [perm_from_cycles(4, [(0, 1, 2, 3)]),
                                  perm_from_cycles(4, [(0, 1)])], element_cap=10)
    with pytest.raises(NotPrime):
        elementary_abelian_subgroups(symmetric3(), 4)


def _brute_elementary_abelian(G, p):
    """Rank counts of elementary abelian p-subgroups by scanning all subsets."""
    e = G.identity
    others = [i for i in range(G.order) if i != e]
    counts = Counter()
    for k in range(1, len(others) + 1):
        for sub in itertools.combinations(others, k):
            H = set(sub) | {e}
            if any(G.mul(a, b) not in H for a in H for b in H):
                continue
            if any(G.mul(a, b) != G.mul(b, a) for a in H for b in H):
                continue
            if any(G.power_order(a) != p for a in sub):
                continue
            rank, n = 0, len(H)
            while n > 1:
                n, rank = n // p, rank + 1
            counts[rank] += 1
    return counts


@pytest.mark.parametrize("factory,p,expected", [
    (symmetric3, 2, [3]),
    (dihedral8, 2, [5, 2]),
    (lambda: cyclic(5), 5, [1]),
    (symmetric3, 3, [1]),
])
def test_elementary_abelian_counts(factory, p, expected):
    G = factory()
    ranks = elementary_abelian_subgroups(G, p)
    assert [len(level) for level in ranks] == expected
    if G.order <= 8 and p == 2:
        brute = _brute_elementary_abelian(G, p)
        assert [brute[k] for k in sorted(brute)] == expected


def test_quillen_poset_shapes():
    for G, p in ((group_from_generators(4, [perm_from_cycles(4, [(0, 1), (2, 3)]),
                                            perm_from_cycles(4, [(0, 2), (1, 3)])]), 2),
                 (elementary_3_2(), 3)):
        P, _ = quillen_poset(G, p)
        assert len(P) == p + 2
        assert len(P.atoms) == p + 1 and P.dimension == 1
    P, _ = quillen_poset(dihedral8(), 2)
    assert len(P) == 7 and P.dimension == 1
    P, _ = quillen_poset(symmetric3(), 3)
    assert len(P) == 1 and P.dimension == 0


def test_complex_json_roundtrip():
    D = rp2()
    data = D.to_json()
    assert SimplicialComplex.from_facets(data["vertices"], data["facets"]) == D
