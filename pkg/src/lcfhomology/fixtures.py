"""Bundled test objects: small triangulations and permutation groups."""
from __future__ import annotations

from .builders import (PermutationGroup, SimplicialComplex, group_from_generators,
                       perm_from_cycles)


def simplex(d: int) -> SimplicialComplex:
    return SimplicialComplex.from_facets(range(d + 1), [range(d + 1)])


def hollow_triangle() -> SimplicialComplex:
    return SimplicialComplex.from_facets("012", ["01", "02", "12"])


def full_triangle() -> SimplicialComplex:
    return simplex(2)


def boundary_tetrahedron() -> SimplicialComplex:
    return SimplicialComplex.from_facets("0123", ["012", "013", "023", "123"])


def rp2() -> SimplicialComplex:
    """Six-vertex real projective plane."""
    facets = ["123", "134", "145", "156", "126", "235", "245", "246", "346", "356"]
    return SimplicialComplex.from_facets("123456", facets)


def dunce_hat() -> SimplicialComplex:
    """Eight-vertex dunce hat: 17 triangles, contractible, no free edge.

    A triangulated disk whose boundary reads 1,2,3,1,2,3,1,3,2 with interior
    vertices 4..8; the three boundary arcs are glued to the loop 1-2-3.
    """
    facets = ["124", "125", "127", "136", "137", "138", "145", "168", "234",
              "236", "238", "256", "278", "347", "457", "568", "578"]
    return SimplicialComplex.from_facets("12345678", facets)


SIMPLICIAL = {
    "boundary_tetrahedron": boundary_tetrahedron,
    "rp2": rp2,
    "dunce_hat": dunce_hat,
    "hollow_triangle": hollow_triangle,
    "full_triangle": full_triangle,
}


def cyclic(n: int) -> PermutationGroup:
    return group_from_generators(n, [perm_from_cycles(n, [range(n)])])


def symmetric3() -> PermutationGroup:
    return group_from_generators(3, [perm_from_cycles(3, [(0, 1)]), perm_from_cycles(3, [(0, 1, 2)])])


def dihedral8() -> PermutationGroup:
    return group_from_generators(4, [perm_from_cycles(4, [(0, 1, 2, 3)]), perm_from_cycles(4, [(1, 3)])])


def alternating4() -> PermutationGroup:
    return group_from_generators(4, [perm_from_cycles(4, [(0, 1, 2)]), perm_from_cycles(4, [(1, 2, 3)])])


def symmetric4() -> PermutationGroup:
    return group_from_generators(4, [perm_from_cycles(4, [(0, 1, 2, 3)]), perm_from_cycles(4, [(0, 1)])])


def elementary_2_3() -> PermutationGroup:
    """C_2^3 acting on six points."""
    return group_from_generators(6, [perm_from_cycles(6, [(0, 1)]), perm_from_cycles(6, [(2, 3)]),
                                     perm_from_cycles(6, [(4, 5)])])


def elementary_3_2() -> PermutationGroup:
    """C_3^2 acting on six points."""
    return group_from_generators(6, [perm_from_cycles(6, [(0, 1, 2)]), perm_from_cycles(6, [(3, 4, 5)])])


# name -> (group factory, prime)
QUILLEN = {
    "A2_S3": (symmetric3, 2),
    "A2_D8": (dihedral8, 2),
    "A2_A4": (alternating4, 2),
    "A2_S4": (symmetric4, 2),
    "A2_C2x3": (elementary_2_3, 2),
    "A3_C3x2": (elementary_3_2, 3),
}
