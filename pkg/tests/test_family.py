import itertools
import random

import pytest
from conftest import ALL_NAMES, group, load

from lcfhomology.builders import face_poset, quillen_poset
from lcfhomology.errors import InvalidFamily, NotAtomModular
from lcfhomology.family import (LocalCoveringFamily, build_atom_modular_lcf, k_numbers,
                                require_valid, sphere_chain_count, top_k, validate_lcf)
from lcfhomology.fixtures import QUILLEN, SIMPLICIAL, simplex
from lcfhomology.poset import BOTTOM, build_poset


def tampered(K, p, members=None, eta=None):
    """Copy of ``K`` with ``K_p`` and/or ``eta_p`` replaced."""
    Ks, etas = list(K.K), [dict(e) for e in K.eta]
    if members is not None:
        Ks[p] = frozenset(members)
    if eta is not None:
        etas[p] = dict(eta)
    return LocalCoveringFamily(tuple(Ks), tuple(etas))


def ids(P):
    return {l: i for i, l in enumerate(P.labels)}


@pytest.mark.parametrize("name", ALL_NAMES)
def test_constructed_families_are_valid(name):
    P, K = load(name)
    assert validate_lcf(P, K).ok
    assert validate_lcf(P, build_atom_modular_lcf(P)).ok


def test_simplex_family_matches_closed_description():
    P, K = face_poset(simplex(3))
    lab = ids(P)
    for s in P.labels:
        star, rest = s[0], s[1:]
        expected = {BOTTOM: lab[star]}
        for k in range(1, len(rest) + 1):
            for t in itertools.combinations(rest, k):
                expected[lab["".join(t)]] = lab["".join(sorted(star + "".join(t)))]
        assert K.eta[lab[s]] == expected
        assert K.K[lab[s]] == frozenset(expected)


def test_generic_and_simplicial_families_agree():
    for name in SIMPLICIAL:
        P, K = load(name)
        assert build_atom_modular_lcf(P) == K


def test_generic_and_quillen_families_agree():
    for name in QUILLEN:
        P, K = load(name)
        assert build_atom_modular_lcf(P) == K


def test_non_atom_modular_poset_rejected():
    P = build_poset([0, 0, 1, 1, 2], [(0, 2), (1, 2), (0, 3), (1, 3), (2, 4), (3, 4)])
    with pytest.raises(NotAtomModular):
        build_atom_modular_lcf(P)


# --- the five systematic tamperings -------------------------------------------


def test_tamper_condition_1():
    P, K = face_poset(simplex(2))
    p = ids(P)["01"]
    members = K.K[p] - {BOTTOM}
    eta = {x: y for x, y in K.eta[p].items() if x != BOTTOM}
    rep = validate_lcf(P, tampered(K, p, members, eta))
    assert (1, (p,)) in rep.violations


def test_tamper_condition_2():
    P, K = face_poset(simplex(2))
    lab = ids(P)
    p = lab["012"]
    eta = dict(K.eta[p])
    eta[lab["1"]] = lab["012"]  # jumps two dimensions
    rep = validate_lcf(P, tampered(K, p, eta=eta))
    assert (2, (p, lab["1"], lab["012"])) in rep.violations


def test_tamper_condition_3():
    P, K = face_poset(simplex(2))
    lab = ids(P)
    q = lab["01"]
    # 01 is not in K_012, yet its cone point moves from 0 to 1
    members = {BOTTOM, lab["0"]}
    eta = {BOTTOM: lab["1"], lab["0"]: lab["01"]}
    Kt = tampered(K, q, members, eta)
    rep = validate_lcf(P, Kt)
    assert rep.violations == [(3, (q, lab["012"]))]
    with pytest.raises(InvalidFamily):
        require_valid(P, Kt)


def test_tamper_condition_4():
    P, K = face_poset(simplex(3))
    lab = ids(P)
    p = lab["0123"]
    eta = dict(K.eta[p])
    eta[lab["1"]] = lab["03"]
    rep = validate_lcf(P, tampered(K, p, eta=eta))
    assert (4, (p, lab["1"], lab["12"])) in rep.violations
    assert 2 in rep.conditions()


def test_tamper_condition_5():
    P, K = face_poset(simplex(2))
    lab = ids(P)
    p = lab["012"]
    members = K.K[p] - {lab["12"]}
    eta = {x: y for x, y in K.eta[p].items() if x != lab["12"]}
    rep = validate_lcf(P, tampered(K, p, members, eta))
    assert (5, (p, lab["1"], lab["12"])) in rep.violations
    assert 5 in rep.conditions()


def test_size_mismatch_is_domain_violation():
    P, K = load("hollow_triangle")
    short = LocalCoveringFamily(K.K[:-1], K.eta[:-1])
    assert validate_lcf(P, short).conditions() == {0}


def test_family_json_roundtrip():
    P, K = load("A2_D8")
    data = K.to_json(P)
    assert "0hat" in data[P.labels[0]]["K"]
    assert LocalCoveringFamily.from_json(P, data) == K


# --- K-numbers ---------------------------------------------------------------------


@pytest.mark.parametrize("name", list(SIMPLICIAL))
def test_simplex_k_numbers_are_one(name):
    P, K = load(name)
    assert set(top_k(P, K)) == {1}
    assert all(len(K.members(s, P.dims[s] - 1, P)) == 1 for s in range(len(P)))


@pytest.mark.parametrize("name", list(QUILLEN))
def test_quillen_k_numbers(name):
    P, K = load(name)
    p = QUILLEN[name][1]
    table = k_numbers(P, K)
    for h in range(len(P)):
        n = P.dims[h]
        assert table[h, n] == p ** (n * (n + 1) // 2)
        if n:
            assert len(K.members(h, n - 1, P)) == p ** n


def _subspace_chain_oracle():
    """Saturated chains 0 < L0 < L1 < V in F_2^3 with each step in the family.

    Subspaces are sets of non-zero vectors (ints 1..7) and the apex of a
    subspace is its smallest vector.  The count must not depend on that choice.
    """
    vecs = range(1, 8)
    V = frozenset(vecs)
    planes = {frozenset(x for x in vecs if bin(x & m).count("1") % 2 == 0) for m in vecs}
    lines = [frozenset([v]) for v in vecs]

    def in_family(sub, sup):
        return min(sup) not in sub

    return sum(1 for L1 in planes if in_family(L1, V)
               for L0 in lines if L0 <= L1 and in_family(L0, L1))


def test_sphere_count_c2_cubed():
    G, p = group("A2_C2x3")
    P, _ = load("A2_C2x3")
    assert P.dimension == 2
    assert _subspace_chain_oracle() == 8
    top = P.of_dim(2)[0]
    for seed in range(3):
        atoms = list(P.atoms)
        random.Random(seed).shuffle(atoms)
        _, K = quillen_poset(G, p, atoms)
        assert sphere_chain_count(P, K, top) == 8


@pytest.mark.parametrize("name", ALL_NAMES)
def test_sphere_count_matches_k_numbers(name):
    P, K = load(name)
    table = top_k(P, K)
    for q in range(len(P)):
        assert sphere_chain_count(P, K, q) == table[q]
    for q in P.of_dim(0):
        assert sphere_chain_count(P, K, q) == 1
