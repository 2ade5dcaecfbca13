import re

import pytest

from oracles import brute_force_covers, divisors
from subgraph import direct_product, make_cyclic, make_dihedral
from subgraph.groupspec import make_alternating, make_quaternion, make_symmetric
from subgraph.lattice import (
    LatticeIntegrityError,
    build_lattice,
    degree,
    export_dot,
    regularity,
)
from subgraph.subgroups import all_subgroups, join


def lattice_of(g):
    return build_lattice(g, all_subgroups(g))


def divisor_cover_count(n):
    # (d, d*p) with d*p | n, p prime
    return sum(1 for d in divisors(n) for e in divisors(n) if e % d == 0 and _is_prime(e // d))


def _is_prime(k):
    return k > 1 and all(k % q for q in range(2, k))


def test_cyclic_lattice_is_divisor_lattice():
    for n in (1, 6, 12, 30, 36, 60):
        lat = lattice_of(make_cyclic(n))
        assert len(lat) == len(divisors(n))
        assert len(lat.covers) == divisor_cover_count(n)
    assert len(lattice_of(make_cyclic(12)).covers) == 7


def test_s3_and_trivial(s3):
    lat = lattice_of(s3)
    assert len(lat) == 6 and len(lat.covers) == 8
    one = lattice_of(make_cyclic(1))
    assert len(one) == 1 and one.covers == ()


def test_degrees(s3):
    lat = lattice_of(s3)
    assert degree(lat, 0) == (0, 4, 4)
    assert degree(lat, lat.top) == (4, 0, 4)
    c4 = lattice_of(make_cyclic(4))
    assert degree(c4, 1) == (1, 1, 2)
    assert degree(c4, 0)[2] == degree(c4, 2)[2] == 1
    with pytest.raises(IndexError):
        degree(c4, 3)


def test_regularity_reports(s3):
    r = regularity(lattice_of(make_cyclic(30)))
    assert r.is_regular and r.degree_sequence == [3] * 8 and r.witness is None
    r = regularity(lattice_of(s3))
    assert not r.is_regular
    assert r.degree_sequence == [2, 2, 2, 2, 4, 4]
    assert r.degrees == [4, 2, 2, 2, 2, 4]
    i, j = r.witness
    lat = lattice_of(s3)
    assert (lat.vertices[i].order, lat.vertices[j].order) == (1, 2)
    r = regularity(lattice_of(make_cyclic(1)))
    assert r.is_regular and r.degree_sequence == [0]


@pytest.mark.parametrize("n,t", [(2, 1), (6, 2), (30, 3), (210, 4)])
def test_squarefree_cyclic_is_boolean(n, t):
    g = make_cyclic(n, max_order=210)
    lat = lattice_of(g)
    assert len(lat) == 2**t
    assert set(lat.degrees) == {t}
    # Boolean lattice: each vertex d has one up-edge per prime not dividing d
    for v, h in enumerate(lat.vertices):
        assert lat.deg1[v] == sum(1 for p in (2, 3, 5, 7) if h.order % p == 0)


@pytest.mark.parametrize("p,k", [(2, 2), (2, 3), (3, 2), (2, 5), (5, 2), (3, 4), (7, 2)])
def test_chain_lattices(p, k):
    lat = lattice_of(make_cyclic(p**k))
    assert list(lat.degrees) == [1] + [2] * (k - 1) + [1]
    assert not regularity(lat).is_regular


def test_prime_cyclic_chain_is_regular():
    for p in (2, 3, 5, 7, 11):
        assert regularity(lattice_of(make_cyclic(p))).degree_sequence == [1, 1]


SMALL = [make_cyclic(n) for n in (8, 12, 16, 24)] + [
    make_dihedral(n) for n in (3, 4, 5, 6, 8, 12)
] + [
    make_symmetric(3), make_symmetric(4), make_alternating(4), make_quaternion(),
    direct_product(make_cyclic(2), make_dihedral(4)),
    direct_product(make_cyclic(2), direct_product(make_cyclic(2), make_cyclic(2))),
]


@pytest.mark.parametrize("g", SMALL, ids=lambda g: g.label)
def test_covers_match_brute_force(g):
    lat = lattice_of(g)
    masks = [h.members for h in lat.vertices]
    assert set(lat.covers) == brute_force_covers(masks)


@pytest.mark.parametrize("g", SMALL, ids=lambda g: g.label)
def test_lattice_invariants(g):
    lat = lattice_of(g)
    assert sum(lat.degrees) == 2 * len(lat.covers)
    assert lat.deg1[lat.bottom] == 0 and lat.deg2[lat.top] == 0
    for i, j in lat.covers:
        a, b = lat.vertices[i], lat.vertices[j]
        assert a.order < b.order and b.order % a.order == 0
        assert (j, i) not in lat.covers
    r = regularity(lat)
    assert lat.degrees[0] == r.alpha
    assert r.is_regular == (len(set(r.degree_sequence)) == 1) == (r.witness is None)


def test_integrity_errors(s3):
    subs = all_subgroups(s3)
    with pytest.raises(LatticeIntegrityError, match="sorted"):
        build_lattice(s3, list(reversed(subs)))
    with pytest.raises(LatticeIntegrityError, match="missing"):
        build_lattice(s3, subs[:-1])


def test_integrity_missing_join():
    g = direct_product(make_cyclic(4), make_cyclic(2))
    subs = all_subgroups(g)
    two = [h for h in subs if h.order == 2]
    target = join(g, two[0], two[1])
    assert target.order == 4
    with pytest.raises(LatticeIntegrityError, match="join"):
        build_lattice(g, [h for h in subs if h != target])


def test_dot_output(s3):
    dot = export_dot(lattice_of(make_cyclic(1)))
    assert len(re.findall(r"^\s*v\d+ \[label=", dot, re.M)) == 1
    assert "->" not in dot
    dot = export_dot(lattice_of(make_cyclic(6)))
    assert len(re.findall(r"^\s*v\d+ \[label=", dot, re.M)) == 4
    assert dot.count("->") == 4
    dot = export_dot(lattice_of(s3))
    assert len(re.findall(r"^\s*v\d+ \[label=", dot, re.M)) == 6
    assert dot.count("->") == 8
    assert 'label="order=6 idx=5"' in dot
    assert export_dot(lattice_of(s3)) == dot
