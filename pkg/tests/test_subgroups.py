import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import (
    brute_force_subgroups,
    conjugates_fixing,
    count_elements_of_order,
    divisors,
    naive_closure,
    primes_upto,
)
from subgraph import direct_product, make_cyclic, make_dihedral
from subgraph.harness import elementary_abelian
from subgraph.subgroups import (
    InvalidSubgroupError,
    NoSylowError,
    Subgroup,
    SubgroupLimitError,
    all_subgroups,
    centralizer,
    frattini_subgroup,
    generated_subgroup,
    is_closed,
    is_elementary_abelian,
    maximal_subgroups_of,
    minimal_subgroups,
    normalizer,
    sylow_subgroup,
    whole_group,
)


def elements_of_order(g, k):
    return [a for a in range(g.order) if g.element_orders[a] == k]


def test_generated_subgroup(s3, c12):
    assert generated_subgroup(s3, []).elements() == [s3.identity]
    t = elements_of_order(s3, 2)[0]
    r = elements_of_order(s3, 3)[0]
    assert generated_subgroup(s3, [t, r]).order == 6
    assert generated_subgroup(c12, [4]).elements() == [0, 4, 8]


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 24), st.lists(st.integers(0, 47), max_size=3))
def test_generated_matches_naive_closure(n, seed):
    g = make_dihedral(n)
    seed = [x % g.order for x in seed]
    assert set(generated_subgroup(g, seed).elements()) == naive_closure(g.mul, g.identity, seed)


def test_all_subgroups_small(s3, c12, d4):
    subs = all_subgroups(c12)
    assert [h.order for h in subs] == [1, 2, 3, 4, 6, 12]
    assert [h.order for h in all_subgroups(s3)] == [1, 2, 2, 2, 3, 6]
    assert len(all_subgroups(make_cyclic(1))) == 1
    assert len(all_subgroups(d4)) == 10


def test_all_subgroups_sorted_and_closed(a4):
    subs = all_subgroups(a4)
    keys = [h.sort_key for h in subs]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)
    for h in subs:
        assert is_closed(a4, h.members)
        assert a4.order % h.order == 0
        assert h.order == bin(h.members).count("1")


@pytest.mark.parametrize("g", [make_cyclic(8), make_dihedral(4), make_dihedral(6),
                               direct_product(make_cyclic(2), make_cyclic(4))],
                         ids=lambda g: g.label)
def test_all_subgroups_against_brute_force(g):
    assert {h.members for h in all_subgroups(g)} == brute_force_subgroups(g.mul)


def test_cyclic_subgroup_count_is_tau():
    for n in range(1, 201):
        assert len(all_subgroups(make_cyclic(n))) == len(divisors(n)), n


def test_subgroup_cap():
    with pytest.raises(SubgroupLimitError, match="C2xC2xC2"):
        all_subgroups(elementary_abelian(2, 3), max_subgroups=10)


def test_minimal_subgroups(s3):
    t = minimal_subgroups(s3, all_subgroups(s3))
    assert t.counts == {2: 3, 3: 1} and t.alpha == 4
    c30 = make_cyclic(30)
    t = minimal_subgroups(c30, all_subgroups(c30))
    assert t.counts == {2: 1, 3: 1, 5: 1} and t.alpha == 3
    assert minimal_subgroups(make_cyclic(1), all_subgroups(make_cyclic(1))).alpha == 0


@pytest.mark.parametrize("g", [make_dihedral(6), make_dihedral(15),
                               direct_product(make_cyclic(3), make_cyclic(3)),
                               elementary_abelian(2, 4)], ids=lambda g: g.label)
def test_alpha_by_element_count(g):
    table = minimal_subgroups(g, all_subgroups(g))
    for p in primes_upto(g.order):
        count = count_elements_of_order(g.mul, g.identity, p)
        assert table.counts.get(p, 0) == count // (p - 1)


def test_normalizer_centralizer(s3):
    subs = all_subgroups(s3)
    a3 = next(h for h in subs if h.order == 3)
    assert normalizer(s3, a3).order == 6
    c2 = next(h for h in subs if h.order == 2)
    assert normalizer(s3, c2) == c2
    c12 = make_cyclic(12)
    for h in all_subgroups(c12):
        assert centralizer(c12, h).order == 12
    not_closed = Subgroup(1 << s3.identity | 1 << elements_of_order(s3, 3)[0], 2)
    with pytest.raises(InvalidSubgroupError):
        normalizer(s3, not_closed)
    with pytest.raises(InvalidSubgroupError):
        centralizer(s3, not_closed)


@pytest.mark.parametrize("g", [make_dihedral(4), make_dihedral(5), direct_product(make_dihedral(3), make_cyclic(2))],
                         ids=lambda g: g.label)
def test_normalizer_matches_oracle(g):
    for h in all_subgroups(g):
        n = normalizer(g, h)
        c = centralizer(g, h)
        assert set(n.elements()) == conjugates_fixing(g.mul, g.inv, set(h.elements()))
        assert c.members & ~n.members == 0


def test_sylow(s3, c12):
    subs = all_subgroups(s3)
    assert sylow_subgroup(s3, 3, subs).order == 3
    assert sylow_subgroup(c12, 2, all_subgroups(c12)).elements() == [0, 3, 6, 9]
    c2 = make_cyclic(2)
    assert sylow_subgroup(c2, 2, all_subgroups(c2)).order == 2
    with pytest.raises(NoSylowError):
        sylow_subgroup(s3, 5, subs)


def test_sylow_choice_is_immaterial(s3):
    # the three Sylow 2-subgroups of S3 are conjugate; the claim checks only use
    # conjugation-invariant properties of the chosen one
    subs = all_subgroups(s3)
    sylows = [h for h in subs if h.order == 2]
    assert len(sylows) == 3
    first = sylow_subgroup(s3, 2, subs)
    assert first == sylows[0]
    for q in sylows:
        assert is_elementary_abelian(s3, q)
        assert frattini_subgroup(q, subs).order == 1
        assert normalizer(s3, q).order == normalizer(s3, first).order


def test_frattini(q8):
    v4 = elementary_abelian(2, 2)
    subs = all_subgroups(v4)
    assert frattini_subgroup(subs[-1], subs).order == 1
    qsubs = all_subgroups(q8)
    f = frattini_subgroup(qsubs[-1], qsubs)
    assert f.order == 2
    assert f.elements() == sorted([q8.identity] + elements_of_order(q8, 2))
    c5 = make_cyclic(5)
    csubs = all_subgroups(c5)
    assert frattini_subgroup(csubs[-1], csubs).order == 1
    assert frattini_subgroup(csubs[0], csubs) == csubs[0]


def test_elementary_abelian():
    assert is_elementary_abelian(elementary_abelian(2, 3))
    assert not is_elementary_abelian(make_cyclic(4))
    assert is_elementary_abelian(make_cyclic(1))
    assert not is_elementary_abelian(make_dihedral(3))
    assert not is_elementary_abelian(make_cyclic(6))


@pytest.mark.parametrize("p,d,expected", [(2, 2, 3), (2, 3, 7), (3, 2, 4), (5, 2, 6)])
def test_maximal_subgroup_count_elementary_abelian(p, d, expected):
    g = elementary_abelian(p, d)
    subs = all_subgroups(g)
    assert len(maximal_subgroups_of(whole_group(g), subs)) == expected
