"""Independent brute-force oracles; none of them call the code under test."""

from __future__ import annotations

import itertools

import numpy as np


def brute_force_subgroups(mul) -> set[int]:
    """All subsets (as bitmasks) closed under multiplication and containing 0's identity.

    Checks every one of the 2^n subsets; a nonempty finite subset closed under
    products is a subgroup.
    """
    table = np.asarray(mul, dtype=np.int64)
    n = table.shape[0]
    ident = next(e for e in range(n) if list(table[e]) == list(range(n)))
    masks = np.arange(1 << n, dtype=np.int64)
    member = ((masks[:, None] >> np.arange(n)) & 1).astype(bool)
    ok = member[:, ident].copy()
    for a in range(n):
        # a in S  =>  for every b in S, a*b in S
        closed_a = np.all(~member | member[:, table[a]], axis=1)
        ok &= ~member[:, a] | closed_a
    return {int(m) for m in masks[ok]}


def brute_force_covers(masks: list[int]) -> set[tuple[int, int]]:
    """Pairs (i, j) with S_i a proper subset of S_j and nothing strictly between."""
    def lt(a, b):
        return a != b and a & ~b == 0

    out = set()
    for i, j in itertools.product(range(len(masks)), repeat=2):
        if lt(masks[i], masks[j]) and not any(
            lt(masks[i], masks[k]) and lt(masks[k], masks[j]) for k in range(len(masks))
        ):
            out.add((i, j))
    return out


def power_order(mul, identity: int, a: int) -> int:
    k, x = 1, a
    while x != identity:
        x = mul[x][a]
        k += 1
    return k


def count_elements_of_order(mul, identity: int, k: int) -> int:
    return sum(power_order(mul, identity, a) == k for a in range(len(mul)))


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def primes_upto(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if all(p % q for q in range(2, p))]


def naive_closure(mul, identity: int, seed) -> set[int]:
    """Repeatedly multiply everything by everything until nothing new appears."""
    s = {identity, *seed}
    while True:
        new = {mul[a][b] for a in s for b in s} | s
        if new == s:
            return s
        s = new


def conjugates_fixing(mul, inv, members: set[int]) -> set[int]:
    return {x for x in range(len(mul)) if {mul[mul[x][a]][inv[x]] for a in members} == members}
