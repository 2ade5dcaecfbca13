"""Finite groups stored as full Cayley tables over element indices 0..n-1."""

from __future__ import annotations

import os
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

DEFAULT_MAX_ORDER = 200
MAX_ORDER_ENV = "SUBGRAPH_MAX_ORDER"


class GroupError(ValueError):
    """Invalid group data (bad table, bad permutation, bad index)."""


class OrderCapError(GroupError):
    """A group would exceed the configured order cap."""


def default_max_order() -> int:
    value = os.environ.get(MAX_ORDER_ENV)
    if value is None or not value.strip():
        return DEFAULT_MAX_ORDER
    try:
        cap = int(value)
    except ValueError:
        raise GroupError(f"{MAX_ORDER_ENV}={value!r} is not an integer") from None
    if cap < 1:
        raise GroupError(f"{MAX_ORDER_ENV} must be positive, got {cap}")
    return cap


def _check_cap(order: int, max_order: int | None, what: str) -> None:
    cap = default_max_order() if max_order is None else max_order
    if order > cap:
        raise OrderCapError(f"{what} has order {order}, above the order cap {cap}")


@dataclass(frozen=True, eq=False)
class Group:
    """A finite group given by its multiplication table.

    ``mul[a][b]`` is the index of ``a*b``; ``inv[a]`` the index of ``a**-1``.
    Instances are immutable; derived data (element orders) is cached lazily.
    """

    mul: tuple[tuple[int, ...], ...]
    identity: int
    inv: tuple[int, ...]
    label: str = field(default="G")

    @property
    def order(self) -> int:
        return len(self.mul)

    def __len__(self) -> int:
        return len(self.mul)

    def __repr__(self) -> str:
        return f"Group({self.label!r}, order={self.order})"

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        mul, e = self.mul, self.identity
        orders = []
        for a in range(self.order):
            k, x = 1, a
            while x != e:
                x = mul[x][a]
                k += 1
            orders.append(k)
        return tuple(orders)

    def relabel(self, label: str) -> Group:
        return Group(self.mul, self.identity, self.inv, label)


def _assemble(mul: Sequence[Sequence[int]], identity: int, label: str) -> Group:
    table = tuple(tuple(row) for row in mul)
    inv = [0] * len(table)
    for a, row in enumerate(table):
        inv[a] = row.index(identity)
    return Group(table, identity, tuple(inv), label)


def make_cyclic(n: int, max_order: int | None = None) -> Group:
    """Z_n under addition mod n, labelled ``Cn``."""
    if n < 1:
        raise OrderCapError(f"cyclic group order must be positive, got {n}")
    _check_cap(n, max_order, f"C{n}")
    mul = [[(a + b) % n for b in range(n)] for a in range(n)]
    return Group(
        tuple(tuple(r) for r in mul), 0, tuple((-a) % n for a in range(n)), f"C{n}"
    )


def make_dihedral(n: int, max_order: int | None = None) -> Group:
    """Dihedral group of order 2n (rotation r of order n, reflection s).

    Index k < n is r^k, index n + k is r^k s.
    """
    if n < 1:
        raise OrderCapError(f"dihedral parameter must be positive, got {n}")
    _check_cap(2 * n, max_order, f"D{n}")
    size = 2 * n
    mul = [[0] * size for _ in range(size)]
    for x in range(size):
        a, f = x % n, x // n
        for y in range(size):
            b, g = y % n, y // n
            k = (a - b) % n if f else (a + b) % n
            mul[x][y] = k + n * ((f + g) % 2)
    return _assemble(mul, 0, f"D{n}")


def direct_product(g: Group, h: Group, max_order: int | None = None) -> Group:
    """Componentwise product; pair (a, b) is flattened to a*|h| + b."""
    m, n = g.order, h.order
    label = f"{g.label}x{h.label}"
    _check_cap(m * n, max_order, label)
    gm, hm = g.mul, h.mul
    mul = [
        [gm[a1][a2] * n + hm[b1][b2] for a2 in range(m) for b2 in range(n)]
        for a1 in range(m)
        for b1 in range(n)
    ]
    inv = tuple(g.inv[a] * n + h.inv[b] for a in range(m) for b in range(n))
    return Group(
        tuple(tuple(r) for r in mul), g.identity * n + h.identity, inv, label
    )


def _check_permutation(perm: Sequence[int], degree: int, pos: int) -> tuple[int, ...]:
    p = tuple(int(x) for x in perm)
    if len(p) != degree or sorted(p) != list(range(degree)):
        raise GroupError(f"generator {pos} is not a permutation of 0..{degree - 1}: {p}")
    return p


def from_permutation_generators(
    degree: int,
    gens: Sequence[Sequence[int]],
    label: str = "G",
    max_order: int | None = None,
) -> Group:
    """Close ``gens`` under composition by breadth-first search.

    Permutations are image tuples; the product a*b applies a first, then b.
    Elements are indexed in discovery order with the identity at 0.
    """
    if degree < 0:
        raise GroupError(f"degree must be non-negative, got {degree}")
    cap = default_max_order() if max_order is None else max_order
    perms = [_check_permutation(p, degree, i) for i, p in enumerate(gens)]
    ident = tuple(range(degree))
    index = {ident: 0}
    elements = [ident]
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for s in perms:
            y = tuple(s[i] for i in x)
            if y not in index:
                if len(elements) >= cap:
                    raise OrderCapError(
                        f"{label}: closure exceeds the order cap {cap} "
                        f"({len(elements) + 1} elements found so far)"
                    )
                index[y] = len(elements)
                elements.append(y)
                queue.append(y)
    mul = [[index[tuple(b[i] for i in a)] for b in elements] for a in elements]
    return _assemble(mul, 0, label)


def from_cayley_table(
    table: Sequence[Sequence[int]], label: str = "G", max_order: int | None = None
) -> Group:
    """Validate a Cayley table exhaustively and wrap it as a Group."""
    n = len(table)
    if n == 0:
        raise GroupError("empty Cayley table")
    _check_cap(n, max_order, label)
    rows = tuple(tuple(int(x) for x in row) for row in table)
    full = list(range(n))
    for a, row in enumerate(rows):
        if len(row) != n:
            raise GroupError(f"row {a} has {len(row)} entries, expected {n}")
        if sorted(row) != full:
            raise GroupError(f"row {a} is not a permutation of 0..{n - 1}")
    for b in range(n):
        if sorted(rows[a][b] for a in range(n)) != full:
            raise GroupError(f"column {b} is not a permutation of 0..{n - 1}")
    for a in range(n):
        ra = rows[a]
        for b in range(n):
            rab, rb = rows[ra[b]], rows[b]
            for c in range(n):
                if rab[c] != ra[rb[c]]:
                    raise GroupError(f"associativity fails at ({a}, {b}, {c})")
    ids = [e for e in range(n) if rows[e] == tuple(full)]
    if not ids or any(rows[a][ids[0]] != a for a in range(n)):
        raise GroupError("table has no two-sided identity")
    return _assemble(rows, ids[0], label)


def element_order(g: Group, a: int) -> int:
    if not 0 <= a < g.order:
        raise GroupError(f"element index {a} out of range for {g.label}")
    return g.element_orders[a]


def is_abelian(g: Group) -> bool:
    mul = g.mul
    n = g.order
    return all(mul[a][b] == mul[b][a] for a in range(n) for b in range(a + 1, n))


def is_cyclic(g: Group) -> bool:
    return g.order in g.element_orders


def prime_factors(n: int) -> dict[int, int]:
    """Trial-division factorisation ``{p: exponent}``."""
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    return n > 1 and prime_factors(n) == {n: 1}


def is_squarefree(n: int) -> bool:
    if n < 1:
        raise GroupError(f"is_squarefree needs n >= 1, got {n}")
    return all(e == 1 for e in prime_factors(n).values())


def order_profile(g: Group) -> Counter:
    """Multiset of element orders, a cheap isomorphism invariant."""
    return Counter(g.element_orders)
