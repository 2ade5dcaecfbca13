"""Subgroup enumeration and subgroup-level queries.

Subgroups are bitmasks over the element indices of their ambient group.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .group import Group, GroupError, is_prime, prime_factors

DEFAULT_MAX_SUBGROUPS = 20000


class SubgroupLimitError(RuntimeError):
    """Enumeration produced more subgroups than the configured cap."""


class InvalidSubgroupError(GroupError):
    pass


class NoSylowError(GroupError):
    pass


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Subgroup:
    members: int
    order: int
    gens: tuple[int, ...] = field(default=(), compare=False, repr=False)

    def __contains__(self, a: int) -> bool:
        return bool(self.members >> a & 1)

    def elements(self) -> list[int]:
        return list(bits(self.members))

    def issubset(self, other: Subgroup) -> bool:
        return self.members & ~other.members == 0

    @property
    def sort_key(self) -> tuple[int, int]:
        return (self.order, self.members)


@dataclass
class MinimalSubgroupTable:
    by_prime: dict[int, list[Subgroup]]

    @property
    def counts(self) -> dict[int, int]:
        """alpha_p for every prime with at least one order-p subgroup."""
        return {p: len(v) for p, v in sorted(self.by_prime.items())}

    @property
    def alpha(self) -> int:
        return sum(len(v) for v in self.by_prime.values())

    def all(self) -> list[Subgroup]:
        return [a for p in sorted(self.by_prime) for a in self.by_prime[p]]


def _closure(g: Group, start: Iterable[int], gens: Sequence[int]) -> tuple[int, int]:
    """Close a set containing the identity under right multiplication by gens."""
    mul = g.mul
    seen = bytearray(g.order)
    queue = []
    for x in start:
        if not seen[x]:
            seen[x] = 1
            queue.append(x)
    if not seen[g.identity]:
        seen[g.identity] = 1
        queue.append(g.identity)
    for x in queue:
        row = mul[x]
        for s in gens:
            y = row[s]
            if not seen[y]:
                seen[y] = 1
                queue.append(y)
    mask = 0
    for x in queue:
        mask |= 1 << x
    return mask, len(queue)


def generated_subgroup(g: Group, seed: Iterable[int]) -> Subgroup:
    """Smallest subgroup containing ``seed``."""
    gens = tuple(sorted(set(seed)))
    for a in gens:
        if not 0 <= a < g.order:
            raise GroupError(f"element index {a} out of range for {g.label}")
    mask, order = _closure(g, (), gens)
    return Subgroup(mask, order, gens)


def join(g: Group, h: Subgroup, k: Subgroup) -> Subgroup:
    """Join of two subgroups, seeded from the members of ``h``."""
    gens = h.gens + tuple(s for s in k.gens if s not in h.gens)
    mask, order = _closure(g, bits(h.members), gens)
    return Subgroup(mask, order, gens)


def trivial_subgroup(g: Group) -> Subgroup:
    return Subgroup(1 << g.identity, 1, ())


def whole_group(g: Group) -> Subgroup:
    return Subgroup(g.full_mask, g.order, tuple(range(g.order)))


def cyclic_subgroups(g: Group) -> list[Subgroup]:
    found: dict[int, Subgroup] = {}
    for a in range(g.order):
        h = generated_subgroup(g, (a,))
        found.setdefault(h.members, h)
    return sorted(found.values(), key=lambda s: s.sort_key)


def all_subgroups(g: Group, max_subgroups: int = DEFAULT_MAX_SUBGROUPS) -> list[Subgroup]:
    """Every subgroup of ``g``, sorted by (order, bitmask).

    Starts from the cyclic subgroups and joins each newly found subgroup with
    every cyclic subgroup it does not already contain, until no new subgroup
    appears. Every subgroup is a join of cyclic subgroups, so this reaches
    the same fixed point as closing under all pairwise joins.
    """
    cyclic = cyclic_subgroups(g)
    found: dict[int, Subgroup] = {h.members: h for h in cyclic}
    frontier = list(cyclic)
    while frontier:
        nxt = []
        for h in frontier:
            for c in cyclic:
                if c.members & ~h.members == 0:
                    continue
                k = join(g, h, c)
                if k.members not in found:
                    found[k.members] = k
                    nxt.append(k)
                    if len(found) > max_subgroups:
                        raise SubgroupLimitError(
                            f"{g.label}: more than {max_subgroups} subgroups; "
                            "raise the subgroup cap to enumerate this group"
                        )
        frontier = nxt
    return sorted(found.values(), key=lambda s: s.sort_key)


def minimal_subgroups(g: Group, subs: Sequence[Subgroup]) -> MinimalSubgroupTable:
    by_prime: dict[int, list[Subgroup]] = {}
    for h in subs:
        if is_prime(h.order):
            by_prime.setdefault(h.order, []).append(h)
    return MinimalSubgroupTable(by_prime)


def is_closed(g: Group, mask: int) -> bool:
    if not mask >> g.identity & 1:
        return False
    mul = g.mul
    elems = list(bits(mask))
    for a in elems:
        row = mul[a]
        for b in elems:
            if not mask >> row[b] & 1:
                return False
    return True


def _require_subgroup(g: Group, h: Subgroup) -> None:
    if h.members >> g.order or not is_closed(g, h.members):
        raise InvalidSubgroupError(f"{h.elements()} is not a subgroup of {g.label}")


def conjugate_mask(g: Group, mask: int, x: int) -> int:
    """Members of x * H * x^-1."""
    mul, xi = g.mul, g.inv[x]
    row = mul[x]
    out = 0
    for a in bits(mask):
        out |= 1 << mul[row[a]][xi]
    return out


def normalizer(g: Group, h: Subgroup) -> Subgroup:
    _require_subgroup(g, h)
    mask = 0
    for x in range(g.order):
        if conjugate_mask(g, h.members, x) == h.members:
            mask |= 1 << x
    return Subgroup(mask, mask.bit_count(), tuple(bits(mask)))


def centralizer(g: Group, h: Subgroup) -> Subgroup:
    _require_subgroup(g, h)
    mul = g.mul
    elems = h.elements()
    mask = 0
    for x in range(g.order):
        row = mul[x]
        if all(row[a] == mul[a][x] for a in elems):
            mask |= 1 << x
    return Subgroup(mask, mask.bit_count(), tuple(bits(mask)))


def is_normal(g: Group, h: Subgroup) -> bool:
    return all(conjugate_mask(g, h.members, x) == h.members for x in range(g.order))


def sylow_subgroup(g: Group, p: int, subs: Sequence[Subgroup]) -> Subgroup:
    """First subgroup (canonical order) of full p-power order."""
    e = prime_factors(g.order).get(p, 0)
    if not is_prime(p) or e == 0:
        raise NoSylowError(f"{p} is not a prime divisor of |{g.label}| = {g.order}")
    target = p**e
    for h in subs:
        if h.order == target:
            return h
    raise NoSylowError(f"no subgroup of order {target} in the supplied list")


def maximal_subgroups_of(h: Subgroup, subs: Sequence[Subgroup]) -> list[Subgroup]:
    """Subgroups in ``subs`` that are maximal among the proper subgroups of ``h``."""
    proper = [k for k in subs if k.order < h.order and k.members & ~h.members == 0]
    # a non-maximal K lies in some maximal M of larger order, seen earlier
    maxes: list[Subgroup] = []
    for k in sorted(proper, key=lambda s: (-s.order, s.members)):
        if not any(k.members & ~m.members == 0 for m in maxes):
            maxes.append(k)
    return sorted(maxes, key=lambda s: s.sort_key)


def frattini_subgroup(h: Subgroup, subs: Sequence[Subgroup]) -> Subgroup:
    """Intersection of the maximal subgroups of ``h``; ``h`` itself when trivial."""
    maxes = maximal_subgroups_of(h, subs)
    if not maxes:
        return h
    mask = h.members
    for m in maxes:
        mask &= m.members
    return Subgroup(mask, mask.bit_count(), tuple(bits(mask)))


def is_abelian_subgroup(g: Group, h: Subgroup) -> bool:
    mul = g.mul
    elems = h.elements()
    return all(mul[a][b] == mul[b][a] for i, a in enumerate(elems) for b in elems[i + 1 :])


def is_elementary_abelian(g: Group, h: Subgroup | None = None) -> bool:
    """Abelian with every non-identity element of one common prime order.

    With ``h`` omitted the whole group is tested.
    """
    if h is None:
        h = whole_group(g)
    orders = {g.element_orders[a] for a in bits(h.members) if a != g.identity}
    if not orders:
        return True
    if len(orders) != 1 or not is_prime(next(iter(orders))):
        return False
    return is_abelian_subgroup(g, h)
