"""The subgroup graph: covering relation, vertex degrees, regularity."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .group import Group, is_prime
from .subgroups import Subgroup, join, minimal_subgroups


class LatticeIntegrityError(ValueError):
    """The supplied subgroup list is not a complete, sorted subgroup lattice."""


@dataclass(frozen=True)
class Lattice:
    """Hasse diagram of the subgroup lattice.

    ``covers`` holds directed pairs (i, j): vertex i is a maximal subgroup of
    vertex j. Degrees are taken on the underlying undirected graph.
    """

    label: str
    vertices: tuple[Subgroup, ...]
    covers: tuple[tuple[int, int], ...]
    deg1: tuple[int, ...]
    deg2: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(a + b for a, b in zip(self.deg1, self.deg2))

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.vertices) - 1


@dataclass
class RegularityReport:
    label: str
    vertex_count: int
    degree_sequence: list[int]
    alpha_p: dict[int, int]
    alpha: int
    is_regular: bool
    witness: tuple[int, int] | None = None
    degrees: list[int] = field(default_factory=list, repr=False)


def _check_complete(g: Group, subs: Sequence[Subgroup]) -> None:
    if not subs:
        raise LatticeIntegrityError(f"{g.label}: empty subgroup list")
    keys = [h.sort_key for h in subs]
    if keys != sorted(keys) or len(set(keys)) != len(keys):
        raise LatticeIntegrityError(f"{g.label}: subgroups not sorted by (order, mask)")
    if subs[0].order != 1 or subs[-1].members != g.full_mask:
        raise LatticeIntegrityError(f"{g.label}: trivial subgroup or whole group missing")
    present = {h.members for h in subs}
    for i, h in enumerate(subs):
        for k in subs[i + 1 :]:
            if h.members & k.members not in present:
                raise LatticeIntegrityError(
                    f"{g.label}: meet of {h.elements()} and {k.elements()} missing"
                )
    atoms = minimal_subgroups(g, subs).all()
    for i, a in enumerate(atoms):
        for b in atoms[i + 1 :]:
            if join(g, a, b).members not in present:
                raise LatticeIntegrityError(
                    f"{g.label}: join of {a.elements()} and {b.elements()} missing"
                )


def build_lattice(g: Group, subs: Sequence[Subgroup], check: bool = True) -> Lattice:
    """Covering relation of ``subs`` (complete and sorted, as from all_subgroups).

    Pair (i, j) is a cover when H_i < H_j and no vertex lies strictly between.
    The strictly-between set is computed as a bitset over vertex indices:
    (strict overgroups of i) & (strict subgroups of j), restricted to vertices
    whose orders sit between by divisibility.
    """
    if check:
        _check_complete(g, subs)
    n = len(subs)
    masks = [h.members for h in subs]
    orders = [h.order for h in subs]
    up = [0] * n
    down = [0] * n
    for i in range(n):
        mi, oi = masks[i], orders[i]
        for j in range(i + 1, n):
            oj = orders[j]
            if oj > oi and oj % oi == 0 and mi & ~masks[j] == 0:
                up[i] |= 1 << j
                down[j] |= 1 << i
    covers = []
    deg1 = [0] * n
    deg2 = [0] * n
    for i in range(n):
        rest = up[i]
        while rest:
            low = rest & -rest
            j = low.bit_length() - 1
            rest ^= low
            if up[i] & down[j] == 0:
                covers.append((i, j))
                deg2[i] += 1
                deg1[j] += 1
    return Lattice(g.label, tuple(subs), tuple(covers), tuple(deg1), tuple(deg2))


def degree(lat: Lattice, v: int) -> tuple[int, int, int]:
    """(maximal subgroups of v, overgroups in which v is maximal, total)."""
    if not 0 <= v < len(lat.vertices):
        raise IndexError(f"vertex {v} out of range for {lat.label}")
    d1, d2 = lat.deg1[v], lat.deg2[v]
    return d1, d2, d1 + d2


def regularity(lat: Lattice) -> RegularityReport:
    degs = list(lat.degrees)
    witness = None
    for j, d in enumerate(degs):
        if d != degs[0]:
            witness = (0, j)
            break
    alpha_p: dict[int, int] = {}
    for h in lat.vertices:
        if is_prime(h.order):
            alpha_p[h.order] = alpha_p.get(h.order, 0) + 1
    return RegularityReport(
        label=lat.label,
        vertex_count=len(degs),
        degree_sequence=sorted(degs),
        alpha_p=dict(sorted(alpha_p.items())),
        alpha=sum(alpha_p.values()),
        is_regular=witness is None,
        witness=witness,
        degrees=degs,
    )


def export_dot(lat: Lattice) -> str:
    """Deterministic DOT digraph, one rank per subgroup order, edges upward."""
    lines = [
        f'digraph "{lat.label}" {{',
        "  rankdir=BT;",
        "  node [shape=box];",
    ]
    by_order: dict[int, list[int]] = {}
    for i, h in enumerate(lat.vertices):
        by_order.setdefault(h.order, []).append(i)
    for i, h in enumerate(lat.vertices):
        lines.append(f'  v{i} [label="order={h.order} idx={i}"];')
    for order in sorted(by_order):
        ids = " ".join(f"v{i};" for i in by_order[order])
        lines.append(f"  {{ rank=same; {ids} }}")
    for i, j in lat.covers:
        lines.append(f"  v{i} -> v{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
