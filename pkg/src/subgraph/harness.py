"""Executable checks of the regularity theorem and the claims behind its proof.

Every claim is checked conditionally: its hypothesis is the observed
regularity of the subgroup graph. Once the theorem holds, only cyclic groups
of square-free order are regular, so on a census the claim checks mostly
exercise the normalizer, Sylow, Frattini and join code paths.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Iterable, Sequence

from .group import (
    Group,
    GroupError,
    OrderCapError,
    direct_product,
    is_abelian,
    is_cyclic,
    is_prime,
    is_squarefree,
    make_cyclic,
    prime_factors,
)
from .groupspec import parse_group_spec
from .lattice import Lattice, RegularityReport, build_lattice, regularity
from .subgroups import (
    DEFAULT_MAX_SUBGROUPS,
    Subgroup,
    all_subgroups,
    SubgroupLimitError,
    bits,
    conjugate_mask,
    frattini_subgroup,
    generated_subgroup,
    is_abelian_subgroup,
    is_elementary_abelian,
    is_normal,
    maximal_subgroups_of,
    minimal_subgroups,
    sylow_subgroup,
)

log = logging.getLogger(__name__)

HOLDS = "holds"
FAILS = "fails"
NOT_APPLICABLE = "not-applicable"

CLAIM_NAMES = ("claim1", "claim2", "claim3", "claim4", "claim5", "claim6_counting")


@dataclass
class ClaimResult:
    status: str
    detail: str = ""
    witness: list | None = None

    def to_dict(self) -> dict:
        out: dict = {"status": self.status}
        if self.detail:
            out["detail"] = self.detail
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class ClaimReport:
    label: str
    claims: dict[str, ClaimResult] = field(default_factory=dict)

    @property
    def failures(self) -> list[str]:
        return [k for k, v in self.claims.items() if v.status == FAILS]


def predicted_regular(g: Group) -> bool:
    return is_cyclic(g) and is_squarefree(g.order)


def _atoms(lat: Lattice) -> list[Subgroup]:
    return minimal_subgroups(None, lat.vertices).all()


def _not_regular() -> ClaimResult:
    return ClaimResult(NOT_APPLICABLE, "subgroup graph is not regular")


def verify_claim1(g: Group, lat: Lattice) -> ClaimResult:
    """Odd prime-power elements normalize every minimal subgroup."""
    if not regularity(lat).is_regular:
        return _not_regular()
    atoms = _atoms(lat)
    for x, k in enumerate(g.element_orders):
        fac = prime_factors(k)
        if len(fac) != 1 or 2 in fac:
            continue
        for a in atoms:
            if conjugate_mask(g, a.members, x) != a.members:
                return ClaimResult(FAILS, f"element {x} does not normalize", [x, a.elements()])
    return ClaimResult(HOLDS)


def odd_minimal_join(g: Group, lat: Lattice) -> Subgroup:
    seed = [x for a in _atoms(lat) if a.order != 2 for x in bits(a.members)]
    return generated_subgroup(g, seed)


def verify_claim2_3(g: Group, lat: Lattice) -> tuple[ClaimResult, ClaimResult]:
    """N = join of odd-order minimal subgroups: abelian and normal, G/N a 2-group."""
    if not regularity(lat).is_regular:
        return _not_regular(), _not_regular()
    n = odd_minimal_join(g, lat)
    if not is_abelian_subgroup(g, n):
        c2 = ClaimResult(FAILS, "N is not abelian", n.elements())
    elif not is_normal(g, n):
        c2 = ClaimResult(FAILS, "N is not normal", n.elements())
    else:
        c2 = ClaimResult(HOLDS, f"|N| = {n.order}")
    index = g.order // n.order
    if index & (index - 1):
        c3 = ClaimResult(FAILS, f"|G:N| = {index} is not a power of 2", n.elements())
    else:
        c3 = ClaimResult(HOLDS, f"|G:N| = {index}")
    return c2, c3


def verify_claim4_5(g: Group, lat: Lattice) -> tuple[ClaimResult, ClaimResult]:
    """Sylow 2 elementary abelian with trivial Frattini; G abelian, Sylows elementary."""
    if not regularity(lat).is_regular:
        return _not_regular(), _not_regular()
    subs = lat.vertices
    primes = prime_factors(g.order)
    if 2 not in primes:
        c4 = ClaimResult(HOLDS, "odd order, no Sylow 2-subgroup")
    else:
        q = sylow_subgroup(g, 2, subs)
        f = frattini_subgroup(q, subs)
        if not is_elementary_abelian(g, q):
            c4 = ClaimResult(FAILS, "Sylow 2-subgroup is not elementary abelian", q.elements())
        elif f.order != 1:
            c4 = ClaimResult(FAILS, "Frattini subgroup of Sylow 2 is nontrivial", f.elements())
        else:
            c4 = ClaimResult(HOLDS, f"|Q| = {q.order}, Frattini trivial")
    if not is_abelian(g):
        c5 = ClaimResult(FAILS, "G is not abelian")
    else:
        c5 = ClaimResult(HOLDS)
        for p in primes:
            s = sylow_subgroup(g, p, subs)
            if not is_elementary_abelian(g, s):
                c5 = ClaimResult(FAILS, f"Sylow {p}-subgroup is not elementary abelian", s.elements())
                break
    return c4, c5


def _gaussian_count(p: int, d: int) -> int:
    return (p**d - 1) // (p - 1)


def elementary_abelian(p: int, d: int, max_order: int | None = None) -> Group:
    g = make_cyclic(p, max_order)
    for _ in range(d - 1):
        g = direct_product(g, make_cyclic(p, max_order), max_order)
    return g


def verify_counting_identity(
    p: int,
    d: int,
    max_order: int | None = None,
    max_subgroups: int = DEFAULT_MAX_SUBGROUPS,
) -> bool:
    """#maximal = #minimal = (p^d - 1)/(p - 1) in the elementary abelian group p^d."""
    g = elementary_abelian(p, d, max_order)
    subs = all_subgroups(g, max_subgroups)
    expected = _gaussian_count(p, d)
    n_max = len(maximal_subgroups_of(subs[-1], subs))
    n_min = sum(1 for h in subs if h.order == p)
    return n_max == n_min == expected


def verify_claim6_counting(g: Group, lat: Lattice) -> ClaimResult:
    """Degree bookkeeping that rules out a Sylow p-subgroup of order p^d, d >= 2.

    Applies to abelian G whose Sylow p-subgroup P is elementary abelian of
    rank d >= 2. For every maximal subgroup X of P it checks
    delta(X) = (p^(d-1) - 1)/(p - 1) + 1 + sum_{q != p} alpha_q, and
    delta(1) = (p^d - 1)/(p - 1) + sum_{q != p} alpha_q, which differ by
    p^(d-1) - 1 > 0.
    """
    if not is_abelian(g):
        return ClaimResult(NOT_APPLICABLE, "G is not abelian")
    subs = lat.vertices
    index = {h.members: i for i, h in enumerate(subs)}
    degs = lat.degrees
    alpha = regularity(lat).alpha_p
    checked = []
    for p, d in prime_factors(g.order).items():
        if d < 2:
            continue
        sylow = sylow_subgroup(g, p, subs)
        if not is_elementary_abelian(g, sylow):
            continue
        others = sum(v for q, v in alpha.items() if q != p)
        bottom = _gaussian_count(p, d) + others
        if degs[0] != bottom or alpha.get(p) != _gaussian_count(p, d):
            return ClaimResult(FAILS, f"delta(1) = {degs[0]}, expected {bottom}", [p, d])
        maxes = maximal_subgroups_of(sylow, subs)
        if len(maxes) != _gaussian_count(p, d):
            return ClaimResult(FAILS, f"{len(maxes)} maximal subgroups in Sylow {p}", [p, d])
        top = _gaussian_count(p, d - 1) + 1 + others
        for x in maxes:
            if degs[index[x.members]] != top:
                return ClaimResult(
                    FAILS, f"delta(X) = {degs[index[x.members]]}, expected {top}", x.elements()
                )
        if top == bottom:
            return ClaimResult(FAILS, "delta(X) equals delta(1)", [p, d])
        checked.append(f"p={p} d={d}")
    if not checked:
        return ClaimResult(NOT_APPLICABLE, "no elementary abelian Sylow of rank >= 2")
    return ClaimResult(HOLDS, ", ".join(checked))


def claim_report(g: Group, lat: Lattice) -> ClaimReport:
    c1 = verify_claim1(g, lat)
    c2, c3 = verify_claim2_3(g, lat)
    c4, c5 = verify_claim4_5(g, lat)
    c6 = verify_claim6_counting(g, lat)
    return ClaimReport(g.label, dict(zip(CLAIM_NAMES, (c1, c2, c3, c4, c5, c6))))


def structural_checks(g: Group, lat: Lattice, report: RegularityReport) -> dict[str, bool]:
    """Identities that hold on every subgroup graph, plus the degree-t remark."""
    degs = lat.degrees
    out = {
        "alpha_identity": degs[0] == report.alpha == sum(report.alpha_p.values()),
        "top_deg2_zero": lat.deg2[-1] == 0 and degs[-1] == lat.deg1[-1],
        "handshake": sum(degs) == 2 * len(lat.covers),
        "lagrange": all(g.order % h.order == 0 for h in lat.vertices),
    }
    if report.is_regular:
        t = len(prime_factors(g.order))
        out["degree_t"] = all(d == t for d in degs) and len(degs) == 2**t
    return out


@dataclass
class Analysis:
    group: Group
    subgroups: list[Subgroup]
    lattice: Lattice
    report: RegularityReport
    predicted: bool
    claims: ClaimReport
    checks: dict[str, bool]

    @property
    def observed(self) -> bool:
        return self.report.is_regular

    @property
    def match(self) -> bool:
        return self.observed == self.predicted

    def record(self, spec: str | None = None) -> dict:
        """One census line (plain JSON types)."""
        counts: dict[str, int] = {}
        for h in self.subgroups:
            counts[str(h.order)] = counts.get(str(h.order), 0) + 1
        return {
            "status": "ok",
            "spec": spec if spec is not None else self.group.label,
            "label": self.group.label,
            "order": self.group.order,
            "n_subgroups": len(self.subgroups),
            "n_edges": len(self.lattice.covers),
            "subgroup_counts": counts,
            "degree_sequence": self.report.degree_sequence,
            "alpha_p": {str(p): v for p, v in self.report.alpha_p.items()},
            "alpha": self.report.alpha,
            "observed": self.observed,
            "predicted": self.predicted,
            "match": self.match,
            "witness": list(self.report.witness) if self.report.witness else None,
            "claims": {k: v.to_dict() for k, v in self.claims.claims.items()},
            "checks": self.checks,
        }


def analyze(g: Group, max_subgroups: int = DEFAULT_MAX_SUBGROUPS) -> Analysis:
    subs = all_subgroups(g, max_subgroups)
    lat = build_lattice(g, subs)
    report = regularity(lat)
    return Analysis(
        group=g,
        subgroups=subs,
        lattice=lat,
        report=report,
        predicted=predicted_regular(g),
        claims=claim_report(g, lat),
        checks=structural_checks(g, lat, report),
    )


def verify_equivalence(g: Group, max_subgroups: int = DEFAULT_MAX_SUBGROUPS) -> tuple[bool, bool, bool]:
    """(observed regular, predicted regular, agree)."""
    subs = all_subgroups(g, max_subgroups)
    observed = regularity(build_lattice(g, subs)).is_regular
    predicted = predicted_regular(g)
    return observed, predicted, observed == predicted


# -- census -----------------------------------------------------------------


def _partitions(n: int, largest: int | None = None) -> list[tuple[int, ...]]:
    largest = n if largest is None else largest
    if n == 0:
        return [()]
    out = []
    for k in range(min(n, largest), 0, -1):
        out.extend((k,) + rest for rest in _partitions(n - k, k))
    return out


def abelian_specs(n: int) -> list[str]:
    """Every abelian group of order n as a product of cyclic prime-power factors."""
    choices: list[list[list[int]]] = [[]]
    for p, e in sorted(prime_factors(n).items()):
        choices = [
            c + [p**k for k in sorted(part)] for c in choices for part in _partitions(e)
        ]
    if n == 1:
        return ["C1"]
    return ["x".join(f"C{m}" for m in c) for c in choices]


def default_corpus(max_order: int = 100) -> list[str]:
    """Constructible census families, capped at ``max_order``.

    Cyclic C_n (n <= 100), non-cyclic abelian groups of order <= 48, D_n with
    2n <= 60, S3, S4, A4, A5, Q8 and C_m x D_n (m >= 2, n >= 3) of order <= 60.
    Not exhaustive over isomorphism types.
    """
    specs: list[tuple[str, int]] = [(f"C{n}", n) for n in range(1, 101)]
    for n in range(1, 49):
        specs += [(s, n) for s in abelian_specs(n) if s.count("x")]
    specs += [(f"D{n}", 2 * n) for n in range(1, 31)]
    specs += [("S3", 6), ("S4", 24), ("A4", 12), ("A5", 60), ("Q8", 8)]
    for m in range(2, 31):
        for n in range(3, 31):
            if 2 * m * n <= 60:
                specs.append((f"C{m}xD{n}", 2 * m * n))
    return [s for s, order in specs if order <= max_order]


@dataclass
class CensusVerdict:
    corpus: str
    records: list[dict]

    @property
    def mismatches(self) -> list[dict]:
        return [r for r in self.records if r["status"] == "ok" and not r["match"]]

    @property
    def claim_failures(self) -> list[dict]:
        return [
            r
            for r in self.records
            if r["status"] == "ok"
            and (
                any(c["status"] == FAILS for c in r["claims"].values())
                or not all(r["checks"].values())
            )
        ]

    @property
    def skipped(self) -> list[dict]:
        return [r for r in self.records if r["status"] == "skipped"]

    @property
    def errors(self) -> list[dict]:
        return [r for r in self.records if r["status"] == "error"]

    @property
    def verified(self) -> bool:
        return not self.mismatches and not self.claim_failures and not self.errors


def analyze_spec(spec: str, max_order: int | None = None, max_subgroups: int = DEFAULT_MAX_SUBGROUPS) -> dict:
    """Census worker: never raises, records skips and errors instead."""
    try:
        g = parse_group_spec(spec).build(max_order)
        return analyze(g, max_subgroups).record(spec)
    except (OrderCapError, SubgroupLimitError) as exc:
        return {"status": "skipped", "spec": spec, "reason": str(exc)}
    except GroupError as exc:
        return {"status": "error", "spec": spec, "reason": str(exc)}
    except Exception as exc:  # noqa: BLE001 - one bad group must not stop the census
        log.exception("census: %s failed", spec)
        return {"status": "error", "spec": spec, "reason": f"{type(exc).__name__}: {exc}"}


def _worker(args: tuple[str, int | None, int]) -> dict:
    return analyze_spec(*args)


def run_census(
    corpus: Sequence[str],
    max_order: int | None = None,
    max_subgroups: int = DEFAULT_MAX_SUBGROUPS,
    jobs: int | None = None,
    description: str = "",
) -> CensusVerdict:
    """Analyze every spec; results keep corpus order whatever the job count."""
    jobs = jobs or os.cpu_count() or 1
    tasks = [(s, max_order, max_subgroups) for s in corpus]
    if jobs == 1 or len(tasks) < 2:
        records = [_worker(t) for t in tasks]
    else:
        with Pool(min(jobs, len(tasks))) as pool:
            records = list(pool.imap(_worker, tasks, chunksize=1))
    return CensusVerdict(description or f"{len(corpus)} groups", records)


def iter_counting_cases(max_order: int = 200) -> Iterable[tuple[int, int]]:
    """(p, d) with d >= 1 and p^d <= max_order."""
    for p in range(2, max_order + 1):
        if not is_prime(p):
            continue
        d = 1
        while p**d <= max_order:
            yield p, d
            d += 1
