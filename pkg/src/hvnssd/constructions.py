"""Two ways of building larger NSSD commuting graphs from smaller pieces.

``pendant_union`` hangs one pendant vertex on each vertex of a base graph;
``bridge_join`` links two NSSD graphs by a single edge. Both always return
the graph and its certificate, together with a named report of which
hypotheses held.

The pendant construction is only guaranteed when the pendant-to-base
assignment is a perfect matching. If two pendants share a neighbour, deleting
one pendant pair isolates the other and the graph is singular. The report
therefore separates the literal hypotheses (a)-(c) from the strengthened set
(a)-(d), and only the strengthened set is treated as a guarantee.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .dihedral import GroupElement, format_element
from .graph import CommutingGraph, commuting_graph, graph_from_indices
from .hyperop import HvGroup
from .linalg import char_poly, delete_index, nullity, poly_mul, poly_sub, IntPolynomial
from .nssd import NssdCertificate, is_nssd, nssd_verdict


class TheoremViolation(AssertionError):
    """A construction met its guaranteeing hypotheses but is not NSSD."""

    def __init__(self, result: "ConstructionResult"):
        self.result = result
        super().__init__(f"hypotheses met but graph is {result.certificate.describe()}")


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def describe(self) -> str:
        s = f"[{'pass' if self.passed else 'FAIL'}] {self.name}"
        return f"{s}: {self.detail}" if self.detail else s


@dataclass(frozen=True)
class ConstructionResult:
    graph: CommutingGraph
    checks: tuple[Check, ...]
    literal_hypotheses_met: bool
    preconditions_met: bool
    certificate: NssdCertificate

    def report_lines(self) -> list[str]:
        lines = [c.describe() for c in self.checks]
        lines.append(f"literal hypotheses met: {self.literal_hypotheses_met}")
        lines.append(f"guaranteeing hypotheses met: {self.preconditions_met}")
        return lines


def _split(hv: HvGroup, us: Iterable[GroupElement], vs: Iterable[GroupElement]):
    us, vs = list(us), list(vs)
    if not us or not vs:
        raise ValueError("both vertex sets must be non-empty")
    if len(set(us)) != len(us) or len(set(vs)) != len(vs):
        raise ValueError("vertex sets contain repeated elements")
    overlap = set(us) & set(vs)
    if overlap:
        raise ValueError("vertex sets overlap: " + ", ".join(format_element(x) for x in hv.group.sort(overlap)))
    return hv.group.sort(us), hv.group.sort(vs)


def _names(xs) -> str:
    return "{" + ", ".join(format_element(x) for x in xs) + "}"


def pendant_union(hv: HvGroup, us: Iterable[GroupElement], vs: Iterable[GroupElement]) -> ConstructionResult:
    us, vs = _split(hv, us, vs)
    G = commuting_graph(hv, us + vs)

    inner = [(x, y) for x, y in combinations(vs, 2) if hv.commutes(x, y)]
    partners = {v: [u for u in us if hv.commutes(u, v)] for v in vs}
    bad = [v for v in vs if len(partners[v]) != 1]
    targets = [partners[v][0] for v in vs if len(partners[v]) == 1]
    shared = sorted({u for u in targets if targets.count(u) > 1}, key=hv.group.index)

    checks = (
        Check("(a) commuting graph of V has no edges", not inner,
              "" if not inner else "edges " + ", ".join(f"{format_element(x)}-{format_element(y)}" for x, y in inner)),
        Check("(b) |U| = |V|", len(us) == len(vs), f"|U|={len(us)}, |V|={len(vs)}"),
        Check("(c) each v in V commutes with exactly one u in U", not bad,
              "" if not bad else "violated by " + _names(bad)),
        Check("(d) the v -> u assignment is a perfect matching", not bad and not shared and len(us) == len(vs),
              "" if not shared else "shared partners " + _names(shared)),
    )
    literal = all(c.passed for c in checks[:3])
    strong = literal and checks[3].passed
    result = ConstructionResult(G, checks, literal, strong, is_nssd(G))
    if strong and not result.certificate.verdict:
        raise TheoremViolation(result)
    return result


def bridge_join(hv: HvGroup, us: Iterable[GroupElement], vs: Iterable[GroupElement]) -> ConstructionResult:
    us, vs = _split(hv, us, vs)
    G = commuting_graph(hv, us + vs)
    cert_u = is_nssd(commuting_graph(hv, us))
    cert_v = is_nssd(commuting_graph(hv, vs))
    cross = [(u, v) for u in us for v in vs if hv.commutes(u, v)]
    checks = (
        Check("(a) commuting graph of U is NSSD", cert_u.verdict, cert_u.describe()),
        Check("(b) commuting graph of V is NSSD", cert_v.verdict, cert_v.describe()),
        Check("(c) exactly one commuting pair (u, v) across U and V", len(cross) == 1,
              ", ".join(f"{format_element(u)}-{format_element(v)}" for u, v in cross) or "none"),
    )
    met = all(c.passed for c in checks)
    result = ConstructionResult(G, checks, met, met, is_nssd(G))
    if met and not result.certificate.verdict:
        raise TheoremViolation(result)
    return result


@dataclass(frozen=True)
class PendantNullity:
    nullity: int
    fully_reduced: bool


def pendant_nullity(G: CommutingGraph) -> PendantNullity:
    """Nullity via repeated removal of a pendant vertex and its neighbour.

    Removing such a pair never changes the nullity. When the residue has no
    edges its vertex count is the answer; otherwise fall back to exact rank.
    """
    rows = list(G.rows)
    alive = (1 << G.order) - 1
    while True:
        pendant = next((v for v in range(G.order) if alive >> v & 1 and (rows[v] & alive).bit_count() == 1), None)
        if pendant is None:
            break
        u = (rows[pendant] & alive).bit_length() - 1
        alive &= ~((1 << pendant) | (1 << u))
    left = [v for v in range(G.order) if alive >> v & 1]
    if all(rows[v] & alive == 0 for v in left):
        return PendantNullity(len(left), True)
    return PendantNullity(nullity(G.induced(left).matrix()), False)


def bridge_charpoly_sides(G1: CommutingGraph, u: int, G2: CommutingGraph, v: int) -> tuple[IntPolynomial, IntPolynomial]:
    """Both sides of P(G') = P(G1)P(G2) - P(G1-u)P(G2-v), G' = G1 + G2 + edge uv."""
    if not 0 <= u < G1.order or not 0 <= v < G2.order:
        raise IndexError("bridge endpoint out of range")
    joined = G1.disjoint_union(G2).with_edge(u, G1.order + v)
    A1, A2 = G1.matrix(), G2.matrix()
    lhs = char_poly(joined.matrix())
    rhs = poly_sub(poly_mul(char_poly(A1), char_poly(A2)),
                   poly_mul(char_poly(delete_index(A1, u)), char_poly(delete_index(A2, v))))
    return lhs, rhs


def bridge_charpoly_identity(G1: CommutingGraph, u: int, G2: CommutingGraph, v: int) -> bool:
    lhs, rhs = bridge_charpoly_sides(G1, u, G2, v)
    return lhs == rhs


# Exhaustive validation over small groups.

@dataclass
class SweepTally:
    """Outcome of checking a construction over every admissible (U, V)."""

    n: int
    theorem: str
    guaranteed: int = 0
    guaranteed_nssd: int = 0
    literal_only: int = 0
    literal_only_nssd: int = 0
    counterexamples: list = field(default_factory=list)
    literal_only_failures: list = field(default_factory=list)

    def summary(self) -> str:
        s = (f"n={self.n} {self.theorem}: {self.guaranteed_nssd}/{self.guaranteed} NSSD under guaranteeing hypotheses")
        if self.theorem == "pendant":
            s += f"; {self.literal_only_nssd}/{self.literal_only} NSSD under literal hypotheses only"
        return s


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _mask(idx: Iterable[int]) -> int:
    m = 0
    for i in idx:
        m |= 1 << i
    return m


def _witness(hv: HvGroup, us: Sequence[int], vs: Sequence[int]) -> tuple[str, str]:
    g = hv.group
    return (_names(g.element_at(i) for i in us), _names(g.element_at(i) for i in vs))


def sweep_pendant(n: int, max_failures: int = 20) -> SweepTally:
    """Every (U, V) with V independent, |U| = |V|, each v having exactly one
    neighbour in U. Instances are split into perfect-matching ones and the
    rest; any non-NSSD perfect-matching instance is a counterexample."""
    hv = HvGroup(n)
    cm = hv.commute_masks
    size = hv.group.order
    tally = SweepTally(n, "pendant")
    for k in range(1, n + 1):
        for us in combinations(range(size), k):
            umask = _mask(us)
            cands = [x for x in range(size) if not umask >> x & 1 and (cm[x] & umask).bit_count() == 1]
            for vs in combinations(cands, k):
                vmask = _mask(vs)
                if any(cm[x] & vmask for x in vs):
                    continue
                partners = {cm[x] & umask for x in vs}
                matched = len(partners) == k
                A = graph_from_indices(hv, sorted(us + vs)).matrix()
                ok = nssd_verdict(A)
                if matched:
                    tally.guaranteed += 1
                    tally.guaranteed_nssd += ok
                    if not ok:
                        tally.counterexamples.append(_witness(hv, us, vs))
                else:
                    tally.literal_only += 1
                    tally.literal_only_nssd += ok
                    if not ok and len(tally.literal_only_failures) < max_failures:
                        tally.literal_only_failures.append(_witness(hv, us, vs))
    return tally


def nssd_subsets(hv: HvGroup) -> list[int]:
    """Bitmasks of every subset of D_2n whose commuting graph is NSSD."""
    cm = hv.commute_masks
    size = hv.group.order
    out = []
    for k in range(2, size + 1):
        for idx in combinations(range(size), k):
            m = _mask(idx)
            if any(cm[i] & m == 0 for i in idx):
                continue
            if nssd_verdict(graph_from_indices(hv, idx).matrix()):
                out.append(m)
    return out


def sweep_bridge(n: int) -> SweepTally:
    """Every unordered pair of disjoint NSSD subsets joined by exactly one
    commuting pair."""
    hv = HvGroup(n)
    cm = hv.commute_masks
    found = nssd_subsets(hv)
    tally = SweepTally(n, "bridge")
    for a in range(len(found)):
        um = found[a]
        ubits = _bits(um)
        for b in range(a + 1, len(found)):
            vm = found[b]
            if um & vm:
                continue
            cross = sum((cm[i] & vm).bit_count() for i in ubits)
            if cross != 1:
                continue
            ok = nssd_verdict(graph_from_indices(hv, sorted(ubits + _bits(vm))).matrix())
            tally.guaranteed += 1
            tally.guaranteed_nssd += ok
            if not ok:
                tally.counterexamples.append(_witness(hv, ubits, _bits(vm)))
    return tally
