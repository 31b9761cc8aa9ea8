"""The 43 published vertex sets and their batch verification.

The sets live in ``data/gamma_sets.txt``; this module only loads and checks
them. A set whose commuting graph turns out not to be NSSD is reported as a
discrepancy rather than raised.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Optional, Union

from .dihedral import DihedralGroup, GroupElement, format_element
from .graph import CommutingGraph, commuting_graph
from .hyperop import HvGroup
from .nssd import NssdCertificate, is_nssd, nssd_verdict

# Vertex count implied by the figure each set is drawn in.
FIGURE_ORDERS = {
    1: 2, 2: 4, 3: 6, 4: 6, 5: 6, 6: 6, 7: 6,
    **{i: 8 for i in range(8, 13)},
    **{i: 10 for i in range(13, 25)},
    **{i: 12 for i in range(25, 42)},
    42: 14, 43: 16,
}


@dataclass(frozen=True)
class GammaSet:
    id: int
    n: int
    elements: tuple[GroupElement, ...]

    def __post_init__(self):
        g = DihedralGroup(self.n)
        for x in self.elements:
            g.validate(x)
        if len(set(self.elements)) != len(self.elements):
            raise ValueError(f"set {self.id} has repeated elements")
        expected = FIGURE_ORDERS.get(self.id)
        if expected is not None and expected != len(self.elements):
            raise ValueError(f"set {self.id} has {len(self.elements)} elements, figure shows {expected}")

    def text(self) -> str:
        return ", ".join(format_element(x) for x in self.elements)


def parse_catalog(text: str) -> dict[int, GammaSet]:
    out: dict[int, GammaSet] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split(";")]
        if len(parts) != 3:
            raise ValueError(f"line {lineno}: expected 'id; n; elements', got {raw!r}")
        gid, n = int(parts[0]), int(parts[1])
        if gid in out:
            raise ValueError(f"line {lineno}: duplicate id {gid}")
        elements = tuple(DihedralGroup(n).parse_subset(parts[2]))
        out[gid] = GammaSet(gid, n, elements)
    return out


@lru_cache(maxsize=None)
def _default_catalog() -> dict[int, GammaSet]:
    text = resources.files("hvnssd").joinpath("data/gamma_sets.txt").read_text(encoding="utf-8")
    return parse_catalog(text)


def load_catalog(path: Union[str, Path, None] = None) -> dict[int, GammaSet]:
    if path is None:
        return dict(_default_catalog())
    return parse_catalog(Path(path).read_text(encoding="utf-8"))


def gamma(gid: int) -> GammaSet:
    cat = _default_catalog()
    if gid not in cat:
        raise KeyError(f"no vertex set with id {gid} (valid ids: {min(cat)}..{max(cat)})")
    return cat[gid]


@dataclass(frozen=True)
class GammaVerification:
    gamma: GammaSet
    graph: CommutingGraph
    certificate: NssdCertificate
    molecular: bool

    @property
    def order(self) -> int:
        return self.graph.order


@lru_cache(maxsize=None)
def _hv(n: int) -> HvGroup:
    return HvGroup(n)


def verify_gamma(gid: int) -> GammaVerification:
    gs = gamma(gid)
    G = commuting_graph(_hv(gs.n), gs.elements)
    return GammaVerification(gs, G, is_nssd(G), G.is_molecular())


def verify_all() -> list[GammaVerification]:
    return [verify_gamma(gid) for gid in sorted(_default_catalog())]


SUMMARY_HEADER = ("id", "n", "order", "figure_order", "nssd", "molecular")


def summary_rows(results: list[GammaVerification]) -> list[tuple]:
    return [(r.gamma.id, r.gamma.n, r.order, FIGURE_ORDERS.get(r.gamma.id), r.certificate.verdict, r.molecular)
            for r in results]


def format_summary_csv(results: list[GammaVerification]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SUMMARY_HEADER)
    for row in summary_rows(results):
        w.writerow([str(x).lower() if isinstance(x, bool) else x for x in row])
    return buf.getvalue()


def single_substitutions(gid: int) -> list[tuple[GroupElement, GroupElement]]:
    """All (old, new) single-element replacements that make the set NSSD.

    Useful for spotting transcription errors in a failing set.
    """
    gs = gamma(gid)
    hv = _hv(gs.n)
    els = list(gs.elements)
    fixes = []
    for pos, old in enumerate(els):
        for new in hv.group.elements():
            if new in els:
                continue
            trial = els[:pos] + [new] + els[pos + 1:]
            if nssd_verdict(commuting_graph(hv, trial).matrix()):
                fixes.append((old, new))
    return fixes


@dataclass(frozen=True)
class CatalogDiscrepancy:
    id: int
    n: int
    elements: str
    certificate: NssdCertificate
    connected: bool
    isolated: tuple[str, ...]
    substitutions: tuple[str, ...]

    def describe(self) -> str:
        c = self.certificate
        lines = [f"set {self.id} (n={self.n}): {c.describe()}",
                 f"  elements: {{{self.elements}}}",
                 f"  det={c.det} minors={list(c.minor_diag)} connected={self.connected}"]
        if self.isolated:
            lines.append(f"  isolated vertices: {', '.join(self.isolated)}")
        if self.substitutions:
            lines.append(f"  single replacements giving NSSD: {'; '.join(self.substitutions)}")
        return "\n".join(lines)


def discrepancies(results: Optional[list[GammaVerification]] = None) -> list[CatalogDiscrepancy]:
    results = verify_all() if results is None else results
    out = []
    for r in results:
        if r.certificate.verdict:
            continue
        G = r.graph
        isolated = tuple(format_element(G.labels[i]) for i in range(G.order) if G.rows[i] == 0)
        subs = tuple(f"{format_element(a)} -> {format_element(b)}" for a, b in single_substitutions(r.gamma.id))
        out.append(CatalogDiscrepancy(r.gamma.id, r.gamma.n, r.gamma.text(), r.certificate,
                                      G.is_connected(), isolated, subs))
    return out
