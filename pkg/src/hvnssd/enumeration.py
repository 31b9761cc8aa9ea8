"""Exhaustive search for NSSD commuting graphs over all subsets of D_2n.

Work is split into blocks by the first (up to three) element indices of
each subset, so blocks can run in separate processes. Counts merge by
addition and classes by keeping, per class, the lexicographically first
subset. The result does not depend on how many workers were used.
"""

from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb
from pathlib import Path
from typing import Iterable, Optional, TextIO, Union

from .canon import MAX_CANON_ORDER, canonical_form, degree_sequence_key
from .dihedral import format_element
from .graph import CommutingGraph, export_graph6, graph_from_indices
from .hyperop import HvGroup
from .linalg import char_poly
from .nssd import nssd_verdict

MAX_ORDER = 16
PREFIX_LEN = 3
CSV_HEADER = ("n", "order", "nssd_subsets", "nssd_iso_classes")
CLASSIFIERS = ("isomorphism", "degree-sequence")

# Published counts: (n, order) -> (subsets with NSSD commuting graph, NSSD graphs).
# Orders not listed are published as absent, i.e. zero.
PUBLISHED_TABLE = {
    (2, 2): (6, 1),
    (3, 2): (11, 1), (3, 4): (2, 1),
    (4, 2): (22, 1), (4, 4): (5, 2),
    (5, 2): (29, 1), (5, 4): (54, 2),
    (6, 2): (46, 1), (6, 4): (84, 2),
    (7, 2): (41, 1), (7, 4): (262, 2), (7, 6): (374, 7), (7, 8): (130, 15), (7, 10): (4, 1),
    (8, 2): (62, 1), (8, 4): (409, 2), (8, 6): (416, 7), (8, 8): (80, 11), (8, 10): (4, 1),
}
PUBLISHED_N_RANGE = (2, 8)
PUBLISHED_MAX_ORDER = 10


@dataclass(frozen=True)
class TableRow:
    n: int
    order: int
    nssd_subsets: int
    nssd_iso_classes: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n, self.order, self.nssd_subsets, self.nssd_iso_classes)


@dataclass
class EnumerationReport:
    rows: list[TableRow] = field(default_factory=list)
    # (n, order, class index) -> representative graph, classes in order of
    # their lexicographically first subset
    representatives: dict[tuple[int, int, int], CommutingGraph] = field(default_factory=dict)
    classify: str = "isomorphism"
    connected_only: bool = False

    def row(self, n: int, order: int) -> Optional[TableRow]:
        return next((r for r in self.rows if r.n == n and r.order == order), None)

    def class_representatives(self, n: int, order: int) -> list[CommutingGraph]:
        out = []
        k = 0
        while (n, order, k) in self.representatives:
            out.append(self.representatives[(n, order, k)])
            k += 1
        return out

    def extend(self, other: EnumerationReport) -> None:
        self.rows.extend(other.rows)
        self.representatives.update(other.representatives)


@lru_cache(maxsize=None)
def _hv(n: int) -> HvGroup:
    return HvGroup(n)


def _class_key(G: CommutingGraph, classify: str) -> bytes:
    if classify == "isomorphism":
        return canonical_form(G)
    return degree_sequence_key(G)


def _scan_block(n: int, k: int, prefix: tuple[int, ...], prune: bool, connected_only: bool, classify: str):
    """Scan all k-subsets (as sorted index tuples) that start with ``prefix``."""
    hv = _hv(n)
    cm = hv.commute_masks
    size = hv.group.order
    count = 0
    classes: dict[bytes, tuple[int, ...]] = {}
    for rest in combinations(range(prefix[-1] + 1, size), k - len(prefix)):
        idx = prefix + rest
        if prune:
            m = 0
            for i in idx:
                m |= 1 << i
            if any(cm[i] & m == 0 for i in idx):
                continue
        A = [[(cm[i] >> j) & 1 for j in idx] for i in idx]
        if not nssd_verdict(A):
            continue
        G = graph_from_indices(hv, idx)
        if connected_only and not G.is_connected():
            continue
        count += 1
        key = _class_key(G, classify)
        if key not in classes:
            classes[key] = idx
    return count, classes


def _scan_block_args(args):
    return _scan_block(*args)


def _prefixes(size: int, k: int):
    """Prefix blocks partitioning the k-subsets of range(size)."""
    p = min(k, PREFIX_LEN)
    for pre in combinations(range(size), p):
        if size - pre[-1] - 1 >= k - p:
            yield pre


def _check_bounds(n: int, min_order: int, max_order: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"n must be an integer >= 2, got {n!r}")
    hi = min(2 * n, MAX_ORDER)
    if not 2 <= min_order <= max_order <= hi:
        raise ValueError(f"order bounds must satisfy 2 <= min_order <= max_order <= {hi} for n={n}, "
                         f"got {min_order}..{max_order}")


def default_workers() -> int:
    env = os.environ.get("NSSD_WORKERS")
    if env:
        try:
            w = int(env)
        except ValueError:
            raise ValueError(f"NSSD_WORKERS must be an integer, got {env!r}") from None
        if w < 1:
            raise ValueError("NSSD_WORKERS must be >= 1")
        return w
    return 1


def enumerate_nssd(n: int, min_order: int = 2, max_order: int = 10, *, workers: int = 1,
                   prune: bool = True, connected_only: bool = False,
                   classify: str = "isomorphism", executor=None) -> EnumerationReport:
    """Count NSSD subsets and their graph classes for every order in range.

    ``classify`` chooses how graphs are grouped: by isomorphism (canonical
    form) or, as an alternative reading, by degree sequence. Rows with zero
    counts are kept.
    """
    _check_bounds(n, min_order, max_order)
    if classify not in CLASSIFIERS:
        raise ValueError(f"classify must be one of {CLASSIFIERS}, got {classify!r}")
    if max_order > MAX_CANON_ORDER:
        raise ValueError(f"orders above {MAX_CANON_ORDER} are not supported")
    size = 2 * n
    tasks = [(n, k, pre, prune, connected_only, classify)
             for k in range(min_order, max_order + 1)
             for pre in _prefixes(size, k)]
    if executor is not None:
        results = list(executor.map(_scan_block_args, tasks, chunksize=8))
    elif workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_scan_block_args, tasks, chunksize=8))
    else:
        results = [_scan_block(*t) for t in tasks]

    hv = _hv(n)
    report = EnumerationReport(classify=classify, connected_only=connected_only)
    per_order: dict[int, tuple[int, dict[bytes, tuple[int, ...]]]] = {
        k: (0, {}) for k in range(min_order, max_order + 1)}
    for (_, k, *_rest), (count, classes) in zip(tasks, results):
        total, merged = per_order[k]
        for key, idx in classes.items():
            if key not in merged or idx < merged[key]:
                merged[key] = idx
        per_order[k] = (total + count, merged)
    for k in range(min_order, max_order + 1):
        total, merged = per_order[k]
        report.rows.append(TableRow(n, k, total, len(merged)))
        for ci, idx in enumerate(sorted(merged.values())):
            report.representatives[(n, k, ci)] = graph_from_indices(hv, idx)
    return report


def enumerate_table(ns: Iterable[int], min_order: int = 2, max_order: int = 10, *,
                    workers: int = 1, **kwargs) -> EnumerationReport:
    """Run :func:`enumerate_nssd` for each n, clipping orders to 2n."""
    report = EnumerationReport(classify=kwargs.get("classify", "isomorphism"),
                               connected_only=kwargs.get("connected_only", False))
    ns = list(ns)
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for n in ns:
            hi = min(max_order, 2 * n, MAX_ORDER)
            if min_order > hi:
                continue
            report.extend(enumerate_nssd(n, min_order, hi, executor=pool, **kwargs))
    finally:
        if pool is not None:
            pool.shutdown()
    return report


def dedup_iso(graphs: Iterable[CommutingGraph]) -> list[CommutingGraph]:
    """One graph per isomorphism class, keeping the first seen."""
    seen: set[bytes] = set()
    out = []
    for G in graphs:
        if G.order > MAX_CANON_ORDER:
            raise ValueError(f"graphs above {MAX_CANON_ORDER} vertices are not supported")
        key = canonical_form(G)
        if key not in seen:
            seen.add(key)
            out.append(G)
    return out


def subset_text(G: CommutingGraph) -> str:
    return ", ".join(format_element(x) for x in G.labels)


def format_csv(report: EnumerationReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in sorted(report.rows, key=lambda r: (r.n, r.order)):
        w.writerow(r.as_tuple())
    return buf.getvalue()


def format_json(report: EnumerationReport) -> str:
    rows = []
    for r in sorted(report.rows, key=lambda r: (r.n, r.order)):
        reps = report.class_representatives(r.n, r.order)
        rows.append({
            "n": r.n,
            "order": r.order,
            "nssd_subsets": r.nssd_subsets,
            "nssd_iso_classes": r.nssd_iso_classes,
            "representatives": [export_graph6(G) for G in reps],
            "representative_subsets": [subset_text(G) for G in reps],
        })
    doc = {"classify": report.classify, "connected_only": report.connected_only, "rows": rows}
    return json.dumps(doc, indent=2) + "\n"


def write_report(report: EnumerationReport, fmt: str = "csv",
                 destination: Union[str, Path, TextIO, None] = None) -> str:
    """Render the report as CSV or JSON and write it to ``destination``.

    ``destination`` may be a path, an open text stream, or None (just
    return the text).
    """
    if fmt == "csv":
        text = format_csv(report)
    elif fmt == "json":
        text = format_json(report)
    else:
        raise ValueError(f"unknown report format {fmt!r}")
    if destination is None:
        return text
    if hasattr(destination, "write"):
        destination.write(text)
        return text
    path = Path(destination)
    try:
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot write report to {path}: {exc.strerror or exc}") from exc
    return text


@dataclass(frozen=True)
class Discrepancy:
    """A computed row that disagrees with the published table."""

    n: int
    order: int
    computed: tuple[int, int]
    published: tuple[int, int]
    witnesses: tuple[str, ...]
    note: str

    def describe(self) -> str:
        lines = [f"n={self.n} order={self.order}: computed (subsets, graphs)={self.computed}, "
                 f"published={self.published}", f"  {self.note}"]
        lines += [f"  witness: {{{w}}}" for w in self.witnesses]
        return "\n".join(lines)


def _class_witnesses(reps: list[CommutingGraph]) -> tuple[tuple[str, ...], str]:
    """Find non-isomorphic representatives that share a degree sequence.

    Distinct characteristic polynomials prove non-isomorphism without
    relying on the canonical form.
    """
    by_deg: dict[bytes, list[CommutingGraph]] = {}
    for G in reps:
        by_deg.setdefault(degree_sequence_key(G), []).append(G)
    witnesses = []
    notes = []
    for group in by_deg.values():
        if len(group) < 2:
            continue
        polys = [char_poly(G.matrix()) for G in group]
        distinct = len(set(polys)) == len(polys)
        witnesses.extend(subset_text(G) for G in group)
        degs = sorted(group[0].degrees())
        notes.append(f"{len(group)} non-isomorphic classes share degree sequence {degs}"
                     + (" (characteristic polynomials differ)" if distinct else ""))
    if not notes:
        return tuple(subset_text(G) for G in reps), "class representatives listed"
    return tuple(witnesses), "; ".join(notes)


def compare_with_published(report: EnumerationReport) -> list[Discrepancy]:
    """Compare every computed row in the published range with the table.

    Rows outside n in 2..8 or above order 10 have no published value and are
    skipped.
    """
    out = []
    for r in sorted(report.rows, key=lambda r: (r.n, r.order)):
        if not (PUBLISHED_N_RANGE[0] <= r.n <= PUBLISHED_N_RANGE[1] and r.order <= PUBLISHED_MAX_ORDER):
            continue
        published = PUBLISHED_TABLE.get((r.n, r.order), (0, 0))
        computed = (r.nssd_subsets, r.nssd_iso_classes)
        if computed == published:
            continue
        reps = report.class_representatives(r.n, r.order)
        if computed[0] == published[0]:
            witnesses, note = _class_witnesses(reps)
        else:
            witnesses = tuple(subset_text(G) for G in reps)
            note = "subset count differs; class representatives listed"
        out.append(Discrepancy(r.n, r.order, computed, published, witnesses, note))
    return out


def max_subsets(n: int, order: int) -> int:
    return comb(2 * n, order)
