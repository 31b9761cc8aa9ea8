"""Canonical forms for small graphs.

Individualisation-refinement: the vertex set is split into an ordered,
equitable partition (starting from degrees), then a search tree branches on
the first smallest non-singleton cell. Each leaf is a vertex ordering, scored
by the upper-triangle adjacency bit string; the lexicographically smallest
string is the canonical form. Automorphisms found on the way (two leaves
with equal strings) prune sibling branches in the same orbit.
"""

from __future__ import annotations

from typing import Sequence

from .graph import CommutingGraph

MAX_CANON_ORDER = 20


def _refine(rows: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    Cells split by neighbour counts into each splitter cell, sub-cells in
    ascending count order, which keeps the result invariant under relabelling.
    """
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        for w in range(len(cells)):
            if w >= len(cells):
                break
            wmask = 0
            for v in cells[w]:
                wmask |= 1 << v
            out: list[list[int]] = []
            split = False
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((rows[v] & wmask).bit_count(), []).append(v)
                if len(groups) == 1:
                    out.append(cell)
                else:
                    split = True
                    out.extend(groups[k] for k in sorted(groups))
            if split:
                cells = out
                changed = True
    return cells


def _individualize(cells: list[list[int]], ci: int, v: int) -> list[list[int]]:
    cell = cells[ci]
    rest = [x for x in cell if x != v]
    return cells[:ci] + [[v], rest] + cells[ci + 1:]


def _certificate(rows: Sequence[int], order: Sequence[int]) -> int:
    """Upper-triangle adjacency bits (row-major) under ``order``, as one int.

    All orderings have the same length, so integer comparison is
    lexicographic comparison of the bit strings.
    """
    n = len(order)
    cert = 0
    for i in range(n):
        r = rows[order[i]]
        for j in range(i + 1, n):
            cert = (cert << 1) | ((r >> order[j]) & 1)
    return cert


class _Search:
    def __init__(self, rows: Sequence[int]):
        self.rows = rows
        self.n = len(rows)
        self.best_cert: int | None = None
        self.best_order: list[int] | None = None
        self.best_path: list[int] | None = None
        self.first_cert: int | None = None
        self.first_order: list[int] | None = None
        self.first_path: list[int] | None = None
        self.automorphisms: list[list[int]] = []

    def _orbit_rep(self, prefix: list[int]):
        """Union-find over automorphisms that fix ``prefix`` pointwise."""
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.automorphisms:
            if all(g[p] == p for p in prefix):
                for x in range(self.n):
                    a, b = find(x), find(g[x])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return find

    def _leaf(self, order: list[int], path: list[int]) -> int:
        cert = _certificate(self.rows, order)
        if self.first_cert is None:
            self.first_cert, self.first_order, self.first_path = cert, order, path
            self.best_cert, self.best_order, self.best_path = cert, order, path
            return len(path)
        for ref_cert, ref_order, ref_path in ((self.first_cert, self.first_order, self.first_path),
                                              (self.best_cert, self.best_order, self.best_path)):
            if cert == ref_cert:
                # ref_order[k] -> order[k] is an automorphism
                g = [0] * self.n
                for a, b in zip(ref_order, order):
                    g[a] = b
                self.automorphisms.append(g)
                common = 0
                while common < min(len(path), len(ref_path)) and path[common] == ref_path[common]:
                    common += 1
                return common
        if cert < self.best_cert:
            self.best_cert, self.best_order, self.best_path = cert, order, path
        return len(path)

    def run(self, cells: list[list[int]], path: list[int]) -> int:
        cells = _refine(self.rows, cells)
        if len(cells) == self.n:
            return self._leaf([c[0] for c in cells], path)
        ci = min((i for i, c in enumerate(cells) if len(c) > 1), key=lambda i: (len(cells[i]), i))
        depth = len(path)
        explored: list[int] = []
        for v in sorted(cells[ci]):
            if explored:
                find = self._orbit_rep(path)
                if any(find(v) == find(u) for u in explored):
                    continue
            explored.append(v)
            back = self.run(_individualize(cells, ci, v), path + [v])
            if back < depth:
                return back
        return depth


def canonical_labeling(G: CommutingGraph) -> list[int]:
    """Vertex order (old indices) that produces the canonical adjacency."""
    if G.order > MAX_CANON_ORDER:
        raise ValueError(f"canonical form limited to {MAX_CANON_ORDER} vertices, got {G.order}")
    if G.order == 0:
        return []
    s = _Search(G.rows)
    s.run([list(range(G.order))], [])
    return s.best_order


def canonical_form(G: CommutingGraph) -> bytes:
    """Bytes equal for two graphs exactly when they are isomorphic."""
    order = canonical_labeling(G)
    n = G.order
    cert = _certificate(G.rows, order) if n else 0
    nbits = n * (n - 1) // 2
    return bytes([n]) + cert.to_bytes((nbits + 7) // 8, "big")


def degree_sequence_key(G: CommutingGraph) -> bytes:
    """Sorted degree sequence; a coarser key than :func:`canonical_form`."""
    return bytes([G.order]) + bytes(sorted(G.degrees()))
