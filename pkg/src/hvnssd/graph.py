"""Commuting graphs and the small graph toolkit the rest of the package needs."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Optional, Sequence

from .dihedral import GroupElement, format_element
from .hyperop import HvGroup


@dataclass(frozen=True)
class CommutingGraph:
    """A labelled simple graph with an exact 0/1 adjacency matrix.

    ``rows[i]`` is the neighbourhood of vertex ``i`` as a bitmask; both
    views are kept because elimination wants the matrix and enumeration
    wants the bits.
    """

    labels: tuple
    adjacency: tuple[tuple[int, ...], ...]
    rows: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = len(self.labels)
        if len(self.adjacency) != n or any(len(r) != n for r in self.adjacency):
            raise ValueError("adjacency shape does not match label count")
        if len(set(self.labels)) != n:
            raise ValueError("vertex labels must be distinct")
        rows = []
        for i, r in enumerate(self.adjacency):
            if r[i] != 0:
                raise ValueError(f"non-zero diagonal at vertex {i}")
            m = 0
            for j, x in enumerate(r):
                if x not in (0, 1):
                    raise ValueError("adjacency entries must be 0 or 1")
                if x != self.adjacency[j][i]:
                    raise ValueError(f"adjacency not symmetric at ({i}, {j})")
                if x:
                    m |= 1 << j
            rows.append(m)
        object.__setattr__(self, "rows", tuple(rows))

    @classmethod
    def from_adjacency(cls, matrix: Sequence[Sequence[int]], labels: Optional[Sequence[Hashable]] = None):
        adj = tuple(tuple(int(x) for x in r) for r in matrix)
        return cls(tuple(labels) if labels is not None else tuple(range(len(adj))), adj)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None):
        A = [[0] * n for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError("loops are not allowed")
            A[u][v] = A[v][u] = 1
        return cls.from_adjacency(A, labels)

    @property
    def order(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def matrix(self) -> list[list[int]]:
        return [list(r) for r in self.adjacency]

    def edges(self) -> list[tuple[int, int]]:
        n = self.order
        return [(i, j) for i in range(n) for j in range(i + 1, n) if self.adjacency[i][j]]

    def degree(self, v: int) -> int:
        if not 0 <= v < self.order:
            raise IndexError(f"vertex {v} out of range for order {self.order}")
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def index_of(self, label) -> int:
        return self.labels.index(label)

    def delete_vertex(self, v: int) -> CommutingGraph:
        if self.order < 2:
            raise ValueError("cannot delete a vertex from a graph with fewer than 2 vertices")
        if not 0 <= v < self.order:
            raise IndexError(f"vertex {v} out of range for order {self.order}")
        keep = [i for i in range(self.order) if i != v]
        return self.induced(keep)

    def induced(self, vertices: Sequence[int]) -> CommutingGraph:
        adj = tuple(tuple(self.adjacency[i][j] for j in vertices) for i in vertices)
        return CommutingGraph(tuple(self.labels[i] for i in vertices), adj)

    def permuted(self, perm: Sequence[int]) -> CommutingGraph:
        """Relabel so that new vertex ``k`` is old vertex ``perm[k]``."""
        if sorted(perm) != list(range(self.order)):
            raise ValueError("not a permutation of the vertex set")
        return self.induced(perm)

    def is_connected(self) -> bool:
        n = self.order
        if n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for i in _bits(frontier):
                nxt |= self.rows[i]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << n) - 1

    def is_molecular(self) -> bool:
        """Connected with maximum degree at most 3 (a carbon skeleton)."""
        return self.is_connected() and self.max_degree() <= 3

    def has_isolated_vertex(self) -> bool:
        return any(r == 0 for r in self.rows)

    def disjoint_union(self, other: CommutingGraph) -> CommutingGraph:
        n, m = self.order, other.order
        A = [list(r) + [0] * m for r in self.adjacency]
        A += [[0] * n + list(r) for r in other.adjacency]
        labels = [(0, x) for x in self.labels] + [(1, x) for x in other.labels]
        return CommutingGraph.from_adjacency(A, labels)

    def with_edge(self, u: int, v: int) -> CommutingGraph:
        A = self.matrix()
        A[u][v] = A[v][u] = 1
        return CommutingGraph.from_adjacency(A, self.labels)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def commuting_graph(hv: HvGroup, subset: Iterable[GroupElement]) -> CommutingGraph:
    """Commuting graph of ``subset``: an edge joins s != t whenever s o t = t o s.

    Vertices follow the global element order, whatever order ``subset``
    arrives in.
    """
    els = list(subset)
    if not els:
        raise ValueError("commuting graph of an empty subset")
    g = hv.group
    idx = sorted({g.index(x) for x in els})
    if len(idx) != len(els):
        raise ValueError("subset contains repeated elements")
    return graph_from_indices(hv, idx)


def graph_from_indices(hv: HvGroup, idx: Sequence[int]) -> CommutingGraph:
    cm = hv.commute_masks
    adj = tuple(tuple((cm[i] >> j) & 1 for j in idx) for i in idx)
    return CommutingGraph(tuple(hv.group.element_at(i) for i in idx), adj)


def full_commuting_graph(hv: HvGroup) -> CommutingGraph:
    return graph_from_indices(hv, range(hv.group.order))


def _label_text(x) -> str:
    return format_element(x) if isinstance(x, GroupElement) else str(x)


def export_dot(G: CommutingGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for i, lab in enumerate(G.labels):
        lines.append(f'  v{i} [label="{_label_text(lab)}"];')
    for i, j in G.edges():
        lines.append(f"  v{i} -- v{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_graph6(G: CommutingGraph) -> str:
    """graph6 text for graphs on at most 62 vertices (no header)."""
    n = G.order
    if n > 62:
        raise ValueError("short-form graph6 supports at most 62 vertices")
    bits = [G.adjacency[i][j] for j in range(n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(63 + n)]
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        out.append(chr(63 + v))
    return "".join(out)


def parse_graph6(text: str) -> CommutingGraph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s or not 63 <= ord(s[0]) <= 125:
        raise ValueError(f"unsupported graph6 string {text!r}")
    n = ord(s[0]) - 63
    bits = []
    for ch in s[1:]:
        v = ord(ch) - 63
        if not 0 <= v < 64:
            raise ValueError(f"bad graph6 character {ch!r}")
        bits.extend((v >> (5 - k)) & 1 for k in range(6))
    need = n * (n - 1) // 2
    if len(bits) < need or len(bits) - need >= 6:
        raise ValueError("graph6 payload length does not match vertex count")
    A = [[0] * n for _ in range(n)]
    k = 0
    for j in range(n):
        for i in range(j):
            A[i][j] = A[j][i] = bits[k]
            k += 1
    return CommutingGraph.from_adjacency(A)
