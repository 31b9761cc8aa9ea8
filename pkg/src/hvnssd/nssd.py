"""NSSD test: non-singular adjacency, every vertex-deleted subgraph singular."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .graph import CommutingGraph
from .linalg import delete_index, determinant, nullity


class Failure(enum.Enum):
    SINGULAR = "singular"
    NONSINGULAR_DECK_ENTRY = "nonsingular deck entry"


@dataclass(frozen=True)
class NssdCertificate:
    det: int
    minor_diag: tuple[int, ...]
    verdict: bool
    failure: Optional[Failure] = None
    failing_vertex: Optional[int] = None

    def __bool__(self) -> bool:
        return self.verdict

    def describe(self) -> str:
        if self.verdict:
            return "NSSD"
        if self.failure is Failure.SINGULAR:
            return "not NSSD (adjacency matrix is singular)"
        return f"not NSSD (deleting vertex {self.failing_vertex} leaves a non-singular graph)"


def _matrix(G: Union[CommutingGraph, Sequence[Sequence[int]]]):
    return G.matrix() if isinstance(G, CommutingGraph) else [list(r) for r in G]


def is_nssd(G: Union[CommutingGraph, Sequence[Sequence[int]]]) -> NssdCertificate:
    """Decide NSSD from det(A) and the n principal minors of A.

    Since (A^-1)_ii = minor_i / det(A), this is the same as asking for an
    invertible A whose inverse has a zero diagonal. A one-vertex graph is
    singular and gets a negative verdict.
    """
    A = _matrix(G)
    det = determinant(A)
    minors = tuple(determinant(delete_index(A, i)) for i in range(len(A)))
    if det == 0:
        return NssdCertificate(det, minors, False, Failure.SINGULAR)
    for i, m in enumerate(minors):
        if m != 0:
            return NssdCertificate(det, minors, False, Failure.NONSINGULAR_DECK_ENTRY, i)
    return NssdCertificate(det, minors, True)


def nssd_verdict(A: Sequence[Sequence[int]]) -> bool:
    """Short-circuiting yes/no version of :func:`is_nssd` for bulk searches."""
    if determinant(A) == 0:
        return False
    return all(determinant(delete_index(A, i)) == 0 for i in range(len(A)))


def is_nssd_spectral(G: Union[CommutingGraph, Sequence[Sequence[int]]]) -> bool:
    """Independent check through exact ranks only: nullity(A) = 0 and
    nullity(A - v) >= 1 for every vertex v."""
    A = _matrix(G)
    if nullity(A) != 0:
        return False
    return all(nullity(delete_index(A, i)) >= 1 for i in range(len(A)))
