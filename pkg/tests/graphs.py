"""Small graph builders shared by the tests."""

import random

from hvnssd.graph import CommutingGraph


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> CommutingGraph:
    A = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                A[i][j] = A[j][i] = 1
    return CommutingGraph.from_adjacency(A)


def path_graph(n: int) -> CommutingGraph:
    return CommutingGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> CommutingGraph:
    return CommutingGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> CommutingGraph:
    return CommutingGraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


WORKED_EXAMPLE_M = [[0, 1, 0, 1], [1, 0, 0, 0], [0, 0, 0, 1], [1, 0, 1, 0]]
