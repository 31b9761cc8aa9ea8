"""Exact integer linear algebra for adjacency matrices.

Nothing in here touches floating point. Matrices are plain lists of lists of
Python ints; polynomials are :class:`IntPolynomial` with coefficients stored
lowest degree first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

IntMatrix = Sequence[Sequence[int]]


def _square(M: IntMatrix) -> list[list[int]]:
    n = len(M)
    rows = [list(r) for r in M]
    for r in rows:
        if len(r) != n:
            raise ValueError(f"matrix is not square ({n} rows, row of length {len(r)})")
    return rows


def determinant(M: IntMatrix) -> int:
    """Determinant by Bareiss fraction-free elimination.

    Every division in the update is exact, so all intermediates stay
    integers. The empty matrix has determinant 1.
    """
    A = _square(M)
    n = len(A)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for r in range(k + 1, n):
                if A[r][k] != 0:
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = A[k][k]
        rowk = A[k]
        for i in range(k + 1, n):
            rowi = A[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (rowi[j] * pivot - aik * rowk[j]) // prev
            rowi[k] = 0
        prev = pivot
    return sign * A[n - 1][n - 1]


def rank(M: IntMatrix) -> int:
    """Rank over the rationals via fraction-free elimination with row pivoting."""
    A = _square(M)
    n = len(A)
    r = 0
    prev = 1
    for c in range(n):
        piv = next((i for i in range(r, n) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        pivot = A[r][c]
        rowr = A[r]
        for i in range(r + 1, n):
            rowi = A[i]
            aic = rowi[c]
            for j in range(c + 1, n):
                rowi[j] = (rowi[j] * pivot - aic * rowr[j]) // prev
            rowi[c] = 0
        prev = pivot
        r += 1
        if r == n:
            break
    return r


def nullity(M: IntMatrix) -> int:
    return len(M) - rank(M)


def delete_index(M: IntMatrix, i: int) -> list[list[int]]:
    """Principal submatrix with row and column ``i`` removed."""
    return [[x for c, x in enumerate(row) if c != i] for r, row in enumerate(M) if r != i]


def principal_minor(M: IntMatrix, i: int) -> int:
    n = len(M)
    if n < 2:
        raise ValueError("principal minor needs a matrix of size >= 2")
    if not 0 <= i < n:
        raise IndexError(f"index {i} out of range for size {n}")
    return determinant(delete_index(M, i))


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial in one variable, coefficients lowest degree first."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Sequence[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        return poly_mul(self, other)

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return poly_sub(self, other)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            var = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            body = str(mag) if (mag != 1 or k == 0) else ""
            body = f"{body}{var}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms)


def poly_mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    if p.is_zero() or q.is_zero():
        return IntPolynomial()
    out = [0] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a:
            for j, b in enumerate(q.coeffs):
                out[i + j] += a * b
    return IntPolynomial(out)


def poly_sub(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    size = max(len(p.coeffs), len(q.coeffs))
    a = p.coeffs + (0,) * (size - len(p.coeffs))
    b = q.coeffs + (0,) * (size - len(q.coeffs))
    return IntPolynomial([x - y for x, y in zip(a, b)])


def eval_at_zero(p: IntPolynomial) -> int:
    return p.coeffs[0] if p.coeffs else 0


def trailing_zero_count(p: IntPolynomial) -> int:
    """Multiplicity of 0 as a root of ``p``; raises for the zero polynomial."""
    if p.is_zero():
        raise ValueError("zero polynomial has no finite root multiplicity")
    k = 0
    while p.coeffs[k] == 0:
        k += 1
    return k


def char_poly(M: IntMatrix) -> IntPolynomial:
    """det(xI - M) by the Faddeev-LeVerrier recurrence.

    With B_0 = I and c_n = 1, iterate AB_{k-1} -> c_{n-k} = -tr(AB_{k-1}) / k,
    B_k = AB_{k-1} + c_{n-k} I. For an integer matrix each trace is divisible
    by k, which is checked rather than assumed.
    """
    A = _square(M)
    n = len(A)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    B = [[int(i == j) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        AB = [[sum(A[i][t] * B[t][j] for t in range(n) if A[i][t]) for j in range(n)] for i in range(n)]
        tr = sum(AB[i][i] for i in range(n))
        c, rem = divmod(-tr, k)
        if rem:
            raise ArithmeticError("non-integral Faddeev-LeVerrier step; input is not an integer matrix")
        coeffs[n - k] = c
        for i in range(n):
            AB[i][i] += c
        B = AB
    return IntPolynomial(coeffs)
