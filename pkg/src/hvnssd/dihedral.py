"""Normal-form arithmetic in the dihedral group D_2n = <a, b | a^n = b^2 = 1, ab = ba^-1>.

Every element is stored as ``a^rotation`` or ``a^rotation b`` with
``0 <= rotation < n``; the identity is printed as ``e``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property


@dataclass(frozen=True, slots=True)
class GroupElement:
    rotation: int
    reflected: bool = False

    def __str__(self) -> str:
        return format_element(self)


class ElementSyntaxError(ValueError):
    """Raised when element text does not match the element grammar."""


_TOKEN = re.compile(r"^a(?:\s*\^\s*(\d+))?(?:\s*\*?\s*(b))?$")


def format_element(x: GroupElement) -> str:
    if x.rotation == 0:
        return "b" if x.reflected else "e"
    rot = "a" if x.rotation == 1 else f"a^{x.rotation}"
    return f"{rot} b" if x.reflected else rot


class DihedralGroup:
    """The group D_2n for a fixed ``n >= 2``.

    Elements are ordered globally as e, a, ..., a^(n-1), b, ab, ..., a^(n-1)b;
    :meth:`index` maps an element to its position in that order.
    """

    def __init__(self, n: int):
        if not isinstance(n, int) or n < 2:
            raise ValueError(f"n must be an integer >= 2, got {n!r}")
        self.n = n

    def __repr__(self) -> str:
        return f"DihedralGroup(n={self.n})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, DihedralGroup) and other.n == self.n

    def __hash__(self) -> int:
        return hash(("D", self.n))

    @property
    def order(self) -> int:
        return 2 * self.n

    @property
    def identity(self) -> GroupElement:
        return GroupElement(0, False)

    def a(self, k: int = 1) -> GroupElement:
        return GroupElement(k % self.n, False)

    def ab(self, k: int = 0) -> GroupElement:
        return GroupElement(k % self.n, True)

    @cached_property
    def _elements(self) -> tuple[GroupElement, ...]:
        rot = tuple(GroupElement(i, False) for i in range(self.n))
        ref = tuple(GroupElement(i, True) for i in range(self.n))
        return rot + ref

    def elements(self) -> list[GroupElement]:
        return list(self._elements)

    def index(self, x: GroupElement) -> int:
        self.validate(x)
        return x.rotation + (self.n if x.reflected else 0)

    def element_at(self, i: int) -> GroupElement:
        return self._elements[i]

    def validate(self, x: GroupElement) -> None:
        if not isinstance(x, GroupElement):
            raise TypeError(f"expected GroupElement, got {type(x).__name__}")
        if not 0 <= x.rotation < self.n:
            raise ValueError(f"{x!r} is not in normal form for n={self.n}")

    def multiply(self, x: GroupElement, y: GroupElement) -> GroupElement:
        # b a^j = a^-j b
        j = -y.rotation if x.reflected else y.rotation
        return GroupElement((x.rotation + j) % self.n, x.reflected != y.reflected)

    def inverse(self, x: GroupElement) -> GroupElement:
        if x.reflected:
            return x
        return GroupElement((-x.rotation) % self.n, False)

    def parse_element(self, text: str) -> GroupElement:
        """Parse ``e``, ``a``, ``b``, ``a^K``, ``a^K b``, ``a^K*b`` or ``ab``.

        Exponents are reduced modulo n, so ``a^5 b`` in D_8 is ``a b``.
        """
        s = text.strip()
        if s == "e":
            return self.identity
        if s == "b":
            return GroupElement(0, True)
        m = _TOKEN.match(s)
        if m is None:
            raise ElementSyntaxError(f"cannot parse group element {text!r}")
        k = int(m.group(1)) if m.group(1) is not None else 1
        if m.group(1) is not None and k == 0:
            raise ElementSyntaxError(f"exponent must be positive in {text!r}")
        return GroupElement(k % self.n, m.group(2) is not None)

    def parse_subset(self, text: str) -> list[GroupElement]:
        """Parse a comma-separated element list; empty items are skipped."""
        items = [t for t in text.split(",") if t.strip()]
        return [self.parse_element(t) for t in items]

    def sort(self, xs) -> list[GroupElement]:
        return sorted(xs, key=self.index)
