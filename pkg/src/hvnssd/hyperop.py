"""The hyperoperation x o y = {xy, xy^-1, a, a^-1, a^2, a^-2, b} on D_2n.

Hyperproducts are stored as bitmasks over the global element order of
:class:`~hvnssd.dihedral.DihedralGroup`, so equality tests and unions are
single integer operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Callable, Iterable, Optional

from .dihedral import DihedralGroup, GroupElement, format_element

Hyperoperation = Callable[[DihedralGroup, GroupElement, GroupElement], Iterable[GroupElement]]


def fixed_elements(group: DihedralGroup) -> frozenset[GroupElement]:
    """{a, a^-1, a^2, a^-2, b}; collapses to fewer elements when n <= 4."""
    return frozenset({group.a(1), group.a(-1), group.a(2), group.a(-2), group.ab(0)})


def dihedral_hyperoperation(group: DihedralGroup, x: GroupElement, y: GroupElement):
    xy = group.multiply(x, y)
    xyi = group.multiply(x, group.inverse(y))
    return {xy, xyi} | fixed_elements(group)


@dataclass(frozen=True)
class HyperProduct:
    """A subset of D_2n, held as a bitmask over the global element order."""

    mask: int
    group: DihedralGroup

    @property
    def members(self) -> list[GroupElement]:
        return [self.group.element_at(i) for i in _bits(self.mask)]

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, x: GroupElement) -> bool:
        return bool(self.mask >> self.group.index(x) & 1)

    def __or__(self, other: HyperProduct) -> HyperProduct:
        return HyperProduct(self.mask | other.mask, self.group)

    def as_set(self) -> frozenset[GroupElement]:
        return frozenset(self.members)

    def __str__(self) -> str:
        return "{" + ", ".join(format_element(x) for x in self.members) + "}"


def _bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


class HvGroup:
    """The hyperstructure (D_2n, o).

    ``hyperoperation`` is the single substitution point for alternative
    hyperoperations; only the dihedral rule above ships with the package.
    """

    def __init__(self, n: int, hyperoperation: Hyperoperation = dihedral_hyperoperation):
        self.group = DihedralGroup(n)
        self.hyperoperation = hyperoperation
        self.fixed_set = fixed_elements(self.group)

    @property
    def n(self) -> int:
        return self.group.n

    def __repr__(self) -> str:
        return f"HvGroup(n={self.n})"

    def _mask(self, xs: Iterable[GroupElement]) -> int:
        m = 0
        for x in xs:
            m |= 1 << self.group.index(x)
        return m

    @cached_property
    def product_table(self) -> list[list[int]]:
        """``product_table[i][j]`` is the bitmask of element_i o element_j."""
        els = self.group.elements()
        return [[self._mask(self.hyperoperation(self.group, x, y)) for y in els] for x in els]

    @cached_property
    def commute_masks(self) -> list[int]:
        """Bitmask of neighbours of each element in the full commuting graph."""
        t = self.product_table
        size = len(t)
        masks = []
        for i in range(size):
            m = 0
            for j in range(size):
                if i != j and t[i][j] == t[j][i]:
                    m |= 1 << j
            masks.append(m)
        return masks

    def hyper_product(self, x: GroupElement, y: GroupElement) -> HyperProduct:
        g = self.group
        return HyperProduct(self.product_table[g.index(x)][g.index(y)], g)

    def hyper_product_sets(self, us: Iterable[GroupElement], vs: Iterable[GroupElement]) -> HyperProduct:
        us, vs = list(us), list(vs)
        if not us or not vs:
            raise ValueError("hyperproduct of sets needs non-empty operands")
        g = self.group
        t = self.product_table
        m = 0
        for x in us:
            row = t[g.index(x)]
            for y in vs:
                m |= row[g.index(y)]
        return HyperProduct(m, g)

    def commutes(self, x: GroupElement, y: GroupElement) -> bool:
        g = self.group
        i, j = g.index(x), g.index(y)
        return self.product_table[i][j] == self.product_table[j][i]

    def compose_mask(self, left: int, right: int) -> int:
        """U o V on bitmasks."""
        t = self.product_table
        m = 0
        for i in _bits(left):
            row = t[i]
            for j in _bits(right):
                m |= row[j]
        return m


@dataclass(frozen=True)
class AxiomReport:
    axiom: str
    holds: bool
    checked: int
    witness: Optional[tuple[GroupElement, ...]] = None

    def describe(self) -> str:
        status = "PASS" if self.holds else "FAIL"
        line = f"{self.axiom}: {status} ({self.checked} cases)"
        if self.witness is not None:
            line += " witness: (" + ", ".join(format_element(x) for x in self.witness) + ")"
        return line


def check_weak_associativity(hv: HvGroup) -> AxiomReport:
    """Test s o (t o u) and (s o t) o u intersect, for every triple.

    Triples are visited in lexicographic element order, so the reported
    witness is the smallest failing triple.
    """
    t = hv.product_table
    size = len(t)
    checked = 0
    for s, m, u in product(range(size), repeat=3):
        checked += 1
        left = hv.compose_mask(1 << s, t[m][u])
        right = hv.compose_mask(t[s][m], 1 << u)
        if not left & right:
            g = hv.group
            return AxiomReport("weak associativity", False, checked,
                               (g.element_at(s), g.element_at(m), g.element_at(u)))
    return AxiomReport("weak associativity", True, checked)


def check_reproduction(hv: HvGroup) -> AxiomReport:
    """Test x o J = J = J o x for every x."""
    t = hv.product_table
    size = len(t)
    full = (1 << size) - 1
    for x in range(size):
        left = 0
        right = 0
        for y in range(size):
            left |= t[x][y]
            right |= t[y][x]
        if left != full or right != full:
            return AxiomReport("reproduction", False, x + 1, (hv.group.element_at(x),))
    return AxiomReport("reproduction", True, size)
