"""
Finite abelian groups in invariant-factor form Z_{m_1} x ... x Z_{m_r}.

Elements are residue tuples kept in canonical form 0 <= r_i < m_i, so equality and
hashing are structural.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd, lcm, prod
from typing import Iterable, Sequence

from src.common.errors import GroupMismatchError, NotASubgroupError


@dataclass(frozen=True)
class AbelianGroup:
    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        factors = tuple(int(m) for m in self.invariant_factors)
        if any(m < 1 for m in factors):
            raise ValueError(f"invariant factors must be >= 1, got {factors}")
        object.__setattr__(self, "invariant_factors", factors)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def exponent(self) -> int:
        return lcm(*self.invariant_factors) if self.invariant_factors else 1

    @property
    def identity(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.rank)

    def element(self, residues: Iterable[int]) -> "GroupElement":
        residues = tuple(int(r) for r in residues)
        if len(residues) != self.rank:
            raise ValueError(
                f"expected {self.rank} residues for {self}, got {len(residues)}"
            )
        return GroupElement(
            self, tuple(r % m for r, m in zip(residues, self.invariant_factors))
        )

    def __call__(self, *residues) -> "GroupElement":
        if len(residues) == 1 and isinstance(residues[0], (list, tuple)):
            residues = residues[0]
        return self.element(residues)

    def generators(self) -> list["GroupElement"]:
        """The standard generators: unit residue vectors, one per cyclic factor."""
        return [
            self.element(tuple(1 if j == i else 0 for j in range(self.rank)))
            for i in range(self.rank)
        ]

    def elements(self) -> list["GroupElement"]:
        """All elements, ordered lexicographically by residue tuple."""
        ranges = [range(m) for m in self.invariant_factors]
        return [GroupElement(self, tuple(r)) for r in product(*ranges)]

    def direct_product(self, other: "AbelianGroup") -> "AbelianGroup":
        """Factors are concatenated; self occupies the first self.rank positions."""
        return AbelianGroup(self.invariant_factors + other.invariant_factors)

    def inject(self, element: "GroupElement", offset: int) -> "GroupElement":
        """Embed an element of a factor group sitting at positions offset.. of self."""
        size = element.group.rank
        if self.invariant_factors[offset:offset + size] != element.group.invariant_factors:
            raise GroupMismatchError(f"{element.group} is not a factor of {self} at {offset}")
        residues = [0] * self.rank
        residues[offset:offset + size] = element.residues
        return self.element(residues)

    def subgroup_generated(self, gens: Iterable["GroupElement"]) -> frozenset["GroupElement"]:
        return subgroup_generated(self, gens)

    def to_json(self) -> dict:
        return {"invariant_factors": list(self.invariant_factors)}

    def __str__(self) -> str:
        if not self.invariant_factors:
            return "trivial"
        return " x ".join(f"Z{m}" for m in self.invariant_factors)


@dataclass(frozen=True)
class GroupElement:
    group: AbelianGroup
    residues: tuple[int, ...]

    def _check(self, other: "GroupElement") -> None:
        if not isinstance(other, GroupElement) or other.group != self.group:
            raise GroupMismatchError(f"cannot combine elements of {self.group} and {other}")

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return GroupElement(
            self.group,
            tuple(
                (x + y) % m
                for x, y, m in zip(self.residues, other.residues, self.group.invariant_factors)
            ),
        )

    def inverse(self) -> "GroupElement":
        return GroupElement(
            self.group,
            tuple((-x) % m for x, m in zip(self.residues, self.group.invariant_factors)),
        )

    def __pow__(self, k: int) -> "GroupElement":
        return GroupElement(
            self.group,
            tuple((x * k) % m for x, m in zip(self.residues, self.group.invariant_factors)),
        )

    def is_identity(self) -> bool:
        return not any(self.residues)

    def order(self) -> int:
        return lcm(
            1,
            *(m // gcd(x, m) for x, m in zip(self.residues, self.group.invariant_factors)),
        )

    def sort_key(self) -> tuple[int, ...]:
        return self.residues

    def __lt__(self, other: "GroupElement") -> bool:
        self._check(other)
        return self.residues < other.residues

    def __le__(self, other: "GroupElement") -> bool:
        self._check(other)
        return self.residues <= other.residues

    def to_json(self) -> list[int]:
        return list(self.residues)

    def __str__(self) -> str:
        return "(" + ",".join(str(r) for r in self.residues) + ")"

    def __repr__(self) -> str:
        return f"GroupElement{self}"


def subgroup_generated(
    group: AbelianGroup, gens: Iterable[GroupElement]
) -> frozenset[GroupElement]:
    """Closure of gens under multiplication; always contains the identity."""
    gens = list(gens)
    for g in gens:
        if g.group != group:
            raise GroupMismatchError(f"{g} is not an element of {group}")
    seen = {group.identity}
    frontier = [group.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def is_subgroup(elements: Sequence[GroupElement] | frozenset[GroupElement]) -> bool:
    elements = set(elements)
    if not elements:
        return False
    group = next(iter(elements)).group
    if group.identity not in elements:
        return False
    return all(x * y in elements for x in elements for y in elements)


def is_elementary_2(elements: Iterable[GroupElement]) -> bool:
    """True iff the given subgroup has exponent <= 2."""
    elements = frozenset(elements)
    if not is_subgroup(elements):
        raise NotASubgroupError("the given set of group elements is not a subgroup")
    return all(g.order() <= 2 for g in elements)
