"""
Defining data of a canonical graded involution.

A spec lists simple blocks (p, g, t, S) and paired blocks (p, g', g'', t, S) over
a grading group G, the fine M_2 factors (a_j, b_j) and omega = +1 (transpose) or
-1 (symplectic). The elementary tuple puts every simple block g^(p) first, then
each paired block as g'^(p) g''^(p).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Union

from src.abgroup.group import AbelianGroup, GroupElement, subgroup_generated
from src.antiauto.structure import SKind
from src.common.config import settings
from src.common.errors import SpecValidationError
from src.gmatrix.blocks import Block, BlockKind, BlockStructure
from src.gmatrix.grading import FineFactor, GradedAlgebra, mixed_grading

SIMPLE_KINDS = (SKind.IDENTITY, SKind.SYMPLECTIC_SWAP)
PAIRED_KINDS = (SKind.SWAP, SKind.SKEW_SWAP)


def s_sign(kind: SKind) -> int:
    """+1 when S is symmetric, -1 when skew."""
    if kind in (SKind.IDENTITY, SKind.SWAP):
        return 1
    if kind in (SKind.SYMPLECTIC_SWAP, SKind.SKEW_SWAP):
        return -1
    raise ValueError(f"{kind} has no sign")


@dataclass(frozen=True)
class SimpleBlock:
    p: int
    g: GroupElement
    t: GroupElement
    s_kind: SKind = SKind.IDENTITY

    @property
    def width(self) -> int:
        return self.p

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "g": self.g.to_json(),
            "t": self.t.to_json(),
            "s_kind": self.s_kind.value,
        }

    def __str__(self) -> str:
        return f"simple({self.p},{self.g},t={self.t},{self.s_kind.value})"


@dataclass(frozen=True)
class PairedBlock:
    p: int
    g1: GroupElement  # g'
    g2: GroupElement  # g''
    t: GroupElement
    s_kind: SKind = SKind.SWAP

    @property
    def width(self) -> int:
        return 2 * self.p

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "g1": self.g1.to_json(),
            "g2": self.g2.to_json(),
            "t": self.t.to_json(),
            "s_kind": self.s_kind.value,
        }

    def __str__(self) -> str:
        return f"paired({self.p},{self.g1},{self.g2},t={self.t},{self.s_kind.value})"


SpecBlock = Union[SimpleBlock, PairedBlock]


@dataclass(frozen=True)
class InvolutionSpec:
    group: AbelianGroup
    simple_blocks: tuple[SimpleBlock, ...] = ()
    paired_blocks: tuple[PairedBlock, ...] = ()
    fine_factors: tuple[FineFactor, ...] = ()
    omega: int = 1

    @property
    def blocks(self) -> tuple[SpecBlock, ...]:
        return self.simple_blocks + self.paired_blocks

    @property
    def elementary_size(self) -> int:
        return sum(b.width for b in self.blocks)

    @property
    def n(self) -> int:
        return self.elementary_size * 2 ** len(self.fine_factors)

    def elementary_tuple(self) -> tuple[GroupElement, ...]:
        out: list[GroupElement] = []
        for b in self.simple_blocks:
            out += [b.g] * b.p
        for b in self.paired_blocks:
            out += [b.g1] * b.p + [b.g2] * b.p
        return tuple(out)

    def to_json(self) -> dict:
        return {
            "group": self.group.to_json(),
            "simple_blocks": [b.to_json() for b in self.simple_blocks],
            "paired_blocks": [b.to_json() for b in self.paired_blocks],
            "fine_factors": [
                {"a": f.a.to_json(), "b": f.b.to_json()} for f in self.fine_factors
            ],
            "omega": self.omega,
        }

    def __str__(self) -> str:
        body = " + ".join(str(b) for b in self.blocks)
        return f"{body} | omega={self.omega:+d}"


def spec_blocks(spec: InvolutionSpec) -> BlockStructure:
    """Block structure of the spec's elementary tuple: contiguous positions in tuple order."""
    blocks = []
    pos = 0
    for b in spec.simple_blocks:
        blocks.append(Block(BlockKind.SIMPLE, b.p, tuple(range(pos, pos + b.p)), (b.g,)))
        pos += b.p
    for b in spec.paired_blocks:
        positions = tuple(range(pos, pos + 2 * b.p))
        blocks.append(Block(BlockKind.PAIRED, b.p, positions, (b.g1, b.g2)))
        pos += 2 * b.p
    d = 2 ** len(spec.fine_factors)
    return BlockStructure(tuple(blocks), pos, d)


@lru_cache(maxsize=256)
def fine_algebra(group: AbelianGroup, factors: tuple[FineFactor, ...]) -> GradedAlgebra:
    """The fine part alone: M_2 x ... x M_2 graded by T, over QQ."""
    return mixed_grading(group, (group.identity,), factors, theorem3=True, max_n=2 ** len(factors))


@dataclass
class SpecVerdict:
    ok: bool
    diagnostics: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"valid": self.ok, "diagnostics": list(self.diagnostics)}


def _block_value(b: SpecBlock) -> GroupElement:
    if isinstance(b, SimpleBlock):
        return b.g * b.g * b.t
    return b.g1 * b.g2 * b.t


def _value_name(b: SpecBlock) -> str:
    return "g^2 t" if isinstance(b, SimpleBlock) else "g'g''t"


def block_signs(spec: InvolutionSpec) -> list[int]:
    """sign(S_i) * alpha(t_i, t_i) per block; a valid spec has every entry equal to omega."""
    fine = fine_algebra(spec.group, spec.fine_factors)
    return [
        s_sign(b.s_kind) * int(fine.transpose_sign(b.t).to_fraction()) for b in spec.blocks
    ]


def validate_spec(spec: InvolutionSpec, max_n: int | None = None) -> SpecVerdict:
    """
    Checks, in order: block shapes, the fine factors and T, t_i in T, the common
    value g_i^2 t_i = g'_j g''_j t_j across all blocks, and the pairing rule
    sign(S_i) * alpha(t_i, t_i) = omega. Diagnostics name the first violation of
    each kind.
    """
    diags: list[str] = []
    G = spec.group
    blocks = spec.blocks

    if spec.omega not in (1, -1):
        diags.append(f"omega must be +1 or -1, got {spec.omega}")
    if not blocks:
        diags.append("spec has no blocks")
    for i, b in enumerate(blocks, start=1):
        members = (b.g, b.t) if isinstance(b, SimpleBlock) else (b.g1, b.g2, b.t)
        if any(x.group != G for x in members):
            diags.append(f"block {i}: entries are not elements of {G}")
        if b.p < 1:
            diags.append(f"block {i}: size must be >= 1, got {b.p}")
        allowed = SIMPLE_KINDS if isinstance(b, SimpleBlock) else PAIRED_KINDS
        if b.s_kind not in allowed:
            diags.append(f"block {i}: {b.s_kind.value} is not allowed here")
        if b.s_kind is SKind.SYMPLECTIC_SWAP and b.p % 2:
            diags.append(f"block {i}: SymplecticSwap needs even size, got {b.p}")
    bound = settings.MAX_N if max_n is None else max_n
    if spec.n > bound:
        diags.append(f"matrix size {spec.n} exceeds the bound {bound}")

    for j, f in enumerate(spec.fine_factors, start=1):
        if f.a.group != G or f.b.group != G:
            diags.append(f"fine factor {j}: generators are not elements of {G}")
        elif f.order != 2 or f.a.order() > 2 or f.b.order() > 2:
            diags.append(f"fine factor {j}: generators must have order <= 2")
    if diags:
        return SpecVerdict(False, diags)

    gens = [g for f in spec.fine_factors for g in (f.a, f.b)]
    T = subgroup_generated(G, gens)
    if len(T) != 4 ** len(spec.fine_factors):
        diags.append(
            f"T has order {len(T)}, expected {4 ** len(spec.fine_factors)} "
            "(fine generators are not independent)"
        )
        return SpecVerdict(False, diags)
    for i, b in enumerate(blocks, start=1):
        if b.t not in T:
            diags.append(f"block {i}: t = {b.t} is not in T")
    if diags:
        return SpecVerdict(False, diags)

    ref = _block_value(blocks[0])
    for i, b in enumerate(blocks[1:], start=2):
        value = _block_value(b)
        if value != ref:
            diags.append(
                f"block {i}: {_value_name(b)} = {value} differs from "
                f"{_value_name(blocks[0])} = {ref} of block 1"
            )
            break

    for i, sign in enumerate(block_signs(spec), start=1):
        if sign != spec.omega:
            diags.append(
                f"block {i}: sign(S) * alpha(t,t) = {sign:+d} but omega = {spec.omega:+d}"
            )
            break
    return SpecVerdict(not diags, diags)


def require_valid(spec: InvolutionSpec, max_n: int | None = None) -> None:
    verdict = validate_spec(spec, max_n=max_n)
    if not verdict.ok:
        raise SpecValidationError(verdict.diagnostics)


__all__ = [
    "InvolutionSpec",
    "PairedBlock",
    "SimpleBlock",
    "SpecVerdict",
    "block_signs",
    "fine_algebra",
    "require_valid",
    "s_sign",
    "spec_blocks",
    "validate_spec",
]
