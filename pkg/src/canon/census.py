"""
Exhaustive enumeration of canonical involution specs and per-spec verification.

Candidates are listed in canonical order: omega ascending, then elementary size,
block shape (simple sizes, paired sizes) lexicographically, group entries by
residue tuples, S-kinds and finally the t_i. Group entries of different blocks
are distinct, simple entries strictly increase and paired entries (g', g'')
have g' <= g'' and strictly increase. Left translation of the tuple gives the
same grading, so the first tuple entry is always e.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations, product
from typing import Iterator, Sequence

from tqdm import tqdm

from src.abgroup.group import AbelianGroup, GroupElement, subgroup_generated
from src.antiauto.hk import hk_split, lie_jordan_check
from src.antiauto.involution import InvolutionKind, is_graded_map
from src.antiauto.structure import SKind, extract_structure
from src.canon.builder import assemble_canonical
from src.canon.spec import (
    PAIRED_KINDS,
    SIMPLE_KINDS,
    InvolutionSpec,
    PairedBlock,
    SimpleBlock,
    block_signs,
    spec_blocks,
    validate_spec,
)
from src.common.config import settings
from src.common.errors import DegreeError, DimensionError, GradedInvolutionError
from src.common.log import get_logger
from src.gmatrix.grading import FineFactor

logger = get_logger(__name__)

Shape = tuple[tuple[int, ...], tuple[int, ...]]


def default_fine_factors(group: AbelianGroup, k: int) -> tuple[FineFactor, ...]:
    """(a_j, b_j) = generators of the last 2k invariant factors, which must all be 2."""
    if k == 0:
        return ()
    tail = group.invariant_factors[-2 * k:]
    if group.rank < 2 * k or any(m != 2 for m in tail):
        raise DegreeError(f"{group} has no {2 * k} trailing Z2 factors for {k} fine factor(s)")
    gens = group.generators()[-2 * k:]
    return tuple(FineFactor(gens[2 * j], gens[2 * j + 1]) for j in range(k))


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def block_shapes(size: int) -> list[Shape]:
    """All (simple sizes, paired sizes) with sum(simple) + 2 * sum(paired) = size."""
    shapes = set()
    for paired_total in range(size // 2 + 1):
        simple_total = size - 2 * paired_total
        for a in range(simple_total + 1):
            for simple in _compositions(simple_total, a):
                for b in range(paired_total + 1):
                    for paired in _compositions(paired_total, b):
                        if simple or paired:
                            shapes.add((simple, paired))
    return sorted(shapes)


def _entry_assignments(
    group: AbelianGroup, simple_count: int, paired_count: int
) -> Iterator[tuple[tuple[GroupElement, ...], tuple[tuple[GroupElement, GroupElement], ...]]]:
    elements = group.elements()
    pairs = [(x, y) for i, x in enumerate(elements) for y in elements[i:]]
    for simple in combinations(elements, simple_count):
        if simple and not simple[0].is_identity():
            continue
        used = set(simple)
        for chosen in combinations(pairs, paired_count):
            if not simple and not chosen[0][0].is_identity():
                continue
            flat = [g for pr in chosen for g in set(pr)]
            if len(flat) != len(set(flat)) or used.intersection(flat):
                continue
            yield simple, chosen


def iterate_candidates(
    group: AbelianGroup,
    n_elementary: int,
    fine_factors: Sequence[FineFactor] = (),
    exact: bool = False,
) -> Iterator[InvolutionSpec]:
    """Every structurally well-formed spec in canonical order, valid or not."""
    factors = tuple(fine_factors)
    gens = [g for f in factors for g in (f.a, f.b)]
    T = sorted(subgroup_generated(group, gens))
    sizes = [n_elementary] if exact else range(1, n_elementary + 1)
    for omega in (-1, 1):
        for size in sizes:
            for simple_sizes, paired_sizes in block_shapes(size):
                kind_options = [
                    SIMPLE_KINDS if p % 2 == 0 else (SKind.IDENTITY,) for p in simple_sizes
                ] + [PAIRED_KINDS] * len(paired_sizes)
                for simple_g, paired_g in _entry_assignments(
                    group, len(simple_sizes), len(paired_sizes)
                ):
                    for kinds in product(*kind_options):
                        for ts in product(T, repeat=len(kinds)):
                            ns = len(simple_sizes)
                            simple = tuple(
                                SimpleBlock(p, g, t, kind)
                                for p, g, t, kind in zip(simple_sizes, simple_g, ts, kinds)
                            )
                            paired = tuple(
                                PairedBlock(p, g1, g2, t, kind)
                                for p, (g1, g2), t, kind in zip(
                                    paired_sizes, paired_g, ts[ns:], kinds[ns:]
                                )
                            )
                            yield InvolutionSpec(group, simple, paired, factors, omega)


def enumerate_canonical(
    group: AbelianGroup,
    n_elementary: int,
    fine_count: int = 0,
    exact: bool = False,
    fine_factors: Sequence[FineFactor] | None = None,
    max_n: int | None = None,
) -> list[InvolutionSpec]:
    if n_elementary < 1:
        raise DimensionError(f"elementary size must be >= 1, got {n_elementary}")
    if fine_factors is None:
        factors = default_fine_factors(group, fine_count)
    else:
        factors = tuple(fine_factors)
        if len(factors) != fine_count:
            raise ValueError(f"expected {fine_count} fine factor(s), got {len(factors)}")
    bound = settings.MAX_N if max_n is None else max_n
    n = n_elementary * 2 ** fine_count
    if n > bound:
        raise DimensionError(f"enumeration reaches n={n}, above the bound {bound}")

    itr = iterate_candidates(group, n_elementary, factors, exact=exact)
    if settings.PROGRESS:
        itr = tqdm(itr, desc="candidates", unit="spec")
    specs = [s for s in itr if validate_spec(s, max_n=bound).ok]
    logger.info(
        "%s, elementary size %s%d, %d fine factor(s): %d valid spec(s)",
        group, "" if exact else "<= ", n_elementary, fine_count, len(specs),
    )
    return specs


@dataclass
class CensusRecord:
    spec: InvolutionSpec
    valid: bool
    diagnostics: list[str] = dc_field(default_factory=list)
    n: int | None = None
    kind: InvolutionKind | None = None
    kind_matches: bool | None = None
    graded: bool | None = None
    structure_ok: bool | None = None
    q_signs_ok: bool | None = None
    lie_jordan_ok: bool | None = None
    block_signs: list[int] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        """Valid, built, and every check that ran passed."""
        checks = (self.kind_matches, self.graded, self.structure_ok, self.q_signs_ok)
        return self.valid and all(checks) and self.lie_jordan_ok is not False

    def to_json(self) -> dict:
        return {
            "spec": self.spec.to_json(),
            "valid": self.valid,
            "diagnostics": list(self.diagnostics),
            "n": self.n,
            "kind": self.kind.value if self.kind is not None else None,
            "kind_matches": self.kind_matches,
            "graded": self.graded,
            "structure_ok": self.structure_ok,
            "q_signs_ok": self.q_signs_ok,
            "lie_jordan_ok": self.lie_jordan_ok,
            "block_signs": list(self.block_signs),
            "ok": self.ok,
        }


def verify_spec(
    spec: InvolutionSpec, lie_jordan: bool = False, max_n: int | None = None
) -> CensusRecord:
    """Validate, build, and check kind, gradedness and the structure round trip."""
    verdict = validate_spec(spec, max_n=max_n)
    record = CensusRecord(spec, verdict.ok, list(verdict.diagnostics))
    if not verdict.ok:
        return record
    alg, aa = assemble_canonical(spec, max_n=max_n)
    expected = InvolutionKind.TRANSPOSE if spec.omega == 1 else InvolutionKind.SYMPLECTIC
    record.block_signs = block_signs(spec)
    record.n = alg.n
    record.kind = aa.kind
    record.kind_matches = aa.kind is expected
    record.graded = is_graded_map(alg, aa).ok
    try:
        report = extract_structure(alg, aa, spec_blocks(spec))
    except GradedInvolutionError as exc:
        record.structure_ok = False
        record.diagnostics.append(str(exc))
    else:
        record.q_signs_ok = report.q_signs_ok
        record.structure_ok = report.residual_ok and all(
            r.s_kind is b.s_kind and r.t == b.t and r.Y == 1
            for r, b in zip(report.blocks, spec.blocks)
        )
    if lie_jordan and aa.is_involution():
        hk = hk_split(alg, aa)
        lj = lie_jordan_check(hk)
        record.lie_jordan_ok = lj.ok and lj.homogeneous
        if lj.offending:
            record.diagnostics.append(lj.offending)
    return record


__all__ = [
    "CensusRecord",
    "block_shapes",
    "default_fine_factors",
    "enumerate_canonical",
    "iterate_candidates",
    "verify_spec",
]
