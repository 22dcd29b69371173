import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from src.abgroup import AbelianGroup
from src.antiauto import InvolutionKind, SKind, is_graded_map
from src.canon import (
    assemble_canonical,
    block_signs,
    default_fine_factors,
    enumerate_canonical,
    iterate_candidates,
    validate_spec,
    verify_spec,
)
from src.canon.census import block_shapes
from src.common.errors import DegreeError, DimensionError

Z2_3 = AbelianGroup((2, 2, 2))
V4 = AbelianGroup((2, 2))
TRIVIAL = AbelianGroup(())


@pytest.fixture(scope="module")
def census_z2_cubed():
    return enumerate_canonical(Z2_3, 3, fine_count=1)


def test_block_shapes():
    assert block_shapes(1) == [((1,), ())]
    assert block_shapes(2) == [((), (1,)), ((1, 1), ()), ((2,), ())]
    assert ((1,), (1,)) in block_shapes(3)


def test_default_fine_factors():
    (f,) = default_fine_factors(Z2_3, 1)
    assert (f.a, f.b) == (Z2_3(0, 1, 0), Z2_3(0, 0, 1))
    assert default_fine_factors(Z2_3, 0) == ()
    with pytest.raises(DegreeError):
        default_fine_factors(AbelianGroup((2, 4)), 1)


def test_fine_m2_census():
    specs = enumerate_canonical(V4, 1, fine_count=1)
    assert len(specs) == 4
    assert [s.omega for s in specs] == [-1, 1, 1, 1]
    assert specs[0].simple_blocks[0].t == V4(1, 1)


def test_trivial_group_exact_size_two():
    specs = enumerate_canonical(TRIVIAL, 2, exact=True)
    kinds = [(s.omega, [b.s_kind for b in s.blocks]) for s in specs]
    assert kinds == [
        (-1, [SKind.SKEW_SWAP]),
        (-1, [SKind.SYMPLECTIC_SWAP]),
        (1, [SKind.SWAP]),
        (1, [SKind.IDENTITY]),
    ]


def test_enumeration_is_normalized_and_ordered(census_z2_cubed):
    specs = census_z2_cubed
    assert specs
    assert all(s.elementary_tuple()[0].is_identity() for s in specs)
    omegas = [s.omega for s in specs]
    assert omegas == sorted(omegas)
    # canonical order makes the census duplicate free
    assert len({str(s) for s in specs}) == len(specs)


def test_every_census_spec_verifies(census_z2_cubed):
    for spec in census_z2_cubed:
        record = verify_spec(spec)
        assert record.ok, (str(spec), record.diagnostics)
        expected = InvolutionKind.TRANSPOSE if spec.omega == 1 else InvolutionKind.SYMPLECTIC
        assert record.kind is expected


def test_invalid_candidates_fail_the_checks():
    factors = default_fine_factors(Z2_3, 1)
    invalid = 0
    for spec in iterate_candidates(Z2_3, 3, factors):
        if validate_spec(spec).ok:
            continue
        invalid += 1
        alg, aa = assemble_canonical(spec)
        expected = InvolutionKind.TRANSPOSE if spec.omega == 1 else InvolutionKind.SYMPLECTIC
        assert aa.kind is not expected or not is_graded_map(alg, aa).ok, str(spec)
    assert invalid > 0


def test_lie_jordan_on_every_census_spec(census_z2_cubed):
    for spec in census_z2_cubed:
        record = verify_spec(spec, lie_jordan=True)
        assert record.lie_jordan_ok, str(spec)


def test_invalid_spec_record():
    factors = default_fine_factors(Z2_3, 1)
    bad = next(s for s in iterate_candidates(Z2_3, 1, factors) if not validate_spec(s).ok)
    record = verify_spec(bad)
    assert not record.valid and not record.ok
    assert record.kind is None
    assert record.to_json()["diagnostics"]


def test_bounds():
    with pytest.raises(DimensionError):
        enumerate_canonical(Z2_3, 0)
    with pytest.raises(DimensionError):
        enumerate_canonical(Z2_3, 5, fine_count=1, max_n=8)


def test_z2_exact_size_two():
    Z2 = AbelianGroup((2,))
    e, c = Z2(0), Z2(1)
    specs = enumerate_canonical(Z2, 2, exact=True)
    assert len(specs) == 7
    assert [s.omega for s in specs] == [-1, -1, -1, 1, 1, 1, 1]
    assert any(tuple(b.g for b in s.simple_blocks) == (e, c) for s in specs)
    for spec in specs:
        assert verify_spec(spec).ok, str(spec)


def test_block_signs_agree_with_omega(census_z2_cubed):
    for spec in census_z2_cubed:
        assert set(block_signs(spec)) == {spec.omega}
        assert verify_spec(spec).block_signs == block_signs(spec)
