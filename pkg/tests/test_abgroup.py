import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from src.abgroup import AbelianGroup, is_elementary_2, is_subgroup, subgroup_generated
from src.common.errors import GroupMismatchError, NotASubgroupError
from src.gmatrix import epsilon_grading


def test_order_exponent_and_residues():
    G = AbelianGroup((4, 2))
    assert G.order == 8
    assert G.exponent == 4
    x = G(3, 1)
    assert x.order() == 4
    assert x * x.inverse() == G.identity
    assert G(5, 3) == G(1, 1)
    assert len(G.elements()) == 8


def test_trivial_group():
    G = AbelianGroup(())
    assert G.order == 1
    assert G.elements() == [G.identity]
    assert str(G) == "trivial"


def test_subgroup_generated_and_checks():
    G = AbelianGroup((2, 2, 2))
    a, b, c = G.generators()
    H = subgroup_generated(G, [a, b])
    assert len(H) == 4
    assert is_subgroup(H)
    assert is_elementary_2(H)
    assert not is_subgroup({a, b})
    with pytest.raises(NotASubgroupError):
        is_elementary_2({G.identity, a, b})


def test_z4_subgroup_is_not_elementary():
    G = AbelianGroup((4,))
    assert not is_elementary_2(subgroup_generated(G, [G(1)]))
    assert is_elementary_2(subgroup_generated(G, [G(2)]))


def test_elements_of_different_groups_do_not_mix():
    with pytest.raises(GroupMismatchError):
        AbelianGroup((2,))(1) * AbelianGroup((3,))(1)


def test_direct_product_and_inject():
    G, H = AbelianGroup((2,)), AbelianGroup((3, 3))
    P = G.direct_product(H)
    assert P.invariant_factors == (2, 3, 3)
    assert P.inject(H(1, 2), 1) == P(0, 1, 2)
    with pytest.raises(GroupMismatchError):
        P.inject(H(1, 1), 0)


def test_bicharacter_of_fine_m2():
    alg = epsilon_grading(2)
    G = alg.group
    a, b = G(1, 0), G(0, 1)
    alpha = alg.bicharacter
    assert alpha.is_multiplicative()
    assert alpha.commutation(a, b) == -1
    assert alpha(a, a) == 1
    assert len(alpha.support) == 4


def test_bicharacter_of_fine_m3_is_a_root_of_unity():
    alg = epsilon_grading(3)
    G = alg.group
    beta = alg.bicharacter.commutation(G(1, 0), G(0, 1))
    assert beta != 1
    assert beta ** 3 == 1
