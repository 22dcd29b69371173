from src.abgroup.bicharacter import Bicharacter
from src.abgroup.group import (
    AbelianGroup,
    GroupElement,
    is_elementary_2,
    is_subgroup,
    subgroup_generated,
)

__all__ = [
    "AbelianGroup",
    "Bicharacter",
    "GroupElement",
    "is_elementary_2",
    "is_subgroup",
    "subgroup_generated",
]
