from src.field.cyclotomic import CyclotomicField, FieldElement, make_field

__all__ = ["CyclotomicField", "FieldElement", "make_field"]
