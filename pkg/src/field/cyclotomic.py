"""
Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are coefficient vectors of polynomials in zeta reduced modulo the N-th
cyclotomic polynomial, so equality is plain coefficient equality.
"""
from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

from src.common.errors import FieldMismatchError, MissingRootOfUnityError
from src.field.poly import cyclotomic_poly, poly_mod, poly_xgcd, trim

Scalar = Union[int, Fraction, "FieldElement"]


class CyclotomicField:
    """Q(zeta_N). The rationals are always stored as N = 2, since Q(zeta_1) = Q(zeta_2)."""

    __slots__ = ("order", "modulus", "degree", "_zero", "_one")

    def __init__(self, order: int):
        if order < 1:
            raise ValueError(f"field order must be a positive integer, got {order}")
        if order == 1:
            order = 2
        self.order = order
        self.modulus = cyclotomic_poly(order)
        self.degree = len(self.modulus) - 1
        self._zero = FieldElement(self, (Fraction(0),) * self.degree)
        self._one = FieldElement(self, (Fraction(1),) + (Fraction(0),) * (self.degree - 1))

    # construction -------------------------------------------------------

    @property
    def zero(self) -> "FieldElement":
        return self._zero

    @property
    def one(self) -> "FieldElement":
        return self._one

    @property
    def zeta(self) -> "FieldElement":
        """The designated primitive N-th root of unity (the class of x)."""
        return self.from_poly((0, 1))

    def is_rational_field(self) -> bool:
        return self.degree == 1

    def from_poly(self, coeffs: Iterable) -> "FieldElement":
        reduced = poly_mod(trim(coeffs), self.modulus)
        padded = tuple(reduced) + (Fraction(0),) * (self.degree - len(reduced))
        return FieldElement(self, padded)

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatchError(f"element of {value.field!r} used in {self!r}")
            return value
        if isinstance(value, (int, Fraction)):
            if value == 0:
                return self._zero
            if value == 1:
                return self._one
            return FieldElement(self, (Fraction(value),) + (Fraction(0),) * (self.degree - 1))
        if isinstance(value, str):
            return self(Fraction(value))
        if isinstance(value, (list, tuple)):
            return self.from_json(value)
        raise TypeError(f"cannot convert {type(value).__name__} into {self!r}")

    def from_json(self, coeffs: list) -> "FieldElement":
        if len(coeffs) > self.degree:
            raise ValueError(
                f"coefficient vector of length {len(coeffs)} exceeds field degree {self.degree}"
            )
        return self.from_poly(Fraction(str(c)) for c in coeffs)

    def root_of_unity(self, n: int, k: int = 1) -> "FieldElement":
        """epsilon_n ** k where epsilon_n = zeta ** (N / n) is a primitive n-th root."""
        if n < 1:
            raise ValueError(f"root order must be positive, got {n}")
        if self.order % n == 0:
            return self.zeta ** ((self.order // n) * (k % n))
        if n == 2:
            return self(-1) ** (k % 2)
        raise MissingRootOfUnityError(f"{self!r} does not contain a primitive {n}-th root of 1")

    def has_root_of_unity(self, n: int) -> bool:
        return self.order % n == 0 or n <= 2

    def random_element(self, rng: random.Random, height: int = 5) -> "FieldElement":
        coeffs = [
            Fraction(rng.randint(-height, height), rng.randint(1, height))
            for _ in range(self.degree)
        ]
        return self.from_poly(coeffs)

    # identity -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, CyclotomicField) and other.order == self.order

    def __hash__(self) -> int:
        return hash(("CyclotomicField", self.order))

    def __repr__(self) -> str:
        return "QQ" if self.order <= 2 else f"QQ(zeta_{self.order})"

    def to_json(self) -> dict:
        return {"order": self.order, "degree": self.degree}


@lru_cache(maxsize=None)
def make_field(order: int) -> CyclotomicField:
    """The cyclotomic field Q(zeta_order); instances are shared."""
    if not isinstance(order, int) or order < 1:
        raise ValueError(f"field order must be a positive integer, got {order!r}")
    if order == 1:
        return make_field(2)
    return CyclotomicField(order)


class FieldElement:
    """An element of a CyclotomicField; immutable."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: CyclotomicField, coeffs: tuple[Fraction, ...]):
        self.field = field
        self.coeffs = coeffs

    # helpers ------------------------------------------------------------

    def _coerce(self, other) -> "FieldElement | None":
        if isinstance(other, FieldElement):
            if other.field.order != self.field.order:
                raise FieldMismatchError(
                    f"cannot combine elements of {self.field!r} and {other.field!r}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return None

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    # ring operations ----------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, tuple(x + y for x, y in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, tuple(x - y for x, y in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.field.degree
        if d == 1:
            return FieldElement(self.field, (self.coeffs[0] * o.coeffs[0],))
        prod = [Fraction(0)] * (2 * d - 1)
        for i, x in enumerate(self.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(o.coeffs):
                if y:
                    prod[i + j] += x * y
        # x^d = -(m_0 + m_1 x + ... + m_{d-1} x^{d-1}) since the modulus is monic
        mod = self.field.modulus
        for top in range(2 * d - 2, d - 1, -1):
            c = prod[top]
            if c == 0:
                continue
            base = top - d
            for i in range(d):
                if mod[i]:
                    prod[base + i] -= c * mod[i]
        return FieldElement(self.field, tuple(prod[:d]))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        if self.field.degree == 1:
            return FieldElement(self.field, (1 / self.coeffs[0],))
        g, s, _ = poly_xgcd(trim(self.coeffs), self.field.modulus)
        if g != (Fraction(1),):
            raise ArithmeticError("element shares a factor with the modulus")
        return self.field.from_poly(s)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.field.one
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    # comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.field.order, self.coeffs))

    # rendering ----------------------------------------------------------

    def to_json(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    def symbolic(self, var: str = "z") -> str:
        terms = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            mono = "" if power == 0 else (var if power == 1 else f"{var}^{power}")
            if mono and abs(c) == 1:
                body = mono
            elif mono:
                body = f"{abs(c)}*{mono}"
            else:
                body = str(abs(c))
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return str(self.coeffs[0]) if self.is_rational() else self.symbolic()

    def __repr__(self) -> str:
        return f"FieldElement({self.symbolic()} in {self.field!r})"
