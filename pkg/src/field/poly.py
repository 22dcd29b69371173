"""
Dense polynomials over the rationals.

A polynomial is a tuple of Fractions, lowest degree first, with no trailing
zeros; the zero polynomial is the empty tuple.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

Poly = tuple[Fraction, ...]


def trim(coeffs: Iterable) -> Poly:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def deg(p: Sequence) -> int:
    """Degree, with deg(0) = -1."""
    return len(p) - 1


def poly_add(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return trim(out)


def poly_sub(a: Poly, b: Poly) -> Poly:
    return poly_add(a, tuple(-c for c in b))


def poly_scale(a: Poly, c: Fraction) -> Poly:
    if c == 0:
        return ()
    return tuple(x * c for x in a)


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] += x * y
    return trim(out)


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    db = deg(b)
    lead = b[-1]
    if deg(a) < db:
        return (), trim(a)
    quot = [Fraction(0)] * (deg(a) - db + 1)
    for shift in range(deg(a) - db, -1, -1):
        c = rem[shift + db] / lead
        quot[shift] = c
        if c == 0:
            continue
        for j, y in enumerate(b):
            rem[shift + j] -= c * y
    return trim(quot), trim(rem[:db])


def poly_mod(a: Poly, b: Poly) -> Poly:
    return poly_divmod(a, b)[1]


def poly_xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Extended Euclid: returns (g, s, t) with s*a + t*b = g and g monic."""
    r0, r1 = trim(a), trim(b)
    s0, s1 = (Fraction(1),), ()
    t0, t1 = (), (Fraction(1),)
    while r1:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(s0, poly_mul(q, s1))
        t0, t1 = t1, poly_sub(t0, poly_mul(q, t1))
    if not r0:
        return (), s0, t0
    inv = 1 / r0[-1]
    return poly_scale(r0, inv), poly_scale(s0, inv), poly_scale(t0, inv)


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> Poly:
    """
    Phi_n, obtained by dividing x^n - 1 by Phi_d for every proper divisor d of n.
    The division is checked to be exact.
    """
    if n < 1:
        raise ValueError(f"cyclotomic polynomial needs n >= 1, got {n}")
    x_n_minus_1 = trim([-1] + [0] * (n - 1) + [1])
    quotient = x_n_minus_1
    for d in divisors(n)[:-1]:
        quotient, rem = poly_divmod(quotient, cyclotomic_poly(d))
        if rem:
            raise ArithmeticError(f"Phi_{d} does not divide x^{n}-1 quotient")
    return quotient


def euler_phi(n: int) -> int:
    return deg(cyclotomic_poly(n))
