"""The [0,1] formula algebra used as a sampled property fixture.

This is the nilpotent-minimum pair on the real unit interval:

    x (.) y = min(x, y) if x + y > 1, else 0
    x -> y  = 1 if x <= y, else max(1 - x, y)

Its carrier is infinite, so it is never wrapped in a finite algebra;
callers probe it pointwise on rational samples and property-check
adjunction and prelinearity on sampled triples.

The accompanying soft-set fixture maps (0, 1/2] to the whole carrier,
(1/2, 4/5] to {1} and (4/5, 1] to the empty set.  The source example
leaves (3/5, 4/5] unspecified, almost certainly a typo for a middle case
ending at 4/5; the fixture closes the gap with {1} and flags it here.
"""

from __future__ import annotations

import random
from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def prod(x: Fraction, y: Fraction) -> Fraction:
    return min(x, y) if x + y > ONE else ZERO


def res(x: Fraction, y: Fraction) -> Fraction:
    return ONE if x <= y else max(ONE - x, y)


def sample_points(count: int, seed: int, den: int = 1000) -> list[Fraction]:
    rng = random.Random(seed)
    return [Fraction(rng.randint(0, den), den) for _ in range(count)]


def adjunction_holds(x: Fraction, y: Fraction, z: Fraction) -> bool:
    return (prod(x, y) <= z) == (x <= res(y, z))


def prelinearity_holds(x: Fraction, y: Fraction) -> bool:
    return max(res(x, y), res(y, x)) == ONE


# piecewise soft-set fixture: (lo, hi] -> named value
SOFT_PIECES = (
    (ZERO, Fraction(1, 2), "carrier"),
    (Fraction(1, 2), Fraction(4, 5), "top-only"),  # gap-filled, see module docstring
    (Fraction(4, 5), ONE, "empty"),
)


def soft_value(t: Fraction) -> str:
    """Named level set at parameter t in (0, 1]."""
    for lo, hi, name in SOFT_PIECES:
        if lo < t <= hi:
            return name
    raise ValueError(f"parameter {t} outside (0, 1]")


def value_contains(name: str, x: Fraction) -> bool:
    if name == "carrier":
        return True
    if name == "top-only":
        return x == ONE
    if name == "empty":
        return False
    raise ValueError(f"unknown soft value {name!r}")
