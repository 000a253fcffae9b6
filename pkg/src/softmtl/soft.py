"""Level-cut soft sets over a parameter interval (lo, hi].

The parameterized family t -> {x : mu(x) >= t} (membership cut) or
t -> {x : mu(x) + t > 1} (quasi-coincidence cut) is constant between
consecutive grid points because mu takes values on the 1/D grid, so the
finitely many grid thresholds in (lo, hi] represent the whole real
interval without loss.  ``level_at`` maps any real threshold to its grid
representative ceil(t*D)/D.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import FiniteMtlAlgebra
from .fuzzy import ONE, ZERO, FuzzySet, on_grid
from .filters import classify_filter, labels_of, mask_of

SOFT_KINDS = ("in", "q")


@dataclass(frozen=True)
class ParameterInterval:
    """Half-open interval (lo, hi] of parameter values."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if not (ZERO <= self.lo < self.hi <= ONE):
            raise ValueError(f"need 0 <= lo < hi <= 1, got ({self.lo}, {self.hi}]")

    def __contains__(self, t) -> bool:
        return self.lo < t <= self.hi

    def __str__(self):
        return f"({self.lo},{self.hi}]"

    @classmethod
    def parse(cls, text: str) -> "ParameterInterval":
        try:
            lo, hi = (Fraction(part) for part in text.split(","))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"cannot parse interval {text!r}; expected e.g. '0,1' or '1/4,3/4'")
        return cls(lo, hi)


FULL = ParameterInterval(ZERO, ONE)
LOWER = ParameterInterval(ZERO, Fraction(1, 2))
UPPER = ParameterInterval(Fraction(1, 2), ONE)


def grid_thresholds(interval: ParameterInterval, den: int) -> list[Fraction]:
    return [Fraction(k, den) for k in range(1, den + 1) if Fraction(k, den) in interval]


@dataclass(frozen=True)
class SoftSet:
    """Finite family of representative level sets of a fuzzy set."""

    alg: FiniteMtlAlgebra
    interval: ParameterInterval
    kind: str  # "in" or "q"
    den: int
    levels: tuple[tuple[Fraction, int], ...]  # (threshold, bitmask), ascending

    def level_at(self, t) -> int:
        """Level set at an arbitrary threshold t in (lo, hi]."""
        t = Fraction(t)
        if t not in self.interval:
            raise ValueError(f"threshold {t} outside parameter interval {self.interval}")
        rep = Fraction(math.ceil(t * self.den), self.den)
        for thr, mask in self.levels:
            if thr == rep:
                return mask
        raise ValueError(f"no grid representative for threshold {t}")  # pragma: no cover

    def to_doc(self) -> dict:
        return {
            "kind": self.kind,
            "interval": str(self.interval),
            "den": self.den,
            "levels": [[str(t), labels_of(self.alg, m)] for t, m in self.levels],
        }


def _build(mu: FuzzySet, interval: ParameterInterval, kind: str, member) -> SoftSet:
    if not (on_grid(interval.lo, mu.den) and on_grid(interval.hi, mu.den)):
        raise ValueError(f"interval {interval} is not aligned to the 1/{mu.den} grid")
    levels = []
    for t in grid_thresholds(interval, mu.den):
        mask = 0
        for x in range(mu.alg.n):
            if member(mu.values[x], t):
                mask |= 1 << x
        levels.append((t, mask))
    return SoftSet(mu.alg, interval, kind, mu.den, tuple(levels))


def epsilon_soft(mu: FuzzySet, interval: ParameterInterval = FULL) -> SoftSet:
    """t -> {x : mu(x) >= t}; levels shrink as t grows."""
    return _build(mu, interval, "in", lambda v, t: v >= t)


def q_soft(mu: FuzzySet, interval: ParameterInterval = FULL) -> SoftSet:
    """t -> {x : mu(x) + t > 1}; levels grow as t grows."""
    return _build(mu, interval, "q", lambda v, t: v + t > ONE)


def build_soft(mu: FuzzySet, interval: ParameterInterval, kind: str) -> SoftSet:
    if kind not in SOFT_KINDS:
        raise ValueError(f"unknown soft-set kind {kind!r}")
    return (epsilon_soft if kind == "in" else q_soft)(mu, interval)


def classify_soft(soft: SoftSet, kind: str = "filter"):
    """True iff every level set is a filter of the requested kind.

    The empty level passes for every kind (the conventional reading of
    the empty set as a filter).  Returns (verdict, witness) where the
    witness is the first failing threshold with the offending tuple.
    """
    for t, mask in soft.levels:
        if mask == 0:
            continue
        cls = classify_filter(soft.alg, mask)
        if not cls.has(kind):
            key = "filter" if not cls.is_filter else kind
            return False, (t, key, cls.witnesses.get(key))
    return True, None


def soft_from_doc(alg: FiniteMtlAlgebra, doc: dict) -> SoftSet:
    """Load an explicitly tabulated soft set; gaps in the interval are rejected."""
    interval = ParameterInterval.parse(doc["interval"].strip("(]"))
    den = int(doc["den"])
    kind = doc["kind"]
    if kind not in SOFT_KINDS:
        raise ValueError(f"unknown soft-set kind {kind!r}")
    supplied = {Fraction(t): mask_of(alg, labs) for t, labs in doc["levels"]}
    required = grid_thresholds(interval, den)
    missing = [t for t in required if t not in supplied]
    if missing:
        raise ValueError(
            f"soft set leaves parameter values undefined: {', '.join(map(str, missing))}")
    extra = [t for t in supplied if t not in required]
    if extra:
        raise ValueError(f"thresholds outside {interval}: {', '.join(map(str, extra))}")
    levels = tuple((t, supplied[t]) for t in required)
    return SoftSet(alg, interval, kind, den, levels)
