"""Grid-valued fuzzy sets and every fuzzy-filter variant.

Membership values are exact rationals on a fixed grid 0, 1/D, ..., 1
with D even, so 1/2 is always representable and every strict/non-strict
comparison in the quasi-coincidence relation is exact.

All four families share one inequality engine: the plain family is the
threshold pair (0, 1), the (min .., 1/2)-capped family is (0, 1/2), the
(max .., 1/2)-lifted family is (1/2, 1), and the thresholds family is a
caller-chosen (alpha, beta).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import FiniteMtlAlgebra, negation

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)

FAMILIES = ("plain", "eiq", "bar", "thresholds")
KINDS = ("filter", "boolean", "mv", "g")

# threshold pair (lo, hi) realizing each fixed family
_FAMILY_BOUNDS = {"plain": (ZERO, ONE), "eiq": (ZERO, HALF), "bar": (HALF, ONE)}

MODES = ("in", "q", "in-or-q", "not-in", "not-q", "not-in-or-not-q")


class BudgetError(RuntimeError):
    """Search space larger than the configured enumeration budget."""


def grid(den: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(k, den) for k in range(den + 1))


def on_grid(value: Fraction, den: int) -> bool:
    return ZERO <= value <= ONE and (value * den).denominator == 1


@dataclass(frozen=True)
class FuzzySet:
    """Total map from the carrier to the 1/D grid."""

    alg: FiniteMtlAlgebra
    den: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if self.den <= 0 or self.den % 2:
            raise ValueError(f"grid denominator must be positive and even, got {self.den}")
        if len(self.values) != self.alg.n:
            raise ValueError("fuzzy set must be total over the carrier")
        for v in self.values:
            if not on_grid(v, self.den):
                raise ValueError(f"membership value {v} is not on the 1/{self.den} grid")

    def __call__(self, x: int) -> Fraction:
        return self.values[x]

    def of(self, label: str) -> Fraction:
        return self.values[self.alg.index(label)]

    def to_doc(self) -> dict:
        return {lab: str(v) for lab, v in zip(self.alg.labels, self.values)}

    @classmethod
    def constant(cls, alg, den, value) -> "FuzzySet":
        return cls(alg, den, (Fraction(value),) * alg.n)

    @classmethod
    def from_mapping(cls, alg, den, mapping) -> "FuzzySet":
        vals = []
        for lab in alg.labels:
            if lab not in mapping:
                raise ValueError(f"no membership value for element {lab!r}")
            vals.append(Fraction(mapping[lab]))
        return cls(alg, den, tuple(vals))

    @classmethod
    def characteristic(cls, alg, den, mask: int) -> "FuzzySet":
        return cls(alg, den, tuple(ONE if mask >> i & 1 else ZERO for i in range(alg.n)))


@dataclass(frozen=True)
class MembershipQuery:
    x: int
    level: Fraction
    mode: str = "in"

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown membership mode {self.mode!r}")
        if not ZERO < self.level <= ONE:
            raise ValueError("membership level must lie in (0, 1]")


def evaluate(mu: FuzzySet, query: MembershipQuery) -> bool:
    """Exact fuzzy-point membership: x_t in mu, x_t q mu, and negations."""
    belongs = mu.values[query.x] >= query.level
    coincides = mu.values[query.x] + query.level > ONE
    return {
        "in": belongs,
        "q": coincides,
        "in-or-q": belongs or coincides,
        "not-in": not belongs,
        "not-q": not coincides,
        "not-in-or-not-q": not belongs or not coincides,
    }[query.mode]


# --- inequality scans; each returns the first violating tuple or None ---

def _w_filter(alg, v, lo, hi):
    top = alg.top
    for x in range(alg.n):
        if max(v[top], lo) < min(v[x], hi):
            return ("unit", alg.labels[x])
    for x in range(alg.n):
        rx = alg.res[x]
        for y in range(alg.n):
            if max(v[y], lo) < min(v[rx[y]], v[x], hi):
                return ("mp", alg.labels[x], alg.labels[y])
    return None


def _w_filter_product(alg, v):
    for x in range(alg.n):
        for y in range(alg.n):
            if v[alg.prod[x][y]] < min(v[x], v[y]):
                return ("product", alg.labels[x], alg.labels[y])
            if alg.leq[x][y] and v[x] > v[y]:
                return ("order", alg.labels[x], alg.labels[y])
    return None


def _w_boolean_complement(alg, v):
    vt = v[alg.top]
    for x in range(alg.n):
        if v[alg.join[x][negation(alg, x)]] != vt:
            return ("complement", alg.labels[x])
    return None


def _w_boolean_chain(alg, v, lo, hi):
    res = alg.res
    neg = [negation(alg, z) for z in range(alg.n)]
    for x in range(alg.n):
        for y in range(alg.n):
            for z in range(alg.n):
                lhs = max(v[res[x][z]], lo)
                if lhs < min(v[res[x][res[neg[z]][y]]], v[res[y][z]], hi):
                    return ("chain", alg.labels[x], alg.labels[y], alg.labels[z])
    return None


def _w_boolean_contraction(alg, v):
    res = alg.res
    for x in range(alg.n):
        for y in range(alg.n):
            if v[x] < v[res[res[x][y]][x]]:
                return ("contraction", alg.labels[x], alg.labels[y])
    return None


def _w_mv(alg, v, lo, hi):
    res = alg.res
    for x in range(alg.n):
        for y in range(alg.n):
            lhs = res[res[res[y][x]][x]][y]
            if max(v[lhs], lo) < min(v[res[x][y]], hi):
                return ("mv", alg.labels[x], alg.labels[y])
    return None


def _w_g(alg, v, lo, hi):
    res, prod = alg.res, alg.prod
    for x in range(alg.n):
        xx = prod[x][x]
        for y in range(alg.n):
            if max(v[res[x][y]], lo) < min(v[res[xx][y]], hi):
                return ("g", alg.labels[x], alg.labels[y])
    return None


def _bounds(family, alpha, beta):
    if family in _FAMILY_BOUNDS:
        return _FAMILY_BOUNDS[family]
    if family != "thresholds":
        raise ValueError(f"unknown fuzzy family {family!r}")
    if alpha is None or beta is None:
        raise ValueError("thresholds family needs alpha and beta")
    alpha, beta = Fraction(alpha), Fraction(beta)
    if not ZERO < alpha < beta <= ONE:
        raise ValueError(f"thresholds must satisfy 0 < alpha < beta <= 1, got ({alpha}, {beta})")
    return alpha, beta


def check_fuzzy_witness(mu: FuzzySet, family: str, kind: str, route: str = "default",
                        alpha=None, beta=None):
    """First violating tuple of the requested fuzzy-filter variant, or None.

    Every kind other than "filter" includes the same-family filter
    condition as a conjunct.  ``route`` selects among the provably
    equivalent formulations where several exist (plain filter and plain
    Boolean); ``route="all"`` evaluates every formulation and raises if
    they disagree.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown filter kind {kind!r}")
    lo, hi = _bounds(family, alpha, beta)
    alg, v = mu.alg, mu.values

    if family == "plain" and kind == "filter":
        if route in ("default", "product"):
            return _w_filter_product(alg, v)
        if route == "mp":
            return _w_filter(alg, v, lo, hi)
        if route == "all":
            w_prod = _w_filter_product(alg, v)
            w_mp = _w_filter(alg, v, lo, hi)
            if (w_prod is None) != (w_mp is None):
                raise RuntimeError(f"fuzzy filter formulations disagree on {mu.to_doc()}")
            return w_prod or w_mp
        raise ValueError(f"unknown plain filter route {route!r}")

    if route not in ("default", "all") and not (family == "plain" and kind == "boolean"):
        raise ValueError(f"route {route!r} is only meaningful for the plain family")

    # threshold pair (0,1) makes this exactly the unit+modus-ponens filter form
    w = _w_filter(alg, v, lo, hi)
    if kind == "filter" or w is not None:
        return w

    if kind == "mv":
        return _w_mv(alg, v, lo, hi)
    if kind == "g":
        return _w_g(alg, v, lo, hi)

    # Boolean
    if family != "plain":
        return _w_boolean_chain(alg, v, lo, hi)
    routes = {
        "complement": lambda: _w_boolean_complement(alg, v),
        "chain": lambda: _w_boolean_chain(alg, v, lo, hi),
        "contraction": lambda: _w_boolean_contraction(alg, v),
    }
    if route in routes:
        return routes[route]()
    if route == "default":
        return routes["complement"]()
    if route != "all":
        raise ValueError(f"unknown plain boolean route {route!r}")
    results = {name: fn() for name, fn in routes.items()}
    verdicts = {name: w is None for name, w in results.items()}
    if len(set(verdicts.values())) != 1:
        raise RuntimeError(
            f"boolean formulations disagree on {mu.to_doc()}: {verdicts}")
    if all(verdicts.values()):
        return None
    return next(w for w in results.values() if w is not None)


def check_fuzzy(mu: FuzzySet, family: str, kind: str, route: str = "default",
                alpha=None, beta=None) -> bool:
    return check_fuzzy_witness(mu, family, kind, route, alpha, beta) is None


def count_fuzzy_sets(alg: FiniteMtlAlgebra, den: int) -> int:
    return (den + 1) ** alg.n


def enumerate_fuzzy_sets(alg: FiniteMtlAlgebra, den: int, budget: int | None = None):
    """Lexicographic stream of every total grid map (constant-0 first)."""
    total = count_fuzzy_sets(alg, den)
    if budget is not None and total > budget:
        raise BudgetError(f"{total} fuzzy sets exceed the budget of {budget}")
    pts = grid(den)
    for combo in itertools.product(pts, repeat=alg.n):
        yield FuzzySet(alg, den, combo)


def sample_fuzzy_sets(alg: FiniteMtlAlgebra, den: int, count: int, seed: int):
    """Seeded uniform sample of grid maps, for over-budget searches."""
    rng = random.Random(seed)
    pts = grid(den)
    for _ in range(count):
        yield FuzzySet(alg, den, tuple(rng.choice(pts) for _ in range(alg.n)))
