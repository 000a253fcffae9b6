"""Machine-checking of the characterization theorems.

Each catalog entry ties a fuzzy-side predicate (family + kind) to a
soft-side predicate (level cuts over an interval, classified per kind),
or relates two soft-side predicates.  Verification enumerates every grid
fuzzy set on the algebra (or a seeded sample when over budget) and
records every input for which the claimed biconditional or implication
fails.  A confirmation is always "at this algebra and grid", never a
proof.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import FiniteMtlAlgebra
from .fuzzy import (ONE, FuzzySet, check_fuzzy_witness, count_fuzzy_sets,
                    enumerate_fuzzy_sets, sample_fuzzy_sets)
from .soft import (FULL, LOWER, UPPER, ParameterInterval, build_soft,
                   classify_soft)

RELATION_IDS = ("T4.2.13", "T4.3.12", "T4.3.13")


@dataclass(frozen=True)
class TheoremSpec:
    id: str
    soft_kind: str                       # "in" or "q"
    interval: ParameterInterval | None   # None: thresholds default for the grid
    filter_kind: str
    family: str | None                   # None for soft-to-soft relation claims
    route: str = "default"
    direction: str = "iff"               # "iff" or "forward"
    relation: tuple[str, tuple[str, ...]] | None = None

    def describe(self) -> str:
        if self.relation:
            lhs, rhs = self.relation
            arrow = "<=>" if self.direction == "iff" else "=>"
            return f"soft {lhs} {arrow} soft {' & '.join(rhs)} over {self.interval}"
        iv = self.interval or "(alpha,beta]"
        return f"{self.soft_kind}-soft over {iv} {self.filter_kind} <=> {self.family} fuzzy"


# (soft kind, interval, fuzzy family) pattern shared by all four filter kinds
_PATTERN = (
    ("in", FULL, "plain"),
    ("q", FULL, "plain"),
    ("in", LOWER, "eiq"),
    ("in", UPPER, "bar"),
    ("q", LOWER, "bar"),
    ("q", UPPER, "eiq"),
    ("in", None, "thresholds"),
)

_IDS = {
    "filter": ("T3.3", "T3.4", "T3.6", "T3.8", "T3.9", "T3.10", "T3.12"),
    "boolean": ("T4.1.4", "T4.1.5", "T4.1.7", "T4.1.9", "T4.1.10", "T4.1.11", "T4.1.12"),
    "mv": ("T4.2.4", "T4.2.5", "T4.2.7", "T4.2.9", "T4.2.10", "T4.2.11", "T4.2.12"),
    "g": ("T4.3.3", "T4.3.4", "T4.3.6", "T4.3.8", "T4.3.9", "T4.3.10", "T4.3.11"),
}


def catalog() -> list[TheoremSpec]:
    """The full fixed catalog: 28 grid entries plus 3 relation entries."""
    specs = []
    for kind, ids in _IDS.items():
        for tid, (soft_kind, interval, family) in zip(ids, _PATTERN):
            route = "complement" if (family == "plain" and kind == "boolean") else "default"
            specs.append(TheoremSpec(tid, soft_kind, interval, kind, family, route))
    specs.append(TheoremSpec("T4.2.13", "in", FULL, "boolean", None,
                             direction="forward", relation=("boolean", ("mv",))))
    specs.append(TheoremSpec("T4.3.12", "in", FULL, "boolean", None,
                             direction="forward", relation=("boolean", ("g",))))
    specs.append(TheoremSpec("T4.3.13", "in", FULL, "boolean", None,
                             direction="iff", relation=("boolean", ("mv", "g"))))
    return specs


def catalog_by_id() -> dict[str, TheoremSpec]:
    return {s.id: s for s in catalog()}


def default_thresholds(den: int) -> ParameterInterval:
    """Grid-aligned (alpha, beta] used when a theorem is generic in its interval."""
    if den == 2:
        return ParameterInterval(Fraction(1, 2), ONE)
    return ParameterInterval(Fraction(1, den), Fraction(den - 1, den))


@dataclass
class VerificationReport:
    theorem: str
    algebra: str
    den: int
    checked: int = 0
    mode: str = "exhaustive"
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def confirmed(self) -> bool:
        return not self.counterexamples

    def to_doc(self) -> dict:
        return {
            "theorem": self.theorem,
            "algebra": self.algebra,
            "den": self.den,
            "checked": self.checked,
            "mode": self.mode,
            "confirmed": self.confirmed,
            "counterexamples": self.counterexamples,
        }


def _stream(alg, den, budget, seed):
    total = count_fuzzy_sets(alg, den)
    if budget is not None and total > budget:
        return sample_fuzzy_sets(alg, den, budget, seed), budget, "sampled"
    return enumerate_fuzzy_sets(alg, den), total, "exhaustive"


def _fmt_witness(w):
    if w is None:
        return None
    return [str(part) for part in w]


def verify(alg: FiniteMtlAlgebra, spec: TheoremSpec, den: int,
           budget: int | None = None, seed: int = 0,
           interval: ParameterInterval | None = None) -> VerificationReport:
    """Check one catalog entry against every (or a sampled set of) grid fuzzy set."""
    iv = interval or spec.interval or default_thresholds(den)
    stream, _, mode = _stream(alg, den, budget, seed)
    rep = VerificationReport(spec.id, "/".join(alg.labels), den, mode=mode)

    alpha = beta = None
    if spec.family == "thresholds":
        alpha, beta = iv.lo, iv.hi

    for mu in stream:
        rep.checked += 1
        if spec.relation:
            lhs_kind, rhs_kinds = spec.relation
            soft = build_soft(mu, iv, spec.soft_kind)
            lhs, lw = classify_soft(soft, lhs_kind)
            rhs_results = [classify_soft(soft, k) for k in rhs_kinds]
            rhs = all(ok for ok, _ in rhs_results)
            if lhs and not rhs:
                bad = next(w for ok, w in rhs_results if not ok)
                rep.counterexamples.append(
                    {"mu": mu.to_doc(), "direction": "forward", "witness": _fmt_witness(bad)})
            elif spec.direction == "iff" and rhs and not lhs:
                rep.counterexamples.append(
                    {"mu": mu.to_doc(), "direction": "converse", "witness": _fmt_witness(lw)})
            continue

        fw = check_fuzzy_witness(mu, spec.family, spec.filter_kind, spec.route, alpha, beta)
        soft_ok, sw = classify_soft(build_soft(mu, iv, spec.soft_kind), spec.filter_kind)
        if fw is None and not soft_ok:
            rep.counterexamples.append(
                {"mu": mu.to_doc(), "direction": "fuzzy=>soft", "witness": _fmt_witness(sw)})
        elif fw is not None and soft_ok and spec.direction == "iff":
            rep.counterexamples.append(
                {"mu": mu.to_doc(), "direction": "soft=>fuzzy", "witness": _fmt_witness(fw)})
    return rep


def verify_all(alg: FiniteMtlAlgebra, den: int, budget: int | None = None,
               seed: int = 0) -> list[VerificationReport]:
    return [verify(alg, spec, den, budget=budget, seed=seed) for spec in catalog()]


def find_strictness_witness(alg: FiniteMtlAlgebra, theorem_id: str, den: int,
                            budget: int | None = None, seed: int = 0) -> FuzzySet | None:
    """Search for a fuzzy set showing the converse of T4.2.13 / T4.3.12 fails.

    Returns the first mu whose level cuts are all MV- (resp. G-) filters
    but not all Boolean filters, or None if the search space has none
    (absence at one scale is not a refutation).
    """
    rhs = {"T4.2.13": "mv", "T4.3.12": "g"}.get(theorem_id)
    if rhs is None:
        raise ValueError(f"{theorem_id!r} has no strictness claim; use T4.2.13 or T4.3.12")
    stream, _, _ = _stream(alg, den, budget, seed)
    for mu in stream:
        soft = build_soft(mu, FULL, "in")
        if classify_soft(soft, rhs)[0] and not classify_soft(soft, "boolean")[0]:
            return mu
    return None
