"""Crisp filters: decision, classification, enumeration, generation.

Subsets of a carrier are plain int bitmasks (bit i = element i).  The
empty set is never produced by :func:`enumerate_filters` and is rejected
by :func:`is_filter`; the soft layer applies its own "empty set counts
as a filter of every kind" convention.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .algebra import FiniteMtlAlgebra, negation


def mask_of(alg: FiniteMtlAlgebra, labels) -> int:
    m = 0
    for lab in labels:
        m |= 1 << alg.index(lab)
    return m


def labels_of(alg: FiniteMtlAlgebra, mask: int) -> list[str]:
    return [alg.labels[i] for i in range(alg.n) if mask >> i & 1]


def elements(mask: int):
    i = 0
    while mask >> i:
        if mask >> i & 1:
            yield i
        i += 1


@dataclass
class FilterClassification:
    is_filter: bool
    boolean: bool = False
    g: bool = False
    mv: bool = False
    # first (lexicographic) violating tuple per failed property
    witnesses: dict[str, tuple[str, ...]] = field(default_factory=dict)

    def has(self, kind: str) -> bool:
        if kind == "filter":
            return self.is_filter
        return getattr(self, kind)


def _filter_by_closure(alg: FiniteMtlAlgebra, mask: int):
    """Closed under the product and upward-closed."""
    for x in elements(mask):
        for y in elements(mask):
            if not mask >> alg.prod[x][y] & 1:
                return ("prod", x, y)
        for y in range(alg.n):
            if alg.leq[x][y] and not mask >> y & 1:
                return ("up", x, y)
    return None


def _filter_by_modus_ponens(alg: FiniteMtlAlgebra, mask: int):
    """Contains top and is closed under modus ponens."""
    if not mask >> alg.top & 1:
        return ("top",)
    for x in elements(mask):
        for y in range(alg.n):
            if mask >> alg.res[x][y] & 1 and not mask >> y & 1:
                return ("mp", x, y)
    return None


def is_filter(alg: FiniteMtlAlgebra, mask: int) -> bool:
    """Evaluate both definitional routes and return the shared verdict.

    Disagreement between the two routes on a residuated lattice is
    impossible, so it is raised as a defect rather than reported.
    """
    if mask == 0:
        raise ValueError("empty subset: the crisp layer requires non-empty sets")
    a = _filter_by_closure(alg, mask) is None
    b = _filter_by_modus_ponens(alg, mask) is None
    if a != b:
        raise RuntimeError(
            f"filter definitions disagree on {labels_of(alg, mask)}: "
            "operation tables are inconsistent")
    return a


@lru_cache(maxsize=None)
def classify_filter(alg: FiniteMtlAlgebra, mask: int) -> FilterClassification:
    """Flag a subset as (Boolean/G/MV-)filter by exhaustive scans."""
    cls = FilterClassification(is_filter=bool(mask) and is_filter(alg, mask))
    if not cls.is_filter:
        if mask:
            w = _filter_by_closure(alg, mask)
            cls.witnesses["filter"] = (w[0], *(alg.labels[e] for e in w[1:]))
        return cls

    cls.boolean = True
    for x in range(alg.n):
        if not mask >> alg.join[x][negation(alg, x)] & 1:
            cls.boolean = False
            cls.witnesses["boolean"] = (alg.labels[x],)
            break

    cls.g = True
    for x in range(alg.n):
        xx = alg.prod[x][x]
        for y in range(alg.n):
            if mask >> alg.res[xx][y] & 1 and not mask >> alg.res[x][y] & 1:
                cls.g = False
                cls.witnesses["g"] = (alg.labels[x], alg.labels[y])
                break
        if not cls.g:
            break

    cls.mv = True
    for x in range(alg.n):
        for y in range(alg.n):
            if mask >> alg.res[x][y] & 1:
                lhs = alg.res[alg.res[alg.res[y][x]][x]][y]
                if not mask >> lhs & 1:
                    cls.mv = False
                    cls.witnesses["mv"] = (alg.labels[x], alg.labels[y])
                    break
        if not cls.mv:
            break
    return cls


def enumerate_filters(alg: FiniteMtlAlgebra, cap: int = 20) -> list[int]:
    """All non-empty filters, ordered by (size, bitmask value)."""
    if alg.n > cap:
        raise ValueError(f"carrier size {alg.n} exceeds the 2^n enumeration cap {cap}")
    found = [m for m in range(1, 1 << alg.n) if is_filter(alg, m)]
    found.sort(key=lambda m: (m.bit_count(), m))
    return found


def generated_filter(alg: FiniteMtlAlgebra, mask: int) -> int:
    """Least filter containing the set: close under product and upward."""
    if mask == 0:
        raise ValueError("cannot generate a filter from the empty set")
    cur = mask | 1 << alg.top
    while True:
        nxt = cur
        for x in elements(cur):
            for y in elements(cur):
                nxt |= 1 << alg.prod[x][y]
            for y in range(alg.n):
                if alg.leq[x][y]:
                    nxt |= 1 << y
        if nxt == cur:
            return cur
        cur = nxt


def crisp_decomposition_check(alg: FiniteMtlAlgebra) -> list[tuple[int, FilterClassification]]:
    """Counterexamples to Boolean <=> (G and MV) over all filters.

    Expected empty on every valid algebra; a hit means the operation
    tables do not form an MTL-algebra (or the classifiers are broken).
    """
    bad = []
    for m in enumerate_filters(alg):
        cls = classify_filter(alg, m)
        if cls.boolean != (cls.g and cls.mv):
            bad.append((m, cls))
    return bad
