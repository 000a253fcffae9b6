"""Finite MTL-algebras given as operation tables.

An algebra is loaded from a document carrying the product and residuum
tables; the lattice order is always derived from the residuum
(x <= y iff x -> y = top), never trusted from the input.  Validation is
exhaustive over all pairs/triples -- carriers are expected to be tiny
(n <= 12 or so), so O(n^3) scans are the right trade.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class AlgebraError(ValueError):
    """Malformed algebra document or structurally broken tables."""


@dataclass(frozen=True, eq=False)
class FiniteMtlAlgebra:
    """Carrier plus operation tables; immutable after load.

    Elements are indices into ``labels``; labels are presentation-only.
    ``eq=False`` keeps identity semantics so instances can key caches.
    """

    labels: tuple[str, ...]
    prod: tuple[tuple[int, ...], ...]
    res: tuple[tuple[int, ...], ...]
    leq: tuple[tuple[bool, ...], ...]
    meet: tuple[tuple[int, ...], ...]
    join: tuple[tuple[int, ...], ...]
    bottom: int
    top: int

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise AlgebraError(f"unknown element label {label!r}") from None

    def __repr__(self):
        return f"FiniteMtlAlgebra({'/'.join(self.labels)})"


@dataclass
class AxiomReport:
    """Per-axiom verdicts; a violation is (axiom id, offending labels)."""

    violations: dict[str, list[tuple[str, ...]]] = field(default_factory=dict)

    def record(self, axiom: str, alg: FiniteMtlAlgebra, *elems: int) -> None:
        tup = tuple(alg.labels[e] for e in elems)
        self.violations.setdefault(axiom, []).append(tup)

    def passed(self, axiom: str) -> bool:
        return not self.violations.get(axiom)

    @property
    def ok(self) -> bool:
        return not any(self.violations.values())

    @property
    def failed_axioms(self) -> list[str]:
        return sorted(a for a, v in self.violations.items() if v)

    def to_doc(self) -> dict:
        return {
            "ok": self.ok,
            "violations": {a: [list(t) for t in v] for a, v in self.violations.items() if v},
        }


def negation(alg: FiniteMtlAlgebra, x: int) -> int:
    """x' = x -> bottom."""
    return alg.res[x][alg.bottom]


def _parse_table(doc: dict, key: str, labels: list[str]) -> list[list[int]]:
    n = len(labels)
    table = doc[key]
    if len(table) != n or any(len(row) != n for row in table):
        raise AlgebraError(f"table {key!r} is not {n}x{n}")
    idx = {lab: i for i, lab in enumerate(labels)}
    out = []
    for row in table:
        try:
            out.append([idx[cell] for cell in row])
        except KeyError as exc:
            raise AlgebraError(f"table {key!r} uses unknown label {exc.args[0]!r}") from None
    return out


def load_algebra(doc: dict) -> FiniteMtlAlgebra:
    """Build a FiniteMtlAlgebra from a document (see fixtures for the shape).

    Derives the order from the residuum, checks it is a lattice order with
    global bottom/top, computes meet/join as inf/sup, and cross-checks any
    supplied meet/join tables against the derived ones.
    """
    labels = list(doc["labels"])
    n = len(labels)
    if n < 2:
        raise AlgebraError("carrier must contain at least bottom and top")
    if len(set(labels)) != n:
        raise AlgebraError("duplicate element labels")

    prod = _parse_table(doc, "prod", labels)
    res = _parse_table(doc, "res", labels)

    idx = {lab: i for i, lab in enumerate(labels)}
    bottom = idx[doc["bottom"]] if "bottom" in doc else 0
    top = idx[doc["top"]] if "top" in doc else n - 1
    if bottom == top:
        raise AlgebraError("bottom and top must differ")

    # Order from the residuum: x <= y iff x -> y = top.
    leq = [[res[x][y] == top for y in range(n)] for x in range(n)]

    for x in range(n):
        if not leq[x][x]:
            raise AlgebraError(f"derived order not reflexive at {labels[x]}")
        if not (leq[bottom][x] and leq[x][top]):
            raise AlgebraError(f"{labels[x]} not between declared bottom and top")
    for x in range(n):
        for y in range(n):
            if x != y and leq[x][y] and leq[y][x]:
                raise AlgebraError(
                    f"derived order not antisymmetric on {labels[x]},{labels[y]}")
            for z in range(n):
                if leq[x][y] and leq[y][z] and not leq[x][z]:
                    raise AlgebraError(
                        "derived order not transitive on "
                        f"{labels[x]},{labels[y]},{labels[z]}")

    def _bound(x: int, y: int, lower: bool) -> int:
        if lower:
            cands = [z for z in range(n) if leq[z][x] and leq[z][y]]
        else:
            cands = [z for z in range(n) if leq[x][z] and leq[y][z]]
        for z in cands:
            if lower and all(leq[w][z] for w in cands):
                return z
            if not lower and all(leq[z][w] for w in cands):
                return z
        kind = "meet" if lower else "join"
        raise AlgebraError(f"no {kind} for {labels[x]},{labels[y]}: order is not a lattice")

    meet = [[_bound(x, y, True) for y in range(n)] for x in range(n)]
    join = [[_bound(x, y, False) for y in range(n)] for x in range(n)]

    for key, derived in (("meet", meet), ("join", join)):
        if key in doc:
            supplied = _parse_table(doc, key, labels)
            if supplied != derived:
                raise AlgebraError(f"supplied {key} table disagrees with derived order")

    freeze = lambda t: tuple(tuple(row) for row in t)
    return FiniteMtlAlgebra(
        labels=tuple(labels),
        prod=freeze(prod),
        res=freeze(res),
        leq=freeze(leq),
        meet=freeze(meet),
        join=freeze(join),
        bottom=bottom,
        top=top,
    )


def validate_mtl(alg: FiniteMtlAlgebra) -> AxiomReport:
    """Exhaustively check the residuated-lattice axioms plus prelinearity."""
    n, prod, res, leq = alg.n, alg.prod, alg.res, alg.leq
    join = alg.join
    top = alg.top
    rep = AxiomReport()

    for x in range(n):
        if prod[x][top] != x:
            rep.record("prod-unit", alg, x)
        for y in range(n):
            if prod[x][y] != prod[y][x]:
                rep.record("prod-commutative", alg, x, y)
            for z in range(n):
                if prod[prod[x][y]][z] != prod[x][prod[y][z]]:
                    rep.record("prod-associative", alg, x, y, z)
                # isotone in the first argument (commutativity covers the second)
                if leq[x][y] and not leq[prod[x][z]][prod[y][z]]:
                    rep.record("prod-isotone", alg, x, y, z)
                if leq[prod[x][y]][z] != leq[x][res[y][z]]:
                    rep.record("adjunction", alg, x, y, z)

    for x in range(n):
        for y in range(n):
            if join[res[x][y]][res[y][x]] != top:
                rep.record("prelinearity", alg, x, y)
    return rep


def check_derived_laws(alg: FiniteMtlAlgebra) -> AxiomReport:
    """Exhaustively check the laws every MTL-algebra must satisfy.

    These are consequences of the axioms, so a violation here on a
    validated algebra signals a table-entry defect.
    """
    n, prod, res = alg.n, alg.prod, alg.res
    leq, meet, join = alg.leq, alg.meet, alg.join
    bot, top = alg.bottom, alg.top
    neg = [negation(alg, x) for x in range(n)]
    rep = AxiomReport()

    for x in range(n):
        if res[bot][x] != top:
            rep.record("bottom-residuates-to-top", alg, x)
        if res[top][x] != x:
            rep.record("top-residuum-identity", alg, x)
        if not (neg[x] == neg[neg[neg[x]]] and leq[x][neg[neg[x]]] and prod[neg[x]][x] == bot):
            rep.record("negation-laws", alg, x)
        if join[x][neg[x]] == top and meet[x][neg[x]] != bot:
            rep.record("complemented-implies-disjoint", alg, x)
        for y in range(n):
            if leq[x][y] != (res[x][y] == top):
                rep.record("order-residuum", alg, x, y)
            if res[x][res[y][x]] != top:
                rep.record("weakening", alg, x, y)
            if not leq[y][res[res[y][x]][x]]:
                rep.record("double-residuation-lift", alg, x, y)
            if not leq[prod[x][y]][meet[x][y]]:
                rep.record("prod-below-meet", alg, x, y)
            for z in range(n):
                a = res[x][res[y][z]]
                if not (a == res[prod[x][y]][z] == res[y][res[x][z]]):
                    rep.record("exchange", alg, x, y, z)
                if not (leq[res[x][y]][res[res[z][x]][res[z][y]]]
                        and leq[res[x][y]][res[res[y][z]][res[x][z]]]):
                    rep.record("residuum-monotonicity", alg, x, y, z)
                if res[x][join[y][z]] != join[res[x][y]][res[x][z]]:
                    rep.record("residuum-join-distribution", alg, x, y, z)
    return rep
