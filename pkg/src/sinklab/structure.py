"""Classical structure computations: derived and lower central series,
nilpotency, the nilpotent residual, and the Fitting subgroup.

The Fitting subgroup is computed by Baer's criterion: in a finite group the
left Engel elements form exactly the largest normal nilpotent subgroup. The
result is then certified (subgroup, normal, nilpotent) and can be
cross-checked against an independent construction from normal closures.
"""

from __future__ import annotations

from dataclasses import dataclass

from .engel import is_left_engel
from .errors import InternalInconsistency
from .group import (
    ElementSet,
    GroupTable,
    is_normal,
    is_subgroup,
    normal_closure,
    quotient,
    subgroup_closure,
    subgroup_table,
)


@dataclass(frozen=True)
class SeriesReport:
    kind: str  # "lower_central" | "derived"
    terms: tuple[ElementSet, ...]
    stable: bool

    @property
    def last(self) -> ElementSet:
        return self.terms[-1]


def _comm_values(G: GroupTable, left: ElementSet, right: ElementSet) -> set[int]:
    return {G.comm(x, g) for x in left.members for g in right.members}


def derived_subgroup(G: GroupTable) -> ElementSet:
    full = ElementSet.full(G.n)
    return subgroup_closure(G, _comm_values(G, full, full))


def _series(G: GroupTable, kind: str) -> SeriesReport:
    terms = [ElementSet.full(G.n)]
    while True:
        cur = terms[-1]
        if kind == "lower_central":
            vals = _comm_values(G, cur, ElementSet.full(G.n))
        else:
            vals = _comm_values(G, cur, cur)
        nxt = subgroup_closure(G, vals | {0})
        terms.append(nxt)
        if nxt.members == cur.members:
            break
    return SeriesReport(kind=kind, terms=tuple(terms), stable=True)


def lower_central_series(G: GroupTable) -> SeriesReport:
    return _series(G, "lower_central")


def derived_series(G: GroupTable) -> SeriesReport:
    return _series(G, "derived")


def is_nilpotent(G: GroupTable) -> bool:
    return len(lower_central_series(G).last) == 1


def nilpotency_class(G: GroupTable) -> int | None:
    series = lower_central_series(G)
    for i, term in enumerate(series.terms):
        if len(term) == 1:
            return i
    return None


def nilpotent_residual(G: GroupTable) -> ElementSet:
    """Stable term of the lower central series: the smallest normal subgroup
    with nilpotent quotient."""
    residual = lower_central_series(G).last
    Q, _ = quotient(G, residual)
    if not is_nilpotent(Q):
        raise InternalInconsistency("quotient by the nilpotent residual is not nilpotent")
    return residual


def left_engel_set(G: GroupTable) -> ElementSet:
    return ElementSet.of(G.n, (x for x in G.elements() if is_left_engel(G, x)))


def fitting_subgroup(G: GroupTable) -> ElementSet:
    """Largest normal nilpotent subgroup, as the set of left Engel elements."""
    F = left_engel_set(G)
    if not is_subgroup(G, F):
        raise InternalInconsistency("left Engel set is not closed under multiplication")
    if not is_normal(G, F):
        raise InternalInconsistency("left Engel set is not normal")
    sub, _ = subgroup_table(G, F)
    if not is_nilpotent(sub):
        raise InternalInconsistency("left Engel set is not nilpotent")
    return F


def fitting_index(G: GroupTable) -> int:
    return G.n // len(fitting_subgroup(G))


def fitting_maximality_check(G: GroupTable) -> bool:
    """Certify maximality: adjoining the normal closure of any outside element
    to the Fitting subgroup must break nilpotency."""
    F = fitting_subgroup(G)
    for x in G.elements():
        if x in F:
            continue
        extended = subgroup_closure(G, F.members | normal_closure(G, [x]).members)
        sub, _ = subgroup_table(G, extended)
        if is_nilpotent(sub):
            return False
    return True


def fitting_via_normal_closures(G: GroupTable) -> ElementSet:
    """Independent Fitting construction: product of all nilpotent normal
    closures of single elements. Used to cross-check the Baer route."""
    pieces: set[int] = {0}
    for x in G.elements():
        ncl = normal_closure(G, [x])
        sub, _ = subgroup_table(G, ncl)
        if is_nilpotent(sub):
            pieces |= ncl.members
    return subgroup_closure(G, pieces)


def normal_subgroups(G: GroupTable) -> list[ElementSet]:
    """All normal subgroups, as joins of single-element normal closures.

    Every normal subgroup is the join of the normal closures of its elements,
    so closing the atoms under pairwise join enumerates the whole lattice.
    Intended for small groups; cost grows with the lattice size.
    """
    atoms = {frozenset([0])}
    for x in range(1, G.n):
        atoms.add(normal_closure(G, [x]).members)
    found = set(atoms)
    frontier = set(atoms)
    while frontier:
        fresh: set[frozenset[int]] = set()
        for a in frontier:
            for b in atoms:
                j = subgroup_closure(G, a | b).members
                if j not in found:
                    found.add(j)
                    fresh.add(j)
        frontier = fresh
    return [ElementSet(G.n, m) for m in sorted(found, key=lambda m: (len(m), sorted(m)))]
