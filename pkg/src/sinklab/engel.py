"""Engel calculus on group tables: commutator-iteration tails, minimal right
Engel sinks, Engel element tests, gamma-k value sets, and commutator orbits.

For fixed x the map c -> [c, x] is a function on a finite set, so iterating
from any start walks a preperiod and then loops on a cycle. The minimal right
Engel sink of g is exactly the union over x of those eventual cycles: every
cycle value recurs at arbitrarily long iteration depths (so any sink must
contain it), and past the preperiods nothing else ever appears.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .group import ElementSet, GroupTable


@dataclass(frozen=True)
class TailTrace:
    """One commutator tail: iterate c -> [c, x] from g until the first repeat."""

    start: int
    direction: int
    preperiod: tuple[int, ...]
    cycle: tuple[int, ...]  # in iteration order, beginning at the first repeated value

    @property
    def cycle_set(self) -> frozenset[int]:
        return frozenset(self.cycle)

    def cycle_elements(self, n: int) -> ElementSet:
        return ElementSet.of(n, self.cycle)


@dataclass(frozen=True)
class SinkReport:
    """Minimal right Engel sink of one element, with recurrence witnesses.

    witnesses[z] = (x, n) with z = [g, n x] = [g, (n+m) x] for some m >= 1;
    size_nontrivial discounts the identity, which every sink contains.
    """

    g: int
    sink: ElementSet
    size_full: int
    size_nontrivial: int
    witnesses: dict[int, tuple[int, int]]


def commutator_tail(G: GroupTable, g: int, x: int) -> TailTrace:
    """Walk c0 = g, c_{i+1} = [c_i, x] and split at the first revisit."""
    G._check(g)
    G._check(x)
    pos: dict[int, int] = {}
    seq: list[int] = []
    c = g
    while c not in pos:
        pos[c] = len(seq)
        seq.append(c)
        c = G.comm(c, x)
    first = pos[c]
    return TailTrace(g, x, tuple(seq[:first]), tuple(seq[first:]))


def _tail_on_step(step: list[int], g: int) -> tuple[int, list[int]]:
    """(preperiod length, full visit sequence) of the walk from g under step."""
    pos: dict[int, int] = {}
    seq: list[int] = []
    c = g
    while c not in pos:
        pos[c] = len(seq)
        seq.append(c)
        c = step[c]
    return pos[c], seq


def step_maps(G: GroupTable) -> Iterable[tuple[int, list[int]]]:
    """Yield (x, step) where step[c] = [c, x], for every direction x."""
    for x in range(G.n):
        yield x, G.comm_step(x).tolist()


def sinks(G: GroupTable, elements: Optional[Iterable[int]] = None) -> dict[int, SinkReport]:
    """Minimal right Engel sinks for the given elements (default: all of G).

    Directions are shared across base elements, so the per-direction step map
    is built once. Witnesses record the first direction (in index order) that
    exhibits each sink value as a recurrent commutator.
    """
    targets = sorted(set(G.elements() if elements is None else (int(e) for e in elements)))
    for g in targets:
        G._check(g)
    acc: dict[int, set[int]] = {g: set() for g in targets}
    wit: dict[int, dict[int, tuple[int, int]]] = {g: {} for g in targets}
    for x, step in step_maps(G):
        for g in targets:
            first, seq = _tail_on_step(step, g)
            cyc = seq[first:]
            bag = acc[g]
            wg = wit[g]
            length = len(cyc)
            for offset, z in enumerate(cyc):
                if z not in bag:
                    bag.add(z)
                    n = first + offset
                    if n < 1:
                        n = length
                    wg[z] = (x, n)
    out = {}
    for g in targets:
        sink = ElementSet.of(G.n, acc[g])
        full = len(sink)
        out[g] = SinkReport(
            g=g,
            sink=sink,
            size_full=full,
            size_nontrivial=full - 1 if 0 in sink else full,
            witnesses=wit[g],
        )
    return out


def right_engel_sink(G: GroupTable, g: int) -> SinkReport:
    return sinks(G, [g])[g]


def is_right_engel(G: GroupTable, g: int) -> bool:
    """Whether every commutator tail from g ends in the identity."""
    G._check(g)
    for x in range(1, G.n):
        step = G.comm_step(x).tolist()
        pos: dict[int, int] = {}
        c = g
        while True:
            if c == 0:
                break  # 0 is a fixed point of every step map
            if c in pos:
                return False
            pos[c] = 1
            c = step[c]
    return True


def is_left_engel(G: GroupTable, x: int) -> bool:
    """Whether every tail in direction x ends in the identity.

    Equivalent to: the functional graph of c -> [c, x] has no cycle other
    than the fixed point at the identity.
    """
    G._check(x)
    step = G.comm_step(x).tolist()
    good = bytearray(G.n)
    good[0] = 1
    for start in range(1, G.n):
        if good[start]:
            continue
        onpath: dict[int, int] = {}
        path: list[int] = []
        c = start
        while True:
            if good[c]:
                break
            if c in onpath:
                return False
            onpath[c] = len(path)
            path.append(c)
            c = step[c]
        for p in path:
            good[p] = 1
    return True


def gamma_values(G: GroupTable, k: int) -> ElementSet:
    """Left-normed commutator values of weight k: X1 = G, X_{i+1} = {[x, g]}.

    These are word values, not subgroup closures. Stops early once the value
    set stabilizes, since the recurrence is then constant.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    n = G.n
    if k == 1:
        return ElementSet.full(n)
    table = G.table
    inv = G.inverse
    cols = np.arange(n)
    X = np.arange(n)
    for _ in range(k - 1):
        found = np.zeros(n, dtype=bool)
        block = max(1, (1 << 22) // max(n, 1))
        for lo in range(0, len(X), block):
            A = X[lo : lo + block].astype(np.intp)
            t = table[np.ix_(inv[A], inv)].astype(np.intp)  # a^-1 b^-1
            t = table[t, A[:, None]]  # (a^-1 b^-1) a
            t = table[t.astype(np.intp), cols[None, :]]  # ... b
            found[t.ravel()] = True
        nxt = np.flatnonzero(found)
        if np.array_equal(nxt, X):
            break
        X = nxt
    return ElementSet.of(n, (int(v) for v in X))


def sink_profile(G: GroupTable, k: int) -> tuple[int, int, int]:
    """(max sink size, max identity-free sink size, witnessing element) over
    the weight-k commutator values, with the smallest witnessing index."""
    values = gamma_values(G, k)
    reports = sinks(G, values)
    m_full = 0
    m_nontrivial = 0
    argmax = 0
    for g in sorted(values.members):
        r = reports[g]
        if r.size_full > m_full:
            m_full = r.size_full
            argmax = g
        if r.size_nontrivial > m_nontrivial:
            m_nontrivial = r.size_nontrivial
    return m_full, m_nontrivial, argmax


def orbit_under(G: GroupTable, a: int, v: int) -> list[int]:
    """v, [v,a], [v,a,a], ... up to (excluding) the first repeated value."""
    G._check(a)
    G._check(v)
    seen: set[int] = set()
    out: list[int] = []
    c = v
    while c not in seen:
        seen.add(c)
        out.append(c)
        c = G.comm(c, a)
    return out
