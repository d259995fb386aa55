"""Finite groups as dense multiplication tables, plus exact subgroup primitives.

Element 0 is always the identity. Commutators are left-normed with the
convention [a, b] = a^-1 b^-1 a b, and conj(a, b) = b^-1 a b, matching the
usual b^a notation. Tables are immutable after construction and every
operation here is a pure function of its inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    CapExceeded,
    IndexOutOfRange,
    InvalidPermutation,
    NotAHomomorphism,
    NotAnAutomorphism,
    NotASubgroup,
    NotNormal,
)
from .perm import Permutation, format_cycles

DEFAULT_ORDER_CAP = 10_000


def _index_dtype(n: int):
    return np.uint16 if n <= np.iinfo(np.uint16).max else np.uint32


@dataclass
class GroupTable:
    """A finite group materialized as a full n x n multiplication table."""

    n: int
    table: np.ndarray  # (n, n), table[a, b] = a * b
    inverse: np.ndarray  # (n,)
    labels: list[str]
    generators: list[int]
    perms: Optional[list[Permutation]] = None  # set when built from a permutation action
    name: str = ""

    def __post_init__(self):
        self.table.setflags(write=False)
        self.inverse.setflags(write=False)

    @property
    def identity(self) -> int:
        return 0

    def _check(self, a: int) -> int:
        if not 0 <= a < self.n:
            raise IndexOutOfRange(f"element index {a} out of range for group of order {self.n}")
        return a

    def mul(self, a: int, b: int) -> int:
        return int(self.table[self._check(a), self._check(b)])

    def inv(self, a: int) -> int:
        return int(self.inverse[self._check(a)])

    def conj(self, a: int, b: int) -> int:
        """b^-1 a b."""
        t = self.table
        return int(t[t[self.inv(b), self._check(a)], b])

    def comm(self, a: int, b: int) -> int:
        """[a, b] = a^-1 b^-1 a b."""
        t = self.table
        self._check(a), self._check(b)
        return int(t[t[t[self.inverse[a], self.inverse[b]], a], b])

    def power(self, a: int, e: int) -> int:
        """a**e for any integer e, by square-and-multiply on the table."""
        self._check(a)
        if e < 0:
            a, e = self.inv(a), -e
        result, base = 0, a
        while e:
            if e & 1:
                result = int(self.table[result, base])
            base = int(self.table[base, base])
            e >>= 1
        return result

    def element_order(self, a: int) -> int:
        self._check(a)
        k, c = 1, a
        while c != 0:
            c = int(self.table[c, a])
            k += 1
        return k

    def exponent(self) -> int:
        return reduce(math.lcm, (self.element_order(a) for a in range(self.n)), 1)

    def elements(self) -> range:
        return range(self.n)

    def commute(self, a: int, b: int) -> bool:
        return self.mul(a, b) == self.mul(b, a)

    def comm_step(self, x: int) -> np.ndarray:
        """Vectorized map c -> [c, x] over all c, as an index array."""
        self._check(x)
        t, inv = self.table, self.inverse
        u = t[inv, inv[x]]  # c^-1 x^-1
        u = t[u, np.arange(self.n)]  # (c^-1 x^-1) c
        return t[u, x]

    def __repr__(self) -> str:
        return f"GroupTable(n={self.n}, name={self.name!r})"


@dataclass(frozen=True)
class ElementSet:
    """A subset of element indices of a group of order n (set semantics)."""

    n: int
    members: frozenset[int]

    def __post_init__(self):
        for i in self.members:
            if not 0 <= i < self.n:
                raise IndexOutOfRange(f"member {i} out of range for owner order {self.n}")

    @staticmethod
    def of(n: int, members: Iterable[int]) -> "ElementSet":
        return ElementSet(n, frozenset(int(m) for m in members))

    @staticmethod
    def full(n: int) -> "ElementSet":
        return ElementSet(n, frozenset(range(n)))

    @staticmethod
    def trivial(n: int) -> "ElementSet":
        return ElementSet(n, frozenset([0]))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, i: int) -> bool:
        return i in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def union(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.n, self.members | other.members)


@dataclass(frozen=True)
class Word:
    """A product of generator powers, e.g. g0 * g1^-2."""

    factors: tuple[tuple[int, int], ...]  # (generator position, nonzero exponent)

    def evaluate(self, G: GroupTable) -> int:
        result = 0
        for pos, exp in self.factors:
            if not 0 <= pos < len(G.generators):
                raise IndexOutOfRange(f"generator g{pos} does not exist (group has {len(G.generators)})")
            result = G.mul(result, G.power(G.generators[pos], exp))
        return result


def validate_table(G: GroupTable) -> None:
    """Latin-square, identity and inverse laws. Raises on violation."""
    n, t = G.n, G.table
    if t.shape != (n, n):
        raise InvalidPermutation(f"table shape {t.shape} does not match order {n}")
    idx = np.arange(n)
    if not (np.array_equal(np.sort(t, axis=1), np.broadcast_to(idx, (n, n)))
            and np.array_equal(np.sort(t, axis=0), np.broadcast_to(idx[:, None], (n, n)))):
        raise InvalidPermutation("multiplication table is not a Latin square")
    if not (np.array_equal(t[0], idx) and np.array_equal(t[:, 0], idx)):
        raise InvalidPermutation("identity law fails: element 0 is not the identity")
    if not (np.all(t[idx, G.inverse] == 0) and np.all(t[G.inverse, idx] == 0)):
        raise InvalidPermutation("inverse law fails")


def associativity_audit(G: GroupTable) -> None:
    """Full O(n^3) associativity check. Opt-in; intended for n <= a few hundred."""
    t = G.table
    left = t[t, :]  # left[a, b, c] = (a*b)*c
    right = t[:, t]  # right[a, b, c] = a*(b*c)
    if not np.array_equal(left, right):
        raise InvalidPermutation("associativity audit failed")


def close_generators(
    gens: Sequence[Permutation],
    order_cap: int = DEFAULT_ORDER_CAP,
    name: str = "",
) -> GroupTable:
    """Close a permutation generating set into a full group table.

    Elements are indexed in breadth-first discovery order from the identity,
    applying generators in input order; this makes tables reproducible
    byte-for-byte. Labels are the elements' cycle notations.
    """
    if not gens:
        raise InvalidPermutation("need at least one generator")
    if order_cap < 1:
        raise CapExceeded("order cap must be at least 1")
    degree = gens[0].degree
    for g in gens:
        if g.degree != degree:
            raise InvalidPermutation("generators must share one degree")

    ident = Permutation.identity(degree)
    elems: list[Permutation] = [ident]
    index: dict[tuple[int, ...], int] = {ident.image: 0}
    parent: list[int] = [0]  # elems[j] = elems[parent[j]] then gens[via[j]]
    via: list[int] = [0]
    head = 0
    while head < len(elems):
        base = elems[head]
        head += 1
        for gi, g in enumerate(gens):
            p = base.compose(g)
            if p.image not in index:
                if len(elems) >= order_cap:
                    raise CapExceeded(
                        f"closure exceeded order cap {order_cap} (degree {degree})"
                    )
                index[p.image] = len(elems)
                elems.append(p)
                parent.append(head - 1)
                via.append(gi)

    n = len(elems)
    dtype = _index_dtype(n)
    table = np.empty((n, n), dtype=dtype)
    images = np.array([p.image for p in elems], dtype=np.int64)  # (n, degree)
    # Columns for the generator elements need hashing; every other column j
    # follows by one gather, since p_i * p_j = (p_i * p_parent[j]) * gen.
    gen_cols: dict[int, np.ndarray] = {}
    for g in gens:
        ge = index[g.image]
        if ge in gen_cols:
            continue
        composed = images[ge][images - 1]  # row i = (elems[i] then g)'s image
        col = np.fromiter(
            (index[tuple(map(int, composed[i]))] for i in range(n)), dtype=dtype, count=n
        )
        gen_cols[ge] = col
    table[:, 0] = np.arange(n, dtype=dtype)
    for j in range(1, n):
        col = gen_cols[index[gens[via[j]].image]]
        pj = parent[j]
        table[:, j] = col[table[:, pj]] if pj != 0 else col
    inverse = np.fromiter(
        (index[p.inverse().image] for p in elems), dtype=dtype, count=n
    )
    gen_indices = []
    for g in gens:
        gi = index[g.image]
        if gi not in gen_indices:
            gen_indices.append(gi)
    G = GroupTable(
        n=n,
        table=table,
        inverse=inverse,
        labels=[format_cycles(p) for p in elems],
        generators=gen_indices,
        perms=elems,
        name=name,
    )
    validate_table(G)
    return G


def subgroup_closure(G: GroupTable, seed: ElementSet | Iterable[int]) -> ElementSet:
    """Smallest subgroup of G containing the seed elements."""
    start = set(seed.members if isinstance(seed, ElementSet) else (int(s) for s in seed))
    if not start:
        raise NotASubgroup("cannot close an empty set")
    for s in start:
        G._check(s)
    members = {0} | start
    frontier = list(members)
    gens = sorted(start)
    t = G.table
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                p = int(t[a, g])
                if p not in members:
                    members.add(p)
                    nxt.append(p)
        frontier = nxt
    return ElementSet.of(G.n, members)


def is_subgroup(G: GroupTable, S: ElementSet) -> bool:
    if 0 not in S.members:
        return False
    mem = S.members
    t = G.table
    return all(int(t[a, b]) in mem for a in mem for b in mem)


def is_normal(G: GroupTable, H: ElementSet) -> bool:
    """Whether the subgroup H is closed under conjugation by all of G."""
    if not is_subgroup(G, H):
        raise NotASubgroup("is_normal requires a subgroup")
    mem = H.members
    return all(G.conj(h, g) in mem for h in mem for g in range(G.n))


def normal_closure(G: GroupTable, seed: ElementSet | Iterable[int]) -> ElementSet:
    """Smallest normal subgroup of G containing the seed elements."""
    start = set(seed.members if isinstance(seed, ElementSet) else (int(s) for s in seed))
    conjugates = {G.conj(s, g) for s in start for g in range(G.n)}
    return subgroup_closure(G, conjugates | start)


def centralizer(G: GroupTable, S: ElementSet | Iterable[int]) -> ElementSet:
    members = set(S.members if isinstance(S, ElementSet) else (int(s) for s in S))
    out = [x for x in range(G.n) if all(G.commute(x, s) for s in members)]
    return ElementSet.of(G.n, out)


def center(G: GroupTable) -> ElementSet:
    return centralizer(G, ElementSet.full(G.n))


def quotient(G: GroupTable, N: ElementSet) -> tuple[GroupTable, list[int]]:
    """Coset table of G/N plus the projection map element -> coset index.

    Cosets are indexed by ascending minimal representative, so the identity
    coset is 0 and the result is deterministic.
    """
    if not is_subgroup(G, N):
        raise NotASubgroup("quotient requires a subgroup")
    if not is_normal(G, N):
        raise NotNormal("quotient requires a normal subgroup")
    t = G.table
    nmem = sorted(N.members)
    canon: list[int] = [-1] * G.n
    reps: list[int] = []
    projection: list[int] = [-1] * G.n
    for a in range(G.n):
        if canon[a] >= 0:
            continue
        ci = len(reps)
        reps.append(a)
        for m in nmem:
            e = int(t[a, m])
            canon[e] = a
            projection[e] = ci
    q = len(reps)
    dtype = _index_dtype(q)
    qtable = np.empty((q, q), dtype=dtype)
    for i, a in enumerate(reps):
        for j, b in enumerate(reps):
            qtable[i, j] = projection[int(t[a, b])]
    qinv = np.array([projection[G.inv(a)] for a in reps], dtype=dtype)
    gen_indices = []
    for g in G.generators:
        gi = projection[g]
        if gi != 0 and gi not in gen_indices:
            gen_indices.append(gi)
    Q = GroupTable(
        n=q,
        table=qtable,
        inverse=qinv,
        labels=[G.labels[a] for a in reps],
        generators=gen_indices,
        name=f"{G.name}/N" if G.name else "",
    )
    validate_table(Q)
    return Q, projection


def _pair_labels(A: GroupTable, B: GroupTable) -> list[str]:
    return [f"({la} {lb})" for la in A.labels for lb in B.labels]


def direct_product(A: GroupTable, B: GroupTable, order_cap: int = DEFAULT_ORDER_CAP) -> GroupTable:
    """Direct product with pairs ordered A-major: index (a, b) = a*|B| + b."""
    n = A.n * B.n
    if n > order_cap:
        raise CapExceeded(f"product order {n} exceeds cap {order_cap}")
    dtype = _index_dtype(n)
    ai, bi = np.divmod(np.arange(n), B.n)
    part_a = A.table[np.ix_(ai, ai)].astype(np.int64) * B.n
    part_b = B.table[np.ix_(bi, bi)].astype(np.int64)
    table = (part_a + part_b).astype(dtype)
    inverse = (A.inverse[ai].astype(np.int64) * B.n + B.inverse[bi]).astype(dtype)
    gens = [g * B.n for g in A.generators] + [int(g) for g in B.generators]
    G = GroupTable(
        n=n,
        table=table,
        inverse=inverse,
        labels=_pair_labels(A, B),
        generators=gens,
        name=f"{A.name}x{B.name}" if A.name and B.name else "",
    )
    validate_table(G)
    return G


def semidirect_product(
    N: GroupTable,
    H: GroupTable,
    action: Sequence[Sequence[int]],
    order_cap: int = DEFAULT_ORDER_CAP,
) -> GroupTable:
    """Semidirect product N x| H for an action of H on N by automorphisms.

    action[h] is the permutation of N-indices induced by h. Composition reads
    left-to-right, consistent with the permutation convention: action[h1*h2]
    must equal action[h1] followed by action[h2]. In the product, conjugation
    by (0, h) then moves N exactly as action[h]. Both the automorphism and
    homomorphism conditions are verified. Pairs are ordered N-major:
    index (a, h) = a*|H| + h, so the identity (0, 0) is element 0.
    """
    if len(action) != H.n:
        raise NotAHomomorphism(f"action has {len(action)} entries for |H| = {H.n}")
    act = np.array(action, dtype=np.int64)
    if act.shape != (H.n, N.n):
        raise NotAnAutomorphism("each action entry must be a permutation of N's indices")
    sorted_rows = np.sort(act, axis=1)
    if not np.array_equal(sorted_rows, np.broadcast_to(np.arange(N.n), (H.n, N.n))):
        raise NotAnAutomorphism("action entries must be bijections on N")
    nt = N.table.astype(np.int64)
    for h in range(H.n):
        ah = act[h]
        if not np.array_equal(ah[nt], nt[np.ix_(ah, ah)]):
            raise NotAnAutomorphism(f"action of h={h} does not preserve N's multiplication")
    for h1 in range(H.n):
        for h2 in range(H.n):
            if not np.array_equal(act[H.mul(h1, h2)], act[h2][act[h1]]):
                raise NotAHomomorphism(
                    f"action[h1*h2] != action[h1]-then-action[h2] for h1={h1}, h2={h2}"
                )

    n = N.n * H.n
    if n > order_cap:
        raise CapExceeded(f"product order {n} exceeds cap {order_cap}")
    dtype = _index_dtype(n)
    ai, hi = np.divmod(np.arange(n), H.n)
    hinv = H.inverse[hi].astype(np.int64)
    # (a1, h1)(a2, h2) = (a1 * act[h1^-1](a2), h1 h2), so that a2^(0,h) = act[h](a2)
    twisted = act[np.ix_(hinv, ai)]  # twisted[i, j] = act[h_i^-1](a_j)
    na = nt[ai[:, None], twisted]
    table = (na * H.n + H.table[np.ix_(hi, hi)].astype(np.int64)).astype(dtype)
    ninv = act[hi.astype(np.int64), N.inverse[ai].astype(np.int64)]
    inverse = (ninv * H.n + hinv).astype(dtype)
    gens = [a * H.n for a in N.generators] + [int(h) for h in H.generators]
    G = GroupTable(
        n=n,
        table=table,
        inverse=inverse,
        labels=_pair_labels(N, H),
        generators=gens,
        name=f"{N.name}:{H.name}" if N.name and H.name else "",
    )
    validate_table(G)
    return G


def subgroup_table(G: GroupTable, S: ElementSet) -> tuple[GroupTable, list[int]]:
    """Reindex a subgroup as its own GroupTable; returns (table, embedding).

    embedding[i] is the G-index of the subgroup's element i. Elements keep
    ascending G-index order, so 0 stays the identity.
    """
    mem = sorted(S.members)
    local = {g: i for i, g in enumerate(mem)}
    m = len(mem)
    dtype = _index_dtype(m)
    table = np.empty((m, m), dtype=dtype)
    try:
        for i, a in enumerate(mem):
            row = G.table[a]
            for j, b in enumerate(mem):
                table[i, j] = local[int(row[b])]
        inverse = np.array([local[G.inv(a)] for a in mem], dtype=dtype)
    except KeyError:
        raise NotASubgroup("set is not closed under multiplication") from None
    # greedy generating set: lowest-index elements outside the running closure
    sub = GroupTable(
        n=m,
        table=table,
        inverse=inverse,
        labels=[G.labels[a] for a in mem],
        generators=[],
        name=f"{G.name}<sub>" if G.name else "",
    )
    gens: list[int] = []
    covered = {0}
    for i in range(m):
        if i not in covered:
            gens.append(i)
            covered = set(subgroup_closure(sub, gens).members)
            if len(covered) == m:
                break
    sub.generators = gens
    validate_table(sub)
    return sub, mem
