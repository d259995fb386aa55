"""Lemma-level checkers and corpus scans.

Each checker confronts one finite-group statement with exhaustive
computation over a concrete table. Failures are self-certifying: the
counterexample carries element indices that reproduce the failure through
the public operations.

The brute-force sink oracle used by check_sink_oracle iterates c -> [c, x]
blindly (no cycle detection) and collects the values met at steps
|G| .. 3|G|. Pigeonhole makes this window exact: a walk on |G| states
repeats within its first |G| steps, so the preperiod is shorter than |G|,
and the remaining 2|G| steps cover every cycle at least twice.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .engel import gamma_values, is_left_engel, is_right_engel, orbit_under, sink_profile, sinks
from .errors import HypothesisFailed
from .families import FamilySpec, build, component_embedding
from .group import ElementSet, GroupTable, centralizer, is_subgroup, quotient, subgroup_closure, subgroup_table
from .structure import fitting_subgroup, is_nilpotent, nilpotent_residual


@dataclass
class CheckResult:
    check: str
    group: str
    passed: bool
    counterexample: Optional[dict] = None
    stats: dict[str, int] = field(default_factory=dict)


@dataclass(frozen=True)
class ScanRow:
    group: str
    n: int
    k: int
    m_full: int
    m_nontrivial: int
    fitting_index: int
    residual_order: int
    quotient_exponent: int

    def csv_values(self) -> list[str]:
        return [
            self.group,
            str(self.n),
            str(self.k),
            str(self.m_full),
            str(self.m_nontrivial),
            str(self.fitting_index),
            str(self.residual_order),
            str(self.quotient_exponent),
        ]


CSV_COLUMNS = "group,n,k,mFull,mNontrivial,fittingIndex,residualOrder,quotientExponent"


def _gid(G: GroupTable) -> str:
    return G.name or f"order{G.n}"


def check_heineken(G: GroupTable) -> CheckResult:
    """Right Engel g implies left Engel g^-1, for every element."""
    right_engel = 0
    for g in G.elements():
        if not is_right_engel(G, g):
            continue
        right_engel += 1
        if not is_left_engel(G, G.inv(g)):
            return CheckResult(
                "heineken",
                _gid(G),
                False,
                counterexample={"g": g, "g_inverse": G.inv(g)},
                stats={"order": G.n},
            )
    return CheckResult("heineken", _gid(G), True, stats={"order": G.n, "right_engel_count": right_engel})


def _factorial_power(G: GroupTable, h: int, m: int) -> int:
    """h**(m!) using the exponent reduced modulo the order of h."""
    ord_h = G.element_order(h)
    e = 1
    for i in range(2, m + 1):
        e = (e * i) % ord_h
    return G.power(h, e)


def check_centralizer_power(G: GroupTable) -> CheckResult:
    """For m = |sink(g)| and h centralizing g, h^(m!) centralizes sink(g)."""
    reports = sinks(G)
    checked = 0
    for g in G.elements():
        sink = reports[g].sink
        m = reports[g].size_full
        for h in centralizer(G, [g]):
            hp = _factorial_power(G, h, m)
            for z in sink:
                checked += 1
                if not G.commute(hp, z):
                    return CheckResult(
                        "centralizer_power",
                        _gid(G),
                        False,
                        counterexample={"g": g, "h": h, "h_power": hp, "z": z, "m": m},
                        stats={"order": G.n},
                    )
    return CheckResult("centralizer_power", _gid(G), True, stats={"order": G.n, "pairs_checked": checked})


def check_orbit_lemma(G: GroupTable, V: ElementSet, a: int, k: int) -> CheckResult:
    """Orbit lemma for a cyclic group acting on abelian V with V = [V, a].

    Verifies (a) trivial fixed points and u -> [u, a] a permutation of V,
    (b) V inside the weight-k value set of <V, a>, and the weak form of
    (c): each orbit sits inside the corresponding sink and avoids the
    identity. Whether sink(v) = orbit(v) + {identity} holds as an equality
    is recorded empirically in stats, never asserted.
    """
    if not is_subgroup(G, V):
        raise HypothesisFailed("V is not a subgroup")
    mem = sorted(V.members)
    if not all(G.commute(u, v) for u in mem for v in mem):
        raise HypothesisFailed("V is not abelian")
    if not all(G.conj(v, a) in V for v in mem):
        raise HypothesisFailed("a does not normalize V")
    image = {G.comm(u, a) for u in mem}
    if image != V.members:
        raise HypothesisFailed("V != [V, a]")

    fixed = [v for v in mem if G.conj(v, a) == v]
    if fixed != [0]:
        return CheckResult(
            "orbit_lemma", _gid(G), False,
            counterexample={"fixed_point": next(v for v in fixed if v != 0)},
            stats={"order": G.n},
        )
    if len(image) != len(mem):
        return CheckResult(
            "orbit_lemma", _gid(G), False,
            counterexample={"reason_not_injective": 1},
            stats={"order": G.n},
        )

    H, embed = subgroup_table(G, subgroup_closure(G, V.members | {a}))
    local = {g: i for i, g in enumerate(embed)}
    values = gamma_values(H, k)
    missing = [v for v in mem if local[v] not in values]
    if missing:
        return CheckResult(
            "orbit_lemma", _gid(G), False,
            counterexample={"v_not_gamma_value": missing[0], "k": k},
            stats={"order": G.n},
        )

    a_local = local[a]
    reports = sinks(H, [local[v] for v in mem])
    equality = 1
    max_orbit = 0
    for v in mem:
        vl = local[v]
        orbit = orbit_under(H, a_local, vl)
        max_orbit = max(max_orbit, len(orbit))
        sink = reports[vl].sink
        if not all(z in sink for z in orbit):
            return CheckResult(
                "orbit_lemma", _gid(G), False,
                counterexample={"v": v, "orbit_value_outside_sink": 1},
                stats={"order": G.n},
            )
        if v != 0 and 0 in orbit:
            return CheckResult(
                "orbit_lemma", _gid(G), False,
                counterexample={"v": v, "identity_in_orbit": 1},
                stats={"order": G.n},
            )
        if sink.members != set(orbit) | {0}:
            equality = 0
    return CheckResult(
        "orbit_lemma", _gid(G), True,
        stats={
            "order": G.n,
            "v_count": len(mem),
            "k": k,
            "max_orbit": max_orbit,
            "sink_equals_orbit_plus_identity": equality,
        },
    )


def check_simple_product_gamma(G: GroupTable, k: int) -> CheckResult:
    """Every element is a weight-k value (caller asserts G is a direct
    product of nonabelian simple groups)."""
    values = gamma_values(G, k)
    if len(values) == G.n:
        return CheckResult("simple_product_gamma", _gid(G), True, stats={"order": G.n, "k": k})
    missing = next(x for x in G.elements() if x not in values)
    return CheckResult(
        "simple_product_gamma", _gid(G), False,
        counterexample={"not_a_value": missing, "k": k},
        stats={"order": G.n, "k": k, "value_count": len(values)},
    )


def check_m1_iff_nilpotent(G: GroupTable, k: int) -> CheckResult:
    """All weight-k values have trivial sinks exactly when G is nilpotent."""
    m_full, _, argmax = sink_profile(G, k)
    nilpotent = is_nilpotent(G)
    passed = (m_full == 1) == nilpotent
    result = CheckResult(
        "m1_iff_nilpotent", _gid(G), passed,
        stats={"order": G.n, "k": k, "m_full": m_full, "nilpotent": int(nilpotent)},
    )
    if not passed:
        result.counterexample = {"m_full": m_full, "nilpotent": int(nilpotent), "argmax": argmax}
    return result


def check_component_sinks(p: int, s: int, order_cap: int = 10_000) -> CheckResult:
    """Sink of a product of per-component values keeps one value per
    component: size_nontrivial(sink(v1...vs)) >= s."""
    if not 1 <= s <= 4:
        raise HypothesisFailed(f"component count must be 1..4, got {s}")
    base = build(FamilySpec("inversion_extension", (p, 1)), order_cap)
    G = build(FamilySpec("direct_power", (s,), base=FamilySpec("inversion_extension", (p, 1))), order_cap)
    f = base.n
    # base is (C_p) x| C2 with pairs N-major: index 2 is the first nontrivial
    # torsion element, index 1 the inverting element.
    v_base, a_base = 2, 1
    vs = [v_base * component_embedding(f, s, i) for i in range(1, s + 1)]
    alphas = [a_base * component_embedding(f, s, i) for i in range(1, s + 1)]
    w = 0
    for v in vs:
        w = G.mul(w, v)

    if w not in gamma_values(G, 2):
        return CheckResult(
            "component_sinks", _gid(G), False,
            counterexample={"w": w, "reason": "w is not a weight-2 value"},
            stats={"order": G.n, "s": s},
        )
    for i, (v, alpha) in enumerate(zip(vs, alphas), start=1):
        cw, cv = w, v
        for n in range(1, G.n + 1):
            cw = G.comm(cw, alpha)
            cv = G.comm(cv, alpha)
            if cw != cv or cw == 0:
                return CheckResult(
                    "component_sinks", _gid(G), False,
                    counterexample={"component": i, "n": n, "w_tail": cw, "v_tail": cv},
                    stats={"order": G.n, "s": s},
                )
    report = sinks(G, [w])[w]
    passed = report.size_nontrivial >= s
    result = CheckResult(
        "component_sinks", _gid(G), passed,
        stats={"order": G.n, "s": s, "sink_nontrivial": report.size_nontrivial},
    )
    if not passed:
        result.counterexample = {"w": w, "sink_nontrivial": report.size_nontrivial}
    return result


def check_sink_oracle(G: GroupTable, cap: int = 100) -> CheckResult:
    """Cycle-union sinks equal the windowed brute-force recurrent-value sets.

    The oracle iterates every (g, x) pair for 3|G| steps with no cycle
    detection and keeps the values from step |G| on; see the module
    docstring for why the window is exact.
    """
    n = G.n
    if n > cap:
        raise HypothesisFailed(f"oracle capped at order {cap}, group has order {n}")
    oracle: list[set[int]] = [set() for _ in range(n)]
    for x in range(n):
        step = G.comm_step(x).tolist()
        for g in range(n):
            c = g
            for _ in range(n):
                c = step[c]
            seen = oracle[g]
            seen.add(c)
            for _ in range(2 * n):
                c = step[c]
                seen.add(c)
    reports = sinks(G)
    for g in range(n):
        if oracle[g] != reports[g].sink.members:
            return CheckResult(
                "sink_oracle", _gid(G), False,
                counterexample={
                    "g": g,
                    "oracle_only": sorted(oracle[g] - reports[g].sink.members),
                    "sink_only": sorted(reports[g].sink.members - oracle[g]),
                },
                stats={"order": n},
            )
    return CheckResult("sink_oracle", _gid(G), True, stats={"order": n})


def scan_row(G: GroupTable, group_id: str, k: int) -> ScanRow:
    """One corpus row: sink profile over weight-k values plus Fitting data."""
    m_full, m_nontrivial, _ = sink_profile(G, k)
    F = fitting_subgroup(G)
    residual = nilpotent_residual(G)
    Q, _ = quotient(G, F)
    return ScanRow(
        group=group_id,
        n=G.n,
        k=k,
        m_full=m_full,
        m_nontrivial=m_nontrivial,
        fitting_index=G.n // len(F),
        residual_order=len(residual),
        quotient_exponent=Q.exponent(),
    )


def contrast_report(p: int, max_rank: int, order_cap: int = 10_000) -> list[ScanRow]:
    """Rows for the inversion extensions at k = 2, ranks 1..max_rank: sinks
    stay bounded while the nilpotent residual grows as p^r."""
    rows = []
    for r in range(1, max_rank + 1):
        spec = FamilySpec("inversion_extension", (p, r))
        G = build(spec, order_cap)
        rows.append(scan_row(G, f"inversion_extension_{p}_{r}", 2))
    return rows


def theorem_scan(corpus: Sequence[tuple[str, GroupTable]], k: int) -> tuple[list[ScanRow], list[tuple[str, str]]]:
    """Scan rows for every named group, sorted by group id; build or
    computation errors are collected per group and do not stop the scan."""
    rows: list[ScanRow] = []
    errors: list[tuple[str, str]] = []
    for group_id, G in sorted(corpus, key=lambda item: item[0]):
        try:
            rows.append(scan_row(G, group_id, k))
        except Exception as exc:  # pragma: no cover - defensive collection
            errors.append((group_id, f"{type(exc).__name__}: {exc}"))
    return rows, errors
