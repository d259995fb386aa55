import pytest

from sinklab.engel import (
    commutator_tail,
    gamma_values,
    is_left_engel,
    is_right_engel,
    orbit_under,
    right_engel_sink,
    sink_profile,
    sinks,
)
from sinklab.families import FamilySpec, build
from sinklab.group import quotient, subgroup_closure
from sinklab.structure import nilpotent_residual


def brute_commutator_set(G, xs):
    """Independent enumeration of {[x, g] : x in xs, g in G}."""
    return {G.comm(x, g) for x in xs for g in G.elements()}


def iterate_comm(G, g, x, n):
    c = g
    for _ in range(n):
        c = G.comm(c, x)
    return c


def test_tail_identity_direction(s3):
    g = s3.labels.index("(1 2 3)")
    trace = commutator_tail(s3, g, 0)
    assert trace.preperiod == (g,)
    assert trace.cycle == (0,)


def test_tail_constant(s3):
    g = s3.labels.index("(1 2 3)")
    x = s3.labels.index("(1 2)")
    trace = commutator_tail(s3, g, x)
    assert trace.preperiod == ()
    assert trace.cycle == (g,)


def test_tail_abelian(c12):
    for g in (0, 3, 7):
        for x in (1, 5):
            trace = commutator_tail(c12, g, x)
            assert trace.cycle == (0,)


def test_tail_structure(s4):
    for g in range(0, s4.n, 7):
        for x in range(s4.n):
            trace = commutator_tail(s4, g, x)
            assert len(trace.preperiod) + len(trace.cycle) <= s4.n
            # the cycle is closed under c -> [c, x]
            cyc = set(trace.cycle)
            assert {s4.comm(c, x) for c in cyc} == cyc
            # replay: walking the preperiod then the cycle reproduces the trace
            seq = list(trace.preperiod) + list(trace.cycle)
            for a, b in zip(seq, seq[1:]):
                assert s4.comm(a, x) == b


def test_sink_examples(s3, d4, q8):
    g = s3.labels.index("(1 2 3)")
    report = right_engel_sink(s3, g)
    assert {s3.labels[z] for z in report.sink} == {"e", "(1 2 3)"}
    assert report.size_full == 2
    assert report.size_nontrivial == 1

    assert right_engel_sink(s3, 0).sink.members == {0}
    for G in (d4, q8):
        for g in G.elements():
            assert right_engel_sink(G, g).sink.members == {0}


def test_sink_contains_identity(s4, frob732):
    for G in (s4, frob732):
        for g, report in sinks(G).items():
            assert 0 in report.sink
            assert report.size_nontrivial == report.size_full - 1


def test_sink_witnesses_replay(s4, ie32):
    for G in (s4, ie32):
        for g, report in sinks(G).items():
            for z, (x, n) in report.witnesses.items():
                assert iterate_comm(G, g, x, n) == z
                # z recurs: some m >= 1 brings the tail back to z
                c = G.comm(z, x)
                m = 1
                while c != z:
                    c = G.comm(c, x)
                    m += 1
                    assert m <= G.n
                assert iterate_comm(G, g, x, n + m) == z


def test_engel_element_examples(s4):
    assert is_right_engel(s4, 0)
    assert is_left_engel(s4, 0)
    v = s4.labels.index("(1 2)(3 4)")
    t = s4.labels.index("(1 2)")
    assert is_left_engel(s4, v)
    assert not is_left_engel(s4, t)


def test_is_right_engel_iff_trivial_sink(s3, s4):
    for G in (s3, s4):
        for g in G.elements():
            assert is_right_engel(G, g) == (right_engel_sink(G, g).size_full == 1)


def test_recurrent_value_characterization(s3, q8, d4):
    """z lies in the sink iff z = [g, n x] = [g, (n+m) x] with n, m in 1..2|G|."""
    for G in (s3, q8, d4):
        bound = 2 * G.n
        for g in G.elements():
            sink = right_engel_sink(G, g).sink.members
            recurrent = set()
            for x in G.elements():
                seq = [g]  # seq[n] = [g, n x]
                for _ in range(2 * bound):
                    seq.append(G.comm(seq[-1], x))
                for n in range(1, bound + 1):
                    if seq[n] in seq[n + 1 : n + bound + 1]:
                        recurrent.add(seq[n])
            assert recurrent == sink


def test_gamma_values_examples(s3, a5, c12):
    assert gamma_values(s3, 1).members == set(range(6))
    expected = {0, s3.labels.index("(1 2 3)"), s3.labels.index("(1 3 2)")}
    assert gamma_values(s3, 2).members == expected
    assert gamma_values(s3, 2).members == brute_commutator_set(s3, range(s3.n))
    for k in (2, 3, 4):
        assert len(gamma_values(a5, k)) == a5.n
    for k in (2, 3):
        assert gamma_values(c12, k).members == {0}


def test_gamma_values_match_brute_force(s4, q8, ie32):
    for G in (s4, q8, ie32):
        x2 = brute_commutator_set(G, range(G.n))
        assert gamma_values(G, 2).members == x2
        assert gamma_values(G, 3).members == brute_commutator_set(G, x2)


def test_gamma_chain(s4, frob732):
    for G in (s4, frob732):
        prev = None
        for k in (1, 2, 3, 4):
            closure = subgroup_closure(G, gamma_values(G, k))
            if prev is not None:
                assert closure.members <= prev
            prev = closure.members


def test_sink_profile(s3, d4, q8, c12, ie32):
    for G in (d4, q8, c12):
        assert sink_profile(G, 2) == (1, 0, 0)
    m_full, m_nontrivial, argmax = sink_profile(s3, 2)
    assert (m_full, m_nontrivial) == (2, 1)
    assert argmax == s3.labels.index("(1 2 3)")
    assert sink_profile(ie32, 2)[:2] == (2, 1)


def test_orbit_under(ie31, frob732):
    assert orbit_under(ie31, ie31.generators[-1], 0) == [0]
    t = ie31.generators[0]
    alpha = ie31.generators[-1]
    assert orbit_under(ie31, alpha, t) == [t]
    u = frob732.generators[0]
    a = frob732.generators[-1]
    assert orbit_under(frob732, a, u) == [u]


def test_orbit_inclusion_under_lemma_hypotheses(ie32, frob732):
    for G in (ie32, frob732):
        V = nilpotent_residual(G)
        a = G.generators[-1]
        reports = sinks(G, V.members)
        for v in V:
            orbit = orbit_under(G, a, v)
            assert all(z in reports[v].sink for z in orbit)
            if v != 0:
                assert 0 not in orbit


def test_sink_monotone_under_quotient(s4, s3, ie32):
    from sinklab.structure import nilpotent_residual as residual

    cases = [
        (s4, subgroup_closure(s4, [s4.labels.index("(1 2)(3 4)"), s4.labels.index("(1 3)(2 4)")])),
        (s3, subgroup_closure(s3, [s3.labels.index("(1 2 3)")])),
        (ie32, residual(ie32)),
    ]
    for G, N in cases:
        Q, proj = quotient(G, N)
        q_reports = sinks(Q)
        for g, report in sinks(G).items():
            projected = {proj[z] for z in report.sink}
            assert q_reports[proj[g]].sink.members <= projected


def test_heineken_implication(corpus):
    for _, G in corpus:
        for g in G.elements():
            if is_right_engel(G, g):
                assert is_left_engel(G, G.inv(g))
