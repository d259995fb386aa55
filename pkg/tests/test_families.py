import math

import pytest

from sinklab.errors import InvalidParameters
from sinklab.families import FamilySpec, build, component_embedding, validate
from sinklab.group import center, subgroup_closure
from sinklab.structure import nilpotent_residual


def test_cyclic_orders():
    for n in (1, 2, 7, 12):
        G = build(FamilySpec("cyclic", (n,)))
        assert G.n == n
        assert G.exponent() == n


def test_elementary_abelian():
    G = build(FamilySpec("elementary_abelian", (3, 2)))
    assert G.n == 9
    assert G.exponent() == 3
    assert all(G.commute(a, b) for a in range(9) for b in range(9))


def test_dihedral():
    for n in (3, 4, 10):
        G = build(FamilySpec("dihedral", (n,)))
        assert G.n == 2 * n
        assert G.element_order(G.generators[0]) == n
        assert G.element_order(G.generators[1]) == 2


@pytest.mark.parametrize("d", range(1, 7))
def test_symmetric_orders(d):
    assert build(FamilySpec("symmetric", (d,))).n == math.factorial(d)


@pytest.mark.parametrize("d", range(3, 7))
def test_alternating_orders(d):
    assert build(FamilySpec("alternating", (d,))).n == math.factorial(d) // 2


@pytest.mark.slow
def test_degree_seven_orders():
    assert build(FamilySpec("symmetric", (7,))).n == math.factorial(7)
    assert build(FamilySpec("alternating", (7,))).n == math.factorial(7) // 2


def test_quaternion8(q8):
    assert q8.n == 8
    assert sorted(q8.element_order(x) for x in range(8)) == [1, 2, 4, 4, 4, 4, 4, 4]
    i, j = q8.generators
    assert q8.power(i, 2) == q8.power(j, 2)  # both square to the central involution
    assert q8.conj(i, j) == q8.inv(i)


def test_inversion_extension_small(ie31):
    assert ie31.n == 6
    assert sorted(ie31.element_order(x) for x in range(6)) == [1, 2, 2, 2, 3, 3]


@pytest.mark.parametrize("r", (1, 2, 3))
def test_inversion_extension_torsion_part(r):
    G = build(FamilySpec("inversion_extension", (3, r)))
    T = nilpotent_residual(G)
    assert len(T) == 3**r
    assert G.n // len(T) == 2
    alpha = G.generators[-1]
    assert {G.comm(u, alpha) for u in T} == T.members  # [T, alpha] = T


def test_frobenius_hypotheses(frob732):
    assert frob732.n == 21
    assert center(frob732).members == {0}
    V = nilpotent_residual(frob732)
    a = frob732.generators[-1]
    fixed = {v for v in V if frob732.conj(v, a) == v}
    assert fixed == {0}  # C_V(a) = 1


def test_direct_power():
    G = build(FamilySpec("direct_power", (3,), base=FamilySpec("cyclic", (2,))))
    assert G.n == 8
    assert G.exponent() == 2
    S3sq = build(FamilySpec("direct_power", (2,), base=FamilySpec("symmetric", (3,))))
    assert S3sq.n == 36
    assert len(center(S3sq)) == 1


def test_component_embedding_commutes_with_mul():
    base = build(FamilySpec("inversion_extension", (3, 1)))
    G = build(FamilySpec("direct_power", (2,), base=FamilySpec("inversion_extension", (3, 1))))
    e1 = component_embedding(base.n, 2, 1)
    e2 = component_embedding(base.n, 2, 2)
    for x in range(base.n):
        for y in range(base.n):
            assert G.mul(x * e1, y * e1) == base.mul(x, y) * e1
            assert G.mul(x * e2, y * e2) == base.mul(x, y) * e2
            assert G.commute(x * e1, y * e2)


@pytest.mark.parametrize(
    "spec",
    [
        FamilySpec("cyclic", (0,)),
        FamilySpec("elementary_abelian", (4, 2)),
        FamilySpec("elementary_abelian", (3, 0)),
        FamilySpec("dihedral", (2,)),
        FamilySpec("alternating", (2,)),
        FamilySpec("inversion_extension", (2, 1)),
        FamilySpec("inversion_extension", (9, 1)),
        FamilySpec("frobenius", (8, 3, 2)),
        FamilySpec("frobenius", (7, 4, 2)),
        FamilySpec("frobenius", (7, 2, 3)),
        FamilySpec("frobenius", (7, 3, 3)),
        FamilySpec("frobenius", (7, 3, 1)),
        FamilySpec("direct_power", (0,), base=FamilySpec("cyclic", (2,))),
        FamilySpec("symmetric", ()),
        FamilySpec("unknown", (1,)),
    ],
)
def test_invalid_parameters(spec):
    with pytest.raises(InvalidParameters):
        validate(spec)


def test_frobenius_valid_parameter_check():
    validate(FamilySpec("frobenius", (7, 3, 2)))
    validate(FamilySpec("frobenius", (13, 3, 3)))
    validate(FamilySpec("frobenius", (11, 5, 3)))
