"""Named group families: cyclic, dihedral, symmetric, alternating, quaternion,
elementary abelian, the inversion extension T:C2, Frobenius groups Cp:Cq, and
direct powers of any of these.

Base families are realized as permutation groups (so their elements carry
cycle-notation labels); the extension families are assembled with the
semidirect/direct product constructors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import InvalidParameters
from .group import DEFAULT_ORDER_CAP, GroupTable, close_generators, direct_product, semidirect_product
from .perm import Permutation

FAMILY_NAMES = (
    "cyclic",
    "elementary_abelian",
    "dihedral",
    "symmetric",
    "alternating",
    "quaternion8",
    "inversion_extension",
    "frobenius",
    "direct_power",
)

# parameter count per family (direct_power takes a count plus a base spec)
_ARITY = {
    "cyclic": 1,
    "elementary_abelian": 2,
    "dihedral": 1,
    "symmetric": 1,
    "alternating": 1,
    "quaternion8": 0,
    "inversion_extension": 2,
    "frobenius": 3,
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...] = ()
    base: Optional["FamilySpec"] = None  # only for direct_power

    def describe(self) -> str:
        if self.family == "direct_power":
            return f"direct_power {self.params[0]} {self.base.describe()}"
        return " ".join([self.family, *(str(p) for p in self.params)])


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _cycle(points: list[int], degree: int) -> Permutation:
    img = list(range(1, degree + 1))
    for a, b in zip(points, points[1:]):
        img[a - 1] = b
    img[points[-1] - 1] = points[0]
    return Permutation(degree, tuple(img))


def validate(spec: FamilySpec) -> None:
    """Raise InvalidParameters naming the violated arithmetic condition."""
    fam, p = spec.family, spec.params
    if fam not in FAMILY_NAMES:
        raise InvalidParameters(f"unknown family {fam!r}")
    if fam == "direct_power":
        if len(p) != 1 or spec.base is None:
            raise InvalidParameters("direct_power needs a count and a base family")
        if p[0] < 1:
            raise InvalidParameters(f"direct_power count must be >= 1, got {p[0]}")
        validate(spec.base)
        return
    if spec.base is not None:
        raise InvalidParameters(f"{fam} does not take a base family")
    if len(p) != _ARITY[fam]:
        raise InvalidParameters(f"{fam} takes {_ARITY[fam]} parameter(s), got {len(p)}")
    if fam == "cyclic" and p[0] < 1:
        raise InvalidParameters(f"cyclic order must be >= 1, got {p[0]}")
    if fam == "elementary_abelian":
        if not _is_prime(p[0]):
            raise InvalidParameters(f"elementary_abelian needs prime p, got p = {p[0]}")
        if p[1] < 1:
            raise InvalidParameters(f"elementary_abelian rank must be >= 1, got {p[1]}")
    if fam == "dihedral" and p[0] < 3:
        raise InvalidParameters(f"dihedral(n) needs n >= 3 (use elementary_abelian 2 2 for V4), got {p[0]}")
    if fam == "symmetric" and p[0] < 1:
        raise InvalidParameters(f"symmetric degree must be >= 1, got {p[0]}")
    if fam == "alternating" and p[0] < 3:
        raise InvalidParameters(f"alternating degree must be >= 3, got {p[0]}")
    if fam == "inversion_extension":
        if not _is_prime(p[0]) or p[0] == 2:
            raise InvalidParameters(
                f"inversion_extension needs an odd prime p (inversion is trivial at p = 2), got p = {p[0]}"
            )
        if p[1] < 1:
            raise InvalidParameters(f"inversion_extension rank must be >= 1, got {p[1]}")
    if fam == "frobenius":
        pp, q, t = p
        if not _is_prime(pp):
            raise InvalidParameters(f"frobenius needs prime p, got p = {pp}")
        if not _is_prime(q):
            raise InvalidParameters(f"frobenius needs prime q, got q = {q}")
        if (pp - 1) % q != 0:
            raise InvalidParameters(f"frobenius needs p = 1 mod q; {pp} != 1 mod {q}")
        if pow(t, q, pp) != 1:
            raise InvalidParameters(f"frobenius needs t^q = 1 mod p; {t}^{q} != 1 mod {pp}")
        if t % pp == 1:
            raise InvalidParameters("frobenius needs t != 1 mod p (the action must be nontrivial)")


def _cyclic(n: int, cap: int) -> GroupTable:
    return close_generators([_cycle(list(range(1, n + 1)), n)], cap, name=f"C{n}")


def _elementary_abelian(p: int, r: int, cap: int) -> GroupTable:
    degree = p * r
    gens = [_cycle(list(range(i * p + 1, (i + 1) * p + 1)), degree) for i in range(r)]
    return close_generators(gens, cap, name=f"E{p}^{r}")


def _dihedral(n: int, cap: int) -> GroupTable:
    rot = _cycle(list(range(1, n + 1)), n)
    refl = Permutation(n, tuple([1] + [n + 2 - k for k in range(2, n + 1)]))
    return close_generators([rot, refl], cap, name=f"D{n}")


def _symmetric(d: int, cap: int) -> GroupTable:
    if d == 1:
        return close_generators([Permutation.identity(1)], cap, name="S1")
    gens = [_cycle(list(range(1, d + 1)), d)]
    if d > 2:
        gens.append(_cycle([1, 2], d))
    return close_generators(gens, cap, name=f"S{d}")


def _alternating(d: int, cap: int) -> GroupTable:
    three = _cycle([1, 2, 3], d)
    if d % 2 == 1:
        long = _cycle(list(range(1, d + 1)), d)
    else:
        long = _cycle(list(range(2, d + 1)), d)
    return close_generators([three, long], cap, name=f"A{d}")


def _quaternion8(cap: int) -> GroupTable:
    # right regular action on 1,i,-1,-i,j,k,-j,-k
    i = Permutation(8, (2, 3, 4, 1, 8, 5, 6, 7))
    j = Permutation(8, (5, 6, 7, 8, 3, 4, 1, 2))
    return close_generators([i, j], cap, name="Q8")


def _inversion_extension(p: int, r: int, cap: int) -> GroupTable:
    T = _elementary_abelian(p, r, cap)
    C2 = _cyclic(2, cap)
    inversion = [int(v) for v in T.inverse]
    action = [list(range(T.n)), inversion]
    G = semidirect_product(T, C2, action, cap)
    G.name = f"E{p}^{r}:C2"
    return G


def _frobenius(p: int, q: int, t: int, cap: int) -> GroupTable:
    # cyclic(p) built from a single p-cycle enumerates powers in order,
    # so element k is u^k and the action of the j-th complement generator
    # power is k -> k * t^j mod p.
    Cp = _cyclic(p, cap)
    Cq = _cyclic(q, cap)
    action = [[(k * pow(t, j, p)) % p for k in range(p)] for j in range(q)]
    G = semidirect_product(Cp, Cq, action, cap)
    G.name = f"C{p}:C{q}"
    return G


def build(spec: FamilySpec, order_cap: int = DEFAULT_ORDER_CAP) -> GroupTable:
    """Build the group described by a validated family spec."""
    validate(spec)
    fam, p = spec.family, spec.params
    if fam == "cyclic":
        return _cyclic(p[0], order_cap)
    if fam == "elementary_abelian":
        return _elementary_abelian(p[0], p[1], order_cap)
    if fam == "dihedral":
        return _dihedral(p[0], order_cap)
    if fam == "symmetric":
        return _symmetric(p[0], order_cap)
    if fam == "alternating":
        return _alternating(p[0], order_cap)
    if fam == "quaternion8":
        return _quaternion8(order_cap)
    if fam == "inversion_extension":
        return _inversion_extension(p[0], p[1], order_cap)
    if fam == "frobenius":
        return _frobenius(p[0], p[1], p[2], order_cap)
    if fam == "direct_power":
        base = build(spec.base, order_cap)
        G = base
        for _ in range(p[0] - 1):
            G = direct_product(G, base, order_cap)
        if p[0] > 1:
            G.name = f"({base.name})^{p[0]}"
        return G
    raise InvalidParameters(f"unknown family {fam!r}")


def component_embedding(factor_order: int, count: int, component: int) -> int:
    """Index stride for component i (1-based) of a fold-left direct power."""
    if not 1 <= component <= count:
        raise InvalidParameters(f"component {component} out of range 1..{count}")
    return factor_order ** (count - component)
