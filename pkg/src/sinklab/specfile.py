"""Text format for declaring groups, shared by the CLI and the corpus files.

A spec is either a permutation presentation:

    name S3
    group perm
    degree 3
    gen (1 2 3)
    gen (1 2)

or a constructor invocation:

    name frobenius_7_3_2
    group construct frobenius 7 3 2

direct_power takes the count first, then the base family:

    group construct direct_power 2 alternating 5

Lines are whitespace-insensitive and '#' starts a comment. Group names feed
CSV reports, so they must be comma-free single tokens.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .errors import InvalidParameters, InvalidPermutation, SpecParseError
from .families import FAMILY_NAMES, FamilySpec, build, validate
from .group import DEFAULT_ORDER_CAP, GroupTable, close_generators
from .perm import format_cycles, parse_cycles


@dataclass(frozen=True)
class GroupSpec:
    name: Optional[str]
    kind: str  # "perm" | "construct"
    degree: Optional[int] = None
    gens: tuple[str, ...] = ()
    family: Optional[FamilySpec] = None

    def display_name(self, fallback: str = "group") -> str:
        return self.name if self.name else fallback


def _parse_family(tokens: list[str], line_no: int) -> FamilySpec:
    if not tokens:
        raise SpecParseError(line_no, "construct needs a family name")
    fam = tokens[0]
    if fam not in FAMILY_NAMES:
        raise SpecParseError(line_no, f"unknown family {fam!r}")
    rest = tokens[1:]
    if fam == "direct_power":
        if not rest:
            raise SpecParseError(line_no, "direct_power needs a count and a base family")
        try:
            count = int(rest[0])
        except ValueError:
            raise SpecParseError(line_no, f"direct_power count must be an integer, got {rest[0]!r}") from None
        base = _parse_family(rest[1:], line_no)
        spec = FamilySpec("direct_power", (count,), base=base)
    else:
        try:
            params = tuple(int(tok) for tok in rest)
        except ValueError:
            raise SpecParseError(line_no, f"family parameters must be integers: {rest}") from None
        spec = FamilySpec(fam, params)
    try:
        validate(spec)
    except InvalidParameters as exc:
        raise SpecParseError(line_no, str(exc)) from None
    return spec


def parse_spec_text(text: str, default_name: Optional[str] = None) -> GroupSpec:
    name: Optional[str] = default_name
    kind: Optional[str] = None
    degree: Optional[int] = None
    gens: list[str] = []
    family: Optional[FamilySpec] = None
    gen_lines: list[int] = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        key = tokens[0]
        if key == "name":
            if len(tokens) != 2:
                raise SpecParseError(line_no, "name takes exactly one token")
            if "," in tokens[1]:
                raise SpecParseError(line_no, "group names must not contain commas")
            name = tokens[1]
        elif key == "group":
            if kind is not None:
                raise SpecParseError(line_no, "duplicate group line")
            if len(tokens) < 2 or tokens[1] not in ("perm", "construct"):
                raise SpecParseError(line_no, "group must be 'perm' or 'construct <family> ...'")
            kind = tokens[1]
            if kind == "construct":
                family = _parse_family(tokens[2:], line_no)
            elif len(tokens) > 2:
                raise SpecParseError(line_no, "group perm takes no further tokens")
        elif key == "degree":
            if len(tokens) != 2:
                raise SpecParseError(line_no, "degree takes exactly one integer")
            try:
                degree = int(tokens[1])
            except ValueError:
                raise SpecParseError(line_no, f"degree must be an integer, got {tokens[1]!r}") from None
            if degree < 1:
                raise SpecParseError(line_no, f"degree must be positive, got {degree}")
        elif key == "gen":
            gens.append(line[len("gen") :].strip())
            gen_lines.append(line_no)
        else:
            raise SpecParseError(line_no, f"unknown directive {key!r}")

    last = len(text.splitlines()) or 1
    if kind is None:
        raise SpecParseError(last, "missing group line")
    if kind == "perm":
        if degree is None:
            raise SpecParseError(last, "group perm requires a degree line")
        if not gens:
            raise SpecParseError(last, "group perm requires at least one gen line")
        canonical = []
        for gen_text, line_no in zip(gens, gen_lines):
            try:
                p = parse_cycles(gen_text, degree)
            except InvalidPermutation as exc:
                raise SpecParseError(line_no, str(exc)) from None
            canonical.append(format_cycles(p))
        return GroupSpec(name=name, kind="perm", degree=degree, gens=tuple(canonical))
    if degree is not None or gens:
        raise SpecParseError(last, "degree/gen lines are only valid for group perm")
    return GroupSpec(name=name, kind="construct", family=family)


def parse_spec_file(path: str | Path) -> GroupSpec:
    path = Path(path)
    return parse_spec_text(path.read_text(encoding="utf-8"), default_name=path.stem)


def emit_spec(spec: GroupSpec) -> str:
    """Canonical text for a spec; parsing it back builds the same table."""
    lines = []
    if spec.name:
        lines.append(f"name {spec.name}")
    if spec.kind == "perm":
        lines.append("group perm")
        lines.append(f"degree {spec.degree}")
        lines.extend(f"gen {g}" for g in spec.gens)
    else:
        lines.append(f"group construct {spec.family.describe()}")
    return "\n".join(lines) + "\n"


def build_spec(spec: GroupSpec, order_cap: int = DEFAULT_ORDER_CAP) -> GroupTable:
    if spec.kind == "perm":
        gens = [parse_cycles(g, spec.degree) for g in spec.gens]
        G = close_generators(gens, order_cap, name=spec.display_name())
    else:
        G = build(spec.family, order_cap)
        G.name = spec.display_name(G.name)
    return G
