"""Command-line front end.

Exit codes: 0 success, 1 at least one check failed, 2 input parse error
(messages name the offending line), 3 order cap exceeded.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from pathlib import Path

from .engel import gamma_values, right_engel_sink
from .errors import CapExceeded, SinklabError, SpecParseError
from .group import DEFAULT_ORDER_CAP, GroupTable, Word
from .perm import parse_cycles
from .report import canonical_json, check_payload, report_envelope, scan_csv, sink_payload
from .specfile import GroupSpec, build_spec, emit_spec, parse_spec_file
from .structure import fitting_subgroup, is_nilpotent, nilpotency_class, nilpotent_residual
from .verify import (
    check_centralizer_power,
    check_heineken,
    check_m1_iff_nilpotent,
    check_orbit_lemma,
    check_sink_oracle,
    contrast_report,
    theorem_scan,
)

ORACLE_CAP = 100
VERIFY_CHECKS = ("heineken", "centralizer_power", "m1_iff_nilpotent", "sink_oracle", "orbit_lemma")


class CliInputError(SinklabError):
    """Bad command-line input outside the spec files (exit code 2)."""


def _order_cap(args) -> int:
    if args.cap is not None:
        return args.cap
    env = os.environ.get("SINKLAB_CAP")
    if env:
        try:
            return int(env)
        except ValueError:
            raise CliInputError(f"SINKLAB_CAP must be an integer, got {env!r}") from None
    return DEFAULT_ORDER_CAP


def parse_element(G: GroupTable, text: str) -> int:
    """Resolve an element given as index, cycle notation, or generator word.

    Word syntax multiplies generator powers left to right: "g0*g1^-2".
    """
    s = text.strip()
    if not s:
        raise CliInputError("empty element")
    try:
        idx = int(s)
    except ValueError:
        idx = None
    if idx is not None:
        if not 0 <= idx < G.n:
            raise CliInputError(f"element index {idx} out of range 0..{G.n - 1}")
        return idx
    if s == "e":
        return 0
    if s.startswith("("):
        if G.perms is None:
            raise CliInputError(
                "cycle-notation addressing needs a permutation-built group; use an index or a word"
            )
        perm = parse_cycles(s, G.perms[0].degree)
        for i, p in enumerate(G.perms):
            if p.image == perm.image:
                return i
        raise CliInputError(f"permutation {s} is not an element of this group")
    factors = []
    for token in s.split("*"):
        token = token.strip()
        if not token.startswith("g"):
            raise CliInputError(f"bad word factor {token!r} (expected g<i> or g<i>^<e>)")
        body = token[1:]
        exp = 1
        if "^" in body:
            body, exp_text = body.split("^", 1)
            try:
                exp = int(exp_text)
            except ValueError:
                raise CliInputError(f"bad exponent in {token!r}") from None
            if exp == 0:
                raise CliInputError(f"zero exponent in {token!r}")
        try:
            pos = int(body)
        except ValueError:
            raise CliInputError(f"bad generator position in {token!r}") from None
        factors.append((pos, exp))
    return Word(tuple(factors)).evaluate(G)


def _load(args) -> tuple[GroupSpec, GroupTable]:
    spec = parse_spec_file(args.spec)
    return spec, build_spec(spec, _order_cap(args))


def _emit(payload: dict, out) -> None:
    out.write(canonical_json(payload))


def cmd_build(args) -> int:
    started = time.perf_counter()
    spec, G = _load(args)
    F = fitting_subgroup(G)
    summary = {
        "group": spec.display_name(),
        "order": G.n,
        "exponent": G.exponent(),
        "nilpotent": is_nilpotent(G),
        "nilpotency_class": nilpotency_class(G),
        "fitting_index": G.n // len(F),
    }
    _emit(report_envelope("build", emit_spec(spec), [summary], (time.perf_counter() - started) * 1e3), sys.stdout)
    return 0


def cmd_sink(args) -> int:
    started = time.perf_counter()
    spec, G = _load(args)
    g = parse_element(G, args.element)
    payload = sink_payload(G, right_engel_sink(G, g))
    _emit(report_envelope("sink", emit_spec(spec), [payload], (time.perf_counter() - started) * 1e3), sys.stdout)
    return 0


def cmd_gamma(args) -> int:
    started = time.perf_counter()
    spec, G = _load(args)
    values = gamma_values(G, args.k)
    payload = {
        "k": args.k,
        "size": len(values),
        "values": sorted(G.labels[v] for v in values),
    }
    _emit(report_envelope("gamma", emit_spec(spec), [payload], (time.perf_counter() - started) * 1e3), sys.stdout)
    return 0


def _orbit_lemma_inputs(spec: GroupSpec, G: GroupTable):
    if spec.kind != "construct" or spec.family.family not in ("inversion_extension", "frobenius"):
        return None
    return nilpotent_residual(G), G.generators[-1]


def _run_checks(spec: GroupSpec, G: GroupTable, which: str, k: int):
    results = []
    if which in ("heineken", "all"):
        results.append(check_heineken(G))
    if which in ("centralizer_power", "all"):
        results.append(check_centralizer_power(G))
    if which in ("m1_iff_nilpotent", "all"):
        ks = (2, 3) if which == "all" else (k,)
        for kk in ks:
            results.append(check_m1_iff_nilpotent(G, kk))
    if which in ("sink_oracle", "all"):
        if G.n <= ORACLE_CAP:
            results.append(check_sink_oracle(G, ORACLE_CAP))
        elif which == "sink_oracle":
            raise CliInputError(f"sink_oracle is capped at order {ORACLE_CAP}; group has order {G.n}")
    if which in ("orbit_lemma", "all"):
        inputs = _orbit_lemma_inputs(spec, G)
        if inputs is not None:
            results.append(check_orbit_lemma(G, inputs[0], inputs[1], k))
        elif which == "orbit_lemma":
            raise CliInputError(
                "orbit_lemma needs a group constructed as inversion_extension or frobenius"
            )
    for result in results:
        result.group = spec.display_name()
    return results


def cmd_verify(args) -> int:
    started = time.perf_counter()
    spec, G = _load(args)
    results = _run_checks(spec, G, args.check, args.k)
    payloads = [check_payload(G, r) for r in results]
    _emit(report_envelope("verify", emit_spec(spec), payloads, (time.perf_counter() - started) * 1e3), sys.stdout)
    return 0 if all(r.passed for r in results) else 1


def load_corpus(corpus_dir: str | Path) -> list[tuple[str, Path]]:
    """(group id, spec path) pairs from a corpus directory.

    Uses manifest.txt (one spec filename per line, '#' comments) when
    present, otherwise every *.grp file in name order.
    """
    root = Path(corpus_dir)
    manifest = root / "manifest.txt"
    if manifest.exists():
        names = []
        for raw in manifest.read_text(encoding="utf-8").splitlines():
            line = raw.split("#", 1)[0].strip()
            if line:
                names.append(line)
        paths = [root / name for name in names]
    else:
        paths = sorted(root.glob("*.grp"))
    out = []
    for path in paths:
        if not path.exists():
            raise CliInputError(f"corpus entry {path} does not exist")
        out.append((path.stem, path))
    return out


def _write_text(path_or_none, text: str) -> None:
    if path_or_none:
        Path(path_or_none).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def cmd_scan(args) -> int:
    cap = _order_cap(args)
    entries = load_corpus(args.corpus)
    corpus = []
    build_errors = []
    for group_id, path in entries:
        try:
            spec = parse_spec_file(path)
            corpus.append((spec.display_name(group_id), build_spec(spec, cap)))
        except SinklabError as exc:
            build_errors.append((group_id, f"{type(exc).__name__}: {exc}"))
    rows, scan_errors = theorem_scan(corpus, args.k)
    _write_text(args.out, scan_csv(rows))
    for group_id, message in build_errors + scan_errors:
        print(f"error: {group_id}: {message}", file=sys.stderr)
    return 0


def _parse_ranks(text: str) -> tuple[int, int]:
    parts = text.split("..")
    if len(parts) != 2:
        raise CliInputError(f"ranks must look like A..B, got {text!r}")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError:
        raise CliInputError(f"ranks must be integers, got {text!r}") from None
    if not 1 <= lo <= hi:
        raise CliInputError(f"need 1 <= A <= B in ranks, got {text!r}")
    return lo, hi


def cmd_contrast(args) -> int:
    lo, hi = _parse_ranks(args.ranks)
    rows = contrast_report(args.p, hi, _order_cap(args))
    _write_text(args.out, scan_csv(rows[lo - 1 :]))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sinklab",
        description="Engel sinks, gamma-k value sets, and Fitting structure of finite groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_cap(p):
        p.add_argument("--cap", type=int, default=None, help="order cap (default: SINKLAB_CAP or 10000)")

    p = sub.add_parser("build", help="build a group and print a summary")
    p.add_argument("spec")
    add_cap(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("sink", help="minimal right Engel sink of an element")
    p.add_argument("spec")
    p.add_argument("--element", required=True, help="index, cycle notation, or word like g0*g1^-1")
    add_cap(p)
    p.set_defaults(func=cmd_sink)

    p = sub.add_parser("gamma", help="weight-k commutator value set")
    p.add_argument("spec")
    p.add_argument("-k", type=int, required=True)
    add_cap(p)
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("verify", help="run lemma checks against one group")
    p.add_argument("spec")
    p.add_argument("--check", default="all", choices=VERIFY_CHECKS + ("all",))
    p.add_argument("-k", type=int, default=2, help="weight for gamma-based checks (default 2)")
    add_cap(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="scan a corpus directory into a CSV table")
    p.add_argument("--corpus", required=True)
    p.add_argument("-k", type=int, default=2)
    p.add_argument("--out", default=None, help="CSV output path (default: stdout)")
    add_cap(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("contrast", help="inversion-extension contrast table")
    p.add_argument("-p", type=int, default=3, help="odd prime (default 3)")
    p.add_argument("--ranks", default="1..4", help="rank range A..B (default 1..4)")
    p.add_argument("--out", default=None, help="CSV output path (default: stdout)")
    add_cap(p)
    p.set_defaults(func=cmd_contrast)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SpecParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return 3
    except CliInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SinklabError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
