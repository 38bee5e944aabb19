"""Command-line front end.

Exit codes: 0 success, 1 bad input or configuration, 2 internal
invariant violation, 3 the engine output failed the oracle cross-check.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from itertools import product
from pathlib import Path

from . import engine, lfsr, oracle
from .engine import InitVariant, Sequence
from .errors import MinpolyError, ParityError, ParseError
from .field import Field, PrimeField, parse_field
from .poly import Poly, parse_poly

MODES = ("minpoly", "profile", "trace", "massey", "oracle-check", "extend")

_BITSTRING = re.compile(r"[01]{2,}")


class _CliError(Exception):
    """User-facing configuration problem; maps to exit code 1."""


class _ArgumentParser(argparse.ArgumentParser):
    # argparse exits with status 2 by default, which collides with the
    # "internal invariant" exit code; route its errors through _CliError.
    def error(self, message):
        raise _CliError(message)


def parse_sequence(text: str, field: Field) -> Sequence:
    """Parse comma/whitespace-separated terms; gf2 also accepts a bare
    bitstring like ``0110``."""
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise ParseError("empty input")
    if (
        isinstance(field, PrimeField)
        and field.p == 2
        and len(tokens) == 1
        and _BITSTRING.fullmatch(tokens[0])
    ):
        return Sequence.from_ints(field, (int(ch) for ch in tokens[0]))
    scalars = []
    for pos, token in enumerate(tokens, start=1):
        try:
            scalars.append(field.parse_scalar(token))
        except ParseError as exc:
            raise ParseError(str(exc), position=pos) from None
    return Sequence(field, scalars)


@dataclass(frozen=True)
class RunConfig:
    field: Field
    variant: InitVariant
    mode: str
    source: str  # file path or "-" for stdin
    as_json: bool
    poly_text: str | None
    count: int | None
    exhaustive: int | None
    budget: int


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="minpoly",
        description="Minimal polynomials and linear-complexity profiles of finite sequences.",
    )
    parser.add_argument("--field", default="gf2", metavar="SPEC",
                        help="coefficient field: gf2, gf:<p> (p prime), or q (default: gf2)")
    parser.add_argument("--variant", choices=("b0", "b1"), default="b0",
                        help="engine initialization (default: b0)")
    parser.add_argument("--mode", choices=MODES, default="minpoly",
                        help="what to compute (default: minpoly)")
    parser.add_argument("--in", dest="infile", default="-", metavar="PATH",
                        help="sequence input file (default: stdin)")
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    parser.add_argument("--poly", metavar="TEXT", help="generating polynomial for --mode extend")
    parser.add_argument("--count", type=int, metavar="K",
                        help="number of terms to append for --mode extend")
    parser.add_argument("--exhaustive", type=int, metavar="N",
                        help="oracle-check every sequence of lengths 1..N instead of reading input")
    parser.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET,
                        help="candidate budget for oracle search")
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    try:
        field = parse_field(args.field)
    except ParseError as exc:
        raise _CliError(str(exc)) from None
    mode = args.mode
    if mode == "extend" and (args.poly is None or args.count is None):
        raise _CliError("--mode extend requires --poly and --count")
    if mode == "oracle-check" and not field.is_finite:
        raise _CliError("--mode oracle-check requires a finite field")
    if args.exhaustive is not None and mode != "oracle-check":
        raise _CliError("--exhaustive only applies to --mode oracle-check")
    return RunConfig(
        field=field,
        variant=InitVariant(args.variant),
        mode=mode,
        source=args.infile,
        as_json=args.json,
        poly_text=args.poly,
        count=args.count,
        exhaustive=args.exhaustive,
        budget=args.budget,
    )


def _read_source(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    path = Path(source)
    if not path.exists():
        raise _CliError(f"input file not found: {source}")
    return path.read_text()


def _poly_json(field: Field, n: int, p: Poly, extra: dict | None = None) -> str:
    doc = {
        "field": field.spec,
        "n": n,
        "degree": p.degree if not p.is_zero else None,
        "coeffs": [field.scalar_to_json(c) for c in p.coeffs],
    }
    if extra:
        doc.update(extra)
    return json.dumps(doc)


def _cmd_minpoly(cfg: RunConfig, s: Sequence) -> int:
    out = engine.minimal_polynomial(s, cfg.variant)
    if cfg.as_json:
        print(_poly_json(cfg.field, len(s), out))
    else:
        print(out)
    return 0


def _cmd_profile(cfg: RunConfig, s: Sequence) -> int:
    entries = engine.complexity_profile(s)
    if cfg.as_json:
        doc = {
            "field": cfg.field.spec,
            "n": len(s),
            "profile": [
                {"i": en.i, "L": en.complexity, "c": cfg.field.scalar_to_json(en.disc)}
                for en in entries
            ],
        }
        print(json.dumps(doc))
    else:
        for en in entries:
            print(f"i={en.i} L={en.complexity} c={en.disc}")
    return 0


def _cmd_trace(cfg: RunConfig, s: Sequence) -> int:
    for record in engine.trace_records(s, cfg.variant):
        print(record.line())
    return 0


def _cmd_massey(cfg: RunConfig, s: Sequence) -> int:
    try:
        F, L = engine.massey_form(s)
    except MinpolyError as exc:
        raise _CliError(str(exc)) from None
    if cfg.as_json:
        print(_poly_json(cfg.field, len(s), F, extra={"L": L}))
    else:
        print(f"L={L} F={F}")
    return 0


def _check_one(s: Sequence, variant: InitVariant, budget: int) -> bool:
    out = engine.minimal_polynomial(s, variant)
    return out in oracle.enumerate_minimal_polys(s, budget).polys


def _cmd_oracle_check(cfg: RunConfig, s: Sequence | None) -> int:
    if cfg.exhaustive is not None:
        field = cfg.field
        assert isinstance(field, PrimeField)
        checked = 0
        for n in range(1, cfg.exhaustive + 1):
            for values in product(range(field.p), repeat=n):
                seq = Sequence.from_ints(field, values)
                if not _check_one(seq, cfg.variant, cfg.budget):
                    print(
                        f"mismatch: {','.join(map(str, values))} over {field.spec}",
                        file=sys.stderr,
                    )
                    return 3
                checked += 1
        print(f"ok: {checked} sequences checked, engine output always minimal")
        return 0
    assert s is not None
    result = oracle.enumerate_minimal_polys(s, cfg.budget)
    out = engine.minimal_polynomial(s, cfg.variant)
    if out not in result.polys:
        print(f"mismatch: engine {out} not among {len(result.polys)} minimal polynomials",
              file=sys.stderr)
        return 3
    print(f"ok: degree {result.min_degree}, engine output is one of "
          f"{len(result.polys)} minimal polynomial(s)")
    return 0


def _cmd_extend(cfg: RunConfig, text: str) -> int:
    try:
        C = parse_poly(cfg.poly_text, cfg.field)
    except ParseError as exc:
        raise _CliError(f"--poly: {exc}") from None
    seed_text = text.strip()
    if seed_text:
        seed = parse_sequence(seed_text, cfg.field).terms
    else:
        seed = ()  # degree-0 polynomials take an empty seed
    try:
        rec = lfsr.Recurrence(C, seed)
    except MinpolyError as exc:
        raise _CliError(str(exc)) from None
    except ValueError as exc:
        raise _CliError(str(exc)) from None
    seq = lfsr.extend(rec, cfg.count)
    if cfg.as_json:
        doc = {
            "field": cfg.field.spec,
            "n": len(seq),
            "terms": [cfg.field.scalar_to_json(t) for t in seq],
        }
        print(json.dumps(doc))
    else:
        print(",".join(str(t) for t in seq))
    return 0


def run(cfg: RunConfig) -> int:
    """Execute one configured command; returns the process exit code."""
    if cfg.mode == "extend":
        return _cmd_extend(cfg, _read_source(cfg.source))
    if cfg.mode == "oracle-check" and cfg.exhaustive is not None:
        return _cmd_oracle_check(cfg, None)
    s = parse_sequence(_read_source(cfg.source), cfg.field)
    if cfg.mode == "minpoly":
        return _cmd_minpoly(cfg, s)
    if cfg.mode == "profile":
        return _cmd_profile(cfg, s)
    if cfg.mode == "trace":
        return _cmd_trace(cfg, s)
    if cfg.mode == "massey":
        return _cmd_massey(cfg, s)
    if cfg.mode == "oracle-check":
        return _cmd_oracle_check(cfg, s)
    raise _CliError(f"unknown mode {cfg.mode!r}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = _config_from_args(args)
        return run(cfg)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ParityError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    except MinpolyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
