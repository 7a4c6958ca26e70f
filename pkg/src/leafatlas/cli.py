"""Command-line front end: ``leafatlas {enumerate,check,poset,polygon,selftest}``."""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd

from leafatlas.atlas import InputError, build_atlas, check_middle_term, validate_input
from leafatlas.bundles import ParseError, end_dim_generic, hn_decompose, parse_type
from leafatlas.polygons import Triangle, hn_polygon, polygon_leq, polygon_svg
from leafatlas import oracle

COMMANDS = ("enumerate", "check", "poset", "polygon", "selftest")
DEFAULT_MAX_N = 64

EXIT_OK, EXIT_NEGATIVE, EXIT_INVALID = 0, 1, 2


@dataclass
class CliConfig:
    command: str
    k: int | None = None
    n: int | None = None
    type_string: str | None = None
    format: str = "json"
    output_path: str | None = None
    refine: bool = False
    jobs: int = 1
    max_n: int = 10


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="leafatlas",
        description="Admissible middle terms and leaf dimensions for a stable charge-(k,n) bundle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def kn(p: argparse.ArgumentParser) -> None:
        p.add_argument("-k", type=int, required=True, help="rank of F")
        p.add_argument("-n", type=int, required=True, help="degree of F")

    p = sub.add_parser("enumerate", help="list admissible types with their dimensions")
    kn(p)
    p.add_argument("--refine", action="store_true", help="one record per indecomposable refinement")
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.add_argument("-o", "--output", dest="output_path")
    p.add_argument("--jobs", type=_positive, default=1)

    p = sub.add_parser("check", help="decide whether a bundle type is a middle term")
    kn(p)
    p.add_argument("--type", dest="type_string", required=True, help='e.g. "1,2*2;1,1"')

    p = sub.add_parser("poset", help="DOT digraph of the specialization order")
    kn(p)
    p.add_argument("--refine", action="store_true")
    p.add_argument("-o", "--output", dest="output_path")
    p.add_argument("--jobs", type=_positive, default=1)

    p = sub.add_parser("polygon", help="SVG of a type's HN polygon over the triangle")
    kn(p)
    p.add_argument("--type", dest="type_string", required=True)
    p.add_argument("-o", "--output", dest="output_path")

    p = sub.add_parser("selftest", help="differential check against the brute-force oracle")
    p.add_argument("--max-n", type=_positive, default=10)
    p.add_argument("--jobs", type=_positive, default=1)
    return parser


def parse_config(argv: list[str] | None = None) -> CliConfig:
    args = build_parser().parse_args(argv)
    return CliConfig(**{k: v for k, v in vars(args).items() if v is not None})


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _size_cap() -> int:
    return int(os.environ.get("LEAFATLAS_MAX_N", DEFAULT_MAX_N))


def differential_check(k: int, n: int) -> list[str]:
    """Compare the fast paths with the oracle for one (k, n); return mismatches."""
    problems = []
    atlas = build_atlas(k, n, refine=True)
    fast = sorted(tuple(sorted(r.bundle_type.instances())) for r in atlas.records)
    if fast != oracle.naive_enumerate(k, n):
        problems.append("enumeration differs from naive_enumerate")
    for r in atlas.records:
        if r.end_dim != oracle.naive_end_dim(r.bundle_type.instances()):
            problems.append(f"end_dim differs for {r.id}")
    polys = [hn_polygon(nu) for nu in atlas.hn_types]
    for a in polys:
        for b in polys:
            if polygon_leq(a, b) != oracle.naive_polygon_leq(list(a.vertices), list(b.vertices)):
                problems.append(f"polygon order differs for {a.vertices} vs {b.vertices}")
    return problems


def _selftest_job(kn: tuple[int, int]) -> tuple[int, int, list[str]]:
    return (*kn, differential_check(*kn))


def selftest(max_n: int, jobs: int = 1) -> list[tuple[int, int, list[str]]]:
    cases = [(k, n) for n in range(2, max_n + 1) for k in range(1, n) if gcd(k, n) == 1]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_selftest_job, cases))
    return [_selftest_job(c) for c in cases]


def run(config: CliConfig) -> int:
    if config.command == "selftest":
        failed = 0
        for k, n, problems in selftest(config.max_n, config.jobs):
            status = "ok" if not problems else "MISMATCH: " + "; ".join(problems)
            print(f"({k},{n}) {status}")
            failed += bool(problems)
        print(f"{failed} mismatching case(s)")
        return EXIT_NEGATIVE if failed else EXIT_OK

    try:
        warning = validate_input(config.k, config.n)
        cap = _size_cap()
        if config.n > cap:
            raise InputError(f"n={config.n} exceeds LEAFATLAS_MAX_N={cap}")
        t = parse_type(config.type_string) if config.type_string is not None else None
    except (InputError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if warning:
        print(f"warning: {warning}", file=sys.stderr)

    if config.command == "enumerate":
        atlas = build_atlas(config.k, config.n, refine=config.refine, jobs=config.jobs)
        _emit(atlas.to_json() if config.format == "json" else atlas.to_tsv(), config.output_path)
        return EXIT_OK
    if config.command == "poset":
        atlas = build_atlas(config.k, config.n, refine=config.refine, jobs=config.jobs)
        _emit(atlas.to_dot(), config.output_path)
        return EXIT_OK
    if config.command == "check":
        verdict = check_middle_term(t, config.k, config.n)
        print(f"type {t.id} for (k,n)=({config.k},{config.n}): {verdict.summary()}")
        if verdict.admissible:
            print(f"end_dim={end_dim_generic(t)} leaf_dim={config.n - end_dim_generic(t)}")
        return EXIT_OK if verdict.admissible else EXIT_NEGATIVE
    if config.command == "polygon":
        poly = hn_polygon(hn_decompose(t))
        _emit(polygon_svg(poly, Triangle(config.k, config.n)), config.output_path)
        return EXIT_OK
    raise AssertionError(config.command)


def main(argv: list[str] | None = None) -> int:
    return run(parse_config(argv))


if __name__ == "__main__":
    sys.exit(main())
