"""
Command-line interface
Exact symbols, Dedekind sums, word decompositions and verification suites from the shell
"""

import argparse
import json
import logging
import sys
from typing import List, Optional

from .config import get_config
from .dedekind_sum import dedekind_sum_steps
from .exact_core import GroupId, format_matrix, parse_group, parse_matrix
from .exceptions import ArgumentError, DedekindError
from .higher_order import S_star, group_symbol, theta
from .presets import get_preset, load_preset_file, load_presets
from .schemas import SCHEMA_MODELS, PresetSummary, StarResult, SumResult, SymbolResult, WordResult, rational
from .symbols_classical import RootOfUnity
from .verify import SUITES, run_verify
from .words import eval_word, parse_word, solve_word

logger = logging.getLogger(__name__)


class DomainArgumentParser(argparse.ArgumentParser):
    """Usage errors are domain errors: exit status 1"""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    config = get_config()
    parser = DomainArgumentParser(prog="dedekind", description="Exact modular Dedekind symbols")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=DomainArgumentParser)

    p = sub.add_parser("sum", help="Dedekind sum s(h,k)")
    p.add_argument("h", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("symbol", help="First-order symbol S of a matrix")
    p.add_argument("--group", required=True, help="sl2z, gamma0, plus, gamma0-N or gamma0-Nplus")
    p.add_argument("--level", type=int, help="Level N for --group gamma0 or plus")
    p.add_argument("--cusp", default="inf", choices=["inf", "0"])
    p.add_argument("--matrix", required=True, help="'a,b,c,d' or 'a,b,c,d;e'")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("star", help="Higher-order symbol S* modulo 1")
    p.add_argument("--group", required=True, help="Preset name")
    p.add_argument("--cusp", default="inf")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--matrix")
    source.add_argument("--word", help="Word over the preset alphabet, e.g. 'A B^-1 P0'")
    p.add_argument("--budget", type=int, default=config.search.budget)
    p.add_argument("--preset-file", dest="preset_file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("word", help="Decompose a matrix over preset generators")
    p.add_argument("--group", required=True, help="Preset name")
    p.add_argument("--matrix", required=True)
    p.add_argument("--budget", type=int, default=config.search.budget)
    p.add_argument("--preset-file", dest="preset_file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="Run verification suites")
    p.add_argument("--suite", default="all", choices=["all", *SUITES])
    p.add_argument("--seed", type=int, default=config.verify.seed)
    p.add_argument("--count", type=int, default=config.verify.count)
    p.add_argument("--tol", type=float, default=config.verify.tol)
    p.add_argument("--jobs", type=int, default=config.verify.jobs)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("presets", help="List group presets")
    p.add_argument("--preset-file", dest="preset_file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("schema", help="Print the JSON schema of an output model")
    p.add_argument("model", nargs="?", default="all", choices=["all", *SCHEMA_MODELS])

    p = sub.add_parser("serve", help="Run the HTTP API")
    p.add_argument("--host", default=config.api.host)
    p.add_argument("--port", type=int, default=config.api.port)
    return parser


def resolve_group(group: str, level: Optional[int]) -> GroupId:
    if group in ("gamma0", "plus"):
        if level is None:
            raise ArgumentError(f"--group {group} needs --level")
        return parse_group(f"gamma0-{level}{'plus' if group == 'plus' else ''}")
    return parse_group(group)


def _preset(args):
    if getattr(args, "preset_file", None):
        preset = load_preset_file(args.preset_file)
        if preset.name != args.group:
            raise ArgumentError(f"preset file defines {preset.name!r}, not {args.group!r}")
        return preset
    return get_preset(args.group)


def preset_summary(preset) -> PresetSummary:
    return PresetSummary(
        name=preset.name,
        description=preset.description,
        membership=preset.membership,
        level=preset.level,
        generators={name: format_matrix(M) for name, M in preset.generators.items()},
        symbols={name: rational(value) for name, value in preset.symbols.items()},
        cusps_with_tables=sorted(preset.star),
        kappa=rational(preset.kappa) if preset.kappa is not None else None,
    )


def _emit(args, model, text: str) -> None:
    print(model.model_dump_json(indent=2) if getattr(args, "json", False) else text)


def cmd_sum(args) -> int:
    value, steps = dedekind_sum_steps(args.h, args.k)
    result = SumResult(h=args.h, k=args.k, value=rational(value), steps=steps)
    _emit(args, result, f"s({args.h},{args.k}) = {result.value}")
    return 0


def cmd_symbol(args) -> int:
    group = resolve_group(args.group, args.level)
    M = parse_matrix(args.matrix)
    value = group_symbol(group, M, args.cusp)
    result = SymbolResult(
        group=str(group),
        cusp=args.cusp,
        matrix=format_matrix(M),
        value=rational(value),
        multiplier=str(RootOfUnity.from_exponent(value)),
    )
    _emit(args, result, result.value)
    return 0


def cmd_star(args) -> int:
    preset = _preset(args)
    if args.word is not None:
        word = parse_word(preset, args.word)
        matrix = None
    else:
        M = parse_matrix(args.matrix)
        word = solve_word(preset, M, args.budget)
        matrix = format_matrix(M)
    value = S_star(preset, word, args.cusp)
    theta_text = None
    if preset.membership != "sl2z":
        theta_text = str(theta(preset, word, args.cusp))
    result = StarResult(
        group=preset.name,
        cusp=args.cusp,
        matrix=matrix or format_matrix(eval_word(preset, word)),
        word=str(word),
        value=str(value),
        theta=theta_text,
    )
    _emit(args, result, result.value)
    return 0


def cmd_word(args) -> int:
    preset = _preset(args)
    M = parse_matrix(args.matrix)
    word = solve_word(preset, M, args.budget)
    result = WordResult(group=preset.name, matrix=format_matrix(M), word=str(word), length=len(word.compressed()))
    _emit(args, result, result.word)
    return 0


def cmd_verify(args) -> int:
    report = run_verify(args.suite, seed=args.seed, count=args.count, tol=args.tol, jobs=args.jobs)
    if args.json:
        print(report.model_dump_json(indent=2))
    else:
        for check in report.checks:
            status = "PASS" if check.passed else "FAIL"
            print(f"{status} {check.name}: {check.cases} cases, max residual {check.max_residual:.3g} ({check.detail})")
        print(f"{sum(c.passed for c in report.checks)}/{len(report.checks)} checks passed")
    if not report.passed:
        for check in report.failures:
            print(f"failed: {check.name}: {check.detail}", file=sys.stderr)
        return 2
    return 0


def cmd_presets(args) -> int:
    presets = dict(load_presets())
    if args.preset_file:
        extra = load_preset_file(args.preset_file)
        presets[extra.name] = extra
    summaries = [preset_summary(preset) for preset in presets.values()]
    if args.json:
        print(json.dumps([s.model_dump() for s in summaries], indent=2))
    else:
        for s in summaries:
            print(f"{s.name}: {s.description}")
            print(f"  generators: {', '.join(f'{name}=({m})' for name, m in s.generators.items())}")
    return 0


def cmd_schema(args) -> int:
    names = list(SCHEMA_MODELS) if args.model == "all" else [args.model]
    schemas = {name: SCHEMA_MODELS[name].model_json_schema() for name in names}
    print(json.dumps(schemas if args.model == "all" else schemas[args.model], indent=2))
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("dedekind_symbols.api:app", host=args.host, port=args.port, reload=False)
    return 0


COMMANDS = {
    "sum": cmd_sum,
    "symbol": cmd_symbol,
    "star": cmd_star,
    "word": cmd_word,
    "verify": cmd_verify,
    "presets": cmd_presets,
    "schema": cmd_schema,
    "serve": cmd_serve,
}


VALUE_OPTIONS = ("--matrix", "--word")


def attach_values(argv: List[str]) -> List[str]:
    """Glue '--matrix -7,-1,22,3' into '--matrix=-7,-1,22,3' so argparse does not read the value as a flag"""
    out: List[str] = []
    i = 0
    while i < len(argv):
        if argv[i] in VALUE_OPTIONS and i + 1 < len(argv):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv: Optional[List[str]] = None) -> int:
    config = get_config()
    logging.basicConfig(level=getattr(logging, config.logging.level, logging.WARNING), format=config.logging.format)
    parser = build_parser()
    try:
        args = parser.parse_args(attach_values(sys.argv[1:] if argv is None else list(argv)))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except DedekindError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
