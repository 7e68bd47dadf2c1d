"""

コマンドラインの入口

- convert: FlatZinc → .qubo と .sub.json
- solve: .qubo を全探索またはアニーリングで解く
- roundtrip: 変換結果を総当たりのオラクルと照合する
- check: .qubo の形式と正規化の検査

終了コード

- 0: 成功
- 1: 使い方・構文・ファイル形式の誤り、検査や照合の不合格
- 2: モデルが矛盾している (Inconsistent)
- 3: 探索の上限を超えた (GuardExceeded)

"""


# SECTION: Packages(Type Annotation)
from typing import Callable, Dict, NoReturn, Optional, Sequence

# SECTION: Packages(Built-in)
import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

# SECTION: Packages(Local)
from flatzinc_qubo.config import AnnealParams, BinaryRule, CompileConfig, EncodingConfig, Strategy
from flatzinc_qubo.constant import constant
from flatzinc_qubo.formats import (
    check_qubo,
    format_bits,
    format_solution,
    load_qubo,
    load_sidecar,
    save_qubo,
    save_sidecar
)
from flatzinc_qubo.frontend import lower_to_qip, parse_file
from flatzinc_qubo.pipeline import compile_file
from flatzinc_qubo.qubo import Qubo
from flatzinc_qubo.solve import anneal_qubo, decode, exhaustive_qubo, roundtrip_check
from flatzinc_qubo.utils.errors import FlatZincQuboError, GuardExceeded, Inconsistent


logger = logging.getLogger(__name__)

EXIT_OK:           int = 0
EXIT_FAILURE:      int = 1
EXIT_INCONSISTENT: int = 2
EXIT_GUARD:        int = 3


# SECTION: Public Classes
class ArgumentParser(argparse.ArgumentParser):

    """

    Usage errors exit with 1; 2 is reserved for inconsistent models.

    """

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_FAILURE, f"{self.prog}: error: {message}\n")


# SECTION: Public Functions
def build_parser() -> ArgumentParser:

    # Initialize
    parser = ArgumentParser(prog="flatzinc-qubo", description="Compile integer FlatZinc models to QUBO.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log pass details at DEBUG level")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)

    # Process
    convert = commands.add_parser("convert", help="write .qubo and .sub.json for a FlatZinc model")
    convert.add_argument("input", type=Path)
    convert.add_argument("-o", "--output", type=Path, help="QUBO path (default: input with .qubo suffix)")
    convert.add_argument("--sidecar", type=Path, help=f"sidecar path (default: output with {constant.SIDECAR_SUFFIX})")
    _add_compile_flags(convert)
    convert.add_argument("--penalty", type=_rational, help="fixed penalty factor C")
    convert.add_argument("--no-propagate", action="store_true", help="skip bounds propagation")
    convert.set_defaults(handler=cmd_convert)

    solve = commands.add_parser("solve", help="solve a .qubo file")
    solve.add_argument("qubo", type=Path)
    solve.add_argument("--method", choices=["exhaustive", "anneal"], default="exhaustive")
    solve.add_argument("--seed", type=int, default=0)
    solve.add_argument("--sweeps", type=int, default=constant.ANNEAL_SWEEPS)
    solve.add_argument("--restarts", type=int, default=constant.ANNEAL_RESTARTS)
    solve.add_argument("--workers", type=int, default=constant.ANNEAL_WORKERS)
    solve.add_argument("--sidecar", type=Path, help="decode with this sidecar")
    solve.add_argument("--decode", action="store_true", help="decode with the sidecar next to the .qubo file")
    solve.add_argument("--output", type=Path, help="write the solution here instead of standard output")
    solve.set_defaults(handler=cmd_solve)

    roundtrip = commands.add_parser("roundtrip", help="check the compiled QUBO against brute force")
    roundtrip.add_argument("input", type=Path)
    roundtrip.add_argument("--json", action="store_true", help="print the report as JSON")
    roundtrip.add_argument("--max-bits", type=int, default=constant.EXHAUSTIVE_MAX_BITS)
    _add_compile_flags(roundtrip)
    roundtrip.set_defaults(handler=cmd_roundtrip)

    check = commands.add_parser("check", help="validate a .qubo file")
    check.add_argument("qubo", type=Path)
    check.set_defaults(handler=cmd_check)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:

    """

    :param argv: arguments without the program name (default: sys.argv[1:])
    :type argv: Optional[Sequence[str]]

    :return: exit code
    :rtype: int

    """

    # Initialize
    args = build_parser().parse_args(argv)
    handler: Callable[[argparse.Namespace], int] = args.handler

    # Process
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format=constant.LOG_FORMAT)

    try:
        return handler(args)
    except Inconsistent as e:
        print(str(e), file=sys.stderr)
        return EXIT_INCONSISTENT
    except GuardExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_GUARD
    except (FlatZincQuboError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILURE


def cmd_convert(args: argparse.Namespace) -> int:

    # Initialize
    output:  Path = args.output or args.input.with_suffix(constant.QUBO_SUFFIX)
    sidecar: Path = args.sidecar or _sidecar_path(output)
    config:  CompileConfig = CompileConfig(
        encoding=_encoding(args),
        penalty=args.penalty,
        propagate=not args.no_propagate
    )

    # Process
    compilation = compile_file(args.input, config)
    save_qubo(compilation.qubo, output)
    save_sidecar(compilation.qubo, sidecar)

    for name, stats in compilation.stages:
        print(f"{name}: " + " ".join(f"{k}={v}" for k, v in stats.items()))
    print(f"wrote {output} and {sidecar}")

    return EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:

    # Initialize
    qubo:    Qubo = load_qubo(args.qubo)
    sidecar: Optional[Path] = args.sidecar or (_sidecar_path(args.qubo) if args.decode else None)
    text:    str

    # Process
    if sidecar is not None:
        if not sidecar.exists():
            print(f"error: sidecar {sidecar} not found", file=sys.stderr)
            return EXIT_FAILURE
        qubo = load_sidecar(sidecar, qubo)

    if args.method == "exhaustive":
        best = exhaustive_qubo(qubo)
        value, bits = best.energy, best.assignment
    else:
        params = AnnealParams(seed=args.seed, sweeps=args.sweeps, restarts=args.restarts, workers=args.workers)
        result = anneal_qubo(qubo, params)
        value, bits = result.energy, result.assignment

    text = format_solution(decode(qubo, bits)) if sidecar is not None else format_bits(value, bits)
    if args.output:
        args.output.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)

    return EXIT_OK


def cmd_roundtrip(args: argparse.Namespace) -> int:

    # Initialize
    config = CompileConfig(encoding=_encoding(args))

    # Process
    try:
        model = lower_to_qip(parse_file(args.input))
    except Inconsistent as e:
        # detected before there is a model to enumerate
        detected = {"passed": True, "oracle": None, "inconsistent": e.constraint}
        print(json.dumps(detected, indent=2) if args.json else " ".join(f"{k}={v}" for k, v in detected.items()))
        return EXIT_OK

    report = roundtrip_check(model, config, args.max_bits)
    if args.json:
        print(json.dumps(report.to_json(), indent=2))
    else:
        summary: Dict[str, object] = report.to_json()
        summary.pop("stages")
        print(" ".join(f"{k}={v}" for k, v in summary.items()))

    return EXIT_OK if report.passed else EXIT_FAILURE


def cmd_check(args: argparse.Namespace) -> int:

    # Initialize
    findings = check_qubo(args.qubo.read_text(encoding="utf-8"))

    # Process
    for finding in findings:
        print(f"{args.qubo}: {finding}")
    if not findings:
        print(f"{args.qubo}: ok")

    return EXIT_OK if not findings else EXIT_FAILURE


# SECTION: Private Functions
def _add_compile_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--encoding", choices=[s.value for s in Strategy], default=Strategy.AUTO.value)
    parser.add_argument("--onehot-threshold", type=int, default=constant.ONEHOT_THRESHOLD)
    parser.add_argument("--binary-rule", choices=[r.value for r in BinaryRule], default=BinaryRule.COEFFICIENT.value)


def _encoding(args: argparse.Namespace) -> EncodingConfig:
    return EncodingConfig(
        strategy=Strategy(args.encoding),
        onehot_threshold=args.onehot_threshold,
        binary_rule=BinaryRule(args.binary_rule)
    )


def _sidecar_path(qubo_path: Path) -> Path:
    return qubo_path.with_name(qubo_path.stem + constant.SIDECAR_SUFFIX)


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from e


if __name__ == "__main__":
    sys.exit(main())
