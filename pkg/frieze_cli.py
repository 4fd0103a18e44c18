"""
frieze_cli.py
=============
Command-line interface for weak friezes of dissected polygons.

Subcommands: check, glue, det, render, matrix and gallery. Results go to
standard output (deterministic), logs and errors to standard error.
Exit codes: 0 success, 1 a check failed, 2 invalid input.
"""

import argparse
import logging
import sys
from typing import List, Optional, Sequence, Tuple

from config import LOG_LEVELS, configure_logging, get_settings
from frieze import (
    CheckReport,
    ReportGenerator,
    check_frieze,
    check_weak_frieze,
    dump_frieze,
    format_pattern,
    load_frieze,
    parse_polygon_spec,
    read_json,
    render_pattern,
)
from gallery import (
    baur_marsh_frieze,
    bci_det_formula,
    bhj_det_formula,
    bm_det_formula,
    dissection_frieze,
    draw_weak_frieze,
    maldonado_check,
    maldonado_det_formula,
    maldonado_matrix,
    overlap_identity_check,
    random_assignment,
    random_dissection,
)
from geometry import (
    Diagonal,
    all_dissections,
    all_triangulations,
    cell_sizes,
    fan_dissection,
    validate_dissection,
)
from matrix import det_bareiss, dissection_det_formula, frieze_matrix, glue_det_check
from scalar import format_scalar
from utils.error_handler import (
    EXIT_CHECK_FAILED,
    EXIT_OK,
    InputFormatError,
    create_error_response,
)

logger = logging.getLogger(__name__)


def _emit(generator: ReportGenerator, output: str) -> None:
    if output == "json":
        print(generator.generate_json())
    elif output == "csv":
        print(generator.generate_csv(), end="")
    else:
        print(generator.generate_text())


def _exit_code(passed: bool) -> int:
    return EXIT_OK if passed else EXIT_CHECK_FAILED


def _compare(report: CheckReport, location: Tuple[int, ...], computed, expected, what: str) -> None:
    report.checked += 1
    if computed != expected:
        report.add(location, computed, expected, what)


def _parse_rows(text: str) -> Tuple[int, int]:
    try:
        first, last = (int(part) for part in text.split(".."))
    except ValueError:
        raise InputFormatError(f"--rows expects i..j, got {text!r}")
    return first, last


def _parse_diagonal(text: str) -> Diagonal:
    if text.startswith("d="):
        text = text[2:]
    return Diagonal.parse(text)


def _parse_sizes(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise InputFormatError(f"--cells expects sizes like 4,4,4, got {text!r}")


# --- commands -----------------------------------------------------------------

def cmd_check(args) -> int:
    f = load_frieze(args.input)
    if args.full:
        report = check_frieze(f)
    elif args.diamond:
        report = maldonado_check(maldonado_matrix(f))
    elif args.overlap:
        report = overlap_identity_check(maldonado_matrix(f))
    else:
        report = check_weak_frieze(f)
    _emit(ReportGenerator(report), args.output)
    return _exit_code(report.passed)


def cmd_glue(args) -> int:
    data = read_json(args.input)
    if "pieces" not in data:
        raise InputFormatError(f"{args.input} is not a polygon spec (no 'pieces' field)")
    f = parse_polygon_spec(data).glue()
    text = dump_frieze(f)
    if args.out:
        with open(args.out, 'w', encoding='utf-8') as out:
            out.write(text)
        print(f"✅ Frieze saved to: {args.out}")
    else:
        print(text, end="")
    return EXIT_OK


def cmd_det(args) -> int:
    f = load_frieze(args.input)
    det = det_bareiss(frieze_matrix(f))
    if not args.factor:
        if args.output == "json":
            _emit(ReportGenerator([], extra={"det": det}), args.output)
        else:
            print(format_scalar(det))
        return EXIT_OK

    d = _parse_diagonal(args.factor)
    result = glue_det_check(f, d)
    report = CheckReport("glue_det", subject=f"{f.n}-gon, d = {d}")
    _compare(report, (d.a, d.b), result.lhs, result.rhs, "determinant does not factor along d")
    extra = {
        "det": result.det_f,
        "value": result.value,
        "det_p": result.det_p,
        "det_q": result.det_q,
        "p": list(result.p.vertices),
        "q": list(result.q.vertices),
    }
    if args.output == "json":
        _emit(ReportGenerator(report, extra=extra), args.output)
    else:
        print(format_scalar(result.det_f))
        print(f"f{d} = {format_scalar(result.value)}")
        print(f"det(M_P) = {format_scalar(result.det_p)}  P = {result.p}")
        print(f"det(M_Q) = {format_scalar(result.det_q)}  Q = {result.q}")
        print(f"-f(d)^-2 * det(M_P) * det(M_Q) = {format_scalar(result.rhs)}")
        print(report.status)
    return _exit_code(report.passed)


def cmd_render(args) -> int:
    f = load_frieze(args.input)
    first, last = _parse_rows(args.rows) if args.rows else (1, f.n)
    print(format_pattern(render_pattern(f, first, last)))
    return EXIT_OK


def cmd_matrix(args) -> int:
    f = load_frieze(args.input)
    print(frieze_matrix(f).format())
    return EXIT_OK


# --- gallery --------------------------------------------------------------------

def _finish(report: CheckReport, lines: Sequence[str], args, extra=None) -> int:
    if args.output == "json":
        _emit(ReportGenerator(report, extra=extra), args.output)
    else:
        for line in lines:
            print(line)
        print(report.status)
    return _exit_code(report.passed)


def gallery_bhj(args) -> int:
    report = CheckReport("bhj")
    if args.all:
        dissections = all_dissections(args.n)
        for index, D in enumerate(dissections):
            det = det_bareiss(frieze_matrix(dissection_frieze(args.n, D)))
            _compare(report, (index,), det, bhj_det_formula(args.n, cell_sizes(args.n, D)), f"D = {D}")
        lines = [f"{len(dissections)} dissections of the {args.n}-gon, {len(report.violations)} failed"]
        return _finish(report, lines, args)

    if not args.cells:
        raise InputFormatError("gallery bhj needs --cells or --all")
    sizes = _parse_sizes(args.cells)
    expected = bhj_det_formula(args.n, sizes)
    D = fan_dissection(sizes)
    det = det_bareiss(frieze_matrix(dissection_frieze(args.n, D)))
    _compare(report, (0,), det, expected, f"D = {D}")
    lines = [
        f"n = {args.n}, cells = {','.join(str(s) for s in sizes)}, D = {D}",
        f"det(M_f) = {format_scalar(det)}",
        f"formula  = {format_scalar(expected)}",
    ]
    return _finish(report, lines, args, extra={"det": det, "formula": expected})


def gallery_cc(args) -> int:
    report = CheckReport("bci")
    expected = bci_det_formula(args.n)
    triangulations = all_triangulations(args.n)
    for index, T in enumerate(triangulations):
        f = dissection_frieze(args.n, T)
        _compare(report, (index,), det_bareiss(frieze_matrix(f)), expected, f"T = {T}")
        if any(v <= 0 or v.denominator != 1 for _, v in f.items()):
            report.add((index,), None, None, f"T = {T}: not a positive integer frieze")
    lines = [
        f"{len(triangulations)} triangulations of the {args.n}-gon, "
        f"formula = {format_scalar(expected)}, {len(report.violations)} failed"
    ]
    return _finish(report, lines, args, extra={"formula": expected})


def _triangulation(n: int, text: Optional[str]):
    if text:
        return validate_dissection(n, [Diagonal.parse(part) for part in text.split()])
    return fan_dissection([3] * (n - 2))


def gallery_bm(args) -> int:
    T = _triangulation(args.n, args.triangulation)
    if not T.is_triangulation():
        raise InputFormatError(f"{T} is not a triangulation of the {args.n}-gon")
    f = baur_marsh_frieze(T)
    det = det_bareiss(frieze_matrix(f))
    expected = bm_det_formula(f)
    report = CheckReport("baur_marsh", subject=f"T = {T}")
    _compare(report, (0,), det, expected, "symbolic determinant differs from the formula")
    lines = [f"T = {T}", f"det(M_f) = {format_scalar(det)}", f"formula  = {format_scalar(expected)}"]
    return _finish(report, lines, args, extra={"det": det, "formula": expected})


def _seed(args) -> int:
    return get_settings().default_seed if args.seed is None else args.seed


def gallery_maldonado(args) -> int:
    seed = _seed(args)
    T = random_dissection(args.n, seed, "triangulation")
    f = baur_marsh_frieze(T)
    f = f.evaluate(random_assignment(f.field.universe, seed))
    C = maldonado_matrix(f)
    diamond = maldonado_check(C)
    overlap = overlap_identity_check(C)
    det = det_bareiss(C.matrix)
    formula = CheckReport("maldonado_det", subject=f"T = {T}")
    if diamond.passed:
        _compare(formula, (0,), det, maldonado_det_formula(C), "determinant differs from the formula")
    generator = ReportGenerator([diamond, overlap, formula], extra={"det": det})
    if args.output == "json":
        _emit(generator, args.output)
    else:
        print(f"T = {T}, seed = {seed}")
        print(generator.generate_text())
        print("PASS" if generator.passed else "FAIL")
    return _exit_code(generator.passed)


def gallery_random(args) -> int:
    seed = _seed(args)
    D = random_dissection(args.n, seed, args.mode)
    f, attempts = draw_weak_frieze(args.n, D, seed)
    weak = check_weak_frieze(f)
    factors = CheckReport("glue_det", subject=f"D = {D}")
    for d in D:
        lhs, rhs, _ = glue_det_check(f, d)
        _compare(factors, (d.a, d.b), lhs, rhs, f"determinant does not factor along {d}")
    det = det_bareiss(frieze_matrix(f))
    whole = CheckReport("dissection_det")
    _compare(whole, (), det, dissection_det_formula(f), "determinant differs from the cell product")
    generator = ReportGenerator([weak, factors, whole], extra={"det": det, "attempts": attempts})
    if args.output == "json":
        _emit(generator, args.output)
    else:
        print(f"n = {args.n}, seed = {seed}, D = {D}, attempts = {attempts}")
        print(generator.generate_text())
        print("PASS" if generator.passed else "FAIL")
    return _exit_code(generator.passed)


# --- parser ---------------------------------------------------------------------

def _add_output(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--output",
        choices=["text", "json", "csv"],
        default="text",
        help="Output format (default: text)"
    )
    parser.add_argument(
        "--json",
        dest="output",
        action="store_const",
        const="json",
        help="Shortcut for --output json"
    )


def _add_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--in",
        dest="input",
        required=True,
        help="Polygon spec or frieze file ('-' reads standard input)"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frieze",
        description="Weak friezes of dissected polygons - gluing, Ptolemy checks and determinants"
    )
    parser.add_argument(
        "--log-level",
        choices=LOG_LEVELS,
        default=None,
        help="Logging level on standard error (default: FRIEZE_LOG_LEVEL or WARNING)"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    check = commands.add_parser("check", help="Check Ptolemy or diamond relations")
    _add_input(check)
    kind = check.add_mutually_exclusive_group()
    kind.add_argument("--weak", action="store_true", help="Relations involving the dissection (default)")
    kind.add_argument("--full", action="store_true", help="All Ptolemy relations")
    kind.add_argument("--diamond", action="store_true", help="Generalized diamond rule of the matrix")
    kind.add_argument("--overlap", action="store_true", help="Overlap identity of the matrix")
    _add_output(check)
    check.set_defaults(handler=cmd_check)

    glue = commands.add_parser("glue", help="Glue the pieces of a polygon spec")
    _add_input(glue)
    glue.add_argument("--out", help="Write the frieze file here (default: standard output)")
    glue.set_defaults(handler=cmd_glue)

    det = commands.add_parser("det", help="Determinant of the weak frieze matrix")
    _add_input(det)
    det.add_argument("--factor", help="Also factor along a diagonal, e.g. d=1,4")
    _add_output(det)
    det.set_defaults(handler=cmd_det)

    render = commands.add_parser("render", help="Print rows of the frieze pattern")
    _add_input(render)
    render.add_argument("--rows", help="Row range i..j (default: 1..n)")
    render.set_defaults(handler=cmd_render)

    matrix = commands.add_parser("matrix", help="Print the weak frieze matrix")
    _add_input(matrix)
    matrix.set_defaults(handler=cmd_matrix)

    gallery = commands.add_parser("gallery", help="Closed-form determinant families")
    presets = gallery.add_subparsers(dest="preset", required=True)

    bhj = presets.add_parser("bhj", help="Constant-1 pieces on a dissection")
    bhj.add_argument("--n", type=int, required=True, help="Polygon size")
    bhj.add_argument("--cells", help="Cell sizes of a fan dissection, e.g. 4,4,4")
    bhj.add_argument("--all", action="store_true", help="Sweep every dissection of the n-gon")
    _add_output(bhj)
    bhj.set_defaults(handler=gallery_bhj)

    cc = presets.add_parser("cc", help="Conway-Coxeter friezes of every triangulation")
    cc.add_argument("--n", type=int, required=True, help="Polygon size")
    _add_output(cc)
    cc.set_defaults(handler=gallery_cc)

    bm = presets.add_parser("bm", help="Symbolic frieze of a triangulation")
    bm.add_argument("--n", type=int, required=True, help="Polygon size")
    bm.add_argument("--triangulation", help="Diagonals like '1,3 1,4' (default: fan at vertex 1)")
    _add_output(bm)
    bm.set_defaults(handler=gallery_bm)

    maldonado = presets.add_parser("maldonado", help="Frieze matrix with coefficients")
    maldonado.add_argument("--n", type=int, required=True, help="Polygon size")
    maldonado.add_argument("--seed", type=int, help="Random seed (default: FRIEZE_DEFAULT_SEED)")
    _add_output(maldonado)
    maldonado.set_defaults(handler=gallery_maldonado)

    rnd = presets.add_parser("random", help="Random weak frieze on a random dissection")
    rnd.add_argument("--n", type=int, required=True, help="Polygon size")
    rnd.add_argument("--seed", type=int, help="Random seed (default: FRIEZE_DEFAULT_SEED)")
    rnd.add_argument("--mode", choices=["any", "triangulation"], default="any", help="Dissection kind")
    _add_output(rnd)
    rnd.set_defaults(handler=gallery_random)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one command.

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])

    Returns:
        Process exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_OK

    try:
        configure_logging(args.log_level)
        logger.debug(f"running {args.command}")
        return args.handler(args)
    except Exception as e:
        response = create_error_response(e)
        print(f"❌ Error: {response['error']}", file=sys.stderr)
        if response.get("details"):
            print(response["details"], file=sys.stderr)
        if response.get("suggestion"):
            print(f"💡 {response['suggestion']}", file=sys.stderr)
        return response["status_code"]


def main():
    """CLI entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
