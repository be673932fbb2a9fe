"""Command-line entry point: `grassmann [--dim N] [--approx D] <subcommand> ...`."""

import argparse
import sys
from typing import List, Optional

from src.layer1_settings import (
    EXIT_OK,
    EXIT_PARSE_ERROR,
    ExpressionSyntaxError,
    GeometricCalculusError,
    get_logger,
    set_invocation_id,
    settings,
    setup_logging,
)
from src.layer2_core import Frame
from src.layer4_affine import IncidenceKind
from .commands import HANDLERS
from .schemas import ErrorPayload

logger = get_logger(__name__)


class _ArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with the parse-error code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="grassmann",
        description="Exact calculus of geometric forms over an affine frame.",
    )
    parser.add_argument("--dim", type=int, default=settings.algebra.default_dimension,
                        help="dimension n of the affine space (default: %(default)s)")
    parser.add_argument("--approx", type=int, default=settings.cli.approx_digits, metavar="DIGITS",
                        help="also print decimal approximations with DIGITS fractional digits")
    parser.add_argument("--log-level", default=settings.observability.log_level,
                        help="log level for stderr diagnostics")

    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    for name, help_text in (
        ("eval", "evaluate an expression"),
        ("omega", "boundary of an expression"),
        ("classify", "classify a homogeneous form"),
        ("factor", "factor a bivector or trivector into vectors (n=3)"),
    ):
        command = sub.add_parser(name, help=help_text)
        command.add_argument("expr", nargs="?", help="expression (default: standard input)")

    reduce_cmd = sub.add_parser("reduce", help="split x = p^omega(x) + omega(p^x)")
    reduce_cmd.add_argument("expr", nargs="?")
    reduce_cmd.add_argument("--at", required=True, help="point expression p")

    bary = sub.add_parser("barycenter", help='barycenter of {"points": [{"at": [...], "weight": "w"}]}')
    bary.add_argument("system", nargs="?", help="JSON (default: standard input)")

    vol_cmd = sub.add_parser("vol", help="affine volume of n+1 points")
    vol_cmd.add_argument("points", nargs="+")

    coords_cmd = sub.add_parser("coords", help="coordinates with respect to a simplex")
    coords_cmd.add_argument("expr", nargs="?")
    coords_cmd.add_argument("--simplex", nargs="+", required=True, help="n+1 vertex expressions")
    coords_cmd.add_argument("--grade", type=int, default=None, help="grade of a zero form")
    coords_cmd.add_argument("--quotient", action="store_true", help="use the quotient formulas")

    area = sub.add_parser("area", help="reduce a closed polygon given by its vertices")
    area.add_argument("points", nargs="+")

    volume = sub.add_parser("volume", help='reduce a closed surface {"faces": [[p, q, r], ...]}')
    volume.add_argument("surface", nargs="?")

    forces = sub.add_parser("forces", help="systems of applied forces")
    forces.add_argument("action", choices=["reduce", "equiv", "invariant", "classify", "edges"])
    forces.add_argument("system", nargs="?", help='{"forces": [{"at": [...], "vec": [...]}]}')
    forces.add_argument("other", nargs="?", help="second system for equiv")
    forces.add_argument("--at", default=None, help="reduction point expression")
    forces.add_argument("--simplex", nargs="+", default=None, help="tetrahedron vertices for edges")

    oracle = sub.add_parser("oracle", help="free-form oracle")
    oracle.add_argument("action", choices=["check", "canon"])
    oracle.add_argument("form", nargs="?", help='{"k": 2, "terms": [{"coeff": "1", "points": [...]}]}')
    oracle.add_argument("other", nargs="?", help="second free form for check")

    inc = sub.add_parser("incidence", help="incidence statement between points")
    inc.add_argument("kind", choices=[kind.value for kind in IncidenceKind])
    inc.add_argument("points", nargs="+")

    dual = sub.add_parser("dual", help="duality functional phi*(x)")
    dual.add_argument("phi")
    dual.add_argument("x")

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one invocation; canonical JSON goes to stdout, diagnostics to stderr.

    Returns:
        0 on success, 1 on parse or input errors, 2 on domain errors
    """
    args = build_parser().parse_args(argv)
    setup_logging(
        log_level=args.log_level,
        structured=settings.observability.structured_logging,
        log_file=settings.observability.log_file,
    )
    invocation_id = set_invocation_id()
    logger.info(f"grassmann {args.command} (invocation {invocation_id})")

    try:
        frame = Frame(args.dim)
        result = HANDLERS[args.command](args, frame, args.approx)
    except GeometricCalculusError as e:
        logger.warning(f"{args.command} failed: {e}")
        error = ErrorPayload(error=type(e).__name__, message=str(e))
        if isinstance(e, ExpressionSyntaxError):
            error = ErrorPayload(error=type(e).__name__, message=e.reason, line=e.line, column=e.column)
        print(error.model_dump_json(exclude_none=True), file=sys.stderr)
        return e.exit_code

    print(result.model_dump_json(exclude_none=True))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
