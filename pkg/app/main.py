import argparse
import sys
from pathlib import Path

from loguru import logger

from app.cli import (
    CONSTRUCT_FAMILIES,
    app_error_handler,
    cmd_augment,
    cmd_construct,
    cmd_experiment,
    cmd_predict,
    cmd_solve,
    cmd_verify,
    unexpected_error_handler,
)
from app.services.results_store import ResultsStore
from app.shared.logger import init_logger
from app.utils.app_errors import AppError, AppErrorCode


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="la-toolkit",
        description="Exact local antimagic chromatic numbers, constructions and augmentation bounds.",
    )
    parser.add_argument("--debug", action="store_true", help="DEBUG logging regardless of the DEBUG setting")
    parser.add_argument("--no-store", action="store_true", help="do not append to the results store")
    sub = parser.add_subparsers(dest="command", required=True)

    solver_opts = argparse.ArgumentParser(add_help=False)
    solver_opts.add_argument("--edge-limit", type=int, default=None, help="largest edge count to search (default LA_EDGE_LIMIT)")
    solver_opts.add_argument("--jobs", type=int, default=None, help="solver processes, 0 = all cores (default LA_JOBS)")

    p = sub.add_parser("construct", parents=[solver_opts], help="write a family member with its labeling")
    p.add_argument("family", choices=CONSTRUCT_FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--legs", help="spider legs as LENGTHxCOUNT items, e.g. 2x4,1x3")
    p.add_argument("--target", help="wanted colour multiset as COLORxMULT items, e.g. 11x2,15x2,20x1")
    p.add_argument("--out", type=Path, default=Path("out"))

    p = sub.add_parser("solve", parents=[solver_opts], help="exact chi_la of an edge-list graph")
    p.add_argument("graph", type=Path)

    p = sub.add_parser("verify", help="check a labeling and report its colour profile")
    p.add_argument("graph", type=Path)
    p.add_argument("labeling", type=Path)

    p = sub.add_parser("predict", help="predicted chi_la bounds after adding pendants to a colour class")
    p.add_argument("--graph", type=Path)
    p.add_argument("--labeling", type=Path)
    p.add_argument("--profile", help="profile JSON, or @path to a JSON file")
    p.add_argument("--wheel-family", type=int, metavar="K", help="use the W_4K profile")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--s", type=int, required=True)

    p = sub.add_parser("experiment", parents=[solver_opts], help="run a YAML batch of augmentation experiments")
    p.add_argument("batch", type=Path)
    p.add_argument("--use-solver", action="store_true")

    p = sub.add_parser("augment", help="build G(V_i, s) with its extended labeling")
    p.add_argument("graph", type=Path)
    p.add_argument("labeling", type=Path)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--out", type=Path, default=Path("out"))

    return parser


def run(args: argparse.Namespace) -> int:
    store = ResultsStore.from_config(enabled=False if args.no_store else None)

    match args.command:
        case "construct":
            return cmd_construct(
                args.family,
                n=args.n,
                k=args.k,
                i=args.i,
                s=args.s,
                legs=args.legs,
                target=args.target,
                out_dir=args.out,
                edge_limit=args.edge_limit,
                jobs=args.jobs,
            )
        case "solve":
            return cmd_solve(args.graph, edge_limit=args.edge_limit, jobs=args.jobs, store=store)
        case "verify":
            return cmd_verify(args.graph, args.labeling)
        case "predict":
            return cmd_predict(
                i=args.i,
                s=args.s,
                graph_file=args.graph,
                labeling_file=args.labeling,
                profile=args.profile,
                wheel_family=args.wheel_family,
            )
        case "experiment":
            return cmd_experiment(
                args.batch, use_solver=args.use_solver, edge_limit=args.edge_limit, jobs=args.jobs, store=store
            )
        case "augment":
            return cmd_augment(args.graph, args.labeling, i=args.i, s=args.s, out_dir=args.out)
    raise AppError(errcode=AppErrorCode.E_INVALID_INPUT, errmesg=f"Unknown command {args.command!r}")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    init_logger(debug=True if args.debug else None)
    logger.debug("la-toolkit {}", args.command)

    try:
        return int(run(args))
    except AppError as exc:
        return int(app_error_handler(exc))
    except Exception as exc:
        return int(unexpected_error_handler(exc))


if __name__ == "__main__":
    sys.exit(main())
