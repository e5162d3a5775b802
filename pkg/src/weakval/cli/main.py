"""Command-line entry point: ``weakval <command> [options]``."""

import argparse
import logging
import sys

from dotenv import load_dotenv
from pydantic import ValidationError

from weakval import __version__
from weakval.cli.commands import COMMANDS
from weakval.cli.models import RunConfig
from weakval.config import Settings, configure
from weakval.core.errors import ConfigError, WeakValError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_NUMERICAL = 3


def _default(name: str):
    return RunConfig.model_fields[name].default


def _common_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    grid = parser.add_argument_group("object grid")
    grid.add_argument("--q-min", type=float, default=_default("q_min"))
    grid.add_argument("--q-max", type=float, default=_default("q_max"))
    grid.add_argument("--n-points", type=int, default=_default("n_points"))
    state = parser.add_argument_group("preselected state")
    state.add_argument("--alpha-i", type=float, default=_default("alpha_i"))
    state.add_argument("--state-file", default=None, help="load the state from a text file")
    state.add_argument("--dump-state", default=None, help="save the prepared state")
    output = parser.add_argument_group("output")
    output.add_argument("--output", "-o", default=None, help="output file (stdout if omitted)")
    output.add_argument("--format", choices=["csv", "json", "binary"], default=None)
    parser.add_argument("--verbose", "-v", action="store_true", help="debug logging")
    return parser


def _add_alpha_r(parser: argparse.ArgumentParser, required: bool = False) -> None:
    parser.add_argument(
        "--alpha-r",
        type=float,
        required=required,
        default=None if required else _default("alpha_r"),
    )


def _add_observable(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--obs", choices=["p2", "q2", "energy", "p", "q"], default=_default("obs"))


def _add_pointer(parser: argparse.ArgumentParser) -> None:
    pointer = parser.add_argument_group("pointer")
    pointer.add_argument(
        "--pointer-shape", choices=["gaussian", "mixture"], default=_default("pointer_shape")
    )
    pointer.add_argument("--pointer-sigma", type=float, default=_default("pointer_sigma"))
    pointer.add_argument("--pointer-points", type=int, default=_default("pointer_points"))
    pointer.add_argument("--pointer-span", type=float, default=_default("pointer_span"))
    pointer.add_argument(
        "--pointer-drift",
        type=float,
        default=_default("pointer_drift"),
        help="mean pointer momentum; nonzero values are rejected",
    )


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per figure or simulation."""
    common = _common_parser()
    formatter = argparse.ArgumentDefaultsHelpFormatter
    parser = argparse.ArgumentParser(
        prog="weakval",
        description="Weak values, quasiprobabilities and weak-measurement simulations",
        formatter_class=formatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    weakvalue = sub.add_parser(
        "weakvalue", parents=[common], formatter_class=formatter, help="weak-value profile"
    )
    _add_alpha_r(weakvalue, required=True)
    _add_observable(weakvalue)

    fig1 = sub.add_parser(
        "fig1", parents=[common], formatter_class=formatter, help="negativity probability"
    )
    _add_alpha_r(fig1)
    fig1.add_argument("--alpha-i-min", type=float, default=_default("alpha_i_min"))
    fig1.add_argument("--alpha-i-max", type=float, default=_default("alpha_i_max"))
    fig1.add_argument("--alpha-i-steps", type=int, default=_default("alpha_i_steps"))

    fig2 = sub.add_parser(
        "fig2", parents=[common], formatter_class=formatter, help="Margenau-Hill field"
    )
    _add_alpha_r(fig2)

    quasiprob = sub.add_parser(
        "quasiprob", parents=[common], formatter_class=formatter, help="quasiprobability field"
    )
    _add_alpha_r(quasiprob)
    quasiprob.add_argument(
        "--kind",
        choices=["standard", "kirkwood", "margenau-hill", "wigner"],
        default=_default("kind"),
    )

    simulate = sub.add_parser(
        "simulate", parents=[common], formatter_class=formatter, help="pointer simulation"
    )
    _add_alpha_r(simulate)
    _add_observable(simulate)
    _add_pointer(simulate)
    simulate.add_argument("--epsilon", type=float, default=_default("epsilon"))
    simulate.add_argument(
        "--classical", action="store_true", help="classical Liouville ensemble instead"
    )
    simulate.add_argument("--samples", type=int, default=_default("samples"))
    simulate.add_argument("--seed", type=int, default=_default("seed"))
    simulate.add_argument("--bins", type=int, default=_default("bins"))

    convergence = sub.add_parser(
        "convergence", parents=[common], formatter_class=formatter, help="epsilon convergence"
    )
    _add_alpha_r(convergence)
    _add_observable(convergence)
    _add_pointer(convergence)
    convergence.add_argument(
        "--epsilons", type=float, nargs="+", default=_default("epsilons")
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    """Run one command and return its exit status."""
    load_dotenv()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )

    try:
        configure(Settings.from_env())
        values = {k: v for k, v in vars(args).items() if k in RunConfig.model_fields}
        config = RunConfig(**values)
    except (ValidationError, ConfigError) as e:
        print(f"weakval: invalid configuration: {e}", file=sys.stderr)
        return EXIT_USAGE

    logger.info(f"running {config.command}")
    try:
        return COMMANDS[config.command](config)
    except ConfigError as e:
        print(f"weakval: invalid configuration: {e}", file=sys.stderr)
        return EXIT_USAGE
    except WeakValError as e:
        print(f"weakval: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_NUMERICAL
    except OSError as e:
        print(f"weakval: {e}", file=sys.stderr)
        return EXIT_FAILURE
