"""Command line front end of hptkit."""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Callable, Optional

import termcolor

from hptkit.config import ALGEBRAS, VERIFY_TARGETS, RunConfig, default_order
from hptkit.constants import (
    DEFAULT_INSTANCES,
    DEFAULT_SEED,
    EXIT_AXIOM_FAILURE,
    EXIT_INPUT_ERROR,
    EXIT_NONTERMINATION,
    EXIT_OK,
    HPTKIT_DEFAULT_ORDER_ENV_VAR,
)
from hptkit.contra.serialization import load_structure, structure_to_dict
from hptkit.contra.structures import HodgeData, Pseudocontraction, big_complex
from hptkit.contra.validate import KINDS, validate_structure
from hptkit.errors import (
    ContractViolation,
    InputError,
    InvariantViolation,
    NonNilpotentError,
    SingularMapError,
    StructureError,
    error_report,
)
from hptkit.excore.complexes import validate_complex
from hptkit.excore.serialization import complex_from_dict, load_json
from hptkit.freealg.structure import classify_A0_word, enumerate_A0_basis
from hptkit.freealg.words import format_word
from hptkit.perturb.identities import series_formulas_check, verify_kit_identities
from hptkit.perturb.kit import build_kit, check_perturbation
from hptkit.perturb.lemmas import perturb_contraction, perturb_pseudo, perturb_weak
from hptkit.perturb.serialization import kit_to_dict, load_perturbation
from hptkit.reports import Report
from hptkit.suite import run_suite
from hptkit.transfer.contractions import TRANSFERS

# Configure logging
logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


def parse_args(command: str, args: list[str]) -> argparse.Namespace:
    """Parse the flags shared by all hptkit commands."""
    parser = argparse.ArgumentParser(prog=f"hptkit {command}")
    if command == "verify":
        parser.add_argument("target", nargs="?", default="all", choices=VERIFY_TARGETS)
    parser.add_argument("--input", help="JSON file with a complex or a structure")
    parser.add_argument("--perturbation", help='JSON file {"del": [...]} with the perturbation')
    parser.add_argument(
        "--order",
        type=int,
        default=None,
        help=f"truncation order of completed-algebra checks (env {HPTKIT_DEFAULT_ORDER_ENV_VAR})",
    )
    parser.add_argument("--cap", type=int, help="maximal number of Neumann series terms")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="first seed of the random instances")
    parser.add_argument("--instances", type=int, default=DEFAULT_INSTANCES, help="number of random instances")
    parser.add_argument("--bound", type=int, help="word length bound of realizations")
    parser.add_argument("--algebra", help=f"one of {', '.join(ALGEBRAS)}")
    parser.add_argument("--kind", help=f"validate as one of {', '.join(KINDS)}")
    parser.add_argument("--inverse", default="neumann", help="neumann or exact")
    parser.add_argument("--emit", help="write the JSON result to this file")
    parser.add_argument("--format", default="text", help="json or text")
    return parser.parse_args(args)


def create_config(command: str, args: argparse.Namespace) -> RunConfig:
    """Create and return a RunConfig from parsed arguments and the environment.

    Args:
    ----
        command (str): The hptkit command being run.
        args (argparse.Namespace): Parsed command-line arguments.

    Returns:
    -------
        RunConfig: The validated configuration.

    """
    return RunConfig(
        command=command,
        input=args.input,
        perturbation=args.perturbation,
        target=getattr(args, "target", "all"),
        order=default_order() if args.order is None else args.order,
        bound=args.bound,
        cap=args.cap,
        seed=args.seed,
        instances=args.instances,
        algebra=args.algebra,
        kind=args.kind,
        inverse=args.inverse,
        emit=args.emit,
        format=args.format,
    )


def require(value: Optional[str], flag: str) -> str:
    if value is None:
        raise InputError(f"{flag} is required")
    return value


def output(config: RunConfig, data: dict, report: Optional[Report] = None) -> None:
    """Write ``data`` to ``--emit`` if given, then print ``data`` or ``report``."""
    text = json.dumps(data, indent=2, ensure_ascii=False)
    if config.emit:
        Path(config.emit).write_text(text + "\n", encoding="utf-8")
        logger.info("wrote %s", config.emit)
    if config.format == "json" or report is None:
        print(text)
        return
    print(report)
    for check in report.checks:
        for step in check.trace:
            print(f"    [{check.label}] {step}")
    termcolor.cprint(
        f"{report.subject}: {'PASSED' if report.passed else 'FAILED'}",
        "green" if report.passed else "red",
    )


def status(report: Report) -> int:
    return EXIT_OK if report.passed else EXIT_AXIOM_FAILURE


def cmd_validate(config: RunConfig) -> int:
    """Validate a complex or a structure file."""
    path = require(config.input, "--input")
    data = load_json(path)
    if isinstance(data, dict) and "kind" in data:
        report = validate_structure(load_structure(path), config.kind)
    else:
        report = validate_complex(complex_from_dict(data, path))
    output(config, report.to_dict(), report)
    return status(report)


def cmd_perturb(config: RunConfig) -> int:
    """Perturb a structure and emit the kit with its identity report."""
    s = load_structure(require(config.input, "--input"))
    p = load_perturbation(require(config.perturbation, "--perturbation"), big_complex(s))
    report = check_perturbation(p)
    if not report.passed:
        output(config, report.to_dict(), report)
        return EXIT_AXIOM_FAILURE
    if isinstance(s, HodgeData):
        s = s.to_pseudo()
    kit = build_kit(s, p, config.cap, config.inverse)
    if isinstance(s, Pseudocontraction):
        perturbed = perturb_pseudo(s, p, kit=kit)
    elif s.kind == "contraction":
        perturbed, _ = perturb_contraction(s, p, kit=kit)
    else:
        perturbed, _ = perturb_weak(s, p, kit=kit)
    report = Report(subject=f"perturbed {s.kind}")
    report.merge(validate_structure(perturbed))
    report.merge(verify_kit_identities(kit, s, p))
    if config.inverse == "neumann":
        report.merge(series_formulas_check(kit, s, p, config.cap))
    output(config, kit_to_dict(kit, perturbed, report), report)
    return status(report)


def cmd_verify(config: RunConfig) -> int:
    """Run the verification suite (or one target of it)."""
    report = run_suite(
        config.target,
        order=config.order,
        instances=config.instances,
        seed=config.seed,
        bound=config.bound,
        cap=config.cap,
    )
    output(config, report.to_dict(), report)
    return status(report)


def cmd_enumerate(config: RunConfig) -> int:
    """List the degree zero basis words up to ``--bound`` with their shapes."""
    if config.bound is None:
        raise InputError("--bound is required")
    basis = enumerate_A0_basis(config.bound)
    words = [{"word": format_word(w), "shape": classify_A0_word(w).value} for w in basis]
    data = {"length": config.bound, "count": len(basis), "words": words}
    if config.format == "json":
        output(config, data)
        return EXIT_OK
    for entry in words:
        print(f"{entry['word']:<24} {entry['shape']}")
    termcolor.cprint(f"{len(basis)} words of length ≤ {config.bound}", "green")
    return EXIT_OK


def cmd_transfer(config: RunConfig) -> int:
    """Build and validate a contraction of a truncated realization onto the ground ring."""
    algebra = require(config.algebra, "--algebra")
    bound = config.transfer_bound()
    if algebra == "Ax":
        result = TRANSFERS[algebra](bound, config.cap)
    else:
        result = TRANSFERS[algebra](bound)
    data = {
        "algebra": algebra,
        "bound": bound,
        "validity_length": result.validity_length,
        "details": result.details,
        "contraction": structure_to_dict(result.contraction),
        "report": result.report.to_dict(),
    }
    output(config, data, result.report)
    return status(result.report)


COMMANDS: dict[str, Callable[[RunConfig], int]] = {
    "validate": cmd_validate,
    "perturb": cmd_perturb,
    "verify": cmd_verify,
    "enumerate": cmd_enumerate,
    "transfer": cmd_transfer,
}


def run(command: str, args: list[str]) -> int:
    """Parse, configure and run one command, mapping errors to exit codes."""
    try:
        config = create_config(command, parse_args(command, args))
    except ValueError as e:
        logger.error("Configuration error: %s", e)
        return EXIT_INPUT_ERROR

    try:
        return COMMANDS[command](config)
    except (InputError, StructureError) as e:
        print(error_report([e]), end="", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except (NonNilpotentError, SingularMapError) as e:
        print(error_report([e]), end="", file=sys.stderr)
        return EXIT_NONTERMINATION
    except (ContractViolation, InvariantViolation) as e:
        print(error_report([e]), end="", file=sys.stderr)
        return EXIT_AXIOM_FAILURE


def main(argv: Optional[list[str]] = None) -> int:
    """Entry point for the hptkit command line."""
    argv = sys.argv[1:] if argv is None else argv
    actions = {
        "validate": "Check a complex or a structure (--input file.json [--kind KIND])",
        "perturb": "Perturb a structure (--input s.json --perturbation p.json [--emit kit.json])",
        "verify": f"Run the verification suite [{'|'.join(VERIFY_TARGETS)}]",
        "enumerate": "List the degree zero basis of the free product (--bound L)",
        "transfer": f"Contract a truncated algebra (--algebra {'|'.join(ALGEBRAS)} --bound L)",
        "help": "Shows this help message",
    }

    def help():
        print("Usage: hptkit <command> [<args>]")
        print("\nSupported Commands:\n")
        for verb, description in actions.items():
            print(f"  {verb}: {description}")
        print()

    if len(argv) < 1:
        help()
        return EXIT_INPUT_ERROR

    verb = argv[0]
    if verb == "help":
        help()
        return EXIT_OK
    if verb not in COMMANDS:
        print(f"Unknown action: {verb}")
        return EXIT_INPUT_ERROR
    return run(verb, argv[1:])


if __name__ == "__main__":
    sys.exit(main())
