"""
Main entry point for the orbit audit command line.

Subcommands:
    simulate         iterate the requested evaluation forms and write the orbits
    audit            full G/H/P audit with lower-bound certification
    reproduce-paper  the published r=3.8, x0=0.4, N=100 experiment with all figures

Exit codes: 0 success (no crossing), 1 runtime failure, 2 invalid
configuration, 3 divergence certified.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from pydantic import ValidationError

try:
    from .. import __version__
    from ..models.errors import ExportError, OrbitAuditError
    from ..models.orbit import EvaluationFormId
    from ..models.run_config import OutputFormat, RunConfig
    from ..services.exporters import export_csv, export_json, export_orbits_csv, export_orbits_json
    from ..services.fixed_precision import iterate_fixed
    from ..services.plotting import emit_orbit_plot, emit_plots
    from ..services.report_builder import (
        PUBLISHED_PARAMETERS, PUBLISHED_THRESHOLD, AuditReportBuilder, compare_headlines,
        headline_lines, reproduce_paper, summarize_crossing
    )
    from .config import OUTPUT_DIR_ENV, config_manager
except ImportError:
    from src import __version__
    from models.errors import ExportError, OrbitAuditError
    from models.orbit import EvaluationFormId
    from models.run_config import OutputFormat, RunConfig
    from services.exporters import export_csv, export_json, export_orbits_csv, export_orbits_json
    from services.fixed_precision import iterate_fixed
    from services.plotting import emit_orbit_plot, emit_plots
    from services.report_builder import (
        PUBLISHED_PARAMETERS, PUBLISHED_THRESHOLD, AuditReportBuilder, compare_headlines,
        headline_lines, reproduce_paper, summarize_crossing
    )
    from cli.config import OUTPUT_DIR_ENV, config_manager

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INVALID_CONFIG = 2
EXIT_DIVERGENCE = 3


def setup_logging(log_level: str = "INFO", log_format: Optional[str] = None) -> None:
    """Set up logging configuration."""
    logging.basicConfig(
        level=getattr(logging, log_level.upper(), logging.INFO),
        format=log_format or "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=[
            logging.StreamHandler(sys.stderr)
        ]
    )


def _add_run_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--r", help="Map parameter r as a decimal string (default 3.8)")
    parser.add_argument("--x0", help="Initial condition as a decimal string (default 0.4)")
    parser.add_argument("--n", type=int, help="Number of iterates N (default 100)")
    parser.add_argument("--digits", type=int, help="Reference precision in decimal digits (default 1000)")
    parser.add_argument("--threshold", help="Shadowing distance as a decimal string (default 1e-8)")
    parser.add_argument("--forms", help="Comma-separated evaluation forms, subset of G,H")
    parser.add_argument("--formats", help="Comma-separated output formats, subset of csv,json,svg")
    parser.add_argument("--backend", choices=["decimal", "mpmath"], help="Reference arithmetic engine")
    parser.add_argument("--export-digits", type=int, help="Reference digits written to CSV/JSON (default 30)")
    parser.add_argument("--config", type=Path, help="JSON file with run settings (flags override it)")
    parser.add_argument("--dump-config", type=Path, help="Write the effective run settings as JSON")


def build_parser() -> argparse.ArgumentParser:
    """Command line parser for all subcommands."""
    parser = argparse.ArgumentParser(
        prog="orbit-audit",
        description="Certify floating-point divergence of logistic map pseudo-orbits",
        epilog=f"Environment: {OUTPUT_DIR_ENV} sets the default output directory; "
               "a .env file in the working directory is read first.",
    )
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default=None,
        help="Set the logging level (default: INFO or ORBIT_AUDIT_LOG_LEVEL)"
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"orbit-audit {__version__}"
    )

    subparsers = parser.add_subparsers(dest="command", required=True)

    simulate = subparsers.add_parser("simulate", help="Iterate fixed-precision orbits only")
    _add_run_flags(simulate)
    simulate.add_argument("--out", type=Path, help=f"Output directory (default ${OUTPUT_DIR_ENV})")

    audit = subparsers.add_parser("audit", help="Lower-bound and reference audit of G and H")
    _add_run_flags(audit)
    audit.add_argument("--out", type=Path, help=f"Output directory (default ${OUTPUT_DIR_ENV})")

    reproduce = subparsers.add_parser("reproduce-paper", help="Published experiment with all figures")
    reproduce.add_argument("--out", type=Path, help=f"Output directory (default ${OUTPUT_DIR_ENV})")
    reproduce.add_argument("--backend", choices=["decimal", "mpmath"], help="Reference arithmetic engine")
    reproduce.add_argument("--export-digits", type=int, help="Reference digits written to CSV/JSON")

    return parser


def _split(value: Optional[str]) -> Optional[List[str]]:
    if value is None:
        return None
    return [item.strip() for item in value.split(",") if item.strip()]


def build_run_config(args: argparse.Namespace) -> RunConfig:
    """
    Merge application defaults, the optional config file and flags.

    Raises:
        ValidationError: merged settings are invalid
        ValueError: the config file cannot be read or parsed
    """
    settings: Dict[str, Any] = config_manager.run_defaults()

    config_path = getattr(args, "config", None)
    if config_path is not None:
        try:
            file_settings = json.loads(Path(config_path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as e:
            raise ValueError(f"cannot read config file {config_path}: {e}") from e
        if not isinstance(file_settings, dict):
            raise ValueError(f"config file {config_path} must hold a JSON object")
        settings.update(file_settings)

    flags = {
        "r": getattr(args, "r", None),
        "x0": getattr(args, "x0", None),
        "iterates": getattr(args, "n", None),
        "digits": getattr(args, "digits", None),
        "threshold": getattr(args, "threshold", None),
        "forms": _split(getattr(args, "forms", None)),
        "formats": _split(getattr(args, "formats", None)),
        "backend": getattr(args, "backend", None),
        "export_digits": getattr(args, "export_digits", None),
        "output_dir": getattr(args, "out", None),
    }
    settings.update({key: value for key, value in flags.items() if value is not None})

    return RunConfig(**settings)


def _write_file(path: Path, writer: Callable, payload) -> Path:
    try:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            writer(payload, handle)
    except ExportError:
        raise
    except OSError as e:
        raise ExportError(f"failed to write {path}: {e}") from e
    logger.info(f"Wrote {path}")
    return path


def _prepare_output(config: RunConfig) -> Path:
    try:
        config.output_dir.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise ExportError(f"cannot create output directory {config.output_dir}: {e}") from e
    return config.output_dir


def run_simulate(config: RunConfig) -> int:
    """Compute the requested fixed orbits and write them."""
    params = config.to_map_parameters()
    orbits = [iterate_fixed(form, params) for form in config.forms]
    out = _prepare_output(config)

    if config.wants(OutputFormat.CSV):
        _write_file(out / "orbits.csv", export_orbits_csv, orbits)
    if config.wants(OutputFormat.JSON):
        _write_file(out / "orbits.json", export_orbits_json, orbits)
    if config.wants(OutputFormat.SVG):
        emit_orbit_plot(orbits, out)

    print(f"Wrote {len(orbits)} orbit(s) of {params.length} values to {out}")
    return EXIT_OK


def _write_report(report, config: RunConfig) -> None:
    out = _prepare_output(config)
    if config.wants(OutputFormat.CSV):
        _write_file(out / "audit.csv", export_csv, report)
    if config.wants(OutputFormat.JSON):
        _write_file(out / "audit.json", export_json, report)
    if config.wants(OutputFormat.SVG):
        emit_plots(report, out)


def _report_outcome(report) -> int:
    summary = summarize_crossing(report)
    for key in ("deviation_G", "deviation_H"):
        line = summarize_crossing(report, key)
        if line:
            print(line)

    if summary is None:
        peak = max(report.lower_bound.values)
        print(f"No lower-bound crossing of {report.environment.threshold} within "
              f"{report.params.iterates} iterates (max delta={peak:.6g})")
        return EXIT_OK

    print(f"Divergence certified: {summary}")
    return EXIT_DIVERGENCE


def run_audit(config: RunConfig) -> int:
    """Full audit: both forms, reference orbit, series, crossings."""
    if set(config.forms) != {EvaluationFormId.G, EvaluationFormId.H}:
        print("error: audit requires both forms G and H", file=sys.stderr)
        return EXIT_INVALID_CONFIG

    builder = AuditReportBuilder(
        digits=config.digits,
        threshold=config.threshold,
        backend=config.backend,
        export_digits=config.export_digits,
    )
    report = builder.build(config.to_map_parameters())
    _write_report(report, config)
    return _report_outcome(report)


def run_reproduce(outdir: Path, backend: str = "decimal", export_digits: int = 30) -> int:
    """Published experiment: audit of the published preset plus all four figures."""
    config = RunConfig(
        r=PUBLISHED_PARAMETERS["r"],
        x0=PUBLISHED_PARAMETERS["x0"],
        iterates=PUBLISHED_PARAMETERS["iterates"],
        digits=1000,
        threshold=PUBLISHED_THRESHOLD,
        output_dir=outdir,
        formats=list(OutputFormat),
        backend=backend,
        export_digits=export_digits,
    )
    report = reproduce_paper(backend=config.backend, export_digits=config.export_digits)
    _write_report(report, config)

    for line in headline_lines(compare_headlines(report)):
        print(line)
    return _report_outcome(report)


def _guarded(action: Callable[[], int]) -> int:
    try:
        return action()
    except ValidationError as e:
        return _report_invalid(e)
    except (OrbitAuditError, OSError) as e:
        logger.error(f"Run failed: {e}", exc_info=logger.isEnabledFor(logging.DEBUG))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILURE


def _report_invalid(e: Exception) -> int:
    if isinstance(e, ValidationError):
        for err in e.errors():
            location = ".".join(str(part) for part in err.get("loc", ()))
            message = err.get("msg", "").removeprefix("Value error, ")
            print(f"error: {location + ': ' if location else ''}{message}", file=sys.stderr)
    else:
        print(f"error: {e}", file=sys.stderr)
    return EXIT_INVALID_CONFIG


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run one subcommand and return its exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        app_config = config_manager.reload()
    except ValueError as e:
        return _report_invalid(ValueError(f"invalid environment setting: {e}"))
    setup_logging(args.log_level or app_config.log_level, app_config.log_format)

    if args.command == "reproduce-paper":
        outdir = args.out if args.out is not None else app_config.output_dir
        backend = args.backend if args.backend is not None else app_config.reference_backend
        export_digits = args.export_digits if args.export_digits is not None else app_config.export_digits
        return _guarded(lambda: run_reproduce(outdir, backend, export_digits))

    try:
        config = build_run_config(args)
    except (ValidationError, ValueError) as e:
        return _report_invalid(e)

    if args.dump_config is not None:
        try:
            args.dump_config.write_text(config.model_dump_json(indent=2) + "\n", encoding="utf-8")
        except OSError as e:
            print(f"error: cannot write config dump: {e}", file=sys.stderr)
            return EXIT_FAILURE

    if args.command == "simulate":
        return _guarded(lambda: run_simulate(config))
    return _guarded(lambda: run_audit(config))


def cli_main() -> None:
    """CLI entry point."""
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        print("\nInterrupted by user", file=sys.stderr)
        sys.exit(EXIT_FAILURE)


if __name__ == "__main__":
    cli_main()
