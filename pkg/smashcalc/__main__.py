import argparse
import json
import logging
import sys
from typing import List, Optional

from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from .core.config import DEFAULT_MAX_DEGREE, DEFAULT_TRUNCATION, LOG_FILE, LOG_FORMAT, LOG_LEVEL
from .tasks import (
    FAIL,
    INVALID,
    PASS,
    TaskError,
    TaskReport,
    TaskSettings,
    Workspace,
    WorkspaceError,
    get_task_registry,
    reports_to_json,
    run_tasks,
)
from .tasks import config as task_config

console = Console(highlight=False)

_STATUS_STYLE = {PASS: "bold green", FAIL: "bold red", INVALID: "bold yellow"}


def configure_logging(debug: bool = False) -> None:
    logging.basicConfig(
        level=logging.DEBUG if debug else getattr(logging, LOG_LEVEL.upper(), logging.INFO),
        format=LOG_FORMAT,
        handlers=[
            logging.StreamHandler(),
            logging.FileHandler(LOG_FILE)
        ]
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="smashcalc",
                                     description="Exact checks of Hopf smash products, Calabi-Yau conditions and CY completions")
    parser.add_argument('-w', '--workspace', type=str, required=True,
                        help='Workspace file to load')
    parser.add_argument('-t', '--task', action='append', default=[],
                        help='Task to run (repeatable; all tasks when omitted)')
    parser.add_argument('--field', type=str, default=None,
                        help='Ground field, "Q" or "Fp:<prime>"; overrides the workspace header')
    parser.add_argument('--truncation', type=int, default=DEFAULT_TRUNCATION,
                        help='Default truncation degree for tensor and polynomial algebras')
    parser.add_argument('--max-degree', type=int, default=DEFAULT_MAX_DEGREE,
                        help='Default top degree for Ext computations')
    parser.add_argument('--bound', type=int, default=None,
                        help='Default search bound for twisted periodicity')
    parser.add_argument('-f', '--format', type=str, choices=task_config.REPORT_FORMATS,
                        default=task_config.REPORT_FORMAT, help='Report format (text or json)')
    parser.add_argument('--parallel', action='store_true',
                        help='Run independent tasks on a thread pool')
    parser.add_argument('--workers', type=int, default=None,
                        help='Thread pool size for --parallel')
    parser.add_argument('--list', action='store_true',
                        help='List the tasks of the workspace and the known task kinds, then exit')
    parser.add_argument('-d', '--debug', action='store_true',
                        help='Enable debug logging')
    return parser


def display_task_list(workspace: Workspace) -> None:
    registry = get_task_registry()
    descriptions = registry.get_task_descriptions()
    table = Table(title=f"Tasks in {workspace.source or 'workspace'} over {workspace.field.name}")
    table.add_column("Task", style="cyan")
    table.add_column("Kind", style="magenta")
    table.add_column("Description")
    for spec in workspace.tasks:
        table.add_row(spec.name, spec.kind, descriptions.get(spec.kind, ""))
    console.print(table)


def display_reports(reports: List[TaskReport]) -> None:
    table = Table(title="smashcalc results")
    table.add_column("Task", style="cyan")
    table.add_column("Kind", style="magenta")
    table.add_column("Status")
    table.add_column("Checks", justify="right")
    table.add_column("Failed", justify="right")
    for report in reports:
        total = len(report.checks.checks) if report.checks is not None else 0
        table.add_row(report.task, report.kind, Text(report.status, style=_STATUS_STYLE[report.status]),
                      str(total), str(len(report.failures())))
    console.print(table)
    for report in reports:
        console.print(Panel(Text(report.render_text()), title=report.task,
                            border_style=_STATUS_STYLE[report.status].split()[-1]))


def exit_code(reports: List[TaskReport]) -> int:
    """2 if any task had bad input, 1 if any assertion failed, 0 otherwise."""
    if any(r.status == INVALID for r in reports):
        return task_config.EXIT_INPUT_ERROR
    if any(r.status == FAIL for r in reports):
        return task_config.EXIT_FAIL
    return task_config.EXIT_PASS


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point with command line argument support."""
    args = build_parser().parse_args(argv)
    configure_logging(args.debug)
    logger = logging.getLogger("smashcalc")

    try:
        workspace = Workspace.from_path(args.workspace, field=args.field)
    except WorkspaceError as e:
        if args.format == "json":
            console.out(_error_json(e), highlight=False)
        else:
            console.print(f"\n[bold red]Invalid workspace {args.workspace}[/bold red]")
            for position, message in e.entries:
                console.print(Text(f"  {position}: {message}"))
        return task_config.EXIT_INPUT_ERROR

    if args.list:
        display_task_list(workspace)
        return task_config.EXIT_PASS

    settings = TaskSettings(truncation=args.truncation, max_degree=args.max_degree, bound=args.bound)
    try:
        reports = run_tasks(workspace, args.task, settings, parallel=args.parallel, workers=args.workers)
    except TaskError as e:
        console.print(Text(f"Error: {e}", style="bold red"))
        return task_config.EXIT_INPUT_ERROR
    except Exception as e:
        logger.error(f"Fatal error: {e}", exc_info=True)
        console.print(Text(f"Fatal error: {e}", style="bold red"))
        return task_config.EXIT_FAIL

    if args.format == "json":
        console.out(reports_to_json(reports), highlight=False)
    else:
        display_reports(reports)
    return exit_code(reports)


def _error_json(error: WorkspaceError) -> str:
    payload = {"status": INVALID, "errors": [{"position": p, "message": m} for p, m in error.entries]}
    return json.dumps(payload, sort_keys=True, ensure_ascii=False, indent=task_config.JSON_INDENT)


if __name__ == "__main__":
    sys.exit(main())
