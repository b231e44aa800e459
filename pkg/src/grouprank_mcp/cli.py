"""Command line interface for GroupRank.

Every command prints exactly one JSON document on stdout (or Markdown with
--pretty) and exits with status 0 on success, 1 otherwise.
"""

# Import built-in modules
import json
import sys
from typing import Any, Callable, Dict, List, Optional

# Import third-party modules
import regex
import typer
from loguru import logger

# Import local modules
from grouprank_mcp.__version__ import __version__
from grouprank_mcp.config import DEFAULT_BUDGET
from grouprank_mcp.errors import ErrorCode
from grouprank_mcp.errors import GroupRankError
from grouprank_mcp.errors import VerificationError
from grouprank_mcp.generator.text_generator import TextGenerator
from grouprank_mcp.log_config import setup_logging
from grouprank_mcp.parser.base_parser import BaseParser
from grouprank_mcp import report as reports

app = typer.Typer(
    add_completion=False,
    no_args_is_help=True,
    help="Betti number, co-rank and rank of finitely presented groups.",
)

SOURCE_HELP = "Presentation file, or '-' for stdin."
INLINE_HELP = "Presentation text given directly instead of a file."
PRETTY_HELP = "Human-readable Markdown instead of JSON."


def _emit(document: Dict[str, Any], pretty: bool):
    if pretty:
        typer.echo(TextGenerator().generate(document), nl=False)
    else:
        typer.echo(json.dumps(document, ensure_ascii=False, indent=2, sort_keys=True))


def _fail(command: str, error: GroupRankError, pretty: bool, extra: Optional[Dict[str, Any]] = None):
    logger.error(f"{command}: {error}")
    document: Dict[str, Any] = {"command": command, "error": error.to_dict()}
    if isinstance(error, VerificationError):
        document["details"] = error.details
    if extra:
        document.update(extra)
    _emit(document, pretty)
    raise typer.Exit(code=1)


def _run(command: str, build: Callable[[], Dict[str, Any]], pretty: bool) -> Dict[str, Any]:
    try:
        document = build()
    except GroupRankError as e:
        _fail(command, e, pretty)
    except Exception as e:  # noqa: BLE001
        _fail(command, GroupRankError(f"{type(e).__name__}: {e}", ErrorCode.UNKNOWN_ERROR), pretty)
    logger.info(f"{command} completed")
    return document


def read_source(source: Optional[str], inline: Optional[str]) -> str:
    """
    Resolve the input text from --inline, a file path, or '-' for stdin.

    Raises:
        GroupRankError: If neither or both are given, or the file is missing.
    """
    if inline is not None and source is not None:
        raise GroupRankError("give either a file path or --inline, not both", ErrorCode.VALIDATION_ERROR)
    if inline is not None:
        return inline
    if source is None:
        raise GroupRankError("no input: give a file path, '-' or --inline", ErrorCode.VALIDATION_ERROR)
    if source == "-":
        return sys.stdin.read()
    return BaseParser.read_file(source)


def parse_int_list(text: Optional[str], what: str) -> Optional[List[int]]:
    if text is None:
        return None
    try:
        return [int(part) for part in regex.split(r"[,\s]+", text.strip()) if part]
    except ValueError as e:
        raise GroupRankError(f"{what} must be a comma separated list of integers, got {text!r}", ErrorCode.VALIDATION_ERROR) from e


def _version_callback(value: bool):
    if value:
        typer.echo(__version__)
        raise typer.Exit()


@app.callback()
def main_callback(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log to stderr."),
    version: bool = typer.Option(False, "--version", callback=_version_callback, is_eager=True, help="Show version."),
):
    """Betti number, co-rank and rank of finitely presented groups."""
    setup_logging(console_level="DEBUG" if verbose else None)


@app.command()
def betti(
    source: Optional[str] = typer.Argument(None, help=SOURCE_HELP),
    inline: Optional[str] = typer.Option(None, "--inline", help=INLINE_HELP),
    pretty: bool = typer.Option(False, "--pretty", help=PRETTY_HELP),
):
    """Betti number, torsion and rank bounds of a presented group."""
    document = _run("betti", lambda: reports.betti_report(read_source(source, inline)), pretty)
    _emit(document, pretty)


@app.command()
def check(
    source: Optional[str] = typer.Argument(None, help=SOURCE_HELP),
    inline: Optional[str] = typer.Option(None, "--inline", help=INLINE_HELP),
    expression: bool = typer.Option(False, "--expression", help="Validate expression syntax instead."),
    pretty: bool = typer.Option(False, "--pretty", help=PRETTY_HELP),
):
    """Validate presentation (or expression) syntax without computing anything."""
    try:
        document = reports.check_report(read_source(source, inline), expression=expression)
    except GroupRankError as e:
        _fail("check", e, pretty, {"valid": False})
    _emit(document, pretty)


@app.command()
def expr(
    expression: str = typer.Argument(..., help="Expression such as 'Z^2 * Z * C(2) * C(2)'."),
    pretty: bool = typer.Option(False, "--pretty", help=PRETTY_HELP),
):
    """Co-rank, Betti number and rank of a group expression."""
    document = _run("expr", lambda: reports.expression_report(expression), pretty)
    _emit(document, pretty)


@app.command()
def realize(
    c: int = typer.Argument(..., help="Co-rank."),
    b: int = typer.Argument(..., help="Betti number."),
    r: int = typer.Argument(..., help="Rank."),
    emit_expression: bool = typer.Option(False, "--emit-expression", help="Include the witness expression."),
    emit_presentation: bool = typer.Option(False, "--emit-presentation", help="Include the witness presentation."),
    verify: bool = typer.Option(False, "--verify", help="Recompute the triple through the calculus and SNF."),
    parts: Optional[str] = typer.Option(None, "--parts", help="Split of b into c positive ranks, e.g. '2,1'."),
    pretty: bool = typer.Option(False, "--pretty", help=PRETTY_HELP),
):
    """Witness group for an admissible (corank, betti, rank) triple."""
    # Neither flag means both.
    if not emit_expression and not emit_presentation:
        emit_expression = emit_presentation = True
    document = _run(
        "realize",
        lambda: reports.realize_report(
            c, b, r,
            parts=parse_int_list(parts, "--parts"),
            emit_expression=emit_expression,
            emit_presentation=emit_presentation,
            verify=verify,
        ),
        pretty,
    )
    _emit(document, pretty)
    if not document["admissible"]:
        raise typer.Exit(code=1)


@app.command()
def oracle(
    source: Optional[str] = typer.Argument(None, help=SOURCE_HELP),
    inline: Optional[str] = typer.Option(None, "--inline", help=INLINE_HELP),
    primes: Optional[str] = typer.Option(None, "--primes", help="Primes separated by commas or spaces, e.g. '2,3,5'."),
    budget: int = typer.Option(DEFAULT_BUDGET, "--budget", min=1, help="Largest number of assignments per prime."),
    verify: bool = typer.Option(False, "--verify", help="Fail unless the oracle agrees with SNF."),
    pretty: bool = typer.Option(False, "--pretty", help=PRETTY_HELP),
):
    """Betti number by counting homomorphisms to cyclic groups of prime order."""
    document = _run(
        "oracle",
        lambda: reports.oracle_report(
            read_source(source, inline),
            primes=parse_int_list(primes, "--primes"),
            budget=budget,
            verify=verify,
        ),
        pretty,
    )
    _emit(document, pretty)


@app.command()
def serve():
    """Start the MCP server on stdio."""
    from grouprank_mcp.server import main as serve_main

    serve_main()


def main() -> None:
    """Console script entry point."""
    app()


if __name__ == "__main__":
    main()
