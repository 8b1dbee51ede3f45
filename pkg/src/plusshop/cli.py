"""Operator command line.

Subcommands mirror the four menu areas of the shop: run the service,
import the legacy ledger, print reports, snapshot the journal, seed the
demo scenario. Reports go to stdout (golden-file friendly); diagnostics to
stderr. Exit codes: 2 malformed input, 3 rejected by a business guard,
4 storage trouble.
"""

from __future__ import annotations

import datetime as dt
import json
import sys

import click

from . import __version__
from .config import load_config
from .dates import parse_iso_date
from .errors import (
    CorruptJournal,
    ImportParseError,
    InvalidRange,
    MalformedCode,
    ShopError,
    StorageFailure,
    ValidationError,
)
from .importer import import_legacy
from .reports import (
    inventory_report,
    render_inventory_text,
    render_sales_text,
    render_service_text,
    sales_report,
    service_report,
)
from .seed import seed_demo
from .store import LedgerStore

EXIT_PARSE = 2
EXIT_GUARD = 3
EXIT_STORAGE = 4

_PARSE_ERRORS = (ImportParseError, MalformedCode, ValidationError, InvalidRange)
_STORAGE_ERRORS = (StorageFailure, CorruptJournal)


def _exit_code(exc: ShopError) -> int:
    if isinstance(exc, _STORAGE_ERRORS):
        return EXIT_STORAGE
    if isinstance(exc, _PARSE_ERRORS):
        return EXIT_PARSE
    return EXIT_GUARD


def _fail(exc: ShopError) -> None:
    click.echo(f"ERROR {exc.code}: {exc.message}", err=True)
    sys.exit(_exit_code(exc))


def _open_store(ctx: click.Context) -> LedgerStore:
    cfg = ctx.obj
    try:
        return LedgerStore(cfg.journal_path, cfg)
    except ShopError as exc:
        _fail(exc)


@click.group()
@click.option("--config", "config_path", type=click.Path(), default=None,
              help="YAML config file (default: $PLUSSHOP_CONFIG).")
@click.option("--journal", "journal_path", type=click.Path(), default=None,
              help="Journal file (overrides config and $PLUSSHOP_JOURNAL).")
@click.version_option(version=__version__)
@click.pass_context
def main(ctx: click.Context, config_path: str | None, journal_path: str | None):
    """Sales and computer-repair shop management."""
    try:
        cfg = load_config(config_path)
    except (ShopError, OSError) as exc:
        click.echo(f"ERROR CONFIG: {exc}", err=True)
        sys.exit(EXIT_PARSE)
    if journal_path:
        from pathlib import Path

        cfg.journal_path = Path(journal_path)
    ctx.obj = cfg


@main.command()
@click.option("--host", default=None, help="Listen address (default from config).")
@click.option("--port", type=int, default=None, help="Listen port (default from config).")
@click.pass_context
def serve(ctx: click.Context, host: str | None, port: int | None):
    """Run the HTTP service."""
    import uvicorn

    from .api import create_app

    cfg = ctx.obj
    store = _open_store(ctx)
    app = create_app(store, cfg)
    uvicorn.run(app, host=host or cfg.host, port=port or cfg.port, log_level="info")


@main.command("import")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.pass_context
def import_cmd(ctx: click.Context, file: str):
    """Import a legacy ledger file (all-or-nothing)."""
    store = _open_store(ctx)
    try:
        count = import_legacy(store, file)
    except ShopError as exc:
        _fail(exc)
    finally:
        store.close()
    click.echo(f"{count} events")


@main.group()
def report():
    """Print a report to stdout."""


@report.command("sales")
@click.option("--from", "date_from", required=True, help="Start date (YYYY-MM-DD).")
@click.option("--to", "date_to", required=True, help="End date (YYYY-MM-DD), inclusive.")
@click.option("--json", "as_json", is_flag=True, help="Structured output instead of text.")
@click.pass_context
def report_sales(ctx: click.Context, date_from: str, date_to: str, as_json: bool):
    """Sales report over a date range."""
    cfg = ctx.obj
    store = _open_store(ctx)
    try:
        rpt = store.read(
            lambda s: sales_report(s, parse_iso_date(date_from), parse_iso_date(date_to))
        )
    except ShopError as exc:
        _fail(exc)
    finally:
        store.close()
    if as_json:
        click.echo(json.dumps(rpt.to_dict(), ensure_ascii=False))
    else:
        click.echo(render_sales_text(rpt, city=cfg.city), nl=False)


@report.command("service")
@click.argument("code")
@click.option("--json", "as_json", is_flag=True, help="Structured output instead of text.")
@click.pass_context
def report_service(ctx: click.Context, code: str, as_json: bool):
    """Service report for one work order."""
    cfg = ctx.obj
    store = _open_store(ctx)
    try:
        rpt = store.read(lambda s: service_report(s, code))
    except ShopError as exc:
        _fail(exc)
    finally:
        store.close()
    if as_json:
        click.echo(json.dumps(rpt.to_dict(), ensure_ascii=False))
    else:
        click.echo(render_service_text(rpt, letterhead=cfg.letterhead), nl=False)


@report.command("inventory")
@click.option("--json", "as_json", is_flag=True, help="Structured output instead of text.")
@click.pass_context
def report_inventory(ctx: click.Context, as_json: bool):
    """Stock listing for all catalog items."""
    store = _open_store(ctx)
    try:
        rows = store.read(inventory_report)
    finally:
        store.close()
    if as_json:
        click.echo(json.dumps([row.to_dict() for row in rows], ensure_ascii=False))
    else:
        click.echo(render_inventory_text(rows), nl=False)


@main.command()
@click.pass_context
def snapshot(ctx: click.Context):
    """Write a state snapshot next to the journal."""
    store = _open_store(ctx)
    try:
        path = store.write_snapshot()
    except ShopError as exc:
        _fail(exc)
    finally:
        store.close()
    click.echo(str(path))


@main.command("seed-demo")
@click.option("--at", "at_text", default=None,
              help="Pin all event timestamps (ISO, e.g. 2008-08-05T08:00:00+07:00).")
@click.pass_context
def seed_demo_cmd(ctx: click.Context, at_text: str | None):
    """Load the demo scenario (suppliers, technicians, catalog, sales, one intake)."""
    at = None
    if at_text is not None:
        try:
            at = dt.datetime.fromisoformat(at_text)
        except ValueError:
            click.echo(f"ERROR VALIDATION_ERROR: bad timestamp {at_text!r}", err=True)
            sys.exit(EXIT_PARSE)
    store = _open_store(ctx)
    try:
        summary = seed_demo(store, at=at)
    except ShopError as exc:
        _fail(exc)
    finally:
        store.close()
    click.echo(json.dumps(summary, ensure_ascii=False))


if __name__ == "__main__":
    main()
