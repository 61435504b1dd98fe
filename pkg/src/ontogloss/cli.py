"""Command-line interface: every capability of the service without the UI.

Exit codes: 0 on success, 1 when diagnostics or lookup errors occur, 2 on
I/O errors.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .diagram import ElementNotFoundError
from .model import OntologyError
from .service import LoadError, Workbench, sentence_to_dict


def _read_file(path: str) -> str:
    try:
        return Path(path).read_text("utf-8")
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)


def _load_workbench(file: str, lexicon: str | None) -> Workbench:
    bench = Workbench()
    overrides = _read_file(lexicon) if lexicon else ""
    try:
        summary = bench.load(_read_file(file), overrides)
    except LoadError as exc:
        for d in exc.diagnostics:
            click.echo(str(d), err=True)
        if not exc.diagnostics:
            click.echo(str(exc), err=True)
        sys.exit(1)
    for d in summary["diagnostics"]:
        click.echo(d, err=True)
    return bench


@click.group()
def main() -> None:
    """Ontology diagrams that explain themselves in controlled English."""


@main.command()
@click.argument("file", type=click.Path())
@click.option("--lexicon", type=click.Path(), default=None, help="Lexicon override file (.lex).")
def parse(file: str, lexicon: str | None) -> None:
    """Parse FILE and report a summary of the loaded session."""
    bench = _load_workbench(file, lexicon)
    state = bench.state
    assert state is not None
    summary = {
        "entities": len(state.ontology.declarations),
        "axioms": len(state.ontology.axioms),
        "elements": len(state.diagram.elements),
        "inferred": len(state.inferred),
    }
    click.echo(json.dumps(summary, indent=2))


@main.command()
@click.argument("file", type=click.Path())
@click.option("--lexicon", type=click.Path(), default=None)
def diagram(file: str, lexicon: str | None) -> None:
    """Emit the diagram JSON for FILE."""
    bench = _load_workbench(file, lexicon)
    click.echo(json.dumps(bench.diagram_dict(), indent=2))


@main.command()
@click.argument("file", type=click.Path())
@click.option("--entity", required=True, help="Entity name or diagram element id.")
@click.option("--scope", type=click.Choice(["direct", "referencing", "inferred"]), default="direct")
@click.option("--direct-reading", is_flag=True, help="Also print the unparaphrased reading of 'only' restrictions.")
@click.option("--json", "as_json", is_flag=True, help="Emit sentences as JSON.")
@click.option("--lexicon", type=click.Path(), default=None)
def verbalize(file: str, entity: str, scope: str, direct_reading: bool, as_json: bool, lexicon: str | None) -> None:
    """Verbalize the diagram element for ENTITY."""
    bench = _load_workbench(file, lexicon)
    try:
        element = bench.resolve_element(entity)
        sentences = bench.verbalize_element(element, scope, direct_reading)
    except (ElementNotFoundError, OntologyError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    if as_json:
        click.echo(json.dumps({"element": element, "sentences": [sentence_to_dict(s) for s in sentences]}, indent=2))
    else:
        for s in sentences:
            marker = " [inferred]" if s.inferred else ""
            click.echo(f"{s.text}{marker}")


@main.command()
@click.argument("file", type=click.Path())
@click.option("--lexicon", type=click.Path(), default=None)
def dictionary(file: str, lexicon: str | None) -> None:
    """Print the entity-grouped dictionary export for FILE."""
    bench = _load_workbench(file, lexicon)
    click.echo(bench.dictionary_text())


@main.command()
@click.argument("file", type=click.Path())
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--lexicon", type=click.Path(), default=None)
def serve(file: str, port: int, host: str, lexicon: str | None) -> None:
    """Serve FILE over the HTTP API."""
    import uvicorn

    from .service import create_app

    bench = _load_workbench(file, lexicon)
    uvicorn.run(create_app(bench), host=host, port=port)


if __name__ == "__main__":
    main()
