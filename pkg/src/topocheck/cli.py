"""Command line interface.

Exit codes: 0 success, 1 assertion or check failure, 2 parse error,
3 invalid topology, 4 size limit.
"""

from __future__ import annotations

import functools
import sys

import click

from . import setclasses as sc
from .core import EXHAUSTIVE_LIMIT, interior, closure, kernel, product, sum_spaces
from .enumeration import count_spaces
from .errors import TopoError, UnknownLabel
from .query import check_identifiers, evaluate, identifiers, parse_query
from .report import all_passed
from .search import QUESTS, search
from .spacedoc import load_space, parse_labels, render_space, space_to_doc
from .spaceprops import PREDICATES
from .tailspace import TailSet, tail_classify, tail_closure, tail_interior
from .verify import verify_suite


def _flag(value) -> str:
    return "true" if value else "false"


def handle_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except TopoError as exc:
            click.echo(f"ERROR {type(exc).__name__}: {exc}", err=True)
            sys.exit(exc.exit_code)

    return wrapper


def _load(path, complete=False):
    try:
        return load_space(path, complete=complete)
    except OSError as exc:
        raise click.FileError(path, str(exc)) from None


def _subset(sp, text):
    pts = []
    for label in parse_labels(text):
        try:
            pts.append(sp.index(label))
        except KeyError:
            raise UnknownLabel(f"unknown label {label!r} in --set") from None
    return sp.pointset(pts)


@click.group()
def main():
    """Finite topological spaces: classify, check, construct, search, verify."""


@main.command()
@click.argument("file", type=click.Path(dir_okay=False))
@click.option("--set", "set_text", default="", help="Comma-separated point labels.")
@click.option("--complete", is_flag=True, help="Treat the opens as a subbasis.")
@handle_errors
def classify(file, set_text, complete):
    """Print every subset class flag of a set."""
    sp = _load(file, complete)
    A = _subset(sp, set_text)
    ops = [("interior", interior), ("closure", closure), ("kernel", kernel)]
    if sp.n <= EXHAUSTIVE_LIMIT:
        report = sc.classify(sp, A)
        ops += [
            ("semi_interior", sc.semi_interior),
            ("semi_closure", sc.semi_closure),
            ("semi_kernel", sc.semi_kernel),
        ]
    else:
        report = sc.classify_basic(sp, A)
    click.echo(f"SET {sp.format_set(A)}")
    for name, fn in ops:
        click.echo(f"OP {name} = {sp.format_set(fn(sp, A))}")
    for name, value in report.items():
        if value is not None:
            click.echo(f"CLASS {name} = {_flag(value)}")


@main.command()
@click.argument("file", type=click.Path(dir_okay=False))
@click.option("--query", "query_text", required=True)
@click.option("--assert", "must_hold", is_flag=True, help="Exit 1 when the query is false.")
@click.option("--complete", is_flag=True)
@handle_errors
def check(file, query_text, must_hold, complete):
    """Evaluate a predicate query on a space."""
    expr = parse_query(query_text)
    check_identifiers(expr, PREDICATES)
    sp = _load(file, complete)
    for name in sorted(identifiers(expr)):
        click.echo(f"PROP {name} = {_flag(PREDICATES[name](sp))}")
    value = evaluate(expr, sp, PREDICATES)
    click.echo(f"PROP query = {_flag(value)}")
    if must_hold and not value:
        sys.exit(1)


def _construct(files, build, joiner):
    spaces = [_load(f) for f in files]
    result, _ = build(spaces)
    name = joiner.join(sp._cache.get("name", "X") for sp in spaces)
    click.echo(render_space(space_to_doc(result, name)), nl=False)


@main.command("product")
@click.argument("files", nargs=-1, required=True, type=click.Path(dir_okay=False))
@handle_errors
def product_cmd(files):
    """Print the product of the given spaces as a space document."""
    _construct(files, product, "_x_")


@main.command("sum")
@click.argument("files", nargs=-1, required=True, type=click.Path(dir_okay=False))
@handle_errors
def sum_cmd(files):
    """Print the topological sum of the given spaces as a space document."""
    _construct(files, sum_spaces, "_plus_")


@main.command("search")
@click.option("--n", "n_max", type=int, required=True, help="Largest carrier size.")
@click.option("--query", "query_text")
@click.option("--quest", type=click.Choice(sorted(QUESTS)))
@click.option("--limit", type=int)
@handle_errors
def search_cmd(n_max, query_text, quest, limit):
    """List witnesses in enumeration order."""
    if (query_text is None) == (quest is None):
        raise click.UsageError("give exactly one of --query or --quest")
    witnesses = search(n_max, query_text, quest=quest, limit=limit)
    for w in witnesses:
        click.echo(w.render())
    click.echo(f"COUNT {len(witnesses)}")


@main.command("verify")
@click.option(
    "--suite",
    type=click.Choice(["all", "e1", "r1", "lemmas", "maps", "products"]),
    default="all",
    show_default=True,
)
@click.option("--workers", type=int, help="Worker processes (default TOPOCHECK_WORKERS).")
@handle_errors
def verify_cmd(suite, workers):
    """Run verification suites; exit 1 if any check fails."""
    results = verify_suite(suite, workers=workers)
    for r in results:
        click.echo(r.render())
    if not all_passed(results):
        sys.exit(1)


@main.command("count")
@click.option("--n", "n", type=int, required=True)
@click.option("--oracle", is_flag=True, help="Use the brute-force family oracle (n <= 4).")
@handle_errors
def count_cmd(n, oracle):
    """Count labeled topologies on n points."""
    click.echo(f"COUNT {count_spaces(n, oracle=oracle)}")


@main.command("tailset")
@click.option("--set", "set_text", required=True, help="Tail-set text, e.g. '1,4;t=7'.")
@handle_errors
def tailset_cmd(set_text):
    """Classify a subset of the tail topology on the positive integers."""
    A = TailSet.parse(set_text)
    click.echo(f"SET {A}")
    click.echo(f"OP interior = {tail_interior(A)}")
    click.echo(f"OP closure = {tail_closure(A)}")
    for name, value in vars(tail_classify(A)).items():
        if value is not None:
            click.echo(f"CLASS {name} = {_flag(value)}")


if __name__ == "__main__":
    main()
