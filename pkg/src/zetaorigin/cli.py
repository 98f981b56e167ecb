"""Command line interface.

    zetaorigin table cir --max-r 7 --format markdown
    zetaorigin check --profile full --format json
    zetaorigin eval 1 1 1
    zetaorigin eval 1 2 --a 1/2,1/3
    zetaorigin series xoverlog --order 5

Data goes to stdout, diagnostics to stderr. Exit status: 0 on success or
when every check passes, 1 when a check fails, 2 on usage or domain errors.
"""

from __future__ import annotations

import csv
import io
import json
import sys

import click

from .asymptotic import EpsilonVector, main_term, main_term_hurwitz
from .errors import DomainError, ParameterError
from .exact import Poly, format_rational, parse_rational
from .gregory import classical_gregory, g1_series2, gregory_series2, gtilde_series2, lambda_polys
from .series import MAX_ORDER, log1p
from .tables import TABLES, build_table, format_value, render, value_json
from .verify import iter_all

__all__ = ["main"]

FORMAT = click.Choice(["json", "csv", "markdown"])
SERIES_NAMES = ("log1p", "xoverlog", "G", "Gtilde", "G1", "Gpoly", "L")
SERIES_LIMIT = 16


def _fail(msg: str) -> None:
    click.echo(f"error: {msg}", err=True)
    sys.exit(2)


@click.group()
def main():
    """Asymptotic coefficients of multiple zeta functions at the origin, in exact arithmetic."""


@main.command("table")
@click.argument("name", type=click.Choice(list(TABLES)))
@click.option("--max-r", type=int, default=None, help="Largest depth r (cir, cira).")
@click.option("--order", type=int, default=None, help="Largest index (other tables).")
@click.option("--format", "fmt", type=FORMAT, default="markdown", show_default=True)
def table_cmd(name, max_r, order, fmt):
    """Print one of the coefficient tables."""
    spec = TABLES[name]
    bound = max_r if spec.uses_r else order
    other = order if spec.uses_r else max_r
    if other is not None:
        _fail(f"table {name!r} takes {'--max-r' if spec.uses_r else '--order'}, not "
              f"{'--order' if spec.uses_r else '--max-r'}")
    try:
        click.echo(render(build_table(name, bound), fmt), nl=False)
    except ParameterError as exc:
        _fail(str(exc))


@main.command("check")
@click.option("--profile", type=click.Choice(["quick", "full"]), default="quick", show_default=True)
@click.option("--format", "fmt", type=FORMAT, default="markdown", show_default=True)
def check_cmd(profile, fmt):
    """Run every registered identity check; exit 1 if any fails."""
    all_ok = True
    if fmt == "csv":
        click.echo("check_id,status,range,counterexample")
    elif fmt == "markdown":
        click.echo("| check | passed | range | counterexample |")
        click.echo("|---|---|---|---|")
    for rep in iter_all(profile):
        all_ok &= rep.passed
        if fmt == "json":
            line = {k: v for k, v in rep.to_json().items() if k != "elapsed"}
            click.echo(json.dumps(line, sort_keys=True))
        elif fmt == "csv":
            cex = json.dumps(rep.counterexample, sort_keys=True) if rep.counterexample else ""
            buf = io.StringIO()
            csv.writer(buf, lineterminator="\n").writerow(
                [rep.check_id, "pass" if rep.passed else "FAIL", json.dumps(rep.range, sort_keys=True), cex])
            click.echo(buf.getvalue(), nl=False)
        else:
            cex = json.dumps(rep.counterexample, sort_keys=True) if rep.counterexample else ""
            click.echo(f"| {rep.check_id} | {'yes' if rep.passed else 'NO'} | "
                       f"{json.dumps(rep.range, sort_keys=True)} | {cex} |")
        sys.stdout.flush()
    if not all_ok:
        click.echo("some checks failed", err=True)
        sys.exit(1)


def _parse_list(items) -> tuple:
    try:
        return tuple(parse_rational(s) for s in items)
    except (ValueError, ZeroDivisionError) as exc:
        _fail(str(exc))


@main.command("eval", context_settings={"ignore_unknown_options": True})
@click.argument("eps", nargs=-1, required=True)
@click.option("--a", "a_text", default=None, help="Comma-separated shifts a_1,...,a_r (Hurwitz variant).")
@click.option("--format", "fmt", type=FORMAT, default="markdown", show_default=True)
def eval_cmd(eps, a_text, fmt):
    """Main term at the origin for rational EPS (not the value of zeta)."""
    eps_vals = _parse_list(eps)
    a_vals = _parse_list(a_text.split(",")) if a_text else None
    try:
        vec = EpsilonVector(eps_vals)
        value = main_term(vec) if a_vals is None else main_term_hurwitz(vec, a_vals)
    except (DomainError, ParameterError) as exc:
        _fail(str(exc))
    text = format_rational(value)
    if fmt == "json":
        out = {"eps": [format_rational(e) for e in eps_vals], "main_term": text}
        if a_vals is not None:
            out["a"] = [format_rational(x) for x in a_vals]
        click.echo(json.dumps(out))
    elif fmt == "csv":
        click.echo("main_term")
        click.echo(text)
    else:
        click.echo(text)


def _series_rows(name: str, order: int) -> tuple[list, bool]:
    """Coefficient list (univariate) or matrix (bivariate)."""
    if name == "log1p":
        return list(log1p(order).coeffs), False
    if name == "xoverlog":
        return classical_gregory(order), False
    if name == "L":
        return [Poly((), "a")] + lambda_polys(order), False
    if name == "G":
        S = gregory_series2(2 * order)
    elif name == "Gpoly":
        S = gregory_series2(2 * order, poly=True)
    elif name == "G1":
        S = g1_series2(2 * order)
    else:
        S = gtilde_series2(2 * order)
    return S.to_matrix(order, order), True


@main.command("series")
@click.argument("name", type=click.Choice(SERIES_NAMES))
@click.option("--order", type=int, default=6, show_default=True)
@click.option("--format", "fmt", type=FORMAT, default="markdown", show_default=True)
def series_cmd(name, order, fmt):
    """Dump generating-series coefficients, low degree first.

    Bivariate series (G, Gtilde, G1, Gpoly) print the matrix of x^m y^n
    coefficients for m, n <= ORDER; Gtilde is sum Gt_{m,n+1} x^m y^n.
    """
    if not 0 <= order <= min(SERIES_LIMIT, MAX_ORDER):
        _fail(f"order {order} outside 0..{SERIES_LIMIT}")
    if name == "L" and order < 1:
        _fail("L needs order >= 1")
    data, bivariate = _series_rows(name, order)
    if fmt == "json":
        coeffs = [[value_json(v) for v in row] for row in data] if bivariate else [value_json(v) for v in data]
        click.echo(json.dumps({"series": name, "order": order, "bivariate": bivariate, "coefficients": coeffs}))
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if bivariate:
            w.writerow(["m\\n"] + list(range(order + 1)))
            for m, row in enumerate(data):
                w.writerow([m] + [format_value(v) for v in row])
        else:
            w.writerow(["k", "coefficient"])
            for k, v in enumerate(data):
                w.writerow([k, format_value(v)])
        click.echo(buf.getvalue(), nl=False)
    else:
        if bivariate:
            click.echo("| m \\ n | " + " | ".join(str(n) for n in range(order + 1)) + " |")
            click.echo("|" + "---|" * (order + 2))
            for m, row in enumerate(data):
                click.echo(f"| {m} | " + " | ".join(format_value(v) for v in row) + " |")
        else:
            click.echo(", ".join(format_value(v) for v in data))


if __name__ == "__main__":
    main()
