#!/usr/bin/env python3


import functools
import logging
import sys
import traceback
from fractions import Fraction
from typing import Optional

import click

import swde
from swde import SWDE
from swde.config import MIN_TRUNCATION, SWDEConfig
from swde.errors import AnalysisError, InputError
from swde.regression import regression_suite
from swde.utils import global_logging, serialize

swde_client: Optional[SWDE] = None


class ExceptionProcesser(click.Group):
    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except InputError as e:
            raise click.UsageError(str(e), ctx)
        except AnalysisError as e:
            raise click.ClickException(str(e))

    def __call__(self, *args, **kwargs):
        try:
            return self.main(*args, **kwargs)
        except Exception as e:
            logging.error(e)
            traceback.print_exc()
            logging.info("# Analysis failed! See the log output for details")
            sys.exit(1)


def common_params(func):
    @click.option("--json/--no-json", "as_json", default=False, help="Print a JSON report.")
    @click.option("--verbose/--no-verbose", default=False, help="Verbose output.")
    @click.option("--output-file", default=None, help="Output filename for logging.")
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        return func(*args, **kwargs)

    return wrapper


def parse_common_params(
    verbose: bool, output_file: Optional[str], overrides: Optional[dict] = None
) -> SWDE:
    global swde_client
    global_logging(verbose)
    swde_client = swde.SWDE(verbose, output_file, SWDEConfig(overrides))
    return swde_client


def emit(client: SWDE, obj, as_json: bool, text: str):
    if as_json:
        click.echo(serialize(obj, indent=client.config.json_indent()))
    else:
        click.echo(text)


def parse_point(ctx, param, value) -> Fraction:
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise click.BadParameter(f"expected a rational number p/q, got {value!r}")


def format_reduce(report: dict) -> str:
    lines = [
        f"equation: {report['input']}",
        f"class: {report['qclass']['tag']}",
        f"verdict: {report['verdict']['outcome']}",
    ]
    if report["verdict"]["template"]:
        lines.append(f"template: {report['verdict']['template']}")
    lines.append(f"mobius: {report['verdict']['mobius']['map']}")
    for diagnostic in report["diagnostics"]:
        lines.append(f"note: {diagnostic}")
    return "\n".join(lines)


@click.group(cls=ExceptionProcesser)
def cli():
    pass


@cli.command()
@click.argument("expression", type=str)
@common_params
def schwarzian(expression, as_json, verbose, output_file):
    """
        Print S(f, z) of a rational function f of z.
    """
    client = parse_common_params(verbose, output_file)
    result = client.schwarzian(expression)
    emit(client, {"input": expression, "schwarzian": result.render()}, as_json, result.render())


@cli.command()
@click.argument("equation", type=str)
@common_params
def classify(equation, as_json, verbose, output_file):
    """
        Print the denominator form of an equation S(f)^m = P/Q.
    """
    client = parse_common_params(verbose, output_file)
    report = client.classify_report(equation)
    qclass = report["qclass"]
    text = qclass["tag"]
    if qclass["params"]:
        text += " " + ", ".join(f"{k} = {v}" for k, v in sorted(qclass["params"].items()))
    if qclass["alternates"]:
        text += f" (also {', '.join(qclass['alternates'])})"
    emit(client, report, as_json, text)


@cli.command()
@click.argument("equation", type=str)
@common_params
def reduce(equation, as_json, verbose, output_file):
    """
        Classify the equation and print the reduction verdict with certificates.
    """
    client = parse_common_params(verbose, output_file)
    report = client.reduce_report(equation)
    emit(client, report, as_json, format_reduce(report))


@cli.command()
@click.argument("equation", type=str)
@click.option(
    "--candidate",
    required=True,
    type=str,
    help="exp:k, tan:k, mobius-exp:k:a:b:c:d, mobius-tan:k:a:b:c:d or rational:EXPR.",
)
@click.option("--at", default="0", callback=parse_point, help="Expansion point p/q.")
@click.option("--trunc", default=None, type=int, help="Number of series coefficients.")
@common_params
def verify(equation, candidate, at, trunc, as_json, verbose, output_file):
    """
        Substitute a closed-form candidate into the equation at a point.
        Exits with 1 when the residual does not vanish.
    """
    if trunc is not None and trunc < MIN_TRUNCATION:
        raise click.BadParameter(
            f"truncation must be at least {MIN_TRUNCATION}", param_hint="--trunc"
        )
    client = parse_common_params(verbose, output_file, {"series.truncation": trunc})
    result = client.verify(equation, candidate, at)
    text = "\n".join(
        [
            f"residual: {result.residual.render()}",
            f"verified: {'yes' if result.verified else 'no'}",
        ]
        + [f"note: {flag}" for flag in result.flags]
    )
    emit(client, result, as_json, text)
    sys.exit(0 if result.verified else 1)


@cli.command()
@click.argument("corpus", type=click.Path(exists=True, dir_okay=False, readable=True))
@click.option("--workers", default=None, type=int, help="Number of concurrent workers.")
@common_params
def batch(corpus, workers, as_json, verbose, output_file):
    """
        Reduce every equation of a corpus file; output keeps the file order.
    """
    client = parse_common_params(verbose, output_file, {"batch.workers": workers})
    reports = client.batch(corpus)
    if as_json:
        click.echo(serialize(reports, indent=client.config.json_indent()))
    else:
        for report in reports:
            if "error" in report:
                click.echo(f"{report['input']}\terror: {report['error']}")
            else:
                click.echo(
                    f"{report['input']}\t{report['qclass']['tag']}\t{report['verdict']['outcome']}"
                )
    sys.exit(1 if any("error" in report for report in reports) else 0)


@cli.command()
@click.option("--filter", "name_filter", default=None, type=str, help="Run matching tests only.")
@click.option("--verbose/--no-verbose", default=False, help="Verbose output.")
@click.option("--output-file", default=None, help="Output filename for logging.")
def selftest(name_filter, verbose, output_file):
    """
        Run the embedded golden suite concurrently.
    """
    client = parse_common_params(verbose, output_file)
    failed = regression_suite(client, name_filter)
    sys.exit(1 if failed else 0)


if __name__ == "__main__":
    cli()
