"""
Command Line Interface Module

This module provides a command-line interface for the catalanff package.
"""

import json
import logging
import os
import sys
from contextlib import contextmanager
from typing import Any, Dict, List, Optional

import click

from .catalan import check_lemma1, check_theorem, counterexample, search
from .config import CONFIG_FILENAME, SEARCH_STRATEGIES, CatalanConfig
from .curve_spec import load_curve
from .exceptions import CatalanError
from .ffield import CurveModel, parse_ring_element
from .polyarith import parse_polynomial
from .results import convert_numpy_types
from .samplers import AVAILABLE_SAMPLERS
from .version import __version__
from .zeta import (
    class_number,
    class_number_table,
    constant_extension_class_number,
    curve_lpolynomial,
    cyclotomic_degree,
)

LEMMA_FAILURE_EXIT = 5


@contextmanager
def _reporting_errors():
    """Turn library errors into a message on stderr and exit code 1."""
    try:
        yield
    except CatalanError as err:
        click.echo(f"Error: {err}", err=True)
        sys.exit(1)


def _config(ctx: click.Context) -> CatalanConfig:
    return ctx.obj["config"]


def _emit(ctx: click.Context, data: Dict[str, Any]) -> None:
    click.echo(json.dumps(convert_numpy_types(data), indent=_config(ctx).json_indent))


def _parse_int_list(text: Optional[str]) -> List[int]:
    if not text:
        return []
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {text!r}")
    if any(v < 1 for v in values):
        raise click.BadParameter("values must be positive")
    return values


curve_option = click.option("--curve", "-c", "curve_text", required=True,
                            help='Curve spec "char=<l>;deg=<a>;e=<e>;f=<polynomial>"')
json_option = click.option("--json", "as_json", is_flag=True, help="Machine-readable output")


@click.group()
@click.version_option(version=__version__)
@click.option("--config", "config_path", default=None, help="YAML or JSON configuration file")
@click.option("--verbose", "-v", count=True, help="Log progress (-vv for debug)")
@click.option("--quiet", "-q", is_flag=True, help="Only log errors")
@click.pass_context
def cli(ctx: click.Context, config_path: Optional[str], verbose: int, quiet: bool):
    """
    catalanff - Catalan's equation over function fields

    Class-number criteria and bounded searches for X^m - Y^n = 1 in the ring
    of integers of a function field over a finite field.
    """
    level = logging.ERROR if quiet else (logging.WARNING, logging.INFO, logging.DEBUG)[min(verbose, 2)]
    logging.basicConfig(level=level, format="%(asctime)s %(name)s %(levelname)s %(message)s")
    ctx.ensure_object(dict)
    with _reporting_errors():
        ctx.obj["config"] = CatalanConfig.from_env(config_path).require_valid()


@cli.command("init-config")
@click.option("--output-dir", "-o", default=".", help="Directory to store configuration file")
@click.pass_context
def init_config(ctx: click.Context, output_dir: str):
    """
    Write the default configuration file.
    """
    os.makedirs(output_dir, exist_ok=True)
    config_path = os.path.join(output_dir, CONFIG_FILENAME)
    with _reporting_errors():
        CatalanConfig().save(config_path)
    click.echo(f"Created configuration file: {config_path}")


@cli.command()
@curve_option
@json_option
@click.pass_context
def lpoly(ctx: click.Context, curve_text: str, as_json: bool):
    """
    Print point counts, the L-polynomial and the class number.
    """
    with _reporting_errors():
        curve = load_curve(curve_text)
        lp = curve_lpolynomial(curve, _config(ctx).point_count_budget)
    data = {"curve": curve.spec_string, **lp.to_dict(), "counts": list(lp.counts)}
    if as_json:
        _emit(ctx, data)
        return
    click.echo(f"curve:  {curve}")
    click.echo(f"genus:  {lp.genus}")
    for k, n_k in enumerate(lp.counts, start=1):
        click.echo(f"N_{k}:    {n_k}")
    click.echo(f"L(t):   {lp}")
    click.echo(f"h:      {class_number(lp)}")


@cli.command()
@curve_option
@click.option("--degrees", default="1", help="Comma-separated constant extension degrees n")
@click.option("--primes", default=None, help="Comma-separated primes p (or 4) for h(F(mu_p))")
@json_option
@click.pass_context
def classnum(ctx: click.Context, curve_text: str, degrees: str, primes: Optional[str],
             as_json: bool):
    """
    Print class numbers of constant field extensions.
    """
    degree_list = _parse_int_list(degrees)
    prime_list = _parse_int_list(primes)
    with _reporting_errors():
        curve = load_curve(curve_text)
        lp = curve_lpolynomial(curve, _config(ctx).point_count_budget)
        h_n = {str(n): h for n, h in class_number_table(lp, degree_list).items()}
        h_mu = {}
        for p in sorted(set(prime_list)):
            d = cyclotomic_degree(curve.q, p)
            h_mu[f"h(F(mu_{p}))"] = {"degree": d, "h": constant_extension_class_number(lp, d)}
    data = {"curve": curve.spec_string, **lp.to_dict(), "h_n": h_n, "h_mu": h_mu}
    if as_json:
        _emit(ctx, data)
        return
    click.echo(f"L(t) = {lp}, h = {class_number(lp)}")
    for n, value in h_n.items():
        click.echo(f"  n = {n:>3}  h_n = {value}")
    for label, entry in h_mu.items():
        click.echo(f"  {label} = {entry['h']}  (degree {entry['degree']})")


@cli.command()
@curve_option
@click.option("-m", "m", type=int, required=True, help="Exponent of X")
@click.option("-n", "n", type=int, required=True, help="Exponent of Y")
@json_option
@click.pass_context
def check(ctx: click.Context, curve_text: str, m: int, n: int, as_json: bool):
    """
    Decide whether the class-number criterion applies.

    Exit code 0: applies; 2: inconclusive; 3: the characteristic divides
    every admissible prime pair.
    """
    with _reporting_errors():
        curve = load_curve(curve_text)
        verdict = check_theorem(curve, m, n, _config(ctx).point_count_budget)
    if as_json:
        _emit(ctx, verdict.to_dict())
    else:
        click.echo(f"status:     {verdict.status.value}")
        click.echo(f"pair:       {verdict.pair}")
        click.echo(f"conditions: {verdict.conditions}")
        for label, value in verdict.h_values.items():
            click.echo(f"{label} = {value}")
    sys.exit(verdict.exit_code)


@cli.command("search")
@curve_option
@click.option("-m", "m", type=int, required=True, help="Exponent of X")
@click.option("-n", "n", type=int, required=True, help="Exponent of Y")
@click.option("--bound", "-B", type=int, required=True, help="Pole-order bound for Y")
@click.option("--rhs", default=None, help="Right-hand side f(Y) for X^m = f(Y), e.g. 'Y^3+2'")
@click.option("--strategy", type=click.Choice(SEARCH_STRATEGIES), default=None,
              help="Root finding: extract m-th roots or enumerate X")
@click.option("--threads", "-t", type=int, default=None, help="Worker processes")
@click.option("--no-sieve", is_flag=True, help="Disable the local m-th power sieve")
@click.option("--no-timing", is_flag=True, help="Emit elapsed_s as null")
@click.option("--output", "-o", default=None, help="Also save the report (base path, no extension)")
@json_option
@click.pass_context
def search_command(ctx: click.Context, curve_text: str, m: int, n: int, bound: int,
                   rhs: Optional[str], strategy: Optional[str], threads: Optional[int],
                   no_sieve: bool, no_timing: bool, output: Optional[str], as_json: bool):
    """
    Search for solutions with bounded pole order.

    Exit code 0 if only constant solutions were found, 4 otherwise.
    """
    config = _config(ctx)
    if no_timing:
        config.config["output"]["timing"] = False
    with _reporting_errors():
        curve = load_curve(curve_text)
        rhs_poly = parse_polynomial(curve.base, rhs, variables=("Y",)) if rhs else None
        report = search(curve, m, n, bound, rhs_poly, config, strategy, threads,
                        False if no_sieve else None)
    if output:
        for fmt, path in report.save(output, ["json", "csv"]).items():
            click.echo(f"Saved {fmt} report to {path}", err=True)
    if as_json:
        _emit(ctx, report.to_dict())
    else:
        click.echo(f"equation:   X^{m} = {report.rhs}  (d(Y) <= {bound})")
        click.echo(f"candidates: {report.candidates_examined}  (sieved out {report.sieved})")
        for sol in report.solutions:
            kind = "constant" if sol.constant else "NON-CONSTANT"
            click.echo(f"  X = {sol.x}, Y = {sol.y}  [{kind}]")
        if report.elapsed is not None:
            click.echo(f"elapsed:    {report.elapsed:.2f} s")
    sys.exit(report.exit_code)


@cli.command("counterexample")
@curve_option
@click.option("-n", "n", type=int, required=True, help="Exponent of Y, prime to the characteristic")
@click.option("--witness", "-z", default=None, help="Non-constant element z (default x, or T)")
@json_option
@click.pass_context
def counterexample_command(ctx: click.Context, curve_text: str, n: int,
                           witness: Optional[str], as_json: bool):
    """
    Build the solution (1 + z^n, z^l) of X^l - Y^n = 1.
    """
    with _reporting_errors():
        curve: CurveModel = load_curve(curve_text)
        z = parse_ring_element(curve, witness) if witness else curve.x()
        x, y = counterexample(curve, n, z)
    ell = curve.base.characteristic
    if as_json:
        _emit(ctx, {"curve": curve.spec_string, "m": ell, "n": n, "z": str(z),
                    "X": str(x), "Y": str(y)})
        return
    click.echo(f"X = {x}")
    click.echo(f"Y = {y}")
    click.echo(f"X^{ell} - Y^{n} = 1 verified")


@cli.command()
@curve_option
@click.option("--sampler", type=click.Choice(sorted(AVAILABLE_SAMPLERS)), default="random",
              help="Pair sampler")
@click.option("--samples", type=int, default=1000, help="Pairs for the random sampler")
@click.option("--seed", type=int, default=0, help="Seed for the random sampler")
@click.option("--bound", "-B", type=int, default=6, help="Largest pole order sampled")
@json_option
@click.pass_context
def lemmas(ctx: click.Context, curve_text: str, sampler: str, samples: int, seed: int,
           bound: int, as_json: bool):
    """
    Check the pole-order identities on sampled pairs of O_F.

    Exit code 0 if every identity held, 5 otherwise.
    """
    with _reporting_errors():
        curve = load_curve(curve_text)
        if sampler == "random":
            pair_sampler = AVAILABLE_SAMPLERS["random"](curve, bound, samples, seed)
        else:
            pair_sampler = AVAILABLE_SAMPLERS["grid"](curve, bound, _config(ctx).spot_check_budget)
        report = check_lemma1(curve, pair_sampler)
    if as_json:
        _emit(ctx, report.to_dict())
    else:
        click.echo(f"pairs checked: {report.pairs_checked}")
        click.echo(f"failures:      {len(report.failures)}")
        for failure in report.failures[:20]:
            click.echo(f"  {failure}")
    sys.exit(0 if report.passed else LEMMA_FAILURE_EXIT)


def main():
    """Main entry point for the CLI."""
    cli(obj={})


if __name__ == "__main__":
    main()
