"""
=============================================================================
APP.PY - Command-Line Front End
=============================================================================

Reproduces the residue tables, evaluates main terms and the limiting
density, computes the delta = 1 probabilities, and runs the verification
pipeline.

Usage:
    python app.py residues --gens 6,9,20 --n 1000 --modulus 7
    python app.py moments --gens 17,29,47,65 --n 5000 --power 0 --modulus 2 --residue 0
    python app.py density --gens 6,9,20 --samples 5
    python app.py density --gens 6,9,20 --integral 1/20 1/9
    python app.py zeta --k 5
    python app.py zeta --mc 3 10000 100000 42
    python app.py verify --gens 7,19,25,31 --max-n 434
    python app.py convergence --gens 6,9,20 --modulus 5 --n-schedule 200,400,600,800,1000
    python app.py --format csv --out table.csv residues --gens 6,9,20 --n 1000 --modulus 2

EXIT CODES:
-----------
0   success
1   verification failure (verify only)
2   usage or validation error: bad generators, residue out of range,
    k < 3 for the density, k < 2 for zeta, a mixed n schedule

OUTPUT:
-------
Every command builds an OutputRecord (tools/records.py) and renders it as a
text table, CSV or JSON. --out writes to a file instead of stdout. Logging
goes to stderr only, and only with --verbose.
=============================================================================
"""

import contextlib
import logging
import sys
from typing import Iterator, Optional, Sequence

import click

import config
from core.arithmetic import format_decimal, format_exact, to_rational
from core.errors import SemigroupError
from core.semigroup import NumericalSemigroup, parse_generators
from graph import build_graph
from templates.templates import SUITE_LINE, TREND_LINE, VERIFY_HEADER, VERIFY_SUMMARY
from tools.asymptotics import equidistribution_check, stats
from tools.density import density_grid, density_integral_exact, density_model
from tools.modular import residue_histogram, restricted_moment
from tools.records import OutputRecord, new_record, render
from tools.zeta import delta_one_probability_mc, zeta_ratio

logger = logging.getLogger(__name__)

ZETA_TABLE_K = range(2, 11)


# =============================================================================
# PARAMETER TYPES AND HELPERS
# =============================================================================


class GeneratorsType(click.ParamType):
    """--gens 6,9,20 -> NumericalSemigroup; invalid lists are usage errors."""

    name = "generators"

    def convert(self, value, param, ctx) -> NumericalSemigroup:
        if isinstance(value, NumericalSemigroup):
            return value
        try:
            return parse_generators(value)
        except SemigroupError as error:
            self.fail(str(error), param, ctx)


GENERATORS = GeneratorsType()


def parse_schedule(text: str) -> list:
    try:
        return [int(piece) for piece in text.split(",") if piece.strip()]
    except ValueError:
        raise click.BadParameter(f"schedule must be comma-separated integers, got {text!r}")


@contextlib.contextmanager
def usage_errors() -> Iterator[None]:
    """Report library validation errors as click usage errors (exit code 2)."""
    try:
        yield
    except (SemigroupError, ValueError, ZeroDivisionError) as error:
        raise click.UsageError(str(error))


def format_option(command):
    return click.option(
        "--format", "fmt", type=click.Choice(config.OUTPUT_FORMATS), default=None,
        help="Output format for this command (overrides the global --format).",
    )(command)


def emit(ctx: click.Context, record: OutputRecord, fmt: Optional[str], trailer: Sequence[str] = ()) -> None:
    """Render a record; trailer lines are appended in table format only."""
    fmt = fmt or ctx.obj["format"]
    text = render(record, fmt)
    if fmt == "table":
        text += "".join(line + "\n" for line in trailer)
    out = ctx.obj["out"]
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    else:
        click.echo(text, nl=False)


# =============================================================================
# COMMAND GROUP
# =============================================================================


@click.group()
@click.option("--format", "fmt", type=click.Choice(config.OUTPUT_FORMATS), default=config.DEFAULT_FORMAT,
              help="Output format: table, csv or json.")
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None,
              help="Write output to this file instead of stdout.")
@click.option("--verbose", is_flag=True, help="Log progress to stderr.")
@click.pass_context
def cli(ctx: click.Context, fmt: str, out: Optional[str], verbose: bool):
    """
    Factorization lengths in numerical semigroups.

    Examples:

        python app.py residues --gens 6,9,20 --n 1000 --modulus 2

        python app.py zeta
    """
    ctx.ensure_object(dict)
    ctx.obj.update(format=fmt, out=out)
    if verbose:
        logging.basicConfig(
            level=logging.DEBUG, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s", force=True
        )
    elif not logging.getLogger().handlers:
        logging.getLogger().addHandler(logging.NullHandler())


# =============================================================================
# RESIDUES
# =============================================================================


@cli.command()
@click.option("--gens", type=GENERATORS, required=True, help="Comma-separated generators, e.g. 6,9,20.")
@click.option("--n", "n", type=click.IntRange(min=0), required=True, help="The element.")
@click.option("--modulus", type=click.IntRange(min=1), required=True, help="The modulus N.")
@format_option
@click.pass_context
def residues(ctx, gens: NumericalSemigroup, n: int, modulus: int, fmt: Optional[str]):
    """
    Count the lengths of n in each residue class mod N.

    Example:

        python app.py residues --gens 17,29,47,65 --n 5000 --modulus 6
    """
    with usage_errors():
        histogram = residue_histogram(gens, n, modulus)

    proportions = histogram.proportions
    rows, exact = [], {"total": histogram.total}
    for i, count in enumerate(histogram.counts):
        if proportions is None:
            rows.append((i, count, "-"))
        else:
            rows.append((i, count, format_decimal(proportions[i], config.PROPORTION_PLACES)))
            exact[f"proportion_{i}"] = format_exact(proportions[i])

    record = new_record(
        "residues",
        {"gens": ",".join(map(str, gens.generators)), "n": n, "modulus": modulus},
        ("residue", "count", "proportion"),
        rows,
        exact,
    )
    emit(ctx, record, fmt)


# =============================================================================
# MOMENTS
# =============================================================================


@cli.command()
@click.option("--gens", type=GENERATORS, required=True, help="Comma-separated generators.")
@click.option("--n", "n", type=click.IntRange(min=0), required=True, help="The element.")
@click.option("--power", type=click.IntRange(min=0), default=0, show_default=True, help="Power p of the lengths.")
@click.option("--modulus", type=click.IntRange(min=1), default=1, show_default=True, help="The modulus N.")
@click.option("--residue", type=int, default=0, show_default=True, help="The residue i, 0 <= i < N.")
@format_option
@click.pass_context
def moments(ctx, gens, n, power, modulus, residue, fmt):
    """
    Exact restricted power sum of lengths next to its main term.
    """
    with usage_errors():
        result = restricted_moment(gens, n, power, modulus, residue)

    places = config.MOMENT_PLACES
    rows = [
        ("exact", format_exact(result.exact), format_decimal(result.exact, places)),
        ("leading", format_exact(result.leading), format_decimal(result.leading, places)),
        ("residual", format_exact(result.residual), format_decimal(result.residual, places)),
    ]
    record = new_record(
        "moments",
        {"gens": ",".join(map(str, gens.generators)), "n": n, "power": power,
         "modulus": modulus, "residue": residue},
        ("quantity", "exact", "decimal"),
        rows,
        {"exact": format_exact(result.exact), "leading": format_exact(result.leading),
         "residual": format_exact(result.residual), "attainable": str(result.attainable).lower()},
    )
    emit(ctx, record, fmt, trailer=[f"# attainable: {str(result.attainable).lower()}"])


# =============================================================================
# DENSITY
# =============================================================================


@cli.command()
@click.option("--gens", type=GENERATORS, required=True, help="Comma-separated generators, at least three.")
@click.option("--samples", type=click.IntRange(min=2), default=None, help="Evaluate F on this many grid points.")
@click.option("--integral", nargs=2, type=str, default=None, metavar="A B",
              help="Exact integral of F over [A, B]; A and B may be fractions like 1/20.")
@format_option
@click.pass_context
def density(ctx, gens, samples, integral, fmt):
    """
    The limiting density F of scaled lengths l/n.
    """
    if (samples is None) == (integral is None):
        raise click.UsageError("pass exactly one of --samples or --integral")

    places = config.DENSITY_PLACES
    params = {"gens": ",".join(map(str, gens.generators))}
    with usage_errors():
        model = density_model(gens)
        if samples is not None:
            params["samples"] = samples
            rows = [
                (format_decimal(to_rational(x), places), format_decimal(to_rational(value), places))
                for x, value in density_grid(model, samples)
            ]
            record = new_record("density", params, ("x", "F"), rows)
        else:
            low, high = (to_rational(bound) for bound in integral)
            params.update(alpha=format_exact(low), beta=format_exact(high))
            value = density_integral_exact(model, low, high)
            record = new_record(
                "density", params, ("quantity", "exact", "decimal"),
                [("integral", format_exact(value), format_decimal(value, places))],
                {"integral": format_exact(value)},
            )
    emit(ctx, record, fmt)


# =============================================================================
# ZETA
# =============================================================================


@cli.command()
@click.option("--k", "k", type=int, default=None, help="Number of generators.")
@click.option("--mc", nargs=4, type=int, default=None, metavar="K R TRIALS SEED",
              help="Monte Carlo estimate instead of the series value.")
@format_option
@click.pass_context
def zeta(ctx, k, mc, fmt):
    """
    Probability zeta(k)/zeta(k-1) that a random k-generator semigroup has delta = 1.

    With neither --k nor --mc, prints the table for k = 2..10.
    """
    if k is not None and mc is not None:
        raise click.UsageError("pass at most one of --k and --mc")

    places = config.PROPORTION_PLACES
    with usage_errors():
        if mc is not None:
            mc_k, bound, trials, seed = mc
            estimate = delta_one_probability_mc(mc_k, bound, trials, seed)
            record = new_record(
                "zeta", {"mc": " ".join(map(str, mc))},
                ("k", "R", "trials", "seed", "estimate"),
                [(mc_k, bound, trials, seed, format_decimal(to_rational(estimate), places))],
            )
        else:
            ks = [k] if k is not None else list(ZETA_TABLE_K)
            rows = [(value, format_decimal(to_rational(zeta_ratio(value)), places)) for value in ks]
            record = new_record("zeta", {"k": k if k is not None else "2..10"}, ("k", "probability"), rows)
    emit(ctx, record, fmt)


# =============================================================================
# STATS
# =============================================================================


@cli.command("stats")
@click.option("--gens", type=GENERATORS, required=True, help="Comma-separated generators.")
@click.option("--n", "n", type=click.IntRange(min=0), required=True, help="The element.")
@click.option("--modulus", type=click.IntRange(min=1), default=None, help="Restrict to lengths in one class mod N.")
@click.option("--residue", type=int, default=None, help="The residue i of the class.")
@format_option
@click.pass_context
def stats_command(ctx, gens, n, modulus, residue, fmt):
    """
    Summary statistics of the lengths of n, optionally restricted to one class mod N.
    """
    with usage_errors():
        summary = stats(gens, n, modulus, residue)

    def cell(value, exact: bool = True):
        if value is None:
            return ("-", "-")
        if exact:
            return (format_exact(value), format_decimal(value, config.MOMENT_PLACES))
        return ("-", format_decimal(to_rational(value), config.MOMENT_PLACES))

    rows = [
        ("total", summary.total, summary.total),
        ("mean", *cell(summary.mean)),
        ("variance", *cell(summary.variance)),
        ("stddev", *cell(summary.stddev, exact=False)),
        ("skewness", *cell(summary.skewness, exact=False)),
        ("harmonic_mean", *cell(summary.harmonic_mean)),
        ("geometric_mean", *cell(summary.geometric_mean, exact=False)),
        ("median", *cell(summary.median)),
        ("mode", *cell(summary.mode)),
    ]
    record = new_record(
        "stats",
        {"gens": ",".join(map(str, gens.generators)), "n": n,
         "modulus": summary.modulus, "residue": summary.residue},
        ("quantity", "exact", "decimal"),
        rows,
        {"empty": str(summary.empty).lower()},
    )
    emit(ctx, record, fmt)


# =============================================================================
# CONVERGENCE
# =============================================================================


@cli.command()
@click.option("--gens", type=GENERATORS, required=True, help="Comma-separated generators, at least three.")
@click.option("--modulus", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--residue", type=int, default=0, show_default=True)
@click.option("--alpha", type=str, default="0", show_default=True, help="Lower end of the scaled interval.")
@click.option("--beta", type=str, default="1", show_default=True, help="Upper end of the scaled interval.")
@click.option("--n-schedule", "schedule", type=str, required=True,
              help="Comma-separated n values, all in one class mod gcd(delta, N).")
@format_option
@click.pass_context
def convergence(ctx, gens, modulus, residue, alpha, beta, schedule, fmt):
    """
    Proportion of lengths in a class and a scaled interval, against its limit.
    """
    n_list = parse_schedule(schedule)
    with usage_errors():
        report = equidistribution_check(gens, modulus, residue, alpha, beta, n_list)

    places = config.DENSITY_PLACES
    rows = [
        (row.n, format_decimal(row.empirical, places), format_decimal(row.limit, places),
         format_decimal(row.gap, places))
        for row in report.rows
    ]
    record = new_record(
        "convergence",
        {"gens": ",".join(map(str, gens.generators)), **report.query, "n_schedule": schedule},
        ("n", "empirical", "limit", "gap"),
        rows,
        {"limit": format_exact(report.rows[0].limit) if len(set(r.limit for r in report.rows)) == 1 else "varies",
         "final_gap": format_exact(report.final_gap)},
    )
    trend = TREND_LINE.format(
        final_gap=format_decimal(report.final_gap, places),
        first_half=format_decimal(report.first_half_gap, places),
        second_half=format_decimal(report.second_half_gap, places),
        decreasing=str(report.trend_decreasing).lower(),
    )
    emit(ctx, record, fmt, trailer=[trend])


# =============================================================================
# VERIFY
# =============================================================================


@cli.command()
@click.option("--gens", type=GENERATORS, default=",".join(map(str, config.VERIFY_GENERATORS)), show_default=True)
@click.option("--max-n", type=click.IntRange(min=1), default=config.VERIFY_MAX_N, show_default=True)
@click.option("--modulus-max", type=click.IntRange(min=1), default=config.VERIFY_MODULUS_MAX, show_default=True)
@click.option("--seed", type=int, default=config.VERIFY_SEED, show_default=True)
@format_option
@click.pass_context
def verify(ctx, gens, max_n, modulus_max, seed, fmt):
    """
    Run every verification suite; exit 1 if any fails.
    """
    with usage_errors():
        final_state = build_graph().invoke({
            "generators": gens.generators,
            "max_n": max_n,
            "modulus_max": modulus_max,
            "seed": seed,
            "random_semigroups": config.VERIFY_RANDOM_SEMIGROUPS,
            "suite_results": [],
        })

    results = final_state["suite_results"]
    passed = sum(result["passed"] for result in results)
    fmt = fmt or ctx.obj["format"]
    if fmt == "table" and not ctx.obj["out"]:
        click.echo(VERIFY_HEADER.format(semigroup=gens, max_n=max_n, modulus_max=modulus_max, seed=seed))
        for result in results:
            click.echo(SUITE_LINE.format(status="PASS" if result["passed"] else "FAIL", **{
                key: result[key] for key in ("suite", "checks", "detail")
            }))
        click.echo(VERIFY_SUMMARY.format(passed=passed, total=len(results)))
    else:
        record = new_record(
            "verify",
            {"gens": ",".join(map(str, gens.generators)), "max_n": max_n,
             "modulus_max": modulus_max, "seed": seed},
            ("suite", "passed", "checks", "detail"),
            [(r["suite"], str(r["passed"]).lower(), r["checks"], r["detail"]) for r in results],
            {"passed": passed, "total": len(results)},
        )
        emit(ctx, record, fmt)

    if passed != len(results):
        logger.warning("%d of %d suites failed", len(results) - passed, len(results))
        ctx.exit(1)


if __name__ == "__main__":
    cli()
