from __future__ import annotations

from fractions import Fraction
from typing import Any

import click

from macscifi.combinatorics.partitions import Partition, removable_corners, remove_cell
from macscifi.exceptions import MacsciFiError
from macscifi.logging_config import configure_logging
from macscifi.macdonald.hhl import hhl_macdonald
from macscifi.models import ExpansionModel
from macscifi.nabla.intersection import intersection_poly
from macscifi.settings.config import Z_MODES, ConfigOverrides, resolve_config, validate_config
from macscifi.settings.console import Console, Table
from macscifi.settings.state import ResolvedConfig, SessionState
from macscifi.shuffle.mld import shuffle_formula
from macscifi.specialization.kreweras import kreweras_h_expansion, specialize_11
from macscifi.symmetric.base import Expansion
from macscifi.symmetric.qsym import qsym_to_sym, specialize_coefficients
from macscifi.symmetric.sym import convert
from macscifi.verify.registry import suite_names
from macscifi.verify.runner import run_suites, write_report

FORMATS = ("text", "json")


def _parse_partition(text: str, label: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint=label) from exc


def _parse_indices(text: str) -> list[int]:
    try:
        return [int(piece) for piece in text.replace(" ", "").split(",") if piece]
    except ValueError as exc:
        raise click.BadParameter(f"cannot parse {text!r}", param_hint="--corners") from exc


def _parse_bindings(text: str) -> dict[str, Fraction]:
    bindings: dict[str, Fraction] = {}
    for piece in text.replace(" ", "").split(","):
        if not piece:
            continue
        name, sep, value = piece.partition("=")
        if not sep or not name:
            raise click.BadParameter(
                f"expected name=value, got {piece!r}", param_hint="--specialize"
            )
        try:
            bindings[name] = Fraction(value)
        except ValueError as exc:
            raise click.BadParameter(f"bad value in {piece!r}", param_hint="--specialize") from exc
    return bindings


def _emit(expansion: Expansion[Any], fmt: str) -> None:
    if fmt == "json":
        click.echo(ExpansionModel.of(expansion).model_dump_json(indent=2))
    else:
        click.echo(str(expansion))


def _state(ctx: click.Context) -> tuple[ResolvedConfig, Console]:
    obj = ctx.obj or {}
    config = obj.get("config")
    if config is None:
        raise click.ClickException("Internal error: missing resolved config")
    return config, obj.get("console", Console())


@click.group()
@click.option("--log-level", default=None, help="Log level (default: LOG_LEVEL or WARNING)")
@click.option("--json-logs", is_flag=True, help="Render logs as JSON")
@click.option("--jobs", type=int, default=None, help="Worker threads for verification suites")
@click.option("--report-dir", type=str, default=None, help="Directory for verification reports")
@click.pass_context
def main(
    ctx: click.Context,
    log_level: str | None,
    json_logs: bool,
    jobs: int | None,
    report_dir: str | None,
) -> None:
    """Exact computations with Macdonald intersection polynomials."""
    configure_logging(log_level, json=json_logs)
    config = resolve_config(ConfigOverrides(jobs=jobs, report_dir=report_dir))
    ctx.obj = {"config": config, "console": Console()}


@main.command("check")
@click.pass_context
def check_command(ctx: click.Context) -> None:
    """Validate the configuration and print the resolved values."""
    config, console = _state(ctx)
    table = Table(title="Resolved configuration")
    table.add_column("Key")
    table.add_column("Value", justify="right")
    for key, value in vars(config).items():
        table.add_row(key, str(value))
    console.print(table)

    errors = validate_config(config)
    if errors:
        raise click.UsageError("; ".join(errors))
    console.print("Configuration check passed.")


@main.command("macdonald")
@click.option("--mu", required=True, help="Partition, e.g. 2,1")
@click.option("--basis", type=click.Choice(["F", "m", "s"]), default="F", show_default=True)
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="text", show_default=True)
@click.pass_context
def macdonald_command(ctx: click.Context, mu: str, basis: str, fmt: str) -> None:
    """Print the modified Macdonald polynomial H~_mu."""
    config, _ = _state(ctx)
    shape = _parse_partition(mu, "--mu")
    try:
        expansion = hhl_macdonald(shape, cap=config.hhl_cap)
        result: Expansion[Any] = (
            expansion if basis == "F" else convert(qsym_to_sym(expansion), basis)
        )
    except MacsciFiError as exc:
        raise click.UsageError(str(exc)) from exc
    _emit(result, fmt)


def _submus(mu: str | None, corners: str | None, submus: str | None) -> list[Partition]:
    if submus is not None:
        if mu is not None or corners is not None:
            raise click.UsageError("use either --submus or --mu with --corners")
        return [_parse_partition(piece, "--submus") for piece in submus.split(";")]
    if mu is None or corners is None:
        raise click.UsageError("--mu and --corners are required without --submus")
    shape = _parse_partition(mu, "--mu")
    cells = removable_corners(shape)
    chosen = []
    for index in _parse_indices(corners):
        if not 1 <= index <= len(cells):
            raise click.BadParameter(
                f"corner {index} out of range; {list(shape)} has {len(cells)} corners",
                param_hint="--corners",
            )
        chosen.append(remove_cell(shape, cells[index - 1]))
    return chosen


@main.command("intersection")
@click.option("--mu", default=None, help="Covering partition, e.g. 3,2,1")
@click.option("--corners", default=None, help="1-based removable corners, top to bottom")
@click.option("--submus", default=None, help="Partitions separated by ';', e.g. '2;1,1'")
@click.option(
    "--specialize",
    default=None,
    help=(
        "Bindings such as q=2 or t=1/2. Exactly q=1,t=1 prints the h expansion;"
        " any other bindings keep the F basis."
    ),
)
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="text", show_default=True)
@click.pass_context
def intersection_command(
    ctx: click.Context,
    mu: str | None,
    corners: str | None,
    submus: str | None,
    specialize: str | None,
    fmt: str,
) -> None:
    """Print the Macdonald intersection polynomial, optionally specialized.

    Only the bindings q = 1 and t = 1 together switch to the h basis; every other
    set of bindings is applied to the F-basis coefficients.
    """
    config, _ = _state(ctx)
    partitions = _submus(mu, corners, submus)
    bindings = _parse_bindings(specialize) if specialize else {}
    try:
        poly = intersection_poly(partitions, cap=config.hhl_cap)
        result: Expansion[Any] = poly
        if bindings == {"q": Fraction(1), "t": Fraction(1)}:
            result = convert(qsym_to_sym(specialize_11(poly)), "h")
        elif bindings:
            result = specialize_coefficients(poly, bindings)
    except MacsciFiError as exc:
        raise click.UsageError(str(exc)) from exc
    _emit(result, fmt)


@main.command("shuffle")
@click.option("--n", "n", type=int, required=True, help="Degree of D_n")
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="text", show_default=True)
@click.pass_context
def shuffle_command(ctx: click.Context, n: int, fmt: str) -> None:
    """Print the shuffle formula D_n in the F basis."""
    config, _ = _state(ctx)
    if n < 0:
        raise click.BadParameter("must be non-negative", param_hint="--n")
    try:
        result = shuffle_formula(n, cap=config.mld_cap)
    except MacsciFiError as exc:
        raise click.UsageError(str(exc)) from exc
    _emit(result, fmt)


@main.command("kreweras")
@click.option("--k", "k", type=int, required=True, help="Number of partitions")
@click.option("--n", "n", type=int, required=True, help="Degree")
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="text", show_default=True)
def kreweras_command(k: int, n: int, fmt: str) -> None:
    """Print the Kreweras h-expansion of I[X;1,1] from the formula side."""
    try:
        result = kreweras_h_expansion(k, n)
    except MacsciFiError as exc:
        raise click.UsageError(str(exc)) from exc
    _emit(result, fmt)


@main.command("verify")
@click.argument("suite", type=click.Choice(suite_names()))
@click.option("--max-n", type=int, default=None)
@click.option("--max-k", type=int, default=None)
@click.option("--seed", type=int, default=None)
@click.option("--trials", type=int, default=None)
@click.option("--z-mode", type=click.Choice(Z_MODES), default=None)
@click.pass_context
def verify_command(
    ctx: click.Context,
    suite: str,
    max_n: int | None,
    max_k: int | None,
    seed: int | None,
    trials: int | None,
    z_mode: str | None,
) -> None:
    """Run a verification suite and write its JSON report."""
    base, console = _state(ctx)
    config = resolve_config(
        ConfigOverrides(
            max_n=max_n,
            max_k=max_k,
            seed=seed,
            trials=trials,
            z_mode=z_mode,
            jobs=base.jobs,
            report_dir=base.report_dir,
        )
    )
    errors = validate_config(config)
    if errors:
        raise click.UsageError("; ".join(errors))

    state = SessionState(config=config)
    reports = run_suites(suite, state)

    table = Table(title=f"Verification (seed {config.seed})")
    table.add_column("Suite")
    table.add_column("Checks", justify="right")
    table.add_column("Failed", justify="right")
    table.add_column("Seconds", justify="right")
    for report in reports:
        write_report(report, config.report_dir)
        table.add_row(
            report.suite,
            str(len(report.checks)),
            str(len(report.failures)),
            f"{report.wall_time:.1f}",
        )
    console.print(table)

    failures = [record for report in reports for record in report.failures]
    if failures:
        for record in failures[:10]:
            console.print(f"FAIL {record.id}: {record.witness}", markup=False)
        ctx.exit(1)


if __name__ == "__main__":
    main()
