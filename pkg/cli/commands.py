"""Click command group with all subcommands."""
import logging
import sys
from typing import Any, Optional, Tuple

import click
from pydantic import ValidationError

from caterpillar.config import DEFAULT_MAX_OBJECTS, DEFAULT_SAMPLES, DEFAULT_SEED, RunConfig
from caterpillar.errors import CaterpillarError

from .runner import EXIT_INVALID, run

logger = logging.getLogger(__name__)


def _error_line(exc: Exception) -> str:
    if isinstance(exc, ValidationError):
        return "; ".join(err["msg"] for err in exc.errors())
    return str(exc)


class CaterpillarGroup(click.Group):
    """Group whose subcommands return exit codes and whose errors exit 1."""

    def main(self, args: Any = None, prog_name: Optional[str] = None, **extra: Any) -> None:
        extra.pop("standalone_mode", None)
        try:
            code = super().main(args=args, prog_name=prog_name, standalone_mode=False, **extra)
        except click.ClickException as e:
            e.show()
            sys.exit(EXIT_INVALID)
        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(EXIT_INVALID)
        sys.exit(code if isinstance(code, int) else 0)

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except (CaterpillarError, ValidationError) as e:
            logger.warning(f"Invalid input for {ctx.invoked_subcommand}: {_error_line(e)}")
            click.echo(f"Error: {_error_line(e)}", err=True)
            return EXIT_INVALID
        except (click.ClickException, click.Abort, click.exceptions.Exit):
            raise
        except Exception as e:
            logger.error(f"Unexpected failure in {ctx.invoked_subcommand}: {e}", exc_info=True)
            raise


def _int_list(ctx: click.Context, param: click.Parameter, value: Optional[str]) -> Tuple[int, ...]:
    if not value:
        return ()
    try:
        return tuple(int(part) for part in value.split(","))
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {value!r}")


def common_options(f):
    f = click.option("--max-objects", default=DEFAULT_MAX_OBJECTS, show_default=True, type=int,
                     help="Size guard on enumerated objects")(f)
    f = click.option("--output", default="json", show_default=True,
                     type=click.Choice(["json", "csv", "text"]), help="Report format")(f)
    return f


def shape_options(f):
    f = click.option("--b", default=2, show_default=True, type=int, help="Number of sω_{m−1} legs")(f)
    f = click.option("--a", default=2, show_default=True, type=int, help="Number of rω₁ legs")(f)
    f = click.option("--m", default=3, show_default=True, type=int, help="Rank of SL_m")(f)
    return f


def _execute(**fields: Any) -> int:
    config = RunConfig(**fields)
    code, text = run(config)
    click.echo(text)
    return code


@click.group(cls=CaterpillarGroup)
def cli() -> None:
    """Caterpillar toric degenerations of conformal block algebras."""


@cli.command()
@click.option("--m", default=3, show_default=True, type=int, help="Rank of SL_m")
@click.option("--r", callback=_int_list, required=True, help="Multiples of ω₁, e.g. 1,1")
@click.option("--s", callback=_int_list, required=True, help="Multiples of ω_{m−1}, e.g. 1,1")
@click.option("--level", type=int, default=None, help="Level K; omit for invariants")
@click.option("--witnesses", is_flag=True, help="List the edge weights of every labelling")
@common_options
def dim(**options: Any) -> int:
    """Dimension of invariants or conformal blocks."""
    return _execute(subcommand="dim", **options)


@cli.command()
@shape_options
@click.option("--set", "generator_set", default="X", show_default=True, type=click.Choice(["X", "Y"]))
@common_options
def gens(**options: Any) -> int:
    """List generator tuples of X_{a,b} or Y_{a,b}."""
    return _execute(subcommand="gens", **options)


@cli.command()
@shape_options
@click.option("--leveled/--unleveled", default=True, show_default=True)
@common_options
def relations(**options: Any) -> int:
    """List swap relations."""
    return _execute(subcommand="relations", **options)


@cli.command()
@click.option("--pattern", required=True, help="top=3,3,1;bottom=3,2")
@click.option("--orientation", default="normal", show_default=True, type=click.Choice(["normal", "dual"]))
@common_options
def decompose(**options: Any) -> int:
    """Decompose a pattern into generators."""
    return _execute(subcommand="decompose", **options)


@cli.command()
@shape_options
@click.option("--I", "subset_i", callback=_int_list, help="Δ_I: m indices in 1..a")
@click.option("--J", "subset_j", callback=_int_list, help="Δ_J: m indices in 1..b")
@click.option("--pair", callback=_int_list, help="P_ij: i,j")
@common_options
def weyl(subset_i: Tuple[int, ...], subset_j: Tuple[int, ...], pair: Tuple[int, ...], **options: Any) -> int:
    """Tuple image of a Weyl generator."""
    chosen = [(side, idx) for side, idx in (("I", subset_i), ("J", subset_j), ("pair", pair)) if idx]
    if len(chosen) != 1:
        raise click.UsageError("give exactly one of --I, --J or --pair")
    side, indices = chosen[0]
    return _execute(subcommand="weyl", index_side=side, index_set=list(indices), **options)


@cli.command()
@shape_options
@click.option("--leveled/--unleveled", default=True, show_default=True)
@click.option("--max-degree", default=3, show_default=True, type=int)
@common_options
def markov(**options: Any) -> int:
    """Check swap connectivity of every fiber; exits 2 on a disconnected fiber."""
    return _execute(subcommand="markov", **options)


@cli.command()
@shape_options
@click.option("--leveled/--unleveled", default=True, show_default=True)
@click.option("--max-degree", default=4, show_default=True, type=int)
@click.option("--samples", default=DEFAULT_SAMPLES, show_default=True, type=int)
@click.option("--seed", default=DEFAULT_SEED, show_default=True, type=int)
@common_options
def gorenstein(**options: Any) -> int:
    """Gorenstein witness report; exits 2 when a sampled interior element fails."""
    return _execute(subcommand="gorenstein", **options)


@cli.command()
@shape_options
@click.option("--level", required=True, type=int, help="Highest level K")
@common_options
def hilbert(**options: Any) -> int:
    """Level-graded Hilbert function of P(a,b)."""
    return _execute(subcommand="hilbert", **options)


@cli.command()
@click.option("--m", default=3, show_default=True, type=int, help="Rank of SL_m")
@click.option("--lam", callback=_int_list, help="λ, e.g. 1,0")
@click.option("--eta", callback=_int_list, help="η, e.g. 2,2")
@click.option("--middle", default=0, show_default=True, type=int, help="r (normal) or s (dual)")
@click.option("--orientation", default="normal", show_default=True, type=click.Choice(["normal", "dual"]))
@click.option("--level", type=int, default=None, help="Apply the K-Pieri rule at this level")
@common_options
def pieri(**options: Any) -> int:
    """Pieri or K-Pieri dimension of one factor."""
    return _execute(subcommand="pieri", **options)
