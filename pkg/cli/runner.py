"""Dispatch a RunConfig to the library and serialize the report."""
import csv
import io
import logging
from typing import Callable, Dict, List, NamedTuple, Optional, Tuple

from pydantic import BaseModel

from caterpillar.chains import (
    GeneratorTuple,
    WeylIndex,
    enumerate_x,
    enumerate_y,
    swap_relations,
    weights_of_tuple,
    weyl_tuple,
)
from caterpillar.config import RunConfig
from caterpillar.enumeration import count_labellings, hilbert_series
from caterpillar.errors import InputError
from caterpillar.kpieri import leveled_pattern, level
from caterpillar.pieri import (
    InterlacingPattern,
    Orientation,
    boundary_1,
    boundary_2,
    build_dual_pattern,
    build_pattern,
    decompose,
)
from caterpillar.verify.gorenstein import gorenstein_check
from caterpillar.verify.markov import markov_check
from caterpillar.weights import SlWeight

from .models import (
    DecomposeResponse,
    DimResponse,
    GeneratorCount,
    GeneratorRow,
    GensResponse,
    GorensteinResponse,
    HilbertResponse,
    HilbertRow,
    MarkovResponse,
    PieriResponse,
    RelationRow,
    RelationsResponse,
    WeylResponse,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_VIOLATION = 2


class Outcome(NamedTuple):
    report: BaseModel
    text: List[str]
    rows: Optional[List[List[str]]] = None
    exit_code: int = EXIT_OK


def _row(t: GeneratorTuple) -> GeneratorRow:
    w = weights_of_tuple(t)
    return GeneratorRow(entries=list(t.entries), r=list(w.r), s=list(w.s))


def _dim(config: RunConfig) -> Outcome:
    result = count_labellings(
        config.m, config.r, config.s, config.level, list_witnesses=config.witnesses, max_objects=config.max_objects
    )
    witnesses = None
    if result.witnesses is not None:
        witnesses = [[str(w) for w in path] for path in result.witnesses]
    report = DimResponse(
        m=config.m,
        r=list(config.r),
        s=list(config.s),
        level=config.level,
        dimension=result.dimension,
        witnesses=witnesses,
    )
    return Outcome(report, [f"dimension {result.dimension}"])


def _gens(config: RunConfig) -> Outcome:
    enumerate_set = enumerate_x if config.generator_set == "X" else enumerate_y
    tuples = enumerate_set(config.m, config.a, config.b, config.max_objects)
    report = GensResponse(
        m=config.m,
        a=config.a,
        b=config.b,
        generator_set=config.generator_set,
        count=len(tuples),
        tuples=[_row(t) for t in tuples],
    )
    rows = [["entries", "r", "s"]] + [
        [",".join(map(str, row.entries)), ",".join(map(str, row.r)), ",".join(map(str, row.s))]
        for row in report.tuples
    ]
    return Outcome(report, [str(t) for t in tuples], rows)


def _relations(config: RunConfig) -> Outcome:
    relations = swap_relations(config.m, config.a, config.b, config.leveled, config.max_objects)
    report = RelationsResponse(
        m=config.m,
        a=config.a,
        b=config.b,
        leveled=config.leveled,
        count=len(relations),
        relations=[
            RelationRow(
                lhs=[list(t.entries) for t in rel.lhs],
                rhs=[list(t.entries) for t in rel.rhs],
                position=rel.position,
            )
            for rel in relations
        ],
    )
    rows = [["lhs_1", "lhs_2", "rhs_1", "rhs_2", "position"]] + [
        [str(rel.lhs[0]), str(rel.lhs[1]), str(rel.rhs[0]), str(rel.rhs[1]), str(rel.position)]
        for rel in relations
    ]
    return Outcome(report, [str(rel) for rel in relations], rows)


def _decompose(config: RunConfig) -> Outcome:
    if not config.pattern:
        raise InputError("decompose needs --pattern top=...;bottom=...")
    p = InterlacingPattern.parse(config.pattern, Orientation(config.orientation))
    gens = decompose(p)
    ordered = sorted(gens.items(), key=lambda item: item[0].sort_key())
    report = DecomposeResponse(
        m=p.m,
        orientation=p.orientation.value,
        pattern=str(p),
        level=level(p),
        middle=p.middle,
        boundary_1=str(boundary_1(p)),
        boundary_2=str(boundary_2(p)),
        generators=[GeneratorCount(generator=str(g), count=c) for g, c in ordered],
    )
    text = [f"{g}: {c}" for g, c in ordered] or ["(identity)"]
    return Outcome(report, text)


def _weyl(config: RunConfig) -> Outcome:
    index = WeylIndex(kind=config.index_side, indices=tuple(config.index_set))
    t = weyl_tuple(config.m, config.a, config.b, index)
    w = weights_of_tuple(t)
    report = WeylResponse(
        m=config.m,
        a=config.a,
        b=config.b,
        kind=index.kind,
        indices=list(index.indices),
        entries=list(t.entries),
        r=list(w.r),
        s=list(w.s),
        in_y=t.in_y(),
    )
    return Outcome(report, [str(t)])


def _markov(config: RunConfig) -> Outcome:
    fibers = markov_check(config.m, config.a, config.b, config.leveled, config.max_degree, config.max_objects)
    connected = all(f.connected for f in fibers)
    report = MarkovResponse(
        m=config.m,
        a=config.a,
        b=config.b,
        leveled=config.leveled,
        max_degree=config.max_degree,
        fiber_count=len(fibers),
        all_connected=connected,
        fibers=fibers,
    )
    text = [f"{len(fibers)} fibers, all connected: {connected}"]
    text += [f"disconnected: {f.element} {f.disconnecting_pair}" for f in fibers if not f.connected]
    return Outcome(report, text, exit_code=EXIT_OK if connected else EXIT_VIOLATION)


def _gorenstein(config: RunConfig) -> Outcome:
    result = gorenstein_check(
        config.m,
        config.a,
        config.b,
        config.leveled,
        config.max_degree,
        config.samples,
        config.seed,
        config.max_objects,
    )
    report = GorensteinResponse(m=config.m, a=config.a, b=config.b, leveled=config.leveled, report=result)
    text = [
        f"condition holds: {result.condition_holds}",
        f"witness: {result.witness if not result.degenerate else 'none (degenerate)'}",
        f"sampled interior ok: {result.sampled_interior_ok}",
    ]
    failed = result.sampled_interior_ok is False
    return Outcome(report, text, exit_code=EXIT_VIOLATION if failed else EXIT_OK)


def _hilbert(config: RunConfig) -> Outcome:
    if config.level is None:
        raise InputError("hilbert needs --level")
    series = hilbert_series(config.m, config.a, config.b, config.level, config.max_objects)
    report = HilbertResponse(
        m=config.m,
        a=config.a,
        b=config.b,
        levels=[HilbertRow(level=k, dimension=d) for k, d in enumerate(series)],
    )
    rows = [["level", "dimension"]] + [[str(k), str(d)] for k, d in enumerate(series)]
    return Outcome(report, [f"K={k}: {d}" for k, d in enumerate(series)], rows)


def _pieri(config: RunConfig) -> Outcome:
    lam = SlWeight.parse(",".join(map(str, config.lam)), config.m) if config.lam else SlWeight.zero(config.m)
    eta = SlWeight.parse(",".join(map(str, config.eta)), config.m) if config.eta else SlWeight.zero(config.m)
    orientation = Orientation(config.orientation)
    if config.level is None:
        build = build_pattern if orientation is Orientation.NORMAL else build_dual_pattern
        p = build(lam, config.middle, eta)
    else:
        found = leveled_pattern(lam, config.middle, eta, config.level, orientation)
        p = found.pattern if found else None
    report = PieriResponse(
        m=config.m,
        orientation=orientation.value,
        lam=str(lam),
        middle=config.middle,
        eta=str(eta),
        level=config.level,
        dimension=0 if p is None else 1,
        pattern=None if p is None else str(p),
    )
    return Outcome(report, [f"dimension {report.dimension}"] + ([str(p)] if p else []))


HANDLERS: Dict[str, Callable[[RunConfig], Outcome]] = {
    "dim": _dim,
    "gens": _gens,
    "relations": _relations,
    "decompose": _decompose,
    "weyl": _weyl,
    "markov": _markov,
    "gorenstein": _gorenstein,
    "hilbert": _hilbert,
    "pieri": _pieri,
}


def _render(outcome: Outcome, output: str) -> str:
    if output == "json":
        return outcome.report.model_dump_json(exclude_none=True)
    if output == "text":
        return "\n".join(outcome.text)
    if outcome.rows is None:
        raise InputError("csv output is only available for gens, relations and hilbert")
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(outcome.rows)
    return buffer.getvalue().rstrip("\n")


def run(config: RunConfig) -> Tuple[int, str]:
    """
    Execute one subcommand.

    Returns:
        (exit code, serialized report). Library errors propagate to the caller.
    """
    logger.info(f"Running {config.subcommand} with m={config.m}, a={config.a}, b={config.b}")
    outcome = HANDLERS[config.subcommand](config)
    return outcome.exit_code, _render(outcome, config.output)
