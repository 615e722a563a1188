"""Command-line front end: build, verify, analyze, canonicalize, compare, fuzz.

Verbs read JSON files (the rhizome verb also takes `./*` pattern grids) and
print a human summary, or a machine document with --json.  Exit codes:
0 success or pass, 1 a check failed, 2 unreadable or unparseable input,
3 input outside an operation's hypotheses.
"""

from __future__ import annotations

import functools
import json
import random
import sys

import click

from .algebra import (
    Rep,
    e_is_zero,
    e_sandwich_zero,
    rep_from_json,
    rep_to_json,
    verify_periplectic,
)
from .classify import (
    canonical_form,
    canonical_to_json,
    e_nonzero_guarantee,
    endo_report,
    group_act,
    indecomposable,
    isomorphic,
    split_core,
    split_weight_blocks,
    verdict_to_json,
)
from .errors import CodecError, PreconditionError, ShapeError
from .linalg import gauss_to_json, mat_to_json
from .reps import Seed, build_rep, entrywise_e, seed_from_json
from .rhizome import analyze, bipartite_components, parse_pattern
from .sampling import random_monomial_pair, random_polynomial, random_seed


def _fail(code: int, message: str) -> None:
    click.echo(message, err=True)
    sys.exit(code)


def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        _fail(2, f"{path}: {exc.strerror or exc}")
        raise AssertionError("unreachable")


def _parse_json(text: str, origin: str) -> object:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        _fail(2, f"{origin}:{exc.lineno}:{exc.colno}: {exc.msg}")
        raise AssertionError("unreachable")


def _load_seed(path: str) -> Seed:
    data = _parse_json(_read_text(path), path)
    try:
        return seed_from_json(data)
    except (CodecError, ShapeError) as exc:
        _fail(2, f"{path}: {exc}")
        raise AssertionError("unreachable")


def _load_rep(path: str) -> Rep:
    data = _parse_json(_read_text(path), path)
    try:
        return rep_from_json(data)
    except (CodecError, ShapeError) as exc:
        _fail(2, f"{path}: {exc}")
        raise AssertionError("unreachable")


def _guard(fn):
    """Map hypothesis violations from the library onto exit code 3."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (PreconditionError, ShapeError) as exc:
            _fail(3, str(exc))

    return wrapper


def _dump(document: object) -> None:
    click.echo(json.dumps(document, indent=2))


@click.group()
def main() -> None:
    """Exact construction and classification of calibrated two-strand modules."""


@main.command()
@click.argument("seed_file", type=click.Path())
@_guard
def construct(seed_file: str) -> None:
    """Build the module of a seed file and print it as JSON."""
    rep = build_rep(_load_seed(seed_file))
    _dump(rep_to_json(rep))


@main.command()
@click.argument("rep_file", type=click.Path())
@click.option("--json", "as_json", is_flag=True, help="machine-readable output")
@_guard
def verify(rep_file: str, as_json: bool) -> None:
    """Check the nine defining relations; exit 0 iff all hold."""
    report = verify_periplectic(_load_rep(rep_file))
    if as_json:
        _dump(
            {
                "passed": report.passed,
                "violations": [
                    {
                        "relation": v.relation,
                        "position": list(v.position),
                        "lhs": gauss_to_json(v.lhs),
                        "rhs": gauss_to_json(v.rhs),
                    }
                    for v in report.violations
                ],
            }
        )
    else:
        failed = {v.relation: v for v in report.violations}
        for name in report.checked:
            if name in failed:
                v = failed[name]
                click.echo(f"FAIL {name}  at {v.position}: {v.lhs} != {v.rhs}")
            else:
                click.echo(f"ok   {name}")
    sys.exit(0 if report.passed else 1)


@main.command()
@click.argument("input_file", type=click.Path())
@click.option("--json", "as_json", is_flag=True, help="machine-readable output")
@_guard
def rhizome(input_file: str, as_json: bool) -> None:
    """Zero-pattern analysis of a coupling matrix.

    Accepts a seed JSON file or a plain-text grid of `.` and `*` cells.
    """
    text = _read_text(input_file)
    if text.lstrip().startswith("{"):
        matrix = _load_seed(input_file).coupling
    else:
        try:
            matrix = parse_pattern(text)
        except CodecError as exc:
            _fail(2, f"{input_file}: {exc}")
            raise AssertionError("unreachable")
    report = analyze(matrix)
    if as_json:
        _dump(
            {
                "n_classes": report.n_classes,
                "zero_rows": report.zero_rows,
                "zero_cols": report.zero_cols,
                "is_rhizomatic": report.is_rhizomatic,
            }
        )
    else:
        click.echo(f"classes: {report.n_classes}")
        click.echo(f"zero_rows: {report.zero_rows}")
        click.echo(f"zero_cols: {report.zero_cols}")
        click.echo(f"is_rhizomatic: {'true' if report.is_rhizomatic else 'false'}")


@main.command(name="indecomposable")
@click.argument("seed_file", type=click.Path())
@click.option("--json", "as_json", is_flag=True, help="machine-readable output")
@_guard
def indecomposable_cmd(seed_file: str, as_json: bool) -> None:
    """Classify the module of a seed as indecomposable, decomposable, or unknown."""
    verdict = indecomposable(_load_seed(seed_file))
    if as_json:
        _dump(verdict_to_json(verdict))
    else:
        click.echo(f"verdict: {verdict.value}")
        click.echo(f"reason: {verdict.reason}")
        if verdict.witness is not None:
            d1, d2 = (len(part) for part in verdict.witness)
            click.echo(f"witness: invariant summands of dimensions {d1} and {d2}")
        if verdict.endo_dim is not None:
            click.echo(f"endomorphism dimension: {verdict.endo_dim}")


@main.command()
@click.argument("rep_file", type=click.Path())
@click.option("--json", "as_json", is_flag=True, help="machine-readable output")
@_guard
def endo(rep_file: str, as_json: bool) -> None:
    """Compute the endomorphism algebra of a module."""
    report = endo_report(_load_rep(rep_file))
    if as_json:
        _dump(
            {
                "dimension": report.dimension,
                "all_diagonal": report.all_diagonal,
                "basis": [mat_to_json(m) for m in report.basis],
            }
        )
    else:
        click.echo(f"dimension: {report.dimension}")
        click.echo(f"all_diagonal: {'true' if report.all_diagonal else 'false'}")


@main.command()
@click.argument("seed_file", type=click.Path())
@click.option("--json", "as_json", is_flag=True, help="machine-readable output")
@_guard
def canonical(seed_file: str, as_json: bool) -> None:
    """Print the canonical orbit representative of a regular rhizomatic seed."""
    form = canonical_form(_load_seed(seed_file))
    if as_json:
        _dump(canonical_to_json(form))
    else:
        click.echo("ab: " + " ".join(str(x) for x in form.eigenvalues))
        click.echo("S:")
        for i in range(form.coupling.rows):
            click.echo("  " + " ".join(str(x) for x in form.coupling.row(i)))


@main.command(name="isomorphic")
@click.argument("seed_file_1", type=click.Path())
@click.argument("seed_file_2", type=click.Path())
@click.option("--json", "as_json", is_flag=True, help="machine-readable output")
@_guard
def isomorphic_cmd(seed_file_1: str, seed_file_2: str, as_json: bool) -> None:
    """Decide isomorphism of two seeds' modules; exit 0 iff isomorphic."""
    answer = isomorphic(_load_seed(seed_file_1), _load_seed(seed_file_2))
    if as_json:
        _dump({"isomorphic": answer})
    else:
        click.echo(f"isomorphic: {'true' if answer else 'false'}")
    sys.exit(0 if answer else 1)


@main.command()
@click.argument("rep_file", type=click.Path())
@click.option("--json", "as_json", is_flag=True, help="machine-readable output")
@_guard
def split(rep_file: str, as_json: bool) -> None:
    """Sort a calibrated module into weight blocks and try the core splitter."""
    rep = _load_rep(rep_file)
    report = verify_periplectic(rep)
    if not report.passed:
        v = report.violations[0]
        _fail(3, f"input violates {v.relation} at {v.position}: {v.lhs} != {v.rhs}")
    partition, core, rest = split_weight_blocks(rep)
    core_verdict = split_core(core)
    if as_json:
        _dump(
            {
                "plus_block": list(partition.plus_block),
                "minus_block": list(partition.minus_block),
                "other_blocks": [
                    {
                        "weight": gauss_to_json(d),
                        "plus": list(bp),
                        "minus": list(bm),
                    }
                    for d, bp, bm in partition.other_blocks
                ],
                "core": rep_to_json(core),
                "rest": None if rest is None else rep_to_json(rest),
                "core_split": verdict_to_json(core_verdict),
            }
        )
    else:
        click.echo("plus_block: " + " ".join(map(str, partition.plus_block)))
        click.echo("minus_block: " + " ".join(map(str, partition.minus_block)))
        if partition.other_blocks:
            for d, bp, bm in partition.other_blocks:
                plus = " ".join(map(str, bp))
                minus = " ".join(map(str, bm))
                click.echo(f"paired block d={d}: plus [{plus}] minus [{minus}]")
        else:
            click.echo("paired blocks: none")
        click.echo(f"core: dimension {core.dim} ({core.k} + {core.l})")
        click.echo(f"rest: {'none' if rest is None else f'dimension {rest.dim}'}")
        click.echo(f"core_split: {core_verdict.value} ({core_verdict.reason})")


def _fuzz_trial(rng: random.Random, kmax: int, lmax: int) -> list[str]:
    """One trial of the property suite; returns failure descriptions."""
    seed = random_seed(rng, kmax, lmax)
    rep = build_rep(seed)
    problems: list[str] = []
    report = verify_periplectic(rep)
    if not report.passed:
        v = report.violations[0]
        problems.append(f"relation {v.relation} fails at {v.position}")
    if rep.e != entrywise_e(seed):
        problems.append("e block disagrees with the entrywise formula")
    if not e_sandwich_zero(rep, random_polynomial(rng)):
        problems.append("e * f(y1, y2) * e is nonzero")
    rhz = analyze(seed.coupling)
    n_parts = len(bipartite_components(seed.coupling))
    if n_parts != rhz.n_classes + rhz.zero_rows + rhz.zero_cols:
        problems.append("component count disagrees with class and zero counts")
    if rep_from_json(rep_to_json(rep)) != rep:
        problems.append("module does not survive a serialization round trip")
    if e_nonzero_guarantee(seed) and e_is_zero(rep):
        problems.append("guaranteed-nonzero e is zero")
    if e_nonzero_guarantee(seed):
        g = random_monomial_pair(rng, seed.k, seed.l)
        if canonical_form(group_act(g, seed)) != canonical_form(seed):
            problems.append("canonical form moved under the group action")
        if not isomorphic(seed, group_act(g, seed)):
            problems.append("acted seed not isomorphic to the original")
    return problems


@main.command()
@click.option("--kmax", default=4, show_default=True, help="largest first dimension")
@click.option("--lmax", default=4, show_default=True, help="largest second dimension")
@click.option("--trials", default=100, show_default=True)
@click.option("--seed", "rng_seed", default=0, show_default=True, help="pseudo-random seed")
@click.option("--json", "as_json", is_flag=True, help="machine-readable output")
def fuzz(kmax: int, lmax: int, trials: int, rng_seed: int, as_json: bool) -> None:
    """Run the random property suite; reproducible for a fixed --seed."""
    rng = random.Random(rng_seed)
    failures: list[dict] = []
    for trial in range(trials):
        for problem in _fuzz_trial(rng, kmax, lmax):
            failures.append({"trial": trial, "problem": problem})
    if as_json:
        _dump(
            {
                "kmax": kmax,
                "lmax": lmax,
                "trials": trials,
                "seed": rng_seed,
                "passed": not failures,
                "failures": failures,
            }
        )
    else:
        click.echo(f"fuzz kmax={kmax} lmax={lmax} trials={trials} seed={rng_seed}")
        for failure in failures:
            click.echo(f"FAIL trial {failure['trial']}: {failure['problem']}")
        click.echo(f"{trials - len({f['trial'] for f in failures})}/{trials} trials passed")
    sys.exit(1 if failures else 0)


if __name__ == "__main__":
    main()
