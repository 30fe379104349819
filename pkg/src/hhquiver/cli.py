"""Command-line interface: ``hhquiver <command> ...``.

Exit codes: 0 success, 1 a check failed, 2 bad input or unmet precondition.
"""

from __future__ import annotations

import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict
from pathlib import Path as FsPath

import click

from . import corpus as corpus_mod
from . import dsl
from .algebra import DEFAULT_MAX_LEN, NotCertifiedError, compute_basis
from .classify import classify, gentle_tilted_type
from .equivalence import BinomialShapeError, verify_theorem
from .hochschild import ORACLE, SCHURIAN, PreconditionError, hh1_oracle, hh1_schurian
from .monomial import epsilon_report, hh1_monomial
from .presentation import Presentation
from .relext import ExtensionPair, auto_relext_gentle, relext_quiver

MONOMIAL = "monomial"
METHODS = (ORACLE, SCHURIAN, MONOMIAL, "all")

JSON_KEYS = (
    "hh1_dim", "dim_der0", "dim_int0", "n_bc", "n_prime_bc", "epsilon", "epsilon_prime",
    "schurian", "gentle", "monomial", "identity_theorem31", "methods_agree",
)


class InputError(click.ClickException):
    exit_code = 2


def _fail_input(msg: str):
    raise InputError(msg)


def _load(path) -> dsl.PresentationFile:
    try:
        return dsl.parse(path)
    except dsl.ParseError as exc:
        _fail_input(str(exc))
    except OSError as exc:
        _fail_input(f"{path}: {exc.strerror or exc}")


def _basis(p: Presentation, max_len: int):
    try:
        return compute_basis(p, max_len)
    except NotCertifiedError as exc:
        _fail_input(str(exc))


def _emit(data: dict, as_json: bool, title: str | None = None) -> None:
    if as_json:
        click.echo(json.dumps(data, sort_keys=True))
        return
    if title:
        click.echo(title)
    width = max((len(k) for k in data), default=0)
    for k, v in data.items():
        if isinstance(v, (list, dict)):
            v = json.dumps(v)
        click.echo(f"  {k.ljust(width)}  {v}")


def common(f):
    f = click.option("--json", "as_json", is_flag=True, help="Emit JSON instead of a table.")(f)
    f = click.option("--max-path-len", type=click.IntRange(min=1), default=DEFAULT_MAX_LEN,
                     show_default=True, help="Path length bound used to certify the basis.")(f)
    return f


@click.group()
@click.version_option(package_name="artifact")
def cli():
    """First Hochschild cohomology of bound quiver algebras."""


@cli.command()
@click.argument("file", type=click.Path(dir_okay=False))
@common
def check(file, as_json, max_path_len):
    """Classify a presentation."""
    pf = _load(file)
    b = _basis(pf.parsed, max_path_len)
    report = asdict(classify(b))
    shape = pf.parsed.quiver.shape_report()
    report["tilted_type"] = gentle_tilted_type(pf.parsed)
    report["double_arrow_pairs"] = [list(x) for x in shape.double_arrow_pairs]
    report["bypass_arrows"] = list(shape.bypass_arrows)
    report["unoriented_cycle_count"] = shape.unoriented_cycle_count
    _emit(report, as_json, f"{file}:")


@cli.command()
@click.argument("file", type=click.Path(dir_okay=False))
@common
def basis(file, as_json, max_path_len):
    """Certified path basis, dimension and nilpotency degree."""
    pf = _load(file)
    b = _basis(pf.parsed, max_path_len)
    _emit({
        "dimension": b.dimension,
        "nilpotency_degree": b.nilpotency_degree,
        "basis": [str(p) for p in b.basis_paths],
    }, as_json, f"{file}:")


def _hh1_values(b, method: str) -> tuple[dict, list[str]]:
    """Run the requested method(s); returns per-method results and skipped reasons."""
    wanted = (ORACLE, SCHURIAN, MONOMIAL) if method == "all" else (method,)
    results, skipped = {}, []
    for m in wanted:
        try:
            if m == ORACLE:
                results[m] = asdict(hh1_oracle(b))
            elif m == SCHURIAN:
                results[m] = asdict(hh1_schurian(b))
            else:
                results[m] = {"hh1_dim": hh1_monomial(b), "method": MONOMIAL}
        except PreconditionError as exc:
            if method != "all":
                raise
            skipped.append(f"{m}: {exc}")
    return results, skipped


@cli.command()
@click.argument("file", type=click.Path(dir_okay=False))
@click.option("--method", type=click.Choice(METHODS), default=ORACLE, show_default=True)
@common
def hh1(file, method, as_json, max_path_len):
    """dim HH^1 by one method, or all applicable methods cross-checked."""
    pf = _load(file)
    b = _basis(pf.parsed, max_path_len)
    try:
        results, skipped = _hh1_values(b, method)
    except PreconditionError as exc:
        _fail_input(f"method {method} not applicable: {exc}")
    values = {r["hh1_dim"] for r in results.values()}
    agree = len(values) == 1
    first = next(iter(results.values()))
    cls = classify(b)
    out = {
        "hh1_dim": first["hh1_dim"],
        "dim_der0": first.get("dim_der0"),
        "dim_int0": first.get("dim_int0"),
        "methods_agree": agree,
        "methods": {m: r["hh1_dim"] for m, r in results.items()},
        "schurian": cls.schurian,
        "gentle": cls.gentle,
        "monomial": cls.monomial,
    }
    # for a B-role file |R| is the number of new arrows; hereditary input has |R| = 0
    if cls.monomial and (pf.new_arrows or not pf.parsed.relations):
        eps = epsilon_report(b, len(pf.new_arrows))
        out["epsilon"] = eps.epsilon
        out["epsilon_prime"] = eps.epsilon_prime
    if skipped:
        out["skipped"] = skipped
    _emit(out, as_json, f"{file}:")
    if not agree:
        click.echo(f"methods disagree: {out['methods']}", err=True)
        sys.exit(1)


@cli.command()
@click.argument("file", type=click.Path(dir_okay=False))
@click.option("--out", "out", type=click.Path(file_okay=False), help="Directory for the B file.")
@click.option("--quiver-only", is_flag=True, help="Only add new arrows, emit no relations.")
@common
def relext(file, out, quiver_only, as_json, max_path_len):
    """Relation-extension of a tilted presentation.

    Gentle input of type A or A-tilde gets the full B presentation; anything
    else gets the extended quiver only.
    """
    pf = _load(file)
    c = pf.parsed
    _basis(c, max_path_len)
    kind = gentle_tilted_type(c)
    try:
        if not quiver_only and kind != "notApplicable":
            pair = auto_relext_gentle(c)
            mode = "auto-gentle"
        else:
            q, corr = relext_quiver(c)
            pair = ExtensionPair(c, Presentation(q), frozenset(corr), corr)
            mode = "quiver-only"
    except ValueError as exc:
        _fail_input(str(exc))
    text = dsl.emit(pair.b_presentation, pair.new_arrows, pair.correspondence,
                    header=f"relation-extension of {FsPath(file).name} ({mode})")
    if out:
        dest = FsPath(out)
        dest.mkdir(parents=True, exist_ok=True)
        name = FsPath(file).name
        stem = name[:-4] if name.endswith(".c.q") else FsPath(file).stem
        target = dest / f"{stem}.b.q"
        target.write_text(text, encoding="utf-8")
        _emit({"written": str(target), "mode": mode, "new_arrows": len(pair.new_arrows)},
              as_json)
    else:
        click.echo(text, nl=False)


def _pair_from_files(c_file, b_file) -> ExtensionPair:
    c = _load(c_file)
    b = _load(b_file)
    if c.new_arrows:
        _fail_input(f"{c_file}: arrows tagged new in a C-role file")
    return ExtensionPair(c.parsed, b.parsed, b.new_arrows, dict(b.correspondences))


def _verify(pair, assert_rep_finite, max_len) -> dict:
    try:
        rep = verify_theorem(pair, assert_rep_finite, max_len)
    except (PreconditionError, BinomialShapeError) as exc:
        _fail_input(str(exc))
    return rep.to_json() | {"ok": rep.ok}


@cli.command("pair-verify")
@click.argument("c_file", type=click.Path(dir_okay=False))
@click.argument("b_file", type=click.Path(dir_okay=False))
@click.option("--assert-rep-finite", is_flag=True, help="Also check the representation-finite consequences (n = |R| - n').")
@common
def pair_verify(c_file, b_file, assert_rep_finite, as_json, max_path_len):
    """Verify dim HH^1(B) = dim HH^1(C) + n_{B,C} on a pair of files."""
    data = _verify(_pair_from_files(c_file, b_file), assert_rep_finite, max_path_len)
    _emit(data, as_json, f"{c_file} / {b_file}:")
    if not data["ok"]:
        failed = [k for k, v in data["checks"].items() if not v]
        click.echo(f"failed checks: {', '.join(failed)}", err=True)
        sys.exit(1)


@cli.command()
@click.argument("kind", type=click.Choice(corpus_mod.KINDS))
@click.option("--d", "d", type=int, default=1, show_default=True, help="Family parameter for cd.")
@click.option("--vertices", type=int, default=6, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--count", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--out", "out", type=click.Path(file_okay=False), default=".", show_default=True)
@click.option("--json", "as_json", is_flag=True)
def corpus(kind, d, vertices, seed, count, out, as_json):
    """Write example pairs as <stem>.c.q / <stem>.b.q files."""
    try:
        spec = corpus_mod.CorpusSpec(kind, d=d, vertices=vertices, seed=seed, count=count)
        written = corpus_mod.write_corpus(spec, out)
    except (ValueError, RuntimeError) as exc:
        _fail_input(str(exc))
    files = [str(p) for pair in written for p in pair]
    if as_json:
        click.echo(json.dumps({"files": files}))
    else:
        for f in files:
            click.echo(f)


def _batch_one(args):
    c_file, b_file, assert_rep_finite, max_len = args
    try:
        data = _verify(_pair_from_files(c_file, b_file), assert_rep_finite, max_len)
        return {"pair": FsPath(c_file).name[:-4], **data}
    except click.ClickException as exc:
        return {"pair": FsPath(c_file).name[:-4], "ok": False, "error": exc.format_message()}


@cli.command()
@click.argument("directory", type=click.Path(file_okay=False, exists=True))
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--assert-rep-finite", is_flag=True)
@common
def batch(directory, jobs, assert_rep_finite, as_json, max_path_len):
    """pair-verify every <stem>.c.q / <stem>.b.q pair in a directory."""
    d = FsPath(directory)
    tasks = []
    for c_file in sorted(d.glob("*.c.q")):
        b_file = c_file.with_name(c_file.name[:-4] + ".b.q")
        if not b_file.exists():
            _fail_input(f"{c_file}: missing partner {b_file.name}")
        tasks.append((str(c_file), str(b_file), assert_rep_finite, max_path_len))
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_batch_one, tasks))
    else:
        results = [_batch_one(t) for t in tasks]
    n_bad = sum(not r["ok"] for r in results)
    if as_json:
        click.echo(json.dumps({"results": results, "failures": n_bad}, sort_keys=True))
    else:
        for r in results:
            if "error" in r:
                click.echo(f"{r['pair']}: ERROR {r['error']}")
            else:
                status = "ok" if r["ok"] else "FAIL"
                click.echo(f"{r['pair']}: {status}  HH1(B)={r['hh1_dim']} HH1(C)={r['hh1_c']} n={r['n_bc']}")
        click.echo(f"{len(results)} pairs, {n_bad} failing")
    if n_bad:
        sys.exit(1)


def main(argv=None):
    cli.main(args=argv, prog_name="hhquiver")


if __name__ == "__main__":
    main()
