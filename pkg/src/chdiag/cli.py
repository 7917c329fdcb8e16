"""Command line interface.  Worker count comes from ``CHDIAG_WORKERS``."""

from __future__ import annotations

import json
import sys
from collections import defaultdict
from pathlib import Path

import click

from .epd import EPDError, parse_epd
from .figures import hard_table_tsv, plot_hard_table
from .moves import is_hard
from .pipeline import (GuardrailError, RunConfig, dedup_spherical_mirror, expected_diagram_count,
                       hard_table, higher_genus_hard_diagram, make_record, read_jsonl,
                       run_enumeration, verify_record, write_jsonl)
from .render import render_svg
from .resolution import is_admissible
from .shadows import shadow_codes
from .surface import yoshikawa_name


def _parse(text: str):
    try:
        return parse_epd(text)
    except EPDError as e:
        raise click.BadParameter(str(e), param_hint="--epd") from None


def _record_json(code, index: int = 1) -> str:
    rec = make_record(code)
    rec.name = yoshikawa_name(code, index) if rec.hard else None
    return rec.to_json()


@click.group()
def main() -> None:
    """Enumerate and classify marked graph diagrams of surface-links."""


@main.command()
@click.option("--n", "n", type=int, required=True, help="number of vertices")
@click.option("--out", type=click.Path(dir_okay=False), help="write canonical codes as hex lines")
def shadows(n: int, out: str | None) -> None:
    """Count prime reduced shadows with N vertices."""
    if n < 2:
        raise click.BadParameter("n must be at least 2", param_hint="--n")
    codes = shadow_codes(n)
    click.echo("n\tS\tDG")
    click.echo(f"{n}\t{len(codes)}\t{expected_diagram_count(n, len(codes))}")
    if out:
        Path(out).write_text("".join(c.hex() + "\n" for c in codes))


@main.command()
@click.option("--n", "n", type=int, required=True)
@click.option("--markers", default=None, help="comma separated marker counts, e.g. 0,2,4")
@click.option("--all", "include_all", flag_value=True, default=False,
              help="emit every enumerated diagram")
@click.option("--hard-only", "include_all", flag_value=False, help="emit hard diagrams only (default)")
@click.option("--out", type=click.Path(dir_okay=False), required=True)
def enumerate(n: int, markers: str | None, include_all: bool, out: str) -> None:
    """Enumerate diagrams with N vertices into a JSONL file."""
    try:
        counts = None if markers is None else tuple(sorted({int(x) for x in markers.split(",") if x}))
        config = RunConfig(n, counts, include_all)
    except (ValueError, GuardrailError) as e:
        raise click.BadParameter(str(e)) from None
    res = run_enumeration(config)
    write_jsonl(res.records, out)
    click.echo("n\t" + "\t".join(f"M{k}" for k in range(n + 1)))
    click.echo(f"{n}\t" + "\t".join(map(str, res.table_row())))
    failures = 0
    if counts is None and res.diagrams != expected_diagram_count(n, res.shadows):
        click.echo(f"diagram count {res.diagrams} differs from "
                   f"{expected_diagram_count(n, res.shadows)}", err=True)
        failures += 1
    for rec in res.records:
        if rec.hard:
            bad = verify_record(rec)
            if bad:
                click.echo(f"re-verification failed ({', '.join(bad)}): {rec.epd}", err=True)
                failures += 1
    click.echo(f"shadows={res.shadows} diagrams={res.diagrams} records={len(res.records)} "
               f"verification_failures={failures}", err=True)
    sys.exit(1 if failures else 0)


@main.command()
@click.option("--epd", "text", required=True, help="EPD code")
def classify(text: str) -> None:
    """Admissibility, hardness and base surface of one code (JSON)."""
    click.echo(_record_json(_parse(text)))


@main.command()
@click.option("--in", "path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--out", type=click.Path(dir_okay=False), help="write class representatives as JSONL")
def dedup(path: str, out: str | None) -> None:
    """Group the hard records of a JSONL file up to spherical isotopy and mirror."""
    buckets = defaultdict(list)
    for rec in read_jsonl(path):
        if rec.hard:
            buckets[(rec.n, rec.m)].append(rec)
    reps = []
    click.echo("n\tm\traw\tclasses")
    for key in sorted(buckets):
        classes = dedup_spherical_mirror(buckets[key])
        click.echo(f"{key[0]}\t{key[1]}\t{len(buckets[key])}\t{len(classes)}")
        for cls in classes:
            click.echo("\t" + "\t".join(r.name or "" for r in cls))
            reps.append(cls[0])
    if out:
        write_jsonl(reps, out)


@main.command()
@click.option("--in", "paths", multiple=True, required=True,
              type=click.Path(exists=True, dir_okay=False), help="JSONL file (repeatable)")
@click.option("--out", "prefix", default="tables", show_default=True,
              help="output prefix for PREFIX.tsv and PREFIX.png")
def tables(paths: tuple[str, ...], prefix: str) -> None:
    """Hard-diagram counts by n and marked vertices: TSV plus a PNG figure."""
    records = [r for p in paths for r in read_jsonl(p)]
    rows = hard_table(records)
    text = hard_table_tsv(rows)
    Path(f"{prefix}.tsv").write_text(text)
    plot_hard_table(rows, f"{prefix}.png")
    click.echo(text, nl=False)


@main.command("gen-genus")
@click.option("--k", "k", type=int, required=True)
def gen_genus(k: int) -> None:
    """Hard diagram of an orientable surface with Euler characteristic 4-4K."""
    if k < 1:
        raise click.BadParameter("k must be at least 1", param_hint="--k")
    code = higher_genus_hard_diagram(k)
    ok = is_admissible(code) and is_hard(code)
    click.echo(_record_json(code))
    sys.exit(0 if ok else 1)


@main.command()
@click.option("--epd", "text", required=True)
@click.option("--out", type=click.Path(dir_okay=False), required=True)
def render(text: str, out: str) -> None:
    """Draw a code as SVG."""
    Path(out).write_text(render_svg(_parse(text)))


if __name__ == "__main__":
    main()
