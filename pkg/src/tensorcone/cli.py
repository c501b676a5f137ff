"""Command-line interface for the tensor-cone engine.

Subcommands compute facet systems, graded face lists, product tables, and
point classifications, or run the oracle cross-checks.  Output is
deterministic JSON or CSV; every flag can also come from the environment
with the TENSORCONE_ prefix.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from dataclasses import replace

import click

from . import __version__
from .bkprod import enumerate_point_tuples
from .checks import require_ok, verify_cone
from .config import DEFAULT_CONFIG, ENV_PREFIX
from .errors import (
    ConfigError,
    ConsistencyError,
    TensorConeError,
    VerificationFailure,
)
from .facecone import (
    enumerate_faces,
    equation_rows,
    facet_inequalities,
    hasse_diagram,
    membership,
)
from .oracle import sample_cone
from .rootsys import Weight, build_root_system
from .weylgrp import weyl_group

SCHEMA_VERSION = 1


def _config_from(budget: int | None, jobs: int | None):
    config = DEFAULT_CONFIG
    if budget is not None:
        config = replace(config, tuple_budget=budget)
    if jobs is not None:
        config = replace(config, jobs=jobs)
    return config


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _json_text(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _csv_text(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _parabolic_from_complement(rs, text: str):
    """Parabolic whose Levi omits exactly the listed simple indices."""
    text = text.strip()
    if not text:
        raise ConfigError("empty parabolic complement selects the whole group")
    try:
        complement = {int(x) for x in text.split(",")}
    except ValueError:
        raise ConfigError(
            f"bad complement {text!r}; expected comma-separated simple indices"
        )
    levi = tuple(i for i in range(1, rs.rank + 1) if i not in complement)
    if len(complement) + len(levi) != rs.rank:
        raise ConfigError(f"complement {sorted(complement)} has out-of-range indices")
    return weyl_group(rs).parabolic(levi)


def _parse_point(text: str, rank: int, s: int) -> tuple[Weight, ...]:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"point is not valid JSON: {exc}")
    if not isinstance(raw, list) or len(raw) != s + 1:
        raise ConfigError(f"point must be a list of {s + 1} weights")
    out = []
    for item in raw:
        if not isinstance(item, list) or len(item) != rank:
            raise ConfigError(f"each weight needs {rank} coordinates")
        out.append(Weight.deserialize(item))
    return tuple(out)


def _face_dict(rs, face) -> dict:
    return {
        "levi": list(face.levi),
        "complement": list(face.complement),
        "codim": face.codim,
        "classes": [list(w.word) for w in face.reps],
        "rows": [[str(x) for x in row] for row in equation_rows(rs, face)],
    }


_type_option = click.option(
    "--type", "cartan", required=True, envvar=f"{ENV_PREFIX}_TYPE",
    help="Cartan type, e.g. A2 or A1xA1.",
)
_s_option = click.option(
    "--s", "s", default=2, show_default=True, envvar=f"{ENV_PREFIX}_S",
    help="Number of tensor factors minus one.",
)
_format_option = click.option(
    "--format", "fmt", type=click.Choice(["json", "csv"]), default="json",
    show_default=True, envvar=f"{ENV_PREFIX}_FORMAT",
)
_out_option = click.option("--out", default=None, help="Write output to this path.")
_jobs_option = click.option(
    "--jobs", default=0, show_default=True, envvar=f"{ENV_PREFIX}_JOBS",
    help="Worker processes for sampling; 0 means all available cores.",
)
_budget_option = click.option(
    "--budget", default=None, type=int, envvar=f"{ENV_PREFIX}_BUDGET",
    help="Override the tuple enumeration budget.",
)


@click.group(context_settings={"auto_envvar_prefix": ENV_PREFIX})
@click.version_option(version=__version__, prog_name="tensorcone")
def cli() -> None:
    """Exact face lattice of tensor cones of semisimple groups."""


@cli.command()
@_type_option
@_s_option
@_format_option
@_out_option
@_jobs_option
@_budget_option
@click.option("--box", default=None, type=int, help="Sample box for orientation.")
@click.option("--depth", default=None, type=int, help="Stretch depth for sampling.")
def facets(cartan, s, fmt, out, jobs, budget, box, depth) -> None:
    """Oriented facet inequalities of the cone."""
    config = _config_from(budget, jobs)
    rs = build_root_system(cartan, config)
    box = config.box_bound if box is None else box
    depth = config.saturation_depth if depth is None else depth
    sample = sample_cone(rs, s, box, depth, config, jobs=config.resolved_jobs())
    ineqs = facet_inequalities(rs, s, config, sample=sample)
    if fmt == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "cartan_type": str(rs.cartan_type),
            "s": s,
            "variables": (s + 1) * rs.rank,
            "facets": [
                {
                    **_face_dict(rs, f.face),
                    "orientation": f.orientation,
                    "row": [str(x) for x in f.row(rs)],
                }
                for f in ineqs
            ],
        }
        _emit(_json_text(doc), out)
    else:
        d = (s + 1) * rs.rank
        header = ["complement", "classes", "orientation"] + [
            f"x{i + 1}" for i in range(d)
        ]
        rows = [
            [
                str(f.face.complement[0]),
                "|".join(" ".join(str(i) for i in w.word) for w in f.face.reps),
                str(f.orientation),
            ]
            + [str(x) for x in f.row(rs)]
            for f in ineqs
        ]
        _emit(_csv_text(header, rows), out)


@cli.command()
@_type_option
@_s_option
@_format_option
@_out_option
@_budget_option
@click.option("--max-codim", default=None, type=int, help="Deepest codimension.")
def faces(cartan, s, fmt, out, budget, max_codim) -> None:
    """Graded list of faces with containment cover relations."""
    config = _config_from(budget, None)
    rs = build_root_system(cartan, config)
    face_list = enumerate_faces(rs, s, max_codim, config)
    edges = hasse_diagram(rs, face_list)
    if fmt == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "cartan_type": str(rs.cartan_type),
            "s": s,
            "faces": [_face_dict(rs, f) for f in face_list],
            "hasse": [list(e) for e in edges],
        }
        _emit(_json_text(doc), out)
    else:
        header = ["index", "codim", "complement", "classes"]
        rows = [
            [
                str(i),
                str(f.codim),
                " ".join(str(k) for k in f.complement),
                "|".join(" ".join(str(j) for j in w.word) for w in f.reps),
            ]
            for i, f in enumerate(face_list)
        ]
        _emit(_csv_text(header, rows), out)


@cli.command(name="bk-table")
@_type_option
@_s_option
@_format_option
@_out_option
@_budget_option
@click.option("--complement", default="", envvar=f"{ENV_PREFIX}_COMPLEMENT",
              help="Comma-separated simple indices outside the Levi subset.")
def bk_table(cartan, s, fmt, out, budget, complement) -> None:
    """Degenerate-product point coefficients for one parabolic."""
    config = _config_from(budget, None)
    rs = build_root_system(cartan, config)
    p = _parabolic_from_complement(rs, complement)
    tuples = enumerate_point_tuples(rs, s, p, config)
    for t in tuples:
        if t.bk_coeff not in (0, t.cup_coeff):
            raise ConsistencyError(
                "degenerate coefficient outside the 0-or-cup dichotomy"
            )
    if fmt == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "cartan_type": str(rs.cartan_type),
            "s": s,
            "levi": list(p.levi),
            "tuples": [
                {
                    "classes": [list(w.word) for w in t.reps],
                    "cup": t.cup_coeff,
                    "movable": t.movable,
                    "bk": t.bk_coeff,
                }
                for t in tuples
            ],
        }
        _emit(_json_text(doc), out)
    else:
        header = ["classes", "cup", "movable", "bk"]
        rows = [
            [
                "|".join(" ".join(str(j) for j in w.word) for w in t.reps),
                str(t.cup_coeff),
                str(int(t.movable)),
                str(t.bk_coeff),
            ]
            for t in tuples
        ]
        _emit(_csv_text(header, rows), out)


@cli.command(name="cup-table")
@_type_option
@_s_option
@_format_option
@_out_option
@_budget_option
@click.option("--complement", default="", envvar=f"{ENV_PREFIX}_COMPLEMENT",
              help="Comma-separated simple indices outside the Levi subset.")
def cup_table(cartan, s, fmt, out, budget, complement) -> None:
    """Plain cup-product point coefficients for one parabolic."""
    config = _config_from(budget, None)
    rs = build_root_system(cartan, config)
    p = _parabolic_from_complement(rs, complement)
    tuples = enumerate_point_tuples(rs, s, p, config)
    if fmt == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "cartan_type": str(rs.cartan_type),
            "s": s,
            "levi": list(p.levi),
            "tuples": [
                {"classes": [list(w.word) for w in t.reps], "cup": t.cup_coeff}
                for t in tuples
            ],
        }
        _emit(_json_text(doc), out)
    else:
        header = ["classes", "cup"]
        rows = [
            [
                "|".join(" ".join(str(j) for j in w.word) for w in t.reps),
                str(t.cup_coeff),
            ]
            for t in tuples
        ]
        _emit(_csv_text(header, rows), out)


@cli.command()
@_type_option
@_s_option
@_out_option
@_jobs_option
@_budget_option
@click.option("--box", default=None, type=int, help="Lattice box for the sample.")
@click.option("--depth", default=None, type=int, help="Stretch depth for sampling.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text",
              show_default=True, envvar=f"{ENV_PREFIX}_FORMAT")
def verify(cartan, s, out, jobs, budget, box, depth, fmt) -> None:
    """Cross-check facets and faces against the brute-force oracle."""
    config = _config_from(budget, jobs)
    rs = build_root_system(cartan, config)
    box = config.box_bound if box is None else box
    depth = config.saturation_depth if depth is None else depth
    report = verify_cone(rs, s, box, depth, config, jobs=config.resolved_jobs())
    if fmt == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "cartan_type": report.cartan_type,
            "s": report.s,
            "ok": report.ok,
            "sample_size": report.sample_size,
            "facet_count": report.facet_count,
            "face_count": report.face_count,
            "validity_failures": len(report.validity_failures),
            "tightness_failures": len(report.tightness_failures),
            "completeness_failures": [
                list(c) for c in report.completeness_failures[:10]
            ],
            "injectivity_failures": [
                list(p) for p in report.injectivity_failures[:10]
            ],
        }
        _emit(_json_text(doc), out)
    else:
        _emit("\n".join(report.lines()) + "\n", out)
    require_ok(report)


@cli.command(name="membership")
@_type_option
@_s_option
@_format_option
@_out_option
@_jobs_option
@_budget_option
@click.option("--point", required=True, envvar=f"{ENV_PREFIX}_POINT",
              help="JSON list of s+1 weights, each a list of coordinates.")
@click.option("--box", default=None, type=int, help="Sample box for orientation.")
@click.option("--depth", default=None, type=int, help="Stretch depth for sampling.")
def member(cartan, s, fmt, out, jobs, budget, point, box, depth) -> None:
    """Classify a weight tuple against the cone."""
    config = _config_from(budget, jobs)
    rs = build_root_system(cartan, config)
    box = config.box_bound if box is None else box
    depth = config.saturation_depth if depth is None else depth
    weights = _parse_point(point, rs.rank, s)
    sample = sample_cone(rs, s, box, depth, config, jobs=config.resolved_jobs())
    ineqs = facet_inequalities(rs, s, config, sample=sample)
    face_list = enumerate_faces(rs, s, None, config)
    result = membership(rs, weights, ineqs, face_list)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "cartan_type": str(rs.cartan_type),
        "s": s,
        "point": [w.serialize() for w in weights],
        "category": result.category,
        "facet_values": [str(v) for v in result.facet_values],
        "active_facets": list(result.active_facets),
        "active_faces": list(result.active_faces),
        "active_walls": [list(w) for w in result.active_walls],
    }
    if fmt == "json":
        _emit(_json_text(doc), out)
    else:
        header = ["field", "value"]
        rows = [[k, json.dumps(v)] for k, v in sorted(doc.items())]
        _emit(_csv_text(header, rows), out)


def main(argv: list[str] | None = None) -> int:
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.exceptions.Abort:
        return 2
    except click.UsageError as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        return 2
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except VerificationFailure as exc:
        click.echo(f"verification failed: {exc}", err=True)
        return exc.exit_code
    except TensorConeError as exc:
        click.echo(f"error: {exc}", err=True)
        return exc.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
