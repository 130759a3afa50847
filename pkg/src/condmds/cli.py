"""Command-line interface.

Three subcommands: ``condmds`` fits conditional MDS on CSV inputs (or the
built-in kinship fixture when no files are given), ``condisomap`` does the
same on geodesic graph distances, and ``kinship-demo`` is a shortcut for
the bundled dataset. Every run writes ``embedding.csv``, ``b_matrix.csv``
and ``report.json`` into the output directory, plus ``embedding.svg`` with
``--plot``.

Exit codes: 0 success, 1 numeric failure, 2 invalid input or flags,
3 disconnected neighborhood graph.
"""

import csv
import io
import json
import sys
from pathlib import Path

import click
import numpy as np

from condmds.datasets import load_kinship
from condmds.exceptions import (
    GraphDisconnectedError,
    InputValidationError,
    NumericError,
)
from condmds.geodesic import cond_isomap
from condmds.matrix_io import (
    parse_auxiliary_csv,
    parse_dissimilarity_csv,
    serialize_auxiliary_csv,
)
from condmds.smacof import cond_smacof
from condmds.svg import scatter_svg

OUT_DIR_DEFAULT = "condmds-out"


def _fit_options(f):
    opts = [
        click.option("--p", "n_components", type=int, default=2, show_default=True,
                     help="Embedding dimension."),
        click.option("--gamma", type=float, default=1e-6, show_default=True,
                     help="Minimum stress improvement per iteration."),
        click.option("--max-iter", type=int, default=1000, show_default=True,
                     help="Iteration cap."),
        click.option("--seed", type=int, default=42, show_default=True,
                     help="Seed of the first restart."),
        click.option("--restarts", type=int, default=1, show_default=True,
                     help="Random restarts; best stress wins."),
        click.option("--weights", type=click.Choice(["uniform", "sammon"]),
                     default="uniform", show_default=True,
                     help="Weight scheme for the stress."),
        click.option("--diag-b", is_flag=True,
                     help="Constrain the conditioning transform to a diagonal."),
        click.option("--cond", "cond_list", default=None,
                     help="Comma-separated conditioning variables "
                          "(default: all auxiliary columns)."),
        click.option("--plot", is_flag=True, help="Also write embedding.svg (needs --p 2)."),
        click.option("--out", "out_dir", type=click.Path(file_okay=False),
                     default=OUT_DIR_DEFAULT, show_default=True,
                     help="Output directory."),
    ]
    for opt in reversed(opts):
        f = opt(f)
    return f


def _input_options(f):
    opts = [
        click.option("--delta", "delta_path",
                     type=click.Path(exists=True, dir_okay=False),
                     default=None,
                     help="Dissimilarity CSV (default: built-in kinship data)."),
        click.option("--aux", "aux_path",
                     type=click.Path(exists=True, dir_okay=False),
                     default=None,
                     help="Auxiliary coordinates CSV."),
    ]
    for opt in reversed(opts):
        f = opt(f)
    return f


@click.group()
def main():
    """Conditional multidimensional scaling and conditional ISOMAP."""


def _load_inputs(delta_path, aux_path, cond_list):
    """Resolve input files (or the kinship fixture) into (delta, aux, labels, cond)."""
    if delta_path is None and aux_path is None:
        return _kinship_inputs(cond_list)
    if delta_path is None or aux_path is None:
        raise InputValidationError(
            "--delta and --aux must be given together (omit both for the "
            "built-in kinship data)"
        )
    delta, labels = parse_dissimilarity_csv(Path(delta_path).read_bytes())
    aux_all, columns = parse_auxiliary_csv(Path(aux_path).read_bytes(), labels)
    if cond_list is None:
        cond = list(columns)
    else:
        cond = [c.strip() for c in cond_list.split(",") if c.strip()]
        missing = [c for c in cond if c not in columns]
        if missing:
            raise InputValidationError(
                f"--cond names not in the auxiliary file: {', '.join(missing)} "
                f"(available: {', '.join(columns)})"
            )
    idx = [columns.index(c) for c in cond]
    return delta, aux_all[:, idx], labels, cond


def _kinship_inputs(cond_list):
    data = load_kinship()
    if cond_list is None:
        cond = ["gender"]
    else:
        cond = [c.strip() for c in cond_list.split(",") if c.strip()]
    try:
        aux = data.auxiliary(cond)
    except KeyError as exc:
        raise InputValidationError(str(exc.args[0])) from None
    return data.delta, aux, list(data.labels), cond


def _write_outputs(out_dir, command, labels, report, cond, config, plot,
                   dropped=None):
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    p = report.embedding.shape[1]
    coord_names = [f"u_{i + 1}" for i in range(p)]
    (out / "embedding.csv").write_text(
        serialize_auxiliary_csv(report.embedding, labels, coord_names)
    )
    (out / "b_matrix.csv").write_text(_b_matrix_csv(report.b_matrix, cond))
    payload = {
        "command": command,
        "config": config,
        "final_stress": report.final_stress,
        "iterations": report.n_iter,
        "termination": report.termination,
        "seed": report.seed,
        "stress_trace": [float(s) for s in report.stress_trace],
        "restarts": [
            {"seed": s, "final_stress": v} for s, v in report.restart_stresses
        ],
    }
    if dropped is not None:
        payload["dropped_labels"] = dropped
    (out / "report.json").write_text(json.dumps(payload, indent=2) + "\n")
    if plot:
        (out / "embedding.svg").write_text(scatter_svg(report.embedding, labels))
    click.echo(
        f"{command}: stress {report.final_stress:.6g} after {report.n_iter} "
        f"iterations ({report.termination}); outputs in {out}"
    )


def _b_matrix_csv(b, cond):
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(list(cond))
    for row in np.asarray(b):
        writer.writerow([repr(float(x)) for x in row])
    return out.getvalue()


def _run(body):
    try:
        body()
    except InputValidationError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    except GraphDisconnectedError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(3)
    except (NumericError, np.linalg.LinAlgError) as exc:
        click.echo(f"numeric error: {exc}", err=True)
        sys.exit(1)


def _check_plot(plot, n_components):
    if plot and n_components != 2:
        raise InputValidationError(
            "--plot requires a 2-D embedding: pass --p 2 or drop --plot"
        )


@main.command("condmds")
@_input_options
@_fit_options
def condmds_cmd(delta_path, aux_path, cond_list, n_components, gamma, max_iter,
                seed, restarts, weights, diag_b, plot, out_dir):
    """Fit conditional MDS on a dissimilarity matrix."""

    def body():
        _check_plot(plot, n_components)
        delta, aux, labels, cond = _load_inputs(delta_path, aux_path, cond_list)
        report = cond_smacof(
            delta, aux, weights, n_components=n_components, gamma=gamma,
            max_iter=max_iter, seed=seed, diag_b=diag_b, restarts=restarts,
        )
        config = {
            "p": n_components, "gamma": gamma, "max_iter": max_iter,
            "seed": seed, "restarts": restarts, "weights": weights,
            "diag_b": diag_b, "cond": cond,
        }
        _write_outputs(out_dir, "condmds", labels, report, cond, config, plot)

    _run(body)


@main.command("condisomap")
@_input_options
@_fit_options
@click.option("--k", type=int, default=None,
              help="Neighbors per point for the graph (exclusive with --epsilon).")
@click.option("--epsilon", type=float, default=None,
              help="Radius threshold for the graph (exclusive with --k).")
@click.option("--largest-component", is_flag=True,
              help="On a disconnected graph, keep the largest component "
                   "instead of failing.")
def condisomap_cmd(delta_path, aux_path, cond_list, n_components, gamma,
                   max_iter, seed, restarts, weights, diag_b, plot, out_dir,
                   k, epsilon, largest_component):
    """Fit conditional ISOMAP (conditional MDS on graph distances)."""

    def body():
        _check_plot(plot, n_components)
        delta, aux, labels, cond = _load_inputs(delta_path, aux_path, cond_list)
        report = cond_isomap(
            delta, aux, weights, k=k, epsilon=epsilon,
            on_disconnect="largest" if largest_component else "error",
            n_components=n_components, gamma=gamma, max_iter=max_iter,
            seed=seed, diag_b=diag_b, restarts=restarts,
        )
        kept = list(report.kept_indices)
        kept_labels = [labels[i] for i in kept]
        dropped = [l for i, l in enumerate(labels) if i not in set(kept)]
        config = {
            "p": n_components, "gamma": gamma, "max_iter": max_iter,
            "seed": seed, "restarts": restarts, "weights": weights,
            "diag_b": diag_b, "cond": cond, "k": k, "epsilon": epsilon,
            "largest_component": largest_component,
        }
        _write_outputs(out_dir, "condisomap", kept_labels, report, cond,
                       config, plot, dropped=dropped)

    _run(body)


@main.command("kinship-demo")
@_fit_options
def kinship_demo_cmd(cond_list, n_components, gamma, max_iter, seed, restarts,
                     weights, diag_b, plot, out_dir):
    """Run conditional MDS on the built-in kinship terms dataset.

    Conditioning variables: gender, kinship_degree, generation_difference,
    generation (default: gender).
    """

    def body():
        _check_plot(plot, n_components)
        delta, aux, labels, cond = _kinship_inputs(cond_list)
        report = cond_smacof(
            delta, aux, weights, n_components=n_components, gamma=gamma,
            max_iter=max_iter, seed=seed, diag_b=diag_b, restarts=restarts,
        )
        config = {
            "p": n_components, "gamma": gamma, "max_iter": max_iter,
            "seed": seed, "restarts": restarts, "weights": weights,
            "diag_b": diag_b, "cond": cond,
        }
        _write_outputs(out_dir, "kinship-demo", labels, report, cond, config, plot)

    _run(body)


if __name__ == "__main__":
    main()
