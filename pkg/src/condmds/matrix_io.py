"""CSV ingestion and serialization for labeled matrices.

Formats (UTF-8, '.' decimal separator, no locale formatting):

* dissimilarity: header ``,<label1>,...,<labelN>``, then one row per label,
  ``<label>,<v1>,...,<vN>``; row order must match the header.
* auxiliary: header ``label,<var1>,...,<varq>``, one row per label in any
  order; rows are matched to the dissimilarity labels by name.

Serialization uses shortest round-trip float formatting, so parsing a
serialized matrix reproduces it exactly.
"""

import csv
import io

import numpy as np

from condmds.exceptions import InputValidationError
from condmds.validation import check_dissimilarity

__all__ = [
    "parse_dissimilarity_csv",
    "parse_auxiliary_csv",
    "serialize_dissimilarity_csv",
    "serialize_auxiliary_csv",
]


def _rows(data):
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    rows = list(csv.reader(io.StringIO(data)))
    return [r for r in rows if r]


def _parse_cell(text, row_name, col_name):
    try:
        return float(text)
    except ValueError:
        raise InputValidationError(
            f"cell ({row_name}, {col_name}) is not numeric: {text!r}"
        ) from None


def parse_dissimilarity_csv(data):
    """Parse a labeled dissimilarity CSV into (matrix, labels).

    Validates shape, label consistency, symmetry (to 1e-9), nonnegativity
    and the zero diagonal; every failure names the offending cell.
    """
    rows = _rows(data)
    if not rows:
        raise InputValidationError("empty dissimilarity CSV")
    labels = [c.strip() for c in rows[0][1:]]
    n = len(labels)
    if n < 2:
        raise InputValidationError(
            f"dissimilarity CSV needs at least 2 labels, found {n}"
        )
    if len(rows) - 1 != n:
        raise InputValidationError(
            f"expected {n} data rows to match the header, found {len(rows) - 1}"
        )
    delta = np.zeros((n, n))
    for i, row in enumerate(rows[1:]):
        if len(row) != n + 1:
            raise InputValidationError(
                f"row {row[0]!r} has {len(row) - 1} values, expected {n}"
            )
        name = row[0].strip()
        if name != labels[i]:
            raise InputValidationError(
                f"row {i + 1} is labeled {name!r} but the header says "
                f"{labels[i]!r}; row and column orders must match"
            )
        for j, cell in enumerate(row[1:]):
            delta[i, j] = _parse_cell(cell, name, labels[j])
    try:
        delta = check_dissimilarity(delta)
    except InputValidationError as exc:
        raise InputValidationError(_relabel(str(exc), labels)) from None
    return delta, labels


def _relabel(message, labels):
    """Rewrite index pairs in a validation message using the CSV labels."""
    for i, li in enumerate(labels):
        for j, lj in enumerate(labels):
            message = message.replace(f"({i}, {j})", f"({li}, {lj})")
    return message


def parse_auxiliary_csv(data, labels):
    """Parse an auxiliary CSV into (matrix, column_names).

    Rows are reordered to match ``labels``; the label sets must coincide
    exactly (missing or extra labels raise).
    """
    rows = _rows(data)
    if not rows:
        raise InputValidationError("empty auxiliary CSV")
    columns = [c.strip() for c in rows[0][1:]]
    if not columns:
        raise InputValidationError("auxiliary CSV needs at least one data column")
    values = {}
    for row in rows[1:]:
        if len(row) != len(columns) + 1:
            raise InputValidationError(
                f"auxiliary row {row[0]!r} has {len(row) - 1} values, "
                f"expected {len(columns)}"
            )
        name = row[0].strip()
        if name in values:
            raise InputValidationError(f"duplicate auxiliary row for label {name!r}")
        values[name] = [
            _parse_cell(cell, name, columns[j]) for j, cell in enumerate(row[1:])
        ]
    missing = [l for l in labels if l not in values]
    if missing:
        raise InputValidationError(
            f"auxiliary CSV is missing labels: {', '.join(missing)}"
        )
    extra = [l for l in values if l not in set(labels)]
    if extra:
        raise InputValidationError(
            f"auxiliary CSV has labels absent from the dissimilarity matrix: "
            f"{', '.join(extra)}"
        )
    aux = np.asarray([values[l] for l in labels], dtype=float)
    return aux, columns


def _fmt(x):
    return repr(float(x))


def serialize_dissimilarity_csv(delta, labels):
    """Serialize a dissimilarity matrix to the labeled CSV format."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow([""] + list(labels))
    for name, row in zip(labels, np.asarray(delta)):
        writer.writerow([name] + [_fmt(x) for x in row])
    return out.getvalue()


def serialize_auxiliary_csv(aux, labels, columns):
    """Serialize an N x q matrix with row labels and column names."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["label"] + list(columns))
    for name, row in zip(labels, np.asarray(aux)):
        writer.writerow([name] + [_fmt(x) for x in row])
    return out.getvalue()
