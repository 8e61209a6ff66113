"""Finite elements for two-point boundary value problems with a Riemann-Liouville derivative."""

import csv
import io
import json

from ._fracfem import (
    CSV_HEADER,
    ArgumentError,
    DegenerateSplittingError,
    DomainError,
    Error,
    IterativeFailure,
    Mesh,
    QuadratureFailure,
    ReconSolution,
    SingularSystemError,
    UnsupportedFormError,
    UnsupportedSourceError,
    assemble_lead,
    exact_mu,
    gamma,
    rl_integral_power,
    run_experiment,
    solve,
)

__all__ = [
    "CSV_HEADER",
    "ArgumentError",
    "DegenerateSplittingError",
    "DomainError",
    "Error",
    "IterativeFailure",
    "Mesh",
    "QuadratureFailure",
    "ReconSolution",
    "SingularSystemError",
    "UnsupportedFormError",
    "UnsupportedSourceError",
    "assemble_lead",
    "convergence_table",
    "exact_mu",
    "gamma",
    "rl_integral_power",
    "run_experiment",
    "solve",
]


def convergence_table(**config):
    """Run a study and return its rows as dicts; empty cells become None.

    Keyword arguments are the keys of the JSON configuration (alpha, example,
    q, method, levels, graded, reference_m, ...).
    """
    config = dict(config, format="csv")
    text = run_experiment(json.dumps(config))
    lines = [line for line in text.splitlines() if not line.startswith("#")]
    rows = []
    for record in csv.DictReader(io.StringIO("\n".join(lines))):
        row = {}
        for key, value in record.items():
            if key == "k":
                row[key] = int(value)
            else:
                row[key] = float(value) if value != "" else None
        rows.append(row)
    return rows
