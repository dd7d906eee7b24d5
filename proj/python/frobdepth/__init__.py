"""Frobenius depth, formal grade and local cohomology vanishing over F_p[x1..xn]."""

import json

from ._frobdepth import (
    FrobdepthError,
    Ideal,
    Ring,
    cd,
    cofinality_check,
    depth,
    dim,
    eliminate,
    fdepth,
    fgrade,
    free_resolution,
    frobenius_chain,
    frobenius_power,
    height,
    minimal_generators,
    monomial_oracle_cd,
    pd,
    report_json,
)

__all__ = [
    "FrobdepthError",
    "Ideal",
    "Ring",
    "analyze",
    "cd",
    "cofinality_check",
    "depth",
    "dim",
    "eliminate",
    "fdepth",
    "fgrade",
    "free_resolution",
    "frobenius_chain",
    "frobenius_power",
    "height",
    "ideal",
    "minimal_generators",
    "monomial_oracle_cd",
    "pd",
    "report",
    "report_json",
]


def ideal(p, vars, gens, order="grevlex"):
    """Ideal of F_p[vars] from generator strings."""
    return Ideal(Ring(p, list(vars), order), list(gens))


def report(I, max_e=8, label=""):
    """Invariant report as a dict with the same layout as the CLI JSON."""
    return json.loads(report_json(I, max_e, label))


def analyze(p, vars, gens, max_e=8):
    return report(ideal(p, vars, gens), max_e)
