"""Skew Schur, stable and dual stable Grothendieck polynomials on staircase shapes."""

import json

from ._core import (
    Error,
    alpha,
    big_G,
    big_G_double,
    conjugate,
    dual_g,
    lr_coeff,
    run_cli,
    schur,
    staircase,
    subpartitions,
)

__all__ = [
    "Error",
    "alpha",
    "big_G",
    "big_G_double",
    "conjugate",
    "dual_g",
    "lr_coeff",
    "run_cli",
    "schur",
    "staircase",
    "subpartitions",
    "verify",
]


def verify(suite, **options):
    """Runs a verification suite and returns its report as a dict.

    Keyword options map to command-line flags: ``n=3`` becomes ``--n 3`` and
    ``polynomial_n=2`` becomes ``--polynomial-n 2``.
    """
    args = ["verify", "--suite", suite, "--format", "json"]
    for key, value in options.items():
        args += ["--" + key.replace("_", "-"), str(value)]
    code, out, err = run_cli(args)
    if code == 2:
        raise Error(err.strip())
    return json.loads(out)
