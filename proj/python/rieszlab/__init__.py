"""Riesz energy laboratory: greedy and near-optimal point configurations on
compact sets, energy/potential evaluation, and scaling diagnostics.

The heavy lifting happens in the compiled extension; this package just
re-exports it.
"""

from ._rieszlab import (
    __version__,
    canned_experiments,
    covering_radius,
    equilibrium_density,
    fit_exponent,
    greedy,
    measure_of_ball,
    minimize,
    potential,
    project,
    run_canned,
    sample,
    separation,
    total_energy,
    wiener_estimate,
)

__all__ = [
    "__version__",
    "canned_experiments",
    "covering_radius",
    "equilibrium_density",
    "fit_exponent",
    "greedy",
    "measure_of_ball",
    "minimize",
    "potential",
    "project",
    "run_canned",
    "sample",
    "separation",
    "total_energy",
    "wiener_estimate",
]
