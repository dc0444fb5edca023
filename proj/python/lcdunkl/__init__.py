"""Linear canonical Dunkl transform, wavelets and Sobolev extremal problems."""

from ._lcdunkl import (
    SpaceGrid,
    admissibility,
    check_config,
    constant_Cs,
    convergence_sweep,
    convolve,
    cross_admissibility,
    dunkl_kernel,
    extremal_cwt,
    extremal_lcdt,
    kernel_Ks,
    lcdt_forward,
    lcdt_inverse,
    lcdt_kernel,
    plancherel_residual,
    pow_ib,
    set_workers,
    sobolev_norm,
    validate,
    workers,
)

FOURIER = (0.0, -1.0, 1.0, 0.0)

__all__ = [
    "FOURIER",
    "SpaceGrid",
    "admissibility",
    "check_config",
    "constant_Cs",
    "convergence_sweep",
    "convolve",
    "cross_admissibility",
    "dunkl_kernel",
    "extremal_cwt",
    "extremal_lcdt",
    "kernel_Ks",
    "lcdt_forward",
    "lcdt_inverse",
    "lcdt_kernel",
    "plancherel_residual",
    "pow_ib",
    "set_workers",
    "sobolev_norm",
    "validate",
    "workers",
]
