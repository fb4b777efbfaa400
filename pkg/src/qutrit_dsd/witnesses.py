"""Per-state entanglement diagnostics.

Three numbers are tracked along every evolution:

* negativity: trace norm of the partial transpose minus 1, clamped to 0
  within 1e-12 so "becomes zero" events are well defined against roundoff.
  Positive iff the state is NPT.
* ccnr: trace norm of the realigned matrix minus 1. Positive values certify
  entanglement (including some PPT states); negative values are meaningful
  as distance from the detection threshold and are NOT clamped.
* lambda_min: smallest eigenvalue of the partial transpose; its sign
  classifies NPT vs PPT.

The partial transpose is taken on subsystem B throughout. The two choices
give transposed matrices with identical spectra, so nothing depends on it;
the convention is fixed here once.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import hermitian_eigenvalues, partial_transpose, realign, trace_norm

#: Negativity values below this are reported as exactly zero.
ZERO_CLAMP = 1e-12


@dataclass(frozen=True)
class WitnessReport:
    negativity: float
    ccnr: float
    lambda_min: float


def negativity(rho: np.ndarray) -> float:
    """||rho^PT||_1 - 1, clamped to 0 within 1e-12.

    Cross-checked internally against twice the absolute sum of negative
    partial-transpose eigenvalues, which must agree for a unit-trace input.
    """
    pt = partial_transpose(rho, "B")
    value = trace_norm(pt) - 1.0
    lam = hermitian_eigenvalues(pt)
    from_eigs = 2.0 * abs(float(lam[lam < 0.0].sum()))
    if abs(value - from_eigs) > 1e-8:
        raise ValueError(
            "negativity consistency check failed (is the input unit trace?): "
            f"||pt||_1 - 1 = {value:.3e} but 2|sum of negative eigenvalues| = {from_eigs:.3e}"
        )
    return 0.0 if value < ZERO_CLAMP else value


def ccnr(rho: np.ndarray) -> float:
    """||rho^R||_1 - 1 for the realigned matrix; positive certifies entanglement."""
    return trace_norm(realign(rho)) - 1.0


def min_pt_eigenvalue(rho: np.ndarray) -> float:
    """Smallest eigenvalue of the partial transpose (negative iff NPT)."""
    return float(hermitian_eigenvalues(partial_transpose(rho, "B"))[0])


def compute_report(rho: np.ndarray) -> WitnessReport:
    """All three diagnostics for one state."""
    return WitnessReport(
        negativity=negativity(rho),
        ccnr=ccnr(rho),
        lambda_min=min_pt_eigenvalue(rho),
    )
