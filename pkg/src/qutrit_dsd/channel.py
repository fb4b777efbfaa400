"""Finite-temperature amplitude damping on a qutrit and its two-sided action.

The qutrit is a V system: ground level |0> and two excited levels |1>, |2>
with decay probabilities p1 and p2. The environment removes an excitation
with probability r and deposits one with probability 1 - r, which splits
the six Kraus operators into an emission branch (prefactor sqrt(r)) and an
absorption branch (prefactor sqrt(1-r)).

Two closures of the no-absorption operator are supported:

* ``as-written``: ground-level amplitude sqrt(1 - p1 - p2). The set is
  complete (sum_i E_i^dag E_i = I) only while p1 + p2 <= 1, so this
  variant is rejected outside that domain.
* ``factorized``: ground-level amplitude sqrt((1-p1)(1-p2)) with the
  second absorption entry adjusted to sqrt(p2 (1-p1)). Complete for all
  p1, p2 in [0, 1]: the absorption branch's ground column sums to
  (1-p1)(1-p2) + p1 + p2(1-p1) = 1 and the emission branch contributes
  r exactly. The two variants coincide at p1 = p2 = 0 and differ at
  second order in the decay probabilities.

All functions are pure; values may be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import _kernels
from .errors import DomainError

#: Tolerance on the as-written validity boundary p1 + p2 <= 1.
_SUM_SLACK = 1e-12


class Variant(str, Enum):
    """Closure of the no-absorption Kraus operator."""

    AS_WRITTEN = "as-written"
    FACTORIZED = "factorized"


@dataclass(frozen=True)
class ChannelParams:
    """Parameters of one single-qutrit channel.

    r is the probability weight of losing (rather than absorbing) an
    excitation; p1 and p2 are the decay probabilities of levels |1> and
    |2>. All three must lie in [0, 1], and the as-written variant
    additionally requires p1 + p2 <= 1.
    """

    r: float
    p1: float
    p2: float
    variant: Variant = Variant.AS_WRITTEN

    def __post_init__(self) -> None:
        for name in ("r", "p1", "p2"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise DomainError(f"{name} must be in [0, 1], got {value}")
        if self.variant is Variant.AS_WRITTEN and self.p1 + self.p2 > 1.0 + _SUM_SLACK:
            raise DomainError(
                "as-written channel requires p1 + p2 <= 1, "
                f"got p1={self.p1}, p2={self.p2}"
            )


def kraus_set(params: ChannelParams) -> np.ndarray:
    """Six 3x3 Kraus operators as a (6, 3, 3) complex array.

    Order: the three emission operators (no-jump, decay of |1>, decay of
    |2>), then the three absorption operators (no-jump, excitation of |1>,
    excitation of |2>).
    """
    r, p1, p2 = params.r, params.p1, params.p2
    sr = np.sqrt(r)
    sq = np.sqrt(1.0 - r)
    ops = np.zeros((6, 3, 3), dtype=np.complex128)

    ops[0, 0, 0] = sr
    ops[0, 1, 1] = sr * np.sqrt(1.0 - p1)
    ops[0, 2, 2] = sr * np.sqrt(1.0 - p2)
    ops[1, 0, 1] = sr * np.sqrt(p1)
    ops[2, 0, 2] = sr * np.sqrt(p2)

    if params.variant is Variant.AS_WRITTEN:
        ops[3, 0, 0] = sq * np.sqrt(max(1.0 - p1 - p2, 0.0))
        ops[5, 2, 0] = sq * np.sqrt(p2)
    else:
        ops[3, 0, 0] = sq * np.sqrt((1.0 - p1) * (1.0 - p2))
        ops[5, 2, 0] = sq * np.sqrt(p2 * (1.0 - p1))
    ops[3, 1, 1] = sq
    ops[3, 2, 2] = sq
    ops[4, 1, 0] = sq * np.sqrt(p1)
    return ops


def completeness_defect(ops: np.ndarray) -> float:
    """max |sum_i E_i^dag E_i - I| for a stack of Kraus operators."""
    ops = np.asarray(ops, dtype=complex)
    total = np.einsum("kji,kjl->il", ops.conj(), ops)
    return float(np.max(np.abs(total - np.eye(ops.shape[-1]))))


def apply_two_sided(
    rho0: np.ndarray,
    params_a: ChannelParams,
    params_b: ChannelParams | None = None,
) -> np.ndarray:
    """Apply the product channel sum_ij (E_i (x) E_j) rho0 (E_i (x) E_j)^dag.

    Each side may use its own parameters; params_b defaults to params_a.
    The lifted operators act on disjoint factors, so applying the A side
    then the B side equals the double sum over Kronecker products.
    """
    rho0 = np.asarray(rho0, dtype=complex)
    if rho0.shape != (9, 9):
        raise ValueError(f"expected a 9x9 state, got shape {rho0.shape}")
    if params_b is None:
        params_b = params_a
    return _kernels.apply_two_sided(kraus_set(params_a), kraus_set(params_b), rho0)
