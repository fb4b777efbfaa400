"""One-parameter Horodecki family of two-qutrit states.

The family mixes the maximally entangled vector (|01> + |10> + |22>)/sqrt(3)
with two diagonal separable blocks and is parameterized by alpha in [2, 5]:
separable up to alpha = 3, bound entangled (PPT but entangled) up to
alpha = 4, free (NPT) entangled above 4.

Basis order is |00>, |01>, ..., |22> with composite index 3a + b.
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from .errors import DomainError

ALPHA_MIN = 2.0
ALPHA_MAX = 5.0

_PSI_PLUS_INDICES = (1, 3, 8)        # |01>, |10>, |22>
_SIGMA_PLUS_INDICES = (0, 5, 7)      # |00>, |12>, |21>
_SIGMA_MINUS_INDICES = (4, 6, 2)     # |11>, |20>, |02>


class InitialClass(str, Enum):
    SEPARABLE = "separable"
    BOUND_ENTANGLED = "bound-entangled"
    FREE_ENTANGLED = "free-entangled"


def psi_plus() -> np.ndarray:
    """The maximally entangled 9-vector (|01> + |10> + |22>)/sqrt(3)."""
    v = np.zeros(9, dtype=complex)
    v[list(_PSI_PLUS_INDICES)] = 1.0 / np.sqrt(3.0)
    return v


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not ALPHA_MIN <= alpha <= ALPHA_MAX:
        raise DomainError(f"alpha must be in [{ALPHA_MIN:g}, {ALPHA_MAX:g}], got {alpha}")
    return alpha


def horodecki_state(alpha: float) -> np.ndarray:
    """Density matrix of the family member at the given alpha.

    Weights: 2/7 on the maximally entangled projector, alpha/7 on the
    |00>/|12>/|21> block and (5-alpha)/7 on the |11>/|20>/|02> block, each
    block uniformly mixed. The trace is exactly 1 for every alpha.
    """
    alpha = _check_alpha(alpha)
    v = psi_plus()
    rho = (2.0 / 7.0) * np.outer(v, v.conj())
    for k in _SIGMA_PLUS_INDICES:
        rho[k, k] += alpha / 21.0
    for k in _SIGMA_MINUS_INDICES:
        rho[k, k] += (5.0 - alpha) / 21.0
    return rho


def classify_initial(alpha: float) -> InitialClass:
    """Entanglement class of the initial state at the given alpha."""
    alpha = _check_alpha(alpha)
    if alpha <= 3.0:
        return InitialClass.SEPARABLE
    if alpha <= 4.0:
        return InitialClass.BOUND_ENTANGLED
    return InitialClass.FREE_ENTANGLED
