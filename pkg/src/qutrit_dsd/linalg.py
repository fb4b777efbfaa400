"""Dense complex linear algebra for one- and two-qutrit operators.

Index convention, used everywhere in this package: the composite basis
index of a two-qutrit matrix is 3*(A index) + (B index), i.e. subsystem A
is the slow (block) index. All reshapes below rely on this layout.

All functions are pure and operate on plain complex numpy arrays; they are
safe to call concurrently.
"""

from __future__ import annotations

import numpy as np

# Structural tolerances for density-matrix checks. Double precision on
# 9x9 matrices leaves several orders of magnitude of headroom.
HERMITICITY_ATOL = 1e-10
TRACE_ATOL = 1e-10
PSD_ATOL = 1e-9
# Inputs to the Hermitian eigensolver may carry more roundoff than a
# freshly validated density matrix; beyond this they are rejected.
HERMITICITY_GATE = 1e-8


def tensor(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product a (x) b with a as the slow (block) factor.

    For basis column vectors e_i (x) e_j this puts the 1 at composite
    index dim_b*i + j.
    """
    return np.kron(np.asarray(a), np.asarray(b))


def partial_transpose(rho: np.ndarray, subsystem: str = "B") -> np.ndarray:
    """Transpose one qutrit factor of a 9x9 bipartite matrix.

    For subsystem "B": out[3i+l, 3j+k] = rho[3i+k, 3j+l]. Hermiticity and
    trace are preserved. Raises ValueError for non-9x9 input or an unknown
    subsystem label.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (9, 9):
        raise ValueError(f"partial_transpose expects a 9x9 matrix, got shape {rho.shape}")
    t = rho.reshape(3, 3, 3, 3)
    if subsystem == "B":
        axes = (0, 3, 2, 1)
    elif subsystem == "A":
        axes = (2, 1, 0, 3)
    else:
        raise ValueError(f"subsystem must be 'A' or 'B', got {subsystem!r}")
    return t.transpose(axes).reshape(9, 9)


def realign(rho: np.ndarray) -> np.ndarray:
    """Reshuffle a 9x9 bipartite matrix: out[3i+j, 3k+l] = rho[3i+k, 3j+l].

    The result is generally non-Hermitian; applying realign twice gives the
    input back. Raises ValueError for non-9x9 input.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (9, 9):
        raise ValueError(f"realign expects a 9x9 matrix, got shape {rho.shape}")
    return rho.reshape(3, 3, 3, 3).transpose(0, 2, 1, 3).reshape(9, 9)


def trace_norm(m: np.ndarray) -> float:
    """Sum of singular values of m.

    Singular values rather than eigenvalues: the realigned matrix is not
    normal in general, so only the singular values give the trace norm in
    all cases. For Hermitian m this equals the sum of absolute eigenvalues.
    """
    return float(np.linalg.svd(np.asarray(m, dtype=complex), compute_uv=False).sum())


def hermitian_eigenvalues(m: np.ndarray) -> np.ndarray:
    """Ascending real eigenvalues of a Hermitian matrix.

    The input is symmetrized as (m + m^dag)/2 to absorb roundoff; a
    Hermiticity deviation above HERMITICITY_GATE is an error rather than
    something to fix silently.
    """
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    deviation = float(np.max(np.abs(m - m.conj().T)))
    if deviation > HERMITICITY_GATE:
        raise ValueError(
            f"matrix is not Hermitian within {HERMITICITY_GATE:g}: "
            f"max |m - m^dag| = {deviation:.3e}"
        )
    return np.linalg.eigvalsh((m + m.conj().T) / 2)


def validate_density_matrix(rho: np.ndarray, dim: int = 9) -> None:
    """Raise ValueError unless rho is a dim x dim density matrix.

    Checks, in order: shape, finiteness, Hermiticity (HERMITICITY_ATOL),
    unit trace (TRACE_ATOL) and positive semidefiniteness (smallest
    eigenvalue >= -PSD_ATOL).
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (dim, dim):
        raise ValueError(f"expected a {dim}x{dim} matrix, got shape {rho.shape}")
    if not np.all(np.isfinite(rho.view(float))):
        raise ValueError("matrix contains non-finite entries")
    herm = float(np.max(np.abs(rho - rho.conj().T)))
    if herm > HERMITICITY_ATOL:
        raise ValueError(f"not Hermitian: max |rho - rho^dag| = {herm:.3e}")
    tr = complex(np.trace(rho))
    if abs(tr - 1.0) > TRACE_ATOL:
        raise ValueError(f"trace differs from 1 by {abs(tr - 1.0):.3e}")
    min_eig = float(np.linalg.eigvalsh((rho + rho.conj().T) / 2)[0])
    if min_eig < -PSD_ATOL:
        raise ValueError(f"not positive semidefinite: min eigenvalue = {min_eig:.3e}")
