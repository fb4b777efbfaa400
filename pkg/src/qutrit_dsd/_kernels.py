"""Hot numeric kernel: two-sided Kraus application on a 9x9 state.

Per time point this is the dominant cost of every scan and surface sweep,
so it carries a numba @njit implementation. A vectorized pure-numpy path
is always available; set QUTRIT_DSD_PURE_NUMPY=1 to select it (or it is
used automatically when numba cannot be imported).

benchmarks/bench_kernels.py compares the two paths.
"""

from __future__ import annotations

import os

import numpy as np

ENV_FLAG = "QUTRIT_DSD_PURE_NUMPY"


def _pure_numpy_requested() -> bool:
    return os.environ.get(ENV_FLAG, "").strip().lower() not in ("", "0", "false")


def apply_two_sided_numpy(kraus_a: np.ndarray, kraus_b: np.ndarray, rho: np.ndarray) -> np.ndarray:
    """sum_ij (Ea_i (x) Eb_j) rho (Ea_i (x) Eb_j)^dag, vectorized.

    kraus_a, kraus_b: stacks of shape (n, 3, 3); rho: (9, 9). The product
    channel factorizes, so the A-side and B-side sums are contracted
    separately instead of building 36 Kronecker products.
    """
    t = np.asarray(rho, dtype=complex).reshape(3, 3, 3, 3)
    t = np.einsum("iqa,abcd,isc->qbsd", kraus_a, t, kraus_a.conj(), optimize=True)
    t = np.einsum("jqb,abcd,jsd->aqcs", kraus_b, t, kraus_b.conj(), optimize=True)
    return np.ascontiguousarray(t.reshape(9, 9))


NUMBA_AVAILABLE = False
apply_two_sided_numba = None

if not _pure_numpy_requested():
    try:
        from numba import njit
    except ImportError:
        njit = None

    if njit is not None:
        @njit(cache=True)
        def _two_sided_kernel(ka, kb, rho):  # pragma: no cover - jitted
            na = ka.shape[0]
            nb = kb.shape[0]
            out = np.zeros((9, 9), np.complex128)
            kron = np.empty((9, 9), np.complex128)
            tmp = np.empty((9, 9), np.complex128)
            for i in range(na):
                for j in range(nb):
                    for a in range(3):
                        for b in range(3):
                            row = 3 * a + b
                            for c in range(3):
                                for d in range(3):
                                    kron[row, 3 * c + d] = ka[i, a, c] * kb[j, b, d]
                    for m in range(9):
                        for n in range(9):
                            acc = 0.0 + 0.0j
                            for k in range(9):
                                acc += kron[m, k] * rho[k, n]
                            tmp[m, n] = acc
                    for m in range(9):
                        for n in range(9):
                            acc = 0.0 + 0.0j
                            for k in range(9):
                                acc += tmp[m, k] * np.conj(kron[n, k])
                            out[m, n] += acc
            return out

        def apply_two_sided_numba(kraus_a, kraus_b, rho):
            """JIT path; same contract as apply_two_sided_numpy."""
            return _two_sided_kernel(
                np.ascontiguousarray(kraus_a, dtype=np.complex128),
                np.ascontiguousarray(kraus_b, dtype=np.complex128),
                np.ascontiguousarray(rho, dtype=np.complex128),
            )

        NUMBA_AVAILABLE = True

if NUMBA_AVAILABLE:
    ACTIVE_BACKEND = "numba"
    apply_two_sided = apply_two_sided_numba
else:
    ACTIVE_BACKEND = "numpy"
    apply_two_sided = apply_two_sided_numpy
