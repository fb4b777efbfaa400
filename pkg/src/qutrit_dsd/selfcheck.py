"""Built-in invariant suite behind the ``validate`` CLI command.

Each check is small, named and independent; the runner reports pass/fail
per check so a regression points straight at the broken invariant. The
Kraus factory is injectable to allow fault-injection tests of the runner
itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .channel import ChannelParams, Variant, apply_two_sided, completeness_defect, kraus_set
from .dynamics import AS_WRITTEN_T_MAX, evolve_at, p_of_t
from .linalg import (
    HERMITICITY_ATOL,
    PSD_ATOL,
    TRACE_ATOL,
    hermitian_eigenvalues,
    partial_transpose,
    realign,
    trace_norm,
)
from .states import classify_initial, horodecki_state, psi_plus, InitialClass
from .witnesses import ccnr, min_pt_eigenvalue, negativity


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _random_density(rng: np.random.Generator, dim: int = 9) -> np.ndarray:
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    rho = g @ g.conj().T
    return rho / np.trace(rho)


def run_all(
    seed: int = 20240901,
    kraus_factory: Callable[[ChannelParams], np.ndarray] = kraus_set,
) -> list[CheckResult]:
    """Run every check and return the results in a fixed order."""
    rng = np.random.default_rng(seed)
    results: list[CheckResult] = []

    def check(name: str, defect: float, tol: float) -> None:
        results.append(
            CheckResult(name=name, passed=defect <= tol, detail=f"defect {defect:.3e} (tol {tol:g})")
        )

    # Kraus completeness over parameter grids, one check per variant.
    worst = 0.0
    for r in np.linspace(0.0, 1.0, 8):
        for p in np.linspace(0.0, 0.5, 8):
            ops = kraus_factory(ChannelParams(r=r, p1=p, p2=p, variant=Variant.AS_WRITTEN))
            worst = max(worst, completeness_defect(ops))
    check("kraus-completeness-as-written", worst, 1e-12)

    worst = 0.0
    for r in np.linspace(0.0, 1.0, 8):
        for p in np.linspace(0.0, 1.0, 8):
            ops = kraus_factory(ChannelParams(r=r, p1=p, p2=p, variant=Variant.FACTORIZED))
            worst = max(worst, completeness_defect(ops))
    check("kraus-completeness-factorized", worst, 1e-12)

    # Structure of the no-decay limit: only the two no-jump operators survive.
    ops = kraus_factory(ChannelParams(r=0.35, p1=0.0, p2=0.0))
    defect = max(
        float(np.max(np.abs(ops[0] - np.sqrt(0.35) * np.eye(3)))),
        float(np.max(np.abs(ops[3] - np.sqrt(0.65) * np.eye(3)))),
        float(np.max(np.abs(ops[[1, 2, 4, 5]]))),
    )
    check("kraus-no-decay-limit", defect, 1e-15)

    # Identity channel at p = 0.
    rho = _random_density(rng)
    out = apply_two_sided(rho, ChannelParams(r=0.4, p1=0.0, p2=0.0))
    check("channel-identity-at-p0", float(np.max(np.abs(out - rho))), 1e-14)

    # Full decay with zero absorption sends everything to |00><00|.
    target = np.zeros((9, 9), dtype=complex)
    target[0, 0] = 1.0
    out = apply_two_sided(
        _random_density(rng), ChannelParams(r=1.0, p1=1.0, p2=1.0, variant=Variant.FACTORIZED)
    )
    check("channel-full-decay-ground", float(np.max(np.abs(out - target))), 1e-12)

    # Density-matrix invariants along random evolutions.
    worst_herm = worst_trace = worst_psd = 0.0
    for _ in range(30):
        alpha = rng.uniform(2.0, 5.0)
        r = rng.uniform(0.0, 1.0)
        if rng.uniform() < 0.5:
            variant, t = Variant.AS_WRITTEN, rng.uniform(0.0, AS_WRITTEN_T_MAX)
        else:
            variant, t = Variant.FACTORIZED, rng.uniform(0.0, 2.0)
        out = evolve_at(alpha, r, variant, t)
        worst_herm = max(worst_herm, float(np.max(np.abs(out - out.conj().T))))
        worst_trace = max(worst_trace, abs(complex(np.trace(out)) - 1.0))
        worst_psd = max(worst_psd, max(0.0, -float(np.linalg.eigvalsh(out)[0])))
    check("evolution-hermiticity", worst_herm, HERMITICITY_ATOL)
    check("evolution-unit-trace", worst_trace, TRACE_ATOL)
    check("evolution-positive-semidefinite", worst_psd, PSD_ATOL)

    # Channel linearity on a random mixture.
    rho1, rho2 = _random_density(rng), _random_density(rng)
    params = ChannelParams(r=0.2, p1=0.3, p2=0.25)
    mixed = apply_two_sided(0.3 * rho1 + 0.7 * rho2, params)
    split = 0.3 * apply_two_sided(rho1, params) + 0.7 * apply_two_sided(rho2, params)
    check("channel-linearity", float(np.max(np.abs(mixed - split))), 1e-12)

    # Variant agreement to first order in p.
    rho = _random_density(rng)
    a = apply_two_sided(rho, ChannelParams(r=0.3, p1=1e-4, p2=1e-4, variant=Variant.AS_WRITTEN))
    f = apply_two_sided(rho, ChannelParams(r=0.3, p1=1e-4, p2=1e-4, variant=Variant.FACTORIZED))
    check("variant-first-order-agreement", float(np.max(np.abs(a - f))), 1e-7)

    # Involutions.
    worst_pt = worst_re = 0.0
    for _ in range(10):
        rho = _random_density(rng)
        worst_pt = max(worst_pt, float(np.max(np.abs(partial_transpose(partial_transpose(rho)) - rho))))
        worst_re = max(worst_re, float(np.max(np.abs(realign(realign(rho)) - rho))))
    check("partial-transpose-involution", worst_pt, 1e-12)
    check("realign-involution", worst_re, 1e-12)

    # Trace norm via singular values vs absolute eigenvalues (Hermitian case).
    worst = 0.0
    for _ in range(10):
        g = rng.standard_normal((9, 9)) + 1j * rng.standard_normal((9, 9))
        h = (g + g.conj().T) / 2
        worst = max(worst, abs(trace_norm(h) - float(np.abs(hermitian_eigenvalues(h)).sum())))
    check("trace-norm-eigenvalue-agreement", worst, 1e-10)

    # Initial family: unit trace, positivity, classification vs negativity.
    worst_tr = worst_eig = 0.0
    class_ok = True
    for alpha in np.linspace(2.0, 5.0, 13):
        rho = horodecki_state(alpha)
        worst_tr = max(worst_tr, abs(complex(np.trace(rho)) - 1.0))
        worst_eig = max(worst_eig, max(0.0, -float(np.linalg.eigvalsh(rho)[0])))
        if abs(alpha - 4.0) > 0.01:
            is_free = classify_initial(alpha) is InitialClass.FREE_ENTANGLED
            class_ok = class_ok and ((negativity(rho) > 0.0) == is_free)
    check("initial-family-unit-trace", worst_tr, 1e-14)
    check("initial-family-positive", worst_eig, 1e-12)
    results.append(
        CheckResult(
            name="initial-family-classification",
            passed=class_ok,
            detail="negativity > 0 iff free entangled",
        )
    )

    # Known witness triple of the maximally entangled state.
    v = psi_plus()
    proj = np.outer(v, v.conj())
    defect = max(
        abs(negativity(proj) - 2.0),
        abs(ccnr(proj) - 2.0),
        abs(min_pt_eigenvalue(proj) + 1.0 / 3.0),
    )
    check("maximally-entangled-witnesses", defect, 1e-12)

    # Decay probability endpoints.
    defect = max(abs(p_of_t(0.0)), abs(p_of_t(AS_WRITTEN_T_MAX) - 0.5))
    check("decay-probability-endpoints", defect, 1e-15)

    return results
