"""Time evolution, scans, surface sweeps and sudden-death/birth detection.

Physical time enters through the decay probability p(t) = 1 - exp(-2t)
with t in units of the inverse spontaneous-emission rate; both qutrits see
the same local channel with p1 = p2 = p(t).

Event vocabulary (on the negativity curve N(t), against a 1e-10 zero band):

* DSD, distillability sudden death: N crosses into the zero band, i.e. an
  NPT state becomes PPT at a finite time.
* DSB, distillability sudden birth: N leaves the zero band, a PPT state
  becomes NPT.
* While N == 0 the CCNR value splits the interval into ccnr_positive
  windows (bound entanglement detected) and undetected windows.

Crossing times found on the scan grid are refined by bisection on fresh
evolutions, so they are insensitive to the grid resolution down to the
configured tolerance. Scans are embarrassingly parallel over grid points
(evolve_at is pure); this implementation evaluates serially and always
emits rows in grid order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterator

import numpy as np

from .channel import ChannelParams, Variant, apply_two_sided
from .errors import ContractError, DomainError
from .states import horodecki_state
from .witnesses import WitnessReport, ccnr, compute_report, min_pt_eigenvalue, negativity

#: Largest t for which the as-written variant is a valid channel
#: (p1 + p2 = 2 p(t) <= 1).
AS_WRITTEN_T_MAX = math.log(2.0) / 2.0

#: Negativity values inside this band count as zero for event detection.
NEGATIVITY_ZERO_BAND = 1e-10


def p_of_t(t: float) -> float:
    """Decay probability 1 - exp(-2t); rejects negative times."""
    t = float(t)
    if t < 0.0:
        raise DomainError(f"time must be non-negative, got {t}")
    return 1.0 - math.exp(-2.0 * t)


def evolve_at(alpha: float, r: float, variant: Variant, t: float) -> np.ndarray:
    """State at time t: the two-sided channel applied to the initial family member."""
    variant = Variant(variant)
    if variant is Variant.AS_WRITTEN and t > AS_WRITTEN_T_MAX + 1e-12:
        raise DomainError(
            f"as-written channel is only valid for t <= ln(2)/2 = {AS_WRITTEN_T_MAX:.6f} "
            f"(p1 + p2 <= 1), got t = {t}"
        )
    p = p_of_t(t)
    params = ChannelParams(r=r, p1=p, p2=p, variant=variant)
    return apply_two_sided(horodecki_state(alpha), params, params)


@dataclass(frozen=True)
class ScanConfig:
    """Parameters of one time scan."""

    alpha: float
    r: float
    variant: Variant
    t_end: float
    steps: int
    t_start: float = 0.0
    refine_tol: float = 1e-5

    def __post_init__(self) -> None:
        object.__setattr__(self, "variant", Variant(self.variant))
        if not self.t_start < self.t_end:
            raise DomainError(f"t_start must be < t_end, got [{self.t_start}, {self.t_end}]")
        if self.steps < 2:
            raise DomainError(f"steps must be >= 2, got {self.steps}")
        if self.refine_tol <= 0.0:
            raise DomainError(f"refine_tol must be positive, got {self.refine_tol}")


@dataclass(frozen=True)
class TimeSeries:
    """Witness values on a strictly increasing time grid."""

    t: np.ndarray
    p: np.ndarray
    negativity: np.ndarray
    ccnr: np.ndarray
    lambda_min: np.ndarray

    def __len__(self) -> int:
        return int(self.t.size)

    def points(self) -> Iterator[tuple[float, float, WitnessReport]]:
        for k in range(len(self)):
            yield (
                float(self.t[k]),
                float(self.p[k]),
                WitnessReport(
                    negativity=float(self.negativity[k]),
                    ccnr=float(self.ccnr[k]),
                    lambda_min=float(self.lambda_min[k]),
                ),
            )


def scan(config: ScanConfig) -> TimeSeries:
    """Evaluate the witnesses on a uniform time grid, endpoints included."""
    ts = np.linspace(config.t_start, config.t_end, config.steps)
    neg = np.empty_like(ts)
    cc = np.empty_like(ts)
    lam = np.empty_like(ts)
    for k, t in enumerate(ts):
        try:
            rho = evolve_at(config.alpha, config.r, config.variant, float(t))
        except DomainError as exc:
            raise DomainError(f"scan failed at t = {float(t):.9g}: {exc}") from exc
        report = compute_report(rho)
        neg[k] = report.negativity
        cc[k] = report.ccnr
        lam[k] = report.lambda_min
    return TimeSeries(
        t=ts,
        p=np.array([p_of_t(float(t)) for t in ts]),
        negativity=neg,
        ccnr=cc,
        lambda_min=lam,
    )


class EventKind(str, Enum):
    DSD = "DSD"
    DSB = "DSB"
    CCNR_POSITIVE = "ccnr_positive"
    UNDETECTED = "undetected"


@dataclass(frozen=True)
class EventWindow:
    """A classified time interval; DSD/DSB crossings are zero-width windows."""

    kind: EventKind
    t_start: float
    t_end: float


def _bisect_predicate(
    predicate: Callable[[float], bool], lo: float, hi: float, tol: float
) -> float:
    """Transition point of a boolean predicate that flips once in (lo, hi).

    The invariant predicate(lo) != predicate(hi) is maintained while the
    bracket shrinks below tol.
    """
    state_lo = predicate(lo)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if predicate(mid) == state_lo:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def detect_events(series: TimeSeries, config: ScanConfig) -> list[EventWindow]:
    """Locate DSD/DSB crossings and classify the PPT intervals by CCNR sign.

    Crossings seen on the grid are refined by bisection on fresh
    evolutions down to config.refine_tol. All crossings are reported, not
    just the first, and windows of one kind never overlap. Raises
    ContractError for an empty or non-increasing series.
    """
    if len(series) == 0:
        raise ContractError("cannot detect events on an empty series")
    t = np.asarray(series.t, dtype=float)
    if t.size > 1 and not np.all(np.diff(t) > 0.0):
        raise ContractError("time grid must be strictly increasing")

    def is_npt(time: float) -> bool:
        rho = evolve_at(config.alpha, config.r, config.variant, time)
        return negativity(rho) > NEGATIVITY_ZERO_BAND

    def ccnr_at(time: float) -> float:
        return ccnr(evolve_at(config.alpha, config.r, config.variant, time))

    npt = series.negativity > NEGATIVITY_ZERO_BAND
    events: list[EventWindow] = []
    crossings: list[float] = []
    for k in range(len(series) - 1):
        if npt[k] != npt[k + 1]:
            tc = _bisect_predicate(is_npt, float(t[k]), float(t[k + 1]), config.refine_tol)
            crossings.append(tc)
            kind = EventKind.DSD if npt[k] else EventKind.DSB
            events.append(EventWindow(kind=kind, t_start=tc, t_end=tc))

    # Segment the scan range at the refined crossings; NPT-ness alternates
    # starting from the first grid point.
    bounds = [float(t[0]), *crossings, float(t[-1])]
    segment_is_npt = bool(npt[0])
    for seg_lo, seg_hi in zip(bounds[:-1], bounds[1:]):
        if not segment_is_npt and seg_hi > seg_lo:
            events.extend(
                _classify_ppt_segment(series, seg_lo, seg_hi, ccnr_at, config.refine_tol)
            )
        segment_is_npt = not segment_is_npt

    events.sort(key=lambda e: (e.t_start, e.t_end))
    return events


def _classify_ppt_segment(
    series: TimeSeries,
    seg_lo: float,
    seg_hi: float,
    ccnr_at: Callable[[float], float],
    refine_tol: float,
) -> list[EventWindow]:
    """Split one PPT interval into ccnr_positive / undetected windows."""
    inside = (series.t > seg_lo) & (series.t < seg_hi)
    xs = [seg_lo, *map(float, series.t[inside]), seg_hi]
    vals = [ccnr_at(seg_lo), *map(float, series.ccnr[inside]), ccnr_at(seg_hi)]
    if len(xs) == 2:
        mid = 0.5 * (seg_lo + seg_hi)
        xs.insert(1, mid)
        vals.insert(1, ccnr_at(mid))

    positive = [v > 0.0 for v in vals]
    cut_times = [seg_lo]
    for k in range(len(xs) - 1):
        if positive[k] != positive[k + 1]:
            cut_times.append(
                _bisect_predicate(lambda x: ccnr_at(x) > 0.0, xs[k], xs[k + 1], refine_tol)
            )
    cut_times.append(seg_hi)

    windows = []
    sign_index = 0
    for w_lo, w_hi in zip(cut_times[:-1], cut_times[1:]):
        # Sign of the window = sign of the first sample at or after w_lo.
        while sign_index < len(xs) - 1 and xs[sign_index] < w_lo:
            sign_index += 1
        kind = EventKind.CCNR_POSITIVE if positive[sign_index] else EventKind.UNDETECTED
        windows.append(EventWindow(kind=kind, t_start=w_lo, t_end=w_hi))
    return windows


def sweep_surface(
    alpha_grid: np.ndarray,
    r: float,
    variant: Variant,
    t_grid: np.ndarray,
) -> np.ndarray:
    """Smallest partial-transpose eigenvalue over the (alpha, t) grid.

    Returns an (n_alpha * n_t, 4) float array with columns
    (alpha, t, p, lambda_min) in alpha-major, t-minor order. Grids must be
    nonempty and strictly ascending.
    """
    alpha_grid = np.asarray(alpha_grid, dtype=float)
    t_grid = np.asarray(t_grid, dtype=float)
    for name, grid in (("alpha", alpha_grid), ("t", t_grid)):
        if grid.size == 0:
            raise DomainError(f"{name} grid must be nonempty")
        if grid.size > 1 and not np.all(np.diff(grid) > 0.0):
            raise DomainError(f"{name} grid must be strictly ascending")

    rows = np.empty((alpha_grid.size * t_grid.size, 4), dtype=float)
    k = 0
    for alpha in alpha_grid:
        for t in t_grid:
            try:
                rho = evolve_at(float(alpha), r, variant, float(t))
            except DomainError as exc:
                raise DomainError(
                    f"surface cell (alpha={float(alpha):.9g}, t={float(t):.9g}): {exc}"
                ) from exc
            rows[k] = (float(alpha), float(t), p_of_t(float(t)), min_pt_eigenvalue(rho))
            k += 1
    return rows
