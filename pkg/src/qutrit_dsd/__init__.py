"""Two-qutrit entanglement dynamics under local finite-temperature
amplitude damping: witnesses, time scans, surface sweeps and
distillability sudden-death/birth event detection."""

__version__ = "0.1.0"

from .channel import ChannelParams, Variant, apply_two_sided, completeness_defect, kraus_set
from .dynamics import (
    AS_WRITTEN_T_MAX,
    EventKind,
    EventWindow,
    ScanConfig,
    TimeSeries,
    detect_events,
    evolve_at,
    p_of_t,
    scan,
    sweep_surface,
)
from .errors import ContractError, DomainError
from .linalg import (
    hermitian_eigenvalues,
    partial_transpose,
    realign,
    tensor,
    trace_norm,
    validate_density_matrix,
)
from .states import InitialClass, classify_initial, horodecki_state, psi_plus
from .witnesses import WitnessReport, ccnr, compute_report, min_pt_eigenvalue, negativity

__all__ = [
    "AS_WRITTEN_T_MAX",
    "ChannelParams",
    "ContractError",
    "DomainError",
    "EventKind",
    "EventWindow",
    "InitialClass",
    "ScanConfig",
    "TimeSeries",
    "Variant",
    "WitnessReport",
    "__version__",
    "apply_two_sided",
    "ccnr",
    "classify_initial",
    "completeness_defect",
    "compute_report",
    "detect_events",
    "evolve_at",
    "hermitian_eigenvalues",
    "horodecki_state",
    "kraus_set",
    "min_pt_eigenvalue",
    "negativity",
    "p_of_t",
    "partial_transpose",
    "psi_plus",
    "realign",
    "scan",
    "sweep_surface",
    "tensor",
    "trace_norm",
    "validate_density_matrix",
]
