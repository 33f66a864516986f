"""Radix-parametric quantum Fourier transform toolkit for qudit registers.

Builds gate-level QFT circuits over base-q digits (q >= 2), simulates them
on dense state vectors, prunes small controlled phase shifts to produce
approximate transforms, and measures the resulting phase errors against
closed-form bounds.
"""

from .numerics import (
    DEFAULT_DIM_CAP,
    StateVector,
    adjoint,
    is_unitary,
    kron,
    matmul,
    max_entry_distance,
    spectral_norm,
)
from .gates import (
    RootOfUnity,
    chrestenson_gate,
    controlled_phase_matrix,
    phase_shift_gate,
    root_of_unity,
    walsh_hadamard_gate,
)
from .circuit import (
    CHRESTENSON,
    CONTROLLED_PHASE,
    Circuit,
    GateOp,
    Permutation,
    apply_circuit,
    build_qft_circuit,
    build_walsh_hadamard_transform_circuit,
    chrestenson_transform_matrix,
    circuit_to_matrix,
    dft_matrix,
    digit_reversal_perm,
)
from .analysis import (
    BoundRow,
    CapacityMetrics,
    approximation_report,
    bound_coppersmith,
    bound_new,
    capacity_metrics,
    measure_bracket_phase_error,
    phase_error_factor,
    phase_error_series,
    phase_error_trig,
)

__all__ = [
    "DEFAULT_DIM_CAP",
    "StateVector",
    "adjoint",
    "is_unitary",
    "kron",
    "matmul",
    "max_entry_distance",
    "spectral_norm",
    "RootOfUnity",
    "chrestenson_gate",
    "controlled_phase_matrix",
    "phase_shift_gate",
    "root_of_unity",
    "walsh_hadamard_gate",
    "CHRESTENSON",
    "CONTROLLED_PHASE",
    "Circuit",
    "GateOp",
    "Permutation",
    "apply_circuit",
    "build_qft_circuit",
    "build_walsh_hadamard_transform_circuit",
    "chrestenson_transform_matrix",
    "circuit_to_matrix",
    "dft_matrix",
    "digit_reversal_perm",
    "BoundRow",
    "CapacityMetrics",
    "approximation_report",
    "bound_coppersmith",
    "bound_new",
    "capacity_metrics",
    "measure_bracket_phase_error",
    "phase_error_factor",
    "phase_error_series",
    "phase_error_trig",
]

__version__ = "0.1.0"
