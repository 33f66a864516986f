"""Dense complex matrix/vector arithmetic and the metrics used everywhere else.

Matrices are plain ``numpy.ndarray`` objects of dtype complex128.  Everything
here is pure and allocates fresh outputs, so values can be shared freely
between threads.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Full-matrix work (compilation, oracle comparison) is capped at this
# dimension by default; q**n above it is refused rather than attempted.
DEFAULT_DIM_CAP = 4096

# Unit-norm requirement on state vectors.
NORM_TOL = 1e-10


def _as_matrix(a) -> np.ndarray:
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got ndim={m.ndim}")
    return m


def _require_square(m: np.ndarray) -> None:
    if m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")


def adjoint(a) -> np.ndarray:
    """Hermitian conjugate: conjugate transpose of ``a``."""
    return _as_matrix(a).conj().T.copy()


def kron(a, b) -> np.ndarray:
    """Kronecker product of two square matrices.

    The left factor addresses the most significant digit of the compound
    row/column index.
    """
    a, b = _as_matrix(a), _as_matrix(b)
    _require_square(a)
    _require_square(b)
    return np.kron(a, b)


def matmul(a, b) -> np.ndarray:
    """Standard matrix product; inner dimensions must agree."""
    a, b = _as_matrix(a), _as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"inner dimensions disagree: {a.shape} x {b.shape}")
    return a @ b


def max_entry_distance(a, b) -> float:
    """Largest entrywise absolute difference between two same-shaped matrices."""
    a, b = _as_matrix(a), _as_matrix(b)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    return float(np.abs(a - b).max())


def is_unitary(a, tol: float = 1e-10) -> bool:
    """True iff ``a @ adjoint(a)`` is the identity to within ``tol`` per entry."""
    a = _as_matrix(a)
    _require_square(a)
    if tol <= 0:
        raise ValueError("tol must be positive")
    residual = a @ a.conj().T - np.eye(a.shape[0])
    return float(np.abs(residual).max()) <= tol


def spectral_norm(a, iterations: int = 200) -> float:
    """Largest singular value of ``a``, approximated by power iteration.

    Iterates on the Gram matrix ``adjoint(a) @ a`` from the fixed start
    vector with all entries 1/sqrt(dim), so the result is reproducible
    run to run.  200 iterations resolve the norm to well below 1e-6 for
    the matrix sizes this package works with.
    """
    a = _as_matrix(a)
    _require_square(a)
    if iterations < 1:
        raise ValueError("iterations must be at least 1")
    dim = a.shape[0]
    gram = a.conj().T @ a
    v = np.full(dim, 1.0 / np.sqrt(dim), dtype=np.complex128)
    for _ in range(iterations):
        w = gram @ v
        norm = np.linalg.norm(w)
        if norm == 0.0:
            return 0.0
        v = w / norm
    return float(np.linalg.norm(a @ v))


@dataclass(frozen=True)
class StateVector:
    """Unit-norm amplitudes of an n-digit base-q register.

    Index ``i`` encodes the digit string through ``i = sum_j x_j * q**j``
    with ``x_0`` the least significant digit.  Amplitudes are stored as a
    read-only complex128 array; construction rejects non-finite entries
    and vectors whose norm strays from 1 by more than 1e-10.
    """

    radix: int
    digits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.radix < 2:
            raise ValueError("radix must be at least 2")
        if self.digits < 1:
            raise ValueError("digits must be at least 1")
        amps = np.array(self.amplitudes, dtype=np.complex128)
        if amps.ndim != 1 or amps.shape[0] != self.radix ** self.digits:
            raise ValueError(
                f"expected {self.radix ** self.digits} amplitudes, "
                f"got shape {amps.shape}"
            )
        if not np.all(np.isfinite(amps.view(np.float64))):
            raise ValueError("amplitudes must be finite")
        norm_sq = float(np.sum(np.abs(amps) ** 2))
        if abs(norm_sq - 1.0) > NORM_TOL:
            raise ValueError(f"state norm**2 is {norm_sq!r}, expected 1")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return self.radix ** self.digits

    @classmethod
    def basis(cls, radix: int, digits: int, index: int = 0) -> "StateVector":
        """Computational basis state |index> of an n-digit base-q register."""
        dim = radix ** digits
        if not 0 <= index < dim:
            raise ValueError(f"basis index {index} out of range for dim {dim}")
        amps = np.zeros(dim, dtype=np.complex128)
        amps[index] = 1.0
        return cls(radix, digits, amps)
