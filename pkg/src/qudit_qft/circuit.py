"""Circuit IR, QFT builders, reference transform matrices, and the simulator.

A circuit is an ordered list of gate operations over an n-digit base-q
register plus a flag for the final output-digit reversal.  The builders
emit the discrete Fourier transform over ``Z_{q**n}`` as one Chrestenson
gate per digit followed by controlled phase shifts, and the n-parallel
Chrestenson circuit that realizes the Fourier transform over ``(Z_q)**n``.

Digit conventions: ``x_0`` is the least significant digit, state index
``i = sum_j x_j * q**j``, and the leftmost Kronecker factor addresses the
most significant digit.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .gates import chrestenson_gate
from .numerics import DEFAULT_DIM_CAP, StateVector, kron

CHRESTENSON = "chrestenson"
CONTROLLED_PHASE = "controlled_phase"


@dataclass(frozen=True)
class GateOp:
    """One circuit element.

    Either a Chrestenson gate on ``target`` or a controlled phase shift
    that multiplies basis state (control c, target t) by
    ``exp(-2j*pi * c*t / q**denom_exp)``.
    """

    kind: str
    target: int
    control: int | None = None
    denom_exp: int | None = None

    def __post_init__(self):
        if self.kind not in (CHRESTENSON, CONTROLLED_PHASE):
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if self.target < 0:
            raise ValueError("target digit index must be non-negative")
        if self.kind == CHRESTENSON:
            if self.control is not None or self.denom_exp is not None:
                raise ValueError("a Chrestenson op carries only a target digit")
        else:
            if self.control is None or self.denom_exp is None:
                raise ValueError("a controlled phase op needs control and denom_exp")
            if self.control < 0:
                raise ValueError("control digit index must be non-negative")
            if self.control == self.target:
                raise ValueError("control and target digits must differ")
            if self.denom_exp < 2:
                raise ValueError("denom_exp must be at least 2")

    @staticmethod
    def chrestenson(target: int) -> "GateOp":
        return GateOp(CHRESTENSON, target)

    @staticmethod
    def controlled_phase(control: int, target: int, denom_exp: int) -> "GateOp":
        return GateOp(CONTROLLED_PHASE, target, control, denom_exp)


@dataclass(frozen=True)
class Circuit:
    """Immutable gate list over an n-digit base-q register."""

    radix: int
    digits: int
    ops: tuple[GateOp, ...] = field(default_factory=tuple)
    reverse_output_digits: bool = False

    def __post_init__(self):
        if self.radix < 2:
            raise ValueError("radix must be at least 2")
        if self.digits < 1:
            raise ValueError("digits must be at least 1")
        ops = tuple(self.ops)
        for op in ops:
            if op.target >= self.digits:
                raise ValueError(f"target digit {op.target} out of range")
            if op.control is not None and op.control >= self.digits:
                raise ValueError(f"control digit {op.control} out of range")
        object.__setattr__(self, "ops", ops)

    @property
    def gate_count(self) -> int:
        return len(self.ops)

    def chrestenson_count(self) -> int:
        return sum(1 for op in self.ops if op.kind == CHRESTENSON)


@dataclass(frozen=True)
class Permutation:
    """Bijection on [0, size), stored as the image array ``mapping``."""

    size: int
    mapping: np.ndarray

    def __post_init__(self):
        mapping = np.asarray(self.mapping, dtype=np.int64)
        if mapping.shape != (self.size,) or not np.array_equal(
            np.sort(mapping), np.arange(self.size)
        ):
            raise ValueError("mapping is not a bijection on [0, size)")
        mapping.setflags(write=False)
        object.__setattr__(self, "mapping", mapping)


def _validate_params(q: int, n: int, keep_depth: int | None) -> None:
    if q < 2:
        raise ValueError("radix must be at least 2")
    if n < 1:
        raise ValueError("digits must be at least 1")
    if keep_depth is not None and keep_depth < 1:
        raise ValueError("keep_depth must be at least 1 (or None for unbounded)")


def build_qft_circuit(q: int, n: int, keep_depth: int | None = None) -> Circuit:
    """Fourier transform over ``Z_{q**n}`` as a gate-level circuit.

    Targets are processed from the most significant digit (n-1) down to 0:
    each receives a Chrestenson gate and then, for every less significant
    control digit k, a controlled phase with denominator exponent
    ``target - k + 1``.  That ordering keeps every control digit in its
    untransformed value at the moment it is used, which is what makes the
    in-place construction correct.  The output digit order is reversed at
    the end.

    ``keep_depth`` prunes the circuit: a controlled phase survives only if
    its denominator exponent is <= keep_depth.  ``None`` keeps everything,
    giving the exact transform with ``n*(n+1)/2`` gates.
    """
    _validate_params(q, n, keep_depth)
    ops = []
    for target in range(n - 1, -1, -1):
        ops.append(GateOp.chrestenson(target))
        for control in range(target - 1, -1, -1):
            denom_exp = target - control + 1
            if keep_depth is None or denom_exp <= keep_depth:
                ops.append(GateOp.controlled_phase(control, target, denom_exp))
    return Circuit(q, n, tuple(ops), reverse_output_digits=True)


def build_walsh_hadamard_transform_circuit(q: int, n: int) -> Circuit:
    """n parallel Chrestenson gates: the Fourier transform over ``(Z_q)**n``."""
    _validate_params(q, n, None)
    ops = tuple(GateOp.chrestenson(target) for target in range(n - 1, -1, -1))
    return Circuit(q, n, ops, reverse_output_digits=False)


def dft_matrix(t: int) -> np.ndarray:
    """Discrete Fourier transform over ``Z_t``: entry (y, x) is
    ``exp(-2j*pi*x*y/t) / sqrt(t)``.  Used as the oracle the compiled QFT
    circuits are checked against."""
    if t < 2:
        raise ValueError("transform size must be at least 2")
    x = np.arange(t, dtype=np.int64)
    exponents = np.outer(x, x) % t
    roots = np.exp(-2j * np.pi * np.arange(t) / t)
    return roots[exponents] / np.sqrt(t)


def chrestenson_transform_matrix(q: int, n: int,
                                 dim_cap: int = DEFAULT_DIM_CAP) -> np.ndarray:
    """n-fold Kronecker power of the Chrestenson gate."""
    _validate_params(q, n, None)
    if q ** n > dim_cap:
        raise ValueError(f"dimension {q ** n} exceeds cap {dim_cap}")
    gate = chrestenson_gate(q)
    out = gate
    for _ in range(n - 1):
        out = kron(out, gate)
    return out


def digit_reversal_perm(q: int, n: int) -> Permutation:
    """Permutation sending digits ``(x_{n-1}, ..., x_0)`` to ``(x_0, ..., x_{n-1})``."""
    _validate_params(q, n, None)
    dim = q ** n
    idx = np.arange(dim, dtype=np.int64)
    reversed_idx = np.zeros(dim, dtype=np.int64)
    for j in range(n):
        reversed_idx += ((idx // q ** j) % q) * q ** (n - 1 - j)
    return Permutation(dim, reversed_idx)


def _controlled_phase_vector(q: int, dim: int, op: GateOp) -> np.ndarray:
    """Per-index phases of one controlled phase shift over a full register."""
    idx = np.arange(dim, dtype=np.int64)
    control = (idx // q ** op.control) % q
    target = (idx // q ** op.target) % q
    modulus = q ** op.denom_exp
    return np.exp(-2j * np.pi * ((control * target) % modulus) / modulus)


def _run_batch(circuit: Circuit, amplitude_rows: np.ndarray) -> np.ndarray:
    """Apply a circuit to every row of a (batch, dim) amplitude array.

    Consecutive controlled phase shifts are diagonal, so each run of them
    collapses into a single per-index phase vector applied in one pass.
    """
    q = circuit.radix
    dim = q ** circuit.digits
    current = np.array(amplitude_rows, dtype=np.complex128, order="C")
    spare = np.empty_like(current)
    gate = chrestenson_gate(q)
    ops = circuit.ops
    position = 0
    while position < len(ops):
        op = ops[position]
        if op.kind == CHRESTENSON:
            kernels.apply_single_qudit(current, spare, q, q ** op.target, gate)
            current, spare = spare, current
            position += 1
        else:
            phases = _controlled_phase_vector(q, dim, op)
            position += 1
            while position < len(ops) and ops[position].kind == CONTROLLED_PHASE:
                phases *= _controlled_phase_vector(q, dim, ops[position])
                position += 1
            kernels.apply_diagonal(current, phases)
    if circuit.reverse_output_digits:
        perm = digit_reversal_perm(q, circuit.digits)
        np.take(current, perm.mapping, axis=1, out=spare)
        current, spare = spare, current
    return current


def apply_circuit(circuit: Circuit, state: StateVector) -> StateVector:
    """Run a circuit on one state; returns a fresh unit-norm state."""
    if state.radix != circuit.radix or state.digits != circuit.digits:
        raise ValueError(
            f"state is base-{state.radix} with {state.digits} digits, circuit "
            f"expects base-{circuit.radix} with {circuit.digits}"
        )
    out = _run_batch(circuit, state.amplitudes[np.newaxis, :])[0]
    return StateVector(circuit.radix, circuit.digits, out)


def circuit_to_matrix(circuit: Circuit, dim_cap: int = DEFAULT_DIM_CAP) -> np.ndarray:
    """Compile a circuit to its dense unitary: column x is the circuit
    applied to basis state x."""
    dim = circuit.radix ** circuit.digits
    if dim > dim_cap:
        raise ValueError(f"dimension {dim} exceeds cap {dim_cap}")
    basis_rows = np.eye(dim, dtype=np.complex128)
    out_rows = _run_batch(circuit, basis_rows)
    return np.ascontiguousarray(out_rows.T)
