"""Dense complex linear algebra for small composite Hilbert spaces.

States and operators are immutable wrappers around numpy arrays.  Tensor
products use lexicographic basis ordering with the *left* factor most
significant (``tensor(a, b)`` indexes as ``i_a * dim_b + i_b``); every module
in the package shares this convention.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import ContractViolation, UsageError

ATOL = 1e-12
PSD_ATOL = 1e-10


def _frozen(a: np.ndarray) -> np.ndarray:
    out = np.array(a, dtype=np.complex128)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class Ket:
    """Pure state: complex amplitude vector of length ``dim``."""

    amplitudes: np.ndarray

    def __post_init__(self):
        amps = _frozen(np.asarray(self.amplitudes).reshape(-1))
        if amps.size < 1:
            raise UsageError("ket needs at least one amplitude")
        if not np.all(np.isfinite(amps.view(np.float64))):
            raise ContractViolation("ket amplitudes must be finite")
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def is_normalized(self, atol: float = ATOL) -> bool:
        return abs(self.norm() ** 2 - 1.0) <= atol

    def normalized(self) -> "Ket":
        n = self.norm()
        if n == 0.0:
            raise UsageError("cannot normalize the zero vector")
        return Ket(self.amplitudes / n)

    def dagger(self) -> np.ndarray:
        return self.amplitudes.conj()

    def to_density(self) -> "DensityMatrix":
        psi = self.normalized().amplitudes
        return DensityMatrix(np.outer(psi, psi.conj()))


@dataclass(frozen=True)
class Operator:
    """Dense complex square matrix with hermitian/unitary predicates."""

    entries: np.ndarray

    def __post_init__(self):
        m = _frozen(np.atleast_2d(np.asarray(self.entries)))
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise UsageError(f"operator must be square, got shape {m.shape}")
        object.__setattr__(self, "entries", m)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def dagger(self) -> "Operator":
        return Operator(self.entries.conj().T)

    def is_hermitian(self, atol: float = ATOL) -> bool:
        return bool(np.max(np.abs(self.entries - self.entries.conj().T)) <= atol)

    def is_unitary(self, atol: float = ATOL) -> bool:
        d = self.entries.conj().T @ self.entries - np.eye(self.dim)
        return bool(np.max(np.abs(d)) <= atol)

    def __matmul__(self, other):
        if isinstance(other, Operator):
            if other.dim != self.dim:
                raise UsageError("operator dimensions do not match")
            return Operator(self.entries @ other.entries)
        if isinstance(other, Ket):
            if other.dim != self.dim:
                raise UsageError("operator/ket dimensions do not match")
            return Ket(self.entries @ other.amplitudes)
        return NotImplemented

    def __add__(self, other: "Operator") -> "Operator":
        return Operator(self.entries + other.entries)

    def __sub__(self, other: "Operator") -> "Operator":
        return Operator(self.entries - other.entries)

    def __mul__(self, scalar) -> "Operator":
        return Operator(self.entries * scalar)

    __rmul__ = __mul__


@dataclass(frozen=True)
class DensityMatrix:
    """Mixed state: hermitian, unit-trace, positive semidefinite matrix."""

    entries: np.ndarray
    validate: bool = field(default=True, repr=False)

    def __post_init__(self):
        m = _frozen(np.atleast_2d(np.asarray(self.entries)))
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise UsageError(f"density matrix must be square, got shape {m.shape}")
        object.__setattr__(self, "entries", m)
        if self.validate:
            if np.max(np.abs(m - m.conj().T)) > ATOL:
                raise ContractViolation("density matrix is not hermitian to 1e-12")
            if abs(np.trace(m).real - 1.0) > ATOL or abs(np.trace(m).imag) > ATOL:
                raise ContractViolation("density matrix trace differs from 1 by more than 1e-12")
            w = np.linalg.eigvalsh(m)
            if w.min() < -PSD_ATOL:
                raise ContractViolation(f"density matrix has eigenvalue {w.min():.3e} < -1e-10")

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def purity(self) -> float:
        return float(np.trace(self.entries @ self.entries).real)


# ---------------------------------------------------------------------------
# Pauli algebra and standard kets

I2 = Operator(np.eye(2))
SIGMA_X = Operator(np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex))
SIGMA_Y = Operator(np.array([[0.0, -1.0j], [1.0j, 0.0]]))
SIGMA_Z = Operator(np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex))

_SQ2 = np.sqrt(2.0)

KET_Z_PLUS = Ket(np.array([1.0, 0.0], dtype=complex))
KET_Z_MINUS = Ket(np.array([0.0, 1.0], dtype=complex))
KET_X_PLUS = Ket(np.array([1.0, 1.0], dtype=complex) / _SQ2)
KET_X_MINUS = Ket(np.array([1.0, -1.0], dtype=complex) / _SQ2)
KET_Y_PLUS = Ket(np.array([1.0, 1.0j]) / _SQ2)
KET_Y_MINUS = Ket(np.array([1.0, -1.0j]) / _SQ2)


def identity(dim: int) -> Operator:
    return Operator(np.eye(dim))


def basis_ket(dim: int, index: int) -> Ket:
    if not 0 <= index < dim:
        raise UsageError(f"basis index {index} out of range for dim {dim}")
    amps = np.zeros(dim, dtype=complex)
    amps[index] = 1.0
    return Ket(amps)


# ---------------------------------------------------------------------------
# Operations


def tensor(a, b):
    """Kronecker product of two kets or two operators (left factor most significant)."""
    if isinstance(a, Ket) and isinstance(b, Ket):
        return Ket(np.kron(a.amplitudes, b.amplitudes))
    if isinstance(a, Operator) and isinstance(b, Operator):
        return Operator(np.kron(a.entries, b.entries))
    if isinstance(a, DensityMatrix) and isinstance(b, DensityMatrix):
        return DensityMatrix(np.kron(a.entries, b.entries))
    raise UsageError(f"tensor requires operands of the same kind, got {type(a).__name__} and {type(b).__name__}")


def partial_trace(rho: DensityMatrix, factor_dims, keep: int) -> DensityMatrix:
    """Trace out all tensor factors of ``rho`` except ``factor_dims[keep]``."""
    dims = [int(d) for d in factor_dims]
    if any(d < 1 for d in dims):
        raise UsageError("factor dimensions must be positive")
    if int(np.prod(dims)) != rho.dim:
        raise UsageError(f"product of factor dims {dims} does not equal state dim {rho.dim}")
    if not 0 <= keep < len(dims):
        raise UsageError(f"keep index {keep} out of range for {len(dims)} factors")
    k = len(dims)
    t = rho.entries.reshape(dims + dims)
    # contract row/column axes of every factor except the kept one
    for j in reversed(range(k)):
        if j == keep:
            continue
        t = np.trace(t, axis1=j, axis2=j + (t.ndim // 2))
    return DensityMatrix(t)


def expectation(a: Operator, state) -> complex:
    """⟨ψ|A|ψ⟩ for kets, Tr(ρA) for density matrices."""
    if isinstance(state, Ket):
        if state.dim != a.dim:
            raise UsageError("operator/state dimensions do not match")
        return complex(state.dagger() @ (a.entries @ state.amplitudes))
    if isinstance(state, DensityMatrix):
        if state.dim != a.dim:
            raise UsageError("operator/state dimensions do not match")
        return complex(np.trace(state.entries @ a.entries))
    raise UsageError(f"expectation expects Ket or DensityMatrix, got {type(state).__name__}")


def hermitian_exp(a: Operator, scale: float) -> Operator:
    """exp(-i * scale * A) for hermitian A, via spectral decomposition.

    Exact for the diagonal and Pauli generators used throughout; avoids any
    series-truncation error.
    """
    if not a.is_hermitian():
        raise UsageError("hermitian_exp requires a hermitian generator")
    w, v = np.linalg.eigh(a.entries)
    phases = np.exp(-1j * scale * w)
    return Operator((v * phases) @ v.conj().T)


def commutator(a: Operator, b: Operator) -> Operator:
    if a.dim != b.dim:
        raise UsageError("commutator requires equal dimensions")
    return Operator(a.entries @ b.entries - b.entries @ a.entries)


def trace_distance(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    """(1/2)·||rho - sigma||_1."""
    if rho.dim != sigma.dim:
        raise UsageError("trace_distance requires equal dimensions")
    w = np.linalg.eigvalsh(rho.entries - sigma.entries)
    return float(0.5 * np.sum(np.abs(w)))


def fidelity_pure(psi: Ket, phi: Ket) -> float:
    """|⟨psi|phi⟩| for normalized pure states."""
    return float(abs(psi.dagger() @ phi.normalized().amplitudes) / psi.norm())
