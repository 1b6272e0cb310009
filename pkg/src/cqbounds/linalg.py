"""Dense Hermitian linear algebra used by every solver in the package.

All functions take and return plain :class:`numpy.ndarray` objects; validation
helpers raise :class:`InvalidInputError` with the name of the violated
invariant.
"""

from typing import NamedTuple

import numpy as np

HERMITIAN_TOL = 1e-12
PSD_TOL = 1e-10
TRACE_TOL = 1e-10
RANK_TOL = 1e-10
KRON_DIM_CAP = 4096


class InvalidInputError(ValueError):
    """An input violates a documented invariant."""


class EigenSystem(NamedTuple):
    eigenvalues: np.ndarray  # real, sorted descending
    eigenvectors: np.ndarray  # unitary, columns


def as_operator(a) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise InvalidInputError(f"operator must be a non-empty square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise InvalidInputError("operator entries must be finite")
    return a


def check_hermitian(a, tol: float = HERMITIAN_TOL) -> np.ndarray:
    a = as_operator(a)
    dev = np.max(np.abs(a - a.conj().T))
    if dev > tol:
        raise InvalidInputError(f"hermitian: max |A - A^H| = {dev:.3e} exceeds {tol:.1e}")
    return (a + a.conj().T) / 2


def check_psd(a, tol: float = PSD_TOL) -> np.ndarray:
    a = check_hermitian(a)
    lam_min = np.linalg.eigvalsh(a)[0]
    if lam_min < -tol:
        raise InvalidInputError(f"psd: smallest eigenvalue {lam_min:.3e} below -{tol:.1e}")
    return a


def check_density(a, tol: float = PSD_TOL) -> np.ndarray:
    a = check_psd(a, tol)
    tr = np.trace(a).real
    if abs(tr - 1.0) > TRACE_TOL:
        raise InvalidInputError(f"trace: Tr = {tr:.12f}, expected 1")
    return a


def eig_hermitian(h) -> EigenSystem:
    """Eigendecomposition of a Hermitian matrix, eigenvalues in descending order.

    Raises
    ------
    InvalidInputError
        If the matrix is not Hermitian or the LAPACK driver fails to converge
        (the message carries the residual of the best available attempt).
    """
    h = check_hermitian(h)
    try:
        lam, vecs = np.linalg.eigh(h)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure
        residual = np.linalg.norm(h - np.diag(np.diag(h)))
        raise InvalidInputError(
            f"eigendecomposition did not converge (off-diagonal residual {residual:.3e})"
        ) from exc
    return EigenSystem(lam[::-1].copy(), vecs[:, ::-1].copy())


def _eigh_psd(a: np.ndarray, tol: float = PSD_TOL):
    lam, vecs = np.linalg.eigh((a + a.conj().T) / 2)
    if lam[0] < -tol * max(1.0, abs(lam[-1])):
        raise InvalidInputError(f"psd: smallest eigenvalue {lam[0]:.3e} below tolerance")
    return np.clip(lam, 0.0, None), vecs


def _kept(lam: np.ndarray, rank_tol: float) -> np.ndarray:
    top = lam.max() if lam.size else 0.0
    if top <= 0.0:
        return np.zeros_like(lam, dtype=bool)
    return lam > rank_tol * top


def frac_power(a, alpha: float, rank_tol: float = RANK_TOL) -> np.ndarray:
    """``A**alpha`` for PSD ``A`` and ``alpha`` in [0, 1] with the convention 0**0 = 0.

    Eigenvalues below ``rank_tol * lambda_max`` are treated as exact zeros, so
    ``alpha = 0`` returns the projector onto the range of ``A``.
    """
    if not 0.0 <= alpha <= 1.0:
        raise InvalidInputError(f"alpha must lie in [0, 1], got {alpha}")
    a = as_operator(a)
    lam, vecs = _eigh_psd(a)
    keep = _kept(lam, rank_tol)
    mapped = np.zeros_like(lam)
    mapped[keep] = lam[keep] ** alpha
    return (vecs * mapped) @ vecs.conj().T


def range_projector(a, rank_tol: float = RANK_TOL) -> np.ndarray:
    """Projector onto the span of eigenvectors with eigenvalue above ``rank_tol * lambda_max``."""
    a = as_operator(a)
    lam, vecs = _eigh_psd(a)
    v = vecs[:, _kept(lam, rank_tol)]
    return v @ v.conj().T


def kron(a, b, dim_cap: int = KRON_DIM_CAP) -> np.ndarray:
    a = as_operator(a)
    b = as_operator(b)
    dim = a.shape[0] * b.shape[0]
    if dim > dim_cap:
        raise InvalidInputError(f"kron result dimension {dim} exceeds cap {dim_cap}")
    return np.kron(a, b)


def purify(f) -> np.ndarray:
    """Canonical purification ``sum_i sqrt(lam_i) e_i (x) e_i`` in the eigenbasis of ``F``.

    The first tensor factor carries the original space; tracing out the second
    factor returns ``F``.
    """
    f = check_density(f)
    lam, vecs = eig_hermitian(f)
    lam = np.clip(lam, 0.0, None)
    d = f.shape[0]
    psi = np.zeros(d * d, dtype=complex)
    for i in range(d):
        basis = np.zeros(d)
        basis[i] = 1.0
        psi += np.sqrt(lam[i]) * np.kron(vecs[:, i], basis)
    return psi


def partial_trace_second(psi: np.ndarray, d1: int, d2: int) -> np.ndarray:
    """Reduced density operator on the first factor of a pure state in C^d1 (x) C^d2."""
    m = np.asarray(psi, dtype=complex).reshape(d1, d2)
    return m @ m.conj().T


def random_density(d: int, rng: np.random.Generator, rank: int | None = None) -> np.ndarray:
    """Random density operator (Ginibre ensemble of the given rank)."""
    k = d if rank is None else rank
    g = rng.normal(size=(d, k)) + 1j * rng.normal(size=(d, k))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_unit_vector(d: int, rng: np.random.Generator) -> np.ndarray:
    v = rng.normal(size=d) + 1j * rng.normal(size=d)
    return v / np.linalg.norm(v)
