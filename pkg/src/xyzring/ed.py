"""Dense exact diagonalization: the independent oracle for ground
energies, degeneracies and ground-space membership.
"""

from dataclasses import dataclass, replace

import numpy as np

from .mps import PureState, build_state
from .model import mps_matrices
from .parent import assemble_chain_h

DEGENERACY_TOL = 1e-8
HERMITICITY_TOL = 1e-10


@dataclass(frozen=True)
class SpectrumResult:
    """Sorted spectrum with the extracted ground space."""

    eigenvalues: np.ndarray
    ground_space_dim: int
    ground_vectors: np.ndarray  # columns, orthonormal


def dense_spectrum(h, degeneracy_tol=DEGENERACY_TOL):
    """Full Hermitian spectrum and the eigenspace of the minimum."""
    h = np.asarray(h, dtype=complex)
    if np.max(np.abs(h - h.conj().T)) > HERMITICITY_TOL:
        raise ValueError("matrix is not Hermitian")
    w, v = np.linalg.eigh(h)
    dim = int(np.sum(w <= w[0] + degeneracy_tol))
    return SpectrumResult(
        eigenvalues=w, ground_space_dim=dim, ground_vectors=v[:, :dim]
    )


def ground_membership(h, psi, degeneracy_tol=DEGENERACY_TOL):
    """(residual norm, overlap with the ground space) of a normalized state.

    residual = ||H psi - <psi|H|psi> psi||; overlap = ||P_ground psi||.
    """
    vec = psi.amplitudes if isinstance(psi, PureState) else np.asarray(psi, complex)
    if abs(np.linalg.norm(vec) - 1) > 1e-10:
        raise ValueError("state is not normalized")
    spec = dense_spectrum(h, degeneracy_tol)
    hv = np.asarray(h, dtype=complex) @ vec
    energy = np.vdot(vec, hv)
    residual = float(np.linalg.norm(hv - energy * vec))
    proj = spec.ground_vectors.conj().T @ vec
    return residual, float(np.linalg.norm(proj))


def ground_degeneracy_scan(p, g_grid, form="projector", degeneracy_tol=DEGENERACY_TOL):
    """Measured ground-space dimension across a g grid at fixed (eps, eta, J, n)."""
    out = []
    for g in g_grid:
        pg = replace(p, g=float(g))
        h = assemble_chain_h(pg, form=form)
        out.append((float(g), dense_spectrum(h, degeneracy_tol).ground_space_dim))
    return out


def state_expectation_one(psi, op, k):
    """Direct <psi|O(k)|psi> on a dense state (brute-force oracle)."""
    t = psi.amplitudes.reshape([2] * psi.n)
    t = np.moveaxis(t, k - 1, 0).reshape(2, -1)
    return complex(np.vdot(t, np.asarray(op, complex) @ t))


def state_expectation_two(psi, op_a, op_b, i, j):
    """Direct <psi|O_a(i) O_b(j)|psi> on a dense state (brute-force oracle)."""
    t = psi.amplitudes.reshape([2] * psi.n)
    t = np.moveaxis(t, [i - 1, j - 1], [0, 1]).reshape(4, -1)
    op = np.kron(np.asarray(op_a, complex), np.asarray(op_b, complex))
    return complex(np.vdot(t, op @ t))


def pair_density_brute(psi, i, j):
    """Partial-trace oracle for the reduced state of sites (i, j)."""
    t = psi.amplitudes.reshape([2] * psi.n)
    t = np.moveaxis(t, [i - 1, j - 1], [0, 1]).reshape(4, -1)
    return t @ t.conj().T


def mps_state(p, **kwargs):
    """Trace-formula state for the model tensors at p (convenience)."""
    return build_state(mps_matrices(p), p.n, **kwargs)
