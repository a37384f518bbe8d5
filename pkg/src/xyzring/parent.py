"""Two-site null space, local projector Hamiltonian, Pauli decomposition
and dense assembly of the ring Hamiltonian.
"""

import itertools
from dataclasses import dataclass

import numpy as np

from .model import couplings_from_params
from .pauli import PAULI, PAULI_LABELS, SX, SY, SZ, op_on_sites, ring_bond_operator

DENSE_CAP = 12

KERNEL_RTOL = 1e-10

# Bell states in the (|00>, |01>, |10>, |11>) basis
PSI_PLUS = np.array([0, 1, 1, 0]) / np.sqrt(2)
PSI_MINUS = np.array([0, 1, -1, 0]) / np.sqrt(2)
PHI_PLUS = np.array([1, 0, 0, 1]) / np.sqrt(2)
PHI_MINUS = np.array([1, 0, 0, -1]) / np.sqrt(2)


@dataclass(frozen=True)
class NullSpaceProblem:
    """Coefficient matrix M of sum_{j1 j2} c_{j1 j2} A_{j1} A_{j2} = 0
    together with an orthonormal basis of its kernel (columns).
    """

    m: np.ndarray
    kernel: np.ndarray

    @property
    def kernel_dim(self):
        return self.kernel.shape[1]


def null_space_k2(a0, a1, rtol=KERNEL_RTOL):
    """Set up and solve the two-site null-space equation.

    The unknown vector is (c00, c01, c10, c11); row e of M holds entry e
    of the product A_{j1} A_{j2} for each column (j1, j2).
    """
    mats = (np.asarray(a0, dtype=complex), np.asarray(a1, dtype=complex))
    cols = [
        (mats[j1] @ mats[j2]).reshape(-1)
        for j1, j2 in itertools.product(range(2), repeat=2)
    ]
    m = np.array(cols).T
    _, s, vh = np.linalg.svd(m)
    tol = rtol * (s[0] if s[0] > 0 else 1.0)
    rank = int(np.sum(s > tol))
    kernel = vh[rank:].conj().T
    return NullSpaceProblem(m=m, kernel=kernel)


def e_vectors(p):
    """The two unnormalized null-space vectors spanning the local projector.

    e1 = (1+eta)|psi_-> + (1-eta)|phi_->,
    e2 = (1+g)|psi_+> - epsilon*(1-g)|phi_+>.
    """
    e1 = (1 + p.eta) * PSI_MINUS + (1 - p.eta) * PHI_MINUS
    e2 = (1 + p.g) * PSI_PLUS - p.epsilon * (1 - p.g) * PHI_PLUS
    return e1.astype(complex), e2.astype(complex)


def local_h(p):
    """Two-site operator h = J |e1><e1| + |e2><e2| (positive semidefinite)."""
    e1, e2 = e_vectors(p)
    return p.j * np.outer(e1, e1.conj()) + np.outer(e2, e2.conj())


def constant_shift(p):
    """Per-bond identity coefficient c0 = J + (1 + g^2)/2 separating the
    projector form from the coupling form of the ring Hamiltonian."""
    return p.j + (1 + p.g * p.g) / 2


def pauli_decompose(h2, tol=1e-12):
    """Coefficients of a Hermitian 4x4 operator in the two-site Pauli basis.

    Returns a dict keyed by label pairs like "xx", "1x"; coefficients are
    tr(h2 (sigma_a x sigma_b)) / 4 and come out real for Hermitian input.
    """
    h2 = np.asarray(h2, dtype=complex)
    if h2.shape != (4, 4):
        raise ValueError("expected a 4x4 operator")
    if np.max(np.abs(h2 - h2.conj().T)) > tol:
        raise ValueError("operator is not Hermitian")
    coeffs = {}
    for la, lb in itertools.product(PAULI_LABELS, repeat=2):
        c = np.trace(h2 @ np.kron(PAULI[la], PAULI[lb])) / 4
        coeffs[la + lb] = float(c.real)
    return coeffs


def pauli_reconstruct(coeffs):
    """Inverse of pauli_decompose."""
    h2 = np.zeros((4, 4), dtype=complex)
    for label, c in coeffs.items():
        h2 += c * np.kron(PAULI[label[0]], PAULI[label[1]])
    return h2


def assemble_chain_h(p, form="projector"):
    """Dense ring Hamiltonian on 2^n dimensions.

    form="projector": sum of embedded local projectors h_{l,l+1}
    (positive semidefinite, annihilates the MPS state).
    form="coupling": the coupling form with couplings_from_params; equals the
    projector form minus n*c0*identity.
    """
    n = p.n
    if n > DENSE_CAP:
        raise ValueError(f"ring size {n} exceeds dense cap {DENSE_CAP}")
    dim = 2**n
    h_total = np.zeros((dim, dim), dtype=complex)
    if form == "projector":
        h2 = local_h(p)
        for l in range(1, n + 1):
            h_total += ring_bond_operator(h2, n, l)
    elif form == "coupling":
        c = couplings_from_params(p)
        for l in range(1, n + 1):
            h_total += c.jx * ring_bond_operator(np.kron(SX, SX), n, l)
            h_total += c.jy * ring_bond_operator(np.kron(SY, SY), n, l)
            h_total += c.jz * ring_bond_operator(np.kron(SZ, SZ), n, l)
            h_total += c.b * op_on_sites(n, {l: SX})
    else:
        raise ValueError(f"unknown form {form!r}")
    return h_total
