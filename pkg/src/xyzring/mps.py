"""Trace-formula MPS machinery: amplitudes, full states, transfer
matrices, expectation values and the explicit product-form ground states.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .model import ModelParams, mps_matrices

DENSE_STATE_CAP = 20  # 2^20 amplitudes


@dataclass(frozen=True)
class PureState:
    """Normalized dense state on a ring of n spins.

    z is the squared norm of the unnormalized amplitudes (tr(E^n) for a
    trace-built state).
    """

    amplitudes: np.ndarray
    n: int
    z: Optional[float] = None

    def phase_fixed(self):
        """Amplitudes with the first nonzero entry rotated real positive."""
        a = self.amplitudes
        idx = np.flatnonzero(np.abs(a) > 1e-12)
        if idx.size == 0:
            return a.copy()
        ph = a[idx[0]] / abs(a[idx[0]])
        return a / ph


@dataclass(frozen=True)
class TransferMatrix:
    """4x4 transfer matrix E (or operator-dressed E_O)."""

    matrix: np.ndarray

    def eigenvalues(self):
        return np.linalg.eigvals(self.matrix)


def overlap(psi, chi):
    """Inner product <psi|chi> of two PureStates."""
    return np.vdot(psi.amplitudes, chi.amplitudes)


def amplitude(t, bits):
    """Unnormalized amplitude tr(A_{i1} ... A_{iN}) for a bit pattern.

    bits may be a string like "0101" or any sequence of 0/1; length >= 3.
    """
    seq = [int(b) for b in bits]
    if len(seq) < 3:
        raise ValueError("need at least 3 sites")
    mats = (t.a0, t.a1)
    prod = np.eye(2, dtype=complex)
    for b in seq:
        prod = prod @ mats[b]
    return np.trace(prod)


def _all_amplitudes(t, n):
    """All 2^n trace amplitudes, site 1 in the most significant bit."""
    a0 = np.asarray(t.a0, dtype=complex)
    a1 = np.asarray(t.a1, dtype=complex)
    prods = np.eye(2, dtype=complex)[None, :, :]
    for _ in range(n):
        prods = np.stack([prods @ a0, prods @ a1], axis=1).reshape(-1, 2, 2)
    return np.trace(prods, axis1=1, axis2=2)


def build_state(t, n, cap=DENSE_STATE_CAP):
    """Normalized MPS state from the trace formula.

    The normalization constant Z is cross-checked against tr(E^n) and
    stored on the returned state.
    """
    if n > cap:
        raise ValueError(f"ring size {n} exceeds dense cap {cap}")
    if n < 3:
        raise ValueError("need at least 3 sites")
    amps = _all_amplitudes(t, n)
    z = float(np.sum(np.abs(amps) ** 2))
    if z < 1e-28:
        raise ValueError("all amplitudes vanish for these tensors")
    z_trace = np.trace(np.linalg.matrix_power(transfer_matrix(t).matrix, n))
    if abs(z_trace - z) > 1e-10 * max(z, 1.0):
        raise ArithmeticError(
            f"normalization mismatch: tr(E^n)={z_trace} vs sum |amp|^2={z}"
        )
    return PureState(amplitudes=amps / np.sqrt(z), n=n, z=z)


def transfer_matrix(t):
    """E = conj(A0) x A0 + conj(A1) x A1."""
    a0 = np.asarray(t.a0, dtype=complex)
    a1 = np.asarray(t.a1, dtype=complex)
    e = np.kron(a0.conj(), a0) + np.kron(a1.conj(), a1)
    return TransferMatrix(matrix=e)


def transfer_with_operator(t, op):
    """Dressed transfer matrix E_O = sum_ij <i|O|j> conj(A_i) x A_j."""
    mats = (np.asarray(t.a0, dtype=complex), np.asarray(t.a1, dtype=complex))
    op = np.asarray(op, dtype=complex)
    e = np.zeros((4, 4), dtype=complex)
    for i in range(2):
        for j in range(2):
            e += op[i, j] * np.kron(mats[i].conj(), mats[j])
    return TransferMatrix(matrix=e)


def expectation_one_point(t, op, k, n):
    """<O(k)> = tr(E^{k-1} E_O E^{n-k}) / tr(E^n)."""
    if not 1 <= k <= n:
        raise ValueError(f"site index {k} outside 1..{n}")
    e = transfer_matrix(t).matrix
    eo = transfer_with_operator(t, op).matrix
    num = np.trace(
        np.linalg.matrix_power(e, k - 1) @ eo @ np.linalg.matrix_power(e, n - k)
    )
    return num / np.trace(np.linalg.matrix_power(e, n))


def expectation_two_point(t, op_a, op_b, r, n):
    """<O_a(1) O_b(r)> = tr(E_a E^{r-2} E_b E^{n-r}) / tr(E^n)."""
    if not 2 <= r <= n:
        raise ValueError(f"separation {r} outside 2..{n}")
    e = transfer_matrix(t).matrix
    ea = transfer_with_operator(t, op_a).matrix
    eb = transfer_with_operator(t, op_b).matrix
    num = np.trace(
        ea
        @ np.linalg.matrix_power(e, r - 2)
        @ eb
        @ np.linalg.matrix_power(e, n - r)
    )
    return num / np.trace(np.linalg.matrix_power(e, n))


def product_term_vectors(p):
    """Per-site vectors of the two product terms of the explicit ground state.

    Returns (term_a, term_b): two length-n lists of unnormalized
    single-site 2-vectors whose tensor products sum to the (unnormalized)
    ground state.  For g < 0 the square root continues as i*sqrt(-g).
    """
    sg = np.sqrt(complex(p.g))
    if p.eta == 1:
        phi_p = np.array([1 + sg, 1 - sg])
        phi_m = np.array([1 - sg, 1 + sg])
        term_a = [phi_p] * p.n
        term_b = [phi_m] * p.n
    else:
        if p.n % 2 != 0:
            raise ValueError("explicit eta=-1 ground state needs even n")
        y_p = np.array([1, 1j]) / np.sqrt(2)
        y_m = np.array([1, -1j]) / np.sqrt(2)
        chi_p = (1 + sg) * y_p + 1j * (1 - sg) * y_m
        chi_m = (1 + sg) * y_m - 1j * (1 - sg) * y_p
        term_a = [chi_p if k % 2 == 0 else chi_m for k in range(p.n)]
        term_b = [chi_m if k % 2 == 0 else chi_p for k in range(p.n)]
    if p.epsilon == -1:
        # local pi-rotation around z maps the epsilon = +1 state over
        flip = np.array([1.0, -1.0])
        term_a = [v * flip for v in term_a]
        term_b = [v * flip for v in term_b]
    return term_a, term_b


def explicit_ground_state(p):
    """Closed-form ground state as a superposition of two product states."""
    term_a, term_b = product_term_vectors(p)

    def tensor_power(vectors):
        out = np.array([1.0 + 0j])
        for v in vectors:
            out = np.kron(out, v)
        return out

    amps = tensor_power(term_a) + tensor_power(term_b)
    z = float(np.sum(np.abs(amps) ** 2))
    if z < 1e-28:
        raise ValueError("explicit ground state vanishes identically")
    return PureState(amplitudes=amps / np.sqrt(z), n=p.n, z=z)


def bell_pair_matrices(t):
    """The four matrices (A0 A_m + (-1)^n A1 A_{m+1 mod 2}) / sqrt(2).

    Returned in the order (m, n) = (0,0), (0,1), (1,0), (1,1); they
    commute pairwise for the eta = -1 tensors.
    """
    mats = (np.asarray(t.a0, dtype=complex), np.asarray(t.a1, dtype=complex))
    out = []
    for m in range(2):
        for sign_idx in range(2):
            phi = (mats[0] @ mats[m] + (-1) ** sign_idx * mats[1] @ mats[(1 + m) % 2])
            out.append(phi / np.sqrt(2))
    return tuple(out)
