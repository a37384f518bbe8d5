"""Two-spin reduced density matrices of the product-form ground states,
Wootters concurrence, the closed concurrence formula and its universal
scaling limit.
"""

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .mps import product_term_vectors
from .pauli import SY

_YY = np.kron(SY, SY).real  # real symmetric

PSD_TOL = 1e-10


def pair_density(p, i, j):
    """Reduced density matrix of sites (i, j) from the two-product-term
    structure of the ground state; cost O(n), exact for both eta sectors.
    """
    if i == j:
        raise ValueError("sites must be distinct")
    n = p.n
    if n < 4:
        raise ValueError("need n >= 4")
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"sites ({i}, {j}) outside 1..{n}")
    terms = product_term_vectors(p)  # two lists of per-site vectors
    kept = (i - 1, j - 1)
    rho = np.zeros((4, 4), dtype=complex)
    for s in range(2):
        for t in range(2):
            w = 1.0 + 0j
            for k in range(n):
                if k not in kept:
                    w *= np.vdot(terms[t][k], terms[s][k])
            ket = np.kron(terms[s][i - 1], terms[s][j - 1])
            bra = np.kron(terms[t][i - 1], terms[t][j - 1])
            rho += w * np.outer(ket, bra.conj())
    rho /= np.trace(rho).real
    return rho


def phi_overlap(g):
    """<phi_+|phi_-> of the unnormalized single-site vectors; equals
    2(1-g) for g >= 0."""
    sg = np.sqrt(complex(g))
    phi_p = np.array([1 + sg, 1 - sg])
    phi_m = np.array([1 - sg, 1 + sg])
    return np.vdot(phi_p, phi_m)


@dataclass(frozen=True)
class ConcurrenceResult:
    """Wootters concurrence with the sorted square-root eigenvalues of
    rho*rho_tilde and the eigenvalue route that was used."""

    c: float
    sqrt_eigenvalues: Tuple[float, float, float, float]
    method: str = "hermitian-svd"


def wootters_concurrence(rho, psd_tol=PSD_TOL):
    """Concurrence C = max(0, l1 - l2 - l3 - l4) of a two-qubit state.

    The l_i are the decreasing square roots of the eigenvalues of
    rho * (sy x sy) rho^* (sy x sy), computed as the singular values of
    sqrt(rho) (sy x sy) conj(sqrt(rho)), which is numerically exact for
    nearly singular rho.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError("expected a 4x4 density matrix")
    if np.max(np.abs(rho - rho.conj().T)) > psd_tol:
        raise ValueError("density matrix is not Hermitian")
    if abs(np.trace(rho).real - 1) > psd_tol:
        raise ValueError("density matrix does not have unit trace")
    w, v = np.linalg.eigh(rho)
    if w[0] < -psd_tol:
        raise ValueError(f"density matrix is not positive semidefinite ({w[0]})")
    sqrt_rho = (v * np.sqrt(np.clip(w, 0, None))) @ v.conj().T
    k = sqrt_rho @ _YY @ sqrt_rho.conj()
    sv = np.linalg.svd(k, compute_uv=False)
    c = max(0.0, sv[0] - sv[1] - sv[2] - sv[3])
    return ConcurrenceResult(c=float(c), sqrt_eigenvalues=tuple(float(x) for x in sv))


def concurrence_closed(g, n):
    """Closed form C = 4|g| |1-|g||^{n-2} / |(1+g)^n + (1-g)^n|.

    Evaluated in the log domain so that n up to ~1e6 neither overflows
    nor underflows prematurely.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    if g == 0 or abs(g) == 1:
        return 0.0
    log_p = math.log(abs(1 + g))
    log_q = math.log(abs(1 - g))
    # signs of (1+-g)^n
    s_p = (-1) ** n if g < -1 else 1
    s_q = (-1) ** n if g > 1 else 1
    terms = [(n * log_p, s_p), (n * log_q, s_q)]
    m = max(t[0] for t in terms)
    denom = abs(sum(s * math.exp(t - m) for t, s in terms))
    log_num = math.log(4 * abs(g)) + (n - 2) * math.log(abs(1 - abs(g)))
    return math.exp(log_num - m) / denom


def scaled_concurrence_curve(n, g_grid):
    """Points (g, n*C(g/n, n)) of the scaled-concurrence curve."""
    return [(g, n * concurrence_closed(g / n, n)) for g in g_grid]


def scaling_limit(g):
    """Universal large-n limit 2|g| e^{-|g|} / cosh(g) of n*C(g/n, n)."""
    return 2 * abs(g) * math.exp(-abs(g)) / math.cosh(g)
