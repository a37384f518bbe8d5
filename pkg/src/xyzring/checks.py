"""Named verification checks driven by the CLI `verify` subcommand.

Every check certifies a closed form or an invariant against an
independent oracle (dense state construction, exact diagonalization or
brute-force partial traces) and declares which library operations it
exercises, so the report can assert full operation coverage.
"""

import itertools
from dataclasses import dataclass, field
from typing import Dict, List

import numpy as np

from . import ed, entanglement, observables, parent
from .model import (
    ModelParams,
    check_symmetries,
    couplings_from_params,
    general_mps_matrices,
    mps_matrices,
)
from .mps import (
    amplitude,
    bell_pair_matrices,
    build_state,
    expectation_one_point,
    expectation_two_point,
    explicit_ground_state,
    overlap,
    transfer_matrix,
    transfer_with_operator,
)
from .observables import SingularParameterError
from .pauli import SI, SX, SY, SZ



ALL_OPS = frozenset(
    [
        "model_core.couplings_from_params",
        "model_core.mps_matrices",
        "model_core.check_symmetries",
        "mps_engine.amplitude",
        "mps_engine.build_state",
        "mps_engine.transfer_matrix",
        "mps_engine.transfer_with_operator",
        "mps_engine.expectation_one_point",
        "mps_engine.expectation_two_point",
        "mps_engine.explicit_ground_state",
        "mps_engine.bell_pair_matrices",
        "parent_hamiltonian.null_space_k2",
        "parent_hamiltonian.e_vectors",
        "parent_hamiltonian.local_h",
        "parent_hamiltonian.pauli_decompose",
        "parent_hamiltonian.assemble_chain_H",
        "closed_form_observables.u_param",
        "closed_form_observables.magnetization_x",
        "closed_form_observables.correlations",
        "closed_form_observables.thermodynamic_magnetization",
        "closed_form_observables.thermodynamic_correlations",
        "entanglement.pair_density",
        "entanglement.wootters_concurrence",
        "entanglement.concurrence_closed",
        "entanglement.scaled_concurrence_curve",
        "entanglement.scaling_limit",
        "ed_oracle.dense_spectrum",
        "ed_oracle.ground_membership",
        "ed_oracle.ground_degeneracy_scan",
    ]
)

CLASSES = [(1, 1), (1, -1), (-1, 1), (-1, -1)]


@dataclass
class VerifyConfig:
    j: float = 1.0
    n_list: List[int] = field(default_factory=lambda: [4, 6])
    g_values: List[float] = field(default_factory=lambda: [-2.0, -0.5, 0.3, 0.7, 1.0, 1.5])
    tolerance: float = 1e-10


@dataclass
class CheckResult:
    name: str
    status: str  # "pass" | "fail" | "skip"
    covers: List[str]
    details: Dict = field(default_factory=dict)


_REGISTRY: List = []


def _check(name, covers):
    def wrap(fn):
        _REGISTRY.append((name, covers, fn))
        return fn

    return wrap


def _params(eps, eta, g, j, n):
    return ModelParams(epsilon=eps, eta=eta, g=g, j=j, n=n)


def _regular_g(cfg):
    """Grid points where the closed forms are defined, plus the skipped ones."""
    good = [g for g in cfg.g_values if g != -1]
    skipped = [g for g in cfg.g_values if g == -1]
    return good, skipped


@_check("coupling-surface", ["model_core.couplings_from_params"])
def check_couplings(cfg):
    worst = 0.0
    for (eps, eta), g in itertools.product(CLASSES, cfg.g_values):
        c = couplings_from_params(_params(eps, eta, g, cfg.j, 4))
        worst = max(worst, abs(c.jy + c.jz + 2 * eta * cfg.j))
        worst = max(worst, abs(c.jy - c.jz - 2 * g))
        worst = max(worst, abs(c.b - eps * (g * g - 1)))
    return worst < 1e-12, {"max_error": worst}


@_check("tensor-symmetries", ["model_core.mps_matrices", "model_core.check_symmetries"])
def check_tensor_symmetries(cfg):
    ok = True
    for (eps, eta), g in itertools.product(CLASSES, cfg.g_values):
        rep = check_symmetries(mps_matrices(_params(eps, eta, g, cfg.j, 4)), eps)
        ok &= rep.spin_flip and rep.time_reversal
        ok &= rep.parity is None if g == 0 else rep.parity is True
    return ok, {}


@_check(
    "normalization-consistency",
    ["mps_engine.amplitude", "mps_engine.build_state", "mps_engine.transfer_matrix"],
)
def check_normalization(cfg):
    worst = 0.0
    for (eps, eta), g, n in itertools.product(CLASSES, cfg.g_values, cfg.n_list):
        t = mps_matrices(_params(eps, eta, g, cfg.j, n))
        psi = build_state(t, n)  # build_state cross-checks Z = tr(E^n)
        # spot-check two amplitudes against the direct trace
        for bits in ("0" * n, "01" * (n // 2) + "0" * (n % 2)):
            direct = amplitude(t, bits) / np.sqrt(psi.z)
            worst = max(worst, abs(direct - psi.amplitudes[int(bits, 2)]))
    return worst < 1e-12, {"max_error": worst}


@_check(
    "transfer-spectrum",
    ["mps_engine.transfer_matrix", "mps_engine.transfer_with_operator"],
)
def check_transfer_spectrum(cfg):
    worst = 0.0
    for (eps, eta), g in itertools.product(CLASSES, cfg.g_values):
        t = mps_matrices(_params(eps, eta, g, cfg.j, 4))
        ev = np.sort_complex(transfer_matrix(t).eigenvalues())
        expect = np.sort_complex(
            np.array([2 * (eta + g), 2 * (eta - g), 2 * (1 + g), 2 * (1 - g)], complex)
        )
        worst = max(worst, float(np.max(np.abs(ev - expect))))
        # identity dressing reproduces E itself
        worst = max(
            worst,
            float(
                np.max(
                    np.abs(transfer_with_operator(t, SI).matrix - transfer_matrix(t).matrix)
                )
            ),
        )
    return worst < 1e-12, {"max_error": worst}


@_check(
    "closed-form-correlators",
    [
        "mps_engine.transfer_with_operator",
        "mps_engine.expectation_one_point",
        "mps_engine.expectation_two_point",
        "closed_form_observables.u_param",
        "closed_form_observables.magnetization_x",
        "closed_form_observables.correlations",
    ],
)
def check_closed_form_correlators(cfg):
    good, skipped = _regular_g(cfg)
    worst = 0.0
    for eps, g, n in itertools.product((1, -1), good, cfg.n_list):
        t = mps_matrices(_params(eps, 1, g, cfg.j, n))
        mx = observables.magnetization_x(eps, g, n)
        gx, gy, gz = observables.correlations(g, n)
        for k in range(1, n + 1):
            worst = max(worst, abs(expectation_one_point(t, SX, k, n) - mx))
            worst = max(worst, abs(expectation_one_point(t, SY, k, n)))
            worst = max(worst, abs(expectation_one_point(t, SZ, k, n)))
        for r in range(2, n + 1):
            worst = max(worst, abs(expectation_two_point(t, SX, SX, r, n) - gx))
            worst = max(worst, abs(expectation_two_point(t, SY, SY, r, n) - gy))
            worst = max(worst, abs(expectation_two_point(t, SZ, SZ, r, n) - gz))
        # identities
        worst = max(worst, abs(gx + gy + gz - 1))
        worst = max(worst, abs((1 - gz) * (1 - gy) - mx * mx))
        # eta = -1 sector through the alternating map
        if n % 2 == 0:
            tm = mps_matrices(_params(eps, -1, g, cfg.j, n))
            for r in range(2, n + 1):
                gxm, gym, gzm = observables.correlations_eta_minus(g, n, r)
                worst = max(worst, abs(expectation_two_point(tm, SX, SX, r, n) - gxm))
                worst = max(worst, abs(expectation_two_point(tm, SY, SY, r, n) - gym))
                worst = max(worst, abs(expectation_two_point(tm, SZ, SZ, r, n) - gzm))
    details = {"max_error": worst}
    if skipped:
        details["skipped"] = [
            {"g": g, "reason": "singular parameter"} for g in skipped
        ]
    return worst < cfg.tolerance, details


@_check(
    "ground-state-equivalence",
    ["mps_engine.build_state", "mps_engine.explicit_ground_state"],
)
def check_ground_state_equivalence(cfg):
    worst = 1.0
    for (eps, eta), g, n in itertools.product(CLASSES, cfg.g_values, cfg.n_list):
        if eta == -1 and n % 2 != 0:
            continue
        p = _params(eps, eta, g, cfg.j, n)
        ov = abs(overlap(build_state(mps_matrices(p), n), explicit_ground_state(p)))
        worst = min(worst, ov)
    return worst > 1 - 1e-10, {"min_overlap": worst}


@_check("bell-pair-commutation", ["mps_engine.bell_pair_matrices"])
def check_bell_pairs(cfg):
    worst = 0.0
    for eps, g in itertools.product((1, -1), cfg.g_values):
        phis = bell_pair_matrices(mps_matrices(_params(eps, -1, g, cfg.j, 4)))
        for a, b in itertools.combinations(phis, 2):
            worst = max(worst, float(np.max(np.abs(a @ b - b @ a))))
    return worst < 1e-12, {"max_commutator": worst}


@_check(
    "null-space-kernel",
    ["parent_hamiltonian.null_space_k2", "parent_hamiltonian.e_vectors"],
)
def check_null_space(cfg):
    worst = 0.0
    dims = {}
    for (eps, eta), g in itertools.product(CLASSES, cfg.g_values):
        p = _params(eps, eta, g, cfg.j, 4)
        t = mps_matrices(p)
        prob = parent.null_space_k2(t.a0, t.a1)
        dims[(eps, eta, g)] = prob.kernel_dim
        # null-space membership of each kernel vector
        mats = (t.a0.astype(complex), t.a1.astype(complex))
        for c in prob.kernel.T:
            comb = sum(
                c[2 * j1 + j2] * mats[j1] @ mats[j2]
                for j1, j2 in itertools.product(range(2), repeat=2)
            )
            worst = max(worst, float(np.linalg.norm(comb)))
        # kernel projector vs span{e1, e2}
        e1, e2 = parent.e_vectors(p)
        basis = np.linalg.qr(np.column_stack([e1, e2]))[0]
        proj_e = basis @ basis.conj().T
        proj_k = prob.kernel @ prob.kernel.conj().T
        if prob.kernel_dim == 2:
            worst = max(worst, float(np.max(np.abs(proj_e - proj_k))))
        else:
            # extra degeneracy: span{e1,e2} must still lie inside the kernel
            worst = max(worst, float(np.max(np.abs(proj_k @ proj_e - proj_e))))
    return worst < cfg.tolerance, {"max_error": worst, "kernel_dims": sorted(set(dims.values()))}


@_check(
    "coupling-recovery",
    ["parent_hamiltonian.local_h", "parent_hamiltonian.pauli_decompose"],
)
def check_coupling_recovery(cfg):
    worst = 0.0
    diag = {"xx": "jx", "yy": "jy", "zz": "jz"}
    for (eps, eta), g in itertools.product(CLASSES, cfg.g_values):
        p = _params(eps, eta, g, cfg.j, 4)
        coeffs = parent.pauli_decompose(parent.local_h(p))
        c = couplings_from_params(p)
        for label, attr in diag.items():
            worst = max(worst, abs(coeffs[label] - getattr(c, attr)))
        worst = max(worst, abs(coeffs["1x"] - c.b / 2))
        worst = max(worst, abs(coeffs["x1"] - c.b / 2))
        worst = max(worst, abs(coeffs["11"] - parent.constant_shift(p)))
        off = [
            v
            for k, v in coeffs.items()
            if k not in ("xx", "yy", "zz", "1x", "x1", "11")
        ]
        worst = max(worst, max(abs(v) for v in off))
    return worst < 1e-12, {"max_error": worst}


@_check(
    "parent-hamiltonian",
    [
        "parent_hamiltonian.assemble_chain_H",
        "ed_oracle.dense_spectrum",
        "ed_oracle.ground_membership",
    ],
)
def check_parent_hamiltonian(cfg):
    worst_res = 0.0
    worst_energy = 0.0
    worst_forms = 0.0
    for (eps, eta), g, n in itertools.product(CLASSES, cfg.g_values, cfg.n_list):
        if eta == -1 and n % 2 != 0:
            continue
        p = _params(eps, eta, g, cfg.j, n)
        h_proj = parent.assemble_chain_h(p, form="projector")
        h_coupling = parent.assemble_chain_h(p, form="coupling")
        c0 = parent.constant_shift(p)
        worst_forms = max(
            worst_forms,
            float(np.max(np.abs(h_coupling - h_proj + n * c0 * np.eye(2**n)))),
        )
        psi = explicit_ground_state(p)
        res, ov = ed.ground_membership(h_proj, psi)
        worst_res = max(worst_res, res, 1 - ov)
        spec = ed.dense_spectrum(h_coupling)
        worst_energy = max(worst_energy, abs(spec.eigenvalues[0] + n * c0))
    ok = worst_res < cfg.tolerance and worst_energy < 1e-9 and worst_forms < 1e-10
    return ok, {
        "max_residual": worst_res,
        "max_energy_error": worst_energy,
        "max_form_mismatch": worst_forms,
    }


@_check("degeneracy-scan", ["ed_oracle.ground_degeneracy_scan"])
def check_degeneracy_scan(cfg):
    p = _params(1, 1, 0.5, cfg.j, min(cfg.n_list))
    scan = ed.ground_degeneracy_scan(p, [g for g in cfg.g_values if g not in (0, 1)])
    # dimension 2 is the generic expectation; larger values are recorded
    # as measured degeneracies, never inflated away
    generic_ok = all(dim >= 2 for _, dim in scan)
    return generic_ok, {"scan": scan}


@_check(
    "concurrence-agreement",
    [
        "entanglement.pair_density",
        "entanglement.wootters_concurrence",
        "entanglement.concurrence_closed",
    ],
)
def check_concurrence(cfg):
    worst = 0.0
    for (eps, eta), g, n in itertools.product(CLASSES, cfg.g_values, cfg.n_list):
        if eta == -1 and n % 2 != 0:
            continue
        p = _params(eps, eta, g, cfg.j, n)
        closed = entanglement.concurrence_closed(g, n)
        cs = [
            entanglement.wootters_concurrence(entanglement.pair_density(p, i, j)).c
            for i, j in itertools.combinations(range(1, n + 1), 2)
        ]
        worst = max(worst, max(cs) - min(cs))
        worst = max(worst, abs(np.mean(cs) - closed))
    return worst < cfg.tolerance, {"max_error": worst}


@_check(
    "scaling-relation",
    ["entanglement.scaled_concurrence_curve", "entanglement.scaling_limit"],
)
def check_scaling(cfg):
    # finite-size deviation of the scaled curve is ~2g/N, so the bound
    # at N=50 is taken as 2.5*g/N (the 5%-of-limit bound only holds for
    # g <= ~1 there); at N=1e4 the 0.1%-of-limit bound is comfortable
    ok = True
    details = {}
    for g in (0.5, 1.0, 2.0):
        lim = entanglement.scaling_limit(g)
        (_, v50) = entanglement.scaled_concurrence_curve(50, [g])[0]
        (_, v1e4) = entanglement.scaled_concurrence_curve(10**4, [g])[0]
        ok &= abs(v50 - lim) < 2.5 * g / 50 * lim
        ok &= abs(v1e4 - lim) < 0.001 * lim
        ok &= abs(v1e4 - lim) < abs(v50 - lim)
        details[f"g={g}"] = {"n50": v50, "n1e4": v1e4, "limit": lim}
    return ok, details


@_check(
    "thermodynamic-limits",
    [
        "closed_form_observables.thermodynamic_magnetization",
        "closed_form_observables.thermodynamic_correlations",
    ],
)
def check_thermodynamic(cfg):
    good, skipped = _regular_g(cfg)
    ok = True
    worst = 0.0
    for g in good:
        if g == 0:
            continue
        lim = observables.thermodynamic_magnetization(1, g)
        prev = None
        for n in (8, 16, 32, 64):
            err = abs(observables.magnetization_x(1, g, n) - lim)
            if prev is not None and prev > 1e-14:
                ok &= err <= prev + 1e-14
            prev = err
        gx, gy, gz = observables.thermodynamic_correlations(g)
        worst = max(worst, abs(gx + gy + gz - 1))
    # known-discrepancy report: the reciprocal form of the limit
    report = {
        "limit(g=0.5)": observables.thermodynamic_magnetization(1, 0.5),
        "reciprocal_form(g=0.5)": observables.thermodynamic_magnetization_alt(1, 0.5),
        "note": "reciprocal form exceeds |mx| <= 1; the finite-N-consistent limit is used",
    }
    details = {"identity_error": worst, "magnetization_limit_discrepancy": report}
    if skipped:
        details["skipped"] = [{"g": g, "reason": "singular parameter"} for g in skipped]
    return ok and worst < 1e-12, details


@_check("general-form-determinant", ["parent_hamiltonian.null_space_k2"])
def check_general_determinant(cfg):
    rng = np.random.default_rng(2024)
    worst = 0.0
    for _ in range(20):
        a, b, c, d = rng.normal(size=4)
        t = general_mps_matrices(a, b, c, d)
        det = np.linalg.det(parent.null_space_k2(t.a0, t.a1).m)
        formula = 16 * b * b * c * c * (a - d) ** 2 * (a + d) ** 2
        scale = max(abs(formula), 1e-30)
        worst = max(worst, abs(det.real - formula) / scale)
    return worst < 1e-10, {"max_rel_error": worst}


def run_verify(cfg=None):
    """Run every registered check; returns (results, coverage_ok)."""
    cfg = cfg or VerifyConfig()
    results = []
    covered = set()
    for name, covers, fn in _REGISTRY:
        try:
            ok, details = fn(cfg)
            status = "pass" if ok else "fail"
        except SingularParameterError as exc:
            status, details = "skip", {"reason": f"singular parameter: {exc}"}
        results.append(CheckResult(name=name, status=status, covers=covers, details=details))
        if status != "skip":
            covered.update(covers)
    coverage_ok = ALL_OPS <= covered
    return results, coverage_ok
