"""Brute-force cross-validation of the closed-form solver.

Propagates states by dense Hermitian eigendecomposition, takes raw
expectation values without any frame convention, and compares both the
amplitudes (phase sensitive) and the reported observables against the
analytic path over a whole time grid.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import HermiticityError, NumericConsistencyError
from .hilbert import HilbertSpace, OperatorMatrix, StateVector, commutator
from .model import ModelParams, build_effective, build_number_ops
from . import analytic

__all__ = [
    "ComparisonReport",
    "propagate_series",
    "standard_observables",
    "observable_series",
    "compare_scenario",
    "interior_projector",
    "interior_commutator_norm",
]

STATE_TOL = 1e-9
OBS_TOL = 1e-9

RAW_NAMES = ("s_z", "sp_sm", "sm_sp", "ad_a", "a_ad", "n_jc", "n_ajc")

# reported column -> raw expectation, per frame
RF_COLUMN_MAP = {
    "s_z": "s_z",
    "atomic_excitation": "sp_sm",
    "photon": "ad_a",
    "n_jc": "n_jc",
    "n_ajc": "n_ajc",
}
CRF_COLUMN_MAP = {
    "s_z": "s_z",
    "atomic_excitation": "sm_sp",
    "photon": "a_ad",
    "n_jc": "n_jc",
    "n_ajc": "n_ajc",
}


@dataclass(frozen=True, eq=False)
class ComparisonReport:
    """Outcome of one closed-form versus propagator scenario."""

    scenario: str
    frame: str
    n: int
    n_max: int
    grid: np.ndarray
    max_state_dev: float
    max_obs_dev: dict[str, float]
    passed: bool

    def worst_obs_dev(self) -> float:
        return max(self.max_obs_dev.values())


def propagate_series(
    hamiltonian: OperatorMatrix, psi0: StateVector, grid
) -> list[StateVector]:
    """exp(-i H t) psi0 on every grid time from a single eigendecomposition."""
    if not hamiltonian.hermitian:
        raise HermiticityError("propagation requires a hermitian-tagged operator")
    if abs(psi0.norm() - 1.0) > 1e-10:
        raise NumericConsistencyError(f"initial norm {psi0.norm()!r} is not 1")
    evals, vecs = np.linalg.eigh(hamiltonian.entries)
    coeffs = vecs.conj().T @ psi0.amps
    states = []
    for t in np.asarray(grid, dtype=float):
        amps = vecs @ (np.exp(-1j * evals * t) * coeffs)
        states.append(StateVector(psi0.space, amps))
    return states


def standard_observables(space: HilbertSpace) -> dict[str, OperatorMatrix]:
    """The raw operator set used for cross-checks.

    a_ad is the algebraic a^dag a + 1, exact under truncation for any state
    with support below the top photon level; the number operators come from
    the model builders for the same reason.
    """
    n_ph = space.n_max + 1
    lower = np.diag(np.sqrt(np.arange(1.0, n_ph)), k=1)
    a = np.kron(lower, np.eye(2))
    ad_a = a.T @ a
    eye_ph = np.eye(n_ph)
    sp_sm = np.kron(eye_ph, np.diag([0.0, 1.0]))
    sm_sp = np.kron(eye_ph, np.diag([1.0, 0.0]))
    s_z = np.kron(eye_ph, np.diag([-0.5, 0.5]))
    n_jc, n_ajc = build_number_ops(space)
    return {
        "s_z": OperatorMatrix(space, s_z, hermitian=True),
        "sp_sm": OperatorMatrix(space, sp_sm, hermitian=True),
        "sm_sp": OperatorMatrix(space, sm_sp, hermitian=True),
        "ad_a": OperatorMatrix(space, ad_a, hermitian=True),
        "a_ad": OperatorMatrix(space, ad_a + np.eye(space.dim), hermitian=True),
        "n_jc": n_jc,
        "n_ajc": n_ajc,
    }


def observable_series(
    states: list[StateVector], ops: dict[str, OperatorMatrix]
) -> dict[str, np.ndarray]:
    """Expectation value of every named operator on every state."""
    if not states:
        return {name: np.array([]) for name in ops}
    stack = np.stack([psi.amps for psi in states])
    out = {}
    for name, op in ops.items():
        values = np.einsum("ti,ij,tj->t", stack.conj(), op.entries, stack)
        imag = float(np.max(np.abs(values.imag)))
        if imag > 1e-12:
            raise NumericConsistencyError(
                f"<{name}> has imaginary residue {imag:.3e}"
            )
        out[name] = values.real
    return out


def compare_scenario(
    params: ModelParams,
    frame: str,
    n: int,
    grid,
    n_max: int | None = None,
    state_tol: float = STATE_TOL,
    obs_tol: float = OBS_TOL,
) -> ComparisonReport:
    """Run one frame scenario both ways and report the worst deviations.

    The initial state is the frame's canonical eigenstate (plus branch of
    the counter-rotating component in the rotating frame, minus branch of
    the rotating component in the counter-rotating frame). Times are
    physical; multiply by g for the dimensionless axis. A truncation that
    cannot hold the analytic support raises TruncationError.
    """
    frame = frame.lower()
    if frame not in ("rf", "crf"):
        raise ValueError(f"frame must be 'rf' or 'crf', got {frame!r}")
    if n_max is None:
        n_max = n + 20
    space = HilbertSpace(n_max)
    grid = np.asarray(grid, dtype=float)
    h_rf, h_crf = build_effective(params, space)
    if frame == "rf":
        psi0, _ = analytic.ajc_eigenstate(params, space, n, +1)
        hamiltonian = h_rf
        evolve = analytic.evolve_rf
        obs_fn = analytic.observables_rf
        column_map = RF_COLUMN_MAP
    else:
        psi0, _ = analytic.jc_eigenstate(params, space, n, -1)
        hamiltonian = h_crf
        evolve = analytic.evolve_crf
        obs_fn = analytic.observables_crf
        column_map = CRF_COLUMN_MAP

    analytic_states = [evolve(params, space, n, t) for t in grid]
    numeric_states = propagate_series(hamiltonian, psi0, grid)
    state_dev = 0.0
    for left, right in zip(analytic_states, numeric_states):
        state_dev = max(state_dev, float(np.max(np.abs(left.amps - right.amps))))

    raw = observable_series(numeric_states, standard_observables(space))
    predicted = obs_fn(params, n, grid).as_dict()
    obs_dev = {
        column: float(np.max(np.abs(np.broadcast_to(predicted[column], grid.shape) - raw[raw_name])))
        for column, raw_name in column_map.items()
    }
    passed = state_dev <= state_tol and all(v <= obs_tol for v in obs_dev.values())
    label = f"{frame} n={n} xi={params.xi:.6g} eps={params.epsilon:.6g}"
    return ComparisonReport(
        scenario=label,
        frame=frame,
        n=n,
        n_max=n_max,
        grid=grid,
        max_state_dev=state_dev,
        max_obs_dev=obs_dev,
        passed=passed,
    )


def interior_projector(space: HilbertSpace, keep: int) -> np.ndarray:
    """Boolean mask of basis indices with photon number <= keep."""
    if keep < 0 or keep > space.n_max:
        raise ValueError(f"keep must lie in 0..{space.n_max}, got {keep}")
    return space.photon_numbers() <= keep


def interior_commutator_norm(
    a: OperatorMatrix, b: OperatorMatrix, keep: int
) -> float:
    """Max-abs entry of [a, b] restricted to the interior photon block.

    Products of single-ladder operators are only trustworthy away from the
    truncation edge, so keep must leave at least two photon levels above.
    """
    space = a.space
    if keep > space.n_max - 2:
        raise ValueError(
            f"interior block needs keep <= n_max - 2 = {space.n_max - 2}, got {keep}"
        )
    mask = interior_projector(space, keep)
    comm = commutator(a, b).entries
    block = comm[np.ix_(mask, mask)]
    return float(np.max(np.abs(block)))
