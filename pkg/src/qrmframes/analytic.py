"""Closed-form dressed states, evolution, and observables in both frames.

Each frame couples a bare state to exactly one partner, so the dynamics
factor into two-level doublets labelled by a family tag:

  jc-e(n):  {|e,n>, |g,n+1>}   photon factor n+1, detuning xi
  jc-g(n):  {|g,n>, |e,n-1>}   photon factor n,   detuning xi
  ajc-e(n): {|e,n>, |g,n-1>}   photon factor n,   detuning xi+epsilon
  ajc-g(n): {|g,n>, |e,n+1>}   photon factor n+1, detuning xi+epsilon

Every doublet carries a Rabi frequency R = g sqrt(m + d^2) with m the photon
factor and d the dimensionless detuning, a cosine c = detuning/(2R) that
keeps the detuning sign, and a sine s = g sqrt(m)/R >= 0. The transition
state attached to an e-family doublet is c|bare> + s|partner>; a g-family
doublet uses -c|bare> + s|partner>.

Rotating-frame evolution starts from the plus-branch eigenstate of the
counter-rotating component; counter-rotating-frame evolution starts from
the minus branch of the rotating component. Reported observables follow
the frame convention: normal order (<s+ s->, <a^dag a>) in the rotating
frame, antinormal order (<s- s+>, <a a^dag>) in the counter-rotating frame.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateBranchError, NullStateError, TruncationError
from .hilbert import HilbertSpace, StateVector
from .model import ModelParams

__all__ = [
    "BranchCoeffs",
    "Observables",
    "jc_branch",
    "ajc_branch",
    "jc_eigenstate",
    "ajc_eigenstate",
    "rf_branch_states",
    "crf_branch_states",
    "evolve_rf",
    "evolve_crf",
    "observables_rf",
    "observables_crf",
]


@dataclass(frozen=True)
class BranchCoeffs:
    """Rabi frequency and dressing pair of one two-level doublet.

    c may be negative (it carries the detuning sign); s is never negative,
    and c^2 + s^2 = 1 whenever the doublet is non-degenerate.
    """

    rabi: float
    c: float
    s: float
    family: str


@dataclass(frozen=True, eq=False)
class Observables:
    """Frame-convention expectation values, scalar or per-grid arrays.

    atomic_excitation and photon are normal-ordered in the rotating frame
    and antinormal-ordered in the counter-rotating frame; n_jc and n_ajc
    are the two component excitation numbers, one of which is conserved
    depending on the frame.
    """

    s_z: np.ndarray | float
    atomic_excitation: np.ndarray | float
    photon: np.ndarray | float
    n_jc: np.ndarray | float
    n_ajc: np.ndarray | float

    def as_dict(self) -> dict[str, np.ndarray | float]:
        return {
            "s_z": self.s_z,
            "atomic_excitation": self.atomic_excitation,
            "photon": self.photon,
            "n_jc": self.n_jc,
            "n_ajc": self.n_ajc,
        }


def _check_family_args(atom: str, n: int) -> None:
    if atom not in ("g", "e"):
        raise ValueError(f"family atom must be 'g' or 'e', got {atom!r}")
    if not isinstance(n, (int, np.integer)) or n < 0:
        raise ValueError(f"family index must be a non-negative integer, got {n!r}")


def _doublet(g: float, m: int, half_detuning: float) -> tuple[float, float, float]:
    """(rabi, c, s) for photon factor m; (0, 0, 0) marks a degenerate doublet."""
    rabi = math.hypot(g * math.sqrt(m), half_detuning)
    if rabi == 0.0:
        return 0.0, 0.0, 0.0
    return rabi, half_detuning / rabi, g * math.sqrt(m) / rabi


def _jc_doublet(params: ModelParams, atom: str, n: int) -> tuple[float, float, float]:
    m = n + 1 if atom == "e" else n
    return _doublet(params.g, m, 0.5 * params.delta)


def _ajc_doublet(params: ModelParams, atom: str, n: int) -> tuple[float, float, float]:
    m = n if atom == "e" else n + 1
    return _doublet(params.g, m, 0.5 * params.delta_bar)


def jc_branch(params: ModelParams, atom: str, n: int) -> BranchCoeffs:
    """Dressing coefficients of the rotating-frame doublet at |atom, n>.

    The g-family doublet at n = 0 with zero detuning has no Rabi frequency;
    that case raises DegenerateBranchError and callers must treat |g,0> as
    a null eigenvector of the transition operator.
    """
    _check_family_args(atom, n)
    rabi, c, s = _jc_doublet(params, atom, n)
    if rabi == 0.0:
        raise DegenerateBranchError(
            f"jc-{atom}({n}) doublet is degenerate at xi = {params.xi}"
        )
    return BranchCoeffs(rabi, c, s, f"jc-{atom}({n})")


def ajc_branch(params: ModelParams, atom: str, n: int) -> BranchCoeffs:
    """Dressing coefficients of the counter-rotating doublet at |atom, n>."""
    _check_family_args(atom, n)
    rabi, c, s = _ajc_doublet(params, atom, n)
    # delta_bar = omega0 + omega > 0 for any valid params, so rabi > 0 always
    assert rabi > 0.0, "counter-rotating doublet cannot be degenerate"
    return BranchCoeffs(rabi, c, s, f"ajc-{atom}({n})")


def ajc_eigenstate(
    params: ModelParams, space: HilbertSpace, n: int, sign: int
) -> tuple[StateVector, float]:
    """Eigenstate of the counter-rotating effective Hamiltonian on {|e,n>, |g,n-1>}.

    Returns (state, energy) with energy = omega n + sign * rabi. At n = 0
    only the plus branch exists (it is |e,0> with energy delta_bar/2); the
    minus branch raises NullStateError.
    """
    if sign not in (+1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n + 1 > space.n_max:
        raise TruncationError(f"eigenstate at n={n} needs n_max >= {n + 1}, got {space.n_max}")
    if n == 0 and sign == -1:
        raise NullStateError("the minus branch at n=0 is the zero vector")
    rabi, c, s = _ajc_doublet(params, "e", n)
    amps = np.zeros(space.dim, dtype=np.complex128)
    amps[space.index("e", n)] = 1.0 + sign * c
    if n >= 1:
        amps[space.index("g", n - 1)] = sign * s
    amps /= np.linalg.norm(amps)
    return StateVector(space, amps), params.omega * n + sign * rabi


def jc_eigenstate(
    params: ModelParams, space: HilbertSpace, n: int, sign: int
) -> tuple[StateVector, float]:
    """Eigenstate of the rotating effective Hamiltonian on {|g,n>, |e,n-1>}.

    Returns (state, energy) with energy = omega n + sign * rabi for n >= 1.
    At n = 0 the surviving branch is |g,0> with energy -delta/2; it is
    reported under the minus label for every detuning sign (the state is
    selected by its overlap with |g,0>, not by the energy label), and the
    plus label raises NullStateError. This also covers the degenerate
    doublet at zero detuning, where the energy is exactly zero.
    """
    if sign not in (+1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n > space.n_max:
        raise TruncationError(f"eigenstate at n={n} needs n_max >= {n}, got {space.n_max}")
    if n == 0:
        if sign == +1:
            raise NullStateError("the plus branch at n=0 is the zero vector")
        amps = np.zeros(space.dim, dtype=np.complex128)
        amps[space.index("g", 0)] = 1.0
        return StateVector(space, amps), -0.5 * params.delta
    rabi, c, s = _jc_doublet(params, "g", n)
    amps = np.zeros(space.dim, dtype=np.complex128)
    amps[space.index("g", n)] = 1.0 - sign * c
    amps[space.index("e", n - 1)] = sign * s
    amps /= np.linalg.norm(amps)
    return StateVector(space, amps), params.omega * n + sign * rabi


def _require_headroom(space: HilbertSpace, n: int) -> None:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n + 2 > space.n_max:
        raise TruncationError(
            f"closed-form evolution at n={n} needs n_max >= {n + 2}, got {space.n_max}"
        )


def rf_branch_states(
    params: ModelParams, space: HilbertSpace, n: int, t: float
) -> tuple[StateVector, StateVector | None]:
    """The two rotating-frame doublet evolutions entering the full state.

    The top branch starts at |e,n> and oscillates inside jc-e(n); the
    bottom branch starts at |g,n-1> inside jc-g(n-1) and is None at n = 0.
    Both stay unit norm and mutually orthogonal at every t.
    """
    _require_headroom(space, n)
    w = params.omega
    amps_top = np.zeros(space.dim, dtype=np.complex128)
    r1, c1, s1 = _jc_doublet(params, "e", n)
    phase = np.exp(-1j * w * (n + 1) * t)
    amps_top[space.index("e", n)] = phase * (math.cos(r1 * t) - 1j * c1 * math.sin(r1 * t))
    amps_top[space.index("g", n + 1)] = phase * (-1j * s1 * math.sin(r1 * t))
    top = StateVector(space, amps_top)
    if n == 0:
        return top, None
    amps_bot = np.zeros(space.dim, dtype=np.complex128)
    r2, c2, s2 = _jc_doublet(params, "g", n - 1)
    phase = np.exp(-1j * w * (n - 1) * t)
    # transition state -c|g,n-1> + s|e,n-2>, hence the +i c on the bare state
    amps_bot[space.index("g", n - 1)] = phase * (math.cos(r2 * t) + 1j * c2 * math.sin(r2 * t))
    if n >= 2:
        amps_bot[space.index("e", n - 2)] = phase * (-1j * s2 * math.sin(r2 * t))
    return top, StateVector(space, amps_bot)


def crf_branch_states(
    params: ModelParams, space: HilbertSpace, n: int, t: float
) -> tuple[StateVector, StateVector | None]:
    """The two counter-rotating doublet evolutions entering the full state.

    The top branch starts at |g,n> inside ajc-g(n); the bottom branch
    starts at |e,n-1> inside ajc-e(n-1) and is None at n = 0.
    """
    _require_headroom(space, n)
    w = params.omega
    amps_top = np.zeros(space.dim, dtype=np.complex128)
    rg, cg, sg = _ajc_doublet(params, "g", n)
    phase = np.exp(-1j * w * (n + 1) * t)
    # transition state -c|g,n> + s|e,n+1>, hence the +i c on the bare state
    amps_top[space.index("g", n)] = phase * (math.cos(rg * t) + 1j * cg * math.sin(rg * t))
    amps_top[space.index("e", n + 1)] = phase * (-1j * sg * math.sin(rg * t))
    top = StateVector(space, amps_top)
    if n == 0:
        return top, None
    amps_bot = np.zeros(space.dim, dtype=np.complex128)
    re, ce, se = _ajc_doublet(params, "e", n - 1)
    phase = np.exp(-1j * w * (n - 1) * t)
    amps_bot[space.index("e", n - 1)] = phase * (math.cos(re * t) - 1j * ce * math.sin(re * t))
    if n >= 2:
        amps_bot[space.index("g", n - 2)] = phase * (-1j * se * math.sin(re * t))
    return top, StateVector(space, amps_bot)


def evolve_rf(params: ModelParams, space: HilbertSpace, n: int, t: float) -> StateVector:
    """Closed-form rotating-frame state at time t.

    The initial state is the plus-branch counter-rotating eigenstate at n,
    decomposed over the two rotating doublets with weights (1 + c) and s of
    ajc-e(n). Support spans photon numbers n-2 .. n+1, so n + 2 <= n_max is
    required as headroom for cross-checks against matrix propagation.
    """
    _require_headroom(space, n)
    _, c, s = _ajc_doublet(params, "e", n)
    top, bottom = rf_branch_states(params, space, n, t)
    norm = math.sqrt(2.0 * (1.0 + c))
    amps = (1.0 + c) / norm * top.amps
    if bottom is not None:
        amps = amps + (s / norm) * bottom.amps
    return StateVector(space, amps)


def evolve_crf(params: ModelParams, space: HilbertSpace, n: int, t: float) -> StateVector:
    """Closed-form counter-rotating-frame state at time t.

    The initial state is the minus-branch rotating eigenstate at n,
    decomposed over the two counter-rotating doublets with weights (1 + c)
    and -s of jc-g(n). At n = 0 the initial state is |g,0> itself and only
    the top doublet contributes.
    """
    _require_headroom(space, n)
    top, bottom = crf_branch_states(params, space, n, t)
    if n == 0:
        return top
    _, c, s = _jc_doublet(params, "g", n)
    norm = math.sqrt(2.0 * (1.0 + c))
    amps = (1.0 + c) / norm * top.amps - (s / norm) * bottom.amps
    return StateVector(space, amps)


def _as_time_array(t) -> np.ndarray:
    arr = np.asarray(t, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError("times must be finite")
    return arr


def observables_rf(params: ModelParams, n: int, t) -> Observables:
    """Rotating-frame observables of the evolved plus-branch state.

    Accepts a scalar time or an array and broadcasts. n_jc is conserved at
    n + 1 - s^2/(1 + c) with the ajc-e(n) dressing pair; everything else
    oscillates at the two doublet Rabi frequencies.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    tt = _as_time_array(t)
    _, c, s = _ajc_doublet(params, "e", n)
    r1, _, s1 = _jc_doublet(params, "e", n)
    top_factor = 1.0 - 2.0 * s1**2 * np.sin(r1 * tt) ** 2
    if n >= 1:
        r2, _, s2 = _jc_doublet(params, "g", n - 1)
        bottom_factor = 1.0 - 2.0 * s2**2 * np.sin(r2 * tt) ** 2
    else:
        bottom_factor = np.ones_like(tt)
    weight = s**2 / (1.0 + c)
    s_z = ((1.0 + c) ** 2 * top_factor - s**2 * bottom_factor) / (4.0 * (1.0 + c))
    atomic = 0.5 + s_z
    photon = (n + 0.5 - weight) - s_z
    n_jc = (n + 1.0 - weight) + 0.0 * s_z
    n_ajc = (n - weight) + 2.0 * (1.0 - s_z)
    return Observables(s_z, atomic, photon, n_jc, n_ajc)


def observables_crf(params: ModelParams, n: int, t) -> Observables:
    """Counter-rotating-frame observables of the evolved minus-branch state.

    atomic_excitation is <s- s+> and photon is <a a^dag>. n_ajc is conserved
    at n + 2 - s^2/(1 + c) with the jc-g(n) dressing pair; at n = 0 the
    initial state is exactly |g,0> and that weight vanishes.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    tt = _as_time_array(t)
    rg, _, sg = _ajc_doublet(params, "g", n)
    top_factor = 1.0 - 2.0 * sg**2 * np.sin(rg * tt) ** 2
    if n == 0:
        weight = 0.0
        s_z = -0.5 * top_factor
    else:
        _, c, s = _jc_doublet(params, "g", n)
        re, _, se = _ajc_doublet(params, "e", n - 1)
        bottom_factor = 1.0 - 2.0 * se**2 * np.sin(re * tt) ** 2
        weight = s**2 / (1.0 + c)
        s_z = -((1.0 + c) ** 2 * top_factor - s**2 * bottom_factor) / (4.0 * (1.0 + c))
    atomic = 0.5 - s_z
    photon = (n + 1.5 - weight) + s_z
    n_jc = (n + 1.0 - weight) + 2.0 * s_z
    n_ajc = (n + 2.0 - weight) + 0.0 * s_z
    return Observables(s_z, atomic, photon, n_jc, n_ajc)
