"""Substrate field and K-photon dosage expectations.

The field at a substrate point with half-phase ``phi`` is

    e(phi) = sqrt(mix) c e^{i phi} + sqrt(1 - mix) d e^{-i phi}

and the K-photon dosage is <(e†)^K e^K>/K! = ||e^K psi||^2 / K!.
Three routes compute it: a sparse binomial expansion (the fast path), a
dense truncated-matrix product (independent oracle), and the closed form for
product coherent states.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ConsistencyError, CutoffTooSmall
from .fock import PhotonPair, TwoModeState, norm_sq

NEGATIVE_TOL = 1e-14
ORACLE_MAX_CUTOFF = 12


@dataclass(frozen=True)
class SubstrateField:
    phi: float = 0.0
    mix: float = 0.5

    def __post_init__(self):
        if not math.isfinite(self.phi):
            raise ValueError("phi must be finite")
        if not 0.0 < self.mix < 1.0:
            raise ValueError(f"mix must lie in (0, 1), got {self.mix}")


@dataclass(frozen=True)
class DosageQuery:
    k: int
    field: SubstrateField = SubstrateField()

    def __post_init__(self):
        if int(self.k) != self.k or self.k < 1:
            raise ValueError(f"absorption order k must be an integer >= 1, got {self.k!r}")

    @classmethod
    def at(cls, k: int, phi: float = 0.0, mix: float = 0.5) -> "DosageQuery":
        return cls(k, SubstrateField(phi, mix))


@dataclass(frozen=True)
class DosageResult:
    value: float
    k: int
    phi: float


def clamp_nonnegative(value: float) -> float:
    """Round tiny negative round-off up to 0; anything larger is a bug."""
    if value < 0.0:
        if value < -NEGATIVE_TOL:
            raise ConsistencyError(f"dosage evaluated to {value!r} < 0")
        return 0.0
    return value


@lru_cache(maxsize=None)
def _falling_sqrt(n: int, j: int) -> float:
    # sqrt(n!/(n-j)!) from the exact integer falling factorial
    return math.sqrt(math.perm(n, j))


def apply_field_power(state: TwoModeState, query: DosageQuery) -> TwoModeState:
    """Return e(phi)^K |psi> (unnormalized).

    c and d commute, so e^K expands binomially into sum_j C(K,j) x^j y^(K-j)
    c^j d^(K-j). Each term only lowers photon numbers, so nothing is truncated.
    """
    k = query.k
    phi, mix = query.field.phi, query.field.mix
    coeffs = [
        math.comb(k, j)
        * math.sqrt(mix) ** j
        * math.sqrt(1.0 - mix) ** (k - j)
        * cmath.exp(1j * (2 * j - k) * phi)
        for j in range(k + 1)
    ]
    out: dict[PhotonPair, complex] = {}
    for (n_c, n_d), amp in state.terms.items():
        for j in range(max(0, k - n_d), min(k, n_c) + 1):
            key = PhotonPair(n_c - j, n_d - (k - j))
            weight = _falling_sqrt(n_c, j) * _falling_sqrt(n_d, k - j)
            out[key] = out.get(key, 0j) + amp * coeffs[j] * weight
    return TwoModeState(out)


def _divide_factorial(x: float, k: int) -> float:
    if x == 0.0:
        return 0.0
    if k > 20:
        return math.exp(math.log(x) - math.lgamma(k + 1))
    return x / math.factorial(k)


def dosage_expectation(state: TwoModeState, query: DosageQuery) -> DosageResult:
    """<delta_K> at one substrate point. ``state`` should be normalized."""
    image = apply_field_power(state, query)
    value = clamp_nonnegative(_divide_factorial(norm_sq(image), query.k))
    return DosageResult(value, query.k, query.field.phi)


def dosage(state: TwoModeState, k: int, phi: float = 0.0, mix: float = 0.5) -> float:
    """Shortcut returning the bare dosage value."""
    return dosage_expectation(state, DosageQuery.at(k, phi, mix)).value


@lru_cache(maxsize=16)
def _dense_ladder(cutoff: int) -> tuple[np.ndarray, np.ndarray]:
    dim = cutoff + 1
    a = np.diag(np.sqrt(np.arange(1, dim, dtype=float)), 1)
    eye = np.eye(dim)
    # basis index = n_c * dim + n_d
    c = np.kron(a, eye)
    d = np.kron(eye, a)
    c.setflags(write=False)
    d.setflags(write=False)
    return c, d


def dosage_matrix_oracle(state: TwoModeState, query: DosageQuery, cutoff: int) -> float:
    """Dense-matrix evaluation of <(E†)^K E^K>/K! on the truncated product basis.

    Truncated annihilators act exactly on states inside the cutoff, so this
    agrees with ``dosage_expectation`` up to round-off.
    """
    if cutoff < 0 or cutoff > ORACLE_MAX_CUTOFF:
        raise ValueError(f"oracle cutoff must lie in 0..{ORACLE_MAX_CUTOFF}, got {cutoff}")
    dim = cutoff + 1
    psi = np.zeros(dim * dim, dtype=complex)
    for (n_c, n_d), amp in state.terms.items():
        if n_c > cutoff or n_d > cutoff:
            raise CutoffTooSmall(f"term ({n_c}, {n_d}) lies outside cutoff {cutoff}")
        psi[n_c * dim + n_d] = amp

    c, d = _dense_ladder(cutoff)
    phi, mix = query.field.phi, query.field.mix
    e = np.sqrt(mix) * np.exp(1j * phi) * c + np.sqrt(1.0 - mix) * np.exp(-1j * phi) * d
    ek = np.linalg.matrix_power(e, query.k)
    op = ek.conj().T @ ek
    value = np.vdot(psi, op @ psi).real / math.factorial(query.k)
    return clamp_nonnegative(float(value))


def coherent_dosage_closed_form(alpha: complex, beta: complex, query: DosageQuery) -> float:
    # coherent product states are eigenstates of e with eigenvalue alpha_e
    phi, mix = query.field.phi, query.field.mix
    alpha_e = math.sqrt(mix) * alpha * cmath.exp(1j * phi) + math.sqrt(1.0 - mix) * beta * cmath.exp(-1j * phi)
    return _divide_factorial(abs(alpha_e) ** (2 * query.k), query.k)
