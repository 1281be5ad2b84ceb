"""Constructors for the canonical two-mode states and a JSON state loader."""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass
from pathlib import Path

from scipy.special import gammainc

from .errors import CapExceeded, ParseError
from .fock import MAX_TOTAL, TruncationReport, TwoModeState, make_state


@dataclass(frozen=True)
class NoonSpec:
    """Photon number ``n`` and phase ``theta`` on the |0, n> branch."""

    n: int
    theta: float = 0.0

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise ValueError(f"NOON photon number must be an integer >= 1, got {self.n!r}")
        if not math.isfinite(self.theta):
            raise ValueError("theta must be finite")


def noon(spec: NoonSpec | int, theta: float = 0.0) -> TwoModeState:
    """(|n,0> + e^{i theta}|0,n>)/sqrt(2).

    ``theta = 0`` gives the fringe 2^-n (1 + cos 2 n phi) under the
    symmetric substrate field; nonzero ``theta`` shifts it to
    1 + cos(2 n phi - theta).
    """
    if not isinstance(spec, NoonSpec):
        spec = NoonSpec(spec, theta)
    n = int(spec.n)
    if n > MAX_TOTAL:
        raise CapExceeded(f"NOON photon number {n} exceeds MAX_TOTAL = {MAX_TOTAL}")
    h = 1.0 / math.sqrt(2.0)
    return TwoModeState({(n, 0): complex(h), (0, n): h * cmath.exp(1j * spec.theta)}, normalized=True)


def fock_product(n_c: int, n_d: int) -> TwoModeState:
    return make_state({(n_c, n_d): 1.0})


def vacuum() -> TwoModeState:
    return fock_product(0, 0)


def _poisson_tail(mean: float, cutoff: int) -> float:
    # P(n > cutoff) for Poisson(mean) equals the regularized lower gamma P(cutoff+1, mean)
    if mean == 0.0:
        return 0.0
    return float(gammainc(cutoff + 1, mean))


def _coherent_amplitudes(alpha: complex, cutoff: int) -> list[complex]:
    if alpha == 0:
        return [1.0 + 0j] + [0j] * cutoff
    log_r = math.log(abs(alpha))
    phase = cmath.phase(alpha)
    mean = abs(alpha) ** 2
    return [
        cmath.rect(math.exp(n * log_r - 0.5 * math.lgamma(n + 1) - 0.5 * mean), n * phase)
        for n in range(cutoff + 1)
    ]


def coherent_truncated(alpha: complex, beta: complex, cutoff: int) -> tuple[TwoModeState, TruncationReport]:
    """Product coherent state |alpha>_C |beta>_D cut at ``cutoff`` photons per mode.

    The report carries the Poisson mass of the untruncated state that lies
    beyond the cutoff in either mode.
    """
    if cutoff < 1:
        raise ValueError("cutoff must be >= 1")
    if 2 * cutoff > MAX_TOTAL:
        raise CapExceeded(f"cutoff {cutoff} gives pairs above MAX_TOTAL = {MAX_TOTAL}")
    amps_c = _coherent_amplitudes(complex(alpha), cutoff)
    amps_d = _coherent_amplitudes(complex(beta), cutoff)
    terms = {
        (i, j): a * b
        for i, a in enumerate(amps_c)
        for j, b in enumerate(amps_d)
        if a != 0 and b != 0
    }
    tail_c = _poisson_tail(abs(alpha) ** 2, cutoff)
    tail_d = _poisson_tail(abs(beta) ** 2, cutoff)
    discarded = tail_c + tail_d - tail_c * tail_d
    return make_state(terms, normalize=True), TruncationReport(min(max(discarded, 0.0), 1.0), cutoff)


def save_state(state: TwoModeState, path) -> None:
    """Write ``state`` as JSON. Floats are written in shortest round-trip form."""
    text = json.dumps(state.to_dict(), indent=2)
    Path(path).write_text(text + "\n", encoding="utf-8")


def load_state(path) -> TwoModeState:
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    try:
        return TwoModeState.from_dict(data)
    except ParseError as exc:
        raise type(exc)(f"{path}: {exc}") from None
