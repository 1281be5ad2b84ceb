"""Two-mode bosonic Fock-state algebra.

States are sparse maps from photon-number pairs ``(n_c, n_d)`` to complex
amplitudes. Everything here is immutable; operations return new states.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping, NamedTuple

from .errors import CapExceeded, EmptyState, ParseError, DuplicateTerm

MAX_TOTAL = 64

# amplitudes below this fraction of the largest one are dropped
DROP_RELATIVE = 1e-15
NORM_TOL = 1e-12


class Mode(enum.Enum):
    C = "c"
    D = "d"


class PhotonPair(NamedTuple):
    n_c: int
    n_d: int

    @property
    def total(self) -> int:
        return self.n_c + self.n_d


def _check_pair(key) -> PhotonPair:
    n_c, n_d = key
    if int(n_c) != n_c or int(n_d) != n_d:
        raise ValueError(f"photon counts must be integers, got {key!r}")
    pair = PhotonPair(int(n_c), int(n_d))
    if pair.n_c < 0 or pair.n_d < 0:
        raise ValueError(f"photon counts must be non-negative, got {tuple(pair)}")
    if pair.total > MAX_TOTAL:
        raise CapExceeded(
            f"n_c + n_d = {pair.total} exceeds MAX_TOTAL = {MAX_TOTAL}"
        )
    return pair


def _prune(terms: Mapping[PhotonPair, complex]) -> dict[PhotonPair, complex]:
    if not terms:
        return {}
    biggest = max(abs(a) for a in terms.values())
    if biggest == 0.0:
        return {}
    floor = DROP_RELATIVE * biggest
    return {
        PhotonPair(*k): terms[k] for k in sorted(terms) if abs(terms[k]) >= floor and terms[k] != 0
    }


@dataclass(frozen=True)
class TwoModeState:
    """Finite superposition over ``PhotonPair`` basis states.

    ``terms`` is read-only and iterates in lexicographic ``(n_c, n_d)`` order.
    The zero state (empty ``terms``) is valid and is never flagged normalized.
    """

    terms: Mapping[PhotonPair, complex]
    normalized: bool = False

    def __post_init__(self):
        if not isinstance(self.terms, MappingProxyType):
            object.__setattr__(self, "terms", MappingProxyType(_prune(self.terms)))

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def max_photons(self) -> int:
        """Largest ``n_c + n_d`` in the support (0 for the zero state)."""
        return max((p.total for p in self.terms), default=0)

    def amplitude(self, n_c: int, n_d: int) -> complex:
        return self.terms.get(PhotonPair(n_c, n_d), 0j)

    def scaled(self, factor: complex) -> "TwoModeState":
        return TwoModeState({k: factor * a for k, a in self.terms.items()})

    def __add__(self, other: "TwoModeState") -> "TwoModeState":
        out = dict(self.terms)
        for k, a in other.terms.items():
            out[k] = out.get(k, 0j) + a
        return TwoModeState(out)

    def to_dict(self) -> dict:
        return {
            "terms": [
                {"nc": k.n_c, "nd": k.n_d, "re": a.real, "im": a.imag}
                for k, a in self.terms.items()
            ],
            "normalized": bool(self.normalized),
        }

    @classmethod
    def from_dict(cls, data) -> "TwoModeState":
        """Build a state from the JSON schema.

        A document flagged ``normalized`` whose norm is off by more than
        ``NORM_TOL`` is renormalized rather than rejected.
        """
        if not isinstance(data, dict):
            raise ParseError("top level: expected an object")
        raw_terms = data.get("terms")
        if not isinstance(raw_terms, list):
            raise ParseError("field 'terms': expected a list")
        flag = data.get("normalized", False)
        if not isinstance(flag, bool):
            raise ParseError("field 'normalized': expected a boolean")

        terms: dict[PhotonPair, complex] = {}
        for i, entry in enumerate(raw_terms):
            where = f"terms[{i}]"
            if not isinstance(entry, dict):
                raise ParseError(f"{where}: expected an object")
            for name in ("nc", "nd"):
                v = entry.get(name)
                if isinstance(v, bool) or not isinstance(v, int):
                    raise ParseError(f"{where}.{name}: expected an integer, got {v!r}")
            for name in ("re", "im"):
                v = entry.get(name, 0.0 if name == "im" else None)
                if isinstance(v, bool) or not isinstance(v, (int, float)):
                    raise ParseError(f"{where}.{name}: expected a number, got {v!r}")
            try:
                key = _check_pair((entry["nc"], entry["nd"]))
            except CapExceeded as exc:
                raise CapExceeded(f"{where}: {exc}") from None
            except ValueError as exc:
                raise ParseError(f"{where}: {exc}") from None
            if key in terms:
                raise DuplicateTerm(f"{where}: duplicate term (nc={key.n_c}, nd={key.n_d})")
            terms[key] = complex(float(entry["re"]), float(entry.get("im", 0.0)))

        if flag and abs(sum(abs(a) ** 2 for a in terms.values()) - 1.0) <= NORM_TOL:
            if all(a == 0 for a in terms.values()):
                raise EmptyState("all amplitudes are zero")
            return cls(terms, normalized=True)
        return make_state(terms, normalize=flag)


def make_state(terms: Mapping | Iterable, normalize: bool = True) -> TwoModeState:
    """Build a state from ``{(n_c, n_d): amplitude}``.

    Zero amplitudes are dropped. Without ``normalize`` the amplitudes are kept
    as given and the flag records whether they happen to be normalized.
    """
    items = terms.items() if isinstance(terms, Mapping) else terms
    checked: dict[PhotonPair, complex] = {}
    for key, amp in items:
        pair = _check_pair(key)
        checked[pair] = checked.get(pair, 0j) + complex(amp)
    checked = _prune(checked)
    if not checked:
        raise EmptyState("state has no nonzero amplitude")
    total = sum(abs(a) ** 2 for a in checked.values())
    if normalize:
        scale = 1.0 / math.sqrt(total)
        checked = {k: a * scale for k, a in checked.items()}
        return TwoModeState(checked, normalized=True)
    return TwoModeState(checked, normalized=abs(total - 1.0) <= NORM_TOL)


def zero_state() -> TwoModeState:
    return TwoModeState({})


def apply_annihilation(state: TwoModeState, mode: Mode | str) -> TwoModeState:
    """Apply ``c`` or ``d``: |n> -> sqrt(n)|n-1> in the chosen mode."""
    mode = Mode(mode.lower()) if isinstance(mode, str) else mode
    out: dict[PhotonPair, complex] = {}
    for (n_c, n_d), amp in state.terms.items():
        if mode is Mode.C:
            if n_c == 0:
                continue
            out[PhotonPair(n_c - 1, n_d)] = amp * math.sqrt(n_c)
        else:
            if n_d == 0:
                continue
            out[PhotonPair(n_c, n_d - 1)] = amp * math.sqrt(n_d)
    return TwoModeState(out)


def apply_creation(state: TwoModeState, mode: Mode | str) -> TwoModeState:
    """Apply ``c†`` or ``d†``. Raises ``CapExceeded`` past ``MAX_TOTAL``."""
    mode = Mode(mode.lower()) if isinstance(mode, str) else mode
    out: dict[PhotonPair, complex] = {}
    for (n_c, n_d), amp in state.terms.items():
        if mode is Mode.C:
            key = _check_pair((n_c + 1, n_d))
            out[key] = amp * math.sqrt(n_c + 1)
        else:
            key = _check_pair((n_c, n_d + 1))
            out[key] = amp * math.sqrt(n_d + 1)
    return TwoModeState(out)


def inner_product(a: TwoModeState, b: TwoModeState) -> complex:
    """<a|b>, conjugate-linear in ``a``."""
    if len(a.terms) > len(b.terms):
        return sum((a.terms[k].conjugate() * v for k, v in b.terms.items() if k in a.terms), 0j)
    return sum((v.conjugate() * b.terms[k] for k, v in a.terms.items() if k in b.terms), 0j)


def norm_sq(state: TwoModeState) -> float:
    return math.fsum(abs(a) ** 2 for a in state.terms.values())


@dataclass(frozen=True)
class TruncationReport:
    discarded_mass: float
    cutoff: int

    def __post_init__(self):
        if not 0.0 <= self.discarded_mass <= 1.0:
            raise ValueError(f"discarded_mass {self.discarded_mass} outside [0, 1]")


def truncate(state: TwoModeState, cutoff: int) -> tuple[TwoModeState, TruncationReport]:
    """Keep terms with ``n_c <= cutoff`` and ``n_d <= cutoff``, then renormalize."""
    if cutoff < 0:
        raise ValueError("cutoff must be >= 0")
    total = norm_sq(state)
    kept = {k: a for k, a in state.terms.items() if k.n_c <= cutoff and k.n_d <= cutoff}
    if not kept or total == 0.0:
        raise EmptyState(f"no terms survive cutoff {cutoff}")
    dropped = math.fsum(abs(a) ** 2 for k, a in state.terms.items() if k not in kept)
    mass = min(max(dropped / total, 0.0), 1.0)
    return make_state(kept, normalize=True), TruncationReport(mass, cutoff)
