"""Multi-photon exposure patterns of two-mode photon-number states.

Submodules: ``fock`` (state algebra), ``states`` (constructors and JSON I/O),
``dosage`` (K-photon dosage), ``pattern`` (phase sweeps and fringe
statistics), ``rates`` (flux and absorption-probability bounds), ``cli``.
"""

__version__ = "0.1.0"

from .fock import MAX_TOTAL, Mode, PhotonPair, TwoModeState, TruncationReport, make_state
from .states import NoonSpec, coherent_truncated, fock_product, load_state, noon, save_state, vacuum
from .dosage import (
    DosageQuery,
    DosageResult,
    SubstrateField,
    coherent_dosage_closed_form,
    dosage,
    dosage_expectation,
    dosage_matrix_oracle,
)
from .pattern import PatternGrid, PatternStats, dominant_period, pattern_stats, sweep, visibility
from .rates import FeasibilityParams, FeasibilityReport, feasibility_report
