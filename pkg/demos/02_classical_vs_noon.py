"""
Classical baseline: coherent light
==================================

Coherent states are eigenstates of the substrate field, so the K-photon
dosage is |alpha_e|^(2K)/K!. It scales as intensity^K and its fringe period
stays at pi whatever K is. The NOON fringe shrinks to pi/N.
"""

import math

import numpy as np

from qlitho import DosageQuery, coherent_dosage_closed_form, coherent_truncated, dosage, noon
from qlitho.pattern import PatternGrid, dominant_period, phase_grid, sweep

# Closed form against an explicitly truncated Fock expansion.
state, report = coherent_truncated(1, 1, cutoff=12)
print(f"truncation discarded {report.discarded_mass:.2e} of the probability")
for k in (1, 2, 3):
    exact = coherent_dosage_closed_form(1, 1, DosageQuery.at(k, 0.4))
    print(f"K={k}: closed form {exact:.9f}  truncated Fock {dosage(state, k, 0.4):.9f}")

# Intensity scaling: doubling |alpha|^2 multiplies the K-photon dosage by 2^K.
for k in (1, 2, 3):
    lo = coherent_dosage_closed_form(0.5, 0.5, DosageQuery.at(k, 0.1))
    hi = coherent_dosage_closed_form(0.5 * math.sqrt(2), 0.5 * math.sqrt(2), DosageQuery.at(k, 0.1))
    print(f"K={k}: dosage ratio for doubled intensity = {hi / lo:.6f}")

# Fringe periods side by side.
phis = phase_grid(128)
for n in range(1, 6):
    classical = PatternGrid(n, phis, np.array([coherent_dosage_closed_form(1, 1, DosageQuery.at(n, p)) for p in phis]))
    pc = dominant_period(classical)
    pq = dominant_period(sweep(noon(n), n, 128))
    print(f"N={n}: coherent period {pc:.4f}, NOON period {pq:.4f}, enhancement {pc / pq:.1f}")
