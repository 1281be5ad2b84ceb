"""
Cross-checking the dosage against dense matrices
================================================

The fast path expands e^K binomially over a sparse state. The oracle builds
the truncated ladder matrices, forms E^K explicitly and evaluates
<psi|(E†)^K E^K|psi>/K!. Both should agree to round-off.
"""

import numpy as np

from qlitho import DosageQuery, dosage, dosage_matrix_oracle, make_state, noon

rng = np.random.default_rng(7)
terms = {(int(a), int(b)): complex(*rng.normal(size=2)) for a, b in rng.integers(0, 4, size=(6, 2))}
states = {"noon(5)": noon(5), "random": make_state(terms)}

for label, state in states.items():
    worst = 0.0
    for k in range(1, 6):
        for phi in np.linspace(0, np.pi, 9):
            q = DosageQuery.at(k, float(phi), mix=0.4)
            worst = max(worst, abs(dosage(state, k, float(phi), 0.4) - dosage_matrix_oracle(state, q, cutoff=8)))
    print(f"{label}: max |fast - dense| = {worst:.2e}")
