"""
How often does one molecule catch all N photons?
================================================

Entangled exposure tolerates at most one N-photon packet per coherence time.
Even if the N photons all land inside a (lambda/2N)^2 spot, a molecule of
cross-section sigma covers only r = sigma/(lambda/2N)^2 of it, and catching
the remaining N-1 photons has probability at most r^(N-1).
"""

from qlitho import FeasibilityParams, feasibility_report
from qlitho.rates import format_report

print(format_report(feasibility_report(FeasibilityParams(wavelength=200e-9, cross_section=1e-19, n=2))))
print()
print(" N   spot area [m^2]   coverage r    bound r^(N-1)")
for n in range(1, 9):
    rep = feasibility_report(FeasibilityParams(wavelength=200e-9, cross_section=1e-19, n=n))
    print(f"{n:2d}   {rep.spot_area:12.4e}   {rep.coverage_ratio:10.3e}   {rep.joint_bound:12.3e}")
