"""Exit criteria, one test per criterion, each at its stated tolerance and time budget."""

import io
import json
import math

import numpy as np

from qlitho.cli import main
from qlitho.dosage import DosageQuery, coherent_dosage_closed_form, dosage, dosage_matrix_oracle
from qlitho.fock import make_state
from qlitho.pattern import dominant_period, phase_grid, read_curve_json, sweep, PatternGrid
from qlitho.rates import FeasibilityParams, coverage_ratio, critical_intensity, joint_absorption_bound, spot_area
from qlitho.states import coherent_truncated, noon


def test_1_noon_fringe_law(criterion):
    phis = phase_grid(128)
    with criterion(1, "NOON fringe law, N=1..8, 128 points, abs 1e-12", 1.0) as c:
        worst = 0.0
        for n in range(1, 9):
            s = noon(n)
            got = np.array([dosage(s, n, p) for p in phis])
            worst = max(worst, float(np.max(np.abs(got - 2.0**-n * (1 + np.cos(2 * n * phis))))))
        c.note(f"max err {worst:.2e}")
        assert worst <= 1e-12


def test_2_noon_flatness(criterion):
    phis = phase_grid(128)
    with criterion(2, "NOON flatness for K<N, constant 2^-K C(N,K), 1e-12", 1.0) as c:
        spread_max = err_max = 0.0
        for n in range(2, 9):
            s = noon(n)
            for k in range(1, n):
                got = np.array([dosage(s, k, p) for p in phis])
                spread_max = max(spread_max, float(got.max() - got.min()))
                err_max = max(err_max, float(np.max(np.abs(got - 2.0**-k * math.comb(n, k)))))
        c.note(f"max spread {spread_max:.2e}, max err {err_max:.2e}")
        assert spread_max <= 1e-12
        assert err_max <= 1e-12


def _random_states(count, max_photons, seed=20240601):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        size = int(rng.integers(1, 8))
        terms = {}
        for _ in range(size):
            total = int(rng.integers(0, max_photons + 1))
            n_c = int(rng.integers(0, total + 1))
            terms[(n_c, total - n_c)] = complex(rng.normal(), rng.normal())
        out.append(make_state(terms))
    return out


def test_3_oracle_equivalence(criterion):
    phis = phase_grid(16)
    with criterion(3, "fast vs dense oracle, NOON + 50 random states, K<=6, 16 phi, 1e-10", 10.0) as c:
        states = [noon(n) for n in range(1, 9)] + _random_states(50, 8)
        worst = 0.0
        for s in states:
            for k in range(1, 7):
                for p in phis:
                    q = DosageQuery.at(k, float(p))
                    worst = max(worst, abs(dosage(s, k, float(p)) - dosage_matrix_oracle(s, q, 8)))
        c.note(f"{len(states)} states, max dev {worst:.2e}")
        assert worst <= 1e-10


def test_4_classical_baseline(criterion):
    with criterion(4, "coherent closed form vs Fock (1e-6), slope K (1e-9), period pi vs pi/N", 5.0) as c:
        worst = 0.0
        for alpha, beta in [(1, 1), (1, 0), (0.5, 0.8j), (-0.7, 0.3 + 0.4j), (0.2, 1)]:
            s, _ = coherent_truncated(alpha, beta, 12)
            for k in range(1, 5):
                for p in phase_grid(8):
                    q = DosageQuery.at(k, float(p))
                    worst = max(worst, abs(dosage(s, k, float(p)) - coherent_dosage_closed_form(alpha, beta, q)))
        c.note(f"closed-form dev {worst:.2e}")
        assert worst <= 1e-6

        scales = np.geomspace(0.05, 1.0, 6)
        for k in range(1, 7):
            vals = [coherent_dosage_closed_form(a, a, DosageQuery.at(k, 0.3)) for a in scales]
            slope = np.polyfit(np.log(scales**2), np.log(vals), 1)[0]
            assert abs(slope - k) <= 1e-9

        for n in range(1, 7):
            phis = phase_grid(128)
            classical = PatternGrid(n, phis, np.array([coherent_dosage_closed_form(1, 1, DosageQuery.at(n, p)) for p in phis]))
            period_c = dominant_period(classical)
            period_q = dominant_period(sweep(noon(n), n, 128))
            assert abs(period_c - math.pi) <= 1e-12
            assert abs(period_c / period_q - n) <= 1e-9
        c.note("enhancement = N for N=1..6")


def test_5_rates_reproduction(criterion):
    with criterion(5, "spot area, coverage N^2 1e-5, r^(N-1), I_c at 200 nm", 0.1) as c:
        for n in range(1, 11):
            p = FeasibilityParams(200e-9, 1e-12, 1e-12, 1e-19, n)
            assert math.isclose(spot_area(200e-9, n), 1e-14 / n**2, rel_tol=1e-15)
            r = coverage_ratio(p)
            assert math.isclose(r, n * n * 1e-5, rel_tol=1e-12)
            direct = 1.0
            for _ in range(n - 1):
                direct *= r
            assert math.isclose(joint_absorption_bound(r, n), direct, rel_tol=1e-12)
        ic = critical_intensity(FeasibilityParams(200e-9, 1e-12, 1e-12, 1e-19, 2))
        hand = 6.62607015e-34 * 299792458 / 200e-9 / 1e-24
        c.note(f"I_c = {ic:.5e} W/m^2")
        assert abs(ic - hand) <= 1e-3 * hand
        assert abs(ic - 9.93e5) <= 1e-3 * 9.93e5


def _cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    return main(list(argv), out, err), out.getvalue()


def test_6_cli_determinism(criterion, tmp_path):
    with criterion(6, "verify exits 0, pattern byte-identical, JSON round trip lossless", 1.0) as c:
        code, out = _cli("verify", "--noon", "4")
        assert code == 0 and out.count("PASS") == 4

        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        for path in (a, b):
            assert _cli("pattern", "--noon", "4", "--k", "4", "--points", "64", "--out", str(path))[0] == 0
        assert a.read_bytes() == b.read_bytes()

        j = tmp_path / "c.json"
        assert _cli("pattern", "--noon", "3", "--k", "3", "--points", "64", "--out", str(j))[0] == 0
        grid, _ = read_curve_json(j)
        fresh = sweep(noon(3), 3, 64)
        assert np.array_equal(grid.values, fresh.values)
        assert json.loads(j.read_text())["values"] == list(fresh.values)
        c.note("all checks equal bit-for-bit")
