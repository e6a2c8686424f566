"""Acceptance criteria, one test per criterion, each logging a pass/fail line."""

import math
import time

import numpy as np
import pytest

from conftest import random_signal
from meyerbank import (
    DEFAULT_AUX,
    FrequencyDescriptor,
    cascade_decompose,
    compose_banks,
    decompose,
    decompose_modulation,
    eval_H,
    eval_nu,
    eval_phi_hat,
    reconstruct,
    synthesize_bank,
    verify_bank,
)
from meyerbank.cli import main
from meyerbank.meyer import Classical, eval_H_classical_N2, row_inner_product, row_norm_defect
from meyerbank.plotting import read_csv
from meyerbank.synthesis import eval_dtft, tail_energy_beyond


@pytest.fixture
def record(acceptance_log):
    def _record(name, ok, detail):
        acceptance_log.append(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
        print(acceptance_log[-1])
        return ok

    return _record


def test_ac01_nu_symmetry(record):
    t0 = time.perf_counter()
    x = np.random.default_rng(1).uniform(0.0, 1.0, 10_000)
    defect = float(np.max(np.abs(eval_nu(DEFAULT_AUX, x) + eval_nu(DEFAULT_AUX, 1.0 - x) - 1.0)))
    clamps = np.all(eval_nu(DEFAULT_AUX, np.array([-5.0, -1e-12, 0.0])) == 0.0) and np.all(
        eval_nu(DEFAULT_AUX, np.array([1.0, 1.0 + 1e-12, 7.0])) == 1.0
    )
    elapsed = time.perf_counter() - t0
    ok = defect <= 1e-14 and bool(clamps) and elapsed < 1.0
    assert record("AC1 nu symmetry", ok, f"defect {defect:.2e} (<=1e-14), clamps exact {bool(clamps)}, {elapsed:.3f}s (<1s)")


def test_ac02_scaling_identity(record):
    t0 = time.perf_counter()
    w = np.linspace(-3 * math.pi, 3 * math.pi, 4096)
    worst = 0.0
    for N in range(2, 8):
        rhs = eval_H(FrequencyDescriptor(N, 0), w / N) * eval_phi_hat(DEFAULT_AUX, w / N)
        worst = max(worst, float(np.max(np.abs(eval_phi_hat(DEFAULT_AUX, w) - rhs))))
    elapsed = time.perf_counter() - t0
    ok = worst < 1e-13 and elapsed < 5.0
    assert record("AC2 scaling identity N=2..7", ok, f"max defect {worst:.2e} (<1e-13), {elapsed:.3f}s (<5s)")


def test_ac03_analytic_unitarity(record):
    w = np.linspace(-math.pi, math.pi, 4096)
    norm, adjacent = 0.0, 0.0
    for N in (2, 3, 4, 5):
        funcs = [FrequencyDescriptor(N, k) for k in range(N)]
        for f in funcs:
            norm = max(norm, float(np.max(row_norm_defect(f, N, w))))
        for a, b in zip(funcs, funcs[1:]):
            adjacent = max(adjacent, float(np.max(np.abs(row_inner_product(a, b, N, w)))))
    # the classical two-band pair as well
    c0 = lambda v: eval_H_classical_N2(Classical.SCALING, v)  # noqa: E731
    c1 = lambda v: eval_H_classical_N2(Classical.WAVELET, v)  # noqa: E731
    norm = max(norm, float(np.max(row_norm_defect(c0, 2, w))), float(np.max(row_norm_defect(c1, 2, w))))
    adjacent = max(adjacent, float(np.max(np.abs(row_inner_product(c0, c1, 2, w)))))
    ok = norm < 1e-12 and adjacent < 1e-12
    assert record("AC3 analytic unitarity N=2..5", ok, f"row norm {norm:.2e}, adjacent {adjacent:.2e} (<1e-12)")


def test_ac04_numeric_unitarity(record):
    t0 = time.perf_counter()
    b3 = synthesize_bank(3, 8192, 1e-10)
    b2 = synthesize_bank(2, 8192, 1e-10)
    banks = {"N=2": b2, "N=3": b3, "N=5": synthesize_bank(5, 8192, 1e-10), "6=3x2": compose_banks(b3, b2)}
    reports = {k: verify_bank(b, 1024, 1e-6) for k, b in banks.items()}
    elapsed = time.perf_counter() - t0
    ok = all(r.passed for r in reports.values()) and elapsed < 30.0
    detail = ", ".join(f"{k} {r.max_unitarity_defect:.1e}" for k, r in reports.items())
    assert record("AC4 numeric unitarity", ok, f"{detail} (tol 1e-6), {elapsed:.2f}s (<30s)")


def _pr_cases(banks):
    return [("L=729 N=3", banks[3], 729), ("L=512 N=2", banks[2], 512), ("L=216 6=3x2", banks["6"], 216)]


def test_ac05_perfect_reconstruction(banks, rng, record):
    worst = {}
    for name, bank, L in _pr_cases(banks):
        errs = []
        for _ in range(20):
            x = random_signal(rng, L)
            y = reconstruct(decompose(x, bank), bank)
            errs.append(np.linalg.norm(y - x) / np.linalg.norm(x))
        worst[name] = max(errs)
    ok = all(e < 1e-6 for e in worst.values())
    detail = ", ".join(f"{k} {e:.1e}" for k, e in worst.items())
    assert record("AC5 perfect reconstruction", ok, f"max relative error {detail} (<1e-6)")


def test_ac06_modulation_oracle(banks, rng, record):
    worst = 0.0
    for _, bank, L in _pr_cases(banks):
        for _ in range(20):
            x = random_signal(rng, L)
            a, b = decompose(x, bank), decompose_modulation(x, bank)
            worst = max(worst, max(float(np.max(np.abs(p - q))) for p, q in zip(a.bands, b.bands)))
    ok = worst <= 1e-10
    assert record("AC6 time vs modulation-domain analysis", ok, f"max difference {worst:.2e} (<=1e-10)")


def test_ac07_cascade_equals_composite(banks, rng, record):
    worst = 0.0
    for _ in range(10):
        x = random_signal(rng, 216)
        cascade = cascade_decompose(x, banks[2], banks[3])
        single = decompose(x, banks["6"])
        for k in range(2):
            for l in range(3):
                worst = max(worst, float(np.max(np.abs(cascade[k][l] - single[k * 3 + l]))))
    ok = worst <= 1e-8
    assert record("AC7 cascade equals composite", ok, f"max difference {worst:.2e} (<=1e-8)")


def test_ac08_composite_scaling_band(banks, record):
    w = np.linspace(-math.pi, math.pi, 1024, endpoint=False)
    got = eval_dtft(banks["6"][0], w)
    defect = float(np.max(np.abs(got - eval_H(FrequencyDescriptor(6, 0), w))))
    ok = defect <= 1e-8
    assert record("AC8 composite band (0,0) is the factor-6 scaling filter", ok, f"defect {defect:.2e} (<=1e-8)")


# Measured when the suite was built (S=8192, eps=1e-10); the acceptance
# condition itself is the ordering, these guard against silent drift.
MEASURED_TAILS_200 = {"direct4_band3": 3.57e-3, "direct4_band1": 5.16e-14}


def test_ac09_even_factor_decay(banks, record):
    b4, c4 = banks[4], banks["4c"]
    t3 = tail_energy_beyond(b4[3], 200)
    t1 = tail_energy_beyond(b4[1], 200)
    composite = [tail_energy_beyond(f, 200) for f in c4.filters]
    ratio = t3 / max(t1, np.finfo(float).tiny)
    ok = ratio >= 1e2 and max(composite) < 1e-8
    assert record(
        "AC9 even-factor decay",
        ok,
        f"direct N=4 band3/band1 tail ratio {ratio:.1e} (>=1e2); 2x2 max tail {max(composite):.1e} (<1e-8)",
    )
    assert t3 == pytest.approx(MEASURED_TAILS_200["direct4_band3"], rel=0.01)
    assert t1 == pytest.approx(MEASURED_TAILS_200["direct4_band1"], rel=0.5)


def test_ac10_figure_sidecars(tmp_path, record):
    worst = 0.0
    for name, k, use_modulus in (("fig1", 0, False), ("fig2", 1, True)):
        svg = tmp_path / f"{name}.svg"
        assert main(["plot", "--preset", name, "--out", str(svg)]) == 0
        assert svg.stat().st_size > 0
        header, data = read_csv(svg.with_suffix(".csv"))
        w = data[:, 0]
        inner = eval_H_classical_N2(Classical.SCALING if k == 0 else Classical.WAVELET, w)
        for l in range(3):
            assert header[1 + l] == f"H{k}{l}"
            expected = eval_H(FrequencyDescriptor(3, l), 2.0 * w) * inner
            expected = np.abs(expected) if use_modulus else np.real(expected)
            worst = max(worst, float(np.max(np.abs(data[:, 1 + l] - expected))))
    ok = worst <= 1e-12
    assert record("AC10 figure sidecars", ok, f"max deviation from G^l(2w)H^k(w) {worst:.2e} (<=1e-12)")
