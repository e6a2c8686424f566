"""Round-trip error of one and several analysis levels on random signals.

    python3 scripts/reconstruction_study.py --trials 20
"""

import argparse

import numpy as np

from meyerbank import compose_banks, decompose, multilevel, multilevel_reconstruct, reconstruct, synthesize_bank


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()
    rng = np.random.default_rng(args.seed)

    b2, b3 = synthesize_bank(2), synthesize_bank(3)
    cases = [
        ("N=2", b2, 512, 4),
        ("N=3", b3, 729, 4),
        ("N=5", synthesize_bank(5), 625, 3),
        ("6=3x2", compose_banks(b3, b2), 216, 2),
    ]
    print(f"{'bank':>8} {'L':>5} {'one level':>12} {'levels':>7} {'multilevel':>12}")
    for name, bank, L, J in cases:
        one, many = [], []
        for _ in range(args.trials):
            x = rng.normal(size=L) + 1j * rng.normal(size=L)
            one.append(np.linalg.norm(reconstruct(decompose(x, bank), bank) - x) / np.linalg.norm(x))
            y = multilevel_reconstruct(multilevel(x, bank, J), bank)
            many.append(np.linalg.norm(y - x) / np.linalg.norm(x))
        print(f"{name:>8} {L:>5} {max(one):>12.2e} {J:>7} {max(many):>12.2e}")


if __name__ == "__main__":
    main()
