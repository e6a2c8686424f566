"""Tail energy versus radius for direct and composite banks.

Prints one table per bank; direct even factors show the slow decay of their
last band, composites of odd or classical two-band banks do not.

    python3 scripts/decay_study.py --factors 2 3 4 5 6 --radii 50 100 200 400
"""

import argparse

from meyerbank import compose_banks, synthesize_bank, verify_bank
from meyerbank.synthesis import tail_energy_beyond


def study(bank, radii):
    rep = verify_bank(bank)
    print(f"{bank.provenance}  (unitarity defect {rep.max_unitarity_defect:.2e})")
    print("  band  " + "".join(f"{'|n|>' + str(r):>12}" for r in radii) + f"{'length':>10}")
    for f in bank.filters:
        tails = "".join(f"{tail_energy_beyond(f, r):>12.2e}" for r in radii)
        print(f"  {bank.band_label(f.band):>4}  {tails}{len(f):>10}")
    print()


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--factors", type=int, nargs="+", default=[2, 3, 4, 5, 6])
    p.add_argument("--radii", type=int, nargs="+", default=[50, 100, 200, 400])
    p.add_argument("--samples", type=int, default=8192)
    args = p.parse_args()

    direct = {n: synthesize_bank(n, args.samples) for n in args.factors}
    for bank in direct.values():
        study(bank, args.radii)
    if 4 in direct:
        study(synthesize_bank(2, args.samples, classical2=False), args.radii)
    base = {n: direct.get(n) or synthesize_bank(n, args.samples) for n in (2, 3)}
    for outer, inner in ((2, 2), (3, 2), (2, 3)):
        study(compose_banks(base[outer], base[inner]), args.radii)


if __name__ == "__main__":
    main()
