"""Write the two composite-band figures (SVG plus CSV sidecar) to a directory.

    python3 scripts/reproduce_figures.py --out figures/
"""

import argparse
from pathlib import Path

from meyerbank.plotting import preset, write_plot


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out", default="figures")
    p.add_argument("--samples", type=int, default=1201)
    args = p.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name in ("fig1", "fig2"):
        svg = out / f"{name}.svg"
        csv = write_plot(preset(name, args.samples), svg)
        print(f"{svg}  {csv}")


if __name__ == "__main__":
    main()
