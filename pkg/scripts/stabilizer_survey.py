"""Histogram of stabilizer dimensions over many seeded members of a family."""
import argparse
from collections import Counter

from wpscheck.autlie import stabilizer_dim
from wpscheck.core import random_member
from wpscheck.report import PRESETS, preset_family


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--preset", choices=sorted(PRESETS), default="x8")
    parser.add_argument("--seeds", type=int, default=100)
    parser.add_argument("--bound", type=int, default=9)
    args = parser.parse_args()
    fam = preset_family(args.preset)
    hist = Counter(stabilizer_dim(random_member(fam, s, args.bound)) for s in range(args.seeds))
    print(f"{fam}: {args.seeds} members, coefficients in [-{args.bound}, {args.bound}]")
    for dim, count in sorted(hist.items()):
        print(f"  stabilizer dim {dim}: {count}")


if __name__ == "__main__":
    main()
