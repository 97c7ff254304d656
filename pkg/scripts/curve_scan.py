"""Scan Calabi-Yau hypersurfaces in weighted P^4 whose general member is
singular exactly along transverse-A1 curves, and list genus and h^{2,1}.

Weights are sorted, well formed and bounded by --max-weight.
"""
import argparse
import warnings
from itertools import combinations_with_replacement

from wpscheck.core import HypersurfaceFamily, WeightSystem, graded_dim
from wpscheck.errors import UnsupportedSingularityError
from wpscheck.hodge import h21_resolution, moduli_count
from wpscheck.strata import resolution_picard_rank, singular_curves


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-weight", type=int, default=7)
    args = parser.parse_args()
    warnings.simplefilter("ignore")
    for w in combinations_with_replacement(range(1, args.max_weight + 1), 5):
        ws = WeightSystem(w)
        d = sum(w)
        if not ws.well_formed or graded_dim(w, d) == 0:
            continue
        fam = HypersurfaceFamily(ws, d)
        try:
            rank = resolution_picard_rank(fam)
        except UnsupportedSingularityError:
            continue
        curves = singular_curves(fam)
        if not curves:
            continue
        genera = [c.genus for c in curves]
        print(f"X_{d:<3} {str(w):<18} genera {genera}  moduli {moduli_count(fam).moduli:>4}  "
              f"h11 {rank}  h21 {h21_resolution(fam)}")


if __name__ == "__main__":
    main()
