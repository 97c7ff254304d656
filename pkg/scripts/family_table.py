"""Print the numerical invariants of the built-in families side by side."""
import argparse

from wpscheck.report import PRESETS, analyze


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seeds", type=int, default=5, help="members sampled for the stabilizer column")
    args = parser.parse_args()
    header = f"{'family':<28}{'g':>4}{'flops':>7}{'S_d':>6}{'aut':>5}{'mod':>6}{'h11':>5}{'h21':>5}{'e':>7}{'e(chern)':>10}{'nef':>6}"
    print(header)
    print("-" * len(header))
    for name, (w, d) in PRESETS.items():
        rep = analyze(w, d, seeds=range(args.seeds))
        g = sum(c["genus"] for c in rep.singular_curves)
        flops = sum(c["flop_count"] or 0 for c in rep.singular_curves)
        block = rep.intersection or {}
        e_chern = block.get("euler_number", "-")
        nef = block.get("nef_criterion", {}).get("holds", "-")
        label = f"{name} X_{d}{tuple(w)}"
        print(f"{label:<28}{g:>4}{flops:>7}{rep.dim_Sd:>6}{rep.aut_dim:>5}{rep.moduli:>6}"
              f"{rep.h11_Y:>5}{rep.h21_Y:>5}{rep.euler_expected:>7}{e_chern!s:>10}{nef!s:>6}")


if __name__ == "__main__":
    main()
