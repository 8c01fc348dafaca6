"""Print the Khovanov table of the negative and positive Hopf diagrams."""
import argparse

from khgraph.corpus import HOPF_NEG
from khgraph.khovanov import khovanov_homology
from khgraph.linkdiag import crossing_signs, mirror


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--format", choices=("table", "csv"), default="table")
    args = ap.parse_args()
    for name, d in (("negative", HOPF_NEG), ("positive", mirror(HOPF_NEG))):
        s = crossing_signs(d)
        t = khovanov_homology(d)
        print(f"# {name} Hopf link: n+={s.n_plus} n-={s.n_minus}")
        print(t.to_csv() if args.format == "csv" else t.to_grid(), end="")


if __name__ == "__main__":
    main()
