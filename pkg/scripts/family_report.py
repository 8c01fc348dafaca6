"""Show the Kauffman family and the summed table for the bundled spatial graphs."""
import argparse

from khgraph import corpus
from khgraph.khovanov import graded_euler
from khgraph.laurent import render_laurent
from khgraph.spatialgraph import kauffman_family

GRAPHS = {
    "theta": corpus.THETA,
    "handcuff": corpus.HANDCUFF,
    "handcuff_hopf": corpus.HANDCUFF_HOPF,
    "trefoil_loop": corpus.TREFOIL_LOOP,
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("graphs", nargs="*", default=sorted(GRAPHS), help=f"any of {', '.join(sorted(GRAPHS))}")
    ap.add_argument("--multiset", action="store_true")
    args = ap.parse_args()
    unknown = sorted(set(args.graphs) - set(GRAPHS))
    if unknown:
        ap.error(f"unknown graph(s): {', '.join(unknown)}")
    for name in args.graphs:
        fam = kauffman_family(GRAPHS[name], dedup_mode="multiset" if args.multiset else "set")
        total = fam.total()
        print(f"== {name}: {len(fam.members)} members, euler {render_laurent(graded_euler(total))}")
        for m in fam.members:
            print(f"  {m.diagram.n_components} component(s): {m.table.to_csv().strip().replace(chr(10), ' ')}")
        print(total.to_grid(), end="")


if __name__ == "__main__":
    main()
