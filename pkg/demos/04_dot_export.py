#!/usr/bin/env python3
"""Write Graphviz files for the worked example's graph and folded tree.

Render with:  neato -Tpng graph.gv -o graph.png
              dot   -Tpng tree.gv  -o tree.png
"""

import sys

from cyclefactor import graph_of, graph_to_dot, mnr_to_dot, phi_labeled
from cyclefactor.worked_example import factorization

outdir = sys.argv[1] if len(sys.argv) > 1 else "."

g = graph_of(factorization())
path = f"{outdir}/graph.gv"
with open(path, "w") as fh:
    fh.write(graph_to_dot(g))
print(f"wrote {path}: circle vertices pinned on the base circle, factor vertices free")

lm = phi_labeled(g)
path = f"{outdir}/tree.gv"
with open(path, "w") as fh:
    fh.write(mnr_to_dot(lm.mnr, dict(lm.labels)))
print(f"wrote {path}: one ported box per vertex, edges into the selected port")
