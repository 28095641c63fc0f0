"""A 6-path system whose 5-path subsystems all have non-convex upper
envelopes, while every 4-path subsystem is convex.  Writes an SVG drawing
next to this script.
"""

import os

from regpaths.oracle import SIX_TANGENT_SIGNATURE, six_tangent_word
from regpaths.signatures import irreducible_factorization
from regpaths.svg import render_svg
from regpaths.sweep import envelopes, is_geometric, subsystem_envelope_scan
from regpaths.tableaux import phi_tableau

s = SIX_TANGENT_SIGNATURE
print("signature factors:", irreducible_factorization(s))
T = phi_tableau(six_tangent_word(s), 6)
res = is_geometric(T)
print("geometric:", bool(res), "| events:", len(res.diagram.events))
print("pair crossings:", sorted(set(res.diagram.pair_counts().values())))
print("upper envelope:", sorted(envelopes(T).upper))

for m in (4, 5):
    scan = subsystem_envelope_scan(T, m)
    convex = sum(e.upper_convex for _, e in scan)
    print(f"{m}-subsets: {len(scan)} total, {convex} with convex upper envelope")

out = os.path.join(os.path.dirname(os.path.abspath(__file__)), "six_paths.svg")
with open(out, "w", encoding="utf-8") as fh:
    fh.write(render_svg(res.diagram, labels=True))
print("wrote", out)
