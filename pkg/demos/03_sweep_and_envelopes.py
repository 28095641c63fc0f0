"""Regular tableaux, the sweep, and envelopes.

Builds phi_n of an extendable word for growing n, runs the sweep to get a
wiring diagram, and compares the measured upper envelope with the one
predicted from the signature alone.
"""

from regpaths.signatures import associated_word, predicted_upper_envelope
from regpaths.sweep import envelopes, is_geometric
from regpaths.tableaux import phi_tableau, word_of_regular_tableau

s = "xyz"
w = associated_word(s)
for n in range(4, 8):
    T = phi_tableau(w, n)
    res = is_geometric(T)
    env = envelopes(T)
    print(f"n={n}: geometric={bool(res)} upper={sorted(env.upper)} "
          f"predicted={sorted(predicted_upper_envelope(s, n))}")

T = phi_tableau(w, 4)
print(T.render())
print("recovered word:", word_of_regular_tableau(T))
print("snapshots:")
for p in is_geometric(T).diagram.snapshots:
    print("  ", p)

# a non-extendable word stalls
T = phi_tableau("(a^3b^3)(ba)(ab)(cd)(dc)(c^3d^3)", 4)
res = is_geometric(T)
print("non-extendable word geometric:", bool(res), "after", res.steps, "steps")
print(res.residual.render())
