"""Cross-checks against brute-force enumeration.

Each report compares a fast decision procedure with an independent search:
signature rules against a permutation automaton, the sweep against wiring
diagrams enumerated depth first, and the census constants.
"""

from regpaths import oracle

print("M_1 signatures:", oracle.enumerate_signatures(1).signatures)
print("M_2 =", oracle.enumerate_signatures(2).count)
print("wiring diagrams on 3 paths, 1 crossing each:",
      [W.events for W in oracle.enumerate_wiring_diagrams(3, 1)])

for rep in oracle.run_suites(["signatures", "census", "extendability", "geometric", "ck3"], seed=0):
    print(rep)
