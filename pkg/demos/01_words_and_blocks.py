"""Balanced blocks and the language W.

Walks through parsing a caret-notation word, factoring it into balanced
blocks, and testing the well-balanced condition that decides geometricity.
"""

from regpaths.words import caret, classify_language, expand, factor_blocks, is_well_balanced, restrict

w = expand("(a^2b^2)(ba)(ab)(cd)(dc)(c^2d^2)")
print("word:", w, "=", caret(w))

# the {a,b} part factors greedily from the left
f = factor_blocks(restrict(w, "ab"), ("a", "b"))
print("ab blocks:", f, "sizes", f.sizes, "orientations", f.orientations)

rep = classify_language(w)
print("language:", rep.kind, "| every block odd:", rep.in_U)

wb = is_well_balanced(w)
print("well-balanced:", bool(wb), "witness prefixes end at", wb.even_odd, "and", wb.odd_even)

# a word that fails: the first block is odd, so no even/odd prefix exists yet
print("abcd well-balanced:", bool(is_well_balanced("abcd")))

# an unbalanced word reports where the greedy factoring broke
rep = classify_language("abcdc")
print("abcdc:", rep.kind, "at position", rep.position)
