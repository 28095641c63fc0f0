"""From a 3-path signature to its word.

A signature records which pair of three paths crosses at each event.  The
script checks validity, splits into irreducible factors, builds the
associated word and decides extendability with its certificate.
"""

from regpaths.signatures import (
    associated_word,
    check_extendable,
    classify,
    irreducible_factorization,
    is_valid_signature,
    signature_to_tableau3,
)
from regpaths.words import caret, expand, factor_word

s = expand("xy^2x^3z^3y^2z")
print("signature:", caret(s), "valid:", bool(is_valid_signature(s)))
print(signature_to_tableau3(s).render())

print("factors:", irreducible_factorization(s))
w = associated_word(s)
print("associated word:", "".join(str(b) for b in factor_word(w)))

r = check_extendable(s)
c = r.certificate
print("extendable:", bool(r), f"via {c.form} with p={c.p}, q={c.q}")
print("parts:", c.parts(s))
print("class:", classify(s))

bad = expand("xy^2x^4yz^4y^2z")
r = check_extendable(bad)
print(caret(bad), "extendable:", bool(r), "-", r.reason)

print("invalid example:", is_valid_signature("xz"))
