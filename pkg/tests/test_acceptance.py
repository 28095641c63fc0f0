"""Acceptance gate: one PASS/FAIL line per criterion.

Run directly (``python3 tests/test_acceptance.py``) or through pytest; the
lines are also repeated in the pytest terminal summary.
"""

import time

from regpaths import oracle
from regpaths.signatures import (
    associated_word,
    check_extendable,
    classify,
    condition2_factorization,
    irreducible_factorization,
    predicted_upper_envelope,
)
from regpaths.sweep import envelopes, is_geometric, subsystem_envelope_scan
from regpaths.tableaux import phi_sequence, phi_tableau
from regpaths.words import expand, exponent_sequence, factor_blocks, normalize

RESULTS = []


def _record(number, title, ok, detail, seconds, limit):
    in_time = seconds < limit
    status = "PASS" if ok and in_time else "FAIL"
    line = f"{status} criterion {number}: {title} ({detail}; {seconds:.2f}s of {limit}s)"
    RESULTS.append(line)
    print(line)
    return ok and in_time


def _worked_examples():
    T = phi_tableau("(ab)(d^2c^2)(ba)", 4)
    walk = is_geometric(phi_tableau.__globals__["Tableau"]((1, 2, 3), [(2, 3, 3, 2), (1, 1, 3, 3), (1, 1, 2, 2)]))
    checks = {
        "normalize": normalize((4, 2, 6, 6, 7)) == (2, 1, 3, 3, 4),
        "block sizes": factor_blocks(expand("(a^2b^2)(ba)(ab)")).sizes == (2, 1, 1),
        "exponent sequence": exponent_sequence(expand("a^2bac^3a^5"), "a") == (2, 1, 5),
        "phi_3 sequence": phi_sequence("(ab)(a^2b^2)(ba)", 3) == (1, 2, 3, 1, 1, 2, 2, 3, 3, 3, 2, 1),
        "phi_4 tableau": T.rows == ((4, 4, 3, 3, 2, 2), (1, 4, 4, 3, 3, 1), (1, 2, 4, 4, 2, 1), (1, 2, 3, 3, 2, 1)),
        "sweep walkthrough": bool(walk) and walk.diagram.snapshots == [
            (1, 2, 3), (2, 1, 3), (2, 3, 1), (2, 1, 3), (1, 2, 3), (1, 3, 2), (1, 2, 3)],
        "associated word 1": associated_word("xy^4x^3z^4x^2zy^2z") == expand("(a^4b^4)(cd)(d^3c^3)(ba)(ab)(c^2d^2)"),
        "associated word 2": associated_word("xy^2x^2yzx^4z^3y^4z^3") == expand("(a^3b^3)(cd)(ba)(a^3b^3)(dc)(cd)(c^4d^4)"),
        "associated word 3": associated_word("xy^2x^4yz^4y^2z") == expand("(a^3b^3)(ba)(ab)(cd)(dc)(c^3d^3)"),
        "non-extendable": not check_extendable("xy^2x^4yz^4y^2z")
        and condition2_factorization("xy^2x^4yz^4y^2z") is None
        and not is_geometric(phi_tableau(associated_word("xy^2x^4yz^4y^2z"), 4)),
        "extendable example": bool(check_extendable("xy^2x^3z^2xyz^2y^2z")),
        "certificate xyz": (lambda c: (c.p, c.q, c.splits) == (1, 0, (2, 3)))(condition2_factorization("xyz")),
        "odd envelope": (lambda e: e.upper == {1, 4} and e.lower_convex)(envelopes(phi_tableau("(ab)(cd)", 4))),
        "even envelope": (lambda e: e.upper_convex and e.lower == {1, 2})(envelopes(phi_tableau("(a^2b^2)(cd)(dc)", 4))),
        "mixed envelope": (lambda e: e.upper_convex and e.lower_convex)(
            envelopes(phi_tableau("(a^2b^2)(ba)(ab)(cd)(dc)(c^2d^2)", 4))),
        "classes": [classify(s).kind for s in ("xyz", "xy^2xz^2", "xy^2x^3z^3y^2z")] == ["odd", "even", "mixed"],
    }
    return checks


def test_criterion_1_worked_examples():
    t0 = time.perf_counter()
    checks = _worked_examples()
    dt = time.perf_counter() - t0
    failed = [k for k, v in checks.items() if not v]
    detail = f"{len(checks) - len(failed)}/{len(checks)} examples" + (f", failed {failed}" if failed else "")
    assert _record(1, "worked-example fidelity", not failed, detail, dt, 1)


def _suite(number, title, run, limit):
    t0 = time.perf_counter()
    rep = run()
    dt = time.perf_counter() - t0
    detail = ", ".join(f"{k}={v}" for k, v in sorted(rep.counts.items()))
    if rep.counterexample:
        detail += f", counterexample {rep.counterexample}"
    return _record(number, title, rep.passed, detail, dt, limit)


def test_criterion_2_signature_characterization():
    assert _suite(2, "signature rules vs 3-path automaton, length <= 9",
                  lambda: oracle.verify_signature_characterization(9), 10)


def test_criterion_3_extendability():
    assert _suite(3, "extendability vs geometric ground truth, r <= 3",
                  lambda: oracle.verify_extendability(3), 60)


def test_criterion_4_bijection():
    assert _suite(4, "phi_n bijection suite, length <= 14, n in 4..6",
                  lambda: oracle.verify_bijection(14, (4, 5, 6)), 60)


def test_criterion_5_geometric_equivalence():
    assert _suite(5, "sweep and matching vs diagram search, n <= 4, k <= 2, 200 mutations",
                  lambda: oracle.verify_geometric_equivalence(4, 2, 200, seed=7), 120)


def test_criterion_6_envelope_theorems():
    assert _suite(6, "envelope theorems, 1000 grammar samples plus r <= 3, n <= 8",
                  lambda: oracle.verify_envelope_theorems(3, 8, 1000, seed=7), 120)


def test_criterion_7_six_tangent_construction():
    def run():
        rep = oracle.verify_six_tangent_construction(6)
        if rep.passed:
            s = oracle.SIX_TANGENT_SIGNATURE
            T = phi_tableau(oracle.six_tangent_word(s), 6)
            ok = (
                irreducible_factorization(s) == ("xyz", "xyyxzz", "zyx", "zyyzxx")
                and envelopes(T).upper == {1, 2, 5, 6}
                and predicted_upper_envelope(s, 6) == {1, 2, 5, 6}
                and len(subsystem_envelope_scan(T, 4)) == 15
            )
            rep.passed = ok
        return rep

    assert _suite(7, "six-crossing construction on 6 paths", run, 30)


def test_criterion_8_small_constants():
    def run():
        rep = oracle.verify_ck3((1, 2))
        census = oracle.enumerate_signatures(1)
        rep.passed = rep.passed and census.count == 2 and set(census.signatures) == {"xyz", "zyx"}
        return rep

    assert _suite(8, "M_1 = 2 and C_k(3) = 3 for k = 1, 2", run, 10)


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
