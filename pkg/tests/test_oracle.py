import json
import random
from itertools import product

import pytest

from regpaths import oracle
from regpaths.errors import BudgetExceeded, DomainError
from regpaths.signatures import is_valid_signature
from regpaths.sweep import WiringDiagram, local_sequences
from regpaths.words import classify_language


def test_realizes_signature_examples():
    assert oracle.realizes_signature("xyz")
    assert oracle.realizes_signature("xxx")
    assert not oracle.realizes_signature("y")
    assert not oracle.realizes_signature("xz")


def test_signature_from_events_matches_automaton():
    for events in product((1, 2), repeat=6):
        s = oracle.signature_from_events(events)
        assert oracle.realizes_signature(s)
        assert is_valid_signature(s)


def test_signature_of_tableau():
    W = WiringDiagram(3, (1, 2, 1))
    assert oracle.signature_of_tableau(local_sequences(W)) == oracle.signature_from_events((1, 2, 1))


def test_census_small():
    c = oracle.enumerate_signatures(1)
    assert c.count == 2
    assert c.signatures == ("xyz", "zyx")
    assert oracle.enumerate_signatures(2).count == oracle.M2
    with pytest.raises(DomainError):
        oracle.enumerate_signatures(0)


def test_census_budget():
    with pytest.raises(BudgetExceeded):
        oracle.enumerate_signatures(3, oracle.EnumerationBudget(max_candidates=50))
    with pytest.raises(DomainError):
        oracle.EnumerationBudget(max_candidates=0)


def test_irreducible_signatures_r1():
    assert oracle.irreducible_signatures(1) == ["xyz", "zyx"]


def test_wiring_enumeration():
    Ws = list(oracle.enumerate_wiring_diagrams(3, 1))
    assert sorted(W.events for W in Ws) == [(1, 2, 1), (2, 1, 2)]
    for W in oracle.enumerate_wiring_diagrams(4, 2):
        c = W.pair_counts()
        assert len(c) == 6 and all(1 <= v <= 2 for v in c.values())
    with pytest.raises(BudgetExceeded):
        list(oracle.enumerate_wiring_diagrams(9, 1))
    with pytest.raises(BudgetExceeded):
        list(oracle.enumerate_wiring_diagrams(4, 2, oracle.EnumerationBudget(max_candidates=10)))
    with pytest.raises(DomainError):
        list(oracle.enumerate_wiring_diagrams(1, 1))


def test_enumeration_is_deterministic():
    a = [W.events for W in oracle.enumerate_wiring_diagrams(4, 1)]
    b = [W.events for W in oracle.enumerate_wiring_diagrams(4, 1)]
    assert a == b and len(a) == len(set(a))


def test_bstar_enumeration():
    ws = list(oracle.enumerate_bstar_words(6))
    assert ws[0] == "" and len(ws) == len(set(ws))
    assert all(classify_language(w).in_bstar for w in ws)
    # count brute force on {a,b,c,d}^L for L <= 4
    brute = sum(
        1 for L in range(0, 5) for t in product("abcd", repeat=L)
        if classify_language("".join(t)).in_bstar
    )
    assert brute == len(list(oracle.enumerate_bstar_words(4)))


def test_grammar_words_are_regular_inputs():
    rng = random.Random(1)
    for _ in range(50):
        w = oracle.sample_grammar(rng, max_r=4, max_factors=2)
        assert classify_language(w).kind == "W"


def test_report_serialization():
    r = oracle.verify_ck3()
    d = r.to_json()
    assert "seconds" not in d and d["passed"]
    assert "seconds" in r.to_json(deterministic=False)
    assert json.dumps(d, sort_keys=True) == json.dumps(oracle.verify_ck3().to_json(), sort_keys=True)
    assert str(r).startswith("PASS ck3")


def test_fast_suites_pass():
    for name in ("signatures", "census", "extendability", "six-tangent", "ck3"):
        (rep,) = oracle.run_suites([name])
        assert rep.passed, rep


def test_seeded_suites_are_reproducible():
    a = oracle.verify_geometric_equivalence(3, 2, mutations=40, seed=5).to_json()
    b = oracle.verify_geometric_equivalence(3, 2, mutations=40, seed=5).to_json()
    assert a == b and a["passed"]
    a = oracle.verify_envelope_theorems(2, 6, samples=50, seed=3).to_json()
    assert a == oracle.verify_envelope_theorems(2, 6, samples=50, seed=3).to_json()
    assert a["passed"]
