import xml.etree.ElementTree as ET

import pytest

from regpaths.errors import DomainError
from regpaths.oracle import enumerate_wiring_diagrams, harvest_tableaux, irreducible_signatures, six_tangent_word
from regpaths.signatures import associated_word, is_extendable, irreducible_factorization
from regpaths.svg import render_svg
from regpaths.sweep import (
    WiringDiagram,
    diagram_envelopes,
    envelopes,
    has_valid_matching,
    is_geometric,
    is_geometric_by_triples,
    local_sequences,
    subsystem_envelope_scan,
)
from regpaths.tableaux import Tableau, empty_tableau, phi_tableau
from regpaths.words import expand

EXAMPLE_2_2 = Tableau((1, 2, 3, 4), [(2, 3, 2, 4, 3), (1, 3, 1, 4), (1, 2, 4, 1), (2, 1, 3)])
WALKTHROUGH = Tableau((1, 2, 3), [(2, 3, 3, 2), (1, 1, 3, 3), (1, 1, 2, 2)])
SPECIAL = expand("(a^3b^3)(ba)(ab)(cd)(dc)(c^3d^3)")


def test_is_geometric_examples():
    r = is_geometric(EXAMPLE_2_2)
    assert r and local_sequences(r.diagram) == EXAMPLE_2_2
    r = is_geometric(WALKTHROUGH)
    assert r.diagram.snapshots == [
        (1, 2, 3), (2, 1, 3), (2, 3, 1), (2, 1, 3), (1, 2, 3), (1, 3, 2), (1, 2, 3)]
    assert not is_geometric(phi_tableau(SPECIAL, 4))


def test_malformed_tableau_rejected():
    bad = Tableau((1, 2), [(2,), (1,)])
    object.__setattr__(bad, "rows", ((1,), (1,)))
    with pytest.raises(DomainError):
        is_geometric(bad)


def test_unequal_mutual_counts_stall():
    T = Tableau((1, 2), [(2, 2), (1,)])
    assert not is_geometric(T)


def test_matching_examples():
    r = has_valid_matching(phi_tableau(SPECIAL, 4))
    assert not r and r.steps > 0
    assert has_valid_matching(EXAMPLE_2_2)
    assert has_valid_matching(empty_tableau((1, 2, 3)))


def test_local_sequences_examples():
    snaps = [(1, 2, 3), (2, 1, 3), (2, 3, 1), (2, 1, 3), (1, 2, 3), (1, 3, 2), (1, 2, 3)]
    events = [next(h for h in (1, 2) if a[h - 1] != b[h - 1]) for a, b in zip(snaps, snaps[1:])]
    W = WiringDiagram(3, events)
    assert W.snapshots == snaps
    assert local_sequences(W) == WALKTHROUGH
    assert local_sequences(WiringDiagram(3, ())) == empty_tableau((1, 2, 3))


def test_envelope_examples():
    e = envelopes(phi_tableau("(ab)(cd)", 4))
    assert e.upper == {1, 4} and e.lower_convex
    e = envelopes(phi_tableau("(a^2b^2)(cd)(dc)", 4))
    assert e.upper_convex and e.lower == {1, 2}
    e = envelopes(phi_tableau("(a^2b^2)(ba)(ab)(cd)(dc)(c^2d^2)", 4))
    assert e.upper_convex and e.lower_convex


def test_envelope_of_four_crossing_concatenation():
    s = "xyzzzxyyx"
    w = "".join(associated_word(f) for f in irreducible_factorization(s))
    T = phi_tableau(w, 4)
    e = envelopes(T)
    assert not e.upper_convex and len(e.upper) == 3
    assert e == diagram_envelopes(is_geometric(T).diagram)


def test_subsystem_scan():
    T = phi_tableau(six_tangent_word(), 6)
    assert all(e.upper_convex for _, e in subsystem_envelope_scan(T, 4))
    assert not any(e.upper_convex for _, e in subsystem_envelope_scan(T, 5))
    whole = subsystem_envelope_scan(T, 6)
    assert len(whole) == 1 and whole[0][1] == envelopes(T)
    with pytest.raises(DomainError):
        subsystem_envelope_scan(T, 7)


def test_svg_examples():
    doc = render_svg(WiringDiagram(3, ()))
    root = ET.fromstring(doc)
    paths = root.findall("{http://www.w3.org/2000/svg}path")
    assert len(paths) == 3
    for p in paths:
        ys = {tok for i, tok in enumerate(p.get("d").replace("M", "").replace("L", "").split()) if i % 2}
        assert len(ys) == 1
    doc = render_svg(is_geometric(WALKTHROUGH).diagram, labels=True)
    assert doc == render_svg(is_geometric(WALKTHROUGH).diagram, labels=True)
    assert len(ET.fromstring(doc).findall("{http://www.w3.org/2000/svg}path")) == 3


def test_svg_segments_are_diagonal_or_level():
    W = is_geometric(phi_tableau("(a^2b^2)(cd)(dc)", 5)).diagram
    root = ET.fromstring(render_svg(W))
    for p in root.findall("{http://www.w3.org/2000/svg}path"):
        nums = [float(t) for t in p.get("d").replace("M", "").replace("L", "").split()]
        pts = list(zip(nums[::2], nums[1::2]))
        for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
            assert abs(y1 - y0) in (0, abs(x1 - x0))


def test_wiring_diagram_validation():
    with pytest.raises(DomainError):
        WiringDiagram(3, (3,))
    W = WiringDiagram(3, (1, 2))
    assert WiringDiagram.from_json(W.to_json()) == W


# -- corpus properties -------------------------------------------------------

CORPUS = {}
for n in (3, 4):
    CORPUS.update(harvest_tableaux(n, 2))


def test_round_trip_and_triples_on_corpus():
    for T, W in CORPUS.items():
        r = is_geometric(T)
        assert r and local_sequences(r.diagram) == T
        assert is_geometric_by_triples(T)
        assert envelopes(T) == diagram_envelopes(r.diagram)
        assert envelopes(T) == diagram_envelopes(W)


def test_sweep_is_deterministic():
    T = phi_tableau(six_tangent_word(), 6)
    assert is_geometric(T).diagram == is_geometric(T).diagram


def test_factor_split():
    # rows of a concatenated regular tableau split into geometric factors
    words = [associated_word(s) for r in (1, 2) for s in irreducible_signatures(r) if is_extendable(s)]
    for w1 in words:
        for w2 in words:
            for n in (4, 5):
                T = phi_tableau(w1 + w2, n)
                assert is_geometric(T)
                assert is_geometric(phi_tableau(w1, n)) and is_geometric(phi_tableau(w2, n))


def test_enumeration_counts():
    assert len(list(enumerate_wiring_diagrams(3, 1))) == 2
    assert list(enumerate_wiring_diagrams(3, 0)) == []
