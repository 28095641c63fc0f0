"""Realizability of tableaux by systems of paths, and envelopes.

A system of paths is drawn as a wiring diagram: heights 1..n (1 at the
bottom) and a list of events, event ``h`` swapping the paths at heights
``h`` and ``h+1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import DomainError
from .tableaux import Tableau, restrict_tableau


@dataclass(frozen=True)
class WiringDiagram:
    n: int
    events: tuple
    labels: tuple = None

    def __post_init__(self):
        events = tuple(int(h) for h in self.events)
        labels = tuple(range(1, self.n + 1)) if self.labels is None else tuple(self.labels)
        if len(labels) != self.n:
            raise DomainError("labels must have n entries")
        for h in events:
            if not 1 <= h < self.n:
                raise DomainError(f"event height {h} outside [1, {self.n - 1}]")
        object.__setattr__(self, "events", events)
        object.__setattr__(self, "labels", labels)

    @property
    def snapshots(self) -> list:
        """pi_0, ..., pi_m as tuples listing labels bottom to top."""
        pi = list(self.labels)
        out = [tuple(pi)]
        for h in self.events:
            pi[h - 1], pi[h] = pi[h], pi[h - 1]
            out.append(tuple(pi))
        return out

    def crossings(self) -> list:
        """Label pairs (lower-before, upper-before) of each event."""
        pi = list(self.labels)
        out = []
        for h in self.events:
            out.append((pi[h - 1], pi[h]))
            pi[h - 1], pi[h] = pi[h], pi[h - 1]
        return out

    def pair_counts(self) -> dict:
        c = {}
        for u, v in self.crossings():
            key = (min(u, v), max(u, v))
            c[key] = c.get(key, 0) + 1
        return c

    def to_json(self) -> dict:
        d = {"n": self.n, "events": list(self.events)}
        if self.labels != tuple(range(1, self.n + 1)):
            d["labels"] = list(self.labels)
        return d

    @classmethod
    def from_json(cls, obj):
        return cls(obj["n"], obj["events"], obj.get("labels"))


def local_sequences(W: WiringDiagram) -> Tableau:
    rows = {g: [] for g in W.labels}
    for u, v in W.crossings():
        rows[u].append(v)
        rows[v].append(u)
    ground = tuple(sorted(W.labels))
    return Tableau(ground, [rows[g] for g in ground], trusted=True)


# -- Algorithm 4.1 and the relaxed matching ----------------------------------

@dataclass(frozen=True)
class GeometricResult:
    geometric: bool
    diagram: WiringDiagram | None = None
    steps: int = 0
    residual: Tableau | None = None

    def __bool__(self):
        return self.geometric


def _check_rows(T: Tableau):
    labels = set(T.ground)
    for g, r in zip(T.ground, T.rows):
        for v in r:
            if v == g or v not in labels:
                raise DomainError(f"malformed row for {g}: contains {v}")


def _residual(T, ptr):
    return Tableau(T.ground, [r[p:] for r, p in zip(T.rows, ptr)], trusted=True)


def is_geometric(T: Tableau) -> GeometricResult:
    """Sweep the tableau left to right.

    At each step take the lexicographically smallest pair j < k that is
    adjacent in the current order and whose rows both start with the
    other; swap them.  Geometric iff every row gets used up.
    """
    _check_rows(T)
    n = T.n
    idx = {g: i for i, g in enumerate(T.ground)}
    rows = T.rows
    ptr = [0] * n
    pi = list(range(n))  # indices into ground, bottom to top
    events = []

    def head(i):
        r = rows[i]
        return idx[r[ptr[i]]] if ptr[i] < len(r) else None

    while True:
        best = None
        for h in range(n - 1):
            u, v = pi[h], pi[h + 1]
            if head(u) == v and head(v) == u:
                pair = (min(u, v), max(u, v))
                if best is None or pair < best[0]:
                    best = (pair, h)
        if best is None:
            break
        h = best[1]
        u, v = pi[h], pi[h + 1]
        ptr[u] += 1
        ptr[v] += 1
        pi[h], pi[h + 1] = v, u
        events.append(h + 1)
    done = all(p == len(r) for p, r in zip(ptr, rows))
    if done:
        return GeometricResult(True, WiringDiagram(n, events, T.ground), len(events))
    return GeometricResult(False, None, len(events), _residual(T, ptr))


@dataclass(frozen=True)
class MatchingResult:
    matched: bool
    steps: int
    residual: Tableau

    def __bool__(self):
        return self.matched


def has_valid_matching(T: Tableau) -> MatchingResult:
    """Same loop as :func:`is_geometric` without the adjacency requirement."""
    _check_rows(T)
    n = T.n
    idx = {g: i for i, g in enumerate(T.ground)}
    rows = [[idx[v] for v in r] for r in T.rows]
    ptr = [0] * n
    steps = 0

    def head(i):
        return rows[i][ptr[i]] if ptr[i] < len(rows[i]) else None

    while True:
        pick = None
        for j in range(n):
            k = head(j)
            if k is not None and k > j and head(k) == j:
                pick = (j, k)
                break
        if pick is None:
            break
        j, k = pick
        ptr[j] += 1
        ptr[k] += 1
        steps += 1
    done = all(p == len(r) for p, r in zip(ptr, rows))
    return MatchingResult(done, steps, _residual(T, ptr))


# -- envelopes ---------------------------------------------------------------

@dataclass(frozen=True)
class EnvelopeReport:
    upper: frozenset
    lower: frozenset
    labels: frozenset

    @property
    def upper_convex(self):
        return self.upper == self.labels

    @property
    def lower_convex(self):
        return self.lower == self.labels

    def to_json(self) -> dict:
        return {
            "upper": sorted(self.upper),
            "lower": sorted(self.lower),
            "upper_convex": self.upper_convex,
            "lower_convex": self.lower_convex,
        }


def _reaches(row, label, ground, want_above_odd):
    # some prefix has labels on one side all odd and on the other all even
    parity = {g: 0 for g in ground if g != label}
    odd_side = {g for g in parity if (g > label) == want_above_odd}
    bad = len(odd_side)
    if bad == 0:
        return True
    for v in row:
        parity[v] ^= 1
        if v in odd_side:
            bad += -1 if parity[v] else 1
        else:
            bad += 1 if parity[v] else -1
        if bad == 0:
            return True
    return False


def envelopes(T: Tableau) -> EnvelopeReport:
    """Envelopes from local sequences by the prefix parity rule.

    Path i is on the upper envelope iff some prefix of its row contains
    every label above i an odd number of times and every label below i an
    even number of times; the lower envelope swaps the roles.
    """
    upper = set()
    lower = set()
    for g, r in zip(T.ground, T.rows):
        if _reaches(r, g, T.ground, True):
            upper.add(g)
        if _reaches(r, g, T.ground, False):
            lower.add(g)
    return EnvelopeReport(frozenset(upper), frozenset(lower), frozenset(T.ground))


def diagram_envelopes(W: WiringDiagram) -> EnvelopeReport:
    """Envelopes read off the drawing: top and bottom of every snapshot."""
    snaps = W.snapshots
    upper = frozenset(s[-1] for s in snaps)
    lower = frozenset(s[0] for s in snaps)
    return EnvelopeReport(upper, lower, frozenset(W.labels))


def subsystem_envelope_scan(T: Tableau, m: int) -> list:
    """[(subset, EnvelopeReport)] over all m-subsets in lexicographic order."""
    if not 3 <= m <= T.n:
        raise DomainError(f"need 3 <= m <= {T.n}")
    return [(X, envelopes(restrict_tableau(T, X))) for X in combinations(T.ground, m)]


def is_geometric_by_triples(T: Tableau) -> bool:
    """Valid matching plus geometric restriction to every 3-subset."""
    if not has_valid_matching(T):
        return False
    if T.n < 3:
        return bool(is_geometric(T))
    return all(is_geometric(restrict_tableau(T, X)) for X in combinations(T.ground, 3))
