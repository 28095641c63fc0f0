"""Tableaux on ordered label sets, regularity and the phi_n construction."""

from __future__ import annotations

import json
from functools import lru_cache
from itertools import combinations

from .errors import DomainError, UnbalancedError
from .words import IN_W, classify_language, expand, factor_blocks, factor_word, runs


class Tableau:
    """Ground set of labels plus one row (local sequence) per label.

    ``rows[i]`` belongs to ``ground[i]``; index 0 is the bottom path.
    """

    __slots__ = ("ground", "rows", "_index")

    def __init__(self, ground, rows, trusted=False):
        ground = tuple(int(g) for g in ground)
        rows = tuple(tuple(int(v) for v in r) for r in rows)
        if not trusted:
            if list(ground) != sorted(set(ground)):
                raise DomainError("ground must be strictly increasing")
            if len(rows) != len(ground):
                raise DomainError(f"{len(ground)} labels but {len(rows)} rows")
            labels = set(ground)
            for g, r in zip(ground, rows):
                for v in r:
                    if v == g:
                        raise DomainError(f"row of {g} contains its own label")
                    if v not in labels:
                        raise DomainError(f"row of {g} contains unknown label {v}")
        self.ground = ground
        self.rows = rows
        self._index = None

    @classmethod
    def _make(cls, ground, rows):
        t = cls.__new__(cls)
        t.ground = ground
        t.rows = rows
        t._index = None
        return t

    @property
    def n(self):
        return len(self.ground)

    def row(self, label):
        if self._index is None:
            self._index = {g: i for i, g in enumerate(self.ground)}
        try:
            return self.rows[self._index[label]]
        except KeyError:
            raise DomainError(f"label {label} not in ground") from None

    def __eq__(self, other):
        return isinstance(other, Tableau) and self.ground == other.ground and self.rows == other.rows

    def __hash__(self):
        return hash((self.ground, self.rows))

    def __repr__(self):
        return f"Tableau({self.ground}, {self.rows})"

    def to_json(self) -> dict:
        return {"ground": list(self.ground), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(obj["ground"], obj["rows"])

    def render(self) -> str:
        """Box rows, bottom path first."""
        width = max([len(str(g)) for g in self.ground] + [1])
        lines = []
        for g, r in zip(self.ground, self.rows):
            cells = "".join(f"[{v:>{width}}]" for v in r)
            lines.append(f"{g:>{width}} | {cells}")
        return "\n".join(lines)

    def normalized(self) -> "Tableau":
        rank = {g: i for i, g in enumerate(self.ground, start=1)}
        ground = tuple(range(1, self.n + 1))
        rows = tuple(tuple(rank[v] for v in r) for r in self.rows)
        return Tableau._make(ground, rows)


def _restrict_row(row, keep):
    return tuple(v for v in row if v in keep)


def restrict_tableau(T: Tableau, X) -> Tableau:
    X = sorted(set(X))
    if len(X) < 2:
        raise DomainError("restriction needs at least two labels")
    missing = set(X) - set(T.ground)
    if missing:
        raise DomainError(f"labels {sorted(missing)} not in ground")
    keep = set(X)
    return Tableau._make(tuple(X), tuple(_restrict_row(T.row(g), keep) for g in X))


def order_equivalent(T: Tableau, U: Tableau) -> bool:
    if T.n != U.n:
        return False
    return T.normalized() == U.normalized()


def _triple_key(T, triple):
    # normalized rows of the restriction to a 3-subset
    a, b, c = triple
    rank = {a: 1, b: 2, c: 3}
    key = []
    for g in triple:
        key.append(tuple(rank[v] for v in T.row(g) if v in rank))
    return tuple(key)


@lru_cache(maxsize=4096)
def _triple_tables(ground):
    # bytes.translate tables restricting rows to each 3-subset
    out = []
    for t in combinations(ground, 3):
        table = bytearray(range(256))
        for rank, g in enumerate(t, start=1):
            table[g] = rank
        delete = bytes(g for g in ground if g not in t)
        out.append((tuple(ground.index(g) for g in t), bytes(table), delete))
    return out


def triple_keys(T: Tableau):
    """Normalized restrictions to every 3-subset, in lexicographic order."""
    if T.ground and T.ground[-1] < 256:
        rows = [bytes(r) for r in T.rows]
        for idx, table, delete in _triple_tables(T.ground):
            yield tuple(rows[i].translate(table, delete) for i in idx)
    else:
        for t in combinations(T.ground, 3):
            yield tuple(bytes(r) for r in _triple_key(T, t))


def is_regular(T: Tableau) -> bool:
    """All 3-subset restrictions order equivalent (needs at least 4 labels)."""
    if T.n < 4:
        return False
    keys = triple_keys(T)
    ref = next(keys)
    return all(k == ref for k in keys)


def is_pangrammatic(T: Tableau) -> bool:
    seen = set()
    for r in T.rows:
        seen.update(r)
    return seen == set(T.ground)


# -- phi_n -------------------------------------------------------------------

def phi_sequence(w, n) -> tuple:
    """Image of a balanced {a,b}-word: a^r b^r -> 1^r ... n^r, b^r a^r reversed."""
    if n < 3:
        raise DomainError("n must be at least 3")
    w = expand(w) if isinstance(w, str) else w
    out = []
    for b in factor_blocks(w, ("a", "b")):
        labels = range(1, n + 1) if b.ascending else range(n, 0, -1)
        for v in labels:
            out.extend([v] * b.size)
    return tuple(out)


@lru_cache(maxsize=65536)
def _phi_piece(ab, ascending, size, i, n):
    if ab:
        labels = range(1, i) if ascending else range(i - 1, 0, -1)
    else:
        labels = range(i + 1, n + 1) if ascending else range(n, i, -1)
    return tuple(v for v in labels for _ in range(size))


def _phi_row(blocks, i, n):
    out = ()
    for b in blocks:
        out += _phi_piece(b.pair == ("a", "b"), b.ascending, b.size, i, n)
    return out


def phi_tableau(w, n) -> Tableau:
    """The regular tableau T_n^w of a word in B*(ab,cd)."""
    if n < 3:
        raise DomainError("n must be at least 3")
    w = expand(w) if isinstance(w, str) else w
    blocks = factor_word(w)
    ground = tuple(range(1, n + 1))
    return Tableau._make(ground, tuple(_phi_row(blocks, i, n) for i in ground))


def concat_tableaux(T: Tableau, U: Tableau) -> Tableau:
    if T.ground != U.ground:
        raise DomainError("ground sets differ")
    return Tableau._make(T.ground, tuple(a + b for a, b in zip(T.rows, U.rows)))


def empty_tableau(ground) -> Tableau:
    ground = tuple(ground)
    return Tableau._make(ground, tuple(() for _ in ground))


# -- inverse of phi ----------------------------------------------------------

def word_from_tableau3(U: Tableau) -> str:
    """The word whose phi_3 image is order equivalent to ``U``.

    Row 3 gives the {a,b}-blocks, row 1 the {c,d}-blocks; the 1- and 3-runs
    of row 2 say how to interlace them.
    """
    if U.n != 3:
        raise DomainError("need a tableau on three labels")
    N = U.normalized()
    r1, r2, r3 = N.rows
    try:
        ab = factor_blocks(tuple({1: "a", 2: "b"}[v] for v in r3), ("a", "b")) if r3 else ()
        cd = factor_blocks(tuple({2: "c", 3: "d"}[v] for v in r1), ("c", "d")) if r1 else ()
    except UnbalancedError as e:
        raise DomainError(f"not regular-constructible: {e}") from e
    it = {1: iter(ab), 3: iter(cd)}
    out = []
    for label, length in runs(r2):
        need = length
        while need > 0:
            b = next(it[label], None)
            if b is None:
                raise DomainError("not regular-constructible: rows run out")
            out.extend(b.letters)
            need -= b.size
        if need < 0:
            raise DomainError("not regular-constructible: block straddles a run")
    if next(it[1], None) is not None or next(it[3], None) is not None:
        raise DomainError("not regular-constructible: leftover blocks")
    return "".join(out)


def word_of_regular_tableau(T: Tableau, check=True) -> str:
    """Recover w with phi_n(w) = N(T); verified by recomputing phi_n.

    ``check=False`` skips the regularity test and the final verification,
    for callers that have already established both.
    """
    if not check:
        return word_from_tableau3(restrict_tableau(T, T.ground[:3]))
    if not is_regular(T):
        raise DomainError("tableau is not regular")
    if not is_pangrammatic(T):
        raise DomainError("tableau is not pangrammatic")
    w = word_from_tableau3(restrict_tableau(T, T.ground[:3]))
    if classify_language(w).kind != IN_W or phi_tableau(w, T.n) != T.normalized():
        raise DomainError("not regular-constructible")
    return w
