"""Words over ordered alphabets and balanced-block languages.

Words are handled either as plain ``str``/``tuple`` sequences or as
:class:`Word` values carrying an explicit alphabet.  Functions that take a
word return the same kind of object they were given.
"""

from __future__ import annotations

import re
from functools import lru_cache
from dataclasses import dataclass
from itertools import groupby
from typing import Iterable, Sequence

from .errors import DomainError, UnbalancedError

XYZ = ("x", "y", "z")
ABCD = ("a", "b", "c", "d")


@dataclass(frozen=True)
class Word:
    letters: tuple
    alphabet: tuple

    def __post_init__(self):
        letters = tuple(self.letters)
        alphabet = tuple(self.alphabet)
        if len(set(alphabet)) != len(alphabet):
            raise DomainError(f"repeated symbol in alphabet {alphabet!r}")
        if list(alphabet) != sorted(alphabet):
            raise DomainError(f"alphabet {alphabet!r} is not sorted")
        stray = set(letters) - set(alphabet)
        if stray:
            raise DomainError(f"letters {sorted(stray)!r} not in alphabet")
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "alphabet", alphabet)

    @classmethod
    def parse(cls, text: str, alphabet: Sequence | None = None) -> "Word":
        letters = tuple(expand(text))
        if alphabet is None:
            alphabet = sorted(set(letters))
        return cls(letters, tuple(alphabet))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __str__(self):
        return "".join(str(s) for s in self.letters)


# -- text syntax -------------------------------------------------------------

_TOKEN = re.compile(r"([a-z])(?:\^\{?(\d+)\}?)?|([()\s])|(.)")


def expand(text: str) -> str:
    """Expand caret run-length notation: ``"(a^2b^2)(ba)"`` -> ``"aabbba"``.

    Parentheses and whitespace are ignored.
    """
    if text.isascii() and text.isalpha() and text.islower():
        return text
    out = []
    for m in _TOKEN.finditer(text):
        letter, count, _skip, bad = m.groups()
        if bad is not None:
            raise DomainError(f"unexpected character {bad!r} at {m.start()}")
        if letter is None:
            continue
        k = 1 if count is None else int(count)
        if k < 1:
            raise DomainError(f"exponent must be >= 1 at {m.start()}")
        out.append(letter * k)
    return "".join(out)


def caret(word: Iterable) -> str:
    """Compact run-length rendering, the inverse of :func:`expand`."""
    parts = []
    for letter, run in groupby(word):
        k = sum(1 for _ in run)
        parts.append(f"{letter}^{k}" if k > 1 else str(letter))
    return "".join(parts)


def _rebuild(like, letters, alphabet=None):
    if isinstance(like, Word):
        return Word(tuple(letters), tuple(alphabet))
    if isinstance(like, str):
        return "".join(letters)
    return tuple(letters)


# -- basic operations --------------------------------------------------------

def restrict(w, keep):
    """Subword of ``w`` made of the letters in ``keep``, order preserved."""
    keep = set(keep)
    if isinstance(w, Word):
        missing = keep - set(w.alphabet)
        if missing:
            raise DomainError(f"symbols {sorted(missing)!r} not in alphabet")
        alphabet = [s for s in w.alphabet if s in keep]
        return Word(tuple(s for s in w if s in keep), tuple(alphabet))
    return _rebuild(w, [s for s in w if s in keep])


def normalize(w) -> tuple:
    """Map the i-th smallest occurring symbol to i."""
    rank = {s: i for i, s in enumerate(sorted(set(w)), start=1)}
    return tuple(rank[s] for s in w)


def order_equivalent(u, v) -> bool:
    return normalize(u) == normalize(v)


def runs(w) -> list:
    """Maximal runs of ``w`` as ``(letter, length)`` pairs."""
    return [(s, sum(1 for _ in g)) for s, g in groupby(w)]


def exponent_sequence(w, a) -> tuple:
    return tuple(k for s, k in runs(w) if s == a)


def is_refinement(s: Sequence[int], t: Sequence[int]) -> bool:
    """True iff ``t`` is obtained by summing consecutive groups of ``s``."""
    j = 0
    acc = 0
    for v in s:
        if j == len(t):
            return False
        acc += v
        if acc == t[j]:
            j += 1
            acc = 0
        elif acc > t[j]:
            return False
    return acc == 0 and j == len(t)


# -- balanced blocks ---------------------------------------------------------

@dataclass(frozen=True)
class Block:
    """A balanced block ``u^r v^r`` (ascending) or ``v^r u^r`` on ``pair = (u, v)``."""

    pair: tuple
    ascending: bool
    size: int

    @property
    def letters(self) -> tuple:
        u, v = self.pair
        if self.ascending:
            return (u,) * self.size + (v,) * self.size
        return (v,) * self.size + (u,) * self.size

    @property
    def odd(self) -> bool:
        return self.size % 2 == 1

    def __str__(self):
        s = caret(self.letters)
        return f"({s})"


@dataclass(frozen=True)
class BlockFactorization:
    blocks: tuple

    @property
    def sizes(self) -> tuple:
        return tuple(b.size for b in self.blocks)

    @property
    def orientations(self) -> tuple:
        return tuple("asc" if b.ascending else "desc" for b in self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __len__(self):
        return len(self.blocks)

    def __str__(self):
        return "".join(str(b) for b in self.blocks)


def _factor_segment(w: Sequence, pair: tuple, offset: int) -> list:
    u, v = pair
    other = {u: v, v: u}
    blocks = []
    i, n = 0, len(w)
    while i < n:
        first = w[i]
        r = 1
        while i + r < n and w[i + r] == first:
            r += 1
        second = other[first]
        for k in range(i + r, i + 2 * r):
            if k >= n or w[k] != second:
                raise UnbalancedError(
                    f"block of {first!r}^{r} not closed by {second!r}^{r}", offset + k
                )
        blocks.append(Block(pair, first == u, r))
        i += 2 * r
    return blocks


def factor_blocks(w, pair: Sequence | None = None) -> BlockFactorization:
    """Unique factorization of a two-letter word into balanced blocks.

    Greedy from the left: each block takes the whole leading run ``r`` of one
    letter and then exactly ``r`` of the other.  Raises
    :class:`UnbalancedError` if the word is not balanced.
    """
    letters = tuple(w)
    if pair is None:
        pair = tuple(sorted(set(letters)))
        if len(pair) == 1:
            raise UnbalancedError("single-letter word", len(letters))
    pair = tuple(pair)
    if len(pair) != 2 or pair[0] >= pair[1]:
        raise DomainError(f"pair must be two increasing symbols, got {pair!r}")
    for i, s in enumerate(letters):
        if s not in pair:
            raise DomainError(f"letter {s!r} at {i} not in pair {pair!r}")
    return BlockFactorization(tuple(_factor_segment(letters, pair, 0)))


def is_balanced(w, pair: Sequence | None = None) -> bool:
    try:
        factor_blocks(w, pair)
    except UnbalancedError:
        return False
    return True


def block_sizes(w, pair: Sequence | None = None) -> tuple:
    return factor_blocks(w, pair).sizes


# -- the four-letter languages -----------------------------------------------

NOT_IN_BSTAR = "not_in_Bstar"
BSTAR_AB_ONLY = "Bstar_ab_only"
BSTAR_CD_ONLY = "Bstar_cd_only"
IN_W = "W"
EMPTY = "empty"

_AB = ("a", "b")
_CD = ("c", "d")


def factor_word(w) -> tuple:
    """Blocks of a word in B*(ab,cd): each maximal {a,b}- or {c,d}-segment
    is factored on its own."""
    if isinstance(w, str):
        return _factor_word_str(w)
    return _factor_word(tuple(w))


@lru_cache(maxsize=4096)
def _factor_word_str(w):
    return _factor_word(w)


def _factor_word(letters):
    blocks = []
    pos = 0
    for is_ab, seg in groupby(letters, key=lambda s: s in _AB):
        seg = tuple(seg)
        pair = _AB if is_ab else _CD
        for i, s in enumerate(seg):
            if s not in pair:
                raise DomainError(f"letter {s!r} at {pos + i} not in {{a,b,c,d}}")
        blocks.extend(_factor_segment(seg, pair, pos))
        pos += len(seg)
    return tuple(blocks)


@dataclass(frozen=True)
class LanguageReport:
    kind: str
    in_U: bool
    blocks: tuple = ()
    position: int | None = None

    @property
    def in_bstar(self) -> bool:
        return self.kind != NOT_IN_BSTAR


def classify_language(w) -> LanguageReport:
    """Membership of an {a,b,c,d}-word in B*(ab,cd), W(ab,cd) and U(ab,cd)."""
    try:
        blocks = factor_word(w)
    except UnbalancedError as e:
        return LanguageReport(NOT_IN_BSTAR, False, (), e.position)
    has_ab = any(b.pair == _AB for b in blocks)
    has_cd = any(b.pair == _CD for b in blocks)
    if has_ab and has_cd:
        kind = IN_W
    elif has_ab:
        kind = BSTAR_AB_ONLY
    elif has_cd:
        kind = BSTAR_CD_ONLY
    else:
        kind = EMPTY
    return LanguageReport(kind, all(b.odd for b in blocks), blocks)


def in_W(w) -> bool:
    return classify_language(w).kind == IN_W


@dataclass(frozen=True)
class WellBalanced:
    """Result of :func:`is_well_balanced`.

    ``even_odd`` is the end position of a block-boundary prefix with an even
    number of a's and an odd number of c's, ``odd_even`` likewise with the
    parities swapped.  Either is ``None`` when no such prefix exists.
    """

    even_odd: int | None
    odd_even: int | None

    def __bool__(self):
        return self.even_odd is not None and self.odd_even is not None


def is_well_balanced(w, strict: bool = False) -> WellBalanced:
    """Prefix-parity test on a word of W(ab,cd).

    Scans every prefix ending at a block boundary.  With ``strict=True`` only
    the first block is a candidate prefix for both witnesses.
    """
    report = classify_language(w)
    if report.kind != IN_W:
        raise DomainError(f"word is not in W(ab,cd) ({report.kind})")
    even_odd = odd_even = None
    a_count = c_count = 0
    pos = 0
    blocks = report.blocks[:1] if strict else report.blocks
    for b in blocks:
        pos += 2 * b.size
        if b.pair == _AB:
            a_count += b.size
        else:
            c_count += b.size
        if even_odd is None and a_count % 2 == 0 and c_count % 2 == 1:
            even_odd = pos
        if odd_even is None and a_count % 2 == 1 and c_count % 2 == 0:
            odd_even = pos
    return WellBalanced(even_odd, odd_even)


# word-level symmetries: string reversal mirrors signature reversal, and the
# letter swap mirrors the x<->z swap of a signature
_SWAP = str.maketrans("abcd", "dcba")


def reverse_word(w: str) -> str:
    return w[::-1]


def swap_word(w: str) -> str:
    return w.translate(_SWAP)
