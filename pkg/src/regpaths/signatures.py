"""Signatures of 3-path systems: words over x < y < z.

Letter x marks a crossing of paths {1,2}, y of {1,3} and z of {2,3}.
Signatures are plain strings; every public function also accepts caret
notation (``"xy^3zx^2z^2"``).
"""

from __future__ import annotations

from dataclasses import dataclass, asdict
from itertools import groupby

from .errors import ConditionOneError, DomainError, UnbalancedError
from .words import (
    exponent_sequence,
    expand,
    factor_blocks,
    is_refinement,
    is_well_balanced,
    classify_language,
    reverse_word,
    runs,
    swap_word,
)


def as_signature(s) -> str:
    if not isinstance(s, str):
        s = "".join(s)
    s = expand(s)
    bad = set(s) - set("xyz")
    if bad:
        raise DomainError(f"signature letters must be x, y, z; got {sorted(bad)!r}")
    return s


def counts(s) -> tuple:
    """(X, Y, Z): number of crossings of each pair."""
    s = as_signature(s)
    return s.count("x"), s.count("y"), s.count("z")


# -- validity ----------------------------------------------------------------

@dataclass(frozen=True)
class Validity:
    """Truthy iff valid; otherwise ``index`` points at the offending run and
    ``rule`` names the violated condition."""

    valid: bool
    index: int | None = None
    rule: str | None = None

    def __bool__(self):
        return self.valid


def is_valid_signature(s) -> Validity:
    """Parity rules characterizing crossing orders of three paths.

    (i) the first letter is x or z; (ii) after the leading run u^p the next
    letter is y iff p is odd; (iii) in u v^p w with v^p a maximal run,
    u = w iff p is even.
    """
    s = as_signature(s)
    if not s:
        raise DomainError("empty signature")
    if s[0] not in "xz":
        return Validity(False, 0, "first letter must be x or z")
    rl = runs(s)
    if len(rl) > 1:
        p = rl[0][1]
        if (rl[1][0] == "y") != (p % 2 == 1):
            return Validity(False, p, "leading run parity")
    pos = rl[0][1]
    for (u, _), (v, p), (w, _) in zip(rl, rl[1:], rl[2:]):
        if (u == w) != (p % 2 == 0):
            return Validity(False, pos, f"run {v}^{p} between {u} and {w}")
        pos += p
    return Validity(True)


def signature_restrictions(s) -> tuple:
    """(sigma_xy, sigma_xz, sigma_yz)."""
    s = as_signature(s)
    return (
        "".join(c for c in s if c != "z"),
        "".join(c for c in s if c != "y"),
        "".join(c for c in s if c != "x"),
    )


def signature_to_tableau3(s):
    from .tableaux import Tableau

    s = as_signature(s)
    v = is_valid_signature(s)
    if not v:
        raise DomainError(f"invalid signature {s!r}: {v.rule} at {v.index}")
    sxy, sxz, syz = signature_restrictions(s)
    rows = (
        tuple({"x": 2, "y": 3}[c] for c in sxy),
        tuple({"x": 1, "z": 3}[c] for c in sxz),
        tuple({"y": 1, "z": 2}[c] for c in syz),
    )
    return Tableau((1, 2, 3), rows)


# -- irreducible factors -----------------------------------------------------

def _balanced_cuts(s):
    x = y = z = 0
    for i, c in enumerate(s, start=1):
        if c == "x":
            x += 1
        elif c == "y":
            y += 1
        else:
            z += 1
        if x == y == z:
            yield i


def is_irreducible(s) -> bool:
    s = as_signature(s)
    cuts = list(_balanced_cuts(s))
    return bool(s) and cuts == [len(s)]


def irreducible_factorization(s) -> tuple:
    s = as_signature(s)
    X, Y, Z = counts(s)
    if not (X == Y == Z >= 1):
        raise DomainError(f"unequal crossing counts {X, Y, Z}")
    out = []
    last = 0
    for i in _balanced_cuts(s):
        out.append(s[last:i])
        last = i
    return tuple(out)


# -- condition 1: the associated word ---------------------------------------

def associated_word(s) -> str:
    """Interlace the blocks of sigma_yz (as a/b) and sigma_xy (as c/d)
    following the x- and z-runs of sigma_xz.

    Raises :class:`ConditionOneError` naming the failing restriction.
    """
    s = as_signature(s)
    sxy, sxz, syz = signature_restrictions(s)
    try:
        alpha = factor_blocks(syz, ("y", "z")) if syz else ()
    except UnbalancedError as e:
        raise ConditionOneError(f"sigma_yz is not balanced: {e}", "yz") from e
    try:
        gamma = factor_blocks(sxy, ("x", "y")) if sxy else ()
    except UnbalancedError as e:
        raise ConditionOneError(f"sigma_xy is not balanced: {e}", "xy") from e
    a_sizes = tuple(b.size for b in alpha)
    c_sizes = tuple(b.size for b in gamma)
    if not is_refinement(a_sizes, exponent_sequence(sxz, "x")):
        raise ConditionOneError("block sizes of sigma_yz do not refine exp_x(sigma_xz)", "yz")
    if not is_refinement(c_sizes, exponent_sequence(sxz, "z")):
        raise ConditionOneError("block sizes of sigma_xy do not refine exp_z(sigma_xz)", "xy")

    ab = {"y": "a", "z": "b"}
    cd = {"x": "c", "y": "d"}
    it = {"x": iter(alpha), "z": iter(gamma)}
    trans = {"x": ab, "z": cd}
    out = []
    for letter, length in runs(sxz):
        need = length
        while need:
            b = next(it[letter])
            out.extend(trans[letter][c] for c in b.letters)
            need -= b.size
    return "".join(out)


def satisfies_condition1(s) -> bool:
    try:
        associated_word(s)
    except ConditionOneError:
        return False
    return True


# -- condition 2 -------------------------------------------------------------

FORMS = ("alpha_beta_gamma", "gamma_beta_alpha")


@dataclass(frozen=True)
class KaraCertificate:
    form: str
    p: int
    q: int
    splits: tuple

    def parts(self, s) -> tuple:
        """(alpha, beta, gamma) as substrings of ``s``."""
        s = as_signature(s)
        i, j = self.splits
        first, mid, last = s[:i], s[i:j], s[j:]
        if self.form == FORMS[0]:
            return first, mid, last
        return last, mid, first

    def to_json(self) -> dict:
        d = asdict(self)
        d["splits"] = list(self.splits)
        return d


def _prefix_counts(s):
    pc = [(0, 0, 0)]
    x = y = z = 0
    for c in s:
        if c == "x":
            x += 1
        elif c == "y":
            y += 1
        else:
            z += 1
        pc.append((x, y, z))
    return pc


def condition2_certificates(s) -> list:
    """Every split matching the count matrix, best first.

    Order: form alpha.beta.gamma before gamma.beta.alpha, then larger p,
    then split positions.
    """
    s = as_signature(s)
    pc = _prefix_counts(s)
    L = len(s)
    found = []
    for fi, form in enumerate(FORMS):
        for i in range(L + 1):
            for j in range(i, L + 1):
                first = pc[i]
                mid = tuple(b - a for a, b in zip(pc[i], pc[j]))
                last = tuple(b - a for a, b in zip(pc[j], pc[L]))
                alpha, gamma = (first, last) if fi == 0 else (last, first)
                p, q = alpha[0], gamma[1]
                if p + q < 1:
                    continue
                if alpha == (p, p, 0) and mid == (q, 0, p) and gamma == (0, q, q):
                    found.append((fi, -p, i, j, KaraCertificate(form, p, q, (i, j))))
    found.sort(key=lambda t: t[:4])
    return [t[-1] for t in found]


def condition2_factorization(s):
    certs = condition2_certificates(s)
    return certs[0] if certs else None


# -- extendability and types -------------------------------------------------

@dataclass(frozen=True)
class Extendability:
    extendable: bool
    reason: str | None = None
    word: str | None = None
    certificate: KaraCertificate | None = None

    def __bool__(self):
        return self.extendable


def check_extendable(s) -> Extendability:
    s = as_signature(s)
    v = is_valid_signature(s)
    if not v:
        raise DomainError(f"invalid signature {s!r}: {v.rule} at {v.index}")
    if not is_irreducible(s):
        raise DomainError(f"{s!r} is reducible; factor it first")
    try:
        w = associated_word(s)
    except ConditionOneError as e:
        return Extendability(False, f"condition 1: {e}")
    cert = condition2_factorization(s)
    if cert is None:
        return Extendability(False, "condition 2: no alpha.beta.gamma split", w)
    return Extendability(True, None, w, cert)


def is_extendable(s) -> bool:
    return check_extendable(s).extendable


@dataclass(frozen=True)
class SignatureClass:
    kind: str
    r: int
    p: int
    q: int

    def to_json(self) -> dict:
        return asdict(self)


def classify(s) -> SignatureClass:
    ext = check_extendable(s)
    if not ext:
        raise DomainError(f"not extendable ({ext.reason})")
    cert = ext.certificate
    r = counts(s)[0]
    if cert.p > 0 and cert.q > 0:
        kind = "mixed"
    else:
        kind = "odd" if r % 2 else "even"
    return SignatureClass(kind, r, cert.p, cert.q)


# -- shape of the associated word --------------------------------------------

def _swap_signature(s: str) -> str:
    return s.translate(str.maketrans("xz", "zx"))


def _symmetries(s, w):
    yield "identity", s, w
    yield "reverse", s[::-1], reverse_word(w)
    yield "swap", _swap_signature(s), swap_word(w)
    yield "reverse+swap", _swap_signature(s)[::-1], swap_word(reverse_word(w))


@dataclass(frozen=True)
class OmegaForm:
    ok: bool
    reason: str
    symmetry: str | None = None
    p: int | None = None
    q: int | None = None

    def __bool__(self):
        return self.ok


def _shape(w, p, q):
    head = "a" * p + "b" * p
    if not w.startswith(head):
        return "missing leading a^p b^p"
    rest = w[len(head):]
    if q == 0:
        if not rest or set(rest) - set("cd"):
            return "tail is not a {c,d} word"
        rep = classify_language(rest)
        if not rep.in_bstar or not rep.in_U:
            return "tail has an even or unbalanced block"
        return None
    tail = "c" * q + "d" * q
    if not rest.endswith(tail):
        return "missing trailing c^q d^q"
    delta = rest[: len(rest) - len(tail)]
    rep = classify_language(delta)
    if not rep.in_bstar or not rep.in_U:
        return "middle part is not in U"
    if not is_well_balanced(w):
        return "not well-balanced"
    return None


def check_omega_form(s, w) -> OmegaForm:
    """Shape check of the associated word after moving the certificate to
    form alpha.beta.gamma with p > 0 by a symmetry."""
    s = as_signature(s)
    w = expand(w)
    last = "no certificate"
    for name, ss, ww in _symmetries(s, w):
        for cert in condition2_certificates(ss):
            if cert.form != FORMS[0] or cert.p == 0:
                continue
            err = _shape(ww, cert.p, cert.q)
            if err is None:
                return OmegaForm(True, "ok", name, cert.p, cert.q)
            last = err
    return OmegaForm(False, last)


# -- envelope prediction -----------------------------------------------------

def factor_envelopes(s, n) -> tuple:
    """(upper, lower) envelopes of a regular system on [n] whose signature is
    the single extendable irreducible factor ``s``."""
    cls = classify(s)
    every = frozenset(range(1, n + 1))
    if cls.kind == "mixed":
        return every, every
    if cls.kind == "odd":
        ends = frozenset((1, n))
        return (ends, every) if s[0] == "x" else (every, ends)
    if cls.p > 0:
        return every, frozenset((1, 2))
    return frozenset((n - 1, n)), every


def predicted_upper_envelope(s, n) -> frozenset:
    """Union of per-factor contributions; a factor preceded by an odd total
    number of crossings is upside down and contributes its lower envelope."""
    if n < 4:
        raise DomainError("prediction needs n >= 4")
    s = as_signature(s)
    total = 0
    upper = set()
    for f in irreducible_factorization(s):
        up, low = factor_envelopes(f, n)
        upper |= low if total % 2 else up
        total += counts(f)[0]
    return frozenset(upper)
