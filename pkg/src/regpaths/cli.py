"""Command-line front end: ``regpaths <command> ...``.

Exit status 0 when every requested check passes, 1 on a domain error or a
failed check, 2 on usage errors and unreadable input.
"""

import argparse
import json
import os
import sys

from . import oracle, signatures as sg, sweep, tableaux as tb, words as wd
from .errors import BudgetExceeded, DomainError
from .svg import render_svg


class UsageError(Exception):
    pass


def _emit(args, payload, text):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _read_lines(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return [ln.strip() for ln in fh if ln.strip()]
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from e


def _inputs(args):
    """Positional values, or one value per line of --in."""
    vals = list(args.values or [])
    if args.infile:
        vals += _read_lines(args.infile)
    if not vals:
        raise UsageError("no input given")
    return vals


def _tableaux(args):
    if getattr(args, "word", None):
        if args.n is None:
            raise UsageError("--word needs --n")
        return [(args.word, tb.phi_tableau(args.word, args.n))]
    out = []
    for v in _inputs(args):
        try:
            obj = json.loads(v)
        except json.JSONDecodeError:
            raise UsageError(f"not a tableau JSON object: {v[:40]!r}") from None
        if "events" in obj:
            W = sweep.WiringDiagram.from_json(obj)
            out.append((v, sweep.local_sequences(W)))
        else:
            out.append((v, tb.Tableau.from_json(obj)))
    return out


# -- word and signature commands ---------------------------------------------

def cmd_parse(args):
    for v in _inputs(args):
        w = wd.expand(v)
        payload = {"input": v, "word": w, "caret": wd.caret(w), "length": len(w),
                   "normalized": list(wd.normalize(w))}
        _emit(args, payload, f"{w}  ({wd.caret(w)}, length {len(w)})")
    return 0


def cmd_balanced(args):
    status = 0
    for v in _inputs(args):
        w = wd.expand(v)
        pair = tuple(args.pair) if args.pair else None
        try:
            f = wd.factor_blocks(w, pair)
            _emit(args, {"word": w, "balanced": True, "sizes": list(f.sizes)},
                  f"balanced: {f}  sizes {f.sizes}")
        except wd.UnbalancedError as e:
            status = 1
            _emit(args, {"word": w, "balanced": False, "position": e.position},
                  f"unbalanced at position {e.position}")
    return status


def cmd_blocks(args):
    status = 0
    for v in _inputs(args):
        w = wd.expand(v)
        if set(w) <= set("abcd"):
            rep = wd.classify_language(w)
            payload = {"word": w, "kind": rep.kind, "in_U": rep.in_U,
                       "blocks": [str(b) for b in rep.blocks], "position": rep.position}
            text = f"{rep.kind}{' (in U)' if rep.in_U else ''}: " + "".join(str(b) for b in rep.blocks)
            if rep.kind == wd.IN_W:
                wb = wd.is_well_balanced(w)
                payload["well_balanced"] = bool(wb)
                payload["witnesses"] = [wb.even_odd, wb.odd_even]
                text += f"\nwell-balanced: {bool(wb)} (prefix ends {wb.even_odd}, {wb.odd_even})"
            if not rep.in_bstar:
                status = 1
                text = f"not in B*: unbalanced at position {rep.position}"
            _emit(args, payload, text)
        else:
            try:
                f = wd.factor_blocks(w)
            except wd.UnbalancedError as e:
                _emit(args, {"word": w, "balanced": False, "position": e.position},
                      f"unbalanced at position {e.position}")
                status = 1
                continue
            _emit(args, {"word": w, "blocks": [str(b) for b in f], "sizes": list(f.sizes),
                         "orientations": list(f.orientations)},
                  f"{f}  sizes {f.sizes}  {' '.join(f.orientations)}")
    return status


def cmd_signature_check(args):
    status = 0
    for v in _inputs(args):
        s = sg.as_signature(v)
        r = sg.is_valid_signature(s)
        X, Y, Z = sg.counts(s)
        payload = {"signature": s, "valid": bool(r), "index": r.index, "rule": r.rule,
                   "counts": [X, Y, Z]}
        text = f"{wd.caret(s)}: valid" if r else f"{wd.caret(s)}: invalid ({r.rule} at {r.index})"
        _emit(args, payload, text)
        status |= 0 if r else 1
    return status


def cmd_factor(args):
    for v in _inputs(args):
        fs = sg.irreducible_factorization(v)
        _emit(args, {"signature": sg.as_signature(v), "factors": list(fs)},
              " . ".join(f"({wd.caret(f)})" for f in fs))
    return 0


def cmd_associated_word(args):
    for v in _inputs(args):
        w = sg.associated_word(v)
        blocks = "".join(str(b) for b in wd.factor_word(w))
        _emit(args, {"signature": sg.as_signature(v), "word": w, "blocks": blocks}, blocks)
    return 0


def cmd_extendable(args):
    status = 0
    for v in _inputs(args):
        r = sg.check_extendable(v)
        payload = {"signature": sg.as_signature(v), "kind": "extendable" if r else "not extendable",
                   "reason": r.reason.split(":")[0] if r.reason else None, "detail": r.reason,
                   "certificate": r.certificate.to_json() if r.certificate else None}
        text = "extendable" if r else f"not extendable ({r.reason})"
        if r:
            c = r.certificate
            text += f": {c.form} p={c.p} q={c.q} splits={c.splits}"
        _emit(args, payload, text)
        status |= 0 if r else 1
    return status


def cmd_classify(args):
    for v in _inputs(args):
        c = sg.classify(v)
        _emit(args, dict(c.to_json(), signature=sg.as_signature(v)),
              f"{c.kind}  r={c.r} p={c.p} q={c.q}")
    return 0


# -- tableau commands --------------------------------------------------------

def _checks(T, names):
    out = {}
    for name in names:
        if name == "geometric":
            out[name] = bool(sweep.is_geometric(T))
        elif name == "regular":
            out[name] = tb.is_regular(T)
        elif name == "pangrammatic":
            out[name] = tb.is_pangrammatic(T)
        elif name == "matching":
            out[name] = bool(sweep.has_valid_matching(T))
        else:
            raise UsageError(f"unknown check {name!r}")
    return out


def cmd_phi(args):
    if not args.word or args.n is None:
        raise UsageError("phi needs --word and --n")
    T = tb.phi_tableau(args.word, args.n)
    checks = _checks(T, args.check or [])
    lines = [T.render()] + [f"{k}: {str(v).lower()}" for k, v in checks.items()]
    _emit(args, dict(T.to_json(), checks=checks), "\n".join(lines))
    return 0 if all(checks.values()) else 1


def cmd_tableau_check(args):
    status = 0
    for src, T in _tableaux(args):
        checks = _checks(T, args.check or ["regular", "pangrammatic", "geometric"])
        _emit(args, {"tableau": T.to_json(), "checks": checks},
              "  ".join(f"{k}: {str(v).lower()}" for k, v in checks.items()))
        status |= 0 if all(checks.values()) else 1
    return status


def cmd_geometric(args):
    status = 0
    for src, T in _tableaux(args):
        r = sweep.is_geometric(T)
        payload = {"geometric": bool(r), "steps": r.steps,
                   "diagram": r.diagram.to_json() if r else None,
                   "snapshots": [list(p) for p in r.diagram.snapshots] if r else None,
                   "residual": r.residual.to_json() if r.residual else None}
        if r:
            text = "geometric: true\n" + "\n".join(" ".join(map(str, p)) for p in r.diagram.snapshots)
        else:
            text = f"geometric: false (stalled after {r.steps} steps)\n{r.residual.render()}"
        _emit(args, payload, text)
        status |= 0 if r else 1
    return status


def cmd_matching(args):
    status = 0
    for src, T in _tableaux(args):
        r = sweep.has_valid_matching(T)
        _emit(args, {"matching": bool(r), "steps": r.steps, "residual": r.residual.to_json()},
              f"valid matching: {str(bool(r)).lower()} ({r.steps} steps)")
        status |= 0 if r else 1
    return status


def cmd_envelopes(args):
    for src, T in _tableaux(args):
        env = sweep.envelopes(T)
        d = env.to_json()
        _emit(args, d, f"upper: {d['upper']}{' (convex)' if env.upper_convex else ''}\n"
                       f"lower: {d['lower']}{' (convex)' if env.lower_convex else ''}")
    return 0


def cmd_subsets(args):
    if args.m is None:
        raise UsageError("subsets needs --m")
    for src, T in _tableaux(args):
        scan = sweep.subsystem_envelope_scan(T, args.m)
        payload = [dict(e.to_json(), subset=list(X)) for X, e in scan]
        lines = [f"{X}: upper {sorted(e.upper)}{' convex' if e.upper_convex else ''}" for X, e in scan]
        _emit(args, payload, "\n".join(lines))
    return 0


def cmd_render(args):
    src, T = _tableaux(args)[0]
    r = sweep.is_geometric(T)
    if not r:
        print("tableau is not geometric; nothing to draw", file=sys.stderr)
        return 1
    doc = render_svg(r.diagram, labels=args.labels)
    if args.out:
        if os.path.exists(args.out) and not args.force:
            print(f"{args.out} exists; use --force to overwrite", file=sys.stderr)
            return 1
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(doc)
    else:
        sys.stdout.write(doc)
    return 0


# -- oracle commands ---------------------------------------------------------

def cmd_census(args):
    k = args.k or 1
    budget = oracle.EnumerationBudget(max_candidates=args.budget) if args.budget else None
    c = oracle.enumerate_signatures(k, budget)
    _emit(args, {"k": k, "count": c.count, "signatures": list(c.signatures)},
          f"M_{k} = {c.count}\n" + "\n".join(wd.caret(s) for s in c.signatures))
    return 0


def cmd_verify(args):
    names = []
    for item in args.suite or ["all"]:
        names += item.split(",")
    if names != ["all"]:
        unknown = [n for n in names if n not in oracle.SUITES]
        if unknown:
            raise UsageError(f"unknown suite(s) {unknown}; choose from {sorted(oracle.SUITES)} or all")
    reports = oracle.run_suites(names, seed=args.seed)
    ok = all(r.passed for r in reports)
    payload = {"passed": ok, "reports": [r.to_json(deterministic=args.deterministic) for r in reports]}
    _emit(args, payload, "\n".join(str(r) for r in reports))
    return 0 if ok else 1


COMMANDS = {
    "parse": cmd_parse,
    "balanced": cmd_balanced,
    "blocks": cmd_blocks,
    "signature-check": cmd_signature_check,
    "factor": cmd_factor,
    "associated-word": cmd_associated_word,
    "extendable": cmd_extendable,
    "classify": cmd_classify,
    "phi": cmd_phi,
    "tableau-check": cmd_tableau_check,
    "geometric": cmd_geometric,
    "matching": cmd_matching,
    "envelopes": cmd_envelopes,
    "subsets": cmd_subsets,
    "render": cmd_render,
    "census": cmd_census,
    "verify": cmd_verify,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("values", nargs="*", help="words, signatures or tableau JSON")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--deterministic", action="store_true", help="omit timing fields")
    common.add_argument("--in", dest="infile", help="read one input per line")
    common.add_argument("--out", help="output path (render)")
    common.add_argument("--force", action="store_true", help="overwrite --out")
    common.add_argument("--word", help="build the tableau phi_n(word)")
    common.add_argument("--n", type=int)
    common.add_argument("--k", type=int)
    common.add_argument("--m", type=int)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, help="max enumeration candidates")
    common.add_argument("--pair", help="two-letter alphabet, e.g. ab")
    common.add_argument("--check", action="append", help="geometric, regular, pangrammatic, matching")
    common.add_argument("--suite", action="append", help="verification suite(s), or all")
    common.add_argument("--labels", action="store_true", help="label snapshots in SVG")

    parser = argparse.ArgumentParser(prog="regpaths", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        return COMMANDS[args.command](args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    except (DomainError, BudgetExceeded) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
