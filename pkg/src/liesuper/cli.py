"""Command-line front end.

Exit codes: 0 success (or capable), 1 not capable / a check failed,
2 undecided, 3 bad input, 4 oracle limit exceeded, 5 class bound too small.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from pathlib import Path

from . import catalog, formulas
from .algebra import LieSuperalgebra, derived_subalgebra, validate
from .capability import (
    corank_formula,
    exterior_square_formula,
    is_capable,
    is_capable_checked,
    multiplier_formula,
    recognize,
)
from .errors import ClassBoundError, FormatError, LieSuperError, MalformedAlgebraError, NotNilpotentError, OracleLimitError
from .fileformat import dumps_algebra, read_algebra, read_presentation
from .oracle import epicenter_oracle, exterior_square_oracle, hopf_multiplier, oracle_report, presentation_of
from .free import default_limits

EXIT_OK, EXIT_NO, EXIT_UNDECIDED, EXIT_INPUT, EXIT_LIMIT, EXIT_CLASS = 0, 1, 2, 3, 4, 5


class Report:
    """Ordered key/value report rendered as text or JSON."""

    def __init__(self, command: str, source: str):
        self.data: dict = {"command": command, "input": source}

    def __setitem__(self, key, value):
        self.data[key] = value

    def render(self, as_json: bool) -> str:
        if as_json:
            return json.dumps(self.data, indent=2, default=str) + "\n"
        lines = []
        for k, v in self.data.items():
            if isinstance(v, list) and not v:
                lines.append(f"{k}: none")
            elif isinstance(v, list):
                lines.append(f"{k}:")
                lines.extend(f"  {x}" if not isinstance(x, dict) else "  " + _flat(x) for x in v)
            elif isinstance(v, dict):
                lines.append(f"{k}: {_flat(v)}")
            else:
                lines.append(f"{k}: {v}")
        return "\n".join(lines) + "\n"


def _flat(d: dict) -> str:
    return ", ".join(f"{k}={v}" for k, v in d.items())


def _load(source: str) -> tuple[LieSuperalgebra, str]:
    """An interchange file path or a catalog tag."""
    p = Path(source)
    if p.is_file():
        digest = hashlib.sha256(p.read_bytes()).hexdigest()[:16]
        return read_algebra(p), f"{p.name} sha256:{digest}"
    try:
        return catalog.parse_tag(source), source
    except (ValueError, KeyError) as e:
        raise FormatError(f"{source!r} is neither a file nor a known tag ({e})") from None


def _limits(args) -> dict:
    lim = default_limits()
    if getattr(args, "limit_dim", None) is not None:
        lim["max_generators"] = args.limit_dim
    return lim


def _check_dim(L: LieSuperalgebra, args) -> None:
    if getattr(args, "limit_dim", None) is not None and L.dim > args.limit_dim:
        raise OracleLimitError(f"dimension {L.dim} exceeds --limit-dim {args.limit_dim}")


def _presentation(L: LieSuperalgebra, args):
    cb = getattr(args, "class_bound", None)
    return presentation_of(L, class_bound=cb, minimal=getattr(args, "minimal", False))


# --------------------------------------------------------------------------
# commands


def cmd_validate(args) -> tuple[Report, int]:
    L, src = _load(args.algebra)
    rep = Report("validate", src)
    bad = validate(L)
    rep["superdim"] = str(L.superdim)
    rep["valid"] = not bad
    rep["violations"] = [str(v) for v in bad]
    return rep, EXIT_OK if not bad else EXIT_NO


def cmd_construct(args) -> tuple[Report | None, int]:
    L = catalog.parse_tag(args.tag)
    text = dumps_algebra(L)
    if args.output:
        Path(args.output).write_text(text)
        rep = Report("construct", args.tag)
        rep["written"] = args.output
        rep["superdim"] = str(L.superdim)
        return rep, EXIT_OK
    sys.stdout.write(text)
    return None, EXIT_OK


def cmd_recognize(args) -> tuple[Report, int]:
    L, src = _load(args.algebra)
    rep = Report("recognize", src)
    d = recognize(L)
    rep["superdim"] = str(L.superdim)
    rep["family"] = str(d)
    rep["kind"] = d.kind
    rep["params"] = list(d.params)
    return rep, EXIT_OK if d.recognized else EXIT_UNDECIDED


def cmd_capable(args) -> tuple[Report, int]:
    L, src = _load(args.algebra)
    rep = Report("capable", src)
    v = is_capable(L)
    rep["family"] = str(v.descriptor)
    rep["status"] = v.status
    rep["source"] = v.justification
    rep["epicenter"] = str(v.epicenter_dim) if v.epicenter_dim is not None else (v.epicenter_note or "unknown")
    status = v.status
    if args.oracle:
        _check_dim(L, args)
        o = is_capable_checked(L, _limits(args))
        rep["oracle_status"] = o.status
        rep["oracle_epicenter"] = str(o.epicenter_dim)
        if o.agrees is not None:
            _compare(rep, v.status, o.status)
        if not v.decided:
            status = o.status
    code = {"capable": EXIT_OK, "not_capable": EXIT_NO, "undecided": EXIT_UNDECIDED}[status]
    return rep, code


def _compare(rep: Report, formula, oracle) -> None:
    rep["comparison"] = {"formula": str(formula), "oracle": str(oracle), "match": formula == oracle}


def _matched(rep: Report) -> bool:
    return rep.data.get("comparison", {}).get("match", True)


def _formula_or_none(fn, L):
    d = recognize(L)
    if not d.recognized:
        return None, d
    return fn(d), d


def cmd_multiplier(args) -> tuple[Report, int]:
    L, src = _load(args.algebra)
    rep = Report("multiplier", src)
    mf, d = _formula_or_none(multiplier_formula, L)
    rep["family"] = str(d)
    rep["bound"] = formulas.multiplier_bound(L.dim_even, L.dim_odd)
    if mf is not None:
        rep["formula"] = str(mf.value)
        rep["source"] = mf.source
    else:
        rep["formula"] = "n/a"
    if args.oracle:
        _check_dim(L, args)
        m = hopf_multiplier(_presentation(L, args), _limits(args), stable=args.stable)
        rep["oracle"] = str(m.superdim)
        rep["oracle_basis"] = list(m.representatives)
        if mf is not None:
            _compare(rep, mf.value, m.superdim)
    return rep, EXIT_OK if _matched(rep) else EXIT_NO


def cmd_corank(args) -> tuple[Report, int]:
    L, src = _load(args.algebra)
    rep = Report("corank", src)
    t, d = _formula_or_none(corank_formula, L)
    rep["family"] = str(d)
    rep["formula"] = t if t is not None else "n/a"
    rep["source"] = "corank"
    if args.oracle:
        _check_dim(L, args)
        m = oracle_report(_presentation(L, args), _limits(args), stable=args.stable).multiplier
        to = formulas.corank(L.superdim, m)
        rep["oracle"] = to
        if t is not None:
            _compare(rep, t, to)
    return rep, EXIT_OK if _matched(rep) else EXIT_NO


def cmd_extsq(args) -> tuple[Report, int]:
    L, src = _load(args.algebra)
    rep = Report("extsq", src)
    e, d = _formula_or_none(exterior_square_formula, L)
    rep["family"] = str(d)
    rep["formula"] = str(e) if e is not None else "n/a"
    rep["source"] = "exterior-square"
    rep["derived"] = str(derived_subalgebra(L).superdim)
    if args.oracle:
        _check_dim(L, args)
        x = exterior_square_oracle(_presentation(L, args), _limits(args), stable=args.stable)
        rep["oracle"] = str(x)
        if e is not None:
            _compare(rep, e, x)
    return rep, EXIT_OK if _matched(rep) else EXIT_NO


def cmd_table(args) -> tuple[Report, int]:
    from .reproduce import FAIL, table_rows, unlisted_of_corank

    rep = Report("table", f"k={args.k}")
    rows = table_rows(args.k, oracle=args.oracle)
    out = []
    for r in rows:
        entry = {"label": r.label, "status": r.status}
        if r.constructible:
            entry["corank"] = r.corank_formula
            if r.corank_oracle is not None:
                entry["oracle_corank"] = r.corank_oracle
        if r.note:
            entry["note"] = r.note
        out.append(entry)
    rep["entries"] = out
    rep["not_listed"] = unlisted_of_corank(args.k)
    return rep, EXIT_NO if any(r.status == FAIL for r in rows) else EXIT_OK


def cmd_oracle(args) -> tuple[Report, int]:
    P, explicit = read_presentation(args.file)
    digest = hashlib.sha256(Path(args.file).read_bytes()).hexdigest()[:16]
    rep = Report(f"oracle {args.what}", f"{Path(args.file).name} sha256:{digest}")
    lim = _limits(args)
    if args.class_bound is not None:
        P = P.with_class_bound(args.class_bound)
    elif not explicit:
        P = _search_class_bound(P, lim)
    rep["class_bound"] = P.class_bound
    if args.what == "multiplier":
        m = hopf_multiplier(P, lim, stable=args.stable)
        rep["multiplier"] = str(m.superdim)
        rep["basis"] = list(m.representatives)
    elif args.what == "extsq":
        rep["exterior_square"] = str(exterior_square_oracle(P, lim, stable=args.stable))
    else:
        e = epicenter_oracle(P, lim, stable=args.stable)
        rep["epicenter"] = str(e.superdim)
        rep["presented_algebra"] = str(e.algebra.superdim)
    return rep, EXIT_OK


def _search_class_bound(P, lim):
    last = None
    for c in range(2, lim["max_class"] + 1):
        try:
            Q = P.with_class_bound(c)
            oracle_report(Q, lim)
            return Q
        except ClassBoundError as e:
            last = e
    raise last if last else ClassBoundError("no admissible class bound")


def cmd_reproduce(args) -> tuple[Report, int]:
    from .reproduce import FAIL, published_checks

    rep = Report("reproduce", "published values")
    checks = published_checks(oracle=not args.no_oracle)
    rep["checks"] = [c.line() for c in checks]
    n_fail = sum(c.status == FAIL for c in checks)
    n_div = sum(c.status == "known-divergent" for c in checks)
    rep["summary"] = f"{len(checks)} checks, {n_fail} failed, {n_div} known-divergent"
    return rep, EXIT_NO if n_fail else EXIT_OK


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="structured output")
    p = argparse.ArgumentParser(
        prog="liesuper", description="Exact computations with nilpotent Lie superalgebras.", parents=[common]
    )
    sub = p.add_subparsers(dest="command", required=True)
    _add = sub.add_parser
    sub.add_parser = lambda *a, **k: _add(*a, parents=[common], **k)

    def algebra_cmd(name, fn, help, oracle=True):
        s = sub.add_parser(name, help=help)
        s.add_argument("algebra", help="interchange file or catalog tag such as 'H(1,0)+A(2|0)'")
        if oracle:
            s.add_argument("--oracle", action="store_true", help="also run the free-presentation oracle")
            s.add_argument("--class-bound", type=int, default=None)
            s.add_argument("--limit-dim", type=int, default=None, help="refuse oracle runs above this dimension")
            s.add_argument("--minimal", action="store_true", help="use a minimal generating set in the oracle")
            s.add_argument("--stable", action="store_true", help="recompute one class higher and compare")
        s.set_defaults(fn=fn)
        return s

    algebra_cmd("validate", cmd_validate, "check the axioms", oracle=False)
    c = sub.add_parser("construct", help="emit a catalog algebra in the interchange format")
    c.add_argument("tag")
    c.add_argument("-o", "--output")
    c.set_defaults(fn=cmd_construct)
    algebra_cmd("recognize", cmd_recognize, "family and parameters", oracle=False)
    algebra_cmd("capable", cmd_capable, "capability verdict (exit 0/1/2)")
    algebra_cmd("multiplier", cmd_multiplier, "multiplier superdimension")
    algebra_cmd("corank", cmd_corank, "corank")
    algebra_cmd("extsq", cmd_extsq, "exterior square superdimension")
    t = sub.add_parser("table", help="published corank list for k <= 4")
    t.add_argument("k", type=int)
    t.add_argument("--oracle", action="store_true")
    t.set_defaults(fn=cmd_table)
    o = sub.add_parser("oracle", help="run the oracle on a presentation file")
    o.add_argument("what", choices=["multiplier", "extsq", "epicenter"])
    o.add_argument("file")
    o.add_argument("--class-bound", type=int, default=None)
    o.add_argument("--limit-dim", type=int, default=None, help="maximum number of generators")
    o.add_argument("--stable", action="store_true")
    o.set_defaults(fn=cmd_oracle)
    r = sub.add_parser("reproduce", help="recompute all published values")
    r.add_argument("--no-oracle", action="store_true")
    r.set_defaults(fn=cmd_reproduce)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    args.json = getattr(args, "json", False)
    try:
        rep, code = args.fn(args)
    except (FormatError, MalformedAlgebraError, NotNilpotentError, FileNotFoundError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except OracleLimitError as e:
        print(f"oracle limit: {e}", file=sys.stderr)
        return EXIT_LIMIT
    except ClassBoundError as e:
        print(f"class bound: {e}", file=sys.stderr)
        return EXIT_CLASS
    except (LieSuperError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    if rep is not None:
        sys.stdout.write(rep.render(args.json))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
