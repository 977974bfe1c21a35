"""Command-line front end.

Six subcommands: invariant, gap, alexander, ac, table, skein.  Inputs
are braid-word documents ("N=3 s1 v2 S1 ...") or tangle documents
(a "signs: ..." header followed by slice lines); the positional input
argument is a file path, "-" for stdin, or the document text itself.

All output is deterministic byte for byte for identical inputs and
flags: polynomials render in the canonical ascending-lex term order and
the table command prints "-" in its elapsed column unless --timings is
given.  Exit codes: 0 success, 2 parse or usage error, 3 internal
consistency failure (a cross-check that must hold by construction
failed, e.g. trace and direct evaluation disagree).
"""

import argparse
import os
import sys
import time
from multiprocessing import Pool

from .ring import LaurentPoly, substitute, unit_normalize
from .schema import SuperDim
from .tangle import (
    BraidWord, TangleError, closure, has_omega, parse_braid, parse_tangle,
    render_braid, skein_triple, writhe,
)
from .engine import (
    EvalOptions, InternalComputationError, closure_trace, evaluate,
    evaluate_11,
)
from .zh import zh_braid, zh_tangle
from .burau import alexander, gap, recover_gap_via_trace
from .ac import ac_obstruction_braid, build_arc_graph, solve_numbering

TABLE_HEADER = "# superbraid v1"


def _strip_comments(text):
    return "\n".join(line.split("#", 1)[0] for line in text.splitlines())


def read_input(arg):
    """Document text from a path, '-' (stdin), or the literal text itself."""
    if arg == "-":
        return sys.stdin.read()
    if os.path.exists(arg):
        with open(arg, "r", encoding="utf-8") as fh:
            return fh.read()
    head = _strip_comments(arg).lstrip()
    if head.startswith("N=") or head.startswith("signs:"):
        return arg
    if "\n" in arg or "\t" in arg:
        return arg
    raise TangleError("no such input file %r" % arg)


def parse_document(text):
    """Dispatch on the document head: BraidWord or TangleExpr."""
    head = _strip_comments(text).lstrip()
    if head.startswith("N="):
        return parse_braid(_strip_comments(text))
    if head.startswith("signs:"):
        return parse_tangle(text)
    raise TangleError("input must start with 'N=' (braid) or 'signs:' (tangle)")


def substitute_q_to_t(poly):
    """Rewrite a q-only value in t via q = t^(-1/2).

    Exponent substitution only: every q-exponent must be even, so the
    value is unit-normalized first (which clears any stray odd offset a
    unit q^k would introduce).  Odd exponents after that are an error.
    """
    if any(poly.uses(v) for v in poly.vars if v != "q"):
        raise TangleError("value involves %r; q = t^(-1/2) reporting needs "
                          "a q-only value" % (poly.vars,))
    qi = poly.vars.index("q")
    p = unit_normalize(poly)
    if any(e[qi] % 2 for e in p.terms):
        raise TangleError("odd q-exponent survives normalization; "
                          "the value is not a polynomial in t")
    terms = {}
    for e, c in p.terms.items():
        terms[(-e[qi] // 2,)] = c
    return unit_normalize(LaurentPoly(("t",), terms))


def _superdim(args):
    return SuperDim(args.m, args.n)


def _braid_invariant(beta, opts, route):
    if route == "direct":
        body = zh_braid(beta) if opts.semiwelded else beta.to_tangle()
        return evaluate(closure(body), opts).entry((), ())
    return closure_trace(beta, opts)


def cmd_invariant(args):
    obj = parse_document(read_input(args.input))
    opts = EvalOptions(_superdim(args), semiwelded=args.semi_welded,
                       deframe=args.deframe, jobs=args.jobs)
    if isinstance(obj, BraidWord):
        routes = []
        if args.trace or not args.direct:
            routes.append("trace")
        if args.direct:
            routes.append("direct")
        values = [_braid_invariant(obj, opts, r) for r in routes]
        if len(values) == 2 and values[0] != values[1]:
            raise InternalComputationError(
                "trace and direct evaluation disagree:\n  trace:  %s\n"
                "  direct: %s" % (values[0].render(), values[1].render()))
        value = values[0]
        if args.as_t:
            value = substitute_q_to_t(value)
        print(value.render())
        return 0
    if args.trace:
        raise TangleError("the trace route needs a braid-word input")
    if args.semi_welded and not has_omega(obj):
        obj = zh_tangle(obj)
    if len(obj.dom) == 0 and len(obj.cod) == 0:
        value = evaluate(obj, opts).entry((), ())
        if args.as_t:
            value = substitute_q_to_t(value)
        print(value.render())
        return 0
    if args.as_t:
        if obj.dom != obj.cod or obj.dom.alpha_width != 1 or (args.m, args.n) != (1, 1):
            raise TangleError("q = t^(-1/2) reporting applies to scalars: "
                              "closed inputs, or 1-1 tangles at d=1|1")
        print(substitute_q_to_t(evaluate_11(obj, opts)).render())
        return 0
    print(evaluate(obj, opts).to_matrix().render())
    return 0


def _require_braid(obj, what):
    if not isinstance(obj, BraidWord):
        raise TangleError("%s needs a braid-word input" % what)
    return obj


def _gap_qw(beta):
    vars = ("q", "w")
    return substitute(gap(beta),
                      {"s": LaurentPoly.mono(vars, 1, q=-2, w=-1),
                       "t": LaurentPoly.gen(vars, "w")}, vars)


def cmd_gap(args):
    beta = _require_braid(parse_document(read_input(args.input)),
                          "the generalized Alexander polynomial")
    if args.verify:
        qw_value = recover_gap_via_trace(beta)
    elif args.qw:
        qw_value = _gap_qw(beta)
    else:
        qw_value = None
    print((qw_value if args.qw else gap(beta)).render())
    if args.verify:
        print("# verified: determinant route matches the closure trace")
    return 0


def cmd_alexander(args):
    beta = _require_braid(parse_document(read_input(args.input)),
                          "the Alexander polynomial")
    if args.check:
        numbering = solve_numbering(build_arc_graph(beta))
        if numbering is None or not numbering.conservative:
            print("warning: no conservative numbering on this diagram; "
                  "the classical Alexander recovery may not apply",
                  file=sys.stderr)
    print(alexander(beta).render())
    return 0


def _format_vector(ks):
    return "(" + ", ".join(str(k) for k in ks) + ")"


def cmd_ac(args):
    obj = parse_document(read_input(args.input))
    numbering = solve_numbering(build_arc_graph(obj))
    if numbering is None:
        print("no Alexander numbering: the crossing equations are contradictory")
    elif numbering.conservative:
        print("conservative numbering, potential %s"
              % _format_vector(numbering.potential))
    else:
        print("numerable, not conservative on this diagram")
    if not isinstance(obj, BraidWord):
        print("note: the matrix obstruction runs on braid words only")
        return 0
    verdict = ac_obstruction_braid(obj, _superdim(args))
    if verdict.obstructed:
        print("obstructed: not almost classical")
        print("reason: %s" % verdict.reason)
        print("(no diagram of this closure admits a conservative numbering)")
    else:
        print("no obstruction at d=%d|%d: the lifted matrix is a potential "
              "conjugate of the plain one" % (args.m, args.n))
        print("exponents: k = %s + span{%s}"
              % (_format_vector(verdict.solution),
                 ", ".join(_format_vector(s) for s in verdict.shifts)))
        print("(necessary condition satisfied; not a proof of "
              "almost-classicality)")
    return 0


def _table_row(job):
    name, word, m, n, jobs, timings = job
    t0 = time.monotonic()
    try:
        beta = parse_braid(word)
        opts = EvalOptions(SuperDim(m, n), semiwelded=True, deframe=True,
                           jobs=jobs)
        value = closure_trace(beta, opts).render()
        wr = str(writhe(beta))
        ok = True
    except (TangleError, ValueError) as e:
        value = "error: %s" % e
        wr = "-"
        ok = False
    elapsed = "%.3f" % (time.monotonic() - t0) if timings else "-"
    return "\t".join((name, str(m), str(n), wr, value, elapsed)), ok


def parse_table_list(text):
    """Rows of 'name<TAB>braid word' (comments with '#', blanks skipped)."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if "\t" not in line:
            raise TangleError("line %d: expected 'name<TAB>braid word'" % lineno)
        name, word = line.split("\t", 1)
        rows.append((name.strip(), word.strip()))
    return rows


def cmd_table(args):
    rows = parse_table_list(read_input(args.list))
    jobs = [(name, word, args.m, args.n, 1, args.timings)
            for name, word in rows]
    lines = [TABLE_HEADER,
             "\t".join(("name", "m", "n", "writhe", "invariant", "elapsed"))]
    all_ok = True
    if args.jobs > 1 and len(jobs) > 1:
        with Pool(args.jobs) as pool:
            results = list(pool.imap(_table_row, jobs))
    else:
        results = [_table_row(job) for job in jobs]
    for line, ok in results:
        lines.append(line)
        all_ok = all_ok and ok
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if all_ok else 2


def cmd_skein(args):
    beta = _require_braid(parse_document(read_input(args.input)),
                          "skein smoothing")
    plus, minus, smooth = skein_triple(beta, args.site)
    opts = EvalOptions(_superdim(args), semiwelded=True, deframe=True,
                       jobs=args.jobs)
    f_plus = closure_trace(plus, opts)
    f_minus = closure_trace(minus, opts)
    f_smooth = closure_trace(smooth, opts)
    vars = opts.vars
    shift = args.m - args.n
    residual = (f_plus * LaurentPoly.mono(vars, 1, q=shift)
                - f_minus * LaurentPoly.mono(vars, 1, q=-shift)
                - f_smooth * (LaurentPoly.mono(vars, 1, q=1)
                              - LaurentPoly.mono(vars, 1, q=-1)))
    print("T+ (%s): %s" % (render_braid(plus), f_plus.render()))
    print("T- (%s): %s" % (render_braid(minus), f_minus.render()))
    print("T0 (%s): %s" % (render_braid(smooth), f_smooth.render()))
    print("residual: %s" % residual.render())
    if not residual.is_zero():
        raise InternalComputationError("skein residual is nonzero")
    return 0


def _add_dim(p):
    p.add_argument("--m", type=int, default=1, help="even dimension (default 1)")
    p.add_argument("--n", type=int, default=1, help="odd dimension (default 1)")


def _add_jobs(p):
    p.add_argument("--jobs", type=int, default=1,
                   help="parallel worker bound (default 1)")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="superbraid",
        description="Exact U_q(gl(m|n)) invariants of virtual and "
                    "semi-welded tangles.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "invariant",
        help="closure invariant of a braid, or the matrix of a tangle")
    p.add_argument("input", help="braid/tangle document (path, '-', or text)")
    _add_dim(p)
    p.add_argument("--semi-welded", action="store_true",
                   help="lift classical crossings and work over Z[q,w]")
    p.add_argument("--deframe", action="store_true",
                   help="multiply by q^((n-m)*writhe)")
    p.add_argument("--trace", action="store_true",
                   help="closure trace route (braids only; the default)")
    p.add_argument("--direct", action="store_true",
                   help="build the closed diagram and evaluate it; "
                        "combined with --trace, cross-checks both routes")
    p.add_argument("--as-t", action="store_true",
                   help="report a q-only scalar in t via q = t^(-1/2)")
    _add_jobs(p)
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser(
        "gap", help="generalized Alexander polynomial of a braid closure")
    p.add_argument("input", help="braid document (path, '-', or text)")
    p.add_argument("--qw", action="store_true",
                   help="report in q,w instead of s,t")
    p.add_argument("--verify", action="store_true",
                   help="cross-check the determinant against the closure trace")
    p.set_defaults(func=cmd_gap)

    p = sub.add_parser(
        "alexander", help="Alexander polynomial of a braid closure")
    p.add_argument("input", help="braid document (path, '-', or text)")
    p.add_argument("--check", action="store_true",
                   help="warn if the diagram has no conservative numbering")
    p.set_defaults(func=cmd_alexander)

    p = sub.add_parser(
        "ac", help="Alexander numbering report and almost-classical obstruction")
    p.add_argument("input", help="braid/tangle document (path, '-', or text)")
    _add_dim(p)
    p.set_defaults(func=cmd_ac)

    p = sub.add_parser(
        "table", help="batch invariant table for a list of named braid words")
    p.add_argument("list", help="rows of 'name<TAB>braid word' (path, '-', or text)")
    _add_dim(p)
    p.add_argument("--out", help="write the table to a file instead of stdout")
    p.add_argument("--timings", action="store_true",
                   help="fill the elapsed column (off by default: timings "
                        "break byte-for-byte reproducibility)")
    _add_jobs(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser(
        "skein", help="positive/negative/smoothed values at a classical letter")
    p.add_argument("input", help="braid document (path, '-', or text)")
    p.add_argument("--site", type=int, required=True,
                   help="1-based index of a classical letter in the word")
    _add_dim(p)
    _add_jobs(p)
    p.set_defaults(func=cmd_skein)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InternalComputationError as e:
        print("internal consistency failure: %s" % e, file=sys.stderr)
        return 3
    except (TangleError, ValueError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    except OSError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
