"""Command-line front end.

    twistjac dual "{[-3/2..3/2]}" --explain
    twistjac tjm --n 2 --r 2 "St(2,nu) x St(2,nu^-1)"
    twistjac tjm-table xi --json
    twistjac conjecture --n 2 "L{[1/2..3/2],[-3/2..-1/2]}"
    twistjac cosets --n 2 --r 2 --matrices
    twistjac oracle tjm-dim --n 2 --r 2 --p 2 --levi st,1

Exit status: 0 on success, 1 when a computed verdict disagrees with the
reference data it is checked against, 2 on a usage or parse error.
Expression arguments may be '-' (or omitted) to read one expression per line
from stdin.
"""

import argparse
import json
import sys

from . import doublecosets, ff_oracle, jacquet, lfun
from .parse import ParseError, parse_expr, parse_multisegment, parse_segment
from .reps import Product, gl_rank, is_irreducible, langlands_data
from .segments import juxtaposed, linked, precedes, union_intersect
from .zelevinsky import mw_dual, mw_dual_explain

MW = "Moeglin-Waldspurger algorithm"
CONJ = "adjoint L-function pole criterion (conjecture; a prediction, not a theorem)"


def _inputs(value):
    if value in (None, "-"):
        lines = [ln.strip() for ln in sys.stdin if ln.strip() and not ln.lstrip().startswith("#")]
        if not lines:
            raise ValueError("no input on stdin")
        return lines
    return [value]


# ------------------------------------------------------------ report builders

def _dual_report(text, explain):
    m = parse_multisegment(text)
    if explain:
        res, trace = mw_dual_explain(m)
    else:
        res, trace = mw_dual(m), None
    out = {"input": str(m), "dual": str(res), "segments": [str(s) for s in res], "theorem": MW}
    if trace is not None:
        out["trace"] = trace.lines()
    return out


def _linked_report(a, b):
    s, t = parse_segment(a), parse_segment(b)
    out = {"input": [str(s), str(t)], "linked": linked(s, t), "juxtaposed": juxtaposed(s, t),
           "precedes": precedes(s, t) or precedes(t, s)}
    if out["linked"]:
        u, i = union_intersect(s, t)
        out["union"] = str(u)
        out["intersection"] = None if i is None else str(i)
    return out


def _irred_report(text):
    e = parse_expr(text)
    v = is_irreducible(e)
    out = {"input": str(e), "rank": gl_rank(e),
           "irreducible": {True: "yes", False: "no", None: "unknown"}[v],
           "theorem": "a product of segment representations is irreducible iff no two segments are linked; "
                      "L(D) x Z(D') reduces iff D, D' are juxtaposed"}
    if v is True:
        out["langlands"] = jacquet.langlands_label(langlands_data(e))
    return out


def _factor_dict(f):
    return {"k": f.k, "parabolic": list(f.parabolic),
            "left": {"shape": str(f.left.shape), "result": str(f.left.resolved), "reason": f.left.resolved.reason},
            "right": {"shape": str(f.right.shape), "result": str(f.right.resolved),
                      "reason": f.right.resolved.reason},
            "twists": {src: {b: str(x) for b, x in sorted(tw.items())} for src, tw in f.twists.items()},
            "net_twist": {b: str(x) for b, x in sorted(f.net().items())},
            "status": f.status, "module": None if f.module is None else str(f.module)}


def _verdict_dict(v):
    return {"status": v.status, "theorem": v.theorem,
            "module": None if v.resolved_module is None else str(v.resolved_module),
            "shalika": v.shalika, "notes": list(v.notes),
            "factors": [_factor_dict(f) for f in v.factors]}


def _tjm_report(text, n, r):
    e = parse_expr(text)
    if gl_rank(e) != 2 * n:
        raise ValueError(f"{e} has rank {gl_rank(e)}, expected 2n = {2 * n}")
    if r is None and isinstance(e, Product):
        # default cut: after the first factor
        r = gl_rank(e.factors[0])
    if r is None:
        v = jacquet.tjm_irreducible(e, n)
    else:
        v = jacquet.tjm_product(e, n, r)
    out = {"input": str(e), "n": n, "r": r}
    out.update(_verdict_dict(v))
    return out


def _table_report(name):
    rows = jacquet.analyze_preset(name)
    bad = jacquet.table_mismatches(name, rows)
    return {"table": name, "rows": [r.as_dict() for r in rows],
            "mismatches": [{"name": k, "expected": w, "got": g} for k, w, g in bad]}


def _conjecture_report(text, n):
    e = parse_expr(text)
    c = lfun.conjecture_check(e, n)
    return {"input": str(e), "n": n, "parameter": str(c.param),
            "profile": [[s, c.profile.order(s)] for s in range(1, n + 1)],
            "required": [[s, o] for s, o in c.required().items()],
            "half_integer_poles": [str(h) for h in c.profile.half_poles],
            "predicted_tjm_zero": c.predicted_tjm_zero,
            "status": "zero" if c.predicted_tjm_zero else "nonzero",
            "kind": c.kind, "theorem": CONJ}


def _cosets_report(n, r, matrices):
    reps = doublecosets.representatives(n, r)
    out = {"n": n, "r": r, "count": len(reps), "formula_count": doublecosets.index_count(n, r),
           "theorem": "complete set of representatives w_(k,l) for S_psi \\ G_2n / P_(r,2n-r)",
           "representatives": []}
    for idx in reps:
        item = {"k": idx.k, "l": idx.l, "compose_check": doublecosets.compose_check(n, r, idx.k, idx.l)}
        if matrices:
            w = doublecosets.w_matrix(idx)
            item["one_line"] = w.one_line()
            item["rows"] = w.as_rows()
        out["representatives"].append(item)
    return out


def _parse_levi(text, n, r):
    parts = [t.strip() for t in text.split(",")]
    if len(parts) != 2:
        raise ValueError("--levi takes two blocks, e.g. 1,1 or st,1")
    return ff_oracle.parse_block(parts[0], r), ff_oracle.parse_block(parts[1], 2 * n - r)


def _oracle_dim_report(n, r, p, levi):
    rho1, rho2 = _parse_levi(levi, n, r)
    terms = []
    brute = ff_oracle.tjm_dim_bruteforce(n, r, rho1, rho2, p)
    formula = ff_oracle.tjm_dim_formula(n, r, rho1, rho2, p, terms)
    return {"n": n, "r": r, "p": p, "levi": levi, "oracle": brute, "formula": formula,
            "terms": [{"k": t.k, "index": t.index, "left": t.left, "right": t.right} for t in terms],
            "agree": brute == formula,
            "theorem": "finite-field direct sum over k of induced block modules"}


def _oracle_cosets_report(n, r, p):
    part = ff_oracle.double_coset_partition(n, r, p)
    return {"n": n, "r": r, "p": p, "count": part.count, "cell_sizes": part.cells,
            "total": sum(part.cells),
            "representative_cells": [[k, l, c] for (k, l), c in sorted(part.rep_cells.items())],
            "expected_count": doublecosets.index_count(n, r),
            "theorem": "complete set of representatives w_(k,l) for S_psi \\ G_2n / P_(r,2n-r)"}


# ------------------------------------------------------------ text rendering

def _render(cmd, rep):
    if cmd == "dual":
        out = [f"{rep['input']}^t = {rep['dual']}  [{rep['theorem']}]"]
        out.extend("  " + ln for ln in rep.get("trace", []))
        return out
    if cmd == "linked":
        out = [f"{rep['input'][0]} and {rep['input'][1]}: linked={rep['linked']} "
               f"juxtaposed={rep['juxtaposed']} precedes={rep['precedes']}"]
        if rep["linked"]:
            out.append(f"  union {rep['union']}, intersection {rep['intersection'] or 'empty'}")
        return out
    if cmd == "product-irred":
        out = [f"{rep['input']}: irreducible {rep['irreducible']}  [{rep['theorem']}]"]
        if "langlands" in rep:
            out.append(f"  = {rep['langlands']}")
        return out
    if cmd == "tjm":
        out = [f"{rep['input']} (n={rep['n']}, r={rep['r']})",
               f"status: {rep['status']}  [{rep['theorem']}]"]
        for f in rep["factors"]:
            tw = ", ".join(f"{b}:{x}" for b, x in f["net_twist"].items())
            out.append(f"  k={f['k']} P{tuple(f['parabolic'])}: left {f['left']['result']}, "
                       f"right {f['right']['result']}; twist {tw} -> {f['status']}"
                       + (f"; module {f['module']}" if f["module"] else ""))
        if rep["module"]:
            out.append(f"  module: {rep['module']}")
        out.extend("  note: " + s for s in rep["notes"])
        return out
    if cmd == "tjm-table":
        out = [f"{'subquotient':<28} {'Langlands quotient':<48} verdict"]
        for r in rep["rows"]:
            out.append(f"{r['name']:<28} {r['langlands']:<48} {r['status']}")
            if r["module"]:
                out.append(f"{'':<28} module: {r['module']}")
            out.append(f"{'':<28} by: {r['theorem']}")
        for m in rep["mismatches"]:
            out.append(f"MISMATCH {m['name']}: expected {m['expected']}, got {m['got']}")
        return out
    if cmd == "conjecture":
        prof = ", ".join(f"s={s}: {o}" for s, o in rep["profile"])
        req = ", ".join(f"s={s}: >={o}" for s, o in rep["required"])
        out = [f"{rep['input']} (n={rep['n']})",
               f"  parameter: {rep['parameter']}",
               f"  pole orders: {prof}",
               f"  required:    {req}",
               f"  predicted module: {rep['status']} ({rep['kind']})  [{rep['theorem']}]"]
        if rep["half_integer_poles"]:
            out.append("  half-integer poles (ignored): " + ", ".join(rep["half_integer_poles"]))
        return out
    if cmd == "cosets":
        out = [f"n={rep['n']} r={rep['r']}: {rep['count']} representatives"]
        for it in rep["representatives"]:
            line = f"  w_({it['k']},{it['l']})  compose_check={it['compose_check']}"
            if "one_line" in it:
                line += f"  {it['one_line']}"
            out.append(line)
        return out
    if cmd == "oracle tjm-dim":
        out = [f"n={rep['n']} r={rep['r']} p={rep['p']} levi={rep['levi']}: "
               f"brute force {rep['oracle']}, formula {rep['formula']}"]
        out.extend(f"  k={t['k']}: {t['index']} x {t['left']} x {t['right']}" for t in rep["terms"])
        return out
    if cmd == "oracle cosets":
        out = [f"GL_{2 * rep['n']}(F_{rep['p']}), r={rep['r']}: {rep['count']} cells "
               f"(expected {rep['expected_count']}), {rep['total']} elements"]
        out.extend(f"  w_({k},{l}) in cell {c} of size {rep['cell_sizes'][c]}"
                   for k, l, c in rep["representative_cells"])
        return out
    return [json.dumps(rep)]


# ------------------------------------------------------------ argument parsing

def build_parser():
    ap = argparse.ArgumentParser(prog="twistjac", description="Twisted Jacquet modules of GL_2n principal series.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def add(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    p = add("dual", "Zelevinsky involution m -> m^t")
    p.add_argument("multisegment", nargs="?", help="e.g. '{[-3/2..3/2]}'; '-' reads stdin")
    p.add_argument("--explain", action="store_true", help="show each extraction pass")

    p = add("linked", "linkage of two segments")
    p.add_argument("a")
    p.add_argument("b")

    p = add("product-irred", "irreducibility of a product expression")
    p.add_argument("expr", nargs="?")

    p = add("tjm", "twisted Jacquet module verdict")
    p.add_argument("expr", nargs="?")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, help="rank of the first block of the product")

    p = add("tjm-table", "reproduce the G_4 tables")
    p.add_argument("preset", choices=sorted(jacquet.PRESETS))

    p = add("conjecture", "adjoint L-function pole profile and vanishing prediction")
    p.add_argument("expr", nargs="?")
    p.add_argument("--n", type=int, required=True)

    p = add("cosets", "double coset representatives w_(k,l)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--matrices", action="store_true")

    p = add("oracle", "finite-field brute-force checks")
    osub = p.add_subparsers(dest="what", required=True)
    q = osub.add_parser("tjm-dim")
    q.add_argument("--n", type=int, default=2)
    q.add_argument("--r", type=int, required=True)
    q.add_argument("--p", type=int, default=2)
    q.add_argument("--levi", default="1,1", help="blocks of the inducing data: 1, sgn, st, st*sgn")
    q.add_argument("--json", action="store_true")
    q = osub.add_parser("cosets")
    q.add_argument("--n", type=int, default=2)
    q.add_argument("--r", type=int, required=True)
    q.add_argument("--p", type=int, default=2)
    q.add_argument("--json", action="store_true")
    return ap


def run(args):
    """Return (command name, list of reports, failed flag)."""
    cmd = args.cmd
    if cmd == "dual":
        reps = [_dual_report(t, args.explain) for t in _inputs(args.multisegment)]
    elif cmd == "linked":
        reps = [_linked_report(args.a, args.b)]
    elif cmd == "product-irred":
        reps = [_irred_report(t) for t in _inputs(args.expr)]
    elif cmd == "tjm":
        reps = [_tjm_report(t, args.n, args.r) for t in _inputs(args.expr)]
    elif cmd == "tjm-table":
        reps = [_table_report(args.preset)]
    elif cmd == "conjecture":
        reps = [_conjecture_report(t, args.n) for t in _inputs(args.expr)]
    elif cmd == "cosets":
        reps = [_cosets_report(args.n, args.r, args.matrices)]
    elif cmd == "oracle":
        cmd = "oracle " + args.what
        if args.what == "tjm-dim":
            reps = [_oracle_dim_report(args.n, args.r, args.p, args.levi)]
        else:
            reps = [_oracle_cosets_report(args.n, args.r, args.p)]
    else:
        raise ValueError(f"unknown command {cmd}")
    failed = any(r.get("mismatches") or r.get("agree") is False
                 or (r.get("count") is not None and r.get("expected_count") not in (None, r["count"]))
                 or any(x.get("compose_check") is False for x in r.get("representatives", []))
                 for r in reps)
    return cmd, reps, failed


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        cmd, reps, failed = run(args)
    except (ParseError, ValueError, TypeError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 2
    except (AssertionError, ArithmeticError) as ex:
        print(f"verdict failure: {ex}", file=sys.stderr)
        return 1
    if args.json:
        payload = {"command": cmd, "results": reps}
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        for i, rep in enumerate(reps):
            if i:
                print()
            print("\n".join(_render(cmd, rep)))
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
