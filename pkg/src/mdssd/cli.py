"""Command-line front end: ``mdssd {enumerate,build,verify,selftest}``.

Exit status: 0 pass, 1 verification failure, 2 usage or parameter error,
3 I/O or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import matfile
from .evalsets import (FAMILIES, TRACE_THEOREMS, ParameterError, WORKED_EXAMPLES, check_example,
                       enumerate_lengths)
from .gf import FieldError, ctx_for_q
from .grscodes import ConstructionError, build_code, theorem_number
from .verify import DEFAULT_CAP, DEFAULT_SAMPLES, DEFAULT_SEED, is_mds, is_self_dual

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(args, payload, text_lines):
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


# -- enumerate ------------------------------------------------------------------

def cmd_enumerate(args) -> int:
    th = theorem_number(args.theorem)
    rows = enumerate_lengths(args.q, th, s=args.s, t=args.t)
    text = [f"# q={args.q} thm{th}: {len(rows)} rows",
            f"{'s':>4} {'t':>4} {'n':>6} {'N':>6} {'variant':>7} {'conds':>5}  note"]
    for r in rows:
        flag = "FLAGGED " if r.flagged else ""
        text.append(f"{r.s:>4} {r.t:>4} {r.n:>6} {r.length:>6} {r.variant:>7} "
                    f"{'ok' if r.conditions_ok else 'FAIL':>5}  {flag}{r.note}".rstrip())
    _emit(args, {"q": args.q, "theorem": th, "rows": [r.as_dict() for r in rows]}, text)
    return EXIT_OK


# -- build / verify ---------------------------------------------------------------

def verify_matrix(ctx, mf, cap, samples, seed) -> dict:
    """Self-duality, rank, GRS shape and MDS verdicts for a parsed matrix file."""
    sd = is_self_dual(ctx, mf.rows)
    shape = matfile.structure_problems(ctx, mf)
    out = {"self_dual": sd.as_dict(), "structure": shape, "k": mf.k, "n": mf.ncols}
    if sd.rank == mf.k:
        out["mds"] = is_mds(ctx, mf.rows, cap, samples, seed).as_dict()
    else:
        out["mds"] = {"mds": False, "mode": "skipped",
                      "reason": f"rank {sd.rank} < k={mf.k}"}
    out["pass"] = sd.ok and not shape and out["mds"]["mds"]
    out["self_dual_message"] = sd.message()
    return out


def _report_lines(rep: dict) -> list[str]:
    sd, mds = rep["self_dual"], rep["mds"]
    lines = [f"length {rep['n']}, dimension {rep['k']}, rank {sd['rank']}",
             rep["self_dual_message"]]
    lines += [f"structure: {p}" for p in rep["structure"]] or ["structure: GRS shape ok"]
    if mds["mode"] == "skipped":
        lines.append(f"mds: skipped ({mds['reason']})")
    else:
        lines.append(f"mds: {'pass' if mds['mds'] else 'FAIL'} ({mds['mode']}, "
                     f"{mds['checked']} subsets, {mds['failure_count']} singular, cap {mds['cap']}"
                     + (f", seed {mds['seed']}" if mds["seed"] is not None else "") + ")")
        for f in mds["failures"][:5]:
            lines.append(f"  singular columns {f}")
    lines.append("PASS" if rep["pass"] else "FAIL")
    return lines


def cmd_build(args) -> int:
    ctx = ctx_for_q(args.q)
    code = build_code(ctx, args.theorem, s=args.s, t=args.t, variant=args.variant,
                      mu=args.mu, nu=args.nu, force=args.force)
    mf = matfile.MatrixFile.from_code(code)
    rep = verify_matrix(ctx, mf, args.mds_cap, args.samples, args.seed)
    rep["provenance"] = code.evalset.provenance
    if rep["pass"]:
        matfile.write(args.out, mf)
        rep["written"] = args.out
    text = [f"{code.evalset.provenance}: {mf.k}x{mf.ncols} over GF({args.q})"]
    text += _report_lines(rep)
    text.append(f"wrote {args.out}" if rep["pass"] else "not written")
    _emit(args, rep, text)
    return EXIT_OK if rep["pass"] else EXIT_FAIL


def cmd_verify(args) -> int:
    mf = matfile.read(args.path)
    ctx = mf.field()
    rep = verify_matrix(ctx, mf, args.mds_cap, args.samples, args.seed)
    _emit(args, rep, [f"{args.path}: GF({mf.q})"] + _report_lines(rep))
    return EXIT_OK if rep["pass"] else EXIT_FAIL


# -- selftest ------------------------------------------------------------------------

def selftest_instances(q: int) -> list[tuple[int, int, int, str]]:
    """Consistent worked examples at q plus the shortest valid instance per family variant."""
    out = []
    for ex in WORKED_EXAMPLES:
        if ex.q == q and check_example(ex).consistent:
            out.append((ex.theorem, ex.s, ex.t, ex.variant))
    for th in (*TRACE_THEOREMS, *FAMILIES):
        try:
            rows = enumerate_lengths(q, th)
        except ParameterError:
            continue
        best: dict[str, tuple] = {}
        for r in rows:
            if r.flagged or not r.conditions_ok or r.length < 2:
                continue
            if r.variant not in best or r.length < best[r.variant][0]:
                best[r.variant] = (r.length, r.s, r.t)
        for variant, (_, s, t) in sorted(best.items()):
            out.append((th, s, t, variant))
    return list(dict.fromkeys(out))


def run_selftest(q: int, cap: int, samples: int, seed: int) -> list[dict]:
    from .verify.oracles import MAX_EXHAUSTIVE_Q, oracle_suite

    ctx = ctx_for_q(q)
    items = []
    if q <= MAX_EXHAUSTIVE_Q:
        for it in oracle_suite(ctx).items:
            items.append({"item": f"oracle: {it.name}", "ok": it.ok, "detail": it.detail})
    for th, s, t, variant in selftest_instances(q):
        name = f"build thm{th} {variant} s={s} t={t}"
        try:
            code = build_code(ctx, th, s=s, t=t, variant=None if th in TRACE_THEOREMS else variant)
        except (ParameterError, ConstructionError) as exc:
            items.append({"item": name, "ok": False, "detail": str(exc)})
            continue
        mds = is_mds(ctx, code.matrix, cap, samples, seed)
        items.append({"item": name, "ok": code.selfdual.ok and mds.ok,
                      "detail": f"N={code.length} self-dual, mds {mds.mode} "
                                f"{mds.checked} subsets, {mds.failure_count} singular"})
    return items


def cmd_selftest(args) -> int:
    qs = args.q_list or [9, 49]
    results = {q: run_selftest(q, args.mds_cap, args.samples, args.seed) for q in qs}
    text = []
    for q, items in results.items():
        text.append(f"# q={q}")
        for it in items:
            text.append(f"{'pass' if it['ok'] else 'FAIL':4}  {it['item']}: {it['detail']}")
    ok = all(it["ok"] for items in results.values() for it in items)
    text.append("ALL PASS" if ok else "FAILURES")
    _emit(args, {"ok": ok, "results": {str(q): v for q, v in results.items()}}, text)
    return EXIT_OK if ok else EXIT_FAIL


# -- argument parsing ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="mdssd", description="MDS Euclidean self-dual codes from GRS constructions")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def verify_opts(p):
        p.add_argument("--mds-cap", type=int, default=DEFAULT_CAP,
                       help="exhaustive MDS check when C(N,k) is at most this")
        p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES,
                       help="sampled column subsets beyond the cap")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("enumerate", help="list achievable lengths for one theorem")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--theorem", required=True, help="thm1..thm16 or 1..16")
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("build", help="construct, verify and write a generator matrix")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--theorem", required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--variant", choices=["n", "n1", "n2"])
    p.add_argument("--mu", type=int, help="subgroup index for thm5..thm7")
    p.add_argument("--nu", type=int, help="subgroup index for thm5..thm7")
    p.add_argument("--out", required=True)
    p.add_argument("--force", action="store_true",
                   help="build even when the hypotheses fail (verification still applies)")
    verify_opts(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="check a matrix file")
    p.add_argument("path")
    verify_opts(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("selftest", help="oracles and sample builds at each q")
    p.add_argument("q_list", nargs="*", type=int, metavar="q")
    verify_opts(p)
    p.set_defaults(func=cmd_selftest)
    return ap


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # --help or a usage error
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except matfile.MatrixFileError as exc:
        print(f"mdssd: parse error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"mdssd: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ConstructionError as exc:
        print(f"mdssd: construction failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (ParameterError, FieldError, ValueError) as exc:
        print(f"mdssd: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
