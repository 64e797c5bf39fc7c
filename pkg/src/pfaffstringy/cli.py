"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 bad usage or parameters,
3 anything unexpected.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import traceback
from typing import Callable, Optional, Sequence

from . import hpd, pfaffian, qhypergeom, sections
from .errors import ParameterError, SeriesSpecError
from .qalgebra import RatFunc, render
from .report import VerificationReport, merge

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

SUITES = ("lemma", "phi", "abcd", "f", "strata", "rewrite", "cases")

# default grids; every key may be overridden with --grid key=lo..hi
DEFAULT_GRID = {
    "lemma": {"n": (4, 14)},
    "strata": {"n": (4, 14)},
    "f": {"n": (4, 12)},
    "abcd": {"n": (4, 10), "m": (0, 8)},
    "rewrite": {"n": (4, 12)},
    "cases": {"n": (4, 12)},
    "phi": {"id": (1, 4), "n": (0, 8), "exp": (-4, 8)},
}


class UsageError(Exception):
    pass


def _parse_grid(items: Sequence[str]) -> dict[str, tuple[int, int]]:
    out = {}
    for item in items or ():
        key, sep, rng = item.partition("=")
        if not sep or not key:
            raise UsageError(f"bad --grid entry {item!r}, expected key=lo..hi")
        lo, dots, hi = rng.partition("..")
        try:
            bounds = (int(lo), int(hi)) if dots else (int(lo), int(lo))
        except ValueError:
            raise UsageError(f"bad range in --grid entry {item!r}") from None
        if bounds[0] > bounds[1]:
            raise UsageError(f"empty range in --grid entry {item!r}")
        out[key.strip()] = bounds
    return out


def _irange(bounds: tuple[int, int]) -> range:
    return range(bounds[0], bounds[1] + 1)


# ---------------------------------------------------------------------------
# suites


def _suite_lemma(g, jobs):
    reps = []
    for n in _irange(g["n"]):
        if n % 2 == 0:
            reps += [pfaffian.verify_key_lemma(n, k) for k in range(1, (n - 2) // 2 + 1)]
    return reps


def _suite_strata(g, jobs):
    rep = VerificationReport("strata", {"n": list(g["n"])})
    for n in _irange(g["n"]):
        if n % 2 or n < 4:
            continue
        for k in range(1, n // 2 + 1):
            spec = pfaffian.PfaffianSpec(n, k)
            for kind in pfaffian.DiscrepancyKind:
                a = pfaffian.stringy_pf_strata(spec, kind)
                b = pfaffian.stringy_pf_closed(spec, kind)
                ok = a == b
                rep.add({"n": n, "k": k, "kind": kind.value}, "pass" if ok else "fail",
                        None if ok else a, None if ok else b)
    return [rep]


def _cut_specs(g):
    for n in _irange(g["n"]):
        if n % 2 or n < 2:
            continue
        for k in range(1, n // 2 + 1):
            for i in range(1, n // 2 + 1):
                yield n, k, i


def _suite_f(g, jobs):
    rep = VerificationReport("f", {"n": list(g["n"])})
    for n, k, i in _cut_specs(g):
        spec = sections.CutSpec(n, k, i)
        a, b = sections.f_recursive(spec), sections.f_closed(spec)
        ok = a == b
        rep.add({"n": n, "k": k, "i": i, "claim": "recursive"}, "pass" if ok else "fail",
                None if ok else a, None if ok else b)
    reps = [rep]
    reps += [sections.inversion_check(sections.CutSpec(n, k, i)) for n, k, i in _cut_specs(g)]
    return reps


def _suite_abcd(g, jobs):
    reps = [sections.verify_abcd(n, k, i) for n, k, i in _cut_specs(g)]
    m = g.get("m", (0, -1))[1]
    if m >= 0:
        rep = sections.verify_abcd(4, 1, 1, combinatorial_grid=m)
        rep.results = [r for r in rep.results if r.point.get("claim") == "combinatorial"]
        rep.identity = "combinatorial"
        reps.append(rep)
    return reps


def _section_specs(g, even_only=False):
    for n in _irange(g["n"]):
        if n < 4 or (even_only and n % 2):
            continue
        for k in range(1, (n + 1) // 2):
            if not k < n // 2:
                continue
            for l in range(n * (n - 1) // 2 + 1):
                yield hpd.SectionSpec(n, k, l)


def _suite_rewrite(g, jobs):
    rep = VerificationReport("rewrite", {"n": list(g["n"])})
    for spec in _section_specs(g, even_only=True):
        pt = {"n": spec.n, "k": spec.k, "l": spec.l}
        r = hpd.rewritten_identity_check(spec).results[0]
        rep.add({**pt, "claim": "rewrite"}, r.status, r.lhs, r.rhs)
        closed, limit = hpd.euler_gap_paths(spec)
        ok = closed == limit
        rep.add({**pt, "claim": "euler-gap"}, "pass" if ok else "fail",
                None if ok else closed, None if ok else limit)
    return [rep]


def _suite_cases(g, jobs):
    rep = VerificationReport("cases", {"n": list(g["n"])})
    for spec in _section_specs(g):
        r = hpd.case_consistency(spec).results[0]
        rep.add(r.point, r.status, r.lhs, r.rhs)
    return [rep]


def _suite_phi(g, jobs):
    reps = []
    exps = _irange(g["exp"])
    for ident in _irange(g["id"]):
        if ident not in qhypergeom.DEFAULT_GRIDS:
            raise UsageError(f"no identity {ident}")
        grid = {key: (_irange(g["n"]) if key == "n" else exps)
                for key in qhypergeom.DEFAULT_GRIDS[ident]}
        reps.append(qhypergeom.verify_identity(ident, grid, jobs))
    return reps


_SUITE_FN: dict[str, Callable] = {
    "lemma": _suite_lemma,
    "strata": _suite_strata,
    "f": _suite_f,
    "abcd": _suite_abcd,
    "rewrite": _suite_rewrite,
    "cases": _suite_cases,
    "phi": _suite_phi,
}


def run_suite(name: str, overrides: Optional[dict] = None, jobs: int = 1) -> VerificationReport:
    grid = dict(DEFAULT_GRID[name])
    for key, val in (overrides or {}).items():
        if key not in grid:
            raise UsageError(f"suite {name!r} has no grid key {key!r} (known: {', '.join(grid)})")
        grid[key] = val
    reps = _SUITE_FN[name](grid, jobs)
    out = merge(name, reps)
    out.grid = {k: list(v) for k, v in grid.items()}
    return out


# ---------------------------------------------------------------------------
# rendering


def _value(f: RatFunc, fmt: str, display: str = "expanded") -> str:
    return render(f, "latex" if fmt == "latex" else display)


def _emit_record(record: dict, fmt: str) -> str:
    """One flat result: key/value lines, a JSON object, or a CSV row."""
    if fmt == "json":
        return json.dumps(record, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(list(record))
        w.writerow([json.dumps(v) if isinstance(v, (dict, list)) else v for v in record.values()])
        return buf.getvalue().rstrip("\n")
    if fmt == "latex":
        rows = [f"{k} & {v} \\\\" for k, v in record.items()]
        return "\\begin{tabular}{ll}\n" + "\n".join(rows) + "\n\\end{tabular}"
    return "\n".join(f"{k}: {v}" for k, v in record.items())


def _emit_report(rep: VerificationReport, fmt: str) -> str:
    if fmt == "json":
        return rep.to_json(indent=2)
    if fmt == "csv":
        return rep.to_csv().rstrip("\n")
    if fmt == "latex":
        lines = ["\\begin{tabular}{lrrr}", "check & tested & skipped & failed \\\\", "\\hline"]
        for name, sub in _by_check(rep):
            lines.append(f"{name} & {sub.tested} & {sub.skipped} & {sub.failed} \\\\")
        lines.append("\\end{tabular}")
        return "\n".join(lines)
    lines = [sub.summary() for _, sub in _by_check(rep)]
    lines.append(rep.summary())
    return "\n".join(lines)


def _by_check(rep: VerificationReport):
    groups: dict[str, VerificationReport] = {}
    for r in rep.results:
        name = r.point.get("check", rep.identity)
        groups.setdefault(name, VerificationReport(name)).results.append(r)
    return list(groups.items())


# ---------------------------------------------------------------------------
# subcommands


def _cmd_stringy(a) -> tuple[str, int]:
    spec = pfaffian.PfaffianSpec(a.n, a.k)
    fn = pfaffian.stringy_pf_closed if a.method == "closed" else pfaffian.stringy_pf_strata
    f = fn(spec, a.kind)
    rec = {"n": a.n, "k": a.k, "kind": a.kind,
           "value": _value(f, a.format, a.display), "polynomial": f.is_polynomial()}
    if a.format == "text":
        return _value(f, "text", a.display), EXIT_OK
    return _emit_record(rec, a.format), EXIT_OK


def _cmd_cut_f(a):
    spec = sections.CutSpec(a.n, a.k, a.i)
    f = sections.f_closed(spec) if a.method == "closed" else sections.f_recursive(spec)
    if a.format == "text":
        return _value(f, "text", a.display), EXIT_OK
    rec = {"n": a.n, "k": a.k, "i": a.i, "value": _value(f, a.format, a.display)}
    return _emit_record(rec, a.format), EXIT_OK


def _cmd_l_iso(a):
    f = sections.l_iso(a.k, a.i, a.n)
    if a.format == "text":
        return _value(f, "text", a.display), EXIT_OK
    return _emit_record({"n": a.n, "k": a.k, "i": a.i, "value": _value(f, a.format, a.display)},
                        a.format), EXIT_OK


def _cmd_relate(a):
    spec = hpd.SectionSpec(a.n, a.k, a.l)
    rec = {"n": a.n, "k": a.k, "l": a.l,
           "relation_rhs": _value(hpd.relation_rhs(spec), a.format, a.display),
           "euler_gap": hpd.euler_gap(spec)}
    types = hpd.classify_types(spec)
    rec["type_X"], rec["type_Y"] = types["X"], types["Y"]
    dims = hpd.section_dims(spec)
    rec["dim_X"], rec["dim_Y"] = dims["X"], dims["Y"]
    return _emit_record(rec, a.format), EXIT_OK


def _cmd_sod(a):
    spec = hpd.SectionSpec(a.n, a.k, a.l)
    pred = hpd.sod_predict(spec, a.side)
    if a.format == "json":
        return json.dumps({"n": a.n, "k": a.k, "l": a.l, **pred.to_dict()}, indent=2), EXIT_OK
    rows = [g.to_dict() for g in pred.block_groups]
    if a.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["count", "size", "first_twist", "last_twist"])
        w.writerows([r["count"], r["size"], r["first_twist"], r["last_twist"]] for r in rows)
        return buf.getvalue().rstrip("\n"), EXIT_OK
    if a.format == "latex":
        lines = ["\\begin{tabular}{rrrr}", "count & size & first twist & last twist \\\\", "\\hline"]
        lines += [f"{r['count']} & {r['size']} & {r['first_twist']} & {r['last_twist']} \\\\" for r in rows]
        lines.append("\\end{tabular}")
        return "\n".join(lines), EXIT_OK
    lines = [f"{pred.side}: {pred.total_blocks} blocks, residual {pred.residual}"]
    lines += [f"  {r['count']} x size {r['size']}, twists {r['first_twist']}..{r['last_twist']}"
              for r in rows]
    return "\n".join(lines), EXIT_OK


def _cmd_verify(a):
    overrides = _parse_grid(a.grid)
    names = SUITES if a.suite == "all" else (a.suite,)
    if a.suite == "all" and overrides:
        # apply each override only where the suite knows the key
        reps = [run_suite(s, {k: v for k, v in overrides.items() if k in DEFAULT_GRID[s]}, a.jobs)
                for s in names]
    else:
        reps = [run_suite(s, overrides, a.jobs) for s in names]
    rep = reps[0] if len(reps) == 1 else merge("all", reps)
    text = _emit_report(rep, a.format)
    if not rep.passed and a.format != "json":
        sys.stderr.write(json.dumps(rep.to_dict(), indent=2) + "\n")
    return text, EXIT_OK if rep.passed else EXIT_FAIL


def _cmd_figure_check(a):
    # X_W is the K3 surface, Y_W the cubic fourfold
    spec = hpd.SectionSpec(6, 1, 6)
    ok = hpd.relation_check(hpd.K3_E, hpd.CUBIC4_E, spec)
    if a.format == "text":
        lines = ["1+q+23q^2+q^3+q^4 = q*(1+22q+q^2) + 1+q^2+q^4",
                 f"relation (n,k,l)=(6,1,6): {'holds' if ok else 'FAILS'}"]
        return "\n".join(lines), EXIT_OK if ok else EXIT_FAIL
    rec = {"n": 6, "k": 1, "l": 6, "E_X": _value(hpd.K3_E, a.format, a.display),
           "E_Y": _value(hpd.CUBIC4_E, a.format, a.display), "holds": ok}
    return _emit_record(rec, a.format), EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv", "latex"), default="text")
    common.add_argument("--display", choices=("expanded", "factored"), default="expanded",
                        help="how text and json show rational functions")
    common.add_argument("--output", "-o", help="write here instead of stdout")
    common.add_argument("--jobs", "-j", type=int, default=1, help="worker processes for grids")

    p = argparse.ArgumentParser(prog="pfaffstringy", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("stringy", parents=[common], help="stringy E-function of Pf(2k, n)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--kind", choices=("usual", "modified"), default="modified")
    s.add_argument("--method", choices=("closed", "strata"), default="closed")
    s.set_defaults(fn=_cmd_stringy)

    s = sub.add_parser("cut-f", parents=[common], help="E-function of a hyperplane cut")
    for name in ("n", "k", "i"):
        s.add_argument(f"--{name}", type=int, required=True)
    s.add_argument("--method", choices=("closed", "recursive"), default="closed")
    s.set_defaults(fn=_cmd_cut_f)

    s = sub.add_parser("l-iso", parents=[common], help="isotropic subspace count")
    for name in ("n", "k", "i"):
        s.add_argument(f"--{name}", type=int, required=True)
    s.set_defaults(fn=_cmd_l_iso)

    s = sub.add_parser("relate", parents=[common], help="relation between the double mirrors")
    for name in ("n", "k", "l"):
        s.add_argument(f"--{name}", type=int, required=True)
    s.set_defaults(fn=_cmd_relate)

    s = sub.add_parser("sod", parents=[common], help="predicted ambient blocks")
    for name in ("n", "k", "l"):
        s.add_argument(f"--{name}", type=int, required=True)
    s.add_argument("--side", choices=("X", "Y"), required=True)
    s.set_defaults(fn=_cmd_sod)

    s = sub.add_parser("verify", parents=[common], help="run identity suites")
    s.add_argument("--suite", choices=SUITES + ("all",), default="all")
    s.add_argument("--grid", action="append", default=[], metavar="KEY=LO..HI")
    s.set_defaults(fn=_cmd_verify)

    s = sub.add_parser("figure-check", parents=[common], help="the K3 / cubic fourfold instance")
    s.set_defaults(fn=_cmd_figure_check)
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    try:
        if args.jobs < 1:
            raise UsageError("--jobs must be positive")
        text, code = args.fn(args)
    except (UsageError, ParameterError, SeriesSpecError) as e:
        sys.stderr.write(f"pfaffstringy: error: {e}\n")
        return EXIT_USAGE
    except Exception:
        traceback.print_exc()
        return EXIT_INTERNAL
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
