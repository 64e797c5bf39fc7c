"""The nine acceptance criteria, one test each.

Each test prints a single ``[PASS]``/``[FAIL]`` line (visible under
``pytest -v``) and then asserts.  Running this file directly prints the
nine lines without pytest.
"""
from __future__ import annotations

import io
import sys
import time
from contextlib import redirect_stdout

import pytest

import oracles
from pfaffstringy import cli, hpd, pfaffian, qhypergeom, sections
from pfaffstringy.qalgebra import LaurentPoly, RatFunc, parse
from pfaffstringy.qseries import e_strata_pf


def _q(e):
    return LaurentPoly.monomial(e)


def crit1():
    bad = []
    for n in range(4, 15, 2):
        for k in range(1, n // 2 + 1):
            spec = pfaffian.PfaffianSpec(n, k)
            for kind in pfaffian.DiscrepancyKind:
                if pfaffian.stringy_pf_strata(spec, kind) != pfaffian.stringy_pf_closed(spec, kind):
                    bad.append((n, k, kind.value))
    return not bad, f"mismatches={bad}", 10


def crit2():
    bad = [(n, k) for n in range(4, 15, 2) for k in range(1, (n - 2) // 2 + 1)
           if not pfaffian.verify_key_lemma(n, k).passed]
    return not bad, f"failures={bad}", 10


def crit3():
    want = RatFunc((_q(12) - 1) * (_q(3) - 1) * (_q(5) - 1),
                   (_q(1) - 1) * (_q(2) - 1) * (_q(4) - 1))
    shown = {}
    for display in ("expanded", "factored"):
        buf = io.StringIO()
        with redirect_stdout(buf):
            code = cli.run(["stringy", "--n", "6", "--k", "2", "--kind", "usual", "--display", display])
        shown[display] = (code, buf.getvalue().strip())
    ok = all(code == 0 and parse(text) == want for code, text in shown.values())
    ok = ok and shown["factored"][1] == "(q^3 - 1)*(q^5 - 1)*(q^12 - 1) / ((q - 1)*(q^2 - 1)*(q^4 - 1))"
    got = parse(shown["expanded"][1])
    modified = pfaffian.stringy_pf_closed(pfaffian.PfaffianSpec(6, 2), "modified")
    ok = ok and not got.is_polynomial() and modified.is_polynomial()
    return ok, f"usual={shown['factored'][1]} modified polynomial={modified.is_polynomial()}", None


def crit4():
    bad = []
    for n in range(4, 13, 2):
        for k in range(1, n // 2 + 1):
            for i in range(1, n // 2 + 1):
                spec = sections.CutSpec(n, k, i)
                if sections.f_recursive(spec) != sections.f_closed(spec):
                    bad.append(("f", n, k, i))
                if not sections.inversion_check(spec).passed:
                    bad.append(("inversion", n, k, i))
                if n <= 10 and not sections.verify_abcd(n, k, i).passed:
                    bad.append(("abcd", n, k, i))
    return not bad, f"failures={bad}", 60


def crit5():
    bad = []
    checked = 0
    for q in (2, 3):
        for n in range(2, 7):
            for i in range(1, n // 2 + 1):
                checked += 1
                if e_strata_pf(i, n)(q) != oracles.projective_rank_count(i, n, q):
                    bad.append(("strata", q, n, i))
                for k in range(0, n // 2 + 1):
                    checked += 1
                    if sections.l_iso(k, i, n)(q) != oracles.isotropic_count(2 * k, i, n, q):
                        bad.append(("l_iso", q, n, k, i))
    return not bad, f"checked={checked} failures={bad}", 30


def crit6():
    reps = [qhypergeom.verify_identity(i) for i in (1, 2, 3, 4)]
    tested = sum(r.tested for r in reps)
    skipped = sum(r.skipped for r in reps)
    failed = sum(r.failed for r in reps)
    return failed == 0, f"tested={tested} skipped={skipped} failed={failed}", 60


def crit7():
    ok = hpd.relation_check(hpd.K3_E, hpd.CUBIC4_E, hpd.SectionSpec(6, 1, 6))
    return ok, "E(K3)=1+22q+q^2, E(cubic)=1+q+23q^2+q^3+q^4 at (6,1,6)", None


def crit8():
    bad = []
    for n in range(4, 13):
        for k in range(1, n // 2):
            for l in range(n * (n - 1) // 2 + 1):
                spec = hpd.SectionSpec(n, k, l)
                if n % 2 == 0:
                    if not hpd.rewritten_identity_check(spec).passed:
                        bad.append(("rewrite", n, k, l))
                    closed, limit = hpd.euler_gap_paths(spec)
                    if closed != limit:
                        bad.append(("gap", n, k, l))
                if (n % 2 == 0 or n in (5, 7, 9)) and not hpd.case_consistency(spec).passed:
                    bad.append(("cases", n, k, l))
    return not bad, f"failures={bad}", 60


def crit9():
    bad = []
    for n in range(4, 13):
        for k in range(1, n // 2):
            twist = (n - 1) * k if n % 2 == 0 else n * k
            for l in range(n * (n - 1) // 2 + 1):
                zero = hpd.relation_rhs(hpd.SectionSpec(n, k, l)) == RatFunc(0)
                if zero != (l == twist):
                    bad.append((n, k, l))
    spec = hpd.SectionSpec(6, 1, 6)
    perturbed = [hpd.relation_check(hpd.K3_E, hpd.CUBIC4_E + 1, spec),
                 hpd.relation_check(hpd.K3_E + 1, hpd.CUBIC4_E, spec),
                 hpd.relation_check(hpd.K3_E, hpd.CUBIC4_E, hpd.SectionSpec(6, 1, 7))]
    ok = not bad and not any(perturbed)
    return ok, f"zero-set mismatches={bad} perturbed accepted={sum(perturbed)}", None


CRITERIA = [
    (1, "closed form = strata recursion, both kinds, even n <= 14", crit1),
    (2, "key lemma, even n <= 14", crit2),
    (3, "usual (6,2) display reproduced and non-polynomial; modified polynomial", crit3),
    (4, "f recursive = closed, inversion, A=C and B=D", crit4),
    (5, "finite-field enumeration over F_2, F_3, n <= 6", crit5),
    (6, "basic hypergeometric identities 1-4 on the full grid", crit6),
    (7, "K3 / cubic fourfold relation", crit7),
    (8, "rewritten identity, Euler gap paths, case consistency", crit8),
    (9, "relation vanishes exactly at the twist; perturbations rejected", crit9),
]


def evaluate(num, title, fn):
    t = time.perf_counter()
    ok, detail, budget = fn()
    dt = time.perf_counter() - t
    within = budget is None or dt < budget
    limit = "" if budget is None else f" (limit {budget}s)"
    line = (f"[{'PASS' if ok and within else 'FAIL'}] criterion {num}: {title}; "
            f"{detail}; {dt:.2f}s{limit}")
    return ok and within, line


@pytest.mark.parametrize("num,title,fn", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(num, title, fn, capsys):
    ok, line = evaluate(num, title, fn)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
