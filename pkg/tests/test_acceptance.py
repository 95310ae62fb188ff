"""Acceptance criteria 1-6.

Each test prints one ``criterion N: PASS|FAIL ...`` line and asserts the
criterion at its stated tolerance.  Items that cannot be met are reported and
asserted, never skipped, so a red criterion here is a finding.
"""

from __future__ import annotations

import dataclasses
import random
import time
from functools import cache

import numpy as np

from mdssd.evalsets import (TRACE_THEOREMS, ParameterError, build_symdiff_trace_subspace,
                            build_union_trace_subspace, enumerate_lengths)
from mdssd.gf import ctx_for_q
from mdssd.grscodes import (ConstructionError, build_code, coefficient_vector, generator_matrix)
from mdssd.verify import is_mds, is_self_dual
from mdssd.verify.oracles import (OracleScope, lemma5_on_set, lemma6_mismatches, oracle_delta,
                                  oracle_eta, random_trace_params)


def report(capsys, n: int, ok: bool, detail: str) -> None:
    with capsys.disabled():
        print(f"\ncriterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")


# -- criterion 1: worked-example lengths ----------------------------------------------------

REQUIRED_LENGTHS = [
    (625, 1, (110,)), (729, 2, (268,)), (529, 3, (128,)), (729, 4, (160,)),
    (361, 8, (124, 126)), (121, 9, (66, 58)), (729, 10, (116, 118)),
    (361, 11, (88, 112, 106)), (961, 12, (198, 174)), (961, 13, (526,)),
    (529, 14, (102, 76, 104)), (729, 15, (76, 94)),
]
# (q, theorem, quoted n, quoted N) of the two examples that must come out flagged
MUST_FLAG = [(729, 15, 66, 68), (529, 16, 376, 376)]


def test_criterion_1_length_regression(capsys):
    t0 = time.perf_counter()
    missing, flagged_ok = [], []
    for q, th, lengths in REQUIRED_LENGTHS:
        rows = enumerate_lengths(q, th)
        have = {r.length for r in rows if not r.flagged}
        missing += [f"q={q} thm{th} N={L}" for L in lengths if L not in have]
    for q, th, n, N in MUST_FLAG:
        rows = enumerate_lengths(q, th)
        hit = [r for r in rows if r.flagged and r.n == n and r.length == N]
        flagged_ok.append(bool(hit))
        # a flagged example must not also be matched by an unflagged row
        if any(not r.flagged and r.length == N and (r.s, r.t) == (hit[0].s, hit[0].t)
               for r in rows if hit):
            flagged_ok[-1] = False
    elapsed = time.perf_counter() - t0
    total = sum(len(x[2]) for x in REQUIRED_LENGTHS)
    ok = not missing and all(flagged_ok) and elapsed < 1.0
    report(capsys, 1, ok, f"{total - len(missing)}/{total} lengths, "
                          f"{sum(flagged_ok)}/{len(MUST_FLAG)} discrepancies flagged, "
                          f"{elapsed:.2f}s" + (f"; missing: {', '.join(missing)}" if missing else ""))
    assert not missing, f"no enumerated row reproduces {missing}"
    assert all(flagged_ok)
    assert elapsed < 1.0


# -- criteria 2 and 3: end-to-end builds -----------------------------------------------------

DESK = [  # (q, theorem, kwargs, N)
    (9, 8, dict(s=1, t=1, variant="n2"), 4),
    (9, 1, dict(t=2, s=0), 6),
    (49, 8, dict(s=1, t=1, variant="n2"), 12),
    (49, 3, dict(t=1, s=6), 12),
    (121, 9, dict(s=1, t=0, variant="n"), 10),
]
EXAMPLE_CODES = [  # (q, theorem, kwargs, N)
    (361, 8, dict(s=3, t=5, variant="n"), 124),
    (529, 3, dict(t=5, s=0), 128),
    (625, 1, dict(t=4, s=2), 110),
    (729, 8, dict(s=1, t=10, variant="n2"), 268),
]
SAMPLES, SEED = 10_000, 0


@cache
def _code(q, th, kw_items):
    return build_code(ctx_for_q(q), th, **dict(kw_items))


def code(q, th, kw):
    return _code(q, th, tuple(sorted(kw.items())))


def test_criterion_2_desk_scale(capsys):
    t0 = time.perf_counter()
    lines, ok = [], True
    for q, th, kw, N in DESK:
        ctx = ctx_for_q(q)
        c = code(q, th, kw)
        sd = is_self_dual(ctx, c.matrix)
        mds = is_mds(ctx, c.matrix)
        good = c.length == N and sd.ok and mds.mode == "exhaustive" and mds.ok
        ok &= good
        lines.append(f"q={q} thm{th} N={c.length}:{'ok' if good else 'BAD'}")
    elapsed = time.perf_counter() - t0
    ok &= elapsed < 30
    report(capsys, 2, ok, f"{', '.join(lines)}; exhaustive minors; {elapsed:.1f}s")
    assert ok


def _nearest_lengths(q: int, N: int) -> str:
    by_length: dict[int, str] = {}
    for th in range(1, 17):
        for r in _rows_or_empty(q, th):
            if not r.flagged and r.conditions_ok:
                by_length.setdefault(r.length, f"thm{th}")
    near = sorted(by_length, key=lambda L: (abs(L - N), L))[:2]
    return ", ".join(f"{L} ({by_length[L]})" for L in near)


def _rows_or_empty(q, th):
    try:
        return enumerate_lengths(q, th)
    except ParameterError:
        return []


def test_criterion_3_example_codes(capsys):
    lines, failures = [], []
    for q, th, kw, N in EXAMPLE_CODES:
        ctx = ctx_for_q(q)
        t0 = time.perf_counter()
        c = code(q, th, kw)
        sd = is_self_dual(ctx, c.matrix)
        mds = is_mds(ctx, c.matrix, samples=SAMPLES, seed=SEED)
        elapsed = time.perf_counter() - t0
        good = (c.length == N and sd.ok and 2 * sd.rank == c.length and mds.ok
                and mds.checked >= SAMPLES and elapsed < 60)
        lines.append(f"q={q}/N={N}:{'ok' if good else 'BAD'}({elapsed:.1f}s)")
        if not good:
            why = f"q={q} thm{th}{kw}: built N={c.length}, wanted {N}"
            if c.length != N:
                why += f"; nearest reachable lengths {_nearest_lengths(q, N)}"
            failures.append(why)
    ok = not failures
    report(capsys, 3, ok, ", ".join(lines) + (f"; {'; '.join(failures)}" if failures else ""))
    assert ok, failures


# -- criterion 4: oracle equivalence -----------------------------------------------------------

def test_criterion_4_oracles(capsys):
    bits, ok = [], True
    for q in (9, 25, 49):
        checked, bad = lemma6_mismatches(q)
        ok &= not bad
        bits.append(f"intersections q={q}: {checked} cases, {len(bad)} mismatches")
    scope = OracleScope(sets_per_family=100, seed=SEED)
    for q in (49, 121):
        item = oracle_delta(ctx_for_q(q), scope)
        ok &= item.ok
        bits.append(f"delta q={q}: {item.detail}")
    eta_qs = [q for q in range(9, 170) if _even_power_of_odd_prime(q)]
    eta_bad = [q for q in eta_qs if not oracle_eta(ctx_for_q(q)).ok]
    ok &= not eta_bad
    bits.append(f"eta exhaustive q in {eta_qs}: {len(eta_bad)} failures")
    report(capsys, 4, ok, "; ".join(bits))
    assert ok


def _even_power_of_odd_prime(q: int) -> bool:
    for p in range(3, q + 1, 2):
        if q % p == 0:
            e = 0
            while q % p == 0:
                q //= p
                e += 1
            return q == 1 and e % 2 == 0
    return False


# -- criterion 5: symmetric-difference character --------------------------------------------------

def test_criterion_5_lemma5(capsys):
    checked, premise, bad = 0, 0, []
    for q, th, kw, N in DESK + EXAMPLE_CODES:
        ctx = ctx_for_q(q)
        c = code(q, th, kw)
        S = c.evalset
        if S.combine != "symdiff":
            continue
        checked += 1
        res = lemma5_on_set(ctx, S)
        chars = {ctx.eta(d) for d in c.deltas}
        if res.premise:
            premise += 1
            if not res.conclusion or chars != {S.expected_character}:
                bad.append(f"q={q} thm{th}: {res.witness or chars}")
        elif chars != {S.expected_character}:
            bad.append(f"q={q} thm{th}: character profile {chars}")
    ok = not bad and premise > 0
    report(capsys, 5, ok, f"{premise}/{checked} symmetric-difference sets satisfy the premise; "
                          f"{len(bad)} exceptions" + (f": {bad}" if bad else ""))
    assert ok


# -- criterion 6: mutation sensitivity ------------------------------------------------------------

TRIALS = 100
MUTATION_CODES = [(49, 3, dict(t=1, s=6)), (121, 9, dict(s=1, t=0, variant="n")),
                  (49, 8, dict(s=1, t=1, variant="n2")), (9, 1, dict(t=2, s=0)),
                  (529, 3, dict(t=5, s=0))]
SMALL_CODES = MUTATION_CODES[:4]   # exhaustive MDS is affordable here


def perturb_entry_trials(rng: random.Random) -> tuple[int, list[str]]:
    flipped, misses = 0, []
    for _ in range(TRIALS):
        q, th, kw = rng.choice(MUTATION_CODES)
        ctx = ctx_for_q(q)
        G = np.array(code(q, th, kw).matrix.rows)
        i, j = rng.randrange(G.shape[0]), rng.randrange(G.shape[1])
        G[i, j] = rng.choice([x for x in range(q) if x != G[i, j]])
        if not is_self_dual(ctx, G).ok:
            flipped += 1
        else:
            misses.append(f"q={q} thm{th} ({i},{j})")
    return flipped, misses


def duplicate_point_trials(rng: random.Random) -> tuple[int, list[str]]:
    flipped, misses = 0, []
    for _ in range(TRIALS):
        q, th, kw = rng.choice(SMALL_CODES)
        ctx = ctx_for_q(q)
        c = code(q, th, kw)
        pts = list(c.evalset.elements)
        i, j = rng.sample(range(len(pts)), 2)
        pts[j] = pts[i]
        G = generator_matrix(ctx, tuple(pts), c.coeffs)
        rep = is_mds(ctx, G.rows)
        if rep.mode == "exhaustive" and not rep.ok:
            flipped += 1
        else:
            misses.append(f"q={q} thm{th} a_{j}:=a_{i}")
    return flipped, misses


def _pairing_cases(q):
    return [(th, r.t, r.s) for th in TRACE_THEOREMS for r in _rows_or_empty(q, th)
            if r.conditions_ok and r.s >= 2]


def broken_pairing_trials(rng: random.Random) -> tuple[int, list[str], int]:
    """Validation must flag the pairing; the forced pipeline must also reject the set."""
    flagged, misses, rejected = 0, [], 0
    cases = [(q, c) for q in (49, 121) for c in _pairing_cases(q)]
    for _ in range(TRIALS):
        q, (th, t, s) = rng.choice(cases)
        ctx = ctx_for_q(q)
        params = random_trace_params(ctx, t, s, rng)
        half = s // 2
        i = rng.randint(1, half)
        b = list(params.b)
        b[half + i] = rng.choice([x for x in ctx.subfield_elements() if x != b[half + i]])
        params = dataclasses.replace(params, b=tuple(b))
        problems = params.problems(ctx)
        build = build_symdiff_trace_subspace if TRACE_THEOREMS[th][1] else build_union_trace_subspace
        try:
            S = build(ctx, t, s, params=params, force=True)
            G = generator_matrix(ctx, S, coefficient_vector(ctx, S, mode="direct"))
            accepted = is_self_dual(ctx, G).ok
        except (ConstructionError, ParameterError):
            accepted = False
        rejected += not accepted
        if any("negation pairing" in p for p in problems) and not accepted:
            flagged += 1
        else:
            misses.append(f"q={q} thm{th} t={t} s={s} b_{half + i}")
    return flagged, misses, rejected


def test_criterion_6_mutations(capsys):
    rng = random.Random(SEED)
    e_ok, e_miss = perturb_entry_trials(rng)
    d_ok, d_miss = duplicate_point_trials(rng)
    n_ok, n_miss, n_rej = broken_pairing_trials(rng)
    ok = e_ok == d_ok == n_ok == TRIALS
    report(capsys, 6, ok, f"entry perturbation {e_ok}/{TRIALS} (self-dual), "
                          f"duplicated point {d_ok}/{TRIALS} (MDS), "
                          f"broken pairing {n_ok}/{TRIALS} (validation + build gate)"
                          + (f"; misses {(e_miss + d_miss + n_miss)[:5]}" if not ok else ""))
    assert ok
