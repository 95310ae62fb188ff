"""Brute-force cross-checks for small fields.

Each oracle recomputes a quantity by the most literal route available
(enumerating the field, multiplying out products) and compares it with the
fast or structured path used by the constructions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import gcd

from .. import grscodes
from ..evalsets import (CosetParams, EvalSet, ParameterError, TraceSubspaceParams,
                        additive_cosets, build_symdiff_mult, build_symdiff_trace_subspace,
                        build_union_trace_subspace, coset_intersection_size, exponent_set,
                        subspace, subspace_dim)
from ..gf import FieldCtx

MAX_EXHAUSTIVE_Q = 10_000


@dataclass(frozen=True)
class OracleScope:
    sets_per_family: int = 100
    random_pairs: int = 200
    seed: int = 0
    max_q: int = MAX_EXHAUSTIVE_Q


@dataclass(frozen=True)
class OracleItem:
    name: str
    ok: bool
    checked: int
    detail: str = ""

    def as_dict(self) -> dict:
        return {"name": self.name, "ok": self.ok, "checked": self.checked, "detail": self.detail}


@dataclass(frozen=True)
class OracleReport:
    q: int
    items: tuple[OracleItem, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return all(i.ok for i in self.items)

    def as_dict(self) -> dict:
        return {"q": self.q, "ok": self.ok, "items": [i.as_dict() for i in self.items]}


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


# -- (a) delta, direct vs structured -------------------------------------------------

def random_trace_params(ctx: FieldCtx, t: int, s: int, rng: random.Random) -> TraceSubspaceParams:
    """Valid trace/subspace parameters with random levels and coset representatives."""
    tp = subspace_dim(ctx.p, t)
    H = subspace(ctx, tp)
    h = (0, *rng.sample(H[1:], t - 1))
    pairs, used = [], set()
    cosets = [c for c in additive_cosets(ctx, H) if c[0] != 0]
    rng.shuffle(cosets)
    for c in cosets:
        if len(pairs) == s // 2:
            break
        if c in used:
            continue
        rep = rng.choice(c)
        neg = tuple(sorted(ctx.add(ctx.neg(rep), x) for x in H))
        used.update((c, neg))
        pairs.append(rep)
    b = (0, *pairs, *(ctx.neg(x) for x in pairs))
    params = TraceSubspaceParams(t, s, tp, H, h, b)
    params.validate(ctx)
    return params


def _trace_ranges(ctx: FieldCtx):
    out = []
    for t in range(1, ctx.r + 1):
        tp = subspace_dim(ctx.p, t)
        out += [(t, s) for s in range(0, ctx.p ** (ctx.m - tp), 2)]
    return out


def random_sets(ctx: FieldCtx, family: str, count: int, rng: random.Random) -> list[EvalSet]:
    """``count`` random sets from one construction family.

    Families: ``"trace-union"``, ``"trace-symdiff"``, ``"cosets"`` and
    ``"cosets-zero"``.  Coset parameters are drawn without regard to the
    self-duality hypotheses, since only set identities are exercised.
    """
    out: list[EvalSet] = []
    if family.startswith("trace"):
        ranges = _trace_ranges(ctx)
        build = build_union_trace_subspace if family == "trace-union" else build_symdiff_trace_subspace
        for _ in range(count):
            t, s = rng.choice(ranges)
            params = random_trace_params(ctx, t, s, rng)
            out.append(build(ctx, t, s, params=params, force=True))
        return out
    if family in ("cosets", "cosets-zero"):
        divs = divisors(ctx.order)
        theorem = 7 if family == "cosets-zero" else 5
        while len(out) < count:
            mu, nu = rng.choice(divs), rng.choice(divs)
            g = gcd(mu, nu)
            params = CosetParams(mu, nu, rng.randint(0, mu // g), rng.randint(0, nu // g))
            S = build_symdiff_mult(ctx, params, theorem, force=True)
            if len(S):
                out.append(S)
        return out
    raise ValueError(f"unknown family {family!r}")


FAMILIES = ("trace-union", "trace-symdiff", "cosets", "cosets-zero")


def check_delta_modes(ctx: FieldCtx, sets) -> tuple[int, list[str]]:
    checked, bad = 0, []
    for S in sets:
        for a in S.elements:
            checked += 1
            d1 = grscodes.delta(ctx, S, a, "direct")
            d2 = grscodes.delta(ctx, S, a, "structured")
            if d1 != d2:
                bad.append(f"{S.provenance}: delta({a}) direct {d1} != structured {d2}")
    return checked, bad


def oracle_delta(ctx: FieldCtx, scope: OracleScope) -> OracleItem:
    rng = random.Random(scope.seed)
    checked, bad, sets = 0, [], 0
    for fam in FAMILIES:
        ss = random_sets(ctx, fam, scope.sets_per_family, rng)
        sets += len(ss)
        c, b = check_delta_modes(ctx, ss)
        checked += c
        bad += b
    return OracleItem("delta direct == structured", not bad, checked,
                      bad[0] if bad else f"{sets} sets, {checked} points")


# -- (b) quadratic character -------------------------------------------------------------

def oracle_eta(ctx: FieldCtx) -> OracleItem:
    squares = {ctx.mul(x, x) for x in range(1, ctx.q)}
    bad = [x for x in range(1, ctx.q) if (ctx.eta(x) == 1) != (x in squares)]
    ok = not bad and len(squares) == ctx.order // 2
    return OracleItem("eta == square-set membership", ok, ctx.order,
                      f"first mismatch at {bad[0]}" if bad else f"{len(squares)} squares")


# -- (c) coset intersection sizes ----------------------------------------------------------

def lemma6_mismatches(q: int) -> tuple[int, list[tuple]]:
    """Compare |A|, |B|, |A n B| with the closed forms for every divisor pair and (s, t)."""
    n = q - 1
    checked, bad = 0, []
    for mu in divisors(n):
        for nu in divisors(n):
            g = gcd(mu, nu)
            smax, tmax = mu // g, nu // g
            a_prefix = [exponent_set(q, mu, nu, s) for s in range(smax + 1)]
            b_prefix = [exponent_set(q, nu, mu, t) for t in range(tmax + 1)]
            for s in range(smax + 1):
                A = a_prefix[s]
                if len(A) != s * n // mu:
                    bad.append((mu, nu, s, None, "|A|"))
                for t in range(tmax + 1):
                    checked += 1
                    got = len(A & b_prefix[t])
                    want = coset_intersection_size(q, mu, nu, s, t)
                    if got != want:
                        bad.append((mu, nu, s, t, got, want))
            for t in range(tmax + 1):
                if len(b_prefix[t]) != t * n // nu:
                    bad.append((mu, nu, None, t, "|B|"))
    return checked, bad


def oracle_lemma6(ctx: FieldCtx) -> OracleItem:
    checked, bad = lemma6_mismatches(ctx.q)
    return OracleItem("coset intersection formula", not bad, checked,
                      f"first mismatch {bad[0]}" if bad else "all divisor pairs")


# -- (d) trace fibers against subspace cosets -------------------------------------------------

def oracle_lemma4(ctx: FieldCtx, scope: OracleScope) -> OracleItem:
    rng = random.Random(scope.seed + 4)
    fiber: dict[int, set[int]] = {}
    for x in range(ctx.q):
        fiber.setdefault(ctx.trace(x), set()).add(x)
    checked, bad = 0, []
    for t, s in _trace_ranges(ctx):
        params = random_trace_params(ctx, t, s, rng)
        Hs = [frozenset(ctx.add(b, y) for y in params.H) for b in params.b]
        for h in params.h:
            T = fiber.get(h, set())
            checked += 1
            if len(T) != ctx.r:
                bad.append(f"|T(h={h})| = {len(T)}")
            if T & Hs[0] != {ctx.div(h, 2)}:
                bad.append(f"T(h={h}) n H_0 = {sorted(T & Hs[0])}")
            for j in range(1, s + 1):
                if T & Hs[j]:
                    bad.append(f"T(h={h}) meets H_{j}")
            x = rng.randrange(ctx.q)
            if grscodes.pi_eval(ctx, sorted(T), x) != ctx.sub(ctx.trace(x), h):
                bad.append(f"pi_T(h={h})({x}) != Tr(x) - h")
    return OracleItem("trace fibers vs subspace cosets", not bad, checked,
                      bad[0] if bad else f"{checked} fibers")


# -- (e) character of a symmetric difference ------------------------------------------------------

@dataclass(frozen=True)
class Lemma5Result:
    c: int | None
    premise: bool
    conclusion: bool | None
    witness: str = ""


def lemma5_check(ctx: FieldCtx, A, B, c: int | None = None) -> Lemma5Result:
    """Evaluate premise and conclusion of the symmetric-difference character lemma.

    The premise is eta(delta_A(a) pi_B(a)) = eta(pi_A(b) delta_B(b)) = c on
    A minus B and B minus A.  When ``c`` is None it is taken from the first
    point.  The conclusion (eta(delta_{A^B}) == c everywhere) is only
    evaluated when the premise holds.
    """
    A, B = list(dict.fromkeys(A)), list(dict.fromkeys(B))
    sa, sb = set(A), set(B)
    values = []
    for a in A:
        if a not in sb:
            values.append((a, ctx.mul(grscodes.delta_direct(ctx, A, a), grscodes.pi_eval(ctx, B, a))))
    for b in B:
        if b not in sa:
            values.append((b, ctx.mul(grscodes.pi_eval(ctx, A, b), grscodes.delta_direct(ctx, B, b))))
    if not values:
        return Lemma5Result(c, True, True, "empty symmetric difference")
    chars = [(x, ctx.eta(v)) for x, v in values]
    if c is None:
        c = chars[0][1]
    off = next(((x, e) for x, e in chars if e != c), None)
    if off is not None:
        return Lemma5Result(c, False, None, f"premise fails at {off[0]} (eta = {off[1]})")
    sym = [x for x, _ in values]
    for e in sym:
        got = ctx.eta(grscodes.delta_direct(ctx, sym, e))
        if got != c:
            return Lemma5Result(c, True, False, f"eta(delta({e})) = {got} != {c}")
    return Lemma5Result(c, True, True)


def lemma5_on_set(ctx: FieldCtx, S: EvalSet) -> Lemma5Result:
    """Lemma-5 check on the two sides recorded in a symmetric-difference set,
    with c = the set's expected character."""
    if S.combine != "symdiff":
        raise ValueError(f"{S.provenance} is not a symmetric difference")
    A = [x for b in S.blocks_a for x in b.elements]
    B = [x for b in S.blocks_b for x in b.elements]
    return lemma5_check(ctx, A, B, S.expected_character)


def oracle_lemma5(ctx: FieldCtx, scope: OracleScope) -> OracleItem:
    rng = random.Random(scope.seed + 5)
    premise, failures = 0, []
    sets = random_sets(ctx, "cosets", scope.sets_per_family, rng)
    if ctx.r % 4 == 3:
        sets += random_sets(ctx, "trace-symdiff", scope.sets_per_family, rng)
    pairs = [([x for b in S.blocks_a for x in b.elements],
              [x for b in S.blocks_b for x in b.elements]) for S in sets]
    for _ in range(scope.random_pairs):
        size = rng.randint(1, min(6, ctx.q // 2))
        A = rng.sample(range(ctx.q), size)
        B = rng.sample(range(ctx.q), rng.randint(0, size))
        pairs.append((A, B))
    for A, B in pairs:
        res = lemma5_check(ctx, A, B)
        if res.premise:
            premise += 1
            if res.conclusion is False:
                failures.append(f"A={sorted(A)[:6]}..., B={sorted(B)[:6]}...: {res.witness}")
    return OracleItem("symmetric-difference character", not failures, premise,
                      failures[0] if failures else f"{premise} premise-satisfying pairs")


def oracle_suite(ctx: FieldCtx, scope: OracleScope | None = None) -> OracleReport:
    """Run oracles (a)-(e) at ``ctx``; the field must be small enough to enumerate."""
    scope = scope or OracleScope()
    if ctx.q > scope.max_q:
        raise ParameterError(f"q={ctx.q} exceeds the exhaustive bound {scope.max_q}")
    items = (oracle_delta(ctx, scope), oracle_eta(ctx), oracle_lemma6(ctx),
             oracle_lemma4(ctx, scope), oracle_lemma5(ctx, scope))
    return OracleReport(ctx.q, items)
