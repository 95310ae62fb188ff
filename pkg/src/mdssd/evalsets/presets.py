"""Named families: the trace/subspace theorems 1-4 and the (mu, nu) choices 8-16.

Every family maps (q, s, t, variant) to a code length.  For 8-16 the length
from the family's own closed form is kept next to the cardinality of the set
actually built, since the two disagree for family 16.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..gf import FieldCtx, split_q
from .core import ParameterError
from .multiplicative import (THEOREM_VARIANT, VARIANT_THEOREM, ConditionReport, CosetParams,
                             generic_conditions, symdiff_size)
from .trace import subspace_dim

VARIANT_OFFSET = {"n": 0, "n1": 1, "n2": 2}


def two_adic(r: int) -> tuple[int, int]:
    """(a, b) with r + 1 = 2^a * b and b odd."""
    a, b = 0, r + 1
    while b % 2 == 0:
        b //= 2
        a += 1
    return a, b


@dataclass(frozen=True)
class Rule:
    generic: int                     # 5, 6 or 7
    part: str                        # "(i)", "(ii)", ...
    ok: Callable[[int, int], bool]   # (s, t) -> parity constraint holds
    text: str


@dataclass(frozen=True)
class Family:
    theorem: int
    mu: Callable[[int], int]
    nu: Callable[[int], int]
    s_max: Callable[[int], int]
    t_max: Callable[[int], int]
    length: Callable[[int, int, int], int]   # statement closed form n(r, s, t)
    rules: dict[str, Rule]


def _any(s, t):
    return True


FAMILIES: dict[int, Family] = {
    8: Family(8, lambda r: r + 1, lambda r: r - 1, lambda r: (r + 1) // 2, lambda r: (r - 1) // 2,
              lambda r, s, t: s * (r - 1) + t * (r + 1) - 2 * s * t,
              {"n": Rule(5, "", _any, ""), "n2": Rule(7, "", _any, "")}),
    9: Family(9, lambda r: r + 1, lambda r: (r - 1) // 2, lambda r: r + 1, lambda r: (r - 1) // 2,
              lambda r, s, t: s * (r - 1) + 2 * t * (r + 1) - 4 * s * t,
              {"n": Rule(5, "(i)", lambda s, t: s % 2 == 1, "s odd"),
               "n2": Rule(7, "(ii)", lambda s, t: s % 4 == 0, "s = 0 (mod 4)")}),
    10: Family(10, lambda r: (r + 1) // 2, lambda r: r - 1, lambda r: (r + 1) // 4,
               lambda r: (r - 1) // 2,
               lambda r, s, t: 2 * s * (r - 1) + t * (r + 1) - 8 * s * t,
               {"n": Rule(5, "", _any, ""), "n2": Rule(7, "", _any, "")}),
    11: Family(11, lambda r: 2 * (r + 1), lambda r: r - 1, lambda r: r + 1, lambda r: (r - 1) // 2,
               lambda r, s, t: s * (r - 1) // 2 + t * (r + 1) - 2 * s * t,
               {"n": Rule(5, "(i)", lambda s, t: s % 2 == 0, "s even"),
                "n1": Rule(6, "(ii)", lambda s, t: s % 4 == 1, "s = 1 (mod 4)"),
                "n2": Rule(7, "(iii)", lambda s, t: s % 4 == 0, "s = 0 (mod 4)")}),
    12: Family(12, lambda r: r + 1, lambda r: 2 * (r - 1), lambda r: (r + 1) // 4,
               lambda r: (r - 1) // 2,
               lambda r, s, t: s * (r - 1) + t * (r + 1) // 2 - 4 * s * t,
               {"n": Rule(5, "", _any, ""), "n2": Rule(7, "", _any, "")}),
    13: Family(13, lambda r: (r + 1) // 2, lambda r: (r - 1) // 2, lambda r: (r + 1) // 2,
               lambda r: (r - 1) // 2,
               lambda r, s, t: 2 * s * (r - 1) + 2 * t * (r + 1) - 8 * s * t,
               {"n2": Rule(7, "", _any, "")}),
    # (i) and (iii) both require s even, exactly as stated
    14: Family(14, lambda r: 2 * (r + 1), lambda r: 2 * (r - 1), lambda r: (r + 1) // 2,
               lambda r: (r - 1) // 2,
               lambda r, s, t: s * (r - 1) // 2 + t * (r + 1) // 2 - 2 * s * t,
               {"n": Rule(5, "(i)", lambda s, t: s % 2 == 0, "s even"),
                "n1": Rule(6, "(ii)", lambda s, t: s % 2 == 1, "s odd"),
                "n2": Rule(7, "(iii)", lambda s, t: s % 2 == 0, "s even")}),
    15: Family(15, lambda r: r + 1, lambda r: 2 ** two_adic(r)[0] * (r - 1),
               lambda r: two_adic(r)[1], lambda r: r - 1,
               lambda r, s, t: s * (r - 1) + t * two_adic(r)[1] - 2 * s * t,
               {"n": Rule(5, "(i)", lambda s, t: t % 2 == 0, "t even"),
                "n1": Rule(6, "(ii)", lambda s, t: t % 2 == 1, "t odd"),
                "n2": Rule(7, "(iii)", lambda s, t: t % 2 == 0, "t even")}),
    16: Family(16, lambda r: two_adic(r)[1], lambda r: r - 1,
               lambda r: two_adic(r)[1], lambda r: r - 1,
               lambda r, s, t: s * (r - 1) * 2 ** two_adic(r)[0] + t * (r + 1) - 2 * s * t,
               {"n": Rule(5, "", _any, ""), "n2": Rule(7, "", _any, "")}),
}


@dataclass(frozen=True)
class PresetResult:
    theorem: int
    variant: str
    params: CosetParams
    report: ConditionReport
    n_stated: int          # the family's closed form
    n_set: int             # cardinality formula for the set actually built
    length: int            # code length N = n_set + variant offset

    @property
    def consistent(self) -> bool:
        return self.n_stated == self.n_set


def _q_r(ctx_or_q) -> tuple[int, int]:
    if isinstance(ctx_or_q, FieldCtx):
        return ctx_or_q.q, ctx_or_q.r
    p, m = split_q(ctx_or_q)
    return ctx_or_q, p ** m


def preset(theorem: int, ctx_or_q, s: int, t: int, variant: str = "n",
           strict: bool = True) -> PresetResult:
    """(mu, nu) and the literal condition report for family ``theorem`` (8..16).

    With ``strict`` the family's own range and parity hypotheses are enforced
    and violations raise :class:`ParameterError`.
    """
    if theorem not in FAMILIES:
        raise ParameterError(f"unknown family thm{theorem}; expected 8..16")
    fam = FAMILIES[theorem]
    q, r = _q_r(ctx_or_q)
    if variant not in fam.rules:
        raise ParameterError(f"thm{theorem} has no length-{variant} variant "
                             f"(available: {', '.join(fam.rules)})")
    rule = fam.rules[variant]
    problems = []
    if r % 4 != 3:
        problems.append(f"thm{theorem} requires r = 3 (mod 4), got r={r}")
    if not 0 <= s <= fam.s_max(r):
        problems.append(f"thm{theorem} requires 0 <= s <= {fam.s_max(r)}")
    if not 0 <= t <= fam.t_max(r):
        problems.append(f"thm{theorem} requires 0 <= t <= {fam.t_max(r)}")
    if not rule.ok(s, t):
        problems.append(f"thm{theorem}{rule.part} requires {rule.text}")
    if problems and strict:
        raise ParameterError("; ".join(problems))
    mu, nu = fam.mu(r), fam.nu(r)
    params = CosetParams(mu, nu, s, t, include_zero=rule.generic == 7)
    report = generic_conditions(q, r, mu, nu, s, t, rule.generic)
    n_set = report.n if report.n is not None else -1
    return PresetResult(theorem, variant, params, report, fam.length(r, s, t), n_set,
                        n_set + VARIANT_OFFSET[variant])


# -- theorems 1-4 ---------------------------------------------------------------

TRACE_THEOREMS = {
    # theorem: (t parity, symmetric difference?, extended?)
    1: (0, False, False),
    2: (1, False, True),
    3: (1, True, False),
    4: (0, True, True),
}


def trace_length(theorem: int, p: int, m: int, t: int, s: int) -> int:
    """Code length N for the trace/subspace families."""
    _, symdiff, extended = TRACE_THEOREMS[theorem]
    r, tp = p ** m, subspace_dim(p, t)
    n = t * r + (s + 1) * p ** tp - 2 * t if symdiff else t * r + s * p ** tp
    return n + extended


def trace_problems(theorem: int, p: int, m: int, t: int, s: int) -> list[str]:
    parity, symdiff, _ = TRACE_THEOREMS[theorem]
    r = p ** m
    out = []
    if symdiff and r % 4 != 3:
        out.append(f"thm{theorem} requires r = 3 (mod 4), got r={r}")
    if not 1 <= t <= r:
        out.append(f"thm{theorem} requires 1 <= t <= {r}")
        return out
    if t % 2 != parity:
        out.append(f"thm{theorem} requires t {'odd' if parity else 'even'}")
    tp = subspace_dim(p, t)
    smax = p ** (m - tp) - 1
    if s % 2 or not 0 <= s <= smax:
        out.append(f"thm{theorem} requires s even with 0 <= s <= p^(m-t')-1 = {smax} (t'={tp})")
    return out


# -- enumeration ------------------------------------------------------------------

@dataclass(frozen=True)
class LengthRow:
    theorem: int
    s: int
    t: int
    n: int            # size of the evaluation set
    length: int       # code length N
    variant: str
    conditions_ok: bool
    note: str = ""
    flagged: bool = False

    def as_dict(self) -> dict:
        return dict(theorem=self.theorem, s=self.s, t=self.t, n=self.n, length=self.length,
                    variant=self.variant, conditions_ok=self.conditions_ok, note=self.note,
                    flagged=self.flagged)


def enumerate_lengths(q: int, theorem: int, s: int | None = None,
                      t: int | None = None) -> list[LengthRow]:
    """Every in-range (s, t) of a family with its length and literal verdict.

    Worked examples whose quoted length disagrees with the closed form are
    appended as flagged rows.
    """
    p, m = split_q(q)
    r = p ** m
    rows: list[LengthRow] = []
    if theorem in TRACE_THEOREMS:
        _, symdiff, ext = TRACE_THEOREMS[theorem]
        if symdiff and r % 4 != 3:
            raise ParameterError(f"thm{theorem} requires r = 3 (mod 4), got r={r}")
        for tt in range(1, r + 1):
            if t is not None and tt != t:
                continue
            tp = subspace_dim(p, tt)
            for ss in range(0, p ** (m - tp), 2):
                if s is not None and ss != s:
                    continue
                ok = not trace_problems(theorem, p, m, tt, ss)
                if not ok:
                    continue
                N = trace_length(theorem, p, m, tt, ss)
                rows.append(LengthRow(theorem, ss, tt, N - ext, N, "n1" if ext else "n", True))
    elif theorem in FAMILIES:
        if r % 4 != 3:
            raise ParameterError(f"thm{theorem} requires r = 3 (mod 4), got r={r}")
        fam = FAMILIES[theorem]
        for ss in range(fam.s_max(r) + 1):
            if s is not None and ss != s:
                continue
            for tt in range(fam.t_max(r) + 1):
                if t is not None and tt != t:
                    continue
                for variant, rule in fam.rules.items():
                    if not rule.ok(ss, tt):
                        continue
                    res = preset(theorem, q, ss, tt, variant)
                    if res.length < 2:
                        continue
                    note = "" if res.consistent else (
                        f"closed form gives {res.n_stated + VARIANT_OFFSET[variant]}")
                    rows.append(LengthRow(theorem, ss, tt, res.n_set, res.length, variant,
                                          res.report.verdict, note))
    else:
        raise ParameterError(f"unknown theorem {theorem}; expected 1..4 or 8..16")
    rows.extend(example_discrepancies(q, theorem))
    return rows


# -- worked examples ----------------------------------------------------------------

@dataclass(frozen=True)
class WorkedExample:
    theorem: int
    q: int
    s: int
    t: int
    variant: str
    quoted_n: int
    quoted_length: int


WORKED_EXAMPLES: tuple[WorkedExample, ...] = (
    WorkedExample(1, 625, 2, 4, "n", 110, 110),
    WorkedExample(2, 729, 8, 9, "n1", 267, 268),
    WorkedExample(3, 529, 0, 5, "n", 128, 128),
    WorkedExample(4, 729, 2, 6, "n1", 159, 160),
    WorkedExample(8, 361, 3, 5, "n", 124, 124),
    WorkedExample(8, 361, 3, 5, "n2", 124, 126),
    WorkedExample(9, 121, 3, 3, "n", 66, 66),
    WorkedExample(9, 121, 4, 2, "n2", 56, 58),
    WorkedExample(10, 729, 2, 1, "n", 116, 116),
    WorkedExample(10, 729, 2, 1, "n2", 116, 118),
    WorkedExample(11, 361, 8, 4, "n", 88, 88),
    WorkedExample(11, 361, 13, 1, "n1", 111, 112),
    WorkedExample(11, 361, 12, 1, "n2", 104, 106),
    WorkedExample(12, 961, 7, 1, "n", 198, 198),
    WorkedExample(12, 961, 2, 14, "n2", 172, 174),
    WorkedExample(13, 961, 9, 2, "n2", 524, 526),
    WorkedExample(14, 529, 10, 1, "n", 102, 102),
    WorkedExample(14, 529, 9, 4, "n1", 75, 76),
    WorkedExample(14, 529, 10, 1, "n2", 102, 104),
    WorkedExample(15, 729, 2, 8, "n", 76, 76),
    WorkedExample(15, 729, 4, 11, "n1", 93, 94),
    WorkedExample(15, 729, 6, 16, "n2", 66, 68),
    WorkedExample(16, 529, 5, 4, "n", 376, 376),
    WorkedExample(16, 529, 5, 4, "n2", 376, 378),
)


@dataclass(frozen=True)
class ExampleCheck:
    example: WorkedExample
    in_range: bool
    problems: tuple[str, ...]
    formula_length: int | None   # closed form at the quoted (s, t)
    set_length: int | None       # cardinality of the set that would be built

    @property
    def consistent(self) -> bool:
        return (self.in_range and self.formula_length == self.example.quoted_length
                and self.set_length == self.example.quoted_length)


def check_example(ex: WorkedExample) -> ExampleCheck:
    p, m = split_q(ex.q)
    if ex.theorem in TRACE_THEOREMS:
        problems = trace_problems(ex.theorem, p, m, ex.t, ex.s)
        N = trace_length(ex.theorem, p, m, ex.t, ex.s)
        return ExampleCheck(ex, not problems, tuple(problems), N, N if not problems else None)
    res = preset(ex.theorem, ex.q, ex.s, ex.t, ex.variant, strict=False)
    try:
        preset(ex.theorem, ex.q, ex.s, ex.t, ex.variant)
        problems: list[str] = []
    except ParameterError as err:
        problems = [str(err)]
    offset = VARIANT_OFFSET[ex.variant]
    return ExampleCheck(ex, not problems, tuple(problems), res.n_stated + offset, res.length)


def example_discrepancies(q: int, theorem: int) -> list[LengthRow]:
    rows = []
    for ex in WORKED_EXAMPLES:
        if ex.q != q or ex.theorem != theorem:
            continue
        chk = check_example(ex)
        if chk.consistent:
            continue
        bits = [f"worked example quotes N={ex.quoted_length}"]
        if chk.problems:
            bits.append("parameters out of range: " + "; ".join(chk.problems))
        bits.append(f"closed form at (s={ex.s}, t={ex.t}) gives N={chk.formula_length}")
        if chk.set_length is not None and chk.set_length != chk.formula_length:
            bits.append(f"set cardinality gives N={chk.set_length}")
        rows.append(LengthRow(theorem, ex.s, ex.t, ex.quoted_n, ex.quoted_length, ex.variant,
                              False, "; ".join(bits), flagged=True))
    return rows


def family_variants(theorem: int) -> list[str]:
    if theorem in TRACE_THEOREMS:
        return ["n1" if TRACE_THEOREMS[theorem][2] else "n"]
    return list(FAMILIES[theorem].rules)


__all__ = [
    "FAMILIES", "Family", "Rule", "PresetResult", "preset", "two_adic", "TRACE_THEOREMS",
    "trace_length", "trace_problems", "LengthRow", "enumerate_lengths", "WorkedExample",
    "WORKED_EXAMPLES", "ExampleCheck", "check_example", "example_discrepancies",
    "family_variants", "VARIANT_OFFSET", "VARIANT_THEOREM", "THEOREM_VARIANT", "symdiff_size",
]
