"""Unions of cosets of two multiplicative subgroups and their symmetric difference.

With alpha = omega^mu and beta = omega^nu,
    A = beta^0<alpha> u ... u beta^(s-1)<alpha>,
    B = alpha^0<beta> u ... u alpha^(t-1)<beta>.
Sets are handled as exponent sets mod q - 1 until they are materialised.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from ..gf import FieldCtx
from .core import Block, EvalSet, ParameterError, symdiff_set, union_set

VARIANT_THEOREM = {"n": 5, "n1": 6, "n2": 7}
THEOREM_VARIANT = {v: k for k, v in VARIANT_THEOREM.items()}


@dataclass(frozen=True)
class CosetParams:
    mu: int
    nu: int
    s: int
    t: int
    include_zero: bool = False

    def s_max(self) -> int:
        return self.mu // gcd(self.mu, self.nu)

    def t_max(self) -> int:
        return self.nu // gcd(self.mu, self.nu)

    def problems(self, q: int) -> list[str]:
        out = []
        if self.mu <= 0 or (q - 1) % self.mu:
            out.append(f"mu={self.mu} does not divide q-1={q - 1}")
        if self.nu <= 0 or (q - 1) % self.nu:
            out.append(f"nu={self.nu} does not divide q-1={q - 1}")
        if self.mu > 0 and self.nu > 0:
            if not 0 <= self.s <= self.s_max():
                out.append(f"s={self.s} outside 0..mu/gcd(mu,nu)={self.s_max()}")
            if not 0 <= self.t <= self.t_max():
                out.append(f"t={self.t} outside 0..nu/gcd(mu,nu)={self.t_max()}")
        return out

    def validate(self, q: int) -> None:
        bad = self.problems(q)
        if bad:
            raise ParameterError("; ".join(bad))

    def alpha(self, ctx: FieldCtx) -> int:
        return ctx.omega_pow(self.mu)

    def beta(self, ctx: FieldCtx) -> int:
        return ctx.omega_pow(self.nu)


def exponent_set(q: int, gen: int, step: int, count: int) -> set[int]:
    """Exponents of step^i * <omega^gen> for i < count, as a set mod q - 1."""
    n = q - 1
    return {(step * i + gen * j) % n for i in range(count) for j in range(n // gen)}


def side_exponents(q: int, params: CosetParams, side: str) -> set[int]:
    if side == "A":
        return exponent_set(q, params.mu, params.nu, params.s)
    if side == "B":
        return exponent_set(q, params.nu, params.mu, params.t)
    raise ValueError(f"side must be 'A' or 'B', not {side!r}")


def _coset_blocks(ctx: FieldCtx, gen: int, step: int, count: int) -> list[Block]:
    n = ctx.order
    size = n // gen
    blocks = []
    for i in range(count):
        exps = [(step * i + gen * j) % n for j in range(size)]
        shift = ctx.omega_pow(step * i * size)
        blocks.append(Block("multiplicative", tuple(ctx.omega_pow(e) for e in exps),
                            order=size, shift=shift))
    return blocks


def mult_coset_union(ctx: FieldCtx, params: CosetParams, side: str) -> EvalSet:
    params.validate(ctx.q)
    if side == "A":
        blocks = _coset_blocks(ctx, params.mu, params.nu, params.s)
        expect = params.s * ctx.order // params.mu
    elif side == "B":
        blocks = _coset_blocks(ctx, params.nu, params.mu, params.t)
        expect = params.t * ctx.order // params.nu
    else:
        raise ValueError(f"side must be 'A' or 'B', not {side!r}")
    out = union_set(blocks, f"cosets-{side}(mu={params.mu},nu={params.nu},s={params.s},t={params.t})")
    assert len(out) == expect
    return out


def coset_intersection_size(q: int, mu: int, nu: int, s: int, t: int) -> int:
    """|A n B| = (q-1) gcd(mu, nu) s t / (mu nu)."""
    if mu <= 0 or nu <= 0 or (q - 1) % mu or (q - 1) % nu:
        raise ParameterError(f"mu={mu}, nu={nu} must both divide q-1={q - 1}")
    lcm = mu * nu // gcd(mu, nu)
    return (q - 1) // lcm * s * t


def symdiff_size(q: int, mu: int, nu: int, s: int, t: int) -> int:
    """|A ^ B| by the cardinality formula."""
    return (s * (q - 1) // mu + t * (q - 1) // nu
            - 2 * coset_intersection_size(q, mu, nu, s, t))


@dataclass(frozen=True)
class ConditionReport:
    theorem: int
    checks: tuple[tuple[str, bool, str], ...]
    n: int | None
    predicted_character: int | None

    @property
    def verdict(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def failed(self) -> list[str]:
        return [label for label, ok, _ in self.checks if not ok]

    def as_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "n": self.n,
            "verdict": self.verdict,
            "predicted_character": self.predicted_character,
            "checks": [{"label": lab, "ok": ok, "text": txt} for lab, ok, txt in self.checks],
        }


def generic_conditions(q: int, r: int, mu: int, nu: int, s: int, t: int,
                       theorem: int) -> ConditionReport:
    """Literal evaluation of the hypotheses of the generic theorems 5, 6, 7.

    Pure integer arithmetic; never raises on bad parameters.
    """
    if theorem not in (5, 6, 7):
        raise ValueError(f"theorem must be 5, 6 or 7, not {theorem}")
    checks: list[tuple[str, bool, str]] = []

    def add(label, ok, text):
        checks.append((label, bool(ok), text))

    add("r = 3 mod 4", r % 4 == 3, f"r={r} is congruent to 3 modulo 4")
    params = CosetParams(mu, nu, s, t)
    divides = mu > 0 and nu > 0 and (q - 1) % mu == 0 and (q - 1) % nu == 0
    add("mu, nu | q-1", divides, f"mu={mu} and nu={nu} both divide q-1={q - 1}")
    if not divides:
        return ConditionReport(theorem, tuple(checks), None, None)
    add("s range", 0 <= s <= params.s_max(), f"0 <= s={s} <= mu/gcd(mu,nu)={params.s_max()}")
    add("t range", 0 <= t <= params.t_max(), f"0 <= t={t} <= nu/gcd(mu,nu)={params.t_max()}")

    n = symdiff_size(q, mu, nu, s, t)
    if theorem == 6:
        add("(i) n odd", n % 2 == 1, f"n={n} is odd")
    else:
        add("(i) n even", n % 2 == 0, f"n={n} is even")

    if theorem in (5, 6):
        add("(ii) mu even", mu % 2 == 0, f"mu={mu} is even")
    add("(ii) mu | nu(r+1)", (nu * (r + 1)) % mu == 0, f"mu={mu} divides nu(r+1)={nu * (r + 1)}")
    add("(ii) nu | mu(r-1)", (mu * (r - 1)) % nu == 0, f"nu={nu} divides mu(r-1)={mu * (r - 1)}")

    # (r+1)nu/mu is only an integer when mu | nu(r+1)
    kappa = nu * (r + 1) // mu if (nu * (r + 1)) % mu == 0 else None
    if theorem in (5, 6):
        if kappa is None:
            add("(iii) first parity", False, "((q-1)/mu - 1)nu - ((r+1)nu/mu)s is not an integer")
            add("(iii) second parity", False, "((r+1)nu/mu)s + nu is not an integer")
        else:
            v1 = ((q - 1) // mu - 1) * nu - kappa * s
            v2 = kappa * s + nu
            add("(iii) first parity", v1 % 2 == 0, f"((q-1)/mu - 1)nu - ((r+1)nu/mu)s = {v1} is even")
            add("(iii) second parity", v2 % 2 == 0, f"((r+1)nu/mu)s + nu = {v2} is even")
    else:
        v1 = (q - 1) // mu * nu
        add("(iii) (q-1)nu/mu even", v1 % 2 == 0, f"((q-1)/mu)nu = {v1} is even")
        if kappa is None:
            add("(iii) ((r+1)nu/mu)s even", False, "((r+1)nu/mu)s is not an integer")
        else:
            add("(iii) ((r+1)nu/mu)s even", (kappa * s) % 2 == 0,
                f"((r+1)nu/mu)s = {kappa * s} is even")

    predicted = None
    if kappa is not None:
        e = kappa * (s * (s - 1) // 2)
        predicted = 1 if e % 2 == 0 else -1  # eta(omega^e) = (-1)^e
        if theorem in (6, 7):
            add("(iv) ((r+1)nu/mu)s(s-1)/2 even", e % 2 == 0,
                f"(nu(r+1)/mu)*s(s-1)/2 = {e} is even")
    elif theorem in (6, 7):
        add("(iv) ((r+1)nu/mu)s(s-1)/2 even", False, "nu(r+1)/mu is not an integer")
    return ConditionReport(theorem, tuple(checks), n, predicted)


def check_generic_conditions(ctx: FieldCtx, params: CosetParams, variant) -> ConditionReport:
    """``variant`` is 5/6/7, ``"thm5"``.. or ``"n"``/``"n1"``/``"n2"``."""
    return generic_conditions(ctx.q, ctx.r, params.mu, params.nu, params.s, params.t,
                              _theorem_of(variant))


def _theorem_of(variant) -> int:
    if isinstance(variant, int):
        return variant
    if variant in VARIANT_THEOREM:
        return VARIANT_THEOREM[variant]
    if isinstance(variant, str) and variant.startswith("thm"):
        return int(variant[3:])
    raise ValueError(f"unknown variant {variant!r}")


def build_symdiff_mult(ctx: FieldCtx, params: CosetParams, variant="thm5",
                       force: bool = False, provenance: str | None = None) -> EvalSet:
    """A ^ B, or ({0} u A) ^ B for the length-n+2 variant.

    Refuses parameters whose condition report fails unless ``force`` is set;
    the set is still built literally in that case so it can be checked.
    """
    theorem = _theorem_of(variant)
    report = check_generic_conditions(ctx, params, theorem)
    if not report.verdict and not force:
        raise ParameterError(f"theorem {theorem} conditions fail: {', '.join(report.failed())}")
    params.validate(ctx.q)
    include_zero = theorem == 7 or params.include_zero
    blocks_a = _coset_blocks(ctx, params.mu, params.nu, params.s)
    if include_zero:
        blocks_a = [Block("point", (0,))] + blocks_a
    blocks_b = _coset_blocks(ctx, params.nu, params.mu, params.t)
    expected = 1 if theorem == 7 else report.predicted_character
    tag = provenance or f"thm{theorem}(mu={params.mu},nu={params.nu},s={params.s},t={params.t})"
    S = symdiff_set(blocks_a, blocks_b, tag, expected, theorem=f"thm{theorem}", mu=params.mu,
                    nu=params.nu, s=params.s, t=params.t, include_zero=include_zero)
    expect = symdiff_size(ctx.q, params.mu, params.nu, params.s, params.t) + include_zero
    if len(S) != expect:
        raise AssertionError(f"|A^B|={len(S)}, closed form {expect}")
    return S
