"""Evaluation sets from trace fibers and additive cosets of a subspace of GF(r)."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from ..gf import FieldCtx
from .core import Block, EvalSet, ParameterError, symdiff_set, union_set


def subspace_dim(p: int, t: int) -> int:
    """ceil(log_p t), computed without floating point."""
    k, size = 0, 1
    while size < t:
        size *= p
        k += 1
    return k


def subspace(ctx: FieldCtx, dim: int) -> tuple[int, ...]:
    """The GF(p)-span of 1, g, ..., g^(dim-1), g = ctx.subfield_generator; sorted."""
    g = ctx.subfield_generator
    basis, x = [], 1
    for _ in range(dim):
        basis.append(x)
        x = ctx.mul(x, g)
    out = set()
    for coeffs in product(range(ctx.p), repeat=dim):
        acc = 0
        for c, v in zip(coeffs, basis):
            acc = ctx.add(acc, ctx.mul(c, v))
        out.add(acc)
    return tuple(sorted(out))


def additive_cosets(ctx: FieldCtx, H) -> list[tuple[int, ...]]:
    """Cosets of H in GF(r), each sorted, ordered by least element."""
    seen: set[int] = set()
    cosets = []
    for x in ctx.subfield_elements():
        if x in seen:
            continue
        c = tuple(sorted(ctx.add(x, h) for h in H))
        seen.update(c)
        cosets.append(c)
    return cosets


@dataclass(frozen=True)
class TraceSubspaceParams:
    """Parameters shared by the trace/subspace constructions.

    ``h`` are the fiber levels (h[0] == 0), ``b`` the coset representatives
    b_0 = 0, b_1, ..., b_s with b_i = -b_(s/2+i).
    """

    t: int
    s: int
    t_prime: int
    H: tuple[int, ...]
    h: tuple[int, ...]
    b: tuple[int, ...]

    @classmethod
    def default(cls, ctx: FieldCtx, t: int, s: int) -> "TraceSubspaceParams":
        check_trace_ranges(ctx, t, s)
        tp = subspace_dim(ctx.p, t)
        H = subspace(ctx, tp)
        h = H[:t]
        Hset = set(H)
        chosen: list[int] = []
        used: set[tuple[int, ...]] = set()
        for coset in additive_cosets(ctx, H):
            if len(chosen) == s // 2:
                break
            if coset[0] == 0 or coset in used:
                continue
            rep = coset[0]
            neg = tuple(sorted(ctx.add(ctx.neg(rep), x) for x in Hset))
            chosen.append(rep)
            used.update((coset, neg))
        b = (0, *chosen, *(ctx.neg(x) for x in chosen))
        return cls(t, s, tp, H, h, b)

    def problems(self, ctx: FieldCtx) -> list[str]:
        """Every violated invariant, as text; empty when valid."""
        out = []
        p, m = ctx.p, ctx.m
        if not 1 <= self.t <= ctx.r:
            out.append(f"t={self.t} outside 1..{ctx.r}")
        if self.t_prime != subspace_dim(p, self.t):
            out.append(f"t'={self.t_prime} but ceil(log_p t)={subspace_dim(p, self.t)}")
        if self.s % 2:
            out.append(f"s={self.s} is odd")
        if self.t_prime <= m and not 0 <= self.s <= p ** (m - self.t_prime) - 1:
            out.append(f"s={self.s} outside 0..{p ** (m - self.t_prime) - 1}")
        Hset = set(self.H)
        if len(Hset) != p ** self.t_prime:
            out.append(f"|H|={len(Hset)} != p^t'={p ** self.t_prime}")
        if any(ctx.add(x, y) not in Hset for x in self.H for y in self.H):
            out.append("H is not closed under addition")
        if any(not ctx.in_subfield(x) for x in self.H):
            out.append("H is not inside GF(r)")
        if len(self.h) != self.t or len(set(self.h)) != self.t:
            out.append("h must be t distinct elements")
        if self.h and self.h[0] != 0:
            out.append("h_1 must be 0")
        if not set(self.h) <= Hset:
            out.append("some h_i lies outside H")
        if len(self.b) != self.s + 1 or (self.b and self.b[0] != 0):
            out.append("b must be b_0 = 0, b_1, ..., b_s")
        if any(not ctx.in_subfield(x) for x in self.b):
            out.append("some b_j lies outside GF(r)")
        cosets = [frozenset(ctx.add(x, y) for y in self.H) for x in self.b]
        if len(set(cosets)) != len(cosets):
            out.append("cosets b_j + H are not pairwise distinct")
        half = self.s // 2
        for i in range(1, half + 1):
            if i + half < len(self.b) and self.b[i] != ctx.neg(self.b[half + i]):
                out.append(f"negation pairing broken: b_{i} != -b_{half + i}")
        return out

    def validate(self, ctx: FieldCtx) -> None:
        bad = self.problems(ctx)
        if bad:
            raise ParameterError("; ".join(bad))


def check_trace_ranges(ctx: FieldCtx, t: int, s: int) -> None:
    if not 1 <= t <= ctx.r:
        raise ParameterError(f"t={t} must satisfy 1 <= t <= r={ctx.r}")
    tp = subspace_dim(ctx.p, t)
    smax = ctx.p ** (ctx.m - tp) - 1
    if s % 2 or not 0 <= s <= smax:
        raise ParameterError(f"s={s} must be even with 0 <= s <= p^(m-t')-1 = {smax}")


def _fiber_block(ctx: FieldCtx, h: int) -> Block:
    if not ctx.in_subfield(h):
        raise ParameterError(f"trace level {h} is not in GF(r)")
    theta = ctx.omega_pow((ctx.r + 1) // 2)  # trace zero, nonzero
    half = ctx.div(h, 2)
    pts = tuple(ctx.add(half, ctx.mul(c, theta)) for c in ctx.subfield_elements())
    if any(ctx.trace(x) != h for x in pts):
        raise AssertionError("trace fiber parametrisation failed")
    return Block("trace", pts, level=h)


def trace_fiber(ctx: FieldCtx, h: int) -> EvalSet:
    """All r solutions of x + x^r = h."""
    return union_set([_fiber_block(ctx, h)], f"trace-fiber(h={h})", h=h)


def subspace_cosets(ctx: FieldCtx, params: TraceSubspaceParams) -> tuple[EvalSet, ...]:
    """H_0, ..., H_s with H_j = b_j + H, each as a one-block set."""
    params.validate(ctx)
    return tuple(union_set([_coset_block(ctx, params, j)], f"coset(b={params.b[j]})", j=j)
                 for j in range(params.s + 1))


def _coset_block(ctx, params, j) -> Block:
    b = params.b[j]
    return Block("additive", tuple(ctx.add(b, x) for x in params.H))


def build_union_trace_subspace(ctx: FieldCtx, t: int, s: int,
                               params: TraceSubspaceParams | None = None,
                               force: bool = False) -> EvalSet:
    """T_1 u ... u T_t u H_1 u ... u H_s, the set behind the trace-union families.

    Even t gives an even set for a plain GRS code, odd t an odd set for the
    extended code.  Every delta lands in GF(r), so the expected character is +1.
    """
    if params is None:
        params = TraceSubspaceParams.default(ctx, t, s)
    elif (params.t, params.s) != (t, s):
        raise ParameterError("params disagree with (t, s)")
    if not force:
        params.validate(ctx)
    blocks = [_fiber_block(ctx, h) for h in params.h]
    blocks += [_coset_block(ctx, params, j) for j in range(1, s + 1)]
    thm = "thm1" if t % 2 == 0 else "thm2"
    A = union_set(blocks, f"{thm}(t={t},s={s})", +1, theorem=thm, t=t, s=s,
                  t_prime=params.t_prime)
    expect = t * ctx.r + s * ctx.p ** params.t_prime
    if len(A) != expect:
        raise AssertionError(f"|A|={len(A)}, closed form {expect}")
    return A


def build_symdiff_trace_subspace(ctx: FieldCtx, t: int, s: int,
                                 params: TraceSubspaceParams | None = None,
                                 force: bool = False) -> EvalSet:
    """(T_1 u ... u T_t) symmetric-difference (H_0 u ... u H_s).

    The two sides meet exactly in {h_i / 2}.  Needs r = 3 mod 4.
    """
    if ctx.r % 4 != 3 and not force:
        raise ParameterError(f"r={ctx.r} is not 3 mod 4; (r+1)/2 must be even")
    if params is None:
        params = TraceSubspaceParams.default(ctx, t, s)
    elif (params.t, params.s) != (t, s):
        raise ParameterError("params disagree with (t, s)")
    if not force:
        params.validate(ctx)
    fibers = [_fiber_block(ctx, h) for h in params.h]
    cosets = [_coset_block(ctx, params, j) for j in range(s + 1)]
    thm = "thm3" if t % 2 else "thm4"
    S = symdiff_set(fibers, cosets, f"{thm}(t={t},s={s})", +1, theorem=thm, t=t, s=s,
                    t_prime=params.t_prime)
    expect = t * ctx.r + (s + 1) * ctx.p ** params.t_prime - 2 * t
    if len(S) != expect and not force:
        raise AssertionError(f"|A^B|={len(S)}, closed form {expect}")
    return S
