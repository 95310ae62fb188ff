import random
from itertools import product

import pytest

from mdssd.gf import FieldCtx, FieldError, ctx_new, split_q

from polyref import brute_irreducible, ref_add, ref_mul

SMALL = [9, 25, 49, 121, 169]


@pytest.mark.parametrize("p,m,q,r", [(3, 1, 9, 3), (5, 2, 625, 25), (23, 1, 529, 23)])
def test_ctx_parameters(p, m, q, r):
    ctx = ctx_new(p, m, 10 ** 6)
    assert (ctx.q, ctx.r, ctx.r ** 2) == (q, r, q)


@pytest.mark.parametrize("q", [9, 25, 49, 121, 625, 729, 6561])
def test_modulus_irreducible_by_trial_division(field, q):
    ctx = field(q)
    assert brute_irreducible(list(ctx.modulus), ctx.p)


@pytest.mark.parametrize("q", [9, 25, 49, 121, 169, 625])
def test_modulus_is_least_in_ascending_lex_order(field, q):
    ctx = field(q)
    # product() yields (c_0, ..., c_{deg-1}) with c_0 most significant
    first = next(list(low) + [1] for low in product(range(ctx.p), repeat=ctx.deg)
                 if brute_irreducible(list(low) + [1], ctx.p))
    assert tuple(first) == ctx.modulus


def test_modulus_for_q9():
    assert ctx_new(3, 1).modulus == (1, 0, 1)


@pytest.mark.parametrize("q", SMALL)
def test_mul_add_match_schoolbook(field, q):
    ctx = field(q)
    f, p, deg = list(ctx.modulus), ctx.p, ctx.deg
    rng = random.Random(q)
    pairs = [(x, y) for x in range(q) for y in range(q)] if q <= 49 else \
        [(rng.randrange(q), rng.randrange(q)) for _ in range(3000)]
    for x, y in pairs:
        assert ctx.mul(x, y) == ref_mul(x, y, f, p)
        assert ctx.add(x, y) == ref_add(x, y, p, deg)


@pytest.mark.parametrize("q", [9, 49, 169])
def test_table_free_arithmetic_agrees(q):
    p, m = split_q(q)
    fast, slow = ctx_new(p, m), FieldCtx(p, m, dlog_cap=0)
    assert not slow.has_tables and fast.has_tables
    assert slow.omega == fast.omega
    rng = random.Random(1)
    for _ in range(500):
        x, y = rng.randrange(q), rng.randrange(q)
        assert slow.add(x, y) == fast.add(x, y)
        assert slow.mul(x, y) == fast.mul(x, y)
        if x:
            assert slow.inv(x) == fast.inv(x)
            assert slow.sqrt(ctx_sq := fast.mul(x, x)) == fast.sqrt(ctx_sq)


@pytest.mark.parametrize("q", SMALL + [625, 729, 961])
def test_encoding_and_omega(field, q):
    ctx = field(q)
    assert ctx.mul(1, 1) == 1 and ctx.add(0, 0) == 0
    assert ctx.pow(ctx.omega, ctx.order) == 1
    for ell in {f for f in range(2, ctx.order + 1) if ctx.order % f == 0 and all(f % d for d in range(2, f))}:
        assert ctx.pow(ctx.omega, ctx.order // ell) != 1
    half = ctx.pow(ctx.omega, ctx.order // 2)
    assert half != 1 and ctx.mul(half, half) == 1 and half == ctx.minus_one


@pytest.mark.parametrize("q", SMALL)
def test_omega_is_least_primitive(field, q):
    ctx = field(q)
    for x in range(2, ctx.omega):
        order = next(k for k in range(1, q) if ctx.pow(x, k) == 1)
        assert order < ctx.order


@pytest.mark.parametrize("q", SMALL)
def test_inverse_and_dlog(field, q):
    ctx = field(q)
    for x in range(1, q):
        assert ctx.mul(x, ctx.inv(x)) == 1
        assert ctx.omega_pow(ctx.dlog(x)) == x
    with pytest.raises(FieldError):
        ctx.inv(0)


@pytest.mark.parametrize("q", [9, 49])
def test_trace(field, q):
    ctx = field(q)
    for c in ctx.subfield_elements():
        assert ctx.trace(c) == ctx.add(c, c)
    theta = ctx.omega_pow((ctx.r + 1) // 2)
    assert theta != 0 and ctx.trace(theta) == 0
    counts = {}
    for x in range(q):
        counts[ctx.trace(x)] = counts.get(ctx.trace(x), 0) + 1
    assert sorted(counts) == ctx.subfield_elements()
    assert set(counts.values()) == {ctx.r}


@pytest.mark.parametrize("q", [9, 49, 121])
def test_eta(field, q):
    ctx = field(q)
    assert ctx.eta(1) == 1 and ctx.eta(ctx.omega) == -1
    assert ctx.eta(ctx.minus_one) == 1
    assert all(ctx.eta(c) == 1 for c in ctx.subfield_elements() if c)
    with pytest.raises(FieldError):
        ctx.eta(0)


@pytest.mark.parametrize("q", [9, 25, 49, 121, 169])
def test_eta_multiplicative_exhaustive(field, q):
    ctx = field(q)
    eta = [0] + [ctx.eta(x) for x in range(1, q)]
    for x in range(1, q):
        for y in range(1, q):
            assert eta[ctx.mul(x, y)] == eta[x] * eta[y]


def test_sqrt_paths_agree_q49(field):
    ctx = field(49)
    assert ctx.sqrt(0) == 0
    for y in range(1, 49):
        x = ctx.mul(y, y)
        a, b = ctx.sqrt(x, "dlog"), ctx.sqrt(x, "tonelli")
        assert a == b == min(y, ctx.neg(y))


@pytest.mark.parametrize("q", [625, 6561, 531441])
def test_sqrt_roundtrip(field, q):
    ctx = field(q)
    rng = random.Random(q)
    for _ in range(100):
        y = rng.randrange(1, q)
        x = ctx.mul(y, y)
        assert ctx.mul(ctx.sqrt(x), ctx.sqrt(x)) == x
        assert ctx.sqrt(x, "tonelli") == ctx.sqrt(x, "dlog")
    with pytest.raises(FieldError):
        ctx.sqrt(ctx.omega)


@pytest.mark.parametrize("bad", [8, 27, 12, 2 ** 4, 7 ** 3, 1, 0])
def test_split_q_rejects(bad):
    with pytest.raises(FieldError):
        split_q(bad)


def test_field_rejects_even_or_composite_p():
    for p in (2, 9, 15):
        with pytest.raises(FieldError):
            FieldCtx(p, 1)
