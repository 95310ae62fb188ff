"""Property-based checks of field arithmetic, characters and code invariants."""

import random

import numpy as np
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from mdssd.gf import ctx_for_q
from mdssd.grscodes import build_code, delta, deltas
from mdssd.verify import is_mds, is_self_dual, rank
from mdssd.verify.oracles import check_delta_modes, random_sets

QS = [9, 25, 49, 121, 169, 625, 729]


@st.composite
def field_and(draw, n=1, nonzero=False):
    q = draw(st.sampled_from(QS))
    ctx = ctx_for_q(q)
    lo = 1 if nonzero else 0
    return (ctx, *[draw(st.integers(lo, q - 1)) for _ in range(n)])


@given(field_and(3))
def test_ring_axioms(data):
    F, a, b, c = data
    assert F.add(a, b) == F.add(b, a) and F.mul(a, b) == F.mul(b, a)
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0 and F.sub(F.add(a, b), b) == a
    assert F.mul(a, 1) == a and F.add(a, 0) == a


@given(field_and(2, nonzero=True))
def test_inverse_and_division(data):
    F, a, b = data
    assert F.mul(a, F.inv(a)) == 1
    assert F.mul(F.div(a, b), b) == a


@given(field_and(1, nonzero=True), st.integers(-50, 10_000))
def test_dlog_roundtrip(data, e):
    F, a = data
    assert F.omega_pow(F.dlog(a)) == a
    assert F.dlog(F.omega_pow(e)) == e % F.order
    assert F.pow(a, F.order) == 1


@given(field_and(2, nonzero=True))
def test_eta_multiplicative(data):
    F, a, b = data
    assert F.eta(F.mul(a, b)) == F.eta(a) * F.eta(b)
    assert F.eta(F.mul(a, a)) == 1
    assert F.eta(a) == (1 if F.dlog(a) % 2 == 0 else -1)


@given(field_and(1, nonzero=True))
def test_sqrt_of_squares(data):
    F, a = data
    sq = F.mul(a, a)
    root = F.sqrt(sq)
    assert F.mul(root, root) == sq and root in (a, F.neg(a))


@given(field_and(3))
def test_trace_is_subfield_linear(data):
    F, x, y, c0 = data
    c = F.pow(F.subfield_generator, c0) if c0 else 0   # arbitrary element of GF(r)
    assert F.in_subfield(c) and F.in_subfield(F.trace(x))
    assert F.trace(F.add(x, y)) == F.add(F.trace(x), F.trace(y))
    assert F.trace(F.mul(c, x)) == F.mul(c, F.trace(x))
    assert F.frobenius_r(F.frobenius_r(x)) == x


@settings(max_examples=25)
@given(st.sampled_from([9, 25, 49, 121]),
       st.sampled_from(["trace-union", "trace-symdiff", "cosets", "cosets-zero"]),
       st.integers(0, 2 ** 32 - 1))
def test_delta_modes_agree_on_random_sets(q, family, seed):
    F = ctx_for_q(q)
    sets = random_sets(F, family, 3, random.Random(seed))
    checked, bad = check_delta_modes(F, sets)
    assert not bad and checked == sum(len(S) for S in sets)


def _mat_mul(F, A, G):
    k, n = len(A), len(G[0])
    out = np.zeros((k, n), dtype=np.int64)
    for i in range(k):
        for j in range(n):
            acc = 0
            for l in range(len(G)):
                if A[i][l] and G[l][j]:
                    acc = F.add(acc, F.mul(A[i][l], G[l][j]))
            out[i, j] = acc
    return out


CODES = [(49, 3, dict(t=1, s=6)), (121, 9, dict(s=1, t=0, variant="n")),
         (9, 8, dict(s=1, t=1, variant="n2")), (25, 1, dict(t=2, s=0))]


@settings(max_examples=20)
@given(st.sampled_from(CODES), st.integers(0, 2 ** 32 - 1))
def test_verdicts_invariant_under_row_operations(case, seed):
    q, th, kw = case
    F = ctx_for_q(q)
    G = build_code(F, th, **kw).matrix.rows
    k = G.shape[0]
    rng = random.Random(seed)
    A = [[rng.randrange(q) for _ in range(k)] for _ in range(k)]
    assume(rank(F, A) == k)
    H = _mat_mul(F, A, G.tolist())
    assert is_self_dual(F, H).ok
    assert is_mds(F, H).ok == is_mds(F, G).ok is True


@settings(max_examples=20)
@given(st.sampled_from(CODES), st.integers(0, 2 ** 32 - 1))
def test_column_scaling_by_minus_one_keeps_self_duality(case, seed):
    q, th, kw = case
    F = ctx_for_q(q)
    G = np.array(build_code(F, th, **kw).matrix.rows)
    j = random.Random(seed).randrange(G.shape[1])
    G[:, j] = [F.neg(int(x)) for x in G[:, j]]
    assert is_self_dual(F, G).ok


@settings(max_examples=15)
@given(st.sampled_from([49, 121]), st.integers(0, 2 ** 32 - 1))
def test_delta_is_product_over_other_points(q, seed):
    F = ctx_for_q(q)
    S = random_sets(F, "trace-symdiff", 1, random.Random(seed))[0]
    ds = deltas(F, S)
    for a, d in zip(S.elements, ds):
        assert d == delta(F, S, a, "direct")
        assert d != 0
