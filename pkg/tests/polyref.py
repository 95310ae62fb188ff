"""Schoolbook polynomial arithmetic over GF(p), kept independent of mdssd.gf."""

from itertools import product


def to_coeffs(x, p, deg):
    out = []
    for _ in range(deg):
        out.append(x % p)
        x //= p
    return out


def from_coeffs(cs, p):
    return sum(c * p ** i for i, c in enumerate(cs))


def polymulmod(a, b, f, p):
    deg = len(f) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(len(prod) - 1, deg - 1, -1):
        c = prod[k]
        if c:
            for i in range(deg + 1):
                prod[k - deg + i] = (prod[k - deg + i] - c * f[i]) % p
    return (prod + [0] * deg)[:deg]


def ref_mul(x, y, f, p):
    deg = len(f) - 1
    return from_coeffs(polymulmod(to_coeffs(x, p, deg), to_coeffs(y, p, deg), f, p), p)


def ref_add(x, y, p, deg):
    return from_coeffs([(a + b) % p for a, b in zip(to_coeffs(x, p, deg), to_coeffs(y, p, deg))], p)


def divides(g, f, p):
    """Whether monic g divides f over GF(p), by long division."""
    r = list(f)
    dg = len(g) - 1
    for k in range(len(r) - 1, dg - 1, -1):
        c = r[k]
        if c:
            for i in range(dg + 1):
                r[k - dg + i] = (r[k - dg + i] - c * g[i]) % p
    return not any(r[:dg])


def brute_irreducible(f, p):
    """No monic factor of degree 1..deg/2 (trial division by every candidate)."""
    deg = len(f) - 1
    for d in range(1, deg // 2 + 1):
        for low in product(range(p), repeat=d):
            if divides(list(low) + [1], f, p):
                return False
    return True
