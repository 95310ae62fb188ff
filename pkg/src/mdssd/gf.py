"""Arithmetic in the tower GF(p) < GF(r) < GF(q), with r = p^m and q = r^2.

Elements are plain ints in ``[0, q)``: the coefficients ``c_0 .. c_{2m-1}``
of the reducing polynomial's residue, read as base-p digits.  ``0`` and ``1``
map to the field's zero and one, and ``0 .. p-1`` is the prime subfield.

When ``q <= dlog_cap`` the context also carries exp/log tables for the fixed
primitive element and a Zech table, and scalar ops are table lookups.  Every
op has a table-free path so large fields still work, only slower.
"""

from __future__ import annotations

from functools import lru_cache
from math import isqrt

import numpy as np

__all__ = [
    "FieldCtx",
    "FieldError",
    "ctx_new",
    "ctx_for_q",
    "split_q",
    "is_prime",
    "prime_factors",
]

DEFAULT_DLOG_CAP = 1 << 20
_MAX_Q = 1 << 62


class FieldError(ValueError):
    """Bad field parameters or an undefined operation (e.g. 1/0)."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def split_q(q: int) -> tuple[int, int]:
    """Return ``(p, m)`` with ``q == p**(2*m)`` and ``p`` an odd prime."""
    if q < 9:
        raise FieldError(f"q={q} is not an even power of an odd prime")
    for p in prime_factors(q)[:1]:
        e, rest = 0, q
        while rest % p == 0:
            rest //= p
            e += 1
        if rest == 1 and p % 2 == 1 and e % 2 == 0:
            return p, e // 2
    raise FieldError(f"q={q} is not an even power of an odd prime")


# -- polynomials over GF(p), ascending coefficient lists ------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], f: list[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    df = len(f) - 1
    inv_lead = pow(f[-1], p - 2, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        _trim(a)
    return a


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return [c % p for c in out]


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _ppow(a: list[int], e: int, f: list[int], p: int) -> list[int]:
    """a**e mod f."""
    result = [1]
    base = list(a)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), f, p)
        base = _pmod(_pmul(base, base, p), f, p)
        e >>= 1
    return result


def _is_irreducible(f: list[int], p: int) -> bool:
    # Ben-Or: f of degree D is irreducible iff gcd(f, x^(p^d) - x) = 1 for d <= D/2.
    deg = len(f) - 1
    xp = [0, 1]
    for _ in range(deg // 2):
        xp = _ppow(xp, p, f, p)
        diff = list(xp) + [0] * max(0, 2 - len(xp))
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(f, diff, p)) > 1:
            return False
    return True


def _least_irreducible(p: int, deg: int) -> list[int]:
    """Least monic irreducible of degree ``deg``, comparing ascending coefficients."""
    # itertools.product order == lexicographic order on (c_0, ..., c_{deg-1})
    from itertools import product

    for coeffs in product(range(p), repeat=deg):
        if deg > 1 and coeffs[0] == 0:
            continue
        f = list(coeffs) + [1]
        if _is_irreducible(f, p):
            return f
    raise FieldError(f"no irreducible polynomial of degree {deg} over GF({p})")


class FieldCtx:
    """The field GF(q), q = p^(2m), together with its subfield GF(r), r = p^m.

    Immutable after construction.  Build one with :func:`ctx_new` (cached)
    unless a non-default modulus is needed.
    """

    def __init__(self, p: int, m: int, dlog_cap: int = DEFAULT_DLOG_CAP,
                 modulus: tuple[int, ...] | None = None):
        if not isinstance(p, int) or p % 2 == 0 or not is_prime(p):
            raise FieldError(f"p={p} must be an odd prime")
        if not isinstance(m, int) or m < 1:
            raise FieldError(f"m={m} must be a positive integer")
        q = p ** (2 * m)
        if q > _MAX_Q:
            raise FieldError(f"q={p}^{2 * m} does not fit in 62 bits")
        self.p, self.m = p, m
        self.deg = 2 * m
        self.r = p ** m
        self.q = q
        self.order = q - 1

        if modulus is None:
            f = _least_irreducible(p, self.deg)
        else:
            f = [c % p for c in modulus]
            if len(f) != self.deg + 1 or f[-1] != 1:
                raise FieldError(f"modulus must be monic of degree {self.deg}")
            if not _is_irreducible(f, p):
                raise FieldError(f"modulus {tuple(modulus)} is reducible over GF({p})")
        self.modulus = tuple(f)
        self._f = f
        self._weights = [p ** i for i in range(self.deg)]

        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._zech: list[int] | None = None
        self.omega = self._find_primitive()
        if q <= dlog_cap:
            self._build_tables()

    # -- encoding ---------------------------------------------------------------

    def digits(self, x: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.deg):
            x, c = divmod(x, p)
            out.append(c)
        return out

    def from_digits(self, cs) -> int:
        return sum((c % self.p) * w for c, w in zip(cs, self._weights))

    def __repr__(self):
        return f"FieldCtx(p={self.p}, m={self.m}, q={self.q}, modulus={self.modulus})"

    @property
    def has_tables(self) -> bool:
        return self._log is not None

    @property
    def fingerprint(self) -> tuple[int, int, tuple[int, ...]]:
        return (self.p, self.m, self.modulus)

    @property
    def minus_one(self) -> int:
        return self.p - 1

    # -- construction helpers ---------------------------------------------------

    def _pmul_elem(self, a: int, b: int) -> int:
        return self.from_digits(_pmod(_pmul(self.digits(a), self.digits(b), self.p), self._f, self.p))

    def _ppow_elem(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self._pmul_elem(result, base)
            base = self._pmul_elem(base, base)
            e >>= 1
        return result

    def _find_primitive(self) -> int:
        # q - 1 = (r - 1)(r + 1); factoring the halves keeps trial division cheap
        primes = sorted(set(prime_factors(self.r - 1)) | set(prime_factors(self.r + 1)))
        cofactors = [self.order // ell for ell in primes]
        for x in range(2, self.q):
            if all(self._ppow_elem(x, c) != 1 for c in cofactors):
                return x
        raise FieldError("no primitive element found")  # unreachable for a field

    def _mult_matrix(self, w: int) -> np.ndarray:
        """Matrix of y -> w*y on coefficient vectors over GF(p)."""
        cols = [self.digits(self._pmul_elem(w, self.p ** j)) for j in range(self.deg)]
        return np.array(cols, dtype=np.int64).T

    def _build_tables(self) -> None:
        p, qm1 = self.p, self.order
        block = min(qm1, 1024)
        step = self._mult_matrix(self.omega)
        first = np.zeros((self.deg, block), dtype=np.int64)
        v = np.zeros(self.deg, dtype=np.int64)
        v[0] = 1
        for i in range(block):
            first[:, i] = v
            v = step @ v % p
        jump = self._mult_matrix(self._ppow_elem(self.omega, block))
        chunks = [first]
        done = block
        cur = first
        while done < qm1:
            cur = jump @ cur % p
            chunks.append(cur)
            done += block
        powers = np.concatenate(chunks, axis=1)[:, :qm1]
        exp = (np.array(self._weights, dtype=np.int64) @ powers).astype(np.int64)
        log = np.full(self.q, -1, dtype=np.int64)
        log[exp] = np.arange(qm1, dtype=np.int64)
        if (log[1:] < 0).any():
            raise FieldError("exp table is not a permutation; omega is not primitive")
        # Zech: log(1 + w^k); adding 1 bumps the constant digit
        c0 = exp % p
        one_plus = exp - c0 + (c0 + 1) % p
        zech = log[one_plus]
        for arr in (exp, log, zech):
            arr.setflags(write=False)
        self.exp_table, self.log_table, self.zech_table = exp, log, zech
        self._exp, self._log, self._zech = exp.tolist(), log.tolist(), zech.tolist()

    # -- arithmetic ---------------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if a == 0:
            return b
        if b == 0:
            return a
        if self._log is not None:
            la = self._log[a]
            z = self._zech[(self._log[b] - la) % self.order]
            return 0 if z < 0 else self._exp[(la + z) % self.order]
        p, out, w = self.p, 0, 1
        for _ in range(self.deg):
            a, ca = divmod(a, p)
            b, cb = divmod(b, p)
            out += ((ca + cb) % p) * w
            w *= p
        return out

    def neg(self, a: int) -> int:
        if a == 0:
            return 0
        if self._log is not None:
            return self._exp[(self._log[a] + self.order // 2) % self.order]
        return self.from_digits([-c for c in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._log is not None:
            return self._exp[(self._log[a] + self._log[b]) % self.order]
        return self._pmul_elem(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldError("inverse of zero")
        if self._log is not None:
            return self._exp[-self._log[a] % self.order]
        return self._ppow_elem(a, self.order - 1)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if a == 0:
            return 1 if e == 0 else 0
        if self._log is not None:
            return self._exp[self._log[a] * e % self.order]
        return self._ppow_elem(a, e % self.order)

    def omega_pow(self, e: int) -> int:
        """omega**e for any integer e."""
        if self._exp is not None:
            return self._exp[e % self.order]
        return self._ppow_elem(self.omega, e % self.order)

    def scalar(self, n: int) -> int:
        """The image of the integer n in the prime field."""
        return n % self.p

    def prod(self, xs) -> int:
        out = 1
        for x in xs:
            out = self.mul(out, x)
            if out == 0:
                return 0
        return out

    def dlog(self, x: int) -> int:
        if x == 0:
            raise FieldError("discrete log of zero")
        if self._log is None:
            raise FieldError(f"no dlog table for q={self.q}")
        return self._log[x]

    # -- tower structure ------------------------------------------------------------

    def frobenius_r(self, x: int) -> int:
        """x**r, the generator of Gal(GF(q)/GF(r))."""
        return self.pow(x, self.r)

    def trace(self, x: int) -> int:
        """Relative trace GF(q) -> GF(r): x + x^r."""
        return self.add(x, self.frobenius_r(x))

    def in_subfield(self, x: int) -> bool:
        return self.frobenius_r(x) == x

    @property
    def subfield_generator(self) -> int:
        """omega^(r+1), a primitive element of GF(r)."""
        return self.omega_pow(self.r + 1)

    def subfield_elements(self) -> list[int]:
        """GF(r) sorted by encoding."""
        g = self.subfield_generator
        out, x = [0], 1
        for _ in range(self.r - 1):
            out.append(x)
            x = self.mul(x, g)
        return sorted(out)

    # -- squares ------------------------------------------------------------------

    def eta(self, x: int) -> int:
        """Quadratic character: +1 on nonzero squares, -1 on non-squares."""
        if x == 0:
            raise FieldError("quadratic character of zero is undefined")
        y = self.pow(x, self.order // 2)
        if y == 1:
            return 1
        if y == self.minus_one:
            return -1
        raise FieldError(f"x^((q-1)/2) = {y} is not +-1")  # unreachable

    def is_square(self, x: int) -> bool:
        return x == 0 or self.eta(x) == 1

    def sqrt(self, x: int, method: str | None = None) -> int:
        """Square root, returning the root with the smaller encoding.

        ``method`` is ``"dlog"`` (halve the discrete log) or ``"tonelli"``;
        by default the table path is used when tables exist.
        """
        if x == 0:
            return 0
        if self.eta(x) != 1:
            raise FieldError(f"{x} is not a square in GF({self.q})")
        if method is None:
            method = "dlog" if self._log is not None else "tonelli"
        if method == "dlog":
            y = self.omega_pow(self.dlog(x) // 2)
        elif method == "tonelli":
            y = self._tonelli_shanks(x)
        else:
            raise ValueError(f"unknown sqrt method {method!r}")
        return min(y, self.neg(y))

    def _tonelli_shanks(self, x: int) -> int:
        Q, S = self.order, 0
        while Q % 2 == 0:
            Q //= 2
            S += 1
        z = self.omega  # never a square
        M = S
        c = self.pow(z, Q)
        t = self.pow(x, Q)
        R = self.pow(x, (Q + 1) // 2)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = self.mul(t2, t2)
                i += 1
            b = self.pow(c, 1 << (M - i - 1))
            M = i
            c = self.mul(b, b)
            t = self.mul(t, c)
            R = self.mul(R, b)
        return R


@lru_cache(maxsize=None)
def ctx_new(p: int, m: int, dlog_cap: int = DEFAULT_DLOG_CAP) -> FieldCtx:
    """Cached :class:`FieldCtx` for GF(p^(2m)) with the canonical modulus."""
    return FieldCtx(p, m, dlog_cap)


def ctx_for_q(q: int, dlog_cap: int = DEFAULT_DLOG_CAP) -> FieldCtx:
    p, m = split_q(q)
    return ctx_new(p, m, dlog_cap)
