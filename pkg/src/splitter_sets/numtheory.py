"""Exact modular arithmetic in Z_q^x for word-sized primes.

Primality, factorization, primitive roots, discrete logarithms (Pohlig-Hellman
with baby-step/giant-step per prime power), multiplicative orders, p-adic
valuations and subgroup membership.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Iterable, Union

import numpy as np

# Index tables are only built on request, and only below this modulus.
TABLE_THRESHOLD = 1 << 20

# Deterministic for n < 3.3e24 (covers the whole 64-bit range).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test for 0 <= n < 2**63."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int, rng: random.Random) -> int:
    """Return a nontrivial factor of the odd composite n."""
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


@dataclass(frozen=True)
class FactoredInteger:
    """A positive integer together with its prime factorization."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)) or any(e < 1 for _, e in self.factors):
            raise ValueError("factors must have strictly increasing primes and positive exponents")
        if math.prod(p**e for p, e in self.factors) != self.value:
            raise ValueError(f"factors do not multiply to {self.value}")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def exponent(self, p: int) -> int:
        return dict(self.factors).get(p, 0)

    def __str__(self):
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


def factorize(n: int) -> FactoredInteger:
    """Complete prime factorization of 1 <= n < 2**63."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    counts: dict[int, int] = {}
    m = n
    for p in _SMALL_PRIMES:
        while m % p == 0:
            counts[p] = counts.get(p, 0) + 1
            m //= p
    # fixed seed: factorizations must be reproducible
    rng = random.Random(0x5EED)
    stack = [m] if m > 1 else []
    while stack:
        x = stack.pop()
        if is_prime(x):
            counts[x] = counts.get(x, 0) + 1
            continue
        r = math.isqrt(x)
        if r * r == x:
            stack += [r, r]
            continue
        d = _pollard_brent(x, rng)
        stack += [d, x // d]
    return FactoredInteger(n, tuple(sorted(counts.items())))


def valuation(n: int, p: int) -> int:
    """Largest e with p**e dividing n (n nonzero)."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def is_primitive_root(q: int, g: int, order: FactoredInteger | None = None) -> bool:
    if not 1 <= g <= q - 1:
        return False
    if q == 2:
        return g == 1
    order = order or factorize(q - 1)
    return all(pow(g, (q - 1) // r, q) != 1 for r in order.primes)


def find_primitive_root(q: int) -> int:
    """Smallest primitive root modulo the prime q."""
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    order = factorize(q - 1)
    for g in range(1, q):
        if is_primitive_root(q, g, order):
            return g
    raise AssertionError("unreachable: every prime has a primitive root")


@dataclass(frozen=True)
class RationalUnit:
    """A rational number a/b read as a unit of Z_q^x (sign kept in the numerator).

    The residue depends on q, so reduction happens in :meth:`residue`.
    """

    numerator: int
    denominator: int = 1

    def __post_init__(self):
        if self.numerator == 0 or self.denominator == 0:
            raise ValueError("numerator and denominator must be nonzero")
        if self.denominator < 0:
            object.__setattr__(self, "numerator", -self.numerator)
            object.__setattr__(self, "denominator", -self.denominator)

    @classmethod
    def parse(cls, text: str) -> "RationalUnit":
        f = Fraction(text.replace(" ", ""))
        return cls(f.numerator, f.denominator)

    def residue(self, q: int) -> int:
        if self.denominator % q == 0:
            raise ValueError(f"denominator {self.denominator} is not invertible mod {q}")
        r = self.numerator * pow(self.denominator, -1, q) % q
        if r == 0:
            raise ValueError(f"{self} is not a unit mod {q}")
        return r

    def __str__(self):
        if self.denominator == 1:
            return str(self.numerator)
        return f"{self.numerator}/{self.denominator}"


Unit = Union[int, Fraction, RationalUnit]


def _residue(q: int, x: Unit) -> int:
    if isinstance(x, RationalUnit):
        return x.residue(q)
    if isinstance(x, Fraction):
        return RationalUnit(x.numerator, x.denominator).residue(q)
    r = x % q
    if r == 0:
        raise ValueError(f"{x} is not a unit mod {q}")
    return r


def _bsgs(h: int, base: int, n: int, q: int) -> int:
    """Solve base**x = h (mod q) for x in [0, n) where base has order n."""
    m = math.isqrt(n - 1) + 1 if n > 1 else 1
    baby = {}
    e = 1
    for j in range(m):
        baby.setdefault(e, j)
        e = e * base % q
    giant = pow(base, -m, q)
    y = h
    for i in range(m):
        j = baby.get(y)
        if j is not None:
            return i * m + j
        y = y * giant % q
    raise ValueError("logarithm does not exist")


@dataclass(frozen=True)
class GroupCtx:
    """The cyclic group Z_q^x with a fixed primitive root g."""

    q: int
    g: int
    order: FactoredInteger
    _index: np.ndarray | None = field(default=None, repr=False, compare=False)

    @classmethod
    def create(cls, q: int, g: int | None = None, build_table: bool = False) -> "GroupCtx":
        """Build a context; g defaults to the smallest primitive root.

        With ``build_table`` and q below ``TABLE_THRESHOLD`` a full index
        table is precomputed so that ``discrete_log`` is a lookup.
        """
        if q < 3 or not is_prime(q):
            raise ValueError(f"q={q} must be an odd prime")
        order = factorize(q - 1)
        if g is None:
            g = find_primitive_root(q)
        elif not is_primitive_root(q, g % q, order):
            raise ValueError(f"{g} is not a primitive root modulo {q}")
        table = None
        if build_table and q < TABLE_THRESHOLD:
            table = np.zeros(q, dtype=np.int64)
            powers = power_table(g % q, q)
            table[powers] = np.arange(q - 1, dtype=np.int64)
        return cls(q, g % q, order, table)

    @property
    def n(self) -> int:
        """Group order q - 1."""
        return self.q - 1

    def ind(self, x: Unit) -> int:
        return discrete_log(self, x)

    def pow(self, e: int) -> int:
        return pow(self.g, e, self.q)

    def residue(self, x: Unit) -> int:
        return _residue(self.q, x)

    def with_root(self, g: int) -> "GroupCtx":
        return GroupCtx.create(self.q, g, build_table=self._index is not None)


def power_table(g: int, q: int) -> np.ndarray:
    """Array of g**i mod q for i in [0, q-2]."""
    out = np.empty(q - 1, dtype=np.int64)
    x = 1
    for i in range(q - 1):
        out[i] = x
        x = x * g % q
    return out


def pow_many(g: int, exponents, q: int) -> np.ndarray:
    """Vectorized g**e mod q for an array of nonnegative exponents."""
    e = np.asarray(exponents, dtype=np.int64).copy()
    if q >= 1 << 31:
        return np.array([pow(g, int(x), q) for x in e], dtype=np.int64)
    result = np.ones_like(e)
    base = np.full_like(e, g % q)
    while e.any():
        odd = (e & 1).astype(bool)
        result[odd] = result[odd] * base[odd] % q
        base = base * base % q
        e >>= 1
    return result


def discrete_log(ctx: GroupCtx, x: Unit) -> int:
    """ind_g(x): the exponent e in [0, q-2] with g**e = x (mod q)."""
    q = ctx.q
    h = _residue(q, x)
    if ctx._index is not None:
        return int(ctx._index[h])
    n = q - 1
    residues, moduli = [], []
    for p, e in ctx.order.factors:
        pe = p**e
        gamma = pow(ctx.g, n // p, q)  # order p
        g_pe = pow(ctx.g, n // pe, q)
        h_pe = pow(h, n // pe, q)
        x_k = 0
        for k in range(e):
            # strip the digits found so far, project onto the order-p subgroup
            hk = pow(h_pe * pow(g_pe, -x_k, q) % q, p ** (e - 1 - k), q)
            d = _bsgs(hk, gamma, p, q)
            x_k += d * p**k
        residues.append(x_k)
        moduli.append(pe)
    return _crt(residues, moduli) % n


def _crt(residues: list[int], moduli: list[int]) -> int:
    x, m = 0, 1
    for r, mi in zip(residues, moduli):
        t = (r - x) * pow(m, -1, mi) % mi
        x += m * t
        m *= mi
    return x


def mult_order(ctx: GroupCtx, x: Unit) -> int:
    """Multiplicative order of x modulo q."""
    q = ctx.q
    h = _residue(q, x)
    t = q - 1
    for p, _ in ctx.order.factors:
        while t % p == 0 and pow(h, t // p, q) == 1:
            t //= p
    return t


def subgroup_index(ctx: GroupCtx, gens: Iterable[Unit]) -> int:
    """[Z_q^x : <gens>] = gcd(q-1, ind_g(gen) ...); the empty set gives q-1."""
    return reduce(math.gcd, (discrete_log(ctx, x) for x in gens), ctx.q - 1)


def in_subgroup(ctx: GroupCtx, x: Unit, gens: Iterable[Unit]) -> bool:
    return discrete_log(ctx, x) % subgroup_index(ctx, gens) == 0


def is_power_residue(ctx: GroupCtx, x: Unit, e: int) -> bool:
    """Whether x is an e-th power residue mod q (e must divide q - 1)."""
    if e < 1 or (ctx.q - 1) % e:
        raise ValueError(f"e={e} must divide q-1={ctx.q - 1}")
    return discrete_log(ctx, x) % e == 0


def capped_valuation(n: int, p: int, cap: int) -> int:
    """min(v_p(n), cap), with v_p(0) read as infinite."""
    if n == 0:
        return cap
    return min(valuation(n, p), cap)
