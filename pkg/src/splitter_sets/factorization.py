"""Direct factors of Z_N of prime-power size.

A set A of size p^n is a direct factor of Z_N (N = p^a m, p not dividing m)
exactly when n distinct cyclotomic polynomials Phi_{p^j}, j <= a, divide its
mask polynomial. In that case A admits a digit labeling and a complementer
factor built from p-adic digit blocks.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from ._search import SearchBoundError, first_cover
from .cyclotomic import FactorizationError, divisor_set, mask_of
from .numtheory import valuation

COMPLEMENT_ORACLE_BOUND = 5000
COMPLEMENT_VERIFY_BOUND = 1 << 23


def _prime_power_exponent(size: int, p: int) -> int | None:
    n = 0
    while size % p == 0:
        size //= p
        n += 1
    return n if size == 1 else None


def _digit(x: int, p: int, level: int) -> int:
    """The level-th to last base-p digit of x (level >= 1)."""
    return (x // p ** (level - 1)) % p


@dataclass(frozen=True)
class Labeling:
    """Elements of A indexed by digit strings b_1..b_n in [0, p-1]^n."""

    p: int
    levels: tuple[int, ...]
    table: dict[tuple[int, ...], int] = field(hash=False)

    @property
    def n(self) -> int:
        return len(self.levels)

    def elements(self) -> list[int]:
        return sorted(self.table.values())

    def check(self) -> None:
        """Raise AssertionError unless the digit and offset conditions hold."""
        p, levels = self.p, self.levels
        assert list(levels) == sorted(set(levels)) and all(i >= 1 for i in levels)
        assert len(self.table) == p ** self.n == len(set(self.table.values()))
        for label, a in self.table.items():
            for j, (b, i) in enumerate(zip(label, levels)):
                assert _digit(a, p, i) == b, f"digit {i} of {a} is not {b}"
                base = self.table[label[:j] + (0,) + label[j + 1:]]
                # the starred tail of the base label may differ, so compare mod p^i
                assert (a - base - b * p ** (i - 1)) % p**i == 0

    def __str__(self):
        return f"Labeling(p={self.p}, levels={list(self.levels)})"


@dataclass(frozen=True)
class ComplementFactor:
    """B = C_1 + ... + C_{n+1} as arithmetic chains (start 0, step, count)."""

    modulus: int
    chains: tuple[tuple[int, int], ...]  # (step, count)

    def chain(self, j: int) -> list[int]:
        step, count = self.chains[j]
        return [step * t for t in range(count)]

    @property
    def size(self) -> int:
        return math.prod(c for _, c in self.chains)

    def elements(self) -> np.ndarray:
        out = np.zeros(1, dtype=np.int64)
        for step, count in self.chains:
            out = (out[:, None] + step * np.arange(count, dtype=np.int64)[None, :]).ravel()
        return np.sort(out % self.modulus)


@dataclass(frozen=True)
class DirectFactorVerdict:
    is_factor: bool
    p: int
    n: int
    a: int
    divisor_levels: tuple[int, ...]
    labeling: Labeling | None = None

    def __bool__(self):
        return self.is_factor


def _label(elements: list[int], p: int, levels: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    if not levels:
        (a,) = elements
        return {(): a}
    i = levels[-1]
    low = p ** (i - 1)
    classes: dict[int, list[list[int]]] = {}
    for a in sorted(elements):
        classes.setdefault(a % low, [[] for _ in range(p)])[_digit(a, p, i)].append(a)
    base = []
    partner: dict[int, list[int]] = {}
    for buckets in classes.values():
        sizes = {len(b) for b in buckets}
        if len(sizes) != 1:
            raise FactorizationError(f"A mod {p}^{i} is not a union of progressions")
        # pair the r-th smallest element of every digit bucket into one progression
        for row in zip(*buckets):
            base.append(row[0])
            partner[row[0]] = list(row)
    inner = _label(base, p, levels[:-1])
    return {lab + (b,): partner[a0][b] for lab, a0 in inner.items() for b in range(p)}


def direct_factor_test(A: Iterable[int], N: int, p: int) -> DirectFactorVerdict:
    """Decide whether A (|A| = p^n, 1 <= n <= v_p(N)) is a direct factor of Z_N."""
    A = sorted({x % N for x in A})
    a = valuation(N, p)
    n = _prime_power_exponent(len(A), p)
    if n is None:
        raise ValueError(f"|A|={len(A)} is not a power of {p}")
    if a < 1 or n > a:
        raise ValueError(f"|A|={len(A)} exceeds the {p}-part of N={N}")
    levels = tuple(sorted(divisor_set(mask_of(A, N), p, a)))
    if len(levels) > n:
        raise FactorizationError(f"{len(levels)} cyclotomic divisors for |A|={p}^{n}")
    if len(levels) < n:
        return DirectFactorVerdict(False, p, n, a, levels)
    labeling = Labeling(p, levels, _label(A, p, levels))
    labeling.check()
    return DirectFactorVerdict(True, p, n, a, levels, labeling)


def complement_chains(levels: tuple[int, ...], p: int, N: int) -> ComplementFactor:
    """Digit-block complement: C_1 = [0, p^{i_1 - 1}), C_j steps p^{i_{j-1}}, C_{n+1} = p^{i_n} Z_N."""
    chains = []
    prev = 0
    for i in levels:
        step = p**prev
        chains.append((step, p ** (i - 1 - prev)))
        prev = i
    chains.append((p**prev, N // p**prev))
    return ComplementFactor(N, tuple(chains))


def is_factorization(A: Iterable[int], B: Iterable[int], N: int) -> bool:
    """Every element of Z_N is a + b in exactly one way."""
    A = np.unique(np.asarray(list(A), dtype=np.int64) % N)
    B = np.asarray(B, dtype=np.int64) % N
    if A.size * B.size != N or np.unique(B).size != B.size:
        return False
    sums = (A[:, None] + B[None, :]).ravel() % N
    return bool(np.bincount(sums, minlength=N).max() == 1)


def build_complement(label: Labeling, N: int, verify_bound: int = COMPLEMENT_VERIFY_BOUND) -> ComplementFactor:
    comp = complement_chains(label.levels, label.p, N)
    if N <= verify_bound and not is_factorization(label.elements(), comp.elements(), N):
        raise AssertionError("digit-block complement failed to tile Z_N")
    return comp


def complement_exists_bruteforce(A: Iterable[int], N: int,
                                 bound: int = COMPLEMENT_ORACLE_BOUND) -> tuple[bool, list[int] | None]:
    """Exact-cover search for B with A + B = Z_N; returns (exists, B)."""
    if N > bound:
        raise SearchBoundError(f"N={N} exceeds the oracle bound {bound}")
    A = sorted({x % N for x in A})
    if not A or N % len(A):
        return False, None
    # translate so the tile covering 0 uses A's smallest element (translation symmetry)
    shifts = list(range(N))
    blocks = [sum(1 << ((b + x) % N) for x in A) for b in shifts]
    by_cell = [sorted(((c - x) % N for x in A)) for c in range(N)]
    root = (-A[0]) % N
    sol = first_cover(N, blocks, by_cell, start_mask=blocks[root])
    if sol is None:
        return False, None
    return True, sorted([root] + [shifts[r] for r in sol])


def stable_subgroup(B: Iterable[int], N: int) -> int:
    """Index [Z_N : pi(B)] of the group of periods {g : g + B = B}."""
    mask = np.zeros(N, dtype=bool)
    mask[np.asarray(list(B), dtype=np.int64) % N] = True
    d = next(d for d in _divisors(N) if np.array_equal(np.roll(mask, d), mask))
    # every period is a multiple of the smallest one
    assert all(np.array_equal(np.roll(mask, g), mask) == (g % d == 0) for g in _divisors(N))
    return d


def _divisors(N: int) -> list[int]:
    small = [d for d in range(1, math.isqrt(N) + 1) if N % d == 0]
    return sorted(set(small + [N // d for d in small]))


def check_period_theorem(A: Iterable[int], B: Iterable[int], N: int, p: int) -> bool:
    """p^{max M_A} divides [Z_N : pi(B)] for a factorization A + B = Z_N."""
    A, B = sorted({x % N for x in A}), sorted({x % N for x in B})
    if not is_factorization(A, B, N):
        raise FactorizationError("A + B is not a factorization of Z_N")
    a = valuation(N, p) if N % p == 0 else 0
    levels = divisor_set(mask_of(A, N), p, a)
    top = max(levels, default=0)
    return stable_subgroup(B, N) % p**top == 0
