"""Mask polynomials of multisets in Z_N and divisibility by Phi_{p^k}.

Everything is exact integer arithmetic. Divisibility by a prime-power
cyclotomic polynomial is decided in Z[x]/(x^{p^k} - 1): Phi_{p^k} divides the
folded mask iff, inside every residue class mod p^{k-1}, the p folded
coefficients are equal.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .numtheory import valuation


class FactorizationError(ValueError):
    """The inputs do not form a factorization A + B = Z_N."""


@dataclass(frozen=True, eq=False)
class MaskPoly:
    """f_A(x) = sum of x^a over the multiset A, stored as N coefficients."""

    modulus: int
    coeffs: np.ndarray

    def __post_init__(self):
        if len(self.coeffs) != self.modulus:
            raise ValueError("coefficient vector must have length N")
        if (self.coeffs < 0).any():
            raise ValueError("mask coefficients are multiplicities and must be >= 0")

    @property
    def weight(self) -> int:
        return int(self.coeffs.sum())

    def support(self) -> np.ndarray:
        return np.nonzero(self.coeffs)[0]

    def folded(self, m: int) -> np.ndarray:
        """Coefficients of f_A reduced mod (x^m - 1), length m."""
        idx = self.support()
        return np.bincount(idx % m, weights=self.coeffs[idx], minlength=m).astype(np.int64)

    def convolve(self, other: "MaskPoly") -> "MaskPoly":
        """Cyclic product f_A * f_B mod (x^N - 1), the mask of A + B."""
        if other.modulus != self.modulus:
            raise ValueError("moduli differ")
        n = self.modulus
        out = np.zeros(n, dtype=np.int64)
        for i in self.support():
            out += int(self.coeffs[i]) * np.roll(other.coeffs, int(i))
        return MaskPoly(n, out)

    def __eq__(self, other):
        return (isinstance(other, MaskPoly) and self.modulus == other.modulus
                and np.array_equal(self.coeffs, other.coeffs))

    def __repr__(self):
        return f"MaskPoly(N={self.modulus}, support={self.support().tolist()})"


def mask_of(elements: Iterable[int], N: int) -> MaskPoly:
    elements = np.asarray(list(elements), dtype=np.int64)
    if elements.size and (elements.min() < 0 or elements.max() >= N):
        raise ValueError(f"elements must lie in [0, {N - 1}]")
    return MaskPoly(N, np.bincount(elements, minlength=N).astype(np.int64))


def _coerce(mask, N=None) -> MaskPoly:
    if isinstance(mask, MaskPoly):
        return mask
    if N is None:
        raise TypeError("a modulus is needed to build a mask from raw elements")
    return mask_of(mask, N)


def cyclotomic_divides(mask: MaskPoly, p: int, k: int) -> bool:
    """Whether Phi_{p^k}(x) divides f_A(x) over the integers (k >= 1)."""
    if k < 1:
        raise ValueError("level k must be >= 1")
    c = mask.folded(p**k).reshape(p, p ** (k - 1))
    return bool((c == c[0]).all())


@dataclass(frozen=True)
class ApDecomposition:
    """A mod p^k as a union of progressions {s + t p^{k-1} : t in [0, p-1]}."""

    p: int
    k: int
    starts: tuple[int, ...]

    @property
    def step(self) -> int:
        return self.p ** (self.k - 1)

    def progressions(self) -> list[tuple[int, ...]]:
        return [tuple(s + t * self.step for t in range(self.p)) for s in self.starts]

    def recompose(self) -> list[int]:
        """The multiset union of the progressions, sorted."""
        return sorted(x for prog in self.progressions() for x in prog)


def ap_decompose(mask: MaskPoly, p: int, k: int) -> ApDecomposition:
    """Split A mod p^k into |A|/p arithmetic progressions of difference p^{k-1}.

    The quotient f_A / Phi_{p^k} has coefficient c[a] at x^a (a < p^{k-1}),
    so a progression starts at a exactly c[a] times.
    """
    if not cyclotomic_divides(mask, p, k):
        raise ValueError(f"Phi_{p}^{k} does not divide the mask")
    head = mask.folded(p**k)[: p ** (k - 1)]
    starts = tuple(int(a) for a in np.repeat(np.arange(head.size), head))
    return ApDecomposition(p, k, starts)


def divisor_set(mask: MaskPoly, p: int, a: int) -> frozenset[int]:
    """M_X = {1 <= j <= a : Phi_{p^j} divides f_X}."""
    return frozenset(j for j in range(1, a + 1) if cyclotomic_divides(mask, p, j))


def divisor_partition(maskA, maskB, N: int, p: int) -> tuple[frozenset[int], frozenset[int]]:
    """(M_A, M_B) for a factorization A + B = Z_N, checked to partition [1, a].

    Raises FactorizationError when the partition property fails, which means
    A + B was not a factorization.
    """
    maskA, maskB = _coerce(maskA, N), _coerce(maskB, N)
    a = valuation(N, p)
    if a < 1:
        raise ValueError(f"p={p} does not divide N={N}")
    ma, mb = divisor_set(maskA, p, a), divisor_set(maskB, p, a)
    va, vb = valuation(maskA.weight, p), valuation(maskB.weight, p)
    if ma & mb or ma | mb != frozenset(range(1, a + 1)) or len(ma) != va or len(mb) != vb:
        raise FactorizationError(
            f"M_A={sorted(ma)}, M_B={sorted(mb)} do not partition [1,{a}] "
            f"with sizes v_p|A|={va}, v_p|B|={vb}")
    return ma, mb
