"""Nonexistence criteria for quasi-perfect splitter sets.

Both criteria only ever conclude nonexistence; when their hypotheses fail the
answer is "no-conclusion", never "exists".
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .numtheory import factorize

NONEXISTENT = "nonexistent"
NO_CONCLUSION = "no-conclusion"


@dataclass(frozen=True)
class QuasiVerdict:
    applicable: bool
    conclusion: str
    reason: str
    witnesses: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"applicable": self.applicable, "conclusion": self.conclusion,
                "reason": self.reason, "witnesses": dict(self.witnesses)}


def no_quasi_B0k_km(k: int, m: int) -> QuasiVerdict:
    """No quasi-perfect B[0,k](km) set when m > k and k | m."""
    if k < 2 or m < 1:
        raise ValueError("need k >= 2 and m >= 1")
    N = k * m
    w = {"k": k, "m": m, "N": N, "quasi_perfect_size": (N - 1) // k}
    if m > k and m % k == 0:
        return QuasiVerdict(True, NONEXISTENT, "B[0,k](km): m > k and k | m", w)
    why = "m <= k" if m <= k else "k does not divide m"
    return QuasiVerdict(False, NO_CONCLUSION, why, w)


def floor_gap(k: int, m: int) -> bool:
    """floor((m-1)/(2k-1)) > floor((m-1)/(2k))."""
    return (m - 1) // (2 * k - 1) > (m - 1) // (2 * k)


def lift_interval(k: int, m: int) -> QuasiVerdict:
    """B[-(k-1),k](m) sets are B[-k,k](m) sets when some prime r | k has gcd(r, m) = 1."""
    if k < 1 or m < 2:
        raise ValueError("need k >= 1 and m >= 2")
    coprime = [r for r in factorize(k).primes if m % r]
    w = {"k": k, "m": m, "floor_shifted": (m - 1) // (2 * k - 1), "floor_symmetric": (m - 1) // (2 * k)}
    if not coprime:
        return QuasiVerdict(False, NO_CONCLUSION, "every prime divisor of k divides m", w)
    w["prime"] = coprime[0]
    if floor_gap(k, m):
        return QuasiVerdict(True, NONEXISTENT, "lifted to B[-k,k](m); floor gap", w)
    return QuasiVerdict(True, NO_CONCLUSION, "lifted to B[-k,k](m); floors agree", w)


def _closed_form(k: int, m: int) -> bool:
    if m >= 4 * k * k - 2 * k + 1:
        return True
    return any(m == 2 * k * (t + 1) - s for t in range(2 * k) for s in range(t + 1))


def floor_gap_characterization(k: int, m: int) -> bool:
    """The floor gap, checked against its closed description (m >= 4k^2-2k+1 or m = 2k(t+1)-s)."""
    gap = floor_gap(k, m)
    if gap != _closed_form(k, m):
        raise AssertionError(f"floor-gap characterization fails at k={k}, m={m}")
    return gap
