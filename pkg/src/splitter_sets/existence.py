"""Existence of perfect B[-k1,k2](q) sets for prime q, and their construction.

A perfect splitter set B exists iff the index set
A = {ind_g(lam) : lam in [-k1,k2]*} has a complementer factor C in Z_{q-1};
then B = g^C. Closed-form rules below decide the named families from orders,
subgroup indices and 2-/3-adic valuations of discrete logarithms. Other
windows go through the general direct-factor test when |A| is a prime power,
and through the exact-cover oracle otherwise.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

import numpy as np

from ._search import SearchBoundError
from .factorization import (ComplementFactor, _prime_power_exponent, complement_chains,
                            direct_factor_test)
from .numtheory import (GroupCtx, capped_valuation, discrete_log, factorize, is_prime,
                        mult_order, pow_many, subgroup_index, valuation)
from .splitter import (PERFECT_ORACLE_BOUND, Interval, Kind, SplitterSet,
                       perfect_exists_bruteforce, verify_splitter)


class SingularError(ValueError):
    """gcd(q, k1! k2!) > 1: the closed-form rules do not apply."""


class NonexistentError(ValueError):
    """No perfect splitter set exists for the requested family."""


class ConstructionError(RuntimeError):
    """A constructed set failed verification (an implementation defect)."""


@dataclass
class Verdict:
    exists: bool | None  # None: undecided (oracle bound exceeded)
    rule: str
    certificate: dict[str, Any] = field(default_factory=dict)
    construction: SplitterSet | None = None

    @property
    def decided(self) -> bool:
        return self.exists is not None

    def to_dict(self) -> dict:
        return {"exists": self.exists, "rule": self.rule, "certificate": dict(self.certificate)}


def _F(a: int, b: int = 1) -> Fraction:
    return Fraction(a, b)


def _odd_order(ctx, x, cert, name) -> bool:
    o = mult_order(ctx, x)
    cert[f"ord({name})"] = o
    return o % 2 == 1


def _check_pre(ctx: GroupCtx, interval: Interval) -> None:
    if (ctx.q - 1) % interval.size:
        raise ValueError(f"{interval.size} does not divide q-1={ctx.q - 1}")


def reduce_to_factorization(ctx: GroupCtx, interval: Interval) -> list[int]:
    """Sorted A = {ind_g(lam) : lam in [-k1,k2]*} inside Z_{q-1}."""
    if interval.is_singular_for(ctx.q):
        raise SingularError(f"B{interval}({ctx.q}) is singular")
    _check_pre(ctx, interval)
    return sorted(discrete_log(ctx, lam) for lam in interval.multipliers)


def halve_for_symmetric(ctx: GroupCtx, k: int) -> list[int]:
    """Sorted {ind_g(i) mod (q-1)/2 : i in [1, k]} for k a power of an odd prime."""
    if k < 1 or (k > 1 and (k % 2 == 0 or len(factorize(k).factors) != 1)):
        raise ValueError(f"k={k} is not a power of an odd prime")
    if (ctx.q - 1) % (2 * k) or ctx.q <= k:
        raise ValueError(f"q={ctx.q} is not 1 mod {2 * k} (or is singular)")
    half = (ctx.q - 1) // 2
    return sorted(discrete_log(ctx, i) % half for i in range(1, k + 1))


# -- closed-form rules ---------------------------------------------------------
# Each returns (exists, certificate). v_2 / v_3 of indices are capped at
# v_p(q-1): below the cap they do not depend on g, at the cap only the fact
# of reaching it does.

def _cv(ctx, x, p, cap):
    return capped_valuation(discrete_log(ctx, x), p, cap)


def _show(v, cap):
    return "at-ceiling" if v >= cap else v


def _rule_0_2(ctx):
    o = mult_order(ctx, 2)
    return o % 2 == 0, {"ord(2)": o}


def _rule_m2_2(ctx):
    o = mult_order(ctx, 2)
    v = valuation(o, 2)
    return v >= 2, {"ord(2)": o, "v2(ord(2))": v}


def _rule_m1_3(ctx):
    cert = {"ord(2)": mult_order(ctx, 2)}
    four = cert["ord(2)"] % 4 == 0
    return _odd_order(ctx, _F(-3, 2), cert, "-3/2") and four, cert


def _not_in_68(ctx, cert):
    idx = subgroup_index(ctx, [6, 8])
    i2 = discrete_log(ctx, 2)
    cert.update({"ind(6)": discrete_log(ctx, 6), "ind(8)": discrete_log(ctx, 8),
                 "index<6,8>": idx, "ind(2)": i2, "2 in <6,8>": i2 % idx == 0})
    return i2 % idx != 0


def _rule_m3_3(ctx):
    cert = {}
    return _not_in_68(ctx, cert), cert


def _rule_m2_4(ctx):
    cert = {}
    ok = _not_in_68(ctx, cert)
    return _odd_order(ctx, _F(-3, 4), cert, "-3/4") and ok, cert


def _pm4_not_in_6_16(ctx, cert):
    idx = subgroup_index(ctx, [6, 16])
    i4, im4 = discrete_log(ctx, 4), discrete_log(ctx, -4)
    cert.update({"ind(6)": discrete_log(ctx, 6), "ind(16)": discrete_log(ctx, 16),
                 "index<6,16>": idx, "ind(4)": i4, "ind(-4)": im4,
                 "4 in <6,16>": i4 % idx == 0, "-4 in <6,16>": im4 % idx == 0})
    return i4 % idx != 0 and im4 % idx != 0


def _rule_m4_4(ctx):
    cert = {}
    return _pm4_not_in_6_16(ctx, cert), cert


def _rule_m3_5(ctx):
    cert = {}
    ok = _pm4_not_in_6_16(ctx, cert)
    return _odd_order(ctx, _F(-4, 5), cert, "-4/5") and ok, cert


def _rule_m2_6(ctx):
    cap = valuation(ctx.q - 1, 2)
    v2, v3 = _cv(ctx, 2, 2, cap), _cv(ctx, 3, 2, cap)
    cert = {"v2(q-1)": cap, "v2(ind(2))": _show(v2, cap), "v2(ind(3))": _show(v3, cap)}
    odd = [_odd_order(ctx, _F(-5, 6), cert, "-5/6"), _odd_order(ctx, _F(-3, 4), cert, "-3/4")]
    return all(odd) and v3 == v2 + 1 < cap - 1, cert


def _rule_m1_7(ctx):
    cap = valuation(ctx.q - 1, 2)
    v2, v3, v4 = (_cv(ctx, x, 2, cap) for x in (2, 3, 4))
    v52 = _cv(ctx, _F(5, 2), 2, cap)  # v2(ind 5 - ind 2) below the cap
    cert = {"v2(q-1)": cap, "v2(ind(2))": _show(v2, cap), "v2(ind(3))": _show(v3, cap),
            "v2(ind(4))": _show(v4, cap), "v2(ind(5)-ind(2))": _show(v52, cap)}
    low4 = v4 < cap - 1
    c1 = all([_odd_order(ctx, _F(-2, 3), cert, "-2/3"), _odd_order(ctx, _F(-5, 7), cert, "-5/7")]) \
        and v2 == v3 and v52 == v4 and low4
    c2 = low4 and all([_odd_order(ctx, _F(-3, 4), cert, "-3/4"),
                       _odd_order(ctx, _F(-6, 7), cert, "-6/7"),
                       _odd_order(ctx, _F(-2, 5), cert, "-2/5")])
    c3 = low4 and all([_odd_order(ctx, _F(-3, 4), cert, "-3/4"),
                       _odd_order(ctx, _F(-2, 7), cert, "-2/7"),
                       _odd_order(ctx, _F(-5, 6), cert, "-5/6")])
    cert["conditions"] = [n for n, c in ((1, c1), (2, c2), (3, c3)) if c]
    cert["matched"] = cert["conditions"][0] if cert["conditions"] else None
    return c1 or c2 or c3, cert


def _rule_m1_5(ctx):
    cap = valuation(ctx.q - 1, 3)
    cert = {"v3(q-1)": cap, "v2(q-1)": valuation(ctx.q - 1, 2)}
    v = _cv(ctx, 2, 3, cap)
    cert["v3(ind(2))"] = _show(v, cap)
    conds = []
    for number, (x, y) in ((1, (_F(-2, 3), _F(-4, 5))), (2, (_F(-2, 5), _F(-3, 4)))):
        vx, vy = _cv(ctx, x, 3, cap), _cv(ctx, y, 3, cap)
        cert[f"v3(ind({x}))"] = _show(vx, cap)
        cert[f"v3(ind({y}))"] = _show(vy, cap)
        odd = [_odd_order(ctx, x, cert, str(x)), _odd_order(ctx, y, cert, str(y))]
        if v < cap and v < vx and v < vy and all(odd):
            conds.append(number)
    cert["conditions"] = conds
    cert["matched"] = conds[0] if conds else None
    return bool(conds), cert


def _rule_0_k(ctx, k):
    inds = [discrete_log(ctx, j) for j in range(1, k + 1)]
    mu = math.gcd(ctx.q - 1, *inds)
    classes = len({(i // mu) % k for i in inds})
    ok = (ctx.q - 1) % (mu * k) == 0 and classes == k
    return ok, {"mu": mu, "distinct ind/mu mod k": classes, "k": k}


def _rule_mk_k(ctx, k):
    half = (ctx.q - 1) // 2
    inds = [discrete_log(ctx, j) for j in range(1, k + 1)]
    mu = math.gcd(half, discrete_log(ctx, -1), *inds)
    classes = len({(i // mu) % k for i in inds})
    ok = (ctx.q - 1) % (2 * mu * k) == 0 and classes == k
    return ok, {"mu": mu, "distinct ind/mu mod k": classes, "k": k}


NAMED_RULES: dict[tuple[int, int], tuple[str, Callable]] = {
    (0, 2): ("B[0,2]-order", _rule_0_2),
    (2, 2): ("B[-2,2]-order", _rule_m2_2),
    (1, 3): ("B[-1,3]-order", _rule_m1_3),
    (3, 3): ("B[-3,3]-subgroup", _rule_m3_3),
    (2, 4): ("B[-2,4]-subgroup", _rule_m2_4),
    (4, 4): ("B[-4,4]-subgroup", _rule_m4_4),
    (3, 5): ("B[-3,5]-subgroup", _rule_m3_5),
    (2, 6): ("B[-2,6]-valuation", _rule_m2_6),
    (1, 7): ("B[-1,7]-conditions", _rule_m1_7),
    (1, 5): ("B[-1,5]-conditions", _rule_m1_5),
}


def _odd_prime(k: int) -> bool:
    return k > 2 and is_prime(k)


def _odd_prime_power(k: int) -> int | None:
    if k < 3 or k % 2 == 0:
        return None
    f = factorize(k)
    return f.primes[0] if len(f.factors) == 1 else None


def _single_prime(n: int) -> int | None:
    if n < 2:
        return None
    f = factorize(n)
    return f.primes[0] if len(f.factors) == 1 else None


def closed_form_rule(interval: Interval) -> str | None:
    """Name of the closed-form rule covering this window, if any."""
    key = (interval.k1, interval.k2)
    if key in NAMED_RULES:
        return NAMED_RULES[key][0]
    if interval.k1 == 0 and _odd_prime(interval.k2):
        return "B[0,k]-mu"
    if interval.k1 == interval.k2 and _odd_prime(interval.k2):
        return "B[-k,k]-mu"
    return None


def general_verdict(ctx: GroupCtx, interval: Interval,
                    oracle_bound: int = PERFECT_ORACLE_BOUND) -> Verdict:
    """Decide without closed forms: direct-factor test, symmetric halving, or exact cover."""
    size = interval.size
    if size == 1:
        return Verdict(True, "trivial", {"|M|": 1})
    p = _single_prime(size)
    if p is not None:
        A = reduce_to_factorization(ctx, interval)
        dv = direct_factor_test(A, ctx.q - 1, p)
        return Verdict(dv.is_factor, "general-direct-factor",
                       {"A": A, "p": p, "n": dv.n, "a": dv.a, "levels": list(dv.divisor_levels)})
    if interval.k1 == interval.k2 and _odd_prime_power(interval.k1):
        k = interval.k1
        p = _odd_prime_power(k)
        Abar = halve_for_symmetric(ctx, k)
        dv = direct_factor_test(Abar, (ctx.q - 1) // 2, p)
        return Verdict(dv.is_factor, "general-symmetric-direct-factor",
                       {"Abar": Abar, "p": p, "n": dv.n, "a": dv.a,
                        "levels": list(dv.divisor_levels)})
    if ctx.q > oracle_bound:
        return Verdict(None, "bruteforce-bound-exceeded", {"q": ctx.q, "bound": oracle_bound})
    found, witness = perfect_exists_bruteforce(ctx.q, interval, bound=oracle_bound)
    verdict = Verdict(found, "bruteforce", {"q": ctx.q})
    if found:
        verdict.construction = SplitterSet.of(ctx.q, interval, witness)
    return verdict


def check_family(ctx: GroupCtx, interval: Interval, oracle_bound: int = PERFECT_ORACLE_BOUND,
                 allow_singular: bool = False) -> Verdict:
    """Decide whether a perfect B[-k1,k2](q) set exists."""
    _check_pre(ctx, interval)
    if interval.is_singular_for(ctx.q):
        if not allow_singular:
            raise SingularError(f"B{interval}({ctx.q}) is singular")
        if ctx.q > oracle_bound:
            return Verdict(None, "bruteforce-bound-exceeded", {"q": ctx.q, "bound": oracle_bound})
        found, witness = perfect_exists_bruteforce(ctx.q, interval, bound=oracle_bound)
        return Verdict(found, "bruteforce", {"q": ctx.q, "singular": True})
    key = (interval.k1, interval.k2)
    if key in NAMED_RULES:
        name, rule = NAMED_RULES[key]
        exists, cert = rule(ctx)
    elif interval.k1 == 0 and _odd_prime(interval.k2):
        name = "B[0,k]-mu"
        exists, cert = _rule_0_k(ctx, interval.k2)
    elif interval.k1 == interval.k2 and _odd_prime(interval.k2):
        name = "B[-k,k]-mu"
        exists, cert = _rule_mk_k(ctx, interval.k2)
    else:
        return general_verdict(ctx, interval, oracle_bound)
    return Verdict(exists, name, {"q": ctx.q, "g": ctx.g, **cert})


# -- constructions ---------------------------------------------------------------

def _from_chains(ctx: GroupCtx, interval: Interval, comp: ComplementFactor) -> SplitterSet:
    exps = comp.elements()
    elements = pow_many(ctx.g, exps, ctx.q)
    # count-1 chains contribute only 0
    chains = [list(c) for c in comp.chains if c[1] > 1] or [[1, 1]]
    gen = {"base": ctx.g, "chains": chains}
    return SplitterSet.of(ctx.q, interval, elements.tolist(), generator=gen)


def _three_adic_lift(ctx: GroupCtx) -> ComplementFactor:
    """Complement for {0, ind 2, ind 2'} + {0, (q-1)/2} with period 3^i 2^l.

    Here i = v_3(ind_g 2) + 1 and l = v_2(q-1); the set is
    [0, 3^{i-1}) + 3^i [0, 2^{l-1}) + 3^i 2^l Z_{q-1}.
    """
    n = ctx.q - 1
    i = valuation(discrete_log(ctx, 2), 3) + 1
    l = valuation(n, 2)
    period = 3**i * 2**l
    return ComplementFactor(n, ((1, 3 ** (i - 1)), (3**i, 2 ** (l - 1)), (period, n // period)))


def construct_perfect(ctx: GroupCtx, interval: Interval,
                      oracle_bound: int = PERFECT_ORACLE_BOUND) -> SplitterSet:
    """Build and verify a perfect B[-k1,k2](q) set; raises NonexistentError if none exists."""
    verdict = check_family(ctx, interval, oracle_bound)
    if verdict.exists is None:
        raise SearchBoundError(f"existence of B{interval}({ctx.q}) is undecided")
    if not verdict.exists:
        raise NonexistentError(f"no perfect B{interval}({ctx.q}) set ({verdict.rule})")
    q, size = ctx.q, interval.size
    p = _single_prime(size)
    if size == 1:
        result = SplitterSet.of(q, interval, range(1, q))
    elif p is not None:
        A = reduce_to_factorization(ctx, interval)
        dv = direct_factor_test(A, q - 1, p)
        if not dv:
            raise ConstructionError(f"rule {verdict.rule} said yes but A={A} is not a direct factor")
        result = _from_chains(ctx, interval, complement_chains(dv.labeling.levels, p, q - 1))
    elif interval.k1 == interval.k2 and _odd_prime_power(interval.k1):
        k = interval.k1
        p = _odd_prime_power(k)
        dv = direct_factor_test(halve_for_symmetric(ctx, k), (q - 1) // 2, p)
        if not dv:
            raise ConstructionError(f"rule {verdict.rule} said yes but the halved set is not a factor")
        # the half-range complement C lifts unchanged: Z_{q-1} = A + {0,(q-1)/2} + C
        result = _from_chains(ctx, interval, complement_chains(dv.labeling.levels, p, (q - 1) // 2))
    elif (interval.k1, interval.k2) in ((2, 4), (1, 5)):
        result = _from_chains(ctx, interval, _three_adic_lift(ctx))
    elif verdict.construction is not None:
        result = verdict.construction
    else:
        found, witness = perfect_exists_bruteforce(q, interval, bound=oracle_bound)
        if not found:
            raise ConstructionError(f"rule {verdict.rule} said yes but the oracle found no set")
        result = SplitterSet.of(q, interval, witness)
    cls = result.classify()
    if cls.kind is not Kind.PERFECT:
        raise ConstructionError(
            f"constructed B{interval}({q}) set of size {len(result)} classified {cls.kind.value}; "
            f"rule={verdict.rule} certificate={verdict.certificate} generator={result.generator}")
    return result


def bridge_k_to_kplus1(ctx: GroupCtx, k: int, B) -> bool:
    """For a perfect B[-k,k](q) set B: is it also a perfect B[-(k-1),k+1](q) set?

    Decided by whether -k/(k+1) is a (multiplicative) period of B.
    """
    elements = tuple(B.elements if isinstance(B, SplitterSet) else B)
    q = ctx.q
    sym = Interval(k, k)
    if len(elements) * 2 * k != q - 1 or not verify_splitter(q, sym, elements):
        raise ValueError(f"B is not a perfect B[-{k},{k}]({q}) set")
    rho = ctx.residue(_F(-k, k + 1))
    members = set(elements)
    periodic = {rho * b % q for b in elements} == members
    if periodic:
        shifted = Interval(k - 1, k + 1)
        if not verify_splitter(q, shifted, elements):
            raise AssertionError(f"-{k}/{k + 1} is a period yet B fails {shifted}")
    return periodic


def quartic_remark_check(q: int) -> bool:
    """For q = 5 mod 8: [4 | ord(2) and ord(-3/2) odd] iff 6 is a quartic residue."""
    if not is_prime(q) or q % 8 != 5:
        raise ValueError(f"q={q} must be a prime congruent to 5 mod 8")
    ctx = GroupCtx.create(q)
    lhs = mult_order(ctx, 2) % 4 == 0 and mult_order(ctx, _F(-3, 2)) % 2 == 1
    rhs = pow(6 % q, (q - 1) // 4, q) == 1
    return lhs == rhs


def index_residues(ctx: GroupCtx, interval: Interval, modulus: int) -> list[int]:
    """[ind_g(lam) mod modulus for lam in the window], in window order."""
    return [discrete_log(ctx, lam) % modulus for lam in interval.multipliers]


def power_set(ctx: GroupCtx, exponents) -> list[int]:
    """{g^e mod q} for a collection of exponents, sorted."""
    return sorted(pow_many(ctx.g, np.asarray(list(exponents), dtype=np.int64) % (ctx.q - 1), ctx.q).tolist())
