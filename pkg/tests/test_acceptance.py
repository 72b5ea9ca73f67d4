"""Acceptance criteria, one test per criterion.

Each test prints a single PASS/FAIL line (collected into the terminal summary);
run this file directly to get just those lines. All checks are exact.
"""
import itertools
import math
import random
import time
from contextlib import contextmanager
from fractions import Fraction

from oracles import oracle_divides, random_multiset
from reference_sets import WORKED, exponents
from splitter_sets.cli import _search_one, _search_primes
from splitter_sets.cyclotomic import cyclotomic_divides, mask_of
from splitter_sets.existence import (NAMED_RULES, bridge_k_to_kplus1, check_family, construct_perfect,
                                     power_set, quartic_remark_check)
from splitter_sets.factorization import (build_complement, check_period_theorem, complement_exists_bruteforce,
                                         direct_factor_test, is_factorization)
from splitter_sets.numtheory import GroupCtx, factorize, is_prime, is_primitive_root, mult_order
from splitter_sets.quasiperfect import floor_gap_characterization, no_quasi_B0k_km
from splitter_sets.splitter import (Interval, Kind, classify, enumerate_perfect, max_splitter_bruteforce,
                                    perfect_exists_bruteforce, verify_splitter)

RESULTS: dict[int, str] = {}

TABLE = list(NAMED_RULES) + [(0, k) for k in (3, 5, 7, 11, 13)] + [(k, k) for k in (5, 7, 11, 13)]


@contextmanager
def criterion(num, title, limit):
    start = time.perf_counter()
    status, detail = "FAIL", ""
    try:
        yield
        status = "PASS"
    except AssertionError as exc:
        detail = f": {str(exc).splitlines()[0][:160]}" if str(exc) else ""
        raise
    finally:
        elapsed = time.perf_counter() - start
        if status == "PASS" and elapsed > limit:
            status, detail = "FAIL", f": took {elapsed:.1f}s, limit {limit}s"
        line = f"{status} criterion {num:2d}: {title} [{elapsed:.2f}s]{detail}"
        RESULTS[num] = line
        print(line)
    assert elapsed <= limit, f"criterion {num} took {elapsed:.1f}s (limit {limit}s)"


@contextmanager
def within(seconds, what):
    start = time.perf_counter()
    yield
    took = time.perf_counter() - start
    assert took < seconds, f"{what} took {took:.2f}s (limit {seconds}s)"


def primes_upto(n):
    return [q for q in range(3, n + 1) if is_prime(q)]


def admissible(q, iv):
    return (q - 1) % iv.size == 0 and not iv.is_singular_for(q)


def worked_set(key):
    q, g, k1, k2, chains = WORKED[key]
    return q, Interval(k1, k2), power_set(GroupCtx.create(q, g), exponents(chains))


def test_criterion_01_worked_examples():
    with criterion(1, "worked examples reproduce exactly", 60):
        with within(1, "q=421"):
            assert direct_factor_test([0, 1, 404, 2, 278], 420, 5).is_factor
            assert check_family(GroupCtx.create(421, 2), Interval(0, 5)).exists is True
        with within(1, "q=103"):
            assert check_family(GroupCtx.create(103, 5), Interval(0, 3)).exists is False
        with within(1, "q=97"):
            ctx = GroupCtx.create(97)
            assert check_family(ctx, Interval(4, 4)).exists is True
            assert check_family(ctx, Interval(3, 5)).exists is False
        with within(1, "q=12721"):
            v = check_family(GroupCtx.create(12721, 13), Interval(3, 5))
            c = v.certificate
            assert v.exists and math.gcd(c["ind(6)"], c["ind(16)"], 12720) == 8 == c["index<6,16>"]
            assert c["ind(4)"] == 3140 and c["ind(4)"] % 8 and c["ind(-4)"] == 9500 and c["ind(-4)"] % 8
            assert c["ord(-4/5)"] == 265
            q, iv, B = worked_set("12721[-3,5]")
            assert len(B) == 1590 and classify(q, iv, B).kind is Kind.PERFECT
        with within(5, "q=307009"):
            assert check_family(GroupCtx.create(307009, 7), Interval(2, 6)).exists is True
            q, iv, B = worked_set("307009[-2,6]")
            assert len(B) == 38376 and classify(q, iv, B).kind is Kind.PERFECT
        for key, cond in (("475729[-1,7]", 1), ("2693329[-1,7]", 2), ("861361[-1,7]", 3)):
            with within(10, key):
                q, iv, B = worked_set(key)
                v = check_family(GroupCtx.create(q), iv)
                assert v.exists and v.certificate["matched"] == cond, (key, v.certificate)
                assert classify(q, iv, B).kind is Kind.PERFECT, key
        for key, cond in (("463[-1,5]", 1), ("1489[-1,5]", 1), ("1171[-1,5]", 2)):
            with within(1, key):
                q, iv, B = worked_set(key)
                v = check_family(GroupCtx.create(q), iv)
                assert v.exists and cond in v.certificate["conditions"], (key, v.certificate)
                assert classify(q, iv, B).kind is Kind.PERFECT, key
        with within(1, "q=7"):
            s = construct_perfect(GroupCtx.create(7), Interval(1, 5))
            assert s.elements == (1,) and s.classify().kind is Kind.PERFECT


LISTS = [
    ("[-3,5]", Interval(3, 5), 10**4, 8 * 10**4, None, [26641, 34729, 49369, 78241]),
    ("[-2,6]", Interval(2, 6), 3 * 10**5, 45 * 10**4, None, [315361, 348769, 438769, 442609]),
    ("[-1,5] cond 1", Interval(1, 5), 2000, 6000, 1, [2503, 3583, 5407, 5647]),
    ("[-1,5] cond 2", Interval(1, 5), 2000, 12000, 2, [2371, 2539, 3571, 11251, 11437]),
]


def test_criterion_02_prime_lists():
    with criterion(2, "search output contains every listed prime with verdict exists", 120):
        missing = []
        for name, iv, lo, hi, cond, listed in LISTS:
            records = {q: _search_one((q, iv.k1, iv.k2, 600))["verdict"] for q in _search_primes(lo, hi, iv)}
            for q in listed:
                v = records.get(q)
                ok = v is not None and v["exists"] is True
                if ok and cond is not None:
                    ok = cond in v["certificate"]["conditions"]
                if not ok:
                    missing.append(f"{name}:{q}")
        assert not missing, f"listed primes without a perfect set: {', '.join(missing)}"


def test_criterion_03_oracle_sweep():
    with criterion(3, "closed forms equal exact-cover oracle, q <= 199", 300):
        n = 0
        for q in primes_upto(199):
            ctx = GroupCtx.create(q)
            for k1, k2 in TABLE:
                iv = Interval(k1, k2)
                if admissible(q, iv):
                    assert check_family(ctx, iv).exists == perfect_exists_bruteforce(q, iv)[0], (q, iv)
                    n += 1
        assert n > 200


def test_criterion_04_root_invariance():
    with criterion(4, "verdicts identical under every primitive root, q <= 199", 300):
        for q in primes_upto(199):
            roots = [g for g in range(2, q) if is_primitive_root(q, g)]
            for k1, k2 in TABLE:
                iv = Interval(k1, k2)
                if admissible(q, iv):
                    verdicts = {check_family(GroupCtx.create(q, g), iv).exists for g in roots}
                    assert len(verdicts) == 1, (q, iv)


def test_criterion_05_direct_factor_equivalence():
    with criterion(5, "direct-factor test equals complement oracle", 300):
        rng = random.Random(20240501)
        instances = [([0, 1, 404, 2, 278], 420), ([0, 44, 39], 102), ([0, 2], 4)]
        for N in (12, 20, 36, 60, 100):
            for _ in range(10**4):
                size = rng.choice((2, 3, 4, 5))
                instances.append(([0] + rng.sample(range(1, N), size - 1), N))
        for A, N in instances:
            ((p, _),) = factorize(len(A)).factors
            found, B = complement_exists_bruteforce(A, N)
            if N % len(A):
                assert not found
                continue
            v = direct_factor_test(A, N, p)
            assert v.is_factor == found, (N, A)
            if found:
                assert is_factorization(A, B, N)
                assert is_factorization(A, build_complement(v.labeling, N).elements(), N)


def test_criterion_06_period_theorem():
    with criterion(6, "period theorem on constructed and oracle factorizations, N <= 200", 300):
        rng = random.Random(6)
        checked = 0
        for N in range(2, 201):
            for p, a in factorize(N).factors:
                for n in range(1, a + 1):
                    size = p**n
                    if size > 16 or size == N:
                        continue
                    for _ in range(15):
                        A = [0] + rng.sample(range(1, N), size - 1)
                        v = direct_factor_test(A, N, p)
                        found, B = complement_exists_bruteforce(A, N)
                        assert v.is_factor == found
                        if found:
                            assert check_period_theorem(A, B, N, p), (N, A, B)
                            C = build_complement(v.labeling, N).elements()
                            assert check_period_theorem(A, C, N, p), (N, A)
                            checked += 1
        assert checked > 100


def test_criterion_07_cyclotomic_oracle():
    with criterion(7, "cyclotomic divisibility equals polynomial division, N <= 512", 300):
        rng = random.Random(77)
        for _ in range(1000):
            N = rng.randrange(2, 513)
            A = random_multiset(rng, N)
            mask = mask_of(A, N)
            for p, e in factorize(N).factors:
                for k in range(1, e + 1):
                    assert cyclotomic_divides(mask, p, k) == oracle_divides(A, p**k), (N, A, p, k)


def test_criterion_08_bridge():
    with criterion(8, "B[-2,2] sets are B[-1,3] sets iff -2/3 is a period, q <= 61", 300):
        both = 0
        for q in primes_upto(61):
            iv = Interval(2, 2)
            if not admissible(q, iv) or Interval(1, 3).is_singular_for(q):
                continue
            ctx = GroupCtx.create(q)
            for B in enumerate_perfect(q, iv):
                bridged = bridge_k_to_kplus1(ctx, 2, B)
                assert bridged == verify_splitter(q, Interval(1, 3), B), (q, B)
                both += bridged
        assert both > 0


def test_criterion_09_quasi_perfect():
    with criterion(9, "no quasi-perfect B[0,k](km), floor-gap characterization", 300):
        for k in range(2, 61):
            for m in range(k + 1, 60 // k + 1):
                if m % k == 0:
                    assert no_quasi_B0k_km(k, m).conclusion == "nonexistent"
                    size, _ = max_splitter_bruteforce(k * m, Interval(0, k))
                    assert size < (k * m - 1) // k, (k, m, size)
        for k in range(1, 21):
            for m in range(2, 10**4 + 1):
                floor_gap_characterization(k, m)


def test_criterion_10_quartic_remark():
    with criterion(10, "quartic-residue remark for q = 5 mod 8, q < 10^4", 300):
        for q in primes_upto(10**4 - 1):
            if q % 8 == 5:
                assert quartic_remark_check(q), q


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
