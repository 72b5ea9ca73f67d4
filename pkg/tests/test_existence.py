from fractions import Fraction

import pytest

from reference_sets import WORKED, exponents
from splitter_sets.existence import (NonexistentError, bridge_k_to_kplus1, check_family,
                                     closed_form_rule, construct_perfect, general_verdict, halve_for_symmetric,
                                     power_set, quartic_remark_check, reduce_to_factorization)
from splitter_sets.numtheory import GroupCtx, is_prime, is_primitive_root, mult_order
from splitter_sets.splitter import Interval, Kind, classify, enumerate_perfect, perfect_exists_bruteforce


def primes(lo, hi):
    return [q for q in range(lo, hi) if is_prime(q)]


def test_reduce_421():
    ctx = GroupCtx.create(421, 2)
    assert reduce_to_factorization(ctx, Interval(0, 5)) == [0, 1, 2, 278, 404]
    assert check_family(ctx, Interval(0, 5)).exists


def test_reduce_103():
    ctx = GroupCtx.create(103, 5)
    assert reduce_to_factorization(ctx, Interval(0, 3)) == [0, 39, 44]
    v = check_family(ctx, Interval(0, 3))
    assert v.exists is False and v.rule == "B[0,k]-mu"


def test_97():
    ctx = GroupCtx.create(97)
    assert check_family(ctx, Interval(4, 4)).exists
    v = check_family(ctx, Interval(3, 5))
    assert v.exists is False
    assert is_primitive_root(97, Fraction(-4, 5).numerator * pow(5, -1, 97) % 97)
    assert v.certificate["ord(-4/5)"] == 96


def test_12721_certificate():
    v = check_family(GroupCtx.create(12721, 13), Interval(3, 5))
    assert v.exists and v.rule == "B[-3,5]-subgroup"
    c = v.certificate
    assert c["index<6,16>"] == 8
    assert c["ind(4)"] == 3140 and c["ind(-4)"] == 9500
    assert c["ind(6)"] == 3504 and c["ind(16)"] == 6280
    assert c["ord(-4/5)"] == 265
    assert not c["4 in <6,16>"] and not c["-4 in <6,16>"]


def test_307009_certificate():
    v = check_family(GroupCtx.create(307009, 7), Interval(2, 6))
    assert v.exists
    assert v.certificate["ord(-3/4)"] == 1599 and v.certificate["ord(-5/6)"] == 369


@pytest.mark.parametrize("q,cond", [(475729, 1), (2693329, 2), (861361, 3)])
def test_minus1_7_conditions(q, cond):
    v = check_family(GroupCtx.create(q), Interval(1, 7))
    assert v.exists and v.certificate["matched"] == cond


@pytest.mark.parametrize("q,cond", [(463, 1), (1489, 1), (1171, 2), (7, 2), (571, 2)])
def test_minus1_5_conditions(q, cond):
    v = check_family(GroupCtx.create(q), Interval(1, 5))
    assert v.exists and cond in v.certificate["conditions"]


@pytest.mark.parametrize("key", [k for k in WORKED if WORKED[k][0] < 10**5])
def test_worked_sets_verify(key):
    q, g, k1, k2, chains = WORKED[key]
    B = power_set(GroupCtx.create(q, g), exponents(chains))
    assert classify(q, Interval(k1, k2), B).kind is Kind.PERFECT


def test_prime_moduli_are_never_singular():
    # (k1+k2) | (q-1) forces k1, k2 < q, so gcd(q, k1! k2!) = 1
    for q in primes(3, 200):
        for k1 in range(0, 10):
            for k2 in range(1, 10):
                iv = Interval(k1, k2)
                if (q - 1) % iv.size == 0:
                    assert not iv.is_singular_for(q)


def test_divisibility_required():
    with pytest.raises(ValueError):
        check_family(GroupCtx.create(13), Interval(0, 5))


def test_closed_form_rule_names():
    assert closed_form_rule(Interval(3, 3)) == "B[-3,3]-subgroup"
    assert closed_form_rule(Interval(0, 7)) == "B[0,k]-mu"
    assert closed_form_rule(Interval(5, 5)) == "B[-k,k]-mu"
    assert closed_form_rule(Interval(3, 6)) is None


def test_halving():
    ctx = GroupCtx.create(97)
    Abar = halve_for_symmetric(ctx, 3)
    assert len(Abar) == 3 and max(Abar) < 48
    with pytest.raises(ValueError):
        halve_for_symmetric(ctx, 4)


def test_necessary_congruence_mod_16():
    # a perfect B[-2,6] or B[-1,7] set forces q = 1 mod 16
    for q in primes(11, 20000):
        if (q - 1) % 8:
            continue
        ctx = GroupCtx.create(q)
        for iv in (Interval(2, 6), Interval(1, 7)):
            if check_family(ctx, iv).exists:
                assert q % 16 == 1, (q, iv)


FAMILIES = [(0, 2), (2, 2), (1, 3), (3, 3), (2, 4), (4, 4), (3, 5), (2, 6), (1, 7), (1, 5),
            (0, 3), (0, 5), (5, 5), (0, 4), (1, 1)]


def test_closed_forms_match_general_path():
    for q in primes(3, 150):
        ctx = GroupCtx.create(q)
        for k1, k2 in FAMILIES:
            iv = Interval(k1, k2)
            if (q - 1) % iv.size or iv.is_singular_for(q):
                continue
            fast = check_family(ctx, iv).exists
            slow = general_verdict(ctx, iv).exists
            assert fast == slow == perfect_exists_bruteforce(q, iv)[0], (q, iv)


def test_construct_every_existing_case():
    for q in primes(3, 400):
        ctx = GroupCtx.create(q)
        for k1, k2 in FAMILIES:
            iv = Interval(k1, k2)
            if (q - 1) % iv.size or iv.is_singular_for(q) or not check_family(ctx, iv).exists:
                continue
            s = construct_perfect(ctx, iv)
            assert s.classify().kind is Kind.PERFECT


def test_construct_nonexistent():
    with pytest.raises(NonexistentError):
        construct_perfect(GroupCtx.create(97), Interval(3, 5))


def test_construct_large_generator():
    s = construct_perfect(GroupCtx.create(12721, 13), Interval(3, 5))
    assert len(s) == 1590 and s.generator["base"] == 13


def test_quartic_remark():
    for q in primes(5, 3000):
        if q % 8 == 5:
            assert quartic_remark_check(q)
    with pytest.raises(ValueError):
        quartic_remark_check(17)


def test_bridge_small():
    for q in (5, 13, 17, 29):
        ctx = GroupCtx.create(q)
        for B in enumerate_perfect(q, Interval(2, 2)):
            from splitter_sets.splitter import verify_splitter
            assert bridge_k_to_kplus1(ctx, 2, B) == verify_splitter(q, Interval(1, 3), B)


def test_bridge_rejects_non_perfect():
    with pytest.raises(ValueError):
        bridge_k_to_kplus1(GroupCtx.create(13), 2, [1])


def test_verdict_root_invariance():
    for q in primes(3, 120):
        roots = [g for g in range(2, q) if is_primitive_root(q, g)][:4]
        for k1, k2 in FAMILIES:
            iv = Interval(k1, k2)
            if (q - 1) % iv.size or iv.is_singular_for(q):
                continue
            got = {check_family(GroupCtx.create(q, g), iv).exists for g in roots}
            assert len(got) == 1, (q, iv)


def test_order_rule_sanity():
    # B[0,2] exists iff ord(2) is even
    for q in primes(3, 500):
        ctx = GroupCtx.create(q)
        assert check_family(ctx, Interval(0, 2)).exists == (mult_order(ctx, 2) % 2 == 0)


def _all_squares_obstruction(q, iv):
    """Every multiplier a square and |M| not dividing (q-1)/2: no perfect set can exist.

    Products lam * s share the quadratic character of s, so the squares would
    be tiled by blocks of size |M|.
    """
    squares = all(pow(lam % q, (q - 1) // 2, q) == 1 for lam in iv.multipliers)
    return squares and ((q - 1) // 2) % iv.size != 0


def test_listed_34729_49369_have_no_perfect_minus3_5_set():
    iv = Interval(3, 5)
    for q in (34729, 49369):
        assert _all_squares_obstruction(q, iv)
        assert check_family(GroupCtx.create(q), iv).exists is False
        assert general_verdict(GroupCtx.create(q), iv).exists is False


def test_quadratic_obstruction_agrees():
    hits = 0
    for q in primes(17, 60000):
        for iv in (Interval(3, 5), Interval(4, 4), Interval(2, 6), Interval(1, 7)):
            if (q - 1) % iv.size == 0 and _all_squares_obstruction(q, iv):
                assert check_family(GroupCtx.create(q), iv).exists is False, (q, iv)
                hits += 1
    assert hits > 10


@pytest.mark.parametrize("key", ["12721[-3,5]", "307009[-2,6]", "475729[-1,7]", "463[-1,5]", "1171[-1,5]"])
def test_construction_generator_matches_reference(key):
    q, g, k1, k2, chains = WORKED[key]
    s = construct_perfect(GroupCtx.create(q, g), Interval(k1, k2))
    assert sorted(map(tuple, s.generator["chains"])) == sorted(chains)
    assert s.elements == tuple(power_set(GroupCtx.create(q, g), exponents(chains)))


def test_minus3_3_rules_agree():
    from splitter_sets.existence import _rule_m3_3, _rule_mk_k
    for q in primes(7, 3000):
        if (q - 1) % 6 == 0:
            ctx = GroupCtx.create(q)
            assert _rule_m3_3(ctx)[0] == _rule_mk_k(ctx, 3)[0], q
