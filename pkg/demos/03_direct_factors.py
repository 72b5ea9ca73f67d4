"""Direct factors of Z_N with prime-power size, and their complements.

The multipliers {1,...,k} split Z_q^x iff their indices form a direct factor
of Z_{q-1}; this script runs that test for two small primes.

Run: python demos/03_direct_factors.py
"""
from splitter_sets import (GroupCtx, Interval, build_complement, complement_exists_bruteforce, direct_factor_test,
                           is_factorization, reduce_to_factorization, stable_subgroup)

for q, k in ((421, 5), (103, 3)):
    ctx = GroupCtx.create(q)
    A = reduce_to_factorization(ctx, Interval(0, k))
    verdict = direct_factor_test(A, q - 1, k)
    print(f"q={q}, g={ctx.g}: A = ind{{1..{k}}} = {A}")
    print(f"  cyclotomic levels {list(verdict.divisor_levels)}, need {verdict.n}: "
          f"{'direct factor' if verdict else 'not a direct factor'}")
    if verdict:
        comp = build_complement(verdict.labeling, q - 1)
        C = comp.elements()
        print(f"  complement chains (step, count) = {list(comp.chains)}; tiles: {is_factorization(A, C, q - 1)}")
        print(f"  stable subgroup of the complement has index {stable_subgroup(C, q - 1)}")
    found, _ = complement_exists_bruteforce(A, q - 1)
    print(f"  exact-cover oracle agrees: {found == verdict.is_factor}")
