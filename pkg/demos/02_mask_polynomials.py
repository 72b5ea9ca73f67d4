"""Mask polynomials and prime-power cyclotomic divisibility.

A multiset A of Z_N becomes f_A(x) = sum x^a. Phi_{p^k} divides f_A exactly
when A mod p^k splits into progressions of difference p^{k-1} and length p.

Run: python demos/02_mask_polynomials.py
"""
from splitter_sets import ap_decompose, cyclotomic_divides, divisor_partition, mask_of

N = 420
A = [0, 1, 2, 278, 404]
mA = mask_of(A, N)
print(f"A = {A} in Z_{N}")
for k in (1, 2):
    print(f"  Phi_5^{k} | f_A ? {cyclotomic_divides(mA, 5, k)}")

dec = ap_decompose(mA, 5, 1)
print(f"  A mod 5 as progressions: {dec.progressions()}")

# sums of sets are products of masks
B = list(range(0, N, 5))
prod = mA.convolve(mask_of(B, N))
print(f"\nA + 5Z_{N} covers every residue once: {bool((prod.coeffs == 1).all())}")

# for a factorization the cyclotomic levels of A and B split [1, v_p(N)]
MA, MB = divisor_partition(A, B, N, 5)
print(f"  M_A = {sorted(MA)}, M_B = {sorted(MB)}")
