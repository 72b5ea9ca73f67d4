"""Indices and orders in Z_q^x, the raw material of every existence rule.

Run: python demos/01_discrete_logs.py
"""
from fractions import Fraction

from splitter_sets import GroupCtx, discrete_log, factorize, mult_order, subgroup_index

q = 12721
ctx = GroupCtx.create(q)
print(f"q = {q}, q-1 = {factorize(q - 1)}, smallest primitive root g = {ctx.g}")

for x in (2, 3, 4, -4, 6, 16):
    print(f"  ind_g({x:>2}) = {discrete_log(ctx, x)}")

# rational units like -4/5 are reduced mod q on use
print(f"  ord(-4/5) = {mult_order(ctx, Fraction(-4, 5))}")

# <6, 16> has index gcd(ind 6, ind 16, q-1); x lies in it iff the index divides ind x
idx = subgroup_index(ctx, [6, 16])
print(f"  [Z_q^x : <6,16>] = {idx}")
for x in (4, -4):
    print(f"  {x} in <6,16>? {discrete_log(ctx, x) % idx == 0}")

# the same questions for a 64-bit prime still answer instantly (Pohlig-Hellman)
big = GroupCtx.create((1 << 61) - 1)
print(f"\n2^61-1: g = {big.g}, ind(3) = {discrete_log(big, 3)}")
