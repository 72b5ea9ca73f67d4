"""Quasi-perfect sets: two nonexistence criteria checked against brute force.

Run: python demos/06_quasi_perfect.py
"""
from splitter_sets import Interval, lift_interval, max_splitter_bruteforce, no_quasi_B0k_km

print("B[0,k](km) with k | m, m > k:")
for k, m in ((2, 4), (2, 6), (3, 6), (3, 9), (4, 8)):
    v = no_quasi_B0k_km(k, m)
    best, _ = max_splitter_bruteforce(k * m, Interval(0, k))
    print(f"  k={k} m={m}: {v.conclusion}; largest set {best} < {(k * m - 1) // k}")

print("\nB[-(k-1),k](m) lifted to B[-k,k](m):")
for k, m in ((2, 15), (2, 9), (3, 16), (3, 13)):
    v = lift_interval(k, m)
    line = f"  k={k} m={m}: {v.conclusion} ({v.reason})"
    if (m - 1) % (2 * k - 1):
        best, _ = max_splitter_bruteforce(m, Interval(k - 1, k))
        line += f"; largest set {best}, quasi-perfect size {(m - 1) // (2 * k - 1)}"
    print(line)
