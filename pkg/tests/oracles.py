"""Independent reference implementations used to cross-check the library."""
import random

from splitter_sets.numtheory import factorize


def poly_divmod(num, den):
    """Long division of integer polynomials (lowest degree first) by a monic divisor."""
    assert den[-1] == 1
    num = list(num)
    terms = [(j, d) for j, d in enumerate(den[:-1]) if d]
    top = len(den) - 1
    quot = [0] * max(1, len(num) - top)
    for i in range(len(num) - 1 - top, -1, -1):
        c = num[i + top]
        if not c:
            continue
        quot[i] = c
        num[i + top] = 0
        for j, d in terms:
            num[i + j] -= c * d
    return quot, num[:top]


_cyclo_cache = {}


def cyclotomic(n):
    """Phi_n from x^n - 1 divided by Phi_d over the proper divisors d of n."""
    if n not in _cyclo_cache:
        poly = [-1] + [0] * (n - 1) + [1]
        for d in range(1, n):
            if n % d == 0:
                poly, rem = poly_divmod(poly, cyclotomic(d))
                assert not any(rem)
        while len(poly) > 1 and poly[-1] == 0:
            poly.pop()
        _cyclo_cache[n] = poly
    return _cyclo_cache[n]


def oracle_divides(elements, m):
    """Whether Phi_m divides sum x^e over the multiset, by exact division."""
    coeffs = [0] * (max(elements) + 1)
    for e in elements:
        coeffs[e] += 1
    phi = cyclotomic(m)
    if len(coeffs) < len(phi):
        return False
    _, rem = poly_divmod(coeffs, phi)
    return not any(rem)


def random_multiset(rng: random.Random, N: int):
    size = rng.randrange(1, 13)
    if rng.random() < 0.5:
        # seed progressions so divisibility actually happens
        p, e = rng.choice(factorize(N).factors)
        k = rng.randrange(1, e + 1)
        step = p ** (k - 1)
        out = []
        for _ in range(max(1, size // p)):
            s = rng.randrange(N)
            out += [(s + t * step + rng.randrange(N // p**k) * p**k) % N for t in range(p)]
        return out
    return [rng.randrange(N) for _ in range(size)]
