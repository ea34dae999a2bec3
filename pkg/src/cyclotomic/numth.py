"""Elementary number theory: divisors, factorization, Euler phi, radical."""

from math import isqrt, prod


def _check_positive(n):
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")


def prime_factors(n):
    """Return the factorization of ``n >= 2`` as ``[(p, e), ...]``, ascending in p.

    Plain trial division up to sqrt(n).
    """
    if n < 2:
        raise ValueError(f"prime_factors needs n >= 2, got {n}")
    factors = []
    p = 2
    while p <= isqrt(n):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return factors


def prime_divisors(n):
    _check_positive(n)
    return [] if n == 1 else [p for p, _ in prime_factors(n)]


def divisors(n):
    """All positive divisors of n, ascending."""
    _check_positive(n)
    divs = [1]
    if n > 1:
        for p, e in prime_factors(n):
            divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def euler_phi(n):
    _check_positive(n)
    result = n
    for p in prime_divisors(n):
        result = result // p * (p - 1)
    return result


def radical(n):
    _check_positive(n)
    return prod(prime_divisors(n))


def is_square_free(n):
    return radical(n) == n
