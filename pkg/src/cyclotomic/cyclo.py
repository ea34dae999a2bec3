"""Cyclotomic polynomials Phi_n, inverse cyclotomic polynomials Psi_n, and Gamma_n.

The primary construction takes Psi_n as the monic lcm of the binomials Y^d - 1
over proper divisors d of n and sets Phi_n = (Y^n - 1) / Psi_n. Several
equivalent routes are provided so they can be checked against each other.
"""

import enum
from dataclasses import dataclass
from math import gcd, prod

from . import numth
from .polyq import RatPoly, lcm_many, monic_gcd, to_int_poly
from .polyz import IntPoly, divides, exact_div, substitute_neg, substitute_power


class OutOfApplicability(ValueError):
    """The requested identity does not apply to this index."""


class CycloAlgo(enum.Enum):
    DEF_LCM = "lcm"
    PRIME_LCM = "prime-lcm"
    RECURSIVE = "recursive"
    RADICAL = "radical"
    NEG_ODD = "neg-odd"
    AUTO = "auto"

    @classmethod
    def parse(cls, name):
        try:
            return cls(name)
        except ValueError:
            return cls[name.upper().replace("-", "_")]

    def applies_to(self, n):
        return self is not CycloAlgo.NEG_ODD or neg_odd_applies(n)


def _check_index(n):
    if n < 1:
        raise ValueError(f"index must be a positive integer, got {n}")


def _binomial(d):
    return RatPoly.x_pow_minus_one(d)


def psi_def(n):
    """Psi_n as the lcm of Y^d - 1 over every proper divisor d of n."""
    _check_index(n)
    if n == 1:
        return IntPoly([1])
    # largest divisors first: once every Y^(n/p) - 1 is in, each remaining
    # binomial already divides the running lcm and its gcd step is one
    # sparse reduction
    return to_int_poly(lcm_many(_binomial(d) for d in reversed(numth.divisors(n)[:-1])))


def psi(n):
    """Psi_n as the lcm of Y^(n/p) - 1 over the primes p dividing n."""
    _check_index(n)
    if n == 1:
        return IntPoly([1])
    return to_int_poly(lcm_many(_binomial(n // p) for p in numth.prime_divisors(n)))


def gamma(n):
    """(Y^n - 1) / (Y - 1), the all-ones polynomial of degree n - 1."""
    _check_index(n)
    return IntPoly([1] * n)


def _phi_from_psi(n, psi_n):
    return exact_div(IntPoly.x_pow_minus_one(n), psi_n)


def phi_recursive(n):
    """Phi_n = (Y^n - 1) / prod of Phi_d over proper divisors d, memoized per call."""
    _check_index(n)
    memo = {1: IntPoly([-1, 1])}

    def rec(m):
        if m not in memo:
            proper = numth.divisors(m)[:-1]
            denom = prod((rec(d) for d in proper), start=IntPoly([1]))
            memo[m] = exact_div(IntPoly.x_pow_minus_one(m), denom)
        return memo[m]

    return rec(n)


def phi_radical(n):
    """Phi_n(Y) = Phi_m(Y^(n/m)) with m the radical of n."""
    _check_index(n)
    m = numth.radical(n)
    return substitute_power(_phi_from_psi(m, psi(m)), n // m)


def neg_odd_applies(n):
    return n % 4 == 2 and n // 2 >= 3


def phi_neg_odd(n):
    """Phi_n(Y) = Phi_{n/2}(-Y) for n = 2k with k odd and k >= 3."""
    if not neg_odd_applies(n):
        raise OutOfApplicability(f"n = {n} is not twice an odd integer >= 3")
    return substitute_neg(phi(n // 2))


def phi(n, algo=CycloAlgo.AUTO):
    """The n-th cyclotomic polynomial computed with the given algorithm."""
    _check_index(n)
    algo = CycloAlgo.parse(algo) if isinstance(algo, str) else algo
    if algo is CycloAlgo.DEF_LCM:
        return _phi_from_psi(n, psi_def(n))
    if algo is CycloAlgo.PRIME_LCM:
        return _phi_from_psi(n, psi(n))
    if algo is CycloAlgo.RECURSIVE:
        return phi_recursive(n)
    if algo in (CycloAlgo.RADICAL, CycloAlgo.AUTO):
        return phi_radical(n)
    if algo is CycloAlgo.NEG_ODD:
        return phi_neg_odd(n)
    raise ValueError(f"unknown algorithm {algo!r}")


@dataclass(frozen=True)
class Factorization:
    """Y^n - 1 as the product of Phi_d over the divisors d of n."""

    n: int
    parts: tuple

    def product(self):
        return prod((p for _, p in self.parts), start=IntPoly([1]))


def factor_unity(n, algo=CycloAlgo.AUTO):
    """Y^n - 1 factored as Phi_d over d | n, verified before returning.

    ``algo`` is used for every d it applies to, AUTO otherwise.
    """
    parts = tuple((d, phi(d, algo if algo.applies_to(d) else CycloAlgo.AUTO))
                  for d in numth.divisors(n))
    fac = Factorization(n, parts)
    if fac.product() != IntPoly.x_pow_minus_one(n):
        raise ArithmeticError(f"product of Phi_d for d | {n} is not Y^{n} - 1")
    return fac


@dataclass(frozen=True)
class Lemma31Report:
    case: int
    holds: bool
    gcd: RatPoly


def check_lemma31(d, e, with_phi=False):
    """Compare gcd(Phi_d, Y^e - 1), or gcd(Phi_d, Phi_e) when ``with_phi``, to the prediction.

    Case 1 (d | e): the gcd is Phi_d. Case 2 (d does not divide e): the gcd is 1.
    Case 3 (d != e, against Phi_e): the gcd is 1.
    """
    if d < 2 or e < 2:
        raise ValueError("check_lemma31 needs d, e >= 2")
    phi_d = phi(d)
    if with_phi:
        if d == e:
            raise ValueError("case 3 needs d != e")
        g = monic_gcd(phi_d, phi(e))
        return Lemma31Report(3, g == 1, g)
    g = monic_gcd(phi_d, IntPoly.x_pow_minus_one(e))
    if e % d == 0:
        return Lemma31Report(1, g == phi_d, g)
    return Lemma31Report(2, g == 1, g)


def check_lemma35(n, r):
    """Whether Phi_n(Y) divides Phi_n(Y^r) in Z[Y], for r coprime to n."""
    if n < 2 or r < 1:
        raise ValueError("check_lemma35 needs n >= 2 and r >= 1")
    if gcd(r, n) != 1:
        raise ValueError(f"r = {r} is not coprime to n = {n}")
    f = phi(n)
    return divides(f, substitute_power(f, r))
