"""Arithmetic in Q_n = Q[Y] / <Phi_n>, the ring generated by y_n = Y mod Phi_n.

Elements are kept as their unique remainder of degree < phi(n), so equality
is representative equality.
"""

import os
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .cyclo import phi
from .numth import euler_phi
from .polyq import RatPoly, _coerce, extended_gcd, rat_divmod

DEFAULT_DIM_CAP = 16


class ZeroInverse(ZeroDivisionError):
    pass


class NonUnit(ArithmeticError):
    """A nonzero residue turned out not to be invertible."""


class CapExceeded(ValueError):
    """phi(n) is above the configured dimension cap; the check was not attempted."""


def dim_cap():
    """Dimension cap for product-expansion checks, overridable via CYCLO_QN_DIM_CAP."""
    raw = os.environ.get("CYCLO_QN_DIM_CAP")
    if raw is None:
        return DEFAULT_DIM_CAP
    cap = int(raw)
    if cap < 1:
        raise ValueError(f"CYCLO_QN_DIM_CAP must be a positive integer, got {raw!r}")
    return cap


class QnContext:
    __slots__ = ("n", "modulus", "dim", "_rmod")

    def __init__(self, n):
        if n < 1:
            raise ValueError(f"n must be positive, got {n}")
        self.n = n
        self.modulus = phi(n)
        self.dim = self.modulus.degree
        self._rmod = RatPoly.from_int(self.modulus)

    def __repr__(self):
        return f"QnContext({self.n})"

    def reduce(self, f):
        return QnElement(self, rat_divmod(_coerce(f), self._rmod)[1])

    def element(self, coeffs):
        return self.reduce(RatPoly(coeffs))

    @property
    def zero(self):
        return QnElement(self, RatPoly())

    @property
    def one(self):
        return QnElement(self, RatPoly([1]))

    @property
    def y(self):
        """The generator y_n; equal to 1 in Q_1."""
        return self.reduce(RatPoly([0, 1]))


def qn_reduce(ctx, f):
    return ctx.reduce(f)


class QnElement:
    __slots__ = ("ctx", "rep")

    def __init__(self, ctx, rep):
        self.ctx = ctx
        self.rep = rep

    def _other(self, other):
        if isinstance(other, QnElement):
            if other.ctx.n != self.ctx.n:
                raise ValueError(f"mixing elements of Q_{self.ctx.n} and Q_{other.ctx.n}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.reduce(RatPoly([other]))
        return None

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx.reduce(RatPoly([other]))
        if not isinstance(other, QnElement):
            return NotImplemented
        return self.ctx.n == other.ctx.n and self.rep == other.rep

    def __hash__(self):
        return hash((self.ctx.n, self.rep))

    def __bool__(self):
        return bool(self.rep)

    def __repr__(self):
        return f"QnElement(n={self.ctx.n}, rep={self.rep})"

    def __str__(self):
        return str(self.rep).replace("Y", "y")

    def __neg__(self):
        return QnElement(self.ctx, -self.rep)

    def __add__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return QnElement(self.ctx, self.rep + other.rep)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return QnElement(self.ctx, self.rep - other.rep)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self.ctx.reduce(self.rep * other.rep)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            return qn_inv(self) ** -k
        result, base = self.ctx.one, self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self * qn_inv(other)

    def is_scalar(self):
        return len(self.rep) <= 1

    def scalar(self):
        if not self.is_scalar():
            raise ValueError(f"{self} is not a scalar")
        return self.rep.coeffs[0] if self.rep else 0


def qn_mul(a, b):
    return a * b


def qn_inv(a):
    """Inverse through the Bezout relation between the representative and Phi_n."""
    if not a:
        raise ZeroInverse(f"0 has no inverse in Q_{a.ctx.n}")
    cert = extended_gcd(a.rep, a.ctx._rmod)
    if cert.g != 1:
        raise NonUnit(f"{a} shares the factor {cert.g} with Phi_{a.ctx.n}")
    return a.ctx.reduce(cert.u)


def qn_order(a, bound):
    """Least k <= bound with a^k == 1, or None if there is none."""
    if not a:
        raise ValueError("the zero element has no multiplicative order")
    one = a.ctx.one
    power = a
    for k in range(1, bound + 1):
        if power == one:
            return k
        power = power * a
    return None


def _check_cap(n, cap):
    cap = dim_cap() if cap is None else cap
    dim = euler_phi(n)
    if dim > cap:
        raise CapExceeded(f"phi({n}) = {dim} exceeds the dimension cap {cap}")


def _expand_linear_product(ctx, roots):
    """Coefficients (ascending) of prod (Y - root) in Q_n[Y]."""
    coeffs = [ctx.one]
    for root in roots:
        nxt = [ctx.zero] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] = nxt[i + 1] + c
            nxt[i] = nxt[i] - root * c
        coeffs = nxt
    return coeffs


def check_lemma34(n, cap=None):
    """Y^n - 1 == prod_{0 <= r < n} (Y - y^r) in Q_n[Y], with all y^r - y^s units."""
    _check_cap(n, cap)
    ctx = QnContext(n)
    y = ctx.y
    powers = [ctx.one]
    for _ in range(n - 1):
        powers.append(powers[-1] * y)
    for r in range(n):
        for s in range(r):
            diff = powers[r] - powers[s]
            try:
                if diff * qn_inv(diff) != ctx.one:
                    return False
            except (ZeroInverse, NonUnit):
                return False
    coeffs = _expand_linear_product(ctx, powers)
    expected = [ctx.zero] * (n + 1)
    expected[0], expected[n] = -ctx.one, ctx.one
    return coeffs == expected


def check_theorem33_product(n, cap=None):
    """Phi_n == prod (Y - y^r) over 0 <= r < n coprime to n, expanded in Q_n[Y].

    The coprime set includes r = 0 only for n = 1, where it yields Phi_1 = Y - 1.
    """
    _check_cap(n, cap)
    ctx = QnContext(n)
    y = ctx.y
    roots = [y ** r for r in range(n) if gcd(r, n) == 1]
    coeffs = _expand_linear_product(ctx, roots)
    if not all(c.is_scalar() for c in coeffs):
        return False
    return RatPoly([c.scalar() for c in coeffs]) == ctx.modulus


@dataclass(frozen=True)
class Cor37Report:
    generator_order: object
    expected: int
    holds: bool


def check_cor37(n, cap=None):
    """Order of y_n (n even) or -y_n (n odd) against n resp. 2n.

    Also checks that every +-y^r has order dividing the expected group order.
    """
    if n < 2:
        raise ValueError("check_cor37 needs n >= 2")
    _check_cap(n, cap)
    ctx = QnContext(n)
    y = ctx.y
    generator, expected = (y, n) if n % 2 == 0 else (-y, 2 * n)
    order = qn_order(generator, 2 * expected)
    holds = order == expected
    if holds:
        power = ctx.one
        for _ in range(n):
            for elt in (power, -power):
                if elt ** expected != ctx.one:
                    holds = False
            power = power * y
    return Cor37Report(order, expected, holds)


def has_subfield(n, d):
    """Whether Q_n (n even) contains a copy of Q_d: exactly when d divides n."""
    if n < 1 or n % 2:
        raise ValueError(f"has_subfield needs an even positive n, got {n}")
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    return n % d == 0


def roots_of_unity_pm(n):
    """The distinct elements +-y_n^r for 0 <= r < n."""
    ctx = QnContext(n)
    y = ctx.y
    seen = set()
    power = ctx.one
    for _ in range(n):
        seen.add(power)
        seen.add(-power)
        power = power * y
    return seen
