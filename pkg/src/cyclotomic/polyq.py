"""Polynomials over Q: Euclidean gcd, Bezout certificates and monic lcm.

Coefficients are ``fractions.Fraction`` values in lowest terms. Integral values
are stored as plain ``int`` so that the common case of integer polynomials
divided by monic ones never leaves machine-speed integer arithmetic; the two
compare equal, so callers can ignore the distinction.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .polyz import NEG_INF, IntPoly, format_pretty


class NonIntegerCoefficient(ValueError):
    """A coefficient that should be an integer has a nontrivial denominator."""


def _norm(x):
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


def _div(a, b):
    """a / b for rational a, b with b nonzero, normalized."""
    if b == 1:
        return a
    if b == -1:
        return -a
    if type(a) is int and type(b) is int:
        return _norm(Fraction(a, b))
    return _norm(Fraction(a) / b)


def _strip(c):
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return c[:n]


class RatPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = tuple(_strip([_norm(Fraction(c)) if not isinstance(c, int)
                                    else c for c in coeffs]))

    @classmethod
    def _raw(cls, coeffs):
        p = object.__new__(cls)
        p.coeffs = tuple(coeffs)
        return p

    @classmethod
    def from_int(cls, f):
        return cls._raw(f.coeffs)

    @classmethod
    def x_pow_minus_one(cls, n):
        return cls.from_int(IntPoly.x_pow_minus_one(n))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def rationals(self):
        """Coefficients as Fractions, ascending degree."""
        return tuple(Fraction(c) for c in self.coeffs)

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return self.leading == 1

    def is_integral(self):
        return all(type(c) is int for c in self.coeffs)

    def monic(self):
        if not self.coeffs:
            return self
        return self.scale(_div(1, self.leading))

    def scale(self, c):
        c = _norm(c)
        if c == 1:
            return self
        if not c:
            return RatPoly()
        return RatPoly._raw(_norm(x * c) for x in self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return _norm(acc) if isinstance(acc, Fraction) else acc

    def __eq__(self, other):
        if isinstance(other, RatPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == tuple(_strip([_norm(Fraction(other))]))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __repr__(self):
        return f"RatPoly([{', '.join(format_rational(c) for c in self.coeffs)}])"

    def __str__(self):
        return format_pretty(self, render=_render_coeff)

    def __neg__(self):
        return RatPoly._raw(-c for c in self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, c in enumerate(b):
            res[i] = _norm(res[i] + c)
        return RatPoly._raw(_strip(res))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return RatPoly._raw(_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, k):
        result, base = RatPoly([1]), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __divmod__(self, other):
        return rat_divmod(self, other)

    def __floordiv__(self, other):
        return rat_divmod(self, other)[0]

    def __mod__(self, other):
        return rat_divmod(self, other)[1]


def _coerce(x):
    if isinstance(x, RatPoly):
        return x
    if isinstance(x, IntPoly):
        return RatPoly.from_int(x)
    if isinstance(x, (int, Fraction)):
        return RatPoly([x])
    return None


def _mul(a, b):
    if not a or not b:
        return ()
    if all(type(c) is int for c in a) and all(type(c) is int for c in b):
        return IntPoly(a).__mul__(IntPoly(b)).coeffs
    res = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b, i):
                if y:
                    res[j] += x * y
    return _strip([_norm(c) for c in res])


def rat_divmod(f, g):
    """Euclidean division in Q[Y]: f = q*g + r with deg r < deg g."""
    f, g = _coerce(f), _coerce(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    a, b = f.coeffs, g.coeffs
    dg = len(b) - 1
    if len(a) <= dg:
        return RatPoly(), f
    lc = b[-1]
    unit = lc == 1 or lc == -1
    tail = [(i, x) for i, x in enumerate(b[:-1]) if x]
    r = list(a)
    q = [0] * (len(a) - dg)
    for k in range(len(q) - 1, -1, -1):
        top = r[k + dg]
        if not top:
            continue
        c = (top if lc == 1 else -top) if unit else _div(top, lc)
        q[k] = c
        r[k + dg] = 0
        if type(c) is int:
            for i, x in tail:
                r[k + i] -= c * x
        else:
            for i, x in tail:
                r[k + i] = _norm(r[k + i] - c * x)
    r = [_norm(x) for x in r[:dg]] if any(type(x) is not int for x in r) else r[:dg]
    return RatPoly._raw(q), RatPoly._raw(_strip(r))


def _check_not_both_zero(f, g):
    if not f and not g:
        raise ValueError("gcd of two zero polynomials is undefined")


def _primitive_ints(coeffs):
    """Primitive integer list proportional to a rational coefficient list."""
    den = 1
    for c in coeffs:
        if type(c) is not int:
            den = den * c.denominator // gcd(den, c.denominator)
    ints = [c if den == 1 and type(c) is int else int(c * den) for c in coeffs]
    return _make_primitive(ints)


def _make_primitive(ints):
    g = 0
    for c in ints:
        g = gcd(g, c)
        if g == 1:
            break
    if ints and ints[-1] < 0:
        g = -g
    if g in (0, 1):
        return ints
    return [c // g for c in ints]


def _scaled_remainder(a, b):
    """A primitive integer multiple of (a mod b) for integer lists a, b.

    Whenever a leading coefficient is not divisible by lc(b), the working
    remainder is multiplied by the missing factor first, so every step stays
    in Z while the result differs from the remainder over Q by a unit of Q.
    """
    db = len(b) - 1
    lb = b[-1]
    tail = [(i, x) for i, x in enumerate(b[:-1]) if x]
    r = list(a)
    for k in range(len(a) - 1 - db, -1, -1):
        t = r[k + db]
        if not t:
            continue
        if t % lb:
            s = lb // gcd(t, lb)
            r = [x * s for x in r[:k + db + 1]]
            t *= s
        c = t // lb
        r[k + db] = 0
        for i, x in tail:
            r[k + i] -= c * x
        del r[k + db:]
    return _make_primitive(_strip(r[:db]))


def monic_gcd(f, g):
    """Monic gcd via the Euclidean remainder sequence.

    Remainders are carried as primitive integer multiples of the remainders
    over Q; scaling by units does not change the sequence of divisors, and the
    last nonzero one is made monic at the end.
    """
    f, g = _coerce(f), _coerce(g)
    _check_not_both_zero(f, g)
    a, b = _primitive_ints(f.coeffs), _primitive_ints(g.coeffs)
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, _scaled_remainder(a, b)
    return RatPoly._raw(a).monic()


@dataclass(frozen=True)
class BezoutCertificate:
    """u * f1 + v * f2 == g, with g the monic gcd of f1 and f2."""

    g: RatPoly
    u: RatPoly
    v: RatPoly

    def verify(self, f1, f2):
        f1, f2 = _coerce(f1), _coerce(f2)
        if self.u * f1 + self.v * f2 != self.g:
            return False
        if not self.g:
            return not f1 and not f2
        return not (f1 % self.g) and not (f2 % self.g)


def extended_gcd(f, g):
    """Bezout certificate for the monic gcd of f and g (checked before returning)."""
    f, g = _coerce(f), _coerce(g)
    _check_not_both_zero(f, g)
    r0, r1 = f, g
    s0, s1 = RatPoly([1]), RatPoly()
    t0, t1 = RatPoly(), RatPoly([1])
    while r1:
        q, r = rat_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv = _div(1, r0.leading)
    cert = BezoutCertificate(r0.scale(inv), s0.scale(inv), t0.scale(inv))
    if not cert.verify(f, g):
        raise ArithmeticError("Bezout certificate failed verification")
    return cert


def monic_lcm(f, g):
    f, g = _coerce(f), _coerce(g)
    if not f or not g:
        raise ValueError("lcm of a zero polynomial is undefined")
    f, g = f.monic(), g.monic()
    d = monic_gcd(f, g)
    # divide the smaller factor first to keep intermediate degrees down
    if len(f) > len(g):
        f, g = g, f
    q, r = rat_divmod(f, d)
    assert not r
    return (q * g).monic()


def lcm_many(fs):
    """Left fold of monic_lcm over a nonempty sequence."""
    fs = list(fs)
    if not fs:
        raise ValueError("lcm_many needs at least one polynomial")
    if any(not _coerce(f) for f in fs):
        raise ValueError("lcm of a zero polynomial is undefined")
    acc = _coerce(fs[0]).monic()
    for f in fs[1:]:
        acc = monic_lcm(acc, f)
    return acc


def to_int_poly(f):
    """The same polynomial over Z; every coefficient must be an integer."""
    for i, c in enumerate(f.coeffs):
        if type(c) is not int:
            raise NonIntegerCoefficient(f"coefficient {c} of Y^{i} is not an integer")
    return IntPoly(f.coeffs)


def format_rational(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _render_coeff(c):
    s = format_rational(c)
    return s if "/" not in s else f"({s})"


def format_coeffs(f):
    if not f:
        return "0"
    return " ".join(format_rational(c) for c in f.coeffs)
