"""Dense univariate polynomials over Z.

Coefficients are stored in ascending degree order with no trailing zeros, so
``IntPoly([-1, 0, 1])`` is ``Y^2 - 1`` and the zero polynomial is ``IntPoly([])``.
"""

from itertools import repeat
from math import gcd
import operator

NEG_INF = float("-inf")

# Operand length above which mul switches from schoolbook to Karatsuba.
KARATSUBA_THRESHOLD = 64

# Work estimate (quotient length times divisor terms) above which exact_div
# divides at an evaluation point instead of coefficient by coefficient.
KRONECKER_THRESHOLD = 20_000

MINUS = "−"


class NonExactDivision(ArithmeticError):
    """The divisor does not divide the dividend in Z[Y]."""


def _strip(c):
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return c[:n] if n != len(c) else c


class IntPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = tuple(_strip(list(coeffs)))

    @classmethod
    def _raw(cls, coeffs):
        # coeffs must already be a stripped tuple
        p = object.__new__(cls)
        p.coeffs = coeffs
        return p

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    @classmethod
    def x_pow_minus_one(cls, n):
        """Y^n - 1."""
        if n == 0:
            return cls()
        return cls([-1] + [0] * (n - 1) + [1])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return self.leading == 1

    def height(self):
        return max((abs(c) for c in self.coeffs), default=0)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _strip((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        return format_pretty(self)

    def __neg__(self):
        return IntPoly._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        if not isinstance(other, IntPoly):
            return NotImplemented
        return IntPoly(_add(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        if not isinstance(other, IntPoly):
            return NotImplemented
        return IntPoly(_add(self.coeffs, [-c for c in other.coeffs]))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs])
        if not isinstance(other, IntPoly):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result, base = IntPoly([1]), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __floordiv__(self, other):
        return exact_div(self, other)


def _add(a, b):
    if len(a) < len(b):
        a, b = b, a
    res = list(map(operator.add, a, b))
    res += a[len(b):]
    return res


def _axpy(seg, c, b):
    """seg + c*b elementwise (the slice update of every kernel below)."""
    if c == 1:
        return map(operator.add, seg, b)
    if c == -1:
        return map(operator.sub, seg, b)
    return map(operator.add, seg, map(operator.mul, repeat(c), b))


def _school(a, b):
    lb = len(b)
    res = [0] * (len(a) + lb - 1)
    for i, x in enumerate(a):
        if x:
            res[i:i + lb] = _axpy(res[i:i + lb], x, b)
    return res


def _karatsuba(a, b):
    # a, b: nonempty lists of equal length
    n = len(a)
    if n <= KARATSUBA_THRESHOLD:
        return _school(a, b)
    h = n // 2
    a0, a1 = a[:h], a[h:]
    b0, b1 = b[:h], b[h:]
    z0 = _karatsuba(a0, b0)
    z2 = _karatsuba(a1, b1)
    sa = _add(a0, a1)
    sb = _add(b0, b1)
    z1 = _karatsuba(sa, sb)
    l0 = len(z0)
    z1[:l0] = map(operator.sub, z1[:l0], z0)
    z1 = list(map(operator.sub, z1, z2))
    res = z0 + [0] + z2
    lz = len(z1)
    res[h:h + lz] = map(operator.add, res[h:h + lz], z1)
    return res


def _mul_lists(a, b):
    if not a or not b:
        return []
    if len(a) < len(b):
        a, b = b, a
    m = len(b)
    if m <= KARATSUBA_THRESHOLD:
        return _school(a, b)
    # unbalanced operands: multiply the longer one in blocks of len(b)
    res = [0] * (len(a) + m - 1)
    for start in range(0, len(a), m):
        block = a[start:start + m]
        if len(block) < m:
            block = block + [0] * (m - len(block))
        for i, c in enumerate(_karatsuba(block, list(b)), start):
            if c:
                res[i] += c
    return _strip(res)


def mul(f, g):
    return IntPoly._raw(tuple(_strip(_mul_lists(list(f.coeffs), list(g.coeffs)))))


def _sparse_terms(c):
    return [(i, x) for i, x in enumerate(c) if x]


def _is_sparse(c):
    # an indexed Python loop costs roughly ten C-level slice updates
    return 10 * sum(1 for x in c if x) < len(c)


def _long_division(f, g):
    """Full top-down long division over Z; returns (q, r) or raises."""
    dg = len(g) - 1
    lc = g[-1]
    body = list(g[:-1])
    tail = _sparse_terms(body) if _is_sparse(body) else None
    r = list(f)
    q = [0] * (len(f) - dg)
    for k in range(len(q) - 1, -1, -1):
        top = r[k + dg]
        if not top:
            continue
        if lc == 1:
            c = top
        else:
            c, rem = divmod(top, lc)
            if rem:
                raise NonExactDivision(
                    f"leading coefficient {top} at degree {k + dg} not divisible by {lc}")
        q[k] = c
        r[k + dg] = 0
        if tail is None:
            r[k:k + dg] = _axpy(r[k:k + dg], -c, body)
        else:
            for i, x in tail:
                r[k + i] -= c * x
    return q, _strip(r[:dg])


def divmod_int(f, g):
    """Long division in Z[Y]; only valid when every step divides exactly.

    Raises NonExactDivision if a leading coefficient is not divisible by lc(g).
    """
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    a, b = f.coeffs, g.coeffs
    if len(a) < len(b):
        return IntPoly(), f
    q, r = _long_division(a, b)
    return IntPoly(q), IntPoly(r)


def _pack(c, bits):
    """The integer sum c[i] * 2^(bits*i); bits is a multiple of 8."""
    w = bits // 8
    zero = bytes(w)
    pos = b"".join(x.to_bytes(w, "little") if x > 0 else zero for x in c)
    neg = b"".join((-x).to_bytes(w, "little") if x < 0 else zero for x in c)
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def _unpack(v, bits):
    """Balanced base-2^bits digits of v, ascending, each in [-2^(bits-1), 2^(bits-1))."""
    sign = -1 if v < 0 else 1
    v = abs(v)
    w = bits // 8
    raw = v.to_bytes(-(-v.bit_length() // bits) * w + w, "little")
    full, half = 1 << bits, 1 << (bits - 1)
    out, carry = [], 0
    for i in range(0, len(raw), w):
        d = int.from_bytes(raw[i:i + w], "little") + carry
        carry = d >= half
        out.append(sign * (d - full if carry else d))
    return _strip(out)


def _kronecker_quotient(a, b, bits):
    """q with q * b == a via one big-integer division at Y = 2^bits.

    Returns (q, None) on success or (None, wider) when the slot width was too
    small. A candidate q is accepted only when every coefficient of q * b - a
    is provably below 2^(bits-1) in absolute value; then the vanishing of that
    difference at 2^bits forces it to vanish identically.
    """
    qv, rv = divmod(_pack(a, bits), _pack(b, bits))
    if rv:
        raise NonExactDivision("nonzero remainder")
    q = _unpack(qv, bits)
    if not q or len(q) != len(a) - len(b) + 1:
        return None, 2 * bits
    bound = min(len(q), len(b)) * max(map(abs, q)) * max(map(abs, b)) + max(map(abs, a))
    if bound.bit_length() + 1 > bits:
        return None, max(2 * bits, bound.bit_length() + 9)
    return q, None


def exact_div(f, g):
    """Return q with q * g == f, raising NonExactDivision otherwise.

    Small or sparse divisors use the coefficient-wise long division. Large
    dense ones evaluate both operands at a power of two and divide there, so
    the work happens inside the big-integer routines; the result is accepted
    only under a coefficient bound that makes it provably the polynomial
    quotient, and the long division is the fallback.
    """
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    a, b = f.coeffs, g.coeffs
    if not a:
        return IntPoly()
    if len(a) < len(b):
        raise NonExactDivision("divisor has larger degree than dividend")
    m = len(a) - len(b) + 1
    nnz = sum(1 for x in b if x)
    if m * nnz >= KRONECKER_THRESHOLD and not _is_sparse(b):
        # slot width: room for the operands, a modest quotient and the bound
        bits = (max(map(abs, a)).bit_length() + max(map(abs, b)).bit_length()
                + min(m, len(b)).bit_length() + 12)
        for _ in range(4):
            q, bits = _kronecker_quotient(a, b, -(-bits // 8) * 8)
            if q is not None:
                return IntPoly._raw(tuple(q))
    q, r = _long_division(a, b)
    if r:
        raise NonExactDivision("nonzero remainder")
    return IntPoly._raw(tuple(q))


def content(f):
    """gcd of the coefficients; 0 for the zero polynomial."""
    g = 0
    for c in f.coeffs:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def primitive_part(f):
    """f divided by its content, with positive leading coefficient."""
    if not f:
        return f
    c = content(f)
    if f.leading < 0:
        c = -c
    return IntPoly._raw(tuple(x // c for x in f.coeffs))


def divides(f, g):
    """True iff f divides g in Z[Y]."""
    if not f:
        raise ValueError("divides: f must be nonzero")
    if not g:
        return True
    if len(g) < len(f):
        return False
    try:
        _, r = divmod_int(g, f)
    except NonExactDivision:
        return False
    return not r


def substitute_power(f, k):
    """f(Y^k)."""
    if k < 1:
        raise ValueError(f"substitute_power needs k >= 1, got {k}")
    if k == 1 or not f:
        return f
    res = [0] * ((len(f) - 1) * k + 1)
    res[::k] = f.coeffs
    return IntPoly._raw(tuple(res))


def substitute_neg(f):
    """f(-Y)."""
    return IntPoly._raw(tuple(-c if i & 1 else c for i, c in enumerate(f.coeffs)))


def reverse(f):
    return IntPoly(reversed(f.coeffs))


def format_coeffs(f):
    if not f:
        return "0"
    return " ".join(str(c) for c in f.coeffs)


def parse_coeffs(text):
    parts = text.split()
    if parts == ["0"]:
        return IntPoly()
    return IntPoly(int(p) for p in parts)


def format_term(c, k, render=str):
    """Render |c| Y^k; sign handled by the caller."""
    if k == 0:
        return render(c)
    mono = "Y" if k == 1 else f"Y^{k}"
    if c == 1:
        return mono
    return render(c) + mono


def format_pretty(f, render=str):
    """Descending-degree rendering such as ``Y^4 + 1`` or ``Y^2 − Y + 1``."""
    pieces = []
    for k in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[k]
        if not c:
            continue
        body = format_term(abs(c), k, render)
        if not pieces:
            pieces.append(body if c > 0 else MINUS + body)
        else:
            pieces.append((" + " if c > 0 else f" {MINUS} ") + body)
    return "".join(pieces) or "0"
