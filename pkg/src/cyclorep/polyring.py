"""Exact dense univariate polynomials over Z and Q, plus cyclotomic tooling.

A :class:`Poly` stores its coefficients in ascending order (index i holds the
coefficient of x**i).  Coefficients are Python ints whenever they are
integral and :class:`fractions.Fraction` otherwise, so one type covers both
Z[x] and Q[x]; ``is_integral`` tells them apart.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import inf

from . import numtheory as nt
from .errors import DivisionByZero, NonIntegralCoefficient, NotDivisible, ZeroPolynomial

#: Degree reported for the zero polynomial.
ZERO_DEGREE = -inf


def _canon(c):
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int) and not isinstance(c, bool):
        return c
    if isinstance(c, bool):
        return int(c)
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


class Poly:
    """Immutable dense polynomial with exact coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_canon(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    @classmethod
    def constant(cls, c):
        return cls([c])

    @classmethod
    def x(cls):
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots):
        p = cls([1])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def is_integral(self):
        return all(isinstance(c, int) for c in self.coeffs)

    @property
    def is_monic(self):
        return self.leading == 1

    @property
    def height(self):
        return max((abs(c) for c in self.coeffs), default=0)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self):
        return pretty(self)

    def __bool__(self):
        return bool(self.coeffs)

    @staticmethod
    def _coerce(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = Poly([1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __divmod__(self, other):
        return poly_divmod(self, other)

    def __floordiv__(self, other):
        return poly_divmod(self, other)[0]

    def __mod__(self, other):
        return poly_divmod(self, other)[1]

    def scale(self, c):
        return Poly([c * a for a in self.coeffs])

    def monic(self):
        if self.is_zero:
            raise ZeroPolynomial("the zero polynomial has no monic associate")
        lc = self.leading
        if lc == 1:
            return self
        return Poly([Fraction(c) / lc for c in self.coeffs])

    def derivative(self):
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def compose_power(self, t):
        return substitute_power(self, t)

    def terms(self):
        """(exponent, coefficient) pairs of the nonzero terms, ascending."""
        return [(i, c) for i, c in enumerate(self.coeffs) if c]


X = Poly.x()
ONE = Poly([1])


def add(a, b):
    return a + b


def subtract(a, b):
    return a - b


def multiply(a, b):
    return a * b


def poly_divmod(a, b):
    """Euclidean division over Q; stays in Z[x] when b's leading coefficient is a unit."""
    if not isinstance(b, Poly):
        b = Poly([b])
    if b.is_zero:
        raise DivisionByZero("polynomial division by zero")
    lc = b.leading
    unit = lc in (1, -1)
    rem = list(a.coeffs)
    db = len(b.coeffs) - 1
    if len(rem) - 1 < db:
        return Poly(), a
    quot = [0] * (len(rem) - db)
    bc = b.coeffs
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if not c:
            continue
        q = c * lc if unit else Fraction(c) / lc
        quot[i - db] = q
        off = i - db
        for j, bj in enumerate(bc):
            if bj:
                rem[off + j] -= q * bj
    return Poly(quot), Poly(rem[:db])


def remainder(a, b):
    return poly_divmod(a, b)[1]


def divide_exact(a, b):
    """Quotient q with a == b*q, or NotDivisible if the remainder is nonzero.

    For integral inputs the quotient must also be integral.
    """
    q, r = poly_divmod(a, b)
    if not r.is_zero:
        raise NotDivisible(r.degree)
    if a.is_integral and b.is_integral and not q.is_integral:
        raise NotDivisible(None)
    return q


def divisible(a, b):
    return poly_divmod(a, b)[1].is_zero


def substitute_power(f, t):
    """f(x**t)."""
    if t < 1:
        raise ValueError(f"substitution exponent must be positive, got {t}")
    if t == 1 or f.degree < 1:
        return f
    out = [0] * ((len(f.coeffs) - 1) * t + 1)
    for i, c in enumerate(f.coeffs):
        out[i * t] = c
    return Poly(out)


def poly_gcd(a, b):
    """Monic gcd over Q; every intermediate remainder is made monic.

    gcd(0, 0) is the zero polynomial.
    """
    if a.is_zero and b.is_zero:
        return Poly()
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    a, b = a.monic(), b.monic()
    while not b.is_zero:
        r = poly_divmod(a, b)[1]
        a, b = b, (r.monic() if not r.is_zero else r)
    return a


def squarefree_part(f):
    """Monic f / gcd(f, f')."""
    if f.is_zero:
        raise ZeroPolynomial("square-free part of the zero polynomial")
    g = poly_gcd(f, f.derivative())
    return divide_exact(f.monic(), g).monic()


@lru_cache(maxsize=None)
def cyclotomic(n):
    """The n-th cyclotomic polynomial Φ_n as an integral Poly.

    Square-free n: divide x**n - 1 exactly by Φ_d for every proper divisor d.
    Otherwise Φ_n(x) = Φ_{rad n}(x**(n / rad n)).
    """
    if n < 1:
        raise ValueError(f"cyclotomic index must be positive, got {n}")
    if n == 1:
        return Poly([-1, 1])
    n0 = nt.radical(n)
    if n0 < n:
        return substitute_power(cyclotomic(n0), n // n0)
    f = Poly.monomial(n) - 1
    for d in nt.divisors(n)[:-1]:
        f = divide_exact(f, cyclotomic(d))
    return f


@dataclass(frozen=True)
class CyclotomicProfile:
    n: int
    phi_n: Poly
    totient: int
    radical: int
    height: int
    flat: bool
    order: int

    def to_json(self):
        return {
            "n": str(self.n),
            "phi_n": to_json(self.phi_n),
            "totient": str(self.totient),
            "radical": str(self.radical),
            "height": str(self.height),
            "flat": self.flat,
            "order": str(self.order),
        }


def profile(n):
    phi = cyclotomic(n)
    h = phi.height
    return CyclotomicProfile(
        n=n,
        phi_n=phi,
        totient=nt.totient(n),
        radical=nt.radical(n),
        height=h,
        flat=h == 1,
        order=nt.odd_prime_count(n),
    )


def newton_girard_coefficients(n, count):
    """[e_1, ..., e_count] for the primitive n-th roots of unity.

    Power sums are Ramanujan sums, so
    m*e_m = sum_{i=1}^{m} (-1)**(i-1) * e_{m-i} * c_n(i).
    """
    if count < 0 or count > nt.totient(n):
        raise ValueError(f"count must lie in [0, φ({n})], got {count}")
    power_sums = [nt.ramanujan_sum(n, i) for i in range(count + 1)]
    e = [1]
    for m in range(1, count + 1):
        s = 0
        for i in range(1, m + 1):
            term = e[m - i] * power_sums[i]
            s += term if i % 2 else -term
        if s % m:
            raise NonIntegralCoefficient(f"e_{m} for n={n} is {s}/{m}")
        e.append(s // m)
    return e[1:]


def _coeff_text(c):
    return str(c) if isinstance(c, int) else f"{c.numerator}/{c.denominator}"


def to_json(p):
    """Ascending coefficient list as decimal strings, e.g. ["1", "-1", "1"]."""
    return [_coeff_text(c) for c in p.coeffs]


def from_json(data):
    return Poly([Fraction(s) for s in data])


def pretty(p, var="x"):
    """Descending human-readable form such as ``x^2 - x + 1``."""
    if p.is_zero:
        return "0"
    parts = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if k == 0:
            body = _coeff_text(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{_coeff_text(mag)}*{mono}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)
