"""Elementary multiplicative number theory on small integers.

Everything here is exact and deterministic; integers stay at desk scale
(trial division is plenty).
"""
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, prod


@dataclass(frozen=True)
class FactorizationMap:
    """Prime factorization as ``((p1, e1), (p2, e2), ...)`` with p1 < p2 < ..."""

    entries: tuple = ()

    @property
    def primes(self):
        return [p for p, _ in self.entries]

    def value(self):
        return prod(p**e for p, e in self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


@dataclass(frozen=True)
class UnitSet:
    modulus: int
    members: tuple

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, k):
        return k in self.members


def _check_positive(n):
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"expected an int, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")


@lru_cache(maxsize=4096)
def factorize(n):
    _check_positive(n)
    entries = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            entries.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        entries.append((n, 1))
    return FactorizationMap(tuple(entries))


def is_prime(n):
    if n < 2:
        return False
    return factorize(n).entries == ((n, 1),)


def is_prime_power(n):
    return n > 1 and len(factorize(n)) == 1


def is_squarefree(n):
    return all(e == 1 for _, e in factorize(n))


def divisors(n):
    """Sorted list of the positive divisors of n."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def mobius(n):
    f = factorize(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def totient(n):
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def radical(n):
    return prod(factorize(n).primes)


def units(n):
    _check_positive(n)
    if n == 1:
        return UnitSet(1, (1,))
    return UnitSet(n, tuple(k for k in range(1, n + 1) if gcd(k, n) == 1))


def odd_prime_count(n):
    return sum(1 for p in factorize(n).primes if p != 2)


def multiplicative_order(a, n):
    if gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit modulo {n}")
    k, x = 1, a % n
    while x != 1 % n:
        x = x * a % n
        k += 1
    return k


def primitive_root(p):
    """Smallest generator of the multiplicative group modulo an odd prime p."""
    if not is_prime(p) or p == 2:
        raise ValueError(f"primitive_root needs an odd prime, got {p}")
    qs = factorize(p - 1).primes
    for a in range(2, p):
        if all(pow(a, (p - 1) // q, p) != 1 for q in qs):
            return a
    raise AssertionError("unreachable: every odd prime has a primitive root")


def ramanujan_sum(n, m):
    """c_n(m): sum of the m-th powers of the primitive n-th roots of unity."""
    _check_positive(n)
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    d = gcd(m, n)  # gcd(0, n) == n
    return mobius(n // d) * totient(n) // totient(n // d)
