"""Smallest 0,1-companion polynomials divisible by Φ_n.

A member of A_n is f(x) = x^m - sum_{k in K} x^k - 1 with m < n and Φ_n | f.
This module holds the sparse encoding of such polynomials, their
correspondence with subsets of n-th roots of unity summing to 1, the known
constructive upper bounds, and an exact minimum-degree search.
"""
from dataclasses import dataclass, field
from math import ceil

from . import numtheory as nt
from .errors import (
    BadDivisor,
    BadRadical,
    BadShape,
    BudgetExhausted,
    NoInteriorMonomial,
    NotFlat,
    NotMember,
    OddModulus,
    RepresentationError,
    WrongFactorCount,
)
from .polyring import Poly, cyclotomic, divisible, poly_divmod

EXHAUSTIVE = "exhaustive"
MEET_IN_MIDDLE = "meet_in_middle"
STRATEGIES = (EXHAUSTIVE, MEET_IN_MIDDLE)

#: Node limit used when search_min is called without a budget.
DEFAULT_BUDGET = 1 << 22


@dataclass(frozen=True, order=True)
class SparseSignature:
    """x^degree - sum(x^k for k in inner) - 1."""

    degree: int
    inner: tuple = ()

    def __post_init__(self):
        inner = tuple(sorted(set(self.inner)))
        if self.degree < 2:
            raise ValueError(f"signature degree must be at least 2, got {self.degree}")
        if inner and (inner[0] < 1 or inner[-1] >= self.degree):
            raise ValueError(f"inner exponents must lie in 1..{self.degree - 1}")
        object.__setattr__(self, "inner", inner)

    def to_json(self):
        return {"degree": str(self.degree), "inner": [str(k) for k in self.inner]}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["degree"]), tuple(int(k) for k in data["inner"]))

    def scaled(self, t):
        return SparseSignature(self.degree * t, tuple(k * t for k in self.inner))

    def __str__(self):
        return str(to_polynomial(self))


def to_polynomial(s):
    coeffs = [0] * (s.degree + 1)
    coeffs[0] = -1
    coeffs[-1] = 1
    for k in s.inner:
        coeffs[k] = -1
    return Poly(coeffs)


def from_polynomial(f):
    """Inverse of to_polynomial; ValueError unless f has the 0,1-companion shape."""
    cs = f.coeffs
    if len(cs) < 3 or cs[-1] != 1 or cs[0] != -1 or any(c not in (0, -1) for c in cs[1:-1]):
        raise ValueError(f"{f} is not of the form x^m - sum x^k - 1")
    return SparseSignature(len(cs) - 1, tuple(i for i in range(1, len(cs) - 1) if cs[i]))


def is_member(s, n):
    return s.degree < n and divisible(to_polynomial(s), cyclotomic(n))


def sums_to_one(exponents, n):
    """Whether sum of ζ_n^t over the exponents equals 1 (checked modulo Φ_n)."""
    coeffs = [0] * n
    for t in exponents:
        coeffs[t % n] += 1
    coeffs[0] -= 1
    p = Poly(coeffs)
    return poly_divmod(p, cyclotomic(n))[1].is_zero


def signature_to_subset(s, n):
    """Exponents of the root set {ζ^(n-m), ζ^(n-m+k) : k in K}, whose sum is 1."""
    if not is_member(s, n):
        raise NotMember(f"{to_polynomial(s)} is not in A_{n}")
    shift = n - s.degree
    return (shift,) + tuple(shift + k for k in s.inner)


def subset_to_signature(exponents, n, check=True):
    exps = tuple(sorted(set(exponents)))
    if not exps or exps[0] < 1 or exps[-1] >= n:
        raise ValueError(f"exponents must be a non-empty subset of 1..{n - 1}")
    if check and not sums_to_one(exps, n):
        raise NotMember(f"roots of unity with exponents {list(exps)} do not sum to 1")
    k0 = exps[0]
    return SparseSignature(n - k0, tuple(t - k0 for t in exps[1:]))


def sg_statistic(s, n):
    """Sum over primitive n-th roots ζ of f(ζ), computed from Ramanujan sums."""
    c = nt.ramanujan_sum
    return c(n, s.degree) - sum(c(n, k) for k in s.inner) - c(n, 0)


def lower_bound(n):
    """Every member of A_n has degree strictly greater than this."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    return max(nt.totient(n), ceil(n / 2))


# ---------------------------------------------------------------------------
# constructions


def even_count_divisors(n):
    """Square-free divisors of n with an even (nonzero) number of prime factors."""
    return [
        d for d in nt.divisors(n)
        if d > 1 and nt.is_squarefree(d) and len(nt.factorize(d)) % 2 == 0
    ]


def _verified(s, n):
    if not is_member(s, n):
        raise RepresentationError(f"construction produced non-member {to_polynomial(s)} for n={n}")
    return s


def witness_even_count_divisor(n, d):
    """Member of degree n - n/d from the primitive d-th roots of unity (their sum is μ(d) = 1)."""
    if d < 6 or n % d or d not in even_count_divisors(n):
        raise BadDivisor(f"{d} is not a square-free divisor of {n} with an even prime count")
    step = n // d
    subset = [k * step for k in nt.units(d)]
    return _verified(subset_to_signature(subset, n), n)


def best_even_count_witness(n):
    """(degree, signature) minimising n - n/d over admissible d, or None."""
    ds = even_count_divisors(n)
    if not ds:
        return None
    d = min(ds)
    return n - n // d, witness_even_count_divisor(n, d)


def _odd_primes_shape(n):
    """(p1, p2, ...) for n = 2 * p1 * p2 * ... with at least two odd primes, else None."""
    f = nt.factorize(n)
    if n % 2 or not nt.is_squarefree(n):
        return None
    odd = [p for p in f.primes if p != 2]
    return odd if len(odd) >= 2 else None


def thm_main_value(n):
    """Closed-form v for n = 2 p1 p2 ... pk by the three-way case split on p1, p2."""
    odd = _odd_primes_shape(n)
    if odd is None:
        raise BadShape(f"{n} is not twice a product of at least two distinct odd primes")
    p1, p2 = odd[0], odd[1]
    if 2 * p1 > p2:
        return n * (p1 + p2) // (2 * p1 * p2)
    if p2 < 3 * p1:
        return 3 * n // (2 * p2)
    return n // (2 * p1)


def thm_main_subset(n):
    """Exponents of the shifted root set built from U_{2 p1} and U_{p2} \\ {(p2 - 1)/2}."""
    odd = _odd_primes_shape(n)
    if odd is None:
        raise BadShape(f"{n} is not twice a product of at least two distinct odd primes")
    p1, p2 = odd[0], odd[1]
    shift = n // (2 * p2)
    first = {(n * r // (2 * p1) + shift) % n for r in nt.units(2 * p1)}
    second = {
        (n * ell // p2 + shift) % n
        for ell in nt.units(p2) if ell != (p2 - 1) // 2
    }
    return tuple(sorted(first | second))


def witness_thm_main(n):
    """(v, signature) with signature of degree n - v, v = max(v1, v2)."""
    subset = thm_main_subset(n)
    p1 = _odd_primes_shape(n)[0]
    v1 = n // (2 * p1)
    v2 = subset[0]
    v = thm_main_value(n)
    if v != max(v1, v2):
        raise RepresentationError(f"case analysis gives v={v} but max(v1, v2)={max(v1, v2)}")
    if v == v2:
        s = subset_to_signature(subset, n)
    else:
        s = witness_even_count_divisor(n, 2 * p1)
    return v, _verified(s, n)


def flat_parts(n):
    """Φ_n = f1 - f2 with f1, f2 0,1-polynomials (requires Φ_n flat)."""
    phi = cyclotomic(n)
    if phi.height != 1:
        raise NotFlat(f"Φ_{n} has height {phi.height}")
    f1 = Poly([1 if c == 1 else 0 for c in phi.coeffs])
    f2 = Poly([1 if c == -1 else 0 for c in phi.coeffs])
    return f1, f2


def witness_flat(n):
    """Member x^(b+n/2) + x^b - (f1 + x^(n/2) f2) for even square-free n with Φ_n flat."""
    if n % 2:
        raise OddModulus(f"the flat construction needs even n, got {n}")
    if n < 6 or not nt.is_squarefree(n):
        raise BadShape(f"the flat construction needs square-free n >= 6, got {n}")
    f1, f2 = flat_parts(n)
    half = n // 2
    twisted = f1 + Poly.monomial(half) * f2
    top = twisted.degree
    interior = [e for e, _ in twisted.terms() if top - half < e < half]
    if not interior:
        raise NoInteriorMonomial(f"no monomial of Φ_{n}^T strictly between {top - half} and {half}")
    b = interior[0]
    star = Poly.monomial(b + half) + Poly.monomial(b) - twisted
    try:
        s = from_polynomial(star)
    except ValueError:
        raise RepresentationError(f"flat construction gave {star}, not a 0,1-companion shape") from None
    return _verified(s, n)


def flat_degree_law(n):
    """n/2 + φ(n) when the number of odd prime factors is odd, one less when it is even."""
    k = nt.odd_prime_count(n)
    return n // 2 + nt.totient(n) - (0 if k % 2 else 1)


def lift_squarefree(s, n0, n):
    """Rescale a member of A_{n0} to a member of A_n via x -> x^(n/n0)."""
    if nt.radical(n) != n0:
        raise BadRadical(f"radical of {n} is {nt.radical(n)}, not {n0}")
    if not is_member(s, n0):
        raise NotMember(f"{to_polynomial(s)} is not in A_{n0}")
    return s.scaled(n // n0)


def exact_two_prime(n):
    f = nt.factorize(n)
    if len(f) != 2:
        raise WrongFactorCount(f"{n} has {len(f)} distinct prime factors, not 2")
    p1, p2 = f.primes
    return n // (p1 * p2) * (p1 * p2 - 1)


# ---------------------------------------------------------------------------
# search


class _OutOfBudget(Exception):
    pass


class _Counter:
    def __init__(self, budget):
        self.budget = budget
        self.nodes = 0

    def charge(self, k=1):
        self.nodes += k
        if self.budget is not None and self.nodes > self.budget:
            raise _OutOfBudget


def _members_exhaustive(n, m, counter):
    """All inner-exponent sets K with x^m - sum x^k - 1 in Φ_n Z[x], via the cofactor.

    Φ_n has constant term 1, so the low coefficients f_0..f_d (d = m - φ(n))
    determine the cofactor g = f / Φ_n, which in turn forces f_{d+1}..f_m.
    Branching only over f_1..f_d therefore covers every subset of 1..m-1.
    """
    phi = list(cyclotomic(n).coeffs)
    e = len(phi) - 1
    d = m - e
    if d < 0:
        return []
    g = [0] * (d + 1)
    g[0] = -1  # f_0 = -1 and phi[0] = 1
    chosen = []
    found = []

    def complete():
        inner = list(chosen)
        for i in range(d + 1, m + 1):
            lo = max(0, i - e)
            fi = 0
            for j in range(lo, d + 1):
                fi += g[j] * phi[i - j]
            if i == m:
                if fi != 1:
                    return
            elif fi == -1:
                inner.append(i)
            elif fi != 0:
                return
        found.append(tuple(inner))

    def descend(i):
        counter.charge()
        if i > d:
            complete()
            return
        base = 0
        for j in range(1, min(i, e) + 1):
            base -= phi[j] * g[i - j]
        # f_i = -1: exponent i belongs to K
        g[i] = base - 1
        chosen.append(i)
        descend(i + 1)
        chosen.pop()
        g[i] = base
        descend(i + 1)

    descend(1)
    return found


def _packed_residues(n, m):
    """x^k mod Φ_n for k <= m packed into ints (linear and injective on the sums used)."""
    phi = cyclotomic(n)
    rows = []
    cur = Poly([1])
    for _ in range(m + 1):
        rows.append(cur)
        cur = poly_divmod(cur * Poly.x(), phi)[1]
    bound = max((r.height for r in rows), default=1) * (m + 2)
    width = bound.bit_length() + 2
    return [sum(c << (width * i) for i, c in enumerate(r.coeffs)) for r in rows]


def _subset_sums(items, values):
    sums = [(0, ())]
    for k in items:
        v = values[k]
        sums += [(s + v, sub + (k,)) for s, sub in sums]
    return sums


def _members_meet_in_middle(n, m, counter):
    if m - 1 < 1:
        return []
    values = _packed_residues(n, m)
    target = values[m] - values[0]
    h = (m - 1) // 2
    left, right = range(1, h + 1), range(h + 1, m)
    counter.charge(2 ** len(left) + 2 ** len(right))
    index = {}
    for s, sub in _subset_sums(left, values):
        index.setdefault(s, []).append(sub)
    phi = cyclotomic(n)
    found = []
    for s, sub in _subset_sums(right, values):
        for lsub in index.get(target - s, ()):
            inner = lsub + sub
            # packed keys are exact, but the join is re-verified anyway
            if divisible(to_polynomial(SparseSignature(m, inner)), phi):
                found.append(inner)
    return found


_FINDERS = {EXHAUSTIVE: _members_exhaustive, MEET_IN_MIDDLE: _members_meet_in_middle}


def members_of_degree(n, m, strategy=EXHAUSTIVE, budget=None):
    """Sorted list of all members of A_n of degree exactly m."""
    if strategy not in _FINDERS:
        raise ValueError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}")
    if m >= n or m < 2:
        return []
    counter = _Counter(budget)
    try:
        found = _FINDERS[strategy](n, m, counter)
    except _OutOfBudget:
        raise BudgetExhausted(n, m) from None
    return sorted(SparseSignature(m, k) for k in found)


def enumerate_members(n, max_degree=None, strategy=EXHAUSTIVE):
    """Yield every member of A_n with degree <= max_degree (default n - 1), by degree."""
    if nt.is_prime_power(n):
        return
    top = n - 1 if max_degree is None else min(max_degree, n - 1)
    for m in range(lower_bound(n) + 1, top + 1):
        yield from members_of_degree(n, m, strategy)


def constructive_upper(n):
    """Best verified constructive (degree, signature), or None when A_n is empty."""
    uppers = constructive_uppers(n)[0]
    if not uppers:
        return None
    best = min(uppers, key=lambda u: (u.value, u.witness))
    return best.value, best.witness


def search_min(n, strategy=EXHAUSTIVE, budget=None):
    """Minimum degree member of A_n as (degree, signature), or None when A_n is empty.

    Degrees are scanned upward from lower_bound(n) + 1, so the first degree
    with a member is the minimum; ties go to the lexicographically smallest
    inner exponent set.  Every candidate passes the Ramanujan-sum test and
    a full division before it is accepted.
    """
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if strategy not in _FINDERS:
        raise ValueError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}")
    if nt.is_prime_power(n):
        return None
    counter = _Counter(DEFAULT_BUDGET if budget is None else budget)
    phi = cyclotomic(n)
    finder = _FINDERS[strategy]
    for m in range(lower_bound(n) + 1, n):
        try:
            found = finder(n, m, counter)
        except _OutOfBudget:
            raise BudgetExhausted(n, m, constructive_upper(n)) from None
        hits = []
        for inner in found:
            s = SparseSignature(m, inner)
            if sg_statistic(s, n) != 0:
                continue
            if divisible(to_polynomial(s), phi):
                hits.append(s)
        if hits:
            return m, min(hits)
    raise RepresentationError(f"no member of A_{n} found below {n}")


# ---------------------------------------------------------------------------
# bound reports


@dataclass(frozen=True)
class Upper:
    value: int
    source: str  # cor_pq | thm_main | lem_flat
    witness: SparseSignature

    def to_json(self):
        return {"value": str(self.value), "source": self.source, "witness": self.witness.to_json()}


@dataclass
class BoundReport:
    n: int
    lower: int
    uppers: list = field(default_factory=list)
    exact: tuple = None  # (value, witness, strategy)
    empty: bool = False
    notes: list = field(default_factory=list)

    def to_json(self):
        exact = None
        if self.exact is not None:
            value, witness, strategy = self.exact
            exact = {"degree": str(value), "inner": [str(k) for k in witness.inner],
                     "strategy": strategy}
        return {
            "n": str(self.n),
            "lower": str(self.lower),
            "uppers": [u.to_json() for u in self.uppers],
            "exact": exact,
            "empty": self.empty,
            "notes": list(self.notes),
        }


def constructive_uppers(n):
    """([Upper, ...], notes) for every construction that applies to n."""
    uppers, notes = [], []
    if nt.is_prime_power(n):
        return uppers, ["prime power: A_n is empty"]
    best = best_even_count_witness(n)
    uppers.append(Upper(best[0], "cor_pq", best[1]))

    n0 = nt.radical(n)
    t = n // n0
    lifted = " (lifted from the radical)" if t > 1 else ""
    if _odd_primes_shape(n0) is not None:
        v, s = witness_thm_main(n0)
        uppers.append(Upper(t * (n0 - v), "thm_main", lift_squarefree(s, n0, n)))
        if lifted:
            notes.append("thm_main" + lifted)
    else:
        notes.append("thm_main: needs n = 2 p1 p2 ... pk with k >= 2 odd primes")

    if n0 % 2 == 0 and n0 >= 6:
        try:
            s = witness_flat(n0)
        except NotFlat as exc:
            notes.append(f"lem_flat: {exc}")
        else:
            uppers.append(Upper(t * s.degree, "lem_flat", lift_squarefree(s, n0, n)))
            if lifted:
                notes.append("lem_flat" + lifted)
    else:
        notes.append("lem_flat: needs even square-free radical >= 6")

    for u in uppers:
        if u.witness.degree != u.value or not is_member(u.witness, n):
            raise RepresentationError(f"{u.source} witness for n={n} failed verification")
    return uppers, notes


def bounds_report(n, strategy=EXHAUSTIVE, budget=None):
    lower = lower_bound(n)
    uppers, notes = constructive_uppers(n)
    report = BoundReport(n=n, lower=lower, uppers=uppers, notes=notes)
    try:
        result = search_min(n, strategy, budget)
    except BudgetExhausted as exc:
        report.notes.append(f"search: budget exhausted at degree {exc.next_degree}")
        return report
    if result is None:
        report.empty = True
        return report
    value, witness = result
    report.exact = (value, witness, strategy)
    if not lower < value or any(value > u.value for u in uppers):
        raise RepresentationError(f"bound sandwich violated for n={n}")
    return report
