"""Replayable verification suites used by ``cyclo verify``.

Each suite returns a list of :class:`Check` records; a suite passes when all
of its checks do.
"""
import random
from dataclasses import dataclass
from fractions import Fraction

from . import ansearch as an
from . import matrixrep as mr
from . import numtheory as nt
from .polyring import Poly, cyclotomic, divisible, newton_girard_coefficients, poly_divmod, profile


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self):
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


TWO_PRIME_SQUAREFREE = (6, 10, 14, 15, 21, 22, 26, 33, 34, 35)
TWO_PRIME_POWERS = (12, 18, 20, 24)
BIJECTION_MODULI = (6, 10, 12, 15, 30)
SYMMETRIC_ORDERS = (5, 6, 7, 8, 12, 13, 17)


def _first_failure(items, pred):
    for item in items:
        if not pred(item):
            return item
    return None


def suite_cyclotomic(max_n=None):
    def product_ok(n):
        prod = Poly([1])
        for d in nt.divisors(n):
            prod = prod * cyclotomic(d)
        return prod == Poly.monomial(n) - 1

    bad = _first_failure(range(1, 201), product_ok)
    not_flat = [n for n in range(1, 105) if not profile(n).flat]
    h105 = profile(105).height
    return [
        Check("product identity n<=200", bad is None, "" if bad is None else f"fails at n={bad}"),
        Check("flat for n<105", not not_flat, f"non-flat: {not_flat[:5]}" if not_flat else ""),
        Check("height(105) == 2", h105 == 2, f"height {h105}"),
    ]


def ramanujan_oracle(n, m):
    """The integer c with Φ_n | (sum_{k in U_n} x^(km mod n) - c), or None."""
    coeffs = [0] * n
    for k in nt.units(n):
        coeffs[k * m % n] += 1
    r = poly_divmod(Poly(coeffs), cyclotomic(n))[1]
    if r.degree > 0:
        return None
    return r[0]


def suite_ramanujan(max_n=None):
    bad = None
    for n in range(1, 101):
        for m in range(n):
            if ramanujan_oracle(n, m) != nt.ramanujan_sum(n, m):
                bad = (n, m)
                break
        if bad:
            break
    return [Check("c_n(m) matches root-sum oracle, n<=100", bad is None,
                  "" if bad is None else f"fails at (n, m)={bad}")]


def suite_newton_girard(max_n=None):
    def ok(n):
        phi = cyclotomic(n)
        t_max = nt.totient(n)
        e = [1] + newton_girard_coefficients(n, t_max)
        return all(phi[t_max - t] == (-1) ** t * e[t] for t in range(t_max + 1))

    bad = _first_failure(range(1, 121), ok)
    return [Check("Φ_n coefficients equal (-1)^t e_t, n<=120", bad is None,
                  "" if bad is None else f"fails at n={bad}")]


def _cap(values, max_n):
    return [n for n in values if max_n is None or n <= max_n]


def suite_two_prime(max_n=None):
    checks = []
    for n in _cap(TWO_PRIME_SQUAREFREE, max_n):
        got = an.search_min(n, an.EXHAUSTIVE)
        checks.append(Check(f"min deg A_{n} == {n - 1}", got is not None and got[0] == n - 1,
                            f"search gave {got[0] if got else None}"))
    for n in _cap(TWO_PRIME_POWERS, max_n):
        want = an.exact_two_prime(n)
        got = an.search_min(n, an.EXHAUSTIVE)
        checks.append(Check(f"min deg A_{n} == {want}", got is not None and got[0] == want,
                            f"search gave {got[0] if got else None}"))
    return checks


def suite_emptiness(max_n=None):
    powers = [n for n in range(2, 33) if nt.is_prime_power(n)]
    nonempty = [n for n in powers if an.search_min(n, budget=0) is not None]
    return [Check("A_n empty for prime powers n<=32", not nonempty,
                  f"non-empty: {nonempty}" if nonempty else f"{len(powers)} moduli")]


def suite_sandwich(max_n=None):
    n = 30
    if max_n is not None and max_n < n:
        return [Check("bound sandwich at n=30", True, "skipped: max-n below 30")]
    report = an.bounds_report(n)
    by_source = {u.source: u for u in report.uppers}
    thm = by_source.get("thm_main")
    flat = by_source.get("lem_flat")
    thm_poly = Poly([-1, -1] + [0] * 11 + [-1] + [0] * 5 + [-1, -1, 0, 1])
    flat_poly = Poly([-1, -1] + [0] * 6 + [-1] + [0] * 9 + [-1, -1, -1, 0, 1])
    exact = report.exact[0] if report.exact else None
    return [
        Check("lower == 15", report.lower == 15, f"lower {report.lower}"),
        Check("thm_main witness x^22-x^20-x^19-x^13-x-1",
              thm is not None and thm.value == 22 and an.to_polynomial(thm.witness) == thm_poly
              and divisible(thm_poly, cyclotomic(n)), f"{thm.value if thm else None}"),
        Check("lem_flat witness x^22-x^20-x^19-x^18-x^8-x-1",
              flat is not None and flat.value == 22 and an.to_polynomial(flat.witness) == flat_poly
              and flat.value == an.flat_degree_law(n), f"{flat.value if flat else None}"),
        Check("exact in (15, 22]", exact is not None and 15 < exact <= 22, f"exact {exact}"),
    ]


def suite_cayley(max_n=None):
    bad = []
    for p in [q for q in range(3, 32) if nt.is_prime(q)]:
        for r in nt.divisors(p - 1):
            a = mr.subfield_representation(p, r)
            m = mr.dense(a)
            q = mr.element_minimal_polynomial(p, a.representer)
            pm = mr.minimal_polynomial(m)
            ok = pm == Poly([-r, 1]) * q and q.degree == (p - 1) // r
            g = mr.hoffman_polynomial(m)
            ok = ok and g == q.scale(Fraction(p, q(r)))
            ok = ok and mr.evaluate_at(g, m) == mr.DenseRatMatrix.ones(p)
            ok = ok and mr.ideal_canonical(g, pm).generator == q.monic()
            if not ok:
                bad.append((p, r))
    return [Check("Cayley subfield law and J = (p/q(r)) q(A), p<=31", not bad,
                  f"failures: {bad}" if bad else "")]


def suite_symmetric(max_n=None):
    bad_sym = []
    for n in SYMMETRIC_ORDERS:
        c = mr.symmetric_representation(n)
        delta = mr.delta_minimal_polynomial(n)
        pm = mr.minimal_polynomial(mr.dense(c))
        if delta.degree != nt.totient(n) // 2 or not divisible(pm, delta):
            bad_sym.append(n)
    bad_path = [n for n in range(4, 41, 2) if not mr.path_cycle_spectrum_check(n)]
    return [
        Check("δ_n factor of degree φ(n)/2 divides minpoly(W+W^(n-1))", not bad_sym,
              f"failures: {bad_sym}" if bad_sym else ""),
        Check("path/cycle spectra agree for even n<=40", not bad_path,
              f"failures: {bad_path}" if bad_path else ""),
    ]


def _random_signature(rng, n):
    m = rng.randint(2, n - 1)
    inner = tuple(k for k in range(1, m) if rng.random() < 0.5)
    return an.SparseSignature(m, inner)


def bijection_samples(n, count, seed, member_cap=None):
    """Deterministic mix of members of A_n and random signatures."""
    rng = random.Random(seed)
    members = list(an.enumerate_members(n, member_cap))
    out = []
    for i in range(count):
        if members and i % 2 == 0:
            out.append(rng.choice(members))
        else:
            out.append(_random_signature(rng, n))
    return out


#: x^5 - x^2 - 1 has S_f = c_6(5) - c_6(2) - c_6(0) = 1 + 1 - 2 = 0, yet Φ_6 does not divide it.
SF_ZERO_NON_MEMBER = (6, an.SparseSignature(5, (2,)))


def suite_bijection(max_n=None, total=10_000):
    moduli = _cap(BIJECTION_MODULI, max_n)
    per = total // max(len(moduli), 1)
    bad = []
    members_seen = 0
    for n in moduli:
        cap = 24 if n == 30 else None
        for s in bijection_samples(n, per, seed=n, member_cap=cap):
            member = an.is_member(s, n)
            if member:
                members_seen += 1
                if an.subset_to_signature(an.signature_to_subset(s, n), n) != s:
                    bad.append(("roundtrip", n, s))
                if an.sg_statistic(s, n) != 0:
                    bad.append(("S_f", n, s))
    n0, s0 = SF_ZERO_NON_MEMBER
    witness_ok = an.sg_statistic(s0, n0) == 0 and not an.is_member(s0, n0)
    return [
        Check("round trip and S_f = 0 on members", not bad and members_seen > 0,
              f"{members_seen} members; failures {bad[:3]}"),
        Check("stored non-member with S_f = 0", witness_ok, str(an.to_polynomial(s0))),
    ]


SUITES = {
    "cyclotomic": suite_cyclotomic,
    "ramanujan": suite_ramanujan,
    "newton-girard": suite_newton_girard,
    "two-prime": suite_two_prime,
    "emptiness": suite_emptiness,
    "sandwich": suite_sandwich,
    "cayley": suite_cayley,
    "symmetric": suite_symmetric,
    "bijection": suite_bijection,
}


def run_suites(name, max_n=None):
    names = list(SUITES) if name == "all" else [name]
    checks = []
    for suite in names:
        if suite not in SUITES:
            raise ValueError(f"unknown suite {suite!r}; choose from {sorted(SUITES)} or 'all'")
        checks += [Check(f"{suite}: {c.name}", c.passed, c.detail) for c in SUITES[suite](max_n)]
    return checks
