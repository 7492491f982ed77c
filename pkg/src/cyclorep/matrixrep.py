"""Circulant, companion and Cayley-digraph matrices with exact linear algebra.

No floating point is used anywhere in this module.  Minimal polynomials come
from the first linear dependence in a Krylov sequence (matrix powers, or
powers of a residue modulo Φ_n), found by fraction-free elimination over
the integers.
"""
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from . import numtheory as nt
from .errors import (
    FactorMissing,
    NotAdjacency,
    NotDivisible,
    NotRegular,
    NotStronglyConnected,
    OddOrder,
    RepresentationError,
    ZeroModulus,
)
from .polyring import (
    Poly,
    cyclotomic,
    divide_exact,
    poly_divmod,
    poly_gcd,
    squarefree_part,
    to_json as poly_to_json,
)


# ---------------------------------------------------------------------------
# dense matrices


def _canon(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


@dataclass(frozen=True)
class DenseRatMatrix:
    rows: int
    cols: int
    entries: tuple  # row-major

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError("matrix dimensions must be positive")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )
        object.__setattr__(self, "entries", tuple(_canon(Fraction(e)) for e in self.entries))

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged or empty row list")
        return cls(len(rows), len(rows[0]), tuple(e for r in rows for e in r))

    @classmethod
    def identity(cls, n):
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def ones(cls, n):
        return cls(n, n, (1,) * (n * n))

    @property
    def is_square(self):
        return self.rows == self.cols

    def row(self, i):
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_rows(self):
        return [self.row(i) for i in range(self.rows)]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def __matmul__(self, other):
        return DenseRatMatrix.from_rows(_matmul(self.to_rows(), other.to_rows()))

    def transpose(self):
        return DenseRatMatrix.from_rows(list(map(list, zip(*self.to_rows()))))

    def to_json(self):
        return {
            "rows": str(self.rows),
            "cols": str(self.cols),
            "entries": [[str(Fraction(e).numerator), str(Fraction(e).denominator)]
                        for e in self.entries],
        }

    @classmethod
    def from_json(cls, data):
        entries = []
        for item in data["entries"]:
            if isinstance(item, (list, tuple)):
                num, den = item
                entries.append(Fraction(int(num), int(den)))
            else:
                entries.append(Fraction(str(item)))
        return cls(int(data["rows"]), int(data["cols"]), tuple(entries))


def _matmul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(r, c) if x and y) for c in bt] for r in a]


def evaluate_at(p, m):
    """p(M) by Horner's rule."""
    if not m.is_square:
        raise ValueError("polynomials can only be evaluated at square matrices")
    n = m.rows
    mrows = m.to_rows()
    acc = [[0] * n for _ in range(n)]
    for c in reversed(p.coeffs):
        acc = _matmul(acc, mrows)
        if c:
            for i in range(n):
                acc[i][i] += c
    return DenseRatMatrix.from_rows(acc)


# ---------------------------------------------------------------------------
# structured matrices


@dataclass(frozen=True)
class CirculantMatrix:
    """g(W_n) for the fundamental circulant W_n; ``representer`` is g."""

    order: int
    representer: Poly

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("circulant order must be positive")
        if self.representer.degree >= self.order:
            raise ValueError("representer degree must be below the order; reduce mod x^n - 1")

    @classmethod
    def fundamental(cls, n):
        return cls(n, Poly.x() if n > 1 else Poly([1]))

    def first_row(self):
        return [self.representer[i] for i in range(self.order)]


@dataclass(frozen=True)
class CompanionMatrix:
    monic: Poly

    def __post_init__(self):
        if self.monic.degree < 1 or not self.monic.is_monic:
            raise ValueError("companion matrices need a monic polynomial of degree >= 1")


@dataclass(frozen=True)
class CayleyDigraph:
    """Cay(Z_n, S): edge (i, j) iff (j - i) mod n lies in S."""

    modulus: int
    connection: tuple

    def __post_init__(self):
        conn = tuple(sorted(set(self.connection)))
        if not conn:
            raise ValueError("connection set must be non-empty")
        if conn[0] < 1 or conn[-1] >= self.modulus:
            raise ValueError(f"connection set must lie in 1..{self.modulus - 1}")
        object.__setattr__(self, "connection", conn)

    @property
    def degree(self):
        return len(self.connection)

    def circulant(self):
        coeffs = [0] * self.modulus
        for s in self.connection:
            coeffs[s] = 1
        return CirculantMatrix(self.modulus, Poly(coeffs))

    def edges(self):
        n = self.modulus
        return [(i, (i + s) % n) for i in range(n) for s in self.connection]

    def to_dot(self, name="Cay"):
        lines = [f"digraph {name} {{"]
        lines += [f"  {i};" for i in range(self.modulus)]
        lines += [f"  {i} -> {j};" for i, j in sorted(self.edges())]
        lines.append("}")
        return "\n".join(lines) + "\n"


def dense(obj):
    if isinstance(obj, DenseRatMatrix):
        return obj
    if isinstance(obj, CayleyDigraph):
        obj = obj.circulant()
    if isinstance(obj, CirculantMatrix):
        n, first = obj.order, obj.first_row()
        return DenseRatMatrix.from_rows([[first[(j - i) % n] for j in range(n)] for i in range(n)])
    if isinstance(obj, CompanionMatrix):
        f = obj.monic
        n = f.degree
        rows = [[int(j == i + 1) for j in range(n)] for i in range(n - 1)]
        rows.append([-f[j] for j in range(n)])
        return DenseRatMatrix.from_rows(rows)
    raise TypeError(f"cannot densify {type(obj).__name__}")


# ---------------------------------------------------------------------------
# Krylov dependence


def _integral(vec):
    """Scale a rational vector to a primitive integer vector; returns (scale, ints)."""
    den = 1
    for c in vec:
        if isinstance(c, Fraction):
            den = lcm(den, c.denominator)
    ints = [int(c * den) for c in vec]
    return den, ints


def _content(values):
    g = 0
    for v in values:
        if v:
            g = gcd(g, v)
            if g == 1:
                break
    return g


def first_dependence(vectors):
    """Coefficients a_0..a_k (a_k = 1) of the first relation sum a_i v_i = 0.

    ``vectors`` is an iterable of equal-length rational vectors; elimination
    runs on integer rows with content removal after every step.
    """
    basis = []  # (pivot, row, combo) with integer row and combo
    for k, vec in enumerate(vectors):
        scale, row = _integral(vec)
        combo = [0] * k + [scale]
        for piv, brow, bcombo in basis:
            c = row[piv]
            if not c:
                continue
            p = brow[piv]
            row = [p * x - c * y for x, y in zip(row, brow)]
            combo = [p * x - c * (bcombo[i] if i < len(bcombo) else 0)
                     for i, x in enumerate(combo)]
            g = gcd(_content(row), _content(combo))
            if g > 1:
                row = [x // g for x in row]
                combo = [x // g for x in combo]
        pivot = next((i for i, x in enumerate(row) if x), None)
        if pivot is None:
            top = combo[k]
            return [Fraction(c, top) for c in combo]
        basis.append((pivot, row, combo))
    raise RepresentationError("vector sequence ended without a linear dependence")


def _matrix_power_vectors(rows):
    n = len(rows)
    cur = [[int(i == j) for j in range(n)] for i in range(n)]
    while True:
        yield [x for r in cur for x in r]
        cur = _matmul(cur, rows)


def minimal_polynomial(m):
    """Monic minimal polynomial of a square matrix via vec(I), vec(M), vec(M^2), ..."""
    if not m.is_square:
        raise ValueError("minimal polynomial needs a square matrix")
    den = 1
    for e in m.entries:
        if isinstance(e, Fraction):
            den = lcm(den, e.denominator)
    rows = [[int(x * den) for x in r] for r in m.to_rows()]
    rel = first_dependence(_matrix_power_vectors(rows))
    # relation is for N = den*M: sum a_i den^i M^i = 0
    k = len(rel) - 1
    return Poly([rel[i] * Fraction(den) ** i / Fraction(den) ** k for i in range(k + 1)])


def _residue_vector(p, size):
    return [p[i] for i in range(size)]


def element_minimal_polynomial(n, g):
    """Minimal polynomial over Q of g(ζ_n), by Krylov dependence in Q[x]/<Φ_n>."""
    phi = cyclotomic(n)
    size = phi.degree
    r = poly_divmod(g, phi)[1]

    def powers():
        cur = Poly([1])
        while True:
            yield _residue_vector(cur, size)
            cur = poly_divmod(cur * r, phi)[1]

    return Poly(first_dependence(powers()))


def circulant_minimal_polynomial(c, verify=False):
    """Square-free part of the product of the element minimal polynomials of g(ζ_d), d | n.

    With ``verify`` the result is compared against the Krylov minimal
    polynomial of the dense matrix.
    """
    prod = Poly([1])
    for d in nt.divisors(c.order):
        prod = prod * element_minimal_polynomial(d, c.representer)
    result = squarefree_part(prod)
    if verify:
        direct = minimal_polynomial(dense(c))
        if direct != result:
            raise RepresentationError(
                f"circulant minimal polynomial mismatch: {result} vs dense {direct}"
            )
    return result


def circulant_characteristic_polynomial(c):
    """Product over d | n of chi_d ** (φ(d) / deg chi_d), chi_d the minimal polynomial of g(ζ_d)."""
    result = Poly([1])
    for d in nt.divisors(c.order):
        chi = element_minimal_polynomial(d, c.representer)
        result = result * chi ** (nt.totient(d) // chi.degree)
    return result


def characteristic_polynomial(m):
    """det(xI - M) by the Faddeev-LeVerrier recursion (exact)."""
    if not m.is_square:
        raise ValueError("characteristic polynomial needs a square matrix")
    n = m.rows
    a = m.to_rows()
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I ; c_{n-k} = -tr(A M_k) / k
        for i in range(n):
            mk[i][i] += coeffs[n - k + 1]
        amk = _matmul(a, mk)
        trace = sum(amk[i][i] for i in range(n))
        coeffs[n - k] = Fraction(-trace, k)
        mk = amk
    return Poly(coeffs)


# ---------------------------------------------------------------------------
# Cayley digraphs of prime order


def cayley_partition(p, k):
    """Digraphs Cay(Z_p, α^j H), j = 0..k-1, with H = <α^k> and α the smallest primitive root."""
    if not nt.is_prime(p) or p == 2:
        raise ValueError(f"p must be an odd prime, got {p}")
    if k < 1 or (p - 1) % k:
        raise ValueError(f"k must be a positive divisor of {p - 1}, got {k}")
    alpha = nt.primitive_root(p)
    r = (p - 1) // k
    step = pow(alpha, k, p)
    subgroup = [pow(step, i, p) for i in range(r)]
    return [
        CayleyDigraph(p, tuple(sorted(pow(alpha, j, p) * h % p for h in subgroup)))
        for j in range(k)
    ]


def subfield_representation(p, r):
    """Adjacency circulant of Cay(Z_p, H) with |H| = r.

    Checks that its minimal polynomial is (x - r) * q with q the minimal
    polynomial of the eigenvalue sum over H, of degree (p - 1) / r.
    """
    if r < 1 or (p - 1) % r:
        raise ValueError(f"r must be a positive divisor of {p - 1}, got {r}")
    k = (p - 1) // r
    digraph = cayley_partition(p, k)[0]
    circ = digraph.circulant()
    q = element_minimal_polynomial(p, circ.representer)
    expected = Poly([-r, 1]) * q
    actual = minimal_polynomial(dense(circ))
    if q.degree != k or actual != expected:
        raise RepresentationError(
            f"Cay(Z_{p}, H) minimal polynomial {actual} is not (x - {r})*({q}) with deg {k}"
        )
    return circ


def _reachable(adj, start, forward=True):
    n = len(adj)
    seen = {start}
    todo = deque([start])
    while todo:
        u = todo.popleft()
        for v in range(n):
            edge = adj[u][v] if forward else adj[v][u]
            if edge and v not in seen:
                seen.add(v)
                todo.append(v)
    return seen


def is_strongly_connected(m):
    adj = m.to_rows()
    n = len(adj)
    return len(_reachable(adj, 0)) == n and len(_reachable(adj, 0, forward=False)) == n


def regular_degree(m):
    """Common row/column sum of a square matrix, or None when it is not regular."""
    rows = m.to_rows()
    sums = {sum(r) for r in rows} | {sum(c) for c in zip(*rows)}
    return sums.pop() if len(sums) == 1 else None


def hoffman_polynomial(m):
    """Polynomial g with J = g(M) for a strongly connected regular 0,1 digraph.

    Returns (n / q(d)) * q where the minimal polynomial of M is (x - d) * q.
    """
    if not m.is_square:
        raise NotAdjacency("adjacency matrices are square")
    if any(e not in (0, 1) for e in m.entries):
        raise NotAdjacency("adjacency matrices have 0,1 entries")
    d = regular_degree(m)
    if d is None:
        raise NotRegular("row and column sums are not all equal")
    if not is_strongly_connected(m):
        raise NotStronglyConnected("digraph is not strongly connected")
    pm = minimal_polynomial(m)
    try:
        q = divide_exact(pm, Poly([-d, 1]))
    except NotDivisible:
        raise FactorMissing(f"x - {d} does not divide the minimal polynomial {pm}") from None
    g = q.scale(Fraction(m.rows, q(d)))
    if evaluate_at(g, m) != DenseRatMatrix.ones(m.rows):
        raise RepresentationError("J != g(M)")
    return g


@dataclass(frozen=True)
class IdealGenerator:
    modulus_poly: Poly
    generator: Poly

    def to_json(self):
        return {"modulus": poly_to_json(self.modulus_poly), "generator": poly_to_json(self.generator)}


def ideal_canonical(g, p_a):
    """Canonical generator of <g(A)> in F[A]: the monic gcd of g and p_A."""
    if p_a.is_zero:
        raise ZeroModulus("the modulus polynomial is zero")
    return IdealGenerator(p_a, poly_gcd(g, p_a))


# ---------------------------------------------------------------------------
# symmetric representations and cycle/path spectra


def symmetric_representation(n):
    """W_n + W_n^(n-1): symmetric 0,1-circulant with δ_n = ζ_n + ζ_n^-1 as an eigenvalue."""
    if n < 3:
        raise ValueError(f"symmetric representation needs n >= 3, got {n}")
    return CirculantMatrix(n, Poly.monomial(1) + Poly.monomial(n - 1))


def delta_minimal_polynomial(n):
    return element_minimal_polynomial(n, symmetric_representation(n).representer)


def path_characteristic_polynomial(m):
    """Characteristic polynomial of the path on m vertices (three-term recurrence)."""
    prev, cur = Poly([1]), Poly([0, 1])
    if m == 0:
        return prev
    for _ in range(m - 1):
        prev, cur = cur, Poly([0, 1]) * cur - prev
    return cur


def path_adjacency(m):
    return DenseRatMatrix.from_rows(
        [[int(abs(i - j) == 1) for j in range(m)] for i in range(m)]
    )


def path_cycle_spectrum_check(n):
    """Distinct eigenvalues of C_n other than ±2 coincide with those of the path on n/2 - 1 vertices."""
    if n % 2:
        raise OddOrder(f"n must be even, got {n}")
    if n < 4:
        raise ValueError(f"n must be at least 4, got {n}")
    path = path_characteristic_polynomial(n // 2 - 1)
    cycle = circulant_characteristic_polynomial(symmetric_representation(n))
    inner = divide_exact(cycle, Poly([-4, 0, 1]))
    return squarefree_part(path) == squarefree_part(inner)


def smallest_circulant_order(n):
    """Order of the smallest circulant representing Q(ζ_n)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    a = 0
    while n % 2 ** (a + 1) == 0:
        a += 1
    return n // 2 if a == 1 else n
