"""Basis-relative linear algebra of the Milnor lattice.

Stokes matrices, the symmetrized intersection form, monodromy,
Picard-Lefschetz reflections and Coxeter-Dynkin diagrams, all as exact
integer matrix computations.  The sign conventions are fixed once and
for all at the dimension residue n = 0 mod 4, where

    I = S + S^t,   M = -S^{-1} S^t,   s_d(b) = b - I(d,b) d,

and the reference Seifert pairing of a seed is L = -S^t.  Every family
has a representative of this parity (the Stokes matrix is stable under
suspension), so no generality is lost for the counting problems.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


# ---------------------------------------------------------------------------
# integer matrix helpers (tuples of tuples)
# ---------------------------------------------------------------------------

def mat_identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_transpose(m):
    return tuple(zip(*m)) if m else ()


def mat_mul(a, b):
    bt = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt)
                 for row in a)


def mat_neg(m):
    return tuple(tuple(-x for x in row) for row in m)


def mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(a, b))


def mat_pow(m, k):
    n = len(m)
    out = mat_identity(n)
    base = m
    while k:
        if k & 1:
            out = mat_mul(out, base)
        base = mat_mul(base, base)
        k >>= 1
    return out


def mat_rank(m):
    """Rank over Q by exact elimination."""
    rows = [[Fraction(x) for x in row] for row in m]
    rank = 0
    cols = len(rows[0]) if rows else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        for i in range(r + 1, len(rows)):
            if rows[i][c]:
                f = rows[i][c] / pv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        rank += 1
        if r == len(rows):
            break
    return rank


def mat_det(m):
    """Exact determinant over Q."""
    rows = [[Fraction(x) for x in row] for row in m]
    n = len(rows)
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if rows[i][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = -det
        pv = rows[c][c]
        det *= pv
        for i in range(c + 1, n):
            if rows[i][c]:
                f = rows[i][c] / pv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return det


def unit_upper_inverse(s):
    """Exact integer inverse of a unit upper triangular integer matrix."""
    n = len(s)
    inv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for col in range(n):
        for i in range(n - 2, -1, -1):
            acc = 0
            for k in range(i + 1, n):
                if s[i][k]:
                    acc += s[i][k] * inv[k][col]
            inv[i][col] = (1 if i == col else 0) - acc
    return tuple(tuple(row) for row in inv)


def char_poly(m):
    """Characteristic polynomial det(y*Id - M), ascending integer coefficients.

    Faddeev-LeVerrier over Fractions; the result is integral for integer input.
    """
    n = len(m)
    mm = tuple(tuple(Fraction(x) for x in row) for row in m)
    cs = [Fraction(1)]
    a = mm
    for k in range(1, n + 1):
        ck = -sum(a[i][i] for i in range(n)) / k
        cs.append(ck)
        if k < n:
            shifted = tuple(tuple(a[i][j] + (ck if i == j else 0)
                                  for j in range(n)) for i in range(n))
            a = mat_mul(mm, shifted)
    desc = cs  # y^n + cs[1] y^{n-1} + ... + cs[n]
    out = []
    for c in reversed(desc):
        if c.denominator != 1:
            raise ArithmeticError("characteristic polynomial not integral")
        out.append(int(c))
    return tuple(out)  # ascending: out[k] is the coefficient of y^k


def matrix_order(m, cap=720):
    """Multiplicative order of an integer matrix, or None if above cap."""
    n = len(m)
    ident = mat_identity(n)
    p = m
    for k in range(1, cap + 1):
        if p == ident:
            return k
        p = mat_mul(p, m)
    return None


# ---------------------------------------------------------------------------
# domain types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StokesMatrix:
    """Upper triangular unimodular integer matrix with unit diagonal."""
    rows: tuple

    def __post_init__(self):
        n = len(self.rows)
        for i, row in enumerate(self.rows):
            if len(row) != n:
                raise ValueError("matrix is not square")
            if row[i] != 1:
                raise ValueError("diagonal entries must equal 1")
            if any(row[j] != 0 for j in range(i)):
                raise ValueError("matrix is not upper triangular")

    @property
    def mu(self):
        return len(self.rows)

    @classmethod
    def chain(cls, mu):
        """Seed of the one-variable chain family: S[i][i+1] = -1."""
        return cls(tuple(tuple(1 if i == j else (-1 if j == i + 1 else 0)
                               for j in range(mu)) for i in range(mu)))

    @classmethod
    def identity(cls, mu):
        return cls(mat_identity(mu))

    def entry_bound(self):
        return max((abs(x) for row in self.rows for x in row), default=0)

    def transpose_rows(self):
        return mat_transpose(self.rows)


@dataclass(frozen=True)
class IntersectionMatrix:
    """Symmetric integer matrix S + S^t with diagonal 2."""
    rows: tuple

    @property
    def mu(self):
        return len(self.rows)

    def pair(self, a, b):
        return sum(x * sum(r * y for r, y in zip(row, b))
                   for x, row in zip(a, self.rows))


@dataclass(frozen=True)
class MonodromyMatrix:
    rows: tuple

    @property
    def mu(self):
        return len(self.rows)


@dataclass(frozen=True)
class DiagramGraph:
    """Coxeter-Dynkin diagram: weighted edges, plain or dotted."""
    mu: int
    edges: tuple  # (i, j, weight, style) with i < j, style in {plain, dotted}

    def adjacency(self):
        adj = {i: set() for i in range(self.mu)}
        for i, j, _, _ in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def to_dot(self):
        lines = ["graph diagram {"]
        for v in range(self.mu):
            lines.append(f'  v{v + 1} [label="{v + 1}"];')
        for i, j, w, style in self.edges:
            attr = " [style=dotted]" if style == "dotted" else ""
            for _ in range(w):
                lines.append(f"  v{i + 1} -- v{j + 1}{attr};")
        lines.append("}")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def symmetrized_form(s: StokesMatrix) -> IntersectionMatrix:
    """I = S + S^t; symmetric with diagonal 2."""
    return IntersectionMatrix(mat_add(s.rows, mat_transpose(s.rows)))


def monodromy_from_stokes(s: StokesMatrix) -> MonodromyMatrix:
    """M = -S^{-1} S^t; integral because S is unimodular."""
    inv = unit_upper_inverse(s.rows)
    return MonodromyMatrix(mat_neg(mat_mul(inv, mat_transpose(s.rows))))


def pl_reflect(i: IntersectionMatrix, delta, b):
    """Reflection s_delta(b) = b - I(delta, b) * delta.

    delta must be a root-like vector: I(delta, delta) = 2.
    """
    rows = i.rows if isinstance(i, IntersectionMatrix) else i
    d_rows = [sum(r * x for r, x in zip(row, delta)) for row in rows]
    if sum(x * y for x, y in zip(delta, d_rows)) != 2:
        raise ValueError("reflection vector must have self-pairing 2")
    pairing = sum(x * y for x, y in zip(b, d_rows))
    return tuple(x - pairing * d for x, d in zip(b, delta))


def reflection_matrix(i_rows, delta):
    """Matrix of s_delta acting on column vectors."""
    n = len(delta)
    d_rows = [sum(r * x for r, x in zip(row, delta)) for row in i_rows]
    if sum(x * y for x, y in zip(delta, d_rows)) != 2:
        raise ValueError("reflection vector must have self-pairing 2")
    return tuple(tuple((1 if r == c else 0) - delta[r] * d_rows[c]
                       for c in range(n)) for r in range(n))


def monodromy_product(t) -> MonodromyMatrix:
    """Composite s_{d_1} o ... o s_{d_mu} of the tuple's reflections.

    Accepts any object with .vectors and .seed (a VanishingTuple).
    """
    i_rows = symmetrized_form(t.seed).rows
    n = len(i_rows)
    acc = mat_identity(n)
    for v in t.vectors:
        acc = mat_mul(acc, reflection_matrix(i_rows, v))
    return MonodromyMatrix(acc)


def coxeter_dynkin(s: StokesMatrix) -> DiagramGraph:
    """|S_ij| plain edges for S_ij < 0, S_ij dotted edges for S_ij > 0."""
    edges = []
    n = s.mu
    for i in range(n):
        for j in range(i + 1, n):
            v = s.rows[i][j]
            if v < 0:
                edges.append((i, j, -v, "plain"))
            elif v > 0:
                edges.append((i, j, v, "dotted"))
    return DiagramGraph(n, tuple(edges))


def is_connected(s: StokesMatrix) -> bool:
    g = coxeter_dynkin(s)
    if g.mu == 0:
        return True
    adj = g.adjacency()
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.mu


def radical_rank(i: IntersectionMatrix) -> int:
    rows = i.rows if isinstance(i, IntersectionMatrix) else i
    return len(rows) - mat_rank(rows)


def definiteness(i: IntersectionMatrix):
    """'positive-definite', 'positive-semidefinite' or 'indefinite'.

    Exact: a real symmetric matrix is psd iff all the signed characteristic
    coefficients e_k are >= 0, and pd iff they are all > 0.
    """
    rows = i.rows if isinstance(i, IntersectionMatrix) else i
    cp = char_poly(rows)  # ascending
    n = len(rows)
    # char_poly = sum cp[k] y^k ; e_k = (-1)^k cp[n-k]
    es = [(-1) ** k * cp[n - k] for k in range(1, n + 1)]
    if all(e > 0 for e in es):
        return "positive-definite"
    if all(e >= 0 for e in es):
        return "positive-semidefinite"
    return "indefinite"


@lru_cache(maxsize=None)
def cyclotomic_poly(d):
    """Coefficients (ascending) of the d-th cyclotomic polynomial."""
    # y^d - 1 divided by the product of all lower cyclotomic factors
    num = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            phi = cyclotomic_poly(e)
            num = _intpoly_exact_div(num, list(phi))
    return tuple(num)


def _intpoly_exact_div(a, b):
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = a[len(b) - 1 + k] // b[-1]
        out[k] = c
        for j in range(len(b)):
            a[k + j] -= c * b[j]
    if any(a):
        raise ArithmeticError("not divisible")
    return out


def _euler_phi(d):
    out = d
    p = 2
    dd = d
    while p * p <= dd:
        if dd % p == 0:
            while dd % p == 0:
                dd //= p
            out -= out // p
        p += 1
    if dd > 1:
        out -= out // dd
    return out


def is_quasiunipotent(m: MonodromyMatrix) -> bool:
    """True iff the characteristic polynomial is a product of cyclotomics.

    Checked by exact trial division against all Phi_d with phi(d) <= mu;
    any cyclotomic factor of a degree-mu polynomial must be among these.
    """
    rows = m.rows if isinstance(m, MonodromyMatrix) else m
    p = list(char_poly(rows))
    n = len(rows)
    ds = [d for d in range(1, 4 * n * n + 7) if _euler_phi(d) <= n]
    for d in ds:
        phi = list(cyclotomic_poly(d))
        while len(p) >= len(phi):
            try:
                q = _intpoly_exact_div(p, phi)
            except ArithmeticError:
                break
            p = q
            if p == [1]:
                return True
    return p == [1]


def tensor_rows(a, b):
    """Kronecker product in the lexicographic (row-major) block order."""
    n1, n2 = len(a), len(b)
    return tuple(tuple(a[i1][j1] * b[i2][j2]
                       for j1 in range(n1) for j2 in range(n2))
                 for i1 in range(n1) for i2 in range(n2))
