"""Exact multivariate polynomial and rational-function arithmetic.

Everything here is exact: coefficients are Fractions, elements of small
cyclotomic extensions of Q (for i and the primitive 8th root of unity),
or rational functions in one parameter over such a field.  MultiPoly is
a sparse Laurent polynomial in named variables over any of these
coefficient domains; the domains only need +, -, *, / and a truthiness
test, so they mix freely through Python's operator coercion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union


# ---------------------------------------------------------------------------
# small cyclotomic fields Q[z]/(m(z))
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CycloField:
    """Descriptor of Q[z]/(m(z)) for a monic irreducible m with integer
    coefficients, together with the complex root used for numeric output."""
    name: str
    min_poly: tuple  # monic, ascending, e.g. (1, 0, 1) for z^2+1
    root: complex

    @property
    def degree(self):
        return len(self.min_poly) - 1


GAUSS = CycloField("i", (Fraction(1), Fraction(0), Fraction(1)), 1j)
ZETA8 = CycloField(
    "zeta8",
    (Fraction(1), Fraction(0), Fraction(0), Fraction(0), Fraction(1)),
    complex(2 ** -0.5, 2 ** -0.5),
)


def _poly_trim(cs):
    cs = list(cs)
    while cs and not cs[-1]:
        cs.pop()
    return cs


def _poly_add(a, b):
    n = max(len(a), len(b))
    out = []
    for k in range(n):
        x = a[k] if k < len(a) else 0
        y = b[k] if k < len(b) else 0
        out.append(x + y)
    return _poly_trim(out)


def _poly_neg(a):
    return [-x for x in a]


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = out[i + j] + x * y
    return _poly_trim(out)


def _poly_divmod(a, b):
    """Division with remainder over a field; b nonzero."""
    a = _poly_trim(a)
    b = _poly_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [0] * max(0, len(a) - len(b) + 1)
    r = list(a)
    lb = b[-1]
    while r and len(r) >= len(b):
        c = r[-1] / lb
        d = len(r) - len(b)
        q[d] = c
        for k in range(len(b)):
            r[d + k] = r[d + k] - c * b[k]
        r = _poly_trim(r[:-1])
    return _poly_trim(q), r


def _poly_gcd(a, b):
    a = _poly_trim(a)
    b = _poly_trim(b)
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


class Cyclo:
    """Element of a CycloField, stored as a reduced polynomial in the root."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        d = field.degree
        cs = list(coeffs)
        if len(cs) > d:
            cs = self._reduce(field, cs)
        cs = [Fraction(c) if not isinstance(c, Fraction) else c for c in cs]
        cs += [Fraction(0)] * (d - len(cs))
        self.field = field
        self.coeffs = tuple(cs[:d])

    @staticmethod
    def _reduce(field, cs):
        m = list(field.min_poly)
        d = len(m) - 1
        cs = list(cs)
        for k in range(len(cs) - 1, d - 1, -1):
            c = cs[k]
            if c:
                for j in range(d + 1):
                    cs[k - d + j] = cs[k - d + j] - c * m[j]
        return cs[:d]

    @classmethod
    def gen(cls, field):
        return cls(field, [0, 1])

    # -- coercion -----------------------------------------------------------
    def _co(self, other):
        if isinstance(other, Cyclo):
            if other.field is not self.field:
                raise TypeError("mixed cyclotomic fields")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclo(self.field, [Fraction(other)])
        return None

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.field.name, self.coeffs))

    def __neg__(self):
        return Cyclo(self.field, [-c for c in self.coeffs])

    def __add__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return Cyclo(self.field, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return Cyclo(self.field, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return Cyclo(self.field, _poly_mul(list(self.coeffs), list(o.coeffs)))

    __rmul__ = __mul__

    def inv(self):
        """Inverse via the extended Euclidean algorithm in Q[z]."""
        if not self:
            raise ZeroDivisionError("inverse of zero")
        r0, r1 = list(self.field.min_poly), _poly_trim(self.coeffs)
        s0, s1 = [], [Fraction(1)]
        while r1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_add(s0, _poly_neg(_poly_mul(q, s1)))
        # r0 = gcd (a nonzero constant since min_poly is irreducible)
        c = r0[0]
        return Cyclo(self.field, [x / c for x in s0])

    def __truediv__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._co(other)
        return o * self.inv()

    def __pow__(self, n):
        if n < 0:
            return self.inv() ** (-n)
        out = Cyclo(self.field, [1])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def eval_complex(self):
        z = self.field.root
        return sum(complex(c) * z ** k for k, c in enumerate(self.coeffs))

    def __repr__(self):
        z = self.field.name
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            parts.append(f"{c}" if k == 0 else f"{c}*{z}^{k}")
        return "(" + (" + ".join(parts) if parts else "0") + ")"


# ---------------------------------------------------------------------------
# univariate rational functions over Q or a cyclotomic field
# ---------------------------------------------------------------------------

class RatFunc:
    """num/den of univariate polynomials, gcd-reduced with monic denominator."""

    __slots__ = ("var", "num", "den")

    def __init__(self, var, num, den=(1,), normalize=True):
        num = _poly_trim(list(num))
        den = _poly_trim(list(den))
        if not den:
            raise ZeroDivisionError("zero denominator")
        if normalize and num:
            g = _poly_gcd(num, den)
            if len(g) > 1:
                num, _ = _poly_divmod(num, g)
                den, _ = _poly_divmod(den, g)
        if not num:
            den = [self._one_like(den[-1])]
        lead = den[-1]
        if lead != 1:
            num = [c / lead for c in num]
            den = [c / lead for c in den]
        self.var = var
        self.num = tuple(num)
        self.den = tuple(den)

    @staticmethod
    def _one_like(sample):
        if isinstance(sample, Cyclo):
            return Cyclo(sample.field, [1])
        return Fraction(1)

    @classmethod
    def const(cls, var, c):
        return cls(var, [c])

    @classmethod
    def gen(cls, var, power=1):
        if power >= 0:
            return cls(var, [0] * power + [1])
        return cls(var, [1], [0] * (-power) + [1])

    # -- coercion -----------------------------------------------------------
    def _co(self, other):
        if isinstance(other, RatFunc):
            if other.var != self.var:
                raise TypeError("mixed rational-function variables")
            return other
        if isinstance(other, (int, Fraction, Cyclo)):
            return RatFunc(self.var, [other], normalize=False)
        return None

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.var, self.num, self.den))

    def __neg__(self):
        return RatFunc(self.var, [-c for c in self.num], self.den, normalize=False)

    def __add__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        num = _poly_add(_poly_mul(list(self.num), list(o.den)),
                        _poly_mul(list(o.num), list(self.den)))
        return RatFunc(self.var, num, _poly_mul(list(self.den), list(o.den)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.var, _poly_mul(list(self.num), list(o.num)),
                       _poly_mul(list(self.den), list(o.den)))

    __rmul__ = __mul__

    def inv(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.var, self.den, self.num)

    def __truediv__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._co(other)
        return o * self.inv()

    def __pow__(self, n):
        if n < 0:
            return self.inv() ** (-n)
        out = RatFunc(self.var, [self._one_like(self.den[-1])], normalize=False)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def den_is_power_of(self, root_shift):
        """True iff den = (x - root_shift)^k for some k >= 0."""
        den = list(self.den)
        while len(den) > 1:
            q, r = _poly_divmod(den, [-root_shift, 1])
            if _poly_trim(r):
                return False
            den = q if q else [1]
        return True

    def eval_complex(self, value):
        def ev(cs):
            acc = 0j
            for c in reversed(cs):
                cv = c.eval_complex() if isinstance(c, Cyclo) else complex(c)
                acc = acc * value + cv
            return acc

        return ev(self.num) / ev(self.den)

    def __repr__(self):
        def fmt(cs):
            parts = []
            for k, c in enumerate(cs):
                if not c:
                    continue
                if k == 0:
                    parts.append(f"{c}")
                else:
                    parts.append(f"{c}*{self.var}^{k}")
            return " + ".join(parts) if parts else "0"

        if self.den == (Fraction(1),) or self.den == (1,):
            return f"({fmt(self.num)})"
        return f"(({fmt(self.num)}) / ({fmt(self.den)}))"


# ---------------------------------------------------------------------------
# sparse multivariate (Laurent) polynomials
# ---------------------------------------------------------------------------

Scalar = Union[int, Fraction, Cyclo, RatFunc]


def _grlex_key(expo):
    return (sum(expo), expo)


class MultiPoly:
    """Sparse polynomial in named variables; exponents may be negative.

    Coefficients live in any exact domain supporting +,-,*,/ and bool().
    Binary operations align variable sets by name automatically.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms):
        self.vars = tuple(vars)
        clean = {}
        for expo, c in terms.items():
            if len(expo) != len(self.vars):
                raise ValueError("exponent length mismatch")
            if c:
                clean[tuple(int(e) for e in expo)] = c
        self.terms = clean

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, vars=()):
        return cls(vars, {})

    @classmethod
    def const(cls, vars, c):
        if isinstance(c, int):
            c = Fraction(c)
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def var(cls, name, vars=None):
        vars = (name,) if vars is None else tuple(vars)
        expo = tuple(1 if v == name else 0 for v in vars)
        if name not in vars:
            raise ValueError(f"{name} not among {vars}")
        return cls(vars, {expo: Fraction(1)})

    # -- variable alignment --------------------------------------------------
    def with_vars(self, newvars):
        newvars = tuple(newvars)
        if newvars == self.vars:
            return self
        idx = []
        for v in self.vars:
            if v not in newvars:
                raise ValueError(f"cannot drop variable {v}")
            idx.append(newvars.index(v))
        terms = {}
        for expo, c in self.terms.items():
            ne = [0] * len(newvars)
            for k, e in enumerate(expo):
                ne[idx[k]] = e
            terms[tuple(ne)] = c
        return MultiPoly(newvars, terms)

    @staticmethod
    def _aligned(a, b):
        if a.vars == b.vars:
            return a, b
        merged = list(a.vars) + [v for v in b.vars if v not in a.vars]
        return a.with_vars(merged), b.with_vars(merged)

    def _co(self, other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction, Cyclo, RatFunc)):
            c = Fraction(other) if isinstance(other, int) else other
            return MultiPoly(self.vars, {(0,) * len(self.vars): c})
        return None

    # -- ring operations ----------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        a, b = self._aligned(self, o)
        return a.terms == b.terms

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        a, b = self._aligned(self, o)
        terms = dict(a.terms)
        for e, c in b.terms.items():
            if e in terms:
                s = terms[e] + c
                if s:
                    terms[e] = s
                else:
                    del terms[e]
            else:
                terms[e] = c
        return MultiPoly(a.vars, terms)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        a, b = self._aligned(self, o)
        terms = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                c = c1 * c2
                if e in terms:
                    s = terms[e] + c
                    if s:
                        terms[e] = s
                    else:
                        del terms[e]
                elif c:
                    terms[e] = c
        return MultiPoly(a.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inverse_monomial() ** (-n)
        out = MultiPoly.const(self.vars, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse_monomial(self):
        if len(self.terms) != 1:
            raise ValueError("only single-term polynomials are invertible")
        (expo, c), = self.terms.items()
        return MultiPoly(self.vars, {tuple(-e for e in expo): 1 / c})

    # -- calculus / substitution ---------------------------------------------
    def partial(self, name):
        i = self.vars.index(name)
        terms = {}
        for expo, c in self.terms.items():
            e = expo[i]
            if e == 0:
                continue
            ne = list(expo)
            ne[i] = e - 1
            terms[tuple(ne)] = c * e
        return MultiPoly(self.vars, terms)

    def subst(self, mapping):
        """Simultaneous substitution name -> MultiPoly or scalar."""
        images = {}
        keep = []
        for v in self.vars:
            if v in mapping:
                img = mapping[v]
                if not isinstance(img, MultiPoly):
                    img = MultiPoly.const((), Fraction(img) if isinstance(img, int) else img)
                images[v] = img
            else:
                keep.append(v)
        out_vars = list(keep)
        for img in images.values():
            for v in img.vars:
                if v not in out_vars:
                    out_vars.append(v)
        out_vars = tuple(out_vars)
        out = MultiPoly.zero(out_vars)
        for expo, c in self.terms.items():
            term = MultiPoly.const(out_vars, c)
            for v, e in zip(self.vars, expo):
                if e == 0:
                    continue
                if v in images:
                    term = term * (images[v].with_vars(
                        tuple(out_vars)) if set(images[v].vars) <= set(out_vars)
                        else images[v]) ** e
                else:
                    term = term * MultiPoly(out_vars, {tuple(
                        e if u == v else 0 for u in out_vars): Fraction(1)})
            out = out + term
        return out.with_vars(out_vars) if out.vars != out_vars else out

    def coefficient_split(self, on_vars):
        """Split into {exponent-on-on_vars: MultiPoly in remaining vars}."""
        on_vars = tuple(on_vars)
        rest = tuple(v for v in self.vars if v not in on_vars)
        idx_on = [self.vars.index(v) for v in on_vars]
        idx_rest = [self.vars.index(v) for v in rest]
        out = {}
        for expo, c in self.terms.items():
            eon = tuple(expo[i] for i in idx_on)
            ere = tuple(expo[i] for i in idx_rest)
            out.setdefault(eon, {})[ere] = c
        return {eon: MultiPoly(rest, t) for eon, t in out.items()}

    def degree(self, name):
        i = self.vars.index(name)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def min_degree(self, name):
        i = self.vars.index(name)
        if not self.terms:
            return 0
        return min(e[i] for e in self.terms)

    def coeff_of(self, name, power):
        """Coefficient of name**power, as a MultiPoly in the other variables."""
        i = self.vars.index(name)
        rest = tuple(v for v in self.vars if v != name)
        terms = {}
        for expo, c in self.terms.items():
            if expo[i] == power:
                terms[tuple(e for k, e in enumerate(expo) if k != i)] = c
        return MultiPoly(rest, terms)

    def eval_complex(self, values):
        """Numeric evaluation; values maps every variable to a complex."""
        acc = 0j
        for expo, c in self.terms.items():
            if isinstance(c, (Cyclo,)):
                cv = c.eval_complex()
            elif isinstance(c, RatFunc):
                raise ValueError("evaluate RatFunc coefficients separately")
            else:
                cv = complex(c)
            for v, e in zip(self.vars, expo):
                cv *= values[v] ** e
            acc += cv
        return acc

    # -- exact division (for fraction-free elimination) ----------------------
    def exact_div(self, other):
        o = self._co(other)
        a, b = self._aligned(self, o)
        if b.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        if a.is_zero:
            return a
        quo = {}
        rem = dict(a.terms)
        b_lead = max(b.terms, key=_grlex_key)
        b_lc = b.terms[b_lead]
        while rem:
            lead = max(rem, key=_grlex_key)
            qe = tuple(x - y for x, y in zip(lead, b_lead))
            qc = rem[lead] / b_lc
            quo[qe] = qc
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(qe, e2))
                c = rem.get(e, 0) - qc * c2
                if c:
                    rem[e] = c
                elif e in rem:
                    del rem[e]
            if lead in rem:
                raise ArithmeticError("not exactly divisible")
        return MultiPoly(a.vars, quo)

    # -- text form ------------------------------------------------------------
    def format(self):
        """Canonical plain-text form; Q coefficients only, exact round-trip."""
        if not self.terms:
            return "0"
        parts = []
        for expo in sorted(self.terms, key=_grlex_key, reverse=True):
            c = self.terms[expo]
            if not isinstance(c, Fraction):
                raise ValueError("text form is defined for rational coefficients")
            mon = " * ".join(f"{v}^{e}" for v, e in zip(self.vars, expo) if e)
            mag = abs(c)
            body = f"{mag}" + (f" * {mon}" if mon else "")
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else ("-" + text[1:])

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for expo in sorted(self.terms, key=_grlex_key, reverse=True):
            c = self.terms[expo]
            mon = "*".join(f"{v}^{e}" for v, e in zip(self.vars, expo) if e)
            parts.append(f"{c}" + (f"*{mon}" if mon else ""))
        return " + ".join(parts)


def parse_poly(text, vars):
    """Parse the plain-text grammar `c * x^2 * y^1` joined by +/-.

    Coefficients are integers or fractions p/q; a term may omit the
    coefficient (`x^2`) or the exponent (`x`).
    """
    vars = tuple(vars)
    text = text.strip()
    if text in ("", "0"):
        return MultiPoly.zero(vars)
    tokens = text.replace("-", "+-").split("+")
    poly = MultiPoly.zero(vars)
    for tok in tokens:
        tok = tok.strip()
        if not tok:
            continue
        sign = 1
        if tok.startswith("-"):
            sign = -1
            tok = tok[1:].strip()
        coeff = Fraction(sign)
        expo = [0] * len(vars)
        for factor in tok.split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError(f"empty factor in {tok!r}")
            if factor[0].isdigit():
                coeff *= Fraction(factor)
            else:
                if "^" in factor:
                    name, _, p = factor.partition("^")
                    power = int(p)
                else:
                    name, power = factor, 1
                name = name.strip()
                if name not in vars:
                    raise ValueError(f"unknown variable {name!r}")
                expo[vars.index(name)] += power
        poly = poly + MultiPoly(vars, {tuple(expo): coeff})
    return poly


# ---------------------------------------------------------------------------
# resultants and graded linear algebra
# ---------------------------------------------------------------------------

def _bareiss_det(m):
    """Fraction-free determinant of a square matrix of MultiPolys."""
    n = len(m)
    if n == 0:
        return MultiPoly.const((), 1)
    m = [row[:] for row in m]
    sign = 1
    prev = None
    for k in range(n - 1):
        if m[k][k].is_zero:
            pivot = next((i for i in range(k + 1, n) if not m[i][k].is_zero), None)
            if pivot is None:
                return MultiPoly.zero(m[0][0].vars)
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num if prev is None else num.exact_div(prev)
            m[i][k] = MultiPoly.zero(m[i][k].vars)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def resultant(p, q, var):
    """Sylvester resultant of p and q with respect to var, exact.

    Degrees are taken from the sparse support, so vanishing formal leading
    coefficients cannot occur.  Both inputs must have positive degree in var.
    """
    p, q = MultiPoly._aligned(p, q)
    dp, dq = p.degree(var), q.degree(var)
    if min(p.min_degree(var), q.min_degree(var)) < 0:
        raise ValueError("resultant needs polynomial (non-Laurent) inputs")
    if dp <= 0 or dq <= 0:
        if dp == 0 and not p.is_zero:
            return p ** dq if dq > 0 else MultiPoly.const(p.vars, 1)
        if dq == 0 and not q.is_zero:
            return q ** dp if dp > 0 else MultiPoly.const(p.vars, 1)
        raise ValueError("resultant requires positive degree in the variable")
    pc = [p.coeff_of(var, k) for k in range(dp + 1)]
    qc = [q.coeff_of(var, k) for k in range(dq + 1)]
    n = dp + dq
    zero = MultiPoly.zero(pc[0].vars)
    rows = []
    for i in range(dq):
        row = [zero] * n
        for k in range(dp + 1):
            row[i + k] = pc[dp - k]
        rows.append(row)
    for i in range(dp):
        row = [zero] * n
        for k in range(dq + 1):
            row[i + k] = qc[dq - k]
        rows.append(row)
    return _bareiss_det(rows)


@dataclass(frozen=True)
class WeightSystem:
    """Rational weights for the variables and the unfolding parameters."""
    var_weights: tuple          # ((name, Fraction), ...) in variable order
    t_weights: tuple            # deg_w t_j, j = 1..mu (or mu-1)
    coxeter_number: int = None  # ADE only
    cone_d: int = None          # common denominator used on the elliptic side

    def weight_of(self, name):
        for v, w in self.var_weights:
            if v == name:
                return w
        raise KeyError(name)

    def monomial_degree(self, vars, expo):
        return sum(self.weight_of(v) * e for v, e in zip(vars, expo) if e)

    def poly_degree(self, poly):
        """Weighted degree if quasihomogeneous, else None."""
        degs = {self.monomial_degree(poly.vars, e) for e in poly.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def monomial_basis(self, q):
        """All exponent tuples over the weighted variables of degree q."""
        names = [v for v, _ in self.var_weights]
        weights = [w for _, w in self.var_weights]
        out = []

        def rec(i, acc, remaining):
            if i == len(names):
                if remaining == 0:
                    out.append(tuple(acc))
                return
            w = weights[i]
            emax = int(remaining / w)
            for e in range(emax + 1):
                if remaining - w * e >= 0:
                    rec(i + 1, acc + [e], remaining - w * e)

        rec(0, [], Fraction(q))
        return [e for e in out
                if self.monomial_degree(names, e) == Fraction(q)]


def field_rank(rows):
    """Rank of a matrix whose entries live in an exact field."""
    m = [list(r) for r in rows if any(r)]
    rank = 0
    cols = len(m[0]) if m else 0
    row = 0
    for col in range(cols):
        piv = next((i for i in range(row, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        pv = m[row][col]
        for i in range(row + 1, len(m)):
            if m[i][col]:
                f = m[i][col] / pv
                m[i] = [a - f * b for a, b in zip(m[i], m[row])]
        row += 1
        rank += 1
        if row == len(m):
            break
    return rank


def graded_piece_rank(gens, weights, q):
    """Rank over the coefficient field of the given quasihomogeneous
    generators inside the weighted-degree-q piece of the polynomial ring."""
    q = Fraction(q)
    names = tuple(v for v, _ in weights.var_weights)
    basis = weights.monomial_basis(q)
    if not basis:
        if any(not g.is_zero for g in gens):
            raise ValueError("nonzero generator in an empty graded piece")
        return 0
    index = {e: k for k, e in enumerate(basis)}
    rows = []
    for g in gens:
        if g.is_zero:
            continue
        g = g.with_vars(names) if g.vars != names else g
        row = [Fraction(0)] * len(basis)
        for expo, c in g.terms.items():
            if weights.monomial_degree(names, expo) != q:
                raise ValueError(f"generator not homogeneous of degree {q}")
            row[index[expo]] = c
        rows.append(row)
    if not rows:
        return 0
    return field_rank(rows)
