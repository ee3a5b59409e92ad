"""Critical-value configuration maps at desk scale.

For the one-variable chain family the map sending unfolding parameters to
the monic polynomial with the critical values as roots is computed exactly
through a resultant; discriminant membership is exact as well.  Numeric
companions: critical values for small two-variable families by multistart
Newton, fiber counting over generic targets for mu = 2, 3, and a wall
walker that tracks the good ordering of the critical values along a path
in parameter space and emits a braid letter at every transversal crossing
of adjacent imaginary parts.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .braid import BraidWord
from .polyalg import MultiPoly, resultant
from .singdata import SingularityClass, sing_class, normal_form, \
    unfolding_monomials

F = Fraction

TOL_DEDUP = 1e-6
TOL_CROSSCHECK = 1e-10
TOL_WALL = 1e-9
TOL_DISC = 1e-9


@dataclass(frozen=True)
class LLPoint:
    """Monic polynomial in one variable, coefficients ascending (constant
    first, leading 1 included)."""
    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs or self.coeffs[-1] != 1:
            raise ValueError("polynomial must be monic")

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def as_poly(self, var="y"):
        return MultiPoly((var,), {(k,): F(c) for k, c in enumerate(self.coeffs)
                                  if c})

    def roots(self):
        cs = [complex(c) for c in self.coeffs]
        dcs = [k * c for k, c in enumerate(cs)][1:]

        def horner(seq, x):
            acc = complex(0)
            for c in reversed(seq):
                acc = acc * x + c
            return acc

        out = []
        for x in np.roots(list(reversed(cs))):
            for _ in range(4):
                dp = horner(dcs, x)
                if abs(dp) < 1e-14:
                    break
                x = x - horner(cs, x) / dp
            out.append(x)
        return np.array(out)


@dataclass(frozen=True)
class UnfoldingPoint:
    cls: SingularityClass
    t: tuple
    lam: object = None

    def __post_init__(self):
        if self.cls.is_elliptic and self.lam in (0, 1, None):
            raise ValueError("family parameter must avoid 0 and 1")


@dataclass(frozen=True)
class CriticalData:
    values: tuple   # critical values, with multiplicity, in input order
    sigma: tuple    # good permutation (values[sigma[0]], ... is good-ordered),
                    # or None when the parameter sits on a Stokes wall


class IncompleteFiber(RuntimeError):
    """Fewer critical points than the global Milnor number were located."""


# ---------------------------------------------------------------------------
# exact chain-family map
# ---------------------------------------------------------------------------

def _chain_unfolding_poly(mu, t):
    vs = ("x", "y")
    f = MultiPoly(vs, {(mu + 1, 0): F(1)})
    for j, tj in enumerate(t, start=1):
        if tj:
            f = f + MultiPoly(vs, {(j - 1, 0): F(tj)})
    return f


def ll_exact_A(mu, t) -> LLPoint:
    """Exact configuration polynomial prod_j (y - u_j) for the chain family
    x^(mu+1) + t_1 + t_2 x + ... + t_mu x^(mu-1), via the resultant of the
    x-derivative with y - F, normalized monic."""
    if len(t) != mu:
        raise ValueError(f"need {mu} parameters")
    t = [F(v) for v in t]
    f = _chain_unfolding_poly(mu, t)
    df = f.partial("x")
    y_minus_f = MultiPoly(("x", "y"), {(0, 1): F(1)}) - f
    res = resultant(df, y_minus_f, "x")
    coeffs = [F(0)] * (mu + 1)
    for expo, c in res.terms.items():
        coeffs[expo[res.vars.index("y")]] = c
    lead = coeffs[mu]
    if not lead:
        raise ArithmeticError("configuration polynomial degenerated")
    return LLPoint(tuple(c / lead for c in coeffs))


def discriminant_member(p: LLPoint) -> bool:
    """True iff the polynomial has a multiple root (vanishing discriminant),
    decided exactly through the resultant with the derivative."""
    poly = p.as_poly()
    dpoly = poly.partial("y")
    if poly.degree("y") < 1:
        return False
    if dpoly.is_zero:
        return True
    res = resultant(poly, dpoly, "y")
    return res.is_zero


# ---------------------------------------------------------------------------
# good ordering
# ---------------------------------------------------------------------------

def good_order(values, tol=TOL_WALL):
    """Permutation sigma ordering the values by imaginary part ascending,
    ties broken by real part descending.  A pair equal in both parts
    (within tol) cannot be ordered: that parameter sits on a wall."""
    idx = sorted(range(len(values)),
                 key=lambda k: (values[k].imag, -values[k].real))
    for a, b in zip(idx, idx[1:]):
        if abs(values[a].imag - values[b].imag) < tol and \
           abs(values[a].real - values[b].real) < tol:
            raise ValueError("on a Stokes wall: values collide within tolerance")
    return tuple(idx)


# ---------------------------------------------------------------------------
# numeric critical values
# ---------------------------------------------------------------------------

def _numeric_unfolding(cls, t, lam=None):
    """F_t as an exact polynomial with the parameters substituted."""
    allv = cls.xvars + cls.tvars + (("la",) if cls.is_elliptic else ())
    f = normal_form(cls).with_vars(allv)
    for j, m in enumerate(unfolding_monomials(cls), start=1):
        f = f + MultiPoly.var(f"t{j}", allv) * m.with_vars(allv)
    sub = {f"t{j}": complex(v) for j, v in enumerate(t, start=1)}
    if cls.is_elliptic:
        sub["la"] = complex(lam)
    return f, sub


def critical_values_numeric(cls_or_label, t, lam=None, *, starts=400,
                            seed=11, tol=1e-8) -> CriticalData:
    """Critical values of the unfolding at the given parameters.

    Chain family: roots of the x-derivative (companion matrix), exact
    parameter arithmetic until the final root find.  Two-variable families:
    damped-Newton multistart on the gradient; requires a generic parameter
    (exactly mu distinct critical points) and raises IncompleteFiber when
    the start budget does not locate all of them."""
    cls = _cls(cls_or_label)
    if cls.family == "A":
        t = [complex(v) for v in t]
        # derivative of x^(mu+1) + sum t_j x^(j-1) is
        # (mu+1) x^mu + sum (j-1) t_j x^(j-2)
        dcoeffs = [complex(0)] * (cls.mu + 1)
        dcoeffs[cls.mu] = cls.mu + 1
        for j in range(2, cls.mu + 1):
            dcoeffs[j - 2] += (j - 1) * t[j - 1]
        ddcoeffs = [k * dcoeffs[k] for k in range(1, cls.mu + 1)]

        def horner(cs, x):
            acc = complex(0)
            for c in reversed(cs):
                acc = acc * x + c
            return acc

        xs = list(np.roots(list(reversed(dcoeffs))))
        for k, x in enumerate(xs):  # polish the companion eigenvalues
            for _ in range(4):
                dp = horner(ddcoeffs, x)
                if abs(dp) < 1e-14:
                    break
                x = x - horner(dcoeffs, x) / dp
            xs[k] = x
        values = []
        for x in xs:
            v = x ** (cls.mu + 1) + sum(t[j - 1] * x ** (j - 1)
                                        for j in range(1, cls.mu + 1))
            values.append(complex(v))
        values = tuple(values)
        return CriticalData(values, _maybe_good_order(values))
    if cls.nvars != 2:
        raise ValueError("numeric critical values cover one- and "
                         "two-variable families")
    f, sub = _numeric_unfolding(cls, t, lam)
    fx = f.partial("x0")
    fy = f.partial("x1")
    fxx, fxy = fx.partial("x0"), fx.partial("x1")
    fyx, fyy = fy.partial("x0"), fy.partial("x1")

    def ev(poly, x, y):
        vals = dict(sub)
        vals["x0"], vals["x1"] = x, y
        return poly.eval_complex(vals)

    rng = random.Random(seed)
    found = []
    for _ in range(starts):
        x = complex(rng.gauss(0, 1.5), rng.gauss(0, 1.5))
        y = complex(rng.gauss(0, 1.5), rng.gauss(0, 1.5))
        for _ in range(80):
            gx, gy = ev(fx, x, y), ev(fy, x, y)
            if abs(gx) + abs(gy) < 1e-13:
                break
            a, b, c, d = ev(fxx, x, y), ev(fxy, x, y), ev(fyx, x, y), ev(fyy, x, y)
            det = a * d - b * c
            if abs(det) < 1e-14:
                break
            dx = (d * gx - b * gy) / det
            dy = (-c * gx + a * gy) / det
            step = 1.0
            while step > 1e-3:
                nx, ny = x - step * dx, y - step * dy
                if abs(ev(fx, nx, ny)) + abs(ev(fy, nx, ny)) <= \
                   abs(gx) + abs(gy):
                    break
                step /= 2
            x, y = x - step * dx, y - step * dy
        else:
            continue
        if abs(ev(fx, x, y)) + abs(ev(fy, x, y)) > 1e-10:
            continue
        hess = ev(fxx, x, y) * ev(fyy, x, y) - ev(fxy, x, y) * ev(fyx, x, y)
        if abs(hess) < 1e-8:
            continue  # degenerate critical point: the parameter is not generic
        if all(abs(x - px) + abs(y - py) > tol for px, py, _ in found):
            found.append((x, y, ev(f, x, y)))
        if len(found) == cls.mu:
            break
    if len(found) != cls.mu:
        raise IncompleteFiber(
            f"found {len(found)} of {cls.mu} critical points; "
            "retry with more starts or a more generic parameter")
    values = tuple(v for _, _, v in found)
    return CriticalData(values, _maybe_good_order(values))


def _maybe_good_order(values):
    try:
        return good_order(values)
    except ValueError:
        return None


def _cls(c):
    return c if isinstance(c, SingularityClass) else sing_class(c)


# ---------------------------------------------------------------------------
# fiber counting (mu = 2, 3)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _symbolic_ll(mu):
    """Coefficient polynomials c_k(t) of the exact configuration polynomial
    for the chain family with symbolic parameters, plus their Jacobian."""
    tv = tuple(f"t{j}" for j in range(1, mu + 1))
    vs = ("x", "y") + tv
    f = MultiPoly(vs, {(mu + 1, 0) + (0,) * mu: F(1)})
    for j in range(1, mu + 1):
        f = f + MultiPoly(vs, {(j - 1, 0) + tuple(
            1 if k == j - 1 else 0 for k in range(mu)): F(1)})
    res = resultant(f.partial("x"),
                    MultiPoly(vs, {(0, 1) + (0,) * mu: F(1)}) - f, "x")
    lead = res.coeff_of("y", mu)
    (e0, c0), = lead.terms.items()
    if any(e0):
        raise ArithmeticError("leading coefficient is not constant")
    coeffs = []
    for k in range(mu):
        ck = res.coeff_of("y", k)
        ck = MultiPoly(ck.vars, {e: c / c0 for e, c in ck.terms.items()})
        coeffs.append(ck)
    jac = [[c.partial(tn) for tn in tv] for c in coeffs]
    return tv, coeffs, jac


@dataclass
class FiberCount:
    count: int
    saturated: bool
    starts: int
    solutions: tuple


def ll_fiber_count(cls_or_label, p: LLPoint, budget=600, *, seed=5,
                   tol_cluster=TOL_DEDUP) -> FiberCount:
    """Number of parameter points mapping to the target configuration,
    located by multistart Newton on the coefficient-matching system.

    Only mu = 2 and 3 are supported; the target must be square-free.  The
    saturation flag records that no new solution appeared during the last
    half of the start budget."""
    cls = _cls(cls_or_label)
    if cls.family != "A" or cls.mu not in (2, 3):
        raise ValueError("fiber counting is desk-scale: chain family, mu in {2, 3}")
    mu = cls.mu
    if p.degree != mu:
        raise ValueError("target degree mismatch")
    sylv_roots = p.roots()
    if min(abs(a - b) for a, b in itertools.combinations(sylv_roots, 2)) < 1e-5:
        raise ValueError("target has a (near-)multiple root")
    tv, coeffs, jac = _symbolic_ll(mu)
    target = np.array([complex(c) for c in p.coeffs[:mu]])

    def G(tvec):
        vals = {tn: tvec[k] for k, tn in enumerate(tv)}
        vals["x"] = 0.0
        vals["y"] = 0.0
        return np.array([c.eval_complex(vals) for c in coeffs]) - target

    def J(tvec):
        vals = {tn: tvec[k] for k, tn in enumerate(tv)}
        vals["x"] = 0.0
        vals["y"] = 0.0
        return np.array([[jac[i][k].eval_complex(vals) for k in range(mu)]
                         for i in range(mu)])

    rng = random.Random(seed)
    sols = []
    last_new = 0
    for s in range(budget):
        tvec = np.array([complex(rng.gauss(0, 2), rng.gauss(0, 2))
                         for _ in range(mu)])
        ok = False
        for _ in range(120):
            g = G(tvec)
            if np.max(np.abs(g)) < 1e-11:
                ok = True
                break
            try:
                step = np.linalg.solve(J(tvec), g)
            except np.linalg.LinAlgError:
                break
            if np.max(np.abs(step)) > 1e6:
                break
            tvec = tvec - step
        if not ok:
            continue
        if all(np.max(np.abs(tvec - s0)) > tol_cluster for s0 in sols):
            sols.append(tvec)
            last_new = s
    return FiberCount(count=len(sols), saturated=last_new < budget // 2,
                      starts=budget, solutions=tuple(tuple(v) for v in sols))


# ---------------------------------------------------------------------------
# wall walking
# ---------------------------------------------------------------------------

def wall_walk_A(mu, path, steps=2000, *, tol_wall=TOL_WALL,
                tol_disc=TOL_DISC, sign_flip=False) -> BraidWord:
    """Track the good-ordered critical values along a piecewise-linear path
    of parameter vectors; emit one braid letter per transversal crossing of
    adjacent imaginary parts.  The letter sign comes from the real-part
    order at the crossing (flip with sign_flip).

    Aborts when two critical values collide (the path hit the discriminant)
    or when a wall contact does not resolve within the sample resolution
    (tangential crossing)."""
    waypoints = [tuple(complex(c) for c in wp) for wp in path]
    if len(waypoints) < 1:
        raise ValueError("empty path")
    if any(len(wp) != mu for wp in waypoints):
        raise ValueError("waypoints must have mu components")
    if len(waypoints) == 1:
        return BraidWord(())

    def values_at(tvec):
        dcoeffs = [complex(0)] * (mu + 1)
        dcoeffs[mu] = mu + 1
        for j in range(2, mu + 1):
            dcoeffs[j - 2] += (j - 1) * tvec[j - 1]
        xs = np.roots(list(reversed(dcoeffs)))
        return [complex(x ** (mu + 1) + sum(tvec[j - 1] * x ** (j - 1)
                                            for j in range(1, mu + 1)))
                for x in xs]

    # sample the whole path uniformly
    samples = []
    for a, b in zip(waypoints, waypoints[1:]):
        for k in range(steps):
            s = k / steps
            samples.append(tuple(x + s * (y - x) for x, y in zip(a, b)))
    samples.append(waypoints[-1])

    letters = []
    prev_vals = None   # tracked values, in the good order of the previous sample
    contact = {}       # adjacent pair -> consecutive samples spent on the wall
    for tvec in samples:
        vals = values_at(tvec)
        for a, b in itertools.combinations(vals, 2):
            if abs(a - b) < tol_disc:
                raise ValueError("hit discriminant: critical values collide")
        if prev_vals is None:
            order = good_order(vals, tol=tol_wall)
            prev_vals = [vals[k] for k in order]
            continue
        # continuity matching: nearest new value to each tracked one
        remaining = list(vals)
        matched = []
        for pv in prev_vals:
            k = min(range(len(remaining)), key=lambda i: abs(remaining[i] - pv))
            matched.append(remaining.pop(k))
        # bubble adjacent swaps in the Im-order back into good order
        changed = True
        while changed:
            changed = False
            for i in range(len(matched) - 1):
                lo, hi = matched[i], matched[i + 1]
                if (lo.imag > hi.imag) or \
                   (abs(lo.imag - hi.imag) < 1e-15 and lo.real < hi.real):
                    letter = (i + 1) if (lo.real > hi.real) != sign_flip \
                        else -(i + 1)
                    letters.append(letter)
                    matched[i], matched[i + 1] = hi, lo
                    changed = True
        # a single sample may kiss a wall during a transversal crossing;
        # lingering inside the band means a tangential contact
        for i in range(len(matched) - 1):
            gap = abs(matched[i].imag - matched[i + 1].imag)
            if gap < tol_wall:
                contact[i] = contact.get(i, 0) + 1
                if contact[i] >= 3:
                    raise ValueError(
                        "tangential crossing: a wall contact did not resolve "
                        "at this sample resolution; refine steps")
            else:
                contact[i] = 0
        prev_vals = matched
    return BraidWord(tuple(letters))
