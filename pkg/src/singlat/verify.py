"""Exact symbolic verification of the tabulated polynomial identities.

Three families of checks, all exact:

 * jacobi_dimension     - the graded spanning identity that makes the
                          chosen unfolding universal, i.e. the Jacobi
                          algebra has dimension mu (symbolically in the
                          family parameter or at a rational value);
 * check_unfolding_identity / check_simple_symmetry
                        - the coordinate change phi, the shift Psi and the
                          parameter map psi satisfy
                          F(Psi(phi(x), t), t) = F(x, psi(t)),
                          with psi re-derived from (phi, Psi) and compared
                          against its printed components;
 * check_kappa_extension - the family pulled back along la = kappa^c and
                          rescaled extends holomorphically to kappa = 0,
                          verified against the tabulated extended form in
                          the auxiliary y-variables.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .polyalg import MultiPoly, RatFunc, Cyclo, graded_piece_rank
from .singdata import (SingularityClass, sing_class, normal_form, weights,
                       unfolding_monomials, symmetry_data)

F = Fraction


@dataclass
class CheckOutcome:
    name: str
    passed: bool
    witness: object = None   # offending difference on failure
    detail: str = ""

    def __bool__(self):
        return self.passed


class JacobiRankError(ArithmeticError):
    def __init__(self, label, q, got, want):
        self.q = q
        super().__init__(f"{label}: graded piece q={q} has rank {got}, "
                         f"needs {want}")


# ---------------------------------------------------------------------------
# Jacobi dimension
# ---------------------------------------------------------------------------

def _achievable_degrees(wsys, qmax):
    """All weighted degrees q in (0, qmax] realized by monomials."""
    degs = set()
    names = [v for v, _ in wsys.var_weights]
    ws = [w for _, w in wsys.var_weights]

    def rec(i, acc):
        if acc > qmax:
            return
        if i == len(ws):
            if acc > 0:
                degs.add(acc)
            return
        e = 0
        while acc + ws[i] * e <= qmax:
            rec(i + 1, acc + ws[i] * e)
            e += 1

    rec(0, F(0))
    return sorted(degs)


def jacobi_dimension(cls_or_label, lam=None) -> int:
    """Dimension of the Jacobi algebra certified by graded spanning.

    For every weighted degree q up to 1 + max_i w_i with a nonzero graded
    piece, the partial derivatives (times monomials), the unfolding
    monomials of degree q and (elliptic, q = 1) the la-derivative must span
    the piece; by induction on the degree this pins the dimension to mu.

    lam = None runs the elliptic families symbolically in la; a Fraction
    outside {0, 1} evaluates there.  ADE classes ignore lam.
    """
    cls = _cls(cls_or_label)
    wsys = weights(cls)
    f = normal_form(cls)
    xv = cls.xvars
    if cls.is_elliptic:
        if lam is None:
            image = RatFunc.gen("la")
        else:
            lam = F(lam)
            if lam in (0, 1):
                raise ValueError("family parameter must avoid 0 and 1")
            image = lam
        dlam = f.partial("la").subst({"la": image})
        f = f.subst({"la": image})
    else:
        dlam = None
    partials = [f.partial(v) for v in xv]
    pdeg = [wsys.poly_degree(p) for p in partials]
    if any(d is None for d in pdeg):
        raise ArithmeticError("partials are not quasihomogeneous")
    monos = unfolding_monomials(cls)
    mdeg = [wsys.poly_degree(m) for m in monos]
    qmax = 1 + max(w for _, w in wsys.var_weights)
    dim = 0
    for q in _achievable_degrees(wsys, qmax):
        piece = wsys.monomial_basis(q)
        gens = []
        for p, d in zip(partials, pdeg):
            shift = q - d
            if shift < 0:
                continue
            for e in wsys.monomial_basis(shift):
                mono = MultiPoly(xv, {e: F(1)})
                gens.append(mono * p)
        cobasis = [m for m, d in zip(monos, mdeg) if d == q]
        if cls.is_elliptic and q == 1:
            cobasis = cobasis + [dlam]
        want = len(piece)
        got = graded_piece_rank(gens + cobasis, wsys, q)
        if got != want:
            raise JacobiRankError(cls.label, q, got, want)
        free = want - graded_piece_rank(gens, wsys, q) if gens else want
        dim += free
    # degree-0 piece (the constants) is spanned by m_1 = 1
    return dim + 1


# ---------------------------------------------------------------------------
# unfolding symmetry identities
# ---------------------------------------------------------------------------

def _cls(c) -> SingularityClass:
    return c if isinstance(c, SingularityClass) else sing_class(c)


def _field_one(datum):
    if datum.cyclo is not None:
        return Cyclo(datum.cyclo, [1])
    return F(1)


def _lift_unfolding(cls, datum):
    """F(x, t) with coefficients in Q(nu)[zeta], la realized as nu^m,
    together with the la-image polynomial f_{la'}(x)."""
    one = _field_one(datum)
    nu = RatFunc("nu", [0 * one, one], [one], normalize=False)
    la = nu ** datum.root_order
    f = normal_form(cls)
    xv, tv = cls.xvars, cls.tvars
    if cls.is_elliptic:
        f_la = f.subst({"la": la})
        if datum.lam_image == "inv":
            la_image = la ** -1
        elif datum.lam_image == "one-minus":
            la_image = 1 - la
        else:
            raise ValueError(datum.lam_image)
        f_target = f.subst({"la": la_image})
    else:
        f_la = f
        f_target = f
    allv = xv + tv
    F_full = f_la.with_vars(allv)
    for j, m in enumerate(unfolding_monomials(cls), start=1):
        F_full = F_full + MultiPoly.var(f"t{j}", allv) * m.with_vars(allv)
    return F_full, f_target, la


def _composed_substitution(cls, datum):
    """x_k -> Psi_k(phi(x), t) as polynomials in (x, t)."""
    xv = cls.xvars
    out = {}
    for k, v in enumerate(xv):
        shift = datum.psi_shift.get(v)
        if shift is None:
            expr = datum.phi[v]
        else:
            expr = shift.subst({u: datum.phi[u] for u in xv if u in shift.vars})
        out[v] = expr
    return out


def check_unfolding_identity(cls_or_label, which: str) -> CheckOutcome:
    """F(Psi(phi(x), t), t, la) must be the unfolding at psi(t, la'):
    every non-tabulated x-monomial cancels and the coefficients of the
    tabulated monomials reproduce the printed parameter map exactly.

    For the partially printed map (tE8, psi3) the printed components and
    leading terms are compared; the unprinted remainders are only required
    to avoid the excluded parameters, and are reported in `detail`.
    """
    cls = _cls(cls_or_label)
    data = {d.label: d for d in symmetry_data(cls)}
    if which not in data:
        raise ValueError(f"{cls.label} has no stored symmetry {which!r}")
    datum = data[which]
    F_full, f_target, la = _lift_unfolding(cls, datum)
    name = f"{cls.label}:{which}"
    lhs = F_full.subst(_composed_substitution(cls, datum))
    monos = unfolding_monomials(cls)
    split = lhs.coefficient_split(cls.xvars)
    mono_expo = {}
    for j, m in enumerate(monos, start=1):
        mono_expo[next(iter(m.terms))] = f"t{j}"
    computed = {}
    residual = lhs - f_target.with_vars(lhs.vars)
    for e, tname in mono_expo.items():
        coeff = split.get(e)
        if coeff is not None:
            computed[tname] = coeff
            mono = MultiPoly(cls.xvars, {e: _field_one(datum)})
            residual = residual - mono.with_vars(lhs.vars) * coeff.with_vars(lhs.vars)
        else:
            computed[tname] = MultiPoly.zero(cls.tvars)
    if not residual.is_zero:
        return CheckOutcome(name, False, residual,
                            "uncancelled monomials outside the unfolding basis")
    details = []
    for tname in sorted(computed, key=lambda s: int(s[1:])):
        got = computed[tname].with_vars(cls.tvars)
        want = datum.psi[tname]
        if datum.printed == "partial" and tname in (datum.exclusions or {}):
            diff = got - want
            banned = set(datum.exclusions[tname])
            for expo, c in diff.terms.items():
                support = {v for v, e in zip(diff.vars, expo) if e}
                if support & banned:
                    return CheckOutcome(
                        name, False, diff,
                        f"remainder of {tname} touches excluded parameters")
                if isinstance(c, RatFunc) and not c.den_is_power_of(
                        _field_one(datum)):
                    return CheckOutcome(
                        name, False, diff,
                        f"remainder of {tname} has a denominator other than "
                        "powers of (1 - la)")
            details.append(f"{tname}: unprinted remainder with "
                           f"{len(diff.terms)} terms recorded")
            continue
        if got != want.with_vars(cls.tvars):
            return CheckOutcome(name, False, got - want.with_vars(cls.tvars),
                                f"computed {tname} disagrees with the table")
    return CheckOutcome(name, True, None, "; ".join(details))


def check_lambda_projection(cls_or_label, which: str) -> CheckOutcome:
    """The la-component of the symmetry: f_la(phi(x)) = f_{la'}(x) with
    la' = 1/la (psi2) or 1 - la (psi3), exactly over Q(nu)."""
    cls = _cls(cls_or_label)
    datum = {d.label: d for d in symmetry_data(cls)}[which]
    _, f_target, la = _lift_unfolding(cls, datum)
    f = normal_form(cls).subst({"la": la})
    lhs = f.subst({v: datum.phi[v] for v in cls.xvars})
    diff = lhs - f_target.with_vars(lhs.vars)
    ok = diff.is_zero
    return CheckOutcome(f"{cls.label}:{which}:la-projection", ok,
                        None if ok else diff)


def check_simple_symmetry(cls_or_label) -> CheckOutcome:
    """The D-family identities: the sign flip phi2 fixes the unfolding up
    to t_2 -> -t_2 for every D_mu, and for D_4 the order-3 coordinate
    change phi3 with its tabulated shift reproduces the tabulated
    parameter map."""
    cls = _cls(cls_or_label)
    if cls.family != "D":
        raise ValueError("check_simple_symmetry covers the D families")
    data = {d.label: d for d in symmetry_data(cls)}
    xv, tv = cls.xvars, cls.tvars
    allv = xv + tv
    f = normal_form(cls).with_vars(allv)
    F_full = f
    for j, m in enumerate(unfolding_monomials(cls), start=1):
        F_full = F_full + MultiPoly.var(f"t{j}", allv) * m.with_vars(allv)
    # phi2: F(phi2(x), psi2(t)) = F(x, t)
    d2 = data["phi2"]
    sub = {v: d2.phi[v].with_vars(allv) for v in xv}
    sub.update({t: d2.psi[t].with_vars(allv) for t in tv})
    diff = F_full.subst(sub) - F_full
    if not diff.is_zero:
        return CheckOutcome(f"{cls.label}:phi2", False, diff)
    if cls.mu != 4:
        return CheckOutcome(f"{cls.label}:phi2", True)
    # phi3 (D4 only): F(Psi3(phi3(x), t), t) = F(x, psi3(t))
    d3 = data["phi3"]
    lhs = F_full.subst(_composed_substitution(cls, d3))
    rhs = F_full.subst({t: d3.psi[t].with_vars(allv) for t in tv})
    diff = lhs - rhs
    ok = diff.is_zero
    return CheckOutcome(f"{cls.label}:phi2+phi3", ok, None if ok else diff)


# ---------------------------------------------------------------------------
# extension to kappa = 0
# ---------------------------------------------------------------------------

# rho maps (t_j -> polynomial in s, kappa), the x0 rescale exponent, the
# cover degree c, the auxiliary y definitions and the extended form.
def _kappa_data(cls):
    xv = cls.xvars
    sv = tuple(f"s{j}" for j in range(1, cls.mu))
    vs = xv + sv + ("ka",)

    def P(text):
        return _parse_signed(text, vs)

    if cls.label == "tE6":
        rho = {
            "t1": P("s1"),
            "t2": P("ka^2 * s2 + ka * s5 * s6 - s5^2"),
            "t3": P("s3"), "t4": P("s4"),
            "t5": P("ka^3 * s5"),
            "t6": P("ka * s6 - 2 * s5"),
            "t7": P("s7"),
        }
        x0_scale = -2
        c = 3
        yv = ("y0", "y1", "y2")
        ydefs = {
            "y0": P("x0 * x1 + x0 * s5") * _mono(vs, "ka", -1),
            "y1": (P("x0 * x1^2 + 2 * x0 * x1 * s5 + x0 * s5^2")
                   * _mono(vs, "ka", -2)),
            "y2": P("x0 * x2^2") * _mono(vs, "ka", -2),
        }
        ext = _parse_signed(
            "x0 * y0 + s6 * y0 - y1 - ka * x0 * x1^2 + x1^3 - y2"
            " + s1 + x0 * s2 + x1 * s3 + x2 * s4 + x1 * x2 * s7",
            vs + yv)
    elif cls.label == "tE7":
        rho = {
            "t1": P("s1"), "t2": P("ka * s2"), "t3": P("s3"),
            "t4": P("ka^2 * s4"), "t5": P("s5"), "t6": P("s6"),
            "t7": P("ka * s7"), "t8": P("s8"),
        }
        x0_scale = -1
        c = 2
        yv = ("y",)
        ydefs = {"y": P("x0 * x1") * _mono(vs, "ka", -1)}
        ext = _parse_signed(
            "x0^2 * y - ka^2 * y^2 - y^2 + x1^2 * y"
            " + s1 + x0 * s2 + x1 * s3 + x0^2 * s4 + y * s5 + x1^2 * s6"
            " + x0 * y * s7 + x1 * y * s8",
            vs + yv)
    elif cls.label == "tE8":
        rho = {
            "t1": P("s1"), "t2": P("ka * s2"), "t3": P("ka^2 * s3"),
            "t4": (P("s4") - (P("s6 * s9") * F(1, 2) + P("s7 * s9^2") * F(1, 4)
                              + P("s9^4") * F(1, 16)) * _mono(vs, "ka", -1)),
            "t5": P("ka^3 * s5"),
            "t6": P("s6"), "t7": P("ka * s7"),
            "t8": P("s8") - P("s9^2") * F(1, 4) * _mono(vs, "ka", -2),
            "t9": P("s9") * _mono(vs, "ka", -1),
        }
        x0_scale = -1
        c = 3
        yv = ("y",)
        ydefs = {"y": (P("x0 * x1") - P("x1 * s9") * F(1, 2))
                 * _mono(vs, "ka", -1)}
        ext = _parse_signed(
            "x0^3 * y + 1/2 * x0^2 * s9 * y + 1/4 * x0 * s9^2 * y"
            " + 1/8 * s9^3 * y + x0 * s7 * y + 1/2 * s9 * s7 * y + s6 * y"
            " - ka * x0^2 * x1^2 - y^2 + x1^3"
            " + s1 + x0 * s2 + x0^2 * s3 + x1 * s4 + x0^3 * s5 + x1^2 * s8",
            vs + yv)
    else:
        raise ValueError("kappa extension is defined for the elliptic classes")
    return rho, x0_scale, c, ydefs, ext, vs, yv


def _mono(vs, name, e):
    return MultiPoly(vs, {tuple(e if v == name else 0 for v in vs): F(1)})


def _parse_signed(text, vs):
    from .polyalg import parse_poly
    return parse_poly(text, vs)


def check_kappa_extension(cls_or_label) -> CheckOutcome:
    """Pull the unfolding back along la = kappa^c and x0 -> kappa^e x0 with
    the tabulated parameter rescale rho; the result, rewritten through the
    auxiliary y-variables, must equal the tabulated extended form, which is
    polynomial in kappa (so the family extends to kappa = 0)."""
    cls = _cls(cls_or_label)
    rho, x0_scale, c, ydefs, ext, vs, yv = _kappa_data(cls)
    name = f"{cls.label}:kappa-extension"
    f = normal_form(cls)
    xv, tv = cls.xvars, cls.tvars
    allv = xv + tv + ("la",)
    F_full = f.with_vars(allv)
    for j, m in enumerate(unfolding_monomials(cls), start=1):
        F_full = F_full + MultiPoly.var(f"t{j}", allv) * m.with_vars(allv)
    sub = {"la": _mono(vs, "ka", c),
           "x0": _mono(vs, "x0", 1) * _mono(vs, "ka", x0_scale)}
    sub.update({t: rho[t] for t in tv})
    pulled = F_full.subst(sub)
    if ext.min_degree("ka") < 0:
        return CheckOutcome(name, False, ext,
                            "stored extended form is not polynomial in kappa")
    rewritten = ext.subst({y: ydefs[y] for y in yv})
    diff = pulled - rewritten
    ok = diff.is_zero
    detail = "extended form is kappa-polynomial and matches the pullback"
    return CheckOutcome(name, ok, None if ok else diff,
                        detail if ok else "pullback disagrees with the table")


# ---------------------------------------------------------------------------
# suite helpers
# ---------------------------------------------------------------------------

def identity_suite(labels=("D4", "D5", "tE6", "tE7", "tE8")) -> list:
    """Every stored symmetry and extension identity, as CheckOutcomes."""
    out = []
    for lab in labels:
        cls = sing_class(lab)
        if cls.family == "D":
            out.append(check_simple_symmetry(cls))
            continue
        for which in ("psi2", "psi3"):
            out.append(check_lambda_projection(cls, which))
            out.append(check_unfolding_identity(cls, which))
        out.append(check_kappa_extension(cls))
    return out


def jacobi_suite(labels=None, samples=5, seed=20240229) -> list:
    """Jacobi dimensions, symbolically and at random rational parameters."""
    labels = labels or ("A2", "A3", "A5", "D4", "D5", "E6", "E7", "E8",
                        "tE6", "tE7", "tE8")
    rng = random.Random(seed)
    out = []
    for lab in labels:
        cls = sing_class(lab)
        dim = jacobi_dimension(cls)
        ok = dim == cls.mu
        out.append(CheckOutcome(f"{lab}:jacobi-dim", ok,
                                None, f"symbolic dimension {dim}"))
        if cls.is_elliptic:
            for _ in range(samples):
                lam = F(rng.randint(2, 60), rng.randint(61, 120))
                dim = jacobi_dimension(cls, lam)
                out.append(CheckOutcome(f"{lab}:jacobi-dim@{lam}",
                                        dim == cls.mu, None,
                                        f"dimension {dim}"))
    return out
