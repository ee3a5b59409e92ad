import json
from fractions import Fraction as F

import pytest

from singlat.lattice import (StokesMatrix, is_connected, mat_neg,
                             monodromy_from_stokes, tensor_rows)
from singlat.polyalg import MultiPoly, RatFunc, parse_poly
from singlat.singdata import (ALL_LABELS, SeedError, normal_form, seed_stokes,
                              sing_class, symmetry_data, tensor_stokes,
                              unfolding, unfolding_monomials, weights)


class TestClasses:
    def test_parse(self):
        assert sing_class("A3").mu == 3
        assert sing_class("D6").mu == 6
        assert sing_class("E8").mu == 8
        assert sing_class("tE7").mu == 9
        assert sing_class("tE6").nvars == 3

    def test_aliases(self):
        assert sing_class("E~6").label == "tE6"

    def test_invalid(self):
        for bad in ("A0", "D3", "E5", "tE9", "Q7"):
            with pytest.raises(ValueError):
                sing_class(bad)


class TestNormalForms:
    def test_a3_is_quartic(self):
        assert normal_form(sing_class("A3")) == parse_poly("x0^4", ("x0",))

    def test_d4(self):
        assert normal_form(sing_class("D4")) == \
            parse_poly("x0^3 + x0*x1^2", ("x0", "x1"))

    def test_te7_factored_form(self):
        # x0 x1 (x1 - x0)(x1 - la x0)
        vs = ("x0", "x1", "la")
        x0, x1, la = (MultiPoly.var(v, vs) for v in vs)
        assert normal_form(sing_class("tE7")) == x0 * x1 * (x1 - x0) * (x1 - la * x0)

    def test_te6_partial_display(self):
        # d/dx0 of the tE6 family: -(la+1) x1^2 + 2 la x0 x1 - x2^2
        f = normal_form(sing_class("tE6"))
        vs = ("x0", "x1", "x2", "la")
        want = parse_poly("- x1^2 - la*x1^2 + 2*la*x0*x1 - x2^2", vs)
        assert f.partial("x0") == want

    def test_quasihomogeneous_of_degree_one(self):
        for label in ALL_LABELS:
            cls = sing_class(label)
            w = weights(cls)
            f = normal_form(cls)
            vw = dict(w.var_weights)
            for expo in f.terms:
                d = sum(vw.get(v, F(0)) * e for v, e in zip(f.vars, expo))
                assert d == 1, (label, expo)


class TestUnfoldings:
    def test_a2_unfolding(self):
        u = unfolding(sing_class("A2"))
        assert u == parse_poly("x0^3 + t1 + t2*x0", ("x0", "t1", "t2"))

    def test_monomial_counts(self):
        for label in ALL_LABELS:
            cls = sing_class(label)
            want = cls.mu - 1 if cls.is_elliptic else cls.mu
            assert len(unfolding_monomials(cls)) == want, label

    def test_te6_last_monomial(self):
        ms = unfolding_monomials(sing_class("tE6"))
        assert ms[-1] == parse_poly("x1*x2", ("x0", "x1", "x2"))

    def test_degree_pairing(self):
        for label in ALL_LABELS:
            cls = sing_class(label)
            w = weights(cls)
            for j, m in enumerate(unfolding_monomials(cls), start=1):
                assert w.poly_degree(m) == 1 - w.t_weights[j - 1], (label, j)


class TestWeights:
    def test_t1_always_one(self):
        for label in ALL_LABELS:
            assert weights(sing_class(label)).t_weights[0] == 1

    def test_e8_row(self):
        assert weights(sing_class("E8")).t_weights == \
            (F(1), F(4, 5), F(2, 3), F(3, 5), F(7, 15), F(2, 5), F(4, 15),
             F(1, 15))

    def test_elliptic_half_sums(self):
        for label, val in (("tE6", F(27, 4)), ("tE7", F(25, 3)),
                           ("tE8", F(101, 10))):
            w = weights(sing_class(label))
            assert sum(F(1) / t for t in w.t_weights[1:]) / 2 == val

    def test_coxeter_numbers(self):
        assert weights(sing_class("A5")).coxeter_number == 6
        assert weights(sing_class("D6")).coxeter_number == 10
        assert weights(sing_class("E8")).coxeter_number == 30


class TestSymmetryData:
    def test_te6_psi2_scales_t5(self):
        datum = {d.label: d for d in symmetry_data(sing_class("tE6"))}["psi2"]
        # la = nu^2; the t5 component is la^-2 t5 = nu^-4 t5
        comp = datum.psi["t5"]
        (expo, coeff), = comp.terms.items()
        assert expo == (0, 0, 0, 0, 1, 0, 0)
        assert coeff == RatFunc.gen("nu") ** -4

    def test_d_family_phi2(self):
        datum = symmetry_data(sing_class("D6"))[0]
        assert datum.label == "phi2"
        assert datum.psi["t2"] == parse_poly("- t2", sing_class("D6").tvars)
        assert datum.psi["t3"] == parse_poly("t3", sing_class("D6").tvars)

    def test_d4_has_phi3_over_gauss(self):
        data = {d.label: d for d in symmetry_data(sing_class("D4"))}
        assert set(data) == {"phi2", "phi3"}
        assert data["phi3"].cyclo is not None

    def test_te7_root_orders(self):
        data = {d.label: d for d in symmetry_data(sing_class("tE7"))}
        assert data["psi2"].root_order == 4    # la = nu^4 clears la^(1/4)
        assert data["psi3"].root_order == 1

    def test_te8_partial_print(self):
        data = {d.label: d for d in symmetry_data(sing_class("tE8"))}
        assert data["psi3"].printed == "partial"
        assert "t1" in data["psi3"].exclusions


class TestSeeds:
    def test_a_family_builtin(self):
        rec = seed_stokes("A6")
        assert rec.provenance == "builtin"
        assert rec.stokes.rows == StokesMatrix.chain(6).rows

    def test_d4_is_tensor_square(self):
        rec = seed_stokes("D4")
        assert rec.provenance == "tensor-derived"
        a2 = StokesMatrix.chain(2)
        assert rec.stokes.rows == tensor_stokes(a2, a2).rows

    def test_external_seeds_validate(self):
        for label in ("D5", "D8", "E6", "E7", "E8", "tE6", "tE7", "tE8"):
            rec = seed_stokes(label)
            assert rec.provenance == "external-file"
            assert rec.source

    def test_entry_bounds(self):
        for label in ALL_LABELS:
            cls = sing_class(label)
            bound = 2 if cls.is_elliptic else 1
            assert seed_stokes(label).stokes.entry_bound() <= bound

    def test_missing_seed_dir_errors(self, monkeypatch, tmp_path):
        monkeypatch.setenv("SINGLAT_SEED_DIR", str(tmp_path))
        with pytest.raises(SeedError):
            seed_stokes("E7")

    def test_corrupt_seed_rejected(self, monkeypatch, tmp_path):
        doc = {"class": "E7", "mu": 7, "source": "test",
               "upper": [[0] * (6 - i) for i in range(6)]}  # disconnected
        (tmp_path / "e7.json").write_text(json.dumps(doc))
        monkeypatch.setenv("SINGLAT_SEED_DIR", str(tmp_path))
        with pytest.raises(SeedError):
            seed_stokes("E7")


class TestTensor:
    def test_unit(self):
        s = seed_stokes("A3").stokes
        assert tensor_stokes(s, StokesMatrix.identity(1)).rows == s.rows

    def test_a2_square_entries(self):
        k = tensor_stokes(StokesMatrix.chain(2), StokesMatrix.chain(2))
        assert k.rows == ((1, -1, -1, 1), (0, 1, 0, -1),
                          (0, 0, 1, -1), (0, 0, 0, 1))
        assert is_connected(k)

    def test_monodromy_tensors_with_suspension_sign(self):
        # at the fixed dimension parity, adding variables contributes the
        # suspension sign: M(S1 x S2) = -(M1 x M2)
        for l1, l2 in (("A2", "A2"), ("A3", "A2"), ("A2", "A4")):
            s1 = seed_stokes(l1).stokes
            s2 = seed_stokes(l2).stokes
            mk = monodromy_from_stokes(tensor_stokes(s1, s2)).rows
            m1 = monodromy_from_stokes(s1).rows
            m2 = monodromy_from_stokes(s2).rows
            assert mk == mat_neg(tensor_rows(m1, m2))

    def test_factor_blocks_in_diagram(self):
        # vertices {0..mu2-1} carry a copy of the second factor's diagram
        s1, s2 = seed_stokes("A3").stokes, seed_stokes("A2").stokes
        k = tensor_stokes(s1, s2)
        for i in range(2):
            for j in range(i + 1, 2):
                assert k.rows[i][j] == s2.rows[i][j]
