import math
import warnings
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from numpy.testing import assert_allclose

from identities import catalog, exact, lemma2, mellin, theorem1, theorem2
from identities.residual import (IdentityInstance, exact_residual, make_residual,
                                 records_accuracy_warnings, skipped_residual)
from services import exactcore, specfun
from services.errors import AccuracyWarning, DomainError, PoleInstance, UsageError
from services.scaled import ScaledAccumulator
from tests import oracles


class TestResidual:

    def test_instance_canonical_order(self):
        instance = IdentityInstance.build("eq16", z=0.4, **{"lambda": 2.5}, x=1.5, n=3, m=1)
        assert [name for name, _ in instance.params] == ["m", "n", "z", "x", "lambda"]
        assert instance.as_dict()["lambda"] == 2.5

    def test_cond_floor_and_verdict(self):
        residual = make_residual("demo", {"n": 1}, 2.0, 2.0 + 1e-12, tol_rel=1e-9)
        assert residual.cond == 1.0
        assert residual.passed is True
        assert residual.notes["terms"] == 2

    def test_cond_reflects_cancellation(self):
        lhs = ScaledAccumulator([1e6, -1e6 + 1.0])
        residual = make_residual("demo", {}, lhs, 1.0, tol_rel=1e-9)
        assert residual.cond > 1e6
        assert residual.passed is True

    def test_failure(self):
        residual = make_residual("demo", {}, 1.0, 1.1, tol_rel=1e-9)
        assert residual.passed is False
        assert_allclose(residual.rel_err, 0.1 / 1.1, rtol=1e-12)
        assert_allclose(residual.abs_err, 0.1, rtol=1e-12)

    def test_abs_err_symmetric_under_swap(self):
        a = ScaledAccumulator([0.3, 1.7, -0.25])
        b = ScaledAccumulator([1.75])
        forward = make_residual("demo", {}, a, b, tol_rel=1e-9)
        backward = make_residual("demo", {}, b, a, tol_rel=1e-9)
        assert forward.abs_err == backward.abs_err

    def test_exact_residual(self):
        ok = exact_residual("demo", {"m": 1}, Fraction(1, 3), Fraction(2, 6))
        assert ok.passed is True and ok.abs_err == 0.0 and ok.notes == {"exact": True}
        bad = exact_residual("demo", {"m": 1}, Fraction(1, 3), Fraction(1, 2))
        assert bad.passed is False

    def test_skipped_record(self):
        record = skipped_residual("eq11", {"n": 6, "s": 6.0}, "polo")
        assert record.skipped
        data = record.to_dict()
        assert data["pass"] is None and data["lhs"] is None
        assert data["notes"] == {"skipped": "polo"}

    def test_to_dict_params_and_non_finite(self):
        residual = make_residual("demo", {"a": Fraction(7, 3), "m": 2}, 1.0, 1.0, tol_rel=1e-9)
        data = residual.to_dict()
        assert data["params"] == {"a": "7/3", "m": 2}
        assert list(data) == ["identity", "params", "lhs", "rhs", "abs_err", "rel_err", "cond", "pass", "notes"]

    def test_warnings_recorded(self):
        @records_accuracy_warnings
        def noisy():
            warnings.warn("limite atingido", AccuracyWarning)
            return make_residual("demo", {}, 1.0, 1.0, tol_rel=1e-9)

        residual = noisy()
        assert residual.notes["warnings"] == ["limite atingido"]
        assert residual.passed is True


class TestTheorem1:

    def test_base_recurrence(self):
        for z in (0.1, 0.5, 2.0, 10.0, 45.0):
            assert theorem1.residual_eq1(z).passed

    @pytest.mark.parametrize("z", [0.3, 1.0, 4.0])
    def test_diagonal_is_exact(self, z):
        for m in range(6):
            assert theorem1.residual_theorem1(m, m, z).abs_err == 0.0

    def test_lowest_swap_is_recurrence(self):
        residual = theorem1.residual_theorem1(0, 1, 2.0)
        assert residual.passed
        assert residual.notes["terms"] == 3

    def test_against_oracle(self):
        value = theorem1.sum_theorem1(2, 5, 1.0).to_float()
        assert_allclose(value, oracles.theorem1_sum(2, 5, 1.0), rtol=1e-11)
        assert_allclose(value, theorem1.sum_theorem1(5, 2, 1.0).to_float(), rtol=1e-10)

    def test_known_instance(self):
        residual = theorem1.residual_theorem1(3, 7, 0.5, tol_rel=1e-9)
        assert residual.passed
        assert_allclose(residual.lhs, oracles.theorem1_sum(3, 7, 0.5), rtol=1e-11)

    def test_swap_abs_err_matches(self):
        forward = theorem1.residual_theorem1(2, 6, 3.0)
        backward = theorem1.residual_theorem1(6, 2, 3.0)
        assert forward.abs_err == backward.abs_err

    @pytest.mark.parametrize("z", [0.7, 2.0, 9.0])
    def test_scaled_matches_plain_float(self, z):
        m, n = 3, 6
        family = [v.to_float() for v in specfun.bessel_k_family(max(m, n) + 1, z)]
        plain = 0.0
        for k in range(n + 1):
            coeff = exactcore.factorial(n + 1) / exactcore.factorial(k) * exactcore.binomial(m + k + 1, m)
            plain += coeff * family[abs(k - m - 1)] * (z / 2) ** (k + m)
        assert_allclose(theorem1.sum_theorem1(m, n, z).to_float(), plain, rtol=1e-12)

    def test_large_orders_stay_finite(self):
        residual = theorem1.residual_theorem1(12, 12, 0.1)
        assert residual.abs_err == 0.0
        assert residual.notes["max_log_term"] is not None

    def test_domain(self):
        with pytest.raises(DomainError):
            theorem1.sum_theorem1(1, 2, 0.0)


class TestEq5:

    def test_single_term(self):
        assert theorem1.residual_eq5(0, 1.5).abs_err == 0.0

    @pytest.mark.parametrize("n", [1, 4, 10])
    def test_passes(self, n):
        assert theorem1.residual_eq5(n, 3.0, tol_rel=1e-10).passed

    def test_agrees_with_theorem1(self):
        for z in (0.2, 1.0, 3.0):
            for n in range(8):
                assert theorem1.residual_eq5(n, z).passed == theorem1.residual_theorem1(0, n, z).passed


class TestTheorem2:

    @pytest.mark.parametrize("evaluator", [theorem2.residual_theorem2_j, theorem2.residual_theorem2_y])
    def test_diagonal(self, evaluator):
        for m in range(5):
            assert evaluator(m, m, 2.5).abs_err == 0.0

    @pytest.mark.parametrize("evaluator", [theorem2.residual_theorem2_j, theorem2.residual_theorem2_y])
    def test_known_instance(self, evaluator):
        residual = evaluator(1, 4, 2.5, tol_rel=1e-8)
        assert residual.passed
        assert residual.notes["sign_convention"] == theorem2.SIGN_CONVENTION

    def test_odd_swap_needs_no_extra_sign(self):
        # m + n ímpar: um (-1)^(m+n) extra trocaria o sinal de um lado
        residual = theorem2.residual_theorem2_j(0, 1, 2.5)
        assert residual.passed
        assert abs(residual.lhs) > 1e-3

    def test_lowest_j_instance_is_recurrence(self):
        x = 2.5
        j0, j1, j2 = (specfun.bessel_j(n, x) for n in range(3))
        residual = theorem2.residual_theorem2_j(0, 1, x)
        # lado (0,1): 2 [J_{-1} + J_0 (x/2)]; lado (1,0): -2 J_{-2} (x/2)
        assert_allclose(residual.lhs, 2 * (-j1 + j0 * x / 2), rtol=1e-12)
        assert_allclose(residual.rhs, -x * j2, rtol=1e-12)


class TestCorollary:

    def test_pure_j(self):
        assert theorem2.residual_corollary(1.0, 0.0, 1, 3.0).passed

    @pytest.mark.parametrize("a,b,n,x", [(0.0, 1.0, 3, 2.0), (2.0, -1.0, 6, 5.0)])
    def test_passes(self, a, b, n, x):
        assert theorem2.residual_corollary(a, b, n, x).passed

    @settings(max_examples=60, deadline=None)
    @given(
        a=st.floats(min_value=-3.0, max_value=3.0),
        b=st.floats(min_value=-3.0, max_value=3.0),
        n=st.integers(min_value=0, max_value=6),
        x=st.floats(min_value=0.5, max_value=15.0),
    )
    def test_linearity(self, a, b, n, x):
        combined = theorem2.residual_corollary(a, b, n, x)
        pure_j = theorem2.residual_corollary(1.0, 0.0, n, x)
        pure_y = theorem2.residual_corollary(0.0, 1.0, n, x)
        for side in ("lhs", "rhs"):
            j_value, y_value = getattr(pure_j, side), getattr(pure_y, side)
            # soma dos |termos| de cada lado = cond * max(|lhs|, |rhs|)
            j_terms = pure_j.cond * max(abs(pure_j.lhs), abs(pure_j.rhs))
            y_terms = pure_y.cond * max(abs(pure_y.lhs), abs(pure_y.rhs))
            scale = abs(a) * j_terms + abs(b) * y_terms + 1e-300
            assert abs(getattr(combined, side) - (a * j_value + b * y_value)) <= 1e-12 * scale


class TestMellin:

    def test_eq11_single_term(self):
        residual = mellin.residual_eq11(3.7, 0)
        assert residual.abs_err == 0.0
        assert_allclose(residual.lhs, math.gamma(1.85) ** 2, rtol=1e-13)

    def test_eq11_integer_instance(self):
        residual = mellin.residual_eq11(5.0, 1)
        assert_allclose(residual.lhs, -2.0, rtol=1e-13)
        assert_allclose(residual.rhs, -2.0, rtol=1e-13)
        assert residual.passed

    def test_eq11_known_instance(self):
        assert mellin.residual_eq11(3.7, 8, tol_rel=1e-10).passed

    def test_eq11_pole_names_term(self):
        with pytest.raises(PoleInstance, match="k = 6"):
            mellin.residual_eq11(6.0, 6)

    @pytest.mark.parametrize("n,x", [(0, 2.0), (1, 0.7), (12, 4.0)])
    def test_eq14(self, n, x):
        assert mellin.residual_eq14(n, x).passed

    def test_eq14_single_term(self):
        assert mellin.residual_eq14(0, 3.0).abs_err == 0.0


class TestLemma2:

    def test_zero_argument_is_binomial_sum(self):
        for p in range(5):
            for q in range(5):
                expected = sum(exactcore.binomial(q + k + 1, q) for k in range(p + 1))
                assert lemma2.g_lemma2_finite(p, q, 0.0) == expected
                assert lemma2.g_lemma2_finite(q, p, 0.0) == expected

    def test_diagonal(self):
        assert lemma2.residual_lemma2(3, 3, 0.4).abs_err == 0.0

    def test_known_instance(self):
        residual = lemma2.residual_lemma2(2, 4, 0.3, tol_rel=1e-10)
        assert residual.passed
        assert residual.notes["series_abs_err"] <= 1e-10 * max(1.0, abs(residual.lhs))
        assert lemma2.residual_lemma2_series(2, 4, 0.3, tol_rel=1e-10).passed

    def test_series_truncation_warns(self):
        with pytest.warns(AccuracyWarning):
            lemma2.g_lemma2_series(3, 3, 0.95, nmax=10)

    def test_domain(self):
        with pytest.raises(DomainError):
            lemma2.g_lemma2_finite(1, 1, 1.0)


class TestExactWrappers:

    def test_lemma1(self):
        residual = exact.residual_lemma1(5, 3)
        assert residual.passed and residual.abs_err == 0.0

    def test_eq18_keeps_rational_parameter(self):
        residual = exact.residual_eq18(2, 3, Fraction(7, 3))
        assert residual.passed
        assert residual.to_dict()["params"]["a"] == "7/3"

    def test_eq19_eq22_fsym(self):
        assert exact.residual_eq19(4, 9).passed
        assert exact.residual_eq22(3, 5).passed
        assert exact.residual_fsym(6, 4).passed


class TestCatalog:

    def test_every_entry_imports(self):
        for nome in catalog.IDENTIDADES:
            assert callable(catalog.importar_identidade(nome))

    def test_unknown_identity(self):
        with pytest.raises(UsageError):
            catalog.importar_identidade("eq99")

    def test_evaluates_with_renamed_parameters(self):
        instance = IdentityInstance.build("lemma2", m=1, n=3, z=Fraction(1, 4))
        residual = catalog.avaliar_instancia(instance)
        assert residual.passed
        assert residual.params == {"m": 1, "n": 3, "z": 0.25}
        assert isinstance(residual.params["z"], float)

    def test_lambda_grid(self):
        instance = IdentityInstance.build("eq17", n=2, z=Fraction(2, 5), x=Fraction(3, 2),
                                          **{"lambda": Fraction(5, 2)})
        assert catalog.avaliar_instancia(instance).passed

    def test_pole_becomes_skipped(self):
        instance = IdentityInstance.build("eq11", n=6, s=Fraction(6))
        residual = catalog.avaliar_instancia(instance)
        assert residual.skipped
        assert "k = 6" in residual.notes["skipped"]

    def test_exact_identity_gets_rational(self):
        instance = IdentityInstance.build("eq18", m=3, n=2, a=Fraction(-3, 4))
        residual = catalog.avaliar_instancia(instance)
        assert residual.passed and residual.notes["exact"] is True

    def test_tolerance_override(self):
        # lados por quadraturas independentes: erro relativo nunca é zero
        instance = IdentityInstance.build("eq24", m=0, n=1, z=Fraction(2))
        default = catalog.avaliar_instancia(instance)
        strict = catalog.avaliar_instancia(instance, tol_rel=1e-18)
        assert default.passed is True
        assert strict.passed is False
        assert strict.rel_err == default.rel_err
