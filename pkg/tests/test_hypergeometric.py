import math

import pytest
from numpy.testing import assert_allclose

from identities import hypergeometric, whittaker
from services import specfun
from services.errors import DomainError, PoleInstance
from tests import oracles


class TestSymmetric3F2:

    def test_eq16_diagonal(self):
        for m in range(4):
            assert hypergeometric.residual_eq16(m, m, 1.5, 2.5, 0.4).abs_err == 0.0

    @pytest.mark.parametrize("m,n", [(0, 3), (2, 4), (4, 1)])
    def test_eq16_passes(self, m, n):
        assert hypergeometric.residual_eq16(m, n, 0.8, 1.2, 0.6).passed

    def test_eq16_swap_abs_err(self):
        forward = hypergeometric.residual_eq16(1, 3, 1.5, 2.5, 0.2)
        backward = hypergeometric.residual_eq16(3, 1, 1.5, 2.5, 0.2)
        assert forward.abs_err == backward.abs_err

    def test_eq20_known_instance(self):
        residual = hypergeometric.residual_eq20(1, 3, 0.7, 4.2, 0.3)
        assert residual.passed
        assert residual.params == {"m": 1, "n": 3, "z": 0.3, "a": 0.7, "b": 4.2}

    def test_eq20_zero_argument_is_binomial_sum(self):
        # todo 3F2 vale 1 em z = 0: sobra a soma binomial da Eq. (19)
        residual = hypergeometric.residual_eq20(2, 5, 0.7, 4.2, 0.0)
        expected = sum(math.comb(2 + k + 1, 2) for k in range(6))
        assert_allclose(residual.lhs, expected, rtol=1e-14)
        assert residual.rel_err <= 1e-14

    def test_eq17_single_term(self):
        residual = hypergeometric.residual_eq17(0, 1.5, 2.5, 0.4)
        assert residual.passed
        assert_allclose(residual.rhs, specfun.gauss_2f1(2, 1.5, 4.0, 0.4), rtol=1e-15)

    def test_eq17_known_instance(self):
        residual = hypergeometric.residual_eq17(3, 1.5, 2.5, 0.4, tol_rel=1e-9)
        assert residual.passed
        assert_allclose(residual.rhs, 4 * oracles.hyp2f1(5, 1.5, 4.0, 0.4), rtol=1e-10)

    def test_negative_argument(self):
        assert hypergeometric.residual_eq16(2, 3, 0.8, 1.2, -0.5).passed
        assert hypergeometric.residual_eq17(3, 0.8, 1.2, -0.5).passed


class TestUnitArgument:

    @pytest.mark.parametrize("n,a,b", [(0, 0.7, 6.5), (2, 1.3, 8.0), (4, 0.5, 10.5)])
    def test_eq21_passes(self, n, a, b):
        assert hypergeometric.residual_eq21(n, a, b).passed

    def test_eq21_against_oracle(self):
        residual = hypergeometric.residual_eq21(2, 1.3, 8.0)
        expected = sum(oracles.hyp3f2(k + 1, 2, 1.3, 1, 9.3, 1) for k in range(3))
        assert_allclose(residual.lhs, expected, rtol=1e-10)

    def test_eq21_divergent(self):
        with pytest.raises(DomainError):
            hypergeometric.residual_eq21(4, 0.5, 6.0)


class TestTerminatingMinusOne:

    @pytest.mark.parametrize("a", [0.5, 2.5, 4.7])
    def test_closed_form(self, a):
        for n in range(7):
            residual = hypergeometric.residual_3f2_minus_one(n, a)
            assert residual.passed, (n, a, residual.rel_err)

    def test_zero_order_is_one(self):
        residual = hypergeometric.residual_3f2_minus_one(0, 2.5)
        assert residual.lhs == 1.0
        assert_allclose(residual.rhs, 1.0, rtol=1e-13)

    def test_against_oracle(self):
        residual = hypergeometric.residual_3f2_minus_one(4, 0.5)
        assert_allclose(residual.lhs, oracles.hyp3f2(-4, 1, 0.5, 2.5, 7, -1), rtol=1e-13)

    def test_poles(self):
        with pytest.raises(PoleInstance):
            hypergeometric.residual_3f2_minus_one(2, 1.0)
        with pytest.raises(DomainError):
            hypergeometric.residual_3f2_minus_one(3, 2.0)


class TestWhittakerSums:

    def test_indices(self):
        assert whittaker._halved_indices(0, 0) == (-1.0, -0.5)
        assert whittaker._printed_indices(1, 0) == (-3.0, 0.0)

    def test_diagonal(self):
        for m in range(3):
            assert whittaker.residual_eq24(m, m, 2.0).abs_err == 0.0

    @pytest.mark.parametrize("m,n,z", [(0, 1, 2.0), (1, 3, 5.0), (4, 2, 0.5)])
    def test_passes(self, m, n, z):
        residual = whittaker.residual_eq24(m, n, z)
        assert residual.passed, residual.rel_err

    def test_against_oracle(self):
        z = 2.0
        expected = oracles.whitw(-1, -0.5, z) + math.sqrt(z) * oracles.whitw(-1.5, 0, z)
        assert_allclose(whittaker.residual_eq24(0, 1, z).lhs, expected, rtol=1e-7)

    def test_printed_indices_do_not_close(self):
        residual = whittaker.residual_eq24_printed(0, 1, 10.0)
        assert residual.passed is False

    def test_index_budget(self):
        with pytest.raises(DomainError):
            whittaker.residual_eq24(5, 1, 2.0)
        with pytest.raises(DomainError):
            whittaker.residual_eq24(1, 1, -2.0)
