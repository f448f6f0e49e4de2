"""
Somas simétricas em K: recorrência base K_2 = K_0 + (2/z) K_1, Teorema 1
e a soma da Eq. (5)

    (n+1)! sum_{k=0}^{n} (1/k!) C(m+k+1, m) K_{k-m-1}(z) (z/2)^{k+m}

é simétrica na troca m <-> n.
"""
import math

from services.config import resolve_tolerance
from services.exactcore import binomial, factorial
from services.scaled import ScaledAccumulator, ScaledReal
from services.specfun import EvalPoint, bessel_k_family
from identities.residual import make_residual, records_accuracy_warnings

DEFAULT_TOL = 1e-9


def _theorem1_terms(m: int, n: int, z: float, family: list) -> ScaledAccumulator:
    # Termos em ordem crescente de k; coeficientes inteiros exatos antes do log
    log_half = math.log(0.5 * z)
    acc = ScaledAccumulator()
    for k in range(n + 1):
        coeff = factorial(n + 1) // factorial(k) * binomial(m + k + 1, m)
        bessel = family[abs(k - m - 1)]
        acc.add(bessel.scale_log(math.log(coeff) + (k + m) * log_half))
    return acc


def sum_theorem1(m: int, n: int, z: float) -> ScaledReal:
    """
    Lado esquerdo do Teorema 1 em aritmética escalada

    Args:
        m (int): índice do binomial e do deslocamento de ordem
        n (int): limite superior da soma
        z (float): argumento positivo

    Returns:
        ScaledReal: valor da soma
    """
    EvalPoint(z=z)
    family = bessel_k_family(max(m, n) + 1, z)
    return _theorem1_terms(m, n, z, family).value


@records_accuracy_warnings
def residual_theorem1(m: int, n: int, z: float, tol_rel: float = None):
    """Compara a soma do Teorema 1 em (m, n) e em (n, m)"""
    EvalPoint(z=z)
    family = bessel_k_family(max(m, n) + 1, z)
    lhs = _theorem1_terms(m, n, z, family)
    rhs = _theorem1_terms(n, m, z, family)
    return make_residual("theorem1", {"m": m, "n": n, "z": z}, lhs, rhs,
                         resolve_tolerance(tol_rel, DEFAULT_TOL))


@records_accuracy_warnings
def residual_eq1(z: float, tol_rel: float = None):
    """K_2(z) contra K_0(z) + (2/z) K_1(z)"""
    k0, k1, k2 = bessel_k_family(2, z)
    rhs = ScaledAccumulator([k0, k1.scale_log(math.log(2.0 / z))])
    return make_residual("eq1", {"z": z}, k2, rhs, resolve_tolerance(tol_rel, DEFAULT_TOL))


@records_accuracy_warnings
def residual_eq5(n: int, z: float, tol_rel: float = None):
    """
    sum_{k=0}^{n} (1/k!) K_{k-1}(z) (z/2)^k  contra  (1/n!) K_{n+1}(z) (z/2)^n
    """
    family = bessel_k_family(n + 1, z)
    log_half = math.log(0.5 * z)
    lhs = ScaledAccumulator()
    for k in range(n + 1):
        lhs.add(family[abs(k - 1)].scale_log(k * log_half - math.log(factorial(k))))
    rhs = family[n + 1].scale_log(n * log_half - math.log(factorial(n)))
    return make_residual("eq5", {"n": n, "z": z}, lhs, rhs, resolve_tolerance(tol_rel, DEFAULT_TOL))
