"""
Versões oscilantes do Teorema 1 (z = -ix): somas com J e Y, e o corolário
para a combinação C = aJ + bY
"""
import math

from services.config import resolve_tolerance
from services.exactcore import binomial, factorial
from services.scaled import ScaledAccumulator, ScaledReal
from services.specfun import EvalPoint, bessel_j_family, bessel_y_family, signed_order
from identities.residual import make_residual, records_accuracy_warnings

DEFAULT_TOL = 1e-9

# Sinal (-1)^m impresso em cada lado; a troca m <-> n vale sem fator extra
SIGN_CONVENTION = "(-1)^m em cada lado, sem (-1)^(m+n) adicional"


def _theorem2_terms(m: int, n: int, x: float, family) -> ScaledAccumulator:
    log_half = math.log(0.5 * x)
    sign = -1 if m % 2 else 1
    acc = ScaledAccumulator()
    for k in range(n + 1):
        coeff = factorial(n + 1) // factorial(k) * binomial(m + k + 1, m)
        value = ScaledReal.from_float(signed_order(family, k - m - 1))
        acc.add((sign * value).scale_log(math.log(coeff) + (k + m) * log_half))
    return acc


def _theorem2_residual(identity: str, family_fn, m: int, n: int, x: float, tol_rel):
    EvalPoint(x=x)
    family = family_fn(max(m, n) + 1, x)
    lhs = _theorem2_terms(m, n, x, family)
    rhs = _theorem2_terms(n, m, x, family)
    return make_residual(identity, {"m": m, "n": n, "x": x}, lhs, rhs,
                         resolve_tolerance(tol_rel, DEFAULT_TOL),
                         notes={"sign_convention": SIGN_CONVENTION})


@records_accuracy_warnings
def residual_theorem2_j(m: int, n: int, x: float, tol_rel: float = None):
    """(-1)^m (n+1)! sum (1/k!) C(m+k+1,m) J_{k-m-1}(x) (x/2)^{k+m} em (m,n) contra (n,m)"""
    return _theorem2_residual("theorem2_j", bessel_j_family, m, n, x, tol_rel)


@records_accuracy_warnings
def residual_theorem2_y(m: int, n: int, x: float, tol_rel: float = None):
    """Mesma soma com Y_{k-m-1}(x)"""
    return _theorem2_residual("theorem2_y", bessel_y_family, m, n, x, tol_rel)


def _corollary_family(a: float, b: float, order: int, x: float) -> list:
    j_family = bessel_j_family(order, x)
    y_family = bessel_y_family(order, x)
    return [a * j + b * y for j, y in zip(j_family, y_family)]


@records_accuracy_warnings
def residual_corollary(a: float, b: float, n: int, x: float, tol_rel: float = None):
    """
    Corolário com C_nu = a J_nu + b Y_nu

    Args:
        a (float): peso de J
        b (float): peso de Y
        n (int): limite superior
        x (float): argumento positivo

    Returns:
        Residual: sum_{k=0}^{n} (1/k!) C_{k-1}(x) (x/2)^k  contra  -(1/n!) C_{n+1}(x) (x/2)^n
    """
    EvalPoint(x=x)
    family = _corollary_family(a, b, n + 1, x)
    log_half = math.log(0.5 * x)
    lhs = ScaledAccumulator()
    for k in range(n + 1):
        value = ScaledReal.from_float(signed_order(family, k - 1))
        lhs.add(value.scale_log(k * log_half - math.log(factorial(k))))
    tail = ScaledReal.from_float(signed_order(family, n + 1))
    rhs = (-tail).scale_log(n * log_half - math.log(factorial(n)))
    return make_residual("corollary", {"n": n, "x": x, "a": a, "b": b}, lhs, rhs,
                         resolve_tolerance(tol_rel, DEFAULT_TOL))
