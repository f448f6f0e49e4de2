"""
Soma ponderada de Gammas (Eq. 11) e sua inversa de Mellin em K (Eq. 14)
"""
import math

from services.config import resolve_tolerance
from services.errors import PoleInstance
from services.exactcore import factorial
from services.scaled import ScaledAccumulator, ScaledReal
from services.specfun import EvalPoint, bessel_k_family, gamma_sign, lngamma
from identities.residual import make_residual, records_accuracy_warnings

DEFAULT_TOL = 1e-9


def _gamma_pair(u: float, v: float) -> ScaledReal:
    return ScaledReal.from_log(gamma_sign(u) * gamma_sign(v), lngamma(u) + lngamma(v))


@records_accuracy_warnings
def residual_eq11(s: float, n: int, tol_rel: float = None):
    """
    sum_{k=0}^{n} (-1)^k (2 - delta_{k0}) Gamma(h-k) Gamma(h+k) / ((n-k)! (n+k)!)
    contra ((-1)^n / n!) Gamma(h) Gamma((s-n)/2), com h = (s+n)/2

    Raises:
        PoleInstance: algum argumento de Gamma é inteiro não positivo
    """
    half = 0.5 * (s + n)
    lhs = ScaledAccumulator()
    for k in range(n + 1):
        try:
            pair = _gamma_pair(half - k, half + k)
        except PoleInstance:
            raise PoleInstance(f"polo de Gamma no termo k = {k} (s = {s}, n = {n})")
        weight = 1 if k == 0 else 2
        sign = -1 if k % 2 else 1
        denominator = factorial(n - k) * factorial(n + k)
        lhs.add((sign * pair).scale_log(math.log(weight) - math.log(denominator)))
    try:
        closed = _gamma_pair(half, 0.5 * (s - n))
    except PoleInstance:
        raise PoleInstance(f"polo de Gamma((s-n)/2) no lado direito (s = {s}, n = {n})")
    rhs = ((-1 if n % 2 else 1) * closed).scale_log(-math.log(factorial(n)))
    return make_residual("eq11", {"n": n, "s": s}, lhs, rhs, resolve_tolerance(tol_rel, DEFAULT_TOL))


@records_accuracy_warnings
def residual_eq14(n: int, x: float, tol_rel: float = None):
    """
    K_n(x)  contra  (x/2)^n sum_{k=0}^{n} (-1)^{k+n} n! (2 - delta_{k0}) K_{2k}(x) / ((n-k)! (n+k)!)
    """
    EvalPoint(x=x)
    family = bessel_k_family(2 * n, x)
    log_half = math.log(0.5 * x)
    rhs = ScaledAccumulator()
    for k in range(n + 1):
        weight = 1 if k == 0 else 2
        sign = -1 if (k + n) % 2 else 1
        coeff = math.log(weight * factorial(n)) - math.log(factorial(n - k) * factorial(n + k))
        rhs.add((sign * family[2 * k]).scale_log(coeff + n * log_half))
    return make_residual("eq14", {"n": n, "x": x}, family[n], rhs, resolve_tolerance(tol_rel, DEFAULT_TOL))
