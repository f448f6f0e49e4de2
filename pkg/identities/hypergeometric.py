"""
Somas simétricas de 3F2 (Eqs. 16, 17, 20), a forma fechada em argumento
unitário (Eq. 21) e a soma terminante em z = -1 de onde sai a Eq. (11)
"""
import math

from services.config import resolve_tolerance
from services.errors import DomainError, PoleInstance
from services.exactcore import binomial, factorial
from services.scaled import ScaledAccumulator, ScaledReal
from services.specfun import gamma_scaled, gauss_2f1, hyp_3f2
from identities.residual import make_residual, records_accuracy_warnings

DEFAULT_TOL = 1e-9


def _gamma_ratio(upper, lower) -> ScaledReal:
    """prod Gamma(upper) / prod Gamma(lower) com sinal"""
    sign, logmag = 1, 0.0
    for u in upper:
        g = gamma_scaled(u)
        sign, logmag = sign * g.sign, logmag + g.logmag
    for v in lower:
        g = gamma_scaled(v)
        sign, logmag = sign * g.sign, logmag - g.logmag
    return ScaledReal.from_log(sign, logmag)


def _symmetric_3f2_side(m: int, n: int, x: float, lam: float, z: float) -> ScaledAccumulator:
    # sum_{k=0}^{n} C(m+k+1, m) 3F2(k+1, m+2, x; 1, x+lam; z)
    acc = ScaledAccumulator()
    for k in range(n + 1):
        value = hyp_3f2(k + 1, m + 2, x, 1, x + lam, z)
        acc.add(binomial(m + k + 1, m) * ScaledReal.from_float(value))
    return acc


def _symmetric_3f2_residual(identity: str, m, n, x, lam, z, params: dict, tol_rel):
    lhs = _symmetric_3f2_side(m, n, x, lam, z)
    rhs = _symmetric_3f2_side(n, m, x, lam, z)
    return make_residual(identity, params, lhs, rhs, resolve_tolerance(tol_rel, DEFAULT_TOL))


@records_accuracy_warnings
def residual_eq16(m: int, n: int, x: float, lam: float, z: float, tol_rel: float = None):
    """Soma de 3F2(k+1, m+2, x; 1, x+lam; z) em (m,n) contra (n,m)"""
    return _symmetric_3f2_residual("eq16", m, n, x, lam, z,
                                   {"m": m, "n": n, "z": z, "x": x, "lambda": lam}, tol_rel)


@records_accuracy_warnings
def residual_eq20(m: int, n: int, a: float, b: float, z: float, tol_rel: float = None):
    """Forma explícita da Eq. (16) com x = a, lambda = b"""
    return _symmetric_3f2_residual("eq20", m, n, a, b, z,
                                   {"m": m, "n": n, "z": z, "a": a, "b": b}, tol_rel)


@records_accuracy_warnings
def residual_eq17(n: int, x: float, lam: float, z: float, tol_rel: float = None):
    """sum_{k=0}^{n} 3F2(k+1, 2, x; 1, x+lam; z)  contra  (n+1) 2F1(n+2, x; x+lam; z)"""
    lhs = _symmetric_3f2_side(0, n, x, lam, z)
    rhs = (n + 1) * gauss_2f1(n + 2, x, x + lam, z)
    return make_residual("eq17", {"n": n, "z": z, "x": x, "lambda": lam}, lhs, rhs,
                         resolve_tolerance(tol_rel, DEFAULT_TOL))


@records_accuracy_warnings
def residual_eq21(n: int, a: float, b: float, tol_rel: float = None):
    """
    sum_{k=0}^{n} 3F2(k+1, 2, a; 1, a+b; 1)
    contra (n+1) Gamma(b-n-2) Gamma(a+b) / (Gamma(a+b-n-2) Gamma(b))

    Raises:
        DomainError: b <= n + 2 (algum 3F2 unitário diverge)
    """
    if not b > n + 2:
        raise DomainError(f"Eq. (21) exige b > n + 2 (b = {b}, n = {n})")
    lhs = _symmetric_3f2_side(0, n, a, b, 1.0)
    rhs = _gamma_ratio((b - n - 2, a + b), (a + b - n - 2, b)).scale_log(math.log(n + 1))
    return make_residual("eq21", {"n": n, "a": a, "b": b}, lhs, rhs,
                         resolve_tolerance(tol_rel, DEFAULT_TOL))


@records_accuracy_warnings
def residual_3f2_minus_one(n: int, a: float, tol_rel: float = None):
    """
    3F2(-n, 1, a; 3-a, n+3; -1)
      = (n+2) n! / (2 (a-1) Gamma(a-2)) [Gamma(a-1)/(n+1)! + (-1)^n Gamma(a-n-2)]

    Raises:
        PoleInstance: a = 1 ou algum Gamma do lado direito num polo
    """
    if a == 1:
        raise PoleInstance("fator 1/(a-1) com a = 1")
    lhs = hyp_3f2(-n, 1, a, 3 - a, n + 3, -1.0)
    bracket = ScaledAccumulator([
        gamma_scaled(a - 1).scale_log(-math.log(factorial(n + 1))),
        (-1 if n % 2 else 1) * gamma_scaled(a - n - 2),
    ]).value
    rhs = bracket * _gamma_ratio((), (a - 2,)) * ((n + 2) * factorial(n) / (2.0 * (a - 1)))
    return make_residual("eq9_3f2", {"n": n, "a": a}, ScaledReal.from_float(lhs), rhs,
                         resolve_tolerance(tol_rel, DEFAULT_TOL))
