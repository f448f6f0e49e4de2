"""
G(p, q, z) nas duas formas: soma finita de 2F1 e série de potências com
coeficientes exatos F(n,p,q)/(n!)^2
"""
import logging
import warnings
from dataclasses import replace
from fractions import Fraction

from services.config import resolve_tolerance
from services.errors import AccuracyWarning, DomainError
from services.exactcore import binomial, g_series_coeff
from services.scaled import CompensatedSum
from services.specfun import gauss_2f1
from identities.residual import make_residual, records_accuracy_warnings

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-9
SERIES_NMAX = 80
TRUNCATION_REL = 1e-12


def _require_disc(z: float):
    if not abs(z) < 1.0:
        raise DomainError(f"G(p,q,z) exige |z| < 1, recebido z = {z}")


def g_lemma2_finite(p: int, q: int, z: float) -> float:
    """sum_{k=0}^{p} C(q+k+1, q) 2F1(k+1, q+2; 1; z)"""
    _require_disc(z)
    acc = CompensatedSum()
    for k in range(p + 1):
        acc.add(binomial(q + k + 1, q) * gauss_2f1(k + 1, q + 2, 1, z))
    return acc.value


def g_lemma2_series(p: int, q: int, z: float, nmax: int = SERIES_NMAX) -> float:
    """
    sum_{n=0}^{nmax} F(n,p,q)/(n!)^2 z^n por Horner em racionais

    O valor binário de z entra exato e só o resultado final é arredondado;
    emite AccuracyWarning se o último termo não for desprezível.
    """
    _require_disc(z)
    exact_z = Fraction(z)
    coefficients = [g_series_coeff(n, p, q) for n in range(nmax + 1)]
    total = Fraction(0)
    for coeff in reversed(coefficients):
        total = total * exact_z + coeff
    value = float(total)
    last = abs(float(coefficients[-1] * exact_z ** nmax))
    if last > TRUNCATION_REL * max(1.0, abs(value)):
        warnings.warn(
            f"série de G({p},{q},{z}) truncada em n = {nmax} com termo {last:.3e}",
            AccuracyWarning,
        )
    return value


@records_accuracy_warnings
def residual_lemma2(p: int, q: int, z: float, tol_rel: float = None):
    """
    Simetria G(p,q,z) = G(q,p,z) na forma finita; a diferença para a série
    entra em notes['series_abs_err'] e também decide a aprovação
    """
    tol = resolve_tolerance(tol_rel, DEFAULT_TOL)
    forward = g_lemma2_finite(p, q, z)
    backward = g_lemma2_finite(q, p, z)
    series = g_lemma2_series(p, q, z)
    series_err = abs(forward - series)
    residual = make_residual("lemma2", {"m": p, "n": q, "z": z}, forward, backward, tol,
                             notes={"series_abs_err": series_err})
    series_ok = series_err <= tol * max(1.0, abs(forward))
    if not series_ok:
        logger.debug("G(%s,%s,%s): série e forma finita divergem em %.3e", p, q, z, series_err)
    return replace(residual, passed=residual.passed and series_ok)


@records_accuracy_warnings
def residual_lemma2_series(p: int, q: int, z: float, tol_rel: float = None):
    """Forma finita contra série truncada em SERIES_NMAX"""
    forward = g_lemma2_finite(p, q, z)
    series = g_lemma2_series(p, q, z)
    return make_residual("lemma2_series", {"m": p, "n": q, "z": z}, forward, series,
                         resolve_tolerance(tol_rel, DEFAULT_TOL))
