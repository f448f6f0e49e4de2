"""
Avaliadores em ponto flutuante: log-Gamma, Bessel J, Y, K de ordem inteira,
2F1 de Gauss, 3F2 generalizada, U de Tricomi e W de Whittaker

Metas de precisão (erro relativo):
    lngamma      1e-13 em [1e-3, 1e3]
    bessel_k     1e-12 para |nu| <= 40, z em [0.05, 50]
    bessel_j     1e-12 para |n| <= 40, x em [0.05, 50] (absoluto perto dos zeros)
    bessel_y     1e-11 para |n| <= 40, x em [0.1, 50]
    gauss_2f1    1e-11 para z em [0, 0.9]; z < 0 nas famílias das identidades
    hyp_3f2      1e-10 para z em [0, 0.9]
    tricomi_u    1e-8  para a <= 25, |b| <= 25, z em [0.2, 20]
    whittaker_w  1e-7  na família da Eq. (24)

Para z < 0 a série alternada cancela: o erro relativo cresce com
soma dos |termos| / |valor|, que fica moderada só com parâmetros pequenos.
"""
import logging
import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy import special
from scipy.integrate import quad, IntegrationWarning

from services.errors import AccuracyWarning, DomainError, PoleInstance
from services.scaled import CompensatedSum, ScaledReal

logger = logging.getLogger(__name__)

EULER_GAMMA = 0.57721566490153286060651209
SERIES_REL_TOL = 1e-17
SERIES_TERM_CAP = 200_000
UNIT_ARGUMENT_TERM_CAP = 1_000_000
QUAD_REL_TOL = 1e-10
QUAD_LIMIT = 200

# Regiões do K_0/K_1: série ascendente até K_SERIES_MAX, integral em cosh acima
K_SERIES_MAX = 2.0
K_TRAPEZOID_STEP = 0.1


@dataclass(frozen=True)
class EvalPoint:
    """Argumento z de K/W e argumento x de J/Y; ambos positivos quando informados"""
    z: float = None
    x: float = None

    def __post_init__(self):
        for name in ("z", "x"):
            value = getattr(self, name)
            if value is not None and not (math.isfinite(value) and value > 0):
                raise DomainError(f"{name} deve ser positivo e finito, recebido {value!r}")


def _is_nonpositive_integer(value: float) -> bool:
    return value <= 0 and float(value).is_integer()


# ---------------------------------------------------------------------------
# Gamma
# ---------------------------------------------------------------------------

def lngamma(x: float) -> float:
    """
    ln|Gamma(x)|

    Raises:
        PoleInstance: x inteiro não positivo
    """
    if _is_nonpositive_integer(x):
        raise PoleInstance(f"polo de Gamma em x = {x}")
    return float(special.gammaln(x))


def gamma_sign(x: float) -> int:
    """Sinal de Gamma(x) (companheiro de lngamma para x negativo)"""
    if _is_nonpositive_integer(x):
        raise PoleInstance(f"polo de Gamma em x = {x}")
    return int(special.gammasgn(x))


def gamma_scaled(x: float) -> ScaledReal:
    """Gamma(x) como ScaledReal"""
    return ScaledReal.from_log(gamma_sign(x), lngamma(x))


# ---------------------------------------------------------------------------
# Bessel K
# ---------------------------------------------------------------------------

def _k01_series(z: float) -> tuple:
    # Série ascendente com termo logarítmico (boa até z ~ 2)
    y = 0.25 * z * z
    log_half = math.log(0.5 * z)
    i0, i1 = CompensatedSum(), CompensatedSum()
    h0, h1 = CompensatedSum(), CompensatedSum()
    term0 = 1.0               # y^k / (k!)^2
    term1 = 1.0               # y^k / (k! (k+1)!)
    harmonic = 0.0            # H_k
    for k in range(200):
        if k > 0:
            term0 *= y / (k * k)
            term1 *= y / (k * (k + 1))
            harmonic += 1.0 / k
        psi_k1 = -EULER_GAMMA + harmonic
        psi_k2 = psi_k1 + 1.0 / (k + 1)
        i0.add(term0)
        i1.add(term1)
        h0.add(harmonic * term0)
        h1.add((psi_k1 + psi_k2) * term1)
        if term0 < SERIES_REL_TOL * i0.value and term1 < SERIES_REL_TOL * i1.value and k > 2:
            break
    big_i0 = i0.value
    big_i1 = 0.5 * z * i1.value
    k0 = -(log_half + EULER_GAMMA) * big_i0 + h0.value
    k1 = 1.0 / z + log_half * big_i1 - 0.25 * z * h1.value
    return math.log(k0), math.log(k1)


def _k01_integral(z: float) -> tuple:
    """log K_0, log K_1 por trapézio (h = 0.1) em int_0^inf exp(-z cosh t) cosh(nu t) dt; erro relativo < 5e-14 para z em (2, 50]"""
    t_max = math.acosh(1.0 + 45.0 / z)
    t = np.arange(0.0, t_max + K_TRAPEZOID_STEP, K_TRAPEZOID_STEP)
    weights = np.full(t.shape, K_TRAPEZOID_STEP)
    weights[0] *= 0.5
    decay = np.exp(-z * (np.cosh(t) - 1.0))
    s0 = float(np.sum(weights * decay))
    s1 = float(np.sum(weights * decay * np.cosh(t)))
    return math.log(s0) - z, math.log(s1) - z


def bessel_k_family(nmax: int, z: float) -> list:
    """
    K_0(z), ..., K_nmax(z) numa única recorrência ascendente (estável para K)

    Args:
        nmax (int): maior ordem
        z (float): argumento positivo

    Returns:
        list[ScaledReal]: valores escalados, um por ordem
    """
    EvalPoint(z=z)
    if nmax < 0:
        raise DomainError(f"nmax deve ser >= 0, recebido {nmax}")
    log_k0, log_k1 = _k01_series(z) if z <= K_SERIES_MAX else _k01_integral(z)
    logs = [log_k0, log_k1]
    # Razões r_nu = K_nu / K_{nu-1}: r_{nu+1} = 1/r_nu + 2 nu / z
    ratio = math.exp(log_k1 - log_k0)
    for nu in range(1, nmax):
        ratio = 1.0 / ratio + 2.0 * nu / z
        logs.append(logs[-1] + math.log(ratio))
    return [ScaledReal(1, value) for value in logs[: nmax + 1]]


def bessel_k(nu: int, z: float) -> ScaledReal:
    """K_nu(z) para nu inteiro (K_{-nu} = K_nu), escalado"""
    order = abs(int(nu))
    return bessel_k_family(order, z)[order]


# ---------------------------------------------------------------------------
# Bessel J e Y
# ---------------------------------------------------------------------------

def _miller_start(nmax: int, x: float) -> int:
    top = max(nmax, x, 1.0)
    start = int(top) + 20 + int(math.sqrt(60.0 * top))
    return start + (start % 2)


def _miller_j(nmax: int, x: float) -> np.ndarray:
    # Recorrência descendente J_{k-1} = (2k/x) J_k - J_{k+1}, normalizada por
    # J_0 + 2 sum J_{2k} = 1; reescala quando os valores crescem demais
    start = _miller_start(nmax, x)
    values = np.zeros(start + 2)
    values[start] = 1e-30
    for k in range(start, 0, -1):
        values[k - 1] = (2.0 * k / x) * values[k] - values[k + 1]
        if abs(values[k - 1]) > 1e250:
            values[k - 1:] *= 1e-250
    norm = CompensatedSum()
    norm.add(values[0])
    for k in range(2, start + 1, 2):
        norm.add(2.0 * values[k])
    return values[: start + 1] / norm.value


def bessel_j_family(nmax: int, x: float) -> np.ndarray:
    """J_0(x), ..., J_nmax(x) pelo algoritmo de Miller"""
    EvalPoint(x=x)
    return _miller_j(nmax, x)[: nmax + 1].copy()


def bessel_j(n: int, x: float) -> float:
    """J_n(x) para n inteiro (J_{-n} = (-1)^n J_n)"""
    order = abs(int(n))
    value = float(bessel_j_family(order, x)[order])
    if n < 0 and order % 2 == 1:
        return -value
    return value


def _y01_neumann(j_values: np.ndarray, x: float) -> tuple:
    # Séries de Neumann de Y_0 e Y_1 sobre os J já normalizados
    log_term = math.log(0.5 * x) + EULER_GAMMA
    even, odd = CompensatedSum(), CompensatedSum()
    top = len(j_values) - 1
    for k in range(1, top // 2 + 1):
        sign = -1.0 if k % 2 else 1.0
        even.add(sign * j_values[2 * k] / k)
        if 2 * k + 1 <= top:
            odd.add(sign * (2 * k + 1) * j_values[2 * k + 1] / (k * (k + 1)))
    y0 = (2.0 / math.pi) * (log_term * j_values[0] - 2.0 * even.value)
    y1 = (2.0 / math.pi) * (-j_values[0] / x + (log_term - 1.0) * j_values[1] - odd.value)
    return y0, y1


def bessel_y_family(nmax: int, x: float) -> np.ndarray:
    """Y_0(x), ..., Y_nmax(x): Y_0, Y_1 por Neumann e recorrência ascendente"""
    EvalPoint(x=x)
    j_values = _miller_j(max(nmax, 1), x)
    y0, y1 = _y01_neumann(j_values, x)
    values = np.empty(max(nmax, 1) + 1)
    values[0], values[1] = y0, y1
    for k in range(1, nmax):
        values[k + 1] = (2.0 * k / x) * values[k] - values[k - 1]
    return values[: nmax + 1].copy()


def bessel_y(n: int, x: float) -> float:
    """Y_n(x) para n inteiro (Y_{-n} = (-1)^n Y_n)"""
    order = abs(int(n))
    value = float(bessel_y_family(order, x)[order])
    if n < 0 and order % 2 == 1:
        return -value
    return value


def signed_order(family, nu: int) -> float:
    """Lê a ordem nu (possivelmente negativa) de uma família J ou Y de ordens >= 0"""
    order = abs(nu)
    value = float(family[order])
    if nu < 0 and order % 2 == 1:
        return -value
    return value


# ---------------------------------------------------------------------------
# Séries hipergeométricas
# ---------------------------------------------------------------------------

def _check_lower(lowers):
    for b in lowers:
        if _is_nonpositive_integer(b):
            raise DomainError(f"parâmetro inferior {b} é inteiro não positivo")


def _hyp_series(uppers, lowers, z: float, cap: int = SERIES_TERM_CAP) -> float:
    """Soma compensada de pFq(uppers; lowers; z) termo a termo"""
    acc = CompensatedSum()
    acc.add(1.0)
    term = 1.0
    j = 0
    while True:
        num = 1.0
        for a in uppers:
            num *= a + j
        den = float(j + 1)
        for b in lowers:
            den *= b + j
        ratio = num / den * z
        term *= ratio
        j += 1
        if term == 0.0:
            break
        acc.add(term)
        # Só para quando o termo é desprezível e a sequência já decresce
        next_num = 1.0
        for a in uppers:
            next_num *= a + j
        next_den = float(j + 1)
        for b in lowers:
            next_den *= b + j
        if abs(term) <= SERIES_REL_TOL * abs(acc.value) and abs(next_num / next_den * z) < 1.0:
            break
        if j >= cap:
            warnings.warn(
                f"série {len(uppers)}F{len(lowers)} truncada em {cap} termos (z = {z})",
                AccuracyWarning,
            )
            break
    return acc.value


def gauss_2f1(a: float, b: float, c: float, z: float) -> float:
    """
    2F1(a, b; c; z) para |z| < 1

    Para z < 0 aplica Pfaff, F(a,b;c;z) = (1-z)^(-a) F(a, c-b; c; z/(z-1)),
    de modo que a série somada sempre tem argumento em [0, 1).

    Raises:
        DomainError: |z| >= 1 ou c inteiro não positivo
    """
    if not abs(z) < 1.0:
        raise DomainError(f"gauss_2f1 exige |z| < 1, recebido z = {z}")
    _check_lower([c])
    if z == 0.0:
        return 1.0
    if z > 0.0:
        return _hyp_series((a, b), (c,), z)
    w = z / (z - 1.0)
    # Prefere a variante que termina (parâmetro superior inteiro não positivo)
    if _is_nonpositive_integer(c - a) and not _is_nonpositive_integer(c - b):
        a, b = b, a
    return (1.0 - z) ** (-a) * _hyp_series((a, c - b), (c,), w)


def _thomae_unit(uppers, lowers, excess: float):
    """
    Relação de Thomae para 3F2 em z = 1, pivô no maior parâmetro superior

    Returns:
        float | None: valor transformado, ou None quando a transformação não ajuda
    """
    pivot = max(uppers)
    if pivot <= excess or pivot <= 0:
        return None
    others = list(uppers)
    others.remove(pivot)
    q, r = others
    new_lowers = (excess + q, excess + r)
    if any(_is_nonpositive_integer(v) for v in new_lowers):
        return None
    b1, b2 = lowers
    log_pref = (lngamma(b1) + lngamma(b2) + lngamma(excess)
                - lngamma(pivot) - lngamma(new_lowers[0]) - lngamma(new_lowers[1]))
    sign_pref = (gamma_sign(b1) * gamma_sign(b2) * gamma_sign(excess)
                 * gamma_sign(pivot) * gamma_sign(new_lowers[0]) * gamma_sign(new_lowers[1]))
    series = _hyp_series((b1 - pivot, b2 - pivot, excess), new_lowers, 1.0,
                         cap=UNIT_ARGUMENT_TERM_CAP)
    return sign_pref * math.exp(log_pref) * series


def hyp_3f2(a1: float, a2: float, a3: float, b1: float, b2: float, z: float) -> float:
    """
    3F2(a1, a2, a3; b1, b2; z)

    Args:
        a1, a2, a3 (float): parâmetros superiores
        b1, b2 (float): parâmetros inferiores (não inteiros não positivos)
        z (float): |z| < 1, ou z = 1 com excesso b1+b2-a1-a2-a3 > 0,
                   ou z = -1 com excesso > -1

    Returns:
        float: valor da série (AccuracyWarning se o limite de termos for atingido)
    """
    uppers = (a1, a2, a3)
    lowers = (b1, b2)
    _check_lower(lowers)
    if z == 0.0:
        return 1.0
    terminating = any(_is_nonpositive_integer(a) for a in uppers)
    if abs(z) < 1.0:
        return _hyp_series(uppers, lowers, z)
    if abs(z) > 1.0:
        raise DomainError(f"hyp_3f2 diverge para |z| > 1 (z = {z})")
    if terminating:
        return _hyp_series(uppers, lowers, z, cap=UNIT_ARGUMENT_TERM_CAP)
    excess = b1 + b2 - a1 - a2 - a3
    if z == 1.0:
        if not excess > 0:
            raise DomainError(f"3F2 em z = 1 diverge: excesso {excess} <= 0")
        transformed = _thomae_unit(uppers, lowers, excess)
        if transformed is not None:
            return transformed
        return _hyp_series(uppers, lowers, 1.0, cap=UNIT_ARGUMENT_TERM_CAP)
    if not excess > -1:
        raise DomainError(f"3F2 em z = -1 diverge: excesso {excess} <= -1")
    return _hyp_series(uppers, lowers, -1.0, cap=UNIT_ARGUMENT_TERM_CAP)


# ---------------------------------------------------------------------------
# Tricomi U e Whittaker W
# ---------------------------------------------------------------------------

def tricomi_u_log(a: float, b: float, z: float) -> float:
    """
    ln U(a, b, z) pela integral (1/Gamma(a)) int_0^inf e^{-zt} t^{a-1} (1+t)^{b-a-1} dt

    Raises:
        DomainError: a <= 0 ou z <= 0
    """
    if not a > 0:
        raise DomainError(f"tricomi_u exige a > 0, recebido a = {a}")
    EvalPoint(z=z)
    power = b - a - 1.0

    def log_integrand(t):
        return -z * t + (a - 1.0) * math.log(t) + power * math.log1p(t)

    centre = max(a - 1.0, 0.5) / z
    scale = log_integrand(centre)

    def integrand(t):
        if t <= 0.0:
            return 0.0
        return math.exp(log_integrand(t) - scale)

    split = centre + (10.0 + a) / z
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", IntegrationWarning)
        head, _ = quad(integrand, 0.0, split, epsabs=0.0, epsrel=QUAD_REL_TOL, limit=QUAD_LIMIT)
        tail, _ = quad(integrand, split, np.inf, epsabs=0.0, epsrel=QUAD_REL_TOL, limit=QUAD_LIMIT)
    if any(issubclass(w.category, IntegrationWarning) for w in caught):
        logger.debug("quadratura de U(%s, %s, %s) não convergiu", a, b, z)
        warnings.warn(
            f"quadratura de U({a}, {b}, {z}) atingiu o limite de {QUAD_LIMIT} subdivisões",
            AccuracyWarning,
        )
    return scale + math.log(head + tail) - lngamma(a)


def tricomi_u(a: float, b: float, z: float) -> float:
    """U(a, b, z) de Tricomi por quadratura adaptativa"""
    return math.exp(tricomi_u_log(a, b, z))


def whittaker_w(kappa: float, mu: float, z: float) -> ScaledReal:
    """
    W_{kappa,mu}(z) = e^{-z/2} z^{mu+1/2} U(mu - kappa + 1/2, 1 + 2 mu, z)

    Raises:
        DomainError: z <= 0 ou mu - kappa + 1/2 <= 0
    """
    EvalPoint(z=z)
    a = mu - kappa + 0.5
    if not a > 0:
        raise DomainError(f"whittaker_w exige mu - kappa + 1/2 > 0 (kappa={kappa}, mu={mu})")
    log_w = -0.5 * z + (mu + 0.5) * math.log(z) + tricomi_u_log(a, 1.0 + 2.0 * mu, z)
    return ScaledReal(1, log_w)
