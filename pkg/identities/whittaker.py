"""
Somas simétricas de funções de Whittaker

A família com índices pela metade,

    sum_{k=0}^{n} C(m+k+1, m) z^{(k+m)/2} W_{-(k+m+2)/2, (k-m-1)/2}(z),

é a transformada de Laplace de G(n, m, -t) e portanto simétrica em m <-> n.
A família com os índices inteiros W_{-k-m-2, k-m-1} continua disponível
como 'eq24_printed' e só é reportada.
"""
import math

from services.config import QUADRATURE_TOL_REL, resolve_tolerance
from services.errors import DomainError
from services.exactcore import binomial
from services.scaled import ScaledAccumulator
from services.specfun import EvalPoint, whittaker_w
from identities.residual import make_residual, records_accuracy_warnings

# Orçamento de precisão da quadratura de U
MAX_INDEX = 4


def _halved_indices(k: int, m: int) -> tuple:
    return -(k + m + 2) / 2.0, (k - m - 1) / 2.0


def _printed_indices(k: int, m: int) -> tuple:
    return float(-k - m - 2), float(k - m - 1)


def _whittaker_side(m: int, n: int, z: float, indices) -> ScaledAccumulator:
    log_z = math.log(z)
    acc = ScaledAccumulator()
    for k in range(n + 1):
        kappa, mu = indices(k, m)
        term = whittaker_w(kappa, mu, z).scale_log(0.5 * (k + m) * log_z)
        acc.add(binomial(m + k + 1, m) * term)
    return acc


def _whittaker_residual(identity: str, indices, m: int, n: int, z: float, tol_rel):
    EvalPoint(z=z)
    if m > MAX_INDEX or n > MAX_INDEX:
        raise DomainError(f"{identity} limitado a m, n <= {MAX_INDEX} (m = {m}, n = {n})")
    lhs = _whittaker_side(m, n, z, indices)
    rhs = _whittaker_side(n, m, z, indices)
    return make_residual(identity, {"m": m, "n": n, "z": z}, lhs, rhs,
                         resolve_tolerance(tol_rel, QUADRATURE_TOL_REL))


@records_accuracy_warnings
def residual_eq24(m: int, n: int, z: float, tol_rel: float = None):
    """Simetria da soma de W_{-(k+m+2)/2, (k-m-1)/2}(z) (Tricomi a = k+1)"""
    return _whittaker_residual("eq24", _halved_indices, m, n, z, tol_rel)


@records_accuracy_warnings
def residual_eq24_printed(m: int, n: int, z: float, tol_rel: float = None):
    """Mesma soma com W_{-k-m-2, k-m-1}(z) (Tricomi a = 2k + 3/2); em geral não fecha"""
    return _whittaker_residual("eq24_printed", _printed_indices, m, n, z, tol_rel)
