"""
Residual: o veredito de uma instância de identidade (lhs, rhs, erros,
número de condição, aprovação e notas de diagnóstico)
"""
import functools
import logging
import math
import warnings
from dataclasses import dataclass, field, replace
from fractions import Fraction

from services.config import param_to_json
from services.errors import AccuracyWarning
from services.scaled import ScaledAccumulator

logger = logging.getLogger(__name__)

PARAM_ORDER = ("m", "n", "z", "x", "s", "a", "b", "lambda")
TINY = 1e-300
LOG_TINY = math.log(TINY)


@dataclass(frozen=True)
class IdentityInstance:
    """Nome da identidade e os parâmetros relevantes, na ordem canônica"""
    identity: str
    params: tuple = ()

    @classmethod
    def build(cls, identity: str, **params) -> "IdentityInstance":
        ordered = tuple((name, params[name]) for name in PARAM_ORDER if name in params)
        return cls(identity=identity, params=ordered)

    def as_dict(self) -> dict:
        return dict(self.params)


@dataclass(frozen=True)
class Residual:
    identity: str
    params: dict
    lhs: float
    rhs: float
    abs_err: float
    rel_err: float
    cond: float
    passed: bool
    notes: dict = field(default_factory=dict)

    @property
    def skipped(self) -> bool:
        return self.passed is None

    def to_dict(self) -> dict:
        """Registro serializável (não finitos viram None)"""
        return {
            "identity": self.identity,
            "params": {name: param_to_json(value) for name, value in self.params.items()},
            "lhs": _finite_or_none(self.lhs),
            "rhs": _finite_or_none(self.rhs),
            "abs_err": _finite_or_none(self.abs_err),
            "rel_err": _finite_or_none(self.rel_err),
            "cond": _finite_or_none(self.cond),
            "pass": self.passed,
            "notes": self.notes,
        }


def _finite_or_none(value):
    if value is None:
        return None
    value = float(value)
    return value if math.isfinite(value) else None


def _as_accumulator(side) -> ScaledAccumulator:
    if isinstance(side, ScaledAccumulator):
        return side
    return ScaledAccumulator([side])


def make_residual(identity: str, params: dict, lhs, rhs, tol_rel: float, notes: dict = None) -> Residual:
    """
    Monta o Residual de uma identidade numérica

    Args:
        identity (str): nome da identidade
        params (dict): parâmetros da instância
        lhs, rhs: ScaledAccumulator com os somandos de cada lado, ou ScaledReal/float
                  para lados em forma fechada (contam como um somando)
        tol_rel (float): tolerância relativa antes da escala pela condição
        notes (dict): notas extras

    Returns:
        Residual: aprovado se rel_err <= tol_rel * max(1, cond)
    """
    left, right = _as_accumulator(lhs), _as_accumulator(rhs)
    lhs_value, rhs_value = left.value, right.value
    diff = ScaledAccumulator([lhs_value, -rhs_value]).value

    scale_log = max(lhs_value.logmag, rhs_value.logmag, LOG_TINY)
    rel_err = 0.0 if diff.sign == 0 else math.exp(diff.logmag - scale_log)
    abs_total = max(left.abs_total.logmag, right.abs_total.logmag)
    cond = max(1.0, math.exp(min(abs_total - scale_log, 700.0)))

    all_notes = {
        "terms": left.count + right.count,
        "max_log_term": max(left.largest_logmag, right.largest_logmag),
    }
    if notes:
        all_notes.update(notes)
    if not math.isfinite(all_notes["max_log_term"]):
        all_notes["max_log_term"] = None

    return Residual(
        identity=identity,
        params=dict(params),
        lhs=lhs_value.to_float(),
        rhs=rhs_value.to_float(),
        abs_err=abs(diff.to_float()),
        rel_err=rel_err,
        cond=cond,
        passed=rel_err <= tol_rel * cond,
        notes=all_notes,
    )


def _fraction_to_float(value: Fraction) -> float:
    try:
        return float(value)
    except OverflowError:
        return math.copysign(math.inf, value)


def exact_residual(identity: str, params: dict, lhs: Fraction, rhs: Fraction, notes: dict = None) -> Residual:
    """Residual de uma identidade exata: aprovado só com igualdade racional"""
    lhs, rhs = Fraction(lhs), Fraction(rhs)
    diff = abs(lhs - rhs)
    scale = max(abs(lhs), abs(rhs))
    rel = diff / scale if scale else Fraction(0)
    all_notes = {"exact": True}
    if notes:
        all_notes.update(notes)
    return Residual(
        identity=identity,
        params=dict(params),
        lhs=_fraction_to_float(lhs),
        rhs=_fraction_to_float(rhs),
        abs_err=_fraction_to_float(diff),
        rel_err=_fraction_to_float(rel),
        cond=1.0,
        passed=diff == 0,
        notes=all_notes,
    )


def skipped_residual(identity: str, params: dict, reason: str) -> Residual:
    """Registro de um ponto da grade fora do domínio (polo, série divergente)"""
    return Residual(
        identity=identity,
        params=dict(params),
        lhs=None,
        rhs=None,
        abs_err=None,
        rel_err=None,
        cond=None,
        passed=None,
        notes={"skipped": reason},
    )


def records_accuracy_warnings(evaluator):
    """
    Decorador: captura os AccuracyWarning emitidos durante a avaliação e
    anexa as mensagens em notes['warnings']
    """
    @functools.wraps(evaluator)
    def wrapper(*args, **kwargs):
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", AccuracyWarning)
            residual = evaluator(*args, **kwargs)
        messages = [str(w.message) for w in caught if issubclass(w.category, AccuracyWarning)]
        if not messages:
            return residual
        for message in messages:
            logger.warning("%s %s: %s", residual.identity, residual.params, message)
        notes = dict(residual.notes)
        notes["warnings"] = messages
        return replace(residual, notes=notes)
    return wrapper
