"""
Representação escalada (sinal + log da magnitude) e somas compensadas

Os termos K_{k-m-1}(z)(z/2)^{k+m} das somas simétricas estouram ou somem em
ponto flutuante para m+n grande ou z extremo; por isso cada termo circula
como ScaledReal e a soma fatoriza o maior logmag antes de acumular.
"""
import math
from dataclasses import dataclass


@dataclass(frozen=True)
class ScaledReal:
    """
    Valor sign * exp(logmag); logmag = -inf quando sign = 0

    Arredondar o log custa cerca de |logmag| * eps de erro relativo no valor, logo
    uma soma de dois termos de mesmo sinal fica dentro de (8 + 2 * max |logmag|) * eps,
    e não de 1 ulp como em float.
    """
    sign: int
    logmag: float

    @classmethod
    def zero(cls) -> "ScaledReal":
        return cls(0, -math.inf)

    @classmethod
    def from_float(cls, value: float) -> "ScaledReal":
        if value == 0:
            return cls.zero()
        if not math.isfinite(value):
            raise OverflowError(f"valor não finito: {value!r}")
        return cls(1 if value > 0 else -1, math.log(abs(value)))

    @classmethod
    def from_log(cls, sign: int, logmag: float) -> "ScaledReal":
        if sign == 0:
            return cls.zero()
        return cls(1 if sign > 0 else -1, float(logmag))

    def to_float(self) -> float:
        if self.sign == 0:
            return 0.0
        # exp estoura para logmag > ~709.78; o chamador recebe inf com o sinal certo
        try:
            return self.sign * math.exp(self.logmag)
        except OverflowError:
            return self.sign * math.inf

    def __float__(self) -> float:
        return self.to_float()

    def __neg__(self) -> "ScaledReal":
        return ScaledReal(-self.sign, self.logmag)

    def __mul__(self, other) -> "ScaledReal":
        if not isinstance(other, ScaledReal):
            other = ScaledReal.from_float(float(other))
        if self.sign == 0 or other.sign == 0:
            return ScaledReal.zero()
        return ScaledReal(self.sign * other.sign, self.logmag + other.logmag)

    __rmul__ = __mul__

    def __add__(self, other) -> "ScaledReal":
        if not isinstance(other, ScaledReal):
            other = ScaledReal.from_float(float(other))
        return scaled_sum([self, other])

    __radd__ = __add__

    def __sub__(self, other) -> "ScaledReal":
        if not isinstance(other, ScaledReal):
            other = ScaledReal.from_float(float(other))
        return scaled_sum([self, -other])

    def scale_log(self, logfactor: float) -> "ScaledReal":
        """Multiplica por exp(logfactor)"""
        if self.sign == 0:
            return self
        return ScaledReal(self.sign, self.logmag + logfactor)


class CompensatedSum:
    """
    Soma de Neumaier (Kahan melhorado): mantém o erro de arredondamento de
    cada adição num termo de correção
    """

    def __init__(self):
        self.total = 0.0
        self.carry = 0.0

    def add(self, value: float):
        t = self.total + value
        if abs(self.total) >= abs(value):
            self.carry += (self.total - t) + value
        else:
            self.carry += (value - t) + self.total
        self.total = t

    @property
    def value(self) -> float:
        return self.total + self.carry


def scaled_sum(terms) -> ScaledReal:
    """Soma compensada de ScaledReal fatorando o maior logmag"""
    return ScaledAccumulator(terms).value


class ScaledAccumulator:
    """
    Acumula termos ScaledReal na ordem dada e expõe o valor, a soma dos
    módulos (para o número de condição) e o maior termo
    """

    def __init__(self, terms=()):
        self.terms = []
        for term in terms:
            self.add(term)

    def add(self, term: ScaledReal):
        if not isinstance(term, ScaledReal):
            term = ScaledReal.from_float(float(term))
        self.terms.append(term)

    @property
    def count(self) -> int:
        return len(self.terms)

    @property
    def largest_logmag(self) -> float:
        live = [t.logmag for t in self.terms if t.sign != 0]
        return max(live) if live else -math.inf

    def _reduce(self, absolute: bool) -> ScaledReal:
        top = self.largest_logmag
        if top == -math.inf:
            return ScaledReal.zero()
        acc = CompensatedSum()
        for term in self.terms:
            if term.sign == 0:
                continue
            sign = 1 if absolute else term.sign
            acc.add(sign * math.exp(term.logmag - top))
        mantissa = acc.value
        if mantissa == 0:
            return ScaledReal.zero()
        return ScaledReal(1 if mantissa > 0 else -1, top + math.log(abs(mantissa)))

    @property
    def value(self) -> ScaledReal:
        return self._reduce(absolute=False)

    @property
    def abs_total(self) -> ScaledReal:
        return self._reduce(absolute=True)
