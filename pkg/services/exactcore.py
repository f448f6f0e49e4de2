"""
Aritmética exata (inteiros e racionais de precisão arbitrária) e verificação
sem tolerância das identidades combinatórias: F(n,p,q), Lema 1 e as somas
das Eqs. (18), (19) e (22)
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from services.config import FACTORIAL_CACHE_CAP
from services.errors import DomainError, PoleInstance

logger = logging.getLogger(__name__)

BigInt = int
BigRational = Fraction


def _build_factorial_table(cap: int) -> tuple:
    table = [1]
    for k in range(1, cap + 1):
        table.append(table[-1] * k)
    return tuple(table)


# Tupla imutável: pode ser compartilhada entre threads sem cópia
_FACTORIALS = _build_factorial_table(FACTORIAL_CACHE_CAP)


def _require_nonnegative(**values):
    for name, value in values.items():
        if not isinstance(value, int) or isinstance(value, bool):
            raise DomainError(f"{name} deve ser inteiro, recebido {value!r}")
        if value < 0:
            raise DomainError(f"{name} deve ser >= 0, recebido {value}")


def factorial(n: int) -> BigInt:
    """
    Fatorial exato; memoizado até FACTORIAL_CACHE_CAP, calculado sob demanda acima

    Args:
        n (int): inteiro não negativo

    Returns:
        int: n!
    """
    _require_nonnegative(n=n)
    if n < len(_FACTORIALS):
        return _FACTORIALS[n]
    return math.factorial(n)


def binomial(n: int, k: int) -> BigInt:
    """
    Coeficiente binomial exato C(n, k) para 0 <= k <= n
    """
    _require_nonnegative(n=n, k=k)
    if k > n:
        raise DomainError(f"binomial com k > n ({k} > {n})")
    return factorial(n) // (factorial(k) * factorial(n - k))


def pochhammer(a: Fraction, k: int) -> Fraction:
    """Símbolo de Pochhammer (a)_k = a(a+1)...(a+k-1) em racionais"""
    result = Fraction(1)
    for j in range(k):
        result *= a + j
    return result


def f_eval(n: int, p: int, q: int) -> BigRational:
    """
    Soma F(n,p,q) da Eq. (3):

        (n+q+1)!/(q!(q+1)!) * sum_{k=0}^{p} (q+k+1)!/(k+1)! * (n+k)!/k!

    Args:
        n (int): ordem (n >= 0; n = 0 aparece na série do Lema 2)
        p (int): limite superior da soma
        q (int): parâmetro do prefator

    Returns:
        Fraction: valor exato (sempre inteiro para argumentos inteiros)
    """
    _require_nonnegative(n=n, p=p, q=q)
    prefactor = Fraction(factorial(n + q + 1), factorial(q) * factorial(q + 1))
    total = 0
    for k in range(p + 1):
        total += (factorial(q + k + 1) // factorial(k + 1)) * (factorial(n + k) // factorial(k))
    value = prefactor * total
    if value.denominator != 1:
        raise ArithmeticError(f"F({n},{p},{q}) não é inteiro: {value}")
    return value


def lemma1_polynomial(n: int, p: int, q: int) -> BigRational:
    """P(p,q) = p! q! / (p+q+2)! * F(n,p,q)"""
    return Fraction(factorial(p) * factorial(q), factorial(p + q + 2)) * f_eval(n, p, q)


@dataclass(frozen=True)
class PolySample:
    """Amostra de P(p,q) na grade inteira 0 <= p <= pmax, 0 <= q <= qmax"""
    n: int
    pmax: int
    qmax: int
    values: tuple

    @classmethod
    def build(cls, n: int, pmax: int, qmax: int) -> "PolySample":
        values = tuple(
            tuple(lemma1_polynomial(n, p, q) for q in range(qmax + 1))
            for p in range(pmax + 1)
        )
        return cls(n=n, pmax=pmax, qmax=qmax, values=values)

    def at(self, p: int, q: int) -> Fraction:
        if p <= self.pmax and q <= self.qmax:
            return self.values[p][q]
        return lemma1_polynomial(self.n, p, q)

    def symmetry_defect(self) -> Fraction:
        """Maior |P(p,q) - P(q,p)| na grade"""
        defect = Fraction(0)
        for p in range(self.pmax + 1):
            for q in range(self.qmax + 1):
                defect = max(defect, abs(self.at(p, q) - self.at(q, p)))
        return defect

    def difference_defect(self, order: int) -> Fraction:
        """Maior |Delta_p^order P(p,q)| (diferença progressiva em p, q fixo)"""
        defect = Fraction(0)
        for q in range(self.qmax + 1):
            column = [self.values[p][q] for p in range(self.pmax + 1)]
            for _ in range(order):
                column = [b - a for a, b in zip(column, column[1:])]
            for value in column:
                defect = max(defect, abs(value))
        return defect


def lemma1_defect(n: int, pmax: int, qmax: int) -> Fraction:
    """
    Maior violação do Lema 1 na grade: simetria e grau <= n-1 em p

    Raises:
        DomainError: n < 1 ou grade pequena demais para certificar o grau
    """
    _require_nonnegative(n=n, pmax=pmax, qmax=qmax)
    if n < 1:
        raise DomainError("o Lema 1 vale para n >= 1")
    if pmax < n + 1 or qmax < n + 1:
        raise DomainError(f"grade pequena demais: pmax, qmax devem ser >= {n + 1}")
    sample = PolySample.build(n, pmax, qmax)
    return max(sample.symmetry_defect(), sample.difference_defect(n))


def verify_lemma1(n: int, pmax: int, qmax: int) -> bool:
    """P(p,q) simétrico e de grau <= n-1 na grade (exato)"""
    return lemma1_defect(n, pmax, qmax) == 0


def eq19_sides(m: int, n: int) -> tuple:
    """Lados da Eq. (19): sum_{k<=n} C(m+k+1, m) e sum_{k<=m} C(n+k+1, n)"""
    _require_nonnegative(m=m, n=n)
    lhs = sum(binomial(m + k + 1, m) for k in range(n + 1))
    rhs = sum(binomial(n + k + 1, n) for k in range(m + 1))
    return Fraction(lhs), Fraction(rhs)


def verify_eq19(m: int, n: int) -> bool:
    lhs, rhs = eq19_sides(m, n)
    return lhs == rhs


def eq22_sides(n: int, p: int) -> tuple:
    """Lados da Eq. (22): sum_{k<=n} (p+k)!/k! e (n+p+1)!/((p+1) n!)"""
    _require_nonnegative(n=n, p=p)
    lhs = sum(Fraction(factorial(p + k), factorial(k)) for k in range(n + 1))
    rhs = Fraction(factorial(n + p + 1), (p + 1) * factorial(n))
    return lhs, rhs


def verify_eq22(n: int, p: int) -> bool:
    lhs, rhs = eq22_sides(n, p)
    return lhs == rhs


def _eq18_side(outer: int, inner: int, a: Fraction) -> Fraction:
    # Gamma(k+1-a) -> (1-a)_k e Gamma(outer+2-a) -> (1-a)_{outer+1}, fator Gamma(1-a) cancelado
    base = 1 - a
    denominator = pochhammer(base, outer + 1)
    if denominator == 0:
        raise PoleInstance(f"(1-a)_{outer + 1} = 0 para a = {a}")
    total = Fraction(0)
    for k in range(outer + 1):
        total += Fraction(factorial(inner + k + 1), factorial(k) * factorial(k + 1)) * pochhammer(base, k)
    return Fraction(factorial(outer) * factorial(outer + 1)) / denominator * total


def eq18_sides(m: int, n: int, a) -> tuple:
    """
    Lados da Eq. (18) na forma reduzida por Gamma(1-a)

    Args:
        m (int): índice do lado direito
        n (int): índice do lado esquerdo
        a (Fraction | int | str): parâmetro racional

    Returns:
        tuple: (lhs, rhs) como Fraction

    Raises:
        PoleInstance: algum (1-a)_{j} do denominador se anula
    """
    _require_nonnegative(m=m, n=n)
    a = Fraction(a)
    lhs = _eq18_side(n, m, a)
    rhs = _eq18_side(m, n, a)
    return lhs, rhs


def verify_eq18(m: int, n: int, a) -> bool:
    lhs, rhs = eq18_sides(m, n, a)
    return lhs == rhs


def g_series_coeff(n: int, p: int, q: int) -> BigRational:
    """Coeficiente exato F(n,p,q)/(n!)^2 de z^n em G(p,q,z)"""
    _require_nonnegative(n=n, p=p, q=q)
    return f_eval(n, p, q) / factorial(n) ** 2


def f_symmetry_defect(n: int, p: int) -> Fraction:
    """
    Maior |F(n,p,q) - F(n,q,p)| para 0 <= q <= p; falha de integralidade conta como defeito 1
    """
    _require_nonnegative(n=n, p=p)
    defect = Fraction(0)
    for q in range(p + 1):
        try:
            forward = f_eval(n, p, q)
            backward = f_eval(n, q, p)
        except ArithmeticError as e:
            logger.warning("F não inteiro: %s", e)
            defect = max(defect, Fraction(1))
            continue
        defect = max(defect, abs(forward - backward))
    return defect
