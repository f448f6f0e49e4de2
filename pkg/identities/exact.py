"""
Identidades combinatórias verificadas sem tolerância (racionais exatos)
"""
from fractions import Fraction

from services import exactcore
from identities.residual import exact_residual


def residual_lemma1(m: int, n: int):
    """Defeito do Lema 1 (simetria e grau) na grade 0..m x 0..m; aprovado se zero"""
    defect = exactcore.lemma1_defect(n, m, m)
    return exact_residual("lemma1", {"m": m, "n": n}, defect, Fraction(0))


def residual_eq18(m: int, n: int, a):
    """Eq. (18) reduzida por Gamma(1-a), com a racional"""
    a = Fraction(a)
    lhs, rhs = exactcore.eq18_sides(m, n, a)
    return exact_residual("eq18", {"m": m, "n": n, "a": a}, lhs, rhs)


def residual_eq19(m: int, n: int):
    lhs, rhs = exactcore.eq19_sides(m, n)
    return exact_residual("eq19", {"m": m, "n": n}, lhs, rhs)


def residual_eq22(p: int, n: int):
    """sum_{k<=n} (p+k)!/k! contra (n+p+1)!/((p+1) n!); p vem da grade m"""
    lhs, rhs = exactcore.eq22_sides(n, p)
    return exact_residual("eq22", {"m": p, "n": n}, lhs, rhs)


def residual_fsym(p: int, n: int):
    """Maior |F(n,p,q) - F(n,q,p)| para q <= p, com integralidade"""
    defect = exactcore.f_symmetry_defect(n, p)
    return exact_residual("fsym", {"m": p, "n": n}, defect, Fraction(0))
