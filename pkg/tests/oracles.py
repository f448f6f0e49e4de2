"""
Oráculos de alta precisão (mpmath), independentes dos avaliadores do pacote
"""
import mpmath as mp

mp.mp.dps = 40


def besselk(nu, z):
    return float(mp.besselk(nu, z))


def log_besselk(nu, z):
    return float(mp.log(mp.besselk(nu, z)))


def near_zero(kind, n, x, radius=1e-6):
    """True quando J_n (kind "j") ou Y_n (kind "y") troca de sinal em [x - radius, x + radius]"""
    func = mp.besselj if kind == "j" else mp.bessely
    lo, hi = func(n, mp.mpf(x) - radius), func(n, mp.mpf(x) + radius)
    return lo == 0 or hi == 0 or (lo < 0) != (hi < 0)


def besselj(n, x):
    return float(mp.besselj(n, x))


def bessely(n, x):
    return float(mp.bessely(n, x))


def loggamma(x):
    return float(mp.log(abs(mp.gamma(x))))


def hyp2f1(a, b, c, z):
    return float(mp.hyp2f1(a, b, c, z))


def hyp3f2(a1, a2, a3, b1, b2, z):
    return float(mp.hyp3f2(a1, a2, a3, b1, b2, z))


def hyperu(a, b, z):
    return float(mp.hyperu(a, b, z))


def whitw(kappa, mu, z):
    return float(mp.whitw(kappa, mu, z))


def theorem1_sum(m, n, z):
    """Soma do Teorema 1 em 40 dígitos"""
    z = mp.mpf(z)
    total = mp.mpf(0)
    for k in range(n + 1):
        coeff = mp.factorial(n + 1) / mp.factorial(k) * mp.binomial(m + k + 1, m)
        total += coeff * mp.besselk(k - m - 1, z) * (z / 2) ** (k + m)
    return float(total)
