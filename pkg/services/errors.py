"""
Exceções e avisos compartilhados pelos serviços e pelas identidades
"""


class DomainError(ValueError):
    """Argumento fora do domínio da operação (z <= 0, fatorial negativo, série divergente...)."""


class PoleInstance(DomainError):
    """A instância cai num polo de Gamma ou num zero de Pochhammer no denominador."""


class UsageError(ValueError):
    """Configuração ou flags inválidas; o CLI sai com status 2."""


class AccuracyWarning(UserWarning):
    """Limite de termos da série ou de subdivisões da quadratura atingido."""
