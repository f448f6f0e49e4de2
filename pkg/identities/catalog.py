"""
Registro das identidades disponíveis para o verificador

Cada entrada diz onde está o avaliador (importado sob demanda), quais grades
ele consome e como os nomes da grade viram argumentos da função.
"""
import logging
from dataclasses import replace
from fractions import Fraction

from services.config import INT_PARAMS, numeric_param
from services.errors import DomainError, UsageError
from identities.residual import skipped_residual

logger = logging.getLogger(__name__)

# ===== IDENTIDADES DISPONÍVEIS =====
IDENTIDADES = {
    'eq1': {
        'nome': 'Recorrência base K_2 = K_0 + (2/z) K_1',
        'modulo': 'identities.theorem1',
        'funcao': 'residual_eq1',
        'params': ('z',),
    },
    'theorem1': {
        'nome': 'Teorema 1: soma simétrica em K',
        'modulo': 'identities.theorem1',
        'funcao': 'residual_theorem1',
        'params': ('m', 'n', 'z'),
    },
    'eq5': {
        'nome': 'Eq. (5): soma de K_{k-1} (z/2)^k / k!',
        'modulo': 'identities.theorem1',
        'funcao': 'residual_eq5',
        'params': ('n', 'z'),
    },
    'theorem2_j': {
        'nome': 'Teorema 2: soma simétrica em J',
        'modulo': 'identities.theorem2',
        'funcao': 'residual_theorem2_j',
        'params': ('m', 'n', 'x'),
    },
    'theorem2_y': {
        'nome': 'Teorema 2: soma simétrica em Y',
        'modulo': 'identities.theorem2',
        'funcao': 'residual_theorem2_y',
        'params': ('m', 'n', 'x'),
    },
    'corollary': {
        'nome': 'Corolário: C = aJ + bY',
        'modulo': 'identities.theorem2',
        'funcao': 'residual_corollary',
        'params': ('n', 'x', 'a', 'b'),
    },
    'eq11': {
        'nome': 'Eq. (11): soma ponderada de Gammas',
        'modulo': 'identities.mellin',
        'funcao': 'residual_eq11',
        'params': ('n', 's'),
    },
    'eq14': {
        'nome': 'Eq. (14): K_n como soma de K_{2k}',
        'modulo': 'identities.mellin',
        'funcao': 'residual_eq14',
        'params': ('n', 'x'),
    },
    'lemma1': {
        'nome': 'Lema 1: P(p,q) simétrico de grau n-1 (exato)',
        'modulo': 'identities.exact',
        'funcao': 'residual_lemma1',
        'params': ('m', 'n'),
        'exata': True,
    },
    'lemma2': {
        'nome': 'Lema 2: simetria de G(p,q,z)',
        'modulo': 'identities.lemma2',
        'funcao': 'residual_lemma2',
        'params': ('m', 'n', 'z'),
        'renomear': {'m': 'p', 'n': 'q'},
    },
    'lemma2_series': {
        'nome': 'Lema 2: forma finita contra série',
        'modulo': 'identities.lemma2',
        'funcao': 'residual_lemma2_series',
        'params': ('m', 'n', 'z'),
        'renomear': {'m': 'p', 'n': 'q'},
    },
    'eq9_3f2': {
        'nome': '3F2(-n, 1, a; 3-a, n+3; -1) em forma fechada',
        'modulo': 'identities.hypergeometric',
        'funcao': 'residual_3f2_minus_one',
        'params': ('n', 'a'),
    },
    'eq16': {
        'nome': 'Eq. (16): soma simétrica de 3F2(k+1, m+2, x; 1, x+lambda; z)',
        'modulo': 'identities.hypergeometric',
        'funcao': 'residual_eq16',
        'params': ('m', 'n', 'z', 'x', 'lambda'),
    },
    'eq17': {
        'nome': 'Eq. (17): caso m = 0 com 2F1 fechada',
        'modulo': 'identities.hypergeometric',
        'funcao': 'residual_eq17',
        'params': ('n', 'z', 'x', 'lambda'),
    },
    'eq18': {
        'nome': 'Eq. (18): razões de Gamma(k+1-a) (exato)',
        'modulo': 'identities.exact',
        'funcao': 'residual_eq18',
        'params': ('m', 'n', 'a'),
        'exata': True,
    },
    'eq19': {
        'nome': 'Eq. (19): simetria binomial (exato)',
        'modulo': 'identities.exact',
        'funcao': 'residual_eq19',
        'params': ('m', 'n'),
        'exata': True,
    },
    'eq20': {
        'nome': 'Eq. (20): soma simétrica de 3F2(k+1, m+2, a; 1, a+b; z)',
        'modulo': 'identities.hypergeometric',
        'funcao': 'residual_eq20',
        'params': ('m', 'n', 'z', 'a', 'b'),
    },
    'eq21': {
        'nome': 'Eq. (21): 3F2 em argumento unitário',
        'modulo': 'identities.hypergeometric',
        'funcao': 'residual_eq21',
        'params': ('n', 'a', 'b'),
    },
    'eq22': {
        'nome': 'Eq. (22): soma de (p+k)!/k! (exato)',
        'modulo': 'identities.exact',
        'funcao': 'residual_eq22',
        'params': ('m', 'n'),
        'renomear': {'m': 'p'},
        'exata': True,
    },
    'fsym': {
        'nome': 'F(n,p,q) = F(n,q,p) e integralidade (exato)',
        'modulo': 'identities.exact',
        'funcao': 'residual_fsym',
        'params': ('m', 'n'),
        'renomear': {'m': 'p'},
        'exata': True,
    },
    'eq24': {
        'nome': 'Eq. (24): soma simétrica de Whittaker W (índices pela metade)',
        'modulo': 'identities.whittaker',
        'funcao': 'residual_eq24',
        'params': ('m', 'n', 'z'),
    },
    'eq24_printed': {
        'nome': 'Eq. (24) com os índices inteiros W_{-k-m-2,k-m-1}',
        'modulo': 'identities.whittaker',
        'funcao': 'residual_eq24_printed',
        'params': ('m', 'n', 'z'),
    },
}


def importar_identidade(nome: str):
    """
    Importa dinamicamente o avaliador de uma identidade

    Args:
        nome (str): chave em IDENTIDADES

    Returns:
        callable: função residual_* da identidade

    Raises:
        UsageError: identidade desconhecida
    """
    if nome not in IDENTIDADES:
        raise UsageError(f"identidade desconhecida: {nome!r} (use --list)")
    info = IDENTIDADES[nome]
    modulo = __import__(info['modulo'], fromlist=[info['funcao']])
    return getattr(modulo, info['funcao'])


def _argument(name: str, value, exata: bool):
    if name in INT_PARAMS:
        if isinstance(value, Fraction):
            value = int(value)
        return value
    if exata:
        return Fraction(value)
    return float(value)


def avaliar_instancia(instance, tol_rel: float = None):
    """
    Avalia uma IdentityInstance; erros de domínio viram registro pulado

    Args:
        instance (IdentityInstance): identidade e parâmetros
        tol_rel (float): tolerância global (None para env/padrão da identidade)

    Returns:
        Residual: com params normalizados para os valores da grade
    """
    info = IDENTIDADES[instance.identity]
    funcao = importar_identidade(instance.identity)
    renomear = info.get('renomear', {})
    exata = info.get('exata', False)
    kwargs = {}
    params = instance.as_dict()
    if not exata:
        params = {name: numeric_param(value) for name, value in params.items()}
    for name, value in instance.params:
        arg_name = renomear.get(name, 'lam' if name == 'lambda' else name)
        kwargs[arg_name] = _argument(name, value, exata)
    if not exata:
        kwargs['tol_rel'] = tol_rel
    try:
        residual = funcao(**kwargs)
    except DomainError as e:
        logger.debug("%s %s pulado: %s", instance.identity, instance.as_dict(), e)
        return skipped_residual(instance.identity, params, str(e))
    return replace(residual, params=params)
