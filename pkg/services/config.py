"""
Configuração do verificador: variáveis do .env, precedência de tolerância
e leitura da SweepConfig a partir das flags e do arquivo --config
"""
import os
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from dotenv import load_dotenv, dotenv_values

from services.errors import UsageError

# Carrega o .env uma única vez (mesmo esquema do antigo cliente da Binance)
load_dotenv()

# ===== PARÂMETROS PADRÃO (fácil de alterar) =====
DEFAULT_TOL_REL = 1e-9
QUADRATURE_TOL_REL = 1e-6
FACTORIAL_CACHE_CAP = int(os.getenv("BESSEL_SYM_FACTORIAL_CAP", "64"))
LOG_LEVEL = os.getenv("BESSEL_SYM_LOG_LEVEL", "WARNING")

REAL_PARAMS = ("z", "x", "s", "a", "b", "lambda")
# único parâmetro real que alimenta identidades exatas (Eq. 18)
EXACT_PARAMS = ("a",)
INT_PARAMS = ("m", "n")
CONFIG_KEYS = ("identity", "m", "n") + REAL_PARAMS + ("tol", "format", "out", "jobs")


def env_tolerance():
    """
    Lê BESSEL_SYM_TOL do ambiente

    Returns:
        float | None: tolerância global ou None se não definida
    """
    raw = os.getenv("BESSEL_SYM_TOL")
    if raw is None or raw.strip() == "":
        return None
    try:
        tol = float(raw)
    except ValueError:
        raise UsageError(f"BESSEL_SYM_TOL inválido: {raw!r}")
    if not tol > 0:
        raise UsageError(f"BESSEL_SYM_TOL deve ser positivo: {raw!r}")
    return tol


def resolve_tolerance(override=None, identity_default=DEFAULT_TOL_REL):
    """
    Resolve a tolerância relativa: override explícito > BESSEL_SYM_TOL > padrão da identidade
    """
    if override is not None:
        return float(override)
    env_tol = env_tolerance()
    if env_tol is not None:
        return env_tol
    return identity_default


@dataclass
class SweepConfig:
    """Grade de parâmetros e opções de saída de uma varredura"""
    identities: list
    grids: dict = field(default_factory=dict)
    tol_rel: float = None
    output_format: str = "json"
    out: str = None
    jobs: int = 1

    def echo(self) -> dict:
        """Eco determinístico da configuração para o relatório"""
        return {
            "identities": list(self.identities),
            "grids": {
                name: [param_to_json(v if name in EXACT_PARAMS else numeric_param(v)) for v in values]
                for name, values in self.grids.items()
            },
            "tol_rel": self.tol_rel,
            "format": self.output_format,
        }


def param_to_json(value):
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return int(value)
        as_float = float(value)
        if Fraction(as_float) == value:
            return as_float
        return f"{value.numerator}/{value.denominator}"
    return value


def numeric_param(value):
    """Valor de grade como número JSON: inteiro quando exato, float caso contrário"""
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else float(value)
    return value


def parse_int_range(text: str, name: str) -> list:
    """
    Interpreta 'a..b' ou 'a..b..step' (limites inclusivos)

    Args:
        text (str): faixa no formato da flag
        name (str): nome do parâmetro, usado nas mensagens

    Returns:
        list: inteiros da faixa em ordem crescente
    """
    parts = text.strip().split("..")
    try:
        if len(parts) == 1:
            values = [int(parts[0])]
        elif len(parts) in (2, 3):
            lo, hi = int(parts[0]), int(parts[1])
            step = int(parts[2]) if len(parts) == 3 else 1
            if step <= 0:
                raise UsageError(f"--{name}: passo deve ser positivo ({text!r})")
            values = list(range(lo, hi + 1, step))
        else:
            raise ValueError(text)
    except ValueError:
        raise UsageError(f"--{name}: faixa inteira inválida {text!r}")
    if not values:
        raise UsageError(f"--{name}: faixa vazia {text!r}")
    return values


def parse_real_grid(text: str, name: str) -> list:
    """
    Interpreta uma lista 'v1,v2,...' (cada valor como racional exato) ou 'lo:hi:count'

    Returns:
        list: valores como Fraction (exatos; as identidades numéricas convertem para float)
    """
    text = text.strip()
    if not text:
        raise UsageError(f"--{name}: grade vazia")
    try:
        if ":" in text:
            lo, hi, count = text.split(":")
            count = int(count)
            if count <= 0:
                raise UsageError(f"--{name}: contagem deve ser positiva ({text!r})")
            return [Fraction(float(v)) for v in np.linspace(float(lo), float(hi), count)]
        tokens = [t.strip() for t in text.split(",") if t.strip()]
        values = [Fraction(t) for t in tokens]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--{name}: grade real inválida {text!r}")
    if not values:
        raise UsageError(f"--{name}: grade vazia")
    return values


def build_sweep_config(flags: dict, config_path: str = None) -> SweepConfig:
    """
    Monta a SweepConfig a partir das flags; chaves do arquivo --config têm precedência

    Args:
        flags (dict): valores das flags (None quando ausentes)
        config_path (str): arquivo chave=valor opcional

    Returns:
        SweepConfig: configuração validada
    """
    merged = {key: flags.get(key) for key in CONFIG_KEYS}

    if config_path:
        if not os.path.isfile(config_path):
            raise UsageError(f"arquivo de configuração não encontrado: {config_path}")
        from_file = dotenv_values(config_path)
        unknown = sorted(set(from_file) - set(CONFIG_KEYS))
        if unknown:
            raise UsageError(f"chaves desconhecidas em {config_path}: {', '.join(unknown)}")
        for key, value in from_file.items():
            merged[key] = value

    if not merged["identity"]:
        raise UsageError("nenhuma identidade informada (--identity)")
    identities = [name.strip() for name in str(merged["identity"]).split(",") if name.strip()]

    grids = {}
    for name in INT_PARAMS:
        if merged[name] is not None:
            grids[name] = parse_int_range(str(merged[name]), name)
    for name in REAL_PARAMS:
        if merged[name] is not None:
            grids[name] = parse_real_grid(str(merged[name]), name)

    tol = merged["tol"]
    if tol is not None:
        try:
            tol = float(tol)
        except ValueError:
            raise UsageError(f"--tol inválido: {tol!r}")
        if not tol > 0:
            raise UsageError("--tol deve ser positivo")

    output_format = str(merged["format"] or "json").lower()
    if output_format not in ("json", "csv"):
        raise UsageError(f"--format deve ser json ou csv, recebido {output_format!r}")

    try:
        jobs = int(merged["jobs"] or 1)
    except ValueError:
        raise UsageError(f"--jobs inválido: {merged['jobs']!r}")
    if jobs < 1:
        raise UsageError("--jobs deve ser >= 1")

    return SweepConfig(
        identities=identities,
        grids=grids,
        tol_rel=tol,
        output_format=output_format,
        out=merged["out"] or None,
        jobs=jobs,
    )
