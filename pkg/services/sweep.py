"""
Varredura de identidades sobre grades de parâmetros

A grade de cada identidade é o produto cartesiano das grades que ela consome,
na ordem canônica (m, n, z, x, s, a, b, lambda); as identidades seguem a
ordem pedida. Com --jobs > 1 a lista é partida estaticamente em blocos
contíguos e os resultados voltam na ordem dos blocos.
"""
import itertools
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from services.config import SweepConfig
from services.errors import UsageError
from identities.catalog import IDENTIDADES, avaliar_instancia
from identities.residual import PARAM_ORDER, IdentityInstance

logger = logging.getLogger(__name__)


@dataclass
class SweepReport:
    """Resultados em ordem determinística, resumo e eco da configuração"""
    config: dict
    results: list
    summary: dict
    notes: dict = field(default_factory=dict)
    duration: float = 0.0

    def to_dict(self) -> dict:
        # duration fica fora do documento emitido
        document = {
            "config": self.config,
            "results": [residual.to_dict() for residual in self.results],
            "summary": self.summary,
        }
        if self.notes:
            document["notes"] = self.notes
        return document


def _validate(config: SweepConfig):
    unknown = [name for name in config.identities if name not in IDENTIDADES]
    if unknown:
        raise UsageError(f"identidades desconhecidas: {', '.join(unknown)}")
    used = set()
    for name in config.identities:
        required = IDENTIDADES[name]['params']
        missing = [p for p in required if p not in config.grids]
        if missing:
            flags = ", ".join(f"--{p}" for p in missing)
            raise UsageError(f"{name} exige a(s) grade(s) {flags}")
        used.update(required)
    extra = sorted(set(config.grids) - used)
    if extra:
        flags = ", ".join(f"--{p}" for p in extra)
        raise UsageError(f"grade(s) {flags} não usada(s) pelas identidades pedidas")


def build_instances(config: SweepConfig) -> list:
    """Lista ordenada de IdentityInstance da varredura"""
    _validate(config)
    instances = []
    for name in config.identities:
        params = [p for p in PARAM_ORDER if p in IDENTIDADES[name]['params']]
        for values in itertools.product(*(config.grids[p] for p in params)):
            instances.append(IdentityInstance(identity=name, params=tuple(zip(params, values))))
    return instances


def _evaluate_chunk(chunk: list, tol_rel) -> list:
    return [avaliar_instancia(instance, tol_rel) for instance in chunk]


def _partition(instances: list, jobs: int) -> list:
    size, extra = divmod(len(instances), jobs)
    chunks, start = [], 0
    for index in range(jobs):
        stop = start + size + (1 if index < extra else 0)
        chunks.append(instances[start:stop])
        start = stop
    return [chunk for chunk in chunks if chunk]


def summarize(results: list) -> dict:
    passed = sum(1 for r in results if r.passed is True)
    failed = sum(1 for r in results if r.passed is False)
    skipped = sum(1 for r in results if r.passed is None)
    warned = sum(1 for r in results if r.notes.get("warnings"))
    return {
        "total": len(results),
        "passed": passed,
        "failed": failed,
        "skipped_poles": skipped,
        "warnings": warned,
    }


def run_sweep(config: SweepConfig) -> SweepReport:
    """
    Avalia cada ponto da grade exatamente uma vez

    Args:
        config (SweepConfig): configuração validada pelo CLI

    Returns:
        SweepReport: resultados na ordem da grade, independente de config.jobs

    Raises:
        UsageError: identidade desconhecida ou grades incompatíveis
    """
    instances = build_instances(config)
    started = time.perf_counter()
    logger.info("varrendo %d instâncias com %d processo(s)", len(instances), config.jobs)

    if config.jobs == 1 or len(instances) <= 1:
        results = _evaluate_chunk(instances, config.tol_rel)
    else:
        chunks = _partition(instances, config.jobs)
        with ProcessPoolExecutor(max_workers=len(chunks)) as executor:
            futures = [executor.submit(_evaluate_chunk, chunk, config.tol_rel) for chunk in chunks]
            results = []
            for future in futures:
                results.extend(future.result())

    notes = {}
    if any(name.startswith("theorem2") for name in config.identities):
        from identities.theorem2 import SIGN_CONVENTION
        notes["theorem2_sign_convention"] = SIGN_CONVENTION

    return SweepReport(
        config=config.echo(),
        results=results,
        summary=summarize(results),
        notes=notes,
        duration=time.perf_counter() - started,
    )
