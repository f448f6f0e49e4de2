"""
Verificador de identidades de somas simétricas de Bessel e hipergeométricas
Orquestra o fluxo completo: configuração -> grade -> avaliação -> relatório -> status de saída
"""
import argparse
import logging
import sys

from services.config import LOG_LEVEL, build_sweep_config
from services.errors import UsageError
from services.report import emit_report, write_report
from services.sweep import run_sweep
from identities.catalog import IDENTIDADES

# ===== STATUS DE SAÍDA =====
EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

GRID_FLAGS = ("m", "n", "z", "x", "s", "a", "b", "lambda")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bessel-sym",
        description="Verifica identidades de somas simétricas sobre grades de parâmetros",
    )
    parser.add_argument("--identity", help="identidade(s) separadas por vírgula (veja --list)")
    parser.add_argument("--m", help="faixa inteira a..b[..passo]")
    parser.add_argument("--n", help="faixa inteira a..b[..passo]")
    for name in ("z", "x", "s", "a", "b"):
        parser.add_argument(f"--{name}", help="lista v1,v2,... ou lo:hi:contagem")
    parser.add_argument("--lambda", dest="lambda_", help="lista v1,v2,... ou lo:hi:contagem")
    parser.add_argument("--tol", help="tolerância relativa (antes da escala pela condição)")
    parser.add_argument("--format", choices=("json", "csv"), help="formato do relatório (json)")
    parser.add_argument("--out", help="arquivo de saída (padrão: stdout)")
    parser.add_argument("--jobs", help="número de processos (padrão: 1)")
    parser.add_argument("--config", help="arquivo chave=valor; suas chaves têm precedência sobre as flags")
    parser.add_argument("--list", action="store_true", help="lista as identidades e sai")
    return parser


def _log(message: str):
    print(message, file=sys.stderr)


def listar_identidades():
    """
    Imprime as identidades disponíveis e as grades que cada uma consome
    """
    print("=" * 80)
    print("IDENTIDADES DISPONÍVEIS")
    print("=" * 80)
    for nome, info in IDENTIDADES.items():
        params = ",".join(info['params'])
        print(f"{nome:<14} [{params:<16}] {info['nome']}")
    print("=" * 80)


def _flags(args) -> dict:
    flags = {name: getattr(args, name) for name in GRID_FLAGS if name != "lambda"}
    flags["lambda"] = args.lambda_
    flags.update(identity=args.identity, tol=args.tol, format=args.format,
                 out=args.out, jobs=args.jobs)
    return flags


def main(argv=None) -> int:
    """
    Função principal que orquestra todo o fluxo

    Returns:
        int: 0 sem falhas, 1 com alguma falha, 2 em erro de uso ou de E/S
    """
    logging.basicConfig(level=LOG_LEVEL, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)

    if args.list:
        listar_identidades()
        return EXIT_OK

    try:
        # 1. Configuração
        _log("1. Lendo configuração...")
        config = build_sweep_config(_flags(args), args.config)
        _log(f"✓ Identidades: {', '.join(config.identities)}")

        # 2. Varredura
        _log(f"\n2. Avaliando a grade com {config.jobs} processo(s)...")
        report = run_sweep(config)
        _log(f"✓ {report.summary['total']} instâncias em {report.duration:.2f}s")

        # 3. Relatório
        _log(f"\n3. Gerando relatório {config.output_format.upper()}...")
        payload = emit_report(report, config.output_format)
        write_report(payload, config.out, sys.stdout.buffer)
        if config.out:
            _log(f"✓ Relatório salvo: {config.out}")
    except UsageError as e:
        _log(f"❌ Erro de uso: {e}")
        return EXIT_USAGE
    except OSError as e:
        _log(f"❌ Erro de E/S: {e}")
        return EXIT_USAGE

    # 4. Resumo no console
    _log("\n4. Resumo:")
    _print_summary_table(report)

    if report.summary["warnings"]:
        _log(f"⚠️  {report.summary['warnings']} instância(s) com aviso de precisão")
    if report.summary["failed"]:
        _log(f"❌ {report.summary['failed']} instância(s) falharam")
        return EXIT_FAILED
    _log("✓ Todas as instâncias avaliadas passaram")
    return EXIT_OK


def _print_summary_table(report):
    """
    Imprime uma linha por identidade: contagens e o pior erro relativo
    """
    _log(f"{'identidade':<14} {'total':<7} {'passou':<7} {'falhou':<7} {'pulou':<7} {'pior rel_err':<12}")
    _log("-" * 60)
    by_identity = {}
    for residual in report.results:
        by_identity.setdefault(residual.identity, []).append(residual)
    for nome, residuals in by_identity.items():
        passed = sum(1 for r in residuals if r.passed is True)
        failed = sum(1 for r in residuals if r.passed is False)
        skipped = sum(1 for r in residuals if r.passed is None)
        errors = [r.rel_err for r in residuals if r.rel_err is not None]
        worst = f"{max(errors):.3e}" if errors else "-"
        _log(f"{nome:<14} {len(residuals):<7} {passed:<7} {failed:<7} {skipped:<7} {worst:<12}")
    summary = report.summary
    _log(f"\nTotal: {summary['total']}  |  Passou: {summary['passed']}  |  "
         f"Falhou: {summary['failed']}  |  Pulou: {summary['skipped_poles']}")


if __name__ == "__main__":
    sys.exit(main())
