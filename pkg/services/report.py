"""
Serialização do SweepReport em JSON ou CSV
"""
import io
import json
import logging

import pandas as pd

logger = logging.getLogger(__name__)

CSV_COLUMNS = ["identity", "m", "n", "z", "x", "s", "a", "b", "lambda",
               "lhs", "rhs", "abs_err", "rel_err", "cond", "pass"]
PARAM_COLUMNS = CSV_COLUMNS[1:9]
VALUE_COLUMNS = ["lhs", "rhs", "abs_err", "rel_err", "cond"]


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return repr(value) if isinstance(value, float) else str(value)


def _csv_rows(document: dict) -> list:
    rows = []
    for record in document["results"]:
        row = {"identity": record["identity"]}
        for name in PARAM_COLUMNS:
            row[name] = _cell(record["params"].get(name))
        for name in VALUE_COLUMNS:
            row[name] = _cell(record[name])
        row["pass"] = _cell(record["pass"])
        rows.append(row)
    return rows


def render_json(document: dict) -> bytes:
    text = json.dumps(document, indent=2, ensure_ascii=False, allow_nan=False)
    return (text + "\n").encode("utf-8")


def render_csv(document: dict) -> bytes:
    df = pd.DataFrame(_csv_rows(document), columns=CSV_COLUMNS, dtype=object)
    buffer = io.StringIO()
    df.to_csv(buffer, index=False, lineterminator="\r\n")
    return buffer.getvalue().encode("utf-8")


def emit_report(report, output_format: str = "json") -> bytes:
    """
    Gera os bytes do relatório

    Args:
        report (SweepReport): resultado da varredura
        output_format (str): 'json' ou 'csv'

    Returns:
        bytes: documento pronto para gravar
    """
    document = report.to_dict()
    if output_format == "csv":
        return render_csv(document)
    return render_json(document)


def write_report(payload: bytes, out: str = None, stream=None):
    """
    Grava o relatório em `out` ou no stream (stdout binário por padrão)

    Raises:
        OSError: caminho de saída não gravável
    """
    if out:
        with open(out, "wb") as handle:
            handle.write(payload)
        logger.info("relatório gravado em %s", out)
        return
    stream.write(payload)
    stream.flush()
