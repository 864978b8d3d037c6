"""Command-line front end.

Exit codes:
  0  success (verify: every check passed)
  1  usage error such as an order outside the supported range, or a failed check in verify
  2  unreadable input; the message names the line
  3  analyze met a graph with kappa < 3 (with --strict, processing stops there)
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from dataclasses import dataclass, field
from importlib import resources
from multiprocessing import Pool

from . import campaign
from .canon import canonical_form
from .connectivity import smallest_cuts, vertex_connectivity
from .contraction import classify
from .generation import MAX_ORDER
from .graph import Graph
from .graph6 import FormatError, emit_graph6, parse_line

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_KAPPA = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    n_max: int | None = None
    inputs: list[str] = field(default_factory=list)
    out: str | None = None
    threads: int = 1
    fmt: str = "json"
    strict: bool = False
    audit_max: int | None = None
    catalog_dir: str | None = None
    verbose: bool = False


class UsageError(Exception):
    pass


# -- reference catalogs --------------------------------------------------------


def reference_catalogs() -> dict[str, str]:
    """Canonical graph6 -> catalog name, from the catalog files shipped with the package."""
    out = {}
    data = resources.files("contracta") / "data"
    for name in ("zero", "one"):
        path = data / f"{name}.g6"
        if path.is_file():
            for g6 in campaign.read_catalog(path.read_text()):
                out[g6] = f"{name}-catalog"
    return out


# -- analyze --------------------------------------------------------------------


def analyze_graph(g: Graph, catalogs: dict[str, str] | None = None) -> dict:
    record: dict = {"g6": emit_graph6(g).decode(), "n": g.n}
    kappa = vertex_connectivity(g) if g.n else 0
    record["kappa"] = kappa
    if kappa < 3:
        record["error"] = f"kappa={kappa} < 3"
        return record
    c = classify(g)
    record["nonEdges"] = c.non_edge_count
    record["contractible"] = [list(p) for p in c.contractible]
    record["contractibleCount"] = c.contractible_count
    record["tags"] = list(c.tags)
    if g.is_complete():
        record["cuts"] = []
    else:
        record["cuts"] = [{"cut": list(t.cut), "components": len(t.components)} for t in smallest_cuts(g, kappa)]
    catalogs = reference_catalogs() if catalogs is None else catalogs
    match = catalogs.get(canonical_form(g).bytes.decode())
    record["catalog"] = match
    return record


def _analyze_line(item):
    lineno, line, catalogs = item
    try:
        g = parse_line(line)
    except FormatError as exc:
        return lineno, None, f"line {lineno}: {exc}"
    return lineno, analyze_graph(g, catalogs), None


CSV_FIELDS = ["g6", "n", "kappa", "nonEdges", "contractibleCount", "contractible", "tags", "catalog", "error"]


def _format_text(r: dict) -> str:
    if "error" in r:
        return f"{r['g6']} n={r['n']} kappa={r['kappa']} error: {r['error']}"
    pairs = " ".join(f"{u}-{v}" for u, v in r["contractible"]) or "-"
    return (
        f"{r['g6']} n={r['n']} kappa={r['kappa']} non-edges={r['nonEdges']} "
        f"contractible={r['contractibleCount']} [{pairs}] tags={','.join(r['tags'])}"
        + (f" catalog={r['catalog']}" if r.get("catalog") else "")
    )


def _read_lines(inputs: list[str]):
    if not inputs:
        for i, line in enumerate(sys.stdin.buffer, start=1):
            yield i, line
        return
    for path in inputs:
        with open(path, "rb") as fh:
            for i, line in enumerate(fh, start=1):
                yield i, line


def cmd_analyze(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    catalogs = reference_catalogs()
    writer = None
    if cfg.fmt == "csv":
        writer = csv.DictWriter(out, fieldnames=CSV_FIELDS, extrasaction="ignore", lineterminator="\n")
        writer.writeheader()
    items = (
        (i, line.rstrip(b"\r\n"), catalogs) for i, line in _read_lines(cfg.inputs) if line.strip()
    )
    pool = Pool(cfg.threads) if cfg.threads > 1 else None
    results = pool.imap(_analyze_line, items, chunksize=16) if pool else map(_analyze_line, items)
    status = EXIT_OK
    try:
        for lineno, record, error in results:
            if error is not None:
                print(error, file=sys.stderr)
                return EXIT_PARSE
            if cfg.fmt == "json":
                out.write(json.dumps(record, sort_keys=True) + "\n")
            elif cfg.fmt == "csv":
                row = dict(record)
                row["contractible"] = " ".join(f"{u}-{v}" for u, v in record.get("contractible", []))
                row["tags"] = " ".join(record.get("tags", []))
                writer.writerow(row)
            else:
                out.write(_format_text(record) + "\n")
            if "error" in record:
                print(f"line {lineno}: {record['error']}", file=sys.stderr)
                status = EXIT_KAPPA
                if cfg.strict:
                    return status
    finally:
        if pool is not None:
            pool.terminate()
    return status


# -- verify / catalog ------------------------------------------------------------


def _check_n_max(n_max: int) -> None:
    if not campaign.MIN_CAMPAIGN_ORDER <= n_max <= MAX_ORDER:
        raise UsageError(f"--n-max must lie in {campaign.MIN_CAMPAIGN_ORDER}..{MAX_ORDER}, got {n_max}")


def summary_lines(report: dict) -> list[str]:
    lines = []
    for name, entry in report["theorems"].items():
        extra = ""
        if "exceptionalCount" in entry:
            extra = f" exceptional={entry['exceptionalCount']} stable={str(entry['stable']).lower()}"
        lines.append(f"{entry['status']} theorem {name}{extra}")
    for name, entry in report["audit"].items():
        if name.startswith("_"):
            continue
        lines.append(f"{entry['status']} audit {name} instances={entry['instances']} failures={entry['failures']}")
    lines.append(f"{report['status']} overall graphs={report['graphsProcessed']}")
    return lines


def dump_report(report: dict) -> str:
    return json.dumps(report, indent=1, sort_keys=True) + "\n"


def cmd_verify(cfg: RunConfig) -> int:
    _check_n_max(cfg.n_max)
    audit_max = cfg.audit_max if cfg.audit_max is not None else min(cfg.n_max, 9)
    if audit_max > cfg.n_max:
        raise UsageError("--audit-max cannot exceed --n-max")
    start = time.perf_counter()
    tally = campaign.run_campaign(cfg.n_max, audit_max, cfg.threads)
    report = campaign.build_report(tally, cfg.n_max, audit_max)
    text = dump_report(report)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if cfg.catalog_dir:
        zero, one = campaign.catalogs_from_tally(tally)
        campaign.write_catalogs(cfg.catalog_dir, zero, one)
    for line in summary_lines(report):
        print(line, file=sys.stderr)
    if cfg.verbose:
        print(f"elapsed {time.perf_counter() - start:.1f}s", file=sys.stderr)
    return EXIT_OK if report["status"] == "PASS" else EXIT_USAGE


def cmd_catalog(cfg: RunConfig) -> int:
    _check_n_max(cfg.n_max)
    zero, one = campaign.derive_catalogs(cfg.n_max, cfg.threads)
    for path in campaign.write_catalogs(cfg.out, zero, one):
        print(path, file=sys.stderr)
    print(f"zero-catalog {len(zero)} one-catalog {len(one)}", file=sys.stderr)
    return EXIT_OK


# -- argument parsing -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="contracta", description="Contractible non-edges of 3-connected graphs.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="classify graph6/sparse6 lines")
    a.add_argument("inputs", nargs="*", help="files; stdin when absent")
    a.add_argument("--strict", action="store_true", help="stop at the first graph with kappa < 3")
    a.add_argument("--format", dest="fmt", choices=["json", "csv", "text"], default="json")
    a.add_argument("--threads", type=int, default=None)

    v = sub.add_parser("verify", help="exhaustive theorem verification and lemma audit")
    v.add_argument("--n-max", type=int, required=True)
    v.add_argument("--threads", type=int, default=None)
    v.add_argument("--out", default=None, help="report file; stdout when absent")
    v.add_argument("--audit-max", type=int, default=None, help="largest order audited (default min(n-max, 9))")
    v.add_argument("--catalog-dir", default=None, help="also write the derived catalogs here")

    c = sub.add_parser("catalog", help="catalog management")
    csub = c.add_subparsers(dest="action", required=True)
    d = csub.add_parser("derive", help="derive the zero and one catalogs")
    d.add_argument("--n-max", type=int, required=True)
    d.add_argument("--out", required=True, help="output directory")
    d.add_argument("--threads", type=int, default=None)
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    threads = ns.threads if getattr(ns, "threads", None) is not None else campaign.default_threads()
    if threads < 1:
        raise UsageError("--threads must be positive")
    return RunConfig(
        command=ns.command,
        n_max=getattr(ns, "n_max", None),
        inputs=list(getattr(ns, "inputs", []) or []),
        out=getattr(ns, "out", None),
        threads=threads,
        fmt=getattr(ns, "fmt", "json"),
        strict=getattr(ns, "strict", False),
        audit_max=getattr(ns, "audit_max", None),
        catalog_dir=getattr(ns, "catalog_dir", None),
        verbose=ns.verbose,
    )


def main(argv: list[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(ns)
        if cfg.command == "analyze":
            for path in cfg.inputs:
                with open(path, "rb"):
                    pass
            return cmd_analyze(cfg)
        if cfg.command == "verify":
            return cmd_verify(cfg)
        return cmd_catalog(cfg)
    except UsageError as exc:
        print(f"contracta: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"contracta: {exc}", file=sys.stderr)
        return EXIT_PARSE if cfg.command == "analyze" else EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
