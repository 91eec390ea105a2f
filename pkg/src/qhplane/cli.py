"""Command-line interface.

Subcommands: dim, classify, enumerate, oracle, certify, verify, table.
Exit codes: 0 success, 1 verification mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Optional, Sequence

from . import classifier, degeneration, minus_one, oracle, tables
from .core import L, expected_dim, invariants, virtual_dim

JSON_SCHEMA_VERSION = 1


def _emit_json(payload: dict) -> None:
    payload = {"schema": JSON_SCHEMA_VERSION, **payload}
    print(json.dumps(payload, indent=2, default=str))


def _emit_rows(header: Sequence[str], rows: list[Sequence], fmt: str) -> None:
    if fmt == "json":
        _emit_json({"rows": [dict(zip(header, row)) for row in rows]})
        return
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(header)
        writer.writerows(rows)
        sys.stdout.write(buf.getvalue())
        return
    widths = [
        max(len(str(h)), *(len(str(r[i])) for r in rows)) if rows else len(str(h))
        for i, h in enumerate(header)
    ]
    print("  ".join(str(h).rjust(w) for h, w in zip(header, widths)))
    for row in rows:
        print("  ".join(str(x).rjust(w) for x, w in zip(row, widths)))


def _system_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("d", type=int)
    p.add_argument("m0", type=int)
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)


def _format_flag(p: argparse.ArgumentParser, csv_too: bool = True) -> None:
    p.add_argument("--json", action="store_true")
    if csv_too:
        p.add_argument("--csv", action="store_true")


def _fmt(args) -> str:
    if getattr(args, "json", False):
        return "json"
    if getattr(args, "csv", False):
        return "csv"
    return "plain"


def cmd_dim(args) -> int:
    sys_ = L(args.d, args.m0, args.n, args.m)
    result = classifier.dimension(sys_)
    inv = invariants(sys_)
    if args.json:
        _emit_json(
            {
                "system": sys_.as_tuple(),
                "dim": result.dim,
                "v": inv.v,
                "e": inv.e,
                "status": result.status.value,
                "certificate": result.certificate,
            }
        )
    else:
        print(f"{sys_}: dim={result.dim} v={inv.v} e={inv.e} status={result.status.value}")
    return 0


def cmd_classify(args) -> int:
    sys_ = L(args.d, args.m0, args.n, args.m)
    special, result = classifier.is_special(sys_)
    inv = invariants(sys_)
    decomp = (result.certificate or {}).get("decomposition")
    if decomp is None and sys_.n > 0 and sys_.m > 0:
        found = minus_one.find_special_decomposition(sys_)
        decomp = found.to_dict() if found else None
    payload = {
        "system": sys_.as_tuple(),
        "special": special,
        "dim": result.dim,
        "v": inv.v,
        "e": inv.e,
        "self_int": inv.self_int,
        "genus": inv.genus,
        "status": result.status.value,
        "decomposition": decomp,
    }
    if args.json:
        _emit_json(payload)
    else:
        print(
            f"{sys_}: {'SPECIAL' if special else 'non-special'} "
            f"dim={result.dim} e={inv.e} status={result.status.value}"
        )
        if decomp:
            for part in decomp["fixed_parts"]:
                print(f"  fixed part: {part['N']} x {part['curve']}")
            print(f"  residual: L{tuple(decomp['residual'])} with v={decomp['residual_v']}")
    return 0


def cmd_enumerate(args) -> int:
    if args.configurations:
        rows = [
            (
                c.total.d, c.total.m0, c.total.n, c.total.m,
                c.delta, c.mu0, c.mu1, c.mu2, c.compound,
            )
            for c in minus_one.enumerate_configurations(
                args.m_max, delta_max=args.delta_max, e_max=args.e_max
            )
        ]
        header = ("d", "m0", "n", "m", "delta", "mu0", "mu1", "mu2", "compound")
    else:
        rows = []
        for c in minus_one.enumerate_qh_classes(args.m_max, e_max=args.e_max):
            irr, _ = minus_one.is_irreducible_class(c)
            x, y = c.witness if c.witness else ("-", "-")
            s = c.system
            rows.append((s.d, s.m0, s.n, s.m, x, y, c.family, irr))
        header = ("d", "m0", "n", "m", "x", "y", "family", "irreducible")
    _emit_rows(header, rows, _fmt(args))
    return 0


def cmd_oracle(args) -> int:
    cfg = oracle.OracleConfig(prime=args.prime, trials=args.trials, seed=args.seed)
    sys_ = L(args.d, args.m0, args.n, args.m)
    dim, e, special = oracle.measure_speciality(sys_, cfg)
    if args.json:
        _emit_json(
            {
                "system": sys_.as_tuple(),
                "dim": dim,
                "e": e,
                "special": special,
                "oracle": cfg.as_dict(),
            }
        )
    else:
        print(f"{sys_}: measured dim={dim} e={e} special={special}")
    return 0


def cmd_certify(args) -> int:
    sys_ = L(args.d, args.m0, args.n, args.m)
    cache_path = args.cache or os.environ.get(degeneration.CACHE_ENV_VAR)
    cert = degeneration.certify(sys_, budget=args.budget, cache_path=cache_path)
    if args.json:
        _emit_json(cert.to_dict())
    else:
        print(f"{sys_}: {cert.outcome}" + (f" dim={cert.dim}" if cert.dim is not None else ""))
        if args.trace:
            print(json.dumps(cert.tree, indent=2, default=str))
    return 0


def _verify_cell(cell: tuple[int, int, int, int, int, int]) -> Optional[dict]:
    d, m0, n, m, trials, seed = cell
    sys_ = L(d, m0, n, m)
    cfg = oracle.OracleConfig(trials=trials, seed=seed)
    theory = classifier.dimension(sys_)
    measured = oracle.measure_dim(sys_, cfg).dim
    if theory.dim != measured:
        return {
            "system": sys_.as_tuple(),
            "theory": theory.dim,
            "status": theory.status.value,
            "oracle": measured,
        }
    return None


def cmd_verify(args) -> int:
    cells = [
        (d, m0, n, m, args.trials, args.seed)
        for d in range(0, args.d_max + 1)
        for m in range(1, args.m_max + 1)
        for m0 in range(0, d + 1)
        for n in range(0, args.n_max + 1)
    ]
    if args.workers > 1:
        import multiprocessing

        with multiprocessing.Pool(args.workers) as pool:
            results = pool.map(_verify_cell, cells, chunksize=64)
    else:
        results = map(_verify_cell, cells)
    mismatches = [r for r in results if r is not None]
    if args.json:
        _emit_json({"cells": len(cells), "mismatches": mismatches})
    else:
        print(f"checked {len(cells)} systems, {len(mismatches)} mismatches")
        for mm in mismatches[:50]:
            print(f"  MISMATCH {mm}")
    return 1 if mismatches else 0


def cmd_table(args) -> int:
    header, rows = tables.TABLES[args.name]
    _emit_rows(header, rows, _fmt(args))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qhplane",
        description="Dimensions and speciality of quasi-homogeneous linear systems of plane curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dim", help="generic dimension with proof status")
    _system_args(p)
    _format_flag(p, csv_too=False)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("classify", help="speciality report with decomposition")
    _system_args(p)
    _format_flag(p, csv_too=False)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("enumerate", help="(-1)-classes or configurations")
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--configurations", action="store_true")
    p.add_argument("--delta-max", type=int, default=None)
    p.add_argument("--e-max", type=int, default=minus_one.DEFAULT_E_MAX)
    _format_flag(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("oracle", help="measure the dimension over a prime field")
    _system_args(p)
    p.add_argument("--seed", type=int, default=oracle.DEFAULT_CONFIG.seed)
    p.add_argument("--trials", type=int, default=oracle.DEFAULT_CONFIG.trials)
    p.add_argument("--prime", type=int, default=oracle.DEFAULT_CONFIG.prime)
    _format_flag(p, csv_too=False)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("certify", help="degeneration proof of emptiness/non-speciality")
    _system_args(p)
    p.add_argument("--budget", type=int, default=100_000)
    p.add_argument("--cache", type=str, default=None,
                   help=f"memo cache file (or ${degeneration.CACHE_ENV_VAR})")
    p.add_argument("--trace", action="store_true")
    _format_flag(p, csv_too=False)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify", help="theory-vs-oracle sweep")
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--m-max", type=int, default=3)
    p.add_argument("--trials", type=int, default=oracle.DEFAULT_CONFIG.trials)
    p.add_argument("--seed", type=int, default=oracle.DEFAULT_CONFIG.seed)
    p.add_argument("--workers", type=int, default=1)
    _format_flag(p, csv_too=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="emit a reference table")
    p.add_argument("name", choices=sorted(tables.TABLES))
    _format_flag(p)
    p.set_defaults(func=cmd_table)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
