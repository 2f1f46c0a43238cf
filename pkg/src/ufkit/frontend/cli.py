"""The ``uf`` command line: ``uf check FILE...`` (alias ``uf run``)."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from ..kernel import TheoryFlags, default_fuel
from .report import Record, Report, render_json, render_text
from .session import Settings, run_source


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="uf", description="Check type theory and simplicial source files.")
    ap.add_argument("command", choices=["check", "run"], help="both commands process every file in order")
    ap.add_argument("files", nargs="+", type=Path)
    ap.add_argument("--json", action="store_true", help="emit the structured JSON report")
    ap.add_argument("--prelude", action="store_true", help="preload the h-isomorphism/univalence prelude")
    ap.add_argument("--fuel", type=int, default=None, help="normalization step budget (default $UF_FUEL)")
    ap.add_argument("--budget", type=int, default=64, help="node budget of the finite-set universe")
    ap.add_argument("--inner-budget", type=int, default=16, help="node budget of the internal universe")
    ap.add_argument("--dim", type=int, default=2, help="dimension bound for simplicial checks")
    ap.add_argument("--search-budget", type=int, default=20_000, help="witness search budget")
    ap.add_argument("--no-eta", action="store_true", help="disable the Pi eta rule")
    ap.add_argument("--funext", action="store_true", help="enable ext / extcomp")
    ap.add_argument("--univalence", action="store_true", help="assume the univalence axiom (implies --prelude)")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    flags = TheoryFlags(eta_pi=not args.no_eta, funext=args.funext, univalence_axiom=args.univalence)
    settings = Settings(
        flags=flags,
        prelude=args.prelude or args.univalence,
        fuel=args.fuel if args.fuel is not None else default_fuel(),
        budget=args.budget,
        inner_budget=args.inner_budget,
        dim=args.dim,
        search_budget=args.search_budget,
    )
    reports = []
    for path in args.files:
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            rep = Report(str(path))
            rep.add(Record(f"read {path}", "io", "error", {"error": "IOError", "message": str(e)}))
            reports.append(rep)
            continue
        reports.append(run_source(text, str(path), settings))
    out = render_json(reports) if args.json else render_text(reports)
    sys.stdout.write(out)
    return 0 if all(r.ok for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
