"""``agr`` command-line front end.

Exit codes: 0 success, 1 input error, 2 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Optional, Sequence

from .batch import parse_gens, parse_manifest, run_batch, summarize, summary_line
from .complexes import Field, parse_complex
from .errors import AgrError, InconsistencyError, InputError, NoStabilization
from .report import format_table
from .semigroup import NumericalSemigroup, apery_set, ideal_from_generators, pseudo_frobenius, semigroup_from_generators
from .semigroup_rings import (
    NotAChain,
    classify_local,
    hilbert_coeffs,
    hilbert_function,
    oversemigroup_chain,
    oversemigroups,
    shifted_canonical_ideal,
    symmetry_class,
)
from .stanley_reisner import classify_sr
from .veronese import VeroneseInstance, classify_veronese

EXIT_OK, EXIT_INPUT, EXIT_INCONSISTENT = 0, 1, 2

GRAMMAR = """\
agr sgp classify|over|chain|hilbert|info --gens <g1,g2,...> [--json]
agr sgp hilbert --gens <gens> [--ideal canonical|<i1,i2,...>] [--max-n N]
agr sr classify --file <path> [--field q|p:<prime>] [--json]
agr veronese classify -d <int> -n <int> [--json]
agr batch --manifest <path> [--workers N] [--json]"""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _sgp_json(S: NumericalSemigroup) -> dict[str, Any]:
    return {"generators": list(S.generators), "frobenius": S.frobenius, "genus": S.genus}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="agr", description="Almost Gorenstein classification toolkit.")
    sub = p.add_subparsers(dest="group", required=True)

    sgp = sub.add_parser("sgp", help="numerical semigroup rings")
    sgp.add_argument("action", choices=["classify", "over", "chain", "hilbert", "info"])
    sgp.add_argument("--gens", required=True)
    sgp.add_argument("--ideal", default="canonical")
    sgp.add_argument("--max-n", type=int, default=12)
    sgp.add_argument("--json", action="store_true")

    sr = sub.add_parser("sr", help="Stanley-Reisner rings")
    sr.add_argument("action", choices=["classify"])
    sr.add_argument("--file", required=True)
    sr.add_argument("--field", default="q")
    sr.add_argument("--json", action="store_true")

    ver = sub.add_parser("veronese", help="Veronese subrings of polynomial rings")
    ver.add_argument("action", choices=["classify"])
    ver.add_argument("-d", type=int, required=True)
    ver.add_argument("-n", type=int, required=True)
    ver.add_argument("--json", action="store_true")

    bat = sub.add_parser("batch", help="run a manifest")
    bat.add_argument("--manifest", required=True)
    bat.add_argument("--workers", type=int, default=1)
    bat.add_argument("--json", action="store_true")
    return p


def _emit(obj: Any, as_json: bool, text: str, out) -> None:
    if as_json:
        out.write(json.dumps(obj, indent=2) + "\n")
    else:
        out.write(text + "\n")


def _run_sgp(args, out) -> int:
    H = semigroup_from_generators(parse_gens(args.gens))
    if args.action == "classify":
        r = classify_local(H)
        _emit(r.to_dict(), args.json, format_table(r), out)
    elif args.action == "info":
        sc = symmetry_class(H)
        info = {
            "input": str(H),
            "generators": list(H.generators),
            "frobenius": H.frobenius,
            "genus": H.genus,
            "gaps": list(H.gaps),
            "pseudo_frobenius": pseudo_frobenius(H),
            "type": sc.type,
            "symmetry": sc.kind.value,
            "apery": apery_set(H, H.multiplicity),
        }
        text = "\n".join(f"{k}: {v}" for k, v in info.items())
        _emit(info, args.json, text, out)
    elif args.action == "over":
        over = oversemigroups(H)
        obj = {"input": str(H), "oversemigroups": [_sgp_json(S) for S in over]}
        _emit(obj, args.json, "\n".join(str(S) for S in over), out)
    elif args.action == "chain":
        chain = oversemigroup_chain(H)
        if isinstance(chain, NotAChain):
            obj = {
                "input": str(H),
                "chain": False,
                "incomparable": [list(chain.first.generators), list(chain.second.generators)],
            }
            text = str(chain)
        else:
            obj = {"input": str(H), "chain": True, "length": len(chain), "semigroups": [_sgp_json(S) for S in chain]}
            text = " ⊂ ".join(str(S) for S in chain) + f"\nlength: {len(chain)}"
        _emit(obj, args.json, text, out)
    else:
        if args.ideal == "canonical":
            E, shift = shifted_canonical_ideal(H)
        else:
            E, shift = ideal_from_generators(H, parse_gens(args.ideal)), 0
        c = hilbert_coeffs(H, E, args.max_n)
        obj = {
            "input": str(H),
            "ideal": list(E.generators),
            "shift": shift,
            "lengths": hilbert_function(H, E, args.max_n),
            "e0": c.e0,
            "e1": c.e1,
            "reduction_number": c.reduction_number,
        }
        text = "\n".join(f"{k}: {v}" for k, v in obj.items())
        _emit(obj, args.json, text, out)
    return EXIT_OK


def _run_batch(args, out) -> int:
    path = Path(args.manifest)
    if not path.is_file():
        raise InputError(f"no manifest at {path}")
    manifest = parse_manifest(path.read_text(), path.parent)
    records = run_batch(manifest, workers=args.workers)
    summary = summarize(records)
    if args.json:
        out.write(json.dumps({"records": [r.to_dict() for r in records], "summary": summary}, indent=2) + "\n")
    else:
        for r in records:
            out.write(f"== {r.label} [{r.status}]\n")
            out.write((format_table(r.report) if r.report else str(r.error)) + "\n")
        out.write(summary_line(summary) + "\n")
    if summary["inconsistent"]:
        return EXIT_INCONSISTENT
    if summary["error"]:
        return EXIT_INPUT
    return EXIT_OK


def run_cli(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(list(argv) if argv is not None else None)
    except UsageError as exc:
        err.write(f"agr: {exc}\nusage:\n{GRAMMAR}\n")
        return EXIT_INPUT
    try:
        if args.group == "sgp":
            return _run_sgp(args, out)
        if args.group == "sr":
            c = parse_complex(Path(args.file).read_text())
            r = classify_sr(c, Field.parse(args.field))
            _emit(r.to_dict(), args.json, format_table(r), out)
            return EXIT_OK
        if args.group == "veronese":
            r = classify_veronese(VeroneseInstance(args.d, args.n))
            _emit(r.to_dict(), args.json, format_table(r), out)
            return EXIT_OK
        return _run_batch(args, out)
    except InconsistencyError as exc:
        err.write(f"agr: internal inconsistency: {exc}\n")
        return EXIT_INCONSISTENT
    except (InputError, NoStabilization, ValueError, OSError) as exc:
        err.write(f"agr: {type(exc).__name__}: {exc}\n")
        return EXIT_INPUT
    except AgrError as exc:
        err.write(f"agr: {exc}\n")
        return EXIT_INPUT


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
