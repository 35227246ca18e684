"""Command-line front end.

Subcommands:
  check       axiom checkers on a bialgebra JSON file
  pipeline    filtration / graded / coinvariants / PBW chain for (H, K)
  corpus      run the built-in corpus against its recorded expectations
  nf          straightened normal form of a word in a braided basis
  commutator  braided commutator of two words in the free algebra
  hilbert     graded dimensions of the braided symmetric algebra
  grk         write the associated graded bialgebra of (H, K)
  coinv       write the coinvariant algebra of a graded bialgebra
  pbw         PBW report for a connected graded bialgebra

Exit codes: 0 success, 1 check or expectation failure, 2 malformed input.
"""
from __future__ import annotations

import argparse
import os
import sys

from .braided_space import diagonal_braiding
from .corpus import corpus_entries
from .coinvariants import CoinvariantsError, compute_R
from .filtration import FiltrationError, associated_graded, hopf_filtration
from .pbw import pbw_basis, pbw_verdict, compute_Q
from .pipeline import PipelineError, check_report, compare_expectations, flat_summary, run_pipeline
from .serialize import (
    InputError,
    bialgebra_from_json,
    bialgebra_to_json,
    braided_basis_from_json,
    coinvariants_to_json,
    dumps_canonical,
    load_json_file,
    subspace_from_json,
)
from .symmetric_algebra import SymmetricAlgebra
from .tensor_algebra import TensorAlgebra, degree_cap_default

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2


def _emit(doc, args) -> None:
    text = dumps_canonical(doc)
    if getattr(args, "report", None):
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(text)
    if getattr(args, "format", "text") == "json":
        sys.stdout.write(text)


def cmd_check(args) -> int:
    h = bialgebra_from_json(load_json_file(args.input))
    doc = check_report(h)
    _emit(doc, args)
    if args.format == "text":
        for name in ("algebra", "coalgebra", "bialgebra", "antipode"):
            entry = doc.get(name)
            if entry is None:
                continue
            status = {True: "ok", False: "FAIL", None: "skipped"}[entry["ok"]]
            print(f"{name}: {status} ({entry['checked']} checks, {entry['skipped']} skipped)")
            for v in entry["violations"][:10]:
                print(f"  {v['axiom']} at {tuple(v['witness'])}: {v['lhs']} != {v['rhs']}")
    return EXIT_OK if doc["all_ok"] else EXIT_FAIL


def cmd_pipeline(args) -> int:
    h = bialgebra_from_json(load_json_file(args.input))
    k = subspace_from_json(load_json_file(args.sub), h)
    report = run_pipeline(h, k, args.degree)
    _emit(report, args)
    if args.format == "text":
        summary = flat_summary(report)
        for key in sorted(summary):
            print(f"{key}: {summary[key]}")
    return EXIT_OK


def cmd_corpus(args) -> int:
    entries = corpus_entries()
    if args.dir:
        docs = []
        names = sorted(os.listdir(args.dir)) if os.path.isdir(args.dir) else []
        names = [n for n in names if n.endswith(".json")]
        if not names:
            print(f"no corpus entries found in {args.dir}", file=sys.stderr)
            return EXIT_INPUT
        for fname in names:
            docs.append(load_json_file(os.path.join(args.dir, fname)))
        runs = [(doc["name"], bialgebra_from_json(doc["bialgebra"]),
                 doc.get("sub"), doc.get("degree", 0), doc.get("expect", {}))
                for doc in docs]
    else:
        if args.entry and not any(e.name == args.entry for e in entries):
            print(f"unknown corpus entry {args.entry!r}", file=sys.stderr)
            return EXIT_INPUT
        runs = []
        for entry in entries:
            if args.entry and entry.name != args.entry:
                continue
            h = entry.build()
            sub = None
            if entry.sub_indices is not None:
                from .filtration import subspace_from_indices
                from .serialize import subspace_to_json
                sub = subspace_to_json(subspace_from_indices(h, entry.sub_indices))
            runs.append((entry.name, h, sub, entry.degree, dict(entry.expect)))
    results = {}
    failures = 0
    for name, h, sub, degree, expect in runs:
        try:
            if sub is None:
                summary = {"axioms": "pass" if check_report(h)["all_ok"] else "fail"}
                report = {"axioms": summary["axioms"]}
            else:
                k = subspace_from_json(sub, h)
                report = run_pipeline(h, k, degree)
                summary = flat_summary(report)
        except (PipelineError, FiltrationError, CoinvariantsError, InputError) as exc:
            summary = {"error": str(exc)}
        mism = compare_expectations(expect, summary)
        ok = not mism
        failures += 0 if ok else 1
        results[name] = {"ok": ok, "summary": summary, "mismatches": mism}
        print(f"{name:>24}  {'ok' if ok else 'FAIL'}"
              + ("" if ok else "  |  " + "; ".join(mism)))
    doc = {"entries": results, "failures": failures}
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(dumps_canonical(doc))
    if args.write_dir:
        _write_corpus_dir(args.write_dir, args.entry)
    return EXIT_OK if failures == 0 else EXIT_FAIL


def _write_corpus_dir(path: str, only: str | None = None) -> None:
    from .filtration import subspace_from_indices
    from .serialize import subspace_to_json

    os.makedirs(path, exist_ok=True)
    for entry in corpus_entries():
        if only and entry.name != only:
            continue
        h = entry.build()
        doc = {
            "name": entry.name,
            "bialgebra": bialgebra_to_json(h),
            "sub": None,
            "degree": entry.degree,
            "expect": dict(entry.expect),
        }
        if entry.sub_indices is not None:
            doc["sub"] = subspace_to_json(subspace_from_indices(h, entry.sub_indices))
        with open(os.path.join(path, f"{entry.name}.json"), "w", encoding="utf-8") as fh:
            fh.write(dumps_canonical(doc))


def _load_symmetric(args) -> SymmetricAlgebra:
    _, chi, basis = braided_basis_from_json(load_json_file(args.input))
    return SymmetricAlgebra.from_bicharacter(chi, basis)


def cmd_nf(args) -> int:
    sym = _load_symmetric(args)
    letters = []
    for token in args.word:
        letters.extend(token.split())
    try:
        word = tuple(sym.names.index(t) for t in letters)
    except ValueError as exc:
        raise InputError(f"unknown generator in word: {exc}") from exc
    print(sym.render(sym.normal_form(word)))
    return EXIT_OK


def cmd_commutator(args) -> int:
    _, chi, basis = braided_basis_from_json(load_json_file(args.input))
    braiding = diagonal_braiding(chi, basis)
    alg = TensorAlgebra(braiding, list(basis.names))
    try:
        left = {tuple(alg.names.index(t) for t in args.left.split()):_one()}
        right = {tuple(alg.names.index(t) for t in args.right.split()): _one()}
    except ValueError as exc:
        raise InputError(f"unknown generator in word: {exc}") from exc
    print(alg.render(alg.commutator(left, right)))
    return EXIT_OK


def _one():
    from .scalars import ONE

    return ONE


def cmd_hilbert(args) -> int:
    sym = _load_symmetric(args)
    dims = sym.hilbert_series(args.degree)
    print(" ".join(str(n) for n in dims))
    return EXIT_OK


def cmd_grk(args) -> int:
    h = bialgebra_from_json(load_json_file(args.input))
    k = subspace_from_json(load_json_file(args.sub), h)
    grres = associated_graded(h, hopf_filtration(h, k))
    doc = bialgebra_to_json(grres.algebra)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(dumps_canonical(doc))
    print(f"associated graded written to {args.out} "
          f"(dims {[len(grres.algebra.degree_indices(n)) for n in range(grres.algebra.max_degree() + 1)]})")
    return EXIT_OK


def cmd_coinv(args) -> int:
    gr = bialgebra_from_json(load_json_file(args.input))
    coinv = compute_R(gr)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(dumps_canonical(coinvariants_to_json(coinv)))
    print(f"coinvariant algebra written to {args.out} (dim {coinv.algebra.dim})")
    return EXIT_OK


def cmd_pbw(args) -> int:
    h = bialgebra_from_json(load_json_file(args.input))
    report = pbw_verdict(h, args.degree)
    basis = pbw_basis(compute_Q(h), report)
    doc = report.to_json()
    doc["basis"] = basis.monomials
    doc["refusal"] = basis.refusal
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(dumps_canonical(doc))
    print(f"verdict: {report.verdict}")
    print("dims (target, symmetric):", report.degreewise_dims)
    if report.first_failure_degree is not None:
        print(f"first failure degree: {report.first_failure_degree}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidpbw",
        description="exact engine for braided bialgebras: axioms, filtrations, "
                    "coinvariants, PBW verdicts")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run the axiom checkers on a bialgebra")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--report")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("pipeline", help="full relative-filtration analysis")
    p.add_argument("--input", required=True)
    p.add_argument("--sub", required=True)
    p.add_argument("--degree", type=int, default=degree_cap_default() - 2)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--report")
    p.set_defaults(fn=cmd_pipeline)

    p = sub.add_parser("corpus", help="run the built-in corpus")
    p.add_argument("--entry")
    p.add_argument("--dir", help="load corpus entries from a directory instead")
    p.add_argument("--report")
    p.add_argument("--write-dir", help="also export the built-in corpus as JSON files")
    p.set_defaults(fn=cmd_corpus)

    p = sub.add_parser("nf", help="normal form of a word in a braided basis")
    p.add_argument("--input", required=True)
    p.add_argument("word", nargs="+")
    p.set_defaults(fn=cmd_nf)

    p = sub.add_parser("commutator", help="braided commutator of two words")
    p.add_argument("--input", required=True)
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.set_defaults(fn=cmd_commutator)

    p = sub.add_parser("hilbert", help="graded dimensions of the symmetric algebra")
    p.add_argument("--input", required=True)
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(fn=cmd_hilbert)

    p = sub.add_parser("grk", help="associated graded bialgebra of (H, K)")
    p.add_argument("--input", required=True)
    p.add_argument("--sub", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_grk)

    p = sub.add_parser("coinv", help="coinvariant algebra of a graded bialgebra")
    p.add_argument("--input", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_coinv)

    p = sub.add_parser("pbw", help="PBW report for a connected graded bialgebra")
    p.add_argument("--input", required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--report")
    p.set_defaults(fn=cmd_pbw)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (PipelineError, FiltrationError, CoinvariantsError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
