"""Command-line front door.

Thin adapter over the library: argument parsing and serialization only.
Exit codes: 0 for a completed analysis (including negative verdicts and
empty searches), 2 for input validation errors, 1 for an internal
inconsistency between independent code paths.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import (
    build_cayley,
    build_dic,
    build_dih,
    build_psd,
    build_sd,
    check_distance_regular,
    classify,
    antipodal_quotient,
    halved_graphs,
    intersection_matrix_spectrum,
    make_group,
    search_difference_sets,
    search_hadamard_pairs,
)
from .errors import InternalInconsistency, ValidationError
from .groups import Subgroup

FAMILY_CHOICES = ["cyclic", "cyclic-x-z2", "dihedral", "dicyclic", "sd", "psd"]


def _parse_residues(text: str | None) -> list[int]:
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError as exc:
        raise ValidationError(f"bad residue list {text!r}") from exc


def _build_graph(args):
    r = _parse_residues(args.R)
    t = _parse_residues(args.T)
    if args.family == "sd":
        return build_sd(args.n, r, t)
    if args.family == "psd":
        return build_psd(args.n, r, t)
    if args.family == "dihedral":
        return build_dih(args.n, r, t)
    if args.family == "dicyclic":
        return build_dic(args.n, r, t)
    if t:
        raise ValidationError(
            f"family {args.family} takes only --R as its connection set"
        )
    return build_cayley(make_group(args.family, args.n), r)


def _emit(args, payload: dict):
    if args.output == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        _emit_text(payload)


def _emit_text(payload: dict, indent: str = ""):
    for key, value in payload.items():
        if isinstance(value, dict):
            print(f"{indent}{key}:")
            _emit_text(value, indent + "  ")
        else:
            print(f"{indent}{key}: {value}")


def _structure_payload(graph) -> dict:
    report = check_distance_regular(graph)
    payload = {"graph": graph.to_json(), **report.to_json()}
    if report.array is not None:
        payload["array"] = report.array.to_json()
    return payload


def cmd_verify(args) -> dict:
    return _structure_payload(_build_graph(args))


def cmd_classify(args) -> dict:
    r = _parse_residues(args.R)
    t = _parse_residues(args.T)
    if args.family not in ("sd", "psd"):
        raise ValidationError("classify covers --family sd|psd")
    return classify(args.family, args.n, r, t).to_json()


def cmd_spectrum(args) -> dict:
    graph = _build_graph(args)
    report = check_distance_regular(graph)
    payload: dict = {"isDRG": report.is_drg}
    if report.is_drg:
        spec = intersection_matrix_spectrum(report.array, graph.order)
        payload["array"] = report.array.to_json()
        payload["spectrum"] = spec.to_json()
    return payload


def cmd_quotient(args) -> dict:
    graph = _build_graph(args)
    quotient = antipodal_quotient(graph)
    report = check_distance_regular(quotient, all_bases=True)
    return {"order": quotient.order, **report.to_json()}


def cmd_halve(args) -> dict:
    graph = _build_graph(args)
    half, _other = halved_graphs(graph)
    report = check_distance_regular(half, all_bases=True)
    return {"order": half.order, **report.to_json()}


def cmd_search_hadamard(args) -> dict:
    result = search_hadamard_pairs(args.family, args.n, threads=args.threads)
    payload = result.to_json()
    # timing is run-dependent; keep the machine output byte-stable
    if args.output == "json":
        payload.pop("elapsedMs", None)
    return payload


def cmd_search_ds(args) -> dict:
    group = make_group(args.family, args.n)
    whole = Subgroup(group, frozenset(group.elements()), "G")
    sets = search_difference_sets(whole, args.k)
    return {
        "family": args.family,
        "n": args.n,
        "k": args.k,
        "count": len(sets),
        "sets": [list(s) for s in sets],
    }


def cmd_selfcheck(args) -> dict:
    from .selfcheck import run_selfcheck

    results = run_selfcheck()
    for name, ok in results:
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
    if not all(ok for _, ok in results):
        raise InternalInconsistency("selfcheck failed")
    return {}


def _add_spec_flags(p, with_sets=True):
    p.add_argument("--family", required=True, choices=FAMILY_CHOICES)
    p.add_argument("--n", required=True, type=int)
    if with_sets:
        p.add_argument("--R", default="")
        p.add_argument("--T", default="")
    p.add_argument("--output", choices=["text", "json"], default="text")
    p.add_argument("--full", action="store_true",
                   help="all-bases / all-representatives validation modes")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="drgforge",
        description="distance-regular Cayley graph toolkit",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    for verb, fn in [
        ("verify", cmd_verify),
        ("classify", cmd_classify),
        ("spectrum", cmd_spectrum),
        ("quotient", cmd_quotient),
        ("halve", cmd_halve),
    ]:
        p = sub.add_parser(verb)
        _add_spec_flags(p)
        p.set_defaults(fn=fn)

    p = sub.add_parser("search-hadamard")
    _add_spec_flags(p, with_sets=False)
    p.add_argument(
        "--threads", type=int,
        default=int(os.environ.get("DRGFORGE_THREADS", 0)) or os.cpu_count(),
    )
    p.set_defaults(fn=cmd_search_hadamard)

    p = sub.add_parser("search-ds")
    _add_spec_flags(p, with_sets=False)
    p.add_argument("--k", required=True, type=int)
    p.set_defaults(fn=cmd_search_ds)

    p = sub.add_parser("selfcheck")
    p.add_argument("--output", choices=["text", "json"], default="text")
    p.set_defaults(fn=cmd_selfcheck)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        payload = args.fn(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalInconsistency as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 1
    if payload:
        _emit(args, payload)
    return 0


if __name__ == "__main__":
    sys.exit(main())
