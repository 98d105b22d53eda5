"""Command-line surface: parse circuits, run builders, emit quivers and reports.

Exit codes: 0 success, 1 validation error (the message names the failed
invariant), 2 verification failure (a witness is printed as JSON).
"""

from __future__ import annotations

import argparse
import json
import sys

from .amodel1d import geometric_oracle, intersection_count, intersection_indices
from .amodelrec import build_acategory, verify_iso
from .balgebra import Arrow, build_bcategory, quiver
from .circuit import Circuit, classify, signature, validate_circuit, volume
from .errors import CircuitCatError
from .mutation import check_koszul_duality, gram_of_collection, half_twist, mutate_left
from .sweep import balanced_markings, canonical_circuits, with_marking


def _circuit_from(args) -> Circuit:
    a = [int(tok) for tok in args.a.split(",")]
    nu = [int(tok) for tok in args.nu.split(",")] if args.nu else None
    return validate_circuit(a, nu)


def _dump(payload, args) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    _write(text, args)


def _write(text: str, args) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def emit_dot(arrows: list[Arrow], n: int) -> str:
    """Deterministic DOT rendering of a quiver with nodes R0..R{n-1}."""
    lines = ["digraph quiver {", "  rankdir=LR;"]
    for i in range(n):
        lines.append(f"  R{i};")
    for arrow in arrows:
        lines.append(f'  R{arrow.src} -> R{arrow.dst} [label="{arrow.label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cmd_info(args) -> int:
    c = _circuit_from(args)
    kind = classify(c)
    p, q = signature(c)
    _write(
        "circuit {}\nsignature ({}, {})\nvolume {}\nkind {}\nmu {}\n"
        "x_plus {}\nx_minus {}\n".format(
            c.text, p, q, volume(c), kind.kind, kind.mu, kind.x_plus, kind.x_minus
        ),
        args,
    )
    return 0


def _cmd_bmodel(args) -> int:
    c = _circuit_from(args)
    cat = build_bcategory(c, args.n)
    dims = {f"{j},{k}": cat.dim(j, k) for (j, k) in sorted(cat.hom)}
    _dump({"circuit": c.text, "objects": args.n, "dims": dims}, args)
    return 0


def _cmd_emit_json(args) -> int:
    c = _circuit_from(args)
    _dump(build_bcategory(c, args.n).to_json_dict(), args)
    return 0


def _cmd_amodel(args) -> int:
    c = _circuit_from(args)
    cat = build_acategory(c, args.n)
    dims = {f"{j},{k}": cat.dim(j, k) for (j, k) in sorted(cat.hom)}
    _dump(
        {
            "circuit": c.text,
            "objects": args.n,
            "flavor": cat.flavor,
            "dual_leaves": list(cat.dual_leaves),
            "dims": dims,
        },
        args,
    )
    return 0


def _cmd_emit_dot(args) -> int:
    c = _circuit_from(args)
    _write(emit_dot(quiver(c, args.n), args.n), args)
    return 0


def _cmd_verify(args) -> int:
    if args.sweep:
        return _verify_sweep(args)
    c = _circuit_from(args)
    report = verify_iso(c, args.n)
    _dump(report, args)
    return 0 if report["dims_match"] and report["compositions_match"] else 2


def _verify_sweep(args) -> int:
    reports = []
    failed = 0
    for base in canonical_circuits(args.max_d, args.max_entry):
        markings = (
            balanced_markings(base.rank, args.nu_bound)
            if args.nu_bound
            else [(0,) * base.rank]
        )
        for nu in markings:
            c = with_marking(base, nu)
            for n in range(1, volume(c)):
                report = verify_iso(c, n)
                ok = report["dims_match"] and report["compositions_match"]
                if not ok:
                    failed += 1
                    reports.append(report)
    summary = {"failures": failed, "reports": reports}
    _dump(summary, args)
    return 0 if failed == 0 else 2


def _cmd_mutate(args) -> int:
    c = _circuit_from(args)
    if args.check_duality:
        ok = check_koszul_duality(c, args.n)
        _dump({"circuit": c.text, "n": args.n, "koszul_dual": ok}, args)
        return 0 if ok else 2
    g = gram_of_collection(c, args.n, args.mode)
    payload = {"circuit": c.text, "n": args.n, "gram": g.to_json_dict()}
    if args.half_twist:
        payload["half_twist"] = half_twist(g).to_json_dict()
    if args.word:
        for i in (int(tok) for tok in args.word.split(",")):
            g = mutate_left(g, i)
        payload["mutated"] = g.to_json_dict()
    _dump(payload, args)
    return 0


def _cmd_oracle(args) -> int:
    indices = intersection_indices(args.a0, args.a1, args.j, args.k)
    count = intersection_count(args.a0, args.a1, args.j, args.k)
    geometric = geometric_oracle(args.a0, args.a1, args.j, args.k)
    if args.json:
        _dump(
            {
                "a0": args.a0,
                "a1": args.a1,
                "j": args.j,
                "k": args.k,
                "count": count,
                "indices": indices,
                "geometric": geometric,
            },
            args,
        )
    else:
        agree = "yes" if indices == geometric and count == len(indices) else "NO"
        _write(
            "a0={} a1={} j={} k={}\ncount   {}\nindices {}\nexact   {}\nagree   {}\n".format(
                args.a0, args.a1, args.j, args.k, count, indices, geometric, agree
            ),
            args,
        )
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circuitcat",
        description="Exact categories over balanced integer circuits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def circuit_flags(p, with_n=True):
        p.add_argument("--a", required=True, help="comma-separated entries")
        p.add_argument("--nu", default="", help="comma-separated marking (default 0)")
        if with_n:
            p.add_argument("--n", type=int, required=True, help="object count")
        p.add_argument("--out", default="", help="write output to a file")

    p = sub.add_parser("info", help="signature, volume and classification")
    circuit_flags(p, with_n=False)
    p.set_defaults(fn=_cmd_info)

    p = sub.add_parser("bmodel", help="algebra-side category dimensions")
    circuit_flags(p)
    p.set_defaults(fn=_cmd_bmodel)

    p = sub.add_parser("amodel", help="mirror-side category dimensions")
    circuit_flags(p)
    p.set_defaults(fn=_cmd_amodel)

    p = sub.add_parser("verify", help="run the mirror verification")
    p.add_argument("--a", default="", help="comma-separated entries")
    p.add_argument("--nu", default="")
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--out", default="")
    p.add_argument("--sweep", action="store_true", help="verify a whole family")
    p.add_argument("--max-d", type=int, default=3, dest="max_d")
    p.add_argument("--max-entry", type=int, default=5, dest="max_entry")
    p.add_argument(
        "--nu-bound",
        type=int,
        default=0,
        dest="nu_bound",
        help="also sweep balanced markings up to this bound",
    )
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("mutate", help="Gram matrices and braid mutations")
    circuit_flags(p)
    p.add_argument("--mode", choices=["euler", "poincare"], default="euler")
    p.add_argument("--word", default="", help="positions for left mutations, e.g. 1,2,1")
    p.add_argument("--half-twist", action="store_true", dest="half_twist")
    p.add_argument("--check-duality", action="store_true", dest="check_duality")
    p.set_defaults(fn=_cmd_mutate)

    p = sub.add_parser("emit-dot", help="quiver of generator arrows as DOT")
    circuit_flags(p)
    p.set_defaults(fn=_cmd_emit_dot)

    p = sub.add_parser("emit-json", help="full category dump as JSON")
    circuit_flags(p)
    p.set_defaults(fn=_cmd_emit_json)

    p = sub.add_parser("oracle", help="intersection index table")
    p.add_argument("--a0", type=int, required=True)
    p.add_argument("--a1", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", default="")
    p.set_defaults(fn=_cmd_oracle)

    return parser


def run(argv: list[str]) -> int:
    """Entry point used by tests; returns the exit code."""
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except CircuitCatError as exc:
        sys.stderr.write(f"error[{exc.code}]: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
