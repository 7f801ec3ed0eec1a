"""Command-line front end.

Every computation is exposed as a subcommand with deterministic output in
either JSON (machine-readable, ``--format json``) or a plain table.  Simple
roots are numbered from 1 in all user-facing input and output; weights are
entered in fundamental coordinates unless ``--basis root`` is given.
"""

from __future__ import annotations

import argparse
import json
import sys as _sys

from . import blocks as _blocks
from . import dirac as _dirac
from . import klpoly as _klpoly
from . import verify as _verify
from .rootsys import (
    CartanError,
    DomainError,
    InternalConsistencyError,
    ResourceCapError,
    RootSystem,
    Weight,
    build_root_system,
    parse_weight,
)
from .weylgroup import CoxeterSystem, WeylElem, format_word, parse_word

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_VERIFY = 2


def _parse_parabolic(text: str, rank: int) -> frozenset[int]:
    text = text.strip()
    if not text:
        return frozenset()
    out = set()
    for chunk in text.split(","):
        try:
            i = int(chunk.strip())
        except ValueError:
            raise DomainError(f"cannot parse parabolic index {chunk.strip()!r}") from None
        if not 1 <= i <= rank:
            raise DomainError(f"parabolic index {i} out of range 1..{rank}")
        out.add(i - 1)
    return frozenset(out)


def _load_weight(args, rs: RootSystem) -> Weight:
    w = parse_weight(args.weight, rs.rank)
    if getattr(args, "basis", "fundamental") == "root":
        coords = [
            sum(rs.cartan[k][j] * w[j] for j in range(rs.rank)) for k in range(rs.rank)
        ]
        w = Weight(coords)
    return w


def _weight_json(w: Weight) -> list[str]:
    return [str(c) for c in w]


def _emit(args, payload: dict, table: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(table)


def _system(args, enumerates: bool = True) -> RootSystem:
    rs = build_root_system(args.type)
    cap = getattr(args, "size_cap", None)
    if enumerates and cap is not None and rs.cartan_type.weyl_order() > cap:
        raise ResourceCapError(
            f"Weyl group order {rs.cartan_type.weyl_order()} exceeds --size-cap {cap}"
        )
    return rs


def _ambient(args, rs: RootSystem) -> CoxeterSystem:
    W = _blocks.ambient_weyl(rs)
    if getattr(args, "cache", None):
        _klpoly.load_cache_file(W, args.cache)
    return W


def _save_cache(args, W: CoxeterSystem) -> None:
    if getattr(args, "cache", None):
        _klpoly.save_cache_file(W, args.cache)


def _hd_payload(rs: RootSystem, I: frozenset[int], lam: Weight, entries: dict[Weight, int]) -> dict:
    return {
        "schema": 1,
        "type": str(rs.cartan_type),
        "lambda": _weight_json(lam),
        "I": sorted(i + 1 for i in I),
        "entries": [
            {"weight": _weight_json(k), "mult": entries[k]} for k in sorted(entries)
        ],
    }


def _hd_table(entries: dict[Weight, int]) -> str:
    return "\n".join(f"{k}  x{entries[k]}" for k in sorted(entries)) or "(empty)"


# -- subcommand handlers ---------------------------------------------------------


def cmd_roots(args) -> int:
    rs = _system(args, enumerates=False)
    payload = {
        "schema": 1,
        "type": str(rs.cartan_type),
        "rank": rs.rank,
        "cartan": [list(row) for row in rs.cartan],
        "positive_count": len(rs.positive),
        "root_count": len(rs.roots),
        "weyl_order": rs.cartan_type.weyl_order(),
        "rho": _weight_json(rs.rho),
        "simple_roots": [list(r) for r in rs.simple_roots()],
        "positive_roots": [list(r) for r in rs.positive],
    }
    lines = [
        f"type {rs.cartan_type}  rank {rs.rank}",
        f"positive roots: {len(rs.positive)}   Weyl group order: {rs.cartan_type.weyl_order()}",
        "positive roots (simple-root coordinates):",
    ] + ["  " + ",".join(str(c) for c in r) for r in rs.positive]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _parse_elems(W: CoxeterSystem, words: list[str]) -> list[WeylElem]:
    return [W.from_word(parse_word(t, W.ngen)) for t in words]


def cmd_kl(args) -> int:
    rs = _system(args)
    W = _ambient(args, rs)
    x, w = _parse_elems(W, [args.x, args.w])
    poly = _klpoly.kl(W, x, w)
    _save_cache(args, W)
    if args.emit_dot:
        _write_interval_dot(W, x, w, args.emit_dot)
    payload = {
        "schema": 1,
        "type": str(rs.cartan_type),
        "x": format_word(x.word),
        "w": format_word(w.word),
        "coeffs": poly.to_list(),
        "rendered": str(poly),
    }
    _emit(args, payload, str(poly))
    return EXIT_OK


def _write_interval_dot(W: CoxeterSystem, x: WeylElem, w: WeylElem, path: str) -> None:
    members = [z for z in W.elements if W.bruhat_leq(x, z) and W.bruhat_leq(z, w)]
    lines = ["digraph bruhat_interval {"]
    for z in members:
        lines.append(f'  "{format_word(z.word)}";')
    for a in members:
        for b in members:
            if b.length == a.length + 1 and W.bruhat_leq(a, b):
                lines.append(f'  "{format_word(a.word)}" -> "{format_word(b.word)}";')
    lines.append("}")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def cmd_pkl(args) -> int:
    rs = _system(args)
    W = _ambient(args, rs)
    J = _parse_parabolic(args.J, rs.rank)
    y = {"q": _klpoly.TYPE_Q, "neg1": _klpoly.TYPE_NEG1}.get(args.y)
    if y is None:
        raise DomainError("--y must be q or neg1")
    u, v = _parse_elems(W, [args.u, args.v])
    poly = _klpoly.parabolic_p(W, J, y, u, v)
    _save_cache(args, W)
    payload = {
        "schema": 1,
        "type": str(rs.cartan_type),
        "J": sorted(j + 1 for j in J),
        "y": args.y,
        "u": format_word(u.word),
        "v": format_word(v.word),
        "coeffs": poly.to_list(),
        "rendered": str(poly),
    }
    _emit(args, payload, str(poly))
    return EXIT_OK


def cmd_klv(args) -> int:
    rs = _system(args)
    I = _parse_parabolic(args.parabolic, rs.rank)
    lam = _load_weight(args, rs)
    block = _blocks.build_block(rs, I, lam)
    grp = block.wgrp
    x, w = _parse_elems(grp, [args.x, args.w])
    poly = _dirac.klv(block, x, w)
    payload = {
        "schema": 1,
        "type": str(rs.cartan_type),
        "lambda": _weight_json(lam),
        "I": sorted(i + 1 for i in I),
        "integral_simples": [list(r) for r in block.delta_int],
        "block": block.to_json_dict(),
        "x": format_word(x.word),
        "w": format_word(w.word),
        "coeffs": poly.to_list(),
        "rendered": str(poly),
    }
    _emit(args, payload, str(poly))
    return EXIT_OK


def cmd_hd(args) -> int:
    rs = _system(args)
    I = _parse_parabolic(args.parabolic, rs.rank)
    lam = _load_weight(args, rs)
    entries = _dirac.dirac_cohomology_simple(rs, I, lam)
    _emit(args, _hd_payload(rs, I, lam, entries), _hd_table(entries))
    return EXIT_OK


def cmd_hd_verma(args) -> int:
    rs = _system(args)
    I = _parse_parabolic(args.parabolic, rs.rank)
    lam = _load_weight(args, rs)
    entries = _dirac.dirac_cohomology_parabolic_verma(rs, I, lam)
    _emit(args, _hd_payload(rs, I, lam, entries), _hd_table(entries))
    return EXIT_OK


def cmd_wset(args) -> int:
    rs = _system(args)
    I = _parse_parabolic(args.parabolic, rs.rank)
    lam = _load_weight(args, rs)
    ws = sorted(_dirac.w_set(rs, I, lam))
    payload = {
        "schema": 1,
        "type": str(rs.cartan_type),
        "lambda": _weight_json(lam),
        "I": sorted(i + 1 for i in I),
        "weights": [_weight_json(w) for w in ws],
    }
    _emit(args, payload, "\n".join(str(w) for w in ws) or "(empty)")
    return EXIT_OK


def cmd_params(args) -> int:
    rs = _system(args)
    I = _parse_parabolic(args.parabolic, rs.rank)
    lam = _load_weight(args, rs)
    rep = _dirac.param_report(rs, I, lam)
    payload = rep.to_json_dict()
    payload["type"] = str(rs.cartan_type)
    lines = []
    for name in ("w_set", "linkage_set", "mult_set", "embed_set", "hull_set"):
        weights = sorted(getattr(rep, name))
        lines.append(f"{name}: " + "  ".join(str(w) for w in weights))
    for flag, value in rep.flags().items():
        lines.append(f"{flag}: {value}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_kostant(args) -> int:
    rs = _system(args)
    I = _parse_parabolic(args.parabolic, rs.rank)
    lam = _load_weight(args, rs)
    value = _dirac.is_kostant(rs, I, lam)
    payload = {
        "schema": 1,
        "type": str(rs.cartan_type),
        "lambda": _weight_json(lam),
        "I": sorted(i + 1 for i in I),
        "kostant": value,
    }
    _emit(args, payload, f"kostant: {str(value).lower()}")
    return EXIT_OK


def cmd_simple(args) -> int:
    rs = _system(args)
    lam = _load_weight(args, rs)
    if args.module == "verma":
        verdict = _dirac.verma_is_simple(rs, lam)
        sides = {
            "antidominant": verdict.antidominant_side,
            "linkage_singleton": verdict.linkage_side,
        }
        simple = verdict.verdict
        I: frozenset[int] = frozenset()
    else:
        I = _parse_parabolic(args.parabolic, rs.rank)
        verdict = _dirac.parabolic_verma_is_simple(rs, I, lam)
        sides = {
            "antidominant_twist": verdict.twist_side,
            "jantzen_empty": verdict.jantzen_side,
        }
        simple = verdict.verdict
    payload = {
        "schema": 1,
        "type": str(rs.cartan_type),
        "module": args.module,
        "lambda": _weight_json(lam),
        "I": sorted(i + 1 for i in I),
        "simple": simple,
        "sides": sides,
    }
    _emit(args, payload, f"simple: {str(simple).lower()}")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.plan:
        with open(args.plan) as fh:
            raw = json.load(fh)
        plan = _verify.SweepPlan(
            systems=tuple(raw["systems"]),
            parabolics=None
            if raw.get("parabolics") is None
            else tuple(tuple(i - 1 for i in p) for p in raw["parabolics"]),
            seeds=None if raw.get("seeds") is None else tuple(raw["seeds"]),
            checks=None if raw.get("checks") is None else tuple(raw["checks"]),
            size_cap=raw.get("size_cap", args.size_cap),
        )
    elif args.systems:
        plan = _verify.SweepPlan(
            systems=tuple(s.strip() for s in args.systems.split(",") if s.strip()),
            checks=None
            if not args.checks
            else tuple(c.strip() for c in args.checks.split(",")),
            size_cap=args.size_cap,
        )
    else:
        raise DomainError("verify needs --plan FILE or --systems LIST")
    report = _verify.run_sweep(plan, workers=args.workers)
    if args.format == "json":
        print(report.to_json(include_timings=args.timings))
    else:
        print(report.to_table())
    return EXIT_OK if report.passed else EXIT_VERIFY


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diracoh",
        description=(
            "Dirac-cohomology multisets of simple highest-weight modules, "
            "their parameterizing weight sets, and the Kazhdan-Lusztig "
            "machinery underneath, over exact rational arithmetic."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, parabolic=True, weight=True, cache=False, basis=True):
        p.add_argument("--type", required=True, help="Cartan type, e.g. A3, B2, A2xA1")
        if parabolic:
            p.add_argument(
                "--parabolic",
                default="",
                help="comma-separated 1-based simple-root indices (empty for none)",
            )
        if weight:
            p.add_argument("--weight", required=True, help="weight literal, e.g. 0,1/2,-3")
            if basis:
                p.add_argument(
                    "--basis",
                    choices=("fundamental", "root"),
                    default="fundamental",
                    help="basis of the entered weight coordinates",
                )
        if cache:
            p.add_argument("--cache", help="persistent KL cache file (JSON)")
        p.add_argument(
            "--size-cap",
            type=int,
            default=10**6,
            help="refuse Weyl groups larger than this many elements",
        )
        p.add_argument("--format", choices=("json", "table"), default="json")

    p = sub.add_parser("roots", help="root-system summary")
    common(p, parabolic=False, weight=False)
    p.set_defaults(fn=cmd_roots)

    p = sub.add_parser("kl", help="ordinary KL polynomial P[x,w]")
    common(p, parabolic=False, weight=False, cache=True)
    p.add_argument("x", help="element word, e.g. s2 or s2*s1 or e")
    p.add_argument("w", help="element word")
    p.add_argument("--emit-dot", help="write the Bruhat interval [x,w] as a DOT file")
    p.set_defaults(fn=cmd_kl)

    p = sub.add_parser("pkl", help="relative KL polynomial of type q or -1")
    common(p, parabolic=False, weight=False, cache=True)
    p.add_argument("--J", default="", help="parabolic generators, 1-based CSV")
    p.add_argument("--y", required=True, choices=("q", "neg1"), help="polynomial type")
    p.add_argument("u", help="minimal coset representative word")
    p.add_argument("v", help="minimal coset representative word")
    p.set_defaults(fn=cmd_pkl)

    p = sub.add_parser(
        "klv",
        help="relative KLV polynomial at a weight (words in the integral group)",
    )
    common(p)
    p.add_argument("x", help="word in the integral Weyl group")
    p.add_argument("w", help="word in the integral Weyl group")
    p.set_defaults(fn=cmd_klv)

    p = sub.add_parser("hd", help="Dirac cohomology of the simple module")
    common(p)
    p.set_defaults(fn=cmd_hd)

    p = sub.add_parser("hd-verma", help="Dirac cohomology of the parabolic Verma module")
    common(p)
    p.set_defaults(fn=cmd_hd_verma)

    p = sub.add_parser("wset", help="parameterizing weight set of the Dirac cohomology")
    common(p)
    p.set_defaults(fn=cmd_wset)

    p = sub.add_parser("params", help="all five parameterization sets and their flags")
    common(p)
    p.set_defaults(fn=cmd_params)

    p = sub.add_parser("kostant", help="Kostant-module detection (regular weights)")
    common(p)
    p.set_defaults(fn=cmd_kostant)

    p = sub.add_parser("simple", help="simplicity criteria for (parabolic) Verma modules")
    common(p)
    p.add_argument("--module", choices=("verma", "parabolic"), default="verma")
    p.set_defaults(fn=cmd_simple)

    p = sub.add_parser("verify", help="run the theorem sweep and report")
    p.add_argument("--plan", help="JSON plan file")
    p.add_argument("--systems", help="comma-separated Cartan types (default plan)")
    p.add_argument(
        "--checks",
        help="comma-separated check names (default: all). Known checks: "
        + ", ".join(_verify.ALL_CHECKS),
    )
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--size-cap", type=int, default=10**6)
    p.add_argument("--timings", action="store_true", help="include wall-clock timings")
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.set_defaults(fn=cmd_verify)

    return parser


def _glue_weight_values(argv: list[str]) -> list[str]:
    # weights often start with '-'; join them onto the flag so argparse does
    # not mistake them for options
    out: list[str] = []
    i = 0
    while i < len(argv):
        if argv[i] == "--weight" and i + 1 < len(argv):
            out.append(f"--weight={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = _sys.argv[1:]
    args = parser.parse_args(_glue_weight_values(list(argv)))
    try:
        return args.fn(args)
    except (DomainError, CartanError, ResourceCapError) as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return EXIT_DOMAIN
    except InternalConsistencyError as exc:
        print(f"internal consistency error: {exc}", file=_sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    raise SystemExit(main())
