"""Command line front end.

Exit codes: 0 success (or the property holds), 1 the property is false,
2 usage or input error, 3 inconclusive randomized result.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import asdict, dataclass

from . import closure, jordan, lattice, serialize
from . import oracle as O
from .combinatorics import (
    DomainError, Interval, ParseError, all_intervals, classify_nonsplit, ext_dim,
    format_intervals, hom, parse_interval_list, parse_interval_set, parse_orientation)
from .exact import make_structure, parse_structure_arg
from .tilting import (
    Tilting, class_extrema, enumerate_tiltings, equivalence_classes, mutate, tilting_poset)

OK, FALSE, USAGE, INCONCLUSIVE = 0, 1, 2, 3


@dataclass(frozen=True)
class RunConfig:
    quiver: str
    structure: str
    seed: int
    prime: int
    trials: int
    format: str


class UsageError(Exception):
    pass


def _config(args) -> RunConfig:
    seed = args.seed
    if seed is None:
        env = os.environ.get("QE_SEED")
        try:
            seed = int(env) if env else 0
        except ValueError:
            raise UsageError(f"QE_SEED is not an integer: {env!r}")
    if not 0 <= seed < 2 ** 64:
        raise UsageError("seed must be an unsigned 64-bit integer")
    return RunConfig(args.quiver, args.structure, seed, args.prime, args.trials, args.format)


def _need(args, name):
    val = getattr(args, name)
    if val is None:
        raise UsageError(f"--{name} is required for '{args.command}'")
    return val


def _emit(payload: dict, cfg: RunConfig, table: list[str] | None = None):
    if cfg.format == "table" and table is not None:
        sys.stdout.write("\n".join(table) + "\n")
    else:
        payload = dict(payload)
        payload["config"] = asdict(cfg)
        sys.stdout.write(serialize.dumps(payload))


# -- subcommands ------------------------------------------------------------------

def cmd_ar_quiver(args, cfg, Q, E):
    ivs = all_intervals(Q.n)
    homs = [[str(K), str(L), str(hom(K, L, Q))] for K in ivs for L in ivs
            if K != L and hom(K, L, Q) is not None]
    exts = []
    for K in ivs:
        for L in ivs:
            if ext_dim(K, L, Q):
                sh = classify_nonsplit(K, L, Q)
                exts.append({"quot": str(K), "sub": str(L), "kind": sh.kind,
                             "middle": format_intervals(sh.middle),
                             "admissible": E.admits(K, L)})
    table = [f"{len(ivs)} indecomposables"]
    table += [f"Hom({a}, {b}) via {j}" for a, b, j in homs]
    table += [f"Ext({e['quot']}, {e['sub']}) {e['kind']} -> {','.join(e['middle'])}"
              f"{'' if e['admissible'] else ' [not admissible]'}" for e in exts]
    _emit({"intervals": format_intervals(ivs), "hom": homs, "ext": exts}, cfg, table)
    return OK


def _cat(args, Q):
    return parse_interval_set(_need(args, "cat"), Q)


def _trace(args, cfg, Q, E, op):
    C = _cat(args, Q)
    tr = op(C, E)
    table = [f"stage {i}: {','.join(format_intervals(S))}" for i, S in enumerate(tr.stages)]
    _emit(tr.to_json(), cfg, table)
    return OK


def cmd_gs(args, cfg, Q, E):
    return _trace(args, cfg, Q, E, closure.gs)


def cmd_ck(args, cfg, Q, E):
    return _trace(args, cfg, Q, E, closure.ck)


def cmd_adapted(args, cfg, Q, E):
    ok, wit = closure.is_e_adapted(_cat(args, Q), E)
    payload = {"adapted": ok,
               "witness": None if wit is None else {"quot": str(wit[0]), "sub": str(wit[1])}}
    _emit(payload, cfg, [f"adapted: {ok}" + ("" if wit is None else f" (quot {wit[0]}, sub {wit[1]})")])
    return OK if ok else FALSE


def cmd_serre(args, cfg, Q, E):
    ok = closure.is_e_serre(_cat(args, Q), E)
    _emit({"serre": ok}, cfg, [f"serre: {ok}"])
    return OK if ok else FALSE


def cmd_maximal(args, cfg, Q, E):
    C = _cat(args, Q)
    adapted = closure.is_e_adapted(C, E)[0]
    extclosed = closure.is_extension_closed(C, Q)
    if not (adapted and extclosed):
        payload = {"maximal": False, "adapted": adapted, "extension_closed": extclosed, "witness": None}
        _emit(payload, cfg, [f"maximal: False (adapted {adapted}, extension-closed {extclosed})"])
        return FALSE
    ok, Z = closure.is_maximal_adapted_extclosed(C, E)
    payload = {"maximal": ok, "adapted": True, "extension_closed": True,
               "witness": None if Z is None else str(Z)}
    _emit(payload, cfg, [f"maximal: {ok}" + ("" if Z is None else f" (can add {Z})")])
    return OK if ok else FALSE


def cmd_tiltings(args, cfg, Q, E):
    ts = enumerate_tiltings(Q)
    if args.count:
        _emit({"count": len(ts)}, cfg, [str(len(ts))])
    else:
        _emit({"count": len(ts), "tiltings": [format_intervals(T) for T in ts]},
              cfg, [T.label() for T in ts])
    return OK


def cmd_mutate(args, cfg, Q, E):
    T = Tilting.of(_cat(args, Q))
    from .tilting import is_tilting
    if not is_tilting(T, Q):
        raise DomainError(f"{T.label()} is not a tilting module")
    U = Interval.parse(_need(args, "at"))
    m = mutate(T, U, E)
    if m is None:
        _emit({"mutation": None}, cfg, [f"no {E.kind}-mutation at {U}"])
        return FALSE
    payload = {"mutation": {"at": str(U), "direction": m.direction,
                            "result": format_intervals(m.result),
                            "approximation": format_intervals(m.approximation.parts),
                            "exchange": format_intervals(m.approximation.other_end)}}
    _emit(payload, cfg, [f"{m.direction} mutation at {U}: {m.result.label()}"])
    return OK


def cmd_classes(args, cfg, Q, E):
    out = []
    for cls in equivalence_classes(E):
        ex = class_extrema(cls, E)
        out.append({"members": sorted(format_intervals(T) for T in cls),
                    "min": format_intervals(ex.minimum), "max": format_intervals(ex.maximum),
                    "gs": format_intervals(closure.gs(ex.minimum.as_set(), E).fixpoint)})
    out.sort(key=lambda c: c["min"])
    table = [f"[{len(c['members'])}] min {','.join(c['min'])}  max {','.join(c['max'])}" for c in out]
    _emit({"count": len(out), "classes": out}, cfg, table)
    return OK


def cmd_poset(args, cfg, Q, E):
    P = tilting_poset(E)
    groups = None
    if args.group_by:
        groups = equivalence_classes(make_structure(Q, args.group_by))
    if cfg.format == "dot":
        sys.stdout.write(serialize.poset_dot(P, groups))
    else:
        payload = serialize.poset_json(P, groups)
        table = [f"{P.elements[a].label()}  <  {P.elements[b].label()}" for a, b in P.covers]
        _emit(payload, cfg, table)
    return OK


def cmd_congruence(args, cfg, Q, E):
    P = tilting_poset(make_structure(Q, "max"))
    classes = equivalence_classes(E)
    try:
        cong = lattice.congruence_check(P, classes)
        quo = lattice.quotient_boolean_check(P, classes) if cong.ok else None
    except lattice.NotALattice as exc:
        _emit({"lattice": False, "error": str(exc)}, cfg, [f"not a lattice: {exc}"])
        return FALSE
    payload = {"classes": len(classes), "congruence": cong.ok,
               "boolean": bool(quo and quo.boolean)}
    if cong.counterexample:
        a, x, b, op = cong.counterexample
        payload["counterexample"] = {"a": P.elements[a].label(), "x": P.elements[x].label(),
                                     "b": P.elements[b].label(), "operation": op}
    _emit(payload, cfg, [f"classes {len(classes)}, congruence {cong.ok}, boolean {payload['boolean']}"])
    return OK if cong.ok and payload["boolean"] else FALSE


def cmd_cjr_max(args, cfg, Q, E):
    if args.pair:
        pairs = [jordan.CjrPair.parse(args.pair)]
    else:
        pairs = jordan.maximal_cjr_pairs(Q.n)
    out = []
    for pr in pairs:
        J, T = jordan.pair_constructions(pr, Q)
        out.append({"B": sorted(pr.B), "E": sorted(pr.E), "J": format_intervals(J),
                    "T": format_intervals(T)})
    table = [f"{jordan.CjrPair(frozenset(p['B']), frozenset(p['E']))}: J={','.join(p['J'])}"
             for p in out]
    _emit({"count": len(out), "pairs": out}, cfg, table)
    return OK


def cmd_cjr_check(args, cfg, Q, E):
    ok = jordan.is_cjr(_cat(args, Q), Q)
    _emit({"cjr": ok}, cfg, [f"cjr: {ok}"])
    return OK if ok else FALSE


def cmd_genjf(args, cfg, Q, E):
    parts = parse_interval_list(_need(args, "cat"), Q)
    if not parts:
        raise UsageError("--cat must name at least one interval")
    try:
        jt = jordan.genjf_estimate(parts, cfg.prime, cfg.trials, cfg.seed, Q)
    except jordan.Inconclusive as exc:
        _emit({"genjf": None, "inconclusive": [[list(p) for p in m] for m in exc.maxima]},
              cfg, ["inconclusive"])
        return INCONCLUSIVE
    _emit({"parts": [str(K) for K in parts], "genjf": [list(p) for p in jt]},
          cfg, [" ".join(str(tuple(p)) for p in jt)])
    return OK


def cmd_jr_probe(args, cfg, Q, E):
    C = _cat(args, Q) if args.cat else frozenset(all_intervals(Q.n))
    rep = jordan.jr_probe(C, Q, args.dmax, cfg.prime, cfg.trials, cfg.seed)
    table = [f"{len(rep.objects)} objects, {len(rep.collisions)} collisions, "
             f"{len(rep.inconclusive)} inconclusive"]
    for i, j in rep.collisions:
        table.append("  " + ",".join(map(str, rep.objects[i][0])) + "  ~  "
                     + ",".join(map(str, rep.objects[j][0])))
    _emit(rep.to_json(), cfg, table)
    return INCONCLUSIVE if rep.inconclusive else OK


def cmd_crosscheck(args, cfg, Q, E):
    bad = []
    ivs = all_intervals(Q.n)
    for K in ivs:
        MK = O.interval_rep(K, Q)
        for L in ivs:
            ML = O.interval_rep(L, Q)
            h = O.hom_dim(MK, ML)
            e = O.ext_dim_resolution(MK, ML)
            hc = 0 if hom(K, L, Q) is None else 1
            ec = ext_dim(K, L, Q)
            if (h, e) != (hc, ec):
                bad.append({"quot": str(K), "sub": str(L), "hom": [hc, h], "ext": [ec, e]})
    _emit({"pairs": len(ivs) ** 2, "mismatches": bad}, cfg,
          [f"{len(ivs) ** 2} pairs, {len(bad)} mismatches"])
    return OK if not bad else FALSE


COMMANDS = {
    "ar-quiver": cmd_ar_quiver, "gs": cmd_gs, "ck": cmd_ck, "adapted": cmd_adapted,
    "serre": cmd_serre, "maximal": cmd_maximal, "tiltings": cmd_tiltings,
    "mutate": cmd_mutate, "classes": cmd_classes, "poset": cmd_poset,
    "congruence": cmd_congruence, "cjr-max": cmd_cjr_max, "cjr-check": cmd_cjr_check,
    "genjf": cmd_genjf, "jr-probe": cmd_jr_probe, "crosscheck": cmd_crosscheck,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qe", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--quiver", required=True, help="orientation word over R/L, e.g. RLR")
    p.add_argument("--structure", default="diamond",
                   help="min | max | diamond | custom:<path> (default diamond)")
    p.add_argument("--cat", help='intervals, e.g. "1..2,3..3"')
    p.add_argument("--pair", help='maximal pair, e.g. "B=1,2,3,5;E=3,5,6,7"')
    p.add_argument("--at", help="summand to mutate at")
    p.add_argument("--seed", type=int, default=None, help="falls back to $QE_SEED, then 0")
    p.add_argument("--prime", type=int, default=32003)
    p.add_argument("--trials", type=int, default=64)
    p.add_argument("--dmax", type=int, default=1)
    p.add_argument("--format", choices=("json", "dot", "table"), default="json")
    p.add_argument("--count", action="store_true")
    p.add_argument("--group-by", choices=("min", "max", "diamond"), default=None,
                   help="poset: cluster nodes by reachability classes of this structure")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        cfg = _config(args)
        Q = parse_orientation(args.quiver)
        E = parse_structure_arg(Q, args.structure)
        if cfg.format == "dot" and args.command != "poset":
            raise UsageError("--format dot is only available for 'poset'")
        return COMMANDS[args.command](args, cfg, Q, E)
    except (UsageError, ParseError, DomainError, OSError) as exc:
        print(f"qe {args.command}: error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
