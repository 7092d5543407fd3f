"""Command-line surface: crystal graphs, Keys, Demazure data, core reports
and multisegment procedures.

Exit codes: 0 success, 2 negative decision (not a member / not a core / not
aperiodic / not in orbit), 1 usage or data errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import affine, engine, multisegments, typea, typec, weyl
from .abacus import MultiSymbol, Symbol, as_partition
from .cartan import cartan_datum
from .characters import character_of, demazure_character

SCHEMA = "crystalkeys/1"


class CliError(Exception):
    pass


def _parse_ints(text: str) -> tuple[int, ...]:
    if not text:
        return ()
    return tuple(int(tok) for tok in text.replace(" ", "").split(",") if tok)


def _family(tag: str) -> str:
    fam = tag.split(":")[0]
    if fam not in ("A", "C", "A~"):
        raise CliError(f"unsupported type tag {tag!r}")
    return fam


def _rank_of(tag: str) -> int:
    return int(tag.split(":")[1])


def _heights_from_weight(coeffs) -> tuple[int, ...]:
    heights = []
    for i in range(len(coeffs), 0, -1):
        heights.extend([i] * coeffs[i - 1])
    if not heights:
        raise CliError("weight must involve at least one fundamental weight")
    return tuple(heights)


def _finite_crystal(tag: str, weight_coeffs):
    fam = _family(tag)
    n = _rank_of(tag)
    heights = _heights_from_weight(weight_coeffs)
    if fam == "A":
        return typea.TableauCrystal(n, heights)
    if fam == "C":
        return typec.SymplecticTableauCrystal(n, heights)
    raise CliError("affine crystals are selected by --charges")


def _affine_modulus(tag: str):
    param = tag.split(":")[1]
    return None if param == "inf" else int(param)


def _build_crystal(args):
    fam = _family(args.type)
    if fam in ("A", "C"):
        if args.weight is None:
            raise CliError("--weight is required for finite types")
        return _finite_crystal(args.type, _parse_ints(args.weight))
    if args.charges is None:
        raise CliError("--charges is required for affine type")
    if args.rank_bound is None:
        raise CliError("--rank-bound is mandatory for affine enumerations")
    return affine.UglovCrystal(_affine_modulus(args.type), _parse_ints(args.charges))


def _load_vertex(args, crystal):
    fam = _family(args.type)
    if fam == "A":
        rows = json.loads(args.rows)
        return typea.from_rows(rows, crystal.n)
    if fam == "C":
        cols = json.loads(args.rows)
        return typec.as_tableau(cols, crystal.n)
    if args.partitions is not None:
        return tuple(as_partition(p) for p in json.loads(args.partitions))
    if args.partition is not None:
        return (as_partition(_parse_ints(args.partition)),)
    raise CliError("supply --rows, --partition or --partitions")


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _dump(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


# -- commands ---------------------------------------------------------------------

def cmd_crystal(args) -> int:
    crystal = _build_crystal(args)
    keep = None
    if args.rank_bound is not None and hasattr(crystal, "rank"):
        keep = lambda b: crystal.rank(b) <= args.rank_bound
    graph = engine.crystal_graph(crystal, crystal.hw, keep=keep)
    if args.format == "dot":
        _emit(args, graph.to_dot())
    else:
        payload = graph.to_jsonable()
        payload["schema"] = SCHEMA + "/graph"
        _emit(args, _dump(payload))
    return 0


def _affine_key(crystal, vertex, side, method):
    charges = crystal.charges
    e = crystal.modulus
    if side == "left":
        if method not in ("dilatation", "crosscheck"):
            raise CliError("affine left Keys are computed by dilatation only")
        return engine.key_left(crystal, vertex)
    if method == "dilatation":
        return engine.key_right(crystal, vertex)
    if e is None:
        raise CliError("reduction Keys need finite e")
    if len(charges) == 1:
        out = (affine.level1_key_right(Symbol(charges[0], vertex[0]), e).parts,)
    else:
        out = affine.higher_level_key_right(vertex, charges, e)
    if method == "crosscheck":
        dil = engine.key_right(crystal, vertex)
        if dil != out:
            raise CliError("key methods disagree")
    return out


def _finite_key(crystal, vertex, side, method):
    fam = "A" if isinstance(crystal, typea.TableauCrystal) else "C"
    results = {}
    if method in ("dilatation", "crosscheck"):
        results["dilatation"] = (engine.key_right(crystal, vertex) if side == "right"
                                 else engine.key_left(crystal, vertex))
    if method in ("reduction", "crosscheck"):
        comps = crystal.column_crystals()
        hws = [c.hw for c in comps]
        if fam == "A":
            fund = lambda c, v: v
        else:
            idx = 1 if side == "right" else 0
            fund = lambda c, v: typec.split_column(v, crystal.n)[idx]
        fn = engine.key_right_reduced if side == "right" else engine.key_left_reduced
        results["reduction"] = fn(comps, hws, vertex, fund)
    if method in ("specialized", "crosscheck"):
        if fam == "A":
            results["specialized"] = (typea.ls_key_right(vertex) if side == "right"
                                      else typea.ls_key_left(vertex))
        else:
            results["specialized"] = (typec.key_right(vertex, crystal.n)
                                      if side == "right"
                                      else typec.key_left(vertex, crystal.n))
    if len(set(results.values())) != 1:
        raise CliError(f"key methods disagree: {results}")
    return next(iter(results.values()))


def cmd_key(args) -> int:
    fam = _family(args.type)
    if fam in ("A", "C"):
        crystal = _finite_crystal(args.type, _parse_ints(args.weight)) \
            if args.weight else None
        vertex = None
        if crystal is None:
            # infer the shape from the vertex itself
            if fam == "A":
                rows = json.loads(args.rows)
                n = _rank_of(args.type)
                vertex = typea.from_rows(rows, n)
                crystal = typea.TableauCrystal(n, tuple(len(c) for c in vertex))
            else:
                n = _rank_of(args.type)
                vertex = typec.as_tableau(json.loads(args.rows), n)
                crystal = typec.SymplecticTableauCrystal(
                    n, tuple(len(c) for c in vertex))
        if vertex is None:
            vertex = _load_vertex(args, crystal)
        key = _finite_key(crystal, vertex, args.side, args.method)
        payload = {"schema": SCHEMA + "/key", "side": args.side,
                   "key": crystal.to_jsonable(key)}
    else:
        e = _affine_modulus(args.type)
        charges = _parse_ints(args.charges or "")
        if not charges:
            raise CliError("--charges is required for affine type")
        crystal = affine.UglovCrystal(e, charges)
        vertex = _load_vertex(args, crystal)
        key = _affine_key(crystal, vertex, args.side, args.method)
        payload = {"schema": SCHEMA + "/key", "side": args.side,
                   "key": [list(p) for p in key]}
    _emit(args, _dump(payload))
    return 0


def cmd_demazure(args) -> int:
    crystal = _build_crystal(args)
    datum = crystal.datum
    word = weyl.word_reduce(_parse_ints(args.word), datum)
    lam = crystal.weight(crystal.hw)
    subset = engine.demazure_enumerate(crystal, crystal.hw, word)
    payload = {"schema": SCHEMA + "/demazure",
               "word": list(word),
               "size": len(subset)}
    if args.enumerate:
        payload["vertices"] = sorted(map(crystal.to_jsonable, subset))
    if args.character:
        poly = demazure_character(datum, lam, word)
        payload["character"] = poly.to_jsonable()
        payload["character_matches_enumeration"] = \
            poly == character_of(crystal, subset)
    code = 0
    if args.member is not None:
        member_args = argparse.Namespace(type=args.type, rows=args.member,
                                         partition=None, partitions=args.member
                                         if _family(args.type) == "A~" else None)
        vertex = _load_vertex(member_args, crystal)
        inside = vertex in subset
        payload["member"] = bool(inside)
        code = 0 if inside else 2
    _emit(args, _dump(payload))
    return code


def cmd_core(args) -> int:
    e = _affine_modulus(args.type)
    charges = _parse_ints(args.charges)
    code = 0
    payload = {"schema": SCHEMA + "/core", "charges": list(charges)}
    if args.lattice:
        if args.rank_bound is None:
            raise CliError("--rank-bound is mandatory for the core lattice")
        nodes, edges = affine.core_lattice(e, charges, args.rank_bound)
        index = {b: k for k, b in enumerate(nodes)}
        payload["nodes"] = [[list(p) for p in b] for b in nodes]
        payload["edges"] = [[index[a], i, index[b]] for a, i, b in edges
                            if a in index and b in index]
    if args.partitions is not None:
        parts = tuple(as_partition(p) for p in json.loads(args.partitions))
        core = affine.is_es_core(parts, e, charges)
        payload["is_core"] = bool(core)
        if not core:
            code = 2
        if args.bstats:
            if e is None:
                raise CliError("b-statistics need finite e")
            table, flag = affine.b_statistics(parts, e, charges)
            payload["b_statistics"] = {str(i): v for i, v in table.items()}
            payload["gamma_flag"] = bool(flag)
        if args.transpose:
            tparts, tcharges = affine.transpose_core(parts, e, charges)
            payload["transpose"] = {"charges": list(tcharges),
                                    "partitions": [list(p) for p in tparts]}
        if args.key:
            if e is None:
                raise CliError("the Key algorithm needs finite e")
            if len(parts) == 1:
                key = (affine.level1_key_right(Symbol(charges[0], parts[0]), e)
                       .parts,)
            else:
                key = affine.higher_level_key_right(parts, charges, e)
            payload["key_right"] = [list(p) for p in key]
        if args.abacus:
            payload["abacus"] = MultiSymbol(charges, parts).ascii_art()
    _emit(args, _dump(payload))
    return code


def cmd_multisegment(args) -> int:
    e = None if args.e == "inf" else int(args.e)
    segs = multisegments.as_multisegment(json.loads(args.segments)) \
        if args.segments else ()
    code = 0
    payload = {"schema": SCHEMA + "/multisegment",
               "segments": [list(s) for s in segs],
               "pretty": multisegments.pretty(segs)}
    if args.action == "aperiodic":
        if e is None:
            raise CliError("aperiodicity needs finite e")
        flag = multisegments.is_aperiodic(segs, e)
        payload["aperiodic"] = bool(flag)
        code = 0 if flag else 2
    elif args.action == "embed":
        charges = _parse_ints(args.charges)
        parts = tuple(as_partition(p) for p in json.loads(args.partitions))
        out = multisegments.pi_embed(parts, charges)
        payload["segments"] = [list(s) for s in out]
        payload["pretty"] = multisegments.pretty(out)
    elif args.action == "membership":
        charges = _parse_ints(args.charges)
        try:
            parts = multisegments.orbit_membership(segs, e, charges)
            payload["multipartition"] = [list(p) for p in parts]
        except multisegments.NotInOrbit:
            payload["multipartition"] = None
            code = 2
    elif args.action == "anycharge":
        try:
            charges, parts = multisegments.orbit_membership_any_charge(
                segs, e, args.level)
            payload["charges"] = list(charges)
            payload["multipartition"] = [list(p) for p in parts]
        except multisegments.NotInOrbit:
            payload["multipartition"] = None
            code = 2
    _emit(args, _dump(payload))
    return code


# -- parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crystalkeys",
        description="Crystal graphs, Key maps and Demazure characters")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--type", required=True,
                       help='datum tag: "A:n", "C:n", "A~:e" or "A~:inf"')
        p.add_argument("--weight", help="fundamental-weight coefficients, comma list")
        p.add_argument("--charges", help="multicharge, comma list")
        p.add_argument("--rank-bound", type=int, default=None)
        p.add_argument("--format", choices=("json", "dot"), default="json")
        p.add_argument("-o", "--output", default=None)

    p = sub.add_parser("crystal", help="generate a crystal graph")
    common(p)
    p.set_defaults(fn=cmd_crystal)

    p = sub.add_parser("key", help="compute a Key vertex")
    common(p)
    p.add_argument("--rows", help="tableau rows (type A) or columns (type C), JSON")
    p.add_argument("--partition", help="level-1 partition, comma list")
    p.add_argument("--partitions", help="multipartition, JSON list of lists")
    p.add_argument("--side", choices=("left", "right"), default="right")
    p.add_argument("--method",
                   choices=("dilatation", "reduction", "specialized", "crosscheck"),
                   default="crosscheck")
    p.set_defaults(fn=cmd_key)

    p = sub.add_parser("demazure", help="Demazure subsets, characters, membership")
    common(p)
    p.add_argument("--word", required=True, help="reduced word, comma list")
    p.add_argument("--enumerate", action="store_true")
    p.add_argument("--character", action="store_true")
    p.add_argument("--member", help="vertex to test (same format as key inputs)")
    p.set_defaults(fn=cmd_demazure)

    p = sub.add_parser("core", help="(e,s)-core reports and lattices")
    common(p)
    p.add_argument("--partitions", help="multipartition, JSON list of lists")
    p.add_argument("--lattice", action="store_true")
    p.add_argument("--bstats", action="store_true")
    p.add_argument("--transpose", action="store_true")
    p.add_argument("--key", action="store_true")
    p.add_argument("--abacus", action="store_true")
    p.set_defaults(fn=cmd_core)

    p = sub.add_parser("multisegment", help="aperiodicity, embedding, membership")
    p.add_argument("--e", required=True, help='modulus or "inf"')
    p.add_argument("--charges", default="")
    p.add_argument("--segments", help="JSON list of [a,b] pairs")
    p.add_argument("--partitions", help="multipartition for the embed action")
    p.add_argument("--level", type=int, default=1)
    p.add_argument("--action", required=True,
                   choices=("membership", "anycharge", "aperiodic", "embed"))
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(fn=cmd_multisegment)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (CliError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
