"""Command-line interface: ``kleinmaps <subcommand> ...``.

Exit status is 0 on success, 1 on domain errors (reported as JSON on stderr)
and 2 on usage errors.
"""
import argparse
import sys
from fractions import Fraction

from . import blades, census, darts, io, normalize, triangle
from .errors import FormatError, InvalidParameter, KleinMapsError

__all__ = ["main", "build_parser"]


def _signature(text):
    try:
        values = [int(v) for v in text.split(",")]
        return triangle.TriangleSignature.from_ints(values)
    except (ValueError, KleinMapsError) as exc:
        raise argparse.ArgumentTypeError("bad signature {!r}: {}".format(text, exc))


def _range(text):
    """``k``, ``lo:hi``, ``lo:`` or ``:hi``."""
    try:
        if ":" not in text:
            return int(text)
        lo, hi = text.split(":", 1)
        return (int(lo) if lo else None, int(hi) if hi else None)
    except ValueError:
        raise argparse.ArgumentTypeError("bad range {!r}".format(text))


def _fraction(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError("bad rational {!r}".format(text))


def build_parser():
    parser = argparse.ArgumentParser(prog="kleinmaps", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def with_format(p, choices=("json", "table")):
        p.add_argument("--format", choices=choices, default="json")
        return p

    p = with_format(sub.add_parser("validate", help="check a map file"), ("json", "table", "dot"))
    p.add_argument("map")
    p = with_format(sub.add_parser("invariants", help="surface type, passport and map type"))
    p.add_argument("map")
    p = with_format(sub.add_parser("double", help="complex double and deck involution"))
    p.add_argument("map")
    p = with_format(sub.add_parser("boundary", help="boundary components"))
    p.add_argument("map")
    p = with_format(sub.add_parser("convert", help="convert between dart and blade files"),
                    ("json", "dot"))
    p.add_argument("--to", choices=("darts", "blades"), required=True)
    p.add_argument("--mirror", action="store_true", help="orient using the other color class")
    p.add_argument("file")
    p = with_format(sub.add_parser("census", help="enumerate blade systems up to isomorphism"))
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--signature", type=_signature, default=_signature("0,0,0"))
    orient = p.add_mutually_exclusive_group()
    orient.add_argument("--orientable", dest="orientable", action="store_true", default=None)
    orient.add_argument("--non-orientable", dest="orientable", action="store_false")
    p.add_argument("--boundary", type=_range)
    p.add_argument("--euler", type=int)
    p.add_argument("--genus-or-crosscaps", type=int)
    p.add_argument("--cap", type=int, default=census.DEFAULT_CAP)
    p.add_argument("--count", action="store_true", help="print only the number of records")
    p = with_format(sub.add_parser("schreier", help="Schreier tree and stabilizer generators"))
    p.add_argument("map")
    p.add_argument("--basepoint", type=int, default=1)
    p = with_format(sub.add_parser("normalize", help="move critical values into {0,1,inf}"))
    p.add_argument("--values", required=True,
                   help="comma-separated values such as i,-i,inf or 1/2+3i,1/2-3i,5")
    p = with_format(sub.add_parser("jinv", help="j-invariant of y^2 = 4x^3 - g2 x - g3"))
    p.add_argument("--g2", type=_fraction, required=True)
    p.add_argument("--g3", type=_fraction, required=True)
    return parser


def _load_map(path):
    obj = io.load_any(path)
    if not isinstance(obj, blades.BladeSystem):
        raise FormatError("{} is a dart file; expected a map file".format(path))
    return obj


def _table(pairs):
    return "\n".join("{}: {}".format(k, v) for k, v in pairs)


def _invariants(B):
    st = blades.classify(B)
    out = st.as_dict()
    out["surface"] = st.name
    out["passport"] = blades.passport(B).as_dict()
    out["map_type"] = list(blades.map_type(B))
    return out


def _boundary(B):
    rep = blades.boundary(B)
    return {"boundary": rep.count,
            "fixed_pairs": [[b + 1, g] for b, g in rep.fixed_pairs],
            "components": [[[b + 1, g] for b, g in comp] for comp in rep.components]}


def _emit(args, obj, table=None):
    if args.format == "table" and table is not None:
        return table
    return io.dumps(obj)


def run(args):
    cmd = args.command
    if cmd == "validate":
        B = _load_map(args.map)
        if args.format == "dot":
            return io.to_dot(B).rstrip("\n")
        return _emit(args, {"valid": True, "n": B.n},
                     _table([("valid", True), ("n", B.n)]))
    if cmd == "invariants":
        inv = _invariants(_load_map(args.map))
        return _emit(args, inv, _table(inv.items()))
    if cmd == "double":
        B = _load_map(args.map)
        dbl = blades.complex_double(B)
        obj = {"components": [io.map_to_dict(C) for C in dbl.components],
               "deck": [[[c1 + 1, b1 + 1], [c2 + 1, b2 + 1]]
                        for (c1, b1), (c2, b2) in dbl.deck],
               "connected": dbl.connected}
        table = _table([("components", len(dbl.components)), ("connected", dbl.connected)]
                       + [("component {} blades".format(k + 1), C.n)
                          for k, C in enumerate(dbl.components)])
        return _emit(args, obj, table)
    if cmd == "boundary":
        rep = _boundary(_load_map(args.map))
        return _emit(args, rep, _table(rep.items()))
    if cmd == "convert":
        obj = io.load_any(args.file)
        if args.to == "blades":
            if isinstance(obj, blades.BladeSystem):
                raise FormatError("input is already a map file")
            B = darts.to_blades(obj)
            return io.to_dot(B).rstrip("\n") if args.format == "dot" else io.dumps(io.map_to_dict(B))
        if isinstance(obj, darts.DartMap):
            raise FormatError("input is already a dart file")
        D = darts.orient(obj, mirror=args.mirror)
        out = io.dart_to_dict(D)
        out["mirror"] = D.mirror
        return io.dumps(out)
    if cmd == "census":
        q = census.CensusQuery(
            max_blades=args.max_n, min_blades=args.min_n, signature=args.signature,
            orientable=args.orientable, boundary=args.boundary, euler=args.euler,
            genus_or_crosscaps=args.genus_or_crosscaps, cap=args.cap)
        if args.count:
            return str(census.count(q))
        records = census.enumerate_census(q)
        if args.format == "table":
            rows = census.summary(records)
            lines = ["{:>6}  {:>10}  {:>8}  {:>4}  {}".format(
                "euler", "orientable", "boundary", "g/k", "count")]
            for st, c in rows:
                lines.append("{:>6}  {:>10}  {:>8}  {:>4}  {}".format(
                    st.euler, str(st.orientable).lower(), st.boundary, st.genus_or_crosscaps, c))
            return "\n".join(lines)
        return "\n".join(io.dumps(io.record_to_dict(r)) for r in records)
    if cmd == "schreier":
        B = _load_map(args.map)
        if not 1 <= args.basepoint <= B.n:
            raise InvalidParameter("basepoint {} outside 1..{}".format(args.basepoint, B.n))
        sd = triangle.schreier_data(B.action(), args.basepoint - 1)
        obj = {"basepoint": args.basepoint,
               "letters": {"a": "rho", "b": "lambda", "c": "tau"},
               "representatives": [str(w) for w in sd.representatives],
               "stabilizer_generators": [str(w) for w in sd.stabilizer_generators]}
        table = _table([("basepoint", args.basepoint),
                        ("representatives", " ".join(str(w) or "e" for w in sd.representatives)),
                        ("stabilizer_generators",
                         " ".join(str(w) for w in sd.stabilizer_generators))])
        return _emit(args, obj, table)
    if cmd == "normalize":
        values = [normalize.parse_value(v) for v in args.values.split(",") if v.strip()]
        _, cert = normalize.normalize(values)
        d = cert.to_dict()
        return _emit(args, d, _table(d.items()))
    if cmd == "jinv":
        j = normalize.j_invariant(args.g2, args.g3)
        return _emit(args, {"j": str(j)}, str(j))
    raise AssertionError(cmd)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = run(args)
    except KleinMapsError as exc:
        sys.stderr.write(io.dumps(exc.to_dict()) + "\n")
        return 1
    except OSError as exc:
        sys.stderr.write(io.dumps({"error": "FileError", "message": str(exc)}) + "\n")
        return 1
    if out:
        sys.stdout.write(out + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
