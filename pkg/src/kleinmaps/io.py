"""
File formats: map and dart JSON, census records, DOT export.

Cycles are arrays of 1-based blade (or dart) labels with fixed points
omitted; a signature entry ``0`` stands for infinity.
"""
import json

from .blades import GENERATORS, BladeSystem, SurfaceType
from .darts import DartMap
from .errors import FormatError
from .perm import Permutation
from .triangle import TriangleSignature

__all__ = ["map_to_dict", "map_from_dict", "dart_to_dict", "dart_from_dict", "dumps",
           "load_any", "loads_any", "record_to_dict", "to_dot"]


def dumps(obj):
    return json.dumps(obj, sort_keys=True)


def _perm(data, key, n):
    try:
        cycles = data[key]
    except KeyError:
        raise FormatError("missing field {!r}".format(key)) from None
    if not isinstance(cycles, list) or not all(
            isinstance(c, list) and all(isinstance(i, int) and not isinstance(i, bool) for i in c)
            for c in cycles):
        raise FormatError("field {!r} must be an array of integer arrays".format(key))
    try:
        return Permutation.from_cycles(cycles, n)
    except ValueError as exc:
        raise FormatError("field {!r}: {}".format(key, exc)) from None


def _degree(data):
    n = data.get("n") if isinstance(data, dict) else None
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise FormatError("field 'n' must be a positive integer")
    return n


def map_to_dict(B):
    return {"n": B.n, "signature": B.signature.to_ints(),
            "tau": B.tau.to_cycles(), "lambda": B.lam.to_cycles(), "rho": B.rho.to_cycles()}


def map_from_dict(data):
    n = _degree(data)
    sig = data.get("signature", [0, 0, 0])
    if not isinstance(sig, list) or not all(isinstance(v, int) and v >= 0 for v in sig):
        raise FormatError("field 'signature' must be three non-negative integers")
    signature = TriangleSignature.from_ints(sig)
    return BladeSystem(*(_perm(data, k, n) for k in GENERATORS), signature=signature)


def dart_to_dict(D):
    return {"n": D.n, "x": D.x.to_cycles(), "y": D.y.to_cycles()}


def dart_from_dict(data):
    n = _degree(data)
    return DartMap(_perm(data, "x", n), _perm(data, "y", n))


def loads_any(text):
    """Parse a map or dart file, telling them apart by their fields."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError("invalid JSON: {}".format(exc)) from None
    if not isinstance(data, dict):
        raise FormatError("expected a JSON object")
    if "tau" in data:
        return map_from_dict(data)
    if "x" in data:
        return dart_from_dict(data)
    raise FormatError("neither a map file (tau/lambda/rho) nor a dart file (x/y)")


def load_any(path):
    with open(path, encoding="utf-8") as fh:
        return loads_any(fh.read())


def record_to_dict(record):
    out = map_to_dict(record.system)
    out["surface"] = record.surface.as_dict()
    out["passport"] = record.passport.as_dict()
    out["map_type"] = list(record.map_type)
    return out


def surface_from_dict(data):
    return SurfaceType(data["euler"], data["orientable"], data["boundary"],
                       data["genus_or_crosscaps"])


def to_dot(B, name="blades"):
    """Undirected multigraph on blades, one edge per generator move.

    Fixed blades get a dashed self-loop, marking a boundary side.
    """
    lines = ["graph {} {{".format(name)]
    for i in range(B.n):
        lines.append('  {} [label="{}"];'.format(i + 1, i + 1))
    for gname, t in zip(GENERATORS, B.tables()):
        for i, j in enumerate(t):
            if i < j:
                lines.append('  {} -- {} [label="{}"];'.format(i + 1, j + 1, gname))
            elif i == j:
                lines.append('  {} -- {} [label="{}", style=dashed];'.format(i + 1, i + 1, gname))
    lines.append("}")
    return "\n".join(lines) + "\n"
