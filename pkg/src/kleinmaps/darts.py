r"""
Oriented maps without boundary, encoded by darts.

A dart map is a pair ``(x, y)`` of permutations of the darts: ``x`` is an
involution pairing the two darts of an edge (a fixed point is a free edge)
and ``y`` rotates the darts around each vertex.  Faces are the cycles of
``y^-1 x``.
"""
from dataclasses import dataclass

from .blades import BladeSystem, orientation_coloring, boundary
from .errors import DegreeMismatch, InternalParity, NotInvolution, NotOrientableClosed, NotTransitive
from .perm import Permutation, compose, is_transitive, orbits
from .triangle import TriangleSignature

__all__ = ["DartMap", "validate_dart", "dart_cells", "dart_euler", "dart_genus",
           "to_blades", "orient", "dart_canonical_key", "darts_isomorphic"]


class DartMap:
    __slots__ = ("x", "y", "mirror")

    def __init__(self, x, y, check=True, mirror=False):
        self.x = x
        self.y = y
        # set by orient() when the opposite color class was chosen
        self.mirror = mirror
        if check:
            if x.degree != y.degree:
                raise DegreeMismatch("x has degree {}, y has degree {}".format(x.degree, y.degree))
            if not x.is_involution():
                raise NotInvolution("x is not an involution")
            if not is_transitive([x, y], x.degree):
                raise NotTransitive("<x, y> is not transitive")

    @property
    def n(self):
        return self.x.degree

    def face_permutation(self):
        return compose(self.y.inverse(), self.x)

    def conjugate(self, sigma):
        return DartMap(self.x.conjugate(sigma), self.y.conjugate(sigma), check=False)

    def __eq__(self, other):
        if not isinstance(other, DartMap):
            return NotImplemented
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.x, self.y))

    def __repr__(self):
        return "DartMap(n={}, x={}, y={})".format(self.n, self.x, self.y)


def validate_dart(n, x, y):
    if x.degree != n or y.degree != n:
        raise DegreeMismatch("expected degree {}".format(n))
    return DartMap(x, y)


@dataclass(frozen=True)
class DartCells:
    vertices: list
    edges: list
    faces: list
    free_edges: list


def dart_cells(D):
    return DartCells(D.y.cycles(), orbits([D.x], D.n).blocks,
                     D.face_permutation().cycles(), D.x.fixed_points())


def dart_euler(D):
    chi = D.x.cycle_count() + D.y.cycle_count() + D.face_permutation().cycle_count() - D.n
    if chi % 2:
        raise InternalParity("odd Euler characteristic {} for {!r}".format(chi, D))
    return chi


def dart_genus(D):
    chi = dart_euler(D)
    if chi > 2:
        raise InternalParity("Euler characteristic {} exceeds 2".format(chi))
    return (2 - chi) // 2


def to_blades(D, signature=None):
    """Blade system on ``darts x {+, -}``; ``(w, +)`` is blade ``w``, ``(w, -)`` is ``w + N``.

    The signature defaults to ``(2, m, n)`` for the actual map type.
    """
    n = D.n
    x, y = D.x.images, D.y.images
    yinv = D.y.inverse().images
    tau = [w + n for w in range(n)] + list(range(n))
    lam = [x[w] + n for w in range(n)] + [x[w] for w in range(n)]
    rho = [yinv[w] + n for w in range(n)] + [y[w] for w in range(n)]
    B = BladeSystem(*(Permutation(t, check=False) for t in (tau, lam, rho)), check=False)
    if signature is None:
        signature = TriangleSignature(2, compose(B.tau, B.rho).order(),
                                      compose(B.rho, B.lam).order())
    return BladeSystem(B.tau, B.lam, B.rho, signature)


def orient(B, mirror=False):
    """Dart map on the color class of blade 0 (the other class if ``mirror``)."""
    color = orientation_coloring(B)
    if color is None:
        raise NotOrientableClosed("blade system is not orientable")
    if boundary(B).fixed_pairs:
        raise NotOrientableClosed("blade system has boundary")
    side = color[0] ^ int(mirror)
    darts = [i for i in range(B.n) if color[i] == side]
    index = {b: k for k, b in enumerate(darts)}
    x = compose(B.tau, B.lam).images
    yinv = compose(B.tau, B.rho).images
    xs = Permutation([index[x[b]] for b in darts], check=False)
    yinvs = Permutation([index[yinv[b]] for b in darts], check=False)
    return DartMap(xs, yinvs.inverse(), mirror=mirror)


def dart_canonical_key(D):
    """Least BFS relabeling table ``(x(0), y(0), x(1), ...)`` over base darts."""
    tables = (D.x.images, D.y.images)
    n = D.n
    best = None
    for base in range(n):
        label = [-1] * n
        label[base] = 0
        order = [base]
        out = []
        for r in range(n):
            o = order[r]
            for t in tables:
                v = t[o]
                if label[v] == -1:
                    label[v] = len(order)
                    order.append(v)
                out.append(label[v])
        out = tuple(out)
        if best is None or out < best:
            best = out
    return best


def darts_isomorphic(D1, D2):
    return D1.n == D2.n and dart_canonical_key(D1) == dart_canonical_key(D2)
