r"""
Blade systems: maps and hypermaps on compact Klein surfaces.

A blade system on ``N`` blades is a transitive triple of involutions
``(tau, lambda, rho)`` -- the transverse, longitudinal and rotary
reflections.  Viewed as the generators ``(RINF, R1, R0)`` of an extended
triangle group, the products ``tau*lambda``, ``tau*rho`` and ``rho*lambda``
are bounded by the signature entries ``l0``, ``l1`` and ``linf``; a map of
type ``(m, n)`` therefore lives in signature ``(2, m, n)``.

Each blade is a triangle of the barycentric flag complex; a generator glues
two triangles along the side it names and a blade fixed by a generator has a
boundary side there.  Every invariant here is a statement about that surface.

EXAMPLES:

The single-blade map on the closed upper half plane is a disc::

    >>> from kleinmaps.perm import Permutation
    >>> e = Permutation.identity(1)
    >>> B = BladeSystem(e, e, e)
    >>> classify(B)
    SurfaceType(euler=1, orientable=True, boundary=1, genus_or_crosscaps=0)
    >>> passport(B)
    Passport(over0=(1,), over1=(1,), overinf=(1,))
"""
from collections import deque
from dataclasses import dataclass

from .errors import (DegreeMismatch, InternalClassification, InternalParity,
                     InvalidParameter, NotInvolution, NotTransitive, SignatureViolation)
from .perm import OrbitPartition, Permutation, compose, is_transitive, orbits
from .triangle import INFINITY, TriangleSignature, builtin_signature

__all__ = ["GENERATORS", "BladeSystem", "SurfaceType", "Passport", "BoundaryReport",
           "ComplexDouble", "validate", "map_type", "cells", "euler_characteristic",
           "orientability", "orientation_coloring", "boundary", "classify",
           "complex_double", "passport", "canonical_form", "canonical_key",
           "is_isomorphic", "conjugate"]

GENERATORS = ("tau", "lambda", "rho")
TAU, LAMBDA, RHO = 0, 1, 2

# (first, second, signature slot) for the three checked products
_PRODUCTS = ((TAU, LAMBDA, "l0"), (TAU, RHO, "l1"), (RHO, LAMBDA, "linf"))


class BladeSystem:
    """A validated, immutable blade system.

    ``BladeSystem(tau, lam, rho, signature)`` checks every invariant and
    raises :class:`~kleinmaps.errors.NotInvolution`,
    :class:`~kleinmaps.errors.NotTransitive` or
    :class:`~kleinmaps.errors.SignatureViolation`.  The default signature is
    ``(INFINITY, INFINITY, INFINITY)``, which constrains nothing.
    """

    __slots__ = ("tau", "lam", "rho", "signature", "_key")

    def __init__(self, tau, lam, rho, signature=None, check=True):
        if signature is None:
            signature = builtin_signature("LEVEL2_STAR")
        self.tau = tau
        self.lam = lam
        self.rho = rho
        self.signature = signature
        self._key = None
        if check:
            self._check()

    def _check(self):
        n = self.tau.degree
        if self.lam.degree != n or self.rho.degree != n:
            raise DegreeMismatch("generator degrees {}, {}, {}".format(
                n, self.lam.degree, self.rho.degree))
        for name, g in zip(GENERATORS, self.generators):
            if not g.is_involution():
                raise NotInvolution("{} is not an involution".format(name))
        if not is_transitive(self.generators, n):
            raise NotTransitive("<tau, lambda, rho> is not transitive on {} blades".format(n))
        for a, b, slot in _PRODUCTS:
            bound = getattr(self.signature, slot)
            if bound is INFINITY:
                continue
            order = compose(self.generators[a], self.generators[b]).order()
            if bound % order:
                raise SignatureViolation(
                    "{}*{}".format(GENERATORS[a], GENERATORS[b]), order, bound)

    @property
    def n(self):
        return self.tau.degree

    @property
    def generators(self):
        return (self.tau, self.lam, self.rho)

    def action(self):
        """The triple ``(r0, r1, rinf)`` acting on blades."""
        return (self.rho, self.lam, self.tau)

    def tables(self):
        return (self.tau.images, self.lam.images, self.rho.images)

    def table(self):
        """Row-major transition table ``(tau(0), lambda(0), rho(0), tau(1), ...)``."""
        t, l, r = self.tables()
        out = []
        for i in range(self.n):
            out += (t[i], l[i], r[i])
        return tuple(out)

    @classmethod
    def from_table(cls, table, signature=None, check=True):
        n = len(table) // 3
        perms = [Permutation(table[g::3], check=check) for g in range(3)]
        return cls(*perms, signature=signature, check=check)

    def __eq__(self, other):
        if not isinstance(other, BladeSystem):
            return NotImplemented
        return self.generators == other.generators and self.signature == other.signature

    def __hash__(self):
        return hash((self.generators, self.signature))

    def __repr__(self):
        return "BladeSystem(n={}, tau={}, lambda={}, rho={}, signature={})".format(
            self.n, self.tau, self.lam, self.rho, self.signature)

    def with_signature(self, signature):
        return BladeSystem(self.tau, self.lam, self.rho, signature)


def validate(n, tau, lam, rho, signature=None):
    for name, g in zip(GENERATORS, (tau, lam, rho)):
        if g.degree != n:
            raise DegreeMismatch("{} has degree {}, expected {}".format(name, g.degree, n))
    return BladeSystem(tau, lam, rho, signature)


def conjugate(B, sigma):
    """Relabel blades through ``sigma`` (blade ``i`` becomes ``sigma(i)``)."""
    return BladeSystem(*(g.conjugate(sigma) for g in B.generators), signature=B.signature,
                       check=False)


@dataclass(frozen=True)
class SurfaceType:
    euler: int
    orientable: bool
    boundary: int
    genus_or_crosscaps: int

    @property
    def name(self):
        g, b = self.genus_or_crosscaps, self.boundary
        if self.orientable:
            known = {(0, 0): "sphere", (0, 1): "disc", (0, 2): "annulus", (1, 0): "torus"}
            default = "orientable surface of genus {} with {} boundary components".format(g, b)
        else:
            known = {(1, 0): "projective plane", (1, 1): "Moebius band", (2, 0): "Klein bottle"}
            default = "non-orientable surface with {} crosscaps and {} boundary components".format(g, b)
        return known.get((g, b), default)

    def as_dict(self):
        return {"euler": self.euler, "orientable": self.orientable,
                "boundary": self.boundary, "genus_or_crosscaps": self.genus_or_crosscaps}


@dataclass(frozen=True)
class Passport:
    """Cycle types over 0, 1 and infinity, each sorted in non-increasing order."""
    over0: tuple
    over1: tuple
    overinf: tuple

    def as_dict(self):
        return {"over0": list(self.over0), "over1": list(self.over1),
                "overinf": list(self.overinf)}


@dataclass(frozen=True)
class BoundaryReport:
    """Fixed ``(blade, generator)`` pairs grouped into boundary circles.

    Blades are 0-based; generators are the names in :data:`GENERATORS`.
    """
    fixed_pairs: tuple
    components: tuple

    @property
    def count(self):
        return len(self.components)


def map_type(B):
    """``(m, n)``: orders of ``tau*rho`` and ``rho*lambda``."""
    return (compose(B.tau, B.rho).order(), compose(B.rho, B.lam).order())


def cells(B):
    """Vertex, edge and face orbits: ``<tau,rho>``, ``<tau,lambda>``, ``<rho,lambda>``."""
    n = B.n
    return (orbits([B.tau, B.rho], n), orbits([B.tau, B.lam], n), orbits([B.rho, B.lam], n))


def euler_characteristic(B):
    numerator = (compose(B.tau, B.lam).cycle_count() + compose(B.lam, B.rho).cycle_count()
                 + compose(B.rho, B.tau).cycle_count() - B.n)
    if numerator % 2:
        raise InternalParity("odd Euler numerator {} for {!r}".format(numerator, B))
    return numerator // 2


def orientation_coloring(B):
    """A 0/1 coloring of blades that every non-trivial generator move flips, or None."""
    n = B.n
    tables = B.tables()
    color = [-1] * n
    color[0] = 0
    stack = [0]
    while stack:
        i = stack.pop()
        for t in tables:
            j = t[i]
            if j == i:
                continue
            if color[j] == -1:
                color[j] = 1 - color[i]
                stack.append(j)
            elif color[j] == color[i]:
                return None
    return color


def orientability(B):
    return orientation_coloring(B) is not None


def _boundary_links(B):
    """Map each fixed pair to ``{h: (neighbor_pair, arrival_generator)}``."""
    tables = B.tables()
    n = B.n
    fixed = [(b, g) for b in range(n) for g in range(3) if tables[g][b] == b]
    links = {}
    for b, g in fixed:
        out = {}
        for h in range(3):
            if h == g:
                continue
            if tables[h][b] == b:
                out[h] = ((b, h), g)
                continue
            cur = tables[h][b]
            due, other = g, h
            while tables[due][cur] != cur:
                cur = tables[due][cur]
                due, other = other, due
            # the reverse walk starts along the generator we did not stop on
            out[h] = ((cur, due), h if due == g else g)
        links[(b, g)] = out
    return fixed, links


def boundary(B):
    fixed, links = _boundary_links(B)
    visited = set()
    components = []
    for start in fixed:
        if start in visited:
            continue
        comp = []
        node = start
        leave = min(links[start])
        while True:
            visited.add(node)
            comp.append(node)
            node, arrived = links[node][leave]
            (leave,) = [h for h in links[node] if h != arrived]
            if node == start:
                break
        components.append(tuple((b, GENERATORS[g]) for b, g in comp))
    return BoundaryReport(tuple((b, GENERATORS[g]) for b, g in fixed), tuple(components))


def classify(B):
    chi = euler_characteristic(B)
    orientable = orientability(B)
    b = boundary(B).count
    if orientable:
        twice_genus = 2 - chi - b
        if twice_genus < 0 or twice_genus % 2:
            raise InternalClassification(
                "orientable with chi={}, b={} gives no integer genus".format(chi, b))
        gk = twice_genus // 2
    else:
        gk = 2 - chi - b
        if gk < 1:
            raise InternalClassification(
                "non-orientable with chi={}, b={} gives {} crosscaps".format(chi, b, gk))
    return SurfaceType(chi, orientable, b, gk)


@dataclass(frozen=True)
class ComplexDouble:
    """Connected components of the orientable double and its deck involution.

    ``deck`` lists, for each blade ``b`` of the input, the pair
    ``((component, blade), (component, blade))`` locating the lifts
    ``(b, +)`` and ``(b, -)``; the deck involution swaps them.
    """
    components: tuple
    deck: tuple

    @property
    def connected(self):
        return len(self.components) == 1


def complex_double(B):
    n = B.n
    lifted = []
    for t in B.tables():
        lifted.append([t[i] + n for i in range(n)] + [t[i] for i in range(n)])
    parts = orbits([Permutation(t, check=False) for t in lifted], 2 * n)
    where = [None] * (2 * n)
    components = []
    for c, block in enumerate(parts.blocks):
        index = {x: k for k, x in enumerate(block)}
        for x in block:
            where[x] = (c, index[x])
        perms = [Permutation([index[t[x]] for x in block], check=False) for t in lifted]
        components.append(BladeSystem(*perms, signature=B.signature))
    deck = tuple((where[b], where[b + n]) for b in range(n))
    return ComplexDouble(tuple(components), deck)


def passport(B):
    return Passport(tuple(compose(B.tau, B.rho).cycle_type()),
                    tuple(compose(B.tau, B.lam).cycle_type()),
                    tuple(compose(B.rho, B.lam).cycle_type()))


def _relabel_from(tables, base, best):
    """BFS relabeling from ``base``; returns ``(table, order)`` or None if it loses to ``best``."""
    n = len(tables[0])
    label = [-1] * n
    label[base] = 0
    order = [base]
    out = []
    less = best is None
    pos = 0
    for r in range(n):
        o = order[r]
        for t in tables:
            x = t[o]
            if label[x] == -1:
                label[x] = len(order)
                order.append(x)
            v = label[x]
            if not less:
                w = best[pos]
                if v > w:
                    return None
                if v < w:
                    less = True
            out.append(v)
            pos += 1
    return tuple(out), order


def canonical_form(B):
    """Least BFS relabeling over all base blades.

    Returns ``(C, sigma)`` with ``C == conjugate(B, sigma)``.
    """
    tables = B.tables()
    best, best_order = None, None
    for base in range(B.n):
        res = _relabel_from(tables, base, best)
        if res is not None and (best is None or res[0] < best):
            best, best_order = res
    sigma = [0] * B.n
    for new, old in enumerate(best_order):
        sigma[old] = new
    C = BladeSystem.from_table(best, B.signature, check=False)
    C._key = best
    return C, Permutation(sigma, check=False)


def canonical_key(B):
    if B._key is None:
        B._key = canonical_form(B)[0]._key
    return B._key


def is_isomorphic(B1, B2):
    """Simultaneous conjugacy of the generator triples (signatures are ignored)."""
    if B1.n != B2.n:
        return False
    return canonical_key(B1) == canonical_key(B2)
