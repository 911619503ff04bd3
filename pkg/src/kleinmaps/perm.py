r"""
Permutations of a finite set and orbit machinery.

A :class:`Permutation` of degree ``N`` stores its image table on the points
``0, ..., N-1``.  All methods work with these 0-based points; only the
cycle-notation helpers (:meth:`Permutation.parse`, :meth:`Permutation.from_cycles`,
:meth:`Permutation.to_cycles` and ``str``) speak 1-based labels.

Permutations act on the left: ``compose(p, q)`` (also ``p * q``) applies ``q``
first, so ``(p * q).images[i] == p.images[q.images[i]]``.

EXAMPLES::

    >>> p = Permutation.parse("(1 2)", 3)
    >>> q = Permutation.parse("(2 3)", 3)
    >>> str(p * q)
    '(1 2 3)'
    >>> (p * q).order()
    3
"""
import re
from math import lcm

from .errors import DegreeMismatch, InvalidPermutation

__all__ = ["Permutation", "OrbitPartition", "compose", "cycle_count", "orbits",
           "is_transitive", "element_order"]


class Permutation:
    """Immutable bijection of ``{0, ..., N-1}`` given by its image table."""

    __slots__ = ("images", "_hash")

    def __init__(self, images, check=True):
        images = tuple(images)
        if check:
            n = len(images)
            if n == 0:
                raise InvalidPermutation("degree must be positive")
            seen = [False] * n
            for j in images:
                if not isinstance(j, int) or j < 0 or j >= n or seen[j]:
                    raise InvalidPermutation("not a bijection of 0..{}: {}".format(n - 1, images))
                seen[j] = True
        self.images = images
        self._hash = None

    # -- construction ------------------------------------------------------

    @classmethod
    def identity(cls, n):
        if n < 1:
            raise InvalidPermutation("degree must be positive")
        return cls(range(n), check=False)

    @classmethod
    def from_cycles(cls, cycles, n):
        """Build from 1-based cycles; points not mentioned are fixed."""
        if n < 1:
            raise InvalidPermutation("degree must be positive")
        images = list(range(n))
        seen = set()
        for cyc in cycles:
            cyc = [int(c) for c in cyc]
            for c in cyc:
                if c < 1 or c > n:
                    raise InvalidPermutation("point {} outside 1..{}".format(c, n))
                if c in seen:
                    raise InvalidPermutation("point {} repeated in cycles".format(c))
                seen.add(c)
            for k, c in enumerate(cyc):
                images[c - 1] = cyc[(k + 1) % len(cyc)] - 1
        return cls(images, check=False)

    @classmethod
    def parse(cls, text, n):
        """Parse cycle notation such as ``"(1 2)(3 4 5)"``; ``""`` is the identity."""
        text = text.strip()
        if text in ("", "()"):
            return cls.identity(n)
        if not re.fullmatch(r"(\(\s*\d+(?:[\s,]+\d+)*\s*\)\s*)+", text):
            raise InvalidPermutation("cannot parse cycle notation {!r}".format(text))
        cycles = [[int(t) for t in re.split(r"[\s,]+", body.strip())]
                  for body in re.findall(r"\(([^)]*)\)", text)]
        return cls.from_cycles(cycles, n)

    # -- basic protocol ----------------------------------------------------

    @property
    def degree(self):
        return len(self.images)

    def __len__(self):
        return len(self.images)

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.images)
        return self._hash

    def __repr__(self):
        return "Permutation.parse({!r}, {})".format(str(self), self.degree)

    def __str__(self):
        return "".join("(" + " ".join(str(i) for i in c) + ")" for c in self.to_cycles())

    def __mul__(self, other):
        return compose(self, other)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def image(self, i):
        """Image of the 1-based point ``i`` (1-based)."""
        return self.images[i - 1] + 1

    # -- structure ---------------------------------------------------------

    def inverse(self):
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv, check=False)

    def conjugate(self, sigma):
        """Relabel points through ``sigma``: the result maps ``sigma(i)`` to ``sigma(p(i))``."""
        if sigma.degree != self.degree:
            raise DegreeMismatch("conjugating degree {} by degree {}".format(self.degree, sigma.degree))
        s = sigma.images
        out = [0] * len(s)
        for i, j in enumerate(self.images):
            out[s[i]] = s[j]
        return Permutation(out, check=False)

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images))

    def is_involution(self):
        im = self.images
        return all(im[j] == i for i, j in enumerate(im))

    def fixed_points(self):
        return [i for i, j in enumerate(self.images) if i == j]

    def cycles(self, include_fixed=True):
        """0-based cycles, each starting at its least point, ordered by that point."""
        im = self.images
        seen = [False] * len(im)
        out = []
        for i in range(len(im)):
            if seen[i]:
                continue
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(j)
                j = im[j]
            if include_fixed or len(cyc) > 1:
                out.append(cyc)
        return out

    def to_cycles(self):
        """1-based cycles with fixed points omitted."""
        return [[i + 1 for i in c] for c in self.cycles(include_fixed=False)]

    def cycle_type(self):
        """Cycle lengths (fixed points included) in non-increasing order."""
        return sorted((len(c) for c in self.cycles()), reverse=True)

    def cycle_count(self):
        im = self.images
        seen = bytearray(len(im))
        count = 0
        for i in range(len(im)):
            if not seen[i]:
                count += 1
                j = i
                while not seen[j]:
                    seen[j] = 1
                    j = im[j]
        return count

    def order(self):
        return lcm(*(len(c) for c in self.cycles()))


def _check_degrees(perms, n=None):
    for p in perms:
        if n is None:
            n = p.degree
        elif p.degree != n:
            raise DegreeMismatch("expected degree {}, got {}".format(n, p.degree))
    return n


def compose(p, q):
    """Return ``p ∘ q`` (apply ``q`` first)."""
    if p.degree != q.degree:
        raise DegreeMismatch("cannot compose degrees {} and {}".format(p.degree, q.degree))
    pi = p.images
    return Permutation([pi[j] for j in q.images], check=False)


def cycle_count(p):
    return p.cycle_count()


def element_order(p):
    return p.order()


class OrbitPartition:
    """Partition of ``{0, ..., N-1}`` into blocks.

    Blocks are sorted lists, ordered by their least element.
    """

    __slots__ = ("degree", "blocks", "_block_of")

    def __init__(self, degree, blocks):
        blocks = sorted((sorted(b) for b in blocks), key=lambda b: b[0])
        block_of = [-1] * degree
        for k, b in enumerate(blocks):
            for i in b:
                if not 0 <= i < degree or block_of[i] != -1:
                    raise InvalidPermutation("blocks do not partition 0..{}".format(degree - 1))
                block_of[i] = k
        if -1 in block_of:
            raise InvalidPermutation("blocks do not cover 0..{}".format(degree - 1))
        self.degree = degree
        self.blocks = blocks
        self._block_of = block_of

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __eq__(self, other):
        return isinstance(other, OrbitPartition) and self.blocks == other.blocks

    def __repr__(self):
        return "OrbitPartition({}, {})".format(self.degree, self.blocks)

    def block_of(self, i):
        """Index of the block containing point ``i``."""
        return self._block_of[i]

    def sizes(self):
        return [len(b) for b in self.blocks]


def orbits(gens, n=None):
    """Orbits of the group generated by ``gens`` on ``{0, ..., n-1}``."""
    gens = list(gens)
    n = _check_degrees(gens, n)
    if n is None:
        raise InvalidPermutation("degree unknown: no generators and no n")
    tables = [g.images for g in gens]
    seen = [False] * n
    blocks = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        block = [start]
        stack = [start]
        while stack:
            i = stack.pop()
            for t in tables:
                j = t[i]
                if not seen[j]:
                    seen[j] = True
                    block.append(j)
                    stack.append(j)
        blocks.append(block)
    return OrbitPartition(n, blocks)


def is_transitive(gens, n=None):
    return len(orbits(gens, n)) == 1
