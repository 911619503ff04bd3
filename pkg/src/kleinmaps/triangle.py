r"""
Extended triangle groups acting on finite sets.

The extended triangle group with signature ``(l0, l1, linf)`` is generated by
three reflections ``R0, R1, RINF`` subject to

    R0^2 = R1^2 = RINF^2 = (R0 R1)^linf = (RINF R0)^l1 = (R1 RINF)^l0 = 1.

An entry :data:`INFINITY` imposes no relation. A finite action is a triple of
permutations ``(r0, r1, rinf)``.

Words are read left to right as a right action on points: evaluating
``[s1, s2, ..., sk]`` applies ``s1`` first, then ``s2`` and so on.  This is
the coset action by right multiplication, and the Schreier generators
``rep(u) s rep(u.s)^-1`` fix the basepoint under it.
"""
from collections import deque
from dataclasses import dataclass

from .errors import DegreeMismatch, InvalidParameter, NotInvolution, NotTransitive
from .perm import Permutation, compose, is_transitive

__all__ = ["INFINITY", "R0", "R1", "RINF", "TriangleSignature", "builtin_signature",
           "GroupWord", "reduce_word", "evaluate_word", "check_signature",
           "SchreierData", "schreier_data"]


class _Infinity:
    __slots__ = ()

    def __repr__(self):
        return "INFINITY"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return "INFINITY"


INFINITY = _Infinity()

R0, R1, RINF = 0, 1, 2
LETTERS = "abc"
LETTER_NAMES = ("R0", "R1", "RINF")


def _check_entry(x):
    if x is INFINITY:
        return x
    if isinstance(x, bool) or not isinstance(x, int) or x < 1:
        raise InvalidParameter("signature entry must be a positive integer or INFINITY, got {!r}".format(x))
    return x


@dataclass(frozen=True)
class TriangleSignature:
    l0: object
    l1: object
    linf: object

    def __post_init__(self):
        for x in (self.l0, self.l1, self.linf):
            _check_entry(x)

    def __iter__(self):
        return iter((self.l0, self.l1, self.linf))

    @classmethod
    def from_ints(cls, values):
        """Build from integers where ``0`` encodes infinity."""
        values = list(values)
        if len(values) != 3:
            raise InvalidParameter("signature needs three entries, got {}".format(len(values)))
        return cls(*(INFINITY if v == 0 else v for v in values))

    def to_ints(self):
        return [0 if x is INFINITY else x for x in self]

    def __str__(self):
        return "({})".format(",".join(str(x) for x in self))


def builtin_signature(name, m=None, n=None):
    """Named signatures: ``"MODULAR_STAR"``, ``"LEVEL2_STAR"`` or ``"MAP"`` with ``m, n``."""
    key = name.upper()
    if key == "MODULAR_STAR":
        return TriangleSignature(2, 3, INFINITY)
    if key == "LEVEL2_STAR":
        return TriangleSignature(INFINITY, INFINITY, INFINITY)
    if key == "MAP":
        if m is None or n is None:
            raise InvalidParameter("MAP needs both m and n")
        return TriangleSignature(2, _check_entry(m), _check_entry(n))
    raise InvalidParameter("unknown signature name {!r}".format(name))


class GroupWord(tuple):
    """A word over ``R0, R1, RINF`` (stored as ``0, 1, 2``)."""

    def __new__(cls, letters=()):
        letters = tuple(letters)
        for x in letters:
            if x not in (R0, R1, RINF):
                raise InvalidParameter("invalid letter {!r}".format(x))
        return super().__new__(cls, letters)

    @classmethod
    def parse(cls, text):
        try:
            return cls(LETTERS.index(ch) for ch in text.strip())
        except ValueError:
            raise InvalidParameter("word {!r} uses letters outside 'abc'".format(text)) from None

    def __str__(self):
        return "".join(LETTERS[x] for x in self)

    def __repr__(self):
        return "GroupWord({!r})".format(str(self))

    def inverse(self):
        # every letter is an involution
        return GroupWord(reversed(self))

    def __add__(self, other):
        return GroupWord(tuple(self) + tuple(other))


def reduce_word(w):
    stack = []
    for x in w:
        if stack and stack[-1] == x:
            stack.pop()
        else:
            stack.append(x)
    return GroupWord(stack)


def _action_degree(action):
    action = tuple(action)
    if len(action) != 3:
        raise InvalidParameter("an action is a triple of permutations")
    n = action[0].degree
    for p in action[1:]:
        if p.degree != n:
            raise DegreeMismatch("action permutations have degrees {}".format([q.degree for q in action]))
    return action, n


def evaluate_word(w, action):
    action, n = _action_degree(action)
    result = list(range(n))
    for x in w:
        t = action[x].images
        result = [t[j] for j in result]
    return Permutation(result, check=False)


def check_signature(action, sig):
    """True iff the pairwise products satisfy the signature's relations."""
    action, _ = _action_degree(action)
    for name, p in zip(LETTER_NAMES, action):
        if not p.is_involution():
            raise NotInvolution("{} is not an involution".format(name))
    r0, r1, rinf = action
    for prod, bound in ((compose(r1, rinf), sig.l0), (compose(rinf, r0), sig.l1),
                        (compose(r0, r1), sig.linf)):
        if bound is not INFINITY and bound % prod.order():
            return False
    return True


@dataclass(frozen=True)
class SchreierData:
    basepoint: int
    representatives: tuple
    stabilizer_generators: tuple


def schreier_data(action, basepoint=0):
    """Breadth-first Schreier tree and Schreier generators of a point stabilizer.

    ``basepoint`` is 0-based.
    """
    action, n = _action_degree(action)
    if not 0 <= basepoint < n:
        raise InvalidParameter("basepoint {} outside 0..{}".format(basepoint, n - 1))
    if not is_transitive(action, n):
        raise NotTransitive("action is not transitive")
    tables = [p.images for p in action]
    reps = [None] * n
    reps[basepoint] = GroupWord()
    queue = deque([basepoint])
    while queue:
        u = queue.popleft()
        for s in (R0, R1, RINF):
            v = tables[s][u]
            if reps[v] is None:
                reps[v] = reps[u] + (s,)
                queue.append(v)
    gens = []
    seen = set()
    for u in range(n):
        for s in (R0, R1, RINF):
            v = tables[s][u]
            w = reduce_word(reps[u] + (s,) + reps[v].inverse())
            if w and w not in seen:
                seen.add(w)
                gens.append(w)
    return SchreierData(basepoint, tuple(reps), tuple(gens))
