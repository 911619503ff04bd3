r"""
Census of blade systems up to isomorphism.

Systems are generated directly in canonical form.  A row-major transition
table ``T[3*i + g]`` is filled slot by slot; every new blade label appears
at the first slot referring to it, so complete tables are exactly the
breadth-first labelings of pointed transitive actions.  A partial table is
abandoned as soon as relabeling from some other base blade produces a
lexicographically smaller determined prefix; complete tables surviving that
test are the canonical representatives returned by
:func:`kleinmaps.blades.canonical_form`.

Filters that can be decided on partial tables (orientability and absence of
boundary) prune during the search, the rest are applied to finished systems.
"""
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .blades import (BladeSystem, SurfaceType, classify, map_type, passport)
from .errors import CapExceeded, InvalidParameter
from .perm import compose
from .triangle import INFINITY, TriangleSignature

__all__ = ["DEFAULT_CAP", "CensusQuery", "CensusRecord", "enumerate_systems",
           "enumerate_census", "count", "summary", "default_threads"]

DEFAULT_CAP = 10


def default_threads():
    env = os.environ.get("KLEINMAPS_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise InvalidParameter("KLEINMAPS_THREADS must be an integer, got {!r}".format(env))
    return os.cpu_count() or 1


def _range(value):
    """Normalize an exact value or ``(lo, hi)`` pair (``None`` = unbounded) to a pair."""
    if value is None:
        return None
    if isinstance(value, int):
        return (value, value)
    lo, hi = value
    if lo is not None and hi is not None and lo > hi:
        raise InvalidParameter("empty range {}..{}".format(lo, hi))
    return (lo, hi)


def _in_range(x, rng):
    if rng is None:
        return True
    lo, hi = rng
    return (lo is None or x >= lo) and (hi is None or x <= hi)


@dataclass(frozen=True)
class CensusQuery:
    max_blades: int
    signature: TriangleSignature = field(
        default_factory=lambda: TriangleSignature(INFINITY, INFINITY, INFINITY))
    orientable: object = None
    boundary: object = None
    genus_or_crosscaps: object = None
    euler: object = None
    min_blades: int = 1
    cap: int = DEFAULT_CAP

    def __post_init__(self):
        if self.max_blades < 1 or self.min_blades < 1:
            raise InvalidParameter("blade bounds must be positive")
        if self.max_blades > self.cap:
            raise CapExceeded("max_blades {} exceeds cap {}".format(self.max_blades, self.cap))
        object.__setattr__(self, "boundary", _range(self.boundary))
        for name in ("genus_or_crosscaps", "euler"):
            v = getattr(self, name)
            if v is not None and not isinstance(v, int):
                raise InvalidParameter("{} filter must be an integer".format(name))

    def accepts(self, st):
        return ((self.orientable is None or st.orientable == self.orientable)
                and _in_range(st.boundary, self.boundary)
                and (self.genus_or_crosscaps is None
                     or st.genus_or_crosscaps == self.genus_or_crosscaps)
                and (self.euler is None or st.euler == self.euler))

    @property
    def closed_only(self):
        return self.boundary is not None and self.boundary[1] == 0


@dataclass(frozen=True)
class CensusRecord:
    system: BladeSystem
    surface: SurfaceType
    passport: object
    map_type: tuple

    @property
    def key(self):
        return (self.system.n, self.system.table())


def _signature_ok(tables, sig):
    tau, lam, rho = tables
    n = len(tau)
    for a, b, bound in ((tau, lam, sig.l0), (tau, rho, sig.l1), (rho, lam, sig.linf)):
        if bound is INFINITY:
            continue
        for i in range(n):
            j = i
            k = 0
            while True:
                j = a[b[j]]
                k += 1
                if j == i:
                    break
                if k > bound:
                    return False
            if bound % k:
                return False
    return True


def _compare_from(T, n, base):
    """-1 if relabeling from ``base`` beats ``T`` on its determined prefix, 1 if it loses, else 0."""
    label = [-1] * n
    label[base] = 0
    order = [base]
    for r in range(n):
        if r >= len(order):
            return 0
        o = 3 * order[r]
        row = 3 * r
        for g in range(3):
            x = T[o + g]
            if x < 0:
                return 0
            v = label[x]
            if v < 0:
                v = label[x] = len(order)
                order.append(x)
            cur = T[row + g]
            if cur < 0:
                return 0
            if v != cur:
                return -1 if v < cur else 1
    return 0


class _Search:
    def __init__(self, n, orientable_only, closed_only):
        self.n = n
        self.orientable_only = orientable_only
        self.closed_only = closed_only

    def initial(self):
        T = [-1] * (3 * self.n)
        color = [-1] * self.n
        color[0] = 0
        return T, color, 1

    def children(self, state, s):
        """Assignments for slot ``s``: list of ``(j, is_new)``."""
        T, color, next_new = state
        n = self.n
        i, g = divmod(s, 3)
        out = []
        if not self.closed_only:
            out.append(i)
        for j in range(i + 1, next_new):
            if T[3 * j + g] < 0 and not (self.orientable_only and color[j] == color[i]):
                out.append(j)
        if next_new < n:
            out.append(next_new)
        return out

    def run(self, T, color, next_new, s, emit, depth=None):
        """Fill slots from ``s`` on, calling ``emit`` on canonical complete tables.

        With ``depth`` set, stop after that many choices and emit the partial
        state ``(T, color, next_new, s)`` instead.
        """
        n = self.n
        last = 3 * n
        while s < last and T[s] >= 0:
            s += 1
            if s % 3 == 0 and not self._row_done(T, s // 3, next_new):
                return
        if depth == 0:
            emit((list(T), list(color), next_new, s))
            return
        if s == last:
            if next_new == n and self._canonical(T):
                emit(T)
            return
        i, g = divmod(s, 3)
        for j in self.children((T, color, next_new), s):
            new = j == next_new
            T[s] = j
            T[3 * j + g] = i
            if new:
                color[j] = 1 - color[i]
            nn = next_new + 1 if new else next_new
            if (s + 1) % 3 != 0 or self._row_done(T, (s + 1) // 3, nn):
                self.run(T, color, nn, s + 1, emit, None if depth is None else depth - 1)
            T[s] = -1
            T[3 * j + g] = -1
            if new:
                color[j] = -1

    def _row_done(self, T, rows, next_new):
        """Checks after ``rows`` complete rows: connectivity and partial canonicity."""
        if rows < self.n and rows >= next_new:
            return False
        for base in range(1, next_new):
            if _compare_from(T, self.n, base) < 0:
                return False
        return True

    def _canonical(self, T):
        return all(_compare_from(T, self.n, b) >= 0 for b in range(1, self.n))


def _tables(T, n):
    return (T[0::3], T[1::3], T[2::3])


def _split_prefixes(search, depth):
    """Partial states after ``depth`` choices, in search order."""
    out = []
    T, color, nn = search.initial()
    search.run(T, color, nn, 0, out.append, depth)
    return out


def _run_subtree(args):
    n, orientable_only, closed_only, sig, T, color, next_new, s = args
    search = _Search(n, orientable_only, closed_only)
    found = []

    def emit(table):
        if _signature_ok(_tables(table, n), sig):
            found.append(tuple(table))

    search.run(T, color, next_new, s, emit)
    return found


def enumerate_systems(n, signature=None, orientable_only=False, closed_only=False, threads=1):
    """Canonical transition tables of all blade systems on exactly ``n`` blades, sorted."""
    if signature is None:
        signature = TriangleSignature(INFINITY, INFINITY, INFINITY)
    search = _Search(n, orientable_only, closed_only)
    if threads > 1 and n >= 6:
        prefixes = _split_prefixes(search, 4)
        jobs = [(n, orientable_only, closed_only, signature) + tuple(p) for p in prefixes]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(_run_subtree, jobs))
        tables = [t for chunk in chunks for t in chunk]
    else:
        T, color, nn = search.initial()
        tables = _run_subtree((n, orientable_only, closed_only, signature, T, color, nn, 0))
    tables.sort()
    return tables


def enumerate_census(q, threads=None):
    """Yield one :class:`CensusRecord` per isomorphism class, sorted by ``(N, table)``."""
    if threads is None:
        threads = default_threads()
    for n in range(q.min_blades, q.max_blades + 1):
        tables = enumerate_systems(n, q.signature, orientable_only=q.orientable is True,
                                   closed_only=q.closed_only, threads=threads)
        for t in tables:
            B = BladeSystem.from_table(t, q.signature, check=False)
            B._key = t
            st = classify(B)
            if q.accepts(st):
                yield CensusRecord(B, st, passport(B), map_type(B))


def count(q, threads=None):
    if threads is None:
        threads = default_threads()
    unfiltered = (q.orientable is None and q.euler is None and q.genus_or_crosscaps is None
                  and q.boundary in (None, (None, None), (0, None)))
    if not unfiltered:
        return sum(1 for _ in enumerate_census(q, threads))
    return sum(len(enumerate_systems(n, q.signature, threads=threads))
               for n in range(q.min_blades, q.max_blades + 1))


def summary(records):
    """Counts of records per :class:`SurfaceType`, sorted by surface."""
    counts = {}
    for r in records:
        counts[r.surface] = counts.get(r.surface, 0) + 1
    return sorted(counts.items(), key=lambda kv: (-kv[0].euler, not kv[0].orientable,
                                                  kv[0].boundary, kv[0].genus_or_crosscaps))
