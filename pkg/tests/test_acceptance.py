"""Acceptance criteria, one test per criterion.

Run ``pytest tests/test_acceptance.py`` (the summary section lists one
PASS/FAIL line per criterion) or ``python tests/test_acceptance.py``.
"""
import random
from fractions import Fraction

from acceptance_log import criterion
from kleinmaps.blades import (BladeSystem, _boundary_links, boundary, classify, complex_double,
                              conjugate, euler_characteristic, map_type, orientability, passport)
from kleinmaps.census import CensusQuery, enumerate_census, enumerate_systems
from kleinmaps.darts import DartMap, dart_euler, darts_isomorphic, orient, to_blades
from kleinmaps.normalize import INF, GaussianRational, j_invariant, normalize, real_forms
from kleinmaps.perm import Permutation
from kleinmaps.blades import is_isomorphic
from kleinmaps.triangle import INFINITY, TriangleSignature
from oracles import (all_dart_maps, brute_force_class_count, flag_classify, random_permutation,
                     random_tables)

P = Permutation.parse
CORPUS_SEED = 20240501
CORPUS_SIZE = 10_000


def _system(n, tau, lam, rho):
    return BladeSystem(P(tau, n), P(lam, n), P(rho, n))


KNOWN_SURFACES = [
    ("trivial disc", _system(1, "", "", ""), (1, True, 1, 0)),
    ("trivial sphere", _system(2, "(1 2)", "(1 2)", "(1 2)"), (2, True, 0, 0)),
    ("3-blade hypermap", _system(3, "(1 2)", "(1 3)", "(2 3)"), (0, False, 0, 2)),
    ("4-blade projective", _system(4, "(1 2)(3 4)", "(1 4)(2 3)", "(1 3)(2 4)"), (1, False, 0, 1)),
    ("4-blade path", _system(4, "(1 2)(3 4)", "(1 4)(2 3)", ""), (1, True, 1, 0)),
]


def test_criterion_1_known_surfaces():
    with criterion(1, "known-surface table", budget=1.0):
        failures = []
        for name, B, expected in KNOWN_SURFACES:
            oracle = flag_classify(B.tables())
            st = classify(B)
            got = (st.euler, st.orientable, st.boundary, st.genus_or_crosscaps)
            if oracle != expected or got != expected:
                failures.append("{}: expected {}, classify {}, oracle {}".format(
                    name, expected, got, oracle))
        assert not failures, "; ".join(failures)


def _corpus():
    rng = random.Random(CORPUS_SEED)
    for _ in range(CORPUS_SIZE):
        tables = random_tables(64, rng)
        yield BladeSystem(*(Permutation(t) for t in tables)), rng


def _invariants(B):
    return (euler_characteristic(B), orientability(B), boundary(B).count, map_type(B), passport(B))


def test_criterion_2_invariant_suite():
    with criterion(2, "invariant suite on {} random systems".format(CORPUS_SIZE), budget=60.0):
        count = 0
        for B, rng in _corpus():
            count += 1
            st = classify(B)  # raises InternalParity / InternalClassification on violation
            if st.orientable:
                assert st.euler == 2 - 2 * st.genus_or_crosscaps - st.boundary
            else:
                assert st.genus_or_crosscaps >= 1
                assert st.euler == 2 - st.genus_or_crosscaps - st.boundary
            B2 = conjugate(B, Permutation(random_permutation(B.n, rng)))
            assert _invariants(B) == _invariants(B2)
            fixed, links = _boundary_links(B)
            for node in fixed:
                assert len(links[node]) == 2
                for h, (nbr, arrived) in links[node].items():
                    assert links[nbr][arrived] == (node, h)
            has_fixed = any(g.fixed_points() for g in B.generators)
            assert (st.boundary == 0) == (not has_fixed)
        assert count == CORPUS_SIZE
        assert max(B.n for B, _ in _corpus()) <= 64


def test_criterion_3_double_laws():
    with criterion(3, "complex double laws on the same corpus"):
        for B, _ in _corpus():
            d = complex_double(B)
            assert sum(euler_characteristic(C) for C in d.components) == 2 * euler_characteristic(B)
            assert all(not g.fixed_points() for C in d.components for g in C.generators)
            closed = boundary(B).count == 0
            assert (len(d.components) == 2) == (orientability(B) and closed)


def test_criterion_4_census_vs_brute_force():
    with criterion(4, "census equals brute-force class counts for N <= 6", budget=30.0):
        counts = [len(enumerate_systems(n)) for n in range(1, 7)]
        assert counts[:2] == [1, 7]
        assert sum(counts[:2]) == 8
        brute = [brute_force_class_count(n) for n in range(1, 7)]
        assert counts == brute, (counts, brute)


def test_criterion_5_dart_blade_round_trips():
    with criterion(5, "dart/blade round trips"):
        for n in range(1, 7):
            for x, y in all_dart_maps(n):
                D = DartMap(Permutation(x), Permutation(y), check=False)
                B = to_blades(D)
                E = orient(B)
                assert E == D or darts_isomorphic(E, D)
                assert euler_characteristic(B) == dart_euler(D)
        q = CensusQuery(12, TriangleSignature(2, INFINITY, INFINITY), orientable=True,
                        boundary=0, cap=12)
        seen = 0
        for rec in enumerate_census(q):
            seen += 1
            assert is_isomorphic(to_blades(orient(rec.system)), rec.system)
        assert seen > 0


def _random_fraction(rng):
    return Fraction(rng.randint(-12, 12), rng.randint(1, 6))


def _random_critical_set(rng):
    kind = rng.randrange(3)
    if kind == 0:
        pool = {_random_fraction(rng) for _ in range(rng.randint(1, 3))}
        values = [GaussianRational(v) for v in pool]
        if rng.random() < 0.5 and len(values) < 3:
            values.append(INF)
        return values
    im = _random_fraction(rng)
    while im == 0:
        im = _random_fraction(rng)
    P_ = GaussianRational(_random_fraction(rng), im)
    values = [P_, P_.conjugate()]
    if kind == 1:
        values.append(rng.choice([INF, GaussianRational(_random_fraction(rng))]))
    return values


def test_criterion_6_normalization_pipeline():
    with criterion(6, "critical-value normalization certificates", budget=10.0):
        targets = {GaussianRational(0), GaussianRational(1), INF}
        rng = random.Random(6)
        for _ in range(1000):
            _, cert = normalize(_random_critical_set(rng))
            assert cert.verified
            assert set(cert.images) | set(cert.own_critical_values) <= targets
        h, cert = normalize(["i", "-i", "inf"])
        assert sorted(map(str, cert.images)) == ["0", "0", "inf"]
        assert set(cert.own_critical_values) == {GaussianRational(1), INF}
        # nothing after the fold: the fold's critical value is already 1
        assert [name for name, _ in cert.stages] == ["fold"]


def test_criterion_7_j_invariant_identities():
    with criterion(7, "j-invariant identities"):
        assert j_invariant(0, 1) == 0
        assert j_invariant(1, 0) == 1
        rng = random.Random(7)
        done = 0
        while done < 100:
            j = Fraction(rng.randint(-500, 500), rng.randint(1, 60))
            if j in (0, 1):
                continue
            t = 27 * j / (j - 1)
            assert j_invariant(t, t) == j == j_invariant(t, -t)
            (p2, p3), (m2, m3) = real_forms(j)
            assert (p2, p3, m2, m3) == (t, t, t, -t)
            assert (p3 > 0) != (m3 > 0)
            done += 1


def test_criterion_8_census_existence():
    with criterion(8, "Moebius band and annulus in the census (N <= 10)", budget=300.0):
        sig = TriangleSignature(2, INFINITY, INFINITY)
        wanted = {"Moebius band": (False, 1), "annulus": (True, 2)}
        found = {}
        for name, (orientable, b) in wanted.items():
            q = CensusQuery(10, sig, orientable=orientable, boundary=b, euler=0)
            for rec in enumerate_census(q):
                found[name] = rec
                break
        assert set(found) == set(wanted), found.keys()
        assert found["Moebius band"].surface.name == "Moebius band"
        assert found["annulus"].surface.name == "annulus"


if __name__ == "__main__":
    import acceptance_log
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except Exception:
                pass
    print("\n".join(acceptance_log.lines()))
