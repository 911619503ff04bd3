import random

import pytest
from hypothesis import given, settings, strategies as st

from kleinmaps.blades import (BladeSystem, Passport, SurfaceType, boundary, canonical_form,
                              cells, classify, complex_double, conjugate, euler_characteristic,
                              is_isomorphic, map_type, orientability, passport, validate)
from kleinmaps.census import enumerate_systems
from kleinmaps.errors import NotInvolution, NotTransitive, SignatureViolation
from kleinmaps.perm import Permutation
from kleinmaps.triangle import builtin_signature
from oracles import brute_force_conjugate, flag_classify, random_permutation, random_tables

P = Permutation.parse


def system(n, tau, lam, rho, sig=None):
    return BladeSystem(P(tau, n), P(lam, n), P(rho, n), sig)


DISC = system(1, "", "", "")
SPHERE = system(2, "(1 2)", "(1 2)", "(1 2)")
HYPER3 = system(3, "(1 2)", "(1 3)", "(2 3)")
SQUARE = system(4, "(1 2)(3 4)", "(1 4)(2 3)", "")
PROJECTIVE = system(4, "(1 2)(3 4)", "(1 4)(2 3)", "(1 3)(2 4)")


def random_system(seed, max_n=32):
    tables = random_tables(max_n, random.Random(seed))
    return BladeSystem(*(Permutation(t) for t in tables))


seeds = st.integers(0, 10**9)


# -- validate --------------------------------------------------------------

def test_validate_examples():
    m11 = builtin_signature("MAP", 1, 1)
    e = Permutation.identity(1)
    assert validate(1, e, e, e, m11).n == 1
    s = P("(1 2)", 2)
    assert validate(2, s, s, s, m11).n == 2
    validate(3, P("(1 2)", 3), P("(1 3)", 3), P("(2 3)", 3), builtin_signature("LEVEL2_STAR"))
    with pytest.raises(SignatureViolation) as err:
        validate(3, P("(1 2)", 3), P("(1 3)", 3), P("(2 3)", 3), builtin_signature("MAP", 6, 6))
    assert err.value.product == "tau*lambda" and err.value.order == 3


def test_validate_rejects():
    with pytest.raises(NotInvolution):
        system(3, "(1 2 3)", "", "")
    with pytest.raises(NotTransitive):
        system(2, "", "", "")


# -- map_type and cells ----------------------------------------------------

def test_map_type():
    assert map_type(DISC) == (1, 1)
    assert map_type(SQUARE) == (2, 2)
    # tau*rho and rho*lambda are 3-cycles here
    assert map_type(HYPER3) == (3, 3)


def test_cells():
    assert [len(c) for c in cells(DISC)] == [1, 1, 1]
    assert [len(c) for c in cells(SPHERE)] == [1, 1, 1]
    v, e, f = cells(SQUARE)
    assert v.blocks == [[0, 1], [2, 3]]
    assert (len(v), len(e), len(f)) == (2, 1, 2)


# -- Euler characteristic, orientability, boundary ---------------------------

@pytest.mark.parametrize("B, chi", [(DISC, 1), (SPHERE, 2), (HYPER3, 0)])
def test_euler_examples_match_oracle(B, chi):
    assert flag_classify(B.tables())[0] == chi
    assert euler_characteristic(B) == chi


def test_orientability_examples():
    assert orientability(SPHERE)
    assert not orientability(HYPER3)
    assert orientability(DISC)


def test_boundary_disc():
    rep = boundary(DISC)
    assert set(rep.fixed_pairs) == {(0, "tau"), (0, "lambda"), (0, "rho")}
    assert rep.count == 1 and len(rep.components[0]) == 3


def test_boundary_sphere():
    rep = boundary(SPHERE)
    assert rep.fixed_pairs == () and rep.count == 0


def test_boundary_strip():
    B = system(2, "(1 2)", "", "")
    rep = boundary(B)
    assert set(rep.fixed_pairs) == {(0, "lambda"), (1, "lambda"), (0, "rho"), (1, "rho")}
    assert rep.count == 1
    # the cycle is 1λ - 2λ - 2ρ - 1ρ
    comp = rep.components[0]
    k = comp.index((0, "lambda"))
    cyc = comp[k:] + comp[:k]
    assert cyc in (((0, "lambda"), (1, "lambda"), (1, "rho"), (0, "rho")),
                   ((0, "lambda"), (0, "rho"), (1, "rho"), (1, "lambda")))


# -- classify --------------------------------------------------------------

@pytest.mark.parametrize("B, expected", [
    (DISC, SurfaceType(1, True, 1, 0)),
    (SPHERE, SurfaceType(2, True, 0, 0)),
    (HYPER3, SurfaceType(0, False, 1, 1)),
    (PROJECTIVE, SurfaceType(1, False, 0, 1)),
    (SQUARE, SurfaceType(1, True, 1, 0)),
])
def test_classify_examples(B, expected):
    assert tuple(expected.as_dict().values()) == flag_classify(B.tables())
    assert classify(B) == expected


def test_surface_names():
    assert classify(DISC).name == "disc"
    assert classify(PROJECTIVE).name == "projective plane"
    assert classify(HYPER3).name == "Moebius band"


def test_classify_matches_flag_complex_exhaustively():
    for n in range(1, 9):
        for t in enumerate_systems(n):
            B = BladeSystem.from_table(t)
            st_ = classify(B)
            assert (st_.euler, st_.orientable, st_.boundary, st_.genus_or_crosscaps) \
                == flag_classify(B.tables()), B


# -- complex double --------------------------------------------------------

def test_double_disc_is_sphere():
    d = complex_double(DISC)
    assert len(d.components) == 1
    assert is_isomorphic(d.components[0], SPHERE)
    assert d.deck == (((0, 0), (0, 1)),)


def test_double_sphere_disconnects():
    d = complex_double(SPHERE)
    assert len(d.components) == 2
    assert all(is_isomorphic(C, SPHERE) for C in d.components)


def test_double_hyper3():
    d = complex_double(HYPER3)
    assert len(d.components) == 1
    C = d.components[0]
    assert C.n == 6 and boundary(C).fixed_pairs == ()
    assert classify(C) == SurfaceType(0, True, 0, 1)


@settings(max_examples=300)
@given(seeds)
def test_double_laws(seed):
    B = random_system(seed)
    d = complex_double(B)
    assert sum(euler_characteristic(C) for C in d.components) == 2 * euler_characteristic(B)
    assert all(not boundary(C).fixed_pairs for C in d.components)
    assert (len(d.components) == 2) == (orientability(B) and boundary(B).count == 0)
    for (c1, b1), (c2, b2) in d.deck:
        assert (c1, b1) != (c2, b2)


# -- passport --------------------------------------------------------------

def test_passport_examples():
    assert passport(DISC) == Passport((1,), (1,), (1,))
    assert passport(SQUARE) == Passport((2, 2), (2, 2), (2, 2))
    assert passport(HYPER3) == Passport((3,), (3,), (3,))


@given(seeds)
def test_passport_sums(seed):
    B = random_system(seed)
    assert all(sum(part) == B.n for part in (passport(B).over0, passport(B).over1,
                                             passport(B).overinf))


# -- canonical form and isomorphism ----------------------------------------

def test_canonical_small():
    assert canonical_form(DISC)[0] == DISC
    a = system(2, "(1 2)", "", "")
    b = system(2, "", "(1 2)", "")
    assert canonical_form(a)[0].table() != canonical_form(b)[0].table()
    assert brute_force_conjugate(a.tables(), b.tables()) is None
    assert not is_isomorphic(a, b)


def test_isomorphic_examples():
    relabeled = conjugate(HYPER3, P("(1 3)", 3))
    assert relabeled != HYPER3
    assert brute_force_conjugate(HYPER3.tables(), relabeled.tables()) is not None
    assert is_isomorphic(HYPER3, relabeled)
    assert not is_isomorphic(DISC, SPHERE)


def test_canonical_relabeling_is_conjugation():
    C, sigma = canonical_form(PROJECTIVE)
    assert conjugate(PROJECTIVE, sigma).generators == C.generators


@given(seeds)
def test_canonical_conjugation_invariance(seed):
    rng = random.Random(seed)
    B = random_system(seed, 16)
    sigma = Permutation(random_permutation(B.n, rng))
    B2 = conjugate(B, sigma)
    assert canonical_form(B)[0].table() == canonical_form(B2)[0].table()
    assert is_isomorphic(B, B2)


def test_isomorphism_agrees_with_brute_force():
    rng = random.Random(7)
    for _ in range(150):
        t1 = random_tables(5, rng)
        t2 = random_tables(5, rng)
        if len(t1[0]) != len(t2[0]):
            continue
        B1 = BladeSystem(*(Permutation(t) for t in t1))
        B2 = BladeSystem(*(Permutation(t) for t in t2))
        assert is_isomorphic(B1, B2) == (brute_force_conjugate(t1, t2) is not None)


# -- invariance properties -------------------------------------------------

@settings(max_examples=300)
@given(seeds)
def test_invariants_under_conjugation(seed):
    rng = random.Random(seed)
    B = random_system(seed, 64)
    B2 = conjugate(B, Permutation(random_permutation(B.n, rng)))
    assert classify(B) == classify(B2)
    assert map_type(B) == map_type(B2)
    assert passport(B) == passport(B2)


@settings(max_examples=300)
@given(seeds)
def test_boundary_graph_two_regular(seed):
    from kleinmaps.blades import _boundary_links
    B = random_system(seed, 64)
    fixed, links = _boundary_links(B)
    for node in fixed:
        assert len(links[node]) == 2
        for h, (nbr, arrived) in links[node].items():
            back, back_arr = links[nbr][arrived]
            assert back == node and back_arr == h
    rep = boundary(B)
    assert sorted(p for comp in rep.components for p in comp) == sorted(rep.fixed_pairs)
    assert (rep.count == 0) == (not rep.fixed_pairs)
