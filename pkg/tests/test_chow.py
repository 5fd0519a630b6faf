from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from ellbundle.chow import (
    BaseDivisor,
    BundlePair,
    ChowClass,
    ChowRing,
    chern_ambient,
    chern_ambient_closed_form,
    chern_cy,
    chern_cy_closed_form,
    conic_residual_closed_form,
    degree,
    euler_characteristic,
    friedman_residual,
    mul,
    pushforward,
    relative_tangent_total,
    section_class,
    section_invariants,
)
from ellbundle.surface import BaseSurface, preset_del_pezzo_submultiple, preset_projective_plane

from oracles import L, c1, c2, chern_Z_symbolic, degree_on_Z, graded_part, xi

P2 = preset_projective_plane(1)
P1P1 = BaseSurface(L2=4, c1L=6, c1sq=8, c2=4, n0=3, name="P1xP1, L=f1+2f2")
BL1 = BaseSurface(L2=3, c1L=5, c1sq=8, c2=4, n0=3, name="Bl1 P2, L=2h-e")
SURFACES = [P2, P1P1, BL1, preset_projective_plane(2), preset_del_pezzo_submultiple(8, 2)]

X = ChowClass.xi
D = ChowClass.divisor
P = ChowClass.point


# -- ring basics -----------------------------------------------------------

def test_xi_times_xi():
    assert mul(X(), X(), (4, 1), P2) == X(2)


def test_xi_cubed_reduces_by_relation():
    # xi^3 = -(a+b) L xi^2 - ab L^2 xi with (a, b) = (1, 1) and L^2 = 1
    assert mul(X(2), X(), (1, 1), P2) == D(l=-2, xi_power=2) + P(-1, xi_power=1)


def test_relation_degenerates_for_trivial_bundle():
    prod = mul(D(l=1, xi_power=2), X(), (0, 0), P2)
    assert prod.codim == 4
    assert degree(prod) == 0


def test_codim_overflow_rejected():
    with pytest.raises(ValueError):
        mul(X(2), D(l=1, xi_power=2), (1, 0), P2)


def test_degree_of_point_times_xi_squared():
    assert degree(P(5, xi_power=2)) == 5


def test_degree_needs_codim_four():
    with pytest.raises(ValueError):
        degree(P(3, xi_power=1))


def test_xi_fourth_power_over_p2():
    ring = ChowRing((1, 0), P2)
    # ((a+b)^2 - ab) L^2 = 1
    assert degree(ring.power(X(), 4)) == 1


@pytest.mark.parametrize("a,b", [(0, 0), (1, 0), (3, 2), (9, 6), (7, 7)])
@pytest.mark.parametrize("surface", SURFACES, ids=lambda s: s.name)
def test_xi_powers_match_segre_oracle(a, b, surface):
    ring = ChowRing((a, b), surface)
    assert degree(ring.power(X(), 4)) == degree_on_Z(xi**4, a, b, surface)
    assert degree(ring.mul(ring.power(X(), 3), D(l=1))) == degree_on_Z(xi**3 * L, a, b, surface)
    assert degree(ring.mul(ring.power(X(), 3), D(c1=1))) == degree_on_Z(xi**3 * c1, a, b, surface)


def test_relative_tangent_codim3_vanishes():
    for a in range(0, 21):
        for b in range(0, a + 1):
            ring = ChowRing((a, b), P1P1)
            assert relative_tangent_total(ring)[3].is_zero()


def test_pushforward():
    assert pushforward(section_class((4, 6))) == 1
    assert pushforward(D(l=2, c1=1, xi_power=2)) == BaseDivisor(2, 1)
    assert pushforward(P(7, xi_power=1)) == BaseDivisor()
    assert pushforward(X()) == 0


def test_normalize_pair():
    assert BundlePair.normalize(2, 5) == (5, 2)
    assert BundlePair.normalize(-2, 3) == (5, 2)
    assert BundlePair.normalize(-1, -4) == (4, 3)
    assert BundlePair.normalize(0, 0) == (0, 0)


# -- hypothesis: ring axioms -------------------------------------------------

coef = st.integers(-6, 6)


@st.composite
def classes(draw, codim):
    terms = {}
    for k in range(3):
        base = codim - k
        if base == 0:
            terms[(k, "1")] = draw(coef)
        elif base == 1:
            terms[(k, "L")] = draw(coef)
            terms[(k, "c1")] = draw(coef)
        elif base == 2:
            terms[(k, "pt")] = draw(coef)
    return ChowClass.build(codim, terms)


pairs = st.tuples(st.integers(0, 12), st.integers(0, 12)).map(lambda t: (max(t), min(t)))
surfaces = st.sampled_from(SURFACES)


@settings(max_examples=150, deadline=None)
@given(pairs, surfaces, st.integers(0, 2), st.integers(0, 2), st.data())
def test_mul_commutative(pair, surface, p, q, data):
    x, y = data.draw(classes(p)), data.draw(classes(q))
    assert mul(x, y, pair, surface) == mul(y, x, pair, surface)


@settings(max_examples=150, deadline=None)
@given(pairs, surfaces, st.data())
def test_mul_associative(pair, surface, data):
    x, y, z = data.draw(classes(1)), data.draw(classes(1)), data.draw(classes(2))
    ring = ChowRing(pair, surface)
    assert ring.mul(ring.mul(x, y), z) == ring.mul(x, ring.mul(y, z))


@settings(max_examples=100, deadline=None)
@given(pairs, surfaces, st.integers(-5, 5), st.data())
def test_degree_linear(pair, surface, k, data):
    x, y, w = data.draw(classes(2)), data.draw(classes(2)), data.draw(classes(2))
    ring = ChowRing(pair, surface)
    lhs = degree(ring.mul(x * k + y, w))
    assert lhs == k * degree(ring.mul(x, w)) + degree(ring.mul(y, w))


# -- Chern classes -----------------------------------------------------------

def test_c1_trivial_bundle():
    c = chern_ambient((0, 0), P2)
    assert c[0] == D(c1=1) + 3 * X()


def test_c1_p2_pair_21():
    c1_Z = chern_ambient((2, 1), P2)[0]
    assert c1_Z.coefficient(0) == BaseDivisor(l=3, c1=1)
    assert c1_Z.coefficient(1) == 3


@pytest.mark.parametrize("pair", [(0, 0), (2, 1), (9, 6), (20, 3)])
def test_euler_number_of_Z_over_p2(pair):
    # chi(P^2) * chi(P^2)
    assert degree(chern_ambient(pair, P2)[3]) == 9


@pytest.mark.parametrize("surface", SURFACES, ids=lambda s: s.name)
def test_chern_ambient_matches_closed_form(surface):
    for a in range(0, 21, 3):
        for b in range(0, a + 1, 2):
            assert chern_ambient((a, b), surface) == chern_ambient_closed_form((a, b), surface)


@pytest.mark.parametrize("pair", [(0, 0), (3, 1), (9, 6)])
@pytest.mark.parametrize("surface", [P2, P1P1, BL1], ids=lambda s: s.name)
def test_chern_numbers_against_symbolic_oracle(pair, surface):
    """Degrees of c_i(Z) * xi^(4-i) via unreduced sympy expansion + Segre push-forward."""
    a, b = pair
    total = chern_Z_symbolic(a, b)
    ring = ChowRing(pair, surface)
    classes_ = chern_ambient(pair, surface)
    for i in range(1, 5):
        ours = degree(ring.mul(classes_[i - 1], ring.power(X(), 4 - i)))
        assert ours == degree_on_Z(graded_part(total, i) * xi ** (4 - i), a, b, surface)


def test_psi2_trivial_bundle():
    psi2, _ = chern_cy((0, 0), P2)
    assert psi2 == 3 * X(2) + D(c1=3, xi_power=1) + P(P2.c2)


def test_psi_closed_forms_on_grid():
    for surface in (P2, P1P1, BL1):
        for a in range(0, 21, 4):
            for b in range(0, a + 1, 3):
                assert chern_cy((a, b), surface) == chern_cy_closed_form((a, b), surface)


def test_psi3_leading_term():
    _, psi3 = chern_cy((5, 2), P1P1)
    assert psi3.coefficient(2) == BaseDivisor(c1=-9)


# -- Euler characteristic ----------------------------------------------------

def test_euler_known_values_over_p2():
    # (9, 6): Weierstrass model over P^2, h11 = 2, h21 = 272
    assert euler_characteristic((9, 6), P2) == -540
    # (0, 0): bidegree (3, 3) hypersurface in P^2 x P^2, h11 = 2, h21 = 83
    assert euler_characteristic((0, 0), P2) == -162


@pytest.mark.parametrize("surface", SURFACES, ids=lambda s: s.name)
def test_euler_symmetric(surface):
    for a in range(8):
        for b in range(a + 1):
            assert euler_characteristic((a, b), surface) == euler_characteristic((b, a), surface)


def test_euler_against_symbolic_oracle():
    for surface in (P2, BL1):
        for a, b in [(0, 0), (4, 1), (6, 4)]:
            total = chern_Z_symbolic(a, b)
            c1Z = graded_part(total, 1)
            # c(X) = c(Z) / (1 + c1Z), codim-3 part, then pushed into Z by * c1Z
            inv = sum((-c1Z) ** k for k in range(5))
            cX3 = graded_part(sp.expand(total * inv), 3)
            assert euler_characteristic((a, b), surface) == degree_on_Z(cX3 * c1Z, a, b, surface)


# -- section and residual ----------------------------------------------------

def test_section_class():
    assert section_class((4, 0)) == X(2)
    assert section_class((8, 6)) == X(2) + D(l=6, xi_power=1)


@pytest.mark.parametrize("pair,expected", [((3, 0), 0), ((2, 1), 2), ((9, 6), 0)])
def test_friedman_residual_p2(pair, expected):
    assert friedman_residual(pair, P2) == expected


def test_friedman_two_paths_on_grid():
    for surface in SURFACES:
        for a in range(21):
            for b in range(a + 1):
                # raises DefectError on disagreement
                assert friedman_residual((a, b), surface) == conic_residual_closed_form((a, b), surface)


def test_friedman_against_symbolic_oracle():
    for surface in (P1P1, BL1):
        for a, b in [(1, 0), (2, 0), (5, 3)]:
            psi2 = graded_part(chern_Z_symbolic(a, b), 2)
            S = xi**2 + b * L * xi
            expected = degree_on_Z(psi2 * S, a, b, surface) - (surface.c2 - surface.c1sq)
            assert friedman_residual((a, b), surface) == expected


def test_section_invariants_p2():
    inv = section_invariants((3, 0), P2)
    assert inv.S_cubed == 9
    assert inv.c2X_dot_S == 3 - 9
    assert inv.c1_normal == BaseDivisor(c1=-1)
    assert inv.fundamental_class == BaseDivisor(c1=1)


@pytest.mark.parametrize("surface", SURFACES, ids=lambda s: s.name)
def test_fundamental_bundle_is_c1(surface):
    for pair in [(0, 0), (3, 1), (6, 4), (11, 2)]:
        inv = section_invariants(pair, surface)
        assert inv.fundamental_class == BaseDivisor(c1=1)
        assert inv.S_cubed == surface.c1sq
        assert inv.c2X_dot_S == surface.c2 - surface.c1sq + friedman_residual(pair, surface)


def test_class_arithmetic_checks_codim():
    with pytest.raises(ValueError):
        X(1) + X(2)
    with pytest.raises(ValueError):
        ChowClass.build(2, {(3, "1"): 1})
    assert (X(2) - X(2)).is_zero()
    assert Fraction(1, 2) * D(l=2) == D(l=1)
