import random

import pytest
import sympy

from pseudoauto.exactcore import IntMatrix, QuadExt, UniPoly, quad_field_for_ell
from pseudoauto.lattice import (SALEM_OCTIC, DivisorClass, basis_w, basis_x, beta0_class,
                                build_fx_inv_star, build_fx_star, build_gw_star, chi_ell,
                                degree_sequence, gamma_class, gamma_fixed, intersection,
                                pisot_factor, satisfies_recurrence, sigma02, u_report,
                                u_self_intersection, verify_charpoly, verify_gw)
from pseudoauto.lattice.degrees import degree_crosscheck

X = sympy.Symbol("x")


def sympy_charpoly(action):
    rows = action.matrix.to_lists()
    return [int(c) for c in reversed(sympy.Matrix(rows).charpoly(X).all_coeffs())]


def test_chi2_expanded():
    assert chi_ell(2) == UniPoly.from_high([1, 0, -1, -1, -1, 0, 0, 0, 0, 1, 1, 1, 0, -1])
    assert chi_ell(2) == UniPoly([-1, 0, 0, 0, 1]) * UniPoly([1, 1]) * SALEM_OCTIC


@pytest.mark.parametrize("ell", range(2, 9))
def test_charpoly_report(ell):
    assert verify_charpoly(ell).passed


@pytest.mark.parametrize("ell", [2, 3, 5])
def test_charpoly_against_sympy(ell):
    assert sympy_charpoly(build_fx_star(ell)) == chi_ell(ell).int_coeffs()
    assert sympy_charpoly(build_fx_inv_star(ell)) == chi_ell(ell).int_coeffs()


def test_fx_star_shape_and_images():
    M = build_fx_star(2)
    assert M.basis.dim == 13
    H = DivisorClass.of(basis_x(2), {"H": 1})
    assert M(H).to_text() == "3*H - 2*E1^ - 2*E2 - 2*E3^ - 2*P9"


@pytest.mark.parametrize("ell", range(2, 7))
def test_chi_root_one_simple(ell):
    chi = chi_ell(ell)
    assert chi(1) == 0 and chi.derivative()(1) != 0


@pytest.mark.parametrize("ell", [2, 3, 4])
def test_gamma(ell):
    assert gamma_fixed(ell).passed
    M = build_fx_star(ell)
    D = M.matrix - IntMatrix.identity(M.basis.dim)
    assert D.rank() == 4 * ell + 4


def test_random_class_moved():
    rng = random.Random(1)
    M = build_fx_star(2)
    G = gamma_class(2)
    for _ in range(10):
        v = DivisorClass(basis_x(2), [rng.randint(-3, 3) for _ in range(13)])
        if any(v.coeffs[i] * G.coeffs[0] != G.coeffs[i] * v.coeffs[0] for i in range(13)):
            assert M(v) != v or all(x == 0 for x in v.coeffs)


@pytest.mark.parametrize("ell", range(2, 9))
def test_gw(ell):
    assert verify_gw(ell).passed
    expected = [int(c) for c in reversed(sympy.Poly(
        X ** 2 * (X - 1) ** 2 * (X ** ell - sum(X ** k for k in range(ell))), X).all_coeffs())]
    assert sympy_charpoly(build_gw_star(ell)) == expected


def test_gw_intersections():
    B = basis_w(3)
    S, Bt = sigma02(3), beta0_class(3)
    assert intersection(B, S, S) == -1
    assert intersection(B, S, Bt) == 1
    assert intersection(B, Bt, Bt) == -3


def test_u_vector():
    assert u_self_intersection() == QuadExt(0, 1, 5)
    assert u_report().passed


def test_degree_sequences():
    for ell in range(2, 5):
        assert degree_sequence(build_fx_star(ell), 1) == [3]
        assert degree_sequence(build_gw_star(ell), 2) == [4, 8]
    assert degree_sequence(build_fx_star(2), 2) == [3, 3]


def test_recurrence_helper():
    fib = [1, 1, 2, 3, 5, 8, 13]
    assert satisfies_recurrence(fib, UniPoly([-1, -1, 1]))
    assert not satisfies_recurrence(fib, UniPoly([-1, 1]))


def test_pisot_factor():
    assert pisot_factor(3) == UniPoly([-1, -1, -1, 1])


def test_degree_crosscheck_ell2():
    a, c, _ = quad_field_for_ell(2)
    rep = degree_crosscheck(2, a, c, n_f=6, n_g=4)
    assert rep.passed
    assert rep["f degrees"].details["symbolic"][:2] == [3, 3]
    assert rep["g degrees"].details["symbolic"][:2] == [4, 8]
