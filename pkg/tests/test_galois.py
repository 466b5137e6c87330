from fractions import Fraction as Fr

import numpy as np
import pytest
import sympy as sp

from pzfield import AllZeroParams, Params, reduce_to_linear
from pzfield.galois import (
    GeneratorForm,
    Group,
    RhoValue,
    compute_rho,
    family_galois,
    full_lienard,
    galois_group,
    lienard_reduce,
    lienard_residual,
    params_galois,
    rho_formula,
)
from pzfield.expression import t


@pytest.mark.parametrize("abc, rho", [
    ((0, 0, 4), -4), ((0, 3, 0), 0), ((3, 0, 0), 0), ((2, 3, 0), 12),
    ((2, 0, 5), -5), ((0, 2, 5), -5), ((1, 1, 3), -1), ((1, 1, 2), 0),
])
def test_table_values(abc, rho):
    assert compute_rho(Params(*abc)).rho == rho


def test_all_zero_has_no_rho():
    with pytest.raises(AllZeroParams):
        rho_formula((False, False, False))


def test_float_rho_zero_formula_keeps_type():
    value = compute_rho(Params(0.0, 2.5, 0.0)).rho
    assert value == 0 and isinstance(value, float)


def test_group_selection():
    ga = galois_group(RhoValue(Fr(0)))
    assert ga.group is Group.ADDITIVE and ga.generator_matrix_form is GeneratorForm.UNIPOTENT
    assert ga.reduced_basis == (1, t)
    gm = galois_group(RhoValue(Fr(4)))
    assert gm.group is Group.MULTIPLICATIVE and gm.generator_matrix_form is GeneratorForm.TORUS
    assert gm.reduced_basis == (sp.exp(2 * t), sp.exp(-2 * t))


def test_generator_matrices_compose_as_the_group():
    ga = galois_group(RhoValue(0))
    np.testing.assert_allclose(ga.generator_matrix(2) @ ga.generator_matrix(3), ga.generator_matrix(5))
    gm = galois_group(RhoValue(-1))
    np.testing.assert_allclose(gm.generator_matrix(2) @ gm.generator_matrix(3), gm.generator_matrix(6))
    np.testing.assert_allclose(gm.generator_matrix(1j) @ gm.generator_matrix(-1j), np.eye(2))


def test_automorphism_preserves_wronskian_up_to_det():
    # sigma_c acts on the basis; the Wronskian scales by det(sigma_c) = 1
    gm = galois_group(RhoValue(9))
    y1, y2 = gm.reduced_basis
    w = sp.simplify(y1 * sp.diff(y2, t) - y2 * sp.diff(y1, t))
    assert w == -6
    assert np.isclose(np.linalg.det(gm.generator_matrix(3.5)), 1)


def test_lienard_reduction_of_full_family():
    form = full_lienard(Fr(1), Fr(2), Fr(3))
    assert (form.damping, form.stiffness) == (-6, 8)
    assert form.rate == 3 and form.rho == 2 * 1 * 2 - 3


def test_params_basis_solves_lienard(rng):
    ts = np.linspace(-1, 1, 100)
    for a, b, c in rng.uniform(-3, 3, size=(10, 3)):
        result = params_galois(Params(a, b, c))
        assert lienard_residual(result, full_lienard(a, b, c), ts) < 1e-8


def test_real_basis_for_negative_rho():
    result = params_galois(Params(1, 1, 3))
    cos_part, sin_part = result.real_basis()
    assert cos_part == sp.exp(2 * t) * sp.cos(t)
    form = full_lienard(1, 1, 3)
    for member in (cos_part, sin_part):
        assert sp.simplify(form.residual(member)) == 0


@pytest.mark.parametrize("params", [Params(0, 1, 1), Params(1, 0, 1), Params(0, 2, 0, k=Fr(1, 2)),
                                    Params(0, 0, 4), Params(1, 1, 0)])
def test_family_bases_solve_their_own_equation(params):
    for fam in reduce_to_linear(params):
        form = lienard_reduce(fam)
        assert lienard_residual(family_galois(fam), form, np.linspace(-1, 1, 50)) < 1e-8


def test_family_rho_differs_from_table_for_affine_families():
    f4, f5 = reduce_to_linear(Params(0, 2, 3))
    assert lienard_reduce(f4).rho == compute_rho(Params(0, 2, 3)).rho == -3
    assert lienard_reduce(f5).rho == Fr(9, 4) - 2
    assert lienard_reduce(f5).shift == Fr(-3, 2)
