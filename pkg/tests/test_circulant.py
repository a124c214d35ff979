import random
from fractions import Fraction

import mpmath
import numpy as np
import pytest
import sympy

from src.circulant.matrices import (
    CirculantSpec,
    assemble_l,
    assemble_m,
    build_blocks,
    circulant,
    det_nonzero,
    determinant,
    eigen_check,
    eigen_residual,
    eigenvalues_circulant,
    identity,
    solve_all_ones,
    zeros,
)
from src.circulant.rootsum import (
    RootSumPoly,
    cyclotomic,
    evaluate,
    is_zero_rootsum,
    poly_mul,
    search_vanishing_sums_pappus,
    search_vanishing_sums_petersen,
    solve_real_pair_system,
    verify_cyclotomic_factorization,
)
from src.circulant.witness import residue_count_witness, verify_family_system
from src.core.errors import BadSpec, LayoutUnknown, NotSquare, Singular
from src.families.generators import (
    PappusParams,
    PetersenParams,
    gen_pappus,
    gen_petersen,
    hexagonal_prism_coloring,
    pappus_coloring,
    petersen_coloring,
)

SYSTEM_CASES = [(3, 3), (9, 3), (9, 6), (27, 3), (27, 6)]


def sympy_det(mat) -> int:
    return int(sympy.Matrix(mat.tolist()).det())


def test_degenerate_b_block():
    _, b = build_blocks(3, 3)
    assert (b == 2 * identity(3)).all()


def test_block_first_rows():
    a, b = build_blocks(9, 3)
    assert list(a[0]) == [0, 1, 0, 0, 0, 0, 0, 0, 1]
    assert [c for c in range(9) if b[0, c]] == [3, 6]
    _, _, c = build_blocks(9, 3, 18)
    assert (c == identity(9)).all()


def test_c_block_needs_even_m():
    with pytest.raises(BadSpec):
        CirculantSpec.c_block(9, 9)
    with pytest.raises(BadSpec):
        CirculantSpec(0, (1,)).validated()


def test_assembled_shapes():
    a, b, c = build_blocks(9, 3, 18)
    assert assemble_m(a, b).shape == (18, 18)
    assert assemble_l(a, b, c).shape == (27, 27)


def test_determinants():
    assert determinant(identity(4)) == 1
    m = assemble_m(*build_blocks(3, 3))
    assert det_nonzero(m) == (True, 27)
    l_mat = assemble_l(*build_blocks(3, 3, 6))
    ok, det = det_nonzero(l_mat)
    assert ok and det == sympy_det(l_mat)
    with pytest.raises(NotSquare):
        determinant(np.zeros((2, 3), dtype=object))


@pytest.mark.parametrize("n,j", [(3, 3), (9, 3), (9, 6)])
def test_determinants_match_sympy(n, j):
    m = assemble_m(*build_blocks(n, j))
    l_mat = assemble_l(*build_blocks(n, j, 2 * n))
    assert determinant(m) == sympy_det(m) != 0
    assert determinant(l_mat) == sympy_det(l_mat) != 0


def test_determinant_of_random_integer_matrices(rng):
    for _ in range(10):
        mat = np.array([[rng.randint(-3, 3) for _ in range(6)] for _ in range(6)], dtype=object)
        assert determinant(mat) == sympy_det(mat)


def test_solve_all_ones_examples():
    m = assemble_m(*build_blocks(3, 3))
    assert solve_all_ones(m, Fraction(9, 3)) == [1] * 6
    l_mat = assemble_l(*build_blocks(3, 3, 18))
    assert solve_all_ones(l_mat, Fraction(18, 3)) == [2] * 9
    with pytest.raises(Singular):
        solve_all_ones(zeros(3), 1)


@pytest.mark.parametrize("n,j", SYSTEM_CASES)
def test_family_systems_have_constant_solutions(n, j):
    a = {3: 1, 9: 2, 27: 3}[n]
    for family, m in (("petersen", 3 * n), ("petersen", 2 * n), ("pappus", 6 * n)):
        report = verify_family_system(family, a, j, m)
        assert report.nonsingular
        assert report.solution_is_constant
        assert report.constant == Fraction(m, 3 * n)
        assert report.eigen_ok


def test_family_system_rejects_bad_input():
    with pytest.raises(BadSpec):
        verify_family_system("petersen", 0, 3, 9)
    with pytest.raises(BadSpec):
        verify_family_system("heawood", 1, 3, 9)


def test_eigenvalue_descriptors():
    assert eigenvalues_circulant(CirculantSpec.a_block(9), 0).value == pytest.approx(2)
    desc = eigenvalues_circulant(CirculantSpec.b_block(9, 3), 3)
    assert desc.exponents == (0, 0)
    assert desc.value == pytest.approx(2)
    assert circulant(CirculantSpec.a_block(5))[0, 1] == 1


def test_eigen_residuals(rng):
    for spec in (CirculantSpec.a_block(27), CirculantSpec.b_block(27, 6), CirculantSpec.c_block(9, 24)):
        for _ in range(5):
            assert eigen_residual(spec, rng.randrange(spec.n)) < 1e-100


def test_precision_comes_from_settings(quiet_settings):
    quiet_settings.circulant.float_digits = 400
    assert eigen_residual(CirculantSpec.b_block(27, 6), 5) < 1e-300
    zero = RootSumPoly.from_terms(30, {5: 1, 25: 1, 0: -1})
    assert abs(evaluate(zero)) < mpmath.mpf(10) ** -300


def test_eigen_check_uses_tolerance(quiet_settings):
    spec = CirculantSpec.c_block(9, 18)
    assert eigen_check(spec)
    assert not eigen_check(spec, tolerance=-1.0)
    quiet_settings.circulant.residual_tolerance = -1.0
    assert not eigen_check(spec)
    assert not verify_family_system("petersen", 1, 3, 9).eigen_ok


def test_cyclotomic_matches_sympy():
    x = sympy.symbols("x")
    for n in (1, 2, 3, 6, 30, 105, 210):
        coeffs = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()
        assert cyclotomic(n) == tuple(int(c) for c in reversed(coeffs))


def test_cyclotomic_factorization():
    assert verify_cyclotomic_factorization(30)
    assert verify_cyclotomic_factorization(210)


def test_zero_rootsum_examples():
    assert is_zero_rootsum(RootSumPoly(3, [1, 1, 1]))
    assert is_zero_rootsum(RootSumPoly(4, [1, 0, 1]))
    assert is_zero_rootsum(RootSumPoly.from_terms(30, {5: 1, 25: 1, 0: -1}))
    assert not is_zero_rootsum(RootSumPoly.from_terms(30, {5: 1, 0: -1}))


@pytest.mark.parametrize("N", [30, 210])
def test_exact_test_agrees_with_high_precision(N):
    rnd = random.Random(N)
    phi = cyclotomic(N)
    for trial in range(200):
        coeffs = [rnd.randint(-2, 2) if rnd.random() < 0.1 else 0 for _ in range(N)]
        if trial % 4 == 0:
            coeffs = list(poly_mul([rnd.randint(-2, 2) for _ in range(8)], phi))
        p = RootSumPoly(N, coeffs)
        value = evaluate(p, digits=200)
        assert is_zero_rootsum(p) == (abs(value) < mpmath.mpf(10) ** -50)


def test_petersen_search():
    assert search_vanishing_sums_petersen(rational_only=True) == [(0, 10)]
    found = search_vanishing_sums_petersen()
    assert (0, 10) in found and (3, 9) in found
    assert (15, 15) not in found


def test_split_systems():
    assert solve_real_pair_system(30, 1) == [5]
    assert solve_real_pair_system(60, 0) == [15]
    assert solve_real_pair_system(30, 0) == []


@pytest.mark.slow
def test_pappus_search():
    assert search_vanishing_sums_pappus(rational_only=True) == [(0, 35, 105), (0, 70, 70), (70, 105, 35)]
    found = search_vanishing_sums_pappus()
    assert (63, 84, 42) in found and (21, 42, 84) in found


def test_pappus_forbidden_sub_cases():
    assert solve_real_pair_system(210, 1, weight=2) == []
    assert solve_real_pair_system(210, -1, weight=2) == []
    assert solve_real_pair_system(105, 0) == []


def test_residue_witness_petersen():
    p = PetersenParams(9, 1)
    w = residue_count_witness(gen_petersen(p), petersen_coloring(p), 3, 0, p)
    assert w.x == w.y == (3, 0, 0)
    assert w.z is None
    assert w.lhs == (3,) * 6
    assert w.holds


def test_residue_witness_hexagonal_prism():
    p = PetersenParams(6, 1)
    w = residue_count_witness(gen_petersen(p), hexagonal_prism_coloring(), 3, 0, p)
    assert w.x == w.y == (0, 2, 0)
    assert w.rhs == 2
    assert w.holds


def test_residue_witness_pappus():
    p = PappusParams(18, 1, 9)
    w = residue_count_witness(gen_pappus(p), pappus_coloring(p), 9, 1, p)
    assert w.z is not None
    assert w.holds


def test_residue_witness_not_asserted_for_unbalanced():
    p = PetersenParams(9, 1)
    w = residue_count_witness(gen_petersen(p), [0] * 18, 3, 0, p)
    assert not w.holds


def test_residue_witness_errors():
    p = PetersenParams(9, 1)
    g = gen_petersen(p)
    with pytest.raises(LayoutUnknown):
        residue_count_witness(g.relabel([1, 0] + list(range(2, 18))), [0] * 18, 3, 0, p)
    with pytest.raises(BadSpec):
        residue_count_witness(g, [0] * 18, 2, 0, p)
    q = PappusParams(6, 1, 2)
    with pytest.raises(BadSpec):
        residue_count_witness(gen_pappus(q), [0] * 18, 3, 0, q)
