from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from wpscheck.errors import CYViolationError, DegenerateC2Error, DegreeMismatchError, KindMismatchError
from wpscheck.scroll import (
    ChowClass,
    ScrollSpec,
    c2_form,
    chern_data,
    chow_reduce,
    ci_chern,
    ci_model,
    cubic_form,
    double_cover_chern,
    double_cover_model,
    eval_cubic,
    euler_number,
    integrate,
    model_for,
    nef_criterion,
    nef_invariance_check,
    tangent_chern,
)

XI, F = sp.symbols("xi f")


def sym_integrate(expr, twists):
    """Oracle: reduce with sympy modulo (f^2, xi^r - c1E xi^(r-1) f) and read off
    the coefficient of xi^(r-1) f."""
    r, c1 = len(twists), sum(twists)
    G = sp.groebner([F**2, XI**r - c1 * XI ** (r - 1) * F], XI, F, order="lex")
    rem = G.reduce(sp.expand(expr))[1]
    poly = sp.Poly(rem, XI, F)
    return sum(c for (i, j), c in poly.terms() if (i, j) == (r - 1, 1))


def sym_part(expr, k):
    poly = sp.Poly(sp.expand(expr), XI, F)
    return sum(c * XI**i * F**j for (i, j), c in poly.terms() if i + j == k)


def sym_tangent(twists):
    return (1 + 2 * F) * sp.prod([1 + XI - a * F for a in twists])


def sym_ci(twists, Y):
    r = len(twists)
    total = sp.expand(sym_tangent(twists) * sum((-Y) ** k for k in range(r + 1)))
    c2, c3 = sym_part(total, 2), sym_part(total, 3)
    return (sym_integrate(c2 * Y * XI, twists), sym_integrate(c2 * Y * F, twists), sym_integrate(c3 * Y, twists))


def sym_cover(twists, L):
    r = len(twists)
    inv = sum((-2 * L) ** k for k in range(r + 1))
    total = sp.expand(sym_tangent(twists) * (1 + L) * inv)
    c2, c3 = sym_part(total, 2), sym_part(total, 3)
    return (2 * sym_integrate(c2 * XI, twists), 2 * sym_integrate(c2 * F, twists), 2 * sym_integrate(c3, twists))


def sym_cover_euler_by_branch(twists, L):
    """Oracle: e(Y) = 2 e(W) - e(B) for the branch surface B in |2L|."""
    r = len(twists)
    tw = sp.expand(sym_tangent(twists))
    e_w = sym_integrate(sym_part(tw, r), twists)
    cb = sp.expand(tw * sum((-2 * L) ** k for k in range(r + 1)))
    e_b = sym_integrate(sym_part(cb, 2) * 2 * L, twists)
    return 2 * e_w - e_b


S4, S3 = ScrollSpec((2, 0, 0, 0)), ScrollSpec((2, 0, 0))


def test_oracle_values_frozen():
    # computed with the sympy route above, independent of ChowClass
    assert sym_ci((2, 0, 0, 0), 4 * XI) == (56, 24, -168)
    assert sym_ci((1, 1, 0, 0), 4 * XI) == (56, 24, -168)
    assert sym_cover((2, 0, 0), 3 * XI) == (52, 24, -252)
    assert sym_cover_euler_by_branch((2, 0, 0), 3 * XI) == -252


def test_chow_reduce():
    assert chow_reduce({(4, 0): 1}, S4) == 2 * ChowClass.xi(S4) ** 3 * ChowClass.fiber(S4)
    assert chow_reduce({(0, 2): 1}, S4).is_zero()
    assert chow_reduce({(3, 0): 1}, S3).coeffs == {(2, 1): 2}


def test_integrate():
    xi, f = ChowClass.xi(S4), ChowClass.fiber(S4)
    assert integrate(xi**4, S4) == 2
    assert integrate(xi**3 * f, S4) == 1
    assert integrate(xi**2 * f * f, S4) == 0
    with pytest.raises(DegreeMismatchError):
        integrate(xi**3, S4)


@given(st.lists(st.integers(0, 5), min_size=2, max_size=5))
def test_top_power_is_c1E(twists):
    s = ScrollSpec(tuple(twists))
    assert integrate(ChowClass.xi(s) ** s.r, s) == s.c1E


def test_tangent_chern():
    c = tangent_chern(S4)
    xi, f = ChowClass.xi(S4), ChowClass.fiber(S4)
    assert c[1] == 4 * xi
    p1p3 = ScrollSpec((0, 0, 0, 0))
    assert tangent_chern(p1p3)[1] == 4 * ChowClass.xi(p1p3) + 2 * ChowClass.fiber(p1p3)
    assert len(c) == 5
    # P^1 x P^3 has Euler number 2 * 4
    assert integrate(tangent_chern(p1p3)[4], p1p3) == 8


@pytest.mark.parametrize("twists", [(2, 0, 0, 0), (1, 1, 0, 0), (0, 0, 0, 0), (3, 1, 0, 0)])
def test_tangent_chern_matches_sympy(twists):
    s = ScrollSpec(twists)
    ours = tangent_chern(s)
    tw = sp.expand(sym_tangent(twists))
    xi, f = ChowClass.xi(s), ChowClass.fiber(s)
    for k in range(1, s.r):
        for j in range(2):
            probe = xi ** (s.r - k - j) * f**j
            expect = sym_integrate(sym_part(tw, k) * XI ** (s.r - k - j) * F**j, twists)
            assert integrate(ours[k] * probe, s) == expect


def test_ci_chern_x8():
    data = ci_chern(ci_model())
    assert (data.c2_xi, data.c2_f, data.c3) == (56, 24, -168)
    assert data.c2_xi > 0 and data.c2_f > 0


def test_ci_chern_zero_divisor():
    data = ci_chern(ci_model(divisor=ChowClass(S4)))
    assert (data.c2_xi, data.c2_f, data.c3) == (0, 0, 0)


def test_double_cover_chern_x12():
    data = double_cover_chern(double_cover_model())
    assert (data.c2_xi, data.c2_f, data.c3) == (52, 24, -252)


def test_double_cover_rejects_non_cy():
    with pytest.raises(CYViolationError):
        double_cover_chern(double_cover_model(half_branch=2 * ChowClass.xi(S3)))


def test_kind_mismatch():
    with pytest.raises(KindMismatchError):
        ci_chern(double_cover_model())
    with pytest.raises(KindMismatchError):
        double_cover_chern(ci_model())


def test_cubic_forms():
    assert cubic_form(ci_model()) == (8, 4, 0, 0)
    assert cubic_form(double_cover_model()) == (4, 2, 0, 0)
    assert eval_cubic(cubic_form(ci_model()), 1, 1) == 8 + 12


def test_euler_numbers():
    assert euler_number(ci_model()) == -168
    assert euler_number(double_cover_model()) == -252
    assert euler_number(ci_model((1, 1, 0, 0))) == -168


@pytest.mark.parametrize("a, b", [((2, 0, 0, 0), (1, 1, 0, 0)), ((2, 0, 0), (1, 1, 0))])
def test_deformation_invariance(a, b):
    make = ci_model if len(a) == 4 else double_cover_model
    m1, m2 = make(a), make(b)
    assert cubic_form(m1) == cubic_form(m2)
    assert c2_form(m1) == c2_form(m2)
    assert euler_number(m1) == euler_number(m2)


def test_nef_check_models():
    for model in (ci_model(), double_cover_model()):
        verdict = nef_invariance_check(model)
        assert verdict.holds
        a, b = c2_form(model)
        x, y = verdict.kernel
        assert a * x + b * y == 0
        assert verdict.cubic_value == eval_cubic(cubic_form(model), x, y) != 0


def test_nef_synthetic_common_zero():
    verdict = nef_criterion((0, 0, 0, 1), (0, 5))
    assert not verdict.holds
    assert verdict.kernel == (1, 0)


def test_nef_degenerate():
    with pytest.raises(DegenerateC2Error):
        nef_criterion((1, 0, 0, 0), (0, 0))


def test_model_lookup():
    assert model_for((1, 1, 2, 2, 2), 8).label == "X8"
    assert model_for((1, 1, 2, 2, 6), 12).label == "X12"
    assert model_for((1, 2, 2, 2, 7), 14) is None


def test_chern_data_dispatch():
    assert chern_data(ci_model()).c3 == -168
    assert Fraction(integrate(ChowClass.xi(S3) ** 3, S3)) == 2
