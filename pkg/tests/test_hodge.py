import pytest

from wpscheck.core import HypersurfaceFamily, WeightSystem, graded_dim
from wpscheck.hodge import (
    aut_group_dim,
    euler_expected,
    h21_resolution,
    hodge_split,
    moduli_count,
    s_e_codim,
    total_genus,
)


def fam(w, d):
    return HypersurfaceFamily(WeightSystem(tuple(w)), d)


X8, X12, X14 = fam((1, 1, 2, 2, 2), 8), fam((1, 1, 2, 2, 6), 12), fam((1, 2, 2, 2, 7), 14)
QUINTIC = fam((1, 1, 1, 1, 1), 5)
PAPER_FAMILIES = [X8, X12, X14]


@pytest.mark.parametrize("w, expected", [((1, 1, 1, 1, 1), 24), ((1, 2, 2, 2, 7), 33), ((1, 1, 2, 2, 2), 21)])
def test_aut_group_dim(w, expected):
    assert aut_group_dim(w) == expected


@pytest.mark.parametrize(
    "family, dim_sd, moduli", [(X14, 141, 107), (X8, 105, 83), (X12, 171, 126), (QUINTIC, 126, 101)]
)
def test_moduli_count(family, dim_sd, moduli):
    mc = moduli_count(family)
    assert (mc.dim_Sd, mc.moduli) == (dim_sd, moduli)
    assert mc.moduli + 1 + aut_group_dim(family.weights) == graded_dim(family.weights, family.degree)


def test_moduli_probe_flag():
    assert moduli_count(X8, probe_seed=0).warning is False


@pytest.mark.parametrize("family, h21", [(X14, 122), (X8, 86), (X12, 128), (QUINTIC, 101)])
def test_h21(family, h21):
    assert h21_resolution(family) == h21


@pytest.mark.parametrize(
    "family, b3x, moved, b3y", [(X8, 168, 6, 174), (X12, 254, 4, 258), (X14, 216, 30, 246)]
)
def test_hodge_split(family, b3x, moved, b3y):
    split = hodge_split(family)
    assert (split.b3_X, split.b3_moved, split.b3_Y) == (b3x, moved, b3y)
    assert split.b3_Y == 2 + 2 * split.h21_Y
    assert split.h21_Y == moduli_count(family).moduli + split.g_total
    assert split.b3_Y - split.b3_X == 2 * total_genus(family)


@pytest.mark.parametrize("family, g", [(X8, 3), (X12, 2), (X14, 15)])
def test_s_e_codim(family, g):
    assert s_e_codim(family) == g


@pytest.mark.parametrize("family, e", [(X8, -168), (X12, -252), (QUINTIC, -200)])
def test_euler_expected(family, e):
    assert euler_expected(family) == e
