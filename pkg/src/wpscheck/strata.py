"""Coordinate strata with nontrivial stabilizer and the singular curves of X_d."""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations
from math import gcd, lcm
from functools import reduce

from .core import (
    HypersurfaceFamily,
    SparsePoly,
    WeightSystem,
    as_weights,
    enumerate_monomials,
    graded_dim,
)
from .errors import InapplicableModelError, UnsupportedSingularityError
from .linalg import exact_rank


class FlopCountWarning(UserWarning):
    pass


@dataclass(frozen=True)
class Stratum:
    """``Pi_I = {x_i = 0 : i in I}`` inside ``P[w]``."""

    vanishing_set: tuple[int, ...]
    residual_indices: tuple[int, ...]
    residual_weights: WeightSystem
    stabilizer_order: int
    transverse_weights: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.residual_weights) - 1

    def to_dict(self) -> dict:
        return {
            "vanishing_set": list(self.vanishing_set),
            "residual_weights": list(self.residual_weights.weights),
            "stabilizer_order": self.stabilizer_order,
            "transverse_weights": list(self.transverse_weights),
            "dim": self.dim,
        }


@dataclass(frozen=True)
class SingularCurve:
    stratum: Stratum
    genus: int
    transverse_type: str


def make_stratum(w, vanishing) -> Stratum:
    w = as_weights(w)
    I = tuple(sorted(vanishing))
    rest = tuple(j for j in range(len(w)) if j not in I)
    res = WeightSystem(tuple(w[j] for j in rest))
    m = reduce(gcd, res.weights)
    return Stratum(I, rest, res, m, tuple(w[i] % m for i in I))


def strata(w) -> list[Stratum]:
    """Coordinate strata with stabilizer ``mu_m``, ``m > 1``.

    A stratum is reported only when it is the largest coordinate subspace with
    its stabilizer order, i.e. putting back any single vanishing coordinate
    changes ``m``.  Sub-strata of a reported stratum with the same ``m`` are
    part of it and are not listed separately.
    """
    w = as_weights(w)
    n = len(w)
    out = []
    for size in range(1, n):
        for I in combinations(range(n), size):
            s = make_stratum(w, I)
            if s.stabilizer_order == 1:
                continue
            maximal = all(
                make_stratum(w, [i for i in I if i != j]).stabilizer_order != s.stabilizer_order
                for j in I
            )
            if maximal:
                out.append(s)
    return out


def contains_stratum(fam: HypersurfaceFamily, s: Stratum) -> bool:
    """True iff every member of ``|O(d)|`` vanishes identically on ``s``."""
    return graded_dim(s.residual_weights, fam.degree) == 0


def curve_genus(fam: HypersurfaceFamily, s: Stratum) -> int:
    """Genus of ``X_d`` cut on a two-dimensional stratum, by adjunction.

    ``h^0(K_C) = dim S_k - dim S_{k-d}`` with ``k = d - sum(residual weights)``.
    """
    if s.dim != 2:
        raise ValueError("curve_genus needs a two-dimensional stratum")
    res = s.residual_weights
    k = fam.degree - sum(res.weights)
    return graded_dim(res, k) - graded_dim(res, k - fam.degree)


def transverse_type(s: Stratum) -> str:
    m = s.stabilizer_order
    if m <= 1:
        raise ValueError("stratum has trivial stabilizer")
    if m == 2 and all(a % 2 == 1 for a in s.transverse_weights):
        return "A1"
    return f"Z/{m}(" + ",".join(map(str, s.transverse_weights)) + ")"


def singular_curves(fam: HypersurfaceFamily) -> list[SingularCurve]:
    out = []
    for s in strata(fam.weights):
        if s.dim == 2 and not contains_stratum(fam, s):
            out.append(SingularCurve(s, curve_genus(fam, s), transverse_type(s)))
    return out


def flop_count(g: int) -> int:
    """Virtual number ``2g - 2`` of flopping curves on a generic deformation."""
    if g < 1:
        raise ValueError("flop count needs genus >= 1")
    if g == 1:
        warnings.warn("genus 1 curve gives no flopping curves", FlopCountWarning, stacklevel=2)
    return 2 * g - 2



def resolution_picard_rank(fam: HypersurfaceFamily) -> int:
    """``1 +`` number of transverse-A1 singular curves of the general ``X_d``.

    Raises UnsupportedSingularityError when the general member meets any other
    kind of singular stratum.
    """
    curves = singular_curves(fam)
    for c in curves:
        if c.transverse_type != "A1":
            raise UnsupportedSingularityError(
                f"curve stratum {c.stratum.vanishing_set} has type {c.transverse_type}"
            )
    curve_strata = [c.stratum for c in curves]
    for s in strata(fam.weights):
        if s in curve_strata:
            continue
        if s.dim == 2:
            raise UnsupportedSingularityError(
                f"X_{fam.degree} contains the singular surface {s.vanishing_set}"
            )
        if s.dim == 0 and not contains_stratum(fam, s):
            continue
        if s.dim == 0:
            raise UnsupportedSingularityError(
                f"X_{fam.degree} passes through the {transverse_type(s)} point {s.vanishing_set}"
            )
        # a weighted form of positive degree on a line always has a zero
        raise UnsupportedSingularityError(
            f"X_{fam.degree} meets the singular stratum {s.vanishing_set} of dimension {s.dim}"
        )
    return 1 + len(curves)


def forms_have_common_zero(forms: list[SparsePoly]) -> bool:
    """Decide whether weighted forms in ``n`` variables share a zero in C^n minus 0.

    With ``n`` forms in ``n`` variables the forms have only the trivial common
    zero iff they form a regular sequence, iff the ideal contains every form of
    degree above ``sum(deg f_i) - sum(w_j)``.  Degrees divisible by every weight
    also detect any nontrivial common zero, because some pure power
    ``x_j^(D/w_j)`` does not vanish there.  So a single rank computation in such
    a degree decides the question exactly.
    """
    w = forms[0].weights
    if len(forms) != w.nvars:
        raise ValueError("need as many forms as variables")
    gens = [f for f in forms if not f.is_zero()]
    if len(gens) < len(forms):
        return True
    degs = [f.degree for f in gens]
    if any(d is None for d in degs):
        raise ValueError("forms must be homogeneous")
    step = lcm(*w.weights)
    threshold = sum(degs) - sum(w.weights)
    D = (threshold // step + 1) * step
    if D <= 0:
        D = step
    target = enumerate_monomials(w, D)
    index = {e: k for k, e in enumerate(target)}
    columns = []
    for f, d in zip(gens, degs):
        for m in enumerate_monomials(w, D - d):
            prod = SparsePoly.monomial(w, m) * f
            col = [0] * len(target)
            for e, c in prod.terms.items():
                col[index[e]] = c
            columns.append(col)
    if not columns:
        return True
    rows = [list(r) for r in zip(*columns)]
    return exact_rank(rows, upper=len(target)) < len(target)


def plane_model(member: SparsePoly, s: Stratum) -> SparsePoly:
    """Restriction of ``member`` to ``s``, regraded by the stabilizer order."""
    restricted = member.drop_variables(s.vanishing_set)
    m = s.stabilizer_order
    ws = tuple(x // m for x in restricted.weights.weights)
    if len(ws) != 3 or sorted(ws)[:2] != [1, 1]:
        raise InapplicableModelError(f"residual weights {s.residual_weights} have no (1,1,c) model")
    return SparsePoly(WeightSystem(ws), restricted.terms)


def quasi_smooth_probe(member: SparsePoly, s: Stratum) -> bool:
    """True iff the curve ``member = 0`` on the stratum is quasi-smooth.

    The partial derivatives are tested for a common zero off the origin; by
    the Euler relation that is the same as a singular point of the cone.
    """
    if s.dim != 2:
        raise InapplicableModelError("probe needs a two-dimensional stratum")
    curve = plane_model(member, s)
    if curve.is_zero():
        return False
    return not forms_have_common_zero(
        [curve.partial_derivative(i) for i in range(curve.weights.nvars)]
    )
