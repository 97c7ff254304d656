"""Graded derivations, stabilizer dimension and the forced involution z -> -z."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .core import (
    HypersurfaceFamily,
    SparsePoly,
    as_weights,
    enumerate_monomials,
)
from .errors import AmbiguousInvolutionError, VanishingSquareError
from .linalg import exact_rank


@dataclass(frozen=True)
class GradedDerivation:
    """``D = sum_i p_i d/dx_i`` with ``deg p_i = w_i``; preserves degrees."""

    entries: Mapping[int, SparsePoly]

    def __call__(self, f: SparsePoly) -> SparsePoly:
        out = SparsePoly.zero(f.weights)
        for i, p in self.entries.items():
            out = out + p * f.partial_derivative(i)
        return out


def derivation_basis(w) -> list[GradedDerivation]:
    w = as_weights(w)
    basis = []
    for i, wi in enumerate(w.weights):
        for m in enumerate_monomials(w, wi):
            basis.append(GradedDerivation({i: SparsePoly.monomial(w, m)}))
    return basis


def euler_derivation(w) -> GradedDerivation:
    w = as_weights(w)
    return GradedDerivation({i: SparsePoly.variable(w, i) * wi for i, wi in enumerate(w.weights)})


def stabilizer_dim(f: SparsePoly) -> int:
    """Dimension of ``{D : D(f) = lambda f for some lambda}``.

    Columns of the linear system are the images ``D_k(f)`` of the derivation
    basis together with ``-f`` (for lambda); rows are degree-``d`` monomials.
    ``D -> lambda`` is well defined because ``f != 0``, so the kernel dimension
    is the answer.  The Euler derivation is always in the kernel, which bounds
    the rank by ``columns - 1``.
    """
    if f.is_zero() or not f.is_homogeneous():
        raise ValueError("stabilizer_dim needs a nonzero homogeneous polynomial")
    w = f.weights
    images = [D(f) for D in derivation_basis(w)] + [-f]
    rows_index = {e: k for k, e in enumerate(enumerate_monomials(w, f.degree))}
    ncols = len(images)
    rows = [[Fraction(0)] * ncols for _ in rows_index]
    for j, img in enumerate(images):
        for e, c in img.terms.items():
            rows[rows_index[e]][j] = c
    return ncols - exact_rank(rows, upper=ncols - 1)


def forced_involution(fam: HypersurfaceFamily) -> int | None:
    """Index of the unique variable ``z`` with ``2 deg z = d``, if any."""
    hits = [i for i, wi in enumerate(fam.weights.weights) if 2 * wi == fam.degree]
    if len(hits) > 1:
        raise AmbiguousInvolutionError(f"variables {hits} all have degree d/2")
    return hits[0] if hits else None


@dataclass(frozen=True)
class SquareCompletion:
    """Records ``z -> z + shift`` so the change of variables can be replayed."""

    variable: int
    shift: SparsePoly

    def apply(self, p: SparsePoly) -> SparsePoly:
        z = SparsePoly.variable(p.weights, self.variable)
        return p.substitute(self.variable, z + self.shift)


def split_in(f: SparsePoly, z: int) -> tuple[Fraction, SparsePoly, SparsePoly]:
    """Write ``f = c z^2 + z h + r`` with ``h, r`` free of ``z``."""
    w = f.weights
    c = Fraction(0)
    h, r = {}, {}
    for e, coef in f.terms.items():
        k = e[z]
        if k == 0:
            r[e] = coef
        elif k == 1:
            e2 = list(e)
            e2[z] = 0
            h[tuple(e2)] = coef
        elif k == 2 and sum(e) == 2:
            c = coef
        else:
            raise ValueError(f"term {e} is not of the form z^2, z*h or r")
    return c, SparsePoly(w, h), SparsePoly(w, r)


def complete_square(f: SparsePoly, z: int) -> tuple[SparsePoly, SquareCompletion]:
    """Remove the ``z``-linear part of ``f`` by ``z -> z - h / (2c)``."""
    w = f.weights
    if f.degree is not None and 2 * w[z] != f.degree:
        raise ValueError("complete_square needs 2 deg z = deg f")
    c, h, _ = split_in(f, z)
    if c == 0:
        raise VanishingSquareError(f"coefficient of x{z}^2 vanishes")
    record = SquareCompletion(z, h * (Fraction(-1) / (2 * c)))
    return record.apply(f), record


def involution_check(f: SparsePoly, fam: HypersurfaceFamily) -> bool:
    """True iff the family has a forced ``z`` and the square-completed ``f``
    is invariant under ``z -> -z``."""
    z = forced_involution(fam)
    if z is None:
        return False
    g, _ = complete_square(f, z)
    return g.substitute(z, -SparsePoly.variable(g.weights, z)) == g
