"""Intersection theory on rational scrolls ``F(a_1, ..., a_r) = P(+O(a_i))`` over P^1.

The Chow ring is ``Z[xi, f] / (f^2, xi^r - c1E * xi^(r-1) f)`` where ``xi`` is
the tautological class (base-point free when all ``a_i >= 0``), ``f`` the fiber
and ``c1E = sum(a_i)``.  Degree is normalized by ``int xi^(r-1) f = 1``, so
``int xi^r = c1E`` is the degree of the image of ``|xi|``.

The tangent bundle is ``c(T_F) = (1 + 2f) prod(1 + xi - a_i f)``: the base
contributes ``2f`` and the relative Euler sequence
``0 -> O -> pi^*E^v (1) -> T_rel -> 0`` the rest.  With this sign
``K_F = -r xi + (c1E - 2) f``, so ``F(2,0,0,0)`` has ``K = -4 xi``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Mapping

from .errors import (
    CYViolationError,
    DegenerateC2Error,
    DegreeMismatchError,
    KindMismatchError,
)

COMPLETE_INTERSECTION = "complete-intersection"
DOUBLE_COVER = "double-cover"


@dataclass(frozen=True)
class ScrollSpec:
    twists: tuple[int, ...]

    def __post_init__(self):
        tw = tuple(int(a) for a in self.twists)
        if len(tw) < 2 or any(a < 0 for a in tw):
            raise ValueError(f"need r >= 2 non-negative twists, got {tw}")
        object.__setattr__(self, "twists", tw)

    @property
    def r(self) -> int:
        return len(self.twists)

    @property
    def c1E(self) -> int:
        return sum(self.twists)

    def __str__(self):
        return "F(" + ",".join(map(str, self.twists)) + ")"


def _reduce_monomial(s: ScrollSpec, k: int, j: int):
    """Normal form of ``xi^k f^j`` as ``(coefficient, (k', j'))`` or None."""
    if j >= 2 or k + j > s.r:
        return None
    if j == 0 and k == s.r:
        return s.c1E, (s.r - 1, 1)
    return 1, (k, j)


@dataclass(frozen=True, eq=False)
class ChowClass:
    """Element of ``A^*(F)`` in the basis ``xi^k, xi^k f``."""

    scroll: ScrollSpec
    coeffs: Mapping[tuple[int, int], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        out: dict[tuple[int, int], Fraction] = {}
        for (k, j), c in self.coeffs.items():
            red = _reduce_monomial(self.scroll, k, j)
            if red is None:
                continue
            mult, key = red
            out[key] = out.get(key, Fraction(0)) + Fraction(c) * mult
        object.__setattr__(self, "coeffs", {k: out[k] for k in sorted(out) if out[k]})

    @classmethod
    def xi(cls, s: ScrollSpec) -> "ChowClass":
        return cls(s, {(1, 0): 1})

    @classmethod
    def fiber(cls, s: ScrollSpec) -> "ChowClass":
        return cls(s, {(0, 1): 1})

    @classmethod
    def one(cls, s: ScrollSpec, c=1) -> "ChowClass":
        return cls(s, {(0, 0): c})

    def _coerce(self, other):
        if isinstance(other, ChowClass):
            if other.scroll != self.scroll:
                raise ValueError("classes on different scrolls")
            return other
        if isinstance(other, (int, Fraction)):
            return ChowClass.one(self.scroll, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            out[key] = out.get(key, Fraction(0)) + c
        return ChowClass(self.scroll, out)

    __radd__ = __add__

    def __neg__(self):
        return ChowClass(self.scroll, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, int], Fraction] = {}
        for (k1, j1), c1 in self.coeffs.items():
            for (k2, j2), c2 in other.coeffs.items():
                key = (k1 + k2, j1 + j2)
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return ChowClass(self.scroll, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = ChowClass.one(self.scroll)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.scroll, tuple(self.coeffs.items())))

    def graded_part(self, k: int) -> "ChowClass":
        return ChowClass(self.scroll, {key: c for key, c in self.coeffs.items() if sum(key) == k})

    def is_zero(self) -> bool:
        return not self.coeffs

    def degrees(self) -> set[int]:
        return {sum(key) for key in self.coeffs}

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(
            f"{c}*xi^{k}" + ("*f" if j else "") for (k, j), c in self.coeffs.items()
        )


def chow_reduce(expr: Mapping[tuple[int, int], object], s: ScrollSpec) -> ChowClass:
    """Normal form of ``sum c * xi^k f^j`` given as ``{(k, j): c}``."""
    return ChowClass(s, dict(expr))


def integrate(c: ChowClass, s: ScrollSpec | None = None) -> Fraction:
    s = s or c.scroll
    if c.scroll != s:
        raise ValueError("class lives on a different scroll")
    if c.degrees() - {s.r}:
        raise DegreeMismatchError(f"class of degrees {sorted(c.degrees())} is not top-dimensional")
    return c.coeffs.get((s.r - 1, 1), Fraction(0))


def truncate(c: ChowClass, top: int) -> ChowClass:
    return ChowClass(c.scroll, {key: v for key, v in c.coeffs.items() if sum(key) <= top})


def inverse_one_plus(d: ChowClass) -> ChowClass:
    """``(1 + d)^{-1}`` for ``d`` of positive degree (a finite geometric series)."""
    s = d.scroll
    out = ChowClass.one(s)
    term = ChowClass.one(s)
    for _ in range(s.r):
        term = term * (-d)
        out = out + term
    return out


def tangent_chern(s: ScrollSpec) -> list[ChowClass]:
    """``[c_0, ..., c_r]`` of ``T_F``."""
    xi, f = ChowClass.xi(s), ChowClass.fiber(s)
    total = 1 + 2 * f
    for a in s.twists:
        total = total * (1 + xi - a * f)
    return [total.graded_part(k) for k in range(s.r + 1)]


def total_chern(s: ScrollSpec) -> ChowClass:
    out = ChowClass(s)
    for part in tangent_chern(s):
        out = out + part
    return out


@dataclass(frozen=True)
class ThreefoldModel:
    """A Calabi-Yau threefold ``Y`` built from a scroll.

    ``complete-intersection``: ``Y`` is a divisor of class ``divisor_class``
    in a four-dimensional scroll.  ``double-cover``: ``Y -> W`` is a double
    cover of a three-dimensional scroll branched along ``B = 2L`` with
    ``L = divisor_class``.  The Picard basis is ``(xi|_Y, f|_Y)``.
    """

    kind: str
    ambient: ScrollSpec
    divisor_class: ChowClass
    label: str = ""

    def __post_init__(self):
        if self.kind not in (COMPLETE_INTERSECTION, DOUBLE_COVER):
            raise ValueError(f"unknown model kind {self.kind!r}")

    @property
    def pic_basis(self) -> tuple[ChowClass, ChowClass]:
        return ChowClass.xi(self.ambient), ChowClass.fiber(self.ambient)


def ci_model(twists=(2, 0, 0, 0), divisor: ChowClass | None = None, label="X8") -> ThreefoldModel:
    s = ScrollSpec(tuple(twists))
    if divisor is None:
        divisor = 4 * ChowClass.xi(s)
    return ThreefoldModel(COMPLETE_INTERSECTION, s, divisor, label)


def double_cover_model(twists=(2, 0, 0), half_branch: ChowClass | None = None, label="X12") -> ThreefoldModel:
    s = ScrollSpec(tuple(twists))
    if half_branch is None:
        half_branch = 3 * ChowClass.xi(s)
    return ThreefoldModel(DOUBLE_COVER, s, half_branch, label)


@dataclass(frozen=True)
class ChernData:
    c2_xi: int
    c2_f: int
    c3: int


def _as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise ValueError(f"expected an integer intersection number, got {x}")
    return int(x)


def ci_chern(model: ThreefoldModel) -> ChernData:
    """Chern numbers of a divisor ``Y`` via ``c(T_Y) = c(T_F) / (1 + Y)``."""
    if model.kind != COMPLETE_INTERSECTION:
        raise KindMismatchError("ci_chern needs a complete-intersection model")
    s, Y = model.ambient, model.divisor_class
    cy = total_chern(s) * inverse_one_plus(Y)
    xi, f = model.pic_basis
    c2, c3 = cy.graded_part(2), cy.graded_part(3)
    return ChernData(
        _as_int(integrate(c2 * Y * xi, s)),
        _as_int(integrate(c2 * Y * f, s)),
        _as_int(integrate(c3 * Y, s)),
    )


def cover_total_chern(model: ThreefoldModel) -> ChowClass:
    """``c(T_Y)`` pushed down to ``W``: ``c(T_W) (1 + L) / (1 + 2L)``.

    ``Y`` sits in the total space of ``L`` as ``t^2 = s``; the tangent
    sequence of the line bundle and the normal bundle ``2L`` give this.
    """
    s, L = model.ambient, model.divisor_class
    return truncate(total_chern(s) * (1 + L) * inverse_one_plus(2 * L), s.r)


def double_cover_chern(model: ThreefoldModel) -> ChernData:
    if model.kind != DOUBLE_COVER:
        raise KindMismatchError("double_cover_chern needs a double-cover model")
    s, L = model.ambient, model.divisor_class
    c1 = tangent_chern(s)[1] - L
    if not c1.is_zero():
        raise CYViolationError(f"c1(W) - L = {c1} is not zero")
    cy = cover_total_chern(model)
    xi, f = model.pic_basis
    c2, c3 = cy.graded_part(2), cy.graded_part(3)
    return ChernData(
        _as_int(2 * integrate(c2 * xi, s)),
        _as_int(2 * integrate(c2 * f, s)),
        _as_int(2 * integrate(c3, s)),
    )


def chern_data(model: ThreefoldModel) -> ChernData:
    if model.kind == COMPLETE_INTERSECTION:
        return ci_chern(model)
    return double_cover_chern(model)


def cubic_form(model: ThreefoldModel) -> tuple[int, int, int, int]:
    """``(D1^3, D1^2 D2, D1 D2^2, D2^3)`` for ``D1 = xi|_Y``, ``D2 = f|_Y``."""
    s = model.ambient
    d1, d2 = model.pic_basis
    if model.kind == COMPLETE_INTERSECTION:
        def top(c):
            return integrate(c * model.divisor_class, s)
    else:
        def top(c):
            return 2 * integrate(c, s)
    return tuple(_as_int(top(d1 ** (3 - k) * d2 ** k)) for k in range(4))


def c2_form(model: ThreefoldModel) -> tuple[int, int]:
    data = chern_data(model)
    return data.c2_xi, data.c2_f


def euler_number(model: ThreefoldModel) -> int:
    return chern_data(model).c3


def eval_cubic(cubic, x, y):
    a, b, c, d = cubic
    return a * x**3 + 3 * b * x**2 * y + 3 * c * x * y**2 + d * y**3


@dataclass(frozen=True)
class NefVerdict:
    holds: bool
    kernel: tuple[int, int]
    cubic_value: int


def nef_criterion(cubic, c2) -> NefVerdict:
    """On a rank-two lattice: is there a nonzero ``F`` with ``F^3 = c2.F = 0``?

    The zero set of the c2 form is the line through ``v = (c2_2, -c2_1)``;
    the criterion holds (no such ``F``) iff the cubic is nonzero at ``v``.
    """
    a, b = c2
    if a == 0 and b == 0:
        raise DegenerateC2Error("c2 form vanishes identically")
    g = gcd(a, b)
    v = (b // g, -a // g)
    if v[0] < 0 or (v[0] == 0 and v[1] < 0):
        v = (-v[0], -v[1])
    value = eval_cubic(cubic, *v)
    return NefVerdict(value != 0, v, value)


def nef_invariance_check(model: ThreefoldModel) -> NefVerdict:
    return nef_criterion(cubic_form(model), c2_form(model))


def model_for(weights, degree) -> ThreefoldModel | None:
    """Scroll model of the resolution, for the two families that have one."""
    key = (tuple(sorted(weights)), degree)
    if key == ((1, 1, 2, 2, 2), 8):
        return ci_model()
    if key == ((1, 1, 2, 2, 6), 12):
        return double_cover_model()
    return None
