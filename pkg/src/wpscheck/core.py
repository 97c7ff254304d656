"""Weighted grading, exact sparse polynomials and graded-ring counting.

Everything here works over the rationals (``fractions.Fraction``); there is no
floating point anywhere.  A polynomial lives in the Cox ring of a weighted
projective space ``P[w0, ..., wn]``: variable ``x_i`` has degree ``w_i`` and a
monomial with exponent vector ``e`` has weighted degree ``sum(e_i * w_i)``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Mapping, Sequence

from .errors import ResourceLimitError, WeightMismatchError

DEFAULT_MONOMIAL_CAP = 10**6

Exponent = tuple[int, ...]


def _gcd_all(values: Iterable[int]) -> int:
    return reduce(gcd, values, 0)


@dataclass(frozen=True)
class WeightSystem:
    weights: tuple[int, ...]

    def __post_init__(self):
        ws = tuple(int(w) for w in self.weights)
        if len(ws) < 1:
            raise ValueError("a weight system needs at least one weight")
        if any(w < 1 for w in ws):
            raise ValueError(f"weights must be positive, got {ws}")
        object.__setattr__(self, "weights", ws)

    def __len__(self):
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __getitem__(self, i):
        return self.weights[i]

    @property
    def nvars(self) -> int:
        return len(self.weights)

    @property
    def well_formed(self) -> bool:
        """No ``n`` of the ``n + 1`` weights share a common factor."""
        ws = self.weights
        if len(ws) == 1:
            return ws[0] == 1
        return all(_gcd_all(ws[:i] + ws[i + 1:]) == 1 for i in range(len(ws)))

    def degree(self, exponent: Sequence[int]) -> int:
        return sum(e * w for e, w in zip(exponent, self.weights))

    def __str__(self):
        return "P[" + ",".join(map(str, self.weights)) + "]"


def as_weights(w) -> WeightSystem:
    return w if isinstance(w, WeightSystem) else WeightSystem(tuple(w))


@dataclass(frozen=True)
class HypersurfaceFamily:
    """The general degree ``d`` hypersurface ``X_d`` in ``P[weights]``."""

    weights: WeightSystem
    degree: int

    def __post_init__(self):
        object.__setattr__(self, "weights", as_weights(self.weights))
        if self.degree < 1:
            raise ValueError("degree must be positive")

    @property
    def cy_flag(self) -> bool:
        # adjunction: K = O(d - sum(w))
        return self.degree == sum(self.weights.weights)

    def __str__(self):
        return f"X_{self.degree} in {self.weights}"


def normalize_weights(w) -> WeightSystem:
    """Return a well-formed weight system defining an isomorphic space.

    Alternates two moves until nothing changes: divide out the common gcd of
    all weights, and divide every weight except ``w_i`` by the gcd ``q`` of
    the weights omitting ``w_i``.  The product of the weights drops strictly
    at each effective move, so the loop terminates.
    """
    ws = list(as_weights(w).weights)
    changed = True
    while changed:
        changed = False
        g = _gcd_all(ws)
        if g > 1:
            ws = [x // g for x in ws]
            changed = True
        if len(ws) < 2:
            continue
        for i in range(len(ws)):
            q = _gcd_all(ws[:i] + ws[i + 1:])
            if q > 1:
                ws = [x if j == i else x // q for j, x in enumerate(ws)]
                changed = True
    return WeightSystem(tuple(ws))


def graded_dim(w, d: int) -> int:
    """Number of monomials of weighted degree ``d`` (zero for ``d < 0``)."""
    if d < 0:
        return 0
    counts = [0] * (d + 1)
    counts[0] = 1
    for wi in as_weights(w).weights:
        for k in range(wi, d + 1):
            counts[k] += counts[k - wi]
    return counts[d]


def enumerate_monomials(w, d: int, cap: int | None = DEFAULT_MONOMIAL_CAP) -> list[Exponent]:
    """Exponent vectors of degree ``d``, in descending lexicographic order."""
    ws = as_weights(w).weights
    if d < 0:
        return []
    if cap is not None and graded_dim(ws, d) > cap:
        raise ResourceLimitError(f"more than {cap} monomials of degree {d} in {ws}")
    n = len(ws)
    out: list[Exponent] = []
    prefix = [0] * n

    def rec(i, remaining):
        if i == n - 1:
            if remaining % ws[i] == 0:
                prefix[i] = remaining // ws[i]
                out.append(tuple(prefix))
            return
        for e in range(remaining // ws[i], -1, -1):
            prefix[i] = e
            rec(i + 1, remaining - e * ws[i])
        prefix[i] = 0

    rec(0, d)
    return out


def _to_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, float):
        raise TypeError("floating point coefficients are not accepted")
    return Fraction(c)


@dataclass(frozen=True, eq=False)
class SparsePoly:
    """Exact multivariate polynomial in the Cox ring of ``P[weights]``.

    ``terms`` maps exponent tuples to nonzero ``Fraction`` coefficients and is
    kept sorted so that iteration and serialization are deterministic.
    """

    weights: WeightSystem
    terms: Mapping[Exponent, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        ws = as_weights(self.weights)
        object.__setattr__(self, "weights", ws)
        clean = {}
        for e, c in self.terms.items():
            e = tuple(int(x) for x in e)
            if len(e) != ws.nvars or any(x < 0 for x in e):
                raise ValueError(f"bad exponent {e} for {ws}")
            c = _to_fraction(c)
            if c:
                clean[e] = clean.get(e, Fraction(0)) + c
        clean = {e: clean[e] for e in sorted(clean) if clean[e]}
        object.__setattr__(self, "terms", clean)
        degs = {ws.degree(e) for e in clean}
        object.__setattr__(self, "_degree", degs.pop() if len(degs) == 1 else None)

    # construction helpers
    @classmethod
    def zero(cls, w) -> "SparsePoly":
        return cls(as_weights(w), {})

    @classmethod
    def constant(cls, w, c) -> "SparsePoly":
        w = as_weights(w)
        return cls(w, {(0,) * w.nvars: c})

    @classmethod
    def monomial(cls, w, exponent, c=1) -> "SparsePoly":
        return cls(as_weights(w), {tuple(exponent): c})

    @classmethod
    def variable(cls, w, i: int) -> "SparsePoly":
        w = as_weights(w)
        e = [0] * w.nvars
        e[i] = 1
        return cls(w, {tuple(e): 1})

    # grading
    @property
    def degree(self) -> int | None:
        """Common weighted degree of all terms; ``None`` if mixed or zero."""
        return self._degree

    def is_homogeneous(self, d: int | None = None) -> bool:
        if not self.terms:
            return True
        if self._degree is None:
            return False
        return d is None or self._degree == d

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def coefficient(self, exponent) -> Fraction:
        return self.terms.get(tuple(exponent), Fraction(0))

    def __eq__(self, other):
        if isinstance(other, SparsePoly):
            return self.weights == other.weights and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == SparsePoly.constant(self.weights, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.weights, tuple(self.terms.items())))

    def _check(self, other: "SparsePoly"):
        if self.weights != other.weights:
            raise WeightMismatchError(f"{self.weights} vs {other.weights}")

    def _coerce(self, other) -> "SparsePoly":
        if isinstance(other, SparsePoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return SparsePoly.constant(self.weights, other)
        return NotImplemented

    # arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return SparsePoly(self.weights, terms)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly(self.weights, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _to_fraction(other)
            return SparsePoly(self.weights, {e: c * v for e, v in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return SparsePoly(self.weights, terms)

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * (Fraction(1) / _to_fraction(c))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = SparsePoly.constant(self.weights, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def partial_derivative(self, i: int) -> "SparsePoly":
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                terms[tuple(e2)] = c * e[i]
        return SparsePoly(self.weights, terms)

    def substitute(self, i: int, q: "SparsePoly") -> "SparsePoly":
        """Replace ``x_i`` by ``q``."""
        self._check(q)
        images = [SparsePoly.variable(self.weights, j) for j in range(self.weights.nvars)]
        images[i] = q
        return self.compose(images)

    def compose(self, images: Sequence["SparsePoly"]) -> "SparsePoly":
        """Simultaneously replace every ``x_j`` by ``images[j]``."""
        if len(images) != self.weights.nvars:
            raise ValueError("need one image per variable")
        target = images[0].weights if images else self.weights
        for q in images:
            if q.weights != target:
                raise WeightMismatchError("images live in different rings")
        powers: dict[tuple[int, int], SparsePoly] = {}

        def power(j, k):
            if (j, k) not in powers:
                powers[(j, k)] = images[j] ** k
            return powers[(j, k)]

        acc: dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            term = SparsePoly.constant(target, c)
            for j, k in enumerate(e):
                if k:
                    term = term * power(j, k)
            for e2, c2 in term.terms.items():
                acc[e2] = acc.get(e2, Fraction(0)) + c2
        return SparsePoly(target, acc)

    def restrict(self, vanishing: Iterable[int]) -> "SparsePoly":
        """Set the variables in ``vanishing`` to zero (same ambient ring)."""
        vanishing = set(vanishing)
        return SparsePoly(
            self.weights,
            {e: c for e, c in self.terms.items() if not any(e[i] for i in vanishing)},
        )

    def drop_variables(self, vanishing: Iterable[int]) -> "SparsePoly":
        """Restrict to ``{x_i = 0, i in vanishing}`` as a polynomial in the rest."""
        vanishing = sorted(set(vanishing))
        keep = [j for j in range(self.weights.nvars) if j not in vanishing]
        w = WeightSystem(tuple(self.weights[j] for j in keep))
        return SparsePoly(
            w,
            {
                tuple(e[j] for j in keep): c
                for e, c in self.terms.items()
                if not any(e[i] for i in vanishing)
            },
        )

    def variables_used(self) -> set[int]:
        return {i for e in self.terms for i, k in enumerate(e) if k}

    # serialization
    def to_json(self) -> list[dict]:
        return [
            {"exponents": list(e), "coeff": f"{c.numerator}/{c.denominator}"}
            for e, c in self.terms.items()
        ]

    @classmethod
    def from_json(cls, w, data: Sequence[Mapping]) -> "SparsePoly":
        return cls(as_weights(w), {tuple(t["exponents"]): Fraction(t["coeff"]) for t in data})

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in reversed(list(self.terms.items())):
            mono = "*".join(f"x{i}^{k}" if k > 1 else f"x{i}" for i, k in enumerate(e) if k)
            parts.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(parts)


def add(p: SparsePoly, q: SparsePoly) -> SparsePoly:
    return p + q


def mul(p: SparsePoly, q: SparsePoly) -> SparsePoly:
    return p * q


def partial_derivative(p: SparsePoly, i: int) -> SparsePoly:
    return p.partial_derivative(i)


def substitute(p: SparsePoly, i: int, q: SparsePoly) -> SparsePoly:
    return p.substitute(i, q)


def random_member(fam: HypersurfaceFamily, seed: int, bound: int = 9) -> SparsePoly:
    """Dense member of ``|O(d)|``: every degree-``d`` monomial gets a random
    nonzero integer coefficient in ``[-bound, bound]``."""
    if bound < 1:
        raise ValueError("bound must be positive")
    monos = enumerate_monomials(fam.weights, fam.degree)
    if not monos:
        raise ValueError(f"no monomials of degree {fam.degree} in {fam.weights}")
    rng = random.Random(seed)
    choices = [c for c in range(-bound, bound + 1) if c]
    return SparsePoly(fam.weights, {e: rng.choice(choices) for e in monos})


def euler_operator(p: SparsePoly) -> SparsePoly:
    """``sum_i w_i x_i dp/dx_i``; equals ``d * p`` for homogeneous ``p``."""
    w = p.weights
    out = SparsePoly.zero(w)
    for i in range(w.nvars):
        out = out + SparsePoly.variable(w, i) * p.partial_derivative(i) * w[i]
    return out
