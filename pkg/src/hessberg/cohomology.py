"""Cohomology and K-theory computations on G/B restricted to Hessenberg varieties.

* Schubert expansion of the fundamental class ``prod_{alpha not in H} c_1(L_alpha)``
  by divided differences, and top-degree integration;
* Borel-Weil-Bott classification of line bundles on G/B;
* holomorphic Euler characteristics ``chi(Hess, L_lambda)`` by fixed-point
  sums of exponential series, and the Hilbert polynomial
  ``m -> chi(L_{m lambda})``.

Fixed-point conventions: at ``wB`` the fibre of ``L_lambda`` has weight
``-w lambda`` and the tangent space of the smooth (regular semisimple) fibre
has weights ``-w alpha`` for ``alpha`` in the Hessenberg root set, so

    chi(Hess, L_lambda) = sum_w e^{-w lambda} / prod_{alpha in H} (1 - e^{w alpha}).

Characters are specialised along a generic line ``t * xi``; the sum is a
Laurent series in ``t`` whose polar part cancels and whose constant term is
the Euler characteristic.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import InputError, InternalError
from .hessenberg import HessenbergSpace
from .polyring import (Polynomial, TruncatedSeries, divided_difference_word, one_minus_exp,
                       root_product, weight_form)
from .rootsys import Root, RootSystem, Weight, WeylElement, element_from_word
from .volume import DEFAULT_SEED, generic_pairings, pair, volume, volume_polynomial


# --- Schubert calculus ---------------------------------------------------------

@dataclass(frozen=True)
class SchubertExpansion:
    coefficients: dict  # WeylElement -> Fraction, all of one length
    degree: int

    def support(self) -> list[tuple[WeylElement, Fraction]]:
        return sorted(((w, c) for w, c in self.coefficients.items() if c),
                      key=lambda t: t[0].reduced_word)

    def to_json(self) -> list:
        return [{"word": [i + 1 for i in w.reduced_word], "coeff": str(c)}
                for w, c in self.support()]


def euler_class_polynomial(rs: RootSystem, h: HessenbergSpace) -> Polynomial:
    """``prod_{alpha not in H} alpha``, the Euler class of ``G x_B (g/H)``."""
    return root_product(rs, h.complement())


def euler_class_expansion(rs: RootSystem, h: HessenbergSpace) -> SchubertExpansion:
    f = euler_class_polynomial(rs, h)
    c = h.codimension
    coeffs = {}
    for w in rs.weyl_group():
        if w.length != c:
            continue
        val = divided_difference_word(rs, w.reduced_word, f, check_reduced=False)
        if not val.is_constant():
            raise InternalError("divided difference of the Euler class is not a constant")
        coeffs[w] = val.constant_term()
    for w, v in coeffs.items():
        if v < 0 or v.denominator != 1:
            raise InternalError(f"Schubert coefficient {v} at {w.word_string()} is not a "
                                "nonnegative integer")
    return SchubertExpansion(coeffs, c)


def top_integral(rs: RootSystem, p: Polynomial, word: Sequence[int] | None = None) -> Fraction:
    """``d_{w0}`` of a degree-N polynomial, i.e. integration over G/B."""
    group = rs.weyl_group()
    word = group.longest.reduced_word if word is None else tuple(word)
    if len(word) != group.longest.length:
        raise InputError("word is not a reduced word of the longest element")
    val = divided_difference_word(rs, word, p)
    if not val.is_constant():
        raise InternalError("top divided difference is not a constant")
    return val.constant_term()


def integrate_degree(rs: RootSystem, h: HessenbergSpace, lam, word: Sequence[int] | None = None,
                     cross_check: bool = True) -> int:
    """Degree of ``Hess`` in ``P(V_lambda)``: ``int_{G/B} [Hess] c_1(L_lambda)^d``."""
    weight = lam if isinstance(lam, Weight) else Weight(tuple(lam))
    if not (weight.is_integral and weight.is_regular_dominant):
        raise InputError(f"degree needs a regular dominant integral weight, got {weight}")
    d = h.dimension
    f = euler_class_polynomial(rs, h) * weight_form(rs, weight) ** d
    deg = top_integral(rs, f, word)
    if deg.denominator != 1 or deg <= 0:
        raise InternalError(f"degree {deg} is not a positive integer")
    if cross_check:
        vol = volume(volume_polynomial(rs, h), weight)
        if deg != math.factorial(d) * vol:
            raise InternalError(f"degree {deg} != {d}! * volume {vol}")
    return int(deg)


# --- Borel-Weil-Bott ------------------------------------------------------------------

@dataclass(frozen=True)
class BWBResult:
    case: str  # "singular" or "regular"
    w: WeylElement | None = None
    dominant_weight: Weight | None = None
    cohomological_degree: int | None = None
    dimension: int = 0

    @property
    def euler_characteristic(self) -> int:
        if self.case == "singular":
            return 0
        return (-1) ** self.cohomological_degree * self.dimension


def weyl_dimension(rs: RootSystem, mu) -> Fraction:
    """Weyl dimension formula ``prod (alpha, mu + rho) / (alpha, rho)``."""
    v = rs.weight_vector(mu)
    shifted = tuple(a + b for a, b in zip(v, rs.rho))
    out = Fraction(1)
    for a in rs.positive_roots:
        out *= rs.inner(a, shifted) / rs.inner(a, rs.rho)
    return out


def bwb_classify(rs: RootSystem, lam) -> BWBResult:
    v = rs.weight_vector(lam)
    weight = rs.as_weight(v)
    if not weight.is_integral:
        raise InputError(f"Borel-Weil-Bott needs an integral weight, got {weight}")
    mu = tuple(a + b for a, b in zip(v, rs.rho))
    if any(rs.inner(a, mu) == 0 for a in rs.positive_roots):
        return BWBResult("singular")
    steps = []
    while True:
        i = next((i for i in range(rs.rank) if rs.coroot_pairing(mu, i) < 0), None)
        if i is None:
            break
        mu = rs.reflect(i, mu)
        steps.append(i)
    w = element_from_word(rs, tuple(reversed(steps)))
    expected = sum(1 for b in rs.positive_roots
                   if rs.inner(b, tuple(a + r for a, r in zip(v, rs.rho))) < 0)
    if w.length != expected:
        raise InternalError("Borel-Weil-Bott element has the wrong length")
    dominant = tuple(a - b for a, b in zip(mu, rs.rho))
    dim = _dim_from_vector(rs, dominant)
    return BWBResult("regular", w, rs.as_weight(dominant), w.length, dim)


def _dim_from_vector(rs: RootSystem, v) -> int:
    shifted = tuple(a + b for a, b in zip(v, rs.rho))
    out = Fraction(1)
    for a in rs.positive_roots:
        out *= rs.inner(a, shifted) / rs.inner(a, rs.rho)
    if out.denominator != 1 or out <= 0:
        raise InternalError(f"Weyl dimension {out} is not a positive integer")
    return int(out)


def check_rho_wall(rs: RootSystem, gammas) -> Root:
    """A root orthogonal to ``rho - sum(gammas)`` for distinct non-simple positive roots."""
    gammas = [Root(g) for g in gammas]
    if not gammas:
        raise InputError("need at least one root")
    if len(set(gammas)) != len(gammas):
        raise InputError("roots must be distinct")
    for g in gammas:
        if g not in rs.index or g.height < 2:
            raise InputError(f"{list(g)} is not a non-simple positive root")
    v = tuple(r - sum(g[j] for g in gammas) for j, r in enumerate(rs.rho))
    for a in rs.positive_roots:
        if rs.inner(a, v) == 0:
            return a
    raise InternalError("no root is orthogonal to rho - sum(gammas)")


# --- K-theory and Euler characteristics ----------------------------------------------

@dataclass(frozen=True)
class FixedPointCharacter:
    w: WeylElement
    numerator: tuple  # exponent -w lambda, simple-root coordinates
    denominators: tuple = field(default=())  # weights b with factor 1/(1 - e^b)


def fixed_point_characters(rs: RootSystem, h: HessenbergSpace, lam) -> list[FixedPointCharacter]:
    lam_vec = rs.weight_vector(lam)
    sign = _exponent_sign(rs)
    members = h.roots()
    out = []
    for w in rs.weyl_group():
        num = tuple(sign * c for c in w.act(lam_vec))
        dens = tuple(tuple(w.act(a)) for a in members)
        out.append(FixedPointCharacter(w, num, dens))
    return out


def k_class_restriction(rs: RootSystem, h: HessenbergSpace, w: WeylElement) -> dict:
    """Restriction of ``[O_Hess] = prod_{alpha not in H} (1 - [L_{-alpha}])`` to ``wB``.

    ``[L_mu]`` restricts to the character ``e^{-w mu}``, so each factor is
    ``1 - e^{w alpha}``. Returned as ``{exponent vector: integer coefficient}``.
    """
    n = rs.rank
    poly = {(0,) * n: 1}
    for a in h.complement():
        wa = tuple(w.act(a))
        nxt = dict(poly)
        for e, c in poly.items():
            e2 = tuple(x + y for x, y in zip(e, wa))
            nxt[e2] = nxt.get(e2, 0) - c
        poly = {e: c for e, c in nxt.items() if c}
    return poly


def default_order(rs: RootSystem) -> int:
    return rs.num_positive_roots + 2


def _denominator_series(rs: RootSystem, roots: list, xi, order: int) -> list:
    key = (tuple(roots), xi, order)
    cache = rs.__dict__.setdefault("_chi_denominators", {})
    if key in cache:
        return cache[key]
    rel = order + 2
    out = []
    for w in rs.weyl_group():
        series = TruncatedSeries(0, [1], order + len(roots) + 2)
        for a in roots:
            series = series * one_minus_exp(pair(w.act(a), xi), rel).inverse()
        out.append((w, series))
    cache[key] = out
    return out


def _series_sum(rs: RootSystem, lam_vec, roots: list, xi, order: int, sign: int,
                numerators=None) -> TruncatedSeries:
    total = None
    for w, den in _denominator_series(rs, roots, xi, order):
        a = sign * pair(w.act(lam_vec), xi)
        if numerators is None:
            num = TruncatedSeries.exp_linear(a, order + 2)
        else:
            num = None
            for e, c in numerators(w).items():
                piece = TruncatedSeries.exp_linear(a + pair(e, xi), order + 2) * c
                num = piece if num is None else num + piece
            if num is None:
                continue
        term = num * den
        total = term if total is None else total + term
    return total


def _euler_characteristic(rs: RootSystem, lam_vec, roots: list, seed: int, order: int | None,
                          sign: int, numerators=None) -> int:
    order = default_order(rs) if order is None else order
    xi = generic_pairings(rs, random.Random(seed))
    for attempt in range(2):
        total = _series_sum(rs, lam_vec, roots, xi, order, sign, numerators)
        if total is not None and total.prec >= 0:
            polar = [total.coefficient(k) for k in range(total.val, 0)]
            if not any(polar):
                value = total.coefficient(0)
                if value.denominator != 1:
                    raise InternalError(f"Euler characteristic {value} is not an integer")
                return int(value)
        order *= 2
    raise InternalError("fixed-point sum did not converge: polar part survives at doubled order")


def _exponent_sign(rs: RootSystem) -> int:
    """Sign ``s`` such that the fibre weight at ``wB`` is ``s * w lambda``.

    Fixed once per root system by matching ``chi(G/B, L_{omega_1})`` against
    the Weyl dimension of the first fundamental representation.
    """
    cached = rs.__dict__.get("_chi_sign")
    if cached is not None:
        return cached
    omega = rs.from_fundamental(tuple(int(i == 0) for i in range(rs.rank)))
    target = _dim_from_vector(rs, omega)
    for sign in (-1, 1):
        val = _euler_characteristic(rs, omega, list(rs.positive_roots), DEFAULT_SEED, None, sign)
        if val == target:
            rs.__dict__["_chi_sign"] = sign
            return sign
    raise InternalError("no sign convention reproduces the Weyl dimension formula")


def chi_line_bundle(rs: RootSystem, h: HessenbergSpace, lam, seed: int = DEFAULT_SEED,
                    order: int | None = None, method: str = "tangent") -> int:
    """Euler characteristic ``chi(Hess(x, H), L_lambda)`` for any regular ``x``.

    ``method="tangent"`` uses the tangent weights of the smooth fibre;
    ``method="kclass"`` integrates ``[L_lambda] * [O_Hess]`` over G/B using the
    restrictions of the K-theory class. The two must agree.
    """
    v = rs.weight_vector(lam)
    if any(c.denominator != 1 for c in rs.to_fundamental(v)):
        raise InputError("Euler characteristics need an integral weight")
    sign = _exponent_sign(rs)
    if method == "tangent":
        return _euler_characteristic(rs, v, h.roots(), seed, order, sign)
    if method == "kclass":
        return _euler_characteristic(rs, v, list(rs.positive_roots), seed, order, sign,
                                     numerators=lambda w: k_class_restriction(rs, h, w))
    raise InputError(f"unknown method {method!r}")


# --- Hilbert polynomials ----------------------------------------------------------------

@dataclass(frozen=True)
class HilbertPolynomial:
    coefficients: tuple  # constant term first

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coefficients[-1]

    def __call__(self, m) -> Fraction:
        out = Fraction(0)
        for c in reversed(self.coefficients):
            out = out * m + c
        return out

    def to_string(self, var: str = "m") -> str:
        terms = []
        for k in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[k]
            if not c:
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono:
                coef = f"({c})" if c.denominator != 1 else str(c)
                terms.append(f"{coef}*{mono}")
            else:
                terms.append(str(c))
        return " + ".join(terms).replace("+ -", "- ") or "0"


def interpolate(nodes: Sequence, values: Sequence) -> list[Fraction]:
    """Coefficients (constant first) of the Lagrange interpolant, exact."""
    nodes = [Fraction(x) for x in nodes]
    coeffs = [Fraction(0)] * len(nodes)
    for i, (xi, yi) in enumerate(zip(nodes, values)):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(nodes):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        for k, b in enumerate(basis):
            coeffs[k] += Fraction(yi) * b / denom
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def hilbert_polynomial(rs: RootSystem, h: HessenbergSpace, lam, seed: int = DEFAULT_SEED) -> HilbertPolynomial:
    """``m -> chi(Hess, L_{m lambda})`` for a regular dominant integral ``lambda``."""
    weight = lam if isinstance(lam, Weight) else Weight(tuple(lam))
    if not (weight.is_integral and weight.is_regular_dominant):
        raise InputError(f"Hilbert polynomial needs a regular dominant integral weight, got {weight}")
    d = h.dimension
    nodes = list(range(d + 2))
    values = [chi_line_bundle(rs, h, weight.scaled(m), seed=seed) for m in nodes]
    coeffs = interpolate(nodes, values)
    poly = HilbertPolynomial(tuple(coeffs + [Fraction(0)] * (d + 1 - len(coeffs))))
    if poly.degree != d:
        raise InternalError(f"chi(L_(m lambda)) has degree {poly.degree}, expected {d}")
    extra = d + 2
    if poly(extra) != chi_line_bundle(rs, h, weight.scaled(extra), seed=seed):
        raise InternalError("Hilbert polynomial misses the out-of-sample node")
    if poly.coefficients[0] != 1:
        raise InternalError(f"chi(O) = {poly.coefficients[0]}, expected 1")
    vol = volume(volume_polynomial(rs, h), weight)
    if poly.leading_coefficient != vol:
        raise InternalError(f"leading coefficient {poly.leading_coefficient} != volume {vol}")
    return poly
