"""Volumes of Hessenberg varieties under the embeddings given by L_lambda.

Two independent routes:

* :func:`volume_polynomial` applies ``prod_{alpha not in H} d_alpha`` to
  ``prod_{alpha > 0} alpha`` and divides by ``Z = prod (alpha, rho)``;
* :func:`volume_localization` sums the fixed-point contributions
  ``(-w lambda)^d / prod_{alpha in H} (-w alpha)`` over the Weyl group,
  evaluated at random generic points.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import InternalError
from .hessenberg import HessenbergSpace
from .polyring import Derivation, Polynomial, evaluate_at, root_product
from .rootsys import RootSystem

DEFAULT_SEED = 20240601
GENERIC_RANGE = 10**4
MAX_RESAMPLES = 50


@dataclass(frozen=True)
class VolumePolynomial:
    p_h: Polynomial
    z_constant: Fraction
    hessenberg: HessenbergSpace

    @property
    def degree(self) -> int:
        return self.hessenberg.dimension


def volume_polynomial(rs: RootSystem, h: HessenbergSpace) -> VolumePolynomial:
    cache = rs.__dict__.setdefault("_volume_polys", {})
    if h.root_set in cache:
        return cache[h.root_set]
    z = Fraction(1)
    for a in rs.positive_roots:
        z *= rs.inner(a, rs.rho)
    p = root_product(rs, rs.positive_roots)
    for a in h.complement():
        p = Derivation(rs, a)(p)
    p = p * (1 / z)
    if not p.is_homogeneous() or p.degree != h.dimension:
        raise InternalError("volume polynomial is not homogeneous of degree dim Hess")
    vp = VolumePolynomial(p, z, h)
    if volume(vp, rs.rho_weight) <= 0:
        raise InternalError("volume polynomial is not positive at rho")
    cache[h.root_set] = vp
    return vp


def volume(vp: VolumePolynomial, lam) -> Fraction:
    return evaluate_at(vp.hessenberg.rs, vp.p_h, lam)


def generic_pairings(rs: RootSystem, rng: random.Random) -> tuple[int, ...]:
    """Values ``alpha_i(xi)`` of a random point ``xi`` on which no root vanishes."""
    for _ in range(MAX_RESAMPLES):
        xi = tuple(rng.randint(-GENERIC_RANGE, GENERIC_RANGE) for _ in range(rs.rank))
        if all(pair(r, xi) != 0 for r in rs.positive_roots):
            return xi
    raise InternalError("could not sample a generic point")


def pair(v, xi) -> Fraction:
    """Evaluate the linear form ``v`` (simple-root coordinates) at ``xi``."""
    return sum((Fraction(c) * x for c, x in zip(v, xi)), Fraction(0))


def _localization_sum(rs: RootSystem, h: HessenbergSpace, lam_vec, xi) -> Fraction:
    d = h.dimension
    members = h.roots()
    total = Fraction(0)
    for w in rs.weyl_group():
        num = -pair(w.act(lam_vec), xi)
        den = Fraction(1)
        for a in members:
            den *= -pair(w.act(a), xi)
        total += num**d / den
    return total / math.factorial(d)


def volume_localization(rs: RootSystem, h: HessenbergSpace, lam, seed: int = DEFAULT_SEED,
                        samples: int = 2) -> Fraction:
    """Fixed-point formula for the volume, checked at ``samples`` generic points."""
    rng = random.Random(seed)
    lam_vec = rs.weight_vector(lam)
    values = [_localization_sum(rs, h, lam_vec, generic_pairings(rs, rng)) for _ in range(samples)]
    if any(v != values[0] for v in values):
        raise InternalError(f"localization sum depends on the generic point: {values}")
    return values[0]


def volume_both(rs: RootSystem, h: HessenbergSpace, lam, seed: int = DEFAULT_SEED) -> Fraction:
    """Both routes; raises :class:`InternalError` if they disagree."""
    a = volume(volume_polynomial(rs, h), lam)
    b = volume_localization(rs, h, lam, seed=seed)
    if a != b:
        raise InternalError(f"volume formulas disagree: derivative {a}, localization {b}")
    return a
