"""Hilbert functions of ``R / Ann(P_H)`` by catalecticant ranks.

``R`` is the polynomial ring in the simple roots acting on ``P_H`` through
the derivations ``d_{alpha_j}``. The degree-``k`` value is the rank of the
map sending a monomial ``m`` of degree ``k`` to ``d_m P_H``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, lcm

from .errors import InternalError, ResourceError
from .hessenberg import HessenbergSpace, full_space
from .polyring import Polynomial, apply_operator, monomials
from .rootsys import RootSystem
from .volume import volume_polynomial

MAX_MONOMIALS = 4000


@dataclass(frozen=True)
class GradedBetti:
    betti: tuple
    d: int

    @property
    def total(self) -> int:
        return sum(self.betti)

    @property
    def palindromic(self) -> bool:
        return self.betti == self.betti[::-1]

    def to_json(self) -> dict:
        return {"betti": list(self.betti), "palindromic": self.palindromic, "total": self.total}


def integer_rank(rows: list[list[int]]) -> int:
    """Rank by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank, prev = 0, 1
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, nrows):
            a = m[r][col]
            m[r] = [(p * x - a * y) // prev for x, y in zip(m[r], m[rank])]
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def catalecticant(rs: RootSystem, p: Polynomial, k: int) -> tuple[list, list, list]:
    """Rows of coefficients of ``d_m p`` for degree-``k`` monomials ``m`` (degree-lex)."""
    d = p.degree
    rows_idx = monomials(rs.rank, k)
    cols_idx = monomials(rs.rank, d - k)
    if len(rows_idx) > MAX_MONOMIALS or len(cols_idx) > MAX_MONOMIALS:
        raise ResourceError(f"catalecticant in degree {k} exceeds {MAX_MONOMIALS} monomials")
    rows = []
    for m in rows_idx:
        q = apply_operator(rs, Polynomial(rs.rank, {m: 1}), p)
        row = [q.coefficient(e) for e in cols_idx]
        den = lcm(*(c.denominator for c in row)) if row else 1
        rows.append([int(c * den) for c in row])
    return rows_idx, cols_idx, rows


def betti_numbers(rs: RootSystem, h: HessenbergSpace) -> GradedBetti:
    p = volume_polynomial(rs, h).p_h
    d = h.dimension
    for k in range(d + 1):
        if comb(rs.rank + k - 1, k) > MAX_MONOMIALS:
            raise ResourceError(f"catalecticant in degree {k} exceeds {MAX_MONOMIALS} monomials")
    betti = []
    for k in range(d + 1):
        if k > d - k and len(betti) > d - k:
            # rank of a matrix equals that of its transpose, which is the
            # catalecticant in the complementary degree
            betti.append(betti[d - k])
            continue
        betti.append(integer_rank(catalecticant(rs, p, k)[2]))
    out = GradedBetti(tuple(betti), d)
    if out.betti[0] != 1 or out.betti[-1] != 1:
        raise InternalError(f"R/Ann(P_H) is not Gorenstein with 1-dimensional socle: {out.betti}")
    return out


def betti_numbers_full(rs: RootSystem, h: HessenbergSpace) -> GradedBetti:
    """As :func:`betti_numbers` but computing every degree independently."""
    p = volume_polynomial(rs, h).p_h
    betti = tuple(integer_rank(catalecticant(rs, p, k)[2]) for k in range(h.dimension + 1))
    return GradedBetti(betti, h.dimension)


def check_weyl_series(rs: RootSystem) -> bool:
    """Betti numbers of the full space against the length generating function of W."""
    got = betti_numbers(rs, full_space(rs)).betti
    want = tuple(rs.weyl_group().length_histogram())
    if got != want:
        raise InternalError(f"Betti numbers {got} differ from the Weyl length series {want}")
    return True
