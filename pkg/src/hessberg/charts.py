"""Regular elements and affine charts of Hessenberg varieties in type A.

Matrices are lists of rows. Entries are :class:`~fractions.Fraction` for
numeric matrices and :class:`~hessberg.polyring.Polynomial` for the symbolic
chart matrices in the variables ``t_1..t_N`` (one per positive root, in the
fixed enumeration order). The positive root ``alpha_i + ... + alpha_{j-1}``
sits at matrix position ``(i, j)`` and its negative at ``(j, i)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import InputError, InternalError, UnsupportedError
from .hessenberg import HessenbergSpace, type_a_positions
from .polyring import Polynomial
from .rootsys import Root, RootSystem, WeylElement

DEFAULT_CHART_SEED = 7
MAX_RESAMPLES = 100

# Determinant-one representative of the longest element of S_3, as a
# fixture; ``TypeAMatrices.representative`` reproduces it.
SL3_W0_FIXTURE = ((0, 0, 1), (0, 1, 0), (-1, 0, 0))


# --- matrices ------------------------------------------------------------------

def identity(n: int, one=Fraction(1), zero=Fraction(0)) -> list:
    return [[one if r == c else zero for c in range(n)] for r in range(n)]


def mat_mul(a: list, b: list) -> list:
    n, m, k = len(a), len(b[0]), len(b)
    out = []
    for r in range(n):
        row = []
        for c in range(m):
            acc = None
            for j in range(k):
                x, y = a[r][j], b[j][c]
                if not x or not y:
                    continue
                term = x * y
                acc = term if acc is None else acc + term
            row.append(acc if acc is not None else a[r][0] * 0)
        out.append(row)
    return out


def transpose(a: list) -> list:
    return [list(r) for r in zip(*a)]


def mat_inverse(a: list) -> list:
    """Gauss-Jordan inverse of a numeric matrix."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(r == c)) for c in range(n)]
         for r, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            raise InputError("matrix is singular")
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


def to_fractions(a: Sequence[Sequence]) -> list:
    return [[Fraction(x) for x in row] for row in a]


def unit(n: int, r: int, c: int) -> list:
    """Elementary matrix ``E_{r,c}`` (0-based)."""
    m = identity(n, Fraction(0))
    m[r][c] = Fraction(1)
    return m


# --- type A provider -------------------------------------------------------------

class TypeAMatrices:
    """Chevalley basis of sl_n by elementary matrices.

    Other Lie types would need a provider with the same methods built from
    structure constants; only type A is implemented.
    """

    def __init__(self, rs: RootSystem):
        if not _is_type_a(rs):
            raise UnsupportedError(f"chart computations are implemented for type A only, not {rs.label}")
        self.rs = rs
        self.n = rs.rank + 1

    def positions(self, root: Sequence[int]) -> tuple[int, int]:
        """0-based ``(row, col)`` of ``E_alpha``."""
        i, j = type_a_positions(root)
        return i - 1, j - 1

    def raising(self, root) -> list:
        r, c = self.positions(root)
        return unit(self.n, r, c)

    def lowering(self, root) -> list:
        r, c = self.positions(root)
        return unit(self.n, c, r)

    def permutation(self, w: WeylElement) -> list[int]:
        """``sigma`` with ``w(e_k) = e_{sigma(k)}`` (0-based)."""
        sigma = list(range(self.n))
        for i in reversed(w.reduced_word):
            sigma = [i + 1 if s == i else i if s == i + 1 else s for s in sigma]
        for k in range(self.rs.rank):
            img = w.act(self.rs.simple_roots[k])
            a, b = sigma[k], sigma[k + 1]
            lo, hi = min(a, b), max(a, b)
            expect = tuple((1 if a < b else -1) * int(lo <= m < hi) for m in range(self.rs.rank))
            if tuple(img) != expect:
                raise InternalError("permutation does not reproduce the Weyl group action")
        return sigma

    def representative(self, w: WeylElement) -> list:
        """Permutation matrix of ``w``, last row negated if needed for determinant one."""
        sigma = self.permutation(w)
        p = [[Fraction(0)] * self.n for _ in range(self.n)]
        for k, s in enumerate(sigma):
            p[s][k] = Fraction(1)
        if _perm_sign(sigma) < 0:
            p[-1] = [-x for x in p[-1]]
        return p


def _is_type_a(rs: RootSystem) -> bool:
    return rs.label.startswith("A") and rs.label[1:].isdigit()


def _perm_sign(sigma: Sequence[int]) -> int:
    inv = sum(1 for a in range(len(sigma)) for b in range(a + 1, len(sigma)) if sigma[a] > sigma[b])
    return -1 if inv % 2 else 1


# --- regular elements --------------------------------------------------------------

@dataclass(frozen=True)
class RegularElement:
    rs: RootSystem = field(repr=False)
    j_set: frozenset  # 0-based simple indices
    semisimple_values: tuple  # alpha_i(s_J), zero for i in J
    seed: int | None = None

    def root_value(self, root: Sequence[int]) -> Fraction:
        return sum((Fraction(c) * v for c, v in zip(root, self.semisimple_values)), Fraction(0))

    @property
    def is_nilpotent(self) -> bool:
        return len(self.j_set) == self.rs.rank

    @property
    def is_semisimple(self) -> bool:
        return not self.j_set

    def diagonal(self) -> list[Fraction]:
        """Traceless diagonal entries ``d`` with ``d_k - d_{k+1} = alpha_k(s_J)``."""
        d = [Fraction(0)]
        for v in self.semisimple_values:
            d.append(d[-1] - v)
        mean = sum(d) / len(d)
        return [x - mean for x in d]

    def matrix(self) -> list:
        if not _is_type_a(self.rs):
            raise UnsupportedError("matrix realisations exist for type A only")
        n = self.rs.rank + 1
        m = identity(n, Fraction(0))
        for k, x in enumerate(self.diagonal()):
            m[k][k] = x
        for i in self.j_set:
            m[i][i + 1] = Fraction(1)
        return m


def in_levi(root: Sequence[int], j_set) -> bool:
    """Is the root in the root subsystem spanned by ``{alpha_j : j in J}``?"""
    return all(c == 0 or k in j_set for k, c in enumerate(root))


def make_regular_element(rs: RootSystem, j_set, seed: int = DEFAULT_CHART_SEED) -> RegularElement:
    j_set = frozenset(int(j) for j in j_set)
    if any(not 0 <= j < rs.rank for j in j_set):
        raise InputError(f"J must be a subset of the simple indices 1..{rs.rank}")
    rng = random.Random(seed)
    free = [i for i in range(rs.rank) if i not in j_set]
    for _ in range(MAX_RESAMPLES):
        vals = {i: Fraction(rng.randint(-60, 60), rng.randint(1, 9)) for i in free}
        if len(set(vals.values())) != len(vals):
            continue
        values = tuple(vals.get(i, Fraction(0)) for i in range(rs.rank))
        x = RegularElement(rs, j_set, values, seed)
        if all(x.root_value(a) != 0 for a in rs.positive_roots if not in_levi(a, j_set)):
            return x
    raise InternalError("could not sample a generic semisimple part")


def regular_nilpotent(rs: RootSystem) -> RegularElement:
    return make_regular_element(rs, range(rs.rank))


# --- chart polynomials --------------------------------------------------------------

@dataclass(frozen=True)
class ChartIdealGenerators:
    weyl_element: WeylElement
    representative: tuple
    generators: dict  # Root -> Polynomial in t_1..t_N
    nvars: int

    def variable_names(self) -> list[str]:
        return [f"t{k + 1}" for k in range(self.nvars)]

    def to_json(self, rs: RootSystem) -> dict:
        return {
            "weyl": [i + 1 for i in self.weyl_element.reduced_word],
            "representative": [[str(x) for x in row] for row in self.representative],
            "variables": [r.name() for r in rs.positive_roots],
            "generators": [{"root": list(a), "poly": p.to_json(), "text": p.to_string(self.variable_names())}
                           for a, p in self.generators.items()],
        }


def chart_matrix(rs: RootSystem, w: WeylElement, point=None, rep=None) -> list:
    """``w~ * prod_l (I + t_l F_{beta_l})``: symbolic if ``point`` is None, else evaluated."""
    prov = TypeAMatrices(rs)
    n, N = prov.n, rs.num_positive_roots
    rep = prov.representative(w) if rep is None else to_fractions(rep)
    if point is not None:
        m = rep
        for ell, beta in enumerate(rs.positive_roots):
            step = identity(n)
            r, c = prov.positions(beta)
            step[c][r] = Fraction(point[ell])
            m = mat_mul(m, step)
        return m
    zero, one = Polynomial.constant(N, 0), Polynomial.constant(N, 1)
    m = [[Polynomial.constant(N, x) for x in row] for row in rep]
    for ell, beta in enumerate(rs.positive_roots):
        step = identity(n, one, zero)
        r, c = prov.positions(beta)
        step[c][r] = Polynomial.variable(N, ell)
        m = mat_mul(m, step)
    return m


def chart_polynomials(x: RegularElement, h: HessenbergSpace, w: WeylElement, rep=None) -> ChartIdealGenerators:
    """Generators ``f_alpha = (M^{-1} x M)_{-alpha}``, ``alpha`` outside the Hessenberg root set.

    ``M^{-1}`` is assembled from ``w~^{-1} = w~^T`` and the inverses
    ``I - t_l F_{beta_l}`` of the unipotent factors.
    """
    rs = x.rs
    prov = TypeAMatrices(rs)
    n, N = prov.n, rs.num_positive_roots
    rep = prov.representative(w) if rep is None else to_fractions(rep)
    if any(abs(v) > 1 for row in rep for v in row) or mat_mul(rep, transpose(rep)) != identity(n):
        raise InputError("representative must be a signed permutation matrix")
    zero, one = Polynomial.constant(N, 0), Polynomial.constant(N, 1)
    core = mat_mul(mat_mul(transpose(rep), x.matrix()), rep)
    a = [[Polynomial.constant(N, v) for v in row] for row in core]
    for ell, beta in enumerate(rs.positive_roots):
        r, c = prov.positions(beta)
        t = Polynomial.variable(N, ell)
        left = identity(n, one, zero)
        left[c][r] = -t
        right = identity(n, one, zero)
        right[c][r] = t
        a = mat_mul(mat_mul(left, a), right)
    gens = {}
    for alpha in h.complement():
        r, c = prov.positions(alpha)
        gens[alpha] = a[c][r]
    return ChartIdealGenerators(w, tuple(tuple(row) for row in rep), gens, N)


def in_hessenberg(rs: RootSystem, h: HessenbergSpace, y: list) -> bool:
    """Membership of a numeric matrix in the Hessenberg space (lower part only)."""
    prov = TypeAMatrices(rs)
    for alpha in rs.positive_roots:
        r, c = prov.positions(alpha)
        if y[c][r] and alpha not in h.root_set:
            return False
    return True


def membership_direct(x: RegularElement, h: HessenbergSpace, w: WeylElement, point, rep=None) -> bool:
    """``Ad(g^{-1}) x in H`` for ``g`` the chart matrix at ``point``, by numeric inversion."""
    g = chart_matrix(x.rs, w, point, rep)
    y = mat_mul(mat_mul(mat_inverse(g), x.matrix()), g)
    return in_hessenberg(x.rs, h, y)


def support_bound_holds(rs: RootSystem, gens: ChartIdealGenerators) -> bool:
    """Does every ``f_alpha`` only involve ``t_l`` with ``beta_l <= alpha``?"""
    for alpha, p in gens.generators.items():
        for v in p.variables():
            if not rs.leq(rs.positive_roots[v], alpha):
                return False
    return True


# --- elimination at the longest element -----------------------------------------

@dataclass
class EliminationReport:
    success: bool
    pivots: list  # (root alpha, pivot variable index, case) in elimination order
    free_variables: list
    solutions: dict = field(default_factory=dict)  # pivot index -> Polynomial in later variables
    message: str = ""

    @property
    def pivot_set(self) -> set:
        return {p for _, p, _ in self.pivots}

    def solve(self, free_values: dict) -> list[Fraction]:
        """A point of the zero set with the given free coordinates."""
        nvars = len(self.free_variables) + len(self.pivots)
        point = [Fraction(0)] * nvars
        for v in self.free_variables:
            point[v] = Fraction(free_values[v])
        for _, p, _ in reversed(self.pivots):
            point[p] = self.solutions[p].evaluate(point)
        return point


def expected_pivot(rs: RootSystem, x: RegularElement, alpha: Root) -> tuple[int, str]:
    """Pivot predicted by the case split: ``k`` off the dual Levi, ``theta(k)`` on it."""
    star = rs.weyl_group().star
    j_star = {star[j] for j in x.j_set}
    k = rs.index[alpha]
    if not in_levi(alpha, j_star):
        return k, "1"
    return rs.height_injection.theta[k], "2"


def _linear_pivots(p: Polynomial) -> list[tuple[int, Fraction]]:
    out = []
    for v in sorted(p.variables()):
        if p.degree_in(v) != 1:
            continue
        coeff = p.partial(v)
        if coeff.is_constant() and coeff.constant_term():
            out.append((v, coeff.constant_term()))
    return out


def eliminate_w0(gens: ChartIdealGenerators, x: RegularElement) -> EliminationReport:
    """Solve the chart equations one linear pivot at a time.

    Generators are processed in the root enumeration order; each pivot is
    the predicted one when it qualifies, otherwise the first variable that
    occurs linearly with a constant nonzero coefficient.
    """
    if gens.weyl_element.length != x.rs.num_positive_roots:
        raise InputError("elimination is only defined on the chart of the longest element")
    return eliminate(gens, x)


def eliminate(gens: ChartIdealGenerators, x: RegularElement) -> EliminationReport:
    """Greedy linear elimination on any chart; success is only guaranteed at ``w0``."""
    rs = x.rs
    pending = dict(gens.generators)
    pivots, solutions = [], {}
    while pending:
        progress = False
        for alpha in sorted(pending, key=rs.index.__getitem__):
            p = pending[alpha]
            if p.is_zero():
                return EliminationReport(False, pivots, [], solutions,
                                         f"generator for {alpha.name()} became identically zero")
            if p.is_constant():
                return EliminationReport(False, pivots, [], solutions,
                                         f"generator for {alpha.name()} became a nonzero constant")
            cands = _linear_pivots(p)
            if not cands:
                continue
            want, case = expected_pivot(rs, x, alpha)
            chosen = next(((v, c) for v, c in cands if v == want), None)
            if chosen is None:
                chosen, case = cands[0], "other"
            v, c = chosen
            sol = (p - Polynomial.variable(p.nvars, v) * c) * (-1 / c)
            solutions[v] = sol
            pivots.append((alpha, v, case))
            del pending[alpha]
            pending = {a: q.substitute(v, sol) for a, q in pending.items()}
            progress = True
            break
        if not progress:
            names = ", ".join(a.name() for a in pending)
            return EliminationReport(False, pivots, [], solutions, f"no linear pivot in: {names}")
    used = {v for _, v, _ in pivots}
    free = [v for v in range(gens.nvars) if v not in used]
    return EliminationReport(True, pivots, free, solutions)


# --- conjugation to normal form -------------------------------------------------------

def _check_upper_form(rs: RootSystem, x: list) -> None:
    n = rs.rank + 1
    if len(x) != n or any(len(row) != n for row in x):
        raise InputError(f"expected a {n}x{n} matrix")
    if sum(x[k][k] for k in range(n)) != 0:
        raise InputError("matrix must be traceless")
    for r in range(n):
        for c in range(n):
            if r != c and c != r + 1 and x[r][c]:
                raise InputError("matrix must be diagonal plus simple-root entries")


def conjugate_to_normal_form(rs: RootSystem, x: Sequence[Sequence], j_set) -> tuple[list, list]:
    """Conjugate ``s_J + sum_i c_i E_{alpha_i}`` to ``s_J + sum_{j in J} c_j E_{alpha_j}``.

    Entries at roots outside the ``J``-Levi are killed one height at a time by
    ``Ad(I + (c / alpha(s)) E_alpha)``. Returns ``(g, Ad(g) x)``.
    """
    prov = TypeAMatrices(rs)
    n = prov.n
    x = to_fractions(x)
    _check_upper_form(rs, x)
    j_set = frozenset(j_set)
    s_vals = [x[k][k] - x[k + 1][k + 1] for k in range(rs.rank)]
    for j in j_set:
        if s_vals[j]:
            raise InputError(f"alpha_{j + 1}(s) must vanish for j in J")
    target = [[x[r][c] if r == c or (c == r + 1 and r in j_set) else Fraction(0)
               for c in range(n)] for r in range(n)]
    g = identity(n)
    y = x
    for height in range(1, n):
        for alpha in rs.positive_roots:
            if alpha.height != height or in_levi(alpha, j_set):
                continue
            r, c = prov.positions(alpha)
            coeff = y[r][c]
            if not coeff:
                continue
            val = sum((a * s for a, s in zip(alpha, s_vals)), Fraction(0))
            if not val:
                raise InputError(f"{alpha.name()}(s) = 0: semisimple part is not generic")
            step = identity(n)
            step[r][c] = coeff / val
            back = identity(n)
            back[r][c] = -coeff / val
            y = mat_mul(mat_mul(step, y), back)
            g = mat_mul(step, g)
    if y != target:
        raise InternalError("conjugation did not reach the normal form")
    if mat_mul(mat_mul(g, x), mat_inverse(g)) != target:
        raise InternalError("accumulated group element does not conjugate x to the normal form")
    return g, y


def conjugate_line(xj: RegularElement, t) -> tuple[list, bool]:
    """Conjugate ``x(t) = t x_J + (1 - t) N_0`` to ``t x_J``; returns ``(g, verified)``."""
    t = Fraction(t)
    if not t:
        raise InputError("t must be nonzero")
    rs = xj.rs
    n = rs.rank + 1
    nil = identity(n, Fraction(0))
    for i in range(rs.rank):
        nil[i][i + 1] = Fraction(1)
    xm = xj.matrix()
    xt = [[t * a + (1 - t) * b for a, b in zip(ra, rb)] for ra, rb in zip(xm, nil)]
    g, y = conjugate_to_normal_form(rs, xt, xj.j_set)
    # diagonal torus element with alpha_j(h) = t for j in J
    d = [Fraction(1)]
    for k in range(rs.rank):
        d.append(d[-1] / (t if k in xj.j_set else 1))
    hmat = identity(n)
    for k in range(n):
        hmat[k][k] = d[k]
    g = mat_mul(hmat, g)
    result = mat_mul(mat_mul(g, xt), mat_inverse(g))
    target = [[t * a for a in row] for row in xm]
    if result != target:
        raise InternalError("Ad(g) x(t) != t x_J")
    return g, True
