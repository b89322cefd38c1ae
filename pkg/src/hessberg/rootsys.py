"""Root systems, Weyl groups and the root poset.

Everything is exact. Roots and weights are handled internally as vectors in
the basis of simple roots (tuples of ``int`` or ``Fraction``); the public
:class:`Weight` type stores fundamental-weight coordinates, which is how
weights are written on the command line and in JSON.

Conventions
-----------
``cartan[i][j] = <alpha_i^vee, alpha_j> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)``,
so that ``s_i(v) = v - <v, alpha_i^vee> alpha_i`` with
``<v, alpha_i^vee> = sum_j cartan[i][j] v_j``. The invariant form satisfies
``(alpha_i, alpha_j) = d_i * cartan[i][j]`` and short roots have squared
length 2 (times an optional global ``scale``).

Simple roots are labelled as in Bourbaki.
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InputError, InternalError, ResourceError

DEFAULT_WEYL_BOUND = 10**6

_LABEL_RE = re.compile(r"^([A-G])(\d+)$")


class Root(tuple):
    """A root written in simple-root coordinates.

    Subclasses ``tuple`` so roots hash, compare and serialize like the
    integer arrays they are.
    """

    __slots__ = ()

    def __new__(cls, coords: Iterable[int]):
        return super().__new__(cls, (int(c) for c in coords))

    @property
    def coords(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def height(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"Root({tuple(self)!r})"

    def name(self) -> str:
        """Human readable form such as ``a1+2a2``."""
        parts = []
        for i, c in enumerate(self, start=1):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else str(abs(c))
            parts.append(f"{sign}{mag}a{i}")
        if not parts:
            return "0"
        text = "".join(parts)
        return text[1:] if text.startswith("+") else text


@dataclass(frozen=True)
class Weight:
    """A weight in fundamental-weight coordinates."""

    fw_coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "fw_coords", tuple(Fraction(c) for c in self.fw_coords))

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.fw_coords)

    @property
    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.fw_coords)

    @property
    def is_regular_dominant(self) -> bool:
        return all(c > 0 for c in self.fw_coords)

    def scaled(self, m) -> "Weight":
        return Weight(tuple(m * c for c in self.fw_coords))

    def __repr__(self) -> str:
        return "Weight(" + ", ".join(str(c) for c in self.fw_coords) + ")"


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element acting on simple-root coordinates.

    ``matrix[r][c]`` is the r-th coordinate of ``w(alpha_c)``.
    """

    matrix: tuple
    length: int
    reduced_word: tuple

    def act(self, v: Sequence) -> tuple:
        n = len(self.matrix)
        return tuple(sum(self.matrix[r][c] * v[c] for c in range(n)) for r in range(n))

    def __call__(self, v: Sequence) -> tuple:
        return self.act(v)

    def word_string(self) -> str:
        return " ".join(f"s{i + 1}" for i in self.reduced_word) or "e"


@dataclass(frozen=True)
class WeylGroup:
    elements: tuple
    longest: WeylElement
    star: tuple  # star[i] = i*, with w0^{-1} alpha_i = -alpha_{i*}

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def length_histogram(self) -> list[int]:
        hist = [0] * (self.longest.length + 1)
        for w in self.elements:
            hist[w.length] += 1
        return hist


@dataclass(frozen=True)
class HeightInjection:
    """Injective map from roots of height >= 2 to roots one step lower.

    ``theta`` is the same map on (0-based) indices of the fixed enumeration
    of positive roots.
    """

    mapping: dict
    theta: dict

    def check(self, rs: "RootSystem") -> None:
        images = list(self.mapping.values())
        if len(set(images)) != len(images):
            raise InternalError("height injection is not injective")
        domain = {b for b in rs.positive_roots if b.height >= 2}
        if set(self.mapping) != domain:
            raise InternalError("height injection is not defined on every root of height >= 2")
        for a, b in self.mapping.items():
            if b.height != a.height - 1 or not rs.leq(b, a) or a == b:
                raise InternalError(f"bad height injection pair {a.name()} -> {b.name()}")
        for k, l in self.theta.items():
            if self.mapping[rs.positive_roots[k]] != rs.positive_roots[l]:
                raise InternalError("theta disagrees with the root mapping")


# --- Cartan data -----------------------------------------------------------

def _gram_simple(series: str, n: int) -> list[list[int]]:
    """Gram matrix of the simple roots, short roots of squared length 2."""
    g = [[0] * n for _ in range(n)]

    def link(i, j, value):
        g[i][j] = g[j][i] = value

    if series == "A":
        for i in range(n):
            g[i][i] = 2
        for i in range(n - 1):
            link(i, i + 1, -1)
    elif series == "B":
        for i in range(n):
            g[i][i] = 4
        g[n - 1][n - 1] = 2
        for i in range(n - 1):
            link(i, i + 1, -2)
    elif series == "C":
        for i in range(n):
            g[i][i] = 2
        g[n - 1][n - 1] = 4
        for i in range(n - 2):
            link(i, i + 1, -1)
        link(n - 2, n - 1, -2)
    elif series == "D":
        for i in range(n):
            g[i][i] = 2
        for i in range(n - 2):
            link(i, i + 1, -1)
        link(n - 3, n - 1, -1)
    elif series == "E":
        for i in range(n):
            g[i][i] = 2
        link(0, 2, -1)
        link(1, 3, -1)
        for i in range(2, n - 1):
            link(i, i + 1, -1)
    elif series == "F":
        g[0][0] = g[1][1] = 4
        g[2][2] = g[3][3] = 2
        link(0, 1, -2)
        link(1, 2, -2)
        link(2, 3, -1)
    elif series == "G":
        g[0][0], g[1][1] = 2, 6
        link(0, 1, -3)
    return g


_VALID_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "E": lambda n: 6 <= n <= 8,
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


def parse_label(label: str) -> list[tuple[str, int]]:
    """Split ``"A2xB3"`` into ``[("A", 2), ("B", 3)]``."""
    if not isinstance(label, str) or not label.strip():
        raise InputError(f"invalid root system label {label!r}")
    parts = []
    for piece in label.strip().upper().replace("*", "X").split("X"):
        m = _LABEL_RE.match(piece.strip())
        if not m:
            raise InputError(f"invalid root system label {label!r}")
        series, n = m.group(1), int(m.group(2))
        if not _VALID_RANKS[series](n):
            raise InputError(f"rank {n} is not valid for series {series}")
        parts.append((series, n))
    return parts


def weyl_group_order(label: str) -> int:
    """Classical order of the Weyl group (product formula, no enumeration)."""
    fixed = {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
             ("F", 4): 1152, ("G", 2): 12}
    order = 1
    for series, n in parse_label(label):
        if series == "A":
            order *= math.factorial(n + 1)
        elif series in "BC":
            order *= 2**n * math.factorial(n)
        elif series == "D":
            order *= 2 ** (n - 1) * math.factorial(n)
        else:
            order *= fixed[(series, n)]
    return order


def _mat_inverse(m: list[list[int]]) -> list[list[Fraction]]:
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


class RootSystem:
    """A (possibly reducible) crystallographic root system.

    Immutable after construction; derived tables (Weyl group, height
    injection) are computed lazily and cached on the instance.
    """

    def __init__(self, label: str, scale=1):
        parts = parse_label(label)
        self.label = "x".join(f"{s}{n}" for s, n in parts)
        self.scale = Fraction(scale)
        if self.scale <= 0:
            raise InputError("inner product scale must be positive")
        n = sum(k for _, k in parts)
        gram = [[0] * n for _ in range(n)]
        offset = 0
        for series, k in parts:
            block = _gram_simple(series, k)
            for i in range(k):
                for j in range(k):
                    gram[offset + i][offset + j] = block[i][j]
            offset += k
        self.rank = n
        self.cartan = tuple(
            tuple(2 * gram[i][j] // gram[i][i] for j in range(n)) for i in range(n))
        self.gram = tuple(tuple(self.scale * gram[i][j] for j in range(n)) for i in range(n))
        self.symmetrizer = tuple(self.gram[i][i] / 2 for i in range(n))
        self._cartan_inv = _mat_inverse([list(r) for r in self.cartan])
        self.positive_roots = self._enumerate_positive_roots()
        self.index = {r: k for k, r in enumerate(self.positive_roots)}
        self.simple_roots = self.positive_roots[:n]
        two_rho = [sum(r[j] for r in self.positive_roots) for j in range(n)]
        self.rho = tuple(Fraction(c, 2) for c in two_rho)
        self.rho_weight = Weight((1,) * n)
        self.fundamental_weights = tuple(
            Weight(tuple(int(i == j) for j in range(n))) for i in range(n))
        # coweights dual to the simple roots, recorded by their pairings
        self.dual_basis = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))

    def __repr__(self) -> str:
        extra = "" if self.scale == 1 else f", scale={self.scale}"
        return f"RootSystem({self.label!r}{extra})"

    def rescaled(self, scale) -> "RootSystem":
        """Same root system with the invariant form multiplied by ``scale``."""
        return RootSystem(self.label, self.scale * Fraction(scale))

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    # -- root enumeration ---------------------------------------------------

    def _enumerate_positive_roots(self) -> tuple[Root, ...]:
        n = self.rank
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        found = set(simple)
        layer = list(simple)
        while layer:
            nxt = set()
            for beta in layer:
                for i in range(n):
                    # alpha_i-string through beta: beta - p alpha_i, ..., beta + q alpha_i
                    p = 0
                    while True:
                        cand = list(beta)
                        cand[i] -= p + 1
                        if tuple(cand) in found:
                            p += 1
                        else:
                            break
                    q = p - sum(self.cartan[i][j] * beta[j] for j in range(n))
                    if q > 0:
                        up = list(beta)
                        up[i] += 1
                        up = tuple(up)
                        if up not in found:
                            nxt.add(up)
            found |= nxt
            layer = list(nxt)
        # height first, then reverse lexicographic so that alpha_1 precedes alpha_2
        ordered = sorted(found, key=lambda r: (sum(r), tuple(-c for c in r)))
        return tuple(Root(r) for r in ordered)

    # -- linear algebra on weights -------------------------------------------

    def inner(self, a: Sequence, b: Sequence) -> Fraction:
        """Invariant form on simple-root coordinate vectors."""
        n = self.rank
        g = self.gram
        return sum((a[i] * g[i][j] * b[j] for i in range(n) for j in range(n) if a[i] and b[j]),
                   Fraction(0))

    def coroot_pairing(self, v: Sequence, i: int) -> Fraction:
        """``<v, alpha_i^vee>`` for a vector in simple-root coordinates."""
        return sum((self.cartan[i][j] * v[j] for j in range(self.rank)), Fraction(0))

    def to_fundamental(self, v: Sequence) -> tuple:
        return tuple(self.coroot_pairing(v, i) for i in range(self.rank))

    def from_fundamental(self, fw: Sequence) -> tuple:
        n = self.rank
        return tuple(sum((self._cartan_inv[i][j] * Fraction(fw[j]) for j in range(n)), Fraction(0))
                     for i in range(n))

    def weight_vector(self, lam) -> tuple:
        """Simple-root coordinates of a weight.

        Accepts a :class:`Weight`, a :class:`Root`, or a plain sequence,
        which is read in fundamental-weight coordinates.
        """
        if isinstance(lam, Root):
            return tuple(Fraction(c) for c in lam)
        fw = lam.fw_coords if isinstance(lam, Weight) else tuple(lam)
        if len(fw) != self.rank:
            raise InputError(f"weight {lam!r} has {len(fw)} coordinates, expected {self.rank}")
        return self.from_fundamental(fw)

    def as_weight(self, v: Sequence) -> Weight:
        return Weight(self.to_fundamental(v))

    def reflect(self, i: int, v: Sequence) -> tuple:
        c = self.coroot_pairing(v, i)
        out = list(v)
        out[i] = out[i] - c
        return tuple(out)

    def leq(self, a: Sequence, b: Sequence) -> bool:
        """Root poset: ``a <= b`` iff ``b - a`` is a nonnegative combination."""
        return all(y - x >= 0 for x, y in zip(a, b))

    def is_positive_root(self, v: Sequence) -> bool:
        return tuple(v) in self.index

    def all_roots(self) -> list[Root]:
        return list(self.positive_roots) + [Root(-c for c in r) for r in self.positive_roots]

    def highest_root(self) -> Root:
        return self.positive_roots[-1]

    # -- Weyl group ------------------------------------------------------------

    def weyl_group(self, bound: int = DEFAULT_WEYL_BOUND) -> WeylGroup:
        cached = self.__dict__.get("_weyl")
        if cached is not None:
            return cached
        order = weyl_group_order(self.label)
        if order > bound:
            raise ResourceError(
                f"Weyl group of {self.label} has {order} elements, above the bound {bound}")
        group = _enumerate_weyl(self)
        self.__dict__["_weyl"] = group
        return group

    def set_weyl_group(self, group: WeylGroup) -> None:
        """Install a precomputed table (used by the on-disk cache)."""
        self.__dict__["_weyl"] = group

    @cached_property
    def height_injection(self) -> HeightInjection:
        return _find_height_injection(self)


def build_root_system(type_label: str, scale=1) -> RootSystem:
    """Construct the root system named by ``type_label`` (e.g. ``"B3"``)."""
    return RootSystem(type_label, scale)


def inner_product(rs: RootSystem, a, b) -> Fraction:
    """Invariant inner product of two weights (see :meth:`RootSystem.weight_vector`)."""
    return rs.inner(rs.weight_vector(a), rs.weight_vector(b))


def root_order_leq(rs: RootSystem, a: Sequence, b: Sequence) -> bool:
    return rs.leq(a, b)


def weyl_act(w: WeylElement, v):
    """Apply ``w``; roots stay roots, weights stay weights."""
    if isinstance(v, Root):
        return Root(w.act(v))
    if isinstance(v, Weight):
        raise TypeError("act on the simple-root vector: rs.as_weight(w.act(rs.weight_vector(v)))")
    return w.act(v)


def enumerate_weyl(rs: RootSystem, bound: int = DEFAULT_WEYL_BOUND) -> WeylGroup:
    return rs.weyl_group(bound)


def _enumerate_weyl(rs: RootSystem) -> WeylGroup:
    n = rs.rank
    ident = tuple(tuple(int(r == c) for c in range(n)) for r in range(n))
    two_rho = tuple(int(2 * c) for c in rs.rho)
    start = WeylElement(ident, 0, ())
    seen = {two_rho: start}
    elements = [start]
    queue = deque([start])
    while queue:
        w = queue.popleft()
        cols = [tuple(w.matrix[r][c] for r in range(n)) for c in range(n)]
        for i in range(n):
            if any(x < 0 for x in cols[i]):
                continue  # w s_i is shorter
            # columns of w s_i: w(alpha_j) - cartan[i][j] w(alpha_i)
            new_cols = [tuple(cols[j][r] - rs.cartan[i][j] * cols[i][r] for r in range(n))
                        for j in range(n)]
            key = tuple(sum(new_cols[c][r] * two_rho[c] for c in range(n)) for r in range(n))
            if key in seen:
                continue
            mat = tuple(tuple(new_cols[c][r] for c in range(n)) for r in range(n))
            ws = WeylElement(mat, w.length + 1, w.reduced_word + (i,))
            seen[key] = ws
            elements.append(ws)
            queue.append(ws)
    longest = max(elements, key=lambda w: w.length)
    if longest.length != rs.num_positive_roots:
        raise InternalError("longest Weyl element has the wrong length")
    star = []
    for i in range(n):
        img = longest.act(rs.simple_roots[i])
        neg = Root(-c for c in img)
        if neg not in rs.index or rs.index[neg] >= n:
            raise InternalError("w0 does not send a simple root to a negative simple root")
        star.append(rs.index[neg])
    return WeylGroup(tuple(elements), longest, tuple(star))


def inversion_count(rs: RootSystem, w: WeylElement) -> int:
    """Number of positive roots sent to negative roots."""
    return sum(1 for r in rs.positive_roots if any(c < 0 for c in w.act(r)))


def element_from_word(rs: RootSystem, word: Sequence[int]) -> WeylElement:
    """Weyl element ``s_{i1} ... s_{ik}`` (0-based indices); raises if not reduced."""
    n = rs.rank
    mat = [[int(r == c) for c in range(n)] for r in range(n)]
    for step, i in enumerate(word):
        if not 0 <= i < n:
            raise InputError(f"simple index {i + 1} out of range")
        col_i = [mat[r][i] for r in range(n)]
        if any(x < 0 for x in col_i):
            raise InputError(f"word {[j + 1 for j in word]} is not reduced (step {step + 1})")
        mat = [[mat[r][j] - rs.cartan[i][j] * col_i[r] for j in range(n)] for r in range(n)]
    return WeylElement(tuple(tuple(r) for r in mat), len(word), tuple(word))


# --- Height injection ----------------------------------------------------------

def _find_height_injection(rs: RootSystem) -> HeightInjection:
    roots = rs.positive_roots
    n = rs.rank
    domain = [k for k, r in enumerate(roots) if r.height >= 2]
    candidates = {}
    for k in domain:
        r = roots[k]
        cands = []
        for i in range(n):
            lower = list(r)
            lower[i] -= 1
            lower = tuple(lower)
            if lower in rs.index:
                cands.append(rs.index[lower])
        candidates[k] = sorted(cands)

    owner: dict[int, int] = {}

    def augment(k, visited):
        for l in candidates[k]:
            if l in visited:
                continue
            visited.add(l)
            if l not in owner or augment(owner[l], visited):
                owner[l] = k
                return True
        return False

    for k in domain:
        if not augment(k, set()):
            raise InternalError(f"no height injection for {rs.label}: matching failed at "
                                f"{roots[k].name()}")
    theta = {k: l for l, k in owner.items()}
    theta = dict(sorted(theta.items()))
    mapping = {roots[k]: roots[l] for k, l in theta.items()}
    inj = HeightInjection(mapping, theta)
    inj.check(rs)
    return inj


def find_height_injection(rs: RootSystem) -> HeightInjection:
    return rs.height_injection


# --- serialization -------------------------------------------------------------

def fraction_str(x) -> str:
    return str(Fraction(x))


def parse_fraction(text) -> Fraction:
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a rational number: {text!r}") from exc
