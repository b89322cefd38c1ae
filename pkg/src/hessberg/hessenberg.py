"""Hessenberg spaces as lower-closed sets of positive roots containing the simple roots."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InputError, ResourceError
from .rootsys import Root, RootSystem, build_root_system

MAX_ENUMERATION_RANK = 4


class HessenbergValidationError(InputError):
    """Raised by :func:`validate_hessenberg`; ``violations`` lists each witness."""

    def __init__(self, violations: list[str]):
        self.violations = violations
        super().__init__("invalid Hessenberg space: " + "; ".join(violations))


@dataclass(frozen=True)
class HessenbergSpace:
    rs: RootSystem = field(compare=False, repr=False)
    root_set: frozenset
    label: str = ""

    def __post_init__(self):
        if not self.label:
            object.__setattr__(self, "label", self.rs.label)

    @property
    def dimension(self) -> int:
        return len(self.root_set)

    @property
    def codimension(self) -> int:
        return self.rs.num_positive_roots - len(self.root_set)

    def roots(self) -> list[Root]:
        """Members in the fixed enumeration order."""
        return [r for r in self.rs.positive_roots if r in self.root_set]

    def complement(self) -> list[Root]:
        """Positive roots outside the space, in enumeration order."""
        return [r for r in self.rs.positive_roots if r not in self.root_set]

    @property
    def is_full(self) -> bool:
        return self.codimension == 0

    @property
    def is_minimal(self) -> bool:
        return self.dimension == self.rs.rank

    def hessenberg_function(self) -> list[int]:
        """Type A only: read the Hessenberg function back from the root set."""
        return to_hessenberg_function(self)

    def describe(self) -> str:
        return "{" + ", ".join(r.name() for r in self.roots()) + "}"


def validate_hessenberg(rs: RootSystem, roots: Iterable[Sequence[int]]) -> HessenbergSpace:
    root_set = set()
    violations = []
    for r in roots:
        r = Root(r)
        if len(r) != rs.rank or r not in rs.index:
            violations.append(f"{list(r)} is not a positive root of {rs.label}")
        else:
            root_set.add(r)
    for a in rs.simple_roots:
        if a not in root_set:
            violations.append(f"missing simple root {a.name()}")
    for b in sorted(root_set, key=rs.index.__getitem__):
        for a in rs.positive_roots:
            if a not in root_set and rs.leq(a, b):
                violations.append(f"not lower-closed: {a.name()} <= {b.name()} but "
                                  f"{a.name()} is absent")
    if violations:
        raise HessenbergValidationError(violations)
    return HessenbergSpace(rs, frozenset(root_set))


def full_space(rs: RootSystem) -> HessenbergSpace:
    return HessenbergSpace(rs, frozenset(rs.positive_roots))


def minimal_space(rs: RootSystem) -> HessenbergSpace:
    """The space with root set equal to the simple roots."""
    return HessenbergSpace(rs, frozenset(rs.simple_roots))


def from_hessenberg_function(n: int, h: Sequence[int], rs: RootSystem | None = None) -> HessenbergSpace:
    """Type ``A_{n-1}`` space from a Hessenberg function ``h: [n] -> [n]``.

    ``h`` may omit the last value, which is always ``n``.
    """
    h = [int(x) for x in h]
    if n < 2:
        raise InputError("need n >= 2 for a type A Hessenberg function")
    if len(h) == n - 1:
        h = h + [n]
    if len(h) != n:
        raise InputError(f"Hessenberg function must have {n - 1} or {n} values, got {len(h)}")
    for i, v in enumerate(h, start=1):
        if v > n:
            raise InputError(f"h({i}) = {v} exceeds n = {n}")
        if v < i:
            raise InputError(f"h({i}) = {v} is below {i}")
        if i < n and v < i + 1:
            raise InputError(f"h({i}) = {v} < {i + 1}: simple root a{i} would be missing")
    for i in range(n - 1):
        if h[i] > h[i + 1]:
            raise InputError(f"Hessenberg function {h} is not nondecreasing")
    if rs is None:
        rs = build_root_system(f"A{n - 1}")
    elif rs.label != f"A{n - 1}":
        raise InputError(f"Hessenberg function of length {n} needs type A{n - 1}, got {rs.label}")
    roots = set()
    for i in range(1, n + 1):
        for j in range(i + 1, h[i - 1] + 1):
            roots.add(type_a_root(n - 1, i, j))
    return HessenbergSpace(rs, frozenset(roots))


def type_a_root(rank: int, i: int, j: int) -> Root:
    """``alpha_i + ... + alpha_{j-1}`` (1-based, ``i < j``), the root of matrix entry (i, j)."""
    return Root(int(i <= k < j) for k in range(1, rank + 1))


def type_a_positions(root: Sequence[int]) -> tuple[int, int]:
    """Inverse of :func:`type_a_root`: the pair ``(i, j)``, 1-based."""
    support = [k for k, c in enumerate(root, start=1) if c]
    return support[0], support[-1] + 1


def to_hessenberg_function(hs: HessenbergSpace) -> list[int]:
    rs = hs.rs
    if not rs.label.startswith("A") or "x" in rs.label:
        raise InputError("Hessenberg functions only exist in type A")
    n = rs.rank + 1
    h = []
    for i in range(1, n + 1):
        j = i
        while j + 1 <= n and type_a_root(rs.rank, i, j + 1) in hs.root_set:
            j += 1
        h.append(j)
    return h


def enumerate_hessenberg_spaces(rs: RootSystem, max_rank: int = MAX_ENUMERATION_RANK) -> list[HessenbergSpace]:
    """All lower-closed root sets containing the simple roots, smallest first."""
    if rs.rank > max_rank:
        raise ResourceError(f"enumerating Hessenberg spaces is limited to rank <= {max_rank}")
    roots = rs.positive_roots
    n = rs.rank
    lower_covers = []
    for r in roots:
        covers = []
        for i in range(n):
            low = list(r)
            low[i] -= 1
            low = tuple(low)
            if low in rs.index:
                covers.append(rs.index[low])
        lower_covers.append(covers)

    out = []

    def extend(k, chosen):
        if k == len(roots):
            out.append(HessenbergSpace(rs, frozenset(roots[i] for i in chosen)))
            return
        if k < n:
            extend(k + 1, chosen | {k})
            return
        extend(k + 1, chosen)
        if all(c in chosen for c in lower_covers[k]):
            extend(k + 1, chosen | {k})

    extend(0, frozenset())
    out.sort(key=lambda h: (h.dimension, sorted(rs.index[r] for r in h.root_set)))
    return out


def brute_force_hessenberg_spaces(rs: RootSystem) -> list[frozenset]:
    """Filter all supersets of the simple roots by the definition (test oracle)."""
    rest = rs.positive_roots[rs.rank:]
    found = []
    for size in range(len(rest) + 1):
        for extra in combinations(rest, size):
            s = set(rs.simple_roots) | set(extra)
            ok = all(a in s for b in s for a in rs.positive_roots if rs.leq(a, b))
            if ok:
                found.append(frozenset(s))
    return found


def maximal_nonsimple_roots(hs: HessenbergSpace) -> list[Root]:
    rs = hs.rs
    out = []
    for b in hs.roots():
        if b.height < 2:
            continue
        if not any(c != b and rs.leq(b, c) for c in hs.root_set):
            out.append(b)
    return out


def codim_one_chain(hs: HessenbergSpace) -> list[tuple[HessenbergSpace, Root]]:
    """Shrink to the simple roots one maximal root at a time.

    Each step removes the maximal non-simple root that comes last in the
    fixed enumeration; returns ``(space after removal, removed root)`` pairs.
    """
    rs = hs.rs
    chain = []
    current = hs
    while not current.is_minimal:
        cands = maximal_nonsimple_roots(current)
        alpha = max(cands, key=rs.index.__getitem__)
        current = validate_hessenberg(rs, current.root_set - {alpha})
        chain.append((current, alpha))
    return chain


# --- JSON ------------------------------------------------------------------------

def space_to_json(hs: HessenbergSpace) -> dict:
    return {"type": hs.rs.label, "roots": [list(r) for r in hs.roots()]}


def space_from_json(obj: dict, rs: RootSystem | None = None) -> HessenbergSpace:
    if "type" not in obj:
        raise InputError("Hessenberg JSON needs a 'type' field")
    if ("roots" in obj) == ("hfun" in obj):
        raise InputError("give exactly one of 'roots' or 'hfun'")
    if rs is None:
        rs = build_root_system(obj["type"])
    if "hfun" in obj:
        return from_hessenberg_function(rs.rank + 1, obj["hfun"], rs)
    return validate_hessenberg(rs, obj["roots"])
