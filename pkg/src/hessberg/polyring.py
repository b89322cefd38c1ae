"""Exact multivariate polynomials over the rationals, plus the operators the
geometry needs: inner-product derivations, Weyl group substitutions, BGG
divided differences and truncated Laurent series in one parameter.

For a root system of rank ``n`` the variables ``x_1..x_n`` are the simple
roots themselves, so a linear polynomial is a weight written in simple-root
coordinates. :class:`Polynomial` itself knows nothing about roots and is
also used for chart functions in the variables ``t_1..t_N``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Mapping, Sequence

from .errors import InputError, InternalError
from .rootsys import RootSystem, WeylElement, element_from_word

_ZERO = Fraction(0)


class Polynomial:
    """Sparse polynomial: ``{exponent tuple: Fraction}`` with no zero entries."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping | Iterable = ()):
        self.nvars = nvars
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean = {}
        for exp, c in items:
            c = Fraction(c)
            if c:
                exp = tuple(exp)
                if len(exp) != nvars:
                    raise ValueError(f"exponent {exp} does not have {nvars} entries")
                clean[exp] = clean.get(exp, _ZERO) + c
                if not clean[exp]:
                    del clean[exp]
        self.terms = clean

    @classmethod
    def _raw(cls, nvars, terms):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def constant(cls, nvars: int, c=1) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Polynomial":
        return cls(nvars, {tuple(int(k == i) for k in range(nvars)): 1})

    @classmethod
    def linear(cls, coeffs: Sequence) -> "Polynomial":
        n = len(coeffs)
        return cls(n, {tuple(int(k == i) for k in range(n)): c for i, c in enumerate(coeffs)})

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, _ZERO)

    def coefficient(self, exp: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exp), _ZERO)

    def variables(self) -> set[int]:
        return {i for e in self.terms for i, k in enumerate(e) if k}

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=-1)

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial._raw(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d})

    def sorted_terms(self) -> list:
        return sorted(self.terms.items())

    # -- arithmetic ---------------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError("polynomials over different variable sets")
            return other
        return Polynomial.constant(self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, _ZERO) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = Fraction(other)
            if not c:
                return Polynomial._raw(self.nvars, {})
            return Polynomial._raw(self.nvars, {e: c * v for e, v in self.terms.items()})
        other = self._coerce(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, _ZERO) + c1 * c2
        return Polynomial._raw(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = Fraction(other)
        return self * (1 / c)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        try:
            return self == Polynomial.constant(self.nvars, other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- evaluation and substitution --------------------------------------------

    def __call__(self, point: Sequence) -> Fraction:
        return self.evaluate(point)

    def evaluate(self, point: Sequence) -> Fraction:
        point = [Fraction(p) for p in point]
        total = _ZERO
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                if k:
                    term *= x**k
            total += term
        return total

    def substitute(self, var: int, value: "Polynomial") -> "Polynomial":
        """Replace variable ``var`` by the polynomial ``value``."""
        value = self._coerce(value)
        powers = {0: Polynomial.constant(self.nvars, 1)}
        out = Polynomial._raw(self.nvars, {})
        for e, c in self.terms.items():
            k = e[var]
            if k not in powers:
                powers[k] = value**k
            rest = list(e)
            rest[var] = 0
            out = out + Polynomial._raw(self.nvars, {tuple(rest): c}) * powers[k]
        return out

    def linear_substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Apply the algebra map ``x_j -> images[j]``."""
        out = Polynomial._raw(images[0].nvars if images else self.nvars, {})
        cache: dict = {}
        for e, c in self.terms.items():
            term = Polynomial.constant(out.nvars, c)
            for j, k in enumerate(e):
                if k:
                    key = (j, k)
                    if key not in cache:
                        cache[key] = images[j] ** k
                    term = term * cache[key]
            out = out + term
        return out

    def partial(self, i: int) -> "Polynomial":
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                out[tuple(f)] = c * e[i]
        return Polynomial._raw(self.nvars, out)

    def divide_by_variable(self, i: int) -> "Polynomial":
        """Exact division by ``x_i``; raises if there is a remainder."""
        out = {}
        for e, c in self.terms.items():
            if not e[i]:
                raise InternalError(f"polynomial is not divisible by x{i + 1}")
            f = list(e)
            f[i] -= 1
            out[tuple(f)] = c
        return Polynomial._raw(self.nvars, out)

    # -- display / serialization ----------------------------------------------------

    def to_string(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = names or [f"x{i + 1}" for i in range(self.nvars)]
        pieces = []
        for e, c in sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-k for k in t[0]))):
            mono = "*".join(f"{names[i]}^{k}" if k > 1 else names[i] for i, k in enumerate(e) if k)
            if not mono:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append("-" + mono)
            else:
                coef = f"({c})" if c.denominator != 1 else str(c)
                pieces.append(f"{coef}*{mono}")
        text = " + ".join(pieces)
        return text.replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Polynomial({self.to_string()})"

    def to_json(self) -> list:
        return [{"exponents": list(e), "coeff": str(c)} for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, nvars: int, data: list) -> "Polynomial":
        return cls(nvars, ((tuple(t["exponents"]), Fraction(t["coeff"])) for t in data))


def monomials(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """Exponent vectors of total degree ``degree`` in degree-lex order."""
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return sorted(set(out), reverse=True)


# --- root-system aware operations -----------------------------------------------

def linear_form(rs: RootSystem, v: Sequence) -> Polynomial:
    """Linear polynomial of a weight given in simple-root coordinates."""
    return Polynomial.linear([Fraction(c) for c in v])


def weight_form(rs: RootSystem, lam) -> Polynomial:
    return linear_form(rs, rs.weight_vector(lam))


def root_product(rs: RootSystem, roots: Iterable[Sequence[int]]) -> Polynomial:
    p = Polynomial.constant(rs.rank, 1)
    for r in roots:
        p = p * linear_form(rs, r)
    return p


def evaluate_at(rs: RootSystem, p: Polynomial, mu) -> Fraction:
    """Value of ``p`` at the weight ``mu``: each variable ``alpha_j`` becomes ``(alpha_j, mu)``.

    ``mu`` is anything :meth:`RootSystem.weight_vector` accepts.
    """
    return evaluate_at_vector(rs, p, rs.weight_vector(mu))


def evaluate_at_vector(rs: RootSystem, p: Polynomial, v: Sequence) -> Fraction:
    """As :func:`evaluate_at` for a weight already in simple-root coordinates."""
    return p.evaluate([rs.inner(a, v) for a in rs.simple_roots])


class Derivation:
    """The derivation ``d_f`` with ``d_f(g) = (f, g)`` on linear forms."""

    def __init__(self, rs: RootSystem, direction: Sequence):
        self.rs = rs
        self.direction = tuple(Fraction(c) for c in direction)
        self.weights = tuple(rs.inner(self.direction, a) for a in rs.simple_roots)

    def __call__(self, p: Polynomial) -> Polynomial:
        out = Polynomial._raw(p.nvars, {})
        for i, w in enumerate(self.weights):
            if w:
                out = out + p.partial(i) * w
        return out


def apply_derivation(rs: RootSystem, f: Sequence, p: Polynomial) -> Polynomial:
    return Derivation(rs, f)(p)


def apply_operator(rs: RootSystem, F: Polynomial, p: Polynomial) -> Polynomial:
    """``d_F(p)``: substitute the commuting derivations ``d_{alpha_j}`` for the variables of ``F``."""
    simple = [Derivation(rs, a) for a in rs.simple_roots]
    cache: dict = {(0,) * rs.rank: p}

    def apply_mono(e):
        if e in cache:
            return cache[e]
        j = next(i for i, k in enumerate(e) if k)
        lower = list(e)
        lower[j] -= 1
        res = simple[j](apply_mono(tuple(lower)))
        cache[e] = res
        return res

    out = Polynomial._raw(p.nvars, {})
    for e, c in F.terms.items():
        out = out + apply_mono(e) * c
    return out


def weyl_images(rs: RootSystem, w: WeylElement) -> list[Polynomial]:
    return [linear_form(rs, w.act(a)) for a in rs.simple_roots]


def weyl_act_poly(rs: RootSystem, w: WeylElement, p: Polynomial) -> Polynomial:
    """``(w p)``: the algebra automorphism extending ``alpha_j -> w(alpha_j)``."""
    return p.linear_substitute(weyl_images(rs, w))


def _reflection_images(rs: RootSystem, i: int) -> list[Polynomial]:
    cache = rs.__dict__.setdefault("_reflection_images", {})
    if i not in cache:
        cache[i] = [linear_form(rs, rs.reflect(i, a)) for a in rs.simple_roots]
    return cache[i]


def reflect(rs: RootSystem, i: int, p: Polynomial) -> Polynomial:
    return p.linear_substitute(_reflection_images(rs, i))


def divided_difference(rs: RootSystem, i: int, p: Polynomial) -> Polynomial:
    """BGG operator ``(p - s_i p) / alpha_i``."""
    return (p - reflect(rs, i, p)).divide_by_variable(i)


def divided_difference_word(rs: RootSystem, word: Sequence[int], p: Polynomial,
                            check_reduced: bool = True) -> Polynomial:
    """``d_{i1} ... d_{ik} p`` for the word ``(i1, ..., ik)`` (0-based), rightmost first."""
    if check_reduced:
        element_from_word(rs, word)
    for i in reversed(word):
        p = divided_difference(rs, i, p)
        if p.is_zero():
            break
    return p


# --- truncated Laurent series ---------------------------------------------------

class TruncatedSeries:
    """Laurent series ``sum_{k >= val} c_k t^k`` known exactly up to ``t^prec``."""

    __slots__ = ("val", "coeffs", "prec")

    def __init__(self, val: int, coeffs: Sequence, prec: int):
        self.val = val
        self.prec = prec
        self.coeffs = [Fraction(c) for c in coeffs[: max(prec - val + 1, 0)]]

    @classmethod
    def exp_linear(cls, a, prec: int) -> "TruncatedSeries":
        """``exp(a t)``."""
        a = Fraction(a)
        coeffs = [Fraction(1)]
        for k in range(1, prec + 1):
            coeffs.append(coeffs[-1] * a / k)
        return cls(0, coeffs, prec)

    def coefficient(self, k: int) -> Fraction:
        if k > self.prec:
            raise InternalError(f"coefficient t^{k} requested beyond precision t^{self.prec}")
        idx = k - self.val
        return self.coeffs[idx] if 0 <= idx < len(self.coeffs) else _ZERO

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        val = min(self.val, other.val)
        prec = min(self.prec, other.prec)
        coeffs = [self.coefficient(k) + other.coefficient(k) for k in range(val, prec + 1)]
        return TruncatedSeries(val, coeffs, prec)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            c = Fraction(other)
            return TruncatedSeries(self.val, [c * x for x in self.coeffs], self.prec)
        val = self.val + other.val
        prec = min(self.prec + other.val, other.prec + self.val)
        n = prec - val + 1
        coeffs = [_ZERO] * max(n, 0)
        a, b = self.coeffs, other.coeffs
        for i, x in enumerate(a):
            if not x or i >= n:
                continue
            for j in range(min(len(b), n - i)):
                if b[j]:
                    coeffs[i + j] += x * b[j]
        return TruncatedSeries(val, coeffs, prec)

    __rmul__ = __mul__

    def normalized(self) -> "TruncatedSeries":
        """Strip leading zero coefficients."""
        k = 0
        while k < len(self.coeffs) and not self.coeffs[k]:
            k += 1
        return TruncatedSeries(self.val + k, self.coeffs[k:], self.prec)

    def inverse(self) -> "TruncatedSeries":
        s = self.normalized()
        if not s.coeffs:
            raise InternalError("cannot invert a series with no known nonzero coefficient")
        n = len(s.coeffs)
        c0 = s.coeffs[0]
        inv = [1 / c0]
        for k in range(1, n):
            acc = sum((s.coeffs[j] * inv[k - j] for j in range(1, k + 1)), _ZERO)
            inv.append(-acc / c0)
        return TruncatedSeries(-s.val, inv, -s.val + n - 1)

    def __truediv__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self * other.inverse()

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*t^{self.val + k}" for k, c in enumerate(self.coeffs) if c)
        return f"TruncatedSeries({body or '0'} + O(t^{self.prec + 1}))"


def one_minus_exp(b, rel_len: int) -> TruncatedSeries:
    """``1 - exp(b t)`` to ``rel_len`` terms past its leading ``-b t``."""
    b = Fraction(b)
    coeffs = [_ZERO]
    term = Fraction(1)
    for k in range(1, rel_len + 1):
        term = term * b / k
        coeffs.append(-term)
    return TruncatedSeries(0, coeffs, rel_len)


def factorial(n: int) -> int:
    return math.factorial(n)


def check_nvars(p: Polynomial, rs: RootSystem) -> None:
    if p.nvars != rs.rank:
        raise InputError(f"polynomial has {p.nvars} variables, root system rank is {rs.rank}")
