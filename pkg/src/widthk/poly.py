"""
Exact sparse polynomials over the integers.

LaurentPoly is univariate in q and allows negative exponents, which the
signed descent-difference generating functions need.  MultiPoly tracks one
exponent per named variable and is used for joint descent distributions.
Coefficients are plain Python ints, so nothing here ever rounds.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .errors import InvalidInputError


class LaurentPoly:
    """
    A Laurent polynomial in q with integer coefficients, stored sparsely
    as exponent -> coefficient.

    >>> p = LaurentPoly({0: 1, 1: 1})
    >>> p * p
    LaurentPoly({0: 1, 1: 2, 2: 1})
    >>> print(p.shift(-1))
    q^-1 + 1
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            if c:
                acc[e] = acc.get(e, 0) + c
                if not acc[e]:
                    del acc[e]
        self._terms = acc

    @staticmethod
    def _coerce(other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly({0: other})
        raise TypeError(f"cannot combine LaurentPoly with {type(other).__name__}")

    def terms(self) -> list[tuple[int, int]]:
        """Nonzero (exponent, coefficient) pairs in ascending exponent order."""
        return sorted(self._terms.items())

    def coeff(self, e: int) -> int:
        return self._terms.get(e, 0)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        """Largest exponent; raises on the zero polynomial."""
        if not self._terms:
            raise InvalidInputError("zero polynomial has no degree")
        return max(self._terms)

    @property
    def valuation(self) -> int:
        """Smallest exponent; raises on the zero polynomial."""
        if not self._terms:
            raise InvalidInputError("zero polynomial has no valuation")
        return min(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        other = self._coerce(other)
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: int) -> "LaurentPoly":
        return self._coerce(other) + (-self)

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if exponent < 0:
            raise InvalidInputError("negative powers of a polynomial are not defined")
        out = LaurentPoly({0: 1})
        base = self
        e = exponent
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def shift(self, s: int) -> "LaurentPoly":
        """Multiply by q^s."""
        return LaurentPoly({e + s: c for e, c in self._terms.items()})

    def inverse_q(self) -> "LaurentPoly":
        """Substitute q -> 1/q, i.e. negate every exponent."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def __call__(self, x: int | Fraction) -> int | Fraction:
        """Evaluate exactly; negative exponents go through Fraction."""
        total: int | Fraction = 0
        for e, c in self._terms.items():
            total += c * (Fraction(x) ** e if e < 0 else x**e)
        if isinstance(total, Fraction) and total.denominator == 1:
            return int(total)
        return total

    def to_json(self) -> dict:
        return {"terms": [[e, c] for e, c in self.terms()]}

    @classmethod
    def from_json(cls, data: Mapping) -> "LaurentPoly":
        return cls((int(e), int(c)) for e, c in data["terms"])

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(self.terms())})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for e, c in self.terms():
            if e == 0:
                body = str(abs(c))
            else:
                q = "q" if e == 1 else f"q^{e}"
                body = q if abs(c) == 1 else f"{abs(c)}*{q}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(parts)


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
Q = LaurentPoly({1: 1})


def q_power(e: int, c: int = 1) -> LaurentPoly:
    """The monomial c * q^e."""
    return LaurentPoly({e: c})


def q_integer(m: int) -> LaurentPoly:
    """[m]_q = 1 + q + ... + q^(m-1).

    >>> print(q_integer(3))
    1 + q + q^2
    """
    if m < 0:
        raise InvalidInputError(f"q-integer needs m >= 0, got {m}")
    return LaurentPoly({e: 1 for e in range(m)})


def q_factorial(m: int) -> LaurentPoly:
    """[m]_q! = [1]_q [2]_q ... [m]_q.

    >>> print(q_factorial(3))
    1 + 2*q + 2*q^2 + q^3
    """
    if m < 0:
        raise InvalidInputError(f"q-factorial needs m >= 0, got {m}")
    out = ONE
    for i in range(1, m + 1):
        out = out * q_integer(i)
    return out


@lru_cache(maxsize=None)
def _eulerian_row(n: int) -> tuple[int, ...]:
    # row[j] counts permutations of n letters with j descents
    if n == 0:
        return (1,)
    prev = _eulerian_row(n - 1)
    row = [0] * max(n, 1)
    for j in range(len(row)):
        row[j] = (j + 1) * (prev[j] if j < len(prev) else 0)
        if j >= 1:
            row[j] += (n - j) * prev[j - 1]
    while len(row) > 1 and row[-1] == 0:
        row.pop()
    return tuple(row)


def eulerian_poly(n: int) -> LaurentPoly:
    """The Eulerian polynomial A_n(q), the descent distribution on n letters.

    >>> print(eulerian_poly(3))
    1 + 4*q + q^2
    >>> print(eulerian_poly(5))
    1 + 26*q + 66*q^2 + 26*q^3 + q^4
    """
    if n < 0:
        raise InvalidInputError(f"Eulerian polynomial needs n >= 0, got {n}")
    return LaurentPoly(dict(enumerate(_eulerian_row(n))))


def catalan(n: int) -> int:
    """The n-th Catalan number.

    >>> [catalan(n) for n in range(7)]
    [1, 1, 2, 5, 14, 42, 132]
    """
    if n < 0:
        raise InvalidInputError(f"Catalan number needs n >= 0, got {n}")
    return math.comb(2 * n, n) // (n + 1)


def block_multinomial(n: int, k: int) -> int:
    """
    Ways to distribute n letters into the width-k block shape: with
    n = dk + r this is n! / ((d+1)!^r * d!^(k-r)).
    """
    if k < 1 or n < 0:
        raise InvalidInputError(f"need n >= 0 and k >= 1, got n={n}, k={k}")
    d, r = divmod(n, k)
    denom = math.factorial(d + 1) ** r * math.factorial(d) ** (k - r)
    quotient, leftover = divmod(math.factorial(n), denom)
    assert not leftover
    return quotient


class MultiPoly:
    """
    A polynomial in a fixed tuple of named variables, stored sparsely as
    exponent-vector -> coefficient.  Exponents are nonnegative.

    >>> t = MultiPoly.gens(("t1", "t2"))
    >>> print(t["t1"] * t["t2"] + 2 * t["t1"])
    2*t1 + t1*t2
    """

    __slots__ = ("vars", "_terms")

    def __init__(
        self,
        variables: Sequence[str],
        terms: Mapping[tuple[int, ...], int] | Iterable[tuple[tuple[int, ...], int]] = (),
    ):
        self.vars = tuple(variables)
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, ...], int] = {}
        for exps, c in items:
            exps = tuple(exps)
            if len(exps) != len(self.vars):
                raise InvalidInputError(
                    f"exponent vector {exps!r} does not match variables {self.vars!r}"
                )
            if any(e < 0 for e in exps):
                raise InvalidInputError(f"negative exponent in {exps!r}")
            if c:
                acc[exps] = acc.get(exps, 0) + c
                if not acc[exps]:
                    del acc[exps]
        self._terms = acc

    @classmethod
    def one(cls, variables: Sequence[str]) -> "MultiPoly":
        return cls(variables, {(0,) * len(tuple(variables)): 1})

    @classmethod
    def monomial(
        cls, variables: Sequence[str], exps: Sequence[int], coeff: int = 1
    ) -> "MultiPoly":
        return cls(variables, {tuple(exps): coeff})

    @classmethod
    def gens(cls, variables: Sequence[str]) -> dict[str, "MultiPoly"]:
        """One degree-one monomial per variable, keyed by name."""
        variables = tuple(variables)
        out = {}
        for i, v in enumerate(variables):
            exps = tuple(1 if j == i else 0 for j in range(len(variables)))
            out[v] = cls(variables, {exps: 1})
        return out

    def _check_vars(self, other: "MultiPoly") -> None:
        if self.vars != other.vars:
            raise InvalidInputError(
                f"variable mismatch: {self.vars!r} vs {other.vars!r}"
            )

    def terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self._terms.items())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = MultiPoly(self.vars, {(0,) * len(self.vars): other})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.vars == other.vars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.vars, frozenset(self._terms.items())))

    def __add__(self, other: "MultiPoly | int") -> "MultiPoly":
        if isinstance(other, int):
            other = MultiPoly(self.vars, {(0,) * len(self.vars): other})
        self._check_vars(other)
        acc = dict(self._terms)
        for exps, c in other._terms.items():
            acc[exps] = acc.get(exps, 0) + c
        return MultiPoly(self.vars, acc)

    __radd__ = __add__

    def __mul__(self, other: "MultiPoly | int") -> "MultiPoly":
        if isinstance(other, int):
            return MultiPoly(
                self.vars, {exps: c * other for exps, c in self._terms.items()}
            )
        self._check_vars(other)
        acc: dict[tuple[int, ...], int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, 0) + c1 * c2
        return MultiPoly(self.vars, acc)

    __rmul__ = __mul__

    def reflect(self, caps: Sequence[int]) -> "MultiPoly":
        """
        Send each exponent vector e to caps - e componentwise.  This is the
        substitution t_i -> 1/t_i followed by multiplying through by the
        monomial with exponents caps, and it needs every cap to dominate.
        """
        caps = tuple(caps)
        if len(caps) != len(self.vars):
            raise InvalidInputError(
                f"caps {caps!r} do not match variables {self.vars!r}"
            )
        acc = {}
        for exps, c in self._terms.items():
            flipped = tuple(m - e for m, e in zip(caps, exps))
            if any(e < 0 for e in flipped):
                raise InvalidInputError(
                    f"exponent vector {exps!r} exceeds caps {caps!r}"
                )
            acc[flipped] = c
        return MultiPoly(self.vars, acc)

    def set_to_one_except(self, var: str) -> LaurentPoly:
        """Set every other variable to 1, leaving a univariate polynomial."""
        if var not in self.vars:
            raise InvalidInputError(f"unknown variable {var!r}")
        i = self.vars.index(var)
        acc: dict[int, int] = {}
        for exps, c in self._terms.items():
            acc[exps[i]] = acc.get(exps[i], 0) + c
        return LaurentPoly(acc)

    def grade(self, weights: Sequence[int]) -> LaurentPoly:
        """
        Substitute q^(w_i) for the i-th variable: each term lands on the
        exponent dot(weights, exps).  Weight vectors of 0/1 entries realize
        the usual set-all-others-to-one specializations.
        """
        weights = tuple(weights)
        if len(weights) != len(self.vars):
            raise InvalidInputError(
                f"weights {weights!r} do not match variables {self.vars!r}"
            )
        acc: dict[int, int] = {}
        for exps, c in self._terms.items():
            e = sum(w * x for w, x in zip(weights, exps))
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    def at_ones(self) -> int:
        return sum(self._terms.values())

    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [[list(exps), c] for exps, c in self.terms()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "MultiPoly":
        return cls(
            tuple(data["vars"]),
            ((tuple(int(e) for e in exps), int(c)) for exps, c in data["terms"]),
        )

    def __repr__(self) -> str:
        return f"MultiPoly({self.vars!r}, {dict(self.terms())})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for exps, c in self.terms():
            factors = []
            for v, e in zip(self.vars, exps):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(c))] + factors)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(parts)
