"""Sparse polynomials in a fixed number of variables with exact integer coefficients."""
from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Iterator, Mapping, Sequence

Exponent = tuple[int, ...]


class Polynomial:
    """Immutable map from exponent vectors to nonzero integer coefficients.

    Coefficients are Python ints, which never overflow, so multiplicity
    verdicts cannot be corrupted by wraparound.
    """

    __slots__ = ("_n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] = ()):
        if n < 0:
            raise ValueError("number of variables must be nonnegative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, int] = defaultdict(int)
        for exp, coeff in items:
            exp = tuple(exp)
            if len(exp) != n:
                raise ValueError(f"exponent {exp} has length {len(exp)}, expected {n}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            acc[exp] += coeff
        self._n = n
        self._terms = {e: c for e, c in acc.items() if c != 0}
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: dict[Exponent, int]) -> Polynomial:
        # trusted constructor: terms already canonical
        p = object.__new__(cls)
        p._n = n
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, n: int) -> Polynomial:
        return cls._raw(n, {})

    @classmethod
    def one(cls, n: int) -> Polynomial:
        return cls.monomial((0,) * n)

    @classmethod
    def monomial(cls, exponents: Sequence[int], coeff: int = 1) -> Polynomial:
        return cls(len(exponents), {tuple(exponents): coeff})

    @classmethod
    def variable(cls, n: int, i: int) -> Polynomial:
        """x_i (1-based) in n variables."""
        if not 1 <= i <= n:
            raise IndexError(f"variable x{i} outside x1..x{n}")
        return cls.monomial(tuple(int(k == i - 1) for k in range(n)))

    @property
    def n(self) -> int:
        return self._n

    def terms(self) -> list[tuple[Exponent, int]]:
        """(exponents, coefficient) pairs sorted lexicographically by exponents."""
        return sorted(self._terms.items())

    def __iter__(self) -> Iterator[tuple[Exponent, int]]:
        return iter(self.terms())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._n == other._n and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({self._n}, {dict(self.terms())!r})"

    def __str__(self) -> str:
        return format_plain(self)

    def _check(self, other: Polynomial) -> None:
        if self._n != other._n:
            raise ValueError(f"ambient mismatch: {self._n} vs {other._n} variables")

    def __add__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial._raw(self._n, out)

    def __neg__(self) -> Polynomial:
        return Polynomial._raw(self._n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other: Polynomial | int) -> Polynomial:
        if isinstance(other, int):
            return self.mul_monomial((0,) * self._n, other)
        self._check(other)
        acc: dict[Exponent, int] = defaultdict(int)
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return Polynomial._raw(self._n, {e: c for e, c in acc.items() if c})

    __rmul__ = __mul__

    def mul_monomial(self, m: Sequence[int], c: int = 1) -> Polynomial:
        """Multiply by c * x^m."""
        m = tuple(m)
        if len(m) != self._n:
            raise ValueError(f"monomial {m} does not live in {self._n} variables")
        if c == 0:
            return Polynomial.zero(self._n)
        return Polynomial._raw(
            self._n,
            {tuple(a + b for a, b in zip(e, m)): coeff * c for e, coeff in self._terms.items()},
        )

    def coefficient(self, gamma: Sequence[int]) -> int:
        gamma = tuple(gamma)
        if len(gamma) != self._n:
            raise ValueError(f"exponent {gamma} does not live in {self._n} variables")
        return self._terms.get(gamma, 0)

    def max_abs_coefficient(self) -> int:
        return max((abs(c) for c in self._terms.values()), default=0)

    def is_multiplicity_free(self) -> bool:
        return all(c == 1 for c in self._terms.values())

    def swap_variables(self, j: int) -> Polynomial:
        """s_j f: exchange x_j and x_{j+1}."""
        self._check_linear_index(j)
        out = {}
        for e, c in self._terms.items():
            e = list(e)
            e[j - 1], e[j] = e[j], e[j - 1]
            out[tuple(e)] = c
        return Polynomial._raw(self._n, out)

    def mul_linear(self, j: int) -> Polynomial:
        """Multiply by (x_j - x_{j+1})."""
        self._check_linear_index(j)
        xj = [0] * self._n
        xj[j - 1] = 1
        xk = [0] * self._n
        xk[j] = 1
        return self.mul_monomial(xj) - self.mul_monomial(xk)

    def exact_divide_linear(self, j: int) -> Polynomial:
        """Exact quotient by (x_j - x_{j+1}).

        Terms are grouped by the exponents of every other variable and by
        e_j + e_{j+1}; each group is a binary form in x_j, x_{j+1} and is
        divided by synthetic division at x_j = x_{j+1}.  For an antisymmetric
        pair this reduces to the telescoping sum
        sum_{t < a-b} x_j^{a-1-t} x_{j+1}^{b+t}.

        Raises ArithmeticError when the division is not exact.
        """
        self._check_linear_index(j)
        lo = j - 1
        groups: dict[tuple[Exponent, int], dict[int, int]] = defaultdict(dict)
        for e, c in self._terms.items():
            rest = e[:lo] + e[lo + 2:]
            groups[(rest, e[lo] + e[lo + 1])][e[lo]] = c
        out: dict[Exponent, int] = {}
        for (rest, degree), form in groups.items():
            # f(t) = sum_a c_a t^a divided by (t - 1): q_i = sum_{a > i} c_a
            running = 0
            for a in range(degree, 0, -1):
                running += form.get(a, 0)
                if running:
                    i = a - 1
                    out[rest[:lo] + (i, degree - 1 - i) + rest[lo:]] = running
            if running + form.get(0, 0) != 0:
                raise ArithmeticError(
                    f"{self!r} is not divisible by (x{j} - x{j + 1})"
                )
        return Polynomial._raw(self._n, out)

    def _check_linear_index(self, j: int) -> None:
        if not 1 <= j <= self._n - 1:
            raise IndexError(f"j={j} outside 1..{self._n - 1}")

    def to_records(self) -> list[dict]:
        return [{"exponents": list(e), "coeff": c} for e, c in self.terms()]

    @classmethod
    def from_records(cls, n: int, records: Iterable[Mapping]) -> Polynomial:
        return cls(n, [(tuple(r["exponents"]), r["coeff"]) for r in records])


def format_monomial(exponents: Sequence[int]) -> str:
    factors = [f"x{i}^{e}" for i, e in enumerate(exponents, start=1) if e]
    return " ".join(factors) if factors else "1"


def format_plain(p: Polynomial) -> str:
    """One ``c * x1^e1 x2^e2`` line per term, lexicographically decreasing."""
    if not p:
        return "0"
    return "\n".join(f"{c} * {format_monomial(e)}" for e, c in reversed(p.terms()))


def parse_plain(text: str, n: int) -> Polynomial:
    """Inverse of :func:`format_plain`."""
    terms = []
    for line in text.strip().splitlines():
        if line.strip() == "0":
            continue
        coeff, _, mono = line.partition(" * ")
        exp = [0] * n
        if mono.strip() != "1":
            for factor in mono.split():
                var, _, power = factor.partition("^")
                exp[int(var[1:]) - 1] = int(power)
        terms.append((tuple(exp), int(coeff)))
    return Polynomial(n, terms)
