"""Key polynomials through the isobaric divided-difference recursion."""
from __future__ import annotations

from functools import lru_cache
from typing import Literal, Sequence

from keypoly.polynomial import Polynomial

Strategy = Literal["leftmost", "rightmost"]


def demazure_pi(f: Polynomial, j: int) -> Polynomial:
    """(x_j f - x_{j+1} s_j f) / (x_j - x_{j+1})."""
    n = f.n
    if not 1 <= j <= n - 1:
        raise IndexError(f"j={j} outside 1..{n - 1}")
    xj = tuple(int(k == j - 1) for k in range(n))
    xk = tuple(int(k == j) for k in range(n))
    numerator = f.mul_monomial(xj) - f.swap_variables(j).mul_monomial(xk)
    return numerator.exact_divide_linear(j)


def ascents(alpha: Sequence[int]) -> list[int]:
    """1-based j with alpha_{j+1} > alpha_j."""
    return [j for j in range(1, len(alpha)) if alpha[j] > alpha[j - 1]]


def key_polynomial_demazure(alpha: Sequence[int], strategy: Strategy = "leftmost") -> Polynomial:
    """kappa_alpha by repeatedly sorting an ascent and applying pi_j.

    ``strategy`` picks which ascent is undone first; every choice gives the
    same polynomial, and the leftmost one is the canonical path.
    """
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    return _key(tuple(alpha), strategy)


@lru_cache(maxsize=None)
def _key(alpha: tuple[int, ...], strategy: str) -> Polynomial:
    asc = ascents(alpha)
    if not asc:
        return Polynomial.monomial(alpha)
    j = asc[0] if strategy == "leftmost" else asc[-1]
    hat = list(alpha)
    hat[j - 1], hat[j] = hat[j], hat[j - 1]
    return demazure_pi(_key(tuple(hat), strategy), j)


def clear_cache() -> None:
    _key.cache_clear()
