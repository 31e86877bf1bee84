"""Weak compositions and the combinatorics built on them.

A weak composition is stored as a plain ``tuple[int, ...]``.  Every public
function speaks 1-based indices, so ``alpha[i - 1]`` is the part written
alpha_i in the literature.
"""
from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Sequence

Composition = tuple[int, ...]

# Sentinel value attached to index 0.  A float infinity compares exactly
# against Python ints, so no magic large integer is needed.
INFINITY = math.inf

KM_PATTERNS: tuple[Composition, ...] = (
    (0, 1, 2),
    (0, 0, 2, 2),
    (0, 0, 2, 1),
    (1, 0, 3, 2),
    (1, 0, 2, 2),
)


def as_composition(parts: Iterable[int]) -> Composition:
    """Validate ``parts`` and return them as a tuple."""
    alpha = tuple(parts)
    for idx, value in enumerate(alpha, start=1):
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"part {idx} is not an integer: {value!r}")
        if value < 0:
            raise ValueError(f"part {idx} is negative: {value}")
    return alpha


_TOKEN = re.compile(r"\s*([^,\s]+)\s*")


def parse_composition(text: str) -> Composition:
    """Parse ``"0,2,1,2"`` or ``"[0,2,1,2]"`` into a composition.

    Raises ValueError naming the 1-based character position of the first
    offending token.
    """
    body = text.strip()
    offset = len(text) - len(text.lstrip())
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
        offset += 1
    if not body.strip():
        raise ValueError("empty composition")
    parts = []
    pos = 0
    for chunk in body.split(","):
        m = _TOKEN.fullmatch(chunk)
        where = offset + pos + 1
        if m is None:
            raise ValueError(f"empty part at position {where}")
        token = m.group(1)
        where += chunk.index(token)
        if not token.isdigit():
            raise ValueError(f"invalid part {token!r} at position {where}: expected a nonnegative integer")
        parts.append(int(token))
        pos += len(chunk) + 1
    return tuple(parts)


def format_composition(alpha: Sequence[int]) -> str:
    return ",".join(str(a) for a in alpha)


def find_pattern(alpha: Sequence[int], beta: Sequence[int]) -> tuple[int, ...] | None:
    """Return the first (lexicographic) 1-based positions embedding ``beta`` in ``alpha``.

    An embedding j_1 < ... < j_k must be order-isomorphic to ``beta``
    (alpha_{j_s} <= alpha_{j_t} iff beta_s <= beta_t) and must not shrink any
    gap (|alpha_{j_s} - alpha_{j_t}| >= |beta_s - beta_t|).  Returns None if
    ``alpha`` avoids ``beta``.
    """
    k = len(beta)
    if k == 0:
        raise ValueError("pattern must have at least one part")
    if k > len(alpha):
        return None
    pairs = [(s, t) for s in range(k) for t in range(k) if s != t]
    for idx in combinations(range(len(alpha)), k):
        sub = [alpha[i] for i in idx]
        if all(
            (sub[s] <= sub[t]) == (beta[s] <= beta[t])
            and abs(sub[s] - sub[t]) >= abs(beta[s] - beta[t])
            for s, t in pairs
        ):
            return tuple(i + 1 for i in idx)
    return None


def contains_pattern(alpha: Sequence[int], beta: Sequence[int]) -> bool:
    return find_pattern(alpha, beta) is not None


def km_witness(alpha: Sequence[int]) -> tuple[Composition, tuple[int, ...]] | None:
    """First KM pattern contained in ``alpha`` together with its positions."""
    for pattern in KM_PATTERNS:
        positions = find_pattern(alpha, pattern)
        if positions is not None:
            return pattern, positions
    return None


def avoids_km(alpha: Sequence[int]) -> bool:
    return km_witness(alpha) is None


def flat(alpha: Sequence[int]) -> Composition:
    return tuple(a for a in alpha if a != 0)


def dominance_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """``a <=_Dom b``: every prefix sum of ``b`` is at least that of ``a``."""
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} != {len(b)}")
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sb < sa:
            return False
    return True


def left_swaps(alpha: Sequence[int]) -> set[Composition]:
    """All compositions reached by exchanging alpha_i < alpha_j with i < j."""
    alpha = tuple(alpha)
    out = set()
    for i, j in combinations(range(len(alpha)), 2):
        if alpha[i] < alpha[j]:
            gamma = list(alpha)
            gamma[i], gamma[j] = gamma[j], gamma[i]
            out.add(tuple(gamma))
    return out


def lswap_closure(alpha: Sequence[int]) -> list[Composition]:
    """Reflexive-transitive closure of :func:`left_swaps`, sorted lexicographically."""
    start = tuple(alpha)
    seen = {start}
    queue = deque([start])
    while queue:
        for gamma in left_swaps(queue.popleft()):
            if gamma not in seen:
                seen.add(gamma)
                queue.append(gamma)
    return sorted(seen)


def qlswap(alpha: Sequence[int]) -> list[Composition]:
    """Members of the left-swap closure that are dominance-minimal within their flattening class."""
    closure = lswap_closure(alpha)
    classes: dict[Composition, list[Composition]] = {}
    for gamma in closure:
        classes.setdefault(flat(gamma), []).append(gamma)
    return [
        gamma
        for gamma in closure
        if all(dominance_leq(gamma, tau) for tau in classes[flat(gamma)])
    ]


def part(alpha: Sequence[int], i: int) -> int | float:
    """alpha_i with the conventions alpha_0 = infinity and alpha_{n+1} = 0."""
    if i == 0:
        return INFINITY
    if i == len(alpha) + 1:
        return 0
    if not 1 <= i <= len(alpha):
        raise IndexError(f"index {i} outside 0..{len(alpha) + 1}")
    return alpha[i - 1]


@dataclass(frozen=True)
class Segment:
    start: int
    stop: int  # exclusive
    seg1: tuple[int, ...]
    seg2: tuple[int, ...]
    seg3: tuple[int, ...]

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(range(self.start, self.stop))


@dataclass(frozen=True)
class SegmentDecomposition:
    """Ascent indices i_1 < ... < i_k and the segments they cut out.

    ``bounds`` holds i_0 = 1, i_1, ..., i_k, i_{k+1} = n + 1, so segment m
    (1-based) covers ``range(bounds[m - 1], bounds[m])``.
    """

    alpha: Composition
    ascents: tuple[int, ...]
    segments: tuple[Segment, ...]

    @property
    def k(self) -> int:
        return len(self.ascents)

    @property
    def bounds(self) -> tuple[int, ...]:
        return (1, *self.ascents, len(self.alpha) + 1)

    def segment(self, m: int) -> Segment:
        return self.segments[m - 1]

    def segment_of(self, b: int) -> int:
        """The m with b in Seg^(m)."""
        for m, seg in enumerate(self.segments, start=1):
            if seg.start <= b < seg.stop:
                return m
        raise IndexError(f"index {b} outside 1..{len(self.alpha)}")


def segment_decomposition(alpha: Sequence[int]) -> SegmentDecomposition:
    alpha = tuple(alpha)
    n = len(alpha)
    ascents = tuple(i for i in range(2, n + 1) if alpha[i - 2] < alpha[i - 1])
    bounds = (1, *ascents, n + 1)
    k = len(ascents)
    segments = []
    for m in range(1, k + 2):
        lo, hi = bounds[m - 1], bounds[m]
        top = part(alpha, hi)  # alpha_{i_m}, 0 for the last segment
        cap = min(part(alpha, lo - 1), top)
        seg1 = tuple(b for b in range(lo, hi) if alpha[b - 1] >= top)
        seg2 = tuple(b for b in range(lo, hi) if alpha[b - 1] < cap and b < hi - 1)
        seg3 = () if m == k + 1 else (hi - 1,)
        segments.append(Segment(lo, hi, seg1, seg2, seg3))
    return SegmentDecomposition(alpha, ascents, tuple(segments))


def rmin_rmax_flex(alpha: Sequence[int], b: int) -> tuple[int, int, int]:
    """The (rmin_b, rmax_b, flex_b) statistics of ``alpha``.

    rmax may equal n + 1, in which case its part is the sentinel 0.
    """
    alpha = tuple(alpha)
    n = len(alpha)
    if not 1 <= b <= n:
        raise IndexError(f"b={b} outside 1..{n}")
    dec = segment_decomposition(alpha)
    m = dec.segment_of(b)
    prev_low = dec.bounds[m - 1] - 1  # i_{m-1} - 1
    next_ascent = dec.bounds[m]  # i_m
    rmin = b if part(alpha, prev_low) >= alpha[b - 1] else prev_low
    rmax = b + 1 if part(alpha, b + 1) >= part(alpha, next_ascent) else next_ascent
    hi, lo = part(alpha, rmax), part(alpha, rmin)
    flex = int(hi - lo - 1) if hi > lo else 0
    return rmin, rmax, flex


def flex(alpha: Sequence[int], b: int) -> int:
    return rmin_rmax_flex(alpha, b)[2]


def compositions_grid(n: int, max_part: int, min_part: int = 0) -> Iterable[Composition]:
    """All compositions of length n with parts in [min_part, max_part], lexicographically."""
    return product(range(min_part, max_part + 1), repeat=n)
