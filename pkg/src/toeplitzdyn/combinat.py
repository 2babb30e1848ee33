"""Weak-composition enumeration and multinomial coefficients.

The closed-form expansion of Toeplitz powers sums over weak compositions
(k1, ..., kn) of the exponent k, grouped by the weight
w = k2 + 2*k3 + ... + (n-1)*kn, which is the shift degree the composition
contributes.  These enumerators are the index sets of those sums.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterator, NamedTuple

from .errors import PartsSumMismatch


class WeakComposition(NamedTuple):
    parts: tuple
    weight: int


def composition_weight(parts) -> int:
    """Weight sum_{i>=1} i * parts[i] (0-based positions)."""
    return sum(i * p for i, p in enumerate(parts))


def count_weak_compositions(k: int, n: int) -> int:
    """Stars and bars: C(k + n - 1, n - 1)."""
    return math.comb(k + n - 1, n - 1)


def weak_compositions(k: int, n: int) -> Iterator[WeakComposition]:
    """All nonnegative integer n-tuples summing to k, in lexicographic order."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if n < 1:
        raise ValueError("n must be >= 1")

    def rec(remaining: int, slots: int):
        if slots == 1:
            yield (remaining,)
            return
        for first in range(remaining + 1):
            for tail in rec(remaining - first, slots - 1):
                yield (first,) + tail

    for parts in rec(k, n):
        yield WeakComposition(parts, composition_weight(parts))


@lru_cache(maxsize=65536)
def _shifted_tails(budget: int, weight: int, positions: int, base: int) -> tuple:
    """Tuples (t1, ..., t_positions) with sum ti <= budget and
    sum (base + i - 1) * ti == weight; slot i carries weight base + i - 1."""
    if positions == 0:
        return ((),) if weight == 0 else ()
    out = []
    for count in range(min(budget, weight // base) + 1):
        rest = _shifted_tails(budget - count, weight - count * base,
                              positions - 1, base + 1)
        for tail in rest:
            out.append((count,) + tail)
    return tuple(out)


def compositions_with_weight(k: int, n: int, w: int) -> Iterator[WeakComposition]:
    """Weak compositions of k into n parts whose weight equals w.

    The union over all w reproduces weak_compositions(k, n).  Emitted in
    lexicographic order of the full tuple.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if n < 1:
        raise ValueError("n must be >= 1")
    if w < 0 or w > (n - 1) * k:
        return
    found = []
    for tail in _shifted_tails(k, w, n - 1, 1):
        used = sum(tail)
        if used <= k:
            found.append((k - used,) + tail)
    found.sort()
    for parts in found:
        yield WeakComposition(parts, w)


def multinomial(k: int, parts) -> int:
    """Exact multinomial coefficient k! / prod parts[i]!."""
    parts = tuple(parts)
    if any(p < 0 for p in parts) or sum(parts) != k:
        raise PartsSumMismatch(f"parts {parts} do not sum to {k}")
    coef = 1
    remaining = k
    for p in parts:
        coef *= math.comb(remaining, p)
        remaining -= p
    return coef


def multinomial_log(k: int, parts) -> float:
    """log of the multinomial coefficient, for overflow-safe term evaluation."""
    parts = tuple(parts)
    if any(p < 0 for p in parts) or sum(parts) != k:
        raise PartsSumMismatch(f"parts {parts} do not sum to {k}")
    return math.lgamma(k + 1) - sum(math.lgamma(p + 1) for p in parts)
