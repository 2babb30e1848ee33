"""Closed-form first-row entries of Toeplitz powers and products.

Writing A = sum_j a_j U^(j-1), the k-th power expands by the multinomial
theorem into a sum over weak compositions of k; a composition contributes
to the entry whose shift offset equals its weight.  For a product
A1^k1 ... Am^km the sum runs over one composition per factor and the
offsets add.  For n <= 4 the entries also admit short explicit formulas
(a raw combinatorial form and a regrouped form built on the ratios
r_{j,t} = a_{j,t} / a_{j,1}); both are evaluated here and cross-checked
against the generic engine in the tests.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from itertools import product as cartesian

from .combinat import compositions_with_weight, multinomial, multinomial_log
from .errors import ExponentArityMismatch, ZeroLeadingCoefficient
from .exact import GaussianRational
from .toeplitz import ToeplitzCoeffs, TupleSpec

# Above this total degree the float backend evaluates terms in log space;
# the exact multinomial coefficient alone can overflow a float64 earlier
# than this only for dimensions that explode term counts anyway.
LOG_SPACE_DEGREE = 400


@dataclass(frozen=True)
class ProductEntries:
    """First row (c1(k), ..., cn(k)) of a power or product matrix."""

    entries: ToeplitzCoeffs

    @property
    def n(self) -> int:
        return self.entries.n

    def as_vector(self):
        return self.entries.as_vector()


def _normalize_index(k, m: int):
    k = tuple(k)
    if len(k) != m:
        raise ExponentArityMismatch(f"multi-index length {len(k)} != tuple length {m}")
    if any((not isinstance(v, int)) or v < 0 for v in k):
        raise ValueError(f"multi-index must be nonnegative integers, got {k}")
    return k


class _PowerCache:
    """Per-call cache of scalar powers a^e."""

    def __init__(self, values, exact: bool):
        self.values = list(values)
        self.exact = exact
        self.one = GaussianRational(1) if exact else 1 + 0j
        self._cache = {}

    def get(self, idx: int, e: int):
        if e == 0:
            return self.one
        key = (idx, e)
        got = self._cache.get(key)
        if got is None:
            got = self.values[idx] ** e
            self._cache[key] = got
        return got


def _entry_term(cache: _PowerCache, k: int, parts) -> object:
    coef = multinomial(k, parts)
    term = cache.one * coef
    for idx, e in enumerate(parts):
        if e:
            term = term * cache.get(idx, e)
    return term


def _entry_logspace(coeffs, k: int, w: int, n: int) -> complex:
    """One entry as a max-factored sum of log-magnitude/argument terms."""
    logs = []
    for c in coeffs:
        z = complex(c)
        logs.append(None if z == 0 else (math.log(abs(z)), cmath.phase(z)))
    mags, args = [], []
    for comp in compositions_with_weight(k, n, w):
        parts = comp.parts
        if any(e and logs[idx] is None for idx, e in enumerate(parts)):
            continue  # a zero coefficient raised to a positive power
        lm = multinomial_log(k, parts)
        ar = 0.0
        for idx, e in enumerate(parts):
            if e:
                lm += e * logs[idx][0]
                ar += e * logs[idx][1]
        mags.append(lm)
        args.append(ar)
    if not mags:
        return 0j
    peak = max(mags)
    acc = 0j
    for lm, ar in zip(mags, args):
        acc += cmath.rect(math.exp(lm - peak), ar)
    if peak > 700.0:  # exp overflows float64 near 709; split the factor
        half = cmath.exp(complex(peak / 2.0, 0.0))
        return acc * half * half
    return acc * math.exp(peak)


def pow_entries_multinomial(a: ToeplitzCoeffs, k: int,
                            log_space: bool | None = None) -> ProductEntries:
    """Entries of A^k summed composition by composition.

    The entry at offset w collects every weak composition of k with weight
    w, each weighted by its multinomial coefficient and coefficient powers.
    Equals pow_binary(a, k).  The float backend switches to log-space term
    evaluation for large k (or when log_space is forced) so that huge
    multinomial coefficients cannot overflow.
    """
    if not isinstance(k, int) or k < 0:
        raise ValueError(f"exponent must be a nonnegative integer, got {k!r}")
    n = a.n
    if a.exact:
        cache = _PowerCache(a.coeffs, exact=True)
        entries = []
        for w in range(n):
            acc = GaussianRational(0)
            for comp in compositions_with_weight(k, n, w):
                acc = acc + _entry_term(cache, k, comp.parts)
            entries.append(acc)
        return ProductEntries(ToeplitzCoeffs(tuple(entries), exact=True))
    if log_space is None:
        log_space = k > LOG_SPACE_DEGREE
    if log_space:
        entries = tuple(_entry_logspace(a.coeffs, k, w, n) for w in range(n))
        return ProductEntries(ToeplitzCoeffs(entries, exact=False))
    cache = _PowerCache(a.coeffs, exact=False)
    entries = []
    for w in range(n):
        acc = 0j
        for comp in compositions_with_weight(k, n, w):
            acc += _entry_term(cache, k, comp.parts)
        entries.append(acc)
    return ProductEntries(ToeplitzCoeffs(tuple(entries), exact=False))


def product_entries(tup: TupleSpec, k) -> ProductEntries:
    """Entries of A1^k1 ... Am^km by the m-fold composition sum.

    For each entry offset w the sum runs over the Cartesian product of
    per-matrix weight-filtered compositions whose weights add up to w.
    Agrees with folding pow_binary results under toeplitz_mul.
    """
    m, n = tup.m, tup.n
    k = _normalize_index(k, m)
    exact = tup.exact
    zero = GaussianRational(0) if exact else 0j
    caches = [_PowerCache(mat.coeffs, exact) for mat in tup.matrices]
    # per-matrix composition lists, bucketed by weight
    buckets = []
    for j in range(m):
        buckets.append([tuple(compositions_with_weight(k[j], n, w))
                        for w in range(n)])
    entries = []
    for w in range(n):
        acc = zero
        for split in _weight_splits(w, m):
            pools = [buckets[j][split[j]] for j in range(m)]
            if any(not pool for pool in pools):
                continue
            for combo in cartesian(*pools):
                term = caches[0].one
                for j in range(m):
                    term = term * _entry_term(caches[j], k[j], combo[j].parts)
                acc = acc + term
        entries.append(acc)
    return ProductEntries(ToeplitzCoeffs(tuple(entries), exact=exact))


def _weight_splits(total: int, slots: int):
    """Nonnegative slot weights summing to total, lexicographic."""
    if slots == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _weight_splits(total - first, slots - 1):
            yield (first,) + rest


def _ratios(tup: TupleSpec):
    """r[j][t] = a_{j,t+1} / a_{j,1} for t >= 1 (0-based offset indexing)."""
    out = []
    for mat in tup.matrices:
        lead = mat.coeffs[0]
        if (lead == GaussianRational(0)) if mat.exact else (lead == 0):
            raise ZeroLeadingCoefficient("explicit formulas divide by the diagonal value")
        out.append([mat.coeffs[t] / lead for t in range(mat.n)])
    return out


def explicit_entries(tup: TupleSpec, k, form: str = "grouped") -> ProductEntries:
    """Hard-coded product entries for n in {2, 3, 4}.

    Both printed shapes of the formulas are available: ``grouped`` builds
    the entries from the per-matrix linear sums S2, S3, S4 of coefficient
    ratios (the additive coordinates), ``raw`` spells the same entries as
    explicit sums over index configurations.  The two agree identically;
    the exact backend checks this at machine precision zero.

    All diagonal values must be nonzero.  Any tuple length m is accepted;
    the formulas sum over j = 1..m.
    """
    if form not in ("grouped", "raw"):
        raise ValueError(f"unknown form {form!r}")
    n, m = tup.n, tup.m
    if n not in (2, 3, 4):
        raise ValueError(f"explicit formulas cover n in 2..4, got n={n}")
    k = _normalize_index(k, m)
    r = _ratios(tup)
    exact = tup.exact
    one = GaussianRational(1) if exact else 1 + 0j
    zero = GaussianRational(0) if exact else 0j

    c1 = one
    for j in range(m):
        c1 = c1 * (tup.matrices[j].coeffs[0] ** k[j])

    s2 = sum((k[j] * r[j][1] for j in range(m)), zero)
    entries = [c1, c1 * s2]

    if n >= 3:
        if form == "grouped":
            s3 = sum((k[j] * (r[j][2] - r[j][1] ** 2 / 2) for j in range(m)), zero)
            entries.append(c1 * (s3 + s2 ** 2 / 2))
        else:
            acc = sum((k[j] * r[j][2] for j in range(m)), zero)
            for l in range(m):
                for j in range(l):
                    acc = acc + (k[l] * k[j]) * (r[l][1] * r[j][1])
            acc = acc + sum(((k[j] * (k[j] - 1) // 2) * r[j][1] ** 2
                             for j in range(m)), zero)
            entries.append(c1 * acc)

    if n == 4:
        if form == "grouped":
            s3 = sum((k[j] * (r[j][2] - r[j][1] ** 2 / 2) for j in range(m)), zero)
            s4 = sum((k[j] * (r[j][3] - r[j][1] * r[j][2] + r[j][1] ** 3 / 3)
                      for j in range(m)), zero)
            entries.append(c1 * (s4 + s2 * s3 + s2 ** 3 / 6))
        else:
            acc = sum((k[j] * r[j][3] for j in range(m)), zero)
            acc = acc + sum(((k[j] * (k[j] - 1)) * (r[j][1] * r[j][2])
                             for j in range(m)), zero)
            for j in range(m):
                for l in range(m):
                    if l != j:
                        acc = acc + (k[l] * k[j]) * (r[j][1] * r[l][2])
            # one single 1-unit from three distinct matrices: unordered triples
            for j in range(m):
                for l in range(j + 1, m):
                    for p in range(l + 1, m):
                        acc = acc + (k[j] * k[l] * k[p]) * (r[j][1] * r[l][1] * r[p][1])
            acc = acc + sum(((k[j] * (k[j] - 1) * (k[j] - 2) // 6) * r[j][1] ** 3
                             for j in range(m)), zero)
            for j in range(m):
                for l in range(m):
                    if l != j:
                        acc = acc + (k[j] * (k[j] - 1) * k[l] // 2 * 1) * (
                            r[j][1] ** 2 * r[l][1])
            entries.append(c1 * acc)

    return ProductEntries(ToeplitzCoeffs(tuple(entries), exact=exact))
