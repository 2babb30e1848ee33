"""Upper triangular Toeplitz matrices in the nilpotent-shift basis.

An n x n upper triangular Toeplitz matrix is determined by its first row
(a1, ..., an): entry (i, j) equals a_{j-i+1} for j >= i and 0 below the
diagonal.  Equivalently it is the polynomial sum_j a_j U^(j-1) in the
nilpotent shift U, so multiplication is truncated convolution of first
rows.  Coefficients are 1-based in the documentation and 0-based in code.

Two scalar backends are supported: complex floats (default) and exact
Gaussian rationals, selected per matrix with the ``exact`` flag.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NotUpperToeplitz
from .exact import GaussianRational

MAX_DIM = 16

# Default structural tolerance factor for from_dense, scaled by the largest
# entry magnitude; loose enough that conjugation residuals pass.
STRUCT_TOL_FACTOR = 1e-10


def _coerce_float(value) -> complex:
    z = complex(value)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"non-finite matrix entry: {value!r}")
    return z


def shift_dense(n: int, p: int) -> np.ndarray:
    """Dense nilpotent shift: ones on the p-th superdiagonal, zero for p >= n."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    if p < 0:
        raise ValueError("shift degree must be >= 0")
    out = np.zeros((n, n), dtype=complex)
    if p < n:
        idx = np.arange(n - p)
        out[idx, idx + p] = 1.0
    return out


@dataclass(frozen=True)
class ShiftPower:
    """A power U^p of the n x n nilpotent shift."""

    n: int
    p: int

    def dense(self) -> np.ndarray:
        return shift_dense(self.n, self.p)


def convolve_coeffs(a, b, zero):
    """Truncated convolution c_r = sum_{i+j=r} a_i b_j of two first rows."""
    n = len(a)
    out = [zero] * n
    for i, ai in enumerate(a):
        for j in range(n - i):
            out[i + j] = out[i + j] + ai * b[j]
    return out


@dataclass(frozen=True)
class ToeplitzCoeffs:
    """First-row coefficients of an upper triangular Toeplitz matrix."""

    coeffs: tuple
    exact: bool = False

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if not 1 <= len(coeffs) <= MAX_DIM:
            raise ValueError(f"dimension must be in 1..{MAX_DIM}, got {len(coeffs)}")
        if self.exact:
            coeffs = tuple(GaussianRational.from_number(c) for c in coeffs)
        else:
            coeffs = tuple(_coerce_float(c) for c in coeffs)
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def n(self) -> int:
        return len(self.coeffs)

    @property
    def leading(self):
        """The diagonal value a1."""
        return self.coeffs[0]

    @classmethod
    def identity(cls, n: int, exact: bool = False) -> "ToeplitzCoeffs":
        one, zero = (1, 0)
        return cls((one,) + (zero,) * (n - 1), exact=exact)

    @classmethod
    def from_dense(cls, matrix: np.ndarray, exact: bool = False,
                   tol: float | None = None) -> "ToeplitzCoeffs":
        """Read coefficients off a dense matrix, validating the structure.

        The first row supplies the coefficients; every other entry must
        agree with it within ``tol`` (default STRUCT_TOL_FACTOR times the
        largest entry magnitude; exact inputs must match exactly).
        """
        matrix = np.asarray(matrix)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise DimensionMismatch(f"expected a square matrix, got shape {matrix.shape}")
        n = matrix.shape[0]
        if exact:
            entries = [[GaussianRational.from_number(matrix[i, j]) for j in range(n)]
                       for i in range(n)]
            for i in range(n):
                for j in range(n):
                    want = entries[0][j - i] if j >= i else GaussianRational(0)
                    if entries[i][j] != want:
                        raise NotUpperToeplitz(
                            f"entry ({i},{j}) breaks exact Toeplitz structure")
            return cls(tuple(entries[0]), exact=True)
        dense = matrix.astype(complex)
        dev = toeplitz_deviation(dense)
        if tol is None:
            tol = STRUCT_TOL_FACTOR * max(1.0, float(np.max(np.abs(dense))))
        if dev > tol:
            raise NotUpperToeplitz(
                f"structural deviation {dev:.3e} exceeds tolerance {tol:.3e}")
        return cls(tuple(dense[0]), exact=False)

    def to_dense(self) -> np.ndarray:
        """Materialize the dense matrix (object dtype in the exact backend)."""
        n = self.n
        if self.exact:
            out = np.empty((n, n), dtype=object)
            zero = GaussianRational(0)
            for i in range(n):
                for j in range(n):
                    out[i, j] = self.coeffs[j - i] if j >= i else zero
            return out
        out = np.zeros((n, n), dtype=complex)
        for d, c in enumerate(self.coeffs):
            idx = np.arange(n - d)
            out[idx, idx + d] = c
        return out

    def as_vector(self) -> np.ndarray:
        """Coefficients as a complex numpy vector (float view of exact values)."""
        return np.array([complex(c) for c in self.coeffs], dtype=complex)

    def to_exact(self) -> "ToeplitzCoeffs":
        if self.exact:
            return self
        return ToeplitzCoeffs(self.coeffs, exact=True)

    def to_float(self) -> "ToeplitzCoeffs":
        if not self.exact:
            return self
        return ToeplitzCoeffs(tuple(complex(c) for c in self.coeffs), exact=False)

    def apply(self, vec):
        """Matrix-vector product with the dense form, without materializing it."""
        n = self.n
        if len(vec) != n:
            raise DimensionMismatch(f"vector length {len(vec)} != dimension {n}")
        if self.exact:
            zero = GaussianRational(0)
            return [sum((self.coeffs[d] * vec[i + d] for d in range(n - i)), zero)
                    for i in range(n)]
        v = np.asarray(vec, dtype=complex)
        out = np.zeros(n, dtype=complex)
        for d, c in enumerate(self.coeffs):
            if c != 0:
                out[: n - d] += c * v[d:]
        return out


def toeplitz_deviation(matrix: np.ndarray) -> float:
    """Largest deviation from upper-Toeplitz structure, taking the first row
    as the reference: max over strictly-lower entries and diagonal spreads."""
    dense = np.asarray(matrix, dtype=complex)
    n = dense.shape[0]
    dev = 0.0
    for i in range(n):
        for j in range(n):
            want = dense[0, j - i] if j >= i else 0.0
            dev = max(dev, abs(dense[i, j] - want))
    return dev


def _promote(a: ToeplitzCoeffs, b: ToeplitzCoeffs):
    if a.exact == b.exact:
        return a, b
    return a.to_float(), b.to_float()


def toeplitz_mul(a: ToeplitzCoeffs, b: ToeplitzCoeffs) -> ToeplitzCoeffs:
    """Product of two Toeplitz matrices: truncated convolution of first rows."""
    if a.n != b.n:
        raise DimensionMismatch(f"dimensions differ: {a.n} != {b.n}")
    a, b = _promote(a, b)
    zero = GaussianRational(0) if a.exact else 0j
    return ToeplitzCoeffs(tuple(convolve_coeffs(a.coeffs, b.coeffs, zero)), exact=a.exact)


def pow_binary(a: ToeplitzCoeffs, k: int) -> ToeplitzCoeffs:
    """k-th power by repeated squaring; the oracle for the closed forms."""
    if not isinstance(k, int) or k < 0:
        raise ValueError(f"exponent must be a nonnegative integer, got {k!r}")
    result = ToeplitzCoeffs.identity(a.n, exact=a.exact)
    base = a
    while k:
        if k & 1:
            result = toeplitz_mul(result, base)
        base = toeplitz_mul(base, base)
        k >>= 1
    return result


@dataclass(frozen=True)
class TupleSpec:
    """A tuple (A1, ..., Am) of same-size Toeplitz matrices.

    Mixed backends are promoted to float.  Members commute pairwise by
    construction (they are polynomials in the same shift).
    """

    matrices: tuple

    def __post_init__(self):
        mats = tuple(self.matrices)
        if not mats:
            raise ValueError("tuple must contain at least one matrix")
        if not all(isinstance(m, ToeplitzCoeffs) for m in mats):
            raise TypeError("TupleSpec members must be ToeplitzCoeffs")
        n = mats[0].n
        if any(m.n != n for m in mats):
            raise DimensionMismatch("tuple members must share one dimension")
        if any(m.exact != mats[0].exact for m in mats):
            mats = tuple(m.to_float() for m in mats)
        object.__setattr__(self, "matrices", mats)

    @property
    def n(self) -> int:
        return self.matrices[0].n

    @property
    def m(self) -> int:
        return len(self.matrices)

    @property
    def exact(self) -> bool:
        return self.matrices[0].exact

    @classmethod
    def of(cls, *matrices: ToeplitzCoeffs) -> "TupleSpec":
        return cls(tuple(matrices))

    @classmethod
    def from_rows(cls, rows, exact: bool = False) -> "TupleSpec":
        return cls(tuple(ToeplitzCoeffs(tuple(r), exact=exact) for r in rows))

    def to_dense_list(self):
        return [m.to_dense() for m in self.matrices]

    def to_exact(self) -> "TupleSpec":
        return TupleSpec(tuple(m.to_exact() for m in self.matrices))

    def to_float(self) -> "TupleSpec":
        return TupleSpec(tuple(m.to_float() for m in self.matrices))
