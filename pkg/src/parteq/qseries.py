"""Exact truncated power series in q and the two generating-function identities.

Everything here is integer arithmetic on coefficient lists truncated at a
fixed degree N. Denominator factors 1/(1 - q^e) are applied one at a time
via the prefix recurrence c'_i = c_i + c'_{i-e}; numerators multiply
factor by factor, so no dense inversion of large products is ever needed.

lhs_series / rhs_series build the two sides of the finite-bound identity;
the coefficient of q^n on the left counts A(n,k,d,m) and on the right
counts B(n,k,d,m). solutionI_check verifies the classical identity behind
the original Monthly problem.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import DegreeMismatch, DomainError, NotInvertible, OutOfRange


@dataclass(frozen=True)
class TruncatedSeries:
    """Formal power series in q, kept exactly up to degree truncation_degree."""

    truncation_degree: int
    coefficients: tuple[int, ...]

    def __post_init__(self):
        if len(self.coefficients) != self.truncation_degree + 1:
            raise ValueError("coefficient list must have length N + 1")

    @classmethod
    def one(cls, N: int) -> "TruncatedSeries":
        return cls(N, (1,) + (0,) * N)

    @classmethod
    def monomial(cls, e: int, N: int) -> "TruncatedSeries":
        """q^e truncated at N (the zero series when e > N)."""
        coeffs = [0] * (N + 1)
        if 0 <= e <= N:
            coeffs[e] = 1
        return cls(N, tuple(coeffs))

    @classmethod
    def from_coefficients(cls, coeffs, N: int | None = None) -> "TruncatedSeries":
        coeffs = list(coeffs)
        if N is None:
            N = len(coeffs) - 1
        coeffs = (coeffs + [0] * (N + 1))[: N + 1]
        return cls(N, tuple(coeffs))

    def coefficient(self, e: int) -> int:
        if not 0 <= e <= self.truncation_degree:
            raise OutOfRange(f"exponent {e} outside [0, {self.truncation_degree}]")
        return self.coefficients[e]

    def mul(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Cauchy product truncated at N."""
        if self.truncation_degree != other.truncation_degree:
            raise DegreeMismatch(
                f"degrees {self.truncation_degree} and {other.truncation_degree} differ"
            )
        N = self.truncation_degree
        out = [0] * (N + 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j in range(N + 1 - i):
                b = other.coefficients[j]
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(N, tuple(out))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self.mul(other)

    def inverse(self) -> "TruncatedSeries":
        """Reciprocal series, by the standard coefficient recurrence."""
        c0 = self.coefficients[0]
        if c0 not in (1, -1):
            raise NotInvertible(f"constant coefficient {c0} not in {{1, -1}}")
        N = self.truncation_degree
        inv = [0] * (N + 1)
        inv[0] = c0
        for e in range(1, N + 1):
            acc = sum(self.coefficients[i] * inv[e - i] for i in range(1, e + 1))
            inv[e] = -c0 * acc
        return TruncatedSeries(N, tuple(inv))

    def times_factor(self, e: int) -> "TruncatedSeries":
        """Multiply by (1 - q^e)."""
        N = self.truncation_degree
        out = list(self.coefficients)
        for i in range(N, e - 1, -1):
            out[i] -= self.coefficients[i - e]
        return TruncatedSeries(N, tuple(out))

    def times_inverse_factor(self, e: int) -> "TruncatedSeries":
        """Multiply by 1/(1 - q^e) = 1 + q^e + q^2e + ..., via prefix sums."""
        if e < 1:
            raise DomainError(f"factor exponent must be >= 1, got {e}")
        N = self.truncation_degree
        out = list(self.coefficients)
        for i in range(e, N + 1):
            out[i] += out[i - e]
        return TruncatedSeries(N, tuple(out))

    def shift(self, e: int) -> "TruncatedSeries":
        """Multiply by q^e."""
        N = self.truncation_degree
        if e > N:
            return TruncatedSeries(N, (0,) * (N + 1))
        return TruncatedSeries(N, (0,) * e + self.coefficients[: N + 1 - e])

    def to_json(self) -> str:
        # decimal strings keep unbounded coefficients bit-exact in JSON
        return json.dumps(
            {
                "truncation_degree": self.truncation_degree,
                "coefficients": [str(c) for c in self.coefficients],
            }
        )


@dataclass(frozen=True)
class PochhammerSpec:
    """(q^offset; q^step)_length; length None means infinite."""

    offset: int
    step: int
    length: int | None

    def __post_init__(self):
        if self.offset < 1 or self.step < 1:
            raise ValueError("offset and step must be >= 1")
        if self.length is not None and self.length < 0:
            raise ValueError("length must be >= 0")

    def exponents(self, N: int):
        """Exponents offset + j*step contributing below the truncation degree."""
        j = 0
        while self.length is None or j < self.length:
            e = self.offset + j * self.step
            if self.length is None and e > N:
                return
            yield e
            j += 1


def pochhammer(spec: PochhammerSpec, N: int) -> TruncatedSeries:
    """The product of (1 - q^e) over the spec's exponents, truncated at N."""
    s = TruncatedSeries.one(N)
    for e in spec.exponents(N):
        if e <= N:
            s = s.times_factor(e)
    return s


def _divided_by_pochhammer(s: TruncatedSeries, spec: PochhammerSpec) -> TruncatedSeries:
    """Multiply s by 1 / (q^offset; q^step)_length, one factor at a time."""
    N = s.truncation_degree
    for e in spec.exponents(N):
        if e <= N:
            s = s.times_inverse_factor(e)
    return s


def _times_pochhammer(s: TruncatedSeries, spec: PochhammerSpec) -> TruncatedSeries:
    N = s.truncation_degree
    for e in spec.exponents(N):
        if e <= N:
            s = s.times_factor(e)
    return s


def lhs_series(k: int, d: int, m: int, N: int) -> TruncatedSeries:
    """q^{dk} / (q^d;q^d)_k * (q^d;q^d)_m / (q;q)_{dm}; counts A(n,k,d,m) at q^n."""
    _require_positive(k=k, d=d, m=m)
    s = TruncatedSeries.monomial(d * k, N)
    s = _divided_by_pochhammer(s, PochhammerSpec(d, d, k))
    s = _times_pochhammer(s, PochhammerSpec(d, d, m))
    s = _divided_by_pochhammer(s, PochhammerSpec(1, 1, d * m))
    return s


def rhs_series(k: int, d: int, m: int, N: int) -> TruncatedSeries:
    """The branch-dependent right-hand side; counts B(n,k,d,m) at q^n.

    m <  k: q^{kd} / (q^{d(m+1)};q^d)_{k-m} / (q;q)_{md}
    m >= k: q^{kd} / (q;q)_k * (q^{d(k+1)};q^d)_{m-k} / (q^{k+1};q)_{m-k}
                   / (q^{m+1};q)_{md-m}
    """
    _require_positive(k=k, d=d, m=m)
    s = TruncatedSeries.monomial(k * d, N)
    if m < k:
        s = _divided_by_pochhammer(s, PochhammerSpec(d * (m + 1), d, k - m))
        s = _divided_by_pochhammer(s, PochhammerSpec(1, 1, m * d))
    else:
        s = _divided_by_pochhammer(s, PochhammerSpec(1, 1, k))
        s = _times_pochhammer(s, PochhammerSpec(d * (k + 1), d, m - k))
        s = _divided_by_pochhammer(s, PochhammerSpec(k + 1, 1, m - k))
        s = _divided_by_pochhammer(s, PochhammerSpec(m + 1, 1, m * d - m))
    return s


def solutionI_sides(k: int, N: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    """Both sides of the classical identity, truncated at N.

    lhs = q^{2k} / (q^2;q^2)_k * (q^2;q^2)_inf / (q;q)_inf
    rhs = q^{2k} / (q;q)_k * (q^{2(k+1)};q^2)_inf / (q^{k+1};q)_inf
    """
    if k < 0:
        raise DomainError(f"k must be >= 0, got {k}")
    lhs = TruncatedSeries.monomial(2 * k, N)
    lhs = _divided_by_pochhammer(lhs, PochhammerSpec(2, 2, k))
    lhs = _times_pochhammer(lhs, PochhammerSpec(2, 2, None))
    lhs = _divided_by_pochhammer(lhs, PochhammerSpec(1, 1, None))

    rhs = TruncatedSeries.monomial(2 * k, N)
    rhs = _divided_by_pochhammer(rhs, PochhammerSpec(1, 1, k))
    rhs = _times_pochhammer(rhs, PochhammerSpec(2 * (k + 1), 2, None))
    rhs = _divided_by_pochhammer(rhs, PochhammerSpec(k + 1, 1, None))
    return lhs, rhs


def solutionI_check(k: int, N: int) -> bool:
    """True iff both sides of the classical identity agree up to degree N."""
    lhs, rhs = solutionI_sides(k, N)
    return lhs == rhs


def first_difference(s: TruncatedSeries, t: TruncatedSeries) -> tuple[int, int, int] | None:
    """(exponent, coeff_s, coeff_t) at the first disagreement, or None."""
    if s.truncation_degree != t.truncation_degree:
        raise DegreeMismatch("cannot compare series of different degrees")
    for e, (a, b) in enumerate(zip(s.coefficients, t.coefficients)):
        if a != b:
            return e, a, b
    return None


def _require_positive(**kwargs: int) -> None:
    for name, value in kwargs.items():
        if value < 1:
            raise DomainError(f"{name} must be >= 1, got {value}")
