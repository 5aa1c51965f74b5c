"""The weight-preserving bijection between the A and B partition classes.

The forward map splits lambda in A(n,k,d,m) into mu (the k parts divisible
by d) and o (the rest), conjugates mu, splits the conjugate into a bounded
piece and a rescaled piece, applies a finite-bound variant of Glaisher's
map to o, and reassembles. The inverse undoes each step. Both directions
record every intermediate subpartition in a trace.

The finite-bound Glaisher map truncates the base-d expansion of each
multiplicity N_j at the unique exponent L_j with m < j*d^L_j <= m*d,
leaving an unrestricted overflow multiplicity on the part j*d^L_j.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .classes import ClassParams, is_in_A, is_in_B
from .errors import (
    DomainError,
    InternalError,
    NotInClassA,
    NotInClassB,
    UnsupportedModulus,
)
from .partition import Partition


@dataclass(frozen=True)
class BaseDDecomposition:
    """Truncated base-d expansion of one multiplicity in the finite map.

    For a part j (not divisible by d) occurring N_j times:
    N_j = sum(digits[l] * d**l for l < L_j) + overflow * d**L_j,
    with each digit in [0, d-1] and m < j*d**L_j <= m*d.
    """

    j: int
    L_j: int
    digits: tuple[int, ...]
    overflow: int

    def reconstruct(self, d: int) -> int:
        return sum(a * d**l for l, a in enumerate(self.digits)) + self.overflow * d**self.L_j


@dataclass(frozen=True)
class BijectionTrace:
    """Every intermediate subpartition of one application of the bijection."""

    lam: Partition
    mu: Partition
    o: Partition
    mu_star: Partition
    mu_star_0: Partition
    epsilon: Partition  # stored rescaled: parts are d*i
    delta: Partition
    kappa: Partition
    params: ClassParams
    direction: str  # "forward" | "inverse"

    def to_dict(self) -> dict:
        return {
            "params": {"n": self.params.n, "k": self.params.k, "d": self.params.d, "m": self.params.m},
            "direction": self.direction,
            "lambda": self.lam.render(),
            "mu": self.mu.render(),
            "o": self.o.render(),
            "mu_star": self.mu_star.render(),
            "mu_star_0": self.mu_star_0.render(),
            "epsilon": self.epsilon.render(),
            "delta": self.delta.render(),
            "kappa": self.kappa.render(),
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def _check_modulus(d: int) -> None:
    if d < 2:
        raise UnsupportedModulus(f"modulus must be >= 2, got {d}")


def glaisher_forward(o: Partition, d: int) -> Partition:
    """Glaisher's map: base-d expand each multiplicity.

    Input may contain no part divisible by d; output has every multiplicity
    below d, same weight.
    """
    _check_modulus(d)
    pairs: list[tuple[int, int]] = []
    for part, mult in o.entries:
        if part % d == 0:
            raise DomainError(f"part {part} divisible by {d}")
        scale = 1
        while mult > 0:
            digit = mult % d
            if digit:
                pairs.append((part * scale, digit))
            mult //= d
            scale *= d
    return Partition.from_pairs(pairs)


def glaisher_inverse(delta: Partition, d: int) -> Partition:
    """Inverse of Glaisher's map: fold each part j*d^l back onto part j."""
    _check_modulus(d)
    pairs: list[tuple[int, int]] = []
    for part, mult in delta.entries:
        if mult >= d:
            raise DomainError(f"part {part} occurs {mult} >= {d} times")
        j, scale = part, 1
        while j % d == 0:
            j //= d
            scale *= d
        pairs.append((j, mult * scale))
    return Partition.from_pairs(pairs)


def bound_exponent(j: int, d: int, m: int) -> int:
    """The unique L >= 0 with m < j*d^L <= m*d, for 1 <= j <= m*d."""
    if not 1 <= j <= m * d:
        raise DomainError(f"part {j} outside (0, {m * d}]")
    L = 0
    v = j
    while v <= m:
        v *= d
        L += 1
    return L


def decompose_multiplicity(j: int, mult: int, d: int, m: int) -> BaseDDecomposition:
    """Base-d digits of mult below the exponent L_j, overflow collected above."""
    L = bound_exponent(j, d, m)
    digits = []
    rest = mult
    for _ in range(L):
        digits.append(rest % d)
        rest //= d
    return BaseDDecomposition(j=j, L_j=L, digits=tuple(digits), overflow=rest)


def finite_glaisher_forward(o: Partition, d: int, m: int) -> Partition:
    """Finite-bound Glaisher map.

    Requires: no part divisible by d, all parts < m*d. Produces: all parts
    <= m*d, every part <= m occurring fewer than d times, same weight.
    """
    _check_modulus(d)
    if m < 1:
        raise DomainError(f"bound must be >= 1, got {m}")
    pairs: list[tuple[int, int]] = []
    for part, mult in o.entries:
        if part % d == 0:
            raise DomainError(f"part {part} divisible by {d}")
        if part >= m * d:
            raise DomainError(f"part {part} not below {m * d}")
        dec = decompose_multiplicity(part, mult, d, m)
        for l, digit in enumerate(dec.digits):
            if digit:
                pairs.append((part * d**l, digit))
        if dec.overflow:
            pairs.append((part * d**dec.L_j, dec.overflow))
    return Partition.from_pairs(pairs)


def finite_glaisher_inverse(delta: Partition, d: int, m: int) -> Partition:
    """Inverse of the finite-bound Glaisher map.

    Requires: all parts <= m*d, every part <= m occurring fewer than d
    times. Each part i = j*d^l (d not dividing j) folds back onto j.
    """
    _check_modulus(d)
    if m < 1:
        raise DomainError(f"bound must be >= 1, got {m}")
    pairs: list[tuple[int, int]] = []
    for part, mult in delta.entries:
        if part > m * d:
            raise DomainError(f"part {part} exceeds {m * d}")
        if part <= m and mult >= d:
            raise DomainError(f"part {part} <= {m} occurs {mult} >= {d} times")
        j, scale, l = part, 1, 0
        while j % d == 0:
            j //= d
            scale *= d
            l += 1
        # Parts above m must sit exactly at the collection exponent L_j;
        # this holds by uniqueness of L_j but is checked, not assumed.
        if part > m and l != bound_exponent(j, d, m):
            raise InternalError(f"part {part} not of the form j*d^L_j")
        pairs.append((j, mult * scale))
    return Partition.from_pairs(pairs)


def _split_by_divisibility(lam: Partition, d: int) -> tuple[Partition, Partition]:
    """Split into (parts divisible by d, the rest)."""
    div = [(p, c) for p, c in lam.entries if p % d == 0]
    rest = [(p, c) for p, c in lam.entries if p % d != 0]
    return Partition.from_pairs(div), Partition.from_pairs(rest)


def phi(lam: Partition, params: ClassParams) -> tuple[Partition, BijectionTrace]:
    """Forward bijection A(n,k,d,m) -> B(n,k,d,m)."""
    _check_modulus(params.d)
    if not is_in_A(lam, params):
        raise NotInClassA(f"{lam.render()!r} is not in A{(params.n, params.k, params.d, params.m)}")
    d, k, m = params.d, params.k, params.m

    mu, o = _split_by_divisibility(lam, d)
    mu_star = mu.conjugate()

    # Conjugating a partition into multiples of d yields multiplicities
    # that are multiples of d, with largest part = number of parts = k.
    if any(mult % d != 0 for _, mult in mu_star.entries):
        raise InternalError("conjugate of d-divisible subpartition has a multiplicity not divisible by d")

    cut = min(m, k)
    mu_star_0 = Partition.from_pairs((p, c) for p, c in mu_star.entries if p <= cut)
    epsilon = Partition.from_pairs((d * p, c // d) for p, c in mu_star.entries if p > cut)

    delta = finite_glaisher_forward(o, d, m)
    kappa = mu_star_0 + epsilon + delta

    if kappa.weight() != params.n or not is_in_B(kappa, params):
        raise InternalError(f"phi produced {kappa.render()!r} outside B")

    trace = BijectionTrace(
        lam=lam, mu=mu, o=o, mu_star=mu_star, mu_star_0=mu_star_0,
        epsilon=epsilon, delta=delta, kappa=kappa, params=params, direction="forward",
    )
    return kappa, trace


def phi_inverse(kappa: Partition, params: ClassParams) -> tuple[Partition, BijectionTrace]:
    """Inverse bijection B(n,k,d,m) -> A(n,k,d,m)."""
    _check_modulus(params.d)
    if not is_in_B(kappa, params):
        raise NotInClassB(f"{kappa.render()!r} is not in B{(params.n, params.k, params.d, params.m)}")
    d, k, m = params.d, params.k, params.m
    cut = min(m, k)

    mu0_pairs: list[tuple[int, int]] = []
    eps_pairs: list[tuple[int, int]] = []  # rescaled form, parts d*i
    delta_pairs: list[tuple[int, int]] = []
    for part, mult in kappa.entries:
        if part <= cut:
            r = mult % d
            if r:
                delta_pairs.append((part, r))
            if mult - r:
                mu0_pairs.append((part, mult - r))
        elif part <= m * d:
            # covers both k < part <= m (multiplicity < d by membership)
            # and m < part <= m*d (overflow parts)
            delta_pairs.append((part, mult))
        else:
            # only reachable for m < k; membership guarantees d | part
            eps_pairs.append((part, mult))

    mu_star_0 = Partition.from_pairs(mu0_pairs)
    epsilon = Partition.from_pairs(eps_pairs)
    delta = Partition.from_pairs(delta_pairs)

    mu_star = mu_star_0 + Partition.from_pairs((p // d, c * d) for p, c in epsilon.entries)
    if mu_star.multiplicity(k) < d:
        raise InternalError("reconstructed conjugate lacks d copies of the distinguished part")

    mu = mu_star.conjugate()
    o = finite_glaisher_inverse(delta, d, m)
    lam = mu + o

    if lam.weight() != params.n or not is_in_A(lam, params):
        raise InternalError(f"phi_inverse produced {lam.render()!r} outside A")

    trace = BijectionTrace(
        lam=lam, mu=mu, o=o, mu_star=mu_star, mu_star_0=mu_star_0,
        epsilon=epsilon, delta=delta, kappa=kappa, params=params, direction="inverse",
    )
    return lam, trace
