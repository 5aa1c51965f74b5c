"""The partition classes A(n,k,d,m) and B(n,k,d,m).

A(n,k,d,m): partitions of n with exactly k parts divisible by d, all other
parts strictly less than m*d.

B(n,k,d,m), branching on m vs k:
  m <  k: the largest part equals k*d and every part above m*d is divisible
          by d (parts up to m*d are unrestricted);
  m >= k: the part k occurs at least d times, no part exceeds m*d, and every
          part i with k < i <= m occurs fewer than d times (parts in
          (m, m*d] unrestricted in multiplicity).

Enumeration is by brute force over all partitions of n in descending
lexicographic order of part sequences, guarded by a configurable budget.
Counting streams the enumerators, so counter and enumerator cannot
disagree; the independent count comes from the q-series module.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator

from .errors import BudgetExceeded, DomainError
from .partition import Partition

DEFAULT_BUDGET = 10_000_000


@dataclass(frozen=True)
class ClassParams:
    """The quadruple (n, k, d, m) parameterizing A and B."""

    n: int
    k: int
    d: int
    m: int

    def __post_init__(self):
        if self.n < 0:
            raise DomainError(f"n must be >= 0, got {self.n}")
        if self.k < 1:
            raise DomainError(f"k must be >= 1, got {self.k}")
        if self.d < 1:
            raise DomainError(f"d must be >= 1, got {self.d}")
        if self.m < 1:
            raise DomainError(f"m must be >= 1, got {self.m}")

    @classmethod
    def parse(cls, text: str) -> "ClassParams":
        """Parse the comma-joined quadruple 'n,k,d,m'."""
        fields = text.split(",")
        if len(fields) != 4:
            raise DomainError(f"expected 'n,k,d,m', got {text!r}")
        try:
            n, k, d, m = (int(f) for f in fields)
        except ValueError as exc:
            raise DomainError(f"non-integer in params {text!r}") from exc
        return cls(n, k, d, m)


def effective_budget(budget: int | None = None) -> int:
    """Resolve the enumeration cap: explicit arg, else PARTEQ_BUDGET, else default."""
    if budget is not None:
        return budget
    env = os.environ.get("PARTEQ_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def count_partitions(n: int, max_part: int | None = None) -> int:
    """Number of partitions of n into parts <= max_part, by the standard DP.

    Used both as the up-front budget estimate and as an independent oracle
    for the enumerator in tests.
    """
    if n < 0:
        return 0
    cap = n if max_part is None else min(max_part, n)
    ways = [0] * (n + 1)
    ways[0] = 1
    for part in range(1, cap + 1):
        for total in range(part, n + 1):
            ways[total] += ways[total - part]
    return ways[n] if n > 0 else 1


def enumerate_partitions(
    n: int, max_part: int | None = None, budget: int | None = None
) -> Iterator[Partition]:
    """All partitions of n with parts <= max_part, descending lex order.

    Raises BudgetExceeded up front when the DP count exceeds the cap.
    """
    if n < 0:
        return
    cap = effective_budget(budget)
    total = count_partitions(n, max_part)
    if total > cap:
        raise BudgetExceeded(f"{total} partitions of {n} exceeds budget {cap}")
    bound = n if max_part is None else min(max_part, n)

    def gen(remaining: int, largest: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    for seq in gen(n, bound):
        yield Partition.from_parts(seq)


def is_in_A(p: Partition, params: ClassParams) -> bool:
    """Membership in A(n,k,d,m)."""
    if p.weight() != params.n:
        return False
    divisible = 0
    for part, mult in p.entries:
        if part % params.d == 0:
            divisible += mult
        elif part >= params.m * params.d:
            return False
    return divisible == params.k


def is_in_B(p: Partition, params: ClassParams) -> bool:
    """Membership in B(n,k,d,m); branches on m < k vs m >= k."""
    if p.weight() != params.n:
        return False
    k, d, m = params.k, params.d, params.m
    if m < k:
        if p.largest_part() != k * d:
            return False
        for part, _ in p.entries:
            if part > m * d and part % d != 0:
                return False
        return True
    if p.multiplicity(k) < d:
        return False
    if p.largest_part() > m * d:
        return False
    for part, mult in p.entries:
        if k < part <= m and mult >= d:
            return False
    return True


def enumerate_A(params: ClassParams, budget: int | None = None) -> Iterator[Partition]:
    """Members of A(n,k,d,m) in descending lex order."""
    for p in enumerate_partitions(params.n, budget=budget):
        if is_in_A(p, params):
            yield p


def enumerate_B(params: ClassParams, budget: int | None = None) -> Iterator[Partition]:
    """Members of B(n,k,d,m) in descending lex order."""
    for p in enumerate_partitions(params.n, budget=budget):
        if is_in_B(p, params):
            yield p


def count_A(params: ClassParams, budget: int | None = None) -> int:
    return sum(1 for _ in enumerate_A(params, budget=budget))


def count_B(params: ClassParams, budget: int | None = None) -> int:
    return sum(1 for _ in enumerate_B(params, budget=budget))
