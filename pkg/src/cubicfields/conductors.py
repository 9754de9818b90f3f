"""Cyclic cubic conductors: validation, multiplicities, enumeration."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

from .eisenstein import sieve_primes_1mod3
from .errors import NotAConductorError

__all__ = [
    "Conductor",
    "validate_conductor",
    "multiplicity",
    "count_unramified_cyclic_cubic",
    "rank_bounds",
    "enumerate_conductors",
    "scan_conductors",
]


def multiplicity(t: int) -> int:
    """Number of cyclic cubic fields sharing a conductor with ``t`` factors."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    return 0 if t == 0 else 1 << (t - 1)


def count_unramified_cyclic_cubic(rho: int) -> int:
    """``(3**rho - 1) / 2`` unramified cyclic cubic extensions for 3-rank ``rho``."""
    if rho < 0:
        raise ValueError("rho must be nonnegative")
    return (3**rho - 1) // 2


def rank_bounds(t: int) -> tuple[int, int]:
    """Inclusive bounds ``(t-1, 2(t-1))`` on the 3-class rank."""
    if t < 1:
        raise ValueError("t must be positive")
    return t - 1, 2 * (t - 1)


@dataclass(frozen=True)
class Conductor:
    value: int
    factors: tuple[int, ...]

    @property
    def t(self) -> int:
        return len(self.factors)

    @property
    def m(self) -> int:
        return multiplicity(self.t)

    @property
    def has_nine(self) -> bool:
        return bool(self.factors) and self.factors[0] == 9

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(f for f in self.factors if f != 9)


def validate_conductor(c: int) -> Conductor:
    """Factor ``c`` and check it is the conductor of a cyclic cubic field.

    Factors are listed with 9 first (if present), then primes ascending.
    """
    if not isinstance(c, int) or isinstance(c, bool) or c < 2:
        raise NotAConductorError(f"{c!r} is not a cyclic cubic conductor")
    n = c
    factors: list[int] = []
    if n % 3 == 0:
        k = 0
        while n % 3 == 0:
            n //= 3
            k += 1
        if k != 2:
            raise NotAConductorError(f"{c}: 3-adic valuation {k} is not 0 or 2")
        factors.append(9)
    if n % 2 == 0:
        raise NotAConductorError(f"{c}: divisible by 2")
    p = 5
    while p * p <= n:
        if n % p == 0:
            n //= p
            if p % 3 != 1:
                raise NotAConductorError(f"{c}: prime factor {p} is not 1 mod 3")
            if n % p == 0:
                raise NotAConductorError(f"{c}: squared prime factor {p}")
            factors.append(p)
        p += 2
    if n > 1:
        if n % 3 != 1:
            raise NotAConductorError(f"{c}: prime factor {n} is not 1 mod 3")
        factors.append(n)
    return Conductor(c, tuple(factors))


def enumerate_conductors(bound: int, t_filter: int | None = None) -> Iterator[Conductor]:
    """Yield every conductor ``c <= bound`` in ascending order.

    Depth-first products over the ascending list of primes ``= 1 (mod 3)``
    with an optional leading factor 9, pruned once the product exceeds
    ``bound``.
    """
    primes = sieve_primes_1mod3(bound)
    found: list[tuple[int, tuple[int, ...]]] = []

    def extend(start: int, value: int, factors: tuple[int, ...]) -> None:
        for i in range(start, len(primes)):
            nxt = value * primes[i]
            if nxt > bound:
                break
            fs = factors + (primes[i],)
            found.append((nxt, fs))
            extend(i + 1, nxt, fs)

    extend(0, 1, ())
    if bound >= 9:
        found.append((9, (9,)))
        extend(0, 9, (9,))
    found.sort()
    for value, factors in found:
        if t_filter is None or len(factors) == t_filter:
            yield Conductor(value, factors)


def scan_conductors(bound: int, t_filter: int | None = None) -> Iterator[Conductor]:
    """Brute-force counterpart of :func:`enumerate_conductors` (test oracle)."""
    for c in range(2, bound + 1):
        try:
            cond = validate_conductor(c)
        except NotAConductorError:
            continue
        if t_filter is None or cond.t == t_filter:
            yield cond
