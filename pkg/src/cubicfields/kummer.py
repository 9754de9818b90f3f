"""Norm equation ``4c = a**2 + 27*b**2``, Kummer generators and their valuations."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import gcd, isqrt

from .conductors import Conductor
from .eisenstein import LAMBDA, EisensteinInt, factor_in_eisenstein
from .errors import (
    DegenerateValuationError,
    InternalInconsistencyError,
    InvalidSolutionError,
)

log = logging.getLogger(__name__)

__all__ = [
    "NormEquationSolution",
    "KummerData",
    "solve_norm_equation",
    "compute_alpha",
    "three_unit_generator",
    "valuation_vector",
    "kummer_data",
]


@dataclass(frozen=True)
class NormEquationSolution:
    a: int
    b: int

    def as_tuple(self) -> tuple[int, int]:
        return (self.a, self.b)


@dataclass(frozen=True)
class KummerData:
    conductor: Conductor
    solution: NormEquationSolution
    alpha: EisensteinInt
    v: tuple[int, ...]


def _normalized(a: int, b: int, nine: bool) -> bool:
    if not nine:
        return a % 3 == 1
    return a % 3 == 0 and (a // 3) % 3 == 1 and b % 3 != 0


def solve_norm_equation(c: Conductor) -> list[NormEquationSolution]:
    """All normalized primitive solutions ``(a, b)``, ``b > 0``, ordered by ``b``."""
    n = c.value
    four_c = 4 * n
    out: list[NormEquationSolution] = []
    for b in range(1, isqrt(four_c // 27) + 1):
        sq = four_c - 27 * b * b
        a = isqrt(sq)
        if a * a != sq:
            continue
        for s in sorted({a, -a}):
            if not _normalized(s, b, c.has_nine):
                continue
            if gcd(b, n) != 1:
                log.debug("dropping imprimitive solution (%d, %d) for c=%d", s, b, n)
                continue
            out.append(NormEquationSolution(s, b))
    if not out:
        raise InternalInconsistencyError(f"no norm-equation solution for c={n}")
    return out


def compute_alpha(c: Conductor, s: NormEquationSolution) -> EisensteinInt:
    """``c * (a + 3b*sqrt(-3)) / 2`` as an element of Z[w]."""
    if (s.a + 3 * s.b) % 2:
        raise InvalidSolutionError(f"a={s.a}, b={s.b} have different parity")
    return EisensteinInt(c.value * (s.a + 3 * s.b) // 2, c.value * 3 * s.b)


def three_unit_generator(c: Conductor, s: NormEquationSolution) -> EisensteinInt:
    """Generator prime to 3 and ``= 1 (mod 1 - w)``, equal to alpha up to cubes and sign.

    With ``c = 9c'`` and ``a = 3a0`` one has ``alpha = 27 * c' * (a0 + b*sqrt(-3))/2``.
    """
    if not c.has_nine:
        raise InvalidSolutionError("three_unit_generator needs 9 | c")
    a0, cp = s.a // 3, c.value // 9
    if (a0 + s.b) % 2:
        raise InvalidSolutionError(f"a0={a0}, b={s.b} have different parity")
    g = EisensteinInt(cp * (a0 + s.b) // 2, cp * s.b)
    # reduction mod (1 - w) sends w to 1
    if (g.x + g.y) % 3 == 2:
        g = -g
    if (g.x + g.y) % 3 != 1:
        raise InvalidSolutionError("generator is divisible by 1 - w")
    return g


def _nine_valuation(c: Conductor, s: NormEquationSolution) -> int:
    g = three_unit_generator(c, s)
    q = (g - 1).exact_div(LAMBDA)
    if q is None:
        raise InternalInconsistencyError("alpha - 1 not divisible by 1 - w")
    return (q.x + q.y) % 3


def valuation_vector(c: Conductor, s: NormEquationSolution) -> tuple[int, ...]:
    """Valuations of alpha mod 3, one per conductor factor, in factor order.

    For a prime factor the valuation is taken at its canonical primary prime;
    for the factor 9 it is ``(alpha - 1)/(1 - w) mod (1 - w)`` computed on
    :func:`three_unit_generator`.
    """
    alpha = compute_alpha(c, s)
    v: list[int] = []
    for f in c.factors:
        if f == 9:
            val = _nine_valuation(c, s)
        else:
            val = alpha.valuation(factor_in_eisenstein(f).pi) % 3
        if val == 0:
            raise DegenerateValuationError(f"c={c.value}, {s}: zero valuation at factor {f}")
        v.append(val)
    return tuple(v)


def kummer_data(c: Conductor) -> list[KummerData]:
    return [
        KummerData(c, s, compute_alpha(c, s), valuation_vector(c, s))
        for s in solve_norm_equation(c)
    ]
