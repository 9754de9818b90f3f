"""Eisenstein integers and cubic residue symbols.

Elements of Z[w] are stored as ``x + y*w`` with ``w**2 + w + 1 == 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .errors import InvalidPairError, InvalidPrimeError, UndefinedSymbolError

__all__ = [
    "EisensteinInt",
    "SplitPrimeFactorization",
    "SQRT_NEG3",
    "LAMBDA",
    "is_prime",
    "sieve_primes_1mod3",
    "factor_in_eisenstein",
    "omega_mod",
    "cubic_exponent_mod",
    "cubic_residue_exponent",
    "is_cube_mod_oracle",
]


@dataclass(frozen=True, slots=True)
class EisensteinInt:
    x: int
    y: int

    def __add__(self, other: EisensteinInt | int) -> EisensteinInt:
        if isinstance(other, int):
            return EisensteinInt(self.x + other, self.y)
        return EisensteinInt(self.x + other.x, self.y + other.y)

    __radd__ = __add__

    def __neg__(self) -> EisensteinInt:
        return EisensteinInt(-self.x, -self.y)

    def __sub__(self, other: EisensteinInt | int) -> EisensteinInt:
        return self + (-other)

    def __mul__(self, other: EisensteinInt | int) -> EisensteinInt:
        if isinstance(other, int):
            return EisensteinInt(self.x * other, self.y * other)
        a, b, c, d = self.x, self.y, other.x, other.y
        # (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2,  w^2 = -1 - w
        return EisensteinInt(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def conj(self) -> EisensteinInt:
        return EisensteinInt(self.x - self.y, -self.y)

    def norm(self) -> int:
        return self.x * self.x - self.x * self.y + self.y * self.y

    def exact_div(self, other: EisensteinInt | int) -> EisensteinInt | None:
        """Return ``self / other`` if it lies in Z[w], else ``None``."""
        if isinstance(other, int):
            other = EisensteinInt(other, 0)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Z[w]")
        z = self * other.conj()
        if z.x % n or z.y % n:
            return None
        return EisensteinInt(z.x // n, z.y // n)

    def divisible_by(self, other: EisensteinInt | int) -> bool:
        return self.exact_div(other) is not None

    def valuation(self, prime: EisensteinInt) -> int:
        """Multiplicity of ``prime`` in ``self`` by repeated exact division."""
        if self.x == 0 and self.y == 0:
            raise ValueError("valuation of zero is infinite")
        n, z = 0, self
        while (q := z.exact_div(prime)) is not None:
            z, n = q, n + 1
        return n

    def is_primary(self) -> bool:
        """True iff ``self`` is congruent to -1 modulo 3."""
        return self.x % 3 == 2 and self.y % 3 == 0

    def associates(self) -> list[EisensteinInt]:
        unit = EisensteinInt(0, 1)
        out, z = [], self
        for _ in range(3):
            out.extend((z, -z))
            z = z * unit
        return out

    def __str__(self) -> str:
        return f"{self.x}{self.y:+d}w"


SQRT_NEG3 = EisensteinInt(1, 2)
LAMBDA = EisensteinInt(1, -1)  # 1 - w, the prime above 3


@dataclass(frozen=True)
class SplitPrimeFactorization:
    p: int
    pi: EisensteinInt
    pi_conj: EisensteinInt


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    if n % 3 == 0:
        return n == 3
    i = 5
    while i * i <= n:
        if n % i == 0 or n % (i + 2) == 0:
            return False
        i += 6
    return True


def sieve_primes_1mod3(bound: int) -> list[int]:
    """Primes ``p <= bound`` with ``p % 3 == 1``, ascending."""
    if bound < 7:
        return []
    flags = bytearray([1]) * (bound + 1)
    flags[0] = flags[1] = 0
    for i in range(2, isqrt(bound) + 1):
        if flags[i]:
            flags[i * i :: i] = bytes(len(range(i * i, bound + 1, i)))
    return [p for p in range(7, bound + 1, 6) if flags[p]]


def _sqrt_mod(n: int, p: int) -> int:
    """Tonelli-Shanks square root of a quadratic residue ``n`` modulo odd prime ``p``."""
    n %= p
    q, s = p - 1, 0
    while q % 2 == 0:
        q, s = q // 2, s + 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(n, q, p), pow(n, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2, i = t2 * t2 % p, i + 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
    return r


def _cornacchia3(p: int) -> tuple[int, int]:
    """Solve ``u**2 + 3*w**2 == p`` for a prime ``p = 1 (mod 3)``."""
    r = _sqrt_mod(-3, p)
    if 2 * r < p:
        r = p - r
    a, b = p, r
    limit = isqrt(p)
    while b > limit:
        a, b = b, a % b
    rest = p - b * b
    w = isqrt(rest // 3)
    if rest % 3 or 3 * w * w != rest:
        raise InvalidPrimeError(f"{p} is not of the form u^2 + 3w^2")
    return b, w


def _check_split_prime(p: int) -> None:
    if not isinstance(p, int) or p % 3 != 1 or not is_prime(p):
        raise InvalidPrimeError(f"{p!r} is not a prime congruent to 1 mod 3")


@lru_cache(maxsize=None)
def factor_in_eisenstein(p: int) -> SplitPrimeFactorization:
    """Split ``p = pi * conj(pi)`` with ``pi`` the canonical primary prime.

    Of the two conjugate primary primes (``= -1 mod 3``) the one with a
    positive w-coefficient is canonical.
    """
    _check_split_prime(p)
    u, w = _cornacchia3(p)
    g = EisensteinInt(u + w, 2 * w)  # u + w*sqrt(-3)
    for cand in (g, g.conj()):
        for z in cand.associates():
            if z.is_primary() and z.y > 0:
                return SplitPrimeFactorization(p, z, z.conj())
    raise AssertionError(f"no primary associate found for {p}")


@lru_cache(maxsize=None)
def omega_mod(q: int) -> int:
    """Image of w in Z/q under reduction modulo the canonical prime over ``q``."""
    pi = factor_in_eisenstein(q).pi
    return (-pi.x * pow(pi.y, -1, q)) % q


def cubic_exponent_mod(x: int, q: int) -> int:
    """Exponent ``e`` in {-1, 0, 1} with ``x**((q-1)/3) = w**e (mod q)``."""
    if x % q == 0:
        raise UndefinedSymbolError(f"cubic symbol of {x} modulo {q} is undefined")
    r = pow(x, (q - 1) // 3, q)
    if r == 1:
        return 0
    w = omega_mod(q)
    if r == w:
        return 1
    if r == w * w % q:
        return -1
    raise InvalidPrimeError(f"{q} does not admit a cubic character")


def _check_symbol_arg(n: int) -> None:
    if n != 9:
        _check_split_prime(n)


def cubic_residue_exponent(num: int, den: int) -> int:
    """Exponent ``a`` of ``(num/den)_3 = w**a`` for prime(-power) conductor factors.

    Conventions involving the factor 9:

    * ``(p/9)``: 0 iff ``p = 1 (mod 9)``; ``p = 7 (mod 9)`` gives +1 and
      ``p = 4 (mod 9)`` gives -1 (keyed on ``p**2 mod 9`` being 4 or 7).
    * ``(9/q)``: the character of ``3**2``, i.e. ``2 * e3 (mod 3)`` where ``e3``
      is the exponent of 3 modulo ``q``.
    """
    if num == den:
        raise InvalidPairError(f"symbol ({num}/{den}) needs distinct arguments")
    _check_symbol_arg(num)
    _check_symbol_arg(den)
    if den == 9:
        sq = num * num % 9
        if sq == 1:
            return 0
        return 1 if sq == 4 else -1
    if num == 9:
        e = 2 * cubic_exponent_mod(3, den) % 3
        return e - 3 if e == 2 else e
    return cubic_exponent_mod(num, den)


def is_cube_mod_oracle(x: int, q: int) -> bool:
    """Brute-force cube test: search ``y`` in ``[1, q-1]`` with ``y**3 = x (mod q)``."""
    if x % q == 0:
        raise UndefinedSymbolError(f"{q} divides {x}")
    target = x % q
    return any(pow(y, 3, q) == target for y in range(1, q))
