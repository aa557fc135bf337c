"""Exact rational arithmetic over Q: square classes, places, Hilbert symbols.

Everything upstream (cohomology classes, quadratic form invariants, algebra
norms) reduces to three decidable primitives implemented here:

* ``square_class`` -- the canonical representative of a nonzero rational in
  Q*/(Q*)^2, a signed square-free integer obtained by trial division;
* ``Place`` -- the real place or a p-adic place of Q, totally ordered with
  the real place first;
* ``hilbert_symbol`` -- the norm-residue symbol (a,b)_v in {+1,-1}, computed
  by the classical closed formulas (sign rule at the real place, unit/
  valuation formula at odd p, the epsilon/omega exponent formula at p = 2).

All values are immutable and all functions pure, so concurrent use needs no
coordination.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Iterable, Union

#: Largest prime the trial-division factorizer will look for by default.
DEFAULT_FACTOR_BOUND = 10**6

#: Environment variable overriding the factorization bound.
FACTOR_BOUND_ENV = "QUADINV_FACTOR_BOUND"

Rational = Fraction
RationalLike = Union[int, Fraction, "SquareClass"]


def factor_bound() -> int:
    """The active trial-division bound (env override, else the default)."""
    raw = os.environ.get(FACTOR_BOUND_ENV)
    if raw is None:
        return DEFAULT_FACTOR_BOUND
    try:
        bound = int(raw)
    except ValueError as exc:
        raise ValueError(f"{FACTOR_BOUND_ENV} must be an integer, got {raw!r}") from exc
    if bound < 2:
        raise ValueError(f"{FACTOR_BOUND_ENV} must be >= 2, got {bound}")
    return bound


def is_prime(n: int) -> bool:
    """Deterministic primality by trial division; only used at desk scale."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _odd_part_factorization(n: int, bound: int) -> dict[int, int]:
    """Factor ``n > 0`` by trial division up to ``bound``.

    Raises if a composite cofactor survives, which can only happen when some
    prime factor exceeds the bound.
    """
    factors: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    d = 5
    while d * d <= n and d <= bound:
        for p in (d, d + 2):
            while n % p == 0:
                factors[p] = factors.get(p, 0) + 1
                n //= p
        d += 6
    if n > 1:
        if d * d > n or n <= bound:
            # no divisor up to sqrt(n): the cofactor is prime
            factors[n] = factors.get(n, 0) + 1
        else:
            raise ValueError(
                f"cannot factor {n}: prime factors exceed the bound {bound} "
                f"(override with {FACTOR_BOUND_ENV})"
            )
    return factors


@dataclass(frozen=True, order=True)
class SquareClass:
    """An element of Q*/(Q*)^2 in canonical form.

    The canonical representative is the signed square-free integer
    ``sign * prod(primes)``.  The class group law is ``*`` (symmetric
    difference of prime supports, product of signs); every class squares to
    the trivial class.
    """

    sign: int
    primes: tuple[int, ...]

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        if list(self.primes) != sorted(set(self.primes)):
            raise ValueError("primes must be strictly increasing")

    @property
    def rep(self) -> int:
        """The signed square-free integer representing the class."""
        n = self.sign
        for p in self.primes:
            n *= p
        return n

    @property
    def is_trivial(self) -> bool:
        return self.sign == 1 and not self.primes

    def __mul__(self, other: "SquareClass") -> "SquareClass":
        if not isinstance(other, SquareClass):
            return NotImplemented
        support = set(self.primes).symmetric_difference(other.primes)
        return SquareClass(self.sign * other.sign, tuple(sorted(support)))

    def __neg__(self) -> "SquareClass":
        return SquareClass(-self.sign, self.primes)

    def __int__(self) -> int:
        return self.rep

    def __str__(self) -> str:
        return str(self.rep)

    def to_json(self) -> int:
        return self.rep


ONE_CLASS = SquareClass(1, ())
MINUS_ONE_CLASS = SquareClass(-1, ())


def _odd_support(n: int, bound: int) -> set[int]:
    return {p for p, e in _odd_part_factorization(n, bound).items() if e % 2}


def square_class(a: RationalLike) -> SquareClass:
    """Canonicalize a nonzero rational into its square class.

    ``square_class(a * b**2) == square_class(a)`` for every nonzero ``b``;
    zero is rejected.  Numerator and denominator differ by a square, so the
    class of ``n/d`` is the class of ``n*d``, factored piecewise.
    """
    if isinstance(a, SquareClass):
        return a
    if isinstance(a, Fraction):
        num, den = a.numerator, a.denominator
    elif isinstance(a, int):
        num, den = a, 1
    else:
        raise TypeError(f"cannot take the square class of {type(a).__name__}")
    if num == 0:
        raise ValueError("zero has no square class")
    bound = factor_bound()
    support = _odd_support(abs(num), bound)
    if den != 1:
        support ^= _odd_support(den, bound)
    return SquareClass(1 if num > 0 else -1, tuple(sorted(support)))


@dataclass(frozen=True)
class Place:
    """A place of Q: the real place (``p is None``) or a finite prime p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def is_real(self) -> bool:
        return self.p is None

    def sort_key(self) -> tuple[int, int]:
        # real place first, then primes ascending
        return (0, 0) if self.p is None else (1, self.p)

    def __lt__(self, other: "Place") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return "inf" if self.p is None else str(self.p)

    @classmethod
    def parse(cls, text: str) -> "Place":
        text = str(text).strip()
        if text == "inf":
            return REAL_PLACE
        try:
            p = int(text)
        except ValueError as exc:
            raise ValueError(f"invalid place {text!r}: expected 'inf' or a prime") from exc
        return cls(p)


REAL_PLACE = Place(None)


def relevant_places(classes: Iterable[RationalLike]) -> list[Place]:
    """The real place, 2, and every odd prime in the support of the inputs.

    Any Hilbert symbol among the inputs is +1 away from this list.
    """
    primes = {2}
    for a in classes:
        primes.update(square_class(a).primes)
    return [REAL_PLACE] + [Place(p) for p in sorted(primes)]


def legendre(u: int, p: int) -> int:
    """Legendre symbol (u/p) for odd prime p and u prime to p."""
    r = pow(u % p, (p - 1) // 2, p)
    if r == 1:
        return 1
    if r == p - 1:
        return -1
    raise ValueError(f"{u} is divisible by {p}")


def _eps(u: int) -> int:
    # (u - 1)/2 mod 2 for odd u
    return ((u - 1) // 2) % 2


def _omega(u: int) -> int:
    # (u^2 - 1)/8 mod 2 for odd u
    return ((u * u - 1) // 8) % 2


@lru_cache(maxsize=1 << 16)
def _hilbert_cached(a: SquareClass, b: SquareClass, v: Place) -> int:
    if v.is_real:
        return -1 if (a.sign < 0 and b.sign < 0) else 1
    p = v.p
    assert p is not None
    alpha = 1 if p in a.primes else 0
    beta = 1 if p in b.primes else 0
    u = a.rep // (p**alpha)
    w = b.rep // (p**beta)
    if p == 2:
        e = _eps(u) * _eps(w) + alpha * _omega(w) + beta * _omega(u)
        return -1 if e % 2 else 1
    result = 1
    if alpha and beta and p % 4 == 3:
        result = -result
    if beta:
        result *= legendre(u, p)
    if alpha:
        result *= legendre(w, p)
    return result


def hilbert_symbol(a: RationalLike, b: RationalLike, v: Place) -> int:
    """The Hilbert symbol (a,b)_v.

    +1 exactly when z^2 = a x^2 + b y^2 has a nontrivial solution over the
    completion of Q at v.  Symmetric and bimultiplicative in a and b; the
    product over all places is +1.
    """
    return _hilbert_cached(square_class(a), square_class(b), v)
