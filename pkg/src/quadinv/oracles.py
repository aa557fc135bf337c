"""Brute-force oracles, independent of the closed-form decision procedures.

These deliberately avoid the symbol formulas and the local classification
rules: solubility is decided by exhaustive congruence search (p-adic side)
or bounded integer search (rational side).  The verification suites and the
test suite cross-check every fast path against them.
"""

from __future__ import annotations

from math import isqrt

from .arith import Place, RationalLike, square_class


def _is_perfect_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def hilbert_symbol_search(a: RationalLike, b: RationalLike, v: Place) -> int:
    """Decide (a,b)_v by exhaustive search for primitive solutions mod p^k.

    For square-free a, b a primitive solution of z^2 = a x^2 + b y^2 modulo
    p^3 (odd p) or 2^6 lifts to the p-adics by Hensel's lemma, so the search
    is a complete decision procedure.  At the real place solubility is the
    definiteness check.
    """
    ca, cb = square_class(a), square_class(b)
    if v.is_real:
        return -1 if (ca.rep < 0 and cb.rep < 0) else 1
    p = v.p
    assert p is not None
    k = 6 if p == 2 else 3
    m = p**k
    ra, rb = ca.rep % m, cb.rep % m
    squares_any = set()
    squares_unit = set()
    for z in range(m):
        s = (z * z) % m
        squares_any.add(s)
        if z % p:
            squares_unit.add(s)
    for x in range(m):
        axx = (ra * x * x) % m
        x_unit = bool(x % p)
        for y in range(m):
            t = (axx + rb * y * y) % m
            if x_unit or y % p:
                if t in squares_any:
                    return 1
            elif t in squares_unit:
                return 1
    return -1


def isotropy_search(entries: list[int], bound: int) -> tuple[int, ...] | None:
    """Search for a nonzero integer zero of the diagonal form, |x_i| <= bound.

    The last coordinate is solved for, so the box is (n-1)-dimensional.
    Returns a witness vector or None; absence of a witness proves nothing.
    """
    n = len(entries)
    if n == 1:
        return None
    head, last = entries[:-1], entries[-1]

    def rec(i: int, acc: int, coords: tuple[int, ...]):
        if i == n - 1:
            # need last * t^2 = -acc with t integer
            if acc == 0 and any(coords):
                return coords + (0,)
            val = -acc
            if val % last == 0 and _is_perfect_square(val // last):
                t = isqrt(val // last)
                if t <= bound and (t or any(coords)):
                    return coords + (t,)
            return None
        for x in range(0, bound + 1):
            found = rec(i + 1, acc + head[i] * x * x, coords + (x,))
            if found:
                return found
        return None

    # signs of individual coordinates never matter for a diagonal form
    return rec(0, 0, ())


def representation_search(entries: list[int], target: int, bound: int) -> tuple[tuple[int, ...], int] | None:
    """Search for integers x and t >= 1 with q(x) = target * t^2.

    A hit witnesses that the diagonal form represents ``target`` over Q.
    """

    n = len(entries)

    def rec(i: int, acc: int, coords: tuple[int, ...]):
        if i == n:
            if acc % target == 0 and _is_perfect_square(acc // target):
                t = isqrt(acc // target)
                if t >= 1:
                    return coords, t
            return None
        for x in range(0, bound + 1):
            found = rec(i + 1, acc + entries[i] * x * x, coords + (x,))
            if found:
                return found
        return None

    return rec(0, 0, ())
