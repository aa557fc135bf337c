"""Pfister forms and Cayley-Dickson composition algebras over Q.

An algebra C(mu_1,...,mu_r), r <= 3, is built by iterated doubling with

    (a,b)(c,d) = (ac + mu conj(d) b,  da + b conj(c)),
    conj(a,b)  = (conj(a), -b),
    N(a,b)     = N(a) - mu N(b),

so the norm form in canonical basis coordinates is literally the Pfister
expansion <1,-mu_1> (x) ... (x) <1,-mu_r> produced by ``pfister_form`` (new
slots multiply on the left, matching the doubling coordinate order).  Basis
products are monomial, e_i e_j = c . e_k, so the multiplication table stores
one signed coefficient and one index per pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .arith import RationalLike, SquareClass, square_class
from .cohomology import CohomClass, symbol
from .forms import QuadraticForm, form, isometric, isotropic, tensor

MAX_RANK = 3


def _check_slots(slots: Sequence[SquareClass]) -> tuple[SquareClass, ...]:
    slots = tuple(square_class(mu) for mu in slots)
    if len(slots) > MAX_RANK:
        raise ValueError(f"composition algebras stop at rank {MAX_RANK} (dimension 8)")
    return slots


def pfister_form(slots: Iterable[RationalLike]) -> QuadraticForm:
    """Expand <<mu_1,...,mu_r>> to its 2^r-dimensional diagonal form."""
    slots = _check_slots(tuple(slots))
    q = form([1])
    for mu in slots:
        q = tensor(form([1, -mu.rep]), q)
    return q


def e_invariant(slots: Iterable[RationalLike]) -> CohomClass:
    """The degree-r cohomology class (mu_1)...(mu_r) attached to the slots.

    Well defined on the isometry class of the Pfister expansion; the empty
    slot list gives the degree-0 unit.
    """
    return symbol([square_class(mu) for mu in _check_slots(tuple(slots))])


@dataclass(frozen=True)
class AlgebraElement:
    """An element of a composition algebra, as coordinates over the canonical basis."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        if not all(isinstance(c, Fraction) for c in self.coords):
            raise TypeError("coordinates must be Fractions")

    @property
    def dim(self) -> int:
        return len(self.coords)

    @property
    def scalar_part(self) -> Fraction:
        return self.coords[0]

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def _match(self, other: "AlgebraElement"):
        if self.dim != other.dim:
            raise ValueError(f"element sizes differ: {self.dim} vs {other.dim}")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._match(other)
        return AlgebraElement(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._match(other)
        return AlgebraElement(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(tuple(-a for a in self.coords))

    def scaled(self, c) -> "AlgebraElement":
        cf = c if isinstance(c, Fraction) else Fraction(c)
        return AlgebraElement(tuple(cf * a for a in self.coords))

    def conj(self) -> "AlgebraElement":
        """Conjugation: negate every coordinate off the identity line."""
        return AlgebraElement((self.coords[0],) + tuple(-a for a in self.coords[1:]))

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coords]


def element(coords: Iterable) -> AlgebraElement:
    return AlgebraElement(tuple(c if isinstance(c, Fraction) else Fraction(c) for c in coords))


class CompositionAlgebra:
    """A Cayley-Dickson algebra with explicit monomial multiplication table."""

    def __init__(self, slots: Sequence[RationalLike]):
        self.slots = _check_slots(tuple(slots))
        self.rank = len(self.slots)
        self.dim = 1 << self.rank
        self.norm_form = pfister_form(self.slots)
        self._table = _doubling_table(self.slots)
        # exact values N(e_k), not square-class representatives
        diag = [Fraction(1)]
        for mu in self.slots:
            diag = diag + [-Fraction(mu.rep) * v for v in diag]
        self._norm_diag = tuple(diag)

    # -- constructors ------------------------------------------------------

    def element(self, coords: Iterable) -> AlgebraElement:
        x = element(coords)
        if x.dim != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {x.dim}")
        return x

    def zero(self) -> AlgebraElement:
        return AlgebraElement((Fraction(0),) * self.dim)

    def one(self) -> AlgebraElement:
        return self.basis_element(0)

    def basis_element(self, k: int) -> AlgebraElement:
        coords = [Fraction(0)] * self.dim
        coords[k] = Fraction(1)
        return AlgebraElement(tuple(coords))

    def scalar(self, c) -> AlgebraElement:
        return self.one().scaled(c)

    # -- operations ---------------------------------------------------------

    def multiply(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        """Bilinear product through the table; zero coordinates are skipped."""
        if x.dim != self.dim or y.dim != self.dim:
            raise ValueError("element size does not match the algebra")
        out = [Fraction(0)] * self.dim
        for i, xi in enumerate(x.coords):
            if not xi:
                continue
            row = self._table[i]
            for j, yj in enumerate(y.coords):
                if not yj:
                    continue
                coeff, k = row[j]
                out[k] += coeff * xi * yj
        return AlgebraElement(tuple(out))

    def norm(self, x: AlgebraElement) -> Fraction:
        """The Pfister norm form evaluated exactly on the coordinates."""
        if x.dim != self.dim:
            raise ValueError("element size does not match the algebra")
        total = Fraction(0)
        for a, c in zip(self._norm_diag, x.coords):
            if c:
                total += a * c * c
        return total

    def conj(self, x: AlgebraElement) -> AlgebraElement:
        if x.dim != self.dim:
            raise ValueError("element size does not match the algebra")
        return x.conj()

    def trace(self, x: AlgebraElement) -> Fraction:
        return 2 * x.scalar_part

    def basis_product(self, i: int, j: int) -> tuple[Fraction, int]:
        """e_i e_j as (coefficient, basis index)."""
        return self._table[i][j]

    # -- presentation ---------------------------------------------------------

    def __repr__(self) -> str:
        return f"CompositionAlgebra({[mu.rep for mu in self.slots]})"

    def to_json(self) -> dict:
        return {"mu": [mu.rep for mu in self.slots]}


def _conj_sign(idx: int) -> int:
    # conj(e_k) = e_k for the identity, -e_k otherwise
    return 1 if idx == 0 else -1


@lru_cache(maxsize=None)
def _doubling_table(slots: tuple[SquareClass, ...]) -> tuple[tuple[tuple[Fraction, int], ...], ...]:
    table: list[list[tuple[Fraction, int]]] = [[(Fraction(1), 0)]]
    dim = 1
    for mu in slots:
        muf = Fraction(mu.rep)
        new: list[list[tuple[Fraction, int]]] = [
            [(Fraction(0), 0)] * (2 * dim) for _ in range(2 * dim)
        ]
        for i in range(dim):
            for j in range(dim):
                # (a,0)(c,0) = (ac, 0)
                c, k = table[i][j]
                new[i][j] = (c, k)
                # (a,0)(0,d) = (0, da)
                c, k = table[j][i]
                new[i][dim + j] = (c, dim + k)
                # (0,b)(c,0) = (0, b conj(c))
                c, k = table[i][j]
                new[dim + i][j] = (_conj_sign(j) * c, dim + k)
                # (0,b)(0,d) = (mu conj(d) b, 0)
                c, k = table[j][i]
                new[dim + i][dim + j] = (_conj_sign(j) * muf * c, k)
        table = new
        dim *= 2
    return tuple(tuple(row) for row in table)


@lru_cache(maxsize=None)
def _cached_algebra(slots: tuple[SquareClass, ...]) -> CompositionAlgebra:
    return CompositionAlgebra(slots)


def cayley_dickson(slots: Iterable[RationalLike]) -> CompositionAlgebra:
    """The composition algebra C(mu_1,...,mu_r); tables are cached per slot list."""
    return _cached_algebra(_check_slots(tuple(slots)))


def is_split(algebra: CompositionAlgebra) -> bool:
    """Split means the norm form is isotropic."""
    return isotropic(algebra.norm_form)


def comp_isomorphic(a: CompositionAlgebra, b: CompositionAlgebra) -> bool:
    """Composition algebras of equal rank are classified by their norm forms."""
    if a.rank != b.rank:
        raise ValueError(f"rank mismatch: {a.rank} vs {b.rank}")
    return isometric(a.norm_form, b.norm_form)


def algebra_from_json(data) -> CompositionAlgebra:
    if not isinstance(data, dict) or "mu" not in data:
        raise ValueError('an algebra must be an object with a "mu" list')
    mu = data["mu"]
    if not isinstance(mu, list):
        raise ValueError(f'"mu" must be a list of nonzero integers, got {mu!r}')
    for i, m in enumerate(mu):
        if not isinstance(m, int) or m == 0:
            raise ValueError(f'"mu" entry {i} must be a nonzero integer, got {m!r}')
    return cayley_dickson(mu)
