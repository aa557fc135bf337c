"""Quadratic forms over Q: invariants, decision procedures, operations.

Forms are stored diagonally as tuples of square classes; Gram matrices enter
only through ``diagonalize``.  Isometry, isotropy and representation are
decided by the local-global classification: dimension, determinant,
signature and the Hasse symbol at every relevant place determine a form, and
isotropy over each completion follows the rank-stratified local conditions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .arith import (
    MINUS_ONE_CLASS,
    ONE_CLASS,
    Place,
    RationalLike,
    SquareClass,
    hilbert_symbol,
    legendre,
    relevant_places,
    square_class,
)
from .cohomology import UNIT, CohomClass, cup, symbol


@dataclass(frozen=True)
class QuadraticForm:
    """A nondegenerate diagonal form <a_1,...,a_n>, entries in Q*/(Q*)^2.

    Structural equality is entrywise; use ``isometric`` for the geometric
    equivalence.
    """

    entries: tuple[SquareClass, ...]

    def __post_init__(self):
        if not self.entries:
            raise ValueError("a quadratic form needs at least one entry")
        if not all(isinstance(a, SquareClass) for a in self.entries):
            raise TypeError("entries must be square classes")

    @property
    def dim(self) -> int:
        return len(self.entries)

    @property
    def det(self) -> SquareClass:
        d = ONE_CLASS
        for a in self.entries:
            d = d * a
        return d

    def to_list(self) -> list[int]:
        return [a.rep for a in self.entries]

    def __str__(self) -> str:
        return "<" + ",".join(str(a) for a in self.entries) + ">"


def form(entries: Iterable[RationalLike]) -> QuadraticForm:
    """Build a form from any nonzero rationals, canonicalizing entries."""
    return QuadraticForm(tuple(square_class(a) for a in entries))


def form_from_json(data) -> QuadraticForm:
    if not isinstance(data, list) or not data:
        raise ValueError(f"a form must be a nonempty list of nonzero integers, got {data!r}")
    entries = []
    for i, a in enumerate(data):
        if not isinstance(a, int) or a == 0:
            raise ValueError(f"form entry {i} must be a nonzero integer, got {a!r}")
        entries.append(square_class(a))
    return QuadraticForm(tuple(entries))


# -- Gram matrices -----------------------------------------------------------


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational")


def gram_from_json(data) -> list[list[Fraction]]:
    """Parse a row-major matrix of rational strings, e.g. [["2","1"],["1","2"]]."""
    if not isinstance(data, list) or not data:
        raise ValueError("gram must be a nonempty list of rows")
    rows = []
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != len(data):
            raise ValueError(f"gram row {i} must be a list of length {len(data)}")
        try:
            rows.append([_as_fraction(x) for x in row])
        except (TypeError, ValueError) as exc:
            raise ValueError(f"gram row {i} contains a non-rational entry") from exc
    return rows


def gram_to_json(matrix: Sequence[Sequence[Fraction]]) -> list[list[str]]:
    return [[str(x) for x in row] for row in matrix]


def gram_matrix(q: QuadraticForm) -> list[list[Fraction]]:
    """The diagonal Gram matrix of a form, over canonical representatives."""
    n = q.dim
    g = [[Fraction(0)] * n for _ in range(n)]
    for i, a in enumerate(q.entries):
        g[i][i] = Fraction(a.rep)
    return g


def diagonalize(gram) -> QuadraticForm:
    """Diagonalize a nonsingular symmetric rational matrix by congruence.

    Symmetric Gaussian elimination; when every remaining diagonal entry
    vanishes, a basis vector is replaced by its sum with another to create a
    nonzero diagonal entry (possible in characteristic 0).  Singular or
    non-symmetric input is rejected.
    """
    m = [[_as_fraction(x) for x in row] for row in gram]
    n = len(m)
    if n == 0 or any(len(row) != n for row in m):
        raise ValueError("gram matrix must be square and nonempty")
    for i in range(n):
        for j in range(i + 1, n):
            if m[i][j] != m[j][i]:
                raise ValueError("gram matrix must be symmetric")

    def add_into(dst: int, src: int, c: Fraction):
        for t in range(n):
            m[dst][t] += c * m[src][t]
        for t in range(n):
            m[t][dst] += c * m[t][src]

    def swap(i: int, j: int):
        m[i], m[j] = m[j], m[i]
        for row in m:
            row[i], row[j] = row[j], row[i]

    pivots = []
    for k in range(n):
        if m[k][k] == 0:
            pivot_row = next((i for i in range(k + 1, n) if m[i][i] != 0), None)
            if pivot_row is not None:
                swap(k, pivot_row)
            else:
                off = next(
                    ((i, j) for i in range(k, n) for j in range(i + 1, n) if m[i][j] != 0),
                    None,
                )
                if off is None:
                    raise ValueError("gram matrix is singular")
                i, j = off
                add_into(i, j, Fraction(1))
                if i != k:
                    swap(k, i)
        d = m[k][k]
        pivots.append(d)
        for i in range(k + 1, n):
            if m[i][k] != 0:
                add_into(i, k, -m[i][k] / d)
    return form(pivots)


def evaluate(q: QuadraticForm, coords: Sequence) -> Fraction:
    """Evaluate the form on a rational vector (canonical representatives)."""
    if len(coords) != q.dim:
        raise ValueError(f"expected {q.dim} coordinates, got {len(coords)}")
    total = Fraction(0)
    for a, x in zip(q.entries, coords):
        xf = _as_fraction(x)
        total += a.rep * xf * xf
    return total


# -- classical invariants ------------------------------------------------------


@dataclass(frozen=True, eq=False)
class FormInvariants:
    """dim, det, real signature and the Hasse symbols of a form.

    Equality compares the Hasse symbol as a map on all places (+1 off the
    stored support), so invariants of forms with different entry supports
    compare correctly.  By the local-global classification, equality of this
    record is isometry.
    """

    dim: int
    det: SquareClass
    signature: tuple[int, int]
    hasse: tuple[tuple[Place, int], ...]

    def hasse_at(self, v: Place) -> int:
        for place, value in self.hasse:
            if place == v:
                return value
        return 1

    def _minus_places(self) -> frozenset:
        return frozenset(v for v, value in self.hasse if value == -1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormInvariants):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.det == other.det
            and self.signature == other.signature
            and self._minus_places() == other._minus_places()
        )

    def __hash__(self) -> int:
        return hash((self.dim, self.det, self.signature, self._minus_places()))

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "det": self.det.rep,
            "signature": list(self.signature),
            "hasse": {str(v): value for v, value in self.hasse},
        }


def invariants(q: QuadraticForm) -> FormInvariants:
    """The complete invariant record: det, signature, Hasse at relevant places."""
    pos = sum(1 for a in q.entries if a.sign > 0)
    places = relevant_places(q.entries)
    hasse = []
    for v in places:
        eps = 1
        for i in range(q.dim):
            for j in range(i + 1, q.dim):
                eps *= hilbert_symbol(q.entries[i], q.entries[j], v)
        hasse.append((v, eps))
    return FormInvariants(q.dim, q.det, (pos, q.dim - pos), tuple(hasse))


def isometric(q: QuadraticForm, q2: QuadraticForm) -> bool:
    """Isometry over Q: equality of dim, det, signature and all Hasse symbols."""
    return invariants(q) == invariants(q2)


# -- isotropy and representation ----------------------------------------------


def _is_local_square(a: SquareClass, v: Place) -> bool:
    if v.is_real:
        return a.sign > 0
    p = v.p
    assert p is not None
    if p in a.primes:
        return False
    u = a.rep
    if p == 2:
        return u % 8 == 1
    return legendre(u, p) == 1


def _locally_isotropic(q: QuadraticForm, inv: FormInvariants, v: Place) -> bool:
    n = q.dim
    if v.is_real:
        pos, neg = inv.signature
        return pos > 0 and neg > 0
    if n == 2:
        return _is_local_square(-inv.det, v)
    if n == 3:
        return hilbert_symbol(MINUS_ONE_CLASS, -inv.det, v) == inv.hasse_at(v)
    if n == 4:
        if not _is_local_square(inv.det, v):
            return True
        return inv.hasse_at(v) == hilbert_symbol(MINUS_ONE_CLASS, MINUS_ONE_CLASS, v)
    return True


def isotropic(q: QuadraticForm) -> bool:
    """Does the form have a nontrivial rational zero?

    Local-global: a binary form is isotropic exactly when -det is a square;
    ranks 3 and 4 are checked at the real place and every relevant prime by
    the local conditions on (det, hasse); rank >= 5 needs only indefiniteness.
    """
    n = q.dim
    if n == 1:
        return False
    inv = invariants(q)
    pos, neg = inv.signature
    if not (pos > 0 and neg > 0):
        return False
    if n == 2:
        return (-inv.det).is_trivial
    if n >= 5:
        return True
    return all(_locally_isotropic(q, inv, v) for v, _ in inv.hasse)


def represents(q: QuadraticForm, value: RationalLike) -> bool:
    """Membership of a nonzero rational in the value set of the form."""
    lam = square_class(value)
    return isotropic(orthogonal_sum(q, form([-lam.rep])))


# -- algebraic operations -------------------------------------------------------


def orthogonal_sum(q: QuadraticForm, q2: QuadraticForm) -> QuadraticForm:
    return QuadraticForm(q.entries + q2.entries)


def tensor(q: QuadraticForm, q2: QuadraticForm) -> QuadraticForm:
    """Tensor product: all pairwise entry products in row-major order."""
    return QuadraticForm(tuple(a * b for a in q.entries for b in q2.entries))


def scale(value: RationalLike, q: QuadraticForm) -> QuadraticForm:
    lam = square_class(value)
    return QuadraticForm(tuple(lam * a for a in q.entries))


def lambda_square(q: QuadraticForm) -> QuadraticForm:
    """The exterior-square form <a_i a_j : i < j>, lexicographic order."""
    if q.dim < 2:
        raise ValueError("the exterior square needs dimension >= 2")
    entries = tuple(
        q.entries[i] * q.entries[j] for i in range(q.dim) for j in range(i + 1, q.dim)
    )
    return QuadraticForm(entries)


def normalize_det1(q: QuadraticForm) -> QuadraticForm:
    """Scale an odd-dimensional form to determinant 1 (by its own det)."""
    if q.dim % 2 == 0:
        raise ValueError("det-1 normalization needs odd dimension")
    return scale(q.det, q)


def similar(q: QuadraticForm, q2: QuadraticForm) -> bool:
    """Similarity of odd-dimensional forms of equal dimension.

    In odd dimension the only possible similarity factor is d(q)d(q'), so
    the decision reduces to one isometry test.
    """
    if q.dim % 2 == 0 or q2.dim % 2 == 0:
        raise ValueError("similarity is only decided in odd dimension")
    if q.dim != q2.dim:
        raise ValueError("similarity needs equal dimensions")
    return isometric(q, scale(q.det * q2.det, q2))


def simple_phi_step(
    q: QuadraticForm, index: int, value: RationalLike, phi: QuadraticForm
) -> QuadraticForm:
    """Multiply one diagonal entry by a value represented by phi.

    Such a step leaves the tensor product phi (x) q unchanged up to isometry
    when phi is a Pfister (or hyperbolic) form; chains of these steps connect
    any two diagonalizations with isometric phi-multiples.
    """
    lam = square_class(value)
    if not (0 <= index < q.dim):
        raise ValueError(f"entry index {index} out of range for dimension {q.dim}")
    if not represents(phi, lam):
        raise ValueError(f"{lam} is not represented by {phi}")
    entries = list(q.entries)
    entries[index] = lam * entries[index]
    return QuadraticForm(tuple(entries))


# -- Stiefel-Whitney classes -----------------------------------------------------


def total_sw(q: QuadraticForm) -> list[CohomClass]:
    """The graded parts of prod_j (1 + (a_j)), indexed 0..dim.

    Independent of the diagonalization presenting the form, which the
    verification suites check against random Gram congruences.
    """
    total = UNIT
    for a in q.entries:
        total = total + cup(total, symbol([a]))
    return [total.homogeneous_part(i) for i in range(q.dim + 1)]
