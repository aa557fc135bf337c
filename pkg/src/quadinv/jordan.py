"""Reduced Jordan algebras of hermitian matrices over a composition algebra.

An algebra is presented by (r, slots, q): the composition algebra
C = C(slots) of dimension 2^r and an odd-dimensional diagonal form
q = <a_1,...,a_n> twisting the conjugate-transpose involution.  Hermitian
means x_ij = (a_j/a_i) conj(x_ji); the product is the symmetrized matrix
product.  The cohomological invariant vector pairs the algebra's composition
class with the even Stiefel-Whitney classes of the det-normalized q, and the
quadratic trace form x -> trace(x^2) is computed two independent ways: a
closed formula and an element-level Gram matrix over an explicit hermitian
basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arith import SquareClass, square_class
from .cohomology import CohomClass, cup
from .composition import (
    AlgebraElement,
    CompositionAlgebra,
    cayley_dickson,
    comp_isomorphic,
    e_invariant,
    pfister_form,
)
from .forms import (
    QuadraticForm,
    form,
    form_from_json,
    isometric,
    lambda_square,
    normalize_det1,
    orthogonal_sum,
    scale,
    tensor,
    total_sw,
)


@dataclass(frozen=True)
class ReducedJordanAlgebra:
    """Presentation data (r, slots, q) of a reduced algebra of odd degree n >= 3."""

    r: int
    slots: tuple[SquareClass, ...]
    q: QuadraticForm

    def __post_init__(self):
        if self.r != len(self.slots):
            raise ValueError(f"r = {self.r} disagrees with {len(self.slots)} slots")
        if not 0 <= self.r <= 3:
            raise ValueError(f"rank must be 0..3, got {self.r}")
        if self.q.dim % 2 == 0 or self.q.dim < 3:
            raise ValueError(f"degree must be odd and >= 3, got {self.q.dim}")
        if self.r == 3 and self.q.dim != 3:
            raise ValueError("octonion coordinates require degree 3")

    @property
    def n(self) -> int:
        return self.q.dim

    @property
    def m(self) -> int:
        return (self.q.dim - 1) // 2

    @property
    def algebra(self) -> CompositionAlgebra:
        return cayley_dickson(self.slots)

    @property
    def coordinate_norm(self) -> QuadraticForm:
        return pfister_form(self.slots)

    def to_json(self) -> dict:
        return {"r": self.r, "mu": [mu.rep for mu in self.slots], "q": self.q.to_list()}

    def __repr__(self) -> str:
        return f"ReducedJordanAlgebra(r={self.r}, mu={[m.rep for m in self.slots]}, q={self.q})"


def make_jordan(r: int, slots: Sequence, q: QuadraticForm) -> ReducedJordanAlgebra:
    """Validate and store a presentation; see ReducedJordanAlgebra invariants."""
    return ReducedJordanAlgebra(r, tuple(square_class(mu) for mu in slots), q)


def split_jordan(r: int, n: int) -> ReducedJordanAlgebra:
    """The split algebra of rank r and degree n: split slots, unit form."""
    return make_jordan(r, (1,) * r, form([1] * n))


def jordan_from_json(data) -> ReducedJordanAlgebra:
    if not isinstance(data, dict):
        raise ValueError("a Jordan algebra must be an object with fields r, mu, q")
    for field in ("r", "mu", "q"):
        if field not in data:
            raise ValueError(f'missing field "{field}"')
    r = data["r"]
    if not isinstance(r, int):
        raise ValueError(f'"r" must be an integer, got {r!r}')
    mu = data["mu"]
    if not isinstance(mu, list) or not all(isinstance(x, int) and x != 0 for x in mu):
        raise ValueError(f'"mu" must be a list of nonzero integers, got {mu!r}')
    try:
        q = form_from_json(data["q"])
    except ValueError as exc:
        raise ValueError(f'"q": {exc}') from exc
    return make_jordan(r, mu, q)


# -- invariants and isomorphism ------------------------------------------------


def v_invariants(J: ReducedJordanAlgebra) -> list[CohomClass]:
    """The invariant vector [v_0, ..., v_m], v_i in degree r + 2i.

    v_i is the composition class of the algebra cupped with the 2i-th
    Stiefel-Whitney class of the det-normalized coordinate form, so the
    answer never depends on the scaling of q; v_0 is the composition class
    itself.
    """
    e = e_invariant(J.slots)
    sw = total_sw(normalize_det1(J.q))
    return [cup(e, sw[2 * i]) for i in range(J.m + 1)]


def v_invariants_json(J: ReducedJordanAlgebra) -> list[dict]:
    """The invariant vector as degree-tagged class serializations."""
    return [
        {"degree": J.r + 2 * i, "class": v.to_json()}
        for i, v in enumerate(v_invariants(J))
    ]


def jordan_isomorphic(J: ReducedJordanAlgebra, J2: ReducedJordanAlgebra) -> bool:
    """Isomorphism of reduced algebras of matching rank and degree.

    For associative coordinates the decision is: same composition algebra
    and isometric phi (x) q after det-1 normalization.  Octonionic algebras
    (r = 3, degree 3) are decided by their quadratic trace forms.
    """
    if J.r != J2.r:
        raise ValueError(f"rank mismatch: {J.r} vs {J2.r}")
    if J.n != J2.n:
        raise ValueError(f"degree mismatch: {J.n} vs {J2.n}")
    if not comp_isomorphic(J.algebra, J2.algebra):
        return False
    if J.r == 3:
        return isometric(trace_form_formula(J), trace_form_formula(J2))
    phi, phi2 = J.coordinate_norm, J2.coordinate_norm
    return isometric(
        tensor(phi, normalize_det1(J.q)), tensor(phi2, normalize_det1(J2.q))
    )


def trace_form_formula(J: ReducedJordanAlgebra) -> QuadraticForm:
    """Closed form of the quadratic trace: n<1> + <2> phi (x) ext^2(q)."""
    diag = form([1] * J.n)
    return orthogonal_sum(diag, scale(2, tensor(J.coordinate_norm, lambda_square(J.q))))


# -- hermitian matrix elements ----------------------------------------------------


@dataclass(frozen=True)
class JordanElement:
    """An n x n matrix over the coordinate algebra, stored row-major."""

    rows: tuple[tuple[AlgebraElement, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> AlgebraElement:
        return self.rows[i][j]

    def __add__(self, other: "JordanElement") -> "JordanElement":
        return JordanElement(
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            )
        )

    def scaled(self, c) -> "JordanElement":
        return JordanElement(tuple(tuple(x.scaled(c) for x in row) for row in self.rows))

    def to_json(self) -> list[list[list[str]]]:
        return [[x.to_json() for x in row] for row in self.rows]


def matrix_element(J: ReducedJordanAlgebra, rows) -> JordanElement:
    C = J.algebra
    rows = tuple(tuple(C.element(x.coords if isinstance(x, AlgebraElement) else x) for x in row) for row in rows)
    if len(rows) != J.n or any(len(row) != J.n for row in rows):
        raise ValueError(f"matrix must be {J.n} x {J.n}")
    return JordanElement(rows)


def identity_element(J: ReducedJordanAlgebra) -> JordanElement:
    C = J.algebra
    return JordanElement(
        tuple(
            tuple(C.one() if i == j else C.zero() for j in range(J.n))
            for i in range(J.n)
        )
    )


def is_hermitian(J: ReducedJordanAlgebra, x: JordanElement) -> bool:
    """Check x_ij = (a_j/a_i) conj(x_ji) for the twisting form's entries."""
    if x.n != J.n:
        raise ValueError(f"matrix size {x.n} does not match degree {J.n}")
    a = [Fraction(c.rep) for c in J.q.entries]
    for i in range(J.n):
        for j in range(J.n):
            if x.entry(i, j) != x.entry(j, i).conj().scaled(a[j] / a[i]):
                return False
    return True


def mat_mul(C: CompositionAlgebra, x: JordanElement, y: JordanElement) -> JordanElement:
    """Plain (non-symmetrized) matrix product over the coordinate algebra."""
    n = x.n
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = C.zero()
            for k in range(n):
                xik = x.entry(i, k)
                ykj = y.entry(k, j)
                if not (xik.is_zero or ykj.is_zero):
                    acc = acc + C.multiply(xik, ykj)
            row.append(acc)
        rows.append(tuple(row))
    return JordanElement(tuple(rows))


def jordan_product(J: ReducedJordanAlgebra, x: JordanElement, y: JordanElement) -> JordanElement:
    """The symmetrized product (xy + yx)/2 of two hermitian elements."""
    for name, el in (("x", x), ("y", y)):
        if not is_hermitian(J, el):
            raise ValueError(f"{name} is not hermitian for this presentation")
    C = J.algebra
    prod = (mat_mul(C, x, y) + mat_mul(C, y, x)).scaled(Fraction(1, 2))
    assert is_hermitian(J, prod), "symmetrized product left the hermitian space"
    return prod


def hermitian_basis(J: ReducedJordanAlgebra) -> list[JordanElement]:
    """The deterministic basis: E_ii, then a_i^-1 E_ij c + a_j^-1 E_ji conj(c).

    Off-diagonal elements run over pairs i < j (lexicographic) and the
    canonical basis c of the coordinate algebra; the length is
    n + 2^r n(n-1)/2.
    """
    C = J.algebra
    n = J.n
    a = [Fraction(c.rep) for c in J.q.entries]
    basis = []
    for i in range(n):
        rows = [[C.zero()] * n for _ in range(n)]
        rows[i][i] = C.one()
        basis.append(JordanElement(tuple(tuple(row) for row in rows)))
    for i in range(n):
        for j in range(i + 1, n):
            for t in range(C.dim):
                c = C.basis_element(t)
                rows = [[C.zero()] * n for _ in range(n)]
                rows[i][j] = c.scaled(1 / a[i])
                rows[j][i] = c.conj().scaled(1 / a[j])
                basis.append(JordanElement(tuple(tuple(row) for row in rows)))
    return basis


def _scalar_trace(C: CompositionAlgebra, x: JordanElement) -> Fraction:
    """Sum of diagonal entries, which must lie on the identity line."""
    total = C.zero()
    for i in range(x.n):
        total = total + x.entry(i, i)
    if any(total.coords[1:]):
        raise ArithmeticError("trace left the scalar line; element was not hermitian")
    return total.scalar_part


def trace_gram_oracle(J: ReducedJordanAlgebra) -> list[list[Fraction]]:
    """Gram matrix of x -> trace(x^2) over the deterministic hermitian basis.

    Entry (s,t) is trace(b_s b_t + b_t b_s)/2 computed with the coordinate
    algebra's multiplication table; no part of the closed trace formula is
    consulted, so diagonalizing this matrix independently checks it.
    """
    C = J.algebra
    basis = hermitian_basis(J)
    d = len(basis)
    gram = [[Fraction(0)] * d for _ in range(d)]
    for s in range(d):
        for t in range(s, d):
            # only the symmetrized product has a scalar trace
            sym = mat_mul(C, basis[s], basis[t]) + mat_mul(C, basis[t], basis[s])
            value = _scalar_trace(C, sym) / 2
            gram[s][t] = value
            gram[t][s] = value
    return gram
