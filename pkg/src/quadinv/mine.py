"""Exhaustive search for invariant collisions among reduced Jordan algebras.

The search space for a given rank r and odd degree n is: determinant-1
diagonal forms with entries drawn from {+-1} and {+-p : p prime <= bound},
taken up to entry permutation, over one fixed coordinate algebra per rank
(the all-minus-one slots, the division choice at desk scale).  Algebras are
grouped by their full invariant vector; a certificate is emitted for every
non-isomorphic pair inside a group, naming the classical invariant that
separates the pair.  An empty result certifies that the invariant vector
classifies the space; a non-empty result is data, not a counterexample to
anything asserted elsewhere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations_with_replacement

from .arith import ONE_CLASS, SquareClass, factor_bound, is_prime, square_class
from .forms import FormInvariants, QuadraticForm, invariants, normalize_det1, tensor
from .jordan import (
    ReducedJordanAlgebra,
    jordan_from_json,
    jordan_isomorphic,
    make_jordan,
    trace_form_formula,
    v_invariants_json,
)

#: One coordinate algebra per rank keeps the spaces tractable.
FIXED_SLOTS = {0: (), 1: (-1,), 2: (-1, -1), 3: (-1, -1, -1)}


def _classification_form(J: ReducedJordanAlgebra) -> QuadraticForm:
    if J.r == 3:
        return trace_form_formula(J)
    return tensor(J.coordinate_norm, normalize_det1(J.q))


def _distinguishing_field(a: FormInvariants, b: FormInvariants) -> str:
    if a.dim != b.dim:
        return "dim"
    if a.det != b.det:
        return "det"
    if a.signature != b.signature:
        return "signature"
    places = sorted(
        {v for v, _ in a.hasse} | {v for v, _ in b.hasse}, key=lambda v: v.sort_key()
    )
    for v in places:
        if a.hasse_at(v) != b.hasse_at(v):
            return f"hasse@{v}"
    raise ValueError("invariants do not differ")


@dataclass(frozen=True)
class CollisionCertificate:
    """Two non-isomorphic algebras sharing a full invariant vector.

    Everything needed to re-check the claim is stored: both presentations,
    both (equal) invariant vectors, the verdict, and the classical invariant
    of the classification forms that tells the two apart.
    """

    left: dict
    right: dict
    v_left: list
    v_right: list
    isomorphic: bool
    distinguishing: str

    def to_json(self) -> dict:
        return {
            "left": self.left,
            "right": self.right,
            "v_left": self.v_left,
            "v_right": self.v_right,
            "isomorphic": self.isomorphic,
            "distinguishing": self.distinguishing,
        }

    def verify(self) -> bool:
        """Recompute the certificate from its stored data alone."""
        left = jordan_from_json(self.left)
        right = jordan_from_json(self.right)
        if v_invariants_json(left) != self.v_left:
            return False
        if v_invariants_json(right) != self.v_right:
            return False
        if self.v_left != self.v_right:
            return False
        if jordan_isomorphic(left, right) or self.isomorphic:
            return False
        inv_l = invariants(_classification_form(left))
        inv_r = invariants(_classification_form(right))
        return _distinguishing_field(inv_l, inv_r) == self.distinguishing


def certificate_from_json(data: dict) -> CollisionCertificate:
    try:
        return CollisionCertificate(
            left=data["left"],
            right=data["right"],
            v_left=data["v_left"],
            v_right=data["v_right"],
            isomorphic=data["isomorphic"],
            distinguishing=data["distinguishing"],
        )
    except KeyError as exc:
        raise ValueError(f"certificate is missing field {exc.args[0]!r}") from exc


def _entry_candidates(bound: int) -> list[SquareClass]:
    reps = [1, -1]
    for p in range(2, bound + 1):
        if is_prime(p):
            reps.extend((p, -p))
    return [square_class(x) for x in sorted(reps, key=lambda x: (abs(x), -x))]


def enumerate_forms(n: int, bound: int) -> list[QuadraticForm]:
    """All det-1 entry multisets of size n over the candidate classes."""
    forms = []
    for combo in combinations_with_replacement(_entry_candidates(bound), n):
        det = ONE_CLASS
        for c in combo:
            det = det * c
        if det.is_trivial:
            forms.append(QuadraticForm(combo))
    return forms


def collision_search(r: int, n: int, bound: int = 7) -> list[CollisionCertificate]:
    """Group the search space by invariant vector and certify collisions.

    Deterministic: candidate order is fixed and the output is sorted by its
    canonical serialization.
    """
    if n % 2 == 0 or n < 3:
        raise ValueError(f"degree must be odd and >= 3, got {n}")
    if not 0 <= r <= 3:
        raise ValueError(f"rank must be 0..3, got {r}")
    if r == 3 and n != 3:
        raise ValueError("rank 3 requires degree 3")
    if bound < 1 or bound > factor_bound():
        raise ValueError(f"entry bound must be within 1..{factor_bound()}, got {bound}")

    slots = FIXED_SLOTS[r]
    groups: dict[str, list[tuple[ReducedJordanAlgebra, list, FormInvariants]]] = {}
    for q in enumerate_forms(n, bound):
        J = make_jordan(r, slots, q)
        v_json = v_invariants_json(J)
        key = json.dumps(v_json, sort_keys=True)
        iso_key = invariants(_classification_form(J))
        groups.setdefault(key, []).append((J, v_json, iso_key))

    certificates = []
    for members in groups.values():
        if len(members) < 2:
            continue
        for i in range(len(members)):
            J1, v1, k1 = members[i]
            for J2, v2, k2 in members[i + 1 :]:
                if k1 == k2:
                    continue
                certificates.append(
                    CollisionCertificate(
                        left=J1.to_json(),
                        right=J2.to_json(),
                        v_left=v1,
                        v_right=v2,
                        isomorphic=False,
                        distinguishing=_distinguishing_field(k1, k2),
                    )
                )
    certificates.sort(key=lambda c: json.dumps(c.to_json(), sort_keys=True))
    return certificates
