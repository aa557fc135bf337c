"""Canonical-form model of the mod-2 Galois cohomology ring of Q.

The graded ring is represented degree by degree, each degree in a canonical
form with decidable equality:

* degree 0: one bit (Z/2);
* degree 1: a square class (Q*/(Q*)^2, trivial class = zero);
* degree 2: a finite set of places of even cardinality, the local-invariant
  picture of the 2-torsion of the Brauer group;
* degree n >= 3: one bit, the restriction to the unique real place (mod-2
  cohomology of a number field is detected at the real places in degree 3
  and up).

Sums are degreewise and cup products distribute over the degree components:
two degree-1 classes multiply through the Hilbert symbol, and any product
landing in degree >= 3 is the AND of the factors' real components.  Classes
are immutable and structurally canonical, so ``==`` decides ring equality.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Union

from .arith import (
    ONE_CLASS,
    Place,
    RationalLike,
    SquareClass,
    hilbert_symbol,
    relevant_places,
    square_class,
)

Component = Union[int, SquareClass, frozenset]


def _validate_component(degree: int, comp: Component) -> Component | None:
    """Normalize one graded component; returns None when it is zero."""
    if degree < 0:
        raise ValueError(f"negative degree {degree}")
    if degree == 1:
        if not isinstance(comp, SquareClass):
            raise TypeError("degree-1 component must be a SquareClass")
        return None if comp.is_trivial else comp
    if degree == 2:
        places = frozenset(comp)  # type: ignore[arg-type]
        if not all(isinstance(v, Place) for v in places):
            raise TypeError("degree-2 component must be a set of places")
        if len(places) % 2:
            raise ValueError("degree-2 place sets must have even cardinality")
        return places or None
    if comp not in (0, 1):
        raise TypeError(f"degree-{degree} component must be a bit")
    return comp or None


class CohomClass:
    """A finitely supported graded element of H*(Q, Z/2) in canonical form."""

    __slots__ = ("_parts",)

    def __init__(self, components: Mapping[int, Component] | Iterable[tuple[int, Component]] = ()):
        items = components.items() if isinstance(components, Mapping) else components
        parts = {}
        for degree, comp in items:
            norm = _validate_component(degree, comp)
            if norm is not None:
                if degree in parts:
                    raise ValueError(f"duplicate degree {degree}")
                parts[degree] = norm
        self._parts = tuple(sorted(parts.items()))

    # -- structure ---------------------------------------------------------

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self._parts)

    def component(self, degree: int) -> Component:
        """The degree-d component, in its zero form when absent."""
        for d, comp in self._parts:
            if d == degree:
                return comp
        if degree == 1:
            return ONE_CLASS
        if degree == 2:
            return frozenset()
        return 0

    def homogeneous_part(self, degree: int) -> "CohomClass":
        return CohomClass({degree: self.component(degree)})

    @property
    def is_zero(self) -> bool:
        return not self._parts

    def __eq__(self, other) -> bool:
        return isinstance(other, CohomClass) and self._parts == other._parts

    def __hash__(self) -> int:
        return hash(self._parts)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "CohomClass") -> "CohomClass":
        if not isinstance(other, CohomClass):
            return NotImplemented
        parts: dict[int, Component] = dict(self._parts)
        for d, comp in other._parts:
            if d not in parts:
                parts[d] = comp
            elif d == 1:
                parts[d] = parts[d] * comp  # type: ignore[operator]
            elif d == 2:
                parts[d] = parts[d] ^ comp  # type: ignore[operator]
            else:
                parts[d] = parts[d] ^ comp  # type: ignore[operator]
        return CohomClass(parts)

    def __mul__(self, other: "CohomClass") -> "CohomClass":
        if not isinstance(other, CohomClass):
            return NotImplemented
        total = CohomClass()
        for d1, c1 in self._parts:
            for d2, c2 in other._parts:
                total = total + _component_product(d1, c1, d2, c2)
        return total

    # -- presentation --------------------------------------------------------

    def __repr__(self) -> str:
        if self.is_zero:
            return "CohomClass(0)"
        bits = []
        for d, comp in self._parts:
            if d == 1:
                bits.append(f"({comp})")
            elif d == 2:
                bits.append("{" + ",".join(str(v) for v in sorted(comp)) + "}")
            else:
                bits.append(f"deg{d}:1")
        return "CohomClass[" + " + ".join(bits) + "]"

    def to_json(self) -> dict:
        """Serialize as a degree-keyed map; see ``cohom_from_json``."""
        out = {}
        for d, comp in self._parts:
            if d == 1:
                out[str(d)] = comp.rep  # type: ignore[union-attr]
            elif d == 2:
                out[str(d)] = serialize_places(comp)  # type: ignore[arg-type]
            else:
                out[str(d)] = 1
        return out


ZERO = CohomClass()
UNIT = CohomClass({0: 1})


def serialize_places(places: frozenset) -> list[str]:
    """Wire order for place lists: finite primes ascending, then "inf"."""
    finite = sorted(v.p for v in places if not v.is_real)
    out = [str(p) for p in finite]
    if any(v.is_real for v in places):
        out.append("inf")
    return out


def _real_component(degree: int, comp: Component) -> int:
    """Restriction of one component to the real place, as a bit."""
    if degree == 1:
        return 1 if comp.sign < 0 else 0  # type: ignore[union-attr]
    if degree == 2:
        return 1 if any(v.is_real for v in comp) else 0  # type: ignore[union-attr]
    return int(comp)  # type: ignore[arg-type]


def _component_product(d1: int, c1: Component, d2: int, c2: Component) -> CohomClass:
    if d1 > d2:
        d1, c1, d2, c2 = d2, c2, d1, c1
    if d1 == 0:
        return CohomClass({d2: c2}) if c1 else ZERO
    if d1 == 1 and d2 == 1:
        return symbol([c1, c2])  # type: ignore[list-item]
    bit = _real_component(d1, c1) & _real_component(d2, c2)
    return CohomClass({d1 + d2: bit})


def symbol(classes: Iterable[RationalLike]) -> CohomClass:
    """The cup product (a_1)...(a_n) of degree-1 classes, canonicalized.

    Degree 2 is the set of places with Hilbert symbol -1 (even by the
    product formula); degree >= 3 survives exactly when every argument is
    negative, i.e. when the restriction to the real place is nonzero.
    """
    cs = [square_class(a) for a in classes]
    if not cs:
        return UNIT
    if len(cs) == 1:
        return CohomClass({1: cs[0]})
    if len(cs) == 2:
        bad = frozenset(v for v in relevant_places(cs) if hilbert_symbol(cs[0], cs[1], v) == -1)
        return CohomClass({2: bad})
    bit = 1 if all(c.sign < 0 for c in cs) else 0
    return CohomClass({len(cs): bit})


def add(x: CohomClass, y: CohomClass) -> CohomClass:
    """Degreewise mod-2 sum; degree 1 adds through the square-class group."""
    return x + y


def cup(x: CohomClass, y: CohomClass) -> CohomClass:
    """Bilinear extension of the symbol product to graded classes."""
    return x * y


def is_zero(x: CohomClass) -> bool:
    return x.is_zero


def cohom_from_json(data: Mapping) -> CohomClass:
    """Parse the degree-keyed serialization produced by ``to_json``."""
    parts: dict[int, Component] = {}
    for key, value in data.items():
        try:
            degree = int(key)
        except (TypeError, ValueError) as exc:
            raise ValueError(f"invalid degree key {key!r}") from exc
        if degree < 0:
            raise ValueError(f"invalid degree key {key!r}")
        if degree == 1:
            if not isinstance(value, int) or value == 0:
                raise ValueError(f"degree-1 component must be a nonzero integer, got {value!r}")
            parts[degree] = square_class(value)
        elif degree == 2:
            if not isinstance(value, list):
                raise ValueError(f"degree-2 component must be a list of places, got {value!r}")
            parts[degree] = frozenset(Place.parse(v) for v in value)
        else:
            if value not in (0, 1):
                raise ValueError(f"degree-{degree} component must be 0 or 1, got {value!r}")
            parts[degree] = value
    return CohomClass(parts)
