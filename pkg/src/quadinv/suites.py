"""Seeded verification suites: every module property as an executable check.

Each suite draws its instances from an explicit ``random.Random(seed)``, so a
report is reproducible from (name, seed, parameters) alone.  Default sizes
live in ``suites_manifest.json`` next to this file; ``run_suite`` merges
overrides on top.  A failure records the full serialized inputs of the case.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from . import oracles
from .arith import (
    Place,
    REAL_PLACE,
    SquareClass,
    hilbert_symbol,
    relevant_places,
    square_class,
)
from .cohomology import CohomClass, UNIT, cohom_from_json, symbol
from .composition import (
    AlgebraElement,
    cayley_dickson,
    e_invariant,
    pfister_form,
)
from .forms import (
    QuadraticForm,
    diagonalize,
    evaluate,
    form,
    form_from_json,
    gram_from_json,
    gram_matrix,
    gram_to_json,
    invariants,
    isometric,
    isotropic,
    orthogonal_sum,
    represents,
    scale,
    simple_phi_step,
    tensor,
    total_sw,
)
from .jordan import (
    JordanElement,
    ReducedJordanAlgebra,
    identity_element,
    is_hermitian,
    jordan_from_json,
    jordan_isomorphic,
    jordan_product,
    make_jordan,
    mat_mul,
    split_jordan,
    trace_form_formula,
    trace_gram_oracle,
    v_invariants,
)


@dataclass(frozen=True)
class SuiteReport:
    """Outcome of one suite run; passed iff the failure list is empty."""

    suite: str
    cases: int
    failures: tuple[dict, ...]
    seed: int
    elapsed: float

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        """Canonical content: elapsed time is excluded so identical seeds
        produce byte-identical serializations."""
        return {
            "suite": self.suite,
            "cases": self.cases,
            "failures": list(self.failures),
            "seed": self.seed,
            "passed": self.passed,
        }


class _Recorder:
    def __init__(self):
        self.cases = 0
        self.failures: list[dict] = []

    def check(self, ok: bool, **data):
        self.cases += 1
        if not ok:
            self.failures.append(data)


# -- random generators ------------------------------------------------------------


def random_rational(rng: random.Random, bound: int) -> Fraction:
    num = 0
    while num == 0:
        num = rng.randint(-bound, bound)
    return Fraction(num, rng.randint(1, bound))


def random_class(rng: random.Random, bound: int = 30) -> SquareClass:
    n = 0
    while n == 0:
        n = rng.randint(-bound, bound)
    return square_class(n)


def random_form(rng: random.Random, dim: int, bound: int = 30) -> QuadraticForm:
    return form([random_class(rng, bound) for _ in range(dim)])


def random_unimodular(rng: random.Random, n: int, steps: int = 5) -> list[list[int]]:
    t = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(steps):
        kind = rng.randrange(3)
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if kind == 0 and i != j:
            c = rng.choice([-2, -1, 1, 2])
            for col in range(n):
                t[i][col] += c * t[j][col]
        elif kind == 1 and i != j:
            t[i], t[j] = t[j], t[i]
        else:
            t[i] = [-x for x in t[i]]
    return t


def congruent_gram(rng: random.Random, q: QuadraticForm, steps: int = 5) -> list[list[Fraction]]:
    """T^t G T for the diagonal Gram of q and a random unimodular T."""
    g = gram_matrix(q)
    n = q.dim
    t = random_unimodular(rng, n, steps)
    tg = [[sum(Fraction(t[k][i]) * g[k][l] for k in range(n)) for l in range(n)] for i in range(n)]
    return [
        [sum(tg[i][k] * Fraction(t[k][j]) for k in range(n)) for j in range(n)]
        for i in range(n)
    ]


def random_slots(rng: random.Random, r: int, bound: int = 30) -> list[SquareClass]:
    return [random_class(rng, bound) for _ in range(r)]


def pfister_value(rng: random.Random, phi: QuadraticForm, bound: int = 3) -> Fraction:
    """A nonzero value of the form, hence a legal chain-step multiplier."""
    while True:
        vec = [rng.randint(-bound, bound) for _ in range(phi.dim)]
        val = evaluate(phi, vec)
        if val:
            return val


def random_element(rng: random.Random, algebra, bound: int = 6) -> AlgebraElement:
    return algebra.element(
        [Fraction(rng.randint(-bound, bound), rng.randint(1, 2)) for _ in range(algebra.dim)]
    )


def random_hermitian(rng: random.Random, J: ReducedJordanAlgebra, bound: int = 4) -> JordanElement:
    C = J.algebra
    a = [Fraction(c.rep) for c in J.q.entries]
    n = J.n
    rows = [[C.zero() for _ in range(n)] for i in range(n)]
    for i in range(n):
        rows[i][i] = C.scalar(rng.randint(-bound, bound))
        for j in range(i + 1, n):
            x = C.element([Fraction(rng.randint(-bound, bound)) for _ in range(C.dim)])
            rows[i][j] = x
            rows[j][i] = x.conj().scaled(a[i] / a[j])
    return JordanElement(tuple(tuple(row) for row in rows))


def random_jordan(rng: random.Random, r: int, n: int, bound: int = 10) -> ReducedJordanAlgebra:
    return make_jordan(r, random_slots(rng, r, bound), random_form(rng, n, bound))


# -- arith suites -------------------------------------------------------------------


def _suite_hilbert_product_formula(rng, cases=1000, bound=10**4):
    rec = _Recorder()
    for _ in range(cases):
        a = square_class(random_rational(rng, bound))
        b = square_class(random_rational(rng, bound))
        product = 1
        for v in relevant_places([a, b]):
            product *= hilbert_symbol(a, b, v)
        rec.check(product == 1, a=a.rep, b=b.rep)
    return rec


def _suite_hilbert_bimultiplicativity(rng, cases=300, bound=200):
    rec = _Recorder()
    for _ in range(cases):
        a, a2, b = (square_class(random_rational(rng, bound)) for _ in range(3))
        for v in relevant_places([a, a2, b]):
            lhs = hilbert_symbol(a * a2, b, v)
            rhs = hilbert_symbol(a, b, v) * hilbert_symbol(a2, b, v)
            rec.check(lhs == rhs, a=a.rep, a2=a2.rep, b=b.rep, place=str(v))
    return rec


def _suite_hilbert_oracle(rng, cases=120, bound=30):
    """Closed formulas against the exhaustive-congruence search, p <= 7."""
    rec = _Recorder()
    places = [REAL_PLACE, Place(2), Place(3), Place(5), Place(7)]
    for _ in range(cases):
        a, b = random_class(rng, bound), random_class(rng, bound)
        v = rng.choice(places)
        rec.check(
            hilbert_symbol(a, b, v) == oracles.hilbert_symbol_search(a, b, v),
            a=a.rep,
            b=b.rep,
            place=str(v),
        )
    return rec


def _suite_symbol_norm_duality(rng, cases=60, bound=15, search_bound=40):
    """All local symbols +1 iff z^2 = ax^2 + by^2 is rationally soluble."""
    rec = _Recorder()
    for _ in range(cases):
        a, b = random_class(rng, bound), random_class(rng, bound)
        everywhere = all(
            hilbert_symbol(a, b, v) == 1 for v in relevant_places([a, b])
        )
        witness = oracles.isotropy_search([a.rep, b.rep, -1], search_bound)
        if witness is not None:
            x, y, z = witness
            sound = a.rep * x * x + b.rep * y * y - z * z == 0 and any(witness)
            rec.check(sound and everywhere, a=a.rep, b=b.rep, witness=list(witness))
        else:
            rec.check(not everywhere, a=a.rep, b=b.rep, witness=None)
    return rec


def _suite_square_class_canonical(rng, cases=300, bound=10**4):
    rec = _Recorder()
    for _ in range(cases):
        a = random_rational(rng, bound)
        b = random_rational(rng, 50)
        ok = square_class(a * b * b) == square_class(a)
        ok = ok and square_class(square_class(a).rep) == square_class(a)
        rec.check(ok, a=str(a), b=str(b))
    return rec


# -- cohomology suites -----------------------------------------------------------------


def _suite_steinberg(rng, cases=200, bound=500):
    rec = _Recorder()
    for _ in range(cases):
        a = random_rational(rng, bound)
        if a == 1:
            a = Fraction(2)
        rec.check(symbol([a, 1 - a]).is_zero, a=str(a))
    return rec


def _suite_square_symbol_relation(rng, cases=200, bound=500):
    rec = _Recorder()
    for _ in range(cases):
        a = random_rational(rng, bound)
        rec.check(symbol([a, a]) == symbol([a, -1]), a=str(a))
    return rec


def _random_symbol(rng, max_degree=3, bound=30) -> CohomClass:
    return symbol([random_class(rng, bound) for _ in range(rng.randint(0, max_degree))])


def _suite_cup_ring_laws(rng, cases=150, bound=30):
    rec = _Recorder()
    for _ in range(cases):
        x, y, z = (_random_symbol(rng, 2, bound) for _ in range(3))
        ok = (x * y) == (y * x)
        ok = ok and (x * y) * z == x * (y * z)
        ok = ok and (x + y) * z == (x * z) + (y * z)
        ok = ok and UNIT * x == x
        rec.check(ok, x=x.to_json(), y=y.to_json(), z=z.to_json())
    return rec


def _suite_degree_two_parity(rng, cases=200, bound=200):
    rec = _Recorder()
    for _ in range(cases):
        a, b = random_class(rng, bound), random_class(rng, bound)
        part = symbol([a, b]).component(2)
        rec.check(len(part) % 2 == 0, a=a.rep, b=b.rep)
    return rec


def _suite_high_degree_soundness(rng, cases=100, bound=20):
    """Degree >= 3 sums of symbols carry exactly the all-negative parity."""
    rec = _Recorder()
    for _ in range(cases):
        degree = rng.randint(3, 6)
        tuples = [
            [random_class(rng, bound) for _ in range(degree)]
            for _ in range(rng.randint(1, 5))
        ]
        total = CohomClass()
        for t in tuples:
            total = total + symbol(t)
        parity = sum(1 for t in tuples if all(c.sign < 0 for c in t)) % 2
        ok = total.component(degree) == parity
        # resummation: cancelling duplicates leaves the class untouched
        extra = [random_class(rng, bound) for _ in range(degree)]
        resummed = total + symbol(extra) + symbol(extra)
        ok = ok and resummed == total
        rec.check(ok, tuples=[[c.rep for c in t] for t in tuples], degree=degree)
    return rec


# -- forms suites ---------------------------------------------------------------------


def _suite_sw_diagonalization(rng, cases=100, max_dim=6, bound=30):
    rec = _Recorder()
    for _ in range(cases):
        q = random_form(rng, rng.randint(1, max_dim), bound)
        q2 = diagonalize(congruent_gram(rng, q))
        ok = total_sw(q) == total_sw(q2) and isometric(q, q2)
        rec.check(ok, q=q.to_list(), q2=q2.to_list())
    return rec


def _suite_isometry_invariants(rng, cases=80, bound=30):
    rec = _Recorder()
    for _ in range(cases):
        q = random_form(rng, rng.randint(1, 5), bound)
        q2 = diagonalize(congruent_gram(rng, q))
        q3 = diagonalize(congruent_gram(rng, q2))
        other = random_form(rng, q.dim, bound)
        ok = isometric(q, q)
        ok = ok and isometric(q, q2) and isometric(q2, q) and isometric(q, q3)
        ok = ok and invariants(q) == invariants(q2) and total_sw(q) == total_sw(q2)
        if isometric(q, other) != isometric(other, q):
            ok = False
        rec.check(ok, q=q.to_list(), q2=q2.to_list(), other=other.to_list())
    return rec


def _suite_witt_cancellation(rng, cases=80, bound=30):
    rec = _Recorder()
    for _ in range(cases):
        dim = rng.randint(1, 4)
        q = random_form(rng, dim, bound)
        q2 = (
            diagonalize(congruent_gram(rng, q))
            if rng.random() < 0.5
            else random_form(rng, dim, bound)
        )
        a = random_class(rng, bound)
        extended = isometric(orthogonal_sum(q, form([a])), orthogonal_sum(q2, form([a])))
        rec.check(
            extended == isometric(q, q2), q=q.to_list(), q2=q2.to_list(), a=a.rep
        )
    return rec


def _suite_represents_oracle(rng, cases=60, bound=10, search_bound=30):
    rec = _Recorder()
    for _ in range(cases):
        q = random_form(rng, rng.randint(1, 3), bound)
        lam = random_class(rng, bound)
        hit = oracles.representation_search(q.to_list(), lam.rep, search_bound)
        if hit is None:
            rec.check(True, q=q.to_list(), value=lam.rep, witness=None)
            continue
        coords, t = hit
        sound = evaluate(q, coords) == Fraction(lam.rep * t * t)
        rec.check(
            sound and represents(q, lam),
            q=q.to_list(),
            value=lam.rep,
            witness=[list(coords), t],
        )
    return rec


def _suite_isotropy_rules(rng, cases=100, bound=30, search_bound=12):
    rec = _Recorder()
    for _ in range(cases):
        sign = rng.choice([1, -1])
        definite = form(
            [sign * abs(random_class(rng, bound).rep) for _ in range(rng.randint(1, 5))]
        )
        ok = not isotropic(definite)
        big = random_form(rng, rng.randint(5, 7), bound)
        pos = sum(1 for a in big.entries if a.sign > 0)
        if 0 < pos < big.dim:
            ok = ok and isotropic(big)
        small = random_form(rng, rng.randint(2, 4), 12)
        witness = oracles.isotropy_search(small.to_list(), search_bound)
        if witness is not None:
            ok = ok and isotropic(small) and evaluate(small, witness) == 0
        rec.check(
            ok,
            definite=definite.to_list(),
            big=big.to_list(),
            small=small.to_list(),
            witness=list(witness) if witness else None,
        )
    return rec


def _suite_chain_equivalence(rng, cases=100, ranks=(1, 2, 3), bound=15, max_steps=5):
    """Multiplying entries by represented values fixes e_r . w_j for all j."""
    rec = _Recorder()
    for r in ranks:
        for _ in range(cases):
            slots = random_slots(rng, r, bound)
            phi = pfister_form(slots)
            e = e_invariant(slots)
            q = random_form(rng, rng.choice([3, 5]), bound)
            q2 = q
            for _ in range(rng.randint(1, max_steps)):
                lam = pfister_value(rng, phi)
                q2 = simple_phi_step(q2, rng.randrange(q2.dim), lam, phi)
            ok = isometric(tensor(phi, q), tensor(phi, q2))
            w, w2 = total_sw(q), total_sw(q2)
            ok = ok and all(e * w[j] == e * w2[j] for j in range(q.dim + 1))
            rec.check(ok, r=r, mu=[s.rep for s in slots], q=q.to_list(), q2=q2.to_list())
    return rec


def _suite_normalization(rng, cases=100, bound=15):
    """Tensor isometry up to scaling forces it on det-normalized forms."""
    rec = _Recorder()
    for _ in range(cases):
        r = rng.randint(0, 3)
        slots = random_slots(rng, r, bound)
        phi = pfister_form(slots)
        q = random_form(rng, rng.choice([3, 5]), bound)
        qhat = q
        for _ in range(rng.randint(0, 3)):
            qhat = simple_phi_step(
                qhat, rng.randrange(qhat.dim), pfister_value(rng, phi), phi
            )
        nu = square_class(pfister_value(rng, phi))
        lam = random_class(rng, bound)
        q2 = scale(nu * lam, qhat)
        hypothesis = isometric(tensor(phi, q), tensor(phi, scale(lam, q2)))
        conclusion = isometric(
            tensor(phi, scale(q.det, q)), tensor(phi, scale(q2.det, q2))
        )
        rec.check(
            hypothesis and conclusion,
            r=r,
            mu=[s.rep for s in slots],
            q=q.to_list(),
            q2=q2.to_list(),
            lam=lam.rep,
        )
    return rec


# -- composition suites -------------------------------------------------------------------


def _suite_composition_law(rng, cases=500, ranks=(0, 1, 2, 3), bound=15):
    rec = _Recorder()
    for r in ranks:
        for _ in range(cases):
            C = cayley_dickson(random_slots(rng, r, bound))
            x, y = random_element(rng, C), random_element(rng, C)
            ok = C.norm(C.multiply(x, y)) == C.norm(x) * C.norm(y)
            rec.check(
                ok, mu=[s.rep for s in C.slots], x=x.to_json(), y=y.to_json()
            )
    return rec


def _suite_algebra_laws(rng, cases=120, bound=15):
    rec = _Recorder()
    for _ in range(cases):
        r = rng.randint(0, 3)
        C = cayley_dickson(random_slots(rng, r, bound))
        x, y, z = (random_element(rng, C) for _ in range(3))
        mult = C.multiply
        ok = C.conj(mult(x, y)) == mult(C.conj(y), C.conj(x))
        # rank-2 minimal polynomial: x^2 - (x + conj x) x + N(x) = 0
        sq = mult(x, x)
        tr = x + C.conj(x)
        ok = ok and sq - mult(tr, x) + C.one().scaled(C.norm(x)) == C.zero()
        ok = ok and mult(x, C.conj(x)) == C.one().scaled(C.norm(x))
        if r <= 2:
            ok = ok and mult(mult(x, y), z) == mult(x, mult(y, z))
        else:
            ok = ok and mult(mult(x, x), y) == mult(x, mult(x, y))
            ok = ok and mult(mult(y, x), x) == mult(y, mult(x, x))
        if r <= 1:
            ok = ok and mult(x, y) == mult(y, x)
        rec.check(ok, r=r, mu=[s.rep for s in C.slots], x=x.to_json(), y=y.to_json())
    return rec


def _suite_pfister_dichotomy(rng, cases=120, bound=30):
    """e_r vanishes iff the expansion is isotropic iff it is hyperbolic."""
    rec = _Recorder()
    for _ in range(cases):
        r = rng.randint(1, 3)
        slots = random_slots(rng, r, bound)
        phi = pfister_form(slots)
        e_zero = e_invariant(slots).is_zero
        iso = isotropic(phi)
        half = phi.dim // 2
        hyperbolic = isometric(phi, form([1, -1] * half))
        rec.check(
            e_zero == iso == hyperbolic, r=r, mu=[s.rep for s in slots]
        )
    return rec


def _suite_e_invariant_welldefined(rng, cases=200, bound=10):
    """Slot lists with isometric expansions carry the same invariant."""
    rec = _Recorder()
    buckets: dict = {}
    for _ in range(cases):
        r = rng.randint(1, 3)
        slots = tuple(random_slots(rng, r, bound))
        key = (r, invariants(pfister_form(slots)))
        e = e_invariant(slots)
        seen = buckets.setdefault(key, e)
        ok = seen == e
        # explicit isometry-preserving rewrites
        rewritten = [s * square_class(rng.randint(2, 5) ** 2) for s in slots]
        if r >= 2:
            i, j = rng.sample(range(r), 2)
            rewritten[i], rewritten[j] = rewritten[j], rewritten[i]
            rewritten[j] = -rewritten[i] * rewritten[j]
        ok = ok and isometric(pfister_form(slots), pfister_form(rewritten))
        ok = ok and e_invariant(rewritten) == e
        rec.check(ok, r=r, mu=[s.rep for s in slots], rewritten=[s.rep for s in rewritten])
    return rec


# -- jordan suites ------------------------------------------------------------------------


def _presentation_variants(rng, J: ReducedJordanAlgebra) -> dict[str, ReducedJordanAlgebra]:
    lam = random_class(rng, 20)
    scaled = make_jordan(J.r, J.slots, scale(lam, J.q))
    rediag = make_jordan(J.r, J.slots, diagonalize(congruent_gram(rng, J.q)))
    variants = {"scale": scaled, "rediagonalize": rediag}
    if J.r >= 1:
        slots = [s * square_class(rng.randint(2, 5) ** 2) for s in J.slots]
        if J.r >= 2:
            i, j = rng.sample(range(J.r), 2)
            slots[i], slots[j] = slots[j], slots[i]
            slots[j] = -slots[i] * slots[j]
        variants["reslot"] = make_jordan(J.r, slots, J.q)
    return variants


def _suite_v_presentation_invariance(rng, cases=100, bound=12):
    rec = _Recorder()
    for _ in range(cases):
        r = rng.randint(0, 3)
        n = 3 if r == 3 else rng.choice([3, 5])
        J = random_jordan(rng, r, n, bound)
        v = v_invariants(J)
        for kind, J2 in _presentation_variants(rng, J).items():
            ok = jordan_isomorphic(J, J2) and v_invariants(J2) == v
            rec.check(ok, generator=kind, J=J.to_json(), J2=J2.to_json())
    return rec


def _suite_trace_oracle(rng, instances=20, combos=((0, 3), (1, 3), (2, 3), (3, 3), (0, 5), (1, 5), (2, 5)), bound=10):
    """Element-level trace Gram against the closed formula, per (r, n)."""
    rec = _Recorder()
    for r, n in combos:
        for _ in range(instances):
            J = random_jordan(rng, r, n, bound)
            lhs = diagonalize(trace_gram_oracle(J))
            rhs = trace_form_formula(J)
            basis_size = J.n + (1 << J.r) * J.n * (J.n - 1) // 2
            ok = lhs.dim == basis_size == rhs.dim and isometric(lhs, rhs)
            rec.check(ok, J=J.to_json())
    return rec


def _suite_hermitian_closure(rng, cases=60, bound=10):
    rec = _Recorder()
    for _ in range(cases):
        r = rng.randint(0, 3)
        n = 3 if r == 3 else rng.choice([3, 5])
        J = random_jordan(rng, r, n, bound)
        x, y = random_hermitian(rng, J), random_hermitian(rng, J)
        prod = jordan_product(J, x, y)
        ok = is_hermitian(J, prod)
        ok = ok and jordan_product(J, x, identity_element(J)) == x
        ok = ok and jordan_product(J, x, x) == mat_mul(J.algebra, x, x)
        rec.check(ok, J=J.to_json(), x=x.to_json(), y=y.to_json())
    return rec


def _suite_split_detection(rng, cases=40, bound=10):
    rec = _Recorder()
    for _ in range(cases):
        r = rng.randint(0, 3)
        n = 3 if r == 3 else rng.choice([3, 5])
        J = split_jordan(r, n)
        v = v_invariants(J)
        if r == 0:
            ok = v[0] == UNIT and all(x.is_zero for x in v[1:])
        else:
            ok = all(x.is_zero for x in v)
        if r >= 1:
            # split coordinates kill the whole vector in positive degree
            J2 = make_jordan(r, (1,) * r, random_form(rng, n, bound))
        else:
            # rank 0 needs a form with trivial Stiefel-Whitney classes
            J2 = make_jordan(0, (), form([rng.randint(1, 6) ** 2 for _ in range(n)]))
        v2 = v_invariants(J2)
        ok = ok and all(x.is_zero for x in v2[1:])
        rec.check(ok, r=r, n=n, q=J2.q.to_list())
    return rec


def distinguishing_pairs() -> list[tuple[ReducedJordanAlgebra, ReducedJordanAlgebra]]:
    """For each admissible (r, n): an algebra with nonzero top invariant and
    a split partner whose top invariant vanishes."""
    pairs = []
    for r, n in ((0, 3), (1, 3), (2, 3), (3, 3), (0, 5), (1, 5), (2, 5)):
        witness = make_jordan(r, (-1,) * r, form([-1] * (n - 1) + [1]))
        pairs.append((witness, split_jordan(r, n)))
    return pairs


def _suite_distinguishing(rng, **_):
    rec = _Recorder()
    for witness, split in distinguishing_pairs():
        v = v_invariants(witness)
        v2 = v_invariants(split)
        ok = not v[witness.m].is_zero and v2[split.m].is_zero
        # recompute from the serialized data alone
        reparsed = jordan_from_json(json.loads(json.dumps(witness.to_json())))
        ok = ok and v_invariants(reparsed) == v
        expected_degree = witness.r + 2 * witness.m
        ok = ok and v[witness.m].degrees == (expected_degree,)
        rec.check(ok, witness=witness.to_json(), split=split.to_json())
    return rec


# -- harness suites ------------------------------------------------------------------------


def _suite_serialization_roundtrip(rng, cases=200, bound=30):
    rec = _Recorder()
    for _ in range(cases):
        a = random_class(rng, bound)
        ok = square_class(json.loads(json.dumps(a.to_json()))) == a
        v = rng.choice(relevant_places([a, random_class(rng, bound)]))
        ok = ok and Place.parse(str(v)) == v
        x = _random_symbol(rng, 3, bound) + _random_symbol(rng, 3, bound)
        ok = ok and cohom_from_json(json.loads(json.dumps(x.to_json()))) == x
        q = random_form(rng, rng.randint(1, 5), bound)
        ok = ok and form_from_json(json.loads(json.dumps(q.to_list()))) == q
        g = congruent_gram(rng, q)
        ok = ok and gram_from_json(json.loads(json.dumps(gram_to_json(g)))) == g
        r = rng.randint(0, 3)
        J = random_jordan(rng, r, 3 if r == 3 else rng.choice([3, 5]), bound)
        J2 = jordan_from_json(json.loads(json.dumps(J.to_json())))
        ok = ok and J2 == J
        rec.check(ok, square_class=a.rep, form=q.to_list(), jordan=J.to_json())
    return rec


# -- registry -------------------------------------------------------------------------------

_SUITE_FUNCTIONS = {
    "hilbert-product-formula": _suite_hilbert_product_formula,
    "hilbert-bimultiplicativity": _suite_hilbert_bimultiplicativity,
    "hilbert-oracle": _suite_hilbert_oracle,
    "symbol-norm-duality": _suite_symbol_norm_duality,
    "square-class-canonical": _suite_square_class_canonical,
    "steinberg": _suite_steinberg,
    "square-symbol-relation": _suite_square_symbol_relation,
    "cup-ring-laws": _suite_cup_ring_laws,
    "degree-two-parity": _suite_degree_two_parity,
    "high-degree-soundness": _suite_high_degree_soundness,
    "sw-diagonalization": _suite_sw_diagonalization,
    "isometry-invariants": _suite_isometry_invariants,
    "witt-cancellation": _suite_witt_cancellation,
    "represents-oracle": _suite_represents_oracle,
    "isotropy-rules": _suite_isotropy_rules,
    "chain-equivalence": _suite_chain_equivalence,
    "normalization": _suite_normalization,
    "composition-law": _suite_composition_law,
    "algebra-laws": _suite_algebra_laws,
    "pfister-dichotomy": _suite_pfister_dichotomy,
    "e-invariant-welldefined": _suite_e_invariant_welldefined,
    "v-presentation-invariance": _suite_v_presentation_invariance,
    "trace-oracle": _suite_trace_oracle,
    "hermitian-closure": _suite_hermitian_closure,
    "split-detection": _suite_split_detection,
    "distinguishing": _suite_distinguishing,
    "serialization-roundtrip": _suite_serialization_roundtrip,
}


def _load_manifest() -> dict:
    with resources.files(__package__).joinpath("suites_manifest.json").open() as fh:
        return json.load(fh)


_MANIFEST = _load_manifest()


def suite_names() -> list[str]:
    return list(_MANIFEST["suites"])


def default_params(name: str) -> dict:
    return dict(_MANIFEST["suites"][name])


def run_suite(name: str, seed: int = 0, params: dict | None = None) -> SuiteReport:
    """Execute one named suite; deterministic given (name, seed, params)."""
    if name not in _SUITE_FUNCTIONS:
        raise ValueError(f"unknown suite {name!r}; known: {', '.join(suite_names())}")
    merged = default_params(name)
    if params:
        unknown = set(params) - set(merged)
        if unknown:
            raise ValueError(f"unknown parameters for {name}: {sorted(unknown)}")
        merged.update(params)
    if "ranks" in merged:
        merged["ranks"] = tuple(merged["ranks"])
    if "combos" in merged:
        merged["combos"] = tuple(tuple(c) for c in merged["combos"])
    rng = random.Random(seed)
    start = time.perf_counter()
    rec = _SUITE_FUNCTIONS[name](rng, **merged)
    elapsed = time.perf_counter() - start
    return SuiteReport(name, rec.cases, tuple(rec.failures), seed, elapsed)
