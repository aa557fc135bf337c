import json

import pytest

from quadinv.arith import square_class
from quadinv.forms import form, invariants, normalize_det1, tensor
from quadinv.jordan import make_jordan, v_invariants_json
from quadinv.mine import (
    CollisionCertificate,
    certificate_from_json,
    collision_search,
    enumerate_forms,
)


def test_enumerate_forms_counts():
    # size 3, bound 7: entries +-1 and +-p for p in {2,3,5,7}; det-1 multisets
    # are {1,1,1}, {1,a,a} for the nine other classes, and {1,p,-p} style
    # sign patterns: 14 in total
    forms = enumerate_forms(3, 7)
    assert len(forms) == 14
    assert all(q.det.is_trivial for q in forms)
    assert len({tuple(sorted(q.to_list())) for q in forms}) == len(forms)


def test_collision_search_parameter_validation():
    with pytest.raises(ValueError):
        collision_search(0, 4, 7)
    with pytest.raises(ValueError):
        collision_search(4, 3, 7)
    with pytest.raises(ValueError):
        collision_search(3, 5, 7)
    with pytest.raises(ValueError):
        collision_search(0, 3, 10**9)


def test_degree_three_classification_is_certified():
    # the invariant vector separates the whole space for r in {0, 2}
    assert collision_search(0, 3, 7) == []
    assert collision_search(2, 3, 7) == []


def test_search_is_deterministic():
    runs = [
        json.dumps([c.to_json() for c in collision_search(1, 5, 3)], sort_keys=True)
        for _ in range(2)
    ]
    assert runs[0] == runs[1]


def _certificate_for(left, right) -> CollisionCertificate:
    from quadinv.mine import _classification_form, _distinguishing_field

    inv_l = invariants(_classification_form(left))
    inv_r = invariants(_classification_form(right))
    return CollisionCertificate(
        left=left.to_json(),
        right=right.to_json(),
        v_left=v_invariants_json(left),
        v_right=v_invariants_json(right),
        isomorphic=False,
        distinguishing=_distinguishing_field(inv_l, inv_r),
    )


def test_certificate_verification_logic():
    # an honest non-isomorphic pair, but with distinct invariant vectors:
    # verification must reject it because the vectors disagree
    a = make_jordan(2, (-1, -1), form([1, 1, 1]))
    b = make_jordan(2, (-1, -1), form([-1, -1, 1]))
    cert = _certificate_for(a, b)
    assert not cert.verify()

    # tampering with the claimed verdict must also fail verification
    forged = CollisionCertificate(
        left=cert.left,
        right=cert.left,
        v_left=cert.v_left,
        v_right=cert.v_left,
        isomorphic=False,
        distinguishing="det",
    )
    assert not forged.verify()  # the two sides are isomorphic (identical)


def test_certificate_round_trip():
    a = make_jordan(1, (-1,), form([1, 1, 1]))
    b = make_jordan(1, (-1,), form([2, 2, 1]))
    cert = _certificate_for(a, b)
    data = json.loads(json.dumps(cert.to_json(), sort_keys=True))
    assert certificate_from_json(data) == cert
    with pytest.raises(ValueError):
        certificate_from_json({"left": {}})


def test_distinguishing_field_names_a_real_difference():
    from quadinv.mine import _classification_form, _distinguishing_field

    a = make_jordan(0, (), form([1, 1, 1]))
    b = make_jordan(0, (), form([-1, -1, 1]))
    field = _distinguishing_field(
        invariants(_classification_form(a)), invariants(_classification_form(b))
    )
    assert field == "signature"
    c = make_jordan(0, (), form([2, 3, 6]))
    field = _distinguishing_field(
        invariants(_classification_form(a)), invariants(_classification_form(c))
    )
    assert field.startswith("hasse@")
