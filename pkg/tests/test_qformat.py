"""qalg/1 files: canonical serialization, round trips, malformed input."""

from fractions import Fraction

import pytest

from qalg.algebra import fingerprint
from qalg.constructions import clifford, mat, mat_super, q_assoc
from qalg.errors import QalgFormatError
from qalg.fields import prime_field
from qalg.functors import psq, queerify_lie
from qalg.algebra import algebra_mod_p
from qalg.qformat import (
    algebra_from_json,
    algebra_to_json,
    field_from_json,
    field_to_json,
    load_algebra,
    save_algebra,
    strip_timing,
    xpoly_from_obj,
    xpoly_to_obj,
)

F = Fraction


@pytest.mark.parametrize(
    "maker",
    [
        lambda: mat(3),
        lambda: mat_super(1, 2),
        lambda: q_assoc(2),
        lambda: clifford(3, -1, "natural"),
        lambda: queerify_lie(mat(2)),
        lambda: psq(2).algebra,
        lambda: algebra_mod_p(mat_super(1, 1), 3),
    ],
    ids=["mat3", "mat12", "q2", "cliff3", "qlie2", "psq2", "mat11f3"],
)
def test_round_trip_preserves_structure(maker):
    A = maker()
    text = algebra_to_json(A)
    B = algebra_from_json(text)
    assert B.same_structure(A)
    assert B.unit_index == A.unit_index
    assert B.labels == A.labels
    # serialize(parse(s)) is the identity on canonical form
    assert algebra_to_json(B) == text


def test_round_trip_fingerprint_all_named_constructions():
    # construct -> serialize -> parse -> fingerprint matches the original,
    # for every named construction up to parameter 4
    from qalg.constructions import cyclic_group, group_algebra

    makers = [lambda n=n: mat(n) for n in (1, 2, 3, 4)]
    makers += [
        lambda m=m, n=n: mat_super(m, n)
        for m in (1, 2, 3)
        for n in (1, 2, 3)
        if m + n <= 4
    ]
    makers += [lambda n=n: q_assoc(n) for n in (1, 2, 3, 4)]
    makers += [lambda n=n: clifford(n, -1, "natural") for n in (1, 2, 3, 4)]
    makers += [lambda k=k: group_algebra(cyclic_group(k)) for k in (1, 2, 3, 4)]
    makers += [lambda: psq(2).algebra, lambda: queerify_lie(mat(2))]
    for maker in makers:
        A = maker()
        B = algebra_from_json(algebra_to_json(A))
        assert fingerprint(B) == fingerprint(A), A


def test_field_tags():
    assert field_to_json(prime_field(5)) == {"Fp": 5}
    assert field_from_json("Q").kind == "Q"
    assert field_from_json({"Fp": 7}).p == 7
    with pytest.raises(QalgFormatError):
        field_from_json({"Fp": 4})
    with pytest.raises(QalgFormatError):
        field_from_json("R")


def test_malformed_json_reports_position():
    with pytest.raises(QalgFormatError) as exc:
        algebra_from_json('{"schema": "qalg/1",')
    assert "line" in str(exc.value) and "column" in str(exc.value)


@pytest.mark.parametrize(
    "mutate,needle",
    [
        (lambda o: o.update(schema="qalg/2"), "schema"),
        (lambda o: o.update(parity=[0]), "parity"),
        (lambda o: o.update(kind="ring"), "kind"),
        (lambda o: o.update(unit=99), "unit"),
        (lambda o: o["products"].append([0, 0, [[0, "1"]]]), "duplicate"),
        (lambda o: o["products"].append([99, 0, [[0, "1"]]]), "indices"),
        (lambda o: o["products"][0][2].append([0, "x"]), "scalar"),
    ],
)
def test_malformed_payload_names_the_path(mutate, needle):
    import json

    obj = json.loads(algebra_to_json(mat(2)))
    mutate(obj)
    with pytest.raises(QalgFormatError) as exc:
        algebra_from_json(json.dumps(obj))
    assert needle in str(exc.value).lower()


def test_grading_violation_rejected_at_parse():
    import json

    obj = json.loads(algebra_to_json(mat(2)))
    obj["parity"] = [0, 1, 0, 0]  # breaks additivity of stored products
    with pytest.raises(QalgFormatError):
        algebra_from_json(json.dumps(obj))


def test_save_and_load(tmp_path):
    A = q_assoc(2)
    path = tmp_path / "sub" / "q2.qalg"
    save_algebra(A, path)
    B = load_algebra(path)
    assert B.same_structure(A)


def test_xpoly_round_trip():
    from qalg.dunkl import XPolynomial
    from qalg.fields import NuPoly

    f = XPolynomial(3, {(1, 0, 2): NuPoly.of([F(1, 2), F(3)]), (0, 0, 0): NuPoly.of([-1])})
    assert xpoly_from_obj(xpoly_to_obj(f)) == f


def test_strip_timing_recurses():
    obj = {"timing_ms": 5, "a": [{"timing_ms": 7, "b": 1}], "c": {"timing_ms": 1}}
    assert strip_timing(obj) == {"a": [{"b": 1}], "c": {}}
