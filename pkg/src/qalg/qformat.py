"""File formats: "qalg/1" algebra files, element/polynomial payloads, and
canonical JSON for reports.

Serialization is canonical (sorted products, canonical scalar strings), so
parse after serialize is the identity on canonical form and serialized
bytes are reproducible across runs.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .algebra import SuperAlgebra
from .errors import QalgFormatError
from .fields import (
    NU_POLYNOMIALS,
    RATIONALS,
    FieldSpec,
    prime_field,
    scalar_from_string,
    scalar_to_string,
)

SCHEMA = "qalg/1"


def field_to_json(field: FieldSpec):
    if field.kind == "Q":
        return "Q"
    if field.kind == "Fp":
        return {"Fp": field.p}
    return "Qnu"


def field_from_json(obj) -> FieldSpec:
    if obj == "Q":
        return RATIONALS
    if obj == "Qnu":
        return NU_POLYNOMIALS
    if isinstance(obj, dict) and set(obj) == {"Fp"}:
        try:
            return prime_field(int(obj["Fp"]))
        except ValueError as e:
            raise QalgFormatError(f"field: {e}") from e
    raise QalgFormatError(f"field: unrecognized {obj!r}")


def algebra_to_obj(A: SuperAlgebra) -> dict:
    products = []
    for (i, j) in sorted(A.products):
        table = A.products[(i, j)]
        entry = [[k, scalar_to_string(table[k])] for k in sorted(table)]
        products.append([i, j, entry])
    return {
        "schema": SCHEMA,
        "field": field_to_json(A.field),
        "dim": A.dim,
        "parity": list(A.parity),
        "unit": A.unit_index,
        "kind": A.kind,
        "labels": list(A.labels) if A.labels is not None else None,
        "name": A.name,
        "products": products,
    }


def algebra_to_json(A: SuperAlgebra) -> str:
    return json.dumps(algebra_to_obj(A), sort_keys=True, separators=(",", ":"))


def _expect(obj, key, types, path):
    if key not in obj:
        raise QalgFormatError(f"{path}: missing key {key!r}")
    v = obj[key]
    if types is not None and not isinstance(v, types):
        raise QalgFormatError(f"{path}.{key}: expected {types}, got {type(v).__name__}")
    return v


def algebra_from_obj(obj) -> SuperAlgebra:
    path = "$"
    if not isinstance(obj, dict):
        raise QalgFormatError(f"{path}: algebra file must be a JSON object")
    if obj.get("schema") != SCHEMA:
        raise QalgFormatError(f"{path}.schema: expected {SCHEMA!r}, got {obj.get('schema')!r}")
    field = field_from_json(_expect(obj, "field", None, path))
    dim = _expect(obj, "dim", int, path)
    parity = _expect(obj, "parity", list, path)
    if len(parity) != dim or any(p not in (0, 1) for p in parity):
        raise QalgFormatError(f"{path}.parity: need {dim} entries of 0/1")
    kind = _expect(obj, "kind", str, path)
    if kind not in ("assoc", "liesuper"):
        raise QalgFormatError(f"{path}.kind: unknown kind {kind!r}")
    unit = obj.get("unit")
    if unit is not None and not (isinstance(unit, int) and 0 <= unit < dim):
        raise QalgFormatError(f"{path}.unit: out of range")
    labels = obj.get("labels")
    if labels is not None and (
        not isinstance(labels, list)
        or len(labels) != dim
        or any(not isinstance(x, str) for x in labels)
    ):
        raise QalgFormatError(f"{path}.labels: need {dim} strings or null")
    products = {}
    raw = _expect(obj, "products", list, path)
    for idx, entry in enumerate(raw):
        p = f"{path}.products[{idx}]"
        if not (isinstance(entry, list) and len(entry) == 3):
            raise QalgFormatError(f"{p}: expected [i, j, [[k, scalar], ...]]")
        i, j, table = entry
        if not (isinstance(i, int) and 0 <= i < dim and isinstance(j, int) and 0 <= j < dim):
            raise QalgFormatError(f"{p}: basis indices out of range")
        tab = {}
        for t_idx, pair in enumerate(table):
            pp = f"{p}[2][{t_idx}]"
            if not (isinstance(pair, list) and len(pair) == 2 and isinstance(pair[0], int)):
                raise QalgFormatError(f"{pp}: expected [k, scalar-string]")
            k, sval = pair
            if not 0 <= k < dim:
                raise QalgFormatError(f"{pp}: basis index out of range")
            if not isinstance(sval, str):
                raise QalgFormatError(f"{pp}: scalar must be a string")
            try:
                tab[k] = scalar_from_string(field, sval)
            except QalgFormatError as e:
                raise QalgFormatError(f"{pp}: {e}") from e
        if (i, j) in products:
            raise QalgFormatError(f"{p}: duplicate product entry")
        products[(i, j)] = tab
    try:
        return SuperAlgebra(
            field, dim, parity, kind, products,
            unit_index=unit, labels=labels, name=obj.get("name"),
        )
    except Exception as e:
        raise QalgFormatError(f"{path}: inconsistent algebra: {e}") from e


def algebra_from_json(text: str) -> SuperAlgebra:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise QalgFormatError(f"line {e.lineno} column {e.colno}: {e.msg}") from e
    return algebra_from_obj(obj)


def save_algebra(A: SuperAlgebra, path) -> None:
    from pathlib import Path

    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    p.write_text(algebra_to_json(A) + "\n")


def load_algebra(path) -> SuperAlgebra:
    from pathlib import Path

    return algebra_from_json(Path(path).read_text())


# -- auxiliary payloads -------------------------------------------------------


def xpoly_to_obj(f) -> dict:
    return {
        "N": f.N,
        "terms": [[list(e), scalar_to_string(c)] for e, c in sorted(f.terms.items())],
    }


def xpoly_from_obj(obj):
    from .dunkl import XPolynomial

    if not isinstance(obj, dict) or "N" not in obj or "terms" not in obj:
        raise QalgFormatError("polynomial: expected {N, terms}")
    N = obj["N"]
    terms = {}
    for e, s in obj["terms"]:
        if len(e) != N or any(not isinstance(k, int) or k < 0 for k in e):
            raise QalgFormatError(f"polynomial: bad exponent {e}")
        terms[tuple(e)] = scalar_from_string(NU_POLYNOMIALS, s)
    return XPolynomial(N, terms)


def uelement_to_obj(u) -> dict:
    return {
        "mode": "full" if u.lam is None else {"lambda": str(u.lam)},
        "cutoff": u.cutoff,
        "terms": [[list(k), str(v)] for k, v in sorted(u.terms.items())],
        "truncated": u.truncated,
    }


def uelement_from_obj(obj):
    from .glambda import UElement

    mode = obj.get("mode")
    lam = None if mode == "full" else Fraction(mode["lambda"])
    terms = {tuple(k): Fraction(v) for k, v in obj.get("terms", [])}
    return UElement(lam, obj["cutoff"], terms, bool(obj.get("truncated")))


def queer_element_to_obj(e) -> dict:
    return {
        "x": [scalar_to_string(c) for c in e.x],
        "y": [scalar_to_string(c) for c in e.y],
    }


def queer_element_from_obj(obj, field: FieldSpec = RATIONALS):
    from .functors import QueerElement

    if not isinstance(obj, dict) or set(obj) != {"x", "y"}:
        raise QalgFormatError('queer element: expected {"x": [...], "y": [...]}')
    x = tuple(scalar_from_string(field, s) for s in obj["x"])
    y = tuple(scalar_from_string(field, s) for s in obj["y"])
    if len(x) != len(y):
        raise QalgFormatError("queer element: x and y lengths differ")
    return QueerElement(x, y)


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def strip_timing(obj):
    """Recursive copy with every timing field removed (for byte-identical
    report comparisons)."""
    if isinstance(obj, dict):
        return {k: strip_timing(v) for k, v in obj.items() if k != "timing_ms"}
    if isinstance(obj, list):
        return [strip_timing(v) for v in obj]
    return obj
