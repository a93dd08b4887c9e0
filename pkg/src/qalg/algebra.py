"""Finite-dimensional Z/2-graded algebras presented by sparse structure
constants, with exhaustive axiom validators and center computations.

An algebra is either associative or a Lie superalgebra; in the latter case
the stored products are the brackets.  Elements are dense tuples of scalars
over the basis; validators and centers work on the sparse tables directly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import FieldMismatch, GradingViolation
from .fields import FieldSpec, scalar_field
from .linalg import Subspace, row_reduce, vec_zero

ASSOCIATIVE = "assoc"
LIE_SUPER = "liesuper"

EXHAUSTIVE_VALIDATION_DIM = 64
SAMPLED_TRIPLES = 20000


class SuperAlgebra:
    """Structure-constant presentation of a graded algebra.

    products maps a basis pair (i, j) to a sparse coefficient dict
    {k: scalar}; absent pairs multiply to zero.  Instances are immutable by
    convention: construct once, never mutate.
    """

    def __init__(self, field: FieldSpec, dim: int, parity, kind: str,
                 products: dict, unit_index: int | None = None,
                 labels=None, name: str | None = None):
        if kind not in (ASSOCIATIVE, LIE_SUPER):
            raise ValueError(f"unknown algebra kind {kind!r}")
        parity = tuple(int(p) % 2 for p in parity)
        if len(parity) != dim:
            raise ValueError("parity vector length differs from dim")
        self.field = field
        self.dim = dim
        self.parity = parity
        self.kind = kind
        self.products = {
            (i, j): {k: c for k, c in table.items() if c}
            for (i, j), table in products.items()
            if any(table.values())
        }
        self.unit_index = unit_index
        self.labels = tuple(labels) if labels is not None else None
        self.name = name
        self._check_grading()
        if unit_index is not None:
            self._check_unit()

    # -- construction-time invariants --------------------------------------

    def _check_grading(self):
        for (i, j), table in self.products.items():
            want = (self.parity[i] + self.parity[j]) % 2
            for k, c in table.items():
                if c and self.parity[k] != want:
                    raise GradingViolation(
                        f"product ({i},{j})->{k} breaks parity additivity",
                        triple=(i, j, k),
                    )

    def _check_unit(self):
        u = self.unit_index
        one = self._one()
        for i in range(self.dim):
            for pair in ((u, i), (i, u)):
                table = self.products.get(pair, {})
                if table != {i: one} and not (i == u and table.get(u) == one and len(table) == 1):
                    raise ValueError(f"unit axiom fails at {pair}: {table}")

    def _one(self):
        from .fields import field_one

        return field_one(self.field)

    def _zero(self):
        from .fields import field_zero

        return field_zero(self.field)

    # -- element helpers ----------------------------------------------------

    def zero_element(self) -> tuple:
        return vec_zero(self.field, self.dim)

    def basis_element(self, i: int) -> tuple:
        from .linalg import basis_vec

        return basis_vec(self.field, self.dim, i)

    def element_from(self, coeffs) -> tuple:
        from .fields import field_from_fraction

        return tuple(field_from_fraction(self.field, c) for c in coeffs)

    def even_indices(self):
        return [i for i in range(self.dim) if self.parity[i] == 0]

    def odd_indices(self):
        return [i for i in range(self.dim) if self.parity[i] == 1]

    def parity_of(self, v) -> int | None:
        """Parity of a homogeneous element, or None if mixed/zero."""
        seen = {self.parity[i] for i, c in enumerate(v) if c}
        if len(seen) == 1:
            return seen.pop()
        return None

    def homogeneous_parts(self, v):
        even = tuple(c if self.parity[i] == 0 else self._zero() for i, c in enumerate(v))
        odd = tuple(c if self.parity[i] == 1 else self._zero() for i, c in enumerate(v))
        return even, odd

    # -- multiplication -----------------------------------------------------

    def _check_element_field(self, v):
        for c in v:
            if isinstance(c, int):
                continue
            if scalar_field(c) != self.field:
                raise FieldMismatch(f"element scalar {c!r} not over {self.field}")

    def product_sparse(self, du: dict, dv: dict) -> dict:
        acc: dict = {}
        for i, ci in du.items():
            if not ci:
                continue
            for j, cj in dv.items():
                if not cj:
                    continue
                table = self.products.get((i, j))
                if not table:
                    continue
                c = ci * cj
                for k, coeff in table.items():
                    prev = acc.get(k)
                    acc[k] = c * coeff if prev is None else prev + c * coeff
        return {k: c for k, c in acc.items() if c}

    def multiply(self, u, v) -> tuple:
        """Bilinear extension of the structure constants (product or bracket)."""
        self._check_element_field(u)
        self._check_element_field(v)
        du = {i: c for i, c in enumerate(u) if c}
        dv = {j: c for j, c in enumerate(v) if c}
        acc = self.product_sparse(du, dv)
        zero = self._zero()
        return tuple(acc.get(k, zero) for k in range(self.dim))

    def basis_product(self, i: int, j: int) -> dict:
        return dict(self.products.get((i, j), {}))

    # -- validation ---------------------------------------------------------

    def validate(self, seed: int = 0) -> "ValidationReport":
        """Check the defining axioms on basis triples.

        Exhaustive for dim <= 64; above that a seeded random sample of
        triples is used and recorded in the report.
        """
        failures: list[dict] = []
        # grading is construction-checked, but re-verify since it is part
        # of the contract for externally loaded tables
        for (i, j), table in self.products.items():
            want = (self.parity[i] + self.parity[j]) % 2
            for k, c in table.items():
                if c and self.parity[k] != want:
                    failures.append({"check": "grading", "triple": (i, j, k)})
        exhaustive = self.dim <= EXHAUSTIVE_VALIDATION_DIM
        if exhaustive:
            triples = (
                (i, j, k)
                for i in range(self.dim)
                for j in range(self.dim)
                for k in range(self.dim)
            )
            n_triples = self.dim**3
        else:
            rng = random.Random(seed)
            n_triples = SAMPLED_TRIPLES
            triples = (
                (
                    rng.randrange(self.dim),
                    rng.randrange(self.dim),
                    rng.randrange(self.dim),
                )
                for _ in range(n_triples)
            )
        if self.kind == ASSOCIATIVE:
            checked = 0
            for i, j, k in triples:
                checked += 1
                left = self.product_sparse(self.products.get((i, j), {}), {k: self._one()})
                right = self.product_sparse({i: self._one()}, self.products.get((j, k), {}))
                if not _sparse_eq(left, right):
                    failures.append({"check": "associativity", "triple": (i, j, k)})
            pairs_checked = None
        else:
            # super anti-symmetry on pairs, then super Jacobi on triples
            pairs_checked = 0
            for i in range(self.dim):
                for j in range(self.dim):
                    pairs_checked += 1
                    # [u,v] = -(-1)^{p(u)p(v)} [v,u]
                    sign = -1 if (self.parity[i] and self.parity[j]) else 1
                    lhs = self.products.get((i, j), {})
                    rhs = {k: -sign * c for k, c in self.products.get((j, i), {}).items()}
                    if not _sparse_eq(lhs, rhs):
                        failures.append({"check": "super-antisymmetry", "triple": (i, j)})
            checked = 0
            for i, j, k in triples:
                checked += 1
                if not self._jacobi_holds(i, j, k):
                    failures.append({"check": "super-jacobi", "triple": (i, j, k)})
        failures.sort(key=lambda f: (f["check"], f["triple"]))
        return ValidationReport(
            kind=self.kind,
            ok=not failures,
            failures=failures,
            triples_checked=checked,
            pairs_checked=pairs_checked,
            exhaustive=exhaustive,
            seed=None if exhaustive else seed,
        )

    def _jacobi_holds(self, i: int, j: int, k: int) -> bool:
        # Leibniz form: [i,[j,k]] = [[i,j],k] + (-1)^{p_i p_j} [j,[i,k]]
        one = self._one()
        lhs = self.product_sparse({i: one}, self.products.get((j, k), {}))
        t1 = self.product_sparse(self.products.get((i, j), {}), {k: one})
        t2 = self.product_sparse({j: one}, self.products.get((i, k), {}))
        sign = -1 if (self.parity[i] and self.parity[j]) else 1
        rhs: dict = dict(t1)
        for m, c in t2.items():
            prev = rhs.get(m)
            add = sign * c
            rhs[m] = add if prev is None else prev + add
        return _sparse_eq(lhs, rhs)

    # -- structural equality -------------------------------------------------

    def same_structure(self, other: "SuperAlgebra") -> bool:
        """Structure-constant identity (field, parity, kind, products)."""
        return (
            self.field == other.field
            and self.dim == other.dim
            and self.parity == other.parity
            and self.kind == other.kind
            and _products_eq(self.products, other.products)
        )

    def __repr__(self):
        tag = self.name or f"{self.kind}"
        return f"<SuperAlgebra {tag} dim={self.dim} over {self.field}>"


def detect_unit(dim: int, products: dict) -> int | None:
    """Basis index acting as a two-sided unit in the given table, if any."""
    for u in range(dim):
        if all(
            _sparse_eq(products.get((u, i), {}), {i: 1})
            and _sparse_eq(products.get((i, u), {}), {i: 1})
            for i in range(dim)
        ):
            return u
    return None


def _sparse_eq(a: dict, b: dict) -> bool:
    # zero coefficients are never stored, so missing keys compare as 0
    for k in set(a) | set(b):
        av = a.get(k, 0)
        bv = b.get(k, 0)
        if not av and not bv:
            continue
        if av != bv:
            return False
    return True


def _products_eq(pa: dict, pb: dict) -> bool:
    keys = set(pa) | set(pb)
    return all(_sparse_eq(pa.get(key, {}), pb.get(key, {})) for key in keys)


@dataclass
class ValidationReport:
    kind: str
    ok: bool
    failures: list
    triples_checked: int
    pairs_checked: int | None = None
    exhaustive: bool = True
    seed: int | None = None

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "ok": self.ok,
            "failures": [
                {"check": f["check"], "triple": list(f["triple"])} for f in self.failures[:100]
            ],
            "failure_count": len(self.failures),
            "triples_checked": self.triples_checked,
            "pairs_checked": self.pairs_checked,
            "exhaustive": self.exhaustive,
            "seed": self.seed,
        }


# -- centers -----------------------------------------------------------------


def center(A: SuperAlgebra) -> Subspace:
    """Solution space of [z, b_i] = 0 (plain commutator) for all basis i."""
    if A.kind != ASSOCIATIVE:
        raise GradingViolation("center expects an associative algebra")
    return _commutant_subspace(A, list(range(A.dim)), super_signs=False)


def supercenter(A: SuperAlgebra) -> Subspace:
    """Elements z with z*b = (-1)^{p(z)p(b)} b*z, solved parity by parity."""
    if A.kind != ASSOCIATIVE:
        raise GradingViolation("supercenter expects an associative algebra")
    even = _commutant_subspace(A, A.even_indices(), super_signs=True, z_parity=0)
    odd = _commutant_subspace(A, A.odd_indices(), super_signs=True, z_parity=1)
    return even.sum(odd)


def _commutant_subspace(A, support, super_signs, z_parity=None):
    """Kernel of z -> (z b_i -+ b_i z)_i restricted to coordinates in
    ``support`` (all coordinates for the plain center)."""
    from .fields import field_one

    one = field_one(A.field)
    cols = support if z_parity is not None else list(range(A.dim))
    if not cols:
        return Subspace.zero(A.field, A.dim)
    rows = []  # equations indexed by (basis b, output coordinate k)
    for b in range(A.dim):
        # z*b - sign * b*z = 0 where sign depends on parities
        eq: dict[int, dict] = {}
        for ci, i in enumerate(cols):
            tab = A.products.get((i, b), {})
            for k, c in tab.items():
                eq.setdefault(k, {})[ci] = eq.get(k, {}).get(ci, A._zero()) + c
            if super_signs:
                sign = -1 if (z_parity and A.parity[b]) else 1
            else:
                sign = 1
            tab2 = A.products.get((b, i), {})
            for k, c in tab2.items():
                eq.setdefault(k, {})[ci] = eq.get(k, {}).get(ci, A._zero()) - sign * c
        for k in sorted(eq):
            coeffs = eq[k]
            if any(coeffs.values()):
                rows.append(tuple(coeffs.get(ci, A._zero()) for ci in range(len(cols))))
    if not rows:
        sol_rows = [tuple(one if j == ci else A._zero() for j in range(len(cols))) for ci in range(len(cols))]
    else:
        _, _, kern = row_reduce(rows, A.field)
        sol_rows = list(kern.basis)
    # embed back into the ambient coordinates
    embedded = []
    for srow in sol_rows:
        v = [A._zero()] * A.dim
        for ci, i in enumerate(cols):
            v[i] = srow[ci]
        embedded.append(tuple(v))
    return Subspace.from_vectors(embedded, A.dim, A.field)


def derived_span(A: SuperAlgebra) -> Subspace:
    """Span of all supercommutators of basis pairs (of the stored brackets
    for a Lie superalgebra)."""
    vectors = []
    one = A._one()
    for i in range(A.dim):
        for j in range(A.dim):
            if A.kind == LIE_SUPER:
                tab = A.products.get((i, j), {})
            else:
                sign = -1 if (A.parity[i] and A.parity[j]) else 1
                tab = dict(A.products.get((i, j), {}))
                for k, c in A.products.get((j, i), {}).items():
                    tab[k] = tab.get(k, A._zero()) - sign * c
            if any(tab.values()):
                v = [A._zero()] * A.dim
                for k, c in tab.items():
                    v[k] = c
                vectors.append(tuple(v))
    return Subspace.from_vectors(vectors, A.dim, A.field)


# -- regrading ----------------------------------------------------------------


def forget_grading(A: SuperAlgebra) -> SuperAlgebra:
    """Same structure constants with the trivial (all-even) grading."""
    return regrade(A, [0] * A.dim)


def regrade(A: SuperAlgebra, parity) -> SuperAlgebra:
    """Same structure constants under a new parity vector; every stored
    product must respect the new grading or GradingViolation names the
    offending (i, j, k)."""
    parity = tuple(int(p) % 2 for p in parity)
    if len(parity) != A.dim:
        raise GradingViolation("parity vector length differs from dim")
    for (i, j), table in sorted(A.products.items()):
        want = (parity[i] + parity[j]) % 2
        for k in sorted(table):
            if table[k] and parity[k] != want:
                raise GradingViolation(
                    f"regrade rejected: product ({i},{j})->{k} breaks parity additivity",
                    triple=(i, j, k),
                )
    return SuperAlgebra(
        A.field, A.dim, parity, A.kind, A.products,
        unit_index=A.unit_index, labels=A.labels, name=A.name,
    )


# -- fingerprint ---------------------------------------------------------------


@dataclass(frozen=True)
class Fingerprint:
    """Cheap isomorphism-consistency record: equal fingerprints are
    necessary, not sufficient, for isomorphism."""

    dim: int
    even_dim: int
    odd_dim: int
    center_dim: int
    supercenter_dim: int
    derived_dim: int
    simplicity_verdict: str

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "even_dim": self.even_dim,
            "odd_dim": self.odd_dim,
            "center_dim": self.center_dim,
            "supercenter_dim": self.supercenter_dim,
            "derived_dim": self.derived_dim,
            "simplicity_verdict": self.simplicity_verdict,
        }


def fingerprint(A: SuperAlgebra) -> Fingerprint:
    from .simplicity import is_simple

    verdict = is_simple(A)
    if A.kind == ASSOCIATIVE:
        cdim = center(A).dim
        scdim = supercenter(A).dim
    else:
        # for a Lie superalgebra the one natural notion is the bracket
        # center {z : [z, L] = 0}
        from .functors import bracket_center

        cdim = scdim = bracket_center(A).dim
    return Fingerprint(
        dim=A.dim,
        even_dim=len(A.even_indices()),
        odd_dim=len(A.odd_indices()),
        center_dim=cdim,
        supercenter_dim=scdim,
        derived_dim=derived_span(A).dim,
        simplicity_verdict=verdict.verdict,
    )


# -- field change ----------------------------------------------------------------


def algebra_mod_p(A: SuperAlgebra, p: int) -> SuperAlgebra:
    """Reduce a rational algebra mod an odd prime; denominators must be
    invertible mod p."""
    from .fields import field_from_fraction, prime_field

    fp = prime_field(p)
    products = {}
    for (i, j), table in A.products.items():
        products[(i, j)] = {k: field_from_fraction(fp, Fraction(c)) for k, c in table.items()}
    return SuperAlgebra(
        fp, A.dim, A.parity, A.kind, products,
        unit_index=A.unit_index, labels=A.labels,
        name=f"{A.name} mod {p}" if A.name else None,
    )
