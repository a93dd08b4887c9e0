"""Factories turning associative (super)algebras into Lie superalgebras:
commutator/supercommutator algebras, queerification, derived subalgebras,
quotients, the queer-trace tower q/sq/pq/psq, the Herstein and Montgomery
subquotient constructions, and the odd-square condition checker.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .algebra import (
    ASSOCIATIVE,
    LIE_SUPER,
    SuperAlgebra,
    ValidationReport,
    center,
    detect_unit,
    supercenter,
)
from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    GradingViolation,
    UnsupportedField,
    WrongAmbient,
)
from .fields import field_from_int, field_one, field_zero
from .linalg import Subspace, vec_is_zero


def lie_of(A: SuperAlgebra, graded_mode: str = "super") -> SuperAlgebra:
    """Lie (super)algebra on A's space: plain mode uses [a,b] = ab - ba and
    requires an all-even A; super mode uses the supercommutator."""
    if A.kind != ASSOCIATIVE:
        raise GradingViolation("lie_of expects an associative algebra")
    if graded_mode not in ("plain", "super"):
        raise ValueError(f"unknown mode {graded_mode!r}")
    if graded_mode == "plain" and any(A.parity):
        raise GradingViolation("plain commutator algebra needs an all-even input")
    zero = A._zero()
    products = {}
    for i in range(A.dim):
        for j in range(A.dim):
            tab = dict(A.products.get((i, j), {}))
            if graded_mode == "super" and A.parity[i] and A.parity[j]:
                sign = -1
            else:
                sign = 1
            for k, c in A.products.get((j, i), {}).items():
                tab[k] = tab.get(k, zero) - sign * c
            tab = {k: c for k, c in tab.items() if c}
            if tab:
                products[(i, j)] = tab
    return SuperAlgebra(
        A.field, A.dim, A.parity, LIE_SUPER, products, labels=A.labels,
        name=f"{A.name or 'A'}^{'L' if graded_mode == 'plain' else 'S'}",
    )


def queerify_assoc(A: SuperAlgebra) -> SuperAlgebra:
    """Associative queerification: double A by an odd copy.

    Realized as A (x) D for the two-dimensional algebra D = <1, xi> with
    xi odd and xi^2 = 1, under the graded tensor sign
    (a (x) d)(a' (x) d') = (-1)^{p(d) p(a')} a a' (x) d d'.  For an all-even
    A this gives literally x * Pi(y) = Pi(xy) and Pi(x) Pi(y) = xy with
    Pi(x) = x (x) xi.  Basis order: all a_i (x) 1, then all a_i (x) xi.
    """
    if A.kind != ASSOCIATIVE:
        raise GradingViolation("queerification expects an associative algebra")
    d = A.dim
    products = {}
    for i in range(d):
        for j in range(d):
            tab = A.products.get((i, j), {})
            if not tab:
                continue
            pj = A.parity[j]
            for (di, dj) in ((0, 0), (0, 1), (1, 0), (1, 1)):
                sign = -1 if (di and pj) else 1
                out_d = (di + dj) % 2
                entry = {k + out_d * d: sign * c for k, c in tab.items()}
                products[(i + di * d, j + dj * d)] = entry
    parity = [A.parity[i] for i in range(d)] + [(A.parity[i] + 1) % 2 for i in range(d)]
    la = A.labels or tuple(f"b{i}" for i in range(d))
    labels = list(la) + [f"Pi({x})" for x in la]
    unit = A.unit_index  # 1 (x) 1 stays the unit
    return SuperAlgebra(
        A.field, 2 * d, parity, ASSOCIATIVE, products,
        unit_index=unit, labels=labels, name=f"Q({A.name or 'A'})",
    )


def queerify_lie(A: SuperAlgebra) -> SuperAlgebra:
    """Lie queerification: the supercommutator algebra of queerify_assoc(A).

    For all-even A the brackets on pairs (X, Y) = X + Pi(Y) are
    [(X1,0),(X2,0)] = ([X1,X2],0), [(X,0),(0,Y)] = (0,[X,Y]) and
    [(0,Y1),(0,Y2)] = (Y1 Y2 + Y2 Y1, 0).
    """
    out = lie_of(queerify_assoc(A), "super")
    out.name = f"q({A.name or 'A'})"
    return out


# -- queer trace tower --------------------------------------------------------


@dataclass(frozen=True)
class QueerElement:
    """Pair form (x, y) of an element of q(A): x is the even copy, y the
    odd (parity-reversed) copy."""

    x: tuple
    y: tuple


def pair_to_vector(e: QueerElement) -> tuple:
    return tuple(e.x) + tuple(e.y)


def vector_to_pair(v, base_dim: int) -> QueerElement:
    if len(v) != 2 * base_dim:
        raise WrongAmbient(f"vector of length {len(v)} is not a pair over dim {base_dim}")
    return QueerElement(tuple(v[:base_dim]), tuple(v[base_dim:]))


def qtr(e: QueerElement):
    """Queer trace (X, Y) -> tr Y on q(Mat(n))."""
    m = len(e.y)
    n = math.isqrt(m)
    if m == 0 or n * n != m or len(e.x) != m:
        raise WrongAmbient("queer trace needs a pair of square-matrix coordinates")
    acc = None
    for i in range(n):
        c = e.y[i * n + i]
        acc = c if acc is None else acc + c
    return acc


def q_lie(n: int, field=None) -> SuperAlgebra:
    from .constructions import mat
    from .fields import RATIONALS

    A = mat(n, field or RATIONALS)
    return queerify_lie(A)


def qtr_vector(v, algebra: SuperAlgebra):
    """Queer trace of a coordinate vector of q(Mat(n))."""
    m = algebra.dim // 2
    n = math.isqrt(m)
    if algebra.dim != 2 * n * n or algebra.kind != LIE_SUPER:
        raise WrongAmbient(f"{algebra!r} is not q(Mat(n))")
    if len(v) != algebra.dim:
        raise WrongAmbient("vector length differs from algebra dimension")
    return qtr(vector_to_pair(v, m))


# -- subalgebras, ideals, quotients -------------------------------------------


def sub_on_subspace(L: SuperAlgebra, sub: Subspace, name=None) -> SuperAlgebra:
    """Induced algebra on a multiplication-closed, graded subspace."""
    from .constructions import _subalgebra_from_subspace

    return _subalgebra_from_subspace(L, sub, name=name)


@dataclass
class QuotientPresentation:
    """Quotient W/I with an explicit transversal inside the ambient algebra.

    ``transversal`` rows are ambient vectors projecting to the quotient
    basis; ``project`` rewrites an ambient vector of W in quotient
    coordinates.
    """

    algebra: SuperAlgebra
    ambient: SuperAlgebra
    ideal: Subspace
    space: Subspace
    transversal: tuple

    def project(self, v) -> tuple:
        combined = list(self.ideal.basis) + list(self.transversal)
        combo = Subspace.from_vectors(combined, self.ambient.dim, self.ambient.field)
        if not combo.contains_vector(v):
            raise DimensionMismatch("vector is outside ideal + transversal")
        # eliminate ideal contributions, then read transversal coefficients
        residual = self.ideal.reduce_vector(v)
        tsub = Subspace.from_vectors(self.transversal, self.ambient.dim, self.ambient.field)
        coeffs = tsub.express(residual)
        if coeffs is None:
            # transversal rows are RREF rows of W, so express must succeed
            raise DimensionMismatch("projection failed; ideal is not reduced")
        return coeffs


def quotient_algebra(
    L: SuperAlgebra, ideal: Subspace, within: Subspace | None = None, name=None
) -> QuotientPresentation:
    """Quotient of ``within`` (default: all of L) by a bracket ideal.

    The transversal is deterministic: RREF rows of the enclosing space whose
    pivots are not pivots of the ideal.
    """
    space = within if within is not None else Subspace.full(L.field, L.dim)
    if not space.contains(ideal):
        raise DimensionMismatch("ideal is not inside the quotiented space")
    transversal = ideal.quotient_transversal(space if within is not None else None)
    rows = list(transversal)
    d = len(rows)
    parity = []
    for row in rows:
        p = L.parity_of(row)
        if p is None:
            raise GradingViolation("transversal row is not parity-homogeneous")
        parity.append(p)
    combined = Subspace.from_vectors(
        list(ideal.basis) + rows, L.dim, L.field
    )
    if combined.dim != ideal.dim + d:
        raise DimensionMismatch("transversal does not complement the ideal")
    products = {}
    tsub = Subspace.from_vectors(rows, L.dim, L.field)
    for a in range(d):
        for b in range(d):
            prod = L.multiply(rows[a], rows[b])
            residual = ideal.reduce_vector(prod)
            coeffs = tsub.express(residual)
            if coeffs is None:
                raise DimensionMismatch("space is not closed modulo the ideal")
            table = {k: c for k, c in enumerate(coeffs) if c}
            if table:
                products[(a, b)] = table
    unit = detect_unit(d, products) if L.kind == ASSOCIATIVE else None
    alg = SuperAlgebra(L.field, d, parity, L.kind, products, unit_index=unit, name=name)
    return QuotientPresentation(alg, L, ideal, space, tuple(rows))


def derived(L: SuperAlgebra):
    """Span of all brackets [b_i, b_j]; returned with the induced algebra.

    The span is an ideal, hence bracket-closed; closure is re-verified.
    """
    if L.kind != LIE_SUPER:
        raise GradingViolation("derived expects a Lie superalgebra")
    vectors = []
    zero = L._zero()
    for (i, j), tab in sorted(L.products.items()):
        v = [zero] * L.dim
        for k, c in tab.items():
            v[k] = c
        vectors.append(tuple(v))
    sub = Subspace.from_vectors(vectors, L.dim, L.field)
    if sub.dim == 0:
        return sub, SuperAlgebra(L.field, 0, (), LIE_SUPER, {}, name="0")
    return sub, sub_on_subspace(L, sub, name=f"[{L.name or 'L'},{L.name or 'L'}]")


def bracket_center(L: SuperAlgebra) -> Subspace:
    """Elements v with [v, b_j] = 0 for every basis j (an ideal)."""
    from .linalg import row_reduce

    zero = L._zero()
    rows = []
    for j in range(L.dim):
        eq: dict[int, dict] = {}
        for i in range(L.dim):
            for k, c in L.products.get((i, j), {}).items():
                eq.setdefault(k, {})[i] = eq.get(k, {}).get(i, zero) + c
        for k in sorted(eq):
            rows.append(tuple(eq[k].get(i, zero) for i in range(L.dim)))
    if not rows:
        return Subspace.full(L.field, L.dim)
    _, _, kern = row_reduce(rows, L.field)
    return kern


def sq(n: int, field=None):
    """Queer-traceless subalgebra sq(n) = ker(qtr) inside q(Mat(n))."""
    q = q_lie(n, field)
    m = n * n
    zero = q._zero()
    one = q._one()
    # qtr vanishing is one linear condition on the odd diagonal coordinates
    row = [zero] * q.dim
    for i in range(n):
        row[m + i * n + i] = one
    from .linalg import row_reduce

    _, _, kern = row_reduce([tuple(row)], q.field)
    alg = sub_on_subspace(q, kern, name=f"sq({n})")
    return q, kern, alg


def _scalar_pair_line(q: SuperAlgebra, n: int) -> Subspace:
    """Span of (1, 0), the identity matrix in the even copy."""
    zero = q._zero()
    one = q._one()
    v = [zero] * q.dim
    for i in range(n):
        v[i * n + i] = one
    return Subspace.from_vectors([tuple(v)], q.dim, q.field)


def pq(n: int, field=None) -> QuotientPresentation:
    """pq(n) = q(n) / K(1, 0)."""
    q = q_lie(n, field)
    line = _scalar_pair_line(q, n)
    return quotient_algebra(q, line, name=f"pq({n})")


def psq(n: int, field=None) -> QuotientPresentation:
    """psq(n) = sq(n) / K(1, 0), dimension 2 n^2 - 2."""
    q, kern, _ = sq(n, field)
    line = _scalar_pair_line(q, n)
    return quotient_algebra(q, line, within=kern, name=f"psq({n})")


# -- Herstein / Montgomery subquotients ---------------------------------------


@dataclass
class SubquotientResult:
    """Outcome of a derived-mod-center subquotient construction."""

    algebra: SuperAlgebra
    degenerate: bool
    derived_dim: int
    center_dim: int
    intersection_dim: int
    report: ValidationReport | None

    def to_dict(self) -> dict:
        return {
            "dim": self.algebra.dim,
            "degenerate": self.degenerate,
            "derived_dim": self.derived_dim,
            "center_dim": self.center_dim,
            "intersection_dim": self.intersection_dim,
            "valid": None if self.report is None else self.report.ok,
        }


def _subquotient(A: SuperAlgebra, mode: str, name: str) -> SubquotientResult:
    lie = lie_of(A, mode)
    dsub, _ = derived(lie)
    Z = center(A) if mode == "plain" else supercenter(A)
    inter = dsub.intersect(Z)
    if dsub.dim == 0 or dsub.dim == inter.dim:
        zero_alg = SuperAlgebra(A.field, 0, (), LIE_SUPER, {}, name=name)
        return SubquotientResult(zero_alg, True, dsub.dim, Z.dim, inter.dim, None)
    pres = quotient_algebra(lie, inter, within=dsub, name=name)
    report = pres.algebra.validate()
    return SubquotientResult(pres.algebra, False, dsub.dim, Z.dim, inter.dim, report)


def herstein_L(A: SuperAlgebra) -> SubquotientResult:
    """L(A) = (A^L)' / ((A^L)' intersect Z) for an all-even associative A."""
    if any(A.parity):
        raise GradingViolation("herstein_L needs an all-even algebra")
    return _subquotient(A, "plain", f"L({A.name or 'A'})")


def montgomery_SL(A: SuperAlgebra) -> SubquotientResult:
    """SL(A) = (A^S)' / ((A^S)' intersect supercenter)."""
    return _subquotient(A, "super", f"SL({A.name or 'A'})")


# -- odd-square condition ------------------------------------------------------


@dataclass
class ConditionReport:
    """Outcome of the odd-square membership test u^2 in Z => u in Z.

    A violation witness is a homogeneous odd u with u^2 in the supercenter,
    u^2 != 0, and u not in the supercenter; nilpotent squares are not
    counted because 0 lies in every subspace and would trivialize the test.
    """

    violated: bool
    witness: tuple | None
    witness_square: tuple | None
    strategy: str
    coverage: int
    seed: int | None = None

    def to_dict(self) -> dict:
        from .fields import scalar_to_string

        return {
            "violated": self.violated,
            "witness": None if self.witness is None else [scalar_to_string(c) for c in self.witness],
            "witness_square": None
            if self.witness_square is None
            else [scalar_to_string(c) for c in self.witness_square],
            "strategy": self.strategy,
            "coverage": self.coverage,
            "seed": self.seed,
        }


def _is_condition_witness(A: SuperAlgebra, Z: Subspace, u) -> bool:
    if vec_is_zero(u):
        return False
    sq_u = A.multiply(u, u)
    if vec_is_zero(sq_u):
        return False
    return Z.contains_vector(sq_u) and not Z.contains_vector(u)


def montgomery_condition_check(
    A: SuperAlgebra, strategy: str = "sample", count: int = 64, seed: int = 0,
    budget: int = 10**7,
) -> ConditionReport:
    """Search for odd u with u^2 in the supercenter but u outside it.

    strategy "exhaustive" enumerates all odd vectors up to scalar over F_p
    (requires a prime-field algebra and p**odd_dim <= budget); "sample"
    checks all odd basis vectors, their pairwise sums, and seeded random
    odd vectors with coefficients in {-2..2}.  Sampling can only falsify,
    never prove, the condition.
    """
    Z = supercenter(A)
    odd = A.odd_indices()
    if not odd:
        return ConditionReport(False, None, None, strategy, 0, seed)
    zero = A._zero()

    def embed(coeffs) -> tuple:
        v = [zero] * A.dim
        for c, i in zip(coeffs, odd):
            v[i] = c
        return tuple(v)

    if strategy == "exhaustive":
        if A.field.kind != "Fp":
            raise UnsupportedField("exhaustive enumeration needs a prime field")
        p = A.field.p
        if p ** len(odd) > budget:
            raise BudgetExceeded(f"{p}^{len(odd)} exceeds budget {budget}")
        checked = 0
        # normalized vectors: first nonzero coefficient equal to 1
        for lead in range(len(odd)):
            tail = len(odd) - lead - 1
            for code in range(p**tail):
                coeffs = [field_zero(A.field)] * lead + [field_one(A.field)]
                c = code
                for _ in range(tail):
                    coeffs.append(field_from_int(A.field, c % p))
                    c //= p
                u = embed(coeffs)
                checked += 1
                if _is_condition_witness(A, Z, u):
                    return ConditionReport(
                        True, u, A.multiply(u, u), "exhaustive", checked
                    )
        return ConditionReport(False, None, None, "exhaustive", checked)

    if strategy != "sample":
        raise ValueError(f"unknown strategy {strategy!r}")
    candidates = []
    one = A._one()
    for i in odd:
        candidates.append(A.basis_element(i))
    for ai in range(len(odd)):
        for bi in range(ai + 1, len(odd)):
            v = list(A.zero_element())
            v[odd[ai]] = one
            v[odd[bi]] = one
            candidates.append(tuple(v))
    rng = random.Random(seed)
    for _ in range(count):
        coeffs = [field_from_int(A.field, rng.randint(-2, 2)) for _ in odd]
        candidates.append(embed(coeffs))
    checked = 0
    for u in candidates:
        checked += 1
        if _is_condition_witness(A, Z, u):
            return ConditionReport(True, u, A.multiply(u, u), "sample", checked, seed)
    return ConditionReport(False, None, None, "sample", checked, seed)
