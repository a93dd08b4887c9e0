"""Constructors for the named algebras: matrix (super)algebras, the queer
algebra Q(n), Clifford algebras, group algebras, smash products, and direct
sums used by the test suites.

Everything is built over Q by default and optionally reduced to an odd
prime field.  Q(n) is not hard-coded: it is carved out of Mat(n|n) by
solving the commutant condition [X, J] = 0 for the odd operator J with
J^2 = -1, so the defining property is the oracle for the construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import ASSOCIATIVE, SuperAlgebra, algebra_mod_p
from .errors import (
    DegenerateParameter,
    DimensionMismatch,
    InvalidGroupTable,
    NotAnAutomorphism,
)
from .fields import RATIONALS, FieldSpec
from .linalg import Subspace, row_reduce


def _maybe_mod(A: SuperAlgebra, field: FieldSpec) -> SuperAlgebra:
    if field.kind == "Q":
        return A
    if field.kind == "Fp":
        return algebra_mod_p(A, field.p)
    raise DegenerateParameter("constructions are defined over Q or F_p")


def mat(n: int, field: FieldSpec = RATIONALS) -> SuperAlgebra:
    """Full matrix algebra Mat(n) on the matrix-unit basis E_ij, all even."""
    if n < 1:
        raise DegenerateParameter("n must be >= 1")
    dim = n * n
    idx = lambda i, j: i * n + j
    products = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                # E_ij E_jk = E_ik
                products[(idx(i, j), idx(j, k))] = {idx(i, k): Fraction(1)}
    labels = [f"E{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    A = SuperAlgebra(
        RATIONALS, dim, [0] * dim, ASSOCIATIVE, products,
        unit_index=0 if n == 1 else None, labels=labels, name=f"Mat({n})",
    )
    return _maybe_mod(A, field)


def mat_super(m: int, n: int, field: FieldSpec = RATIONALS) -> SuperAlgebra:
    """Supermatrices Mat(m|n): E_ij is odd iff i, j sit on opposite sides
    of the m|n split."""
    if m < 1 or n < 1:
        raise DegenerateParameter("m, n must be >= 1")
    N = m + n
    side = lambda i: 0 if i < m else 1
    idx = lambda i, j: i * N + j
    products = {}
    for i in range(N):
        for j in range(N):
            for k in range(N):
                products[(idx(i, j), idx(j, k))] = {idx(i, k): Fraction(1)}
    parity = [(side(i) + side(j)) % 2 for i in range(N) for j in range(N)]
    labels = [f"E{i + 1}{j + 1}" for i in range(N) for j in range(N)]
    A = SuperAlgebra(
        RATIONALS, N * N, parity, ASSOCIATIVE, products,
        unit_index=0 if N == 1 else None, labels=labels, name=f"Mat({m}|{n})",
    )
    return _maybe_mod(A, field)


def q_assoc(n: int, field: FieldSpec = RATIONALS) -> SuperAlgebra:
    """Queer associative algebra Q(n) = {X in Mat(n|n) : [X, J] = 0} where
    J is the odd operator [[0, 1],[ -1, 0]] with J^2 = -1.

    The commutant condition is solved parity by parity inside Mat(n|n);
    the resulting basis is the pair form (X, 0), (0, Y) with
    (X, Y) <-> [[X, Y], [-Y, X]].
    """
    if n < 1:
        raise DegenerateParameter("n must be >= 1")
    big = mat_super(n, n)
    N = 2 * n
    idx = lambda i, j: i * N + j
    # J = sum_k E_{k, n+k} - E_{n+k, k}
    J = {idx(k, n + k): Fraction(1) for k in range(n)}
    J.update({idx(n + k, k): Fraction(-1) for k in range(n)})
    rows = []
    for coord in range(big.dim):
        # commutator [E_coord, J] as a dense row of the ambient algebra
        comm: dict = {}
        for jc, cj in J.items():
            for k, c in big.products.get((coord, jc), {}).items():
                comm[k] = comm.get(k, Fraction(0)) + cj * c
            for k, c in big.products.get((jc, coord), {}).items():
                comm[k] = comm.get(k, Fraction(0)) - cj * c
        rows.append(comm)
    # solve sum_coord x_coord [E_coord, J] = 0
    eq_rows = []
    for out in range(big.dim):
        eq_rows.append(tuple(rows[coord].get(out, Fraction(0)) for coord in range(big.dim)))
    _, _, kernel = row_reduce(eq_rows, RATIONALS)
    sub = kernel
    assert sub.dim == 2 * n * n, f"commutant of J has dim {sub.dim}, expected {2 * n * n}"
    A = _subalgebra_from_subspace(
        big, sub, name=f"Q({n})", labels=_q_labels(big, sub, n)
    )
    return _maybe_mod(A, field)


def _q_labels(big: SuperAlgebra, sub: Subspace, n: int):
    labels = []
    for row in sub.basis:
        parity = big.parity_of(row)
        support = [i for i, c in enumerate(row) if c]
        i, j = divmod(support[0], 2 * n)
        if parity == 0:
            labels.append(f"(E{i + 1}{j + 1},0)")
        else:
            labels.append(f"(0,E{i + 1}{j % n + 1 if j >= n else j + 1})")
    return labels


def _subalgebra_from_subspace(A: SuperAlgebra, sub: Subspace, name=None, labels=None) -> SuperAlgebra:
    """Induced structure constants on a multiplication-closed subspace whose
    RREF basis rows are parity-homogeneous."""
    rows = list(sub.basis)
    d = len(rows)
    parity = []
    for row in rows:
        p = A.parity_of(row)
        if p is None:
            raise DimensionMismatch("subspace basis row is not parity-homogeneous")
        parity.append(p)
    products = {}
    for a in range(d):
        for b in range(d):
            prod = A.multiply(rows[a], rows[b])
            coeffs = sub.express(prod)
            if coeffs is None:
                raise DimensionMismatch("subspace is not closed under multiplication")
            table = {k: c for k, c in enumerate(coeffs) if c}
            if table:
                products[(a, b)] = table
    from .algebra import detect_unit

    unit = detect_unit(d, products) if A.kind == ASSOCIATIVE else None
    return SuperAlgebra(A.field, d, parity, A.kind, products, unit_index=unit,
                        labels=labels, name=name)


def clifford(n: int, a, grading: str = "natural", field: FieldSpec = RATIONALS) -> SuperAlgebra:
    """Clifford algebra on generators x_1..x_n with x_i^2 = a and
    x_i x_j = -x_j x_i; basis is the 2^n blades ordered by bitmask.

    The natural grading assigns parity 1 to every generator (so a blade's
    parity is its length mod 2); the trivial grading is all even.
    """
    a = Fraction(a)
    if a == 0:
        raise DegenerateParameter("Clifford parameter a must be nonzero")
    if n < 1:
        raise DegenerateParameter("n must be >= 1")
    if grading not in ("natural", "trivial"):
        raise DegenerateParameter(f"unknown grading {grading!r}")
    dim = 1 << n
    products = {}
    for s in range(dim):
        for t in range(dim):
            # sign from moving each generator of t past the tail of s
            sign = 1
            for g in range(n):
                if t & (1 << g):
                    higher = s >> (g + 1)
                    sign *= (-1) ** bin(higher).count("1")
            common = s & t
            coeff = Fraction(sign) * a ** bin(common).count("1")
            products[(s, t)] = {s ^ t: coeff}
    if grading == "natural":
        parity = [bin(s).count("1") % 2 for s in range(dim)]
    else:
        parity = [0] * dim
    labels = ["1"] + [
        "*".join(f"x{g + 1}" for g in range(n) if s & (1 << g)) for s in range(1, dim)
    ]
    A = SuperAlgebra(
        RATIONALS, dim, parity, ASSOCIATIVE, products,
        unit_index=0, labels=labels, name=f"Cliff({n},{a},{grading})",
    )
    return _maybe_mod(A, field)


# -- groups ---------------------------------------------------------------


@dataclass(frozen=True)
class GroupData:
    """Finite group with a validated multiplication table.

    ``generators`` index elements whose automorphism matrices define a
    smash-product action; ``words`` expresses every element as a product of
    generators (empty word = identity).
    """

    table: tuple
    identity: int
    generators: tuple
    words: tuple
    labels: tuple | None = None

    @property
    def order(self) -> int:
        return len(self.table)


GROUP_CLOSURE_CAP = 10000


def group_from_table(table, labels=None) -> GroupData:
    n = len(table)
    table = tuple(tuple(row) for row in table)
    for row in table:
        if len(row) != n or any(not (0 <= x < n) for x in row):
            raise InvalidGroupTable("table is not square over element indices")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if table[table[i][j]][k] != table[i][table[j][k]]:
                    raise InvalidGroupTable(f"associativity fails at ({i},{j},{k})")
    identity = None
    for e in range(n):
        if all(table[e][i] == i and table[i][e] == i for i in range(n)):
            identity = e
            break
    if identity is None:
        raise InvalidGroupTable("no identity element")
    for i in range(n):
        if not any(table[i][j] == identity for j in range(n)):
            raise InvalidGroupTable(f"element {i} has no inverse")
    gens = tuple(i for i in range(n) if i != identity)
    words = tuple(() if i == identity else (i,) for i in range(n))
    return GroupData(table, identity, gens, words, tuple(labels) if labels else None)


def group_from_permutations(perms) -> GroupData:
    """Close a set of permutations (tuples of images on 0..k-1) under
    products; elements are ordered by BFS from the identity."""
    if not perms:
        raise InvalidGroupTable("no generators")
    k = len(perms[0])
    for p in perms:
        if sorted(p) != list(range(k)):
            raise InvalidGroupTable(f"not a permutation: {p}")
    ident = tuple(range(k))
    elements = [ident]
    index = {ident: 0}
    words = {ident: ()}
    frontier = [ident]
    gen_perms = [tuple(p) for p in perms]
    while frontier:
        nxt = []
        for g in frontier:
            for gi, p in enumerate(gen_perms):
                prod = tuple(g[p[i]] for i in range(k))  # g after p: (g o p)
                if prod not in index:
                    if len(elements) >= GROUP_CLOSURE_CAP:
                        raise InvalidGroupTable(
                            f"closure exceeds {GROUP_CLOSURE_CAP} elements"
                        )
                    index[prod] = len(elements)
                    elements.append(prod)
                    words[prod] = words[g] + (gi,)
                    nxt.append(prod)
        frontier = nxt
    n = len(elements)
    table = tuple(
        tuple(index[tuple(ga[gb[i]] for i in range(k))] for gb in elements)
        for ga in elements
    )
    gen_indices = tuple(index[tuple(p)] for p in gen_perms)
    word_list = []
    for e in elements:
        word_list.append(tuple(gen_indices[gi] for gi in words[e]))
    # words are stored over element indices of the generators
    return GroupData(table, 0, gen_indices, tuple(word_list))


def cyclic_group(k: int) -> GroupData:
    if k < 1:
        raise InvalidGroupTable("order must be >= 1")
    table = [[(i + j) % k for j in range(k)] for i in range(k)]
    return group_from_table(table, labels=[f"g{i}" for i in range(k)])


def group_algebra(G: GroupData, field: FieldSpec = RATIONALS) -> SuperAlgebra:
    products = {}
    for i in range(G.order):
        for j in range(G.order):
            products[(i, j)] = {G.table[i][j]: Fraction(1)}
    labels = list(G.labels) if G.labels else [f"g{i}" for i in range(G.order)]
    A = SuperAlgebra(
        RATIONALS, G.order, [0] * G.order, ASSOCIATIVE, products,
        unit_index=G.identity, labels=labels, name=f"K[G{G.order}]",
    )
    return _maybe_mod(A, field)


# -- smash product ----------------------------------------------------------


def _mat_vec(matrix, v, zero):
    n = len(matrix)
    out = []
    for r in range(n):
        acc = zero
        row = matrix[r]
        for c, x in enumerate(v):
            if x:
                acc = acc + row[c] * x
        out.append(acc)
    return out


def _check_automorphism(A: SuperAlgebra, matrix):
    """matrix columns are the images of basis vectors; must be a bijective,
    parity-preserving algebra map."""
    if len(matrix) != A.dim or any(len(r) != A.dim for r in matrix):
        raise NotAnAutomorphism("action matrix has wrong shape")
    zero = A._zero()
    images = [tuple(matrix[r][c] for r in range(A.dim)) for c in range(A.dim)]
    _, rank, _ = row_reduce(images, A.field)
    if rank != A.dim:
        raise NotAnAutomorphism("action matrix is singular")
    for c, img in enumerate(images):
        pc = A.parity_of(img)
        if pc is not None and pc != A.parity[c]:
            raise NotAnAutomorphism(f"basis image {c} changes parity")
        if pc is None and any(img):
            raise NotAnAutomorphism(f"basis image {c} is parity-inhomogeneous")
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = A.multiply(images[i], images[j])
            tab = A.products.get((i, j), {})
            rhs = [zero] * A.dim
            for k, coeff in tab.items():
                img = images[k]
                rhs = [x + coeff * y for x, y in zip(rhs, img)]
            if list(lhs) != rhs:
                raise NotAnAutomorphism(f"multiplicativity fails at basis pair ({i},{j})")


def smash_product(A: SuperAlgebra, G: GroupData, action) -> SuperAlgebra:
    """Crossed product A # K[G]: basis a_i # g with
    (a # g)(b # h) = (a * g(b)) # (gh).

    ``action`` lists one automorphism matrix per entry of ``G.generators``
    (columns are images of basis vectors).  Matrices for the remaining
    elements follow from the generator words; the extension is verified to
    be a group homomorphism into Aut(A).
    """
    if A.kind != ASSOCIATIVE:
        raise NotAnAutomorphism("smash product requires an associative algebra")
    if len(action) != len(G.generators):
        raise NotAnAutomorphism(
            f"need {len(G.generators)} action matrices, got {len(action)}"
        )
    zero = A._zero()
    one = A._one()
    for m in action:
        _check_automorphism(A, m)
    gen_mats = {g: action[i] for i, g in enumerate(G.generators)}
    ident_mat = [[one if r == c else zero for c in range(A.dim)] for r in range(A.dim)]
    mats = {}
    for e in range(G.order):
        m = ident_mat
        for g in G.words[e]:
            m = _mat_mul(m, gen_mats[g], zero)
        mats[e] = m
    # the extension must be multiplicative on the whole group
    for g in range(G.order):
        for h in range(G.order):
            if _mat_mul(mats[g], mats[h], zero) != mats[G.table[g][h]]:
                raise NotAnAutomorphism(
                    f"action is not a group homomorphism at pair ({g},{h})"
                )
    dim = A.dim * G.order
    flat = lambda i, g: g * A.dim + i
    products = {}
    for g in range(G.order):
        mg = mats[g]
        for h in range(G.order):
            gh = G.table[g][h]
            for i in range(A.dim):
                for j in range(A.dim):
                    # g(b_j) as a column of mg
                    img = tuple(mg[r][j] for r in range(A.dim))
                    prod = A.multiply(A.basis_element(i), img)
                    table = {flat(k, gh): c for k, c in enumerate(prod) if c}
                    if table:
                        products[(flat(i, g), flat(j, h))] = table
    parity = tuple(A.parity[i] for g in range(G.order) for i in range(A.dim))
    alabels = A.labels or [f"b{i}" for i in range(A.dim)]
    glabels = G.labels or [f"g{g}" for g in range(G.order)]
    labels = [f"{alabels[i]}#{glabels[g]}" for g in range(G.order) for i in range(A.dim)]
    unit = None
    if A.unit_index is not None:
        unit = flat(A.unit_index, G.identity)
    return SuperAlgebra(
        A.field, dim, parity, ASSOCIATIVE, products,
        unit_index=unit, labels=labels,
        name=f"{A.name or 'A'}#K[G{G.order}]",
    )


def _mat_mul(a, b, zero):
    n = len(a)
    out = [[zero] * n for _ in range(n)]
    for r in range(n):
        ar = a[r]
        for k in range(n):
            x = ar[k]
            if x:
                bk = b[k]
                orow = out[r]
                for c in range(n):
                    if bk[c]:
                        orow[c] = orow[c] + x * bk[c]
    return out


def direct_sum(A: SuperAlgebra, B: SuperAlgebra) -> SuperAlgebra:
    """Direct sum of algebras of the same kind over the same field."""
    if A.field != B.field or A.kind != B.kind:
        raise DimensionMismatch("direct sum requires matching field and kind")
    products = {}
    for (i, j), t in A.products.items():
        products[(i, j)] = dict(t)
    for (i, j), t in B.products.items():
        products[(i + A.dim, j + A.dim)] = {k + A.dim: c for k, c in t.items()}
    parity = A.parity + B.parity
    la = A.labels or tuple(f"a{i}" for i in range(A.dim))
    lb = B.labels or tuple(f"b{i}" for i in range(B.dim))
    return SuperAlgebra(
        A.field, A.dim + B.dim, parity, A.kind, products,
        labels=[f"L.{x}" for x in la] + [f"R.{x}" for x in lb],
        name=f"({A.name})+({B.name})",
    )
