"""Exact linear algebra over Q and F_p: reduced row echelon form, kernels,
and a subspace lattice in canonical RREF coordinates.

Subspaces are stored as reduced row-echelon bases with strictly increasing
pivots, so set equality of subspaces is literal equality of the stored rows.
A numpy-backed row space over a large prime is provided for the
high-throughput rank certificates used by the simplicity engine.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, UnsupportedField
from .fields import FieldSpec, field_one, field_zero


def vec_zero(field: FieldSpec, n: int) -> tuple:
    z = field_zero(field)
    return (z,) * n


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, u):
    return tuple(c * a for a in u)


def vec_is_zero(u) -> bool:
    return not any(u)


def basis_vec(field: FieldSpec, n: int, i: int) -> tuple:
    z = field_zero(field)
    one = field_one(field)
    return tuple(one if j == i else z for j in range(n))


def _check_linear_field(field: FieldSpec):
    if not field.is_field:
        raise UnsupportedField("row reduction requires a field; Q[nu] is a ring")


def _row_reduce_with_pivots(rows, field: FieldSpec):
    """Full RREF. Returns (rref rows, pivot columns, pre-normalization pivots).

    The pre-normalization pivot scalars are reported so callers can check
    which primes stay good for rational/modular rank comparisons.
    """
    _check_linear_field(field)
    work = [list(r) for r in rows]
    ncols = len(work[0]) if work else 0
    for r in work:
        if len(r) != ncols:
            raise DimensionMismatch("ragged matrix")
    pivots: list[int] = []
    raw_pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(work)):
            if work[i][c]:
                pr = i
                break
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        piv = work[r][c]
        raw_pivots.append(piv)
        if piv != field_one(field):
            inv = field_one(field) / piv
            work[r] = [inv * x for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    rref = [tuple(row) for row in work]
    return rref, pivots, raw_pivots


def row_reduce(rows, field: FieldSpec):
    """RREF of a matrix. Returns (rref_matrix, rank, kernel Subspace).

    The kernel is the right null space {x : Mx = 0}, itself in canonical
    RREF form, so rank + dim(kernel) equals the column count.
    """
    rref, pivots, _ = _row_reduce_with_pivots(rows, field)
    rank = len(pivots)
    ncols = len(rows[0]) if rows else 0
    kernel_vectors = []
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    zero = field_zero(field)
    one = field_one(field)
    for fc in free_cols:
        v = [zero] * ncols
        v[fc] = one
        for r, pc in enumerate(pivots):
            v[pc] = -rref[r][fc]
        kernel_vectors.append(tuple(v))
    kernel = Subspace.from_vectors(kernel_vectors, ncols, field)
    return rref, rank, kernel


@dataclass(frozen=True)
class Subspace:
    """Linear subspace in canonical form: RREF basis, increasing pivots."""

    field: FieldSpec
    ambient_dim: int
    basis: tuple
    pivot_columns: tuple

    @staticmethod
    def zero(field: FieldSpec, ambient_dim: int) -> "Subspace":
        return Subspace(field, ambient_dim, (), ())

    @staticmethod
    def full(field: FieldSpec, ambient_dim: int) -> "Subspace":
        rows = tuple(basis_vec(field, ambient_dim, i) for i in range(ambient_dim))
        return Subspace(field, ambient_dim, rows, tuple(range(ambient_dim)))

    @staticmethod
    def from_vectors(vectors, ambient_dim: int, field: FieldSpec) -> "Subspace":
        vectors = [tuple(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatch("vector length differs from ambient dimension")
        if not vectors:
            return Subspace.zero(field, ambient_dim)
        rref, pivots, _ = _row_reduce_with_pivots(vectors, field)
        rows = tuple(rref[: len(pivots)])
        return Subspace(field, ambient_dim, rows, tuple(pivots))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _check_compatible(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch(f"ambient {self.ambient_dim} vs {other.ambient_dim}")
        if self.field != other.field:
            raise DimensionMismatch(f"fields differ: {self.field} vs {other.field}")

    def reduce_vector(self, v) -> tuple:
        """Residual of v after eliminating all pivot coordinates."""
        v = list(v)
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector length differs from ambient dimension")
        for row, pc in zip(self.basis, self.pivot_columns):
            c = v[pc]
            if c:
                for j in range(pc, self.ambient_dim):
                    v[j] = v[j] - c * row[j]
        return tuple(v)

    def contains_vector(self, v) -> bool:
        return vec_is_zero(self.reduce_vector(v))

    def express(self, v):
        """Coefficients of v in the stored basis, or None if v is outside."""
        coeffs = tuple(v[pc] for pc in self.pivot_columns)
        residual = list(v)
        for c, row in zip(coeffs, self.basis):
            if c:
                residual = [x - c * y for x, y in zip(residual, row)]
        if any(residual):
            return None
        return coeffs

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        return Subspace.from_vectors(
            list(self.basis) + list(other.basis), self.ambient_dim, self.field
        )

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus: reduce rows [u|u] and [v|0]; zero left blocks give
        a basis of the intersection in the right block."""
        self._check_compatible(other)
        n = self.ambient_dim
        zero_row = list(vec_zero(self.field, n))
        stacked = [list(u) + list(u) for u in self.basis]
        stacked += [list(v) + zero_row for v in other.basis]
        if not stacked:
            return Subspace.zero(self.field, n)
        rref, pivots, _ = _row_reduce_with_pivots(stacked, self.field)
        inter_rows = []
        for row, pc in zip(rref, pivots):
            if pc >= n:
                inter_rows.append(row[n:])
        return Subspace.from_vectors(inter_rows, n, self.field)

    def contains(self, other: "Subspace") -> bool:
        self._check_compatible(other)
        return all(self.contains_vector(v) for v in other.basis)

    def quotient_transversal(self, within: "Subspace | None" = None):
        """Vectors completing this basis to ``within`` (default: ambient).

        Deterministic choice: for the ambient case the standard basis
        vectors at non-pivot coordinates; inside a superspace, its RREF
        rows whose pivots are not pivots of this subspace.
        """
        if within is None:
            pivot_set = set(self.pivot_columns)
            return [
                basis_vec(self.field, self.ambient_dim, c)
                for c in range(self.ambient_dim)
                if c not in pivot_set
            ]
        self._check_compatible(within)
        if not within.contains(self):
            raise DimensionMismatch("transversal requested inside a non-superspace")
        pivot_set = set(self.pivot_columns)
        return [
            row
            for row, pc in zip(within.basis, within.pivot_columns)
            if pc not in pivot_set
        ]

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.basis))


def subspace_combine(op: str, U: Subspace, V: Subspace):
    """Dispatch surface for the subspace lattice: sum, intersect, contains,
    quotient_transversal."""
    if op == "sum":
        return U.sum(V)
    if op == "intersect":
        return U.intersect(V)
    if op == "contains":
        return U.contains(V)
    if op == "quotient_transversal":
        return U.quotient_transversal(V)
    raise ValueError(f"unknown subspace op {op!r}")


class RowSpace:
    """Incrementally maintained RREF row space over an exact field."""

    def __init__(self, field: FieldSpec, ambient_dim: int):
        _check_linear_field(field)
        self.field = field
        self.ambient_dim = ambient_dim
        self.rows: list[tuple] = []
        self.pivots: list[int] = []

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, v) -> list:
        v = list(v)
        for row, pc in zip(self.rows, self.pivots):
            c = v[pc]
            if c:
                for j in range(pc, self.ambient_dim):
                    v[j] = v[j] - c * row[j]
        return v

    def insert(self, v) -> bool:
        """Insert a vector; returns True when it increased the rank."""
        v = self.reduce(v)
        pc = None
        for j, x in enumerate(v):
            if x:
                pc = j
                break
        if pc is None:
            return False
        inv = field_one(self.field) / v[pc]
        new_row = tuple(inv * x for x in v)
        # eliminate the new pivot from existing rows to keep full reduction
        for i, row in enumerate(self.rows):
            c = row[pc]
            if c:
                self.rows[i] = tuple(x - c * y for x, y in zip(row, new_row))
        at = 0
        while at < len(self.pivots) and self.pivots[at] < pc:
            at += 1
        self.rows.insert(at, new_row)
        self.pivots.insert(at, pc)
        return True

    def contains_vector(self, v) -> bool:
        return not any(self.reduce(v))

    def to_subspace(self) -> Subspace:
        return Subspace(self.field, self.ambient_dim, tuple(self.rows), tuple(self.pivots))


# -- numpy row space over a large prime ------------------------------------
#
# Used for rank certificates: for integer vectors, full rank mod p implies
# full rank over Q, so a full modular rank is a sound "Simple" certificate.
# Primes below 2^16 keep every matmul exact in float64 (sums stay below
# 2^42 for ambient dimensions up to 1024), which lets BLAS do the work.

CERTIFICATE_PRIMES = (65521, 65519, 65497)


def _mod_matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    prod = a.astype(np.float64) @ b.astype(np.float64)
    return np.mod(np.rint(prod).astype(np.int64), p)


class ModRowSpace:
    """Fully reduced row space over F_p backed by preallocated int64 rows.

    Requires len(rows) * (p-1)^2 < 2^53 so the float64 reduction matmul is
    exact; the certificate primes guarantee this for ambient dims <= 2048.
    """

    def __init__(self, ambient_dim: int, p: int):
        self.n = ambient_dim
        self.p = p
        self._buf = np.zeros((ambient_dim, ambient_dim), dtype=np.int64)
        self._count = 0
        self.pivots: list[int] = []

    @property
    def dim(self) -> int:
        return self._count

    @property
    def rows(self) -> np.ndarray:
        return self._buf[: self._count]

    def _reduce_block(self, block: np.ndarray) -> np.ndarray:
        block = np.mod(block, self.p)
        if self._count and block.size:
            coeffs = block[:, self.pivots]
            block = np.mod(block - _mod_matmul(coeffs, self.rows, self.p), self.p)
        return block

    def insert_block(self, block: np.ndarray) -> list:
        """Insert a batch of rows; returns the normalized new rows (copies
        spanning the added subspace)."""
        block = self._reduce_block(np.asarray(block, dtype=np.int64))
        fresh: list[np.ndarray] = []
        fresh_pivots: list[int] = []
        for i in range(block.shape[0]):
            v = block[i]
            nz = np.nonzero(v)[0]
            if nz.size == 0:
                continue
            pc = int(nz[0])
            inv = pow(int(v[pc]), self.p - 2, self.p)
            v = np.mod(v * inv, self.p)
            if i + 1 < block.shape[0]:
                col = block[i + 1 :, pc].copy()
                if col.any():
                    block[i + 1 :] = np.mod(block[i + 1 :] - np.outer(col, v), self.p)
            fresh.append(v.copy())
            fresh_pivots.append(pc)
        if not fresh:
            return []
        newblock = np.stack(fresh)
        # back-substitute so the new rows are zero at each other's pivots
        for j in range(len(fresh) - 1, 0, -1):
            col = newblock[:j, fresh_pivots[j]].copy()
            if col.any():
                newblock[:j] = np.mod(newblock[:j] - np.outer(col, newblock[j]), self.p)
        # one batched update clears the new pivot columns from old rows
        if self._count:
            coeffs = self._buf[: self._count, fresh_pivots]
            if coeffs.any():
                self._buf[: self._count] = np.mod(
                    self.rows - _mod_matmul(coeffs, newblock, self.p), self.p
                )
        start = self._count
        self._buf[start : start + len(fresh)] = newblock
        self._count += len(fresh)
        self.pivots.extend(fresh_pivots)
        order = np.argsort(self.pivots, kind="stable")
        self._buf[: self._count] = self._buf[: self._count][order]
        self.pivots = [self.pivots[k] for k in order]
        return [newblock[j].copy() for j in range(len(fresh))]
