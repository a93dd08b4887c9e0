"""Exact polynomial representation of the N-particle rational Calogero
apparatus: exchange operators, Dunkl operators, creation/annihilation
operators, the anticommutator-form Hamiltonian, a degree-truncated survey
of the observable algebra, and the central-simplicity predicate for the
symmetric-group case.

Polynomials live in x_1..x_N with coefficients in Q[nu]; every operator
application is exact.  The divided-difference part of a Dunkl operator is
an exact division by (x_i - x_j) whose zero remainder is asserted at run
time.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BudgetExceeded, DivisionNotExact, InternalError
from .fields import NU, NuPoly

Expo = tuple


class XPolynomial:
    """Sparse multivariate polynomial: exponent tuple -> NuPoly coefficient."""

    __slots__ = ("N", "terms")

    def __init__(self, N: int, terms: dict | None = None):
        self.N = N
        clean = {}
        if terms:
            for e, c in terms.items():
                if not isinstance(c, NuPoly):
                    c = NuPoly.constant(c)
                if c:
                    clean[tuple(e)] = c
        self.terms = clean

    @staticmethod
    def zero(N: int) -> "XPolynomial":
        return XPolynomial(N)

    @staticmethod
    def one(N: int) -> "XPolynomial":
        return XPolynomial(N, {(0,) * N: NuPoly.constant(1)})

    @staticmethod
    def monomial(N: int, expo, coeff=1) -> "XPolynomial":
        return XPolynomial(N, {tuple(expo): coeff})

    @staticmethod
    def variable(N: int, i: int) -> "XPolynomial":
        e = [0] * N
        e[i - 1] = 1
        return XPolynomial(N, {tuple(e): NuPoly.constant(1)})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int | None:
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def __add__(self, other: "XPolynomial") -> "XPolynomial":
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            out[e] = c if s is None else s + c
        return XPolynomial(self.N, out)

    def __sub__(self, other: "XPolynomial") -> "XPolynomial":
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            out[e] = -c if s is None else s - c
        return XPolynomial(self.N, out)

    def __neg__(self) -> "XPolynomial":
        return XPolynomial(self.N, {e: -c for e, c in self.terms.items()})

    def scale(self, c) -> "XPolynomial":
        if not isinstance(c, NuPoly):
            c = NuPoly.constant(c)
        return XPolynomial(self.N, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, NuPoly)):
            return self.scale(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                prev = out.get(e)
                prod = c1 * c2
                out[e] = prod if prev is None else prev + prod
        return XPolynomial(self.N, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, XPolynomial) and self.N == other.N and self.terms == other.terms

    def __hash__(self):
        return hash((self.N, frozenset(self.terms.items())))

    def at_nu(self, value) -> "XPolynomial":
        """Substitute a rational value for nu."""
        return XPolynomial(
            self.N, {e: NuPoly.constant(c.at(value)) for e, c in self.terms.items()}
        )

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms):
            mono = "*".join(
                f"x{i + 1}^{k}" if k > 1 else f"x{i + 1}" for i, k in enumerate(e) if k
            )
            c = self.terms[e]
            bits.append(f"({c!r})*{mono}" if mono else f"({c!r})")
        return " + ".join(bits)


# -- operator atoms -------------------------------------------------------------


@dataclass(frozen=True)
class Mult:
    i: int


@dataclass(frozen=True)
class Partial:
    i: int


@dataclass(frozen=True)
class Exchange:
    i: int
    j: int


@dataclass(frozen=True)
class Dunkl:
    i: int


@dataclass(frozen=True)
class CreaAnn:
    i: int
    alpha: int


def _check_index(i: int, N: int):
    if not 1 <= i <= N:
        raise IndexError(f"particle index {i} outside 1..{N}")


def apply_mult(i: int, f: XPolynomial) -> XPolynomial:
    _check_index(i, f.N)
    out = {}
    for e, c in f.terms.items():
        e2 = list(e)
        e2[i - 1] += 1
        out[tuple(e2)] = c
    return XPolynomial(f.N, out)


def apply_partial(i: int, f: XPolynomial) -> XPolynomial:
    _check_index(i, f.N)
    out = {}
    for e, c in f.terms.items():
        k = e[i - 1]
        if k:
            e2 = list(e)
            e2[i - 1] = k - 1
            key = tuple(e2)
            prev = out.get(key)
            add = c * k
            out[key] = add if prev is None else prev + add
    return XPolynomial(f.N, out)


def apply_exchange(i: int, j: int, f: XPolynomial) -> XPolynomial:
    _check_index(i, f.N)
    _check_index(j, f.N)
    if i == j:
        raise IndexError("exchange needs two distinct indices")
    out = {}
    for e, c in f.terms.items():
        e2 = list(e)
        e2[i - 1], e2[j - 1] = e2[j - 1], e2[i - 1]
        key = tuple(e2)
        prev = out.get(key)
        out[key] = c if prev is None else prev + c
    return XPolynomial(f.N, out)


def exact_divide_by_difference(g: XPolynomial, i: int, j: int) -> XPolynomial:
    """Exact quotient g / (x_i - x_j); raises DivisionNotExact otherwise.

    Long division treating g as a polynomial in x_i: the leading-in-x_i
    slice produces quotient terms, the divisor is monic so the loop
    strictly decreases the x_i-degree.
    """
    _check_index(i, g.N)
    _check_index(j, g.N)
    quotient: dict = {}
    rem = dict(g.terms)
    while rem:
        d = max(e[i - 1] for e in rem)
        if d == 0:
            raise DivisionNotExact(
                f"remainder {XPolynomial(g.N, rem)!r} not divisible by x{i}-x{j}"
            )
        movers = [(e, c) for e, c in rem.items() if e[i - 1] == d]
        for e, c in movers:
            qe = list(e)
            qe[i - 1] = d - 1
            qk = tuple(qe)
            prev = quotient.get(qk)
            quotient[qk] = c if prev is None else prev + c
            # rem -= c * x_i^(d-1) (x_i - x_j) x_rest, i.e. replace the
            # term by its x_j-shifted sibling
            del rem[e]
            se = list(e)
            se[i - 1] = d - 1
            se[j - 1] += 1
            sk = tuple(se)
            prev = rem.get(sk)
            val = c if prev is None else prev + c
            if val:
                rem[sk] = val
            elif sk in rem:
                del rem[sk]
    return XPolynomial(g.N, quotient)


def apply_dunkl(i: int, f: XPolynomial, coupling: NuPoly = NU) -> XPolynomial:
    """Dunkl operator: partial_i f + coupling * sum_{j != i} of
    2 (f - K_ij f) / (x_i - x_j); the division is always exact here and a
    failure signals a bug, not bad input."""
    _check_index(i, f.N)
    out = apply_partial(i, f)
    for j in range(1, f.N + 1):
        if j == i:
            continue
        num = f - apply_exchange(i, j, f)
        if num.is_zero():
            continue
        try:
            quot = exact_divide_by_difference(num, i, j)
        except DivisionNotExact as e:  # pragma: no cover - theory forbids it
            raise InternalError(f"Dunkl divided difference not exact: {e}") from e
        out = out + quot.scale(coupling * 2)
    return out


def apply_crea_ann(i: int, alpha: int, f: XPolynomial) -> XPolynomial:
    """Unnormalized ladder operator x_i + (-1)^alpha D_i (the 1/sqrt(2)
    factors of the normalized version are absorbed into the Hamiltonian's
    global 1/4, keeping everything rational)."""
    if alpha not in (0, 1):
        raise IndexError("alpha must be 0 or 1")
    d = apply_dunkl(i, f)
    m = apply_mult(i, f)
    return m + d if alpha == 0 else m - d


def apply_atom(atom, f: XPolynomial) -> XPolynomial:
    if isinstance(atom, Mult):
        return apply_mult(atom.i, f)
    if isinstance(atom, Partial):
        return apply_partial(atom.i, f)
    if isinstance(atom, Exchange):
        return apply_exchange(atom.i, atom.j, f)
    if isinstance(atom, Dunkl):
        return apply_dunkl(atom.i, f)
    if isinstance(atom, CreaAnn):
        return apply_crea_ann(atom.i, atom.alpha, f)
    raise TypeError(f"unknown atom {atom!r}")


def apply_word(word, f: XPolynomial) -> XPolynomial:
    """Apply a word of atoms, rightmost atom first."""
    for atom in reversed(list(word)):
        f = apply_atom(atom, f)
    return f


@dataclass(frozen=True)
class OperatorExpr:
    """Formal sum of scalar-prefixed operator words."""

    N: int
    summands: tuple  # of (NuPoly, tuple of atoms)

    def apply(self, f: XPolynomial) -> XPolynomial:
        out = XPolynomial.zero(self.N)
        for coeff, word in self.summands:
            out = out + apply_word(word, f).scale(coeff)
        return out


def hamiltonian_apply(f: XPolynomial) -> XPolynomial:
    """Calogero Hamiltonian in anticommutator form,
    -(1/4) sum_i (a_i^0 a_i^1 + a_i^1 a_i^0) with the unnormalized ladder
    operators."""
    N = f.N
    out = XPolynomial.zero(N)
    quarter = Fraction(-1, 4)
    for i in range(1, N + 1):
        t01 = apply_crea_ann(i, 0, apply_crea_ann(i, 1, f))
        t10 = apply_crea_ann(i, 1, apply_crea_ann(i, 0, f))
        out = out + (t01 + t10).scale(quarter)
    return out


def hamiltonian_dunkl_form(f: XPolynomial) -> XPolynomial:
    """(1/2) sum_i (D_i^2 - x_i^2) applied to f; algebraically forced to
    agree with hamiltonian_apply and tested as an independent route."""
    N = f.N
    out = XPolynomial.zero(N)
    half = Fraction(1, 2)
    for i in range(1, N + 1):
        dd = apply_dunkl(i, apply_dunkl(i, f))
        xx = apply_mult(i, apply_mult(i, f))
        out = out + (dd - xx).scale(half)
    return out


def hamiltonian_displayed_form(f: XPolynomial) -> XPolynomial:
    """The differential-operator display
    -(1/2) sum_i (partial_i^2 - x_i^2 + nu sum_{j != i} 2/(x_i-x_j) partial_i).

    The pair (i, j), (j, i) contributions are combined into the exact
    division of (partial_i - partial_j) f by (x_i - x_j), which exists for
    inputs symmetric in each pair; DivisionNotExact propagates otherwise.
    """
    N = f.N
    out = XPolynomial.zero(N)
    for i in range(1, N + 1):
        out = out + apply_partial(i, apply_partial(i, f))
        out = out - apply_mult(i, apply_mult(i, f))
    for i in range(1, N + 1):
        for j in range(i + 1, N + 1):
            num = apply_partial(i, f) - apply_partial(j, f)
            if num.is_zero():
                continue
            quot = exact_divide_by_difference(num, i, j)
            out = out + quot.scale(NU * 2)
    return out.scale(Fraction(-1, 2))


# -- sweeps and reports ----------------------------------------------------------


def monomials_up_to(N: int, dmax: int):
    """All exponent tuples of total degree <= dmax, lexicographic."""

    def rec(prefix, remaining, slots):
        if slots == 0:
            yield tuple(prefix)
            return
        for k in range(remaining + 1):
            yield from rec(prefix + [k], remaining - k, slots - 1)

    out = list(rec([], dmax, N))
    out.sort()
    return out


def check_dunkl_commutativity(N: int, dmax: int, negative_control: bool = False) -> dict:
    """Verify [D_i, D_j] f = 0 identically in nu on all monomials of degree
    <= dmax; with negative_control the pair (D_1, x_1) is used instead and
    the nonzero commutator count is reported."""
    if N < 2 or dmax < 1:
        raise BudgetExceeded("need N >= 2 and dmax >= 1")
    identities = 0
    nonzero = []
    monos = monomials_up_to(N, dmax)
    if negative_control:
        for e in monos:
            f = XPolynomial.monomial(N, e)
            comm = apply_dunkl(1, apply_mult(1, f)) - apply_mult(1, apply_dunkl(1, f))
            identities += 1
            if not comm.is_zero():
                nonzero.append(e)
        return {
            "mode": "negative-control [D1, x1]",
            "monomials": len(monos),
            "identities_checked": identities,
            "all_zero": not nonzero,
            "nonzero_count": len(nonzero),
        }
    for e in monos:
        f = XPolynomial.monomial(N, e)
        for i in range(1, N + 1):
            cache = apply_dunkl(i, f)
            for j in range(i + 1, N + 1):
                lhs = apply_dunkl(i, apply_dunkl(j, f))
                rhs = apply_dunkl(j, cache)
                identities += 1
                if not (lhs - rhs).is_zero():
                    nonzero.append((e, i, j))
    return {
        "mode": "dunkl-commutativity",
        "particles": N,
        "max_degree": dmax,
        "monomials": len(monos),
        "identities_checked": identities,
        "all_zero": not nonzero,
        "nonzero_count": len(nonzero),
    }


def hamiltonian_identity_check(N: int, dmax: int) -> dict:
    """Assert the anticommutator form equals (1/2) sum (D_i^2 - x_i^2) on
    every monomial of degree <= dmax."""
    mismatches = 0
    monos = monomials_up_to(N, dmax)
    for e in monos:
        f = XPolynomial.monomial(N, e)
        if not (hamiltonian_apply(f) - hamiltonian_dunkl_form(f)).is_zero():
            mismatches += 1
    return {
        "mode": "hamiltonian-identity",
        "particles": N,
        "max_degree": dmax,
        "monomials": len(monos),
        "all_equal": mismatches == 0,
        "mismatches": mismatches,
    }


def symmetrize(f: XPolynomial) -> XPolynomial:
    """Sum of f over all coordinate permutations (orbit sum without
    normalization)."""
    import itertools

    out: dict = {}
    for perm in itertools.permutations(range(f.N)):
        for e, c in f.terms.items():
            key = tuple(e[perm[k]] for k in range(f.N))
            prev = out.get(key)
            out[key] = c if prev is None else prev + c
    return XPolynomial(f.N, out)


def compare_hamiltonians(N: int, dmax: int) -> dict:
    """Evaluate the anticommutator form and the displayed differential form
    on symmetrized monomials and report the per-input difference.  The two
    displays disagree (opposite sign of the x^2 term already on f = 1);
    this command records the discrepancy instead of asserting either way.
    """
    entries = []
    seen = set()
    for e in monomials_up_to(N, dmax):
        key = tuple(sorted(e, reverse=True))
        if key in seen:
            continue
        seen.add(key)
        f = symmetrize(XPolynomial.monomial(N, key))
        anti = hamiltonian_apply(f)
        try:
            displayed = hamiltonian_displayed_form(f)
            diff = anti - displayed
            entries.append(
                {
                    "input": list(key),
                    "anticommutator_form": repr(anti),
                    "displayed_form": repr(displayed),
                    "difference": repr(diff),
                    "equal": diff.is_zero(),
                    "opposite": (anti + displayed).is_zero(),
                }
            )
        except DivisionNotExact as exc:
            entries.append(
                {"input": list(key), "displayed_form_error": str(exc)}
            )
    equal = sum(1 for x in entries if x.get("equal"))
    opposite = sum(1 for x in entries if x.get("opposite"))
    return {
        "mode": "compare-hamiltonians",
        "particles": N,
        "max_degree": dmax,
        "inputs": len(entries),
        "equal_count": equal,
        "opposite_count": opposite,
        "entries": entries,
    }


# -- observable algebra survey -----------------------------------------------


SURVEY_MAX_WORD = 4
SURVEY_MAX_N = 3
SURVEY_MAX_DEGREE = 8


def observables_span_survey(N: int, word_len: int, dmax: int, nu=Fraction(1, 5)) -> dict:
    """Rank growth of the span of words in the ladder and exchange
    operators, represented as exact matrices between polynomial slices.

    Words of length <= word_len act from degree <= dmax - word_len into
    degree <= dmax at the fixed rational coupling ``nu`` (rank over Q[nu]
    is undefined without localization; the chosen value is recorded).
    """
    if word_len > SURVEY_MAX_WORD or N > SURVEY_MAX_N or dmax > SURVEY_MAX_DEGREE:
        raise BudgetExceeded(
            f"survey budget: word_len <= {SURVEY_MAX_WORD}, N <= {SURVEY_MAX_N}, "
            f"dmax <= {SURVEY_MAX_DEGREE}"
        )
    if dmax - word_len < 0:
        raise BudgetExceeded("dmax must be at least word_len")
    from .fields import RATIONALS
    from .linalg import RowSpace

    domain = monomials_up_to(N, dmax - word_len)
    codomain = monomials_up_to(N, dmax)
    cod_index = {e: k for k, e in enumerate(codomain)}
    alphabet: list = []
    for i in range(1, N + 1):
        for alpha in (0, 1):
            alphabet.append(CreaAnn(i, alpha))
    for i in range(1, N + 1):
        for j in range(i + 1, N + 1):
            alphabet.append(Exchange(i, j))

    def word_matrix_vector(word) -> tuple:
        cols = []
        for e in domain:
            img = apply_word(word, XPolynomial.monomial(N, e)).at_nu(nu)
            col = [Fraction(0)] * len(codomain)
            for ee, c in img.terms.items():
                col[cod_index[ee]] = c.at(0)  # constant after at_nu
            cols.append(col)
        return tuple(x for col in cols for x in col)

    space = RowSpace(RATIONALS, len(domain) * len(codomain))
    ranks = {}
    words = [()]
    space.insert(word_matrix_vector(()))
    ranks[0] = space.dim
    for length in range(1, word_len + 1):
        words = [w + (a,) for w in words for a in alphabet]
        for w in words:
            space.insert(word_matrix_vector(w))
        ranks[length] = space.dim
    return {
        "mode": "observables-span-survey",
        "particles": N,
        "word_len": word_len,
        "max_degree": dmax,
        "nu": str(Fraction(nu)),
        "alphabet_size": len(alphabet),
        "domain_dim": len(domain),
        "codomain_dim": len(codomain),
        "ranks": {str(k): v for k, v in ranks.items()},
    }


# -- the central-simplicity predicate -------------------------------------------


@dataclass(frozen=True)
class LosevInput:
    c: Fraction
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise BudgetExceeded("particle count must be >= 2")


def losev_simple(inp: LosevInput) -> dict:
    """Central simplicity of the coupling-c observable algebra for the
    symmetric group on n letters: write c = q/m in lowest terms with
    m >= 1; the algebra fails to be central simple exactly when 1 < m <= n.
    """
    c = Fraction(inp.c)
    q, m = c.numerator, c.denominator
    simple = not (1 < m <= inp.n)
    return {"simple": simple, "q": q, "m": m, "n": inp.n, "c": str(c)}
