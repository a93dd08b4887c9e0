"""Degree-truncated model of U(sl2) and its central quotients
U_lambda = U(sl2)/(C - (lambda^2 - 1)), the "complex size matrix" algebras,
with the n-dimensional representation at integer lambda = n and an
ideal-codimension probe.

Elements are kept in PBW normal form f^a h^b e^c (h-exponent at most 1 in
quotient mode, via h^2 = (lambda^2 - 1) - 2h - 4fe).  Products beyond the
degree cutoff are dropped and flagged: the flag is sticky, so any result
that passed through a truncation is marked non-certified.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ModeMismatch, ParameterMismatch
from .linalg import RowSpace
from .fields import RATIONALS

Mono = tuple  # (f-exponent, h-exponent, e-exponent)


class UElement:
    """Element of (truncated) U(sl2) or U_lambda in PBW normal form.

    mode: None for the full enveloping algebra, or an exact rational
    lambda for the quotient by C - (lambda^2 - 1) with C = h^2 + 2h + 4fe.
    """

    __slots__ = ("lam", "cutoff", "terms", "truncated")

    def __init__(self, lam, cutoff: int, terms: dict | None = None, truncated: bool = False):
        self.lam = None if lam is None else Fraction(lam)
        self.cutoff = cutoff
        self.truncated = truncated
        clean: dict = {}
        if terms:
            for (a, b, c), v in terms.items():
                v = Fraction(v)
                if not v:
                    continue
                if self.lam is not None and b > 1:
                    raise ValueError("quotient-mode terms must have h-exponent <= 1")
                if a + b + c > cutoff:
                    raise ValueError("term beyond cutoff; reduce before constructing")
                clean[(a, b, c)] = clean.get((a, b, c), Fraction(0)) + v
        self.terms = {k: v for k, v in clean.items() if v}

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(lam, cutoff: int) -> "UElement":
        return UElement(lam, cutoff, {})

    @staticmethod
    def one(lam, cutoff: int) -> "UElement":
        return UElement(lam, cutoff, {(0, 0, 0): Fraction(1)})

    @staticmethod
    def generator(name: str, lam, cutoff: int) -> "UElement":
        mono = {"f": (1, 0, 0), "h": (0, 1, 0), "e": (0, 0, 1)}[name]
        return UElement(lam, cutoff, {mono: Fraction(1)})

    @staticmethod
    def monomial(lam, cutoff: int, a: int, b: int, c: int, coeff=1) -> "UElement":
        return UElement(lam, cutoff, {(a, b, c): Fraction(coeff)})

    # -- basic ops -------------------------------------------------------------

    def _check(self, other: "UElement"):
        if self.lam != other.lam or self.cutoff != other.cutoff:
            raise ModeMismatch(
                f"mode/cutoff mismatch: ({self.lam},{self.cutoff}) vs ({other.lam},{other.cutoff})"
            )

    def __add__(self, other: "UElement") -> "UElement":
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return UElement(self.lam, self.cutoff, out, self.truncated or other.truncated)

    def __sub__(self, other: "UElement") -> "UElement":
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, Fraction(0)) - v
        return UElement(self.lam, self.cutoff, out, self.truncated or other.truncated)

    def __neg__(self) -> "UElement":
        return UElement(self.lam, self.cutoff, {k: -v for k, v in self.terms.items()}, self.truncated)

    def scale(self, c) -> "UElement":
        c = Fraction(c)
        return UElement(self.lam, self.cutoff, {k: c * v for k, v in self.terms.items()}, self.truncated)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, UElement)
            and self.lam == other.lam
            and self.cutoff == other.cutoff
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.lam, self.cutoff, frozenset(self.terms.items())))

    @property
    def degree(self) -> int | None:
        if not self.terms:
            return None
        return max(a + b + c for a, b, c in self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for (a, b, c) in sorted(self.terms):
            mono = "".join(
                s * k for s, k in (("f", a), ("h", b), ("e", c))
            )
            bits.append(f"{self.terms[(a,b,c)]}*{mono or '1'}")
        flag = " [truncated]" if self.truncated else ""
        return " + ".join(bits) + flag


def _raw_rmul_generator(terms: dict, gen: str) -> dict:
    """Right-multiply a normal-form term dict by one generator, returning a
    raw dict that may contain h-exponents >= 2 (full-mode normal form)."""
    out: dict = {}

    def add(key, val):
        if val:
            out[key] = out.get(key, Fraction(0)) + val

    for (a, b, c), v in terms.items():
        if gen == "e":
            add((a, b, c + 1), v)
        elif gen == "h":
            # e^c h = (h - 2c) e^c
            add((a, b + 1, c), v)
            add((a, b, c), v * (-2 * c))
        else:  # f
            # e^c f = f e^c + c h e^(c-1) - c(c-1) e^(c-1)
            # then h^b f = f (h-2)^b
            coeff = Fraction(1)
            # term 1: f^a h^b f e^c -> f^(a+1) (h-2)^b e^c
            for k, binom in _binomial_shift(b):
                add((a + 1, k, c), v * binom)
            if c:
                add((a, b + 1, c - 1), v * c)
                add((a, b, c - 1), v * (-c * (c - 1)))
    return {k: v for k, v in out.items() if v}


def _binomial_shift(b: int):
    """Coefficients of (h - 2)^b as pairs (power of h, coefficient)."""
    coeff = [Fraction(1)]
    for _ in range(b):
        nxt = [Fraction(0)] * (len(coeff) + 1)
        for k, c in enumerate(coeff):
            nxt[k + 1] += c
            nxt[k] += -2 * c
        coeff = nxt
    return list(enumerate(coeff))


def _reduce_h(terms: dict, lam: Fraction) -> dict:
    """Rewrite h^2 -> (lam^2 - 1) - 2h - 4fe until every h-exponent is
    <= 1.  The fe product re-enters through the generator multiplication,
    which strictly lowers the h-exponent, so the loop terminates."""
    const = lam * lam - 1
    work = dict(terms)
    while True:
        high = [(k, v) for k, v in work.items() if k[1] >= 2]
        if not high:
            return {k: v for k, v in work.items() if v}
        (a, b, c), v = high[0]
        del work[(a, b, c)]
        base = {(a, b - 2, 0): v}

        def accumulate(d, scale=1):
            for k2, v2 in d.items():
                val = work.get(k2, Fraction(0)) + v2 * scale
                if val:
                    work[k2] = val
                elif k2 in work:
                    del work[k2]

        # f^a h^(b-2) * ((lam^2-1) - 2h - 4 f e) * e^c
        term_c = {k2: v2 * const for k2, v2 in base.items()}
        term_h = _raw_rmul_generator(base, "h")
        term_fe = _raw_rmul_generator(_raw_rmul_generator(base, "f"), "e")
        merged: dict = {}
        for d, s in ((term_c, 1), (term_h, -2), (term_fe, -4)):
            for k2, v2 in d.items():
                merged[k2] = merged.get(k2, Fraction(0)) + v2 * s
        # restore the e^c tail
        final: dict = {}
        for (a2, b2, c2), v2 in merged.items():
            if v2:
                final[(a2, b2, c2 + c)] = final.get((a2, b2, c2 + c), Fraction(0)) + v2
        accumulate(final)


def u_multiply(u: UElement, v: UElement) -> UElement:
    """PBW-normal-form product; quotient mode additionally reduces h^2 and
    terms beyond the cutoff are dropped with the sticky flag set."""
    u._check(v)
    lam, cutoff = u.lam, u.cutoff
    acc: dict = {}
    truncated = u.truncated or v.truncated
    for (a, b, c), vcoef in v.terms.items():
        part = dict(u.terms)
        for _ in range(a):
            part = _raw_rmul_generator(part, "f")
        for _ in range(b):
            part = _raw_rmul_generator(part, "h")
        for _ in range(c):
            part = _raw_rmul_generator(part, "e")
        if lam is not None:
            part = _reduce_h(part, lam)
        for k, val in part.items():
            acc[k] = acc.get(k, Fraction(0)) + val * vcoef
    kept: dict = {}
    for (a, b, c), val in acc.items():
        if not val:
            continue
        if a + b + c > cutoff:
            truncated = True
            continue
        kept[(a, b, c)] = val
    return UElement(lam, cutoff, kept, truncated)


def u_bracket(u: UElement, v: UElement) -> UElement:
    return u_multiply(u, v) - u_multiply(v, u)


@dataclass(frozen=True)
class UPair:
    """Queer pair (x, y) over U_lambda: x the even copy, y the odd copy."""

    x: UElement
    y: UElement


def queer_bracket(p1: UPair, p2: UPair) -> UPair:
    """Bracket of pairs: even parts by commutator, mixed by commutator into
    the odd slot, odd parts by anticommutator into the even slot."""
    x1, y1, x2, y2 = p1.x, p1.y, p2.x, p2.y
    even = u_bracket(x1, x2) + u_multiply(y1, y2) + u_multiply(y2, y1)
    odd = u_bracket(x1, y2) + u_bracket(y1, x2)
    return UPair(even, odd)


def casimir(lam, cutoff: int) -> UElement:
    """C = h^2 + 2h + 4fe (full mode only; in quotient mode it is the
    constant lambda^2 - 1 by construction)."""
    if lam is not None:
        return UElement(lam, cutoff, {(0, 0, 0): lam * lam - 1})
    return UElement(
        None, cutoff, {(0, 2, 0): Fraction(1), (0, 1, 0): Fraction(2), (1, 0, 1): Fraction(4)}
    )


def highest_weight_value(u: UElement, mu) -> Fraction:
    """Coefficient of the highest weight vector in u . v under the formal
    rules e.v = 0 and h.v = mu v: only pure h-power terms contribute."""
    mu = Fraction(mu)
    acc = Fraction(0)
    for (a, b, c), v in u.terms.items():
        if a == 0 and c == 0:
            acc += v * mu**b
    return acc


def casimir_check(cutoff: int = 4, weights=(0, 1, 2)) -> dict:
    """Centrality of C in full mode ([C, e] = [C, h] = [C, f] = 0 exactly,
    products stay in degree 3) and the highest-weight evaluation
    C|_mu = (mu + 1)^2 - 1."""
    if cutoff < 3:
        raise ModeMismatch("casimir_check needs cutoff >= 3")
    C = casimir(None, cutoff)
    brackets = {}
    for g in ("e", "h", "f"):
        b = u_bracket(C, UElement.generator(g, None, cutoff))
        if b.truncated:
            raise ModeMismatch("casimir bracket unexpectedly truncated")
        brackets[g] = b.is_zero()
    hw = {}
    for mu in weights:
        val = highest_weight_value(C, mu)
        hw[str(mu)] = {
            "value": str(val),
            "expected": str((Fraction(mu) + 1) ** 2 - 1),
            "match": val == (Fraction(mu) + 1) ** 2 - 1,
        }
    return {
        "mode": "casimir-check",
        "normalization": "C = h^2 + 2h + 4fe",
        "central": brackets,
        "all_central": all(brackets.values()),
        "highest_weight": hw,
        "all_weights_match": all(x["match"] for x in hw.values()),
    }


# -- representation at integer lambda -------------------------------------------


@dataclass(frozen=True)
class Sl2Rep:
    """n-dimensional irreducible representation: h diagonal, f the
    subdiagonal of ones, e_k,k+1 = k (n - k)."""

    n: int
    e_mat: tuple
    f_mat: tuple
    h_mat: tuple


def _mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[r][k] * b[k][c] for k in range(n)) for c in range(n)) for r in range(n)
    )


def _mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def _mat_scale(c, a):
    return tuple(tuple(c * x for x in row) for row in a)


def _mat_eye(n):
    return tuple(
        tuple(Fraction(1) if r == c else Fraction(0) for c in range(n)) for r in range(n)
    )


def rep_map(n: int) -> Sl2Rep:
    if n < 1:
        raise ParameterMismatch("representation dimension must be >= 1")
    h = tuple(
        tuple(Fraction(n - 1 - 2 * r) if r == c else Fraction(0) for c in range(n))
        for r in range(n)
    )
    f = tuple(
        tuple(Fraction(1) if r == c + 1 else Fraction(0) for c in range(n)) for r in range(n)
    )
    e = tuple(
        tuple(Fraction((r + 1) * (n - r - 1)) if c == r + 1 else Fraction(0) for c in range(n))
        for r in range(n)
    )
    rep = Sl2Rep(n, e, f, h)
    # defining relations hold exactly as matrices
    comm = lambda a, b: _mat_add(_mat_mul(a, b), _mat_scale(-1, _mat_mul(b, a)))
    if comm(rep.h_mat, rep.e_mat) != _mat_scale(2, rep.e_mat):
        raise ParameterMismatch("[h,e] != 2e")
    if comm(rep.h_mat, rep.f_mat) != _mat_scale(-2, rep.f_mat):
        raise ParameterMismatch("[h,f] != -2f")
    if comm(rep.e_mat, rep.f_mat) != rep.h_mat:
        raise ParameterMismatch("[e,f] != h")
    return rep


def evaluate_rep(rep: Sl2Rep, u: UElement):
    """Image of a quotient-mode element with lambda = n under the
    representation; multiplicative on untruncated products."""
    if u.lam != rep.n:
        raise ParameterMismatch(f"element has lambda={u.lam}, representation n={rep.n}")
    n = rep.n
    acc = tuple(tuple(Fraction(0) for _ in range(n)) for _ in range(n))
    powers = {}

    def power(mat, k):
        key = (id(mat), k)
        if key not in powers:
            out = _mat_eye(n)
            for _ in range(k):
                out = _mat_mul(out, mat)
            powers[key] = out
        return powers[key]

    for (a, b, c), v in u.terms.items():
        m = _mat_mul(_mat_mul(power(rep.f_mat, a), power(rep.h_mat, b)), power(rep.e_mat, c))
        acc = _mat_add(acc, _mat_scale(v, m))
    return acc


def quotient_monomials(D: int):
    """Quotient-mode PBW monomials (a, eps, c) of degree <= D."""
    out = []
    for a in range(D + 1):
        for eps in (0, 1):
            for c in range(D + 1):
                if a + eps + c <= D:
                    out.append((a, eps, c))
    out.sort()
    return out


def ideal_codim_probe(n: int, D: int) -> dict:
    """Rank of the span of the images of all degree <= D quotient-mode PBW
    monomials inside Mat(n); rank n^2 certifies surjectivity onto Mat(n).
    Also records the smallest degree at which the full rank is reached."""
    if n < 1:
        raise ParameterMismatch("n must be >= 1")
    if D < 2 * (n - 1):
        # not an error: the probe reports the rank it can see
        pass
    rep = rep_map(n)
    monos = quotient_monomials(D)
    space = RowSpace(RATIONALS, n * n)
    rank_by_degree = {}
    minimal_full = None
    by_degree = sorted(monos, key=lambda m: (m[0] + m[1] + m[2], m))
    for mono in by_degree:
        a, b, c = mono
        u = UElement.monomial(Fraction(n), D, a, b, c)
        img = evaluate_rep(rep, u)
        space.insert(tuple(x for row in img for x in row))
        deg = a + b + c
        rank_by_degree[deg] = space.dim
        if minimal_full is None and space.dim == n * n:
            minimal_full = deg
    return {
        "mode": "ideal-codim-probe",
        "n": n,
        "degree": D,
        "monomials_tested": len(monos),
        "rank": space.dim,
        "full_rank": space.dim == n * n,
        "rank_by_degree": {str(k): v for k, v in sorted(rank_by_degree.items())},
        "minimal_full_degree": minimal_full,
    }


def pbw_confluence_check(cutoff: int = 6) -> dict:
    """Associativity of the normal-form product on generator triples:
    (g1 g2) g3 equals g1 (g2 g3) for all 27 triples, full mode."""
    gens = ["f", "h", "e"]
    failures = []
    for g1 in gens:
        for g2 in gens:
            for g3 in gens:
                u1 = UElement.generator(g1, None, cutoff)
                u2 = UElement.generator(g2, None, cutoff)
                u3 = UElement.generator(g3, None, cutoff)
                left = u_multiply(u_multiply(u1, u2), u3)
                right = u_multiply(u1, u_multiply(u2, u3))
                if left != right:
                    failures.append((g1, g2, g3))
    return {
        "mode": "pbw-confluence",
        "triples": 27,
        "failures": [list(f) for f in failures],
        "all_equal": not failures,
    }


def ideal_window_probe(lam, D: int) -> dict:
    """Invariant-drop probe in quotient mode: spin every PBW monomial of
    degree <= D under the window-projected multiplication operators (left
    and right products with the generators, truncated back into the degree
    <= D window) and record the closure dimensions.

    At integer lambda = n elements of the representation kernel (e.g. e^2
    at lambda = 2) close up properly inside the window; at the probed
    non-integer lambda values every vector spins to the full window.
    Recorded, not asserted as simplicity.
    """
    lam = Fraction(lam)
    monos = quotient_monomials(D)
    index = {m: k for k, m in enumerate(monos)}
    window = len(monos)
    gens = [UElement.generator(g, lam, D) for g in ("f", "h", "e")]

    def vec_of(u: UElement):
        v = [Fraction(0)] * window
        for k, val in u.terms.items():
            v[index[k]] = val
        return tuple(v)

    closures = []
    for start in monos:
        a, b, c = start
        space = RowSpace(RATIONALS, window)
        u0 = UElement.monomial(lam, D, a, b, c)
        space.insert(vec_of(u0))
        work = [u0]
        while work:
            nxt = []
            for w in work:
                for g in gens:
                    for prod in (u_multiply(g, w), u_multiply(w, g)):
                        # truncation acts as the window projection here
                        if prod.is_zero():
                            continue
                        if space.insert(vec_of(prod)):
                            nxt.append(prod)
            work = nxt
        closures.append({"monomial": list(start), "closure_dim": space.dim})
    dims = [c["closure_dim"] for c in closures]
    return {
        "mode": "ideal-window-probe",
        "lambda": str(lam),
        "degree": D,
        "window_dim": window,
        "min_closure": min(dims),
        "max_closure": max(dims),
        "proper_drops": sum(1 for d in dims if d < window),
        "closures": closures,
    }
