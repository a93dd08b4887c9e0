"""Exact scalars: rationals, odd prime fields, and the polynomial ring Q[nu].

Rationals are ``fractions.Fraction`` (always lowest terms, positive
denominator).  Prime-field elements and nu-polynomials are small immutable
classes defined here.  All three share enough operator surface that the
generic linear algebra in :mod:`qalg.linalg` works uniformly; division is
rejected for nu-polynomials because Q[nu] is a ring, not a field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import FieldMismatch, QalgFormatError, UnsupportedField


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient domain tag: kind is "Q", "Fp" or "Qnu"."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind not in ("Q", "Fp", "Qnu"):
            raise ValueError(f"unknown field kind {self.kind!r}")
        if self.kind == "Fp":
            # characteristic 2 is rejected by design; p must be an odd prime
            if self.p is None or self.p < 3 or not is_prime(self.p):
                raise ValueError(f"PrimeField requires an odd prime >= 3, got {self.p}")
        elif self.p is not None:
            raise ValueError("p is only meaningful for prime fields")

    @property
    def is_field(self) -> bool:
        return self.kind != "Qnu"

    def __str__(self):
        return {"Q": "Q", "Fp": f"F{self.p}", "Qnu": "Q[nu]"}[self.kind]


RATIONALS = FieldSpec("Q")
NU_POLYNOMIALS = FieldSpec("Qnu")


def prime_field(p: int) -> FieldSpec:
    return FieldSpec("Fp", p)


class FpScalar:
    """Residue mod an odd prime p."""

    __slots__ = ("residue", "p")

    def __init__(self, residue: int, p: int):
        object.__setattr__(self, "residue", residue % p)
        object.__setattr__(self, "p", p)

    def __setattr__(self, *a):
        raise AttributeError("FpScalar is immutable")

    def _coerce(self, other):
        if isinstance(other, FpScalar):
            if other.p != self.p:
                raise FieldMismatch(f"F{self.p} vs F{other.p}")
            return other
        if isinstance(other, int):
            return FpScalar(other, self.p)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpScalar(self.residue + o.residue, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpScalar(self.residue - o.residue, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpScalar(o.residue - self.residue, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpScalar(self.residue * o.residue, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.residue == 0:
            raise ZeroDivisionError(f"division by zero in F{self.p}")
        return FpScalar(self.residue * pow(o.residue, self.p - 2, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return FpScalar(-self.residue, self.p)

    def __bool__(self):
        return self.residue != 0

    def __eq__(self, other):
        if isinstance(other, FpScalar):
            return self.p == other.p and self.residue == other.residue
        if isinstance(other, int):
            return self.residue == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.residue, self.p))

    def __repr__(self):
        return f"{self.residue} mod {self.p}"


@dataclass(frozen=True)
class NuPoly:
    """Polynomial in the formal coupling nu with rational coefficients.

    Coefficients are stored low-degree first with trailing zeros stripped;
    the zero polynomial has an empty tuple and degree ``None``.
    """

    coeffs: tuple[Fraction, ...]

    @staticmethod
    def of(values) -> "NuPoly":
        cs = [Fraction(v) for v in values]
        while cs and cs[-1] == 0:
            cs.pop()
        return NuPoly(tuple(cs))

    @staticmethod
    def constant(value) -> "NuPoly":
        return NuPoly.of([Fraction(value)])

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def _coerce(self, other):
        if isinstance(other, NuPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return NuPoly.of([other])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        a = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
        b = list(o.coeffs) + [Fraction(0)] * (n - len(o.coeffs))
        return NuPoly.of(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return NuPoly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return NuPoly.of(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        raise UnsupportedField("Q[nu] is a ring; division is not defined")

    def __neg__(self):
        return NuPoly(tuple(-c for c in self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def at(self, value) -> Fraction:
        """Evaluate at a rational value of nu."""
        v = Fraction(value)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def __repr__(self):
        return scalar_to_string(self)


NU = NuPoly.of([0, 1])


def field_zero(field: FieldSpec):
    if field.kind == "Q":
        return Fraction(0)
    if field.kind == "Fp":
        return FpScalar(0, field.p)
    return NuPoly(())


def field_one(field: FieldSpec):
    return field_from_int(field, 1)


def field_from_int(field: FieldSpec, k: int):
    if field.kind == "Q":
        return Fraction(k)
    if field.kind == "Fp":
        return FpScalar(k, field.p)
    return NuPoly.of([k])


def field_from_fraction(field: FieldSpec, q):
    q = Fraction(q)
    if field.kind == "Q":
        return q
    if field.kind == "Fp":
        if q.denominator % field.p == 0:
            raise ZeroDivisionError(f"denominator {q.denominator} not invertible mod {field.p}")
        return FpScalar(q.numerator * pow(q.denominator, field.p - 2, field.p), field.p)
    return NuPoly.of([q])


def scalar_field(s) -> FieldSpec:
    if isinstance(s, (Fraction, int)):
        return RATIONALS
    if isinstance(s, FpScalar):
        return prime_field(s.p)
    if isinstance(s, NuPoly):
        return NU_POLYNOMIALS
    raise TypeError(f"not a scalar: {s!r}")


def scalar_arith(a, b, op: str):
    """Arithmetic on two scalars of the same field; op in {add,sub,mul,div}."""
    fa, fb = scalar_field(a), scalar_field(b)
    if fa != fb and not (fa.kind == fb.kind == "Q"):
        raise FieldMismatch(f"{fa} vs {fb}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if fa.kind == "Qnu":
            raise UnsupportedField("Q[nu] is a ring; division is not defined")
        if not b:
            raise ZeroDivisionError("division by zero")
        return a / b
    raise ValueError(f"unknown op {op!r}")


def scalar_to_string(s) -> str:
    """Canonical string form: "a/b", "r mod p", or "c0 + c1*nu + ..."."""
    if isinstance(s, int):
        s = Fraction(s)
    if isinstance(s, Fraction):
        return str(s)
    if isinstance(s, FpScalar):
        return f"{s.residue} mod {s.p}"
    if isinstance(s, NuPoly):
        if not s.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(s.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"{c}*nu")
            else:
                parts.append(f"{c}*nu^{k}")
        return " + ".join(parts)
    raise TypeError(f"not a scalar: {s!r}")


def scalar_from_string(field: FieldSpec, text: str):
    text = text.strip()
    try:
        if field.kind == "Q":
            return Fraction(text)
        if field.kind == "Fp":
            if "mod" in text:
                r, p = text.split("mod")
                p = int(p)
                if p != field.p:
                    raise FieldMismatch(f"scalar mod {p} in F{field.p} context")
                return FpScalar(int(r), field.p)
            return FpScalar(int(text), field.p)
        # Qnu
        if text == "0":
            return NuPoly(())
        coeffs: dict[int, Fraction] = {}
        for part in text.split(" + "):
            part = part.strip()
            if "*nu^" in part:
                c, k = part.split("*nu^")
                coeffs[int(k)] = coeffs.get(int(k), Fraction(0)) + Fraction(c)
            elif part.endswith("*nu"):
                coeffs[1] = coeffs.get(1, Fraction(0)) + Fraction(part[:-3])
            elif part == "nu":
                coeffs[1] = coeffs.get(1, Fraction(0)) + 1
            else:
                coeffs[0] = coeffs.get(0, Fraction(0)) + Fraction(part)
        top = max(coeffs) if coeffs else -1
        return NuPoly.of([coeffs.get(k, Fraction(0)) for k in range(top + 1)])
    except (ValueError, ZeroDivisionError) as e:
        raise QalgFormatError(f"bad scalar string {text!r} for field {field}: {e}") from e
