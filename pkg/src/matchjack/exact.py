"""
Exact univariate polynomials and rational functions over the rationals.

Two formal variables are in use, ``alpha`` (the Jack parameter) and ``b``,
related by ``alpha = b + 1``.  Coefficients are Python ints or
``fractions.Fraction``; nothing in this package touches floating point.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from itertools import zip_longest
from numbers import Rational


class Var(str, Enum):
    ALPHA = "alpha"
    B = "b"


class CertificationError(ArithmeticError):
    """A rational function in alpha failed to be an integer polynomial in b."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NonPolynomial(CertificationError):
    pass


class NonIntegral(CertificationError):
    pass


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _strip(coeffs: list) -> tuple:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class UniPoly:
    """Dense polynomial, lowest degree first.

    >>> a = UniPoly([0, 1])
    >>> str(a * a + 2 * a + 1)
    'alpha^2+2alpha+1'
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var: Var = Var.ALPHA):
        cs = []
        for c in coeffs:
            if not isinstance(c, Rational):
                c = Fraction(c)
            cs.append(_norm(c))
        self.coeffs = _strip(cs)
        self.var = Var(var)

    @classmethod
    def _raw(cls, coeffs: list, var: Var) -> "UniPoly":
        p = object.__new__(cls)
        p.coeffs = _strip(coeffs)
        p.var = var
        return p

    @classmethod
    def const(cls, c, var: Var = Var.ALPHA) -> "UniPoly":
        return cls([c], var)

    @classmethod
    def x(cls, var: Var = Var.ALPHA) -> "UniPoly":
        return cls([0, 1], var)

    # -- basic queries ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_const(self) -> bool:
        return len(self.coeffs) <= 1

    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def is_integral(self) -> bool:
        return all(isinstance(c, int) or c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise ValueError(f"non-integer coefficients in {self}")
        return [int(c) for c in self.coeffs]

    def nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return _norm(acc) if isinstance(acc, Fraction) else acc

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            if other.var != self.var:
                raise ValueError(f"variable mismatch: {self.var.value} vs {other.var.value}")
            return other
        if isinstance(other, Rational):
            return UniPoly._raw([other], self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return UniPoly._raw(
            [_norm(a + b) for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)],
            self.var,
        )

    __radd__ = __add__

    def __neg__(self):
        return UniPoly._raw([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return UniPoly._raw(
            [_norm(a - b) for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)],
            self.var,
        )

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            if other == 0:
                return UniPoly._raw([], self.var)
            return UniPoly._raw([_norm(c * other) for c in self.coeffs], self.var)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly._raw([], self.var)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return UniPoly._raw([_norm(c) for c in out], self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = UniPoly._raw([1], self.var)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __truediv__(self, other):
        if isinstance(other, Rational):
            if other == 0:
                raise ZeroDivisionError("polynomial division by zero scalar")
            return UniPoly._raw([_norm(Fraction(c) / other) for c in self.coeffs], self.var)
        return NotImplemented

    def __divmod__(self, other: "UniPoly"):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree
        lead = other.coeffs[-1]
        if len(rem) <= d:
            return UniPoly._raw([], self.var), UniPoly._raw(rem, self.var)
        quot = [0] * (len(rem) - d)
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q = Fraction(c, lead) if isinstance(c, int) and isinstance(lead, int) else c / lead
            q = _norm(q)
            quot[k - d] = q
            for j, y in enumerate(other.coeffs):
                rem[k - d + j] -= q * y
            rem[k] = 0
        return (
            UniPoly._raw([_norm(c) for c in quot], self.var),
            UniPoly._raw([_norm(c) for c in rem[:d]], self.var),
        )

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return self / lead

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.var == other.var and self.coeffs == other.coeffs
        if isinstance(other, Rational):
            return self.coeffs == ((other,) if other != 0 else ())
        return NotImplemented

    def __hash__(self):
        return hash((self.var, self.coeffs))

    # -- substitution -----------------------------------------------------

    def shift(self, c) -> "UniPoly":
        """Return p(x + c) by Horner's rule."""
        out: list = []
        for a in reversed(self.coeffs):
            # out <- out * (x + c) + a
            nxt = [0] * (len(out) + 1)
            for i, v in enumerate(out):
                nxt[i + 1] += v
                nxt[i] += v * c
            nxt[0] += a
            out = nxt
        return UniPoly._raw([_norm(v) for v in out], self.var)

    def with_var(self, var: Var) -> "UniPoly":
        return UniPoly._raw(list(self.coeffs), Var(var))

    # -- text -------------------------------------------------------------

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]}, {self.var.value})"

    def __str__(self):
        return format_poly(self.coeffs, self.var.value)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data, var: Var = Var.ALPHA) -> "UniPoly":
        return cls([Fraction(str(c)) for c in data], var)


def format_poly(coeffs, name: str) -> str:
    """Human form, highest degree first: ``b^2+3b+1``."""
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = name if k == 1 else f"{name}^{k}"
            if mag == 1:
                body = mono
            elif isinstance(mag, Fraction) and mag.denominator != 1:
                body = f"({mag}){mono}"
            else:
                body = f"{mag}{mono}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += sign + body
    return out


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd by Euclid's algorithm (gcd(0, 0) = 0)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def shift_alpha_to_b(p: UniPoly) -> UniPoly:
    """Substitute alpha = b + 1."""
    if p.var != Var.ALPHA:
        raise ValueError("shift_alpha_to_b expects a polynomial in alpha")
    return p.shift(1).with_var(Var.B)


def shift_b_to_alpha(p: UniPoly) -> UniPoly:
    """Substitute b = alpha - 1."""
    if p.var != Var.B:
        raise ValueError("shift_b_to_alpha expects a polynomial in b")
    return p.shift(-1).with_var(Var.ALPHA)


class RatFunc:
    """Reduced quotient num/den with a monic denominator.

    Two RatFuncs are equal iff their (num, den) pairs are identical.

    >>> a = UniPoly.x()
    >>> str(RatFunc(a * a - 1, a + 1))
    'alpha-1'
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, var: Var | None = None):
        if not isinstance(num, UniPoly):
            num = UniPoly.const(num, var or (den.var if isinstance(den, UniPoly) else Var.ALPHA))
        if den is None:
            den = UniPoly._raw([1], num.var)
        elif not isinstance(den, UniPoly):
            den = UniPoly.const(den, num.var)
        if den.var != num.var:
            raise ValueError("numerator and denominator in different variables")
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        self.num, self.den = _reduce(num, den)

    @classmethod
    def _raw(cls, num: UniPoly, den: UniPoly) -> "RatFunc":
        r = object.__new__(cls)
        r.num, r.den = num, den
        return r

    @property
    def var(self) -> Var:
        return self.num.var

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den.degree == 0

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, UniPoly):
            return RatFunc._raw(other, UniPoly._raw([1], other.var))
        if isinstance(other, Rational):
            return RatFunc._raw(UniPoly._raw([other], self.var), UniPoly._raw([1], self.var))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den == other.den:
            if self.den.degree == 0:
                return RatFunc._raw(self.num + other.num, self.den)
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            if other == 0:
                return RatFunc._raw(UniPoly._raw([], self.var), UniPoly._raw([1], self.var))
            return RatFunc._raw(self.num * other, self.den)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den.degree == 0 and other.den.degree == 0:
            return RatFunc._raw(self.num * other.num, self.den)
        if self.num.is_zero() or other.num.is_zero():
            return RatFunc._raw(UniPoly._raw([], self.var), UniPoly._raw([1], self.var))
        # cross-cancel before multiplying keeps degrees small
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        num = (self.num // g1) * (other.num // g2)
        den = (self.den // g2) * (other.den // g1)
        lead = den.lc()
        return RatFunc._raw(num / lead, den / lead)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        lead = self.num.lc()
        return RatFunc._raw(self.den / lead, self.num / lead)

    def __truediv__(self, other):
        if isinstance(other, Rational):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return RatFunc._raw(self.num / other, self.den)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc._raw(self.num**k, self.den**k)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return _norm(Fraction(self.num(x)) / d)

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.is_poly():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def to_json(self) -> list[list[str]]:
        return [self.num.to_json(), self.den.to_json()]

    @classmethod
    def from_json(cls, data, var: Var = Var.ALPHA) -> "RatFunc":
        return cls(UniPoly.from_json(data[0], var), UniPoly.from_json(data[1], var))


def _reduce(num: UniPoly, den: UniPoly) -> tuple[UniPoly, UniPoly]:
    if num.is_zero():
        return num, UniPoly._raw([1], num.var)
    if den.degree > 0:
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num // g
            den = den // g
    lead = den.lc()
    if lead != 1:
        num, den = num / lead, den / lead
    return num, den


def certify_quotient(num: UniPoly, den: UniPoly) -> UniPoly:
    """Certify num/den (in alpha, not necessarily reduced) as an element of Z[b]."""
    nb = shift_alpha_to_b(num)
    db = shift_alpha_to_b(den)
    q, rem = divmod(nb, db)
    if not rem.is_zero():
        raise NonPolynomial(
            f"({num})/({den}) is not a polynomial: remainder {rem} in b", witness=rem
        )
    for k, c in enumerate(q.coeffs):
        if not (isinstance(c, int) or c.denominator == 1):
            raise NonIntegral(
                f"({num})/({den}) has non-integer coefficient {c} at b^{k}", witness=(k, c)
            )
    return q


def certify_integer_poly(r: RatFunc) -> UniPoly:
    """Return r(alpha = b+1) as a polynomial in b with integer coefficients.

    Raises NonPolynomial or NonIntegral (both CertificationError).
    """
    if r.var != Var.ALPHA:
        raise ValueError("certify_integer_poly expects a rational function in alpha")
    return certify_quotient(r.num, r.den)


def poly_b(coeffs) -> UniPoly:
    return UniPoly(coeffs, Var.B)


ZERO_B = UniPoly._raw([], Var.B)
ONE_B = UniPoly._raw([1], Var.B)
