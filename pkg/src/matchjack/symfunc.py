"""
Homogeneous symmetric functions over Q(alpha), in the power-sum basis.

Jack polynomials are produced by Gram-Schmidt on monomial functions, taken in
ascending ``total_leq`` order, for the alpha-deformed Hall product
<p_l, p_m> = delta * z_l * alpha^len(l).  They are returned in the
J-normalisation (coefficient of m_{1^n} equal to n!) and memoised per degree.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import cache
from .exact import RatFunc, UniPoly, Var
from .matrices import LabeledMatrix, rational_inverse
from .partitions import (
    Partition,
    all_partitions,
    conjugate,
    dual_sorted,
    ones,
    union,
    z,
)


class Basis(str, Enum):
    POWERSUM = "p"
    MONOMIAL = "m"
    ELEMENTARY = "e"


def _rf(c) -> RatFunc:
    return c if isinstance(c, RatFunc) else RatFunc(c)


@dataclass
class PSExpr:
    """Homogeneous symmetric function: partition -> RatFunc in a declared basis."""

    degree: int
    basis: Basis = Basis.POWERSUM
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for lam, c in self.coeffs.items():
            lam = Partition(lam)
            if sum(lam) != self.degree:
                raise ValueError(f"{lam} does not have degree {self.degree}")
            c = _rf(c)
            if not c.is_zero():
                clean[lam] = c
        self.coeffs = clean

    def __getitem__(self, lam) -> RatFunc:
        return self.coeffs.get(Partition(lam), RatFunc(0))

    def __eq__(self, other):
        if not isinstance(other, PSExpr):
            return NotImplemented
        return (self.degree, self.basis, self.coeffs) == (other.degree, other.basis, other.coeffs)

    def __add__(self, other: "PSExpr") -> "PSExpr":
        self._check(other)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out[lam] + c if lam in out else c
        return PSExpr(self.degree, self.basis, out)

    def __sub__(self, other: "PSExpr") -> "PSExpr":
        return self + other.scale(-1)

    def scale(self, c) -> "PSExpr":
        c = _rf(c)
        return PSExpr(self.degree, self.basis, {lam: v * c for lam, v in self.coeffs.items()})

    def __mul__(self, other: "PSExpr") -> "PSExpr":
        """Product; only meaningful in the (multiplicative) power-sum basis."""
        if self.basis != Basis.POWERSUM or other.basis != Basis.POWERSUM:
            raise ValueError("products are computed in the power-sum basis")
        out: dict = {}
        for a, x in self.coeffs.items():
            for b, y in other.coeffs.items():
                lam = union(a, b)
                out[lam] = out[lam] + x * y if lam in out else x * y
        return PSExpr(self.degree + other.degree, Basis.POWERSUM, out)

    def _check(self, other):
        if self.basis != other.basis or self.degree != other.degree:
            raise ValueError("incompatible symmetric functions")

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = [f"({c})*{self.basis.value}[{','.join(map(str, lam))}]"
                 for lam, c in sorted(self.coeffs.items(), key=lambda kv: (-len(kv[0]), kv[0]))]
        return " + ".join(terms)


def powersum(lam) -> PSExpr:
    lam = Partition(lam)
    return PSExpr(sum(lam), Basis.POWERSUM, {lam: 1})


def inner_alpha(f: PSExpr, g: PSExpr) -> RatFunc:
    """<f, g>_alpha for power-sum expressions."""
    if f.basis != Basis.POWERSUM or g.basis != Basis.POWERSUM:
        raise ValueError("inner_alpha works in the power-sum basis")
    if f.degree != g.degree:
        raise ValueError("inner_alpha: degree mismatch")
    acc = RatFunc(0)
    alpha = UniPoly.x()
    for lam, c in f.coeffs.items():
        d = g.coeffs.get(lam)
        if d is not None:
            acc = acc + c * d * (alpha ** len(lam) * z(lam))
    return acc


# -- monomial <-> power sum ---------------------------------------------------


def _times_power(expansion: dict, k: int) -> dict:
    """Multiply a monomial expansion by p_k."""
    out: dict = {}
    for mu, c in expansion.items():
        for v in set(mu) | {0}:
            parts = list(mu)
            if v:
                parts.remove(v)
            nu = Partition(parts + [v + k])
            out[nu] = out.get(nu, 0) + c * nu.count(v + k)
    return out


@lru_cache(maxsize=None)
def powersum_in_monomial(n: int) -> dict:
    """{lam: {mu: [m_mu] p_lam}}, built by multiplying out p_lam part by part."""
    table = {}
    for lam in all_partitions(n):
        exp = {Partition(): 1}
        for part in lam:
            exp = _times_power(exp, part)
        table[lam] = exp
    return table


@lru_cache(maxsize=None)
def _monomial_in_powersum(n: int) -> dict:
    parts = all_partitions(n)
    p_in_m = powersum_in_monomial(n)
    a = [[p_in_m[lam].get(mu, 0) for mu in parts] for lam in parts]
    inv = rational_inverse(a)  # row mu: m_mu in terms of p_lam
    return {mu: {lam: inv[i][j] for j, lam in enumerate(parts) if inv[i][j]} for i, mu in enumerate(parts)}


def monomial_to_powersum(mu) -> PSExpr:
    mu = Partition(mu)
    n = sum(mu)
    return PSExpr(n, Basis.POWERSUM, dict(_monomial_in_powersum(n)[mu]))


def powersum_to_monomial(lam) -> PSExpr:
    lam = Partition(lam)
    n = sum(lam)
    return PSExpr(n, Basis.MONOMIAL, dict(powersum_in_monomial(n)[lam]))


# -- elementary ---------------------------------------------------------------


@lru_cache(maxsize=None)
def _elementary_single(k: int) -> dict:
    """e_k in power sums by Newton's identity k e_k = sum (-1)^(i-1) e_{k-i} p_i."""
    if k == 0:
        return {Partition(): Fraction(1)}
    acc: dict = {}
    for i in range(1, k + 1):
        sign = 1 if i % 2 == 1 else -1
        for lam, c in _elementary_single(k - i).items():
            nu = union(lam, (i,))
            acc[nu] = acc.get(nu, 0) + sign * c
    return {lam: Fraction(c, k) for lam, c in acc.items() if c}


@lru_cache(maxsize=None)
def _elementary_expansion(lam: Partition) -> dict:
    out = {Partition(): Fraction(1)}
    for part in lam:
        nxt: dict = {}
        for a, x in out.items():
            for b, y in _elementary_single(part).items():
                nu = union(a, b)
                nxt[nu] = nxt.get(nu, 0) + x * y
        out = {k: v for k, v in nxt.items() if v}
    return out


def elementary_to_powersum(lam) -> PSExpr:
    lam = Partition(lam)
    return PSExpr(sum(lam), Basis.POWERSUM, dict(_elementary_expansion(lam)))


def to_powersum(f: PSExpr) -> PSExpr:
    if f.basis == Basis.POWERSUM:
        return f
    conv = monomial_to_powersum if f.basis == Basis.MONOMIAL else elementary_to_powersum
    out = PSExpr(f.degree, Basis.POWERSUM, {})
    for lam, c in f.coeffs.items():
        out = out + conv(lam).scale(c)
    return out


@lru_cache(maxsize=None)
def monomial_in_elementary(r: int) -> LabeledMatrix:
    """Integer matrix u with m_mu = sum_lam u[lam, mu] e_lam.

    Rows lam in ascending dual order, columns mu in ascending total order.
    """
    parts = all_partitions(r)
    e_rows = [[_elementary_expansion(lam).get(k, 0) for k in parts] for lam in parts]
    m_rows = [[_monomial_in_powersum(r)[mu].get(k, 0) for k in parts] for mu in parts]
    e_inv = rational_inverse(e_rows)
    # m = u^T e  =>  u^T = m_rows . e_inv
    ut = [[sum(m_rows[i][k] * e_inv[k][j] for k in range(len(parts))) for j in range(len(parts))]
          for i in range(len(parts))]
    u = {}
    for i, mu in enumerate(parts):
        for j, lam in enumerate(parts):
            v = ut[i][j]
            if v.denominator != 1:
                raise ArithmeticError(f"non-integer m->e coefficient at {lam},{mu}")
            u[lam, mu] = int(v)
    return LabeledMatrix.build(dual_sorted(r), parts, lambda lam, mu: u[lam, mu], "e", "m")


# -- Jack polynomials ---------------------------------------------------------


def jack_norm(theta) -> RatFunc:
    """Squared norm j_theta = prod over cells (a*alpha + l + 1)(a*alpha + l + alpha)."""
    theta = Partition(theta)
    conj = conjugate(theta)
    out = UniPoly.const(1)
    for i, row in enumerate(theta):
        for j in range(row):
            arm = row - j - 1
            leg = conj[j] - i - 1
            out = out * UniPoly([leg + 1, arm]) * UniPoly([leg, arm + 1])
    return RatFunc(out)


def _gram(n: int) -> dict:
    """<m_mu, m_eta>_alpha as polynomials in alpha."""
    parts = all_partitions(n)
    mp = _monomial_in_powersum(n)
    weights = {lam: (lam.length, z(lam)) for lam in parts}
    g = {}
    for i, mu in enumerate(parts):
        for eta in parts[i:]:
            coeffs = [0] * (n + 1)
            a, b = mp[mu], mp[eta]
            for lam, x in a.items():
                y = b.get(lam)
                if y:
                    ell, zz = weights[lam]
                    coeffs[ell] += x * y * zz
            g[mu, eta] = g[eta, mu] = RatFunc(UniPoly(coeffs))
    return g


def _gram_schmidt(n: int) -> dict:
    parts = all_partitions(n)
    gram = _gram(n)
    zero = RatFunc(0)
    done: list[tuple[Partition, dict, RatFunc]] = []  # (eta, P_eta in m-coords, <P_eta,P_eta>)
    out = {}
    for theta in parts:
        vec = {theta: RatFunc(1)}
        for eta, p_eta, norm in done:
            # <m_theta, P_eta> = sum_mu P_eta[mu] <m_theta, m_mu>
            ip = zero
            for mu, c in p_eta.items():
                ip = ip + c * gram[theta, mu]
            if ip.is_zero():
                continue
            coef = ip / norm
            for mu, c in p_eta.items():
                vec[mu] = vec.get(mu, zero) - coef * c
        vec = {mu: c for mu, c in vec.items() if not c.is_zero()}
        norm = zero
        for mu, c in vec.items():
            for nu, d in vec.items():
                norm = norm + c * d * gram[mu, nu]
        done.append((theta, vec, norm))
        scale = RatFunc(factorial(n)) / vec[ones(n)]
        out[theta] = {mu: c * scale for mu, c in vec.items()}
    return out


class JackStore:
    """Per-degree memo of Jack polynomials in monomial and power-sum coordinates.

    Readers never lock; a writer that loses a race simply discards its own
    (identical) result.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._mono: dict[int, dict] = {}
        self._power: dict[int, dict] = {}

    def clear(self):
        with self._lock:
            self._mono.clear()
            self._power.clear()

    def power(self, n: int) -> dict:
        got = self._power.get(n)
        if got is not None:
            return got
        got = cache.load_jacks(n)
        if got is None:
            mono = self.monomial(n)
            mp = _monomial_in_powersum(n)
            got = {}
            for theta, vec in mono.items():
                coeffs: dict = {}
                for mu, c in vec.items():
                    for lam, x in mp[mu].items():
                        coeffs[lam] = coeffs[lam] + c * x if lam in coeffs else c * x
                got[theta] = {lam: c for lam, c in coeffs.items() if not c.is_zero()}
            cache.save_jacks(n, got)
        with self._lock:
            return self._power.setdefault(n, got)

    def monomial(self, n: int) -> dict:
        got = self._mono.get(n)
        if got is None:
            got = _gram_schmidt(n)
            with self._lock:
                got = self._mono.setdefault(n, got)
        return got


JACKS = JackStore()


def jack(theta) -> PSExpr:
    """J-normalised Jack polynomial in the power-sum basis."""
    theta = Partition(theta)
    n = sum(theta)
    return PSExpr(n, Basis.POWERSUM, dict(JACKS.power(n)[theta]))


def jack_monomial(theta) -> PSExpr:
    theta = Partition(theta)
    n = sum(theta)
    return PSExpr(n, Basis.MONOMIAL, dict(JACKS.monomial(n)[theta]))


def jack_table(n: int) -> dict:
    """{theta: {lam: [p_lam] J_theta}} for all theta of size n (shared, do not mutate)."""
    return JACKS.power(n)
