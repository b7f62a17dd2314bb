"""
Connection coefficients c^lam_{mu,nu}(b), their marginal sums, the k-parameter
generalisation, and the cumulants d and h.

For partitions of n,

    c^lam_{mu,nu} = z_lam * alpha^len(lam) * sum_theta [p_lam]J_theta [p_mu]J_theta [p_nu]J_theta / j_theta,

evaluated at alpha = b + 1.  Every value handed out has been certified as an
integer polynomial in b; a failed certification raises CertificationError
carrying the offending indices.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import factorial

from .exact import (
    ONE_B,
    ZERO_B,
    CertificationError,
    NonIntegral,
    NonPolynomial,
    RatFunc,
    UniPoly,
    Var,
    poly_gcd,
    shift_alpha_to_b,
)
from .partitions import (
    Partition,
    all_partitions,
    ones,
    oplus,
    partitions_of_length,
    rank,
    set_partitions,
    multiset_splits,
    union,
    z,
)
from .report import Report
from .symfunc import jack_norm, jack_table

ONE_PLUS_B = UniPoly([1, 1], Var.B)


class PolynomialityError(CertificationError):
    """A division expected to be exact left a remainder."""


def _check_sizes(*parts) -> int:
    sizes = {sum(p) for p in parts}
    if len(sizes) != 1:
        raise ValueError(f"partitions of different sizes: {[list(p) for p in parts]}")
    n = sizes.pop()
    if n < 1:
        raise ValueError("connection coefficients need n >= 1")
    return n


def _lcm(a: UniPoly, b: UniPoly) -> UniPoly:
    return ((a * b) // poly_gcd(a, b)).monic()


class _DegreeData:
    """Jack data of one degree, shifted to b and put over a common denominator.

    c^lam_{mu...} = pref[lam] * sum_theta weight[theta] * prod A[theta][.] / den
    """

    def __init__(self, n: int):
        self.n = n
        self.parts = all_partitions(n)
        jt = jack_table(n)
        norms = {theta: jack_norm(theta).num for theta in self.parts}
        den = UniPoly.const(1)
        for theta in self.parts:
            den = _lcm(den, norms[theta])
        self.den = shift_alpha_to_b(den)
        self.weight = {t: shift_alpha_to_b(den // norms[t]) for t in self.parts}
        self.coef = {}
        for theta in self.parts:
            row = {}
            for lam in self.parts:
                c = jt[theta].get(lam)
                if c is None:
                    continue
                if not c.is_poly():
                    raise ArithmeticError(f"[p_{lam}]J_{theta} is not a polynomial in alpha")
                row[lam] = shift_alpha_to_b(c.num)
            self.coef[theta] = row
        self.pref = {lam: ONE_PLUS_B ** len(lam) * z(lam) for lam in self.parts}

    def raw_sum(self, indices) -> UniPoly:
        """sum_theta weight * prod_i [p_{indices[i]}]J_theta, a polynomial in b."""
        acc = ZERO_B
        for theta in self.parts:
            row = self.coef[theta]
            term = self.weight[theta]
            for idx in indices:
                c = row.get(idx)
                if c is None:
                    term = None
                    break
                term = term * c
            if term is not None:
                acc = acc + term
        return acc

    def certify(self, lam, indices) -> UniPoly:
        num = self.pref[lam] * self.raw_sum((lam, *indices))
        q, rem = divmod(num, self.den)
        where = f"c^{list(lam)}_{[list(i) for i in indices]}"
        if not rem.is_zero():
            raise NonPolynomial(f"{where} is not a polynomial in b (remainder {rem})", witness=(lam, indices, rem))
        if not q.is_integral():
            raise NonIntegral(f"{where} = {q} has non-integer coefficients", witness=(lam, indices, q))
        return q


@lru_cache(maxsize=None)
def _data(n: int) -> _DegreeData:
    return _DegreeData(n)


def c_ratfunc(lam, mu, nu) -> RatFunc:
    """c^lam_{mu,nu} as a reduced rational function of alpha (no certification)."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    n = _check_sizes(lam, mu, nu)
    jt = jack_table(n)
    alpha = UniPoly.x()
    acc = RatFunc(0)
    for theta in all_partitions(n):
        row = jt[theta]
        if lam in row and mu in row and nu in row:
            acc = acc + row[lam] * row[mu] * row[nu] / jack_norm(theta)
    return acc * (alpha ** len(lam) * z(lam))


def c_coeff(lam, mu, nu) -> UniPoly:
    """c^lam_{mu,nu} as a certified integer polynomial in b."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    n = _check_sizes(lam, mu, nu)
    return _data(n).certify(lam, (mu, nu))


@lru_cache(maxsize=None)
def c_table(n: int) -> dict:
    """All c^lam_{mu,nu} of size n, keyed (lam, mu, nu); uses mu <-> nu symmetry."""
    data = _data(n)
    parts = data.parts
    out = {}
    for lam in parts:
        for i, mu in enumerate(parts):
            for nu in parts[i:]:
                v = data.certify(lam, (mu, nu))
                out[lam, mu, nu] = out[lam, nu, mu] = v
    return {k: out[k] for k in product(parts, repeat=3)}


def marginal(lam, mu, l: int) -> UniPoly:
    """mc^lam_{mu,l}: sum of c^lam_{mu,nu} over nu of length l."""
    lam, mu = Partition(lam), Partition(mu)
    n = _check_sizes(lam, mu)
    if not 1 <= l <= n:
        raise ValueError(f"length {l} out of range for n={n}")
    acc = ZERO_B
    for nu in partitions_of_length(n, l):
        acc = acc + c_coeff(lam, mu, nu)
    return acc


@lru_cache(maxsize=None)
def marginal_table(n: int) -> dict:
    """{(lam, mu, l): mc^lam_{mu,l}} for 1 <= l <= n, from the full c-table."""
    table = c_table(n)
    parts = all_partitions(n)
    out = {}
    for lam in parts:
        for mu in parts:
            for l in range(1, n + 1):
                acc = ZERO_B
                for nu in partitions_of_length(n, l):
                    acc = acc + table[lam, mu, nu]
                out[lam, mu, l] = acc
    return out


def top_coeff_via_marginal(rho, pi, n: int | None = None) -> int:
    """tc^rho_pi = mc^kappa_{nu,l}, kappa = rho (+) 1^(n-r), nu = pi u 1^(n-r), n-l+rk(pi) = r.

    ``n`` defaults to the smallest admissible size r + max(len(rho), len(pi)).
    """
    rho, pi = Partition(rho), Partition(pi)
    r = _check_sizes(rho, pi)
    if n is None:
        n = r + max(len(rho), len(pi))
    if n < r + max(len(rho), len(pi)):
        raise ValueError(f"n={n} too small for rho={list(rho)}, pi={list(pi)}")
    kappa = oplus(rho, ones(n - r))
    nu = union(pi, ones(n - r))
    l = n - r + rank(pi)
    val = marginal(kappa, nu, l)
    if val.degree > 0:
        raise ArithmeticError(f"top coefficient {list(rho)},{list(pi)} depends on b: {val}")
    return int(val.coeff(0))


# -- k-parameter coefficients -------------------------------------------------


def c_multi(lam, mus) -> UniPoly:
    """c^lam_{mu^0,...,mu^k} via the recursion over an intermediate xi."""
    lam = Partition(lam)
    mus = [Partition(m) for m in mus]
    if len(mus) < 2:
        raise ValueError("need at least two lower partitions")
    n = _check_sizes(lam, *mus)
    if len(mus) == 2:
        return c_coeff(lam, mus[0], mus[1])
    acc = ZERO_B
    for xi in all_partitions(n):
        tail = c_coeff(xi, mus[-2], mus[-1])
        if tail.is_zero():
            continue
        acc = acc + c_multi(lam, mus[:-2] + [xi]) * tail
    if not acc.is_integral():
        raise NonIntegral(f"c_multi({list(lam)}, ...) = {acc}", witness=acc)
    return acc


def cumulant_multi(lam, mus) -> UniPoly:
    """Cumulant d^lam_{mu^0..mu^k}: Moebius sum over set partitions of the parts of lam."""
    lam = Partition(lam)
    mus = [Partition(m) for m in mus]
    _check_sizes(lam, *mus)
    acc = ZERO_B
    for blocks in set_partitions(len(lam)):
        s = len(blocks)
        weight = (-1) ** (s - 1) * factorial(s - 1)
        lam_blocks = [Partition(lam[i - 1] for i in b) for b in blocks]
        sizes = [sum(lb) for lb in lam_blocks]
        split_choices = [list(multiset_splits(m, sizes)) for m in mus]
        inner = ZERO_B
        for combo in product(*split_choices):
            term = ONE_B
            for j, lb in enumerate(lam_blocks):
                term = term * c_multi(lb, [split[j] for split in combo])
                if term.is_zero():
                    break
            inner = inner + term
        acc = acc + inner * weight
    return acc


def cumulant_d(lam, mu, nu) -> UniPoly:
    return cumulant_multi(lam, [mu, nu])


def h_multi(lam, mus) -> tuple[UniPoly, UniPoly]:
    """(h, z_lam h / n) where h = n d / (z_lam (1+b)^(len(lam)-1)).

    The first entry has rational coefficients in general; the second is
    certified to lie in Z[b].
    """
    lam = Partition(lam)
    n = _check_sizes(lam, *mus)
    d = cumulant_multi(lam, mus)
    q, rem = divmod(d, ONE_PLUS_B ** (len(lam) - 1))
    if not rem.is_zero():
        raise PolynomialityError(
            f"d^{list(lam)} = {d} is not divisible by (1+b)^{len(lam) - 1}", witness=rem
        )
    if not q.is_integral():
        raise NonIntegral(f"z h / n = {q} is not integral", witness=q)
    return q * n / z(lam), q


def h_coeff(lam, mu, nu) -> tuple[UniPoly, UniPoly]:
    return h_multi(lam, [mu, nu])


# -- identity checks ----------------------------------------------------------


def check_row_sum(lam, nu) -> bool:
    """sum_mu c^lam_{mu,nu} == n!/z_nu (1+b)^(n - len(nu))."""
    lam, nu = Partition(lam), Partition(nu)
    n = _check_sizes(lam, nu)
    acc = ZERO_B
    for mu in all_partitions(n):
        acc = acc + c_coeff(lam, mu, nu)
    return acc == ONE_PLUS_B ** (n - len(nu)) * (factorial(n) // z(nu))


def check_multiplicativity(n: int, four_index: bool = True, marginal_form: bool = True) -> Report:
    """Both forms of sum_k c^l_{m,k} c^k_{n,r} = sum_t c^l_{t,r} c^t_{m,n}."""
    rep = Report(f"multiplicativity n={n}")
    c = c_table(n)
    parts = all_partitions(n)
    if four_index:
        for lam, mu, nu, rho in product(parts, repeat=4):
            lhs = sum((c[lam, mu, k] * c[k, nu, rho] for k in parts), ZERO_B)
            rhs = sum((c[lam, t, rho] * c[t, mu, nu] for t in parts), ZERO_B)
            rep.check(lhs == rhs, ("four-index", lam, mu, nu, rho))
    if marginal_form:
        mc = marginal_table(n)
        for lam, mu, nu in product(parts, repeat=3):
            for l in range(1, n + 1):
                lhs = sum((c[lam, mu, k] * mc[k, nu, l] for k in parts), ZERO_B)
                rhs = sum((mc[lam, t, l] * c[t, mu, nu] for t in parts), ZERO_B)
                rep.check(lhs == rhs, ("marginal", lam, mu, nu, l))
    return rep


def check_integrality(n: int) -> Report:
    """Certify every c^lam_{mu,nu} of size n; also record observed non-negativity."""
    rep = Report(f"integrality n={n}")
    parts = all_partitions(n)
    data = _data(n)
    negative = []
    max_deg = -1
    for lam, mu, nu in product(parts, repeat=3):
        try:
            v = data.certify(lam, (mu, nu))
        except CertificationError as exc:
            rep.check(False, str(exc))
            continue
        rep.check(True)
        max_deg = max(max_deg, v.degree)
        if not v.nonnegative():
            negative.append((lam, mu, nu))
    rep.notes["observed_nonnegative"] = not negative
    rep.notes["max_degree"] = max_deg
    return rep


def check_marginals(n: int) -> Report:
    """Non-negative integer coefficients and deg mc <= n - l + len(lam) - len(mu)."""
    rep = Report(f"marginals n={n}")
    for (lam, mu, l), v in marginal_table(n).items():
        rep.check(v.is_integral() and v.nonnegative(), ("sign/integrality", lam, mu, l, str(v)))
        bound = n - l + len(lam) - len(mu)
        rep.check(v.is_zero() or v.degree <= bound, ("degree", lam, mu, l, str(v)))
    return rep


def check_stability(m_max: int = 4, pads=(1, 2)) -> Report:
    """mc^k_{v,l} == mc^{k u 1^p}_{v u 1^p, l+p} whenever rk(k) = rk(v) + m - l."""
    rep = Report("stability of top marginals")
    for m in range(1, m_max + 1):
        for kappa, nu in product(all_partitions(m), repeat=2):
            for l in range(1, m + 1):
                if rank(kappa) != rank(nu) + m - l:
                    continue
                base = marginal(kappa, nu, l)
                for p in pads:
                    padded = marginal(union(kappa, ones(p)), union(nu, ones(p)), l + p)
                    rep.check(base == padded, (kappa, nu, l, p))
    return rep


def check_cumulants(n: int) -> Report:
    """d in Z[b]; (z/n) h in Z[b]; h^{[n]} in Z[b]."""
    rep = Report(f"cumulants n={n}")
    parts = all_partitions(n)
    for lam, mu, nu in product(parts, repeat=3):
        try:
            d = cumulant_d(lam, mu, nu)
            h, scaled = h_coeff(lam, mu, nu)
        except CertificationError as exc:
            rep.check(False, str(exc))
            continue
        rep.check(d.is_integral(), ("d", lam, mu, nu, str(d)))
        rep.check(scaled.is_integral(), ("zh/n", lam, mu, nu, str(scaled)))
        if len(lam) == 1:
            rep.check(h.is_integral(), ("h^[n]", lam, mu, nu, str(h)))
    return rep
