"""
The centre of Z[S_n] in the class-sum basis, its structure constants, and the
graded Farahat-Higman algebra with the bases c, f, m, g and their transition
matrices.

Permutations are tuples of images on {0, ..., n-1}; products compose right to
left, ``(s * t)(x) = s(t(x))``.  The reduced cyclic type of a permutation is its
cycle type with one subtracted from every part (fixed points disappear).

The graded algebra in degree r is modelled by top-degree structure constants,
which do not depend on n once n is large enough.  They are computed on
n = |kappa| + len(kappa) points by counting factorisations pi = s t of a fixed
pi of reduced type kappa.  In a top-degree factorisation every cycle of s lies
inside a cycle of pi, so only those s are enumerated.
"""

from __future__ import annotations

import threading
from collections import Counter, defaultdict
from functools import lru_cache
from itertools import permutations, product

from .matrices import LabeledMatrix
from .partitions import (
    EMPTY,
    Partition,
    all_partitions,
    dual_sorted,
    minus_one,
    oplus,
    ones,
    remove_part,
    total_key,
)
from .report import GuardExceeded, Report
from .symfunc import monomial_in_elementary

DEFAULT_LIMIT = 8


def _guard(n: int, limit: int | None):
    limit = DEFAULT_LIMIT if limit is None else limit
    if n > limit:
        raise GuardExceeded(f"group algebra computations limited to n <= {limit}, got n={n}")


# -- permutations -------------------------------------------------------------


def identity(n: int) -> tuple:
    return tuple(range(n))


def compose(s, t) -> tuple:
    return tuple(s[x] for x in t)


def inverse(s) -> tuple:
    out = [0] * len(s)
    for i, x in enumerate(s):
        out[x] = i
    return tuple(out)


def transposition(n: int, i: int, j: int) -> tuple:
    p = list(range(n))
    p[i], p[j] = j, i
    return tuple(p)


def cycle_type(s) -> Partition:
    seen = [False] * len(s)
    lengths = []
    for start in range(len(s)):
        if seen[start]:
            continue
        k, x = 0, start
        while not seen[x]:
            seen[x] = True
            x = s[x]
            k += 1
        lengths.append(k)
    return Partition(lengths)


def reduced_type(s) -> Partition:
    return minus_one(cycle_type(s))


def admissible(lam, n: int) -> bool:
    """C_lam(n) is non-zero exactly when |lam| + len(lam) <= n."""
    return sum(lam) + len(lam) <= n


def representative(lam, n: int | None = None) -> tuple:
    """A permutation of reduced type lam: consecutive cycles of lengths lam_i + 1."""
    lam = Partition(lam)
    need = sum(lam) + len(lam)
    n = need if n is None else n
    if need > n:
        raise ValueError(f"no permutation of reduced type {list(lam)} in S_{n}")
    p = list(range(n))
    start = 0
    for part in lam:
        k = part + 1
        for i in range(k):
            p[start + i] = start + (i + 1) % k
        start += k
    return tuple(p)


@lru_cache(maxsize=None)
def classes(n: int) -> dict:
    """{reduced type: list of permutations} for S_n."""
    _guard(n, None)
    out = defaultdict(list)
    for s in permutations(range(n)):
        out[reduced_type(s)].append(s)
    return dict(out)


# -- group algebra ------------------------------------------------------------


class GroupAlgebraElem:
    """Sparse element of Z[S_n]; zero coefficients are never stored."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        self.terms = {p: c for p, c in (terms or {}).items() if c}

    @classmethod
    def one(cls, n: int) -> "GroupAlgebraElem":
        return cls(n, {identity(n): 1})

    def __add__(self, other):
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, 0) + c
        return GroupAlgebraElem(self.n, out)

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupAlgebraElem(self.n, {p: c * other for p, c in self.terms.items()})
        if other.n != self.n:
            raise ValueError("group algebra elements of different degrees")
        out = defaultdict(int)
        for p, a in self.terms.items():
            for q, b in other.terms.items():
                out[compose(p, q)] += a * b
        return GroupAlgebraElem(self.n, out)

    def __eq__(self, other):
        return isinstance(other, GroupAlgebraElem) and self.n == other.n and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def is_central(self) -> bool:
        by_class = defaultdict(set)
        for lam, perms in classes(self.n).items():
            for p in perms:
                by_class[lam].add(self.terms.get(p, 0))
        return all(len(v) == 1 for v in by_class.values())

    def central_coeffs(self) -> "CentralElem":
        """Read off class-sum coefficients from one representative per class."""
        out = {}
        for lam in classes(self.n):
            c = self.terms.get(representative(lam, self.n), 0)
            if c:
                out[lam] = c
        return CentralElem(self.n, out)


def jucys_murphy(i: int, n: int) -> GroupAlgebraElem:
    """J_i = (1,i) + ... + (i-1,i), 1-based, i >= 2."""
    if not 2 <= i <= n:
        raise ValueError(f"J_{i} undefined in S_{n}")
    return GroupAlgebraElem(n, {transposition(n, j, i - 1): 1 for j in range(i - 1)})


class CentralElem:
    """sum coeffs[lam] C_lam(n), keys restricted to |lam| + len(lam) <= n."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs=None):
        self.n = n
        self.coeffs = {}
        for lam, c in (coeffs or {}).items():
            lam = Partition(lam)
            if c and admissible(lam, n):
                self.coeffs[lam] = c

    def __eq__(self, other):
        return isinstance(other, CentralElem) and self.n == other.n and self.coeffs == other.coeffs

    def expand(self) -> GroupAlgebraElem:
        cl = classes(self.n)
        terms = {}
        for lam, c in self.coeffs.items():
            for p in cl[lam]:
                terms[p] = c
        return GroupAlgebraElem(self.n, terms)

    def top(self, degree: int) -> "GradedElem":
        return GradedElem(degree, {k: v for k, v in self.coeffs.items() if sum(k) == degree})


def class_sum(lam, n: int) -> CentralElem:
    """C_lam(n); the zero element when lam does not fit in S_n."""
    return CentralElem(n, {Partition(lam): 1})


def rho(kappa, lam, mu, n: int) -> int:
    """Structure constant [C_kappa] C_lam C_mu in the centre of Z[S_n]."""
    kappa, lam, mu = Partition(kappa), Partition(lam), Partition(mu)
    if not (admissible(kappa, n) and admissible(lam, n) and admissible(mu, n)):
        return 0
    pi = representative(kappa, n)
    return sum(1 for s in classes(n)[lam] if reduced_type(compose(inverse(s), pi)) == mu)


# -- top-degree structure constants ------------------------------------------

_top_lock = threading.Lock()
_top_memo: dict = {}


def _within_cycles(pi):
    """All permutations whose cycles lie inside the cycles of pi."""
    seen = [False] * len(pi)
    blocks = []
    for start in range(len(pi)):
        if seen[start]:
            continue
        block, x = [], start
        while not seen[x]:
            seen[x] = True
            block.append(x)
            x = pi[x]
        blocks.append(block)
    choices = [list(permutations(b)) for b in blocks]
    for images in product(*choices):
        s = [0] * len(pi)
        for block, img in zip(blocks, images):
            for x, y in zip(block, img):
                s[x] = y
        yield tuple(s)


def _top_table(kappa: Partition) -> Counter:
    with _top_lock:
        hit = _top_memo.get(kappa)
    if hit is not None:
        return hit
    pi = representative(kappa)
    r = sum(kappa)
    table = Counter()
    for s in _within_cycles(pi):
        lam = reduced_type(s)
        mu = reduced_type(compose(inverse(s), pi))
        if sum(lam) + sum(mu) == r:
            table[lam, mu] += 1
    with _top_lock:
        _top_memo.setdefault(kappa, table)
    return table


def rho_top(kappa, lam, mu) -> int:
    """rho^kappa_{lam,mu}(n) for |kappa| = |lam| + |mu|; the value is the same for all admissible n."""
    kappa, lam, mu = Partition(kappa), Partition(lam), Partition(mu)
    if sum(kappa) != sum(lam) + sum(mu):
        raise ValueError(f"rank mismatch: |{list(kappa)}| != |{list(lam)}| + |{list(mu)}|")
    return _top_table(kappa)[lam, mu]


# -- graded algebra ----------------------------------------------------------


class GradedElem:
    """Homogeneous element sum coeffs[lam] c_lam of degree r."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs=None):
        self.degree = degree
        self.coeffs = {}
        for lam, c in (coeffs or {}).items():
            lam = Partition(lam)
            if sum(lam) != degree:
                raise ValueError(f"{list(lam)} is not of degree {degree}")
            if c:
                self.coeffs[lam] = c

    @classmethod
    def unit(cls) -> "GradedElem":
        return cls(0, {EMPTY: 1})

    def __getitem__(self, lam) -> int:
        return self.coeffs.get(Partition(lam), 0)

    def __add__(self, other):
        if other.degree != self.degree:
            raise ValueError("sum of elements of different degrees")
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return GradedElem(self.degree, out)

    def scale(self, c: int) -> "GradedElem":
        return GradedElem(self.degree, {k: c * v for k, v in self.coeffs.items()})

    def __mul__(self, other):
        return graded_multiply(self, other)

    def __eq__(self, other):
        return isinstance(other, GradedElem) and self.degree == other.degree and self.coeffs == other.coeffs

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = sorted(self.coeffs.items(), key=lambda kv: total_key(kv[0]))
        return " + ".join(f"{v}*c{list(k)}" for k, v in terms)

    def truncate(self, n: int) -> "GradedElem":
        """Image in the degree-n centre: drop c_lam with |lam| + len(lam) > n."""
        return GradedElem(self.degree, {k: v for k, v in self.coeffs.items() if admissible(k, n)})


def graded_multiply(a: GradedElem, b: GradedElem) -> GradedElem:
    r = a.degree + b.degree
    out = {}
    for kappa in all_partitions(r):
        table = _top_table(kappa)
        acc = 0
        for (lam, mu), cnt in table.items():
            x = a.coeffs.get(lam)
            if x is None:
                continue
            y = b.coeffs.get(mu)
            if y is not None:
                acc += cnt * x * y
        out[kappa] = acc
    return GradedElem(r, out)


def cf(lam) -> GradedElem:
    lam = Partition(lam)
    return GradedElem(sum(lam), {lam: 1})


@lru_cache(maxsize=None)
def _f_single(r: int) -> GradedElem:
    return GradedElem(r, {lam: 1 for lam in all_partitions(r)})


def ff(lam) -> GradedElem:
    """f_lam = prod_i f_{lam_i}, with f_r the sum of all c of degree r."""
    return _ff(Partition(lam))


@lru_cache(maxsize=None)
def _ff(lam: Partition) -> GradedElem:
    out = GradedElem.unit()
    for part in lam:
        out = out * _f_single(part)
    return out


def mf(mu) -> GradedElem:
    """m_mu = sum_lam u[lam, mu] f_lam with u the monomial-to-elementary matrix."""
    return _mf(Partition(mu))


@lru_cache(maxsize=None)
def _mf(mu: Partition) -> GradedElem:
    r = sum(mu)
    u = monomial_in_elementary(r)
    out = GradedElem(r)
    for lam in u.rows:
        coef = u[lam, mu]
        if coef:
            out = out + ff(lam).scale(coef)
    return out


def gf(pi) -> GradedElem:
    """g_pi = c_{pi - 1} * f_{len(pi)}."""
    return _gf(Partition(pi))


@lru_cache(maxsize=None)
def _gf(pi: Partition) -> GradedElem:
    return cf(minus_one(pi)) * _f_single(len(pi))


def top_coeff_via_fh(rho_, pi) -> int:
    """tc^rho_pi = [c_rho] g_pi."""
    rho_, pi = Partition(rho_), Partition(pi)
    if sum(rho_) != sum(pi):
        raise ValueError("partitions of different sizes")
    return gf(pi)[rho_]


# -- transition matrices -----------------------------------------------------


def _in_c_basis(elems: dict, r: int, name: str) -> LabeledMatrix:
    """Columns are the given elements expanded in c (rows, ascending total order)."""
    cols = tuple(elems)
    return LabeledMatrix.build(all_partitions(r), cols, lambda rho_, k: elems[k][rho_], "c", name)


@lru_cache(maxsize=None)
def matrix_f_in_c(r: int) -> LabeledMatrix:
    """[c_rho] f_lam; rows rho ascending total, columns lam ascending dual."""
    return _in_c_basis({lam: ff(lam) for lam in dual_sorted(r)}, r, "f")


@lru_cache(maxsize=None)
def matrix_m_in_c(r: int) -> LabeledMatrix:
    return _in_c_basis({mu: mf(mu) for mu in all_partitions(r)}, r, "m")


@lru_cache(maxsize=None)
def matrix_U(r: int) -> LabeledMatrix:
    """m in the f basis: rows f_lam (dual order), columns m_mu (total order)."""
    u = monomial_in_elementary(r)
    return LabeledMatrix(u.rows, u.cols, u.entries, "f", "m")


@lru_cache(maxsize=None)
def matrix_L(r: int) -> LabeledMatrix:
    """c in the m basis: rows m_mu, columns c_rho, both in total order."""
    return matrix_m_in_c(r).inverse()


@lru_cache(maxsize=None)
def matrix_M(r: int) -> LabeledMatrix:
    """c in the f basis: rows f_lam (dual order), columns c_rho (total order)."""
    return matrix_f_in_c(r).inverse()


def matrix_M_sub(r: int, i: int) -> LabeledMatrix:
    """South-east block of M: rows with lam_1 <= i, columns with len(rho) <= i."""
    if not 1 <= i <= r:
        raise ValueError(f"need 1 <= i <= r, got i={i}, r={r}")
    return matrix_M(r).submatrix(lambda lam: lam[0] <= i, lambda rho_: len(rho_) <= i)


@lru_cache(maxsize=None)
def matrix_g_in_c(r: int) -> LabeledMatrix:
    return _in_c_basis({pi: gf(pi) for pi in all_partitions(r)}, r, "g")


@lru_cache(maxsize=None)
def matrix_N(r: int) -> LabeledMatrix:
    """g in the f basis: rows f_lam (dual order), columns g_pi (total order)."""
    return matrix_M(r) @ matrix_g_in_c(r)


@lru_cache(maxsize=None)
def matrix_Q(r: int) -> LabeledMatrix:
    """Top coefficients tc^rho_pi: rows pi, columns rho, both in descending total order."""
    desc = tuple(reversed(all_partitions(r)))
    g = matrix_g_in_c(r)
    return LabeledMatrix.build(desc, desc, lambda pi, rho_: g[rho_, pi], "pi", "rho")


def _m_entry(r: int, lam, rho_) -> int:
    if r == 0:
        return int(lam == EMPTY and rho_ == EMPTY)
    return matrix_M(r)[lam, rho_]


def check_N_blocks(r: int) -> Report:
    """N[lam, pi] = M^(r - len(pi))[lam minus one part len(pi), pi - 1]; zero if that part is absent."""
    rep = Report(f"N block structure r={r}")
    N = matrix_N(r)
    for lam in N.rows:
        for pi in N.cols:
            k = len(pi)
            rest = remove_part(lam, k)
            expected = 0 if rest is None else _m_entry(r - k, rest, minus_one(pi))
            rep.check(N[lam, pi] == expected, (lam, pi, N[lam, pi], expected))
            if N[lam, pi]:
                rep.check(k in lam, ("support", lam, pi))
    return rep


def check_matrices(r: int) -> Report:
    """Triangularity, M = U L, all determinants and the N block identity at degree r."""
    rep = Report(f"FH matrices r={r}")
    U, L, M = matrix_U(r), matrix_L(r), matrix_M(r)
    rep.check(U.is_upper_unitriangular(), "U upper unitriangular")
    rep.check(L.is_lower_unitriangular(), "L lower unitriangular")
    rep.check(U @ L == M, "M = U L")
    rep.check(abs(matrix_f_in_c(r).det()) == 1, "f basis unimodular")
    for i in range(1, r + 1):
        d = matrix_M_sub(r, i).det()
        rep.check(d == 1, ("det M_sub", i, d))
    rep.check(matrix_N(r).det() == 1, ("det N", matrix_N(r).det()))
    rep.check(abs(matrix_Q(r).det()) == 1, ("det Q", matrix_Q(r).det()))
    rep.merge(check_N_blocks(r))
    return rep


# -- Jucys-Murphy evaluations ------------------------------------------------


def _elementary_jm(n: int) -> list[GroupAlgebraElem]:
    """[e_0, ..., e_{n-1}] evaluated at J_2, ..., J_n."""
    es = [GroupAlgebraElem.one(n)] + [GroupAlgebraElem(n) for _ in range(n - 1)]
    for i in range(2, n + 1):
        J = jucys_murphy(i, n)
        for l in range(i - 1, 0, -1):
            es[l] = es[l] + es[l - 1] * J
    return es


def jm_elementary_check(n: int, l: int, limit: int | None = None) -> bool:
    """e_l(J_2..J_n) == sum of C_lam(n) over lam |- l."""
    _guard(n, limit)
    if not 1 <= l <= n - 1:
        raise ValueError(f"need 1 <= l <= n-1, got l={l}, n={n}")
    lhs = _elementary_jm(n)[l]
    rhs = CentralElem(n, {lam: 1 for lam in all_partitions(l)}).expand()
    return lhs == rhs


def monomial_jm(n: int, mu, limit: int | None = None) -> GroupAlgebraElem:
    """m_mu(J_2, ..., J_n) by direct multiplication.

    Variables are visited in turn; the state is the multiset of exponents not
    yet placed, and each variable takes either none or one distinct exponent.
    """
    _guard(n, limit)
    mu = Partition(mu)
    powers = {}
    states = {tuple(mu): GroupAlgebraElem.one(n)}
    for i in range(2, n + 1):
        J = jucys_murphy(i, n)
        nxt = defaultdict(lambda: GroupAlgebraElem(n))
        for left, elem in states.items():
            nxt[left] = nxt[left] + elem
            for e in sorted(set(left)):
                if (i, e) not in powers:
                    p = GroupAlgebraElem.one(n)
                    for _ in range(e):
                        p = p * J
                    powers[i, e] = p
                rest = list(left)
                rest.remove(e)
                key = tuple(rest)
                nxt[key] = nxt[key] + elem * powers[i, e]
        states = dict(nxt)
    return states.get((), GroupAlgebraElem(n))


def jm_monomial_check(n: int, mu, limit: int | None = None) -> bool:
    """Top-degree part of m_mu(J_2..J_n) equals mf(mu) truncated to S_n."""
    mu = Partition(mu)
    if sum(mu) > n - 1:
        raise ValueError(f"|mu| must be at most n-1, got {list(mu)} with n={n}")
    direct = monomial_jm(n, mu, limit)
    if not direct.is_central():
        return False
    return direct.central_coeffs().top(sum(mu)) == mf(mu).truncate(n)


# -- bridge to connection coefficients ---------------------------------------


def check_bridge(n: int) -> Report:
    """rho^kappa_{lam,mu}(n) == c^{kappa (+) 1..}_{lam (+) 1.., mu (+) 1..}(0) for admissible triples."""
    from .connection import c_table

    rep = Report(f"structure constants vs c(0) n={n}")
    c = c_table(n)
    keys = [lam for lam in classes(n)]
    pad = lambda lam: oplus(lam, ones(n - sum(lam)))
    for kappa, lam, mu in product(keys, repeat=3):
        lhs = rho(kappa, lam, mu, n)
        rhs = c[pad(kappa), pad(lam), pad(mu)](0)
        rep.check(lhs == rhs, (kappa, lam, mu, lhs, rhs))
    return rep


def check_stabilization(n: int) -> Report:
    """Top-degree rho at n equals rho at n + 1 (and the pruned rho_top)."""
    rep = Report(f"top-degree stabilization n={n}, n+1={n + 1}")
    keys = [lam for lam in classes(n)]
    for kappa, lam, mu in product(keys, repeat=3):
        if sum(kappa) != sum(lam) + sum(mu):
            continue
        a, b = rho(kappa, lam, mu, n), rho(kappa, lam, mu, n + 1)
        rep.check(a == b, ("n vs n+1", kappa, lam, mu, a, b))
        rep.check(a == rho_top(kappa, lam, mu), ("pruned", kappa, lam, mu))
    return rep
