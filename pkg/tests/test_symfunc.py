from collections import Counter
from fractions import Fraction
from math import factorial

import pytest

from matchjack.exact import RatFunc, UniPoly
from matchjack.partitions import Partition, all_partitions, conjugate, dominates, ones, z
from matchjack.symfunc import (
    Basis,
    PSExpr,
    elementary_to_powersum,
    inner_alpha,
    jack,
    jack_monomial,
    jack_norm,
    monomial_in_elementary,
    monomial_to_powersum,
    powersum,
    powersum_to_monomial,
    to_powersum,
)

A = UniPoly.x()


def ps(n, coeffs):
    return PSExpr(n, Basis.POWERSUM, {Partition(k): v for k, v in coeffs.items()})


def test_inner_alpha_examples():
    assert inner_alpha(powersum([2]), powersum([2])) == RatFunc(2 * A)
    assert inner_alpha(powersum([1, 1]), powersum([2])) == RatFunc(0)
    assert inner_alpha(powersum([1, 1]), powersum([1, 1])) == RatFunc(2 * A * A)
    with pytest.raises(ValueError):
        inner_alpha(powersum([1]), powersum([2]))


def test_basis_examples():
    half = Fraction(1, 2)
    assert monomial_to_powersum([1]) == powersum([1])
    assert monomial_to_powersum([2]) == powersum([2])
    assert monomial_to_powersum([1, 1]) == ps(2, {(1, 1): half, (2,): -half})
    assert elementary_to_powersum([2]) == ps(2, {(1, 1): half, (2,): -half})
    assert elementary_to_powersum([2, 1]) == ps(3, {(1, 1, 1): half, (2, 1): -half})


@pytest.mark.parametrize("n", range(1, 9))
def test_basis_round_trip(n):
    for lam in all_partitions(n):
        assert to_powersum(powersum_to_monomial(lam)) == powersum(lam)


def _u_rows(r):
    u = monomial_in_elementary(r)
    return [[u[lam, mu] for mu in u.cols] for lam in u.rows]


def test_monomial_in_elementary_examples():
    assert _u_rows(1) == [[1]]
    u2 = monomial_in_elementary(2)
    assert list(u2.rows) == [(2,), (1, 1)]
    assert _u_rows(2) == [[1, -2], [0, 1]]
    assert _u_rows(3) == [[1, -3, 3], [0, 1, -3], [0, 0, 1]]


@pytest.mark.parametrize("r", range(1, 7))
def test_monomial_in_elementary_triangular(r):
    u = monomial_in_elementary(r)
    for lam in u.rows:
        for mu in u.cols:
            if lam == conjugate(mu):
                assert u[lam, mu] == 1
            elif not dominates(mu, conjugate(lam)):
                # u vanishes unless lam' <= mu in dominance
                assert u[lam, mu] == 0
    # m_mu = sum_lam u[lam, mu] e_lam, checked in power sums
    for mu in u.cols:
        acc = PSExpr(r, Basis.POWERSUM, {})
        for lam in u.rows:
            if u[lam, mu]:
                acc = acc + elementary_to_powersum(lam).scale(u[lam, mu])
        assert acc == monomial_to_powersum(mu)


def test_jack_examples():
    assert jack([1]) == powersum([1])
    assert jack([2]) == ps(2, {(1, 1): 1, (2,): RatFunc(A)})
    assert jack([1, 1]) == ps(2, {(1, 1): 1, (2,): -1})


def test_jack_norm_examples():
    assert jack_norm([1]) == RatFunc(A)
    assert jack_norm([2]) == RatFunc(2 * A * A * (1 + A))
    assert jack_norm([1, 1]) == RatFunc(2 * A * (1 + A))


@pytest.mark.parametrize("n", range(1, 7))
def test_orthogonality_and_norms(n):
    parts = all_partitions(n)
    for i, theta in enumerate(parts):
        assert inner_alpha(jack(theta), jack(theta)) == jack_norm(theta)
        for eta in parts[i + 1:]:
            assert inner_alpha(jack(theta), jack(eta)).is_zero()


@pytest.mark.parametrize("n", range(1, 7))
def test_triangular_and_normalized(n):
    for theta in all_partitions(n):
        j = jack_monomial(theta)
        assert j[ones(n)] == RatFunc(factorial(n))
        for mu in j.coeffs:
            assert dominates(theta, mu)


# -- independent oracle: Laplace-Beltrami eigenfunctions ----------------------


def _n(lam):
    return sum(i * p for i, p in enumerate(lam))


def _laplace_beltrami(f: PSExpr) -> PSExpr:
    """(a/2) sum ij p_{i+j} d_i d_j + (1/2) sum (i+j) p_i p_j d_{i+j} + ((a-1)/2) sum i(i-1) p_i d_i."""
    out: dict = {}

    def add(parts, c):
        lam = Partition(parts)
        out[lam] = out.get(lam, RatFunc(0)) + c

    half_a = RatFunc(A) / 2
    for lam, c in f.coeffs.items():
        m = Counter(lam)
        for i in m:
            for j in m:
                mult = m[i] * (m[j] - (i == j))
                if mult:
                    rest = list((m - Counter([i, j])).elements())
                    add(rest + [i + j], c * half_a * (i * j * mult))
        for k in m:
            rest = list((m - Counter([k])).elements())
            for i in range(1, k):
                add(rest + [i, k - i], c * Fraction(k * m[k], 2))
            add(lam, c * (RatFunc(A - 1) / 2) * (k * (k - 1) * m[k]))
    return PSExpr(f.degree, Basis.POWERSUM, out)


@pytest.mark.parametrize("n", range(1, 7))
def test_jacks_are_laplace_beltrami_eigenfunctions(n):
    for theta in all_partitions(n):
        j = jack(theta)
        eig = RatFunc(A * _n(conjugate(theta)) - _n(theta))
        assert _laplace_beltrami(j) == j.scale(eig)


# -- independent oracle: alpha = 1 gives hook-scaled Schur functions ----------


def _character(lam, mu) -> int:
    """chi^lam(mu) by Murnaghan-Nakayama on beta numbers."""
    if not mu:
        return 1
    k, rest = mu[0], mu[1:]
    beta = [p + len(lam) - 1 - i for i, p in enumerate(lam)]
    total = 0
    for b in beta:
        nb = b - k
        if nb < 0 or nb in beta:
            continue
        sign = (-1) ** sum(1 for x in beta if nb < x < b)
        new = sorted((x if x != b else nb for x in beta), reverse=True)
        shape = [x - (len(new) - 1 - i) for i, x in enumerate(new)]
        total += sign * _character(Partition([p for p in shape if p > 0]), rest)
    return total


def _hook_product(lam):
    conj = conjugate(lam)
    out = 1
    for i, row in enumerate(lam):
        for j in range(row):
            out *= row - j + conj[j] - i - 1
    return out


def test_character_oracle_sanity():
    for n in range(1, 7):
        for lam in all_partitions(n):
            assert _character(lam, ones(n)) == factorial(n) // _hook_product(lam)
            assert sum(_character(lam, mu) ** 2 * Fraction(1, z(mu)) for mu in all_partitions(n)) == 1


@pytest.mark.parametrize("n", range(1, 7))
def test_jacks_at_alpha_one_are_schur(n):
    for theta in all_partitions(n):
        j = jack(theta)
        h = _hook_product(theta)
        for lam in all_partitions(n):
            assert j[lam](1) == Fraction(h * _character(theta, lam), z(lam))
