"""
Recover every c^lam_{mu,nu}(b) of size n from the marginal sums alone.

Third indices are processed by rank r = 0, 1, ..., n-1.  Rank 0 is the base
case c^lam_{mu,[1^n]} = delta.  For rank r, each pi |- r gives the pair
(nu, l) = (pi u 1^(n-r), n - len(pi)), and the marginal form of
multiplicativity becomes

    sum_{rk kappa = r} c^lam_{mu,kappa} mc^kappa_{nu,l}
        = sum_theta mc^lam_{theta,l} c^theta_{mu,nu} - sum_{rk kappa < r} c^lam_{mu,kappa} mc^kappa_{nu,l},

whose matrix is the top-coefficient matrix Q^(r) (rows pi, columns rho with
kappa = rho (+) 1^(n-r)).  Q^(r) has an integral inverse, so one inversion
serves every (lam, mu).  Unknowns with len(rho) > n - r do not exist at size n;
they are solved for anyway and must come out zero.
"""

from __future__ import annotations

from itertools import product

from .exact import ZERO_B, ONE_B, UniPoly
from .fh import matrix_Q
from .matrices import LabeledMatrix
from .partitions import (
    Partition,
    all_partitions,
    minus_one,
    ones,
    oplus,
    partitions_of_rank,
    rank,
    union,
)


class ReconstructionError(ArithmeticError):
    """The marginal data is inconsistent with the structure the solve relies on."""


def condition_c2_pairs(n: int, r: int) -> list[tuple[Partition, int]]:
    """[(pi u 1^(n-r), n - len(pi)) for pi |- r], pi ascending in total order."""
    if not 1 <= r < n:
        raise ValueError(f"need 1 <= r < n, got r={r}, n={n}")
    return [(union(pi, ones(n - r)), n - len(pi)) for pi in all_partitions(r)]


def _kappa(rho, n: int, r: int) -> Partition | None:
    """rho (+) 1^(n-r), or None when len(rho) > n - r (no such kappa at size n)."""
    if len(rho) > n - r:
        return None
    return oplus(rho, ones(n - r))


def _pi_order(r: int):
    """Rows and columns of Q^(r) as stored (descending total order)."""
    return matrix_Q(r).rows


def system_matrix(n: int, r: int, marginals: dict) -> LabeledMatrix:
    """mc^kappa_{nu,l} for the (C2) rows and the rank-r columns present at size n."""
    pis = _pi_order(r)
    rhos = [rho for rho in pis if len(rho) <= n - r]

    def entry(pi, rho):
        nu, l = union(pi, ones(n - r)), n - len(pi)
        v = marginals[_kappa(rho, n, r), nu, l]
        if v.degree > 0:
            raise ReconstructionError(f"top marginal depends on b: {v}")
        return int(v.coeff(0))

    return LabeledMatrix.build(pis, rhos, entry, "pi", "rho")


def rhs_value(lam, mu, nu, l: int, r: int, known: dict, marginals: dict) -> UniPoly:
    """sum_theta mc^lam_{theta,l} c^theta_{mu,nu} - sum_{rk kappa < r} c^lam_{mu,kappa} mc^kappa_{nu,l}."""
    n = sum(lam)
    acc = ZERO_B
    try:
        for theta in all_partitions(n):
            m = marginals[lam, theta, l]
            if not m.is_zero():
                acc = acc + m * known[theta, mu, nu]
        for kappa in all_partitions(n):
            if rank(kappa) < r:
                m = marginals[kappa, nu, l]
                if not m.is_zero():
                    acc = acc - known[lam, mu, kappa] * m
    except KeyError as exc:
        raise ReconstructionError(f"missing dependency {exc.args[0]}") from None
    return acc


def _check_vanishing(n: int, r: int, marginals: dict):
    """mc^kappa_{nu,l} = 0 whenever rk(kappa) > r, for every (C2) pair."""
    for nu, l in condition_c2_pairs(n, r):
        for kappa in all_partitions(n):
            if rank(kappa) > r and not marginals[kappa, nu, l].is_zero():
                raise ReconstructionError(
                    f"mc^{list(kappa)}_{{{list(nu)},{l}}} = {marginals[kappa, nu, l]} should vanish (rank {r})"
                )


def solve_rank(n: int, r: int, known: dict, marginals: dict) -> dict:
    """All c^lam_{mu,kappa} with rk(kappa) = r, given every lower rank in ``known``."""
    _check_vanishing(n, r, marginals)
    Q = matrix_Q(r)
    assembled = system_matrix(n, r, marginals)
    expected = Q.submatrix(lambda pi: True, lambda rho: len(rho) <= n - r)
    if assembled != expected:
        raise ReconstructionError(f"system matrix at n={n}, r={r} differs from Q^({r})")
    Qinv = Q.inverse()  # rows rho, columns pi
    pis = Q.rows
    pairs = {pi: (union(pi, ones(n - r)), n - len(pi)) for pi in pis}
    out = {}
    parts = all_partitions(n)
    for lam, mu in product(parts, repeat=2):
        y = {pi: rhs_value(lam, mu, *pairs[pi], r, known, marginals) for pi in pis}
        for rho in Qinv.rows:
            x = ZERO_B
            for pi in pis:
                coef = Qinv[rho, pi]
                if coef:
                    x = x + y[pi] * coef
            kappa = _kappa(rho, n, r)
            if kappa is None:
                if not x.is_zero():
                    raise ReconstructionError(
                        f"padded unknown rho={list(rho)} for ({list(lam)},{list(mu)}) solved to {x}, not 0"
                    )
                continue
            if not x.is_integral():
                raise ReconstructionError(f"non-integral solution {x}")
            out[lam, mu, kappa] = x
    return out


def reconstruct_all(n: int, marginals: dict | None = None) -> dict:
    """The full table {(lam, mu, nu): c} of size n rebuilt from marginal sums.

    ``marginals`` maps (lam, mu, l) to polynomials in b; by default it comes
    from ``connection.marginal_table``.
    """
    if marginals is None:
        from .connection import marginal_table

        marginals = marginal_table(n)
    parts = all_partitions(n)
    base = Partition(ones(n))
    known = {(lam, mu, base): (ONE_B if lam == mu else ZERO_B) for lam, mu in product(parts, repeat=2)}
    for r in range(1, n):
        known.update(solve_rank(n, r, known, marginals))
    missing = [k for k in product(parts, repeat=3) if k not in known]
    if missing:
        raise ReconstructionError(f"unsolved coefficients: {missing[:5]}")
    return {k: known[k] for k in product(parts, repeat=3)}
