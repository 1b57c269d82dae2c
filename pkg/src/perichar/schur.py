"""Alternants, Schur Laurent polynomials and Schur-basis decomposition.

``schur_laurent`` computes ``alternant(lam + rho) / alternant(rho)`` by
exact division.  ``schur_ssyt_oracle`` enumerates semistandard tableaux and
shares no code with it, so the two can cross-check each other.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Sequence

from . import cancel as _cancel
from .laurent import LaurentPolynomial, PolynomialError


class WeightError(ValueError):
    pass


def is_dominant(lam: Sequence[int]) -> bool:
    return all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))


def check_dominant(lam: Sequence[int]) -> tuple:
    lam = tuple(int(v) for v in lam)
    if not is_dominant(lam):
        raise WeightError(f"weight not dominant: {list(lam)}")
    return lam


def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation of ``0..n-1`` given in one-line notation."""
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def sort_with_sign(mu: Sequence[int]) -> tuple[int, tuple]:
    """Sort ``mu`` into weakly decreasing order.

    Returns ``(sign, sorted_mu)`` where ``sign`` is the sign of the sorting
    permutation, or ``(0, ())`` if ``mu`` has a repeated entry (the alternant
    then vanishes).
    """
    mu = tuple(mu)
    if len(set(mu)) != len(mu):
        return 0, ()
    order = sorted(range(len(mu)), key=lambda i: -mu[i])
    return permutation_sign(order), tuple(mu[i] for i in order)


def rho(n: int) -> tuple:
    return tuple(range(n - 1, -1, -1))


def alternant(mu: Sequence[int]) -> LaurentPolynomial:
    """``sum_{w in S_n} sgn(w) x^{w(mu)}``."""
    mu = tuple(int(v) for v in mu)
    n = len(mu)
    if len(set(mu)) != n:
        return LaurentPolynomial.zero(n)
    terms = {}
    for perm in permutations(range(n)):
        # w(mu) places mu[i] at coordinate perm[i]
        e = [0] * n
        for i, p in enumerate(perm):
            e[p] = mu[i]
        terms[tuple(e)] = permutation_sign(perm)
    return LaurentPolynomial(n, terms)


@lru_cache(maxsize=None)
def _vandermonde_factors(n: int) -> tuple:
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            e_i = [0] * n
            e_j = [0] * n
            e_i[i] = 1
            e_j[j] = 1
            out.append(LaurentPolynomial(n, {tuple(e_i): 1, tuple(e_j): -1}))
    return tuple(out)


@lru_cache(maxsize=256)
def _schur_partition(lam: tuple) -> LaurentPolynomial:
    # alternant(lam+rho) / prod_{i<j}(x_i - x_j), one binomial factor at a
    # time; the product of the factors is alternant(rho).
    n = len(lam)
    q = alternant(tuple(a + b for a, b in zip(lam, rho(n))))
    for factor in _vandermonde_factors(n):
        q = q.exact_divide(factor)
    return q


def schur_laurent(lam: Sequence[int]) -> LaurentPolynomial:
    """Character of the irreducible gl(n)-module with highest weight ``lam``.

    The weight is shifted to a partition, the polynomial Schur function is
    computed as an alternant ratio, and the result multiplied back by
    ``(x_1 ... x_n)^{lam_n}``.
    """
    lam = check_dominant(lam)
    n = len(lam)
    if n == 0:
        return LaurentPolynomial.one(0)
    c = lam[-1]
    base = _schur_partition(tuple(v - c for v in lam))
    return base.shift((c,) * n) if c else base


def schur_alternant_ratio(lam: Sequence[int]) -> LaurentPolynomial:
    """``alternant(lam + rho) / alternant(rho)`` by a single generic division.

    Slower than :func:`schur_laurent`; kept for cross-checks of the Laurent
    normalization and of the division routine.
    """
    lam = check_dominant(lam)
    n = len(lam)
    r = rho(n)
    return alternant(tuple(a + b for a, b in zip(lam, r))).exact_divide(alternant(r))


SSYT_SIZE_LIMIT = 12


def schur_ssyt_oracle(lam: Sequence[int], size_limit: int = SSYT_SIZE_LIMIT) -> LaurentPolynomial:
    """Schur function as the content generating function of SSYT (test oracle)."""
    lam = check_dominant(lam)
    n = len(lam)
    if n == 0:
        return LaurentPolynomial.one(0)
    c = lam[-1]
    shape = [v - c for v in lam]
    if sum(shape) > size_limit:
        raise WeightError(f"tableau oracle size guard exceeded: |{shape}| > {size_limit}")
    shape = [r for r in shape if r > 0]
    cells = [(r, col) for r, length in enumerate(shape) for col in range(length)]
    terms: dict = {}
    filling: dict = {}
    content = [0] * n

    def place(idx: int) -> None:
        if idx == len(cells):
            key = tuple(v + c for v in content)
            terms[key] = terms.get(key, 0) + 1
            return
        r, col = cells[idx]
        low = 1
        if col > 0:
            low = max(low, filling[(r, col - 1)])
        if r > 0:
            low = max(low, filling[(r - 1, col)] + 1)
        for v in range(low, n + 1):
            filling[(r, col)] = v
            content[v - 1] += 1
            place(idx + 1)
            content[v - 1] -= 1
        filling.pop((r, col), None)

    place(0)
    return LaurentPolynomial(n, terms)


def is_symmetric(f: LaurentPolynomial) -> bool:
    n = f.nvars
    for i in range(n - 1):
        p = list(range(1, n + 1))
        p[i], p[i + 1] = p[i + 1], p[i]
        if f.permute_variables(p) != f:
            return False
    return True


def schur_decompose(f: LaurentPolynomial, cancel=None) -> dict:
    """Coefficients ``a`` with ``f = sum a[lam] * s_lam`` for symmetric ``f``."""
    if not is_symmetric(f):
        raise PolynomialError("not symmetric")
    out = {}
    rem = f
    while not rem.is_zero():
        _cancel.check(cancel)
        e, c = rem.leading_term()
        assert is_dominant(e), f"lex-leading exponent {e} of a symmetric polynomial is not dominant"
        out[e] = c
        rem = rem - schur_laurent(e).scale(c)
    return out


def schur_combination(coeffs: dict, n: int) -> LaurentPolynomial:
    out = LaurentPolynomial.zero(n)
    for lam, c in coeffs.items():
        out = out + schur_laurent(lam).scale(c)
    return out


def decomposition_to_json_obj(coeffs: dict) -> list:
    return [[list(lam), c] for lam, c in sorted(coeffs.items())]
