"""Euler characteristics of line bundles on periplectic flag supervarieties.

For a weight ``gamma`` the odd radical roots are the odd roots ``alpha`` with
``(alpha, gamma) > 0``, and

    E(lam) = alternant-antisymmetrization of x^{lam+rho} prod (1 - x^{-alpha})
             divided by alternant(rho).

Expanding the product over subsets turns this into a signed sum of Schur
functions, which is how it is computed here.
"""

from __future__ import annotations

import os
from typing import NamedTuple, Sequence

from . import cancel as _cancel
from .laurent import LaurentPolynomial
from .schur import alternant, rho, schur_laurent, sort_with_sign
from .superchar import (SupercharElement, SupercharError, ds_iterate,
                        sch_thin_kac)

DEFAULT_MAX_SUBSETS = 2 ** 20


class ParabolicError(ValueError):
    pass


class OddRoot(NamedTuple):
    """``sign * (eps_i + eps_j)`` with 1-based ``i <= j``."""
    sign: int
    i: int
    j: int

    def vector(self, n: int) -> tuple:
        v = [0] * n
        v[self.i - 1] += self.sign
        v[self.j - 1] += self.sign
        return tuple(v)

    def __str__(self):
        s = "+" if self.sign > 0 else "-"
        return f"{s}(e{self.i}+e{self.j})"


def delta1_r(gamma: Sequence[int]) -> list[OddRoot]:
    """Odd roots pairing positively with ``gamma``; positive roots listed first."""
    n = len(gamma)
    plus = [OddRoot(1, i + 1, j + 1) for i in range(n) for j in range(i, n)
            if gamma[i] + gamma[j] > 0]
    minus = [OddRoot(-1, i + 1, j + 1) for i in range(n) for j in range(i + 1, n)
             if gamma[i] + gamma[j] < 0]
    return plus + minus


def validate_levi_weight(lam: Sequence[int], gamma: Sequence[int]) -> bool:
    """Does ``lam`` vanish on the Cartan part of ``[k, k]`` for the Levi ``k``?

    Even roots ``eps_i - eps_j`` of ``k`` (``gamma_i == gamma_j``) force
    ``lam_i == lam_j``.  So do odd pairs ``+-(eps_i + eps_j)``, ``i < j``, with
    ``gamma_i + gamma_j == 0``: their bracket is ``E_jj - E_ii`` in the Cartan.
    """
    if len(lam) != len(gamma):
        raise ParabolicError("weight and gamma lengths differ")
    n = len(lam)
    return all(lam[i] == lam[j] for i in range(n) for j in range(i + 1, n)
               if gamma[i] == gamma[j] or gamma[i] + gamma[j] == 0)


def max_subsets() -> int:
    raw = os.environ.get("PERICHAR_MAX_SUBSETS")
    return int(raw) if raw else DEFAULT_MAX_SUBSETS


def numerator_exponents(lam: Sequence[int], gamma: Sequence[int], cancel=None) -> dict:
    """Expanded ``x^{lam+rho} prod (1 - x^{-alpha})`` as ``{exponent: coeff}``."""
    n = len(lam)
    roots = delta1_r(gamma)
    if 2 ** len(roots) > max_subsets():
        raise ParabolicError("parabolic too large for desk scale")
    start = tuple(a + b for a, b in zip(lam, rho(n)))
    terms = {start: 1}
    # multiply in one factor at a time so duplicates merge early
    for root in roots:
        _cancel.check(cancel)
        shift = root.vector(n)
        new = dict(terms)
        for e, c in terms.items():
            t = tuple(a - b for a, b in zip(e, shift))
            v = new.get(t, 0) - c
            if v:
                new[t] = v
            else:
                new.pop(t, None)
        terms = new
    return terms


def check_parabolic(lam: Sequence[int], gamma: Sequence[int]) -> None:
    """Raise unless ``(lam, gamma)`` is admissible for the Euler characteristic.

    ``gamma`` must be weakly decreasing so that the parabolic contains the
    even Borel; the alternant formula uses that Borel's ``rho``.
    """
    if len(lam) != len(gamma):
        raise ParabolicError("weight and gamma lengths differ")
    if any(gamma[i] < gamma[i + 1] for i in range(len(gamma) - 1)):
        raise ParabolicError("gamma not dominant")
    if not validate_levi_weight(lam, gamma):
        raise ParabolicError("weight not constant on Levi blocks")


def euler_schur_coefficients(lam: Sequence[int], gamma: Sequence[int], cancel=None) -> dict:
    """``E(lam)`` as ``{dominant weight: coeff}`` in the Schur basis."""
    lam = tuple(int(v) for v in lam)
    gamma = tuple(int(v) for v in gamma)
    check_parabolic(lam, gamma)
    n = len(lam)
    r = rho(n)
    out: dict = {}
    for mu, c in numerator_exponents(lam, gamma, cancel=cancel).items():
        sign, srt = sort_with_sign(mu)
        if not sign:
            continue
        nu = tuple(a - b for a, b in zip(srt, r))
        v = out.get(nu, 0) + sign * c
        if v:
            out[nu] = v
        else:
            out.pop(nu, None)
    return out


def euler_characteristic(lam: Sequence[int], gamma: Sequence[int], cancel=None) -> SupercharElement:
    n = len(lam)
    total = LaurentPolynomial.zero(n)
    for nu, c in sorted(euler_schur_coefficients(lam, gamma, cancel=cancel).items()):
        _cancel.check(cancel)
        total = total + schur_laurent(nu).scale(c)
    return SupercharElement(n, total, check=False)


def euler_characteristic_direct(lam: Sequence[int], gamma: Sequence[int]) -> SupercharElement:
    """Reference route: multiply the factors out, antisymmetrize, divide.

    Shares no code with the subset expansion beyond the polynomial type.
    """
    lam = tuple(lam)
    check_parabolic(lam, gamma)
    n = len(lam)
    r = rho(n)
    num = LaurentPolynomial.monomial(tuple(a + b for a, b in zip(lam, r)))
    for root in delta1_r(gamma):
        num = num * (LaurentPolynomial.one(n) - LaurentPolynomial.monomial(
            tuple(-v for v in root.vector(n))))
    anti = LaurentPolynomial.zero(n)
    for e, c in num.items():
        anti = anti + alternant(e).scale(c)
    return SupercharElement(n, anti.exact_divide(alternant(r)))


# -- preimages of nabla(0) ------------------------------------------------------

def prop43_parameters(n: int, k: int, a: int) -> tuple[tuple, tuple]:
    """Weight ``a(eps_1 + ... + eps_2k)`` and ``gamma = -(eps_{2k+1} + ... + eps_n)``."""
    if k < 1 or n <= 2 * k:
        raise ParabolicError(f"need k >= 1 and n > 2k, got n={n}, k={k}")
    lam = (a,) * (2 * k) + (0,) * (n - 2 * k)
    gamma = (0,) * (2 * k) + (-1,) * (n - 2 * k)
    return lam, gamma


def prop43_roots(n: int, k: int) -> list[OddRoot]:
    """The odd radical roots ``-(eps_i + eps_j)``, ``i < j``, ``j > 2k``."""
    return [OddRoot(-1, i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if j > 2 * k]


def prop43_candidate(n: int, k: int, a: int, cancel=None) -> SupercharElement:
    lam, gamma = prop43_parameters(n, k, a)
    roots = delta1_r(gamma)
    assert sorted(roots) == sorted(prop43_roots(n, k)), "unexpected radical root set"
    return euler_characteristic(lam, gamma, cancel=cancel)


def surjectivity_probe(n: int, k: int, a_values: Sequence[int], cancel=None) -> dict:
    """Compare ``ds^(k)`` of each candidate against ``+-sch nabla(0)`` in rank ``n - 2k``."""
    prop43_parameters(n, k, 0)
    target = sch_thin_kac((0,) * (n - 2 * k))
    rows = []
    for a in a_values:
        _cancel.check(cancel)
        d = ds_iterate(prop43_candidate(n, k, a, cancel=cancel), k)
        rows.append({"a": a, "ds_value": d.poly.to_json_obj(),
                     "equals_plus": d == target, "equals_minus": d == -target})
    return {"n": n, "k": k, "rows": rows}


__all__ = [
    "OddRoot", "ParabolicError", "SupercharError", "check_parabolic", "delta1_r",
    "validate_levi_weight",
    "euler_characteristic", "euler_characteristic_direct", "euler_schur_coefficients",
    "prop43_candidate", "prop43_parameters", "surjectivity_probe"
]
