"""The supercharacter ring of P(n) inside symmetric Laurent polynomials.

Covers thin Kac supercharacters, the supersymmetry test defining ``J_n``,
the evaluation homomorphism ``ds_n`` (``x_{n-1} = t, x_n = t^{-1}``) and its
iterates, decomposition of kernel elements into thin Kac classes, and the
class-level action of ``- (x) V`` and its translation summands.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Mapping, Sequence

from . import cancel as _cancel
from .laurent import LaurentPolynomial, NotDivisibleError, PolynomialError
from .schur import (WeightError, check_dominant, is_symmetric, schur_decompose,
                    schur_laurent)
from .weights import ball_moves, parity, to_diagram


class SupercharError(ValueError):
    pass


class SupercharElement:
    """A symmetric Laurent polynomial in ``n`` variables."""

    __slots__ = ("n", "poly")

    def __init__(self, n: int, poly: LaurentPolynomial, check: bool = True):
        if poly.nvars != n:
            raise SupercharError(f"polynomial has {poly.nvars} variables, expected {n}")
        if check and not is_symmetric(poly):
            raise SupercharError("not symmetric")
        self.n = n
        self.poly = poly

    @classmethod
    def constant(cls, n: int, c: int) -> "SupercharElement":
        return cls(n, LaurentPolynomial.constant(n, c), check=False)

    def _other(self, other) -> "SupercharElement":
        if isinstance(other, int):
            return SupercharElement.constant(self.n, other)
        if not isinstance(other, SupercharElement):
            raise TypeError(f"cannot combine SupercharElement with {type(other).__name__}")
        if other.n != self.n:
            raise SupercharError(f"rank mismatch: {self.n} vs {other.n}")
        return other

    def __add__(self, other):
        return SupercharElement(self.n, self.poly + self._other(other).poly, check=False)

    __radd__ = __add__

    def __sub__(self, other):
        return SupercharElement(self.n, self.poly - self._other(other).poly, check=False)

    def __neg__(self):
        return SupercharElement(self.n, -self.poly, check=False)

    def __mul__(self, other):
        if isinstance(other, int):
            return SupercharElement(self.n, self.poly.scale(other), check=False)
        return SupercharElement(self.n, self.poly * self._other(other).poly, check=False)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = SupercharElement.constant(self.n, other)
        if not isinstance(other, SupercharElement):
            return NotImplemented
        return self.n == other.n and self.poly == other.poly

    def __hash__(self):
        return hash((self.n, self.poly))

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def __repr__(self):
        return f"SupercharElement({self.n}, {self.poly})"

    def __str__(self):
        return str(self.poly)


class ThinKacCombination:
    """Integer combination ``sum c[lam] [nabla(lam)]`` of thin Kac classes."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Mapping[Sequence[int], int] | None = None):
        self.n = n
        clean = {}
        for lam, c in (coeffs or {}).items():
            lam = check_dominant(lam)
            if len(lam) != n:
                raise WeightError(f"weight {list(lam)} has rank {len(lam)}, expected {n}")
            c = int(c)
            if c:
                clean[lam] = clean.get(lam, 0) + c
                if not clean[lam]:
                    del clean[lam]
        self.coeffs = clean

    def __eq__(self, other):
        if not isinstance(other, ThinKacCombination):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __add__(self, other):
        if other.n != self.n:
            raise SupercharError("rank mismatch")
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return ThinKacCombination(self.n, out)

    def __repr__(self):
        return f"ThinKacCombination({self.n}, {dict(sorted(self.coeffs.items()))})"

    def __bool__(self):
        return bool(self.coeffs)

    def to_json_obj(self) -> dict:
        return {"n": self.n, "terms": [[list(lam), c] for lam, c in sorted(self.coeffs.items())]}

    @classmethod
    def from_json_obj(cls, obj) -> "ThinKacCombination":
        try:
            n = obj["n"]
            terms = {tuple(lam): int(c) for lam, c in obj["terms"]}
        except (KeyError, TypeError, ValueError) as exc:
            raise SupercharError(f"malformed thin Kac combination JSON: {exc}") from None
        return cls(n, terms)


# -- basic classes ----------------------------------------------------------

@lru_cache(maxsize=None)
def _r_minus1_factors(n: int) -> tuple:
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            e = [0] * n
            e[i] = e[j] = 1
            out.append(LaurentPolynomial(n, {(0,) * n: 1, tuple(e): -1}))
    return tuple(out)


@lru_cache(maxsize=None)
def _r_minus1_poly(n: int) -> LaurentPolynomial:
    out = LaurentPolynomial.one(n)
    for f in _r_minus1_factors(n):
        out = out * f
    return out


def r_minus1(n: int) -> SupercharElement:
    """``prod_{i<j} (1 - x_i x_j)``."""
    return SupercharElement(n, _r_minus1_poly(n), check=False)


@lru_cache(maxsize=64)
def _r_minus1_times_schur(partition: tuple) -> LaurentPolynomial:
    # multiply by one binomial (1 - x_i x_j) at a time
    n = len(partition)
    p = schur_laurent(partition)
    for i in range(n):
        for j in range(i + 1, n):
            e = [0] * n
            e[i] = e[j] = 1
            p = p - p.shift(e)
    return p


def _thin_kac_poly(lam: tuple) -> LaurentPolynomial:
    n = len(lam)
    if n == 0:
        return LaurentPolynomial.one(0)
    c = lam[-1]
    p = _r_minus1_times_schur(tuple(v - c for v in lam))
    if c:
        p = p.shift((c,) * n)
    return -p if parity(lam) else p


def sch_thin_kac(lam: Sequence[int]) -> SupercharElement:
    """Supercharacter ``(-1)^{p(lam)} R_{-1} s_lam`` of the thin Kac module."""
    lam = check_dominant(lam)
    return SupercharElement(len(lam), _thin_kac_poly(lam), check=False)


def sch_natural(n: int) -> SupercharElement:
    """``sum x_i - sum x_i^{-1}``: even part of weights eps_i, odd part -eps_i."""
    if n < 1:
        raise SupercharError("natural module needs n >= 1")
    terms = {}
    for i in range(n):
        e = [0] * n
        e[i] = 1
        terms[tuple(e)] = 1
        e[i] = -1
        terms[tuple(e)] = -1
    return SupercharElement(n, LaurentPolynomial(n, terms), check=False)


# -- supersymmetry and ds ---------------------------------------------------

def _as_element(f) -> SupercharElement:
    if isinstance(f, SupercharElement):
        return f
    if isinstance(f, LaurentPolynomial):
        return SupercharElement(f.nvars, f)
    raise TypeError(f"expected SupercharElement, got {type(f).__name__}")


def pair_evaluate(f: SupercharElement, i: int, j: int):
    """Evaluate at ``x_i = t, x_j = t^{-1}``; ``None`` if the result depends on t."""
    f = _as_element(f)
    ok, value = f.poly.pair_substitute(i, j).t_independent_part()
    return value if ok else None


def jn_membership(f: SupercharElement) -> bool:
    f = _as_element(f)
    if f.n < 2:
        return True
    return pair_evaluate(f, f.n - 1, f.n) is not None


def ds_eval(f: SupercharElement) -> SupercharElement:
    """``ds_n``: restrict to ``x_{n-1} = x_n^{-1}``, landing in rank ``n - 2``."""
    f = _as_element(f)
    if f.n < 2:
        raise SupercharError("rank too small")
    value = pair_evaluate(f, f.n - 1, f.n)
    if value is None:
        raise SupercharError(f"not supersymmetric at pair ({f.n - 1},{f.n})")
    return SupercharElement(f.n - 2, value, check=False)


def ds_iterate(f: SupercharElement, k: int) -> SupercharElement:
    f = _as_element(f)
    if k < 0:
        raise SupercharError("k must be nonnegative")
    if f.n < 2 * k:
        raise SupercharError(f"rank too small: n={f.n} < 2k={2 * k}")
    for stage in range(1, k + 1):
        try:
            f = ds_eval(f)
        except SupercharError as exc:
            raise SupercharError(f"stage {stage} of {k} (rank {f.n}): {exc}") from None
    return f


# -- thin Kac decompositions -------------------------------------------------

def thin_kac_to_poly(c: ThinKacCombination) -> SupercharElement:
    out = LaurentPolynomial.zero(c.n)
    for lam, coef in c.coeffs.items():
        out = out + _thin_kac_poly(lam).scale(coef)
    return SupercharElement(c.n, out, check=False)


def thin_kac_expand(f: SupercharElement, cancel=None) -> ThinKacCombination:
    """Write ``f`` in the thin Kac basis, if it is divisible by ``R_{-1}``.

    No kernel condition is imposed, so this also works at ranks 0 and 1
    where ``R_{-1} = 1``.  Raises :class:`NotDivisibleError` otherwise.
    """
    f = _as_element(f)
    g = f.poly
    for factor in _r_minus1_factors(f.n):
        _cancel.check(cancel)
        g = g.exact_divide(factor)
    a = schur_decompose(g, cancel=cancel)
    out = ThinKacCombination(f.n, {lam: (-c if parity(lam) else c) for lam, c in a.items()})
    assert thin_kac_to_poly(out) == f, "thin Kac re-expansion mismatch"
    return out


def kernel_decompose(f: SupercharElement, cancel=None) -> ThinKacCombination:
    """Coefficients ``c`` with ``f = sum c[lam] sch nabla(lam)`` for ``f`` in ker ds_n."""
    f = _as_element(f)
    try:
        in_kernel = ds_eval(f).is_zero()
    except SupercharError:
        in_kernel = False
    if not in_kernel:
        raise SupercharError("not in kernel")
    try:
        return thin_kac_expand(f, cancel=cancel)
    except NotDivisibleError as exc:  # pragma: no cover - kernel elements are always divisible
        raise AssertionError(f"kernel element not divisible by R_-1: {exc}") from None


# -- translation ---------------------------------------------------------------

def tensor_V_decompose(lam: Sequence[int]) -> ThinKacCombination:
    """Class of ``nabla(lam) (x) V`` in the thin Kac basis."""
    lam = check_dominant(lam)
    n = len(lam)
    prod = sch_thin_kac(lam) * sch_natural(n)
    return thin_kac_expand(prod)


def translate_thin_kac(lam: Sequence[int], k: int) -> ThinKacCombination:
    """Part of ``tensor_V_decompose(lam)`` coming from the ball at position ``k``."""
    lam = check_dominant(lam)
    full = tensor_V_decompose(lam)
    sources = {m.target: m.source for m in ball_moves(lam)}
    picked = {}
    for mu, c in full.coeffs.items():
        if mu not in sources:
            raise AssertionError(f"tensor product term {mu} is not a single ball move from {lam}")
        if sources[mu] == k:
            picked[mu] = c
    return ThinKacCombination(len(lam), picked)


def translation_case(lam: Sequence[int], k: int) -> int:
    """Local configuration of the diagram at ``k-1, k, k+1``.

    1: (b, b, o), 2: (o, b, b), 3: (o, b, o), 4: anything else.
    """
    occ = set(to_diagram(lam))
    left, mid, right = k - 1 in occ, k in occ, k + 1 in occ
    if not mid:
        return 4
    if left and not right:
        return 1
    if right and not left:
        return 2
    if not left and not right:
        return 3
    return 4


def sign_table(lam: Sequence[int]) -> dict:
    """``{k: {mu: sign}}`` over every source position with a nonzero translation."""
    lam = check_dominant(lam)
    out = {}
    for k in sorted({m.source for m in ball_moves(lam)}, reverse=True):
        t = translate_thin_kac(lam, k)
        if t:
            out[k] = dict(sorted(t.coeffs.items()))
    return out
