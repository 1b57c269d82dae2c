"""Sparse multivariate Laurent polynomials with exact integer coefficients.

A polynomial in ``x_1, ..., x_n`` is a map from exponent vectors to nonzero
Python ints.  Internally each exponent vector is packed into one integer
key (Kronecker encoding, ``x_1`` in the most significant digit, every digit
offset by ``OFFSET``), so that

* multiplying monomials is adding keys and subtracting a bias, and
* comparing keys as integers is comparing exponents lexicographically.

Exponent magnitudes are tracked as an upper bound and must stay below
``EXPONENT_LIMIT``; nothing at desk scale comes close.  Instances are
immutable values.
"""

from __future__ import annotations

import heapq
import json
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

DIGIT_BITS = 32
MASK = (1 << DIGIT_BITS) - 1
OFFSET = 1 << (DIGIT_BITS - 1)
EXPONENT_LIMIT = OFFSET // 2

Exponent = tuple


class PolynomialError(ValueError):
    """Raised for domain errors in polynomial arithmetic."""


class NotDivisibleError(PolynomialError):
    pass


@lru_cache(maxsize=None)
def _bias(nvars: int) -> int:
    return sum(OFFSET << (DIGIT_BITS * i) for i in range(nvars))


def _pack(e: Sequence[int]) -> int:
    key = 0
    for v in e:
        key = (key << DIGIT_BITS) | (v + OFFSET)
    return key


def _unpack(key: int, nvars: int) -> tuple:
    out = [0] * nvars
    for i in range(nvars - 1, -1, -1):
        out[i] = (key & MASK) - OFFSET
        key >>= DIGIT_BITS
    return tuple(out)


def _check_bound(bound: int) -> int:
    if bound >= EXPONENT_LIMIT:
        raise PolynomialError(f"exponent magnitude {bound} out of supported range")
    return bound


class LaurentPolynomial:
    """Element of ``Z[x_1^{+-1}, ..., x_n^{+-1}]``.

    >>> x1, x2 = LaurentPolynomial.variables(2)
    >>> str((x1 + x2) * (x1 - x2))
    'x1^2 - x2^2'
    """

    __slots__ = ("nvars", "_terms", "_bound", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], int] | None = None):
        if nvars < 0:
            raise PolynomialError("nvars must be nonnegative")
        self.nvars = nvars
        clean: dict = {}
        bound = 0
        if terms:
            for e, c in terms.items():
                e = tuple(int(v) for v in e)
                if len(e) != nvars:
                    raise PolynomialError(
                        f"exponent {e} has length {len(e)}, expected {nvars}")
                c = int(c)
                if not c:
                    continue
                if e:
                    bound = max(bound, max(abs(v) for v in e))
                _check_bound(bound)
                k = _pack(e)
                v = clean.get(k, 0) + c
                if v:
                    clean[k] = v
                else:
                    del clean[k]
        self._terms = clean
        self._bound = bound
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict, bound: int) -> "LaurentPolynomial":
        # trusted constructor: packed keys, no zero coefficients
        p = object.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._bound = _check_bound(bound) if terms else 0
        p._hash = None
        return p

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPolynomial":
        return cls._raw(nvars, {}, 0)

    @classmethod
    def constant(cls, nvars: int, c: int) -> "LaurentPolynomial":
        return cls._raw(nvars, {_bias(nvars): int(c)} if c else {}, 0)

    @classmethod
    def one(cls, nvars: int) -> "LaurentPolynomial":
        return cls.constant(nvars, 1)

    @classmethod
    def monomial(cls, exponent: Sequence[int], coeff: int = 1) -> "LaurentPolynomial":
        e = tuple(int(v) for v in exponent)
        return cls(len(e), {e: coeff})

    @classmethod
    def variables(cls, nvars: int) -> list["LaurentPolynomial"]:
        out = []
        for i in range(nvars):
            e = [0] * nvars
            e[i] = 1
            out.append(cls.monomial(e))
        return out

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict:
        """A fresh ``{exponent tuple: coefficient}`` dict."""
        n = self.nvars
        return {_unpack(k, n): c for k, c in self._terms.items()}

    def items(self):
        n = self.nvars
        for k, c in self._terms.items():
            yield _unpack(k, n), c

    def exponents(self):
        n = self.nvars
        return [_unpack(k, n) for k in self._terms]

    def coefficient(self, exponent: Sequence[int]) -> int:
        if len(exponent) != self.nvars:
            raise PolynomialError("exponent length mismatch")
        return self._terms.get(_pack(exponent), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and _bias(self.nvars) in self._terms)

    def leading_term(self) -> tuple[Exponent, int]:
        """Lex-greatest exponent and its coefficient."""
        if not self._terms:
            raise PolynomialError("zero polynomial has no leading term")
        k = max(self._terms)
        return _unpack(k, self.nvars), self._terms[k]

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        n = self.nvars
        return [(_unpack(k, n), self._terms[k]) for k in sorted(self._terms)]

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial.constant(self.nvars, other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.nvars}, {dict(self.sorted_terms())!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in reversed(self.sorted_terms()):
            mono = []
            for i, k in enumerate(e):
                if k == 1:
                    mono.append(f"x{i + 1}")
                elif k:
                    mono.append(f"x{i + 1}^{k}")
            body = "*".join(mono)
            if not body:
                s = str(abs(c))
            elif abs(c) == 1:
                s = body
            else:
                s = f"{abs(c)}*{body}"
            parts.append(("-" if c < 0 else "+", s))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, s in parts[1:]:
            out += f" {sign} {s}"
        return out

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            if other.nvars != self.nvars:
                raise PolynomialError(
                    f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, int):
            return LaurentPolynomial.constant(self.nvars, other)
        raise TypeError(f"cannot combine LaurentPolynomial with {type(other).__name__}")

    def _combine(self, other: "LaurentPolynomial", sign: int) -> "LaurentPolynomial":
        out = dict(self._terms)
        get = out.get
        for k, c in other._terms.items():
            v = get(k, 0) + sign * c
            if v:
                out[k] = v
            else:
                del out[k]
        return LaurentPolynomial._raw(self.nvars, out, max(self._bound, other._bound))

    def __add__(self, other) -> "LaurentPolynomial":
        return self._combine(self._coerce(other), 1)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPolynomial":
        return self._combine(self._coerce(other), -1)

    def __rsub__(self, other) -> "LaurentPolynomial":
        return self._coerce(other) - self

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial._raw(
            self.nvars, {k: -c for k, c in self._terms.items()}, self._bound)

    def scale(self, c: int) -> "LaurentPolynomial":
        if not c:
            return LaurentPolynomial.zero(self.nvars)
        return LaurentPolynomial._raw(
            self.nvars, {k: c * v for k, v in self._terms.items()}, self._bound)

    def shift(self, exponent: Sequence[int]) -> "LaurentPolynomial":
        """Multiply by the monomial ``x^exponent``."""
        if len(exponent) != self.nvars:
            raise PolynomialError("variable count mismatch")
        d = _pack(exponent) - _bias(self.nvars)
        bound = self._bound + max((abs(v) for v in exponent), default=0)
        return LaurentPolynomial._raw(
            self.nvars, {k + d: c for k, c in self._terms.items()}, bound)

    def __mul__(self, other) -> "LaurentPolynomial":
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        bias = _bias(self.nvars)
        out: dict = {}
        get = out.get
        for kb, cb in b.items():
            d = kb - bias
            for ka, ca in a.items():
                k = ka + d
                out[k] = get(k, 0) + ca * cb
        return LaurentPolynomial._raw(
            self.nvars, {k: c for k, c in out.items() if c}, self._bound + other._bound)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPolynomial":
        if k < 0:
            raise PolynomialError("negative powers are not supported")
        result = LaurentPolynomial.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def exact_divide(self, divisor: "LaurentPolynomial") -> "LaurentPolynomial":
        """Return ``q`` with ``q * divisor == self``, else raise NotDivisibleError.

        Lex leading-term reduction.  An exact quotient has every exponent in
        the box ``[min(f) - min(g), max(f) - max(g)]`` (coordinatewise Newton
        polytope bounds), so a candidate quotient term outside the box proves
        the division is not exact.  Each reduction strictly lowers the
        lex-leading term of the remainder, so every box point is visited at
        most once and the loop terminates.
        """
        g = self._coerce(divisor)
        if g.is_zero():
            raise PolynomialError("division by zero")
        n = self.nvars
        if self.is_zero():
            return LaurentPolynomial.zero(n)
        fe = self.exponents()
        ge = g.exponents()
        lo = tuple(min(e[i] for e in fe) - min(e[i] for e in ge) for i in range(n))
        hi = tuple(max(e[i] for e in fe) - max(e[i] for e in ge) for i in range(n))
        if any(l > h for l, h in zip(lo, hi)):
            raise NotDivisibleError("not divisible")
        bias = _bias(n)
        lead_k = max(g._terms)
        lead_c = g._terms[lead_k]
        rest = [(k - bias, c) for k, c in g._terms.items() if k != lead_k]

        rem = dict(self._terms)
        heap = [-k for k in rem]
        heapq.heapify(heap)
        quot = {}
        while heap:
            key = -heapq.heappop(heap)
            c = rem.pop(key, 0)
            if not c:
                continue
            q, r = divmod(c, lead_c)
            if r:
                raise NotDivisibleError("not divisible")
            m = key - lead_k + bias
            if m in quot:  # pragma: no cover - lex decrease rules this out
                raise AssertionError("division revisited a quotient exponent")
            e = _unpack(m, n)
            if any(v < l or v > h for v, l, h in zip(e, lo, hi)):
                raise NotDivisibleError("not divisible")
            quot[m] = q
            for d, gc in rest:
                t = m + d
                v = rem.get(t, 0) - q * gc
                if v:
                    if t not in rem:
                        heapq.heappush(heap, -t)
                    rem[t] = v
                else:
                    rem.pop(t, None)
        bound = max(max(abs(l), abs(h)) for l, h in zip(lo, hi)) if n else 0
        return LaurentPolynomial._raw(n, quot, bound)

    # -- variable manipulations --------------------------------------------

    def permute_variables(self, perm: Sequence[int]) -> "LaurentPolynomial":
        """Apply the substitution ``x_i -> x_{perm(i)}`` (1-based one-line notation).

        On exponents this is ``e -> e o perm^{-1}``, a left action:
        ``f.permute_variables(p).permute_variables(q) == f.permute_variables(q o p)``.
        """
        n = self.nvars
        p = [int(v) for v in perm]
        if len(p) != n or sorted(p) != list(range(1, n + 1)):
            raise PolynomialError(f"not a permutation of 1..{n}: {list(perm)}")
        inv = [0] * n
        for i, v in enumerate(p):
            inv[v - 1] = i
        out = {}
        for k, c in self._terms.items():
            e = _unpack(k, n)
            out[_pack([e[inv[s]] for s in range(n)])] = c
        return LaurentPolynomial._raw(n, out, self._bound)

    def pair_substitute(self, i: int, j: int) -> "LaurentPolynomial":
        """Substitute ``x_i = t, x_j = t^{-1}`` (1-based indices).

        The surviving variables keep their relative order and ``t`` becomes
        the last variable of the result, which has ``nvars - 1`` variables.
        """
        n = self.nvars
        if i == j or not (1 <= i <= n and 1 <= j <= n):
            raise PolynomialError(f"invalid substitution pair ({i}, {j}) for {n} variables")
        si = DIGIT_BITS * (n - i)
        sj = DIGIT_BITS * (n - j)
        out: dict = {}
        get = out.get
        if {i, j} == {n - 1, n}:
            # both substituted digits are the lowest two
            two = 2 * DIGIT_BITS
            for k, c in self._terms.items():
                new = ((k >> two) << DIGIT_BITS) | (((k >> si) & MASK) - ((k >> sj) & MASK) + OFFSET)
                v = get(new, 0) + c
                if v:
                    out[new] = v
                else:
                    del out[new]
            return LaurentPolynomial._raw(n - 1, out, 2 * self._bound)
        keep = [DIGIT_BITS * (n - 1 - s) for s in range(n) if s not in (i - 1, j - 1)]
        for k, c in self._terms.items():
            t = ((k >> si) & MASK) - ((k >> sj) & MASK) + OFFSET
            new = 0
            for s in keep:
                new = (new << DIGIT_BITS) | ((k >> s) & MASK)
            new = (new << DIGIT_BITS) | t
            v = get(new, 0) + c
            if v:
                out[new] = v
            else:
                del out[new]
        return LaurentPolynomial._raw(n - 1, out, 2 * self._bound)

    def t_independent_part(self) -> tuple[bool, "LaurentPolynomial | None"]:
        """Check the last variable is absent; if so, drop it."""
        if self.nvars == 0:
            return True, self
        for k in self._terms:
            if (k & MASK) != OFFSET:
                return False, None
        return True, LaurentPolynomial._raw(
            self.nvars - 1, {k >> DIGIT_BITS: c for k, c in self._terms.items()}, self._bound)

    # -- serialization ----------------------------------------------------

    def to_json_obj(self) -> dict:
        return {"nvars": self.nvars,
                "terms": [[list(e), str(c)] for e, c in self.sorted_terms()]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj) -> "LaurentPolynomial":
        if not isinstance(obj, dict) or "nvars" not in obj or "terms" not in obj:
            raise PolynomialError("polynomial JSON needs 'nvars' and 'terms'")
        nvars = obj["nvars"]
        if not isinstance(nvars, int) or isinstance(nvars, bool) or nvars < 0:
            raise PolynomialError("'nvars' must be a nonnegative integer")
        if not isinstance(obj["terms"], list):
            raise PolynomialError("'terms' must be a list")
        terms: dict = {}
        for idx, term in enumerate(obj["terms"]):
            if not (isinstance(term, list) and len(term) == 2 and isinstance(term[0], list)):
                raise PolynomialError(f"term {idx}: expected [[exponents], \"coef\"]")
            e, c = term
            if len(e) != nvars:
                raise PolynomialError(
                    f"term {idx}: exponent length mismatch ({len(e)} != {nvars})")
            if not all(isinstance(v, int) and not isinstance(v, bool) for v in e):
                raise PolynomialError(f"term {idx}: exponents must be integers")
            if isinstance(c, bool) or not isinstance(c, (str, int)):
                raise PolynomialError(f"term {idx}: coefficient must be a decimal string")
            try:
                c = int(c)
            except ValueError:
                raise PolynomialError(f"term {idx}: bad coefficient {c!r}") from None
            key = tuple(e)
            if key in terms:
                raise PolynomialError(f"term {idx}: duplicate exponent {list(e)}")
            terms[key] = c
        return cls(nvars, terms)

    @classmethod
    def from_json(cls, text: str) -> "LaurentPolynomial":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise PolynomialError(
                f"parse error at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
        return cls.from_json_obj(obj)


def add(f: LaurentPolynomial, g: LaurentPolynomial) -> LaurentPolynomial:
    return f + g


def mul(f: LaurentPolynomial, g: LaurentPolynomial) -> LaurentPolynomial:
    return f * g


def exact_divide(f: LaurentPolynomial, g: LaurentPolynomial) -> LaurentPolynomial:
    return f.exact_divide(g)


def permute_variables(f: LaurentPolynomial, perm: Sequence[int]) -> LaurentPolynomial:
    return f.permute_variables(perm)


def pair_substitute(f: LaurentPolynomial, i: int, j: int) -> LaurentPolynomial:
    return f.pair_substitute(i, j)


def t_independent_part(f: LaurentPolynomial):
    return f.t_independent_part()


def serialize(f: LaurentPolynomial) -> str:
    return f.to_json()


def deserialize(text: str) -> LaurentPolynomial:
    return LaurentPolynomial.from_json(text)


def product(factors: Iterable[LaurentPolynomial], nvars: int) -> LaurentPolynomial:
    out = LaurentPolynomial.one(nvars)
    for f in factors:
        out = out * f
    return out
