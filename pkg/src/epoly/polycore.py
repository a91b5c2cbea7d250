"""Exact sparse polynomials in u, v (and in x = uv) plus truncated power series in t.

Coefficients are :class:`fractions.Fraction`. Every value is immutable once
built and kept in canonical form (no zero coefficients), so ``==`` is plain
structural equality.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Sequence, Union

Rational = Fraction
Number = Union[int, Fraction]

# exponents are meant to fit a signed machine word
MAX_EXPONENT = 2**63 - 1


class BalanceError(ValueError):
    """A Poly2 has a monomial u^a v^b with a != b, so it is not a polynomial in uv."""

    def __init__(self, monomial: tuple[int, int], coeff: Fraction):
        self.monomial = monomial
        self.coeff = coeff
        super().__init__(
            f"polynomial is not balanced: monomial u^{monomial[0]} v^{monomial[1]} "
            f"(coefficient {coeff}) has unequal exponents"
        )


class SeriesDomainError(ValueError):
    """Raised when a series operation needs a specific constant term and gets another."""

    def __init__(self, op: str, expected: str, constant: "Poly2"):
        self.op = op
        self.constant = constant
        super().__init__(f"{op} requires constant term {expected}, got {constant}")


def _check_exponent(e: int) -> int:
    if e > MAX_EXPONENT:
        raise OverflowError(f"exponent {e} exceeds machine width")
    return e


class _SparsePoly:
    """Shared machinery for polynomials keyed by tuples of fixed arity."""

    __slots__ = ("_terms", "_hash")
    _arity = 0

    def __init__(self, terms: Mapping[tuple[int, ...], Number] | None = None):
        clean: dict[tuple[int, ...], Fraction] = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    if len(mono) != self._arity or min(mono) < 0:
                        raise ValueError(f"bad exponent {mono!r} for {type(self).__name__}")
                    clean[tuple(mono)] = Fraction(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict):
        # trusted constructor: caller guarantees canonical form
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: Number):
        return cls({(0,) * cls._arity: c})

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def one(cls):
        return cls.constant(1)

    @property
    def terms(self) -> Mapping[tuple[int, ...], Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[tuple[int, ...], Fraction]]:
        return iter(self._terms.items())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self._arity, Fraction(0))

    def coeff(self, *mono: int) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = type(self).constant(other)
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return type(self).constant(other)
        if type(other) is type(self):
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return type(self)._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c: Number):
        if not c:
            return type(self).zero()
        c = Fraction(c)
        return type(self)._raw({m: v * c for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if type(other) is not type(self):
            return NotImplemented
        if not self._terms or not other._terms:
            return type(self).zero()
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        for i in range(self._arity):
            _check_exponent(max(m[i] for m in a) + max(m[i] for m in b))
        out: dict = {}
        get = out.get
        if self._arity == 1:
            for (ea,), ca in a.items():
                for (eb,), cb in b.items():
                    k = (ea + eb,)
                    out[k] = get(k, 0) + ca * cb
        else:
            for (pa, qa), ca in a.items():
                for (pb, qb), cb in b.items():
                    k = (pa + pb, qa + qb)
                    out[k] = get(k, 0) + ca * cb
        return type(self)._raw({m: c for m, c in out.items() if c})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = type(self).one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def substitute_powers(self, h: int):
        """Replace every variable by its h-th power."""
        if h < 1:
            raise ValueError(f"substitute_powers needs h >= 1, got {h}")
        if h == 1:
            return self
        return type(self)._raw(
            {tuple(_check_exponent(h * e) for e in m): c for m, c in self._terms.items()}
        )

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    def map_coeffs(self, fn: Callable[[Fraction], Number]):
        return type(self)({m: fn(c) for m, c in self._terms.items()})

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()


class Poly2(_SparsePoly):
    """Polynomial in u and v with rational coefficients, keyed by (e_u, e_v)."""

    __slots__ = ()
    _arity = 2

    @classmethod
    def u(cls) -> "Poly2":
        return cls({(1, 0): 1})

    @classmethod
    def v(cls) -> "Poly2":
        return cls({(0, 1): 1})

    @classmethod
    def uv(cls) -> "Poly2":
        return cls({(1, 1): 1})

    def eval(self, u0: Number, v0: Number) -> Fraction:
        u0, v0 = Fraction(u0), Fraction(v0)
        return sum((c * u0**a * v0**b for (a, b), c in self._terms.items()), Fraction(0))

    def to_x_form(self) -> "PolyX":
        # scan in display order so the reported monomial is deterministic
        for (a, b), c in self.sorted_terms():
            if a != b:
                raise BalanceError((a, b), c)
        return PolyX._raw({(a,): c for (a, _), c in self._terms.items()})

    def sorted_terms(self) -> list[tuple[tuple[int, int], Fraction]]:
        """Graded lex, u before v: higher total degree first, then higher u-degree."""
        return sorted(self._terms.items(), key=lambda mc: (-(mc[0][0] + mc[0][1]), -mc[0][0]))

    def total_degree(self) -> int:
        if not self._terms:
            raise ValueError("degree of the zero polynomial")
        return max(a + b for a, b in self._terms)

    def to_text(self) -> str:
        return _render_text([(c, _mono_text((("u", a), ("v", b)))) for (a, b), c in self.sorted_terms()])

    def to_latex(self) -> str:
        return _render_latex([(c, _mono_latex((("u", a), ("v", b)))) for (a, b), c in self.sorted_terms()])

    def to_json(self) -> list[dict]:
        return [{"u": a, "v": b, "c": _frac_str(c)} for (a, b), c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: Sequence[Mapping]) -> "Poly2":
        terms: dict = {}
        for entry in data:
            key = (int(entry["u"]), int(entry["v"]))
            terms[key] = terms.get(key, 0) + _parse_frac(entry["c"])
        return cls(terms)


class PolyX(_SparsePoly):
    """Polynomial in the single variable x = uv."""

    __slots__ = ()
    _arity = 1

    @classmethod
    def x(cls) -> "PolyX":
        return cls({(1,): 1})

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Number]) -> "PolyX":
        """Build from ascending coefficients c_0, c_1, ..."""
        return cls({(i,): c for i, c in enumerate(coeffs)})

    def eval(self, x0: Number) -> Fraction:
        x0 = Fraction(x0)
        return sum((c * x0**e for (e,), c in self._terms.items()), Fraction(0))

    def to_poly2(self) -> Poly2:
        return Poly2._raw({(e, e): c for (e,), c in self._terms.items()})

    def sorted_terms(self) -> list[tuple[int, Fraction]]:
        return sorted(((e, c) for (e,), c in self._terms.items()), reverse=True)

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("degree of the zero polynomial")
        return max(e for (e,) in self._terms)

    def leading_total(self) -> tuple[int, Fraction]:
        if not self._terms:
            raise ValueError("leading term of the zero polynomial")
        d = self.degree()
        return d, self._terms[(d,)]

    def to_text(self) -> str:
        return _render_text([(c, _mono_text((("x", e),))) for e, c in self.sorted_terms()])

    def to_latex(self) -> str:
        return _render_latex([(c, _mono_latex((("x", e),))) for e, c in self.sorted_terms()])

    def to_json(self) -> list[dict]:
        return [{"x": e, "c": _frac_str(c)} for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: Sequence[Mapping]) -> "PolyX":
        terms: dict = {}
        for entry in data:
            key = (int(entry["x"]),)
            terms[key] = terms.get(key, 0) + _parse_frac(entry["c"])
        return cls(terms)


def to_x_form(p: Poly2) -> PolyX:
    return p.to_x_form()


def leading_total(p: PolyX) -> tuple[int, Fraction]:
    return p.leading_total()


def substitute_powers(p, h: int):
    return p.substitute_powers(h)


def eval_poly(p: Poly2, u0: Number, v0: Number) -> Fraction:
    return p.eval(u0, v0)


# -- rendering ---------------------------------------------------------------


def _frac_str(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def _parse_frac(s) -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise ValueError(f"coefficient must be a 'num/den' string, got {s!r}")
    c = Fraction(s.strip())
    return c


def _mono_text(powers) -> str:
    return "".join(name if e == 1 else f"{name}^{e}" for name, e in powers if e)


def _mono_latex(powers) -> str:
    return " ".join(name if e == 1 else f"{name}^{{{e}}}" for name, e in powers if e)


def _render_text(terms: list[tuple[Fraction, str]]) -> str:
    if not terms:
        return "0"
    out = []
    for i, (c, mono) in enumerate(terms):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        elif a.denominator == 1:
            body = f"{a}{mono}"
        else:
            body = f"({a}){mono}"
        if i == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def _latex_coeff(a: Fraction) -> str:
    if a.denominator == 1:
        return str(a.numerator)
    return f"\\frac{{{a.numerator}}}{{{a.denominator}}}"


def _render_latex(terms: list[tuple[Fraction, str]]) -> str:
    if not terms:
        return "0"
    out = []
    for i, (c, mono) in enumerate(terms):
        a = abs(c)
        if not mono:
            body = _latex_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_latex_coeff(a)} {mono}"
        if i == 0:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f" {'-' if c < 0 else '+'} {body}")
    return "".join(out)


# -- truncated series ----------------------------------------------------------


class TruncSeries:
    """Power series sum_n coeffs[n] t^n, known exactly through t^order.

    Binary operations on series of different orders truncate to the smaller
    order; the result's ``order`` records what is actually known.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence[Poly2], order: int | None = None):
        coeffs = [_as_poly2(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("series order must be non-negative")
        coeffs = coeffs[: order + 1]
        coeffs += [Poly2.zero()] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, order: int) -> "TruncSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls([Poly2.one()], order)

    @classmethod
    def monomial(cls, coeff, power: int, order: int) -> "TruncSeries":
        return cls([Poly2.zero()] * power + [coeff], order)

    def __getitem__(self, n: int) -> Poly2:
        return self.coeff(n)

    def coeff(self, n: int) -> Poly2:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient t^{n} is outside truncation order {self.order}")
        return self.coeffs[n]

    def constant_term(self) -> Poly2:
        return self.coeffs[0]

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series known to order {self.order} to {order}")
        return TruncSeries(self.coeffs, order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        n = min(self.order, other.order)
        return TruncSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n)

    def __neg__(self) -> "TruncSeries":
        return TruncSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        return self + (-other)

    def scale(self, c) -> "TruncSeries":
        return TruncSeries([p * c for p in self.coeffs], self.order)

    def __mul__(self, other) -> "TruncSeries":
        if isinstance(other, (int, Fraction, Poly2)):
            return self.scale(other)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            acc = Poly2.zero()
            for i in range(k + 1):
                if a[i] and b[k - i]:
                    acc = acc + a[i] * b[k - i]
            out.append(acc)
        return TruncSeries(out, n)

    __rmul__ = __mul__

    def substitute_powers(self, h: int) -> "TruncSeries":
        """f(u^h, v^h, t^h), kept to the same order."""
        out = [Poly2.zero()] * (self.order + 1)
        for i, c in enumerate(self.coeffs):
            if i * h > self.order:
                break
            out[i * h] = c.substitute_powers(h)
        return TruncSeries(out, self.order)

    def map_coeffs(self, fn: Callable[[Poly2], Poly2]) -> "TruncSeries":
        return TruncSeries([fn(c) for c in self.coeffs], self.order)

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: Mapping) -> "TruncSeries":
        coeffs = [Poly2.from_json(c) for c in data["coeffs"]]
        return cls(coeffs, data.get("order"))

    def __repr__(self) -> str:
        body = " + ".join(f"({c})t^{i}" for i, c in enumerate(self.coeffs) if c) or "0"
        return f"TruncSeries({body}, order={self.order})"


def _as_poly2(c) -> Poly2:
    if isinstance(c, Poly2):
        return c
    if isinstance(c, PolyX):
        return c.to_poly2()
    if isinstance(c, (int, Fraction)):
        return Poly2.constant(c)
    raise TypeError(f"cannot use {type(c).__name__} as a series coefficient")


def s_add(s1: TruncSeries, s2: TruncSeries) -> TruncSeries:
    return s1 + s2


def s_mul(s1: TruncSeries, s2: TruncSeries) -> TruncSeries:
    return s1 * s2


def s_coeff(s: TruncSeries, n: int) -> Poly2:
    return s.coeff(n)


def s_exp(s: TruncSeries) -> TruncSeries:
    """exp of a series with zero constant term.

    Uses n*E_n = sum_{k=1..n} k*F_k*E_{n-k}, which follows from E' = F'E.
    """
    if s.coeffs[0]:
        raise SeriesDomainError("s_exp", "0", s.coeffs[0])
    N = s.order
    f = s.coeffs
    e = [Poly2.one()]
    for n in range(1, N + 1):
        acc = Poly2.zero()
        for k in range(1, n + 1):
            if f[k] and e[n - k]:
                acc = acc + (f[k] * e[n - k]).scale(k)
        e.append(acc.scale(Fraction(1, n)))
    return TruncSeries(e, N)


def s_log(s: TruncSeries) -> TruncSeries:
    """log of a series with constant term 1 (inverse of :func:`s_exp`)."""
    if s.coeffs[0] != Poly2.one():
        raise SeriesDomainError("s_log", "1", s.coeffs[0])
    N = s.order
    a = s.coeffs
    out = [Poly2.zero()]
    for n in range(1, N + 1):
        acc = Poly2.zero()
        for k in range(1, n):
            if out[k] and a[n - k]:
                acc = acc + (out[k] * a[n - k]).scale(k)
        out.append(a[n] - acc.scale(Fraction(1, n)))
    return TruncSeries(out, N)


# -- JSON helpers ---------------------------------------------------------------


def dumps(obj) -> str:
    """Byte-stable JSON for Poly2, PolyX or TruncSeries."""
    return json.dumps(obj.to_json(), sort_keys=True, separators=(",", ":"))


def loads_poly2(text: str) -> Poly2:
    return Poly2.from_json(json.loads(text))


def loads_polyx(text: str) -> PolyX:
    return PolyX.from_json(json.loads(text))


def loads_series(text: str) -> TruncSeries:
    return TruncSeries.from_json(json.loads(text))
