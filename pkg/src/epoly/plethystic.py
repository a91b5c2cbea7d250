"""Adams operator, plethystic exponential/logarithm and their closed forms.

PExp(f) = exp(Psi(f)), with Psi(f)(u, v, t) = sum_{l>=1} f(u^l, v^l, t^l) / l.
Four independent routes to PExp live here (exp of Psi, the infinite
product, the partition sum and the rectangular-partition sum); tests check
them against one another.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Sequence

from .partitions import enum_partitions, enum_rect_partitions
from .polycore import Poly2, PolyX, SeriesDomainError, TruncSeries, s_exp, s_log


class ClosedFormMismatch(RuntimeError):
    """The divisor-sum and rectangular-partition closed forms disagree (an internal bug)."""

    def __init__(self, n: int, difference: Poly2):
        self.n = n
        self.difference = difference
        super().__init__(f"closed forms disagree at t^{n}; difference {difference}")


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius is defined for n >= 1")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def _coerce(c) -> Poly2:
    if isinstance(c, PolyX):
        return c.to_poly2()
    if isinstance(c, (int, Fraction)):
        return Poly2.constant(c)
    return c


def _twist_sum(f: TruncSeries, weight) -> TruncSeries:
    # sum_l weight(l) * f(u^l, v^l, t^l); only l <= order can reach a t-power <= order
    N = f.order
    out = [Poly2.zero() for _ in range(N + 1)]
    for l in range(1, N + 1):
        w = weight(l)
        if not w:
            continue
        for i in range(1, N // l + 1):
            c = f.coeffs[i]
            if c:
                out[i * l] = out[i * l] + c.substitute_powers(l).scale(w)
    return TruncSeries(out, N)


def adams(f: TruncSeries) -> TruncSeries:
    """Psi(f) = sum_{l>=1} f(u^l, v^l, t^l) / l, truncated at f's order."""
    if f.coeffs[0]:
        raise SeriesDomainError("adams", "0", f.coeffs[0])
    return _twist_sum(f, lambda l: Fraction(1, l))


def adams_inverse(g: TruncSeries) -> TruncSeries:
    """Psi^{-1}(g) = sum_{l>=1} mu(l)/l * g(u^l, v^l, t^l)."""
    if g.coeffs[0]:
        raise SeriesDomainError("adams_inverse", "0", g.coeffs[0])
    return _twist_sum(g, lambda l: Fraction(mobius(l), l))


def pexp(f: TruncSeries) -> TruncSeries:
    return s_exp(adams(f))


def plog(s: TruncSeries) -> TruncSeries:
    if s.coeffs[0] != Poly2.one():
        raise SeriesDomainError("plog", "1", s.coeffs[0])
    return adams_inverse(s_log(s))


def _binomial_series(a: Fraction, mono: tuple[int, int], N: int) -> list[Poly2]:
    # (1 - u^p v^q t)^(-a) = sum_k (a)_k / k! (u^p v^q)^k t^k, with (a)_k the rising factorial
    p, q = mono
    out = [Poly2.one()]
    coef = Fraction(1)
    for k in range(1, N + 1):
        coef = coef * (a + k - 1) / k
        if not coef:
            out.extend(Poly2.zero() for _ in range(k, N + 1))
            break
        out.append(Poly2({(p * k, q * k): coef}))
    return out


def pexp_linear_product(g, N: int) -> TruncSeries:
    """PExp(g t) as prod_{p,q} (1 - u^p v^q t)^(-a_{p,q}), g = sum a_{p,q} u^p v^q."""
    g = _coerce(g)
    result = TruncSeries.one(N)
    for mono, a in g.items():
        result = result * TruncSeries(_binomial_series(a, mono, N), N)
    return result


def pexp_linear_partitions(g, N: int) -> TruncSeries:
    """PExp(g t) with t^n coefficient sum_{[k] in P_n} prod_j g(u^j,v^j)^{k_j} / (k_j! j^{k_j})."""
    g = _coerce(g)
    twists = [None] + [g.substitute_powers(j) for j in range(1, N + 1)]
    coeffs = [Poly2.one()]
    for n in range(1, N + 1):
        acc = Poly2.zero()
        for part in enum_partitions(n):
            term = Poly2.one()
            denom = 1
            for j, k in part.items():
                term = term * twists[j] ** k
                denom *= factorial(k) * j**k
            acc = acc + term.scale(Fraction(1, denom))
        coeffs.append(acc)
    return TruncSeries(coeffs, N)


def _check_b(b: Sequence, N: int) -> list[Poly2]:
    if len(b) < N:
        raise ValueError(f"need b_1..b_{N}, got {len(b)} polynomials")
    return [None] + [_coerce(x) for x in b[:N]]


def rect_term(b: Sequence[Poly2], rp) -> Poly2:
    """prod_{l,h} b_l(u^h, v^h)^{k_{l,h}} / (k_{l,h}! h^{k_{l,h}}); b is 1-indexed (b[0] unused)."""
    term = Poly2.one()
    denom = 1
    for (l, h), k in rp.mult:
        term = term * b[l].substitute_powers(h) ** k
        denom *= factorial(k) * h**k
    return term.scale(Fraction(1, denom))


def rect_closed_form(b: Sequence, N: int) -> TruncSeries:
    """a_n as a sum over rectangular partitions of n."""
    bb = _check_b(b, N)
    coeffs = [Poly2.one()]
    for n in range(1, N + 1):
        acc = Poly2.zero()
        for rp in enum_rect_partitions(n):
            acc = acc + rect_term(bb, rp)
        coeffs.append(acc)
    return TruncSeries(coeffs, N)


def divisor_closed_form(b: Sequence, N: int) -> TruncSeries:
    """a_n = sum_{[k] in P_n} prod_j C_j^{k_j} / k_j!, with C_j = sum_{d|j} b_d(u^{j/d}, v^{j/d}) / (j/d)."""
    bb = _check_b(b, N)
    C = [None]
    for j in range(1, N + 1):
        acc = Poly2.zero()
        for d in range(1, j + 1):
            if j % d == 0 and bb[d]:
                acc = acc + bb[d].substitute_powers(j // d).scale(Fraction(d, j))
        C.append(acc)
    coeffs = [Poly2.one()]
    for n in range(1, N + 1):
        acc = Poly2.zero()
        for part in enum_partitions(n):
            term = Poly2.one()
            denom = 1
            for j, k in part.items():
                term = term * C[j] ** k
                denom *= factorial(k)
            acc = acc + term.scale(Fraction(1, denom))
        coeffs.append(acc)
    return TruncSeries(coeffs, N)


def pexp_rect(b: Sequence, N: int) -> TruncSeries:
    """PExp(sum_l b_l t^l) through t^N via both closed forms, which must agree."""
    rect = rect_closed_form(b, N)
    div = divisor_closed_form(b, N)
    for n in range(N + 1):
        if rect.coeffs[n] != div.coeffs[n]:
            raise ClosedFormMismatch(n, rect.coeffs[n] - div.coeffs[n])
    return rect


def series_from_b(b: Sequence, N: int) -> TruncSeries:
    """sum_{l=1..N} b_l t^l as a series of order N."""
    bb = _check_b(b, N)
    return TruncSeries([Poly2.zero()] + bb[1:], N)


def sym_series(E_X, N: int) -> TruncSeries:
    """Generating series of E(Sym^n X): PExp(E(X) t)."""
    return pexp(TruncSeries.monomial(_coerce(E_X), 1, N))
