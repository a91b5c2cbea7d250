"""Named reproduction checks, runnable from the command line.

Each check returns a detail string: empty on success, otherwise a
description of the mismatch (a difference polynomial, a count, ...).
Failures are data; only the exit status of the CLI reflects them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd
from typing import Callable, Iterator

from . import charvar as cv
from .partitions import Partition, enum_partitions, enum_rect_partitions, fibers_of_glue, glue
from .plethystic import (
    pexp,
    pexp_linear_partitions,
    pexp_linear_product,
    pexp_rect,
    plog,
    series_from_b,
    sym_series,
)
from .polycore import BalanceError, Poly2, PolyX, TruncSeries

DEFAULT_SEED = 0
SUITES = ("combinatorics", "plethystic", "abelian", "gl2", "gl3", "cartan")


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    detail: str = ""

    def __post_init__(self):
        if self.status not in ("pass", "fail"):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == "fail" and not self.detail:
            raise ValueError("a failing check needs a detail")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        out = {"name": self.name, "status": self.status}
        if self.detail:
            out["detail"] = self.detail
        return out


# -- random inputs ----------------------------------------------------------------------


def random_poly2(rng: random.Random, max_deg: int = 3, coeff: int = 3, max_terms: int = 4) -> Poly2:
    """Random Poly2 of total degree <= max_deg with integer coefficients in [-coeff, coeff]."""
    monos = [(p, q) for p in range(max_deg + 1) for q in range(max_deg + 1 - p)]
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[rng.choice(monos)] = rng.randint(-coeff, coeff)
    return Poly2(terms)


def random_polyx(rng: random.Random, max_deg: int = 3, coeff: int = 3) -> PolyX:
    return PolyX.from_coeffs(rng.randint(-coeff, coeff) for _ in range(max_deg + 1))


def random_series(rng: random.Random, order: int, constant: int = 0, max_deg: int = 2) -> TruncSeries:
    coeffs = [Poly2.constant(constant)]
    coeffs += [random_poly2(rng, max_deg=max_deg, max_terms=3) for _ in range(order)]
    return TruncSeries(coeffs, order)


def distinct_random_b(rng: random.Random, count: int) -> list[PolyX]:
    """count pairwise distinct nonzero polynomials in x."""
    out: list[PolyX] = []
    while len(out) < count:
        p = random_polyx(rng)
        if p and p not in out:
            out.append(p)
    return out


# -- sweeps ------------------------------------------------------------------------------


def gl2_sweep() -> dict[str, list[cv.GroupSpec]]:
    return {
        "free": [cv.FreeGroup(s + 1) for s in range(0, 6)],
        "surface": [cv.SurfaceGroup(g) for g in range(1, 5)],
        "nonorientable": [cv.NonOrientable(k) for k in range(2, 7)],
        "torusknot": [
            cv.TorusKnot(a, b) for a in range(2, 10) for b in range(2, 10) if gcd(a, b) == 1
        ],
    }


GL3_GENERA = (2, 3, 4)


# -- helpers ------------------------------------------------------------------------------


def _mismatch(label: str, got, expected) -> str:
    return "" if got == expected else f"{label}: got {got}, expected {expected}"


def _join(details) -> str:
    return "; ".join(d for d in details if d)


def _x(p: PolyX, h: int) -> PolyX:
    return p.substitute_powers(h)


# -- combinatorics ---------------------------------------------------------------------------

KNOWN_FIBERS = {
    3: {"[3]": 1, "[1 2]": 1, "[1^3]": 3},
    4: {"[4]": 1, "[1 3]": 1, "[2^2]": 2, "[1^2 2]": 2, "[1^4]": 5},
}


def rect_count_series(N: int) -> list[int]:
    """Coefficients of prod_{l,h>=1} 1/(1 - t^{lh}) through t^N, by direct series multiplication."""
    coeffs = [1] + [0] * N
    for l in range(1, N + 1):
        for h in range(1, N // l + 1):
            step = l * h
            # multiply by 1/(1 - t^step)
            for i in range(step, N + 1):
                coeffs[i] += coeffs[i - step]
    return coeffs


def _combinatorics(seed: int) -> Iterator[tuple[str, Callable[[], str]]]:
    for n, expected in ((1, 1), (2, 3), (3, 5), (4, 11)):
        yield f"|RP_{n}| = {expected}", lambda n=n, e=expected: _mismatch(
            f"|RP_{n}|", len(enum_rect_partitions(n)), e
        )
    for n, sizes in KNOWN_FIBERS.items():

        def check(n=n, sizes=sizes):
            got = {str(p): len(f) for p, f in fibers_of_glue(n).items()}
            return _mismatch(f"fiber sizes n={n}", got, sizes)

        yield f"glue fiber sizes n={n}", check

    def gf():
        N = 8
        expected = rect_count_series(N)
        got = [1] + [len(enum_rect_partitions(n)) for n in range(1, N + 1)]
        return _mismatch("|RP_n| vs product expansion", got, expected)

    yield "|RP_n| generating function through t^8", gf

    def weights():
        bad = []
        for n in range(1, 13):
            ps = enum_partitions(n)
            if len(set(ps)) != len(ps):
                bad.append(f"duplicate partitions at n={n}")
            if n <= 9:
                rps = enum_rect_partitions(n)
                if len(set(rps)) != len(rps):
                    bad.append(f"duplicate rectangular partitions at n={n}")
                if {glue(r) for r in rps} != set(ps):
                    bad.append(f"glue not surjective at n={n}")
        return _join(bad)

    yield "enumerations duplicate-free, glue surjective", weights


# -- plethystic -------------------------------------------------------------------------------


def gl_example_terms(b: list[PolyX]) -> dict[int, dict[str, PolyX]]:
    """The written-out strata for GL_2, GL_3, GL_4 in terms of B_1..B_4."""
    B1, B2, B3, B4 = b[:4]
    return {
        2: {
            "[2]": B2,
            "[1^2]": _x(B1, 2) / 2 + B1**2 / 2,
        },
        3: {
            "[3]": B3,
            "[1 2]": B2 * B1,
            "[1^3]": _x(B1, 3) / 3 + _x(B1, 2) * B1 / 2 + B1**3 / 6,
        },
        4: {
            "[4]": B4,
            "[1 3]": B3 * B1,
            "[2^2]": B2**2 / 2 + _x(B2, 2) / 2,
            "[1^2 2]": B2 * _x(B1, 2) / 2 + B2 * B1**2 / 2,
            "[1^4]": _x(B1, 4) / 4 + _x(B1, 3) * B1 / 3 + _x(B1, 2) ** 2 / 8 + _x(B1, 2) * B1**2 / 4 + B1**4 / 24,
        },
    }


def check_gl_examples(b: list[PolyX]) -> str:
    bad = []
    written = gl_example_terms(b)
    full = cv.assemble_full_series(b, 4)
    via_pexp = pexp(series_from_b([p.to_poly2() for p in b], 4))
    for n, terms in written.items():
        total = PolyX.zero()
        for m in enum_partitions(n):
            got = cv.stratum_epoly(b, m)
            bad.append(_mismatch(f"n={n} stratum {m}", got, terms[str(m)]))
            total = total + got
        bad.append(_mismatch(f"n={n} stratum sum", total, full.coeff(n).to_x_form()))
        bad.append(_mismatch(f"n={n} pexp coefficient", via_pexp.coeff(n).to_x_form(), total))
    return _join(bad)


def _plethystic(seed: int) -> Iterator[tuple[str, Callable[[], str]]]:
    def three_path():
        rng = random.Random(seed)
        bad = []
        for i in range(100):
            g = random_poly2(rng)
            a = pexp(TruncSeries.monomial(g, 1, 6))
            b = pexp_linear_product(g, 6)
            c = pexp_linear_partitions(g, 6)
            if not a == b == c:
                bad.append(f"g={g}")
        return _join(bad)

    yield f"three-path PExp agreement, N=6, seed {seed}", three_path

    def rect():
        rng = random.Random(seed + 1)
        bad = []
        for i in range(20):
            b = [random_poly2(rng) for _ in range(4)]
            if pexp_rect(b, 4) != pexp(series_from_b(b, 4)):
                bad.append(f"b={[str(p) for p in b]}")
        return _join(bad)

    yield f"rectangular closed form vs PExp, N=4, seed {seed}", rect

    def roundtrip():
        rng = random.Random(seed + 2)
        bad = []
        for i in range(100):
            f = random_series(rng, 8)
            if plog(pexp(f)) != f:
                bad.append(f"plog(pexp(f)) != f for {f}")
            s = random_series(rng, 8, constant=1)
            if pexp(plog(s)) != s:
                bad.append(f"pexp(plog(s)) != s for {s}")
        return _join(bad)

    yield f"plog/pexp roundtrip, N=8, seed {seed}", roundtrip

    def cstar():
        s = sym_series(Poly2.uv() - 1, 8)
        uv = Poly2.uv()
        return _join(
            _mismatch(f"t^{n}", s.coeff(n), uv ** (n - 1) * (uv - 1)) for n in range(1, 9)
        )

    yield "Sym^n(C*) = (uv)^(n-1)(uv-1), n <= 8", cstar

    def examples():
        rng = random.Random(seed + 3)
        return _join(check_gl_examples(distinct_random_b(rng, 4)) for _ in range(5))

    yield f"GL2/GL3/GL4 stratum examples, seed {seed}", examples

    def term_counts():
        return _join(
            _mismatch(f"terms for GL_{n}", len(enum_rect_partitions(n)), e) for n, e in ((2, 3), (3, 5), (4, 11))
        )

    yield "GL_n example term counts 3, 5, 11", term_counts


# -- abelian -----------------------------------------------------------------------------------


def _abelian(seed: int) -> Iterator[tuple[str, Callable[[], str]]]:
    def tower():
        bad = []
        for r in range(1, 5):
            spec = cv.FreeAbelian(r)
            s = sym_series(cv.b1(spec), 6)
            full = cv.assemble_full_series(cv.irreducible_tower(spec, 6), 6)
            for n in range(1, 7):
                formula = cv.abelian_stratum(spec, n)
                bad.append(_mismatch(f"r={r} n={n} vs PExp", formula, s.coeff(n).to_x_form()))
                bad.append(_mismatch(f"r={r} n={n} vs full series", formula, full.coeff(n).to_x_form()))
        return _join(bad)

    yield "Z^r tower: partition formula = PExp((x-1)^r t), r <= 4, n <= 6", tower

    def torsion():
        bad = []
        specs = [cv.NonOrientable(k) for k in range(2, 6)] + [cv.AbelianizationOnly(2, 3), cv.AbelianizationOnly(0, 5)]
        for spec in specs:
            s = sym_series(cv.b1(spec), 5)
            for n in range(1, 6):
                formula = cv.abelian_stratum(spec, n)
                stratum = cv.stratum_epoly([cv.b1(spec)] + [PolyX.zero()] * (n - 1), Partition.from_parts([1] * n))
                bad.append(_mismatch(f"{spec} n={n} vs PExp", formula, s.coeff(n).to_x_form()))
                bad.append(_mismatch(f"{spec} n={n} vs stratum", formula, stratum))
        return _join(bad)

    yield "abelian stratum with torsion = Sym^n of N(x-1)^r", torsion

    def gl2_values():
        x = PolyX.x()
        return _join(
            [
                _mismatch("torus knot n=2", cv.abelian_stratum(cv.TorusKnot(2, 3), 2), x**2 - x),
                *(
                    _mismatch(
                        f"F_{r} n=2",
                        cv.abelian_stratum(cv.FreeGroup(r), 2),
                        (x**2 - 1) ** r / 2 + (x - 1) ** (2 * r) / 2,
                    )
                    for r in range(1, 6)
                ),
                *(
                    _mismatch(
                        f"nonorientable k={k} n=2",
                        cv.abelian_stratum(cv.NonOrientable(k), 2),
                        (x - 1) ** (k - 1) * ((x + 1) ** (k - 1) + 2 * (x - 1) ** (k - 1)),
                    )
                    for k in range(2, 7)
                ),
            ]
        )

    yield "rank-2 abelian strata match the closed forms", gl2_values

    def euler():
        return _join(
            _mismatch(f"chi Z^{r} n={n}", cv.euler_char(cv.abelian_stratum(cv.FreeAbelian(r), n)), 0)
            for r in range(1, 5)
            for n in range(1, 7)
        )

    yield "abelian strata of Z^r have chi = 0", euler


# -- GL_2 ----------------------------------------------------------------------------------


def _describe(spec) -> str:
    if isinstance(spec, cv.FreeGroup):
        return f"s={spec.r - 1}"
    if isinstance(spec, cv.SurfaceGroup):
        return f"g={spec.g}"
    if isinstance(spec, cv.NonOrientable):
        return f"k={spec.k}"
    return f"(a,b)=({spec.a},{spec.b})"


def component_count_detail(spec) -> str:
    p = cv.printed_irr_gl2(spec)
    expected = cv.corollary_component_count(spec)
    if not p:
        return f"{_describe(spec)}: E(X^irr GL_2) = 0 (empty locus), expected {expected} components"
    got = cv.component_count(p)
    return "" if got == expected else f"{_describe(spec)}: leading coefficient {got}, expected {expected}"


def _gl2(seed: int) -> Iterator[tuple[str, Callable[[], str]]]:
    for family, specs in gl2_sweep().items():

        def closure(specs=specs):
            return _join(
                f"{_describe(s)}: difference {d}" for s in specs if (d := cv.gl2_difference(s))
            )

        yield f"GL2 derivation closure, {family}", closure

        def euler(specs=specs):
            return _join(
                f"{_describe(s)}: chi = {cv.euler_char(cv.printed_irr_gl2(s))}"
                for s in specs
                if cv.euler_char(cv.printed_irr_gl2(s)) != 0
            )

        yield f"GL2 chi(irr) = 0, {family}", euler

        def components(specs=specs):
            return _join(component_count_detail(s) for s in specs)

        yield f"GL2 component counts, {family}", components

        def integral(specs=specs):
            return _join(
                f"{_describe(s)} not integral"
                for s in specs
                if not (cv.printed_irr_gl2(s).is_integral() and cv.full_epoly_gl2(s).is_integral())
            )

        yield f"GL2 integrality, {family}", integral

        def reassemble(specs=specs):
            bad = []
            for s in specs:
                series = cv.assemble_full_series([cv.b1(s), cv.printed_irr_gl2(s)], 2)
                bad.append(_mismatch(_describe(s), series.coeff(2).to_x_form(), cv.full_epoly_gl2(s)))
            return _join(bad)

        yield f"GL2 PExp reassembly = full formula, {family}", reassemble


# -- GL_3 ----------------------------------------------------------------------------------


def _gl3(seed: int) -> Iterator[tuple[str, Callable[[], str]]]:
    def euler():
        return _join(
            _mismatch(f"g={g}", cv.euler_char(cv.irr_epoly_gl3_surface(g)), 0) for g in GL3_GENERA
        )

    yield "GL3 surface chi(irr) = 0, g = 2..4", euler

    def components():
        return _join(
            _mismatch(f"g={g}", cv.component_count(cv.irr_epoly_gl3_surface(g)), 1) for g in GL3_GENERA
        )

    yield "GL3 surface irr is irreducible (leading coefficient 1)", components

    def genus_one():
        got = cv.irr_epoly_gl3_surface(1)
        full = cv.epoly(cv.SurfaceGroup(1), 3)
        return _join(
            [
                _mismatch("g=1 irr", got, PolyX.zero()),
                _mismatch("g=1 full vs Z^2 abelian", full, cv.abelian_stratum(cv.FreeAbelian(2), 3)),
            ]
        )

    yield "GL3 surface g=1 collapses to 0 (no irreducibles for Z^2)", genus_one

    def strata_roundtrip():
        bad = []
        for g in GL3_GENERA:
            spec = cv.SurfaceGroup(g)
            b = cv.irreducible_tower(spec, 3)
            a = cv.assemble_full_series(b, 3)
            total = sum((cv.stratum_epoly(b, m) for m in enum_partitions(3)), PolyX.zero())
            bad.append(_mismatch(f"g={g} strata sum", total, a.coeff(3).to_x_form()))
            back = cv.extract_irreducible_series(a)
            bad.append(_mismatch(f"g={g} plog", [c.to_x_form() for c in back.coeffs[1:]], b))
            for m, p in cv.strata(spec, 3).items():
                if not p.is_integral():
                    bad.append(f"g={g} stratum {m} not integral")
        return _join(bad)

    yield "GL3 surface strata sum to the full series and plog recovers B_1..B_3", strata_roundtrip


# -- Cartan brane ---------------------------------------------------------------------------


def _cartan(seed: int) -> Iterator[tuple[str, Callable[[], str]]]:
    def sym_path():
        bad = []
        for g in range(1, 4):
            s = sym_series(cv.cartan_b1(g), 4)
            for n in range(1, 5):
                bad.append(_mismatch(f"g={g} n={n}", cv.cartan_brane(g, n), s.coeff(n)))
        return _join(bad)

    yield "Cartan brane = Sym^n of T*Jac, g <= 3, n <= 4", sym_path

    def n1():
        u, v = Poly2.u(), Poly2.v()
        return _join(
            _mismatch(f"g={g}", cv.cartan_brane(g, 1), (u * v) ** g * (1 - u) ** g * (1 - v) ** g)
            for g in range(1, 4)
        )

    yield "Cartan brane n=1 = (uv)^g(1-u)^g(1-v)^g", n1

    def unbalanced():
        bad = []
        for g in range(1, 4):
            for n in range(1, 5):
                try:
                    cv.cartan_brane(g, n).to_x_form()
                except BalanceError:
                    continue
                bad.append(f"g={g} n={n} is balanced")
        return _join(bad)

    yield "Cartan brane is not a polynomial in uv", unbalanced

    def euler():
        return _join(
            _mismatch(f"g={g} n={n}", cv.euler_char(cv.cartan_brane(g, n)), 0)
            for g in range(1, 4)
            for n in range(1, 5)
        )

    yield "Cartan brane chi = 0", euler


_SUITE_BUILDERS = {
    "combinatorics": _combinatorics,
    "plethystic": _plethystic,
    "abelian": _abelian,
    "gl2": _gl2,
    "gl3": _gl3,
    "cartan": _cartan,
}


def run_suite(which: str = "all", seed: int = DEFAULT_SEED) -> list[CheckResult]:
    """Run one suite (or all of them, in a fixed order) and collect results."""
    if which == "all":
        names = SUITES
    elif which in _SUITE_BUILDERS:
        names = (which,)
    else:
        raise ValueError(f"unknown suite {which!r}; choose from all, {', '.join(SUITES)}")
    results = []
    for suite in names:
        for name, check in _SUITE_BUILDERS[suite](seed):
            try:
                detail = check()
            except Exception as exc:  # a crashing check is a failing check
                detail = f"{type(exc).__name__}: {exc}"
            results.append(CheckResult(f"{suite}: {name}", "fail" if detail else "pass", detail))
    return results
