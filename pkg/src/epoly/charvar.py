"""E-polynomials of GL_n character varieties and their partition-type strata.

The known irreducible pieces B_n = E(X^irr GL_n) come from a small catalog
(rank one for every group, rank two for four families of groups, rank three
for orientable surface groups); everything else is assembled from them with
the plethystic machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd
from typing import Sequence, Union

from .partitions import Partition, enum_partitions, fiber
from .plethystic import pexp_rect, plog, rect_term
from .polycore import Poly2, PolyX, TruncSeries


class NotInCatalog(LookupError):
    """No formula is known for the requested group / rank / stratum."""


class DerivationMismatch(ArithmeticError):
    """A printed irreducible formula disagrees with full minus abelian stratum."""

    def __init__(self, what: str, difference: PolyX):
        self.difference = difference
        super().__init__(f"{what}: printed irreducible formula differs by {difference}")


class IntegralityError(ArithmeticError):
    pass


# -- groups ---------------------------------------------------------------------


@dataclass(frozen=True)
class FreeGroup:
    r: int

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("free group rank must be >= 1")

    def abelianization(self) -> tuple[int, int]:
        return self.r, 1

    def __str__(self) -> str:
        return f"F_{self.r}"


@dataclass(frozen=True)
class SurfaceGroup:
    g: int

    def __post_init__(self):
        if self.g < 1:
            raise ValueError("surface genus must be >= 1")

    def abelianization(self) -> tuple[int, int]:
        return 2 * self.g, 1

    def __str__(self) -> str:
        return f"Gamma_{self.g}"


@dataclass(frozen=True)
class NonOrientable:
    k: int

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("non-orientable genus must be >= 2")

    def abelianization(self) -> tuple[int, int]:
        return self.k - 1, 2

    def __str__(self) -> str:
        return f"hatGamma_{self.k}"


@dataclass(frozen=True)
class TorusKnot:
    a: int
    b: int

    def __post_init__(self):
        if self.a < 2 or self.b < 2:
            raise ValueError("torus knot parameters must be >= 2")
        if gcd(self.a, self.b) != 1:
            raise ValueError(f"torus knot parameters ({self.a}, {self.b}) must be coprime")

    def abelianization(self) -> tuple[int, int]:
        return 1, 1

    def normalized(self) -> tuple[int, int]:
        """(a, b) with b odd; the knot groups for (a, b) and (b, a) are isomorphic."""
        if self.b % 2 == 0:
            return self.b, self.a
        return self.a, self.b

    def __str__(self) -> str:
        return f"Gamma_{{{self.a},{self.b}}}"


@dataclass(frozen=True)
class FreeAbelian:
    r: int

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("free abelian rank must be >= 1")

    def abelianization(self) -> tuple[int, int]:
        return self.r, 1

    def __str__(self) -> str:
        return f"Z^{self.r}"


@dataclass(frozen=True)
class AbelianizationOnly:
    """A group known only through its abelianization Z^r + (finite group of order N)."""

    r: int
    N: int

    def __post_init__(self):
        if self.r < 0 or self.N < 1:
            raise ValueError("need r >= 0 and N >= 1")

    def abelianization(self) -> tuple[int, int]:
        return self.r, self.N

    def __str__(self) -> str:
        return f"Ab(Z^{self.r}+F_{self.N})"


GroupSpec = Union[FreeGroup, SurfaceGroup, NonOrientable, TorusKnot, FreeAbelian, AbelianizationOnly]


@dataclass(frozen=True)
class StratumLabel:
    """One of full / irr / abelian / partition=<parts>."""

    kind: str
    partition: Partition | None = None

    def __post_init__(self):
        if self.kind not in ("full", "irr", "abelian", "partition"):
            raise ValueError(f"unknown stratum kind {self.kind!r}")
        if (self.kind == "partition") != (self.partition is not None):
            raise ValueError("a partition is required exactly for kind='partition'")

    @classmethod
    def parse(cls, text: str) -> "StratumLabel":
        if text.startswith("partition="):
            return cls("partition", Partition.parse(text[len("partition="):]))
        return cls(text)

    def resolve(self, n: int) -> Partition | None:
        """The partition of n this label picks out, or None for the full variety."""
        if self.kind == "full":
            return None
        if self.kind == "irr":
            return Partition.from_parts([n])
        if self.kind == "abelian":
            return Partition.from_parts([1] * n)
        if self.partition.n != n:
            raise ValueError(f"partition {self.partition} is not a partition of {n}")
        return self.partition

    def __str__(self) -> str:
        return f"partition={','.join(map(str, self.partition.parts()))}" if self.partition else self.kind


# -- building blocks ----------------------------------------------------------------

X = PolyX.x()
ONE = PolyX.one()
HALF = Fraction(1, 2)


def _require_integral(p, what: str):
    if not p.is_integral():
        raise IntegralityError(f"{what} has non-integral coefficients: {p}")
    return p


def b1(spec: GroupSpec) -> PolyX:
    """E(X^irr GL_1) = N (x - 1)^r for abelianization Z^r + F_N."""
    r, N = spec.abelianization()
    return (X - 1) ** r * N


def abelian_stratum(spec: GroupSpec, n: int) -> PolyX:
    """E of the [1^n] stratum: sum_{[k]} prod_j N^{k_j} (x^j - 1)^{r k_j} / (k_j! j^{k_j})."""
    if n < 1:
        raise ValueError("n must be >= 1")
    r, N = spec.abelianization()
    total = PolyX.zero()
    for part in enum_partitions(n):
        term = ONE
        denom = 1
        for j, k in part.items():
            term = term * (X**j - 1) ** (r * k) * N**k
            denom *= factorial(k) * j**k
        total = total + term / denom
    return _require_integral(total, f"abelian stratum of {spec}, n={n}")


# -- GL_2 catalog -------------------------------------------------------------------
# Each function writes the polynomial with the grouping it is usually printed in.


def _full_free(s: int) -> PolyX:
    return (X - 1) ** (s + 1) * (
        (X**3 - X) ** s - (X**2 - X) ** s + X * ((X + 1) ** s + (X - 1) ** s) * HALF
    )


def _irr_free(s: int) -> PolyX:
    return (X - 1) ** (s + 1) * (
        (X - 1) ** s * X**s * ((X + 1) ** s - 1) - (X + 1) ** s * HALF + (X - 1) ** s * HALF
    )


def _full_surface(g: int) -> PolyX:
    c = 2 * g - 2
    return (X - 1) ** (c + 2) * (
        (X**2 - 1) ** c * (X**c + 1)
        + (X ** (c + 1) + X**2 + X) * HALF * (X + 1) ** c
        - (X ** (c + 1) - X**2 + X) * HALF * (X - 1) ** c
        - X**c
    )


def _irr_surface(g: int) -> PolyX:
    c = 2 * g - 2
    return (X - 1) ** (c + 2) * (
        (X**2 - 1) ** c * (X**c + 1)
        + (X ** (c + 1) - X - 1) * HALF * (X + 1) ** c
        - (X ** (c + 1) - X + 1) * HALF * (X - 1) ** c
        - X**c
    )


def _full_nonorientable(k: int) -> PolyX:
    h = k - 2
    return (X - 1) ** (h + 1) * (
        2 * (X**h + 1) * (X**2 - 1) ** h
        + X**h * (X - 1) * ((X - 1) ** h + (X + 1) ** h) * HALF
        + X * ((X + 1) ** h + 2 * (X - 1) ** h)
        - 4 * (X**2 - X) ** h
        - 2 * X**h
    )


def _irr_nonorientable(k: int) -> PolyX:
    h = k - 2
    return (X - 1) ** (h + 1) * (
        2 * (X**h + 1) * (X**2 - 1) ** h
        + X**h * (X - 1) * ((X - 1) ** h + (X + 1) ** h) * HALF
        + (2 - 4 * X**h) * (X - 1) ** h
        - (X + 1) ** h
        - 2 * X**h
    )


def _torus_bracket(a: int, b: int) -> PolyX:
    # a, b already normalized so that b is odd
    if a % 2:
        return (X - 2) * Fraction((a - 1) * (b - 1), 4)
    return (X * a - 3 * a + 4) * Fraction(b - 1, 4)


def _full_torus(a: int, b: int) -> PolyX:
    return (X - 1) * (X + _torus_bracket(a, b))


def _irr_torus(a: int, b: int) -> PolyX:
    return (X - 1) * _torus_bracket(a, b)


def full_epoly_gl2(spec: GroupSpec) -> PolyX:
    """E(X_Gamma GL_2) for free, surface, non-orientable surface and torus knot groups."""
    if isinstance(spec, FreeGroup):
        p = _full_free(spec.r - 1)
    elif isinstance(spec, SurfaceGroup):
        p = _full_surface(spec.g)
    elif isinstance(spec, NonOrientable):
        p = _full_nonorientable(spec.k)
    elif isinstance(spec, TorusKnot):
        p = _full_torus(*spec.normalized())
    else:
        raise NotInCatalog(f"no GL_2 formula for {spec}")
    return _require_integral(p, f"E(X GL_2) of {spec}")


def printed_irr_gl2(spec: GroupSpec) -> PolyX:
    """The closed form for E(X^irr GL_2), without the cross-check."""
    if isinstance(spec, FreeGroup):
        return _irr_free(spec.r - 1)
    if isinstance(spec, SurfaceGroup):
        return _irr_surface(spec.g)
    if isinstance(spec, NonOrientable):
        return _irr_nonorientable(spec.k)
    if isinstance(spec, TorusKnot):
        return _irr_torus(*spec.normalized())
    raise NotInCatalog(f"no GL_2 formula for {spec}")


def gl2_difference(spec: GroupSpec) -> PolyX:
    """printed irreducible - (full - abelian stratum); zero when the catalog is consistent."""
    return printed_irr_gl2(spec) - (full_epoly_gl2(spec) - abelian_stratum(spec, 2))


def irr_epoly_gl2(spec: GroupSpec) -> PolyX:
    """E(X^irr GL_2), computed twice (closed form and full minus abelian) and cross-checked."""
    diff = gl2_difference(spec)
    if diff:
        raise DerivationMismatch(f"GL_2 irreducible locus of {spec}", diff)
    return _require_integral(printed_irr_gl2(spec), f"E(X^irr GL_2) of {spec}")


def corollary_component_count(spec: GroupSpec) -> Fraction:
    """Number of irreducible components of X^irr GL_2 as stated for each family."""
    if isinstance(spec, (FreeGroup, SurfaceGroup)):
        return Fraction(1)
    if isinstance(spec, NonOrientable):
        return Fraction(2)
    if isinstance(spec, TorusKnot):
        a, b = spec.normalized()
        if a % 2:
            return Fraction((a - 1) * (b - 1), 4)
        return Fraction(a * (b - 1), 4)
    raise NotInCatalog(f"no component count for {spec}")


# -- GL_3, orientable surfaces ------------------------------------------------------


def irr_epoly_gl3_surface(g: int) -> PolyX:
    """E(X^irr GL_3) for the genus-g surface group.

    The closed form contains x^(c-2) with c = 2g - 2. At g = 1 both terms
    carrying it have a factor that vanishes identically (x^0 - 1 and
    x^-2 - x^-2), so they are dropped and the formula is still polynomial.
    """
    if g < 1:
        raise NotInCatalog(f"GL_3 surface formula needs genus >= 1, got {g}")
    c = 2 * g - 2
    if c >= 2:
        laurent = (X - 1) ** c * (X**c - 1) * (X ** (c - 2) + X ** (c + 1) - 2) + (X - 1) ** (c + 2) * (
            X ** (2 * c - 2) - X ** (c - 2)
        )
    else:
        laurent = PolyX.zero()
    bracket = (
        (X - 1) ** (2 * c + 2) * (X ** (3 * c) - X ** (c + 1) * HALF - (X + 1) ** c * (X**c + 1) + Fraction(1, 3))
        + (X - 1) ** (2 * c + 1) * (X - 2 * X ** (2 * c)) * (X**c * (X - 2) * HALF + (X + 1) ** c * (X**c + 1))
        + (X - 1) ** (2 * c) * (X**2 + X + 1) ** c * ((X + 1) ** c * (X ** (3 * c) + 1) + X ** (2 * c))
        + (X - 1) ** (2 * c) * (X - 2) * X ** (2 * c) * ((X + 1) ** c * (X**c + 1) + X**c * (X - 3) / 6)
        + (X - 1) ** (c + 1) * (X + 1) ** c * HALF * (X ** (c + 1) - X ** (3 * c + 1))
        + laurent
        + (X**2 + X + 1) ** c / 3 * (X ** (3 * c + 1) * (X + 1) - (X**2 + X + 1))
        - X ** (3 * c)
    )
    p = (X - 1) ** (c + 2) * bracket
    _require_integral(p, f"E(X^irr GL_3) of Gamma_{g}")
    if p.eval(1) != 0:
        raise ArithmeticError(f"GL_3 genus {g}: Euler characteristic {p.eval(1)} is not zero")
    if p and p.leading_total()[1] != 1:
        raise ArithmeticError(f"GL_3 genus {g}: leading coefficient {p.leading_total()[1]} is not 1")
    return p


# -- irreducible tower and strata ------------------------------------------------------


def irreducible_epoly(spec: GroupSpec, n: int) -> PolyX:
    """B_n = E(X^irr GL_n) when a formula is available."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return b1(spec)
    if isinstance(spec, FreeAbelian):
        # abelian groups have no irreducible representations of rank > 1
        return PolyX.zero()
    if n == 2 and not isinstance(spec, AbelianizationOnly):
        return irr_epoly_gl2(spec)
    if n == 3 and isinstance(spec, SurfaceGroup):
        return irr_epoly_gl3_surface(spec.g)
    raise NotInCatalog(f"E(X^irr GL_{n}) is not known for {spec}")


def irreducible_tower(spec: GroupSpec, n_max: int) -> list[PolyX]:
    return [irreducible_epoly(spec, n) for n in range(1, n_max + 1)]


def _x_series(s: TruncSeries) -> list[PolyX]:
    return [c.to_x_form() for c in s.coeffs]


def assemble_full_series(b: Sequence[PolyX], N: int) -> TruncSeries:
    """sum_n E(X GL_n) t^n = PExp(sum_n B_n t^n), through t^N."""
    return pexp_rect([p.to_poly2() if isinstance(p, PolyX) else p for p in b], N)


def extract_irreducible_series(a: TruncSeries) -> TruncSeries:
    """Inverse of :func:`assemble_full_series`: B_n from the full E-polynomials A_n."""
    return plog(a)


def stratum_epoly(b: Sequence, m: Partition):
    """E of the [m] stratum: sum over rectangular partitions gluing to m.

    ``b`` lists B_1, B_2, ... (at least up to the largest part of m). PolyX in
    gives PolyX out; Poly2 in gives Poly2 out.
    """
    if len(b) < m.max_part():
        raise ValueError(f"stratum {m} needs B_1..B_{m.max_part()}, got {len(b)}")
    x_form = all(isinstance(p, PolyX) for p in b)
    bb = [None] + [p.to_poly2() if isinstance(p, PolyX) else p for p in b]
    total = Poly2.zero()
    for rp in fiber(m):
        total = total + rect_term(bb, rp)
    return total.to_x_form() if x_form else total


def epoly(spec: GroupSpec, n: int, stratum: StratumLabel = StratumLabel("full")) -> PolyX:
    """E-polynomial of the full variety or one stratum of X_Gamma GL_n."""
    m = stratum.resolve(n)
    if m is None:
        b = irreducible_tower(spec, n)
        p = assemble_full_series(b, n).coeff(n).to_x_form()
    elif stratum.kind == "irr":
        p = irreducible_epoly(spec, n)
    elif stratum.kind == "abelian":
        p = abelian_stratum(spec, n)
    else:
        p = stratum_epoly(irreducible_tower(spec, m.max_part()), m)
    return _require_integral(p, f"stratum {stratum} of {spec}, n={n}")


def strata(spec: GroupSpec, n: int) -> dict[Partition, PolyX]:
    """Every partition-type stratum of X_Gamma GL_n."""
    b = irreducible_tower(spec, n)
    return {m: _require_integral(stratum_epoly(b, m), f"stratum {m}") for m in enum_partitions(n)}


# -- Cartan brane ---------------------------------------------------------------------


def cartan_b1(g: int) -> Poly2:
    """E(T^* Jac) = (uv)^g (1-u)^g (1-v)^g."""
    u, v = Poly2.u(), Poly2.v()
    return (u * v) ** g * (1 - u) ** g * (1 - v) ** g


def cartan_brane(g: int, n: int) -> Poly2:
    """sum_{[k] in P_n} prod_j ((u^j - u^{2j})(v^j - v^{2j}))^{k_j g} / (k_j! j^{k_j})."""
    if g < 1 or n < 1:
        raise ValueError("need g >= 1 and n >= 1")
    u, v = Poly2.u(), Poly2.v()
    total = Poly2.zero()
    for part in enum_partitions(n):
        term = Poly2.one()
        denom = 1
        for j, k in part.items():
            term = term * ((u**j - u ** (2 * j)) * (v**j - v ** (2 * j))) ** (k * g)
            denom *= factorial(k) * j**k
        total = total + term / denom
    return _require_integral(total, f"Cartan brane g={g}, n={n}")


# -- invariants -----------------------------------------------------------------------


def euler_char(p) -> Fraction:
    """Compactly supported Euler characteristic, E at u = v = 1."""
    if isinstance(p, PolyX):
        return p.eval(1)
    return p.eval(1, 1)


def component_count(p: PolyX) -> Fraction:
    """Number of top-dimensional irreducible components: the leading coefficient."""
    return p.leading_total()[1]
