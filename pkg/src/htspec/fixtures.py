"""Built-in reference data: three 3-uniform hypertrees whose full
characteristic polynomials are known in factored form, plus the
cross-validation probes run by ``htspec check-paper``.

H1 is the 3-comb on 9 vertices, H2 a 9-vertex power tree, and H3 the
11-vertex hypertree obtained by overlaying the two.  Each factorization
is stored as an x-power prefactor plus (alpha-form base, multiplicity)
pairs; nothing is expanded at rest, since the expanded H3 polynomial has
x-degree 11264.  The factored data is exactly what the divisibility and
spectrum probes validate the library against.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import UniformHypergraph, build, comb
from .errors import MismatchReport, UnknownFixture
from .matching import (
    AlphaPolynomial,
    ONE,
    alpha_poly,
    alpha_str,
    poly_divmod,
    poly_mul,
    poly_pow,
    x_str,
)
from .spectra import (
    DEFAULT_ROOT_TOL,
    DEFAULT_SEED,
    DEFAULT_SET_TOL,
    alpha_roots,
    lift_to_x,
    set_spectrum,
)
from .subtrees import distinct_matching_polynomials

FIXTURE_NAMES = ("H1", "H2", "H3")


@dataclass(frozen=True)
class CharPolyFactorization:
    """Factored characteristic polynomial of one reference hypertree.

    Total x-degree must equal n(k-1)^(n-1); each base is stored in
    alpha = x^k form, so its x-degree is k times its alpha degree.
    """

    name: str
    k: int
    n: int
    x_power: int
    factors: tuple[tuple[AlphaPolynomial, int], ...]

    def total_x_degree(self) -> int:
        return self.x_power + sum(
            self.k * base.degree * mult for base, mult in self.factors
        )

    def expanded_nonzero_part(self) -> AlphaPolynomial:
        """Product of the bases with multiplicity, in alpha (x^power left out)."""
        acc = ONE
        for base, mult in self.factors:
            acc = poly_mul(acc, poly_pow(base, mult))
        return acc


_FIXTURES = {
    "H1": CharPolyFactorization(
        name="H1",
        k=3,
        n=9,
        x_power=567,
        factors=(
            (alpha_poly([-1, 3, -4, 1]), 81),
            (alpha_poly([1, -3, 1]), 81),
            (alpha_poly([-2, 1]), 27),
            (alpha_poly([-1, 1]), 147),
        ),
    ),
    "H2": CharPolyFactorization(
        name="H2",
        k=3,
        n=9,
        x_power=999,
        factors=(
            (alpha_poly([2, -4, 1]), 81),
            (alpha_poly([1, -3, 1]), 54),
            (alpha_poly([-3, 1]), 27),
            (alpha_poly([-2, 1]), 63),
            (alpha_poly([-1, 1]), 75),
        ),
    ),
    "H3": CharPolyFactorization(
        name="H3",
        k=3,
        n=11,
        x_power=3767,
        factors=(
            (alpha_poly([-2, 5, -5, 1]), 243),
            (alpha_poly([-1, 3, -4, 1]), 162),
            (alpha_poly([2, -4, 1]), 162),
            (alpha_poly([1, -3, 1]), 135),
            (alpha_poly([-3, 1]), 27),
            (alpha_poly([-2, 1]), 180),
            (alpha_poly([-1, 1]), 483),
        ),
    ),
}


def fixture(name: str) -> CharPolyFactorization:
    """Look up a reference factorization by name (H1, H2 or H3)."""
    try:
        return _FIXTURES[name.upper()]
    except KeyError:
        raise UnknownFixture(
            f"unknown fixture {name!r}; choose from {FIXTURE_NAMES}"
        ) from None


@lru_cache(maxsize=None)
def hypergraph(name: str) -> UniformHypergraph:
    """The hypertree a fixture describes.

    H2 is encoded on its 9 actual vertices (the conventional display
    uses labels up to 11 with two gaps), so counts and degrees line up
    with the factorization's total degree 9 * 2^8.
    """
    key = name.upper()
    if key == "H1":
        return comb(3)
    if key == "H2":
        return build(3, 9, [[1, 2, 3], [1, 4, 6], [3, 5, 7], [1, 8, 9]])
    if key == "H3":
        return build(
            3,
            11,
            [[1, 2, 3], [1, 4, 7], [2, 5, 8], [3, 6, 9], [1, 10, 11]],
        )
    raise UnknownFixture(f"unknown fixture {name!r}; choose from {FIXTURE_NAMES}")


def degree_check(f: CharPolyFactorization) -> bool:
    """Total degree must equal n(k-1)^(n-1)."""
    return f.total_x_degree() == f.n * (f.k - 1) ** (f.n - 1)


@dataclass(frozen=True)
class CrosscheckReport:
    """Outcome of matching a fixture against freshly computed data."""

    name: str
    bases: tuple[AlphaPolynomial, ...]
    catalog_polys: tuple[AlphaPolynomial, ...]
    spectrum_size: int
    max_root_deviation: float


def spectrum_crosscheck(
    name: str,
    tol: float = DEFAULT_SET_TOL,
    root_tol: float = DEFAULT_ROOT_TOL,
    seed: int = DEFAULT_SEED,
) -> CrosscheckReport:
    """Validate a fixture two ways, raising MismatchReport on failure.

    (a) The distinct matching polynomials of the hypertree's connected
        induced subtrees must equal the fixture's nontrivial factor
        bases exactly (integer coefficients).
    (b) The nonzero roots of the factored polynomial must equal the
        computed set spectrum minus 0, within ``tol``.
    """
    f = fixture(name)
    H = hypergraph(name)
    catalog = distinct_matching_polynomials(H)
    bases = sorted(
        (base for base, _ in f.factors), key=lambda p: (p.degree, p.coeffs)
    )
    if tuple(bases) != catalog.polys:
        raise MismatchReport(
            name,
            "factor bases differ from subtree matching polynomials",
            expected=[alpha_str(p) for p in bases],
            got=[alpha_str(p) for p in catalog.polys],
        )
    spectrum = set_spectrum(H, tol, root_tol, seed, catalog=catalog)
    fixture_roots: list[complex] = []
    for base, _ in f.factors:
        for a, _mult in alpha_roots(base, root_tol, seed):
            for lam in lift_to_x(a, f.k):
                if not any(abs(lam - w) <= tol for w in fixture_roots):
                    fixture_roots.append(lam)
    computed = list(spectrum.nonzero_values())
    worst = 0.0
    if len(fixture_roots) != len(computed):
        raise MismatchReport(
            name,
            f"{len(fixture_roots)} fixture roots vs "
            f"{len(computed)} computed nonzero spectrum values",
            expected=sorted((z.real, z.imag) for z in fixture_roots),
            got=sorted((z.real, z.imag) for z in computed),
        )
    for z in fixture_roots:
        d = min(abs(z - w) for w in computed)
        worst = max(worst, d)
        if d > tol:
            raise MismatchReport(
                name,
                f"fixture root {z} missing from computed spectrum "
                f"(nearest at distance {d:.3e})",
                expected=sorted((w.real, w.imag) for w in fixture_roots),
                got=sorted((w.real, w.imag) for w in computed),
            )
    return CrosscheckReport(
        name=name,
        bases=tuple(bases),
        catalog_polys=catalog.polys,
        spectrum_size=len(spectrum.values),
        max_root_deviation=worst,
    )


@dataclass(frozen=True)
class DivisibilityRow:
    poly_x: str
    divides: bool
    observed_multiplicity: int


@dataclass(frozen=True)
class DivisibilityReport:
    name: str
    rows: tuple[DivisibilityRow, ...]

    def all_divide(self) -> bool:
        return all(row.divides for row in self.rows)


@lru_cache(maxsize=None)
def _expanded(name: str) -> AlphaPolynomial:
    return fixture(name).expanded_nonzero_part()


def divisibility_probe(name: str) -> DivisibilityReport:
    """Exact division of the fully expanded characteristic polynomial by
    every cataloged subtree matching polynomial.

    The x^power prefactor is coprime to every divisor (subtree
    polynomials have nonzero constant term), so divisibility in x is
    decided by dividing the expanded alpha-form product.  Failures are
    reported per row, never raised; observed multiplicities are how many
    exact divisions succeed in a row.
    """
    f = fixture(name)
    H = hypergraph(name)
    expanded = _expanded(name)
    rows = []
    for phi in distinct_matching_polynomials(H).polys:
        mult = 0
        current = expanded
        while current.degree >= phi.degree:
            quotient, remainder = poly_divmod(current, phi)
            if remainder.degree >= 0:
                break
            mult += 1
            current = quotient
        rows.append(
            DivisibilityRow(
                poly_x=x_str(phi, f.k),
                divides=mult >= 1,
                observed_multiplicity=mult,
            )
        )
    return DivisibilityReport(name=name, rows=tuple(rows))
