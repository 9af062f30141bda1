"""Exact matching counts and the induced polynomial in alpha = x^k.

A hypergraph with matching number m has counts[i] = number of
i-matchings (sets of i pairwise disjoint edges).  The associated signed
polynomial

    p(alpha) = sum_{i=0..m} (-1)^i counts[i] alpha^(m-i)

is stored little-endian over arbitrary-precision integers; substituting
alpha = x^k recovers the usual x-form whose exponents are all multiples
of k.  Keeping the alpha form makes powering a hypergraph a no-op on
coefficients and keeps degrees equal to matching numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb as binomial
from typing import Iterable, Sequence

from . import _ratpoly as _rp
from . import kernels
from .core import UniformHypergraph, is_hyperforest
from .errors import NotAHyperforest, TooManyEdgesForOracle, ValidationError

DEFAULT_ORACLE_EDGE_LIMIT = 24


@dataclass(frozen=True)
class MatchingCounts:
    """counts[i] = number of i-matchings; length is matching number + 1."""

    counts: tuple[int, ...]

    def __post_init__(self):
        if not self.counts or self.counts[0] != 1:
            raise ValidationError("matching counts must start with counts[0] = 1")
        if len(self.counts) > 1 and self.counts[-1] < 1:
            raise ValidationError("trailing matching count must be positive")

    @property
    def matching_number(self) -> int:
        return len(self.counts) - 1


@dataclass(frozen=True)
class AlphaPolynomial:
    """Integer polynomial in alpha, little-endian, no trailing zeros."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValidationError("alpha polynomial not normalized")

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __call__(self, z):
        """Evaluate by Horner; works for int, Fraction and complex."""
        acc = 0 * z
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def derivative(self) -> "AlphaPolynomial":
        return alpha_poly(i * c for i, c in enumerate(self.coeffs) if i)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1


def alpha_poly(coeffs: Iterable[int]) -> AlphaPolynomial:
    """Normalize a little-endian coefficient sequence."""
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return AlphaPolynomial(tuple(cs))


ONE = alpha_poly([1])
ZERO = alpha_poly([])


def to_alpha_poly(c: MatchingCounts) -> AlphaPolynomial:
    """Signed polynomial: coefficient of alpha^(m-i) is (-1)^i counts[i]."""
    m = c.matching_number
    cs = [0] * (m + 1)
    for i, v in enumerate(c.counts):
        cs[m - i] = -v if i % 2 else v
    return alpha_poly(cs)


def poly_add(p: AlphaPolynomial, q: AlphaPolynomial) -> AlphaPolynomial:
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    return alpha_poly(
        [x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)]
    )


def poly_sub(p: AlphaPolynomial, q: AlphaPolynomial) -> AlphaPolynomial:
    return poly_add(p, alpha_poly([-c for c in q.coeffs]))


def poly_mul(p: AlphaPolynomial, q: AlphaPolynomial) -> AlphaPolynomial:
    """Exact convolution; realizes multiplicativity over disjoint unions."""
    if not p.coeffs or not q.coeffs:
        return ZERO
    out = [0] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a:
            for j, b in enumerate(q.coeffs):
                out[i + j] += a * b
    return alpha_poly(out)


def poly_pow(p: AlphaPolynomial, e: int) -> AlphaPolynomial:
    if e < 0:
        raise ValidationError("negative polynomial power")
    acc = ONE
    base = p
    while e:
        if e & 1:
            acc = poly_mul(acc, base)
        base = poly_mul(base, base)
        e >>= 1
    return acc


def poly_divmod(p: AlphaPolynomial, q: AlphaPolynomial):
    """Exact division over the integers; q must be monic."""
    if not q.is_monic():
        raise ValidationError("divisor must be monic")
    rem = list(p.coeffs)
    dq = q.degree
    if len(rem) <= dq:
        return ZERO, p
    quo = [0] * (len(rem) - dq)
    for top in range(len(rem) - 1, dq - 1, -1):
        c = rem[top]
        if c:
            quo[top - dq] = c
            for j, b in enumerate(q.coeffs):
                rem[top - dq + j] -= c * b
    return alpha_poly(quo), alpha_poly(rem)


def expand_to_x(p: AlphaPolynomial, k: int) -> dict[int, int]:
    """Substitute alpha = x^k; sparse exponent -> coefficient map."""
    if k < 2:
        raise ValidationError("expand_to_x needs k >= 2")
    return {d * k: c for d, c in enumerate(p.coeffs) if c}


# -- text and JSON forms -----------------------------------------------------


def _terms_str(items: Sequence[tuple[int, int]], var: str) -> str:
    # items: (exponent, coefficient), descending exponent, coefficients nonzero
    if not items:
        return "0"
    parts = []
    for idx, (d, c) in enumerate(items):
        mag = abs(c)
        if d == 0:
            body = str(mag)
        else:
            head = "" if mag == 1 else str(mag)
            body = f"{head}{var}" if d == 1 else f"{head}{var}^{d}"
        if idx == 0:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def alpha_str(p: AlphaPolynomial) -> str:
    """Human form in alpha, e.g. ``α^3 - 4α^2 + 3α - 1``."""
    items = [(d, c) for d, c in enumerate(p.coeffs) if c][::-1]
    return _terms_str(items, "α")


def x_str(p: AlphaPolynomial, k: int) -> str:
    """Human form after alpha = x^k, e.g. ``x^9 - 4x^6 + 3x^3 - 1``."""
    items = sorted(expand_to_x(p, k).items(), reverse=True)
    return _terms_str(items, "x")


def poly_to_json(p: AlphaPolynomial) -> dict:
    """JSON form: little-endian decimal strings."""
    return {"alpha_coeffs": [str(c) for c in p.coeffs]}


def poly_from_json(obj: dict) -> AlphaPolynomial:
    try:
        return alpha_poly(int(s) for s in obj["alpha_coeffs"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"bad polynomial JSON: {exc}") from None


# -- matching count computation ----------------------------------------------


def _conflict_masks(H: UniformHypergraph) -> list[int]:
    sets = [H.edge_vertex_set(i) for i in range(H.m)]
    conf = [0] * H.m
    for i in range(H.m):
        for j in range(i + 1, H.m):
            if sets[i] & sets[j]:
                conf[i] |= 1 << j
                conf[j] |= 1 << i
    return conf


def matching_counts_bruteforce(
    H: UniformHypergraph, limit: int = DEFAULT_ORACLE_EDGE_LIMIT
) -> MatchingCounts:
    """Oracle: count i-matchings by backtracking over edge subsets.

    Exponential in the worst case, hence the edge limit; serves as the
    independent check for the pendant-edge recursion.
    """
    if H.m > limit:
        raise TooManyEdgesForOracle(
            f"{H.m} edges exceeds the oracle limit {limit}"
        )
    counts = kernels.count_matchings(_conflict_masks(H))
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return MatchingCounts(tuple(counts))


class MatchingDP:
    """Pendant-edge deletion recursion over edge subsets of one host.

    Subsets are bitmasks into the host's canonical edge list, so the
    memo table is shared across every sub-hyperforest of the same host;
    a subtree catalog reuses one instance for all its entries.

    For a pendant edge e the recursion is
        counts(F) = counts(F - e) + shift(counts(F - N[e]))
    where F - e removes the edge only and F - N[e] removes e together
    with every edge meeting it.  When no pendant edge exists every
    remaining component is an isolated edge and the counts are binomial.
    """

    def __init__(self, H: UniformHypergraph, scan_order: str = "canonical"):
        if scan_order not in ("canonical", "reverse"):
            raise ValidationError(f"unknown scan order {scan_order!r}")
        self._edges = H.edges
        self._k = H.k
        self._closed = [
            (conf | (1 << i)) for i, conf in enumerate(_conflict_masks(H))
        ]
        self._scan = (
            range(H.m)
            if scan_order == "canonical"
            else range(H.m - 1, -1, -1)
        )
        self._memo: dict[int, tuple[int, ...]] = {}

    def counts(self, mask: int) -> tuple[int, ...]:
        cached = self._memo.get(mask)
        if cached is not None:
            return cached
        pendant = -1
        isolated = 0
        members = [i for i in self._scan if mask >> i & 1]
        if members:
            deg: dict[int, int] = {}
            for i in members:
                for v in self._edges[i]:
                    deg[v] = deg.get(v, 0) + 1
            for i in members:
                ones = sum(1 for v in self._edges[i] if deg[v] == 1)
                if ones == self._k - 1:
                    pendant = i
                    break
                if ones == self._k:
                    isolated += 1
        if pendant < 0:
            if isolated != len(members):
                raise NotAHyperforest(
                    "edge subset is not a hyperforest (no pendant edge found)"
                )
            t = isolated
            result = tuple(binomial(t, i) for i in range(t + 1))
        else:
            without_edge = self.counts(mask & ~(1 << pendant))
            without_nbhd = self.counts(mask & ~self._closed[pendant])
            size = max(len(without_edge), len(without_nbhd) + 1)
            merged = [0] * size
            for i, v in enumerate(without_edge):
                merged[i] += v
            for i, v in enumerate(without_nbhd):
                merged[i + 1] += v
            result = tuple(merged)
        self._memo[mask] = result
        return result


def matching_counts_tree(
    H: UniformHypergraph, scan_order: str = "canonical"
) -> MatchingCounts:
    """Exact matching counts of a hyperforest by pendant-edge deletion.

    Polynomial-time counterpart of the brute-force oracle; the two agree
    exactly on every hyperforest.  ``scan_order`` picks which pendant
    edge is deleted first and must not change the result.
    """
    if not is_hyperforest(H):
        raise NotAHyperforest("matching_counts_tree requires a hyperforest")
    dp = MatchingDP(H, scan_order)
    return MatchingCounts(dp.counts((1 << H.m) - 1))


def matching_polynomial(H: UniformHypergraph) -> AlphaPolynomial:
    """Convenience: alpha-form matching polynomial of a hyperforest."""
    return to_alpha_poly(matching_counts_tree(H))


# -- comb closed form ----------------------------------------------------------


def comb_formula(k: int) -> AlphaPolynomial:
    """Closed-form matching polynomial of the k-comb: (alpha-1)^k - alpha^(k-1).

    The comb has binomial(k, i) tooth-only i-matchings plus the lone
    spine 1-matching; the spine meets every tooth, which subtracts the
    alpha^(k-1) term.
    """
    if k < 2:
        raise ValidationError("comb_formula needs k >= 2")
    spine_term = alpha_poly([0] * (k - 1) + [1])
    return poly_sub(poly_pow(alpha_poly([-1, 1]), k), spine_term)


# -- exact real-root count (Sturm) ---------------------------------------------


def count_distinct_real_roots(p: AlphaPolynomial) -> int:
    """Number of distinct real roots, by a Sturm chain over the rationals."""
    if p.degree < 1:
        return 0
    f = [Fraction(c) for c in p.coeffs]
    g = _rp.gcd(f, _rp.deriv(f))
    if len(g) > 1:
        f = _rp.div_exact(f, g)
    chain = [f, _rp.trim(_rp.deriv(f))]
    while chain[-1] and len(chain[-1]) > 1:
        rem = _rp.rem(chain[-2], chain[-1])
        if not rem:
            break
        chain.append([-c for c in rem])

    def variations(at_plus_infinity: bool) -> int:
        signs = []
        for poly in chain:
            if not poly:
                continue
            s = 1 if poly[-1] > 0 else -1
            if not at_plus_infinity and (len(poly) - 1) % 2 == 1:
                s = -s
            signs.append(s)
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    return variations(False) - variations(True)


def count_real_comb_roots(k: int) -> int:
    """Distinct real roots of the k-comb matching polynomial in alpha."""
    if k < 3:
        raise ValidationError("count_real_comb_roots needs k >= 3")
    return count_distinct_real_roots(comb_formula(k))
