"""Exact polynomial arithmetic over the rationals (little-endian lists).

Shared by the Sturm-chain real-root counter and the squarefree
decomposition; these run on tiny degrees, so plain Fraction lists beat
pulling in a computer-algebra dependency.
"""

from __future__ import annotations

from fractions import Fraction


def trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def deriv(p: list[Fraction]) -> list[Fraction]:
    return [i * c for i, c in enumerate(p) if i]


def rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """Polynomial remainder of a by b (b nonzero)."""
    a = a[:]
    db, lead = len(b) - 1, b[-1]
    while a and len(a) - 1 >= db:
        f = a[-1] / lead
        shift = len(a) - 1 - db
        for j, c in enumerate(b):
            a[shift + j] -= f * c
        trim(a)
    return a


def gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """Monic polynomial gcd by the Euclidean algorithm."""
    a, b = a[:], b[:]
    while b:
        a, b = b, rem(a, b)
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def div_exact(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """Synthetic division; caller guarantees b divides a."""
    remainder = a[:]
    db, lead = len(b) - 1, b[-1]
    out = [Fraction(0)] * (len(a) - db)
    for top in range(len(remainder) - 1, db - 1, -1):
        c = remainder[top]
        if c:
            f = c / lead
            out[top - db] = f
            shift = top - db
            for j, bc in enumerate(b):
                remainder[shift + j] -= f * bc
    return trim(out)


def sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    size = max(len(a), len(b))
    zero = Fraction(0)
    return trim(
        [
            (a[i] if i < len(a) else zero) - (b[i] if i < len(b) else zero)
            for i in range(size)
        ]
    )
