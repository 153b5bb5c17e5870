"""Curated tridiagonal diagonals with primitive characteristic polynomials.

Each row pairs a diagonal vector d (for the symmetric tridiagonal matrix
with unit off-diagonals) with the coefficients of its characteristic
polynomial, listed in descending order (c_{n-1}, ..., c_1, c_0) for
f(x) = x^n + c_{n-1} x^{n-1} + ... + c_0.  Every listed polynomial is
irreducible and primitive over Z_p; `derive_rows` recomputes the
coefficients from d and cross-checks both properties.
"""

from __future__ import annotations

from .fields import PolyZp
from .symrep import tridiag_char_poly

# p -> n -> list of (d, (c_{n-1}, ..., c_0))
REFERENCE_DIAGONALS = {
    2: {
        2: [((1, 0), (1, 1))],
        3: [((1, 1, 0), (0, 1, 1)),
            ((1, 0, 0), (1, 0, 1))],
        4: [((1, 0, 1, 0), (0, 0, 1, 1)),
            ((1, 1, 0, 1), (1, 0, 0, 1))],
        5: [((1, 1, 1, 1, 0), (0, 0, 1, 0, 1)),
            ((0, 1, 1, 0, 0), (0, 1, 0, 0, 1)),
            ((1, 1, 0, 0, 0), (0, 1, 1, 1, 1)),
            ((1, 0, 0, 0, 0), (1, 0, 1, 1, 1))],
        6: [((0, 1, 1, 0, 0, 0), (0, 0, 0, 0, 1, 1)),
            ((1, 0, 1, 1, 1, 0), (0, 1, 1, 0, 1, 1)),
            ((0, 1, 1, 0, 1, 0), (1, 0, 0, 0, 0, 1)),
            ((1, 0, 1, 0, 0, 1), (1, 0, 0, 1, 1, 1))],
        7: [((1, 0, 1, 1, 0, 0, 1), (0, 0, 0, 0, 0, 1, 1)),
            ((0, 1, 1, 1, 0, 1, 0), (0, 0, 0, 1, 0, 0, 1)),
            ((1, 1, 1, 0, 0, 0, 1), (0, 0, 0, 1, 1, 1, 1)),
            ((1, 1, 1, 0, 1, 0, 0), (0, 0, 1, 0, 0, 0, 1))],
        8: [((0, 1, 1, 0, 0, 0, 0, 0), (0, 0, 0, 1, 1, 1, 0, 1)),
            ((1, 1, 1, 1, 1, 0, 1, 0), (0, 0, 1, 0, 1, 0, 1, 1)),
            ((1, 1, 1, 0, 1, 1, 1, 0), (0, 0, 1, 0, 1, 1, 0, 1)),
            ((0, 1, 1, 0, 1, 1, 0, 0), (0, 1, 0, 0, 1, 1, 0, 1))],
    },
    3: {
        2: [((2, 0), (1, 2)),
            ((1, 0), (2, 2))],
        3: [((1, 1, 0), (1, 2, 1)),
            ((2, 1, 1), (2, 0, 1)),
            ((1, 0, 0), (2, 1, 1))],
        4: [((1, 1, 0, 1), (0, 0, 1, 2)),
            ((2, 2, 0, 2), (0, 0, 2, 2)),
            ((1, 2, 1, 1), (1, 0, 0, 2)),
            ((1, 2, 2, 0), (1, 2, 2, 2))],
        5: [((2, 1, 2, 0, 1), (0, 0, 0, 2, 1)),
            ((2, 2, 1, 1, 0), (0, 0, 2, 1, 1)),
            ((0, 1, 2, 0, 0), (0, 1, 0, 1, 1)),
            ((2, 1, 1, 1, 1), (0, 1, 2, 0, 1))],
        6: [((1, 0, 2, 2, 1, 0), (0, 2, 1, 1, 1, 2)),
            ((2, 0, 1, 1, 2, 0), (0, 2, 2, 1, 2, 2)),
            ((1, 0, 2, 0, 2, 0), (1, 0, 0, 0, 0, 2)),
            ((2, 2, 0, 1, 0, 0), (1, 0, 1, 0, 0, 2))],
    },
    5: {
        2: [((3, 1), (1, 2)),
            ((4, 2), (4, 2))],
        3: [((2, 3, 0), (0, 4, 2)),
            ((3, 2, 0), (0, 4, 3)),
            ((3, 1, 0), (1, 1, 3)),
            ((4, 2, 3), (1, 4, 3))],
        4: [((3, 0, 1, 1), (0, 4, 1, 2)),
            ((1, 3, 0, 1), (0, 4, 4, 2)),
            ((3, 1, 0, 0), (1, 0, 2, 3)),
            ((2, 3, 2, 1), (2, 0, 3, 3))],
        5: [((2, 3, 0, 0, 0), (0, 2, 2, 1, 3)),
            ((3, 2, 0, 0, 0), (0, 2, 3, 1, 2)),
            ((3, 2, 3, 0, 2), (0, 3, 0, 0, 2)),
            ((3, 0, 2, 3, 2), (0, 3, 0, 0, 3))],
        6: [((4, 2, 2, 4, 1, 2), (0, 0, 0, 1, 1, 3)),
            ((3, 4, 1, 3, 3, 1), (0, 0, 0, 1, 4, 3)),
            ((1, 3, 2, 0, 4, 0), (0, 0, 1, 2, 0, 2)),
            ((3, 3, 3, 0, 3, 3), (0, 0, 1, 2, 4, 3))],
    },
    7: {
        2: [((4, 1), (2, 3)),
            ((3, 2), (2, 5)),
            ((6, 3), (5, 3)),
            ((5, 4), (5, 5))],
        3: [((2, 4, 1), (0, 5, 2)),
            ((3, 3, 1), (0, 6, 2)),
            ((2, 3, 1), (1, 2, 4)),
            ((6, 3, 3), (2, 1, 4))],
        4: [((5, 4, 4, 1), (0, 3, 3, 3)),
            ((6, 3, 3, 2), (0, 3, 4, 3)),
            ((6, 0, 5, 3), (0, 4, 3, 3)),
            ((4, 2, 0, 1), (0, 4, 4, 3))],
        5: [((5, 1, 0, 1, 0), (0, 0, 0, 2, 2)),
            ((6, 3, 4, 0, 1), (0, 0, 0, 5, 2)),
            ((6, 4, 0, 1, 3), (0, 0, 2, 2, 4)),
            ((6, 5, 4, 4, 2), (0, 0, 3, 0, 2))],
        6: [((6, 6, 0, 1, 0, 1), (0, 0, 0, 3, 1, 5)),
            ((2, 4, 5, 5, 5, 0), (0, 0, 0, 3, 3, 3)),
            ((5, 3, 2, 2, 2, 0), (0, 0, 0, 3, 4, 3)),
            ((6, 0, 6, 0, 1, 1), (0, 0, 0, 3, 6, 5))],
    },
}


def reference_poly(p: int, coeffs_desc) -> PolyZp:
    """Polynomial from a descending coefficient row (leading 1 implied)."""
    return PolyZp(p, list(reversed(coeffs_desc)) + [1])


def derive_rows(p: int | None = None) -> list[dict]:
    """Recompute every reference row's polynomial from its diagonal.

    Each emitted row carries p, n, d, the recomputed ascending coefficient
    vector (leading 1 included), and flags confirming the polynomial is
    irreducible and primitive.
    """
    rows = []
    for pp in sorted(REFERENCE_DIAGONALS):
        if p is not None and pp != p:
            continue
        for n in sorted(REFERENCE_DIAGONALS[pp]):
            for d, _expected in REFERENCE_DIAGONALS[pp][n]:
                f = tridiag_char_poly(pp, d)
                rows.append({
                    "p": pp,
                    "n": n,
                    "d": list(d),
                    "polynomial": list(f.coeffs),
                    "irreducible": f.is_irreducible(),
                    "primitive": f.is_primitive(),
                })
    return rows
