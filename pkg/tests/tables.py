"""
Published reference data for the two distance-class families.

Coefficient arrays are ascending-degree rationals as (numerator,
denominator) pairs; PANCAKE_AT_MOST[k] counts permutations within k
prefix reversals of sorted, REVERSAL_AT_MOST[k] within k block reversals.
Every table is cross-checked against the BFS oracle in the test suite, so
a transcription error here cannot pass silently.
"""
from fractions import Fraction

from signedgrids.poly import Polynomial


def _poly(*pairs) -> Polynomial:
    return Polynomial.from_coeffs(
        Fraction(p) if isinstance(p, int) else Fraction(*p) for p in pairs
    )


PANCAKE_AT_MOST = {
    1: _poly(1, 1),
    2: _poly(1, 0, 1),
    3: _poly(1, 1, -1, 1),
    4: _poly(1, (-1, 2), 3, (-5, 2), 1),
    5: _poly(1, (1, 2), (-25, 6), (17, 2), (-29, 6), 1),
    6: _poly(1, (299, 30), -5, (-73, 4), 21, (-463, 60), 1),
    7: _poly(
        1, (-3529, 30), (24697, 120), (-3167, 48), (-889, 16), (3569, 80), (-2699, 240), 1
    ),
    8: _poly(
        1, (92843, 84), (-48217, 20), (1230329, 720), (-7787, 24), (-2659, 18),
        (10117, 120), (-77323, 5040), 1,
    ),
    9: _poly(
        1, (-1713461, 168), (28102741, 1120), (-3620111, 160), (52327853, 5760),
        (-13571, 12), (-997679, 2880), (163277, 1120), (-806941, 40320), 1,
    ),
    10: _poly(
        1, (29555642, 315), (-1264975307, 5040), (11803588051, 45360), (-77767535, 576),
        (307180691, 8640), (-4420823, 1440), (-22399579, 30240), (948575, 4032),
        (-4576633, 181440), 1,
    ),
}

REVERSAL_AT_MOST = {
    1: _poly(1, (1, 2), (1, 2)),
    2: _poly(1, (1, 3), (1, 3), (1, 6), (1, 6)),
    3: _poly(1, (1, 3), (35, 72), (7, 48), (-5, 144), (1, 48), (7, 144)),
    4: _poly(
        1, (131, 420), (617, 1260), (-1, 120), (67, 1440), (53, 240), (-17, 360),
        (-41, 1680), (37, 3360),
    ),
    5: _poly(
        1, (331, 2520), (24727, 50400), (4703, 22680), (16945, 72576), (931, 17280),
        (-20059, 86400), (7267, 60480), (145, 24192), (-925, 72576), (3767, 1814400),
    ),
}

# Factored forms of the exact-distance polynomials (distance == k rather
# than <= k), as published: each entry is (prefactor, root shifts, trailing
# polynomial ascending).  k=4 carries the extra factor n that the
# coefficient arrays force; see the README note.
PANCAKE_EXACT_FACTORED = {
    4: (Fraction(1, 2), (0, 1, 1), (-3, 2)),
    5: (Fraction(1, 6), (0, 1, 2), (3, -17, 6)),
    6: (Fraction(1, 60), (0, 1, 2), (284, 401, -343, 60)),
    7: (Fraction(1, 240), (0, 1, 2, 3), (5104, 925, -1499, 240)),
    8: (Fraction(1, 5040), (0, 1, 2, 3), (-1027242, 314716, 113415, -52123, 5040)),
    9: (Fraction(1, 40320), (1, 2, 3, 4), (0, -18991470, 6638777, 644746, -444061, 40320)),
}


def expand_factored(k: int) -> Polynomial:
    prefactor, shifts, tail = PANCAKE_EXACT_FACTORED[k]
    out = Polynomial.from_coeffs([prefactor])
    for s in shifts:
        out = out * Polynomial.from_coeffs([-s, 1])
    return out * Polynomial.from_coeffs(tail)
