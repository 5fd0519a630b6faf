"""Published case lists for B = P^2, L = d*l, kept verbatim for comparison.

The d = 3 row lists (2, 3), which is outside the octant a >= b; the
enumeration produces (3, 2) there. The row is stored as printed and the
difference is reported, not patched.
"""

from __future__ import annotations

from .surface import BaseSurface

# L = l, all fifteen pairs, grouped as printed
P2_D1_ROWS: tuple[tuple[tuple[int, int], ...], ...] = (
    ((0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (3, 3)),
    ((3, 2), (3, 1), (3, 0)),
    ((4, 1), (5, 2), (6, 3), (7, 4), (8, 5), (9, 6)),
)
P2_D1_CASES = frozenset(p for row in P2_D1_ROWS for p in row)

# pairs with 2a - b < n0
P2_SMALL_REGION: dict[str, tuple[tuple[int, int], ...]] = {
    "1": ((0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (3, 3)),
    "2,3": ((0, 0), (1, 1)),
    ">=4": ((0, 0),),
}

P2_TABLE_ROWS: dict[str, tuple[tuple[int, int], ...]] = {
    "2": ((0, 0), (1, 1)),
    "3": ((0, 0), (1, 0), (1, 1), (2, 1), (2, 3)),
    ">=4": ((0, 0),),
}

# counts quoted for del Pezzo submultiples: L = l (m = 3), 2l, 3l (m = 1), kl
P2_QUOTED_COUNTS = {1: 15, 2: 2, 3: 5, 4: 1}


def projective_plane_degree(surface: BaseSurface) -> int | None:
    """d if the numbers are those of (P^2, d*l), else None."""
    s = surface
    if s.c1sq != 9 or s.c2 != 3 or s.c1L <= 0 or s.c1L % 3:
        return None
    d = s.c1L // 3
    return d if s.L2 == d * d else None


def reference_pairs(d: int) -> frozenset[tuple[int, int]]:
    if d == 1:
        return P2_D1_CASES
    key = str(d) if d in (2, 3) else ">=4"
    return frozenset(P2_TABLE_ROWS[key])


def compare_with_reference(surface: BaseSurface, pairs: set[tuple[int, int]]) -> list[str]:
    """Notes on how an enumerated pair set differs from the printed P^2 lists."""
    d = projective_plane_degree(surface)
    if d is None:
        return []
    expected = reference_pairs(d)
    notes = []
    missing = sorted(expected - pairs)
    extra = sorted(pairs - expected)
    for a, b in missing:
        if a < b and (b, a) in pairs:
            notes.append(
                f"reference list for P2, L={d}l prints ({a}, {b}), which violates a >= b; "
                f"treated as a typo for ({b}, {a}), which is enumerated"
            )
            extra = [p for p in extra if p != (b, a)]
        else:
            notes.append(f"reference list for P2, L={d}l contains ({a}, {b}), not enumerated")
    for a, b in extra:
        notes.append(f"enumerated ({a}, {b}) is absent from the reference list for P2, L={d}l")
    quoted = P2_QUOTED_COUNTS[min(d, 4)]
    if quoted != len(pairs):
        notes.append(f"quoted count for P2, L={d}l is {quoted}, enumeration finds {len(pairs)}")
    return notes
