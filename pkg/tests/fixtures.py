"""Frozen small integer windows, one per construction case (anchor first).

Found by scripts/find_fixtures.py; each window is in general position and the
exact window search confirms a path within the same budget exists.
"""
CASE_WINDOWS = {
    "C1.1": [(0, -5), (1, -9), (2, -8), (3, -5), (4, 1), (5, -6), (6, 8), (7, 2)],
    "C1.2": [(0, -8), (1, 6), (2, -1), (3, -9), (4, 7), (5, 9), (6, 9), (7, -3)],
    "C1.3-by": [(0, 3), (1, 9), (2, 4), (3, -8), (4, 3), (5, 9), (6, 4), (7, -8)],
    "C1.3-by′": [(0, -8), (1, -4), (2, -2), (3, 6), (4, -2), (5, -5), (6, -1), (7, 2)],
    "C2.1": [(0, -7), (1, 7), (2, -4), (3, -9), (4, -4), (5, 7), (6, 4), (7, -3)],
    "C2.2-l′": [(0, -6), (1, -1), (2, 8), (3, -5), (4, 0), (5, -6), (6, -7), (7, 1)],
    "C2.2-r′": [(0, -7), (1, 3), (2, 1), (3, 9), (4, -2), (5, 0), (6, -4), (7, -3)],
    "C2.2-v": [(0, 6), (1, 2), (2, 9), (3, -3), (4, 7), (5, -5), (6, 0), (7, -5)],
    "C3a.1-cy": [(0, -8), (1, 6), (2, 4), (3, -5), (4, 6), (5, -7), (6, -5), (7, 2)],
    "C3a.1-cy′": [(0, 9), (1, -2), (2, -2), (3, -5), (4, 8), (5, 5), (6, -7), (7, -7)],
    "C3a.2": [(0, 6), (1, 8), (2, -6), (3, 2), (4, 4), (5, 1), (6, -3), (7, 8)],
    "C3b-l′": [(0, 9), (1, -2), (2, -9), (3, -9), (4, -4), (5, 0), (6, 7), (7, 9)],
    "C3b-r′": [(0, 8), (1, 6), (2, -8), (3, 1), (4, -9), (5, 1), (6, 3), (7, -5)],
    "C3b-al": [(0, -8), (1, -7), (2, 8), (3, 3), (4, 7), (5, -1), (6, 7), (7, -2)],
    "C3b-z-right": [(0, 1), (1, -5), (2, -4), (3, 9), (4, 3), (5, -7), (6, -7), (7, -7)],
    "C3b-d": [(0, 2), (1, -4), (2, 6), (3, -2), (4, 3), (5, -9), (6, -3), (7, 6)],
    "C3b-e": [(0, 5), (1, 9), (2, -8), (3, 3), (4, -7), (5, 9), (6, 3), (7, 1)],
    "C3b-f": [(0, 1), (1, 7), (2, 6), (3, -6), (4, 0), (5, 8), (6, 0), (7, -6)],
}

# middle three all below lr: path l', l, x, c, r, r' with x on lines la and bc
CONVEX_BELOW = [(-1, 0), (0, 0), (1, -2), (2, "-5/2"), (3, -2), (4, 0), (5, 0)]
