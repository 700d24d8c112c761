"""Reference tables transcribed verbatim for cross-checking derived data.

Nothing here feeds a derivation.  Tables are compared against values
computed from first principles, and every disagreement is reported together
with an independent reason for preferring the derived value.
"""

from __future__ import annotations

from .catalog import TABLE_ORDER

# rows and columns in TABLE_ORDER = E0, F0, V0, pi0, E0', F0', V0', pi0'
INTERSECTION_TABLE = (
    (0, 2, 2, 2, 1, 1, 1, 3),
    (2, 0, 2, 2, 1, 3, 1, 2),
    (2, 2, 0, 2, 1, 1, 3, 2),
    (2, 2, 2, 0, 3, 1, 1, 1),
    (1, 1, 1, 3, 0, 2, 2, 2),
    (1, 3, 1, 1, 2, 0, 2, 1),
    (1, 1, 3, 1, 2, 2, 0, 1),
    (3, 2, 2, 1, 2, 1, 1, 0),
)

assert len(INTERSECTION_TABLE) == len(TABLE_ORDER)


def _cell(text: str) -> tuple[str, ...]:
    return tuple(t.strip() for t in text.split(",") if t.strip())


# keyed (i, j) for P_i x P_j: i is the column (first factor), j the row (second factor)
_F2_ROWS = {
    0: ("E0,F0,V0,pi0 ; E0',F0',V0',pi0'",
        "E1,F1,V1,pi0 ; E0',F2',V1',pi1'",
        "E2,F2,V2,pi0 ; E0',F1',V1',pi2'"),
    1: ("E0,F2,V1,pi1 ; E1',F1',V1',pi0'",
        "E1,F0,V2,pi1 ; E1',F0',V2',pi1'",
        "E2,F1,V0,pi1 ; E1',F2',V0',pi2'"),
    2: ("E0,F1,V2,pi2 ; E2',F2',V2',pi0'",
        "E1,F2,V0,pi2 ; E2',F1',V0',pi1'",
        "E2,F0,V1,pi2 ; E2',F0',V1',pi2'"),
}

TORSION_TABLE_F2 = {
    (i, j): tuple(_cell(part) for part in _F2_ROWS[j][i].split(";"))
    for j in range(3)
    for i in range(3)
}

F4_COLUMNS = ("(1,w)", "(1,w^2)", "(w,w)", "(w,w^2)", "(w^2,w)", "(w^2,w^2)", "P0", "P1", "P2")

_F4_ROWS = {
    "(1,w)": ("V1,V2'", "F1,F1'", "V2,V0'", "F0,F2'", "V0,V1'", "F2,F0'", "E0,pi2'", "E1,pi0'", "E2,pi1'"),
    "(1,w^2)": ("F2,F2'", "V2,V1'", "F0,F1'", "V1,V0'", "F1,F0'", "V0,V2'", "E0,pi1'", "E1,pi2'", "E2,pi0'"),
    "(w,w)": ("V2,V0'", "F0,F2'", "V0,V1'", "F2,F0'", "V1,V2'", "F1,F1'", "E0,pi2'", "E1,pi0'", "E2,pi1'"),
    "(w,w^2)": ("F0,F1'", "V1,V0'", "F1,F0'", "V0,V2'", "F2,F2'", "V2,V1'", "E0,pi1'", "E1,pi2'", "E2,pi0'"),
    "(w^2,w)": ("V0,V1'", "F2,F0'", "V1,V2'", "F1,F1'", "V2,V0'", "F0,F2'", "E0,pi2'", "E1,pi0'", "E2,pi1'"),
    "(w^2,w^2)": ("F1,F0'", "V0,V2'", "F2,F2'", "V2,V1'", "F0,F1'", "V1,V0'", "E0,pi1'", "E1,pi2'", "E2,pi0'"),
    "P0": ("pi2,E0'", "pi1,E0'", "pi2,E0'", "pi1,E0'", "pi2,E0'", "pi1,E0'", "", "", ""),
    "P1": ("pi0,E1'", "pi2,E1'", "pi0,E1'", "pi2,E1'", "pi0,E1'", "pi2,E0'", "", "", ""),
    "P2": ("pi1,E2'", "pi0,E2'", "pi1,E2'", "pi0,E2'", "pi1,E2'", "pi0,E2'", "", "", ""),
}

# keyed (first factor label, second factor label); the A(F_2) corner is omitted
TORSION_TABLE_F4 = {
    (col, row): _cell(cells[n])
    for row, cells in _F4_ROWS.items()
    for n, col in enumerate(F4_COLUMNS)
    if cells[n]
}

F2_CURVE_F0_CAP_F0P = ("P0xP0", "P1xP1", "P2xP2")
F2_CAP_F0P = ("(w^2,w^2)x(1,w)", "(1,w^2)x(w^2,w)", "(w,w^2)x(w,w)")
F1_THROUGH = ("P1xP0", "P2xP1", "P0xP2")
PI0_CAP_E1P = ("(1,w)xP1", "(w^2,w)xP1", "(w,w)xP1")
PI0_CAP_E2P = ("(1,w^2)xP2", "(w^2,w^2)xP2", "(w,w^2)xP2")

E_F2 = ("P0", "P1", "P2")
E_F4 = ("P0", "P1", "P2", "(1,w)", "(1,w^2)", "(w,w)", "(w^2,w)", "(w,w^2)", "(w^2,w^2)")
