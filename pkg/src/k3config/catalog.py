"""Names and defining data of the 24 elliptic curves on A = E x E.

Each base curve is the image of a homomorphism E -> A, P -> (a(P), b(P)),
and equals the locus {(x, y) : c(x) + d(y) = 0} for a pair (c, d).  The
other 16 curves are translates of the 8 base curves by points P_i x P_j.
"""

from __future__ import annotations

from dataclasses import dataclass
import re

from .ecurve import FROB, ID, PI, SIGMA, SIGMA2, VER, ZERO, Endo

FIRST = "First"
SECOND = "Second"
FAMILIES = (FIRST, SECOND)

KINDS = ("E", "F", "V", "pi")


@dataclass(frozen=True)
class BaseCurve:
    name: str
    kind: str
    primed: bool
    hom: tuple[Endo, Endo]
    locus: tuple[Endo, Endo]
    # translation of the index-i member is by P_i x P_0 ("first") or P_0 x P_i ("second")
    shift_factor: str

    @property
    def family(self) -> str:
        return SECOND if self.primed else FIRST


BASE_CURVES = (
    BaseCurve("E0", "E", False, (ZERO, ID), (ID, ZERO), "first"),
    BaseCurve("F0", "F", False, (FROB, SIGMA), (SIGMA2, VER), "first"),
    BaseCurve("V0", "V", False, (VER, SIGMA2), (SIGMA, FROB), "first"),
    BaseCurve("pi0", "pi", False, (VER, PI), (-PI, FROB), "second"),
    BaseCurve("E0'", "E", True, (ID, ZERO), (ZERO, ID), "second"),
    BaseCurve("F0'", "F", True, (SIGMA2, FROB), (VER, SIGMA), "second"),
    BaseCurve("V0'", "V", True, (SIGMA, VER), (FROB, SIGMA2), "second"),
    BaseCurve("pi0'", "pi", True, (PI, FROB), (VER, -PI), "first"),
)

BASE_BY_NAME = {b.name: b for b in BASE_CURVES}

# row/column order of the 8 x 8 intersection table
TABLE_ORDER = tuple(b.name for b in BASE_CURVES)


def curve_name(kind: str, index: int, primed: bool) -> str:
    return f"{kind}{index}{chr(39) if primed else ''}"


def all_curve_names(family: str | None = None) -> tuple[str, ...]:
    """The 24 names grouped by family, then kind, then index: E0, E1, E2, F0, ..."""
    out = []
    for primed in (False, True):
        if family is not None and (family == SECOND) != primed:
            continue
        for kind in KINDS:
            for i in range(3):
                out.append(curve_name(kind, i, primed))
    return tuple(out)


_NAME_RE = re.compile(r"^(E|F|V|pi)([012])('?)$")


def parse_curve_name(name: str) -> tuple[str, int, bool]:
    m = _NAME_RE.match(name.replace("π", "pi").replace("′", "'"))
    if m is None:
        raise KeyError(f"unknown curve {name!r}")
    kind, idx, prime = m.groups()
    return kind, int(idx), bool(prime)


def base_of(name: str) -> BaseCurve:
    kind, _, primed = parse_curve_name(name)
    return BASE_BY_NAME[curve_name(kind, 0, primed)]


def translation_indices(name: str) -> tuple[int, int]:
    """(i, j) such that the curve is the base curve translated by P_i x P_j."""
    kind, idx, _ = parse_curve_name(name)
    base = base_of(name)
    return (idx, 0) if base.shift_factor == "first" else (0, idx)


def family_of(name: str) -> str:
    return base_of(name).family


def pretty(name: str) -> str:
    """Unicode rendering, e.g. pi1' -> π₁′."""
    kind, idx, primed = parse_curve_name(name)
    sub = "₀₁₂"[idx]
    return ("π" if kind == "pi" else kind) + sub + ("′" if primed else "")
