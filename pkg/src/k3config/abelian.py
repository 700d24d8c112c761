"""The abelian surface A = E x E, its 3-torsion and the 24 invariant elliptic curves."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
import itertools

from .catalog import (
    FIRST,
    SECOND,
    all_curve_names,
    base_of,
    family_of,
    translation_indices,
)
from .ecurve import (
    INFINITY,
    CurvePoint,
    Endo,
    add,
    apply_basic,
    apply_expr,
    base_points,
    embed_point,
    enumerate_points,
    format_point,
    parse_point,
    scalar_mul,
)


@dataclass(frozen=True, slots=True)
class APoint:
    first: CurvePoint
    second: CurvePoint

    def __add__(self, other: APoint) -> APoint:
        return APoint(add(self.first, other.first), add(self.second, other.second))

    def __rmul__(self, n: int) -> APoint:
        return APoint(scalar_mul(n, self.first), scalar_mul(n, self.second))

    @property
    def is_zero(self) -> bool:
        return self.first.is_infinity and self.second.is_infinity

    def embed(self, k: int) -> APoint:
        return APoint(embed_point(self.first, k), embed_point(self.second, k))

    def __str__(self):
        return format_apoint(self)

    def __repr__(self):
        return f"APoint({format_apoint(self)})"


ZERO_A = APoint(INFINITY, INFINITY)


def P(i: int, j: int, k: int = 2) -> APoint:
    """P_ij = P_i x P_j."""
    pts = base_points(k)
    return APoint(pts[i], pts[j])


def sigma_sigma2(Q: APoint) -> APoint:
    """The order-3 automorphism sigma x sigma^2 of A."""
    return APoint(apply_basic("sigma", Q.first), apply_basic("sigma2", Q.second))


# --- point labels ------------------------------------------------------------

_TORSION_LABELS = ("P0", "P1", "P2", "(1,w)", "(1,w^2)", "(w,w)", "(w,w^2)", "(w^2,w)", "(w^2,w^2)")


@cache
def torsion_label_map() -> dict[CurvePoint, str]:
    return {parse_point(lbl, 2): lbl for lbl in _TORSION_LABELS}


def label_point(Q: CurvePoint) -> str:
    """P0/P1/P2 for the F_2-points, (x,y) otherwise."""
    return torsion_label_map().get(Q) or format_point(Q)


def format_apoint(Q: APoint) -> str:
    if Q.first.degree in (None, 2) and Q.second.degree in (None, 2):
        return f"{label_point(Q.first)}x{label_point(Q.second)}"
    return f"{format_point(Q.first)}x{format_point(Q.second)}"


def parse_apoint(text: str, k: int = 2) -> APoint:
    body = text.replace(" ", "").replace("×", "x")
    # split on the 'x' that separates the two factors (outside parentheses)
    depth = 0
    for n, ch in enumerate(body):
        depth += ch == "("
        depth -= ch == ")"
        if ch == "x" and depth == 0:
            return APoint(parse_point(body[:n], k), parse_point(body[n + 1:], k))
    raise ValueError(f"cannot parse point of A {text!r}")


def torsion_points(level: str = "F4") -> tuple[APoint, ...]:
    """A(F_2) (9 points) or A(F_4) (81 points), first factor varying slowest."""
    if level == "F2":
        pts = base_points(2)
    elif level == "F4":
        pts = enumerate_points(2)
    else:
        raise ValueError(f"level must be 'F2' or 'F4', not {level!r}")
    return tuple(APoint(a, b) for a in pts for b in pts)


# --- the 24 curves ----------------------------------------------------------


@dataclass(frozen=True)
class CurveOnA:
    name: str
    hom: tuple[Endo, Endo]
    shift: tuple[int, int]
    family: str

    def translate(self, k: int = 2) -> APoint:
        return P(*self.shift, k)

    def image(self, Q: CurvePoint) -> APoint:
        k = Q.degree or 2
        a, b = self.hom
        return APoint(apply_expr(a, Q), apply_expr(b, Q)) + self.translate(k)

    def __str__(self):
        return self.name


@cache
def build_curves() -> tuple[CurveOnA, ...]:
    curves = []
    for name in all_curve_names():
        base = base_of(name)
        curves.append(CurveOnA(name, base.hom, translation_indices(name), family_of(name)))
    return tuple(curves)


@cache
def curves_by_name() -> dict[str, CurveOnA]:
    return {c.name: c for c in build_curves()}


def get_curve(c: CurveOnA | str) -> CurveOnA:
    return c if isinstance(c, CurveOnA) else curves_by_name()[c]


@cache
def _points_f4(name: str) -> frozenset[APoint]:
    c = get_curve(name)
    return frozenset(c.image(Q) for Q in enumerate_points(2))


def curve_points_f4(c: CurveOnA | str) -> frozenset[APoint]:
    """The F_4-points of the curve: images of E(F_4) shifted by its translation."""
    return _points_f4(get_curve(c).name)


def common_points(c1: CurveOnA | str, c2: CurveOnA | str) -> frozenset[APoint]:
    return curve_points_f4(c1) & curve_points_f4(c2)


def curves_through(Q: APoint) -> tuple[str, ...]:
    return tuple(c.name for c in build_curves() if Q in curve_points_f4(c))


class OrbitError(RuntimeError):
    pass


def orbit_decomposition(points) -> tuple[frozenset[APoint], list[frozenset[APoint]]]:
    """Split a set of 3-torsion points into sigma x sigma^2 fixed points and 3-orbits."""
    remaining = set(points)
    fixed = set()
    orbits = []
    for Q in sorted(points, key=_sort_key):
        if Q not in remaining:
            continue
        orbit = {Q, sigma_sigma2(Q), sigma_sigma2(sigma_sigma2(Q))}
        if not orbit <= remaining:
            raise OrbitError(f"orbit of {Q} is not contained in the given set")
        remaining -= orbit
        if len(orbit) == 1:
            fixed |= orbit
        elif len(orbit) == 3:
            orbits.append(frozenset(orbit))
        else:
            raise OrbitError(f"orbit of {Q} has {len(orbit)} elements under an order-3 group")
    return frozenset(fixed), orbits


@cache
def _torsion_index() -> dict[APoint, int]:
    return {Q: n for n, Q in enumerate(torsion_points("F4"))}


def _sort_key(Q: APoint):
    return _torsion_index().get(Q, len(_torsion_index()))


def sorted_points(points) -> list[APoint]:
    return sorted(points, key=_sort_key)


# --- incidence tables ---------------------------------------------------------


def incidence_table_f2() -> dict[tuple[int, int], dict[str, tuple[str, ...]]]:
    """For each P_ij (keyed (i, j) = (first factor, second factor)) the curves through it by family."""
    table = {}
    for i, j in itertools.product(range(3), repeat=2):
        through = curves_through(P(i, j))
        table[(i, j)] = {
            FIRST: tuple(n for n in through if family_of(n) == FIRST),
            SECOND: tuple(n for n in through if family_of(n) == SECOND),
        }
    return table


def incidence_table_f4() -> dict[tuple[str, str], tuple[str, ...]]:
    """Curves through each point of A(F_4) minus A(F_2), keyed by (first label, second label)."""
    f2 = set(torsion_points("F2"))
    table = {}
    for Q in torsion_points("F4"):
        if Q in f2:
            continue
        table[(label_point(Q.first), label_point(Q.second))] = curves_through(Q)
    return table


TORSION_LABELS = _TORSION_LABELS


# --- structural checks --------------------------------------------------------


def multiplicity_accounting(pairing) -> list[dict]:
    """Compare point counts with class pairings for all 276 pairs of curves.

    ``pairing(name1, name2)`` returns the intersection number on A.  Cross-family
    contacts count once, same-family contacts twice.
    """
    rows = []
    for c1, c2 in itertools.combinations(build_curves(), 2):
        n = len(common_points(c1, c2))
        same = c1.family == c2.family
        weight = 2 if same else 1
        number = pairing(c1.name, c2.name)
        rows.append({
            "pair": (c1.name, c2.name),
            "same_family": same,
            "common": n,
            "intersection": number,
            "ok": weight * n == number,
        })
    return rows


def kernel_is_trivial(hom: tuple[Endo, Endo], k: int = 6) -> bool:
    a, b = hom
    return all(
        Q.is_infinity
        for Q in enumerate_points(k)
        if apply_expr(a, Q).is_infinity and apply_expr(b, Q).is_infinity
    )


def f4_rationality(c: CurveOnA | str, k: int = 6) -> bool:
    """Images of E(F_{2^k}) minus E(F_4) avoid A(F_4) after translation."""
    c = get_curve(c)
    f4 = {Q.embed(k) for Q in torsion_points("F4")}
    small = {embed_point(Q, k) for Q in enumerate_points(2)}
    return all(c.image(Q) not in f4 for Q in enumerate_points(k) if Q not in small)


def locus_holds(base_name: str, k: int = 6) -> bool:
    """Every image point (x, y) of the base curve satisfies c(x) + d(y) = O."""
    base = base_of(base_name)
    a, b = base.hom
    c, d = base.locus
    for Q in enumerate_points(k):
        x, y = apply_expr(a, Q), apply_expr(b, Q)
        if not add(apply_expr(c, x), apply_expr(d, y)).is_infinity:
            return False
    return True


def is_invariant(c: CurveOnA | str) -> bool:
    pts = curve_points_f4(c)
    return {sigma_sigma2(Q) for Q in pts} == pts
