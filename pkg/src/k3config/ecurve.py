"""The supersingular curve E: y^2 + y = x^3 over F_{2^k}.

Points are affine pairs or the single point at infinity ``O`` = (0:1:0).
Addition uses the chord formula, doubling uses [2](x, y) = (x^4, y^4 + 1)
and negation is (x, y) -> (x, y + 1).

Named maps on points:

    sigma : (x, y) -> (w x, y)                 automorphism of order 3
    theta : (x, y) -> (x + 1, y + x + w)       automorphism, theta^2 = -1
    F     : (x, y) -> (x^2, y^2)               Frobenius
    V     : (x, y) -> (x^2, y^2 + 1)           V = -F
    tau   : P -> P + P1                        translation by P1 = (0, 0)

Endomorphisms are built as :class:`Endo` expression trees and evaluated
with :func:`apply_expr`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
import itertools
import random
import re

from .gf2k import GF, FieldElement, FieldError, embed, enumerate_field, parse_element


class PoleError(ValueError):
    """A rational map was evaluated at one of its poles."""


@dataclass(frozen=True, slots=True)
class CurvePoint:
    x: FieldElement | None = None
    y: FieldElement | None = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    @property
    def degree(self) -> int | None:
        return None if self.x is None else self.x.degree

    def __add__(self, other: CurvePoint) -> CurvePoint:
        return add(self, other)

    def __neg__(self) -> CurvePoint:
        return neg(self)

    def __sub__(self, other: CurvePoint) -> CurvePoint:
        return add(self, neg(other))

    def __rmul__(self, n: int) -> CurvePoint:
        return scalar_mul(n, self)

    def __str__(self):
        return format_point(self)

    def __repr__(self):
        return f"CurvePoint({format_point(self)})"


INFINITY = CurvePoint()
O = INFINITY


def point(x, y, k: int = 2) -> CurvePoint:
    """Build an affine point from field elements, ints or element strings."""
    def conv(v):
        if isinstance(v, FieldElement):
            return embed(v, k) if v.degree != k else v
        if isinstance(v, str):
            return parse_element(v, k)
        return GF(k)(v)
    P = CurvePoint(conv(x), conv(y))
    if not on_curve(P):
        raise ValueError(f"{P} is not on y^2 + y = x^3")
    return P


def P1(k: int = 2) -> CurvePoint:
    """The 3-torsion point (0 : 0 : 1)."""
    return CurvePoint(GF(k).zero, GF(k).zero)


def P2(k: int = 2) -> CurvePoint:
    """The 3-torsion point (0 : 1 : 1) = -P1."""
    return CurvePoint(GF(k).zero, GF(k).one)


def base_points(k: int = 2) -> tuple[CurvePoint, CurvePoint, CurvePoint]:
    """(P0, P1, P2) with P0 the origin."""
    return (INFINITY, P1(k), P2(k))


def on_curve(P: CurvePoint) -> bool:
    if P.is_infinity:
        return True
    x, y = P.x, P.y
    if x.degree != y.degree:
        return False
    return y * y + y == x * x * x


def embed_point(P: CurvePoint, k: int) -> CurvePoint:
    if P.is_infinity:
        return P
    return CurvePoint(embed(P.x, k), embed(P.y, k))


def neg(P: CurvePoint) -> CurvePoint:
    if P.is_infinity:
        return P
    return CurvePoint(P.x, P.y + 1)


def double(P: CurvePoint) -> CurvePoint:
    if P.is_infinity:
        return P
    return CurvePoint(P.x ** 4, P.y ** 4 + 1)


def add(P: CurvePoint, Q: CurvePoint) -> CurvePoint:
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
    if x1 == x2:
        if y2 == y1 + 1:
            return INFINITY
        return double(P)
    dx = x1 - x2
    lam = (y1 - y2) / dx
    x = x1 + x2 + lam * lam
    y = lam * lam * lam + (x1 * y1 + x2 * y2) / dx + 1
    return CurvePoint(x, y)


def scalar_mul(n: int, P: CurvePoint) -> CurvePoint:
    if n < 0:
        return scalar_mul(-n, neg(P))
    acc = INFINITY
    base = P
    while n:
        if n & 1:
            acc = add(acc, base)
        base = double(base)
        n >>= 1
    return acc


@cache
def enumerate_points(k: int) -> tuple[CurvePoint, ...]:
    """All points of E(F_{2^k}): O first, then affine points by (x, y) coordinates."""
    pts = [INFINITY]
    field = enumerate_field(k)
    for x in field:
        x3 = x * x * x
        for y in field:
            if y * y + y == x3:
                pts.append(CurvePoint(x, y))
    return tuple(pts)


# --- named maps --------------------------------------------------------------

_ALIASES = {
    "σ": "sigma", "σ2": "sigma2", "σ²": "sigma2", "θ": "theta", "τ": "tau",
    "id": "id", "sigma": "sigma", "sigma2": "sigma2", "theta": "theta",
    "F": "F", "V": "V", "tau": "tau",
}


def _omega_of(P: CurvePoint) -> FieldElement:
    try:
        return GF(P.degree).omega
    except FieldError:
        raise FieldError(
            f"map needs w, which is not in GF(2^{P.degree}); embed the point first"
        ) from None


def _sigma(P):
    return CurvePoint(_omega_of(P) * P.x, P.y)


def _sigma2(P):
    w = _omega_of(P)
    return CurvePoint(w * w * P.x, P.y)


def _theta(P):
    return CurvePoint(P.x + 1, P.y + P.x + _omega_of(P))


def _frob(P):
    return CurvePoint(P.x.frobenius(), P.y.frobenius())


def _ver(P):
    return CurvePoint(P.x.frobenius(), P.y.frobenius() + 1)


_AFFINE_MAPS = {
    "id": lambda P: P,
    "sigma": _sigma,
    "sigma2": _sigma2,
    "theta": _theta,
    "F": _frob,
    "V": _ver,
}


def apply_basic(name: str, P: CurvePoint) -> CurvePoint:
    """Apply one of id, sigma, sigma2, theta, F, V, tau to ``P``."""
    try:
        key = _ALIASES[name]
    except KeyError:
        raise ValueError(f"unknown basic map {name!r}") from None
    if key == "tau":
        k = P.degree or 2
        return add(P, P1(k))
    if P.is_infinity:
        return P
    return _AFFINE_MAPS[key](P)


def tau_formula(P: CurvePoint) -> CurvePoint:
    """Translation by P1 as the rational map x -> y/x^2, y -> y/x^3 (pole at x = 0)."""
    if P.is_infinity or not P.x:
        raise PoleError(f"tau formula has a pole at {P}")
    x2 = P.x * P.x
    return CurvePoint(P.y / x2, P.y / (x2 * P.x))


def quotient_map(P: CurvePoint) -> tuple[FieldElement, FieldElement]:
    """The quotient E -> E/<tau>, (x, y) -> ((x^3 + 1)/x^2, y + 1 + 1/x^3 + w)."""
    if P.is_infinity or not P.x:
        raise PoleError(f"quotient map has a pole at {P}")
    x = P.x
    x2 = x * x
    x3 = x2 * x
    w = (x3 + 1) / x2
    z = P.y + 1 + x3.inverse() + _omega_of(P)
    return w, z


# --- endomorphism expressions ---------------------------------------------


class Endo:
    """Expression over id, sigma, theta, F, V with sums, integer multiples and composition.

    ``a * b`` is the composition a o b; ``n * a`` is an integer multiple.
    """

    __slots__ = ()

    def __add__(self, other):
        if isinstance(other, int):
            other = Scaled(other, ID)
        return Sum((self, other))

    def __radd__(self, other):
        if isinstance(other, int):
            return Sum((Scaled(other, ID), self))
        return NotImplemented

    def __neg__(self):
        return Scaled(-1, self)

    def __sub__(self, other):
        if isinstance(other, int):
            other = Scaled(other, ID)
        return Sum((self, -other))

    def __rsub__(self, other):
        if isinstance(other, int):
            return Sum((Scaled(other, ID), -self))
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            return Scaled(other, self)
        return Comp((self, other))

    def __rmul__(self, other):
        if isinstance(other, int):
            return Scaled(other, self)
        return NotImplemented

    def __call__(self, P: CurvePoint) -> CurvePoint:
        return apply_expr(self, P)


@dataclass(frozen=True, slots=True)
class Gen(Endo):
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True, slots=True)
class Sum(Endo):
    terms: tuple

    def __str__(self):
        if not self.terms:
            return "0"
        out = str(self.terms[0])
        for t in self.terms[1:]:
            s = str(t)
            out += s if s.startswith("-") else "+" + s
        return f"({out})"


@dataclass(frozen=True, slots=True)
class Comp(Endo):
    factors: tuple

    def __str__(self):
        return "∘".join(str(f) for f in self.factors)


@dataclass(frozen=True, slots=True)
class Scaled(Endo):
    n: int
    expr: Endo

    def __str__(self):
        if self.n == -1:
            return f"-{self.expr}"
        return f"{self.n}{self.expr}" if self.expr != ID else str(self.n)


ID = Gen("id")
ZERO = Sum(())
SIGMA = Gen("sigma")
THETA = Gen("theta")
FROB = Gen("F")
VER = Gen("V")
SIGMA2 = SIGMA * SIGMA
# pi is the projection E -> E/<tau>; pointwise it equals theta o (id - F) = -(2 sigma + 1)
PI = THETA * (ID - FROB)

GENERATORS = {"id": ID, "sigma": SIGMA, "theta": THETA, "F": FROB, "V": VER}


def apply_expr(e: Endo, P: CurvePoint) -> CurvePoint:
    if isinstance(e, Gen):
        return apply_basic(e.name, P)
    if isinstance(e, Sum):
        acc = INFINITY
        for t in e.terms:
            acc = add(acc, apply_expr(t, P))
        return acc
    if isinstance(e, Comp):
        for f in reversed(e.factors):
            P = apply_expr(f, P)
        return P
    if isinstance(e, Scaled):
        return scalar_mul(e.n, apply_expr(e.expr, P))
    raise TypeError(f"not an endomorphism expression: {e!r}")


@dataclass(frozen=True)
class Relation:
    label: str
    lhs: Endo
    rhs: Endo


# conj(a) is checked through a * conj(a) = deg(a)
RELATIONS = (
    Relation("FV = 2", FROB * VER, 2 * ID),
    Relation("F^2 = -2", FROB * FROB, -2 * ID),
    Relation("F∘sigma = sigma^2∘F", FROB * SIGMA, SIGMA2 * FROB),
    Relation("sigma^3 = id", SIGMA * SIGMA * SIGMA, ID),
    Relation("theta^2 = -id", THETA * THETA, -ID),
    Relation("F = sigma∘theta - theta∘sigma", FROB, SIGMA * THETA - THETA * SIGMA),
    Relation("F = theta∘sigma^2 - sigma^2∘theta", FROB, THETA * SIGMA2 - SIGMA2 * THETA),
    Relation("id = theta∘sigma - sigma^2∘theta", ID, THETA * SIGMA - SIGMA2 * THETA),
    Relation("F∘pi = -pi∘F", FROB * PI, -(PI * FROB)),
    Relation("pi = theta∘(id - F)", PI, THETA * (ID - FROB)),
    Relation("pi = 2 sigma + 1", PI, 2 * SIGMA + ID),
)

SUPPLEMENTARY_RELATIONS = (
    Relation("V = -F", VER, -FROB),
    Relation("VF = 2", VER * FROB, 2 * ID),
    Relation("sigma^2 + sigma + 1 = 0", SIGMA2 + SIGMA + ID, ZERO),
    Relation("sigma∘conj(sigma) = 1 with conj(sigma) = sigma^2", SIGMA * SIGMA2, ID),
    Relation("pi∘conj(pi) = 3 with conj(pi) = -pi", PI * (-PI), 3 * ID),
    Relation("theta∘(id - F) = -(2 sigma + 1)", THETA * (ID - FROB), -(2 * SIGMA + ID)),
)


def verify_relations(k: int = 6, relations=RELATIONS) -> list[tuple[str, bool]]:
    """Check each relation pointwise on all of E(F_{2^k})."""
    pts = enumerate_points(k)
    return [
        (r.label, all(apply_expr(r.lhs, P) == apply_expr(r.rhs, P) for P in pts))
        for r in relations
    ]


# --- text form -------------------------------------------------------------


def format_point(P: CurvePoint) -> str:
    if P.is_infinity:
        return "O"
    return f"({P.x},{P.y})"


_POINT_RE = re.compile(r"^\(([^,]+),([^,]+)\)$")


def parse_point(text: str, k: int = 2) -> CurvePoint:
    body = text.replace(" ", "")
    if body in ("O", "P0", "(0,1,0)"):
        return INFINITY
    if body == "P1":
        return P1(k)
    if body == "P2":
        return P2(k)
    m = _POINT_RE.match(body)
    if m is None:
        raise ValueError(f"cannot parse point {text!r}")
    return point(parse_element(m.group(1), k), parse_element(m.group(2), k), k)


def sample_triples(pts, n: int, seed: int = 0):
    """Deterministic pseudo-random triples from ``pts`` (for associativity sampling)."""
    rng = random.Random(seed)
    return [(rng.choice(pts), rng.choice(pts), rng.choice(pts)) for _ in range(n)]


def all_triples(pts):
    return itertools.product(pts, repeat=3)
