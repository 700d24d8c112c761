"""Hurwitz quaternions as a model of End(E).

The algebra is (-1, -1) over Q, i^2 = j^2 = -1, ij = k = -ji, and the
order is the Hurwitz order: coefficient vectors that are all integers or
all halves of odd integers.  The named endomorphisms are pinned down by a
finite search (:func:`solve_generators`) over units and norm-2 elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
import itertools

from .ecurve import Comp, Endo, Gen, Scaled, Sum


class ModelError(RuntimeError):
    """The quaternion model contradicts a relation it is required to satisfy."""


def _halves(v) -> int:
    f = Fraction(v) * 2
    if f.denominator != 1:
        raise ValueError(f"coefficient {v} has denominator outside {{1, 2}}")
    return int(f)


class Quat:
    """a + b i + c j + d k with a, b, c, d in (1/2)Z, stored as twice the coefficients."""

    __slots__ = ("_h",)

    def __init__(self, a=0, b=0, c=0, d=0):
        self._h = (_halves(a), _halves(b), _halves(c), _halves(d))

    @classmethod
    def _from_halves(cls, h) -> Quat:
        q = object.__new__(cls)
        q._h = h
        return q

    @classmethod
    def scalar(cls, n) -> Quat:
        return cls(n)

    @property
    def coeffs(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return tuple(Fraction(x, 2) for x in self._h)

    a = property(lambda self: Fraction(self._h[0], 2))
    b = property(lambda self: Fraction(self._h[1], 2))
    c = property(lambda self: Fraction(self._h[2], 2))
    d = property(lambda self: Fraction(self._h[3], 2))

    @staticmethod
    def _lift(other):
        if isinstance(other, Quat):
            return other
        if isinstance(other, (int, Fraction)):
            return Quat(other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Quat._from_halves(tuple(x + y for x, y in zip(self._h, o._h)))

    __radd__ = __add__

    def __neg__(self):
        return Quat._from_halves(tuple(-x for x in self._h))

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Quat._from_halves(tuple(x - y for x, y in zip(self._h, o._h)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Quat._from_halves(tuple(x * other for x in self._h))
        o = self._lift(other)
        if o is NotImplemented:
            return o
        a1, b1, c1, d1 = self._h
        a2, b2, c2, d2 = o._h
        # products of halves are quarters; twice the result is the sum over 2
        raw = (
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
        if any(x % 2 for x in raw):
            raise ValueError(f"product {self} * {o} leaves (1/2)Z coefficients")
        return Quat._from_halves(tuple(x // 2 for x in raw))

    def __rmul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o * self

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not supported")
        acc = Quat(1)
        for _ in range(n):
            acc = acc * self
        return acc

    def conj(self) -> Quat:
        a, b, c, d = self._h
        return Quat._from_halves((a, -b, -c, -d))

    def trd(self) -> Fraction:
        return Fraction(self._h[0])

    def nrd(self) -> Fraction:
        return Fraction(sum(x * x for x in self._h), 4)

    def is_scalar(self) -> bool:
        return not any(self._h[1:])

    def is_hurwitz(self) -> bool:
        return len({x % 2 for x in self._h}) == 1

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self._h == o._h

    def __hash__(self):
        return hash(self._h)

    def __str__(self):
        return format_quat(self)

    def __repr__(self):
        return f"Quat({format_quat(self)})"


ONE = Quat(1)
I = Quat(0, 1)
J = Quat(0, 0, 1)
K = Quat(0, 0, 0, 1)


def format_quat(q: Quat) -> str:
    """Render as ``a+bi+cj+dk``, dropping zero terms and unit coefficients."""
    out = ""
    for coef, unit in zip(q.coeffs, ("", "i", "j", "k")):
        if coef == 0:
            continue
        mag = abs(coef)
        body = str(mag) if (mag != 1 or not unit) else ""
        sign = "-" if coef < 0 else ("+" if out else "")
        out += sign + body + unit
    return out or "0"


def as_int(x: Fraction, what: str = "value") -> int:
    if x.denominator != 1:
        raise ModelError(f"{what} {x} is not a rational integer")
    return int(x)


@cache
def hurwitz_elements_of_norm(n: int) -> tuple[Quat, ...]:
    """All Hurwitz quaternions of reduced norm ``n`` in lexicographic coefficient order."""
    out = []
    # integral vectors, then vectors of odd halves; both scanned as 2x in [-2r, 2r]
    r = int(n ** 0.5) + 1
    for twice in itertools.product(range(-2 * r, 2 * r + 1), repeat=4):
        parity = {t % 2 for t in twice}
        if len(parity) != 1:
            continue
        if sum(t * t for t in twice) != 4 * n:
            continue
        out.append(Quat._from_halves(twice))
    return tuple(sorted(out, key=lambda q: q.coeffs))


def hurwitz_units() -> tuple[Quat, ...]:
    return hurwitz_elements_of_norm(1)


@dataclass(frozen=True)
class GeneratorSolution:
    sigma: Quat
    theta: Quat
    frob: Quat

    @property
    def ver(self) -> Quat:
        return -self.frob

    @property
    def pi(self) -> Quat:
        """theta (1 - F), which equals -(2 sigma + 1)."""
        return self.theta * (1 - self.frob)

    def key(self):
        return self.sigma.coeffs + self.theta.coeffs + self.frob.coeffs

    def __str__(self):
        return f"sigma = {self.sigma}, theta = {self.theta}, F = {self.frob}"


def relation_checks(s: Quat, t: Quat, f: Quat) -> dict[str, bool]:
    s2 = s * s
    p = t * (1 - f)
    return {
        "sigma^2 + sigma + 1 = 0": s2 + s + 1 == 0,
        "conj(sigma) = sigma^2": s.conj() == s2,
        "theta^2 = -1": t * t == -1,
        "F^2 = -2": f * f == -2,
        "F sigma = sigma^2 F": f * s == s2 * f,
        "F = sigma theta - theta sigma": f == s * t - t * s,
        "F = theta sigma^2 - sigma^2 theta": f == t * s2 - s2 * t,
        "1 = theta sigma - sigma^2 theta": t * s - s2 * t == 1,
        "conj(pi) = -pi": p.conj() == -p,
        "F pi = -pi F": f * p == -(p * f),
        "pi = -(2 sigma + 1)": p == -(2 * s + 1),
    }


@cache
def solve_generators() -> tuple[GeneratorSolution, ...]:
    """Every (sigma, theta, F) among units x units x norm-2 elements satisfying all relations.

    Solutions are sorted by the concatenated coefficient vectors
    (sigma, theta, F), each in (1, i, j, k) order; the first is designated.
    """
    units = hurwitz_units()
    norm2 = hurwitz_elements_of_norm(2)
    # one-variable relations prune each factor; the triple loop then checks everything
    sigmas = [s for s in units if s * s + s + 1 == 0]
    thetas = [t for t in units if t * t == -1]
    frobs = [f for f in norm2 if f * f == -2]
    found = []
    for s, t, f in itertools.product(sigmas, thetas, frobs):
        if all(relation_checks(s, t, f).values()):
            found.append(GeneratorSolution(s, t, f))
    if not found:
        raise ModelError("no Hurwitz quaternions satisfy the endomorphism relations")
    return tuple(sorted(found, key=GeneratorSolution.key))


def designated_solution() -> GeneratorSolution:
    return solve_generators()[0]


def endo_to_quat(e: Endo, sol: GeneratorSolution | None = None) -> Quat:
    """Ring homomorphism from endomorphism expressions to the quaternion model."""
    if sol is None:
        sol = designated_solution()
    if isinstance(e, Gen):
        table = {
            "id": ONE,
            "sigma": sol.sigma,
            "sigma2": sol.sigma * sol.sigma,
            "theta": sol.theta,
            "F": sol.frob,
            "V": sol.ver,
        }
        try:
            return table[e.name]
        except KeyError:
            raise ValueError(f"{e.name!r} is not an endomorphism fixing the origin") from None
    if isinstance(e, Sum):
        acc = Quat(0)
        for t in e.terms:
            acc = acc + endo_to_quat(t, sol)
        return acc
    if isinstance(e, Comp):
        acc = ONE
        for f in e.factors:
            acc = acc * endo_to_quat(f, sol)
        return acc
    if isinstance(e, Scaled):
        return e.n * endo_to_quat(e.expr, sol)
    raise TypeError(f"not an endomorphism expression: {e!r}")
