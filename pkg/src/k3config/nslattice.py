"""Neron-Severi classes of A = E x E and the lattice spanned by the 42 curves.

A class is a Hermitian matrix [[alpha, beta], [conj(beta), delta]] with
alpha, delta integers and beta in the quaternion order.  The pairing is

    (L1, L2) = alpha1 delta2 + alpha2 delta1 - gamma1 beta2 - gamma2 beta1

with gamma = conj(beta); the quaternion part must come out scalar.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from math import isqrt, prod

from . import intmat
from .catalog import TABLE_ORDER, base_of
from .ecurve import Endo
from .quatorder import GeneratorSolution, ModelError, Quat, as_int, endo_to_quat, solve_generators


@dataclass(frozen=True)
class NSClass:
    alpha: int
    beta: Quat
    delta: int

    @property
    def gamma(self) -> Quat:
        return self.beta.conj()

    def matrix(self) -> tuple[tuple, tuple]:
        return ((self.alpha, self.beta), (self.gamma, self.delta))

    def __add__(self, other: NSClass) -> NSClass:
        return NSClass(self.alpha + other.alpha, self.beta + other.beta, self.delta + other.delta)

    def __str__(self):
        return f"[[{self.alpha}, {self.beta}], [{self.gamma}, {self.delta}]]"


X_CLASS = NSClass(1, Quat(0), 1)
# E x {0} and {0} x E
E1_CLASS = NSClass(0, Quat(0), 1)
E2_CLASS = NSClass(1, Quat(0), 0)


def intersection(L1: NSClass, L2: NSClass) -> int:
    q = L1.alpha * L2.delta + L2.alpha * L1.delta - (L1.gamma * L2.beta + L2.gamma * L1.beta)
    if not q.is_scalar():
        raise ModelError(f"pairing of {L1} and {L2} is not scalar: {q}")
    return as_int(q.a, "intersection number")


def self_intersection(L: NSClass) -> int:
    q = L.alpha * L.delta - L.gamma * L.beta
    if not q.is_scalar():
        raise ModelError(f"det of {L} is not scalar: {q}")
    return 2 * as_int(q.a, "determinant")


def delta_class(a1: Quat, a2: Quat) -> NSClass:
    """Class of the locus a1(x) + a2(y) = 0."""
    alpha = a1.conj() * a1
    delta = a2.conj() * a2
    if not (alpha.is_scalar() and delta.is_scalar()):
        raise ModelError("diagonal of a delta class is not scalar")
    return NSClass(
        as_int(alpha.a, "alpha"),
        a1.conj() * a2,
        as_int(delta.a, "delta"),
    )


def delta_class_of(locus: tuple[Endo, Endo], sol: GeneratorSolution | None = None) -> NSClass:
    return delta_class(endo_to_quat(locus[0], sol), endo_to_quat(locus[1], sol))


def curve_class(name: str, sol: GeneratorSolution | None = None) -> NSClass:
    """Class of any of the 24 curves; translates share the class of their base curve."""
    base = base_of(name)
    return delta_class_of(base.locus, sol)


def image_pairing(hom: tuple[Endo, Endo], locus: tuple[Endo, Endo], sol=None) -> int:
    """(image of hom) . (locus) computed as the degree Nrd(c a + d b) of the pulled-back map."""
    a, b = (endo_to_quat(e, sol) for e in hom)
    c, d = (endo_to_quat(e, sol) for e in locus)
    return as_int((c * a + d * b).nrd(), "degree")


def intersection_table(sol: GeneratorSolution | None = None) -> list[list[int]]:
    classes = [curve_class(n, sol) for n in TABLE_ORDER]
    return [[intersection(x, y) for y in classes] for x in classes]


def tables_across_solutions() -> set[tuple[tuple[int, ...], ...]]:
    return {tuple(map(tuple, intersection_table(s))) for s in solve_generators()}


@cache
def _pair_cache(n1: str, n2: str) -> int:
    return intersection(curve_class(n1), curve_class(n2))


def pairing_on_A(n1: str, n2: str) -> int:
    """Intersection number on A of two of the 24 curves (designated generators)."""
    return _pair_cache(*sorted((n1, n2)))


# --- lattice of a configuration -------------------------------------------------


@dataclass
class GramData:
    matrix: list[list[int]]
    rank: int
    elementary_divisors: list[int]
    discriminant: int
    radical_basis: list[list[int]] = field(repr=False)
    signature: tuple[int, int] | None = None

    @property
    def radical_rank(self) -> int:
        return len(self.matrix) - self.rank

    def index_against(self, target_disc: int) -> int | None:
        """Index of this lattice in an overlattice of discriminant ``target_disc``, if square."""
        if target_disc == 0 or self.discriminant % target_disc:
            return None
        q = self.discriminant // target_disc
        r = isqrt(q) if q > 0 else -1
        return r if r >= 0 and r * r == q else None

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "elementary_divisors": self.elementary_divisors,
            "discriminant": self.discriminant,
            "radical_rank": self.radical_rank,
            "signature": list(self.signature) if self.signature else None,
        }


def gram_matrix(incidence) -> list[list[int]]:
    """Incidence with -2 on the diagonal: the Gram matrix of smooth rational curves on a K3."""
    n = len(incidence)
    return [[-2 if i == j else int(incidence[i][j]) for j in range(n)] for i in range(n)]


def _signature(B) -> tuple[int, int]:
    """(positive, negative) inertia by symmetric elimination over Q (Sylvester's law)."""
    M = [[Fraction(x) for x in row] for row in B]
    n = len(M)
    pos = neg = 0
    for k in range(n):
        piv = next((i for i in range(k, n) if M[i][i]), None)
        if piv is None:
            # find an off-diagonal entry to create a nonzero pivot
            pair = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if M[i][j]), None)
            if pair is None:
                break
            i, j = pair
            M[i] = [a + b for a, b in zip(M[i], M[j])]
            for row in M:
                row[i] += row[j]
            piv = i
        M[k], M[piv] = M[piv], M[k]
        for row in M:
            row[k], row[piv] = row[piv], row[k]
        p = M[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            f = M[i][k] / p
            if f:
                M[i] = [a - f * b for a, b in zip(M[i], M[k])]
        # the trailing block is now the Schur complement; row k is no longer needed
        for i in range(k + 1, n):
            M[k][i] = Fraction(0)
    return pos, neg


def gram_and_discriminant(incidence) -> GramData:
    """Rank, elementary divisors and discriminant of the lattice spanned by curves.

    The span is Z^n modulo the radical of the Gram form; the radical is read
    off as the saturated left kernel of a unimodular reduction, and the
    quotient Gram matrix is the form restricted to the complementary rows.
    """
    G = gram_matrix(incidence)
    complement, kernel = intmat.left_kernel_basis(G)
    B = intmat.matmul(intmat.matmul(complement, G), intmat.transpose(complement))
    disc = intmat.det(B)
    divisors = intmat.smith_invariants(G)
    if abs(disc) != prod(divisors):
        raise ModelError(
            f"quotient determinant {disc} disagrees with Smith invariants {divisors}"
        )
    return GramData(
        matrix=G,
        rank=len(complement),
        elementary_divisors=divisors,
        discriminant=disc,
        radical_basis=kernel,
        signature=_signature(B),
    )
