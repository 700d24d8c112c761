"""Exact arithmetic in the binary fields F_2, F_4, F_16 and F_64.

Elements are stored as integers whose bits are the coordinates in the
polynomial basis 1, t, t^2, ... of F_2[t]/(m_k(t)), with

    k = 1: m(t) = t + 1          (only 0 and 1)
    k = 2: m(t) = t^2 + t + 1
    k = 4: m(t) = t^4 + t + 1
    k = 6: m(t) = t^6 + t + 1

The class of t is primitive for k = 2, 4, 6, so multiplication goes through
exp/log tables built once per field.

The designated cube root of unity is w = t^((2^k - 1)/3).  In F_4 this is
t itself, so w^2 = w + 1.  Subfield embeddings F_2 -> F_4 -> F_16 and
F_4 -> F_64 send w to the designated w of the larger field.  F_16 is not a
subfield of F_64, so no embedding exists between them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cache

DEGREES = (1, 2, 4, 6)

MODULI = {1: 0b11, 2: 0b111, 4: 0b10011, 6: 0b1000011}


class FieldError(ValueError):
    """Raised on unsupported degrees, mixed-field operands and division by zero."""


def _check_degree(k: int) -> None:
    if k not in DEGREES:
        raise FieldError(f"unsupported field degree {k!r}; expected one of {DEGREES}")


def _clmul_mod(a: int, b: int, k: int) -> int:
    # schoolbook carry-less product reduced modulo m_k
    mod = MODULI[k]
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> k & 1:
            a ^= mod
    return r


class Field:
    """The field F_{2^k}; use :func:`GF` to get the cached instance."""

    def __init__(self, k: int):
        _check_degree(k)
        self.k = k
        self.order = 1 << k
        n = self.order - 1
        exp = [0] * (2 * n)
        log = [0] * self.order
        x = 1
        gen = 1 if k == 1 else 0b10
        for i in range(n):
            exp[i] = exp[i + n] = x
            log[x] = i
            x = _clmul_mod(x, gen, k)
        if x != 1 or len(set(exp[:n])) != n:
            raise FieldError(f"t is not primitive modulo {MODULI[k]:#b}")
        self._exp = exp
        self._log = log
        self._n = n

    def __repr__(self):
        return f"GF(2^{self.k})"

    # raw integer kernels; operands are assumed reduced
    def mul_int(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv_int(self, a: int) -> int:
        if a == 0:
            raise FieldError("inverse of zero")
        return self._exp[(self._n - self._log[a]) % self._n]

    def pow_int(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise FieldError("negative power of zero")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % self._n]

    def log_int(self, a: int) -> int:
        if a == 0:
            raise FieldError("log of zero")
        return self._log[a]

    def exp_int(self, e: int) -> int:
        return self._exp[e % self._n]

    def __call__(self, value: int) -> FieldElement:
        if not 0 <= value < self.order:
            raise FieldError(f"{value} is not a coordinate vector of {self!r}")
        return FieldElement(value, self.k)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(0, self.k)

    @property
    def one(self) -> FieldElement:
        return FieldElement(1, self.k)

    @property
    def gen(self) -> FieldElement:
        """Class of t in the polynomial basis."""
        return FieldElement(1 if self.k == 1 else 0b10, self.k)

    @property
    def omega(self) -> FieldElement:
        if self.k % 2:
            raise FieldError(f"{self!r} contains no primitive cube root of unity")
        return FieldElement(self.exp_int(self._n // 3), self.k)

    def elements(self) -> list[FieldElement]:
        return [FieldElement(v, self.k) for v in range(self.order)]


@cache
def GF(k: int) -> Field:
    return Field(k)


@dataclass(frozen=True, slots=True)
class FieldElement:
    value: int
    degree: int

    @property
    def field(self) -> Field:
        return GF(self.degree)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.degree != self.degree:
                raise FieldError(
                    f"operands live in GF(2^{self.degree}) and GF(2^{other.degree}); embed first"
                )
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return other & 1
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElement(self.value ^ v, self.degree)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElement(self.field.mul_int(self.value, v), self.degree)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        f = self.field
        return FieldElement(f.mul_int(self.value, f.inv_int(v)), self.degree)

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElement(v, self.degree) / self

    def __pow__(self, e: int):
        return FieldElement(self.field.pow_int(self.value, e), self.degree)

    def inverse(self) -> FieldElement:
        return FieldElement(self.field.inv_int(self.value), self.degree)

    def frobenius(self) -> FieldElement:
        """Absolute Frobenius x -> x^2."""
        return FieldElement(self.field.mul_int(self.value, self.value), self.degree)

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"FieldElement({format_element(self)!r}, k={self.degree})"


def frobenius(a: FieldElement) -> FieldElement:
    return a.frobenius()


def omega(k: int = 2) -> FieldElement:
    return GF(k).omega


def enumerate_field(k: int) -> list[FieldElement]:
    """All 2^k elements in coordinate order (so 0 first, then 1)."""
    _check_degree(k)
    return GF(k).elements()


def is_subfield(j: int, k: int) -> bool:
    _check_degree(j)
    _check_degree(k)
    return k % j == 0


@cache
def _embedding_table(j: int, k: int) -> tuple[int, ...]:
    if not is_subfield(j, k):
        raise FieldError(f"GF(2^{j}) is not a subfield of GF(2^{k})")
    big = GF(k)
    if j == 1:
        return (0, 1)
    if j == k:
        return tuple(range(1 << k))
    # image of t: the root of m_j in GF(2^k) with the smallest discrete log
    mod = MODULI[j]
    roots = []
    for v in range(1, big.order):
        acc, p = 0, 1
        for i in range(j + 1):
            if mod >> i & 1:
                acc ^= p
            p = big.mul_int(p, v)
        if acc == 0:
            roots.append(v)
    root = min(roots, key=big.log_int)
    table = []
    for v in range(1 << j):
        acc, p = 0, 1
        for i in range(j):
            if v >> i & 1:
                acc ^= p
            p = big.mul_int(p, root)
        table.append(acc)
    return tuple(table)


def embed(a: FieldElement, k: int) -> FieldElement:
    """Image of ``a`` under the canonical embedding into GF(2^k)."""
    if a.degree == k:
        return a
    return FieldElement(_embedding_table(a.degree, k)[a.value], k)


def restrict(a: FieldElement, j: int) -> FieldElement:
    """Inverse of :func:`embed`; raises if ``a`` is not in the image of GF(2^j)."""
    table = _embedding_table(j, a.degree)
    try:
        return FieldElement(table.index(a.value), j)
    except ValueError:
        raise FieldError(f"{a} does not lie in GF(2^{j})") from None


def in_subfield(a: FieldElement, j: int) -> bool:
    return is_subfield(j, a.degree) and a.value in _embedding_table(j, a.degree)


# --- text form -------------------------------------------------------------

_F4_NAMES = ("0", "1", "w", "w^2")


def format_element(a: FieldElement) -> str:
    """Render ``a``: F_4 members as 0, 1, w, w^2, anything else as a polynomial in t."""
    if a.degree == 1:
        return str(a.value)
    if in_subfield(a, 2):
        return _F4_NAMES[restrict(a, 2).value]
    terms = []
    for i in reversed(range(a.degree)):
        if a.value >> i & 1:
            terms.append("1" if i == 0 else "t" if i == 1 else f"t^{i}")
    return "+".join(terms)


_TERM = re.compile(r"^(?:(0|1)|([wt])(?:\^(\d+))?)$")


def parse_element(text: str, k: int) -> FieldElement:
    """Parse a sum of terms ``0``, ``1``, ``w[^n]``, ``t[^n]`` into GF(2^k)."""
    f = GF(k)
    acc = f.zero
    body = text.replace(" ", "")
    if not body:
        raise FieldError("empty field element")
    for term in body.split("+"):
        m = _TERM.match(term)
        if m is None:
            raise FieldError(f"cannot parse field term {term!r} in {text!r}")
        const, sym, exp = m.groups()
        if const is not None:
            acc = acc + int(const)
            continue
        base = f.omega if sym == "w" else f.gen
        acc = acc + base ** (int(exp) if exp else 1)
    return acc
