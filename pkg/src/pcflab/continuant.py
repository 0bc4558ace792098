"""Continuants, 2x2 ring matrices, and values of finite continued fractions.

The matrix of a word ``c_1, ..., c_n`` is the product of ``[[c_i, 1], [1, 0]]``
blocks; its entries are continuants of subwords, and the value of the finite
continued fraction is the ratio of the two left-column entries.  Infinity is
an honest projective point here, carried by the ``INF`` singleton.
"""

from __future__ import annotations

from typing import Iterable, List, Sequence, Tuple, Union

from .ring import ExtElem, RingElem


class _ProjectiveInfinity:
    """The point at infinity of the projective line."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("pcflab-INF")


INF = _ProjectiveInfinity()

Value = Union[RingElem, ExtElem, _ProjectiveInfinity]


class Mat2:
    """2x2 matrix with exact ring entries."""

    __slots__ = ("e11", "e12", "e21", "e22")

    def __init__(self, e11, e12, e21, e22):
        self.e11 = RingElem._wrap(e11)
        self.e12 = RingElem._wrap(e12)
        self.e21 = RingElem._wrap(e21)
        self.e22 = RingElem._wrap(e22)

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(1, 0, 0, 1)

    def __mul__(self, other: "Mat2") -> "Mat2":
        if not isinstance(other, Mat2):
            return NotImplemented
        return Mat2(
            self.e11 * other.e11 + self.e12 * other.e21,
            self.e11 * other.e12 + self.e12 * other.e22,
            self.e21 * other.e11 + self.e22 * other.e21,
            self.e21 * other.e12 + self.e22 * other.e22,
        )

    def det(self) -> RingElem:
        return self.e11 * self.e22 - self.e12 * self.e21

    def trace(self) -> RingElem:
        return self.e11 + self.e22

    def inverse(self) -> "Mat2":
        dt = self.det()
        if not dt:
            raise ZeroDivisionError("singular matrix")
        return Mat2(self.e22 / dt, -self.e12 / dt, -self.e21 / dt, self.e11 / dt)

    def __pow__(self, k: int) -> "Mat2":
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        out = Mat2.identity()
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __neg__(self) -> "Mat2":
        return Mat2(-self.e11, -self.e12, -self.e21, -self.e22)

    def __eq__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return (
            self.e11 == other.e11
            and self.e12 == other.e12
            and self.e21 == other.e21
            and self.e22 == other.e22
        )

    def __hash__(self):
        return hash((self.e11, self.e12, self.e21, self.e22))

    def __repr__(self):
        return f"Mat2([[{self.e11}, {self.e12}], [{self.e21}, {self.e22}]])"

    def is_identity_multiple(self) -> bool:
        """True when the matrix is c*I for some nonzero c."""
        return (not self.e12) and (not self.e21) and self.e11 == self.e22 and bool(self.e11)

    def entries(self) -> Tuple[RingElem, RingElem, RingElem, RingElem]:
        return (self.e11, self.e12, self.e21, self.e22)

    # -- projective action ------------------------------------------------

    def apply_vec(self, pq: Tuple) -> Tuple:
        p, q = pq
        return (self.e11 * p + self.e12 * q, self.e21 * p + self.e22 * q)

    def moebius(self, z: Value) -> Value:
        """Image of ``z`` (a ring value, extension value, or INF)."""
        if z is INF:
            p, q = self.e11, self.e21
        else:
            p, q = self.e11 * z + self.e12, self.e21 * z + self.e22
        if not q:
            if not p:
                raise ZeroDivisionError("indeterminate projective image")
            return INF
        return p / q


def continuant_matrix(c) -> Mat2:
    """The elementary block ``[[c, 1], [1, 0]]``."""
    return Mat2(c, 1, 1, 0)


def cf_matrix(word: Iterable) -> Mat2:
    out = Mat2.identity()
    for c in word:
        out = out * continuant_matrix(c)
    return out


def continuant(word: Sequence) -> RingElem:
    """K(c_1, ..., c_n) with K() = 1 and K(c) = c."""
    prev = RingElem(0)
    cur = RingElem(1)
    for c in word:
        prev, cur = cur, cur * RingElem._wrap(c) + prev
    return cur


def finite_cf_value(word: Sequence) -> Value:
    """Value of the finite continued fraction, INF for the empty word."""
    word = list(word)
    if not word:
        return INF
    p = continuant(word)
    q = continuant(word[1:])
    if not q:
        # p and q cannot vanish together: they are adjacent minors of a
        # determinant-(+-1) matrix
        return INF
    return p / q


def convergents(word: Sequence) -> List[Value]:
    """Values of all prefixes, starting with the empty one (INF)."""
    out: List[Value] = [INF]
    m = Mat2.identity()
    for c in word:
        m = m * continuant_matrix(c)
        out.append(INF if not m.e21 else m.e11 / m.e21)
    return out
