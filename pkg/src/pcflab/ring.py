"""Exact arithmetic in real quadratic fields and their quadratic extensions.

Two element types:

* :class:`RingElem` -- ``a + b*sqrt(d)`` with exact rational ``a, b`` and a
  squarefree ``d >= 2``.  Plain rationals are the degenerate case ``b == 0``
  (then ``d`` is dropped, so ``RingElem(3, 0, 2) == RingElem(3)``).
* :class:`ExtElem` -- ``x + y*v`` with ``v*v == theta`` for a non-square
  ``theta`` from the base field, plus an embedding sign selecting the real
  branch ``v > 0`` or ``v < 0``.

All comparisons reduce to rational sign tests; no floating point is used in
any decision.  ``__float__`` exists for casual display only.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Optional, Union

Rat = Union[int, Fraction]

__all__ = [
    "RingElem",
    "ExtElem",
    "parse_elem",
    "format_elem",
    "norm",
    "conjugate",
    "sign_under_embedding",
    "sqrt_in_ring",
    "unit_power",
    "residue_class",
    "ext_norm",
    "ext_conj",
    "val2",
    "root",
]


def _squarefree(d: int) -> bool:
    if d < 2:
        return False
    p = 2
    n = d
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        if n % p == 0:
            n //= p
        p += 1
    return True


def _rat_sqrt(q: Fraction) -> Optional[Fraction]:
    """Exact square root of a rational, or None."""
    if q < 0:
        return None
    if q == 0:
        return Fraction(0)
    n, m = q.numerator, q.denominator
    rn, rm = math.isqrt(n), math.isqrt(m)
    if rn * rn == n and rm * rm == m:
        return Fraction(rn, rm)
    return None


def _sgn(q: Fraction) -> int:
    return (q > 0) - (q < 0)


class RingElem:
    """``a + b*sqrt(d)`` with exact rational coordinates."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a: Rat = 0, b: Rat = 0, d: Optional[int] = None):
        a = Fraction(a)
        b = Fraction(b)
        if b == 0:
            d = None
        elif d is None:
            raise ValueError("irrational part needs a field: pass d")
        elif not _squarefree(d):
            raise ValueError(f"d must be squarefree and >= 2, got {d}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    def __setattr__(self, *_):
        raise AttributeError("RingElem is immutable")

    # -- coercion ---------------------------------------------------------

    @staticmethod
    def _wrap(x) -> "RingElem":
        if isinstance(x, RingElem):
            return x
        if isinstance(x, (int, Fraction)):
            return RingElem(x)
        raise TypeError(f"cannot interpret {x!r} as a ring element")

    def _join(self, other: "RingElem") -> Optional[int]:
        if self.d is None:
            return other.d
        if other.d is None or other.d == self.d:
            return self.d
        raise ValueError(f"mixed fields: d={self.d} vs d={other.d}")

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, ExtElem):
            return NotImplemented
        try:
            o = self._wrap(other)
        except TypeError:
            return NotImplemented
        return RingElem(self.a + o.a, self.b + o.b, self._join(o))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, ExtElem):
            return NotImplemented
        try:
            o = self._wrap(other)
        except TypeError:
            return NotImplemented
        return RingElem(self.a - o.a, self.b - o.b, self._join(o))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, ExtElem):
            return NotImplemented
        try:
            o = self._wrap(other)
        except TypeError:
            return NotImplemented
        d = self._join(o)
        dn = 0 if d is None else d
        return RingElem(
            self.a * o.a + dn * self.b * o.b,
            self.a * o.b + self.b * o.a,
            d,
        )

    __rmul__ = __mul__

    def inverse(self) -> "RingElem":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero ring element")
        return RingElem(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        if isinstance(other, ExtElem):
            return NotImplemented
        try:
            o = self._wrap(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._wrap(other) * self.inverse()

    def __pow__(self, k: int) -> "RingElem":
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        out = RingElem(1)
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __neg__(self):
        return RingElem(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __eq__(self, other):
        if isinstance(other, ExtElem):
            return other.__eq__(self)
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, RingElem):
            if self.b == 0 or other.b == 0:
                return self.a == other.a and self.b == other.b
            return self.a == other.a and self.b == other.b and self.d == other.d
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __float__(self):
        if self.b == 0:
            return float(self.a)
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __repr__(self):
        if self.d is None:
            return f"RingElem({str(self)!r})"
        return f"RingElem({str(self)!r}, d={self.d})"

    def __str__(self):
        return format_elem(self)

    # -- field/ring operations -------------------------------------------

    def norm(self) -> Fraction:
        """Field norm down to the rationals (``a*a - d*b*b``)."""
        if self.d is None:
            return self.a * self.a
        return self.a * self.a - self.d * self.b * self.b

    def conjugate(self) -> "RingElem":
        return RingElem(self.a, -self.b, self.d)

    def trace(self) -> Fraction:
        return 2 * self.a

    def sign_under_embedding(self) -> int:
        """Sign of the element under the embedding with ``sqrt(d) > 0``."""
        a, b = self.a, self.b
        if b == 0:
            return _sgn(a)
        if a == 0:
            return _sgn(b)
        sa, sb = _sgn(a), _sgn(b)
        if sa == sb:
            return sa
        # opposite signs: |a| vs |b|*sqrt(d) decided by squares
        return sa * _sgn(a * a - self.d * b * b)

    def is_integral(self) -> bool:
        return self.a.denominator == 1 and self.b.denominator == 1

    def is_unit(self) -> bool:
        return self.is_integral() and abs(self.norm()) == 1


def root(d: int) -> RingElem:
    """The generator ``sqrt(d)`` itself."""
    return RingElem(0, 1, d)


# module-level aliases mirroring the method names, convenient for mapping
def norm(e) -> Fraction:
    return RingElem._wrap(e).norm()


def conjugate(e) -> RingElem:
    return RingElem._wrap(e).conjugate()


def sign_under_embedding(e) -> int:
    if isinstance(e, ExtElem):
        return e.sign_under_embedding()
    return RingElem._wrap(e).sign_under_embedding()


def sqrt_in_ring(e, d: Optional[int] = None) -> Optional[RingElem]:
    """Square root of ``e`` inside Q(sqrt d), canonical nonnegative branch.

    The ambient field is taken from ``e`` itself when it has an irrational
    part, else from ``d``; with neither, only rational squares succeed.
    Returns None when ``e`` is not a square in that field.
    """
    e = RingElem._wrap(e)
    amb = e.d if e.d is not None else d
    if not e:
        return RingElem(0)
    if amb is None:
        s = _rat_sqrt(e.a)
        return None if s is None else RingElem(s)
    s = _rat_sqrt(e.norm())
    if s is None:
        return None
    for t in ((e.a + s) / 2, (e.a - s) / 2):
        x0 = _rat_sqrt(t)
        if x0 is None:
            continue
        if x0 == 0:
            if e.b != 0:
                continue
            y0 = _rat_sqrt(e.a / amb)
            if y0 is None:
                continue
            r = RingElem(0, y0, amb)
        else:
            r = RingElem(x0, e.b / (2 * x0), amb)
        if r * r == e:
            return r if r.sign_under_embedding() >= 0 else -r
    return None


def unit_power(u, k: int) -> RingElem:
    u = RingElem._wrap(u)
    if not u.is_unit():
        raise ValueError(f"{u} is not a unit")
    return u ** k


def residue_class(e, m: int) -> tuple:
    """Coordinatewise reduction mod ``m`` for an integral element."""
    e = RingElem._wrap(e)
    if not e.is_integral():
        raise ValueError(f"{e} is not integral")
    return (int(e.a) % m, int(e.b) % m)


# ---------------------------------------------------------------------------


class ExtElem:
    """``x + y*v`` with ``v*v == theta``, theta a non-square base element.

    ``branch`` fixes which real square root ``v`` denotes: +1 for ``v > 0``
    under the base embedding, -1 for the other one.  Equality is equality of
    the represented value, so e.g. ``1 + sqrt(8)/2`` equals ``1 + sqrt(2)``.
    """

    __slots__ = ("x", "y", "theta", "branch")

    def __init__(self, x, y, theta, branch: int = 1):
        x = RingElem._wrap(x)
        y = RingElem._wrap(y)
        theta = RingElem._wrap(theta)
        if branch not in (1, -1):
            raise ValueError("branch must be +1 or -1")
        x._join(y)
        x._join(theta)
        y._join(theta)
        if not theta:
            raise ValueError("theta must be nonzero")
        if sqrt_in_ring(theta, theta.d or x.d or y.d) is not None:
            raise ValueError(f"theta={theta} is a square; extension degenerates")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "branch", branch)

    def __setattr__(self, *_):
        raise AttributeError("ExtElem is immutable")

    def _base_d(self) -> Optional[int]:
        return self.x.d or self.y.d or self.theta.d

    def _compat(self, other: "ExtElem"):
        if self.theta != other.theta or self.branch != other.branch:
            raise ValueError("elements live in different extensions")

    @classmethod
    def _lift(cls, v, like: "ExtElem") -> "ExtElem":
        if isinstance(v, ExtElem):
            return v
        return cls(RingElem._wrap(v), 0, like.theta, like.branch)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        try:
            o = self._lift(other, self)
        except TypeError:
            return NotImplemented
        self._compat(o)
        return ExtElem(self.x + o.x, self.y + o.y, self.theta, self.branch)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._lift(other, self))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = self._lift(other, self)
        except TypeError:
            return NotImplemented
        self._compat(o)
        return ExtElem(
            self.x * o.x + self.theta * self.y * o.y,
            self.x * o.y + self.y * o.x,
            self.theta,
            self.branch,
        )

    __rmul__ = __mul__

    def inverse(self) -> "ExtElem":
        n = self.ext_norm()
        if not n:
            raise ZeroDivisionError("division by zero extension element")
        return ExtElem(self.x / n, -self.y / n, self.theta, self.branch)

    def __truediv__(self, other):
        o = self._lift(other, self)
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._lift(other, self) * self.inverse()

    def __pow__(self, k: int) -> "ExtElem":
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        out = ExtElem(1, 0, self.theta, self.branch)
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __neg__(self):
        return ExtElem(-self.x, -self.y, self.theta, self.branch)

    def __bool__(self):
        return bool(self.x) or bool(self.y)

    # -- value identity ---------------------------------------------------

    def _radical_key(self):
        # (y^2*theta, sign of y-part as a real number); None when y == 0
        if not self.y:
            return None
        sq = self.y * self.y * self.theta
        sgn = self.branch * self.y.sign_under_embedding()
        return (sq, sgn)

    def __eq__(self, other):
        if isinstance(other, ExtElem):
            return self.x == other.x and self._radical_key() == other._radical_key()
        if isinstance(other, (int, Fraction, RingElem)):
            return not self.y and self.x == other
        return NotImplemented

    def __hash__(self):
        key = self._radical_key()
        if key is None:
            return hash(self.x)
        return hash((self.x, key))

    def __float__(self):
        t = float(self.theta)
        if t < 0:
            raise ValueError("complex value has no float")
        return float(self.x) + float(self.y) * self.branch * math.sqrt(t)

    def __repr__(self):
        return f"ExtElem({self.x!s}, {self.y!s}, theta={self.theta!s}, branch={self.branch:+d})"

    def __str__(self):
        v = "v" if self.branch == 1 else "(-v)"
        return f"({self.x})+({self.y})*{v} [v^2={self.theta}]"

    # -- operations -------------------------------------------------------

    def ext_norm(self) -> RingElem:
        return self.x * self.x - self.theta * self.y * self.y

    def ext_conj(self) -> "ExtElem":
        return ExtElem(self.x, -self.y, self.theta, self.branch)

    def ext_trace(self) -> RingElem:
        return 2 * self.x

    def sign_under_embedding(self) -> int:
        if self.theta.sign_under_embedding() < 0:
            raise ValueError("element is not real: theta < 0 under the embedding")
        if not self.y:
            return self.x.sign_under_embedding()
        sy = self.branch * self.y.sign_under_embedding()
        if not self.x:
            return sy
        sx = self.x.sign_under_embedding()
        if sx == sy:
            return sx
        # compare x^2 against theta*y^2 inside the base field
        return sx * self.ext_norm().sign_under_embedding()


def ext_norm(x: ExtElem) -> RingElem:
    return x.ext_norm()


def ext_conj(x: ExtElem) -> ExtElem:
    return x.ext_conj()


# ---------------------------------------------------------------------------
# 2-adic valuation


_VAL2_THETAS = (RingElem(1, 1, 2), RingElem(0, 1, 2))  # 1+w and w


def _val2_fraction(q: Fraction):
    if q == 0:
        return math.inf
    n = q.numerator if q.numerator > 0 else -q.numerator
    den = q.denominator
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    while den % 2 == 0:
        den //= 2
        v -= 1
    return Fraction(v)


def val2(x):
    """2-adic valuation, normalized so that ``val2(2) == 1``.

    Accepts rationals, elements of Q(sqrt 2), and elements of the two
    quadratic extensions of Q(sqrt 2) used here (``v*v == 1+w`` or
    ``v*v == w``); in those, 2 is totally ramified, so the valuation is
    ``v2(absolute norm)/4`` with values in quarter-integers.
    """
    if isinstance(x, ExtElem):
        if x._base_d() not in (None, 2) or all(x.theta != t for t in _VAL2_THETAS):
            raise ValueError("val2 supports only the two ramified extensions of Q(sqrt 2)")
        if not x:
            return math.inf
        return _val2_fraction(x.ext_norm().norm()) / 4
    e = RingElem._wrap(x)
    if e.d is None:
        return _val2_fraction(e.a)
    if e.d != 2:
        raise ValueError("val2 is defined over Q(sqrt 2) only")
    if not e:
        return math.inf
    return _val2_fraction(e.norm()) / 2


# ---------------------------------------------------------------------------
# text form


_RAT_RE = r"-?\d+(?:/\d+)?"
_ELEM_PATTERNS = (
    re.compile(rf"(?P<a>{_RAT_RE})"),
    re.compile(rf"(?P<bneg>-)?(?:(?P<b>\d+(?:/\d+)?)\*)?w"),
    re.compile(rf"(?P<a>{_RAT_RE})(?P<sign>[+-])(?:(?P<b>\d+(?:/\d+)?)\*)?w"),
)


def parse_elem(s: str, d: Optional[int] = 2) -> RingElem:
    """Parse ``3-2*w``, ``w``, ``-7+5*w``, ``5/2*w``, ``-1/2`` forms."""
    text = s.replace(" ", "")
    for pat in _ELEM_PATTERNS:
        m = pat.fullmatch(text)
        if not m:
            continue
        g = m.groupdict()
        a = Fraction(g["a"]) if g.get("a") else Fraction(0)
        if "b" in g:
            b = Fraction(g["b"]) if g["b"] else Fraction(1)
            if g.get("bneg") or g.get("sign") == "-":
                b = -b
            if d is None:
                raise ValueError(f"{s!r} uses w but no d was given")
            return RingElem(a, b, d)
        return RingElem(a)
    raise ValueError(f"cannot parse ring element {s!r}")


def format_elem(e: RingElem) -> str:
    e = RingElem._wrap(e)
    if e.b == 0:
        return str(e.a)
    bb = abs(e.b)
    wpart = "w" if bb == 1 else f"{bb}*w"
    if e.a == 0:
        return wpart if e.b > 0 else f"-{wpart}"
    return f"{e.a}{'+' if e.b > 0 else '-'}{wpart}"
