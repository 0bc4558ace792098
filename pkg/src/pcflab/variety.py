"""Families of periodic continued fractions sharing a prescribed root pair.

Fixing a quadratic ``A x^2 + B x + C`` picks out, for each type ``(N, k)``,
the affine family of PCFs whose fixed-point quadratic is proportional to it.
This module provides the membership residuals for that family, the projection
onto the Pell-type conic, closed-form solutions for the short types, a
rational parametrization for type ``(0, 3)``, the plane and curve models used
by the longer-type searches, the correspondences that move points between the
``(0, 3)`` and ``(1, 2)`` pictures, and residual checks for points on the
cubic curves that show up along the way.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple, Union

from .continuant import INF, Mat2, Value, cf_matrix
from .pcf import Pcf, QuadPoly, RootPair, e_matrix, quad_poly_of_matrix, quad_roots
from .ring import ExtElem, RingElem, conjugate, format_elem, root, sqrt_in_ring

Coord = Union[RingElem, ExtElem]


class TargetRoots:
    """Projective coefficient triple ``(A, B, C)`` of the prescribed quadratic."""

    __slots__ = ("A", "B", "C")

    def __init__(self, A, B, C):
        A = RingElem._wrap(A)
        B = RingElem._wrap(B)
        C = RingElem._wrap(C)
        if not (A or B or C):
            raise ValueError("target coefficients must not all vanish")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "C", C)

    def __setattr__(self, *_):
        raise AttributeError("TargetRoots is immutable")

    @classmethod
    def of_value(cls, alpha) -> "TargetRoots":
        """Family whose roots are ``alpha`` and its conjugate: ``x^2 - alpha``... scaled as ``(1, 0, -alpha)``."""
        return cls(1, 0, -RingElem._wrap(alpha))

    def quad(self) -> QuadPoly:
        return QuadPoly(self.A, self.B, self.C)

    def root_pair(self, ambient_d: Optional[int] = None) -> RootPair:
        return quad_roots(self.quad(), ambient_d)

    def conjugated(self) -> "TargetRoots":
        return TargetRoots(conjugate(self.A), conjugate(self.B), conjugate(self.C))

    def __iter__(self):
        return iter((self.A, self.B, self.C))

    def __eq__(self, other):
        if not isinstance(other, TargetRoots):
            return NotImplemented
        return (self.A, self.B, self.C) == (other.A, other.B, other.C)

    def __hash__(self):
        return hash((self.A, self.B, self.C))

    def __repr__(self):
        return f"TargetRoots({self.A!r}, {self.B!r}, {self.C!r})"

    def __str__(self):
        return f"({format_elem(self.A)}, {format_elem(self.B)}, {format_elem(self.C)})"


class VarietyPoint:
    """Coordinate tuple ``(b_1..b_N, a_1..a_k)`` of a candidate type-``(N,k)`` PCF."""

    __slots__ = ("coords", "n", "k")

    def __init__(self, coords: Sequence, n: int, k: int):
        coords = tuple(RingElem._wrap(c) for c in coords)
        if k < 1 or n < 0 or len(coords) != n + k:
            raise ValueError("need n >= 0, k >= 1 and n + k coordinates")
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", k)

    def __setattr__(self, *_):
        raise AttributeError("VarietyPoint is immutable")

    @classmethod
    def of_pcf(cls, P: Pcf) -> "VarietyPoint":
        return cls(P.pre + P.per, P.n, P.k)

    def pcf(self) -> Pcf:
        return Pcf(self.coords[: self.n], self.coords[self.n :])

    def __iter__(self):
        return iter(self.coords)

    def __eq__(self, other):
        if not isinstance(other, VarietyPoint):
            return NotImplemented
        return (self.coords, self.n, self.k) == (other.coords, other.n, other.k)

    def __hash__(self):
        return hash((self.coords, self.n, self.k))

    def __repr__(self):
        return f"VarietyPoint({self.coords!r}, {self.n}, {self.k})"

    def __str__(self):
        return "(" + ", ".join(format_elem(c) for c in self.coords) + ")"


# ---------------------------------------------------------------------------
# membership residuals and the conic projection
# ---------------------------------------------------------------------------


def variety_residuals(T: TargetRoots, p: VarietyPoint) -> Tuple[RingElem, RingElem, RingElem]:
    """Three defects whose simultaneous vanishing makes ``p`` a family member.

    They are the pairwise cross-products of ``(A, B, C)`` against the
    coefficients of the fixed-point quadratic of ``p``, so no scaling of the
    target changes the zero set.
    """
    E = e_matrix(p.pcf())
    diag = E.e22 - E.e11
    r1 = T.A * diag - T.B * E.e21
    r2 = -T.A * E.e12 - T.C * E.e21
    r3 = -T.B * E.e12 - T.C * diag
    return (r1, r2, r3)


def is_member(T: TargetRoots, p: VarietyPoint) -> bool:
    return not any(variety_residuals(T, p))


def vnk_residuals(p: VarietyPoint) -> Tuple[RingElem, RingElem, RingElem]:
    """Defects for the divergence locus shared by every target.

    The locus is where the period matrix alone is a multiple of the
    identity, so the prefix coordinates never enter.
    """
    M = cf_matrix(p.coords[p.n :])
    return (M.e12, M.e21, M.e22 - M.e11)


def fp_project(T: TargetRoots, p: VarietyPoint) -> Tuple[RingElem, RingElem]:
    """Image ``(E21, E22)`` of a member on the conic ``C x^2 - B xy + A y^2 = (-1)^k A``."""
    if not is_member(T, p):
        raise ValueError(f"{p} is not a member of the family {T}")
    E = e_matrix(p.pcf())
    return (E.e21, E.e22)


def fp_conic_residual(T: TargetRoots, k: int, xy: Tuple) -> RingElem:
    x = RingElem._wrap(xy[0])
    y = RingElem._wrap(xy[1])
    sign = -1 if k % 2 else 1
    return T.C * x * x - T.B * x * y + T.A * y * y - sign * T.A


# ---------------------------------------------------------------------------
# the three short types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SmallTypeSolution:
    """Exact solution set of a type ``(0,1)``, ``(0,2)`` or ``(1,1)`` family."""

    type_nk: Tuple[int, int]
    points: Tuple[Tuple[Coord, ...], ...]
    rational: bool
    degenerate: bool
    note: str = ""

    def __str__(self):
        if self.degenerate:
            return f"type {self.type_nk}: degenerate component ({self.note})"
        if not self.points:
            return f"type {self.type_nk}: empty"
        body = "; ".join(
            "(" + ", ".join(str(c) for c in pt) + ")" for pt in self.points
        )
        tag = "" if self.rational else " [needs a quadratic extension]"
        return f"type {self.type_nk}: {body}{tag}"


def solve_small_type(T: TargetRoots, type_nk: Tuple[int, int]) -> SmallTypeSolution:
    """Closed-form point sets for the three types with at most two coordinates.

    Points may live in a quadratic extension of the coefficient field; the
    ``rational`` flag reports whether all coordinates stay in the base ring's
    fraction field.  Degenerate targets that make a whole component collapse
    are flagged instead of enumerated.
    """
    A, B, C = T.A, T.B, T.C
    nk = tuple(type_nk)
    if nk == (0, 1):
        # quadratic of [;a1] is x^2 - a1 x - 1, so A must divide both ends
        if not A:
            return SmallTypeSolution(nk, (), True, True, "leading coefficient zero")
        if C != -A:
            return SmallTypeSolution(nk, (), True, False, "constant term obstruction")
        return SmallTypeSolution(nk, ((-B / A,),), True, False)
    if nk == (0, 2):
        if not A or not C:
            return SmallTypeSolution(nk, (), True, True, "outer coefficient zero")
        zero = RingElem(0)
        pts = [(zero, zero)]
        solved = (-B / A, B / C)
        if any(solved):
            pts.insert(0, solved)
        note = "includes the identity-period point (0, 0)"
        return SmallTypeSolution(nk, tuple(pts), True, False, note)
    if nk == (1, 1):
        if not A:
            return SmallTypeSolution(nk, (), True, False, "leading coefficient obstruction")
        a1_sq = (B * B - 4 * A * C) / (A * A) - 4
        beta = B / A
        if not a1_sq:
            pt = (-beta / 2, RingElem(0))
            return SmallTypeSolution(nk, (pt,), True, False, "double point")
        s = sqrt_in_ring(a1_sq, _ambient_of(A, B, C))
        if s is not None:
            pts = []
            for a1 in (s, -s):
                pts.append(((a1 - beta) / 2, a1))
            return SmallTypeSolution(nk, tuple(pts), True, False)
        pts = []
        for branch in (1, -1):
            a1 = ExtElem(RingElem(0), RingElem(1), a1_sq, branch)
            pts.append(((a1 - beta) / 2, a1))
        return SmallTypeSolution(nk, tuple(pts), False, False)
    raise ValueError(f"no closed form for type {nk}")


def _ambient_of(*elems) -> Optional[int]:
    for e in elems:
        if isinstance(e, RingElem) and e.d is not None:
            return e.d
    return None


# ---------------------------------------------------------------------------
# type (0,3): parametrization, plane model, lift
# ---------------------------------------------------------------------------


def param03(T: TargetRoots, R, S, t) -> Tuple[RingElem, RingElem, RingElem]:
    """Rational parametrization of the type ``(0,3)`` family.

    Requires a decomposition ``B^2 - 4AC = R^2 + S^2`` with the sum nonzero,
    and ``C != -A``.  The parameter ``t`` runs over the base field together
    with ``INF``; parameter values where a denominator vanishes are rejected.
    """
    A, B, C = T.A, T.B, T.C
    R = RingElem._wrap(R)
    S = RingElem._wrap(S)
    ss = R * R + S * S
    if ss != B * B - 4 * A * C:
        raise ValueError("R^2 + S^2 must equal B^2 - 4AC")
    if not ss:
        raise ValueError("R^2 + S^2 must be nonzero")
    if C == -A:
        raise ValueError("constant term must differ from -A")
    if t is INF:
        den = B - R
        if not den or not S:
            raise ValueError("parameter at infinity hits a vanishing denominator")
        a1 = (-2 * C + S) / den
        a2 = den / (-S)
        a3 = (2 * A + S) / den
        return (a1, a2, a3)
    t = RingElem._wrap(t)
    p = t * t + 1
    q = t * t - 1
    den1 = B * p - R * q + 2 * S * t
    den2 = -(S * q) - 2 * R * t
    if not den1 or not den2:
        raise ValueError(f"parameter t={t} hits a vanishing denominator")
    a1 = (-2 * C * p + S * q + 2 * R * t) / den1
    a2 = den1 / den2
    a3 = (2 * A * p + S * q + 2 * R * t) / den1
    return (a1, a2, a3)


def param03_sqrt2(t) -> Tuple[RingElem, RingElem, RingElem]:
    """Specialization with roots ``+-sqrt(2)``, labeled so that ``t = 1, 2``
    give ``+-(3, -1, 2)`` and ``t = 0, INF`` give ``+-(1, 1, 0)``."""
    T = TargetRoots(1, 0, -2)
    if t is INF:
        return param03(T, 2, -2, INF)
    return param03(T, 2, -2, RingElem._wrap(t) - 1)


def plane03_residual(T: TargetRoots, x2, x3) -> RingElem:
    """Defect of the plane model the two trailing coordinates must satisfy.

    Eliminating the first coordinate from the type ``(0,3)`` system leaves
    ``A (x2^2 + 1) - B x2 (x2 x3 + 1) + C (x2 x3 + 1)^2 = 0``.
    """
    x2 = RingElem._wrap(x2)
    x3 = RingElem._wrap(x3)
    m = x2 * x3 + 1
    return T.A * (x2 * x2 + 1) - T.B * x2 * m + T.C * m * m


def lift03(T: TargetRoots, x2, x3) -> RingElem:
    """Recover the first coordinate from a plane-model point.

    Inverts ``-A (x1 x2 + 1) = C (x2 x3 + 1)``; fails when ``x2 = 0``.
    """
    x2 = RingElem._wrap(x2)
    x3 = RingElem._wrap(x3)
    if not x2:
        raise ZeroDivisionError("no lift over x2 = 0")
    if not T.A:
        raise ValueError("lift needs a nonzero leading coefficient")
    return (-(T.C / T.A) * (x2 * x3 + 1) - 1) / x2


# ---------------------------------------------------------------------------
# type (2,1): residuals and the square-defect quartic
# ---------------------------------------------------------------------------


def curve21_residual(T: TargetRoots, pt: Sequence) -> Tuple[RingElem, RingElem, RingElem]:
    """Membership defects of a coordinate triple ``(y1, y2, x1)`` at type ``(2,1)``."""
    return variety_residuals(T, VarietyPoint(pt, 2, 1))


def curve21_quartic(T: TargetRoots, y1) -> RingElem:
    """Value that must be a perfect square for ``y1`` to extend to a point.

    Equals ``-4 (A y1^2 + B y1 + C)^2 + B^2 - 4AC``; a solution with first
    coordinate ``y1`` forces this to be ``(x1 (A y1^2 + B y1 + C))^2``.
    """
    y1 = RingElem._wrap(y1)
    g = T.A * y1 * y1 + T.B * y1 + T.C
    return -4 * g * g + T.B * T.B - 4 * T.A * T.C


# ---------------------------------------------------------------------------
# type (1,2): the non-split component and its Weierstrass-free reduction
# ---------------------------------------------------------------------------


def curve12_residual(T: TargetRoots, y1, x1) -> RingElem:
    """Defect of the relation cutting out the interesting ``(1,2)`` component:
    ``(A y1^2 + B y1 + C) x1 + 2 A y1 + B = 0``."""
    y1 = RingElem._wrap(y1)
    x1 = RingElem._wrap(x1)
    g = T.A * y1 * y1 + T.B * y1 + T.C
    return g * x1 + 2 * T.A * y1 + T.B


def curve12_point(T: TargetRoots, y1) -> Tuple[RingElem, RingElem, RingElem]:
    """Full coordinate triple ``(y1, x1, x2)`` over a first coordinate ``y1``."""
    y1 = RingElem._wrap(y1)
    g = T.A * y1 * y1 + T.B * y1 + T.C
    h = 2 * T.A * y1 + T.B
    if not g:
        raise ZeroDivisionError("y1 is a root of the target quadratic")
    if not T.A:
        raise ValueError("leading coefficient must be nonzero")
    return (y1, -h / g, h / T.A)


def reduce12_to_E(y1, x1) -> Tuple[RingElem, RingElem]:
    """Halved coordinates ``(a, b) = (x1 / 2, 2 y1 / x1)``.

    Sends solutions of ``y1^2 x1 + 2 y1 = pi x1`` to solutions of
    ``(a^2 b + 1) b = pi``; fails on the extraneous point with ``x1 = 0``.
    """
    y1 = RingElem._wrap(y1)
    x1 = RingElem._wrap(x1)
    if not x1:
        raise ZeroDivisionError("the point with x1 = 0 has no finite image")
    return (x1 / 2, 2 * y1 / x1)


def lift12_from_E(a, b) -> Tuple[RingElem, RingElem]:
    """Inverse of :func:`reduce12_to_E`: ``(y1, x1) = (a b, 2 a)``."""
    a = RingElem._wrap(a)
    b = RingElem._wrap(b)
    return (a * b, 2 * a)


def e_curve_residual(pi, a, b) -> RingElem:
    """Defect of ``(a^2 b + 1) b = pi``."""
    pi = RingElem._wrap(pi)
    a = RingElem._wrap(a)
    b = RingElem._wrap(b)
    return (a * a * b + 1) * b - pi


def pcf_of_e_point(a, b) -> Pcf:
    """The PCF ``[a b; 2 a, 2 a b]`` attached to a curve point with ``a != 0``."""
    a = RingElem._wrap(a)
    b = RingElem._wrap(b)
    if not a:
        raise ZeroDivisionError("the extraneous point a = 0 has no attached PCF")
    return Pcf((a * b,), (2 * a, 2 * a * b))


def _twist_unit(w: RingElem, u: RingElem, pi: RingElem) -> RingElem:
    tw = w - 1
    if conjugate(pi) / pi != tw * tw:
        raise AssertionError("conjugation twist self-check failed")
    return tw


def family_orbit(y1, x1) -> Tuple[Tuple[RingElem, RingElem], ...]:
    """Sign and twisted-conjugate orbit of a nonzero solution over Z[sqrt(2)].

    The orbit is ``{+-(y1, x1), +-((w-1)^-1 conj(y1), (w-1) conj(x1))}`` and
    always has four distinct members.
    """
    y1 = RingElem._wrap(y1)
    x1 = RingElem._wrap(x1)
    if not y1 and not x1:
        raise ValueError("the zero point has no orbit")
    w = root(2)
    u = 1 + w
    tw = _twist_unit(w, u, 2 + w)
    y2 = conjugate(y1) / tw
    x2 = conjugate(x1) * tw
    orbit = ((y1, x1), (-y1, -x1), (y2, x2), (-y2, -x2))
    if len(set(orbit)) != 4:
        raise AssertionError("orbit members are not distinct")
    return orbit


# ---------------------------------------------------------------------------
# correspondence between the (0,3) and (1,2) pictures over Z[sqrt(2)]
# ---------------------------------------------------------------------------


def corr03_12(z1, z2, z3) -> Tuple[RingElem, RingElem]:
    """Push a type ``(0,3)`` point with roots ``+-sqrt(2 + sqrt(2))``
    down to a curve point ``(a, b) = ((z2 z3 + 1)/z2^2, -(2+w) z2^2)``."""
    w = root(2)
    pi = 2 + w
    T = TargetRoots(1, 0, -pi)
    p = VarietyPoint((z1, z2, z3), 0, 3)
    if any(variety_residuals(T, p)):
        raise ValueError("the triple does not lie in the (0,3) family")
    z2 = RingElem._wrap(z2)
    z3 = RingElem._wrap(z3)
    sq = z2 * z2
    a = (z2 * z3 + 1) / sq
    b = -pi * sq
    res = e_curve_residual(pi, a, b)
    if res:
        raise AssertionError("correspondence image missed the curve")
    return (a, b)


def corr12_03(a, b) -> Tuple[Tuple[RingElem, RingElem, RingElem], ...]:
    """All four type ``(0,3)`` points over a curve point with ``norm(b) = 2``.

    Requires ``-b/(2+w)`` to be the square of a unit; the quadruplet is
    generated by the sign choices in ``(+-a, +-z2)``.
    """
    w = root(2)
    pi = 2 + w
    a = RingElem._wrap(a)
    b = RingElem._wrap(b)
    if b.norm() != 2:
        raise ValueError("inverse correspondence needs norm(b) = 2")
    s = sqrt_in_ring(-b / pi)
    if s is None or not s.is_unit():
        raise ValueError("-b/(2+w) is not a unit square")
    out = []
    for aa in (a, -a):
        for z2 in (s, -s):
            z3 = (aa * z2 * z2 - 1) / z2
            z1 = (pi * (z2 * z3 + 1) - 1) / z2
            out.append((z1, z2, z3))
    T = TargetRoots(1, 0, -pi)
    for pt in out:
        if any(variety_residuals(T, VarietyPoint(pt, 0, 3))):
            raise AssertionError("correspondence preimage missed the family")
    return tuple(out)


# ---------------------------------------------------------------------------
# cubic-curve membership checks
# ---------------------------------------------------------------------------


def curve_x3_minus_x(x, y) -> RingElem:
    """Residual of ``y^2 = x^3 - x``."""
    x = RingElem._wrap(x)
    y = RingElem._wrap(y)
    return y * y - (x * x * x - x)


def curve_x_x2_xm1(x, y) -> RingElem:
    """Residual of ``y^2 = x (x + 2) (x - 1)``."""
    x = RingElem._wrap(x)
    y = RingElem._wrap(y)
    return y * y - x * (x + 2) * (x - 1)


def curve_x3_minus_4x(x, y) -> RingElem:
    """Residual of ``y^2 = x^3 - 4x``."""
    x = RingElem._wrap(x)
    y = RingElem._wrap(y)
    return y * y - (x * x * x - 4 * x)


def verify_curve_points(curve: Callable, pts: Sequence) -> List[RingElem]:
    """Residual of each ``(x, y)`` pair under ``curve``; all zero on good lists."""
    return [curve(x, y) for (x, y) in pts]


def _zw_points(pairs):
    w = root(2)
    out = []
    for (xa, xb), (ya, yb) in pairs:
        out.append((RingElem(xa) + xb * w, RingElem(ya) + yb * w))
    return tuple(out)


# the seven finite points with coordinates in Z[sqrt(2)] on y^2 = x^3 - x
POINTS_X3_MINUS_X = _zw_points(
    [
        ((0, 0), (0, 0)),
        ((1, 0), (0, 0)),
        ((-1, 0), (0, 0)),
        ((1, -1), (2, -1)),
        ((1, -1), (-2, 1)),
        ((1, 1), (2, 1)),
        ((1, 1), (-2, -1)),
    ]
)

# twenty-three points with coordinates in Z[sqrt(2)] on y^2 = x(x+2)(x-1)
POINTS_X_X2_XM1 = _zw_points(
    [
        ((0, 0), (0, 0)),
        ((-2, 0), (0, 0)),
        ((1, 0), (0, 0)),
        ((-1, 0), (0, 1)),
        ((-1, 0), (0, -1)),
        ((2, 0), (0, 2)),
        ((2, 0), (0, -2)),
        ((4, 0), (0, 6)),
        ((4, 0), (0, -6)),
        ((0, 1), (0, 1)),
        ((0, 1), (0, -1)),
        ((0, -1), (0, 1)),
        ((0, -1), (0, -1)),
        ((4, -3), (-12, 9)),
        ((4, -3), (12, -9)),
        ((4, 3), (12, 9)),
        ((4, 3), (-12, -9)),
        ((24, 17), (168, 119)),
        ((24, 17), (-168, -119)),
        ((24, -17), (-168, 119)),
        ((24, -17), (168, -119)),
        ((25, 0), (0, 90)),
        ((25, 0), (0, -90)),
    ]
)

# nine points with coordinates in Z[sqrt(2)] on y^2 = x^3 - 4x
POINTS_X3_MINUS_4X = _zw_points(
    [
        ((0, 0), (0, 0)),
        ((2, 0), (0, 0)),
        ((-2, 0), (0, 0)),
        ((2, -2), (-4, 4)),
        ((2, -2), (4, -4)),
        ((2, 2), (4, 4)),
        ((2, 2), (-4, -4)),
    ]
)
